//! Rigs with derivations and four concrete models of them: Brzozowski
//! derivatives on regular languages, combinatorial species, polynomial and
//! differential-polynomial rigs, and boundary operators on finite
//! co-Heyting lattices. Each model is paired with a brute-force oracle.

pub mod lang;
pub mod lattice;
pub mod poly;
pub mod registry;
pub mod report;
pub mod rig;
pub mod species;

pub use report::{LawReport, LawStatus};
pub use rig::{Derivation, Dimension, Rig};
