//! Rigs with derivations, decategorified.
//!
//! A [`Rig`] is a runtime description of a semiring whose equality is the
//! instance's canonical-form comparison. All built-in instances are skeletal
//! or posetal, so the coherence data attached to the categorical laws is
//! trivial and every law reduces to an equation between canonical forms.

mod analysis;
mod harness;
pub mod instances;

use std::fmt;
use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

pub use analysis::{
    derivation_unit_report, find_self_similar, is_taut_via_dimension, iterate_derivation_chain,
    napier_search, DerivationChain, SelfSimilar,
};
pub use harness::{
    check_derivation_laws, check_rig_laws, find_derivation_counterexample, find_rig_counterexample,
    DerivationLaw, RigLaw, DEFAULT_SAMPLES, EXHAUSTIVE_LIMIT,
};

/// The deterministic generator used by every sampler in the crate.
pub type SeededRng = ChaCha8Rng;

pub fn seeded_rng(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RigError {
    #[error("instance `{0}` is not enumerable (no finite carrier)")]
    NotEnumerable(String),
}

/// A rig (semiring without negatives) described at runtime.
///
/// `equiv` is the instance's canonical equality and stands in for
/// isomorphism; the harness never falls back to structural equality.
pub trait Rig {
    type Elem: Clone + fmt::Debug + Send + Sync + 'static;

    fn name(&self) -> String;

    /// Draw an element. `size` bounds magnitude or structural depth.
    fn sample(&self, rng: &mut SeededRng, size: usize) -> Self::Elem;

    fn equiv(&self, a: &Self::Elem, b: &Self::Elem) -> bool;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    fn render(&self, a: &Self::Elem) -> String;

    /// Full enumeration of the carrier, when it is finite (or a finite
    /// truncation is what the instance represents).
    fn carrier(&self) -> Option<Vec<Self::Elem>> {
        None
    }

    /// `n`-fold sum of `a`, with `0·a = zero`.
    fn scale(&self, n: usize, a: &Self::Elem) -> Self::Elem {
        (0..n).fold(self.zero(), |acc, _| self.add(&acc, a))
    }
}

type UnaryOp<E> = Arc<dyn Fn(&E) -> E + Send + Sync>;

/// An operator offered as a (possibly twisted) derivation on a rig.
pub struct Derivation<E> {
    pub name: String,
    apply: UnaryOp<E>,
    twist: Option<UnaryOp<E>>,
    /// Some operators satisfy Leibniz but are not additive; those are
    /// registered with `expected_linear = false` and their linearity is
    /// reported as not claimed.
    pub expected_linear: bool,
}

impl<E> Clone for Derivation<E> {
    fn clone(&self) -> Self {
        Derivation {
            name: self.name.clone(),
            apply: Arc::clone(&self.apply),
            twist: self.twist.clone(),
            expected_linear: self.expected_linear,
        }
    }
}

impl<E> fmt::Debug for Derivation<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Derivation")
            .field("name", &self.name)
            .field("twisted", &self.twist.is_some())
            .field("expected_linear", &self.expected_linear)
            .finish()
    }
}

impl<E: Clone + Send + Sync + 'static> Derivation<E> {
    pub fn new(name: impl Into<String>, apply: impl Fn(&E) -> E + Send + Sync + 'static) -> Self {
        Derivation {
            name: name.into(),
            apply: Arc::new(apply),
            twist: None,
            expected_linear: true,
        }
    }

    /// The derivation sending everything to `zero`.
    pub fn trivial(zero: E) -> Self {
        Derivation::new("trivial", move |_| zero.clone())
    }

    pub fn twisted(mut self, twist: impl Fn(&E) -> E + Send + Sync + 'static) -> Self {
        self.twist = Some(Arc::new(twist));
        self
    }

    pub fn leibniz_only(mut self) -> Self {
        self.expected_linear = false;
        self
    }

    pub fn apply(&self, a: &E) -> E {
        (self.apply)(a)
    }

    /// `γ(a)`; the identity when no twist is registered.
    pub fn twist(&self, a: &E) -> E {
        match &self.twist {
            Some(g) => g(a),
            None => a.clone(),
        }
    }

    pub fn is_twisted(&self) -> bool {
        self.twist.is_some()
    }
}

/// An additive map to ℕ that reflects zero.
pub struct Dimension<E> {
    pub name: String,
    dim: Arc<dyn Fn(&E) -> u64 + Send + Sync>,
}

impl<E> Dimension<E> {
    pub fn new(name: impl Into<String>, dim: impl Fn(&E) -> u64 + Send + Sync + 'static) -> Self {
        Dimension {
            name: name.into(),
            dim: Arc::new(dim),
        }
    }

    pub fn of(&self, a: &E) -> u64 {
        (self.dim)(a)
    }
}
