//! Combinatorial species over finite sets and bijections, decategorified to
//! their cardinality sequences `c_n = |F[n]|`.
//!
//! Product is the binomial convolution, composition the exponential
//! (set-partition) composition, and the derivative `F'[U] = F[U + {★}]`
//! becomes the left shift. [`count_structures`] is an independent brute-force
//! oracle that enumerates subsets and set partitions.

mod count;
mod egf;
mod gen;
mod laws;
mod parse;
mod rig;
mod seq;

use std::fmt;

use num_bigint::BigUint;
use thiserror::Error;

pub use count::{count_structures, DEFAULT_COUNT_CAP};
pub use egf::{check_chi_homomorphism, chi_egf, Egf};
pub use gen::{random_empty_free, random_species};
pub use laws::{check_chain_rule, check_nfold_leibniz, check_power_rule, check_tuple_rule};
pub use parse::parse_species;
pub use rig::CardSeqRig;
pub use seq::{binomial, seq_of};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpeciesError {
    #[error(
        "composition undefined at empty set: inner species has {0} structure(s) on the empty set"
    )]
    CompositionUndefined(BigUint),
    #[error("size {requested} exceeds the counting cap {cap}")]
    CapExceeded { requested: usize, cap: usize },
    #[error("parse error at position {pos}: {message}")]
    Parse { pos: usize, message: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum SpeciesExpr {
    Zero,
    One,
    /// Singletons.
    X,
    /// Sets: exactly one structure on every finite set.
    E,
    Sum(Box<SpeciesExpr>, Box<SpeciesExpr>),
    Prod(Box<SpeciesExpr>, Box<SpeciesExpr>),
    /// `Comp(f, g)` is `f ∘ g`, substituting `g` into `f`.
    Comp(Box<SpeciesExpr>, Box<SpeciesExpr>),
    Deriv(Box<SpeciesExpr>),
}

impl SpeciesExpr {
    pub fn sum(f: SpeciesExpr, g: SpeciesExpr) -> Self {
        SpeciesExpr::Sum(Box::new(f), Box::new(g))
    }

    pub fn prod(f: SpeciesExpr, g: SpeciesExpr) -> Self {
        SpeciesExpr::Prod(Box::new(f), Box::new(g))
    }

    pub fn comp(f: SpeciesExpr, g: SpeciesExpr) -> Self {
        SpeciesExpr::Comp(Box::new(f), Box::new(g))
    }

    pub fn deriv(f: SpeciesExpr) -> Self {
        SpeciesExpr::Deriv(Box::new(f))
    }

    pub fn deriv_n(f: SpeciesExpr, n: usize) -> Self {
        (0..n).fold(f, |acc, _| SpeciesExpr::deriv(acc))
    }

    /// `n`-fold sum; `0·f = 0`.
    pub fn times(n: usize, f: &SpeciesExpr) -> Self {
        (1..n).fold(
            if n == 0 { SpeciesExpr::Zero } else { f.clone() },
            |acc, _| SpeciesExpr::sum(acc, f.clone()),
        )
    }

    /// `n`-fold product; `f⁰ = 1`.
    pub fn pow(f: &SpeciesExpr, n: usize) -> Self {
        Self::product_of(&vec![f.clone(); n])
    }

    /// Left-nested product of the factors; the empty product is `1`.
    pub fn product_of(fs: &[SpeciesExpr]) -> Self {
        fs.iter()
            .cloned()
            .reduce(SpeciesExpr::prod)
            .unwrap_or(SpeciesExpr::One)
    }

    /// Left-nested sum; the empty sum is `0`.
    pub fn sum_of(fs: Vec<SpeciesExpr>) -> Self {
        fs.into_iter()
            .reduce(SpeciesExpr::sum)
            .unwrap_or(SpeciesExpr::Zero)
    }

    pub fn depth(&self) -> usize {
        match self {
            SpeciesExpr::Zero | SpeciesExpr::One | SpeciesExpr::X | SpeciesExpr::E => 0,
            SpeciesExpr::Sum(f, g) | SpeciesExpr::Prod(f, g) | SpeciesExpr::Comp(f, g) => {
                1 + f.depth().max(g.depth())
            }
            SpeciesExpr::Deriv(f) => 1 + f.depth(),
        }
    }

    fn fmt_prec(&self, f: &mut fmt::Formatter<'_>, prec: u8) -> fmt::Result {
        let own = match self {
            SpeciesExpr::Sum(..) => 0,
            SpeciesExpr::Prod(..) => 1,
            SpeciesExpr::Comp(..) => 2,
            SpeciesExpr::Deriv(..) => 3,
            _ => 4,
        };
        if own < prec {
            f.write_str("(")?;
        }
        match self {
            SpeciesExpr::Zero => f.write_str("0")?,
            SpeciesExpr::One => f.write_str("1")?,
            SpeciesExpr::X => f.write_str("X")?,
            SpeciesExpr::E => f.write_str("E")?,
            SpeciesExpr::Sum(a, b) => {
                a.fmt_prec(f, 0)?;
                f.write_str(" + ")?;
                b.fmt_prec(f, 1)?;
            }
            SpeciesExpr::Prod(a, b) => {
                a.fmt_prec(f, 1)?;
                f.write_str("*")?;
                b.fmt_prec(f, 2)?;
            }
            SpeciesExpr::Comp(a, b) => {
                a.fmt_prec(f, 2)?;
                f.write_str(" o ")?;
                b.fmt_prec(f, 3)?;
            }
            SpeciesExpr::Deriv(a) => {
                a.fmt_prec(f, 3)?;
                f.write_str("'")?;
            }
        }
        if own < prec {
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Display for SpeciesExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_prec(f, 0)
    }
}

/// Exact cardinalities `c_0..=c_N`; `N` is the truncation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CardSeq {
    pub coeffs: Vec<BigUint>,
}

impl CardSeq {
    pub fn new(coeffs: Vec<BigUint>) -> Self {
        assert!(!coeffs.is_empty(), "a CardSeq has at least c_0");
        CardSeq { coeffs }
    }

    pub fn from_u64s(cs: &[u64]) -> Self {
        CardSeq::new(cs.iter().map(|&c| BigUint::from(c)).collect())
    }

    pub fn zeros(truncation: usize) -> Self {
        CardSeq::new(vec![BigUint::ZERO; truncation + 1])
    }

    pub fn truncation(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn get(&self, n: usize) -> &BigUint {
        &self.coeffs[n]
    }

    /// The prefix `c_0..=c_n`.
    pub fn truncate(&self, n: usize) -> CardSeq {
        CardSeq::new(self.coeffs[..=n].to_vec())
    }

    /// `c_n ↦ c_{n+1}`; the truncation drops by one.
    pub fn shift(&self) -> CardSeq {
        assert!(
            self.coeffs.len() >= 2,
            "cannot shift a truncation-0 sequence"
        );
        CardSeq::new(self.coeffs[1..].to_vec())
    }
}

impl fmt::Display for CardSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("]")
    }
}

impl std::str::FromStr for CardSeq {
    type Err = String;

    /// Comma-separated naturals, optionally bracketed: `1,1,1` or `[1,1,1]`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let inner = s.trim().trim_start_matches('[').trim_end_matches(']');
        let coeffs = inner
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<BigUint>()
                    .map_err(|_| format!("not a natural number: `{}`", t.trim()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(CardSeq::new(coeffs))
    }
}
