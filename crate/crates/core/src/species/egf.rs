//! Exponential generating series `Σ c_n tⁿ/n!` with exact rational
//! coefficients. Under this normalization the species derivative is the
//! formal `d/dt`.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{seq_of, CardSeq, SpeciesError, SpeciesExpr};
use crate::report::LawReport;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Egf {
    pub coeffs: Vec<BigRational>,
}

fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

impl Egf {
    pub fn from_seq(seq: &CardSeq) -> Self {
        Egf {
            coeffs: seq
                .coeffs
                .iter()
                .enumerate()
                .map(|(n, c)| BigRational::new(BigInt::from(c.clone()), BigInt::from(factorial(n))))
                .collect(),
        }
    }

    pub fn add(&self, other: &Egf) -> Egf {
        Egf {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// Ordinary Cauchy product, truncated to the shorter operand.
    pub fn mul(&self, other: &Egf) -> Egf {
        let n = self.coeffs.len().min(other.coeffs.len());
        Egf {
            coeffs: (0..n)
                .map(|m| {
                    (0..=m).fold(BigRational::zero(), |acc, k| {
                        acc + &self.coeffs[k] * &other.coeffs[m - k]
                    })
                })
                .collect(),
        }
    }

    /// Formal `d/dt`; loses one coefficient.
    pub fn derivative(&self) -> Egf {
        Egf {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(n, a)| a * BigRational::from_integer(BigInt::from(n)))
                .collect(),
        }
    }
}

impl fmt::Display for Egf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            let mono = match n {
                0 => String::new(),
                1 => "t".into(),
                _ => format!("t^{n}"),
            };
            match (a.is_one(), mono.is_empty()) {
                (true, true) => f.write_str("1")?,
                (true, false) => f.write_str(&mono)?,
                (false, true) => write!(f, "{a}")?,
                (false, false) => write!(f, "{a}*{mono}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(t^{})", self.coeffs.len())
    }
}

/// The generating series of `expr` up to `tⁿ`.
pub fn chi_egf(expr: &SpeciesExpr, n: usize) -> Result<Egf, SpeciesError> {
    Ok(Egf::from_seq(&seq_of(expr, n)?))
}

/// `χ` sends sums, products and derivatives of species to sums, products
/// and formal derivatives of series, coefficientwise up to `tⁿ`.
pub fn check_chi_homomorphism(
    f: &SpeciesExpr,
    g: &SpeciesExpr,
    n: usize,
) -> Result<LawReport, SpeciesError> {
    let (cf, cg) = (chi_egf(f, n)?, chi_egf(g, n)?);
    let cases = [
        (
            "sum",
            chi_egf(&SpeciesExpr::sum(f.clone(), g.clone()), n)?,
            cf.add(&cg),
        ),
        (
            "product",
            chi_egf(&SpeciesExpr::prod(f.clone(), g.clone()), n)?,
            cf.mul(&cg),
        ),
        (
            "derivative",
            chi_egf(&SpeciesExpr::deriv(f.clone()), n)?,
            chi_egf(f, n + 1)?.derivative(),
        ),
    ];
    for (op, lhs, rhs) in cases {
        if let Some(i) = (0..=n).find(|&i| lhs.coeffs[i] != rhs.coeffs[i]) {
            return Ok(LawReport::fail(
                "cardseq",
                "chi-homomorphism",
                3 * (n + 1),
                vec![
                    f.to_string(),
                    g.to_string(),
                    format!("op={op}"),
                    format!("index={i}"),
                ],
            ));
        }
    }
    Ok(LawReport::pass("cardseq", "chi-homomorphism", 3 * (n + 1)))
}
