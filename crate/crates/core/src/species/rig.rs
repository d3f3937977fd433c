use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use rand::Rng;

use super::{binomial, CardSeq};
use crate::rig::{Derivation, Dimension, Rig, SeededRng};

/// Cardinality sequences of species with finitely many structures, i.e.
/// `c_n = 0` past the stored coefficients. Products are full binomial
/// convolutions, so the left shift is an exact derivation.
///
/// Equality ignores trailing zeros.
#[derive(Clone, Debug)]
pub struct CardSeqRig {
    pub max_len: usize,
    pub max_coeff: u64,
    enumerable: bool,
}

impl Default for CardSeqRig {
    fn default() -> Self {
        CardSeqRig {
            max_len: 5,
            max_coeff: 4,
            enumerable: false,
        }
    }
}

impl CardSeqRig {
    /// A rig whose carrier is every sequence with at most `max_len`
    /// coefficients, each at most `max_coeff`.
    pub fn bounded(max_len: usize, max_coeff: u64) -> Self {
        CardSeqRig {
            max_len,
            max_coeff,
            enumerable: true,
        }
    }

    pub fn shift() -> Derivation<CardSeq> {
        Derivation::new("shift", |a: &CardSeq| {
            if a.coeffs.len() <= 1 {
                CardSeq::zeros(0)
            } else {
                a.shift()
            }
        })
    }

    /// Sum of the coefficients.
    pub fn total_dimension() -> Dimension<CardSeq> {
        Dimension::new("coefficient-sum", |a: &CardSeq| {
            a.coeffs
                .iter()
                .map(|c| c.to_u64().expect("dimension fits in u64"))
                .sum()
        })
    }
}

fn trimmed(a: &CardSeq) -> &[BigUint] {
    let end = a
        .coeffs
        .iter()
        .rposition(|c| !c.is_zero())
        .map_or(0, |i| i + 1);
    &a.coeffs[..end]
}

impl Rig for CardSeqRig {
    type Elem = CardSeq;

    fn name(&self) -> String {
        "cardseq".into()
    }

    fn sample(&self, rng: &mut SeededRng, size: usize) -> CardSeq {
        let len = rng.gen_range(1..=self.max_len.min(size + 1).max(1));
        CardSeq::new(
            (0..len)
                .map(|_| BigUint::from(rng.gen_range(0..=self.max_coeff)))
                .collect(),
        )
    }

    fn equiv(&self, a: &CardSeq, b: &CardSeq) -> bool {
        trimmed(a) == trimmed(b)
    }

    fn zero(&self) -> CardSeq {
        CardSeq::zeros(0)
    }

    fn one(&self) -> CardSeq {
        CardSeq::from_u64s(&[1])
    }

    fn add(&self, a: &CardSeq, b: &CardSeq) -> CardSeq {
        let n = a.coeffs.len().max(b.coeffs.len());
        let get = |s: &CardSeq, i: usize| s.coeffs.get(i).cloned().unwrap_or_default();
        CardSeq::new((0..n).map(|i| get(a, i) + get(b, i)).collect())
    }

    fn mul(&self, a: &CardSeq, b: &CardSeq) -> CardSeq {
        let n = a.coeffs.len() + b.coeffs.len() - 1;
        let mut out = vec![BigUint::ZERO; n];
        for (i, x) in a.coeffs.iter().enumerate() {
            for (j, y) in b.coeffs.iter().enumerate() {
                out[i + j] += binomial(i + j, i) * x * y;
            }
        }
        CardSeq::new(out)
    }

    fn render(&self, a: &CardSeq) -> String {
        a.to_string()
    }

    fn carrier(&self) -> Option<Vec<CardSeq>> {
        if !self.enumerable {
            return None;
        }
        let mut out = vec![CardSeq::zeros(0)];
        let mut layer: Vec<Vec<u64>> = vec![Vec::new()];
        for _ in 0..self.max_len {
            layer = layer
                .iter()
                .flat_map(|p| {
                    (0..=self.max_coeff).map(move |c| {
                        let mut v = p.clone();
                        v.push(c);
                        v
                    })
                })
                .collect();
            // keep one representative per class: no trailing zero
            out.extend(
                layer
                    .iter()
                    .filter(|v| v.last().is_some_and(|&c| c != 0))
                    .map(|v| CardSeq::from_u64s(v)),
            );
        }
        Some(out)
    }
}
