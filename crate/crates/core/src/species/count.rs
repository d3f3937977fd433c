//! Brute-force structure counting on the label set `{0..n-1}`.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::{SpeciesError, SpeciesExpr};

pub const DEFAULT_COUNT_CAP: usize = 7;

/// Number of `expr`-structures on an `n`-element label set, found by
/// enumerating subsets (products) and set partitions (compositions), and by
/// adjoining a fresh label for derivatives.
pub fn count_structures(expr: &SpeciesExpr, n: usize) -> Result<BigUint, SpeciesError> {
    if n > DEFAULT_COUNT_CAP {
        return Err(SpeciesError::CapExceeded {
            requested: n,
            cap: DEFAULT_COUNT_CAP,
        });
    }
    let labels: Vec<u32> = (0..n as u32).collect();
    Counter::default().count(expr, &labels)
}

/// Counts depend only on the number of labels, so results are cached per
/// (node, size).
#[derive(Default)]
struct Counter {
    memo: HashMap<(*const SpeciesExpr, usize), BigUint>,
}

impl Counter {
    fn count(&mut self, expr: &SpeciesExpr, labels: &[u32]) -> Result<BigUint, SpeciesError> {
        let key = (expr as *const SpeciesExpr, labels.len());
        if let Some(c) = self.memo.get(&key) {
            return Ok(c.clone());
        }
        let c = self.count_uncached(expr, labels)?;
        self.memo.insert(key, c.clone());
        Ok(c)
    }

    fn count_uncached(
        &mut self,
        expr: &SpeciesExpr,
        labels: &[u32],
    ) -> Result<BigUint, SpeciesError> {
        let n = labels.len();
        Ok(match expr {
            SpeciesExpr::Zero => BigUint::zero(),
            SpeciesExpr::One => BigUint::from(u8::from(n == 0)),
            SpeciesExpr::X => BigUint::from(u8::from(n == 1)),
            SpeciesExpr::E => BigUint::one(),
            SpeciesExpr::Sum(f, g) => self.count(f, labels)? + self.count(g, labels)?,
            SpeciesExpr::Prod(f, g) => {
                let mut total = BigUint::zero();
                for mask in 0u32..(1 << n) {
                    let (mut left, mut right) = (Vec::new(), Vec::new());
                    for (i, &l) in labels.iter().enumerate() {
                        if mask & (1 << i) != 0 {
                            left.push(l);
                        } else {
                            right.push(l);
                        }
                    }
                    total += self.count(f, &left)? * self.count(g, &right)?;
                }
                total
            }
            SpeciesExpr::Comp(f, g) => {
                let empty = self.count(g, &[])?;
                if !empty.is_zero() {
                    return Err(SpeciesError::CompositionUndefined(empty));
                }
                let mut total = BigUint::zero();
                for blocks in set_partitions(labels) {
                    let mut ways = self.count(f, &(0..blocks.len() as u32).collect::<Vec<_>>())?;
                    for b in &blocks {
                        if ways.is_zero() {
                            break;
                        }
                        ways *= self.count(g, b)?;
                    }
                    total += ways;
                }
                total
            }
            SpeciesExpr::Deriv(f) => {
                let star = labels.iter().max().map_or(0, |m| m + 1);
                let mut extended = labels.to_vec();
                extended.push(star);
                self.count(f, &extended)?
            }
        })
    }
}

/// All set partitions of `labels`, via restricted growth strings.
fn set_partitions(labels: &[u32]) -> Vec<Vec<Vec<u32>>> {
    let n = labels.len();
    let mut out = Vec::new();
    if n == 0 {
        out.push(Vec::new());
        return out;
    }
    let mut rgs = vec![0usize; n];
    loop {
        let k = rgs.iter().max().unwrap() + 1;
        let mut blocks = vec![Vec::new(); k];
        for (i, &b) in rgs.iter().enumerate() {
            blocks[b].push(labels[i]);
        }
        out.push(blocks);
        // next restricted growth string
        let mut i = n - 1;
        loop {
            if i == 0 {
                return out;
            }
            let prefix_max = rgs[..i].iter().max().copied().unwrap_or(0);
            if rgs[i] <= prefix_max {
                rgs[i] += 1;
                rgs[i + 1..].fill(0);
                break;
            }
            i -= 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use SpeciesExpr::*;

    fn c(e: &SpeciesExpr, n: usize) -> u64 {
        count_structures(e, n).unwrap().try_into().unwrap()
    }

    #[test]
    fn partition_counts_are_bell_numbers() {
        let bell: Vec<usize> = (0..=6)
            .map(|n| set_partitions(&(0..n as u32).collect::<Vec<_>>()).len())
            .collect();
        assert_eq!(bell, [1, 1, 2, 5, 15, 52, 203]);
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(c(&X, 1), 1);
        assert_eq!(c(&X, 2), 0);
        assert_eq!(c(&SpeciesExpr::prod(E, E), 3), 8);
        assert_eq!(c(&SpeciesExpr::comp(E, X), 5), 1);
        // 3 perfect matchings, each block ordered in 2 ways
        assert_eq!(c(&SpeciesExpr::comp(E, SpeciesExpr::prod(X, X)), 4), 12);
        // (X·X)' on a 1-set: the label and the star, in either order
        assert_eq!(c(&SpeciesExpr::deriv(SpeciesExpr::prod(X, X)), 1), 2);
    }

    #[test]
    fn cap_and_composition_errors() {
        assert!(matches!(
            count_structures(&E, 8),
            Err(SpeciesError::CapExceeded {
                requested: 8,
                cap: 7
            })
        ));
        assert!(matches!(
            count_structures(&SpeciesExpr::comp(X, One), 2),
            Err(SpeciesError::CompositionUndefined(_))
        ));
    }
}
