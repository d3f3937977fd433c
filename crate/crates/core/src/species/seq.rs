use num_bigint::BigUint;
use num_traits::Zero;

use super::{CardSeq, SpeciesError, SpeciesExpr};

/// Pascal's triangle up to row `n`.
struct Pascal(Vec<Vec<BigUint>>);

impl Pascal {
    fn new(n: usize) -> Self {
        let mut rows: Vec<Vec<BigUint>> = vec![vec![BigUint::from(1u8)]];
        for i in 1..=n {
            let prev = &rows[i - 1];
            let mut row = vec![BigUint::from(1u8); i + 1];
            for k in 1..i {
                row[k] = &prev[k - 1] + &prev[k];
            }
            rows.push(row);
        }
        Pascal(rows)
    }

    fn get(&self, n: usize, k: usize) -> &BigUint {
        &self.0[n][k]
    }
}

pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::ZERO;
    }
    Pascal::new(n).get(n, k).clone()
}

/// Cardinality sequence `c_0..=c_N` of a species expression, exactly.
///
/// A derivative evaluates its operand one step further so the shifted
/// sequence is genuine up to `N`.
pub fn seq_of(expr: &SpeciesExpr, n: usize) -> Result<CardSeq, SpeciesError> {
    let pascal = Pascal::new(n + expr.depth() + 1);
    eval(expr, n, &pascal).map(CardSeq::new)
}

fn eval(expr: &SpeciesExpr, n: usize, pascal: &Pascal) -> Result<Vec<BigUint>, SpeciesError> {
    let one = BigUint::from(1u8);
    let mut out = vec![BigUint::ZERO; n + 1];
    match expr {
        SpeciesExpr::Zero => {}
        SpeciesExpr::One => out[0] = one,
        SpeciesExpr::X => {
            if n >= 1 {
                out[1] = one;
            }
        }
        SpeciesExpr::E => out.fill(one),
        SpeciesExpr::Sum(f, g) => {
            let (fs, gs) = (eval(f, n, pascal)?, eval(g, n, pascal)?);
            for (o, (a, b)) in out.iter_mut().zip(fs.iter().zip(&gs)) {
                *o = a + b;
            }
        }
        SpeciesExpr::Prod(f, g) => {
            let (fs, gs) = (eval(f, n, pascal)?, eval(g, n, pascal)?);
            for (m, o) in out.iter_mut().enumerate() {
                for k in 0..=m {
                    *o += pascal.get(m, k) * &fs[k] * &gs[m - k];
                }
            }
        }
        SpeciesExpr::Comp(f, g) => {
            let gs = eval(g, n, pascal)?;
            if !gs[0].is_zero() {
                return Err(SpeciesError::CompositionUndefined(gs[0].clone()));
            }
            let fs = eval(f, n, pascal)?;
            // blocks[k][m]: sum over partitions of an m-set into k blocks of
            // the product of g over the blocks. The block holding a fixed
            // element has size j, chosen in C(m-1, j-1) ways.
            let mut blocks = vec![vec![BigUint::ZERO; n + 1]; n + 1];
            blocks[0][0] = one;
            for k in 1..=n {
                for m in k..=n {
                    let mut acc = BigUint::ZERO;
                    for j in 1..=m - k + 1 {
                        if gs[j].is_zero() || blocks[k - 1][m - j].is_zero() {
                            continue;
                        }
                        acc += pascal.get(m - 1, j - 1) * &gs[j] * &blocks[k - 1][m - j];
                    }
                    blocks[k][m] = acc;
                }
            }
            for (m, o) in out.iter_mut().enumerate() {
                for k in 0..=m {
                    *o += &fs[k] * &blocks[k][m];
                }
            }
        }
        SpeciesExpr::Deriv(f) => {
            let fs = eval(f, n + 1, pascal)?;
            out.clone_from_slice(&fs[1..]);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use SpeciesExpr::*;

    fn seq(e: &SpeciesExpr, n: usize) -> String {
        seq_of(e, n).unwrap().to_string()
    }

    #[test]
    fn pinned_sequences() {
        assert_eq!(seq(&E, 4), "[1,1,1,1,1]");
        let xx = SpeciesExpr::prod(X, X);
        assert_eq!(seq(&SpeciesExpr::deriv(xx.clone()), 3), "[0,2,0,0]");
        // sets of ordered pairs: e^{t²}, c_4 = 3 matchings · 2 · 2
        assert_eq!(seq(&SpeciesExpr::comp(E, xx), 4), "[1,0,2,0,12]");
    }

    #[test]
    fn classical_sequences() {
        // sets of pointed sets: idempotent self-maps
        let idem = SpeciesExpr::comp(E, SpeciesExpr::prod(X, E));
        assert_eq!(seq(&idem, 6), "[1,1,3,10,41,196,1057]");
        // linear orders on 3 labels
        assert_eq!(seq(&SpeciesExpr::pow(&X, 3), 3), "[0,0,0,6]");
        // subsets
        assert_eq!(seq(&SpeciesExpr::prod(E, E), 4), "[1,2,4,8,16]");
    }

    #[test]
    fn composition_needs_empty_free_inner() {
        assert_eq!(
            seq_of(&SpeciesExpr::comp(X, E), 3),
            Err(SpeciesError::CompositionUndefined(BigUint::from(1u8)))
        );
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), BigUint::from(10u8));
        assert_eq!(binomial(3, 4), BigUint::ZERO);
    }
}
