use super::{binomial, seq_of, CardSeq, SpeciesError, SpeciesExpr};
use crate::report::LawReport;

const INSTANCE: &str = "cardseq";

fn compare(
    law: &str,
    lhs: &SpeciesExpr,
    rhs: &SpeciesExpr,
    n: usize,
) -> Result<LawReport, SpeciesError> {
    let (l, r) = (seq_of(lhs, n)?, seq_of(rhs, n)?);
    Ok(match first_mismatch(&l, &r) {
        None => LawReport::pass(INSTANCE, law, n + 1),
        Some(i) => LawReport::fail(
            INSTANCE,
            law,
            n + 1,
            vec![
                lhs.to_string(),
                rhs.to_string(),
                format!("index={i}"),
                format!("lhs={}", l.get(i)),
                format!("rhs={}", r.get(i)),
            ],
        ),
    })
}

fn first_mismatch(a: &CardSeq, b: &CardSeq) -> Option<usize> {
    (0..a.coeffs.len()).find(|&i| a.get(i) != b.get(i))
}

/// `(f ∘ g)' = (f' ∘ g)·g'`, coefficientwise up to `n`.
pub fn check_chain_rule(
    f: &SpeciesExpr,
    g: &SpeciesExpr,
    n: usize,
) -> Result<LawReport, SpeciesError> {
    let lhs = SpeciesExpr::deriv(SpeciesExpr::comp(f.clone(), g.clone()));
    let rhs = SpeciesExpr::prod(
        SpeciesExpr::comp(SpeciesExpr::deriv(f.clone()), g.clone()),
        SpeciesExpr::deriv(g.clone()),
    );
    compare("chain-rule", &lhs, &rhs, n)
}

/// `(fᵏ)' = k·fᵏ⁻¹·f'`.
pub fn check_power_rule(f: &SpeciesExpr, k: usize, n: usize) -> Result<LawReport, SpeciesError> {
    assert!(k >= 1, "power rule needs k >= 1");
    let lhs = SpeciesExpr::deriv(SpeciesExpr::pow(f, k));
    let rhs = SpeciesExpr::times(
        k,
        &SpeciesExpr::prod(SpeciesExpr::pow(f, k - 1), SpeciesExpr::deriv(f.clone())),
    );
    compare("power-rule", &lhs, &rhs, n)
}

/// `(f₁⋯fₖ)' = Σᵢ f₁⋯fᵢ'⋯fₖ`.
pub fn check_tuple_rule(fs: &[SpeciesExpr], n: usize) -> Result<LawReport, SpeciesError> {
    assert!(!fs.is_empty(), "tuple rule needs at least one factor");
    let lhs = SpeciesExpr::deriv(SpeciesExpr::product_of(fs));
    let terms = (0..fs.len())
        .map(|i| {
            let mut factors = fs.to_vec();
            factors[i] = SpeciesExpr::deriv(factors[i].clone());
            SpeciesExpr::product_of(&factors)
        })
        .collect();
    compare("tuple-rule", &lhs, &SpeciesExpr::sum_of(terms), n)
}

/// `∂ᵏ(fg) = Σⱼ C(k,j)·∂ᵏ⁻ʲf·∂ʲg`.
pub fn check_nfold_leibniz(
    f: &SpeciesExpr,
    g: &SpeciesExpr,
    k: usize,
    n: usize,
) -> Result<LawReport, SpeciesError> {
    let lhs = SpeciesExpr::deriv_n(SpeciesExpr::prod(f.clone(), g.clone()), k);
    let terms = (0..=k)
        .map(|j| {
            let c: usize = binomial(k, j).try_into().expect("small binomial");
            SpeciesExpr::times(
                c,
                &SpeciesExpr::prod(
                    SpeciesExpr::deriv_n(f.clone(), k - j),
                    SpeciesExpr::deriv_n(g.clone(), j),
                ),
            )
        })
        .collect();
    compare("nfold-leibniz", &lhs, &SpeciesExpr::sum_of(terms), n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::species::parse_species;
    use SpeciesExpr::*;

    fn p(s: &str) -> SpeciesExpr {
        parse_species(s).unwrap()
    }

    #[test]
    fn chain_rule_examples() {
        assert!(check_chain_rule(&E, &p("X*X"), 8).unwrap().passed);
        assert!(check_chain_rule(&X, &p("X*E + X"), 8).unwrap().passed);
        assert!(matches!(
            check_chain_rule(&E, &E, 4),
            Err(SpeciesError::CompositionUndefined(_))
        ));
    }

    #[test]
    fn power_rule_examples() {
        assert!(check_power_rule(&X, 3, 6).unwrap().passed);
        assert_eq!(
            seq_of(&p("(X*X*X)'"), 3).unwrap(),
            CardSeq::from_u64s(&[0, 0, 6, 0])
        );
        assert!(check_power_rule(&p("E + X"), 1, 6).unwrap().passed);
        assert!(check_power_rule(&E, 2, 8).unwrap().passed);
    }

    #[test]
    fn tuple_and_leibniz_examples() {
        assert!(check_tuple_rule(&[X, X, E], 8).unwrap().passed);
        assert!(check_tuple_rule(&[p("E o X")], 8).unwrap().passed);
        assert!(check_nfold_leibniz(&E, &X, 0, 8).unwrap().passed);
        assert!(check_nfold_leibniz(&E, &E, 2, 8).unwrap().passed);
        // ∂²(E²) = 4·E² at sequence level
        assert_eq!(
            seq_of(&p("(E*E)''"), 5).unwrap(),
            seq_of(&p("E*E + E*E + E*E + E*E"), 5).unwrap()
        );
    }

    #[test]
    fn a_wrong_rule_is_caught() {
        // (X·X)' ≠ X'·X' (= 1)
        let r = compare("bogus", &p("(X*X)'"), &p("X'*X'"), 3).unwrap();
        assert!(!r.passed);
        assert_eq!(r.counterexample.unwrap()[2], "index=0");
    }
}
