use std::sync::Arc;

use diffrig::lang::{
    build_dfa, enumerate, parse_regex, random_regex, Alphabet, LangRig, Regex, Word,
};
use diffrig::lattice::{self, conot, downsets, oracle, random_poset, DownSetRig};
use diffrig::poly::{
    diffpoly_derive, poly_add, poly_eval, poly_mul, DiffPoly, Monomial, Poly, PolyRig,
};
use diffrig::rig::instances::{BrokenRig, CardinalRig, NatRig};
use diffrig::rig::{
    check_derivation_laws, check_rig_laws, derivation_unit_report, find_derivation_counterexample,
    find_rig_counterexample, seeded_rng, DerivationLaw, RigLaw,
};
use diffrig::species::{
    check_chi_homomorphism, check_nfold_leibniz, count_structures, parse_species,
    random_empty_free, random_species, seq_of, CardSeqRig, SpeciesExpr,
};
use diffrig::Rig;
use proptest::prelude::*;

fn ab() -> Alphabet {
    Alphabet::default()
}

fn word() -> impl Strategy<Value = Word> {
    "[ab]{0,4}".prop_map(|s| Word::from(s.as_str()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn matcher_agrees_with_enumeration(seed: u64) {
        let r = random_regex(&mut seeded_rng(seed), &ab(), 6);
        let sample = enumerate(&r, &ab(), 8).unwrap();
        for w in ab().words_up_to(8) {
            prop_assert_eq!(r.matches(&w), sample.contains(&w), "{} on {}", r, w);
        }
    }

    #[test]
    fn word_derivatives_compose(seed: u64, u in word(), v in word()) {
        let r = random_regex(&mut seeded_rng(seed), &ab(), 6);
        prop_assert_eq!(r.deriv_word(&u.concat(&v)), r.deriv_word(&u).deriv_word(&v));
    }

    #[test]
    fn regex_display_parses_back(seed: u64) {
        let r = random_regex(&mut seeded_rng(seed), &ab(), 6);
        prop_assert_eq!(parse_regex(&r.to_string(), &ab()).unwrap(), r);
    }

    #[test]
    fn dfa_agrees_with_matcher(seed: u64) {
        let r = random_regex(&mut seeded_rng(seed), &ab(), 5);
        let dfa = build_dfa(&r, &ab(), 10_000).unwrap();
        for w in ab().words_up_to(6) {
            prop_assert_eq!(dfa.accepts(&w), r.matches(&w));
        }
    }

    #[test]
    fn language_windows_are_idempotent(seed: u64) {
        let rig = LangRig::new(ab(), 6);
        let r = rig.sample(&mut seeded_rng(seed), 4);
        prop_assert!(rig.equiv(&rig.add(&r, &r), &r));
        prop_assert!(rig.equiv(&Regex::alt(r.clone(), r.clone()), &r));
    }

    #[test]
    fn species_master_oracle(seed: u64) {
        let f = random_species(&mut seeded_rng(seed), 3);
        let seq = seq_of(&f, 5).unwrap();
        for n in 0..=5 {
            prop_assert_eq!(seq.get(n), &count_structures(&f, n).unwrap(), "{} at {}", f, n);
        }
    }

    #[test]
    fn generators_respect_depth(seed: u64, depth in 0usize..5) {
        let mut rng = seeded_rng(seed);
        prop_assert!(random_species(&mut rng, depth).depth() <= depth);
        let g = random_empty_free(&mut rng, depth);
        prop_assert!(g.depth() <= depth);
        prop_assert_eq!(seq_of(&g, 0).unwrap().get(0).bits(), 0);
        prop_assert!(random_regex(&mut rng, &ab(), depth).depth() <= depth);
    }

    #[test]
    fn species_display_parses_back(seed: u64) {
        let f = random_species(&mut seeded_rng(seed), 4);
        let g = parse_species(&f.to_string()).unwrap();
        prop_assert_eq!(seq_of(&g, 8).unwrap(), seq_of(&f, 8).unwrap());
    }

    #[test]
    fn substitution_units(seed: u64) {
        let f = random_species(&mut seeded_rng(seed), 3);
        let g = random_empty_free(&mut seeded_rng(seed.wrapping_add(1)), 3);
        prop_assert_eq!(
            seq_of(&SpeciesExpr::comp(f.clone(), SpeciesExpr::X), 8).unwrap(),
            seq_of(&f, 8).unwrap()
        );
        prop_assert_eq!(
            seq_of(&SpeciesExpr::comp(SpeciesExpr::X, g.clone()), 8).unwrap(),
            seq_of(&g, 8).unwrap()
        );
    }

    #[test]
    fn chi_is_a_homomorphism(seed: u64) {
        let mut rng = seeded_rng(seed);
        let f = random_species(&mut rng, 3);
        let g = random_species(&mut rng, 3);
        prop_assert!(check_chi_homomorphism(&f, &g, 8).unwrap().passed);
    }

    #[test]
    fn poly_degree_is_additive_over_nat(seed: u64) {
        let rig = PolyRig::new(NatRig::new());
        let mut rng = seeded_rng(seed);
        let p = rig.sample(&mut rng, 4);
        let q = rig.sample(&mut rng, 4);
        let pq = poly_mul(&p, &q).unwrap();
        match (p.degree(), q.degree()) {
            (Some(a), Some(b)) => prop_assert_eq!(pq.degree(), Some(a + b)),
            _ => prop_assert_eq!(pq.degree(), None),
        }
    }

    #[test]
    fn poly_eval_is_a_homomorphism(seed: u64, e in 0u64..16) {
        let rig = PolyRig::new(NatRig::new());
        let nat = NatRig::new();
        let mut rng = seeded_rng(seed);
        let p = rig.sample(&mut rng, 4);
        let q = rig.sample(&mut rng, 4);
        let ev = |x: &Poly<NatRig>| poly_eval(x, |c: &u64| *c, &nat, &e).unwrap();
        prop_assert_eq!(ev(&poly_add(&p, &q).unwrap()), ev(&p) + ev(&q));
        prop_assert_eq!(ev(&poly_mul(&p, &q).unwrap()), ev(&p) * ev(&q));
        prop_assert_eq!(ev(&Poly::var(Arc::clone(&rig.base))), e);
        let c = *p.coeffs().first().unwrap_or(&0);
        prop_assert_eq!(ev(&Poly::constant(Arc::clone(&rig.base), c)), c);
    }

    #[test]
    fn co_heyting_laws_on_random_posets(seed: u64) {
        let p = random_poset(&mut seeded_rng(seed), 5);
        prop_assert!(oracle::check_adjointness(&p).unwrap().is_none());
        prop_assert!(oracle::check_closed_form(&p).unwrap().is_none());
        prop_assert!(lattice::check_leibniz_boundary(&p).unwrap().passed);
        let carrier = downsets(&p).unwrap();
        for x in &carrier {
            prop_assert_eq!(x.join(&conot(x)), lattice::DownSet::top(&p));
            for y in &carrier {
                if x.is_subset(y) {
                    prop_assert!(conot(y).is_subset(&conot(x)));
                }
            }
        }
    }
}

#[test]
fn counterexamples_replay_as_failures() {
    let broken = BrokenRig;
    for law in RigLaw::ALL {
        if let (_, Some(args)) = find_rig_counterexample(&broken, law, 500, 3) {
            assert!(!law.holds(&broken, &args), "{}", law.name());
        }
    }
    assert!(find_rig_counterexample(&broken, RigLaw::AddComm, 500, 3)
        .1
        .is_some());

    let rig = DownSetRig::new(Arc::new(lattice::Poset::chain(2).unwrap()));
    let d = DownSetRig::boundary_derivation();
    let (_, cex) = find_derivation_counterexample(&rig, &d, DerivationLaw::Linear, 100, 0);
    assert!(!DerivationLaw::Linear.holds(&rig, &d, &cex.unwrap()));
}

#[test]
fn passing_linear_derivations_have_self_similar_units() {
    let card = CardinalRig::default();
    let d = CardinalRig::omega_times();
    assert!(check_derivation_laws(&card, &d, 500, 0)
        .iter()
        .all(|r| r.passed));
    assert!(derivation_unit_report(&card, &d).passed);
    let seqs = CardSeqRig::bounded(3, 2);
    let d = CardSeqRig::shift();
    assert!(check_derivation_laws(&seqs, &d, 500, 0)
        .iter()
        .all(|r| r.passed));
    assert!(derivation_unit_report(&seqs, &d).passed);
    assert!(check_rig_laws(&seqs, 500, 0).iter().all(|r| r.passed));
}

#[test]
fn second_derivative_of_powers_matches_nfold_leibniz() {
    // ∂²(Yⁿ) read through a species f equals (fⁿ)'' and the n-fold
    // Leibniz expansion checked on the species side.
    let nat = Arc::new(NatRig::new());
    for n in 1..=4usize {
        let yn = DiffPoly::from_terms(Arc::clone(&nat), [(Monomial::new(vec![0; n]), 1)]);
        let d2 = diffpoly_derive(&diffpoly_derive(&yn));
        for seed in 0..10 {
            let f = random_species(&mut seeded_rng(seed), 2);
            let seq = seq_of(&f, 12).unwrap();
            let via_dp = d2.eval_at_seq(&seq, 8).unwrap();
            let direct = seq_of(&SpeciesExpr::deriv_n(SpeciesExpr::pow(&f, n), 2), 8).unwrap();
            assert_eq!(via_dp, direct, "n = {n}, f = {f}");
            if n >= 2 {
                let rest = SpeciesExpr::pow(&f, n - 1);
                assert!(check_nfold_leibniz(&f, &rest, 2, 8).unwrap().passed);
            }
        }
    }
}
