//! One test per acceptance criterion. Each prints a single PASS/FAIL line
//! straight to stderr so it shows up even when output is captured.

use std::io::Write;
use std::sync::Arc;
use std::time::{Duration, Instant};

use diffrig::lang::{
    build_dfa, check_twisted_leibniz, check_untwisted_leibniz, random_regex, Alphabet, LangRig,
    Regex, Window,
};
use diffrig::lattice::{self, downsets, oracle, random_poset, DownSet, DownSetRig, Poset};
use diffrig::poly::{dpe_check_solution, parse_diffpoly, PolyRig};
use diffrig::rig::instances::{BoolRig, BrokenRig, Card, CardinalRig, NatRig};
use diffrig::rig::{
    check_derivation_laws, check_rig_laws, derivation_unit_report, find_rig_counterexample,
    find_self_similar, iterate_derivation_chain, napier_search, seeded_rng, Derivation, RigLaw,
};
use diffrig::species::{
    check_chain_rule, check_nfold_leibniz, check_power_rule, check_tuple_rule, count_structures,
    random_empty_free, random_species, seq_of, CardSeq, CardSeqRig, SpeciesExpr,
};
use diffrig::{LawReport, Rig};
use rand::Rng;

fn verdict(criterion: &str, ok: bool, detail: String) {
    let line = format!(
        "acceptance {criterion}: {} - {detail}\n",
        if ok { "PASS" } else { "FAIL" }
    );
    let _ = std::io::stderr().write_all(line.as_bytes());
    assert!(ok, "{}", line.trim_end());
}

fn within(start: Instant, limit_secs: u64) -> (bool, String) {
    let t = start.elapsed();
    (
        t <= Duration::from_secs(limit_secs),
        format!("{:.2}s of {limit_secs}s", t.as_secs_f64()),
    )
}

fn ab() -> Alphabet {
    Alphabet::default()
}

#[test]
fn criterion_01_matcher_agrees_with_enumeration() {
    let start = Instant::now();
    let mut rng = seeded_rng(1);
    let words = ab().words_up_to(8);
    let mut disagreements = Vec::new();
    for _ in 0..500 {
        let r = random_regex(&mut rng, &ab(), 6);
        let window = Window::of(&r, &ab(), 8).unwrap();
        for w in &words {
            if r.matches(w) != window.contains(w, &ab()) {
                disagreements.push(format!("{r} on {w}"));
            }
        }
    }
    let (fast, time) = within(start, 60);
    verdict(
        "1",
        disagreements.is_empty() && fast,
        format!(
            "500 regexes x {} words, {} disagreements, {time}",
            words.len(),
            disagreements.len()
        ),
    );
}

#[test]
fn criterion_02_twisted_leibniz() {
    let start = Instant::now();
    let mut rng = seeded_rng(2);
    let mut twisted_failures = Vec::new();
    let mut untwisted_cex: Option<LawReport> = None;
    let mut untwisted_failures = 0;
    for _ in 0..200 {
        let r = random_regex(&mut rng, &ab(), 4);
        let s = random_regex(&mut rng, &ab(), 4);
        let a = ab().symbols()[rng.gen_range(0..2)];
        let t = check_twisted_leibniz(&r, &s, a, &ab(), 8);
        if !t.passed {
            twisted_failures.push(t);
        }
        let u = check_untwisted_leibniz(&r, &s, a, &ab(), 8);
        if !u.passed {
            untwisted_failures += 1;
            untwisted_cex.get_or_insert(u);
        }
    }
    let (fast, time) = within(start, 30);
    let cex = untwisted_cex
        .as_ref()
        .and_then(|r| r.counterexample.as_ref())
        .map(|c| c.join(" | "))
        .unwrap_or_else(|| "none".into());
    verdict(
        "2",
        twisted_failures.is_empty() && untwisted_failures > 0 && fast,
        format!(
            "200 triples at L=8: twisted failures {}, untwisted failures {untwisted_failures} \
             (first: {cex}), {time}",
            twisted_failures.len()
        ),
    );
}

#[test]
fn criterion_03_dfa_agrees_with_matcher() {
    let mut rng = seeded_rng(3);
    let words = ab().words_up_to(8);
    let mut problems = Vec::new();
    let mut max_states = 0;
    for _ in 0..100 {
        let r = random_regex(&mut rng, &ab(), 6);
        match build_dfa(&r, &ab(), 10_000) {
            Ok(dfa) => {
                max_states = max_states.max(dfa.num_states());
                if let Some(w) = words.iter().find(|w| dfa.accepts(w) != r.matches(w)) {
                    problems.push(format!("{r} on {w}"));
                }
            }
            Err(e) => problems.push(format!("{r}: {e}")),
        }
    }
    verdict(
        "3",
        problems.is_empty(),
        format!(
            "100 DFAs, largest {max_states} states, {} problems {:?}",
            problems.len(),
            problems.first()
        ),
    );
}

#[test]
fn criterion_04_species_master_oracle() {
    let start = Instant::now();
    let mut rng = seeded_rng(4);
    let mut mismatches = Vec::new();
    for _ in 0..200 {
        let f = random_species(&mut rng, 4);
        let seq = seq_of(&f, 7).unwrap();
        for n in 0..=7 {
            let counted = count_structures(&f, n).unwrap();
            if seq.get(n) != &counted {
                mismatches.push(format!("{f} at {n}: {} vs {counted}", seq.get(n)));
            }
        }
    }
    let xx = SpeciesExpr::prod(SpeciesExpr::X, SpeciesExpr::X);
    let d_xx = seq_of(&SpeciesExpr::deriv(xx), 3).unwrap();
    let pinned_ok = d_xx == CardSeq::from_u64s(&[0, 2, 0, 0]);
    let (fast, time) = within(start, 120);
    verdict(
        "4",
        mismatches.is_empty() && pinned_ok && fast,
        format!(
            "200 expressions, n<=7: {} mismatches {:?}; (X*X)' = {d_xx}; {time}",
            mismatches.len(),
            mismatches.first()
        ),
    );
}

#[test]
fn criterion_04_pinned_e_of_x_squared() {
    let xx = SpeciesExpr::prod(SpeciesExpr::X, SpeciesExpr::X);
    let f = SpeciesExpr::comp(SpeciesExpr::E, xx);
    let seq = seq_of(&f, 4).unwrap();
    let counted: Vec<String> = (0..=4)
        .map(|n| count_structures(&f, n).unwrap().to_string())
        .collect();
    let expected = CardSeq::from_u64s(&[1, 0, 1, 0, 3]);
    verdict(
        "4 (pinned E o X^2)",
        seq == expected,
        format!(
            "seq_of = {seq}, count_structures = [{}], pinned {expected}",
            counted.join(",")
        ),
    );
}

#[test]
fn criterion_05_chain_rule() {
    let mut rng = seeded_rng(5);
    let mut failures = Vec::new();
    for _ in 0..100 {
        let f = random_species(&mut rng, 3);
        let g = random_empty_free(&mut rng, 3);
        let r = check_chain_rule(&f, &g, 10).unwrap();
        if !r.passed {
            failures.push(r);
        }
    }
    let xx = SpeciesExpr::prod(SpeciesExpr::X, SpeciesExpr::X);
    let pinned = check_chain_rule(&SpeciesExpr::E, &xx, 10).unwrap();
    verdict(
        "5",
        failures.is_empty() && pinned.passed,
        format!(
            "100 pairs at N=10: {} failures; E o (X*X) chain rule {}",
            failures.len(),
            pinned.status.label()
        ),
    );
}

#[test]
fn criterion_06_derived_identities() {
    let mut rng = seeded_rng(6);
    let mut fails = [0usize; 3];
    for _ in 0..50 {
        let f = random_species(&mut rng, 3);
        let k = rng.gen_range(1..=5);
        if !check_power_rule(&f, k, 10).unwrap().passed {
            fails[0] += 1;
        }
        let m = rng.gen_range(1..=4);
        let fs: Vec<_> = (0..m).map(|_| random_species(&mut rng, 3)).collect();
        if !check_tuple_rule(&fs, 10).unwrap().passed {
            fails[1] += 1;
        }
        let g = random_species(&mut rng, 3);
        let n = rng.gen_range(1..=3);
        if !check_nfold_leibniz(&f, &g, n, 10).unwrap().passed {
            fails[2] += 1;
        }
    }
    verdict(
        "6",
        fails == [0, 0, 0],
        format!(
            "50 cases each at N=10: power {} / tuple {} / n-fold Leibniz {} failures",
            fails[0], fails[1], fails[2]
        ),
    );
}

fn suite<R: Rig>(rig: &R, ds: &[Derivation<R::Elem>], failed: &mut Vec<String>) -> usize {
    let mut reports = check_rig_laws(rig, 500, 7);
    for d in ds {
        reports.extend(check_derivation_laws(rig, d, 500, 7));
    }
    failed.extend(
        reports
            .iter()
            .filter(|r| !r.passed)
            .map(|r| format!("{}:{}", r.instance, r.law)),
    );
    reports.len()
}

#[test]
fn criterion_07_law_suites() {
    let mut failed = Vec::new();
    let mut checked = 0;
    checked += suite(&NatRig::new(), &[Derivation::trivial(0)], &mut failed);
    checked += suite(
        &CardinalRig::default(),
        &[CardinalRig::omega_times()],
        &mut failed,
    );
    checked += suite(&BoolRig, &[BoolRig::identity_derivation()], &mut failed);
    checked += suite(&CardSeqRig::default(), &[CardSeqRig::shift()], &mut failed);
    checked += suite(
        &PolyRig::new(NatRig::new()),
        &[PolyRig::<NatRig>::y_derivation()],
        &mut failed,
    );

    let broken = check_rig_laws(&BrokenRig, 500, 7);
    let comm = broken.iter().find(|r| r.law == "add-comm").unwrap();
    let (_, args) = find_rig_counterexample(&BrokenRig, RigLaw::AddComm, 500, 7);
    let replay_fails = args
        .as_ref()
        .is_some_and(|a| !RigLaw::AddComm.holds(&BrokenRig, a));
    verdict(
        "7",
        failed.is_empty() && !comm.passed && replay_fails,
        format!(
            "{checked} reports over nat/cardinal/bool/cardseq/poly-nat, failures {failed:?}; \
             broken add-comm counterexample {:?} replays as failure: {replay_fails}",
            comm.counterexample
        ),
    );
}

#[test]
fn criterion_08_self_similarity() {
    let mut problems = Vec::new();
    let nat = find_self_similar(&NatRig::truncated(20)).unwrap();
    if nat.elements != [0] || !nat.taut {
        problems.push(format!("nat: {:?}", nat.elements));
    }
    let seqs = CardSeqRig::bounded(3, 2);
    let ss = find_self_similar(&seqs).unwrap();
    if ss.elements.len() != 1 || !seqs.equiv(&ss.elements[0], &seqs.zero()) || !ss.taut {
        problems.push(format!("cardseq: {:?}", ss.elements));
    }
    let card = find_self_similar(&CardinalRig::default()).unwrap();
    if card.elements != [Card::Fin(0), Card::Omega] || card.taut {
        problems.push(format!("cardinal: {:?}", card.elements));
    }
    let mut rng = seeded_rng(8);
    let mut posets = vec![Arc::new(Poset::chain(2).unwrap())];
    posets.extend((0..20).map(|_| random_poset(&mut rng, 5)));
    for p in &posets {
        let rig = DownSetRig::new(Arc::clone(p));
        let ss = find_self_similar(&rig).unwrap();
        if ss.elements.len() != downsets(p).unwrap().len() {
            problems.push(format!("downsets on {} elements", p.len()));
        }
        if !derivation_unit_report(&rig, &DownSetRig::boundary_derivation()).passed {
            problems.push("boundary unit".into());
        }
    }

    let lang = LangRig::new(ab(), 6);
    let mut units = vec![
        derivation_unit_report(&NatRig::new(), &Derivation::trivial(0)),
        derivation_unit_report(&CardinalRig::default(), &CardinalRig::omega_times()),
        derivation_unit_report(&BoolRig, &BoolRig::identity_derivation()),
        derivation_unit_report(&seqs, &CardSeqRig::shift()),
        derivation_unit_report(
            &PolyRig::new(NatRig::new()),
            &PolyRig::<NatRig>::y_derivation(),
        ),
    ];
    units.extend(
        lang.derivations()
            .iter()
            .map(|d| derivation_unit_report(&lang, d)),
    );
    problems.extend(units.iter().filter(|r| !r.passed).map(|r| r.to_string()));
    verdict(
        "8",
        problems.is_empty(),
        format!(
            "nat {{0}}, cardseq {{[]}}, cardinal {{0, ω}}, {} down-set lattices full, {} unit reports; problems {problems:?}",
            posets.len(),
            units.len() + posets.len()
        ),
    );
}

#[test]
fn criterion_09_co_heyting() {
    let start = Instant::now();
    let mut rng = seeded_rng(9);
    let mut problems = Vec::new();
    for i in 0..50 {
        let p = random_poset(&mut rng, 5);
        if let Some(t) = oracle::check_adjointness(&p).unwrap() {
            problems.push(format!("poset {i}: adjointness fails at {t:?}"));
        }
        if let Some(t) = oracle::check_closed_form(&p).unwrap() {
            problems.push(format!("poset {i}: closed form differs at {t:?}"));
        }
        if !lattice::check_leibniz_boundary(&p).unwrap().passed {
            problems.push(format!("poset {i}: Leibniz fails"));
        }
    }
    let chain = Arc::new(Poset::chain(2).unwrap());
    let cex = lattice::find_linearity_counterexample(&chain).unwrap();
    let expected = (
        DownSet::from_names(&chain, "0").unwrap(),
        DownSet::top(&chain),
    );
    let (fast, time) = within(start, 30);
    verdict(
        "9",
        problems.is_empty() && cex.as_ref() == Some(&expected) && fast,
        format!(
            "50 posets, problems {problems:?}; 2-chain linearity counterexample {}; {time}",
            cex.map(|(a, b)| format!("({a}, {b})"))
                .unwrap_or_else(|| "none".into())
        ),
    );
}

#[test]
fn criterion_10_napier_and_dpe() {
    let nat = Arc::new(NatRig::new());
    let x_prime = parse_diffpoly(nat, "Y(1)", |t| t.parse().ok()).unwrap();
    let ones = CardSeq::from_u64s(&[1; 12]);
    let x = CardSeq::from_u64s(&[0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0]);
    let solves = dpe_check_solution(&x_prime, &ones, 10).unwrap().passed;
    let rejects = !dpe_check_solution(&x_prime, &x, 10).unwrap().passed;

    let card = CardinalRig::default();
    let d = CardinalRig::omega_times();
    let napier = napier_search(&card, &d).unwrap();
    let chain = iterate_derivation_chain(&card, &d, Card::Fin(1), 10);
    let chain_ok = chain.elements == [Card::Fin(1), Card::Omega] && chain.stabilized_at == Some(1);
    let napier_ok = napier == [Card::Fin(0), Card::Omega];
    let show = |cs: &[Card]| {
        cs.iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(", ")
    };
    verdict(
        "10",
        solves && rejects && napier_ok && chain_ok,
        format!(
            "ones solves X'=X: {solves}, X rejected: {rejects}, napier {{{}}}, chain [{}] stabilizes at {:?}",
            show(&napier),
            show(&chain.elements),
            chain.stabilized_at
        ),
    );
}

#[test]
fn criterion_02_canonical_untwisted_witness() {
    let r = Regex::lit('a');
    let s = Regex::lit('b');
    assert!(!check_untwisted_leibniz(&r, &s, 'b', &ab(), 8).passed);
    assert!(check_twisted_leibniz(&r, &s, 'b', &ab(), 8).passed);
}
