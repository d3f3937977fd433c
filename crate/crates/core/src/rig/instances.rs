//! Small built-in rigs.

use std::fmt;
use std::ops::{Add, Mul};
use std::str::FromStr;

use rand::Rng;

use super::{Derivation, Dimension, Rig, SeededRng};

/// `(ℕ, +, ×)`. With a truncation it also exposes `{0..=k}` as a carrier
/// for exhaustive searches.
#[derive(Clone, Debug, Default)]
pub struct NatRig {
    truncation: Option<u64>,
}

impl NatRig {
    pub fn new() -> Self {
        NatRig { truncation: None }
    }

    pub fn truncated(k: u64) -> Self {
        NatRig {
            truncation: Some(k),
        }
    }

    pub fn identity_dimension() -> Dimension<u64> {
        Dimension::new("identity", |a: &u64| *a)
    }
}

impl Rig for NatRig {
    type Elem = u64;

    fn name(&self) -> String {
        "nat".into()
    }

    fn sample(&self, rng: &mut SeededRng, size: usize) -> u64 {
        let hi = match self.truncation {
            Some(k) => k,
            None => 1u64 << (2 * size.min(8)),
        };
        rng.gen_range(0..=hi)
    }

    fn equiv(&self, a: &u64, b: &u64) -> bool {
        a == b
    }

    fn zero(&self) -> u64 {
        0
    }

    fn one(&self) -> u64 {
        1
    }

    fn add(&self, a: &u64, b: &u64) -> u64 {
        a.checked_add(*b).expect("nat overflow")
    }

    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a.checked_mul(*b).expect("nat overflow")
    }

    fn render(&self, a: &u64) -> String {
        a.to_string()
    }

    fn carrier(&self) -> Option<Vec<u64>> {
        self.truncation.map(|k| (0..=k).collect())
    }
}

/// A cardinal: a natural number or the countable infinity `ω`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Card {
    Fin(u64),
    Omega,
}

impl Add for Card {
    type Output = Card;

    fn add(self, other: Card) -> Card {
        match (self, other) {
            (Card::Fin(a), Card::Fin(b)) => Card::Fin(a.checked_add(b).expect("cardinal overflow")),
            _ => Card::Omega,
        }
    }
}

impl Mul for Card {
    type Output = Card;

    fn mul(self, other: Card) -> Card {
        match (self, other) {
            (Card::Fin(0), _) | (_, Card::Fin(0)) => Card::Fin(0),
            (Card::Fin(a), Card::Fin(b)) => Card::Fin(a.checked_mul(b).expect("cardinal overflow")),
            _ => Card::Omega,
        }
    }
}

impl fmt::Display for Card {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Card::Fin(n) => write!(f, "{n}"),
            Card::Omega => f.write_str("ω"),
        }
    }
}

impl FromStr for Card {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "w" | "ω" | "omega" => Ok(Card::Omega),
            t => t
                .parse::<u64>()
                .map(Card::Fin)
                .map_err(|_| format!("not a cardinal: `{t}`")),
        }
    }
}

/// `ℕ ∪ {ω}` with saturating arithmetic, truncated to `{0..=k, ω}`.
///
/// Samples never exceed `k`; sums and products of samples are computed
/// exactly and may leave the truncation, which is harmless for equality.
#[derive(Clone, Debug)]
pub struct CardinalRig {
    pub k: u64,
}

impl Default for CardinalRig {
    fn default() -> Self {
        CardinalRig { k: 8 }
    }
}

impl CardinalRig {
    pub fn new(k: u64) -> Self {
        CardinalRig { k }
    }

    /// `a ↦ ω·a`, the decategorified `A ↦ ℕ × A`.
    pub fn omega_times() -> Derivation<Card> {
        Derivation::new("omega-times", |a: &Card| Card::Omega * *a)
    }
}

impl Rig for CardinalRig {
    type Elem = Card;

    fn name(&self) -> String {
        if self.k == 8 {
            "cardinal".into()
        } else {
            format!("cardinal(k={})", self.k)
        }
    }

    fn sample(&self, rng: &mut SeededRng, _size: usize) -> Card {
        let i = rng.gen_range(0..=self.k + 1);
        if i > self.k {
            Card::Omega
        } else {
            Card::Fin(i)
        }
    }

    fn equiv(&self, a: &Card, b: &Card) -> bool {
        a == b
    }

    fn zero(&self) -> Card {
        Card::Fin(0)
    }

    fn one(&self) -> Card {
        Card::Fin(1)
    }

    fn add(&self, a: &Card, b: &Card) -> Card {
        *a + *b
    }

    fn mul(&self, a: &Card, b: &Card) -> Card {
        *a * *b
    }

    fn render(&self, a: &Card) -> String {
        a.to_string()
    }

    fn carrier(&self) -> Option<Vec<Card>> {
        Some((0..=self.k).map(Card::Fin).chain([Card::Omega]).collect())
    }
}

/// `({0,1}, or, and)`.
#[derive(Clone, Copy, Debug, Default)]
pub struct BoolRig;

impl BoolRig {
    pub fn identity_derivation() -> Derivation<bool> {
        Derivation::new("identity", |a: &bool| *a)
    }
}

impl Rig for BoolRig {
    type Elem = bool;

    fn name(&self) -> String {
        "bool".into()
    }

    fn sample(&self, rng: &mut SeededRng, _size: usize) -> bool {
        rng.gen()
    }

    fn equiv(&self, a: &bool, b: &bool) -> bool {
        a == b
    }

    fn zero(&self) -> bool {
        false
    }

    fn one(&self) -> bool {
        true
    }

    fn add(&self, a: &bool, b: &bool) -> bool {
        *a || *b
    }

    fn mul(&self, a: &bool, b: &bool) -> bool {
        *a && *b
    }

    fn render(&self, a: &bool) -> String {
        u8::from(*a).to_string()
    }

    fn carrier(&self) -> Option<Vec<bool>> {
        Some(vec![false, true])
    }
}

/// Natural numbers whose "addition" keeps the left operand. Not a rig;
/// used to exercise failing reports.
#[derive(Clone, Copy, Debug, Default)]
pub struct BrokenRig;

impl Rig for BrokenRig {
    type Elem = u64;

    fn name(&self) -> String {
        "broken".into()
    }

    fn sample(&self, rng: &mut SeededRng, _size: usize) -> u64 {
        rng.gen_range(0..16)
    }

    fn equiv(&self, a: &u64, b: &u64) -> bool {
        a == b
    }

    fn zero(&self) -> u64 {
        0
    }

    fn one(&self) -> u64 {
        1
    }

    fn add(&self, a: &u64, _b: &u64) -> u64 {
        *a
    }

    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b
    }

    fn render(&self, a: &u64) -> String {
        a.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::LawStatus;
    use crate::rig::*;

    fn all_pass(reports: &[crate::LawReport]) -> bool {
        reports.iter().all(|r| r.status == LawStatus::Pass)
    }

    #[test]
    fn nat_laws_hold() {
        let reports = check_rig_laws(&NatRig::new(), 500, 7);
        assert_eq!(reports.len(), 10);
        assert!(all_pass(&reports), "{reports:#?}");
        assert!(reports.iter().all(|r| r.samples == 500));
    }

    #[test]
    fn cardinal_laws_hold_exhaustively() {
        let rig = CardinalRig::default();
        let reports = check_rig_laws(&rig, 500, 0);
        assert!(all_pass(&reports), "{reports:#?}");
        // 10 elements: 1000 triples for the ternary laws
        assert_eq!(reports[0].samples, 1000);
        let d = check_derivation_laws(&rig, &CardinalRig::omega_times(), 500, 0);
        assert!(all_pass(&d), "{d:#?}");
    }

    #[test]
    fn broken_add_is_caught() {
        let reports = check_rig_laws(&BrokenRig, 200, 3);
        let comm = reports.iter().find(|r| r.law == "add-comm").unwrap();
        assert!(!comm.passed);
        assert_eq!(comm.counterexample.as_ref().unwrap().len(), 2);
        let (_, cex) = find_rig_counterexample(&BrokenRig, RigLaw::AddComm, 200, 3);
        assert!(!RigLaw::AddComm.holds(&BrokenRig, &cex.unwrap()));
    }

    #[test]
    fn successor_is_not_leibniz() {
        let d = Derivation::new("succ", |a: &u64| a + 1);
        let reports = check_derivation_laws(&NatRig::new(), &d, 100, 1);
        let leib = reports.iter().find(|r| r.law == "succ:leibniz").unwrap();
        assert!(!leib.passed);
        assert!(!DerivationLaw::Leibniz.holds(&NatRig::new(), &d, &[1, 1]));
        // d(1·1) = 2 but d(1)·1 + 1·d(1) = 4
        assert_eq!(d.apply(&1), 2);
    }

    #[test]
    fn trivial_derivation_passes_everywhere() {
        assert!(all_pass(&check_derivation_laws(
            &NatRig::new(),
            &Derivation::trivial(0),
            200,
            1
        )));
        assert!(all_pass(&check_derivation_laws(
            &CardinalRig::default(),
            &Derivation::trivial(Card::Fin(0)),
            200,
            1
        )));
        assert!(all_pass(&check_derivation_laws(
            &BoolRig,
            &Derivation::trivial(false),
            200,
            1
        )));
    }

    #[test]
    fn self_similar_elements() {
        let nat = find_self_similar(&NatRig::truncated(20)).unwrap();
        assert_eq!(nat.elements, vec![0]);
        assert!(nat.taut);
        let card = find_self_similar(&CardinalRig::default()).unwrap();
        assert_eq!(card.elements, vec![Card::Fin(0), Card::Omega]);
        assert!(!card.taut);
        let b = find_self_similar(&BoolRig).unwrap();
        assert_eq!(b.elements, vec![false, true]);
        assert!(!b.taut);
        assert_eq!(
            find_self_similar(&NatRig::new()).unwrap_err(),
            RigError::NotEnumerable("nat".into())
        );
    }

    #[test]
    fn dimension_witnesses_tautness() {
        let r = is_taut_via_dimension(&NatRig::new(), &NatRig::identity_dimension(), 300, 5);
        assert!(r.passed, "{r:?}");
    }

    #[test]
    fn no_dimension_on_cardinals() {
        // Any value for dim(ω) breaks additivity (2k = k) or reflection (k = 0).
        for k in 0..6 {
            let dim = Dimension::new("candidate", move |a: &Card| match a {
                Card::Fin(n) => *n,
                Card::Omega => k,
            });
            let r = is_taut_via_dimension(&CardinalRig::default(), &dim, 100, 0);
            assert!(!r.passed, "k = {k}: {r:?}");
            assert!(r.law.ends_with("additive") || r.law.ends_with("reflects-zero"));
        }
    }

    #[test]
    fn unit_derivative_is_idempotent() {
        let rig = CardinalRig::default();
        assert!(derivation_unit_report(&rig, &CardinalRig::omega_times()).passed);
        assert!(derivation_unit_report(&rig, &Derivation::trivial(Card::Fin(0))).passed);
        let succ = Derivation::new("succ", |a: &u64| a + 1);
        assert!(!derivation_unit_report(&NatRig::new(), &succ).passed);
    }

    #[test]
    fn napier_points() {
        let card = napier_search(&CardinalRig::default(), &CardinalRig::omega_times()).unwrap();
        assert_eq!(card, vec![Card::Fin(0), Card::Omega]);
        let triv =
            napier_search(&CardinalRig::default(), &Derivation::trivial(Card::Fin(0))).unwrap();
        assert_eq!(triv, vec![Card::Fin(0)]);
        assert_eq!(
            napier_search(&BoolRig, &BoolRig::identity_derivation()).unwrap(),
            vec![false, true]
        );
    }

    #[test]
    fn derivation_chains() {
        let rig = CardinalRig::default();
        let chain = iterate_derivation_chain(&rig, &CardinalRig::omega_times(), Card::Fin(1), 10);
        assert_eq!(chain.elements, vec![Card::Fin(1), Card::Omega]);
        assert_eq!(chain.stabilized_at, Some(1));

        let triv = Derivation::trivial(0u64);
        let c = iterate_derivation_chain(&NatRig::new(), &triv, 5, 10);
        assert_eq!((c.elements, c.stabilized_at), (vec![5, 0], Some(1)));
        let c = iterate_derivation_chain(&NatRig::new(), &triv, 0, 10);
        assert_eq!((c.elements, c.stabilized_at), (vec![0], Some(0)));
    }

    #[test]
    fn cardinal_parse_roundtrip() {
        assert_eq!("w".parse::<Card>().unwrap(), Card::Omega);
        assert_eq!(
            Card::Omega.to_string().parse::<Card>().unwrap(),
            Card::Omega
        );
        assert_eq!("12".parse::<Card>().unwrap(), Card::Fin(12));
        assert!("x".parse::<Card>().is_err());
    }
}
