use rand::Rng;

use super::{seeded_rng, Derivation, Rig, SeededRng};
use crate::report::{LawReport, LawStatus};

pub const DEFAULT_SAMPLES: usize = 500;

/// Laws are checked exhaustively when the carrier is known and the number
/// of argument tuples stays under this bound; otherwise they are sampled.
pub const EXHAUSTIVE_LIMIT: usize = 50_000;

const MAX_SAMPLE_SIZE: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RigLaw {
    AddAssoc,
    AddComm,
    AddUnit,
    MulAssoc,
    MulUnitLeft,
    MulUnitRight,
    DistribLeft,
    DistribRight,
    AnnihilateLeft,
    AnnihilateRight,
}

impl RigLaw {
    pub const ALL: [RigLaw; 10] = [
        RigLaw::AddAssoc,
        RigLaw::AddComm,
        RigLaw::AddUnit,
        RigLaw::MulAssoc,
        RigLaw::MulUnitLeft,
        RigLaw::MulUnitRight,
        RigLaw::DistribLeft,
        RigLaw::DistribRight,
        RigLaw::AnnihilateLeft,
        RigLaw::AnnihilateRight,
    ];

    pub fn name(self) -> &'static str {
        match self {
            RigLaw::AddAssoc => "add-assoc",
            RigLaw::AddComm => "add-comm",
            RigLaw::AddUnit => "add-unit",
            RigLaw::MulAssoc => "mul-assoc",
            RigLaw::MulUnitLeft => "mul-unit-left",
            RigLaw::MulUnitRight => "mul-unit-right",
            RigLaw::DistribLeft => "distrib-left",
            RigLaw::DistribRight => "distrib-right",
            RigLaw::AnnihilateLeft => "annihilate-left",
            RigLaw::AnnihilateRight => "annihilate-right",
        }
    }

    pub fn arity(self) -> usize {
        match self {
            RigLaw::AddAssoc | RigLaw::MulAssoc | RigLaw::DistribLeft | RigLaw::DistribRight => 3,
            RigLaw::AddComm => 2,
            _ => 1,
        }
    }

    /// Evaluate the law on `args` (length must equal `arity`).
    pub fn holds<R: Rig>(self, rig: &R, args: &[R::Elem]) -> bool {
        assert_eq!(args.len(), self.arity(), "wrong arity for {}", self.name());
        let eq = |a: &R::Elem, b: &R::Elem| rig.equiv(a, b);
        match self {
            RigLaw::AddAssoc => {
                let (a, b, c) = (&args[0], &args[1], &args[2]);
                eq(&rig.add(&rig.add(a, b), c), &rig.add(a, &rig.add(b, c)))
            }
            RigLaw::AddComm => eq(&rig.add(&args[0], &args[1]), &rig.add(&args[1], &args[0])),
            RigLaw::AddUnit => {
                let a = &args[0];
                let z = rig.zero();
                eq(&rig.add(a, &z), a) && eq(&rig.add(&z, a), a)
            }
            RigLaw::MulAssoc => {
                let (a, b, c) = (&args[0], &args[1], &args[2]);
                eq(&rig.mul(&rig.mul(a, b), c), &rig.mul(a, &rig.mul(b, c)))
            }
            RigLaw::MulUnitLeft => eq(&rig.mul(&rig.one(), &args[0]), &args[0]),
            RigLaw::MulUnitRight => eq(&rig.mul(&args[0], &rig.one()), &args[0]),
            RigLaw::DistribLeft => {
                let (a, b, c) = (&args[0], &args[1], &args[2]);
                eq(
                    &rig.mul(a, &rig.add(b, c)),
                    &rig.add(&rig.mul(a, b), &rig.mul(a, c)),
                )
            }
            RigLaw::DistribRight => {
                let (a, b, c) = (&args[0], &args[1], &args[2]);
                eq(
                    &rig.mul(&rig.add(a, b), c),
                    &rig.add(&rig.mul(a, c), &rig.mul(b, c)),
                )
            }
            RigLaw::AnnihilateLeft => eq(&rig.mul(&rig.zero(), &args[0]), &rig.zero()),
            RigLaw::AnnihilateRight => eq(&rig.mul(&args[0], &rig.zero()), &rig.zero()),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DerivationLaw {
    /// `∂0 = 0`
    Zero,
    /// `∂(a+b) = ∂a + ∂b`
    Linear,
    /// `∂(ab) = ∂a·b + γ(a)·∂b`
    Leibniz,
}

impl DerivationLaw {
    pub const ALL: [DerivationLaw; 3] = [
        DerivationLaw::Zero,
        DerivationLaw::Linear,
        DerivationLaw::Leibniz,
    ];

    pub fn name(self) -> &'static str {
        match self {
            DerivationLaw::Zero => "zero",
            DerivationLaw::Linear => "linear",
            DerivationLaw::Leibniz => "leibniz",
        }
    }

    pub fn arity(self) -> usize {
        match self {
            DerivationLaw::Zero => 0,
            DerivationLaw::Linear | DerivationLaw::Leibniz => 2,
        }
    }

    pub fn holds<R: Rig>(self, rig: &R, d: &Derivation<R::Elem>, args: &[R::Elem]) -> bool {
        assert_eq!(args.len(), self.arity(), "wrong arity for {}", self.name());
        match self {
            DerivationLaw::Zero => rig.equiv(&d.apply(&rig.zero()), &rig.zero()),
            DerivationLaw::Linear => {
                let (a, b) = (&args[0], &args[1]);
                rig.equiv(&d.apply(&rig.add(a, b)), &rig.add(&d.apply(a), &d.apply(b)))
            }
            DerivationLaw::Leibniz => {
                let (a, b) = (&args[0], &args[1]);
                let lhs = d.apply(&rig.mul(a, b));
                let rhs = rig.add(&rig.mul(&d.apply(a), b), &rig.mul(&d.twist(a), &d.apply(b)));
                rig.equiv(&lhs, &rhs)
            }
        }
    }
}

/// FNV-1a; gives every law its own deterministic sample stream.
fn stream_seed(seed: u64, tag: &str) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in tag.bytes() {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x0100_0000_01b3);
    }
    h ^ seed
}

/// The argument tuples a law of the given arity is tested on.
fn tuples<R: Rig>(
    rig: &R,
    arity: usize,
    n_samples: usize,
    seed: u64,
    tag: &str,
) -> Vec<Vec<R::Elem>> {
    if arity == 0 {
        return vec![Vec::new()];
    }
    if let Some(carrier) = rig.carrier() {
        let total = carrier
            .len()
            .checked_pow(arity as u32)
            .filter(|&t| t <= EXHAUSTIVE_LIMIT);
        if let Some(total) = total {
            let mut out = Vec::with_capacity(total);
            for mut idx in 0..total {
                let mut tuple = Vec::with_capacity(arity);
                for _ in 0..arity {
                    tuple.push(carrier[idx % carrier.len()].clone());
                    idx /= carrier.len();
                }
                out.push(tuple);
            }
            return out;
        }
    }
    let mut rng: SeededRng = seeded_rng(stream_seed(seed, tag));
    (0..n_samples)
        .map(|i| {
            (0..arity)
                .map(|_| {
                    let size = rng.gen_range(0..=MAX_SAMPLE_SIZE.min(i + 1));
                    rig.sample(&mut rng, size)
                })
                .collect()
        })
        .collect()
}

/// First argument tuple on which `law` fails, if any.
pub fn find_rig_counterexample<R: Rig>(
    rig: &R,
    law: RigLaw,
    n_samples: usize,
    seed: u64,
) -> (usize, Option<Vec<R::Elem>>) {
    let cases = tuples(rig, law.arity(), n_samples, seed, law.name());
    let n = cases.len();
    (n, cases.into_iter().find(|args| !law.holds(rig, args)))
}

pub fn find_derivation_counterexample<R: Rig>(
    rig: &R,
    d: &Derivation<R::Elem>,
    law: DerivationLaw,
    n_samples: usize,
    seed: u64,
) -> (usize, Option<Vec<R::Elem>>) {
    let tag = format!("{}/{}", d.name, law.name());
    let cases = tuples(rig, law.arity(), n_samples, seed, &tag);
    let n = cases.len();
    (n, cases.into_iter().find(|args| !law.holds(rig, d, args)))
}

fn render_all<R: Rig>(rig: &R, args: &[R::Elem]) -> Vec<String> {
    args.iter().map(|a| rig.render(a)).collect()
}

/// Test the ten rig axioms. A failing law produces a failing report, not an
/// error. Reports come back in the fixed order of [`RigLaw::ALL`].
pub fn check_rig_laws<R: Rig>(rig: &R, n_samples: usize, seed: u64) -> Vec<LawReport> {
    assert!(n_samples >= 1, "n_samples must be at least 1");
    RigLaw::ALL
        .iter()
        .map(|&law| {
            let (n, cex) = find_rig_counterexample(rig, law, n_samples, seed);
            LawReport::new(rig.name(), law.name(), n, cex.map(|c| render_all(rig, &c)))
        })
        .collect()
}

/// Test `∂0 = 0`, linearity and (twisted) Leibniz for `d` on `rig`.
///
/// When `d.expected_linear` is false the linearity check still runs, but its
/// outcome is reported as [`LawStatus::NotClaimed`].
pub fn check_derivation_laws<R: Rig>(
    rig: &R,
    d: &Derivation<R::Elem>,
    n_samples: usize,
    seed: u64,
) -> Vec<LawReport> {
    assert!(n_samples >= 1, "n_samples must be at least 1");
    DerivationLaw::ALL
        .iter()
        .map(|&law| {
            let (n, cex) = find_derivation_counterexample(rig, d, law, n_samples, seed);
            let name = format!("{}:{}", d.name, law.name());
            let cex = cex.map(|c| render_all(rig, &c));
            if law == DerivationLaw::Linear && !d.expected_linear {
                LawReport::with_status(rig.name(), name, LawStatus::NotClaimed, n, cex)
            } else {
                LawReport::new(rig.name(), name, n, cex)
            }
        })
        .collect()
}
