//! Named rig instances together with the derivations registered on them.

use std::sync::Arc;

use thiserror::Error;

use crate::lang::{Alphabet, LangRig};
use crate::lattice::{DownSetRig, Poset};
use crate::poly::PolyRig;
use crate::report::LawReport;
use crate::rig::instances::{BoolRig, BrokenRig, CardinalRig, NatRig};
use crate::rig::{
    check_derivation_laws, check_rig_laws, derivation_unit_report, find_self_similar,
    is_taut_via_dimension, Derivation, Rig,
};
use crate::species::CardSeqRig;

/// Instance names accepted by [`Instance::parse`]. `downsets` needs a poset
/// and is built with [`Instance::DownSets`] directly.
pub const INSTANCE_NAMES: &[&str] = &[
    "nat",
    "cardinal",
    "bool",
    "langwindow",
    "cardseq",
    "poly-nat",
    "broken",
];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown instance `{0}`")]
pub struct UnknownInstance(pub String);

#[derive(Clone, Debug)]
pub enum Instance {
    Nat,
    Cardinal,
    Bool,
    LangWindow {
        alphabet: Alphabet,
        max_length: usize,
    },
    CardSeq,
    PolyNat,
    DownSets(Arc<Poset>),
    Broken,
}

/// Everything `laws` reports for one instance.
#[derive(Clone, Debug)]
pub struct InstanceReport {
    pub instance: String,
    pub reports: Vec<LawReport>,
    /// Self-similarity findings; informational, not pass/fail.
    pub notes: Vec<String>,
}

impl InstanceReport {
    pub fn all_passed(&self) -> bool {
        crate::report::all_passed(&self.reports)
    }
}

impl Instance {
    pub fn parse(
        name: &str,
        alphabet: &Alphabet,
        max_length: usize,
    ) -> Result<Instance, UnknownInstance> {
        Ok(match name {
            "nat" => Instance::Nat,
            "cardinal" => Instance::Cardinal,
            "bool" => Instance::Bool,
            "langwindow" => Instance::LangWindow {
                alphabet: alphabet.clone(),
                max_length,
            },
            "cardseq" => Instance::CardSeq,
            "poly-nat" => Instance::PolyNat,
            "broken" => Instance::Broken,
            other => return Err(UnknownInstance(other.to_string())),
        })
    }

    pub fn run(&self, samples: usize, seed: u64) -> InstanceReport {
        match self {
            Instance::Nat => {
                let rig = NatRig::new();
                let mut out = suite(&rig, &[Derivation::trivial(0)], samples, seed);
                out.reports.push(is_taut_via_dimension(
                    &rig,
                    &NatRig::identity_dimension(),
                    samples,
                    seed,
                ));
                out.notes.push(self_similar_note(&NatRig::truncated(20)));
                out
            }
            Instance::Cardinal => {
                let rig = CardinalRig::default();
                with_self_similar(
                    suite(&rig, &[CardinalRig::omega_times()], samples, seed),
                    &rig,
                )
            }
            Instance::Bool => {
                let rig = BoolRig;
                with_self_similar(
                    suite(&rig, &[BoolRig::identity_derivation()], samples, seed),
                    &rig,
                )
            }
            Instance::LangWindow {
                alphabet,
                max_length,
            } => {
                let rig = LangRig::new(alphabet.clone(), *max_length);
                suite(&rig, &rig.derivations(), samples, seed)
            }
            Instance::CardSeq => {
                let rig = CardSeqRig::default();
                let mut out = suite(&rig, &[CardSeqRig::shift()], samples, seed);
                out.reports.push(is_taut_via_dimension(
                    &rig,
                    &CardSeqRig::total_dimension(),
                    samples,
                    seed,
                ));
                out.notes
                    .push(self_similar_note(&CardSeqRig::bounded(3, 2)));
                out
            }
            Instance::PolyNat => {
                let rig = PolyRig::new(NatRig::new());
                suite(&rig, &[PolyRig::<NatRig>::y_derivation()], samples, seed)
            }
            Instance::DownSets(p) => {
                let rig = DownSetRig::new(Arc::clone(p));
                with_self_similar(
                    suite(&rig, &[DownSetRig::boundary_derivation()], samples, seed),
                    &rig,
                )
            }
            Instance::Broken => suite(&BrokenRig, &[], samples, seed),
        }
    }
}

fn suite<R: Rig>(rig: &R, ds: &[Derivation<R::Elem>], samples: usize, seed: u64) -> InstanceReport {
    let mut reports = check_rig_laws(rig, samples, seed);
    for d in ds {
        reports.extend(check_derivation_laws(rig, d, samples, seed));
        reports.push(derivation_unit_report(rig, d));
    }
    InstanceReport {
        instance: rig.name(),
        reports,
        notes: Vec::new(),
    }
}

fn with_self_similar<R: Rig>(mut out: InstanceReport, rig: &R) -> InstanceReport {
    out.notes.push(self_similar_note(rig));
    out
}

fn self_similar_note<R: Rig>(rig: &R) -> String {
    match find_self_similar(rig) {
        Ok(ss) => {
            let shown: Vec<String> = ss.elements.iter().map(|e| rig.render(e)).collect();
            format!(
                "self-similar in {}: {{{}}} ({})",
                rig.name(),
                shown.join(", "),
                if ss.taut { "taut" } else { "nontaut" }
            )
        }
        Err(e) => format!("self-similar: {e}"),
    }
}
