use std::fmt;

use serde::Serialize;

/// Version of the JSON report layout.
pub const REPORT_SCHEMA: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LawStatus {
    Pass,
    Fail,
    /// The operator does not claim this law. The check still ran and any
    /// counterexample it found is attached for information.
    NotClaimed,
    /// The law's hypotheses do not hold for the input, so it was not tested.
    PreconditionUnmet,
}

impl LawStatus {
    pub fn label(self) -> &'static str {
        match self {
            LawStatus::Pass => "pass",
            LawStatus::Fail => "fail",
            LawStatus::NotClaimed => "not-claimed",
            LawStatus::PreconditionUnmet => "precondition-unmet",
        }
    }
}

/// Outcome of testing one law against one instance.
///
/// A `Fail` always carries a counterexample; a `Pass` never does.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LawReport {
    pub schema: u32,
    pub instance: String,
    pub law: String,
    pub status: LawStatus,
    pub passed: bool,
    pub samples: usize,
    pub counterexample: Option<Vec<String>>,
}

impl LawReport {
    pub fn new(
        instance: impl Into<String>,
        law: impl Into<String>,
        samples: usize,
        counterexample: Option<Vec<String>>,
    ) -> Self {
        let status = if counterexample.is_some() {
            LawStatus::Fail
        } else {
            LawStatus::Pass
        };
        Self::with_status(instance, law, status, samples, counterexample)
    }

    pub fn with_status(
        instance: impl Into<String>,
        law: impl Into<String>,
        status: LawStatus,
        samples: usize,
        counterexample: Option<Vec<String>>,
    ) -> Self {
        LawReport {
            schema: REPORT_SCHEMA,
            instance: instance.into(),
            law: law.into(),
            status,
            passed: status != LawStatus::Fail,
            samples,
            counterexample,
        }
    }

    pub fn pass(instance: impl Into<String>, law: impl Into<String>, samples: usize) -> Self {
        Self::new(instance, law, samples, None)
    }

    pub fn fail(
        instance: impl Into<String>,
        law: impl Into<String>,
        samples: usize,
        counterexample: Vec<String>,
    ) -> Self {
        Self::new(instance, law, samples, Some(counterexample))
    }
}

impl fmt::Display for LawReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:<18} {:<14} {:<30} samples={}",
            self.status.label(),
            self.instance,
            self.law,
            self.samples
        )?;
        if let Some(cex) = &self.counterexample {
            write!(f, " counterexample=({})", cex.join(", "))?;
        }
        Ok(())
    }
}

/// True when no report in the slice failed.
pub fn all_passed(reports: &[LawReport]) -> bool {
    reports.iter().all(|r| r.passed)
}
