//! Verification outcomes.

use std::collections::BTreeMap;
use std::fmt;

/// Outcome of checking one claim at one parameter point.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Status {
    Pass,
    Fail,
    /// The claim's hypotheses do not hold at this parameter point.
    HypothesisNotSatisfied,
    /// The claim as printed disagrees with computation, and the disagreement
    /// is known and recorded together with a derived form that is checked
    /// separately.
    DiscrepancyDocumented,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::HypothesisNotSatisfied => "hypothesis-not-satisfied",
            Status::DiscrepancyDocumented => "discrepancy-documented",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A located mismatch, with both sides as exact decimal strings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub location: String,
    pub expected: String,
    pub actual: String,
}

impl Witness {
    pub fn new(location: impl Into<String>, expected: impl fmt::Display, actual: impl fmt::Display) -> Self {
        Witness { location: location.into(), expected: expected.to_string(), actual: actual.to_string() }
    }
}

/// Witness lists are capped; `checks` keeps counting past the cap.
pub const MAX_WITNESSES: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub claim_id: String,
    pub params: BTreeMap<String, String>,
    pub status: Status,
    pub witnesses: Vec<Witness>,
    /// Number of individual equalities evaluated.
    pub checks: u64,
}

impl Report {
    /// A passing report with no checks yet.
    pub fn new(claim_id: impl Into<String>) -> Self {
        Report {
            claim_id: claim_id.into(),
            params: BTreeMap::new(),
            status: Status::Pass,
            witnesses: Vec::new(),
            checks: 0,
        }
    }

    pub fn param(mut self, key: &str, value: impl fmt::Display) -> Self {
        self.params.insert(key.to_string(), value.to_string());
        self
    }

    pub fn with_params(mut self, params: &BTreeMap<String, String>) -> Self {
        self.params.extend(params.iter().map(|(k, v)| (k.clone(), v.clone())));
        self
    }

    /// Records one equality check; a mismatch turns the report into a failure.
    pub fn check<T: PartialEq + fmt::Display>(&mut self, location: impl FnOnce() -> String, expected: &T, actual: &T) -> bool {
        self.checks += 1;
        if expected == actual {
            return true;
        }
        self.push_witness(Witness::new(location(), expected, actual));
        false
    }

    /// Adds a witness and marks the report failed unless it already carries
    /// a non-pass status.
    pub fn push_witness(&mut self, w: Witness) {
        if self.status == Status::Pass {
            self.status = Status::Fail;
        }
        if self.witnesses.len() < MAX_WITNESSES {
            self.witnesses.push(w);
        }
    }

    /// Marks the claim as not applicable, recording why.
    pub fn hypothesis_not_satisfied(mut self, why: Witness) -> Self {
        self.status = Status::HypothesisNotSatisfied;
        self.witnesses = vec![why];
        self
    }

    /// Reclassifies a failure as a documented discrepancy.
    pub fn documented(mut self) -> Self {
        if self.status == Status::Fail {
            self.status = Status::DiscrepancyDocumented;
        }
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn failed(&self) -> bool {
        self.status == Status::Fail
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let params: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        write!(f, "{:<24} {:<23} {} ({} checks)", self.status.as_str(), self.claim_id, params.join(" "), self.checks)?;
        for w in &self.witnesses {
            write!(f, "\n    at {}: expected {}, actual {}", w.location, w.expected, w.actual)?;
        }
        Ok(())
    }
}

/// Every claim identifier the verifiers can emit.
pub const CLAIM_IDS: &[&str] = &[
    "seq.cassini",
    "seq.lucas",
    "thm2.1",
    "thm2.1.coeff",
    "thm2.1.coeff.proof-form",
    "bc2",
    "tableau",
    "ex3.3",
    "thm3.2",
    "thm3.2.recurrence",
    "thm3.2.unique",
    "cor3.4.1",
    "cor3.4.2",
    "cor3.4.3",
    "cor3.4.4",
    "rem3.5",
    "eq11.row1",
    "eq11.col1",
    "prop3.6.row2",
    "prop3.6.col2",
    "prop3.6.col2.printed",
    "rem3.7",
    "thm4.1",
    "thm4.1.division",
    "thm4.2",
    "thm5.1.i",
    "thm5.1.ii",
    "thm5.1.iii",
    "thm5.1.iv",
    "thm5.1.v",
    "thm5.1.v.derived",
    "thm5.2.i",
    "thm5.2.ii",
    "lem5.3",
    "thm5.4",
    "order5",
    "conj6",
];
