//! Text and line-delimited JSON rendering.

use std::collections::BTreeSet;
use std::io::{self, Write};

use serde_json::{json, Map, Value};

use netted_core::{Report, Status};

use crate::Format;

pub struct Sink {
    out: Box<dyn Write>,
    format: Format,
}

pub fn report_json(r: &Report) -> Value {
    let params: Map<String, Value> = r.params.iter().map(|(k, v)| (k.clone(), Value::String(v.clone()))).collect();
    let witnesses: Vec<Value> = r
        .witnesses
        .iter()
        .map(|w| json!({"location": w.location, "expected": w.expected, "actual": w.actual}))
        .collect();
    json!({
        "claim_id": r.claim_id,
        "params": params,
        "status": r.status.as_str(),
        "witnesses": witnesses,
    })
}

impl Sink {
    pub fn new(out: Box<dyn Write>, format: Format) -> Self {
        Sink { out, format }
    }

    pub fn report(&mut self, r: &Report) -> io::Result<()> {
        match self.format {
            Format::Text => writeln!(self.out, "{r}"),
            Format::Json => writeln!(self.out, "{}", report_json(r)),
        }
    }

    /// A plain text line, or a JSON object, depending on the format.
    pub fn record(&mut self, text: &str, value: Value) -> io::Result<()> {
        match self.format {
            Format::Text => writeln!(self.out, "{text}"),
            Format::Json => writeln!(self.out, "{value}"),
        }
    }

    /// Writes status counts (stdout in text mode, stderr in JSON mode) and
    /// returns whether nothing failed.
    pub fn summary(&mut self, reports: &[Report]) -> io::Result<bool> {
        let count = |s: Status| reports.iter().filter(|r| r.status == s).count();
        let failed = count(Status::Fail);
        let mut lines = vec![format!(
            "summary: {} reports, {} pass, {} fail, {} hypothesis-not-satisfied, {} discrepancy-documented",
            reports.len(),
            count(Status::Pass),
            failed,
            count(Status::HypothesisNotSatisfied),
            count(Status::DiscrepancyDocumented)
        )];
        let documented: BTreeSet<&str> = reports
            .iter()
            .filter(|r| r.status == Status::DiscrepancyDocumented)
            .map(|r| r.claim_id.as_str())
            .collect();
        if !documented.is_empty() {
            let ids: Vec<&str> = documented.into_iter().collect();
            lines.push(format!("documented discrepancies: {}", ids.join(", ")));
        }
        for line in lines {
            match self.format {
                Format::Text => writeln!(self.out, "{line}")?,
                Format::Json => eprintln!("{line}"),
            }
        }
        Ok(failed == 0)
    }

    pub fn finish(&mut self) -> io::Result<()> {
        self.out.flush()
    }
}
