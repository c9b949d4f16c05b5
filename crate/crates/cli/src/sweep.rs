//! Runs grid points on a worker pool and returns reports in task order.

use std::io::IsTerminal;
use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;

use netted_core::Report;

use crate::CliError;

pub type Job = Box<dyn Fn() -> netted_core::Result<Vec<Report>> + Send + Sync>;

pub struct Task {
    pub label: String,
    pub job: Job,
}

impl Task {
    pub fn new(label: impl Into<String>, job: impl Fn() -> netted_core::Result<Vec<Report>> + Send + Sync + 'static) -> Self {
        Task { label: label.into(), job: Box::new(job) }
    }
}

pub fn run(tasks: Vec<Task>, jobs: usize) -> Result<Vec<Report>, CliError> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| CliError::Usage(format!("cannot start {jobs} workers: {e}")))?;
    let total = tasks.len();
    let done = AtomicUsize::new(0);
    let progress = std::io::stderr().is_terminal();
    let results: Vec<netted_core::Result<Vec<Report>>> = pool.install(|| {
        tasks
            .par_iter()
            .map(|t| {
                let out = (t.job)();
                let k = done.fetch_add(1, Ordering::Relaxed) + 1;
                if progress {
                    eprint!("\r[{k}/{total}] {:<40}", t.label);
                }
                out
            })
            .collect()
    });
    if progress && total > 0 {
        eprintln!();
    }
    let mut reports = Vec::new();
    for r in results {
        reports.extend(r?);
    }
    Ok(reports)
}
