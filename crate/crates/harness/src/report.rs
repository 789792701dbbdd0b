//! Running suites and assembling reports.

use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::Value;

use crate::gen::{Bounds, Sampler};
use crate::suites::{find, Backend, Trial};
use crate::HarnessError;

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub trials: Option<u64>,
    pub seed: u64,
    pub backend: Backend,
    pub bounds: Bounds,
    pub timing: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            trials: None,
            seed: 0,
            backend: Backend::Exact,
            bounds: Bounds::default(),
            timing: true,
        }
    }
}

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct Failure {
    pub index: u64,
    pub instance: Value,
    pub residuals: BTreeMap<String, f64>,
}

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct Report {
    pub suite: String,
    pub seed: u64,
    pub trials: u64,
    pub backend: String,
    pub tol: Option<f64>,
    pub passes: u64,
    pub failures: Vec<Failure>,
    pub wall_ms: Option<u64>,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

pub fn run_suite(id: &str, config: &RunConfig) -> Result<Report, HarnessError> {
    let suite = find(id).ok_or_else(|| HarnessError::UnknownSuite(id.to_string()))?;
    let trials = config.trials.unwrap_or(suite.default_trials);
    let start = Instant::now();
    let results: Vec<Trial> = (0..trials)
        .into_par_iter()
        .map(|index| {
            let mut s = Sampler::new(config.seed, index, config.bounds);
            (suite.trial)(&mut s, index, config.backend)
        })
        .collect();
    let wall_ms = config.timing.then(|| start.elapsed().as_millis() as u64);
    let passes = results.iter().filter(|t| t.outcome.pass).count() as u64;
    let failures = results
        .into_iter()
        .filter(|t| !t.outcome.pass)
        .map(|t| Failure {
            index: t.index,
            instance: t.instance.unwrap_or(Value::Null),
            residuals: t.outcome.residuals,
        })
        .collect();
    Ok(Report {
        suite: suite.id.to_string(),
        seed: config.seed,
        trials,
        backend: config.backend.name().to_string(),
        tol: config.backend.tol(),
        passes,
        failures,
        wall_ms,
    })
}
