//! Named verification suites and the report they produce.

mod checks;
pub mod report;

use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

pub use report::{CheckResult, Report, Status, Summary, PLUMBING};

use crate::error::{Error, Result};
use crate::hesse::PencilParam;

pub const SUITES: [&str; 8] =
    ["orbits", "hesse-identities", "flex-arrangement", "duality", "w0", "local-model", "enumerative", "transversality"];

/// λ values used when none are given.
pub fn default_lambdas() -> Vec<PencilParam> {
    vec![PencilParam::int(2), PencilParam::int(-3), PencilParam::int(3)]
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteConfig {
    pub suite: String,
    pub lambdas: Vec<PencilParam>,
    /// First shear tried by the shear-invariance checks.
    pub shear_seed: i64,
    /// Worker threads; `None` lets rayon decide.
    #[serde(skip)]
    pub jobs: Option<usize>,
}

impl SuiteConfig {
    pub fn new(suite: &str) -> SuiteConfig {
        SuiteConfig { suite: suite.into(), lambdas: default_lambdas(), shear_seed: 1, jobs: None }
    }

    /// Rejects unknown suites and singular members, drops duplicate λ.
    pub fn validate(&mut self) -> Result<()> {
        if self.suite != "all" && !SUITES.contains(&self.suite.as_str()) {
            return Err(Error::UnknownSuite(self.suite.clone()));
        }
        if let Some(bad) = self.lambdas.iter().find(|p| p.is_singular()) {
            return Err(Error::InvalidLambda(format!("{bad} gives a singular member")));
        }
        if self.lambdas.is_empty() {
            self.lambdas = default_lambdas();
        }
        let mut seen = Vec::new();
        self.lambdas.retain(|p| {
            let fresh = !seen.contains(p);
            seen.push(p.clone());
            fresh
        });
        if self.jobs == Some(0) {
            return Err(Error::Invalid("--jobs must be positive".into()));
        }
        Ok(())
    }

    fn suites(&self) -> Vec<&'static str> {
        SUITES.iter().copied().filter(|s| self.suite == "all" || self.suite == *s).collect()
    }
}

/// A unit of work producing one or more results.
pub(crate) struct Task {
    pub id: String,
    pub anchor: &'static str,
    pub run: Box<dyn Fn() -> Result<Vec<CheckResult>> + Send + Sync>,
}

impl Task {
    pub fn new(
        id: impl Into<String>,
        anchor: &'static str,
        run: impl Fn() -> Result<Vec<CheckResult>> + Send + Sync + 'static,
    ) -> Task {
        Task { id: id.into(), anchor, run: Box::new(run) }
    }
}

fn execute(tasks: Vec<Task>) -> (Vec<CheckResult>, BTreeMap<String, u128>) {
    let done: Vec<(Vec<CheckResult>, String, u128)> = tasks
        .par_iter()
        .map(|t| {
            let start = Instant::now();
            let out = match (t.run)() {
                Ok(rs) => rs,
                Err(e) => vec![CheckResult::error(t.id.clone(), t.anchor, &e)],
            };
            (out, t.id.clone(), start.elapsed().as_millis())
        })
        .collect();
    let mut results = Vec::new();
    let mut timings = BTreeMap::new();
    for (rs, id, ms) in done {
        results.extend(rs);
        timings.insert(id, ms);
    }
    results.sort_by(|a, b| a.id.cmp(&b.id));
    (results, timings)
}

/// Runs every check of the configured suite. Results are sorted by id.
pub fn run_suite(config: &SuiteConfig) -> Result<Report> {
    let mut config = config.clone();
    config.validate()?;
    let mut tasks = Vec::new();
    for s in config.suites() {
        tasks.extend(checks::tasks(s, &config));
    }
    let (results, timings) = match config.jobs {
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .map_err(|e| Error::Invalid(format!("thread pool: {e}")))?;
            pool.install(|| execute(tasks))
        }
        None => execute(tasks),
    };
    if let Some(w) = results.windows(2).find(|w| w[0].id == w[1].id) {
        return Err(Error::Invalid(format!("duplicate check id {}", w[0].id)));
    }
    let summary = Summary::of(&results);
    Ok(Report { schema: 1, config: json!(config), results, summary, timings: Some(timings) })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_suite_and_singular_lambda() {
        assert!(matches!(run_suite(&SuiteConfig::new("nope")), Err(Error::UnknownSuite(_))));
        let mut c = SuiteConfig::new("enumerative");
        c.lambdas = vec![PencilParam::parse("-1/2").unwrap()];
        assert!(matches!(run_suite(&c), Err(Error::InvalidLambda(_))));
    }

    #[test]
    fn enumerative_suite_passes() {
        let r = run_suite(&SuiteConfig::new("enumerative")).unwrap();
        assert_eq!(r.summary.fail, 0);
        let p = r.results.iter().find(|c| c.id == "plucker.18-36-72").unwrap();
        assert_eq!(p.computed, json!([28, 18]));
    }
}
