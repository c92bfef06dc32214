//! The acceptance suite: named cases grouped by criterion, run in parallel,
//! reported as JSON.

mod cases;
mod sample;

use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::Value;

pub use sample::{random_module, relatively_projective_module};

use crate::module::IsoVerdict;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Level {
    Quick,
    Full,
}

impl std::str::FromStr for Level {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "quick" => Ok(Level::Quick),
            "full" => Ok(Level::Full),
            other => Err(format!("unknown level {other:?} (expected quick or full)")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Inconclusive,
}

/// Outcome of one suite case.
#[derive(Clone, Debug, Serialize)]
pub struct SuiteResult {
    pub id: String,
    pub criterion: u8,
    pub verdict: Verdict,
    /// Inconclusive is acceptable for this case.
    pub tolerant: bool,
    pub details: BTreeMap<String, Value>,
    /// Why the case failed (or was inconclusive).
    pub witness: Option<String>,
    pub wall_ms: f64,
}

impl SuiteResult {
    pub fn acceptable(&self) -> bool {
        self.verdict == Verdict::Pass || (self.verdict == Verdict::Inconclusive && self.tolerant)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub schema_version: u32,
    pub level: Level,
    pub seed: u64,
    pub cases: Vec<SuiteResult>,
    pub passed: usize,
    pub failed: usize,
    pub inconclusive: usize,
    pub ok: bool,
}

impl SuiteReport {
    /// JSON text; timing fields are zeroed when `timing` is false.
    pub fn to_json(&self, timing: bool) -> String {
        let mut copy = self.clone();
        if !timing {
            for c in &mut copy.cases {
                c.wall_ms = 0.0;
            }
        }
        serde_json::to_string_pretty(&copy).expect("serializable report")
    }

    /// Results grouped by criterion number.
    pub fn by_criterion(&self) -> BTreeMap<u8, Vec<&SuiteResult>> {
        let mut out: BTreeMap<u8, Vec<&SuiteResult>> = BTreeMap::new();
        for c in &self.cases {
            out.entry(c.criterion).or_default().push(c);
        }
        out
    }
}

/// Builder for the result of one case.
#[derive(Debug, Default)]
pub struct Outcome {
    details: BTreeMap<String, Value>,
    failures: Vec<String>,
    unknowns: Vec<String>,
}

impl Outcome {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn detail(&mut self, key: &str, value: impl Serialize) {
        self.details.insert(key.to_string(), serde_json::to_value(value).expect("serializable detail"));
    }

    /// Record an expectation; a false `ok` fails the case with `witness`.
    pub fn check(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        if !ok {
            self.failures.push(witness());
        }
    }

    pub fn expect_eq<T: PartialEq + std::fmt::Debug + Serialize>(&mut self, key: &str, actual: T, expected: T) {
        if actual != expected {
            self.failures.push(format!("{key}: expected {expected:?}, got {actual:?}"));
        }
        self.detail(key, actual);
    }

    /// Record an isomorphism verdict against the expected answer.
    pub fn expect_iso(&mut self, key: &str, verdict: &IsoVerdict, expected: bool) {
        let label = verdict.label();
        self.detail(key, label);
        match verdict {
            IsoVerdict::Unknown => self.unknowns.push(format!("{key}: bounded search inconclusive")),
            v if v.is_yes() != expected => {
                let why = v.reason().map(|r| format!(" ({r})")).unwrap_or_default();
                let want = if expected { "isomorphic" } else { "not isomorphic" };
                self.failures.push(format!("{key}: expected {want}, got {label}{why}"));
            }
            IsoVerdict::NotIsomorphic(reason) => {
                self.details.insert(format!("{key}_certificate"), Value::String(reason.clone()));
            }
            _ => {}
        }
    }

    pub fn error(&mut self, e: impl std::fmt::Display) {
        self.failures.push(format!("error: {e}"));
    }
}

pub(crate) struct Case {
    pub id: String,
    pub criterion: u8,
    pub tolerant: bool,
    pub run: Box<dyn Fn(u64) -> Outcome + Send + Sync>,
}

fn derive_seed(seed: u64, index: usize) -> u64 {
    seed.wrapping_mul(0x9E37_79B9_7F4A_7C15).wrapping_add(index as u64)
}

fn run_case(case: &Case, seed: u64) -> SuiteResult {
    let start = Instant::now();
    let out = (case.run)(seed);
    let wall_ms = start.elapsed().as_secs_f64() * 1e3;
    let (verdict, witness) = if !out.failures.is_empty() {
        (Verdict::Fail, Some(out.failures.join("; ")))
    } else if !out.unknowns.is_empty() {
        (Verdict::Inconclusive, Some(out.unknowns.join("; ")))
    } else {
        (Verdict::Pass, None)
    };
    SuiteResult {
        id: case.id.clone(),
        criterion: case.criterion,
        verdict,
        tolerant: case.tolerant,
        details: out.details,
        witness,
        wall_ms,
    }
}

/// Identifiers of the cases at a level, in report order.
pub fn case_ids(level: Level) -> Vec<String> {
    cases::all(level).into_iter().map(|c| c.id).collect()
}

/// Run the suite with `jobs` worker threads; results are in case order.
pub fn run_suite(level: Level, seed: u64, jobs: usize) -> SuiteReport {
    run_filtered(level, seed, jobs, |_| true)
}

/// Run only the cases whose criterion satisfies `keep`.
pub fn run_filtered(level: Level, seed: u64, jobs: usize, keep: impl Fn(u8) -> bool) -> SuiteReport {
    let all: Vec<(usize, Case)> =
        cases::all(level).into_iter().enumerate().filter(|(_, c)| keep(c.criterion)).collect();
    let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs.max(1)).build().expect("thread pool");
    let cases: Vec<SuiteResult> =
        pool.install(|| all.par_iter().map(|(i, c)| run_case(c, derive_seed(seed, *i))).collect());
    let passed = cases.iter().filter(|c| c.verdict == Verdict::Pass).count();
    let failed = cases.iter().filter(|c| c.verdict == Verdict::Fail).count();
    let inconclusive = cases.iter().filter(|c| c.verdict == Verdict::Inconclusive).count();
    let ok = cases.iter().all(SuiteResult::acceptable);
    SuiteReport { schema_version: SCHEMA_VERSION, level, seed, cases, passed, failed, inconclusive, ok }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn levels_parse() {
        assert_eq!("quick".parse::<Level>(), Ok(Level::Quick));
        assert_eq!("full".parse::<Level>(), Ok(Level::Full));
        assert!("fast".parse::<Level>().is_err());
    }

    #[test]
    fn quick_cases_are_unique_and_strict() {
        let cases = cases::all(Level::Quick);
        let mut ids: Vec<&str> = cases.iter().map(|c| c.id.as_str()).collect();
        ids.sort_unstable();
        ids.dedup();
        assert_eq!(ids.len(), cases.len());
        assert!(cases.iter().all(|c| !c.tolerant));
        assert!((1..=8).all(|k| cases.iter().any(|c| c.criterion == k)));
        assert!(case_ids(Level::Full).len() > cases.len());
    }

    #[test]
    fn outcome_verdicts() {
        let mut out = Outcome::new();
        out.expect_eq("dim", 3, 3);
        out.expect_iso("same", &IsoVerdict::Unknown, true);
        assert!(out.failures.is_empty());
        assert_eq!(out.unknowns.len(), 1);
        out.expect_iso("other", &IsoVerdict::NotIsomorphic("dims".into()), true);
        assert_eq!(out.failures.len(), 1);
        assert!(out.failures[0].contains("dims"));
    }

    #[test]
    fn report_is_deterministic_without_timing() {
        let a = run_filtered(Level::Quick, 3, 1, |c| c == 2);
        let b = run_filtered(Level::Quick, 3, 2, |c| c == 2);
        assert_eq!(a.to_json(false), b.to_json(false));
        assert!(a.ok);
    }
}
