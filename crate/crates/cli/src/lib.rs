//! Batch verification suites over `epw-core`.
//!
//! A suite is an ordered list of named checks. Each check draws its
//! randomness from a ChaCha stream derived from the run seed and the suite,
//! so a report depends only on `(seed, prime, trials)`.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use epw_core::arith::{is_prime, Field};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

pub mod suites;

pub const DEFAULT_SEED: u64 = 0;
pub const DEFAULT_PRIME: u64 = 10007;
pub const DEFAULT_TRIALS: usize = 100;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Exterior,
    Epw,
    Incidence,
    Quadrics,
    Chow,
    Schubert,
    Bbf,
    All,
}

impl Suite {
    pub const MODULES: [Suite; 7] = [
        Suite::Exterior,
        Suite::Epw,
        Suite::Incidence,
        Suite::Quadrics,
        Suite::Chow,
        Suite::Schubert,
        Suite::Bbf,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Exterior => "exterior",
            Suite::Epw => "epw",
            Suite::Incidence => "incidence",
            Suite::Quadrics => "quadrics",
            Suite::Chow => "chow",
            Suite::Schubert => "schubert",
            Suite::Bbf => "bbf",
            Suite::All => "all",
        }
    }

    fn stream(self) -> u64 {
        Suite::MODULES.iter().position(|&s| s == self).unwrap_or(7) as u64
    }

    pub fn checks(self) -> Vec<CheckSpec> {
        match self {
            Suite::Exterior => suites::exterior::checks(),
            Suite::Epw => suites::epw::checks(),
            Suite::Incidence => suites::incidence::checks(),
            Suite::Quadrics => suites::quadrics::checks(),
            Suite::Chow => suites::chow::checks(),
            Suite::Schubert => suites::schubert::checks(),
            Suite::Bbf => suites::bbf::checks(),
            Suite::All => Suite::MODULES.iter().flat_map(|s| s.checks()).collect(),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum UsageError {
    #[error("unknown suite {0:?}; expected one of exterior, epw, incidence, quadrics, chow, schubert, bbf, all")]
    UnknownSuite(String),
    #[error("--prime must be an odd prime greater than 13, got {0}")]
    InvalidPrime(u64),
    #[error("--trials must be positive")]
    ZeroTrials,
}

impl FromStr for Suite {
    type Err = UsageError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::MODULES
            .iter()
            .chain([Suite::All].iter())
            .copied()
            .find(|x| x.name() == s)
            .ok_or_else(|| UsageError::UnknownSuite(s.to_string()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Options {
    pub seed: u64,
    pub prime: u64,
    pub trials: usize,
    pub fail_fast: bool,
    /// Record wall time in the report; off by default so reports are reproducible.
    pub timing: bool,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            seed: DEFAULT_SEED,
            prime: DEFAULT_PRIME,
            trials: DEFAULT_TRIALS,
            fail_fast: false,
            timing: false,
        }
    }
}

impl Options {
    pub fn validate(&self) -> Result<(), UsageError> {
        if self.prime <= 13 || self.prime >= 1 << 32 || !is_prime(self.prime) {
            return Err(UsageError::InvalidPrime(self.prime));
        }
        if self.trials == 0 {
            return Err(UsageError::ZeroTrials);
        }
        Ok(())
    }

    pub fn field(&self) -> Field {
        Field::Prime(self.prime)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skip => "SKIP",
        })
    }
}

/// What a check produced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub status: Status,
    pub expected: String,
    pub got: String,
    pub witness: Option<String>,
}

impl Outcome {
    /// Pass iff the two renderings agree.
    pub fn compare(expected: impl fmt::Display, got: impl fmt::Display) -> Self {
        let (expected, got) = (expected.to_string(), got.to_string());
        let status = if expected == got { Status::Pass } else { Status::Fail };
        Outcome {
            status,
            expected,
            got,
            witness: None,
        }
    }

    pub fn holds(ok: bool, expected: impl fmt::Display, got: impl fmt::Display) -> Self {
        Outcome {
            status: if ok { Status::Pass } else { Status::Fail },
            expected: expected.to_string(),
            got: got.to_string(),
            witness: None,
        }
    }

    pub fn with_witness(mut self, w: impl fmt::Display) -> Self {
        self.witness = Some(w.to_string());
        self
    }
}

pub type CheckFn = fn(&mut ChaCha8Rng, &Options) -> epw_core::Result<Outcome>;

/// A named check with the statement it exercises.
#[derive(Clone, Copy)]
pub struct CheckSpec {
    pub id: &'static str,
    pub anchor: &'static str,
    pub run: CheckFn,
}

impl CheckSpec {
    pub const fn new(id: &'static str, anchor: &'static str, run: CheckFn) -> Self {
        CheckSpec { id, anchor, run }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub id: String,
    pub anchor: String,
    pub status: Status,
    pub expected: String,
    pub got: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}: expected {}, got {}", self.status, self.id, self.expected, self.got)?;
        if let Some(w) = &self.witness {
            write!(f, " [{w}]")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub seed: u64,
    pub prime: u64,
    pub checks: Vec<CheckResult>,
    pub ms: u64,
}

impl SuiteReport {
    pub fn failed(&self) -> bool {
        self.checks.iter().any(|c| c.status == Status::Fail)
    }

    pub fn check(&self, id: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.id == id)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn exit_code(&self) -> i32 {
        i32::from(self.failed())
    }
}

fn run_check(spec: &CheckSpec, rng: &mut ChaCha8Rng, opts: &Options) -> CheckResult {
    let outcome = match (spec.run)(rng, opts) {
        Ok(o) => o,
        Err(epw_core::Error::RetryBudget(n)) => Outcome {
            status: Status::Skip,
            expected: "a sample within budget".into(),
            got: "budget exhausted".into(),
            witness: Some(format!("budget {n}")),
        },
        Err(e) => Outcome::holds(false, "no error", e),
    };
    CheckResult {
        id: spec.id.to_string(),
        anchor: spec.anchor.to_string(),
        status: outcome.status,
        expected: outcome.expected,
        got: outcome.got,
        witness: outcome.witness,
    }
}

/// Runs one module suite in declaration order; stops at the first failure
/// when `fail_fast` is set.
fn run_module(suite: Suite, opts: &Options) -> Vec<CheckResult> {
    run_specs(suite, suite.checks(), opts)
}

fn run_specs(suite: Suite, specs: Vec<CheckSpec>, opts: &Options) -> Vec<CheckResult> {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    rng.set_stream(suite.stream());
    let mut out = Vec::new();
    for spec in specs {
        let r = run_check(&spec, &mut rng, opts);
        let stop = opts.fail_fast && r.status == Status::Fail;
        out.push(r);
        if stop {
            break;
        }
    }
    out
}

pub fn run(suite: Suite, opts: &Options) -> Result<SuiteReport, UsageError> {
    opts.validate()?;
    let start = Instant::now();
    let checks = match suite {
        Suite::All if opts.fail_fast => {
            let mut out = Vec::new();
            for s in Suite::MODULES {
                let part = run_module(s, opts);
                let failed = part.iter().any(|c| c.status == Status::Fail);
                out.extend(part);
                if failed {
                    break;
                }
            }
            out
        }
        Suite::All => {
            let parts: Vec<Vec<CheckResult>> = Suite::MODULES
                .par_iter()
                .map(|&s| run_module(s, opts))
                .collect();
            parts.concat()
        }
        s => run_module(s, opts),
    };
    let ms = if opts.timing {
        start.elapsed().as_millis() as u64
    } else {
        0
    };
    Ok(SuiteReport {
        suite: suite.name().to_string(),
        seed: opts.seed,
        prime: opts.prime,
        checks,
        ms,
    })
}

/// Runs only the named checks of a module suite, in the order given.
/// Unknown ids are ignored.
pub fn run_selected(suite: Suite, ids: &[&str], opts: &Options) -> Result<SuiteReport, UsageError> {
    opts.validate()?;
    let all = suite.checks();
    let specs = ids
        .iter()
        .filter_map(|id| all.iter().find(|c| c.id == *id).copied())
        .collect();
    Ok(SuiteReport {
        suite: suite.name().to_string(),
        seed: opts.seed,
        prime: opts.prime,
        checks: run_specs(suite, specs, opts),
        ms: 0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::MODULES.iter().chain([Suite::All].iter()) {
            assert_eq!(s.name().parse::<Suite>().unwrap(), *s);
        }
        assert!(matches!("nope".parse::<Suite>(), Err(UsageError::UnknownSuite(_))));
    }

    #[test]
    fn prime_validation() {
        for p in [2, 9, 11, 13, 15, 10008] {
            let o = Options { prime: p, ..Options::default() };
            assert_eq!(o.validate(), Err(UsageError::InvalidPrime(p)));
        }
        for p in [17, 101, 10007] {
            assert!(Options { prime: p, ..Options::default() }.validate().is_ok());
        }
    }

    #[test]
    fn check_ids_unique_and_anchored() {
        let all = Suite::All.checks();
        let mut ids: Vec<&str> = all.iter().map(|c| c.id).collect();
        ids.sort_unstable();
        let n = ids.len();
        ids.dedup();
        assert_eq!(ids.len(), n);
        assert!(all.iter().all(|c| !c.anchor.is_empty()));
    }

    #[test]
    fn json_schema_fields() {
        let r = SuiteReport {
            suite: "chow".into(),
            seed: 3,
            prime: 10007,
            checks: vec![CheckResult {
                id: "x".into(),
                anchor: "y".into(),
                status: Status::Skip,
                expected: "1".into(),
                got: "2".into(),
                witness: None,
            }],
            ms: 0,
        };
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["suite"], "chow");
        assert_eq!(v["seed"], 3);
        assert_eq!(v["prime"], 10007);
        assert_eq!(v["ms"], 0);
        assert_eq!(v["checks"][0]["status"], "skip");
        assert!(v["checks"][0].get("witness").is_none());
        assert_eq!(r.exit_code(), 0);
    }
}
