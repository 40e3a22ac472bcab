//! Fact catalogue and seeded randomized property suites.
//!
//! Every check yields a [`CheckResult`]; failures are data, not errors.
//! Reports serialize as one JSON object per line.

mod catalogue;
pub mod random;
mod trials;

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::Value;

use crate::complexity::DEFAULT_STATE_CAP;
use crate::error::{Error, Result};

pub use catalogue::{catalogue_ids, run_catalogue, run_catalogue_entries, BOUNDS_IDS};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// A resource limit was hit before the check could conclude.
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckResult {
    pub id: String,
    pub status: Status,
    pub detail: Value,
    pub seed: Option<u64>,
    pub elapsed_ms: f64,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

/// What a single check concluded.
pub(crate) struct Outcome {
    pub passed: bool,
    pub detail: Value,
}

impl Outcome {
    pub fn new(passed: bool, detail: Value) -> Self {
        Outcome { passed, detail }
    }
}

pub(crate) fn timed(id: String, seed: Option<u64>, check: impl FnOnce() -> Result<Outcome>) -> CheckResult {
    let start = Instant::now();
    let result = check();
    let elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
    let (status, detail) = match result {
        Ok(o) => (if o.passed { Status::Pass } else { Status::Fail }, o.detail),
        Err(e @ Error::ResourceLimit { .. }) => {
            (Status::Skipped, serde_json::json!({ "resource": e.to_string() }))
        }
        Err(e) => (Status::Fail, serde_json::json!({ "error": e.to_string() })),
    };
    CheckResult { id, status, detail, seed, elapsed_ms }
}

/// The randomized suites.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Theorem {
    /// PT `L` infiltrated with a finite set stays PT.
    FiniteOperand,
    /// PT `L` infiltrated with a cofinite set stays PT.
    CofiniteOperand,
    /// PT `L` infiltrated with a shuffle ideal stays PT and is a shuffle ideal.
    IdealOperand,
    /// The word-indexed infiltration of an acyclic DFA determinizes to an acyclic DFA.
    PowersetAcyclic,
    /// `mirror(L ↑_C L') = mirror(L) ↑_C mirror(L')`.
    MirrorHomomorphism,
    /// `h(u_1 ⧢ … ⧢ u_m) ≤ 1 + max_a Σ |u_i|_a`.
    WordShuffleBound,
    /// The acyclicity verdict agrees with closure under some `~_k`.
    PtCrossValidation,
}

impl Theorem {
    pub const ALL: [Theorem; 7] = [
        Theorem::FiniteOperand,
        Theorem::CofiniteOperand,
        Theorem::IdealOperand,
        Theorem::PowersetAcyclic,
        Theorem::MirrorHomomorphism,
        Theorem::WordShuffleBound,
        Theorem::PtCrossValidation,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Theorem::FiniteOperand => "thm1-finite",
            Theorem::CofiniteOperand => "thm1-cofinite",
            Theorem::IdealOperand => "thm1-ideal",
            Theorem::PowersetAcyclic => "lemma-P-acyclic",
            Theorem::MirrorHomomorphism => "mirror-hom",
            Theorem::WordShuffleBound => "word-shuffle-bound",
            Theorem::PtCrossValidation => "pt-crossval",
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Theorem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Theorem::ALL
            .into_iter()
            .find(|t| t.id() == s)
            .ok_or_else(|| Error::InvalidParams(format!("unknown suite {s:?}")))
    }
}

/// Size parameters for random instances. Defaults follow the desk-scale
/// setting: alphabets of at most 3 letters, words of length at most 3
/// (4 for the powerset suite), at most 3 filters of length at most 3,
/// DFAs of at most 6 states.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RandomParams {
    pub max_letters: usize,
    pub max_states: usize,
    pub max_words: usize,
    pub max_word_len: usize,
    pub max_filters: usize,
    pub max_filter_len: usize,
    pub max_tree_depth: usize,
    pub state_cap: usize,
}

impl Default for RandomParams {
    fn default() -> Self {
        RandomParams {
            max_letters: 3,
            max_states: 6,
            max_words: 3,
            max_word_len: 3,
            max_filters: 3,
            max_filter_len: 3,
            max_tree_depth: 2,
            state_cap: DEFAULT_STATE_CAP,
        }
    }
}

impl RandomParams {
    /// Defaults adjusted to the suite: the powerset suite uses words up to
    /// length 4; cross-validation uses DFAs of at most 5 states over at
    /// most 2 letters; the word-shuffle bound uses at most 2 letters.
    pub fn for_theorem(theorem: Theorem) -> Self {
        let mut p = RandomParams::default();
        match theorem {
            Theorem::PowersetAcyclic => p.max_word_len = 4,
            Theorem::PtCrossValidation => {
                p.max_states = 5;
                p.max_letters = 2;
            }
            Theorem::WordShuffleBound => p.max_letters = 2,
            _ => {}
        }
        p
    }

    fn validate(&self) -> Result<()> {
        if self.max_letters == 0 || self.max_letters > 26 {
            return Err(Error::InvalidParams("max_letters must be in 1..=26".into()));
        }
        if self.max_states == 0 {
            return Err(Error::InvalidParams("max_states must be positive".into()));
        }
        if self.max_words == 0 || self.max_filters == 0 {
            return Err(Error::InvalidParams("word and filter counts must be positive".into()));
        }
        Ok(())
    }
}

/// Runs `trials` independent instances of `theorem`. Trial `i` draws from
/// ChaCha8 seeded with `seed` on stream `i`; results are ordered by trial.
pub fn run_random(
    theorem: Theorem,
    trials: usize,
    seed: u64,
    params: &RandomParams,
) -> Result<Vec<CheckResult>> {
    if trials == 0 {
        return Err(Error::InvalidParams("at least one trial is required".into()));
    }
    params.validate()?;
    Ok((0..trials as u64)
        .into_par_iter()
        .map(|trial| {
            timed(format!("{}#{trial}", theorem.id()), Some(seed), || {
                trials::run_trial(theorem, seed, trial, params)
            })
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn theorem_ids_round_trip() {
        for t in Theorem::ALL {
            assert_eq!(t.id().parse::<Theorem>().unwrap(), t);
        }
        assert!("nope".parse::<Theorem>().is_err());
    }

    #[test]
    fn zero_trials_is_invalid() {
        assert!(run_random(Theorem::FiniteOperand, 0, 1, &RandomParams::default()).is_err());
    }

    #[test]
    fn same_seed_same_report() {
        let p = RandomParams::default();
        let strip = |v: Vec<CheckResult>| -> Vec<(String, Status, Value)> {
            v.into_iter().map(|r| (r.id, r.status, r.detail)).collect()
        };
        let a = strip(run_random(Theorem::FiniteOperand, 8, 5, &p).unwrap());
        let b = strip(run_random(Theorem::FiniteOperand, 8, 5, &p).unwrap());
        assert_eq!(a, b);
    }

    #[test]
    fn report_line_layout() {
        let r = CheckResult {
            id: "x".into(),
            status: Status::Skipped,
            detail: Value::Null,
            seed: Some(3),
            elapsed_ms: 1.5,
        };
        assert_eq!(
            r.to_json_line(),
            r#"{"id":"x","status":"skipped","detail":null,"seed":3,"elapsed_ms":1.5}"#
        );
    }
}
