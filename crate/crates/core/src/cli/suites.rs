//! Suite selection and the parallel runner behind `verify`.

use std::path::PathBuf;

use rayon::prelude::*;
use serde_json::json;

use crate::error::{Error, Result};
use crate::exactfield::{rat, Rational};
use crate::report::{Item, Report};
use crate::rtt::{verify_principal_relation, verify_rtt, verify_ybe, IndexPattern};
use crate::yangian::drinfeld::{verify_drinfeld_relations, SampleSet};
use crate::yangian::subrep::{analyze_subrep, verify_subrep, Verdict, BURNSIDE_MAX_N};
use crate::yangian::{verify_commutation_lemma, verify_main_theorem, verify_spectrum, YangianRep};

#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Suite {
    Basis,
    Bell,
    Coproduct,
    MainTheorem,
    J2,
    Commutation,
    Drinfeld,
    Subrep,
    Ybe,
    Rtt,
    PrincipalRelation,
}

pub const ALL_SUITES: [Suite; 11] = [
    Suite::Basis,
    Suite::Bell,
    Suite::Coproduct,
    Suite::MainTheorem,
    Suite::J2,
    Suite::Commutation,
    Suite::Drinfeld,
    Suite::Subrep,
    Suite::Ybe,
    Suite::Rtt,
    Suite::PrincipalRelation,
];

/// Samples drawn for the drinfeld suite when the check is not exhaustive.
pub const DRINFELD_SAMPLES: usize = 20;
pub const DRINFELD_SEED: u64 = 7;

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Basis => "basis",
            Suite::Bell => "bell",
            Suite::Coproduct => "coproduct",
            Suite::MainTheorem => "main-theorem",
            Suite::J2 => "j2",
            Suite::Commutation => "commutation",
            Suite::Drinfeld => "drinfeld",
            Suite::Subrep => "subrep",
            Suite::Ybe => "ybe",
            Suite::Rtt => "rtt",
            Suite::PrincipalRelation => "principal-relation",
        }
    }

    pub fn from_name(s: &str) -> Result<Self> {
        ALL_SUITES
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Config(format!("unknown suite {s:?}")))
    }

    pub fn parse_list(s: &str) -> Result<Vec<Self>> {
        if s.trim() == "all" {
            return Ok(ALL_SUITES.to_vec());
        }
        let mut out: Vec<Self> = s
            .split(',')
            .map(|t| Self::from_name(t.trim()))
            .collect::<Result<_>>()?;
        out.sort();
        out.dedup();
        Ok(out)
    }
}

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub sizes: Vec<usize>,
    pub suites: Vec<Suite>,
    pub extra_pair: Option<(Rational, Rational)>,
    pub out: PathBuf,
    pub jobs: Option<usize>,
    pub patterns: Vec<IndexPattern>,
    pub allow_large: bool,
    /// Set for `--suite all`: gated suites quietly skip sizes above the gate.
    pub all_selected: bool,
}

impl SuiteConfig {
    pub fn new(sizes: Vec<usize>, suites: Vec<Suite>) -> Self {
        Self {
            sizes,
            suites,
            extra_pair: None,
            out: PathBuf::from("reports"),
            jobs: None,
            patterns: crate::rtt::default_patterns(),
            allow_large: false,
            all_selected: false,
        }
    }

    /// The drinfeld suite is limited to `N ≤ 3` unless overridden.
    pub fn validate(&self) -> Result<()> {
        if self.suites.is_empty() || self.sizes.is_empty() {
            return Err(Error::Config("nothing to run".into()));
        }
        if self.jobs == Some(0) {
            return Err(Error::Config("--jobs must be positive".into()));
        }
        let big = self
            .sizes
            .iter()
            .copied()
            .filter(|&n| n > BURNSIDE_MAX_N)
            .max();
        let gated = self.suites.contains(&Suite::Drinfeld) && !self.all_selected;
        if let (Some(n), true, false) = (big, gated, self.allow_large) {
            return Err(Error::Config(format!(
                "drinfeld suite is limited to N <= {BURNSIDE_MAX_N} (got N={n}); pass --allow-large to override"
            )));
        }
        Ok(())
    }
}

fn expected_verdict(n: usize, a: &Rational, b: &Rational) -> Verdict {
    let d = a - b;
    let half = rat(n as i64, 2);
    if d == half {
        Verdict::V0Invariant
    } else if d == -half {
        Verdict::VadInvariant
    } else {
        Verdict::Irreducible
    }
}

/// Runs one suite at one `N`.
pub fn run_suite(suite: Suite, n: usize, config: &SuiteConfig) -> Result<Report> {
    let rep = || YangianRep::new(n);
    let large = n > BURNSIDE_MAX_N;
    let cost_note = |r: Report| {
        if large {
            r.with_note(format!(
                "cost warning: run above N={BURNSIDE_MAX_N} by override"
            ))
        } else {
            r
        }
    };
    Ok(match suite {
        Suite::Basis => crate::lie::verify_basis(n),
        Suite::Bell => crate::bell::verify_bell(n),
        Suite::Coproduct => crate::yangian::coproduct::verify_coproduct(&rep()),
        Suite::MainTheorem => verify_main_theorem(&rep()),
        Suite::J2 => verify_spectrum(&rep())?,
        Suite::Commutation => verify_commutation_lemma(&rep()),
        Suite::Drinfeld => {
            let rep = rep();
            let samples = if n == 2 {
                SampleSet::exhaustive(&rep)
            } else {
                SampleSet::sampled(&rep, DRINFELD_SAMPLES, DRINFELD_SEED)
            };
            cost_note(verify_drinfeld_relations(&rep, &samples))
        }
        Suite::Subrep => {
            let rep = rep();
            let burnside = !large || config.allow_large;
            let mut report = verify_subrep(&rep, burnside);
            if let Some((a, b)) = &config.extra_pair {
                let r = analyze_subrep(&rep, a, b, burnside);
                let expect = expected_verdict(n, a, b);
                let item = Item::check(
                    format!("requested a={a} b={b}"),
                    r.verdict == expect,
                    || (r.to_json(), json!({ "verdict": expect })),
                );
                report = report.merge(Report::new("subrep", n, vec![item]))?;
            }
            if !burnside {
                report = report.with_note(
                    "Burnside closure skipped; irreducibility rests on cyclic-generation evidence",
                );
            } else if large {
                report = cost_note(report);
            }
            report
        }
        Suite::Ybe => verify_ybe(n),
        Suite::Rtt => verify_rtt(n),
        Suite::PrincipalRelation => verify_principal_relation(n, &config.patterns),
    })
}

/// Runs every (suite, N) job, in parallel, returning reports in a fixed order.
pub fn run_all(config: &SuiteConfig) -> Result<Vec<Report>> {
    config.validate()?;
    let skip =
        |s: Suite, n: usize| s == Suite::Drinfeld && n > BURNSIDE_MAX_N && !config.allow_large;
    let jobs: Vec<(Suite, usize)> = config
        .suites
        .iter()
        .flat_map(|&s| config.sizes.iter().map(move |&n| (s, n)))
        .filter(|&(s, n)| !skip(s, n))
        .collect();
    let threads = config.jobs.unwrap_or(config.suites.len()).max(1);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| Error::Config(format!("thread pool: {e}")))?;
    pool.install(|| {
        jobs.par_iter()
            .map(|&(s, n)| run_suite(s, n, config))
            .collect()
    })
}
