//! Command-line front end: `verify`, `action`, `spectrum`, `subrep`, `relation-search`.

mod suites;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use crate::error::{Error, Result};
use crate::exactfield::json::JsonScalar;
use crate::exactfield::{parse_rational, Rational};
use crate::lie::BasisLabelT;
use crate::rtt::{
    default_patterns, parse_patterns, pattern_search, principal::RelationOracle, IndexPattern,
};
use crate::yangian::casimir::{
    casimir_j2, j2_eigenvalue_adjoint, j2_eigenvalue_singlet, j2_is_scalar_at,
};
use crate::yangian::subrep::{analyze_subrep, BURNSIDE_MAX_N};
use crate::yangian::{theorem_action, YangianRep};

pub use suites::{run_suite, Suite, SuiteConfig, ALL_SUITES};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Default report directory when `--out` is absent.
pub const REPORT_DIR_ENV: &str = "YANGIAN_REPORT_DIR";

#[derive(Parser, Debug)]
#[command(
    name = "yangian",
    about = "Exact checks of the Yangian action on generalized Bell states"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run verification suites and write one JSON report per (suite, N).
    Verify(VerifyArgs),
    /// Tabulate J(T_i^(j)) on every Bell vector.
    Action(ActionArgs),
    /// J² and I² eigenvalues at rational a, b.
    Spectrum(SpectrumArgs),
    /// Invariant subspaces and irreducibility at rational a, b.
    Subrep(SubrepArgs),
    /// Screen index patterns for the principal-series relation.
    RelationSearch(SearchArgs),
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// N, a range such as 2..4, or a comma list
    #[arg(long, default_value = "2..4")]
    n: String,
    /// comma-separated suites, or "all"
    #[arg(long, default_value = "all")]
    suite: String,
    /// extra (a, b) pair for the subrep suite
    #[arg(long, requires = "b")]
    a: Option<String>,
    #[arg(long, requires = "a")]
    b: Option<String>,
    /// output directory
    #[arg(long, env = REPORT_DIR_ENV, default_value = "reports")]
    out: PathBuf,
    /// worker threads (defaults to the number of suites)
    #[arg(long)]
    jobs: Option<usize>,
    /// pattern file for the principal-relation suite
    #[arg(long)]
    patterns: Option<PathBuf>,
    /// run drinfeld and Burnside checks above N=3 anyway
    #[arg(long)]
    allow_large: bool,
}

#[derive(Args, Debug)]
struct ActionArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    i: usize,
    #[arg(long)]
    j: usize,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct SpectrumArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, allow_hyphen_values = true)]
    a: String,
    #[arg(long, allow_hyphen_values = true)]
    b: String,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct SubrepArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, allow_hyphen_values = true)]
    a: String,
    #[arg(long, allow_hyphen_values = true)]
    b: String,
    /// run the Burnside closure above N=3
    #[arg(long)]
    allow_large: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct SearchArgs {
    /// sizes, screened in order
    #[arg(long, default_value = "2..4")]
    n: String,
    #[arg(long)]
    patterns: Option<PathBuf>,
    /// check a single named pattern at every size instead of searching
    #[arg(long)]
    pattern: Option<String>,
    /// write the result as JSON to this file
    #[arg(long)]
    out: Option<PathBuf>,
}

/// Parses `3`, `2..4`, `2..=4` or `2,3,5`.
pub fn parse_sizes(s: &str) -> Result<Vec<usize>> {
    let bad = || Error::Config(format!("bad N specification {s:?}"));
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| bad());
    let sizes: Vec<usize> = if let Some((lo, hi)) = s.split_once("..") {
        let hi = hi.strip_prefix('=').unwrap_or(hi);
        let (lo, hi) = (num(lo)?, num(hi)?);
        if lo > hi {
            return Err(bad());
        }
        (lo..=hi).collect()
    } else {
        s.split(',').map(num).collect::<Result<_>>()?
    };
    if sizes.is_empty() || sizes.iter().any(|&n| n < 2) {
        return Err(Error::Config(format!("N must be at least 2 in {s:?}")));
    }
    Ok(sizes)
}

fn load_patterns(path: &Option<PathBuf>) -> Result<Vec<IndexPattern>> {
    match path {
        Some(p) => parse_patterns(&std::fs::read_to_string(p)?),
        None => Ok(default_patterns()),
    }
}

fn rational_arg(s: &str) -> Result<Rational> {
    parse_rational(s)
}

/// Runs the command line and returns the process exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = if e.use_stderr() {
                write!(err, "{e}")
            } else {
                write!(out, "{e}")
            };
            return code;
        }
    };
    let result = match cli.command {
        Command::Verify(a) => cmd_verify(a, out, err),
        Command::Action(a) => cmd_action(a, out),
        Command::Spectrum(a) => cmd_spectrum(a, out),
        Command::Subrep(a) => cmd_subrep(a, out, err),
        Command::RelationSearch(a) => cmd_relation_search(a, out),
    };
    match result {
        Ok(code) => code,
        Err(
            e @ (Error::Config(_)
            | Error::Parse(_)
            | Error::InvalidLabel(_)
            | Error::UnknownPattern(_)),
        ) => {
            let _ = writeln!(err, "usage error: {e}");
            EXIT_USAGE
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_FAIL
        }
    }
}

fn cmd_verify(args: VerifyArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let sizes = parse_sizes(&args.n)?;
    let suites = Suite::parse_list(&args.suite)?;
    let extra = match (&args.a, &args.b) {
        (Some(a), Some(b)) => Some((rational_arg(a)?, rational_arg(b)?)),
        _ => None,
    };
    let config = SuiteConfig {
        sizes,
        suites,
        extra_pair: extra,
        out: args.out,
        jobs: args.jobs,
        patterns: load_patterns(&args.patterns)?,
        allow_large: args.allow_large,
        all_selected: args.suite.trim() == "all",
    };
    config.validate()?;
    let reports = suites::run_all(&config)?;
    std::fs::create_dir_all(&config.out)?;
    let mut all = true;
    for r in &reports {
        std::fs::write(config.out.join(r.file_name()), r.to_json_string())?;
        all &= r.all_passed();
        writeln!(
            out,
            "{:<20} N={} {}/{}",
            r.suite, r.n, r.summary.passed, r.summary.total
        )?;
        for f in r.failures() {
            writeln!(err, "  FAIL {} N={}: {}", r.suite, r.n, f.id)?;
        }
    }
    Ok(if all { EXIT_OK } else { EXIT_FAIL })
}

fn cmd_action(args: ActionArgs, out: &mut dyn Write) -> Result<i32> {
    let n = args.n;
    if n < 2 || !(1..=n).contains(&args.i) || !(1..=n).contains(&args.j) {
        return Err(Error::Config(format!(
            "need N >= 2 and 1 <= i, j <= N, got N={n} i={} j={}",
            args.i, args.j
        )));
    }
    let t = BasisLabelT::new(n, args.i as i64, args.j as i64);
    if !t.is_sl() {
        return Err(Error::InvalidLabel(
            "(i, j) = (1, 1) is the identity".into(),
        ));
    }
    let mut rows = Vec::new();
    for k in 1..=n {
        for m in 1..=n {
            let (c, target) = theorem_action(n, args.i, args.j, k, m);
            rows.push((k, m, c, target));
        }
    }
    if args.json {
        let table: Vec<_> = rows
            .iter()
            .map(|(k, m, c, (k2, m2))| json!({ "k": k, "m": m, "coeff": c.to_json(), "coeff_text": c.to_string(), "target": [k2, m2] }))
            .collect();
        writeln!(
            out,
            "{}",
            serde_json::to_string_pretty(
                &json!({ "n": n, "i": args.i, "j": args.j, "rows": table })
            )?
        )?;
    } else {
        writeln!(out, "J({t}) on Psi_k^(m), N={n}")?;
        for (k, m, c, (k2, m2)) in rows {
            writeln!(out, "({k},{m}) -> ({k2},{m2})  coeff {c}")?;
        }
    }
    Ok(EXIT_OK)
}

fn cmd_spectrum(args: SpectrumArgs, out: &mut dyn Write) -> Result<i32> {
    let n = args.n;
    if n < 2 {
        return Err(Error::Config("N must be at least 2".into()));
    }
    let (a, b) = (rational_arg(&args.a)?, rational_arg(&args.b)?);
    let e1 = j2_eigenvalue_singlet(n).substitute_rational(&a, &b);
    let e2 = j2_eigenvalue_adjoint(n).substitute_rational(&a, &b);
    let rep = YangianRep::new(n);
    let scalar = j2_is_scalar_at(n, &casimir_j2(&rep), &a, &b);
    let mult_ad = n * n - 1;
    let record = if e1 == e2 {
        json!({ "n": n, "a": a.to_string(), "b": b.to_string(),
                "j2": [{ "value": e1.to_string(), "multiplicity": n * n }],
                "i2": [{ "value": "0", "multiplicity": 1 }, { "value": (2 * n).to_string(), "multiplicity": mult_ad }],
                "scalar": scalar })
    } else {
        json!({ "n": n, "a": a.to_string(), "b": b.to_string(),
                "j2": [{ "value": e1.to_string(), "multiplicity": 1 }, { "value": e2.to_string(), "multiplicity": mult_ad }],
                "i2": [{ "value": "0", "multiplicity": 1 }, { "value": (2 * n).to_string(), "multiplicity": mult_ad }],
                "scalar": scalar })
    };
    writeln!(out, "{}", serde_json::to_string_pretty(&record)?)?;
    Ok(EXIT_OK)
}

fn cmd_subrep(args: SubrepArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let n = args.n;
    if n < 2 {
        return Err(Error::Config("N must be at least 2".into()));
    }
    let (a, b) = (rational_arg(&args.a)?, rational_arg(&args.b)?);
    let burnside = n <= BURNSIDE_MAX_N || args.allow_large;
    if n > BURNSIDE_MAX_N && args.allow_large {
        writeln!(
            err,
            "warning: Burnside closure at N={n} works in dimension {}",
            n.pow(4)
        )?;
    }
    let report = analyze_subrep(&YangianRep::new(n), &a, &b, burnside);
    if args.json {
        writeln!(out, "{}", serde_json::to_string_pretty(&report.to_json())?)?;
    } else {
        writeln!(out, "{}", report.summary_line())?;
    }
    Ok(EXIT_OK)
}

fn cmd_relation_search(args: SearchArgs, out: &mut dyn Write) -> Result<i32> {
    let sizes = parse_sizes(&args.n)?;
    let patterns = load_patterns(&args.patterns)?;
    let value = if let Some(name) = &args.pattern {
        let p = crate::rtt::principal::find_pattern(&patterns, name)?;
        let mut rows = Vec::new();
        for &n in &sizes {
            let ce = RelationOracle::new(n).first_failure(p);
            writeln!(
                out,
                "{name} N={n}: {}",
                ce.map_or("holds".to_string(), |c| format!("fails at (i,j,k,l)={c:?}"))
            )?;
            rows.push(json!({ "n": n, "holds": ce.is_none(), "counterexample": ce }));
        }
        json!({ "pattern": name, "results": rows })
    } else {
        let result = pattern_search(&patterns, &sizes);
        for o in &result.outcomes {
            writeln!(
                out,
                "{:9} {}",
                serde_json::to_value(&o.status)?.as_str().unwrap_or("?"),
                o.name
            )?;
        }
        result.to_json()
    };
    if let Some(path) = &args.out {
        std::fs::write(path, serde_json::to_string_pretty(&value)?)?;
    }
    Ok(EXIT_OK)
}
