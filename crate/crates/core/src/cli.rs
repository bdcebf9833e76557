//! Command-line front end. [`run`] returns the process exit code:
//! 0 success, 1 verification failure, 2 usage or config error,
//! 3 numeric degeneracy (degenerate frame point, or more than half of the
//! sampled points failing to evaluate).

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::catalog::{self, AnyMap, CATALOG};
use crate::conformal::{AlgebraKind, ConformalityReport};
use crate::error::{Error, Result};
use crate::moebius::MapConfig;
use crate::numfmt::{fmt_num, to_json_string};
use crate::sampling::{random_directions, sample_points, SampleBox, SamplingSpec};
use crate::suites::{run_suite, Suite, SuiteReport};
use crate::table::MultiplicationTable;
use crate::tolerance::{NumericPolicy, Scheme};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DEGENERATE: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "octoclif", version, about = "Octonion and Clifford arithmetic with numerical conformality analysis")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print a basis multiplication table.
    Table(TableArgs),
    /// Run randomised identity suites.
    VerifyAlgebra(VerifyArgs),
    /// Sample a map and run the full conformality analysis.
    Analyze(AnalyzeArgs),
    /// Print the structural frame of a map at one point.
    Frame(FrameArgs),
    /// List the built-in maps.
    Catalog,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum AlgebraArg {
    Octonion,
    Clifford,
    CayleyDickson,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    Moufang,
    Composition,
    ZeroDivisors,
    PseudoNorm,
    Associativity,
    All,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Self {
        match s {
            SuiteArg::Moufang => Suite::Moufang,
            SuiteArg::Composition => Suite::Composition,
            SuiteArg::ZeroDivisors => Suite::ZeroDivisors,
            SuiteArg::PseudoNorm => Suite::PseudoNorm,
            SuiteArg::Associativity => Suite::Associativity,
            SuiteArg::All => Suite::All,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SchemeArg {
    Central2,
    FivePoint4,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(long, value_enum, default_value = "octonion")]
    pub algebra: AlgebraArg,
    /// Generator count (clifford) or doubling level (cayley-dickson).
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value = "all")]
    pub suite: SuiteArg,
    #[arg(long, default_value_t = 10_000)]
    pub trials: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// Which map to analyse.
#[derive(Debug, Args)]
pub struct MapArgs {
    /// Catalog map name, or the map to pick from a multi-map config file.
    #[arg(long)]
    pub map: Option<String>,
    /// JSON map description (generator word or raw a, b, c, d).
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Expected setting of the map; a mismatch is a usage error.
    #[arg(long, value_enum)]
    pub algebra: Option<AlgebraArg>,
    /// Generator count for Clifford catalog maps (default 3).
    #[arg(long)]
    pub n: Option<usize>,
}

/// Differentiation and tolerance settings.
#[derive(Debug, Args)]
pub struct PolicyArgs {
    /// Fixed finite-difference step (default cbrt(eps) * max(1, |z|)).
    #[arg(long)]
    pub h: Option<f64>,
    /// Scale-normalised tolerance for derivative-based verdicts.
    #[arg(long, default_value_t = 1e-6)]
    pub tol: f64,
    #[arg(long, value_enum, default_value = "central2")]
    pub scheme: SchemeArg,
    /// Ignore analytic partials and differentiate numerically.
    #[arg(long)]
    pub no_analytic: bool,
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    #[command(flatten)]
    pub map: MapArgs,
    #[command(flatten)]
    pub policy: PolicyArgs,
    /// Sampling box: "lo:hi" for all coordinates or one "lo:hi" per
    /// coordinate, comma-separated.
    #[arg(long = "box")]
    pub sample_box: Option<String>,
    #[arg(long, default_value_t = 100)]
    pub samples: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Random directions for the differential identity (0 skips it).
    #[arg(long, default_value_t = 16)]
    pub directions: usize,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct FrameArgs {
    #[command(flatten)]
    pub map: MapArgs,
    #[command(flatten)]
    pub policy: PolicyArgs,
    /// Comma-separated coordinates x0,...,xn (default 1, 0.5, 0, ..., 0).
    #[arg(long, allow_hyphen_values = true)]
    pub point: Option<String>,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::SingularDerivative { .. } | Error::Pole { .. } | Error::Singular { .. } => EXIT_DEGENERATE,
                _ => EXIT_USAGE,
            }
        }
    }
}

fn dispatch(cmd: Command) -> Result<i32> {
    match cmd {
        Command::Table(a) => cmd_table(&a),
        Command::VerifyAlgebra(a) => cmd_verify_algebra(&a),
        Command::Analyze(a) => cmd_analyze(&a),
        Command::Frame(a) => cmd_frame(&a),
        Command::Catalog => {
            for e in &CATALOG {
                println!("{:18} {:20} {}", e.name, e.algebra.as_str(), e.description);
            }
            Ok(EXIT_OK)
        }
    }
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<()> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|e| Error::Io(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

pub fn cmd_table(a: &TableArgs) -> Result<i32> {
    let t = match a.algebra {
        AlgebraArg::Octonion => {
            if a.n.is_some_and(|n| n != 7) {
                return Err(Error::InvalidInput("the octonion table has n = 7".into()));
            }
            MultiplicationTable::octonion()
        }
        AlgebraArg::Clifford => MultiplicationTable::clifford(a.n.unwrap_or(crate::catalog::DEFAULT_CLIFFORD_N))?,
        AlgebraArg::CayleyDickson => MultiplicationTable::cayley_dickson(a.n.unwrap_or(3))?,
    };
    let text = match a.format {
        Format::Text => t.to_text(),
        Format::Json => to_json_string(&t),
        Format::Csv => t.to_csv()?,
    };
    emit(&a.out, &text)?;
    Ok(EXIT_OK)
}

fn suite_text(r: &SuiteReport) -> String {
    let mut s = String::new();
    for c in &r.checks {
        s.push_str(&format!(
            "{:4} {:14} {:22} {:46} max residual {} (threshold {}){}{}\n",
            if c.ok { "ok" } else { "FAIL" },
            serde_json::to_value(c.suite).ok().and_then(|v| v.as_str().map(String::from)).unwrap_or_default(),
            c.algebra,
            c.name,
            if c.max_residual.is_nan() { "n/a".to_string() } else { fmt_num(c.max_residual) },
            fmt_num(c.threshold),
            if c.expected { "" } else { " [expected not to hold]" },
            c.detail.as_ref().map(|d| format!(" -- {d}")).unwrap_or_default(),
        ));
    }
    s.push_str(&format!("{}: trials {}, seed {}\n", if r.all_ok { "PASS" } else { "FAIL" }, r.trials, r.seed));
    s
}

pub fn cmd_verify_algebra(a: &VerifyArgs) -> Result<i32> {
    let r = run_suite(a.suite.into(), a.trials, a.seed)?;
    let text = match a.format {
        Format::Json => to_json_string(&r),
        Format::Text => suite_text(&r),
        Format::Csv => return Err(Error::InvalidInput("verify-algebra supports text or json".into())),
    };
    emit(&a.out, &text)?;
    Ok(if r.all_ok { EXIT_OK } else { EXIT_FAILURE })
}

/// Resolves `--map` / `--config` to a map.
pub fn resolve_map(m: &MapArgs) -> Result<AnyMap> {
    let map = match (&m.config, &m.map) {
        (Some(path), name) => {
            let text = std::fs::read_to_string(path).map_err(|e| Error::Config(format!("{}: {e}", path.display())))?;
            let configs = MapConfig::parse_all(&text)?;
            let cfg = match name {
                Some(name) => configs
                    .iter()
                    .find(|c| &c.name == name)
                    .ok_or_else(|| Error::Config(format!("no map named '{name}' in {}", path.display())))?,
                None if configs.len() == 1 => &configs[0],
                None => return Err(Error::Config("config holds several maps; pick one with --map".into())),
            };
            AnyMap::from_spec(cfg.name.clone(), cfg.build()?)?
        }
        (None, Some(name)) => catalog::build(name, m.n)?,
        (None, None) => return Err(Error::InvalidInput("give --map NAME or --config FILE".into())),
    };
    if let Some(alg) = m.algebra {
        let kind = match &map {
            AnyMap::Octonion(_) => AlgebraKind::Octonion,
            AnyMap::Clifford(_) => AlgebraKind::CliffordParavector,
        };
        let ok = matches!(
            (alg, kind),
            (AlgebraArg::Octonion, AlgebraKind::Octonion) | (AlgebraArg::Clifford, AlgebraKind::CliffordParavector)
        );
        if !ok {
            return Err(Error::InvalidInput(format!("map '{}' is {}, not {alg:?}", map.label(), kind.as_str())));
        }
    }
    Ok(map)
}

fn policy_from(p: &PolicyArgs) -> Result<NumericPolicy> {
    if let Some(h) = p.h {
        if !(h > 0.0 && h.is_finite()) {
            return Err(Error::InvalidInput(format!("--h must be positive, got {h}")));
        }
    }
    if !(p.tol > 0.0 && p.tol.is_finite()) {
        return Err(Error::InvalidInput(format!("--tol must be positive, got {}", p.tol)));
    }
    Ok(NumericPolicy {
        derivative_tol: p.tol,
        step: p.h,
        scheme: match p.scheme {
            SchemeArg::Central2 => Scheme::Central2,
            SchemeArg::FivePoint4 => Scheme::FivePoint4,
        },
        use_analytic: !p.no_analytic,
        ..NumericPolicy::default()
    })
}

/// Runs an analysis job and returns the report (without writing it).
pub fn analyze_job(a: &AnalyzeArgs) -> Result<ConformalityReport> {
    let map = resolve_map(&a.map)?;
    let policy = policy_from(&a.policy)?;
    if a.samples == 0 {
        return Err(Error::InvalidInput("--samples must be at least 1".into()));
    }
    let dim = map.dim();
    let sample_box = match &a.sample_box {
        Some(s) => SampleBox::parse(s, dim)?,
        None => SampleBox::default_for(dim),
    };
    let points = sample_points(&sample_box, a.samples, a.seed);
    let directions = random_directions(dim, a.directions, a.seed);
    let mut report = map.analyze(&points, &directions, &policy);
    report.sampling = Some(SamplingSpec {
        lo: sample_box.lo,
        hi: sample_box.hi,
        samples: a.samples,
        seed: a.seed,
        directions: a.directions,
    });
    Ok(report)
}

pub fn cmd_analyze(a: &AnalyzeArgs) -> Result<i32> {
    let report = analyze_job(a)?;
    let text = match a.format {
        Format::Json => report.to_json(),
        Format::Csv => report.to_csv()?,
        Format::Text => return Err(Error::InvalidInput("analyze writes json or csv".into())),
    };
    emit(&a.out, &text)?;
    let c = &report.summary.counts;
    let total = report.points.len();
    eprintln!(
        "{}: {} conformal, {} non-conformal, {} degenerate, {} errored of {total}; frame {:?}",
        report.map_label, c.conformal, c.non_conformal, c.degenerate, c.error, report.summary.frame_class
    );
    if 2 * c.error > total {
        eprintln!("error: sampling hit poles or failed at more than half of the points");
        return Ok(EXIT_DEGENERATE);
    }
    if c.degenerate == total {
        eprintln!("error: every sampled point is degenerate");
        return Ok(EXIT_DEGENERATE);
    }
    Ok(if c.non_conformal == 0 && c.error == 0 { EXIT_OK } else { EXIT_FAILURE })
}

fn parse_point(s: &str) -> Result<Vec<f64>> {
    s.split(',')
        .map(|t| t.trim().parse::<f64>().map_err(|_| Error::InvalidInput(format!("'{t}' is not a number"))))
        .collect()
}

pub fn cmd_frame(a: &FrameArgs) -> Result<i32> {
    let map = resolve_map(&a.map)?;
    let policy = policy_from(&a.policy)?;
    let dim = map.dim();
    let z = match &a.point {
        Some(s) => parse_point(s)?,
        None => {
            let mut z = vec![0.0; dim];
            z[0] = 1.0;
            z[1] = 0.5;
            z
        }
    };
    if z.len() != dim {
        return Err(Error::InvalidInput(format!("--point needs {dim} coordinates, got {}", z.len())));
    }
    let fr = map.frame_at(&z, &policy)?;
    let text = match a.format {
        Format::Json => to_json_string(&fr),
        Format::Csv => return Err(Error::InvalidInput("frame prints text or json".into())),
        Format::Text => {
            let nums = |v: &[f64]| v.iter().map(|x| fmt_num(*x)).collect::<Vec<_>>().join(", ");
            let mut s = format!("map {} ({}, n = {}) at z = [{}]\n", fr.map_label, fr.algebra, fr.n, nums(&fr.z));
            s.push_str(&format!(
                "conformal: {}  lambda: {}\n",
                fr.conformal,
                fr.lambda.map(fmt_num).unwrap_or_else(|| "-".into())
            ));
            for (k, p) in fr.psi.iter().enumerate() {
                s.push_str(&format!("Psi_{} = [{}]\n", k + 1, nums(p)));
            }
            s.push_str(&format!(
                "residual_re {}  residual_orth {}  residual_unit {}  accepted {}\n",
                fmt_num(fr.residual_re),
                fmt_num(fr.residual_orth),
                fmt_num(fr.residual_unit),
                fr.accepted
            ));
            if let Some(spin) = &fr.spin {
                for (k, v) in spin.iter().enumerate() {
                    s.push_str(&format!(
                        "spin Psi_{}: grades_ok {} unit_norm {} scalar_free {}\n",
                        k + 1,
                        v.grades_ok,
                        v.unit_norm,
                        v.scalar_free
                    ));
                }
            }
            s.push_str(&format!(
                "brackets: grade {:?}, max anticommutator {}, max commutator {}, relation holds {:?}\n",
                fr.brackets.grade,
                fmt_num(fr.brackets.max_anticommutator),
                fmt_num(fr.brackets.max_commutator),
                fr.brackets.relation_holds
            ));
            s
        }
    };
    emit(&a.out, &text)?;
    Ok(if fr.accepted { EXIT_OK } else { EXIT_FAILURE })
}
