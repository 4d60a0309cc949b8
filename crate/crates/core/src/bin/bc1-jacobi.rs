//! `bc1-jacobi`: compute polynomial families, run identity checks, compare pairing engines.
//!
//! Exit codes: 0 success, 1 an identity or tolerance check failed, 2 invalid usage,
//! 3 internal error.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use bc1_jacobi::classical::{build_n_family, monic_from_m, monic_n_family, JacobiParams};
use bc1_jacobi::nonsym::{eigenfunction_e, NonsymFamily};
use bc1_jacobi::rational::{int, parse_rational, Rational};
use bc1_jacobi::record::{records_to_csv, records_to_json, Family, PolyRecord};
use bc1_jacobi::spherical::spherical_function;
use bc1_jacobi::suite::{crosscheck, run_suite, Suite, SuiteConfig};
use bc1_jacobi::transport::{gamma, phi_transport};
use bc1_jacobi::vector::build_m;
use bc1_jacobi::{Error, LaurentPoly, Mode, Multiplicity};

#[derive(Parser)]
#[command(name = "bc1-jacobi", version, about = "Nonsymmetric and matrix-valued Jacobi polynomials for BC1")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute a polynomial family and print or export its coefficients.
    Compute(ComputeArgs),
    /// Run identity checks and report one line per case.
    Verify(VerifyArgs),
    /// Compare the exact and quadrature pairings on monomials.
    Crosscheck(CrosscheckArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    #[value(name = "E")]
    E,
    #[value(name = "P")]
    P,
    #[value(name = "M")]
    M,
    #[value(name = "N")]
    N,
    Monic,
    Spherical,
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum ModeArg {
    Exact,
    Float,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(clap::Args)]
struct KArgs {
    /// Short-root multiplicity, e.g. `1` or `3/2`.
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    k1: String,
    /// Long-root multiplicity.
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    k2: String,
    #[arg(long, value_enum, default_value = "exact")]
    mode: ModeArg,
}

impl KArgs {
    fn multiplicity(&self) -> Result<Multiplicity, Error> {
        let k1 = parse_rational(&self.k1)?;
        let k2 = parse_rational(&self.k2)?;
        let mode = match self.mode {
            ModeArg::Exact => Mode::Exact,
            ModeArg::Float => Mode::Float,
        };
        Multiplicity::new(k1, k2, 1, mode)
    }
}

#[derive(clap::Args)]
struct ComputeArgs {
    #[arg(long, value_enum)]
    family: FamilyArg,
    #[command(flatten)]
    k: KArgs,
    /// Index `n` for E, P and spherical.
    #[arg(long, allow_hyphen_values = true)]
    n: Option<i64>,
    /// Matrix degree `N` for M, N and monic.
    #[arg(long = "N")]
    big_n: Option<u64>,
    /// Emit every index in `[-range, range]` (or `0..=range` for matrix families).
    #[arg(long)]
    range: Option<u64>,
    /// Root scale; 2 substitutes `z -> z^2` in E and P.
    #[arg(long, default_value_t = 1)]
    scale: i64,
    #[arg(long, allow_hyphen_values = true)]
    alpha: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    beta: Option<String>,
    /// Spherical parameter; the multiplicity becomes `(0, m)`.
    #[arg(long)]
    m: Option<u32>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(clap::Args)]
struct VerifyArgs {
    #[arg(long, default_value = "all")]
    suite: String,
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    k1: String,
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    k2: String,
    /// `n` runs over `[-range, range]`.
    #[arg(long, default_value_t = 8)]
    range: i64,
    /// Largest matrix or shift degree.
    #[arg(long = "N", default_value_t = 6)]
    big_n: u64,
    #[arg(long, default_value = "3/2", allow_hyphen_values = true)]
    alpha: String,
    #[arg(long, default_value = "1/2", allow_hyphen_values = true)]
    beta: String,
    /// Single spherical parameter; all of 1..=5 when absent.
    #[arg(long)]
    m: Option<u32>,
    #[arg(long, default_value_t = 8)]
    degree: u32,
    #[arg(long, default_value_t = 1e-10)]
    tol: f64,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(clap::Args)]
struct CrosscheckArgs {
    #[arg(long, default_value = "1")]
    k1: String,
    #[arg(long, default_value = "1")]
    k2: String,
    #[arg(long, default_value_t = 12)]
    degree: i64,
    #[arg(long, default_value_t = 1e-10)]
    tol: f64,
}

enum Failure {
    Usage(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NonDivisible(_) | Error::DegenerateGram(_) | Error::DecompositionMismatch(_) => {
                Failure::Internal(e.to_string())
            }
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

/// `E(n, k)`: Gram–Schmidt for integer `k`, the triangular eigenfunction otherwise.
struct ESource {
    k: Multiplicity,
    family: Option<NonsymFamily>,
}

impl ESource {
    fn new(k: &Multiplicity) -> Result<Self, Error> {
        let family = if k.is_exact() { Some(NonsymFamily::new(k)?) } else { None };
        Ok(Self { k: k.clone(), family })
    }

    fn e(&mut self, n: i64) -> Result<LaurentPoly, Error> {
        match &mut self.family {
            Some(f) => f.e(n).cloned(),
            None => eigenfunction_e(&self.k, n),
        }
    }

    fn m(&mut self, big_n: u64) -> Result<bc1_jacobi::PolyMat2, Error> {
        match &mut self.family {
            Some(f) => build_m(f, big_n),
            None => {
                let n = big_n as i64;
                let c0 = phi_transport(&gamma(&self.e(-n)?))?;
                let c1 = phi_transport(&gamma(&self.e(n + 1)?))?;
                Ok(bc1_jacobi::PolyMat2::from_cols(c0, c1))
            }
        }
    }
}

fn jacobi_params(args: &ComputeArgs, k: &Multiplicity) -> Result<JacobiParams, Error> {
    match (&args.alpha, &args.beta) {
        (Some(a), Some(b)) => Ok(JacobiParams::new(parse_rational(a)?, parse_rational(b)?)),
        (None, None) => Ok(JacobiParams::from_multiplicity(k)),
        _ => Err(Error::ParameterOutOfRange("--alpha and --beta go together".into())),
    }
}

fn indices(single: Option<i64>, range: Option<u64>, symmetric: bool, flag: &str) -> Result<Vec<i64>, Failure> {
    match (single, range) {
        (Some(n), None) => Ok(vec![n]),
        (None, Some(r)) => {
            let r = r as i64;
            Ok(if symmetric { (-r..=r).collect() } else { (0..=r).collect() })
        }
        (None, None) => Err(Failure::Usage(format!("one of --{flag} or --range is required"))),
        (Some(_), Some(_)) => Err(Failure::Usage(format!("--{flag} and --range are exclusive"))),
    }
}

fn compute(args: &ComputeArgs) -> Result<ExitCode, Failure> {
    if !matches!(args.scale, 1 | 2) {
        return Err(Failure::Usage("--scale must be 1 or 2".into()));
    }
    let k = match args.family {
        FamilyArg::Spherical => {
            let m = args.m.ok_or_else(|| Failure::Usage("--m is required for the spherical family".into()))?;
            if m == 0 {
                return Err(Failure::Usage("--m must be positive".into()));
            }
            Multiplicity::exact(0, m.into())?
        }
        _ => args.k.multiplicity()?,
    };
    let scaled = k.with_scale(args.scale)?;
    let mut records = Vec::new();
    match args.family {
        FamilyArg::E | FamilyArg::P => {
            let mut src = ESource::new(&k)?;
            for n in indices(args.n, args.range, true, "n")? {
                let e = src.e(n)?.rescale(args.scale);
                let family = if matches!(args.family, FamilyArg::E) { Family::E } else { Family::P };
                let rec = PolyRecord::new(family, Some(&scaled)).param("n", n);
                records.push(match family {
                    Family::E => rec.with_laurent(&e),
                    _ => rec.with_vec_laurent(&gamma(&e)),
                });
            }
        }
        FamilyArg::Spherical => {
            let mut family = NonsymFamily::new(&k)?;
            for n in indices(args.n, args.range, true, "n")? {
                let f = spherical_function(&mut family, n)?;
                records.push(
                    PolyRecord::new(Family::Spherical, Some(&k.with_scale(2)?))
                        .param("m", args.m.unwrap_or_default())
                        .param("n", n)
                        .with_vec_laurent(&f),
                );
            }
        }
        FamilyArg::M => {
            let mut src = ESource::new(&k)?;
            for n in indices(args.big_n.map(|v| v as i64), args.range, false, "N")? {
                let m = src.m(n as u64)?;
                records.push(PolyRecord::new(Family::M, Some(&k)).param("N", n).with_polymat(&m));
            }
        }
        FamilyArg::N => {
            let params = jacobi_params(args, &k)?;
            for n in indices(args.big_n.map(|v| v as i64), args.range, false, "N")? {
                let m = build_n_family(&params, n as usize);
                records.push(
                    PolyRecord::new(Family::N, None)
                        .param("alpha", bc1_jacobi::rational::fmt_rational(&params.alpha))
                        .param("beta", bc1_jacobi::rational::fmt_rational(&params.beta))
                        .param("N", n)
                        .with_polymat(&m),
                );
            }
        }
        FamilyArg::Monic => {
            let mut family = NonsymFamily::new(&k)?;
            let params = JacobiParams::from_multiplicity(&k);
            for n in indices(args.big_n.map(|v| v as i64), args.range, false, "N")? {
                let m = monic_from_m(&mut family, n as u64)?;
                if m != monic_n_family(&params, n as usize)? {
                    return Err(Failure::Internal(format!("monic families disagree at N={n}")));
                }
                records.push(PolyRecord::new(Family::Monic, Some(&k)).param("N", n).with_polymat(&m));
            }
        }
    }
    let text = match args.format {
        Format::Json => records_to_json(&records) + "\n",
        Format::Csv => records_to_csv(&records),
    };
    emit(&text, args.out.as_ref())?;
    Ok(ExitCode::SUCCESS)
}

fn emit(text: &str, out: Option<&PathBuf>) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn verify(args: &VerifyArgs) -> Result<ExitCode, Failure> {
    let suite: Suite = args.suite.parse()?;
    let k1 = parse_rational(&args.k1)?;
    let k2 = parse_rational(&args.k2)?;
    let k = Multiplicity::new(k1, k2, 1, Mode::Exact)?;
    if args.range < 0 {
        return Err(Failure::Usage("--range must be nonnegative".into()));
    }
    let ms = match args.m {
        Some(0) => return Err(Failure::Usage("--m must be positive".into())),
        Some(m) => vec![m],
        None => (1..=5).collect(),
    };
    let cfg = SuiteConfig {
        k,
        range: args.range,
        big_n: args.big_n,
        params: JacobiParams::new(parse_rational(&args.alpha)?, parse_rational(&args.beta)?),
        ms,
        degree: args.degree,
        tol: args.tol,
    };
    let report = run_suite(suite, &cfg);
    let mut text = String::new();
    for e in &report.entries {
        text.push_str(&e.to_string());
        text.push('\n');
    }
    let failed = report.failures().count();
    text.push_str(&format!(
        "{} of {} checks hold\n",
        report.entries.len() - failed,
        report.entries.len()
    ));
    emit(&text, args.out.as_ref())?;
    Ok(if failed == 0 { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn run_crosscheck(args: &CrosscheckArgs) -> Result<ExitCode, Failure> {
    let k1: Rational = parse_rational(&args.k1)?;
    let k2: Rational = parse_rational(&args.k2)?;
    if k1 < int(0) || k2 < int(0) || !k1.is_integer() || !k2.is_integer() {
        return Err(Failure::Usage("crosscheck needs nonnegative integer k1, k2".into()));
    }
    let k = Multiplicity::new(k1, k2, 1, Mode::Exact)?;
    let r = crosscheck(&k, args.degree, args.tol)?;
    println!("{}", r.verdict());
    println!("max deviation {:.3e} over {} monomial pairs (tol {:.1e})", r.max_deviation, r.pairs, r.tol);
    Ok(if r.passed() { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Compute(a) => compute(a),
        Command::Verify(a) => verify(a),
        Command::Crosscheck(a) => run_crosscheck(a),
    };
    match result {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(3)
        }
    }
}
