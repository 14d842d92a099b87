//! Command-line front end: property-suite runner, worked demos, instance
//! generation and verification, and convolution benchmarks.
//!
//! Exit codes are a stable contract: 0 all checks passed, 1 a verification
//! or correctness failure, 2 a usage or spec error.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use gring::{make_ring, Error, FiniteAbelianGroup, RingHandle, TransformRing};

mod bench;
mod demo;
mod output;
mod verify_cmd;

#[derive(Parser)]
#[command(
    name = "gring",
    version,
    about = "Group-ring convolution algebra toolkit"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run every property suite applicable to the configured ring
    Verify(CommonArgs),
    /// Print a small worked walkthrough (group order at most 8)
    Demo(DemoArgs),
    /// Generate a diagonalization instance and verify the eigen-equations
    Diag(CommonArgs),
    /// Time naive, transform and materialized-circulant convolution paths
    Bench(BenchArgs),
}

#[derive(Args, Clone)]
struct CommonArgs {
    /// Group spec, e.g. Z4 or Z4xZ2
    #[arg(long, default_value = "Z4")]
    group: String,

    /// Ring spec: q, zmod:<m>, f64 or c64
    #[arg(long, default_value = "q")]
    ring: String,

    /// Relative tolerance for the approximate rings
    #[arg(long)]
    tol: Option<f64>,

    #[arg(long, default_value_t = 0)]
    seed: u64,

    /// Random instances per check
    #[arg(long, default_value_t = 200)]
    samples: u64,

    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct DemoArgs {
    #[command(flatten)]
    common: CommonArgs,

    /// Which walkthrough to print
    #[arg(value_enum)]
    which: DemoKind,
}

#[derive(Args)]
struct BenchArgs {
    /// Cyclic orders to measure; each size n runs on Z_n
    #[arg(long, value_delimiter = ',', default_value = "64,256,1024,4096")]
    sizes: Vec<usize>,

    /// Must stay `Zn`: the benchmark varies the cyclic order itself
    #[arg(long, default_value = "Zn")]
    group: String,

    /// Ring spec; only the approximate kinds support the transform path
    #[arg(long, default_value = "f64")]
    ring: String,

    #[arg(long)]
    tol: Option<f64>,

    #[arg(long, default_value_t = 0)]
    seed: u64,

    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum DemoKind {
    /// The four convolution products against their circulant formulations
    Products,
    /// The vector basis and both matrix bases, drawn as grids
    Basis,
    /// A homomorphism, its tensor, and their agreement on a sample matrix
    Iso,
    /// Why the natural basis degenerates: support confinement
    Degenerate,
}

/// Outcome of a subcommand: `pass` drives the exit code.
struct Outcome {
    pass: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Verify(args) => run_verify(&args),
        Command::Demo(args) => run_demo(&args),
        Command::Diag(args) => run_diag(&args),
        Command::Bench(args) => bench::run(&args),
    };
    match result {
        Ok(Outcome { pass: true }) => ExitCode::SUCCESS,
        Ok(Outcome { pass: false }) => ExitCode::from(1),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code_for(&err))
        }
    }
}

fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::InvalidGroupSpec(_)
        | Error::InvalidRingSpec(_)
        | Error::UnsupportedRing(_)
        | Error::TooLargeForDemo(_) => 2,
        _ => 1,
    }
}

fn parse_config(args: &CommonArgs) -> Result<(FiniteAbelianGroup, RingHandle), Error> {
    let group = FiniteAbelianGroup::parse(&args.group)?;
    let ring = make_ring(&args.ring, args.tol)?;
    Ok((group, ring))
}

fn config_json(group: &FiniteAbelianGroup, args: &CommonArgs, ring: &RingHandle) -> Value {
    json!({
        "group": group.to_string(),
        "ring": ring.spec_name(),
        "tolerance": args.tol.unwrap_or(gring::DEFAULT_TOLERANCE),
        "seed": args.seed,
        "samples": args.samples,
        "rng": gring::RNG_SCHEME,
    })
}

fn run_verify(args: &CommonArgs) -> Result<Outcome, Error> {
    let (group, ring) = parse_config(args)?;
    let suites = match &ring {
        RingHandle::Rational(r) => verify_cmd::exact_suites(&group, r, args.samples, args.seed),
        RingHandle::Mod(r) => verify_cmd::exact_suites(&group, r, args.samples, args.seed),
        RingHandle::Real(r) => verify_cmd::transform_suites(&group, r, args.samples, args.seed),
        RingHandle::Complex(r) => verify_cmd::transform_suites(&group, r, args.samples, args.seed),
    };
    let pass = suites.iter().all(|s| s.pass);
    output::emit_verify(
        args.format,
        &config_json(&group, args, &ring),
        &suites,
        pass,
    );
    Ok(Outcome { pass })
}

fn run_demo(args: &DemoArgs) -> Result<Outcome, Error> {
    let (group, ring) = parse_config(&args.common)?;
    if group.order() > 8 {
        return Err(Error::TooLargeForDemo(group.order()));
    }
    let seed = args.common.seed;
    match &ring {
        RingHandle::Rational(r) => demo::run(args.which, &group, r, seed),
        RingHandle::Mod(r) => demo::run(args.which, &group, r, seed),
        RingHandle::Real(r) => demo::run(args.which, &group, r, seed),
        RingHandle::Complex(r) => demo::run(args.which, &group, r, seed),
    }
}

fn run_diag(args: &CommonArgs) -> Result<Outcome, Error> {
    let (group, ring) = parse_config(args)?;
    match &ring {
        RingHandle::Real(r) => diag_with(args, &ring, &group, r),
        RingHandle::Complex(r) => diag_with(args, &ring, &group, r),
        other => Err(Error::UnsupportedRing(format!(
            "diag needs an approximate ring for instance generation; got {} (try --ring f64)",
            other.spec_name()
        ))),
    }
}

fn diag_with<R: TransformRing>(
    args: &CommonArgs,
    handle: &RingHandle,
    group: &FiniteAbelianGroup,
    ring: &R,
) -> Result<Outcome, Error> {
    let (t, x, l) = gring::generate_diag_instance(group, ring, args.seed)?;
    let report = gring::verify_diagonalization(&t, &x, &l)?;
    let pass = report.hypothesis_residual <= gring::DIAG_HYPOTHESIS_TOLERANCE
        && report
            .checks
            .iter()
            .all(|c| c.eigen_residual <= gring::DIAG_EIGEN_TOLERANCE);
    output::emit_diag(
        args.format,
        &config_json(group, args, handle),
        &report,
        pass,
    );
    Ok(Outcome { pass })
}
