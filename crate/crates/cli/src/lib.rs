//! Command-line front end: `emit`, `verify` and `search`.

use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use g2_core::intertwine::{build_operator, CentralMode};
use g2_core::jacobi::WeightVector;
use g2_core::singvec::{oracle_check, validate_spec, FamilyKind};
use g2_core::verma::brute_force_singular;
use g2_core::weyl::{serialize, Format, Frame};
use g2_core::Rational;

pub mod suites;

pub use suites::{Check, Status, Suite};

/// Environment variable naming a directory for output files when
/// `--output` is not given.
pub const OUTPUT_DIR_ENV: &str = "G2IDO_OUTPUT_DIR";

pub const DEFAULT_SEED: u64 = 2024;

#[derive(Parser, Debug)]
#[command(name = "g2ido", version, about = "Invariant differential operators of the Jacobi algebra G2")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print the intertwining operator of one singular-vector family.
    Emit(EmitArgs),
    /// Run verification suites and print a `check-id status detail` summary.
    Verify(VerifyArgs),
    /// Brute-force singular vectors in one weight space.
    Search(SearchArgs),
}

#[derive(Args, Debug, Clone)]
pub struct SpecArgs {
    /// Family: i, ii, iii, iv or v.
    #[arg(long)]
    pub family: Option<FamilyKind>,
    #[arg(long)]
    pub p: Option<u32>,
    #[arg(long)]
    pub q: Option<u32>,
}

#[derive(Args, Debug)]
pub struct EmitArgs {
    #[command(flatten)]
    pub spec: SpecArgs,
    #[arg(long, default_value = "final")]
    pub frame: Frame,
    /// plain, latex or machine.
    #[arg(long, default_value = "plain")]
    pub format: Format,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FrameChoice {
    Original,
    Final,
    Both,
}

impl FrameChoice {
    pub fn frames(self) -> Vec<Frame> {
        match self {
            FrameChoice::Original => vec![Frame::Original],
            FrameChoice::Final => vec![Frame::Final],
            FrameChoice::Both => Frame::BOTH.to_vec(),
        }
    }
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value = "all")]
    pub suite: Suite,
    #[arg(long, value_enum, default_value = "both")]
    pub frame: FrameChoice,
    #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u32).range(1..))]
    pub max_p: u32,
    #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u32).range(1..))]
    pub max_q: u32,
    /// fixed:<rational> or symbolic.
    #[arg(long, default_value = "fixed:1")]
    pub central: CentralMode,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Check this action table instead of the built-in ones (relations suite).
    #[arg(long)]
    pub table_file: Option<PathBuf>,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct SearchArgs {
    #[command(flatten)]
    pub spec: SpecArgs,
    /// Lowest weight as `L1,L2`.
    #[arg(long)]
    pub lambda: Option<String>,
    /// Weight offset as `mu1,mu2`.
    #[arg(long)]
    pub mu: Option<String>,
    /// Central charge used by the oracle.
    #[arg(long, default_value = "1")]
    pub central: Rational,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

/// Text produced by a command and the process exit code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub text: String,
    pub exit_code: i32,
}

pub fn run(cli: &Cli) -> Result<Outcome> {
    let (outcome, output, name) = match &cli.command {
        Command::Emit(a) => (emit(a)?, a.output.clone(), "emit.txt".to_string()),
        Command::Verify(a) => (verify(a)?, a.output.clone(), format!("verify-{}.txt", a.suite.name())),
        Command::Search(a) => (search(a)?, a.output.clone(), "search.txt".to_string()),
    };
    let target = output.or_else(|| std::env::var_os(OUTPUT_DIR_ENV).map(|d| PathBuf::from(d).join(name)));
    if let Some(path) = target {
        write_file(&path, &outcome.text)?;
    }
    Ok(outcome)
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        std::fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    }
    std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

fn spec_from(a: &SpecArgs) -> Result<g2_core::singvec::SingularVectorSpec> {
    let family = a.family.context("--family is required")?;
    let p = a.p.context("--p is required")?;
    Ok(validate_spec(family, p, a.q)?)
}

pub fn emit(a: &EmitArgs) -> Result<Outcome> {
    let spec = spec_from(&a.spec)?;
    let op = build_operator(&spec, a.frame);
    let mut text = serialize(&op, a.format);
    if !text.ends_with('\n') {
        text.push('\n');
    }
    Ok(Outcome { text, exit_code: 0 })
}

pub fn verify(a: &VerifyArgs) -> Result<Outcome> {
    let checks = suites::run_suite(a)?;
    let text = suites::render(&checks);
    let failed = checks.iter().any(|c| c.status == Status::Fail);
    Ok(Outcome {
        text,
        exit_code: i32::from(failed),
    })
}

fn parse_pair(s: &str, what: &str) -> Result<(Rational, Rational)> {
    let Some((a, b)) = s.split_once(',') else {
        bail!("{what} must be two comma-separated rationals, got `{s}`");
    };
    Ok((a.parse()?, b.parse()?))
}

pub fn search(a: &SearchArgs) -> Result<Outcome> {
    let mut text = String::new();
    if a.spec.family.is_some() {
        if a.lambda.is_some() || a.mu.is_some() {
            bail!("give either --family or --lambda/--mu, not both");
        }
        let spec = spec_from(&a.spec)?;
        let report = oracle_check(&spec, a.seed);
        text.push_str(&format!("family {} shift {}\n", spec.label(), spec.shift));
        for s in &report.samples {
            text.push_str(&format!(
                "lambda {},{}: dimension {}; {}\n",
                s.lambda.0,
                s.lambda.1,
                s.dimension,
                if s.contains_closed_form { "matches closed form" } else { "closed form NOT in null space" }
            ));
        }
        if report.skipped > 0 {
            text.push_str(&format!("skipped {} degenerate samples\n", report.skipped));
        }
        return Ok(Outcome {
            text,
            exit_code: i32::from(!report.pass()),
        });
    }
    let (Some(l), Some(m)) = (&a.lambda, &a.mu) else {
        bail!("search needs --lambda and --mu, or --family and --p");
    };
    let lambda = parse_pair(l, "--lambda")?;
    let (m1, m2) = parse_pair(m, "--mu")?;
    let mu = WeightVector(m1, m2);
    if mu.doubled().is_none() {
        bail!("--mu must lie in the half-integer lattice");
    }
    let ns = brute_force_singular(lambda, &mu, a.central.clone());
    text.push_str(&format!(
        "weight space {} has {} monomials\ndimension {}\n",
        mu,
        ns.basis_monomials.len(),
        ns.dimension()
    ));
    for v in &ns.vectors {
        text.push_str(&format!("{v}\n"));
    }
    Ok(Outcome { text, exit_code: 0 })
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_args<I, T>(args: I) -> Result<Outcome>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = Cli::try_parse_from(args)?;
    run(&cli)
}
