//! `genocchi`: coefficient tables, exact evaluation and identity
//! verification for Genocchi-type polynomial families.

mod render;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::error::ErrorKind;
use clap::{Args, CommandFactory, Parser, Subcommand, ValueEnum};

use genocchi_core::verify::{self, IdentityId, Status, VerifierConfig};
use genocchi_core::{Family, FamilySpec, Rational};

#[derive(Parser, Debug)]
#[command(name = "genocchi", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Emit one row per degree n = 0..=n_max.
    Table(TableArgs),
    /// Evaluate one family member at a rational point.
    Eval(EvalArgs),
    /// Run identity checks and emit one report per identity.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Args, Debug)]
struct FamilyArgs {
    /// classical-genocchi, second-kind-genocchi, second-kind-euler,
    /// gould-hopper, hermite-genocchi or hermite-euler
    #[arg(long, value_parser = parse_family)]
    family: Family,

    /// Power of t attached to y (Gould-Hopper and Hermite-based families).
    #[arg(long)]
    j: Option<u32>,

    /// Order of the kernel.
    #[arg(long)]
    a: Option<u32>,

    /// Number sequence: the e^{xt} factor is omitted.
    #[arg(long)]
    numbers: bool,
}

#[derive(Args, Debug)]
struct TableArgs {
    #[command(flatten)]
    family: FamilyArgs,

    /// Largest degree n.
    #[arg(long = "n-max")]
    n_max: usize,

    #[arg(long, value_enum, default_value = "json")]
    format: Format,

    /// Write to this file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct EvalArgs {
    #[command(flatten)]
    family: FamilyArgs,

    /// Degree.
    #[arg(long)]
    n: usize,

    /// x coordinate, as p/q or an integer.
    #[arg(long, value_parser = parse_rational, default_value = "0", conflicts_with = "numbers", allow_hyphen_values = true)]
    x: Rational,

    /// y coordinate.
    #[arg(long, value_parser = parse_rational, default_value = "0", conflicts_with = "numbers", allow_hyphen_values = true)]
    y: Rational,

    /// Without --format the bare value is printed.
    #[arg(long, value_enum)]
    format: Option<Format>,

    /// Write to this file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// `all` or a comma-separated list of identity names.
    #[arg(long, default_value = "all")]
    identity: String,

    /// Largest degree n checked.
    #[arg(long = "n-max", default_value_t = 24)]
    n_max: usize,

    /// Largest kernel order (alpha in the addition checks).
    #[arg(long = "a-max", default_value_t = 3)]
    a_max: u32,

    /// Largest second kernel order (beta).
    #[arg(long = "b-max", default_value_t = 3)]
    b_max: u32,

    /// Values of j for the Hermite-based checks; each at least 2.
    #[arg(long = "j-set", value_delimiter = ',', default_value = "2,3")]
    j_set: Vec<u32>,

    #[arg(long, value_enum, default_value = "json")]
    format: Format,

    /// Concurrent verification workers.
    #[arg(long, default_value_t = 1)]
    jobs: usize,

    /// Write to this file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse().map_err(|e: genocchi_core::Error| e.to_string())
}

fn parse_rational(s: &str) -> Result<Rational, String> {
    s.parse().map_err(|e: genocchi_core::Error| e.to_string())
}

fn usage_error(kind: ErrorKind, msg: impl std::fmt::Display) -> ! {
    Cli::command().error(kind, msg).exit()
}

impl FamilyArgs {
    fn spec(&self) -> FamilySpec {
        let spec = FamilySpec::new(self.family, self.j, self.a)
            .unwrap_or_else(|e| usage_error(ErrorKind::ArgumentConflict, e));
        if self.numbers && !spec.family.has_numbers() {
            usage_error(
                ErrorKind::ArgumentConflict,
                format!("--numbers is not defined for {}", spec.family),
            );
        }
        if spec.is_degenerate_j() {
            eprintln!("note: j = 1 is outside the range the identities are stated for");
        }
        spec
    }
}

fn open_output(out: &Option<PathBuf>) -> anyhow::Result<Box<dyn Write>> {
    Ok(match out {
        Some(path) => Box::new(BufWriter::new(
            File::create(path).with_context(|| format!("creating {}", path.display()))?,
        )),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    match cli.command {
        Command::Table(args) => {
            let spec = args.family.spec();
            let symbolic = !args.family.numbers;
            let rows = spec.sequence(args.n_max, symbolic)?;
            let mut out = open_output(&args.out)?;
            match args.format {
                Format::Json => render::table_json(&mut out, &spec, symbolic, args.n_max, &rows)?,
                Format::Csv => render::table_csv(&mut out, symbolic, &rows)?,
            }
            out.flush()?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Eval(args) => {
            let spec = args.family.spec();
            let symbolic = !args.family.numbers;
            let member = spec.value(args.n, symbolic)?;
            let value = member.evaluate(&args.x, &args.y);
            let mut out = open_output(&args.out)?;
            let point = render::EvalPoint {
                spec: &spec,
                n: args.n,
                numbers: !symbolic,
                x: &args.x,
                y: &args.y,
                value: &value,
            };
            match args.format {
                None => writeln!(out, "{value}")?,
                Some(Format::Json) => render::eval_json(&mut out, &point)?,
                Some(Format::Csv) => render::eval_csv(&mut out, &point)?,
            }
            out.flush()?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify(args) => {
            let identities = IdentityId::parse_list(&args.identity)
                .unwrap_or_else(|e| usage_error(ErrorKind::InvalidValue, e));
            let config = VerifierConfig {
                n_max: args.n_max,
                a_max: args.a_max,
                b_max: args.b_max,
                j_set: args.j_set,
                identities,
                jobs: args.jobs,
                ..VerifierConfig::default()
            };
            if let Err(e) = config.validate() {
                usage_error(ErrorKind::InvalidValue, e);
            }
            let reports = verify::run_all(&config)?;
            let mut out = open_output(&args.out)?;
            match args.format {
                Format::Json => render::reports_json(&mut out, &reports)?,
                Format::Csv => render::reports_csv(&mut out, &reports)?,
            }
            out.flush()?;
            let failed = reports
                .iter()
                .filter(|r| r.status() == Status::Fail)
                .count();
            eprintln!("{} reports, {} failed", reports.len(), failed);
            Ok(if failed == 0 {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
