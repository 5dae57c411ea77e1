//! `collatz` — accelerated Collatz map toolkit.
//!
//! Exit codes: 0 success, 2 usage or domain error, 3 computation error
//! (orbit too short, inconclusive probe, non-converged range).

mod output;

use std::fmt;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use collatz_core::construct::{construct_decreasing, construct_increasing, MonotoneSpec};
use collatz_core::orbit::orbit;
use collatz_core::probes::{cycle_probe, growth_census, verify_range};
use collatz_core::rhythm::{class_of, enumerate_class};
use collatz_core::{Error, Nat};

use output::{
    CensusOut, ConstructOut, CycleOut, FigureOut, Format, GrowthPointOut, MemberOut, OrbitOut,
    RhythmOut, StepOut, VerifyOut,
};

#[derive(Parser)]
#[command(
    name = "collatz",
    version,
    about = "Accelerated Collatz map toolkit: orbits, rhythms, growth points, monotone runs, range verification"
)]
struct Cli {
    /// Output format (figure1 is always csv).
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Write output to a file instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Iterate the accelerated map from a start value, printing each step.
    Orbit {
        /// Start value (unbounded decimal).
        #[arg(value_parser = parse_nat)]
        x1: Nat,
        /// Maximum number of steps to take.
        #[arg(long, default_value_t = 1_000_000)]
        steps: u64,
    },
    /// Build a self-verified monotone run with a uniform step size.
    Construct {
        #[arg(long, value_enum)]
        direction: DirectionArg,
        /// Number of steps in the run.
        #[arg(long)]
        n: u64,
        /// Multiplier K for increasing runs (default 1).
        #[arg(long, value_parser = parse_nat)]
        k: Option<Nat>,
        /// Uniform step size for decreasing runs (>= 2).
        #[arg(long)]
        m: Option<u64>,
    },
    /// Emit increasing runs for several multipliers K as a wide csv table.
    Figure1 {
        /// Number of steps per run.
        #[arg(long, default_value_t = 7)]
        n: u64,
        /// Comma-separated multipliers, one output column each.
        #[arg(long = "k-list", value_delimiter = ',', value_parser = parse_nat, default_value = "1,2,3")]
        k_list: Vec<Nat>,
    },
    /// Extract a step-size rhythm and enumerate starts sharing it.
    Rhythm {
        #[arg(value_parser = parse_nat)]
        x1: Nat,
        /// Rhythm length.
        #[arg(long)]
        n: u64,
        /// Number of class members to emit (including the base).
        #[arg(long = "enumerate", default_value_t = 1)]
        count: u64,
    },
    /// Check that every start in a range reaches 1 within a step budget.
    Verify {
        #[arg(long, value_parser = parse_nat)]
        lo: Nat,
        #[arg(long, value_parser = parse_nat)]
        hi: Nat,
        /// Per-start step budget.
        #[arg(long, default_value_t = 100_000)]
        budget: u64,
        /// Worker threads; the output does not depend on this.
        #[arg(long, default_value_t = 1)]
        workers: usize,
    },
    /// Search one orbit for a repeated value (constant-memory cycle detection).
    Cycle {
        #[arg(value_parser = parse_nat)]
        x1: Nat,
        /// Detection budget in steps.
        #[arg(long, default_value_t = 100_000)]
        steps: u64,
    },
    /// List the growth points among the first orbit elements.
    Census {
        #[arg(value_parser = parse_nat)]
        x1: Nat,
        /// Number of orbit elements to examine.
        #[arg(long, default_value_t = 10_000)]
        horizon: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum DirectionArg {
    Inc,
    Dec,
}

fn parse_nat(s: &str) -> Result<Nat, String> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(format!("`{s}` is not an unsigned decimal integer"));
    }
    Nat::parse_bytes(s.as_bytes(), 10).ok_or_else(|| format!("`{s}` is out of range"))
}

enum CliError {
    /// Bad arguments or values outside the domain: exit 2.
    Domain(String),
    /// The computation could not produce the requested result: exit 3.
    Compute(String),
    /// I/O failure writing output: exit 1.
    Io(std::io::Error),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Domain(msg) | CliError::Compute(msg) => f.write_str(msg),
            CliError::Io(err) => write!(f, "{err}"),
        }
    }
}

impl CliError {
    fn exit_code(&self) -> ExitCode {
        match self {
            CliError::Domain(_) => ExitCode::from(2),
            CliError::Compute(_) => ExitCode::from(3),
            CliError::Io(_) => ExitCode::from(1),
        }
    }
}

impl From<Error> for CliError {
    fn from(err: Error) -> Self {
        match err {
            Error::ZeroInput | Error::TooSmall { .. } | Error::InvalidRange { .. } => {
                CliError::Domain(err.to_string())
            }
            Error::OrbitTooShort { .. } | Error::PrefixMismatch { .. } | Error::Verification(_) => {
                CliError::Compute(err.to_string())
            }
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(err: std::io::Error) -> Self {
        CliError::Io(err)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            err.exit_code()
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    let format = cli.format.unwrap_or(Format::Human);
    match cli.command {
        Command::Orbit { x1, steps } => {
            require_positive(&x1, "x1")?;
            let record = orbit(&x1, steps)?;
            let out = OrbitOut {
                start: record.start.to_string(),
                steps: record
                    .steps
                    .iter()
                    .map(|s| StepOut {
                        value: s.value.to_string(),
                        m: s.step_size,
                    })
                    .collect(),
                terminated: record.terminated,
            };
            emit(&cli.out, &out.render(format))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Construct { direction, n, k, m } => {
            let spec = match direction {
                DirectionArg::Inc => {
                    if m.is_some() {
                        return Err(CliError::Domain(
                            "--m applies to --direction dec only (increasing runs have step size 1)".into(),
                        ));
                    }
                    let k = k.unwrap_or_else(|| Nat::from(1u32));
                    construct_increasing(cast_n(n)?, &k)?
                }
                DirectionArg::Dec => {
                    if k.is_some() {
                        return Err(CliError::Domain(
                            "--k applies to --direction inc only".into(),
                        ));
                    }
                    let m = m.ok_or_else(|| {
                        CliError::Domain("--direction dec requires --m (>= 2)".into())
                    })?;
                    construct_decreasing(cast_n(n)?, m)?
                }
            };
            let out = construct_out(&spec);
            emit(&cli.out, &out.render(format))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Figure1 { n, k_list } => {
            if let Some(f) = cli.format {
                if f != Format::Csv {
                    return Err(CliError::Domain("figure1 output is always csv".into()));
                }
            }
            let mut columns = Vec::with_capacity(k_list.len());
            let mut k_labels = Vec::with_capacity(k_list.len());
            for k in &k_list {
                let spec = construct_increasing(cast_n(n)?, k)?;
                columns.push(spec.sequence.iter().map(Nat::to_string).collect());
                k_labels.push(k.to_string());
            }
            let table = FigureOut { k_labels, columns };
            emit(&cli.out, &table.render_csv())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Rhythm { x1, n, count } => {
            require_positive(&x1, "x1")?;
            if count == 0 {
                return Err(CliError::Domain("--enumerate must be at least 1".into()));
            }
            let class = class_of(&x1, cast_n(n)?)?;
            let members = enumerate_class(&class, count as usize);
            let out = RhythmOut {
                base: class.base.to_string(),
                n,
                rhythm: class.rhythm.clone(),
                d: class.modulus.to_string(),
                members: members
                    .iter()
                    .enumerate()
                    .map(|(r, member)| MemberOut {
                        r: r as u64,
                        value: member.value.to_string(),
                        verified: member.verified,
                        rhythm: member.rhythm.clone(),
                    })
                    .collect(),
            };
            emit(&cli.out, &out.render(format))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            lo,
            hi,
            budget,
            workers,
        } => {
            let summary = verify_range(&lo, &hi, budget, workers)?;
            let out = VerifyOut {
                lo: summary.lo.to_string(),
                hi: summary.hi.to_string(),
                all_converged: summary.all_converged,
                max_excursion: summary.max_excursion.to_string(),
                worst_start: summary.worst_start.to_string(),
                total_steps: summary.total_steps,
                first_nonconverged: summary.first_nonconverged.as_ref().map(Nat::to_string),
            };
            emit(&cli.out, &out.render(format))?;
            if summary.all_converged {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(3))
            }
        }
        Command::Cycle { x1, steps } => {
            require_positive(&x1, "x1")?;
            let report = cycle_probe(&x1, steps)?;
            let out = CycleOut {
                start: report.start.to_string(),
                cycle_found: report.cycle_found,
                is_trivial: report.is_trivial,
                steps_used: report.steps_used,
                members: report.cycle_members.iter().map(Nat::to_string).collect(),
            };
            emit(&cli.out, &out.render(format))?;
            if report.cycle_found {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(3))
            }
        }
        Command::Census { x1, horizon } => {
            require_positive(&x1, "x1")?;
            let census = growth_census(&x1, horizon)?;
            let out = CensusOut {
                start: census.start.to_string(),
                horizon: census.horizon,
                growth: census
                    .growth_indices
                    .iter()
                    .zip(census.y_values.iter())
                    .map(|(&index, y)| GrowthPointOut {
                        index,
                        x: (y * 4u32 + 3u32).to_string(),
                        y: y.to_string(),
                    })
                    .collect(),
                distinct_y: census.distinct_y as u64,
            };
            emit(&cli.out, &out.render(format))?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn construct_out(spec: &MonotoneSpec) -> ConstructOut {
    ConstructOut {
        direction: match spec.direction {
            collatz_core::construct::Direction::Increasing => "increasing".into(),
            collatz_core::construct::Direction::Decreasing => "decreasing".into(),
        },
        n: spec.length as u64,
        m: spec.step_size,
        multiplier: spec.multiplier.to_string(),
        start: spec.start.to_string(),
        predicted_final: spec.predicted_final.to_string(),
        actual_final: spec.sequence.last().expect("sequence is nonempty").to_string(),
        verified: true, // constructors fail hard instead of returning unverified runs
        sequence: spec.sequence.iter().map(Nat::to_string).collect(),
    }
}

fn require_positive(x: &Nat, name: &str) -> Result<(), CliError> {
    use num_traits::Zero;
    if x.is_zero() {
        Err(CliError::Domain(format!(
            "{name} must be a positive integer (the map is not defined at 0)"
        )))
    } else {
        Ok(())
    }
}

fn cast_n(n: u64) -> Result<usize, CliError> {
    if n == 0 {
        return Err(CliError::Domain("--n must be at least 1".into()));
    }
    usize::try_from(n).map_err(|_| CliError::Domain("--n is too large".into()))
}

fn emit(target: &Option<PathBuf>, content: &str) -> Result<(), CliError> {
    match target {
        Some(path) => std::fs::write(path, content)?,
        None => std::io::stdout().write_all(content.as_bytes())?,
    }
    Ok(())
}
