use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use ncquo::bench::{BenchConfig, BenchMethod, BenchRing};
use ncquo::{Execution, Refine};
use ncquo_cli::commands::{self, DivideArgs, Method, ShinvArgs, Side};
use ncquo_cli::document::PolyDocument;
use ncquo_cli::{CliError, CliResult};

/// Exact polynomial division over non-commutative coefficient rings.
///
/// Exit codes: 0 success, 1 residual check failed, 2 parse or usage error,
/// 3 algebraic failure (singular leading coefficient, non-monic or
/// non-central divisor).
#[derive(Parser, Debug)]
#[command(name = "ncquo", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Divide polynomial `u` by `v` from a document; prints `q` and `r`.
    Divide {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Side::Right)]
        side: Side,
        #[arg(long, value_enum, default_value_t = Method::Classical)]
        method: Method,
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u8).range(1..=3))]
        refine: u8,
        /// Include the refinement trace (fast method only).
        #[arg(long)]
        trace: bool,
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Whole shifted inverse `x^H quo v` of polynomial `v` from a document.
    Shinv {
        file: PathBuf,
        #[arg(long = "h")]
        h: usize,
        #[arg(long, value_enum, default_value_t = Side::Right)]
        side: Side,
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u8).range(1..=3))]
        refine: u8,
        #[arg(long)]
        trace: bool,
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Operation-counting sweep; prints CSV.
    Bench {
        #[arg(long, value_delimiter = ',', default_values_t = [64usize, 128, 256, 512])]
        degrees: Vec<usize>,
        /// `gfp:P` or `matrix:N:P`.
        #[arg(long, default_value = "gfp:127")]
        ring: BenchRing,
        #[arg(long, default_value_t = 1)]
        repeat: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Comma-separated subset of classical, refine1, refine2, refine3.
        #[arg(
            long,
            value_delimiter = ',',
            default_value = "classical,refine1,refine2,refine3"
        )]
        methods: Vec<BenchMethod>,
        /// Report 0 for every timing so output is reproducible.
        #[arg(long)]
        no_time: bool,
        /// Run instances one at a time.
        #[arg(long)]
        sequential: bool,
    },
}

fn refine(i: u8) -> Refine {
    Refine::from_index(i).expect("range checked by clap")
}

fn emit(text: &str, out: Option<PathBuf>) -> CliResult<()> {
    match out {
        Some(path) => std::fs::write(&path, text).map_err(|e| CliError::Io {
            path: path.display().to_string(),
            message: e.to_string(),
        }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> CliResult<()> {
    match cli.command {
        Command::Divide {
            file,
            side,
            method,
            refine: r,
            trace,
            out,
        } => {
            let doc = PolyDocument::read(&file)?;
            let args = DivideArgs {
                side,
                method,
                refine: refine(r),
                trace,
            };
            emit(&commands::divide(&doc, &args)?.to_json(), out)
        }
        Command::Shinv {
            file,
            h,
            side,
            refine: r,
            trace,
            out,
        } => {
            let doc = PolyDocument::read(&file)?;
            let args = ShinvArgs {
                h,
                side,
                refine: refine(r),
                trace,
            };
            emit(&commands::shinv(&doc, &args)?.to_json(), out)
        }
        Command::Bench {
            degrees,
            ring,
            repeat,
            seed,
            methods,
            no_time,
            sequential,
        } => {
            let cfg = BenchConfig {
                degrees,
                ring,
                repeat,
                seed,
                methods,
                exec: if sequential {
                    Execution::Sequential
                } else {
                    Execution::default()
                },
                timing: !no_time,
            };
            emit(&commands::bench(&cfg)?, None)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("ncquo: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
