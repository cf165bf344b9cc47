use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use hyperchrom::commands::{
    analyze_dir, analyze_file, generate, AnalyzeOptions, GenRequest, Outcome,
};
use hyperchrom_core::lab::GeneratorConfig;

#[derive(Parser)]
#[command(
    name = "hyperchrom",
    version,
    about = "Chromatic index analysis for linear hypergraphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze an instance document, or every *.json file in a directory.
    Analyze(AnalyzeArgs),
    /// Print a generated instance document.
    Gen(GenArgs),
}

#[derive(Args)]
struct AnalyzeArgs {
    input: PathBuf,
    /// Write the report here (a directory in batch mode) instead of stdout.
    #[arg(long, value_name = "PATH")]
    json: Option<PathBuf>,
    /// Write DOT files for the two-section and derived hypergraphs.
    #[arg(long, value_name = "DIR")]
    dot: Option<PathBuf>,
    /// Seed for sampling among minimal colorings.
    #[arg(long, value_name = "N")]
    seed: Option<u64>,
    /// Analyze at this vertex instead of the default pivot.
    #[arg(long, value_name = "LABEL")]
    pivot: Option<String>,
    /// Also analyze every other vertex of maximum two-section degree.
    #[arg(long)]
    all_pivots: bool,
    /// Cross-check against brute-force oracles where the instance is small.
    #[arg(long)]
    oracle_check: bool,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct GenArgs {
    #[arg(long)]
    fano: bool,
    #[arg(long, num_args = 2, value_names = ["K", "S"])]
    flower: Option<Vec<usize>>,
    #[arg(long, value_name = "K")]
    helly_positive: Option<usize>,
    #[arg(long, num_args = 5, value_names = ["N", "M", "SMIN", "SMAX", "SEED"])]
    random: Option<Vec<u64>>,
}

impl GenArgs {
    fn request(&self) -> GenRequest {
        if let Some(f) = &self.flower {
            GenRequest::Flower { k: f[0], s: f[1] }
        } else if let Some(k) = self.helly_positive {
            GenRequest::HellyPositive { k }
        } else if let Some(r) = &self.random {
            GenRequest::Random(GeneratorConfig {
                n: r[0] as usize,
                m: r[1] as usize,
                size_min: r[2] as usize,
                size_max: r[3] as usize,
                seed: r[4],
            })
        } else {
            GenRequest::Fano
        }
    }
}

fn analyze(args: AnalyzeArgs) -> Outcome {
    let opts = AnalyzeOptions {
        json: args.json,
        dot: args.dot,
        seed: args.seed,
        pivot: args.pivot,
        all_pivots: args.all_pivots,
        oracle_check: args.oracle_check,
    };
    if args.input.is_dir() {
        return match analyze_dir(&args.input, &opts) {
            Ok(results) => {
                let mut worst = Outcome::Holds;
                for (path, line, outcome) in results {
                    match line {
                        Ok(s) => println!("{s}"),
                        Err(e) => eprintln!("error: {}: {e}", path.display()),
                    }
                    worst = worst.max(outcome);
                }
                worst
            }
            Err(e) => {
                eprintln!("error: {e}");
                Outcome::InputError
            }
        };
    }
    match analyze_file(&args.input, &opts, opts.json.as_deref()) {
        Ok((analysis, stdout)) => {
            if stdout.is_empty() {
                println!("{}", analysis.summary());
            } else {
                print!("{stdout}");
            }
            analysis.outcome()
        }
        Err(e) => {
            eprintln!("error: {e}");
            Outcome::InputError
        }
    }
}

fn main() -> ExitCode {
    let outcome = match Cli::parse().command {
        Command::Analyze(args) => analyze(args),
        Command::Gen(args) => match generate(&args.request()) {
            Ok((doc, note)) => {
                print!("{}", doc.to_json());
                if let Some(note) = note {
                    eprintln!("{note}");
                }
                Outcome::Holds
            }
            Err(e) => {
                eprintln!("error: {e}");
                Outcome::InputError
            }
        },
    };
    ExitCode::from(outcome.exit_code())
}
