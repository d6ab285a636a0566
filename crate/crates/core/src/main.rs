use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use gradus::cli::{exit_code, parse, render_json, render_tsv, run, RunOptions};

#[derive(Parser)]
#[command(name = "gradus", version, about = "Exact graded commutative algebra on problem files")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run every `cmd` line of a problem file.
    Run {
        file: PathBuf,
        /// Emit JSON instead of TSV.
        #[arg(long)]
        json: bool,
        /// Seed for commands that search randomly and give no seed of their own.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Koszul certification slack in degrees.
        #[arg(long, default_value_t = gradus::koszul::DEFAULT_SLACK)]
        window: i64,
    },
}

fn main() -> ExitCode {
    let Cmd::Run { file, json, seed, window } = Cli::parse().command;
    let text = match std::fs::read_to_string(&file) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("{}: {e}", file.display());
            return ExitCode::from(2);
        }
    };
    let problem = match parse(&text) {
        Ok(p) => p,
        Err(e) => {
            eprintln!("{}: {e}", file.display());
            return ExitCode::from(2);
        }
    };
    let reports = run(&problem, &RunOptions { seed, window_slack: window });
    for r in &reports {
        eprintln!("{}\t{:.3}s", r.command, r.elapsed.as_secs_f64());
    }
    print!("{}", if json { render_json(&reports) } else { render_tsv(&reports) });
    ExitCode::from(exit_code(&reports) as u8)
}
