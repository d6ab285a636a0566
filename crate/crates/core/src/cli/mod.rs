//! Problem-file front end: parsing, command dispatch and report rendering.

mod parse;
mod run;

pub use parse::{parse, parse_polynomial, Command, CommandKind, ProblemFile};
pub use run::{exit_code, render_in_n, render_json, render_tsv, run, Field, Report, RunOptions, Status};

/// Parses and runs a problem file, returning the reports.
pub fn run_text(text: &str, opts: &RunOptions) -> crate::Result<Vec<Report>> {
    Ok(run(&parse(text)?, opts))
}
