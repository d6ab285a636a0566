//! Parse and run a problem file in-process; defaults to the bundled truncation example.

use gradus::cli::{render_tsv, run_text, RunOptions};

fn main() {
    let path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/examples/problems/truncation.gr").into());
    let text = std::fs::read_to_string(&path).expect("readable problem file");
    match run_text(&text, &RunOptions::default()) {
        Ok(reports) => print!("{}", render_tsv(&reports)),
        Err(e) => eprintln!("{path}: {e}"),
    }
}
