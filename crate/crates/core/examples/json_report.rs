//! Builds the same JSON report the `stovar analyze --json` command prints.
//!
//! Run with `cargo run --example json_report [path]`.

use stovar::io::{parse_matrix, AnyMatrix, DomainChoice};
use stovar::report::AnalysisReport;
use stovar::{analyze, AnalysisOptions};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/examples/data/worked3x3.csv").to_string());
    let opts = AnalysisOptions { k_report: 50, ..Default::default() };
    let report = match parse_matrix(path.as_ref(), None, DomainChoice::Auto)? {
        AnyMatrix::Rational(m) => AnalysisReport::build(&m, &analyze(&m, &opts)?, &opts)?,
        AnyMatrix::Float(m) => AnalysisReport::build(&m, &analyze(&m, &opts)?, &opts)?,
    };
    println!("{}", serde_json::to_string_pretty(&report)?);
    eprint!("{}", report.summary());
    Ok(())
}
