//! Runs the periodicity pipeline on each worked example and prints the
//! reports.
//!
//!     cargo run --example pipeline [NAME...]

use algsubshift::pipeline::{worked_example, PipelineOptions, WORKED_EXAMPLE_NAMES};

fn main() -> algsubshift::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let names: Vec<&str> = if args.is_empty() {
        WORKED_EXAMPLE_NAMES.to_vec()
    } else {
        args.iter().map(String::as_str).collect()
    };
    for name in names {
        let report = worked_example(name)?.run(PipelineOptions::default())?;
        println!("== {name}");
        print!("{report}");
        println!("exit code would be {}", report.verdict.exit_code());
        println!();
    }
    Ok(())
}
