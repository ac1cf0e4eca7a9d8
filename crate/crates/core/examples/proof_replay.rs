//! Replays the shipped hand proofs, or a script given on the command line.
//!
//! ```text
//! cargo run --example proof_replay
//! cargo run --example proof_replay -- crates/core/scripts/grotzsch.proof
//! ```

use semitrans::proofscript::{self, CHVATAL_SCRIPT, GROTZSCH_SCRIPT};

fn main() {
    let texts: Vec<String> = match std::env::args().nth(1) {
        Some(path) => vec![std::fs::read_to_string(path).expect("readable script")],
        None => vec![GROTZSCH_SCRIPT.to_string(), CHVATAL_SCRIPT.to_string()],
    };
    for text in texts {
        let script = proofscript::parse(&text).unwrap();
        match proofscript::replay(&script) {
            Ok(report) => {
                println!("{}: {} copies, closed: {}", report.graph, report.copies.len(), report.all_closed);
                for c in &report.copies {
                    println!("  {:<3} {:?}", c.name, c.outcome);
                }
                for a in &report.assumed {
                    println!("  assumed {} in {} ({})", a.arc, a.copy, a.note);
                }
            }
            Err(e) => println!("{e}"),
        }
    }
}
