//! Builds a few graphs from family specs and writes one as DOT.
//!
//! ```text
//! cargo run --example families_dot | tail -n +7 | dot -Tsvg > c13.svg
//! ```

use semitrans::cli::export_dot;
use semitrans::constructions::fig4_orientation;
use semitrans::families::FamilySpec;

fn main() {
    for spec in ["mycielski:cycle:5", "kneser:5:2", "circulant:14:1,3,4,5", "toeplitz:13:1,5,8,12", "toft:5"] {
        let spec: FamilySpec = spec.parse().unwrap();
        let g = spec.build().unwrap();
        let p = g.degree_profile();
        println!("{:<22} n={:<3} m={:<3} degrees {}..{} girth {}", spec.to_string(), g.vertex_count(), g.edge_count(), p.min, p.max, g.girth());
    }
    println!();
    let o = fig4_orientation();
    print!("{}", export_dot(o.graph(), Some(&o)));
}
