//! Runs the solver on the small 4-chromatic graphs that admit no
//! semi-transitive orientation, and on one that does.
//!
//! ```text
//! cargo run --release --example unsat_instances
//! ```

use semitrans::{families, solve, Graph, SolverConfig};

fn main() {
    let instances: Vec<(&str, Graph)> = vec![
        ("grotzsch", families::grotzsch()),
        ("chvatal", families::chvatal()),
        ("chvatal minus 4-5", families::chvatal().delete_edge(4, 5).unwrap()),
        ("kneser83sub16", families::kneser83_sub16()),
        ("C(14;1,3,4,5)", families::circulant(14, &[1, 3, 4, 5]).unwrap()),
        ("C(13;1,5)", families::circulant(13, &[1, 5]).unwrap()),
    ];
    let cfg = SolverConfig::default();
    for (name, g) in &instances {
        let r = solve(g, &cfg);
        let s = r.stats();
        println!(
            "{name:<20} n={:<3} m={:<3} {:<7} nodes={:<5} propagations={:<6} {} ms",
            g.vertex_count(),
            g.edge_count(),
            r.verdict(),
            s.nodes,
            s.propagations,
            s.wall_ms
        );
    }
}
