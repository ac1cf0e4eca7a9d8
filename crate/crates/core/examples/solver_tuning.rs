//! The solver's knobs on one hard instance. A config can also be read from
//! JSON, which is how the acceptance fixture pins the `C(14; 1, 3, 4, 5)` run.

use semitrans::{families, solve, BranchHeuristic, SolverConfig};

fn main() {
    let g = families::circulant(14, &[1, 3, 4, 5]).unwrap();
    for heuristic in [BranchHeuristic::StaticDegree, BranchHeuristic::DynamicMostConstrained] {
        for catalog_max_len in 4..=7 {
            for partial_shortcuts in [true, false] {
                let cfg = SolverConfig {
                    catalog_max_len,
                    branch_heuristic: heuristic,
                    partial_shortcuts,
                    ..SolverConfig::default()
                };
                let r = solve(&g, &cfg);
                let s = r.stats();
                println!(
                    "{heuristic:?} len={catalog_max_len} partial={partial_shortcuts:<5} {} nodes={} leaf_checks={} {} ms",
                    r.verdict(),
                    s.nodes,
                    s.leaf_checks,
                    s.wall_ms
                );
            }
        }
    }

    let cfg: SolverConfig = serde_json::from_str(r#"{"catalog_max_len": 6, "node_limit": 5}"#).unwrap();
    let r = solve(&families::kneser83_sub16(), &cfg);
    println!("{}", serde_json::to_string_pretty(&r.stats_document(&cfg)).unwrap());
}
