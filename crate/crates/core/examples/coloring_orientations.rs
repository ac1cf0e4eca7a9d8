//! Orienting by a proper coloring. With `k` colors every directed path has
//! fewer than `k` arcs; with three colors there is no path long enough to
//! carry a shortcut.

use semitrans::families;
use semitrans::solver::{longest_directed_path, orient_by_coloring};

fn main() {
    for spec in ["cycle:7", "bipartite:3:4", "toeplitz:10:1,2", "grotzsch", "circulant:13:1,5"] {
        let g = spec.parse::<families::FamilySpec>().unwrap().build().unwrap();
        let chi = g.chromatic_number().unwrap();
        let o = orient_by_coloring(&g, &g.proper_coloring(chi).unwrap()).unwrap();
        println!(
            "{spec:<18} chi={chi} longest path={} semi-transitive={}",
            longest_directed_path(&o).unwrap(),
            o.is_semi_transitive()
        );
    }
}
