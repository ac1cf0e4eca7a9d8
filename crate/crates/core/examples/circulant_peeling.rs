//! The drawn orientation of `C(13; 1, 5)`, checked and then peeled down to a
//! tree with sources and sinks that cannot lie on a shortcut.

use semitrans::constructions::{fig4_orientation, FIG4_PEEL_ORDER};
use semitrans::Verdict;

fn main() {
    let o = fig4_orientation();
    let g = o.graph();
    println!("C(13;1,5): {} vertices, {} edges, girth {}", g.vertex_count(), g.edge_count(), g.girth());
    assert_eq!(o.check_semi_transitive(), Verdict::SemiTransitive);
    println!("certificate: {}", o.check_semi_transitive().to_json());

    let peeled = o.peel_in_order(&FIG4_PEEL_ORDER).unwrap().expect("each removal is justified");
    for (v, rule) in &peeled.removed {
        println!("  remove {v:>2} by {rule:?}");
    }
    println!("left with {:?}, a forest", peeled.remaining);

    // the same thing, greedily
    let greedy = o.peel().unwrap();
    println!("greedy order {:?} leaves {:?}", greedy.removed_vertices(), greedy.remaining);
}
