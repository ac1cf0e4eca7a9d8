//! The explicit families of semi-transitive orientations.

use semitrans::constructions::{lemma8_orientation, toft_orientation};
use semitrans::format::write_orientation;

fn main() {
    for n in [5, 6, 9, 20] {
        let o = lemma8_orientation(n).unwrap();
        println!("C({n};1,2): {} arcs, semi-transitive {}", o.arcs().len(), o.is_semi_transitive());
    }
    print!("{}", write_orientation(&lemma8_orientation(5).unwrap()));

    for n in [5, 7, 9] {
        let o = toft_orientation(n).unwrap();
        let g = o.graph();
        println!(
            "Toft T_{n}: {} vertices, chromatic number {}, semi-transitive {}",
            g.vertex_count(),
            g.chromatic_number_with_bound(64).unwrap(),
            o.is_semi_transitive()
        );
    }
}
