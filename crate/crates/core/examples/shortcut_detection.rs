//! Finding and checking shortcuts.

use semitrans::families;
use semitrans::{verify_certificate, Orientation, Verdict};

fn main() {
    let c4 = families::cycle(4).unwrap();

    // A directed path 0 -> 1 -> 2 -> 3 plus the arc 0 -> 3, with 0 and 2 non-adjacent.
    let bad = Orientation::new(c4.clone(), &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
    let verdict = bad.check_semi_transitive();
    println!("{}", verdict.to_json());
    if let Verdict::Shortcut(cert) = &verdict {
        println!("shortcutting arc {:?}, missing edge {:?}", cert.shortcut_arc(), cert.pair_vertices());
    }
    assert!(verify_certificate(&c4, &bad, &verdict));

    let good = Orientation::new(c4.clone(), &[(0, 1), (1, 2), (3, 2), (0, 3)]).unwrap();
    println!("{}", good.check_semi_transitive().to_json());

    let cyclic = Orientation::new(c4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
    println!("{}", cyclic.check_semi_transitive().to_json());

    // both detectors over a denser graph
    let k = families::kneser83_sub16();
    let order: Vec<usize> = (0..16).rev().collect();
    let o = Orientation::from_linear_order(k, &order);
    let fast = o.find_shortcut().unwrap();
    let slow = o.find_shortcut_oracle().unwrap();
    println!("kneser83sub16, reversed order: fast {:?}, oracle {:?}", fast.map(|c| c.path), slow.map(|c| c.path));
}
