mod common;

use semitrans::families::{self, FamilySpec};
use semitrans::format::{read_edge_list, write_edge_list};
use semitrans::{Girth, Graph};

fn family_matrix() -> Vec<FamilySpec> {
    [
        "cycle:5", "cycle:7", "complete:4", "complete:6", "bipartite:3:3", "bipartite:2:5",
        "mycielski:cycle:5", "mycielski:complete:2", "grotzsch", "chvatal", "kneser:5:2",
        "kneser:8:3", "kneser83sub16", "circulant:13:1,5", "circulant:14:1,3,4,5",
        "circulant:8:4", "toeplitz:13:1,5,8,12", "toeplitz:6:1,2", "toft:5", "toft:7",
    ]
    .iter()
    .map(|s| s.parse().unwrap())
    .collect()
}

#[test]
fn family_instances_are_well_formed() {
    for spec in family_matrix() {
        let g = spec.build().unwrap();
        let n = g.vertex_count();
        for &(u, v) in g.edges() {
            assert!(u < v && v < n, "{spec}");
            assert!(g.adjacent(u, v) && g.adjacent(v, u), "{spec}");
        }
        for u in 0..n {
            assert!(!g.adjacent(u, u));
            for &w in g.neighbors(u) {
                assert!(g.neighbors(w).contains(&u), "{spec}");
            }
        }
        assert_eq!(spec.build().unwrap().edges(), g.edges(), "{spec} is deterministic");
    }
}

#[test]
fn family_specs_round_trip_through_text_and_edge_lists() {
    for spec in family_matrix() {
        let again: FamilySpec = spec.to_string().parse().unwrap();
        assert_eq!(again, spec);
        let g = spec.build().unwrap();
        assert_eq!(read_edge_list(&write_edge_list(&g)).unwrap(), g, "{spec}");
    }
}

#[test]
fn chromatic_number_matches_brute_force() {
    let mut rng = common::semitrans_rng(11);
    let mut graphs: Vec<Graph> = common::catalog();
    for n in 7..=8 {
        for _ in 0..25 {
            graphs.push(common::random_graph(n, 0.5, &mut rng));
        }
    }
    for g in &graphs {
        let chi = g.chromatic_number().unwrap();
        assert_eq!(chi, common::brute_chromatic(g), "{:?}", g.edges());
        let c = g.proper_coloring(chi).unwrap();
        c.validate(g).unwrap();
        if chi > 0 {
            assert!(g.proper_coloring(chi - 1).is_none());
        }
    }
}

#[test]
fn girth_matches_cycle_enumeration() {
    let mut graphs = common::catalog();
    for spec in ["grotzsch", "chvatal", "circulant:12:1,5", "bipartite:3:4", "cycle:11", "toeplitz:12:2,5"] {
        graphs.push(spec.parse::<FamilySpec>().unwrap().build().unwrap());
    }
    let mut rng = common::semitrans_rng(12);
    for n in 8..=12 {
        for _ in 0..8 {
            graphs.push(common::random_graph(n, 0.2, &mut rng));
        }
    }
    for g in &graphs {
        let expected = match common::brute_girth(g) {
            Some(k) => Girth::Finite(k),
            None => Girth::Infinite,
        };
        assert_eq!(g.girth(), expected, "{:?}", g.edges());
        assert_eq!(g.is_forest(), expected == Girth::Infinite);
    }
}

#[test]
fn circulant_equals_symmetric_toeplitz() {
    for n in 3..=20usize {
        let half = n / 2;
        let mut jump_sets: Vec<Vec<usize>> = (1..=half).map(|a| vec![a]).collect();
        for a in 1..=half {
            for b in a + 1..=half {
                jump_sets.push(vec![a, b]);
            }
        }
        for jumps in jump_sets {
            let mut offsets: Vec<usize> = jumps.iter().flat_map(|&a| [a, n - a]).collect();
            offsets.sort();
            offsets.dedup();
            let c = families::circulant(n, &jumps).unwrap();
            let t = families::toeplitz(n, &offsets).unwrap();
            assert_eq!(c.edges(), t.edges(), "n={n} jumps={jumps:?}");
        }
    }
}

#[test]
fn mycielski_of_c5_is_isomorphic_to_grotzsch() {
    let m = families::mycielski(&families::cycle(5).unwrap());
    assert!(common::isomorphic(&m, &families::grotzsch()));
    assert!(!common::isomorphic(&m, &families::chvatal().induced_subgraph(&(0..11).collect::<Vec<_>>())));
}

#[test]
fn kneser_sub16_is_an_induced_subgraph_of_k83() {
    let sub = families::kneser83_sub16();
    assert_eq!((sub.vertex_count(), sub.edge_count()), (16, 36));
    let big = families::kneser(8, 3).unwrap();
    let map = common::embedding(&sub, &big, true).expect("embedding exists");
    for u in 0..16 {
        for v in 0..16 {
            if u != v {
                assert_eq!(sub.adjacent(u, v), big.adjacent(map[u], map[v]));
            }
        }
    }
}

#[test]
fn named_graph_invariants() {
    let g = families::grotzsch();
    assert_eq!(g.girth(), Girth::Finite(4));
    assert_eq!(g.chromatic_number().unwrap(), 4);
    let h = families::chvatal();
    assert!(h.is_triangle_free());
    assert_eq!(h.degree_profile().max, 4);
    assert!(h.degree_profile().is_regular);
    let h56 = h.delete_edge(4, 5).unwrap();
    assert_eq!(h56.edge_count(), 23);
    assert_eq!(h56.chromatic_number().unwrap(), 4);
    let c13 = families::circulant(13, &[1, 5]).unwrap();
    assert_eq!(c13.girth(), Girth::Finite(4));
    assert_eq!(c13.chromatic_number().unwrap(), 4);
    for n in [5, 7, 9] {
        let t = families::toft(n).unwrap();
        assert!(t.is_triangle_free());
        assert_eq!(t.chromatic_number_with_bound(64).unwrap(), 4, "toft({n})");
    }
}
