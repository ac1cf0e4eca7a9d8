mod common;

use rand::Rng;
use semitrans::families::{self, FamilySpec};
use semitrans::solver::{
    apply_cycle_rule, count_st_orientations, enumerate_acyclic_orientations, lemma2_propagate,
    longest_directed_path, orient_by_coloring, short_cycles, CycleCatalog,
};
use semitrans::{solve, BranchHeuristic, Graph, Orientation, PartialOrientation, SolveResult, SolverConfig};

fn configs() -> Vec<SolverConfig> {
    let mut out = Vec::new();
    for heuristic in [BranchHeuristic::StaticDegree, BranchHeuristic::DynamicMostConstrained] {
        for len in [4, 5, 7] {
            for (peel, symmetry, partial) in [(false, true, true), (true, false, true), (false, false, false)] {
                out.push(SolverConfig {
                    catalog_max_len: len,
                    use_peel: peel,
                    branch_heuristic: heuristic,
                    root_symmetry: symmetry,
                    partial_shortcuts: partial,
                    ..SolverConfig::default()
                });
            }
        }
    }
    out
}

fn assert_sat_payload(g: &Graph, r: &SolveResult) {
    if let SolveResult::Sat(o, _) = r {
        assert_eq!(o.graph(), g);
        assert!(o.is_semi_transitive(), "{:?}", o.arcs());
        assert!(o.find_shortcut_oracle().unwrap().is_none());
    }
}

#[test]
fn solver_agrees_with_brute_force_on_the_catalog() {
    let configs = configs();
    let mut unsat = 0;
    for g in common::catalog() {
        let expected = count_st_orientations(&g).unwrap() > 0;
        unsat += !expected as usize;
        for cfg in &configs {
            let r = solve(&g, cfg);
            assert!(!matches!(r, SolveResult::Unknown(_)));
            assert_eq!(r.is_sat(), expected, "{:?} with {cfg:?}", g.edges());
            assert_sat_payload(&g, &r);
        }
    }
    // the wheel with a five-cycle rim
    assert_eq!(unsat, 1);
}

#[test]
fn solver_agrees_with_brute_force_on_random_graphs() {
    let mut rng = common::semitrans_rng(21);
    let configs = configs();
    let mut checked = 0;
    while checked < 40 {
        let n = rng.gen_range(7..=9);
        let g = common::random_graph(n, 0.5, &mut rng);
        if g.edge_count() > 18 {
            continue;
        }
        checked += 1;
        let expected = count_st_orientations(&g).unwrap() > 0;
        for cfg in configs.iter().step_by(3) {
            let r = solve(&g, cfg);
            assert_eq!(r.is_sat(), expected, "{:?} with {cfg:?}", g.edges());
            assert_sat_payload(&g, &r);
        }
    }
}

fn st_completions(g: &Graph) -> Vec<Orientation> {
    enumerate_acyclic_orientations(g)
        .unwrap()
        .filter(|o| o.find_shortcut_oracle().unwrap().is_none())
        .collect()
}

fn extends(o: &Orientation, p: &PartialOrientation) -> bool {
    p.arcs().iter().all(|&(u, v)| o.has_arc(u, v))
}

fn random_partial(g: &Graph, k: usize, rng: &mut impl Rng) -> PartialOrientation {
    let mut p = PartialOrientation::new(g.clone());
    for e in 0..g.edge_count() {
        if rng.gen_range(0..g.edge_count()) < k {
            p.set_edge(e, rng.gen_bool(0.5));
        }
    }
    p
}

#[test]
fn cycle_propagation_never_loses_a_completion() {
    let mut rng = common::semitrans_rng(23);
    let mut graphs: Vec<Graph> = common::catalog().into_iter().filter(|g| g.edge_count() <= 14).collect();
    graphs.push(families::cycle(8).unwrap());
    graphs.push(families::circulant(8, &[1, 4]).unwrap());
    let mut contradictions = 0;
    let mut derived = 0;
    for g in graphs.iter().filter(|g| g.vertex_count() >= 4).step_by(3) {
        let completions = st_completions(g);
        let catalog = short_cycles(g, 7);
        for _ in 0..12 {
            let k = rng.gen_range(1..=g.edge_count().max(2) - 1);
            let p = random_partial(g, k, &mut rng);
            let live: Vec<&Orientation> = completions.iter().filter(|o| extends(o, &p)).collect();
            let prop = lemma2_propagate(&p, &catalog);
            match &prop.result {
                None => {
                    contradictions += 1;
                    assert!(live.is_empty(), "{:?} on {:?}", p.arcs(), g.edges());
                }
                Some(q) => {
                    derived += prop.derived.len();
                    for &(u, v) in &prop.derived {
                        assert!(q.has_arc(u, v));
                    }
                    for o in &live {
                        assert!(extends(o, q), "{:?} forced {:?}", p.arcs(), prop.derived);
                    }
                }
            }
        }
    }
    assert!(contradictions > 0 && derived > 0, "{contradictions} {derived}");
}

#[test]
fn single_cycle_propagation_matches_the_rule() {
    let mut rng = common::semitrans_rng(29);
    let g = families::grotzsch();
    let catalog = short_cycles(&g, 6);
    for cycle in catalog.cycles.iter().take(60) {
        let single = CycleCatalog { cycles: vec![cycle.clone()] };
        for _ in 0..20 {
            let p = random_partial(&g, 12, &mut rng);
            let direct = apply_cycle_rule(&p, cycle);
            let prop = lemma2_propagate(&p, &single);
            match direct {
                Err(()) => assert!(prop.result.is_none()),
                Ok(arcs) => {
                    assert_eq!(prop.derived, arcs);
                    let q = prop.result.expect("one application reaches the fixpoint");
                    assert_eq!(apply_cycle_rule(&q, cycle), Ok(vec![]));
                }
            }
        }
    }
}

#[test]
fn root_symmetry_preserves_every_verdict() {
    let mut rng = common::semitrans_rng(31);
    let mut graphs: Vec<Graph> = common::catalog().into_iter().filter(|g| g.edge_count() <= 18).collect();
    for _ in 0..20 {
        graphs.push(common::random_graph(9, 0.4, &mut rng));
    }
    for g in graphs.iter().filter(|g| g.edge_count() <= 18) {
        let with = SolverConfig::default();
        let without = SolverConfig { root_symmetry: false, ..with.clone() };
        let expected = count_st_orientations(g).unwrap() > 0;
        assert_eq!(solve(g, &with).is_sat(), expected, "{:?}", g.edges());
        assert_eq!(solve(g, &without).is_sat(), expected, "{:?}", g.edges());
    }
}

#[test]
fn named_instances_under_every_config() {
    for (spec, sat) in [
        ("grotzsch", false),
        ("chvatal", false),
        ("circulant:13:1,5", true),
        ("toft:5", true),
        ("circulant:10:1,3", true),
    ] {
        let g = spec.parse::<FamilySpec>().unwrap().build().unwrap();
        for cfg in configs().iter().filter(|c| c.partial_shortcuts) {
            let r = solve(&g, cfg);
            assert_eq!(r.is_sat(), sat, "{spec} with {cfg:?}");
            assert!(r.is_sat() || r.is_unsat());
            assert_sat_payload(&g, &r);
        }
    }
}

#[test]
fn node_limit_yields_unknown() {
    let g = families::chvatal();
    let cfg = SolverConfig { node_limit: Some(3), ..SolverConfig::default() };
    let r = solve(&g, &cfg);
    assert!(matches!(r, SolveResult::Unknown(_)));
    assert_eq!(r.verdict(), "unknown");
    assert_eq!(r.stats().nodes, 3);
}

#[test]
fn coloring_orientations_have_short_paths() {
    for g in common::graphs_up_to_six().iter().filter(|g| g.is_connected()) {
        let chi = g.chromatic_number().unwrap();
        let o = orient_by_coloring(g, &g.proper_coloring(chi).unwrap()).unwrap();
        assert!(longest_directed_path(&o).unwrap() < chi);
        let best = enumerate_acyclic_orientations(g)
            .unwrap()
            .map(|o| longest_directed_path(&o).unwrap())
            .min()
            .unwrap();
        assert_eq!(best + 1, chi, "{:?}", g.edges());
    }
}
