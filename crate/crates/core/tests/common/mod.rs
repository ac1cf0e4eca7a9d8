#![allow(dead_code)]

use std::collections::HashSet;
use std::sync::OnceLock;

use rand::seq::SliceRandom;
use rand::Rng;
use semitrans::families;
use semitrans::{Graph, Orientation};

fn all_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                go(cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// One representative of every isomorphism class of graphs on exactly `n`
/// vertices (`n <= 6`), found by minimising the edge mask over all relabellings.
pub fn graphs_on(n: usize) -> Vec<Graph> {
    assert!(n <= 6);
    let pairs = all_pairs(n);
    let index = |u: usize, v: usize| pairs.iter().position(|&p| p == (u.min(v), u.max(v))).unwrap();
    let perms = permutations(n);
    let images: Vec<Vec<usize>> = perms
        .iter()
        .map(|p| pairs.iter().map(|&(u, v)| index(p[u], p[v])).collect())
        .collect();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for mask in 0u32..(1 << pairs.len()) {
        let canon = images
            .iter()
            .map(|img| {
                (0..pairs.len())
                    .filter(|&e| mask >> e & 1 == 1)
                    .fold(0u32, |acc, e| acc | 1 << img[e])
            })
            .min()
            .unwrap();
        if seen.insert(canon) {
            let edges = (0..pairs.len()).filter(|&e| canon >> e & 1 == 1).map(|e| pairs[e]);
            out.push(Graph::from_edges(n, edges).unwrap());
        }
    }
    out
}

/// All graphs on 1..=6 vertices up to isomorphism (156 on six vertices).
pub fn graphs_up_to_six() -> &'static [Graph] {
    static CACHE: OnceLock<Vec<Graph>> = OnceLock::new();
    CACHE.get_or_init(|| (1..=6).flat_map(graphs_on).collect())
}

/// A fixed sample of 7-vertex graphs.
pub fn seven_vertex_graphs() -> Vec<Graph> {
    let wheel = {
        let mut e: Vec<(usize, usize)> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
        e.extend((0..6).map(|i| (i, 6)));
        Graph::from_edges(7, e).unwrap()
    };
    let complement_c7 = {
        let c7 = families::cycle(7).unwrap();
        let e = all_pairs(7).into_iter().filter(|&(u, v)| !c7.adjacent(u, v));
        Graph::from_edges(7, e).unwrap()
    };
    let mut out = vec![
        families::cycle(7).unwrap(),
        families::complete(7),
        families::complete_bipartite(3, 4),
        families::circulant(7, &[1, 2]).unwrap(),
        families::circulant(7, &[1, 3]).unwrap(),
        wheel,
        complement_c7,
    ];
    let mut rng = semitrans_rng(7);
    for _ in 0..12 {
        let e: Vec<(usize, usize)> = all_pairs(7).into_iter().filter(|_| rng.gen_bool(0.45)).collect();
        out.push(Graph::from_edges(7, e).unwrap());
    }
    out
}

/// The small-graph test catalog: every graph on at most six vertices, plus
/// the seven-vertex sample.
pub fn catalog() -> Vec<Graph> {
    let mut out = graphs_up_to_six().to_vec();
    out.extend(seven_vertex_graphs());
    out
}

pub fn semitrans_rng(seed: u64) -> rand_chacha::ChaCha8Rng {
    use rand::SeedableRng;
    rand_chacha::ChaCha8Rng::seed_from_u64(seed)
}

/// An acyclic orientation from a uniformly random linear order.
pub fn random_acyclic(g: &Graph, rng: &mut impl Rng) -> Orientation {
    let mut order: Vec<usize> = (0..g.vertex_count()).collect();
    order.shuffle(rng);
    Orientation::from_linear_order(g.clone(), &order)
}

/// Random graph with each pair present with probability `p`.
pub fn random_graph(n: usize, p: f64, rng: &mut impl Rng) -> Graph {
    let e: Vec<(usize, usize)> = all_pairs(n).into_iter().filter(|_| rng.gen_bool(p)).collect();
    Graph::from_edges(n, e).unwrap()
}

/// Chromatic number by trying every assignment of `k` colors, `k = 1, 2, ..`.
pub fn brute_chromatic(g: &Graph) -> usize {
    let n = g.vertex_count();
    if n == 0 {
        return 0;
    }
    for k in 1..=n {
        let total = k.pow(n as u32);
        for code in 0..total {
            let mut colors = vec![0; n];
            let mut c = code;
            for slot in colors.iter_mut() {
                *slot = c % k;
                c /= k;
            }
            if g.edges().iter().all(|&(u, v)| colors[u] != colors[v]) {
                return k;
            }
        }
    }
    unreachable!()
}

/// Length of a shortest cycle, by enumerating every simple cycle.
pub fn brute_girth(g: &Graph) -> Option<usize> {
    fn walk(g: &Graph, start: usize, v: usize, len: usize, on: &mut [bool], best: &mut Option<usize>) {
        for &w in g.neighbors(v) {
            if w == start && len >= 3 {
                *best = Some(best.map_or(len, |b| b.min(len)));
            } else if w > start && !on[w] {
                on[w] = true;
                walk(g, start, w, len + 1, on, best);
                on[w] = false;
            }
        }
    }
    let mut best = None;
    for s in 0..g.vertex_count() {
        let mut on = vec![false; g.vertex_count()];
        on[s] = true;
        walk(g, s, s, 1, &mut on, &mut best);
    }
    best
}

/// An injective map from `small` into `big` preserving adjacency and, when
/// `induced`, non-adjacency. Plain backtracking.
pub fn embedding(small: &Graph, big: &Graph, induced: bool) -> Option<Vec<usize>> {
    fn go(small: &Graph, big: &Graph, induced: bool, map: &mut Vec<usize>, used: &mut [bool]) -> bool {
        let i = map.len();
        if i == small.vertex_count() {
            return true;
        }
        for c in 0..big.vertex_count() {
            if used[c] || big.degree(c) < small.degree(i) {
                continue;
            }
            let consistent = (0..i).all(|j| {
                let a = small.adjacent(i, j);
                let b = big.adjacent(c, map[j]);
                if induced {
                    a == b
                } else {
                    !a || b
                }
            });
            if consistent {
                used[c] = true;
                map.push(c);
                if go(small, big, induced, map, used) {
                    return true;
                }
                map.pop();
                used[c] = false;
            }
        }
        false
    }
    let mut map = Vec::new();
    let mut used = vec![false; big.vertex_count()];
    go(small, big, induced, &mut map, &mut used).then_some(map)
}

pub fn isomorphic(a: &Graph, b: &Graph) -> bool {
    a.vertex_count() == b.vertex_count() && a.edge_count() == b.edge_count() && embedding(a, b, true).is_some()
}
