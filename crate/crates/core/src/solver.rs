//! Complete search for semi-transitive orientations, plus the brute-force
//! enumerators used to cross-check it.
//!
//! The search assigns edge directions depth first. After every assignment it
//! maintains the reachability closure of the assigned arcs and propagates:
//!
//! * an arc closing a directed path is a conflict;
//! * an unassigned edge `{p, q}` with `p ~> q` is forced to `p -> q`;
//! * a shortcut made only of assigned arcs is a conflict (every completion keeps it);
//! * on every catalogued cycle of length `m >= 4` whose vertices are not a
//!   clique, `m - 2` edges pointing one way force the other two the opposite
//!   way, and `m - 1` is a conflict.
//!
//! The cycle rule alone is sound but incomplete, so full assignments are
//! always re-checked with [`Orientation::check_semi_transitive`].

use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::bitset::{self, BitMatrix, Ones};
use crate::error::{Error, Result};
use crate::graph::{Coloring, Graph};
use crate::orientation::{Acyclicity, Orientation, PartialOrientation, Verdict};

/// Hard cap on the edge count accepted by the brute-force enumerators.
pub const ENUMERATION_EDGE_CAP: usize = 22;

/// Environment variable overriding [`SolverConfig::node_limit`] in the CLI.
pub const NODE_LIMIT_ENV: &str = "SEMITRANS_NODE_LIMIT";

/// A cycle of the graph listed in traversal order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogCycle {
    pub vertices: Vec<usize>,
    /// `(edge index, forward)` where `forward` means traversing
    /// `vertices[i] -> vertices[i + 1]` goes from the smaller to the larger endpoint.
    pub edges: Vec<(usize, bool)>,
}

impl CatalogCycle {
    /// Reads `vertices` as a closed walk; `None` unless it is a cycle of `g`
    /// with at least four distinct vertices.
    pub fn from_vertices(g: &Graph, vertices: &[usize]) -> Option<CatalogCycle> {
        let m = vertices.len();
        if m < 4 {
            return None;
        }
        let mut seen = vec![false; g.vertex_count()];
        for &v in vertices {
            if v >= seen.len() || std::mem::replace(&mut seen[v], true) {
                return None;
            }
        }
        let edges = (0..m)
            .map(|i| {
                let (a, b) = (vertices[i], vertices[(i + 1) % m]);
                g.edge_index(a, b).map(|e| (e, a < b))
            })
            .collect::<Option<Vec<_>>>()?;
        Some(CatalogCycle {
            vertices: vertices.to_vec(),
            edges,
        })
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn induces_clique(&self, g: &Graph) -> bool {
        let vs = &self.vertices;
        vs.iter()
            .enumerate()
            .all(|(i, &a)| vs[i + 1..].iter().all(|&b| g.adjacent(a, b)))
    }
}

/// Cycles of length `4..=max_len` whose vertex sets are not cliques.
#[derive(Clone, Debug, Default)]
pub struct CycleCatalog {
    pub cycles: Vec<CatalogCycle>,
}

impl CycleCatalog {
    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }
}

/// Every cycle of length `4..=max_len`, once per rotation/reflection class,
/// minus those spanning a clique.
///
/// Each cycle is listed from its smallest vertex, with the second vertex
/// smaller than the last.
pub fn short_cycles(g: &Graph, max_len: usize) -> CycleCatalog {
    let n = g.vertex_count();
    let mut cycles = Vec::new();
    let mut path = Vec::with_capacity(max_len);
    let mut on_path = vec![false; n];
    for s in 0..n {
        path.clear();
        path.push(s);
        on_path[s] = true;
        extend_cycle(g, max_len, &mut path, &mut on_path, &mut cycles);
        on_path[s] = false;
    }
    cycles.retain(|c: &CatalogCycle| !c.induces_clique(g));
    CycleCatalog { cycles }
}

fn extend_cycle(g: &Graph, max_len: usize, path: &mut Vec<usize>, on_path: &mut [bool], out: &mut Vec<CatalogCycle>) {
    let s = path[0];
    let last = *path.last().unwrap();
    for &w in g.neighbors(last) {
        if w == s && path.len() >= 4 && path[1] < last {
            out.push(CatalogCycle::from_vertices(g, path).expect("closed walk"));
        }
        if w > s && !on_path[w] && path.len() < max_len {
            path.push(w);
            on_path[w] = true;
            extend_cycle(g, max_len, path, on_path, out);
            on_path[w] = false;
            path.pop();
        }
    }
}

/// What the cycle rule concludes on one cycle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CycleForce {
    Nothing,
    Contradiction,
    /// `(edge index, forward)` assignments.
    Force(Vec<(usize, bool)>),
}

/// The cycle rule on one cycle, given per-edge directions.
pub(crate) fn cycle_rule(cycle: &CatalogCycle, dir: impl Fn(usize) -> Option<bool>) -> CycleForce {
    let m = cycle.edges.len();
    let mut along = 0;
    let mut against = 0;
    for &(e, fwd) in &cycle.edges {
        match dir(e) {
            Some(d) if d == fwd => along += 1,
            Some(_) => against += 1,
            None => {}
        }
    }
    if along >= m - 1 || against >= m - 1 {
        return CycleForce::Contradiction;
    }
    let mut forced = Vec::new();
    for (count, majority) in [(along, true), (against, false)] {
        if count == m - 2 {
            for &(e, fwd) in &cycle.edges {
                if dir(e).is_none() {
                    // majority == true: the rest must run against the traversal
                    forced.push((e, if majority { !fwd } else { fwd }));
                }
            }
        }
    }
    if forced.is_empty() {
        CycleForce::Nothing
    } else {
        CycleForce::Force(forced)
    }
}

/// The cycle rule applied to a single cycle of a partial orientation, with
/// forced edges reported as `(tail, head)` arcs.
pub fn apply_cycle_rule(p: &PartialOrientation, cycle: &CatalogCycle) -> std::result::Result<Vec<(usize, usize)>, ()> {
    let dirs = p.directions();
    match cycle_rule(cycle, |e| dirs[e]) {
        CycleForce::Nothing => Ok(Vec::new()),
        CycleForce::Contradiction => Err(()),
        CycleForce::Force(list) => Ok(list.into_iter().map(|(e, f)| arc_of(p.graph(), e, f)).collect()),
    }
}

fn arc_of(g: &Graph, e: usize, forward: bool) -> (usize, usize) {
    let (a, b) = g.edges()[e];
    if forward {
        (a, b)
    } else {
        (b, a)
    }
}

/// Outcome of [`lemma2_propagate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Propagation {
    /// The extended orientation, or `None` on contradiction.
    pub result: Option<PartialOrientation>,
    /// Arcs derived before the fixpoint or the contradiction, in derivation order.
    pub derived: Vec<(usize, usize)>,
}

/// Runs the cycle rule over the whole catalog until nothing changes.
pub fn lemma2_propagate(p: &PartialOrientation, catalog: &CycleCatalog) -> Propagation {
    let mut current = p.clone();
    let mut derived = Vec::new();
    loop {
        let mut changed = false;
        for c in &catalog.cycles {
            match apply_cycle_rule(&current, c) {
                Err(()) => return Propagation { result: None, derived },
                Ok(arcs) => {
                    for (u, v) in arcs {
                        if current.add_arc(u, v).is_err() {
                            return Propagation { result: None, derived };
                        }
                        derived.push((u, v));
                        changed = true;
                    }
                }
            }
        }
        if !changed {
            return Propagation {
                result: Some(current),
                derived,
            };
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BranchHeuristic {
    /// First unassigned edge in breadth-first order from vertex 0.
    StaticDegree,
    /// Edge lying on the most cycles that are one assignment away from forcing.
    DynamicMostConstrained,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct SolverConfig {
    pub catalog_max_len: usize,
    pub use_peel: bool,
    pub node_limit: Option<u64>,
    pub branch_heuristic: BranchHeuristic,
    /// Explore only one direction of the first decision edge.
    pub root_symmetry: bool,
    /// Reject partial orientations that already contain a shortcut.
    pub partial_shortcuts: bool,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            catalog_max_len: 5,
            use_peel: false,
            node_limit: None,
            branch_heuristic: BranchHeuristic::DynamicMostConstrained,
            root_symmetry: true,
            partial_shortcuts: true,
        }
    }
}

impl SolverConfig {
    pub fn validate(&self) -> Result<()> {
        if !(4..=7).contains(&self.catalog_max_len) {
            return Err(Error::BadParameters(format!(
                "catalog length must be in 4..=7, got {}",
                self.catalog_max_len
            )));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SolveStats {
    pub nodes: u64,
    pub propagations: u64,
    pub leaf_checks: u64,
    pub wall_ms: u64,
}

#[derive(Clone, Debug)]
pub enum SolveResult {
    Sat(Orientation, SolveStats),
    Unsat(SolveStats),
    /// The node limit was reached before the search finished.
    Unknown(SolveStats),
}

impl SolveResult {
    pub fn is_sat(&self) -> bool {
        matches!(self, SolveResult::Sat(..))
    }

    pub fn is_unsat(&self) -> bool {
        matches!(self, SolveResult::Unsat(_))
    }

    pub fn verdict(&self) -> &'static str {
        match self {
            SolveResult::Sat(..) => "sat",
            SolveResult::Unsat(_) => "unsat",
            SolveResult::Unknown(_) => "unknown",
        }
    }

    pub fn stats(&self) -> &SolveStats {
        match self {
            SolveResult::Sat(_, s) | SolveResult::Unsat(s) | SolveResult::Unknown(s) => s,
        }
    }

    pub fn orientation(&self) -> Option<&Orientation> {
        match self {
            SolveResult::Sat(o, _) => Some(o),
            _ => None,
        }
    }
}

/// Statistics document emitted by the CLI.
#[derive(Clone, Debug, Serialize)]
pub struct StatsDocument<'a> {
    pub verdict: &'static str,
    pub nodes: u64,
    pub propagations: u64,
    pub leaf_checks: u64,
    pub config: &'a SolverConfig,
    /// Wall-clock fields; excluded from byte-for-byte comparisons.
    pub timing: Timing,
}

#[derive(Clone, Debug, Serialize)]
pub struct Timing {
    pub wall_ms: u64,
}

impl SolveResult {
    pub fn stats_document<'a>(&self, config: &'a SolverConfig) -> StatsDocument<'a> {
        let s = self.stats();
        StatsDocument {
            verdict: self.verdict(),
            nodes: s.nodes,
            propagations: s.propagations,
            leaf_checks: s.leaf_checks,
            config,
            timing: Timing { wall_ms: s.wall_ms },
        }
    }
}

/// Decides whether `g` has a semi-transitive orientation.
pub fn solve(g: &Graph, cfg: &SolverConfig) -> SolveResult {
    let start = Instant::now();
    let catalog = short_cycles(g, cfg.catalog_max_len.max(4));
    let mut search = Search::new(g, &catalog, cfg);
    let root = search.initial_state();
    let outcome = search.dfs(root, 0);
    let mut stats = search.stats;
    stats.wall_ms = start.elapsed().as_millis() as u64;
    match outcome {
        Outcome::Sat(o) => {
            assert!(o.is_semi_transitive(), "solver produced an unverified orientation");
            SolveResult::Sat(o, stats)
        }
        Outcome::Unsat => SolveResult::Unsat(stats),
        Outcome::Limit => SolveResult::Unknown(stats),
    }
}

enum Outcome {
    Sat(Orientation),
    Unsat,
    Limit,
}

#[derive(Clone)]
struct State {
    dir: Vec<Option<bool>>,
    assigned: usize,
    desc: BitMatrix,
    anc: BitMatrix,
    out: BitMatrix,
}

struct Search<'a> {
    graph: &'a Graph,
    cfg: &'a SolverConfig,
    catalog: &'a CycleCatalog,
    edge_cycles: Vec<Vec<usize>>,
    edge_id: Vec<u32>,
    nonadj: BitMatrix,
    static_order: Vec<usize>,
    stats: SolveStats,
    scratch: Vec<u64>,
}

impl<'a> Search<'a> {
    fn new(graph: &'a Graph, catalog: &'a CycleCatalog, cfg: &'a SolverConfig) -> Self {
        let n = graph.vertex_count();
        let m = graph.edge_count();
        let mut edge_cycles = vec![Vec::new(); m];
        for (i, c) in catalog.cycles.iter().enumerate() {
            for &(e, _) in &c.edges {
                edge_cycles[e].push(i);
            }
        }
        let mut edge_id = vec![u32::MAX; n * n];
        for (e, &(a, b)) in graph.edges().iter().enumerate() {
            edge_id[a * n + b] = e as u32;
            edge_id[b * n + a] = e as u32;
        }
        let mut nonadj = BitMatrix::new(n);
        for a in 0..n {
            for b in 0..n {
                if a != b && !graph.adjacent(a, b) {
                    nonadj.set(a, b);
                }
            }
        }
        let words = nonadj.words();
        Search {
            graph,
            cfg,
            catalog,
            edge_cycles,
            edge_id,
            nonadj,
            static_order: bfs_edge_order(graph),
            stats: SolveStats::default(),
            scratch: vec![0; words],
        }
    }

    fn initial_state(&self) -> State {
        let n = self.graph.vertex_count();
        let mut desc = BitMatrix::new(n);
        let mut anc = BitMatrix::new(n);
        for v in 0..n {
            desc.set(v, v);
            anc.set(v, v);
        }
        State {
            dir: vec![None; self.graph.edge_count()],
            assigned: 0,
            desc,
            anc,
            out: BitMatrix::new(n),
        }
    }

    fn dfs(&mut self, state: State, depth: usize) -> Outcome {
        if self.cfg.node_limit.is_some_and(|limit| self.stats.nodes >= limit) {
            return Outcome::Limit;
        }
        self.stats.nodes += 1;
        if state.assigned == self.graph.edge_count() {
            return self.leaf(&state);
        }
        let e = self.choose(&state);
        let both = [true, false];
        let dirs: &[bool] = if depth == 0 && self.cfg.root_symmetry { &both[..1] } else { &both };
        for &f in dirs {
            let mut next = state.clone();
            if self.propagate(&mut next, vec![(e, f)]) {
                match self.dfs(next, depth + 1) {
                    Outcome::Unsat => {}
                    other => return other,
                }
            }
        }
        Outcome::Unsat
    }

    fn leaf(&mut self, state: &State) -> Outcome {
        self.stats.leaf_checks += 1;
        let forward = state.dir.iter().map(|d| d.expect("complete")).collect();
        let o = Orientation::from_directions(self.graph.clone(), forward);
        let ok = if self.cfg.use_peel {
            match o.peel() {
                Ok(p) => p.reduced.find_shortcut().expect("acyclic").is_none(),
                Err(_) => false,
            }
        } else {
            o.check_semi_transitive() == Verdict::SemiTransitive
        };
        if ok {
            Outcome::Sat(o)
        } else {
            Outcome::Unsat
        }
    }

    fn choose(&self, state: &State) -> usize {
        let first_free = || *self.static_order.iter().find(|&&e| state.dir[e].is_none()).unwrap();
        match self.cfg.branch_heuristic {
            BranchHeuristic::StaticDegree => first_free(),
            BranchHeuristic::DynamicMostConstrained => {
                let m = self.graph.edge_count();
                let mut score = vec![0u32; m];
                for c in &self.catalog.cycles {
                    let len = c.edges.len();
                    let (mut along, mut against) = (0, 0);
                    for &(e, fwd) in &c.edges {
                        match state.dir[e] {
                            Some(d) if d == fwd => along += 1,
                            Some(_) => against += 1,
                            None => {}
                        }
                    }
                    if along + 3 == len || against + 3 == len {
                        for &(e, _) in &c.edges {
                            if state.dir[e].is_none() {
                                score[e] += 1;
                            }
                        }
                    }
                }
                let best = (0..m)
                    .filter(|&e| state.dir[e].is_none())
                    .max_by_key(|&e| (score[e], usize::MAX - e));
                match best {
                    Some(e) if score[e] > 0 => e,
                    _ => first_free(),
                }
            }
        }
    }

    fn edge(&self, a: usize, b: usize) -> Option<usize> {
        let id = self.edge_id[a * self.graph.vertex_count() + b];
        (id != u32::MAX).then_some(id as usize)
    }

    /// Applies queued assignments and everything they force. `false` on conflict.
    fn propagate(&mut self, state: &mut State, mut queue: Vec<(usize, bool)>) -> bool {
        let mut first = true;
        while let Some((e, f)) = queue.pop() {
            match state.dir[e] {
                Some(d) if d == f => continue,
                Some(_) => return false,
                None => {}
            }
            if !first {
                self.stats.propagations += 1;
            }
            first = false;
            let (a, b) = arc_of(self.graph, e, f);
            if state.desc.get(b, a) {
                return false;
            }
            state.dir[e] = Some(f);
            state.assigned += 1;
            state.out.set(a, b);

            let anc_a: Vec<u64> = state.anc.row(a).to_vec();
            let desc_b: Vec<u64> = state.desc.row(b).to_vec();
            for x in Ones::new(&anc_a) {
                state.desc.or_into_row(x, &desc_b);
            }
            for y in Ones::new(&desc_b) {
                state.anc.or_into_row(y, &anc_a);
            }

            if self.cfg.partial_shortcuts && self.has_new_shortcut(state, &anc_a, &desc_b) {
                return false;
            }

            // p ~> q now holds for p in anc(a), q in desc(b)
            let adj = self.graph.adjacency_matrix();
            for p in Ones::new(&anc_a) {
                bitset::and_into(&mut self.scratch, adj.row(p), &desc_b);
                for q in Ones::new(&self.scratch) {
                    let e2 = self.edge(p, q).expect("adjacent");
                    match state.dir[e2] {
                        None => queue.push((e2, p < q)),
                        Some(d) if d != (p < q) => return false,
                        Some(_) => {}
                    }
                }
            }

            for &ci in &self.edge_cycles[e] {
                match cycle_rule(&self.catalog.cycles[ci], |x| state.dir[x]) {
                    CycleForce::Nothing => {}
                    CycleForce::Contradiction => return false,
                    CycleForce::Force(list) => queue.extend(list),
                }
            }
        }
        true
    }

    /// A shortcut among assigned arcs must use the newest arc, so its
    /// shortcutting arc `u -> v` has `u ~> a` and `b ~> v`.
    fn has_new_shortcut(&mut self, state: &State, anc_a: &[u64], desc_b: &[u64]) -> bool {
        let words = self.scratch.len();
        let mut between = vec![0u64; words];
        let mut heads = vec![0u64; words];
        for u in Ones::new(anc_a) {
            bitset::and_into(&mut heads, state.out.row(u), desc_b);
            for v in Ones::new(&heads) {
                bitset::and_into(&mut between, state.desc.row(u), state.anc.row(v));
                for x in Ones::new(&between) {
                    if bitset::intersects3(state.desc.row(x), &between, self.nonadj.row(x)) {
                        return true;
                    }
                }
            }
        }
        false
    }
}

fn bfs_edge_order(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    let mut taken = vec![false; g.edge_count()];
    let mut order = Vec::with_capacity(g.edge_count());
    for root in 0..n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for &w in g.neighbors(v) {
                let e = g.edge_index(v, w).unwrap();
                if !std::mem::replace(&mut taken[e], true) {
                    order.push(e);
                }
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    order
}

/// Directs every edge from the lower to the higher color.
///
/// Directed paths climb strictly in color, so the longest one has at most
/// `colors - 1` arcs.
pub fn orient_by_coloring(g: &Graph, c: &Coloring) -> Result<Orientation> {
    c.validate(g)?;
    let forward = g
        .edges()
        .iter()
        .map(|&(a, b)| c.color_of[a] < c.color_of[b])
        .collect();
    Ok(Orientation::from_directions(g.clone(), forward))
}

/// Number of arcs on a longest directed path.
pub fn longest_directed_path(o: &Orientation) -> Result<usize> {
    let order = match o.is_acyclic() {
        Acyclicity::Acyclic(order) => order,
        Acyclicity::Cyclic(_) => return Err(Error::NotAcyclic),
    };
    let mut longest = vec![0usize; o.graph().vertex_count()];
    for &v in &order {
        for &w in o.out_neighbors(v) {
            longest[w] = longest[w].max(longest[v] + 1);
        }
    }
    Ok(longest.into_iter().max().unwrap_or(0))
}

/// Every acyclic orientation, in increasing order of the direction bit mask
/// (bit `e` set means edge `e` points from its smaller to its larger endpoint).
pub fn enumerate_acyclic_orientations(g: &Graph) -> Result<AcyclicOrientations<'_>> {
    let m = g.edge_count();
    if m > ENUMERATION_EDGE_CAP {
        return Err(Error::TooLarge {
            edges: m,
            cap: ENUMERATION_EDGE_CAP,
        });
    }
    Ok(AcyclicOrientations {
        graph: g,
        next_mask: 0,
        end: 1u64 << m,
    })
}

pub struct AcyclicOrientations<'a> {
    graph: &'a Graph,
    next_mask: u64,
    end: u64,
}

impl Iterator for AcyclicOrientations<'_> {
    type Item = Orientation;

    fn next(&mut self) -> Option<Orientation> {
        while self.next_mask < self.end {
            let mask = self.next_mask;
            self.next_mask += 1;
            let forward = (0..self.graph.edge_count()).map(|e| mask >> e & 1 == 1).collect();
            let o = Orientation::from_directions(self.graph.clone(), forward);
            if o.is_acyclic().is_acyclic() {
                return Some(o);
            }
        }
        None
    }
}

/// Number of semi-transitive orientations, by exhaustive enumeration and the
/// path-enumeration oracle.
pub fn count_st_orientations(g: &Graph) -> Result<u64> {
    let mut count = 0;
    for o in enumerate_acyclic_orientations(g)? {
        if o.find_shortcut_oracle()?.is_none() {
            count += 1;
        }
    }
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete, cycle, grotzsch};

    #[test]
    fn catalog_examples() {
        assert_eq!(short_cycles(&cycle(4).unwrap(), 5).len(), 1);
        assert!(short_cycles(&complete(4), 4).is_empty());
        // K4 has 4-cycles but every one spans the whole clique; K5 adds 5-cycles, same story
        assert!(short_cycles(&complete(5), 5).is_empty());
        assert_eq!(short_cycles(&cycle(5).unwrap(), 4).len(), 0);
        assert_eq!(short_cycles(&cycle(5).unwrap(), 5).len(), 1);
    }

    #[test]
    fn grotzsch_catalog_holds_the_proof_cycle() {
        let g = grotzsch();
        let cat = short_cycles(&g, 4);
        // drawing labels 1, 2, 3, 2' are vertices 0, 1, 2, 6
        let mut target = vec![0, 1, 2, 6];
        target.sort();
        assert!(cat.cycles.iter().all(|c| c.len() == 4));
        assert!(cat.cycles.iter().any(|c| {
            let mut vs = c.vertices.clone();
            vs.sort();
            vs == target
        }));
    }

    #[test]
    fn cycle_rule_examples() {
        let g = cycle(4).unwrap();
        let cat = short_cycles(&g, 5);
        let p = PartialOrientation::with_arcs(g.clone(), &[(0, 1), (1, 2)]).unwrap();
        let r = lemma2_propagate(&p, &cat);
        let mut derived = r.derived.clone();
        derived.sort();
        assert_eq!(derived, vec![(0, 3), (3, 2)]);
        assert!(r.result.unwrap().has_arc(3, 2));

        let p = PartialOrientation::with_arcs(g.clone(), &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(lemma2_propagate(&p, &cat).result, None);

        let g5 = cycle(5).unwrap();
        let cat5 = short_cycles(&g5, 5);
        let p = PartialOrientation::with_arcs(g5.clone(), &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let r = lemma2_propagate(&p, &cat5);
        let mut derived = r.derived;
        derived.sort();
        assert_eq!(derived, vec![(0, 4), (4, 3)]);
    }

    #[test]
    fn small_solves() {
        let cfg = SolverConfig::default();
        assert!(solve(&cycle(4).unwrap(), &cfg).is_sat());
        assert!(solve(&complete(5), &cfg).is_sat());
        assert!(solve(&Graph::empty(3), &cfg).is_sat());
    }

    #[test]
    fn node_limit_yields_unknown() {
        let cfg = SolverConfig {
            node_limit: Some(1),
            ..SolverConfig::default()
        };
        assert!(matches!(solve(&grotzsch(), &cfg), SolveResult::Unknown(_)));
    }

    #[test]
    fn config_validation() {
        assert!(SolverConfig::default().validate().is_ok());
        let bad = SolverConfig {
            catalog_max_len: 3,
            ..SolverConfig::default()
        };
        assert!(bad.validate().is_err());
    }

    #[test]
    fn coloring_orientation() {
        let c7 = cycle(7).unwrap();
        let col = c7.proper_coloring(3).unwrap();
        let o = orient_by_coloring(&c7, &col).unwrap();
        assert!(o.is_semi_transitive());
        assert!(longest_directed_path(&o).unwrap() <= 2);

        let k4 = complete(4);
        let o = orient_by_coloring(&k4, &Coloring { color_of: vec![0, 1, 2, 3], colors: 4 }).unwrap();
        assert_eq!(longest_directed_path(&o).unwrap(), 3);

        let c4 = cycle(4).unwrap();
        let o = orient_by_coloring(&c4, &c4.proper_coloring(2).unwrap()).unwrap();
        assert!((0..4).all(|v| o.is_source(v) || o.is_sink(v)));
        assert!(o.is_semi_transitive());

        let bad = Coloring { color_of: vec![0, 0, 1, 1], colors: 2 };
        assert_eq!(orient_by_coloring(&c4, &bad).unwrap_err(), Error::ImproperColoring(0, 1));
        assert_eq!(longest_directed_path(&Orientation::from_directions(Graph::empty(1), vec![])).unwrap(), 0);
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_acyclic_orientations(&cycle(4).unwrap()).unwrap().count(), 14);
        assert_eq!(enumerate_acyclic_orientations(&complete(3)).unwrap().count(), 6);
        assert_eq!(count_st_orientations(&cycle(4).unwrap()).unwrap(), 6);
        assert_eq!(count_st_orientations(&complete(3)).unwrap(), 6);
        assert!(matches!(
            enumerate_acyclic_orientations(&complete(8)),
            Err(Error::TooLarge { edges: 28, cap: 22 })
        ));
    }
}
