//! Orientations, acyclicity, shortcut detection and semi-transitivity verdicts.
//!
//! A *shortcut* is a directed path `v0 -> v1 -> ... -> vk` with `k >= 3`, an
//! arc `v0 -> vk`, and some pair `vi, vj` that is not adjacent. An orientation
//! is semi-transitive when it is acyclic and has no shortcut.
//!
//! Two detectors are provided. [`Orientation::find_shortcut`] uses the
//! reachability closure: a shortcut exists iff there is an arc `u -> v` and a
//! non-adjacent pair `x != y` with `u ~> x ~> y ~> v`. [`Orientation::find_shortcut_oracle`]
//! enumerates directed paths one by one and is only meant for cross-checking.

use std::collections::VecDeque;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::bitset::{self, BitMatrix, Ones};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Orientations with at most this many edges have a semi-transitive claim
/// audited by the path-enumeration oracle in [`verify_certificate`].
pub const ORACLE_AUDIT_EDGE_LIMIT: usize = 30;

/// A direction for every edge of a graph.
#[derive(Debug)]
pub struct Orientation {
    graph: Graph,
    // forward[e]: edges()[e].0 -> edges()[e].1
    forward: Vec<bool>,
    out: Vec<Vec<usize>>,
    inc: Vec<Vec<usize>>,
    closure: OnceLock<std::result::Result<ReachClosure, Vec<usize>>>,
}

impl Clone for Orientation {
    fn clone(&self) -> Self {
        Orientation::from_directions(self.graph.clone(), self.forward.clone())
    }
}

impl PartialEq for Orientation {
    fn eq(&self, other: &Self) -> bool {
        self.graph == other.graph && self.forward == other.forward
    }
}

impl Eq for Orientation {}

impl Orientation {
    /// Builds an orientation from an arc list that covers every edge exactly once.
    pub fn new(graph: Graph, arcs: &[(usize, usize)]) -> Result<Self> {
        let mut dir: Vec<Option<bool>> = vec![None; graph.edge_count()];
        for &(u, v) in arcs {
            let e = graph.edge_index(u, v).ok_or(Error::NotAnEdge(u, v))?;
            if dir[e].is_some() {
                let (a, b) = graph.edges()[e];
                return Err(Error::DoubleAssignment(a, b));
            }
            dir[e] = Some(u < v);
        }
        let forward = dir
            .iter()
            .enumerate()
            .map(|(e, d)| {
                let (a, b) = graph.edges()[e];
                d.ok_or(Error::UncoveredEdge(a, b))
            })
            .collect::<Result<Vec<bool>>>()?;
        Ok(Self::from_directions(graph, forward))
    }

    /// `forward[e]` directs edge `e = (a, b)` (with `a < b`) as `a -> b`.
    pub fn from_directions(graph: Graph, forward: Vec<bool>) -> Self {
        assert_eq!(forward.len(), graph.edge_count(), "one direction per edge");
        let n = graph.vertex_count();
        let mut out = vec![Vec::new(); n];
        let mut inc = vec![Vec::new(); n];
        for (&(a, b), &f) in graph.edges().iter().zip(&forward) {
            let (t, h) = if f { (a, b) } else { (b, a) };
            out[t].push(h);
            inc[h].push(t);
        }
        for l in out.iter_mut().chain(inc.iter_mut()) {
            l.sort_unstable();
        }
        Orientation {
            graph,
            forward,
            out,
            inc,
            closure: OnceLock::new(),
        }
    }

    /// Orients every edge from the lower to the higher position in `order`.
    pub fn from_linear_order(graph: Graph, order: &[usize]) -> Self {
        let mut rank = vec![0; graph.vertex_count()];
        for (i, &v) in order.iter().enumerate() {
            rank[v] = i;
        }
        let forward = graph.edges().iter().map(|&(a, b)| rank[a] < rank[b]).collect();
        Self::from_directions(graph, forward)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn directions(&self) -> &[bool] {
        &self.forward
    }

    /// Arcs as `(tail, head)` in edge order.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        self.graph
            .edges()
            .iter()
            .zip(&self.forward)
            .map(|(&(a, b), &f)| if f { (a, b) } else { (b, a) })
            .collect()
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        match self.graph.edge_index(u, v) {
            Some(e) => self.forward[e] == (u < v),
            None => false,
        }
    }

    pub fn out_neighbors(&self, v: usize) -> &[usize] {
        &self.out[v]
    }

    pub fn in_neighbors(&self, v: usize) -> &[usize] {
        &self.inc[v]
    }

    pub fn is_source(&self, v: usize) -> bool {
        self.inc[v].is_empty()
    }

    pub fn is_sink(&self, v: usize) -> bool {
        self.out[v].is_empty()
    }

    /// The same graph with every arc flipped.
    pub fn reversed(&self) -> Orientation {
        Self::from_directions(self.graph.clone(), self.forward.iter().map(|f| !f).collect())
    }

    /// A topological order, or a directed cycle witness.
    pub fn is_acyclic(&self) -> Acyclicity {
        let n = self.graph.vertex_count();
        let mut indeg: Vec<usize> = self.inc.iter().map(Vec::len).collect();
        let mut ready: VecDeque<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut order = Vec::with_capacity(n);
        while let Some(v) = ready.pop_front() {
            order.push(v);
            for &w in &self.out[v] {
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    ready.push_back(w);
                }
            }
        }
        if order.len() == n {
            return Acyclicity::Acyclic(order);
        }
        // every leftover vertex has an in-arc from another leftover vertex;
        // walk backwards until a vertex repeats
        let start = (0..n).find(|&v| indeg[v] > 0).unwrap();
        let mut pos = vec![usize::MAX; n];
        let mut walk = Vec::new();
        let mut v = start;
        while pos[v] == usize::MAX {
            pos[v] = walk.len();
            walk.push(v);
            v = *self.inc[v].iter().find(|&&t| indeg[t] > 0).unwrap();
        }
        let mut cycle: Vec<usize> = walk[pos[v]..].to_vec();
        cycle.reverse();
        let min_at = (0..cycle.len()).min_by_key(|&i| cycle[i]).unwrap();
        cycle.rotate_left(min_at);
        Acyclicity::Cyclic(cycle)
    }

    /// Reflexive forward/backward reachability, computed once and cached.
    pub fn reach_closure(&self) -> Result<&ReachClosure> {
        self.closure
            .get_or_init(|| match self.is_acyclic() {
                Acyclicity::Acyclic(order) => Ok(ReachClosure::compute(self, &order)),
                Acyclicity::Cyclic(c) => Err(c),
            })
            .as_ref()
            .map_err(|_| Error::NotAcyclic)
    }

    /// Fast shortcut detector.
    ///
    /// Arcs are scanned in `(tail, head)` order and candidate pairs in `(x, y)`
    /// order, so the certificate is deterministic.
    pub fn find_shortcut(&self) -> Result<Option<ShortcutCertificate>> {
        let reach = self.reach_closure()?;
        let adj = self.graph.adjacency_matrix();
        let words = reach.desc.words();
        let mut between = vec![0u64; words];
        let mut arcs = self.arcs();
        arcs.sort_unstable();
        for (u, v) in arcs {
            bitset::and_into(&mut between, reach.desc.row(u), reach.anc.row(v));
            for x in Ones::new(&between) {
                let hit = reach
                    .desc
                    .row(x)
                    .iter()
                    .zip(&between)
                    .zip(adj.row(x))
                    .enumerate()
                    .find_map(|(w, ((d, b), a))| {
                        let m = d & b & !a & !(if w == x / 64 { 1u64 << (x % 64) } else { 0 });
                        (m != 0).then(|| w * 64 + m.trailing_zeros() as usize)
                    });
                if let Some(y) = hit {
                    return Ok(Some(self.assemble_certificate(reach, u, x, y, v)));
                }
            }
        }
        Ok(None)
    }

    fn assemble_certificate(&self, reach: &ReachClosure, u: usize, x: usize, y: usize, v: usize) -> ShortcutCertificate {
        let mut path = self.dag_path(reach, u, x);
        let i = path.len() - 1;
        path.extend(self.dag_path(reach, x, y).into_iter().skip(1));
        let j = path.len() - 1;
        path.extend(self.dag_path(reach, y, v).into_iter().skip(1));
        ShortcutCertificate {
            path,
            nonadjacent_pair: (i, j),
        }
    }

    /// A shortest directed path `from ~> to`, ties broken towards smaller labels.
    fn dag_path(&self, reach: &ReachClosure, from: usize, to: usize) -> Vec<usize> {
        let n = self.graph.vertex_count();
        let mut prev = vec![usize::MAX; n];
        let mut queue = VecDeque::from([from]);
        prev[from] = from;
        while let Some(a) = queue.pop_front() {
            if a == to {
                break;
            }
            for &b in &self.out[a] {
                if prev[b] == usize::MAX && reach.reaches(b, to) {
                    prev[b] = a;
                    queue.push_back(b);
                }
            }
        }
        let mut path = vec![to];
        let mut c = to;
        while c != from {
            c = prev[c];
            path.push(c);
        }
        path.reverse();
        path
    }

    /// Reference detector: depth-first enumeration of every directed path.
    ///
    /// Exponential; meant for small instances and cross-checks.
    pub fn find_shortcut_oracle(&self) -> Result<Option<ShortcutCertificate>> {
        if matches!(self.is_acyclic(), Acyclicity::Cyclic(_)) {
            return Err(Error::NotAcyclic);
        }
        let n = self.graph.vertex_count();
        let mut path = Vec::with_capacity(n);
        for s in 0..n {
            path.clear();
            path.push(s);
            if let Some(c) = self.oracle_extend(&mut path, None) {
                return Ok(Some(c));
            }
        }
        Ok(None)
    }

    fn oracle_extend(&self, path: &mut Vec<usize>, pair: Option<(usize, usize)>) -> Option<ShortcutCertificate> {
        let last = *path.last().unwrap();
        for &t in &self.out[last] {
            let p = path.len();
            let new_pair = pair.or_else(|| (0..p).find(|&q| !self.graph.adjacent(path[q], t)).map(|q| (q, p)));
            path.push(t);
            if let Some(nonadjacent_pair) = new_pair.filter(|_| p >= 3 && self.has_arc(path[0], t)) {
                return Some(ShortcutCertificate {
                    path: path.clone(),
                    nonadjacent_pair,
                });
            }
            if let Some(c) = self.oracle_extend(path, new_pair) {
                return Some(c);
            }
            path.pop();
        }
        None
    }

    /// Full verdict; a directed cycle is reported before any shortcut.
    pub fn check_semi_transitive(&self) -> Verdict {
        if let Acyclicity::Cyclic(c) = self.is_acyclic() {
            return Verdict::DirectedCycle(c);
        }
        match self.find_shortcut().expect("acyclic") {
            Some(c) => Verdict::Shortcut(c),
            None => Verdict::SemiTransitive,
        }
    }

    pub fn is_semi_transitive(&self) -> bool {
        self.check_semi_transitive() == Verdict::SemiTransitive
    }

    /// Removes vertices that cannot lie on any shortcut until none is left or
    /// the remaining underlying graph is a forest.
    ///
    /// At each round the smallest vertex removable by the source/sink rule is
    /// taken first, then the smallest removable by the long-path rule. Removed
    /// vertices stay in the vertex set as isolated vertices.
    pub fn peel(&self) -> Result<Peeling> {
        self.reach_closure()?;
        let mut state = PeelState::new(self);
        while !state.remaining_is_forest() {
            let next = state
                .candidates()
                .find_map(|v| state.by_neighbour_rule(v).then_some((v, PeelRule::SourceSinkNeighbours)))
                .or_else(|| state.candidates().find_map(|v| state.by_long_path_rule(v).then_some((v, PeelRule::NoLongPath))));
            match next {
                Some((v, rule)) => state.remove(v, rule),
                None => break,
            }
        }
        Ok(state.finish())
    }

    /// Replays a given removal order, checking each vertex against the peeling rules.
    pub fn peel_in_order(&self, order: &[usize]) -> Result<std::result::Result<Peeling, usize>> {
        self.reach_closure()?;
        let mut state = PeelState::new(self);
        for &v in order {
            if v >= state.alive.len() || !state.alive[v] {
                return Ok(Err(v));
            }
            let rule = if state.by_neighbour_rule(v) {
                PeelRule::SourceSinkNeighbours
            } else if state.by_long_path_rule(v) {
                PeelRule::NoLongPath
            } else {
                return Ok(Err(v));
            };
            state.remove(v, rule);
        }
        Ok(Ok(state.finish()))
    }
}

/// Result of [`Orientation::is_acyclic`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Acyclicity {
    Acyclic(Vec<usize>),
    Cyclic(Vec<usize>),
}

impl Acyclicity {
    pub fn is_acyclic(&self) -> bool {
        matches!(self, Acyclicity::Acyclic(_))
    }
}

/// Reflexive reachability of an acyclic orientation.
#[derive(Clone, Debug)]
pub struct ReachClosure {
    desc: BitMatrix,
    anc: BitMatrix,
}

impl ReachClosure {
    fn compute(o: &Orientation, topo: &[usize]) -> Self {
        let n = o.graph.vertex_count();
        let mut desc = BitMatrix::new(n);
        let mut anc = BitMatrix::new(n);
        for &v in topo.iter().rev() {
            desc.set(v, v);
            for &w in &o.out[v] {
                desc.or_row_into(w, v);
            }
        }
        for &v in topo {
            anc.set(v, v);
            for &t in &o.inc[v] {
                anc.or_row_into(t, v);
            }
        }
        ReachClosure { desc, anc }
    }

    /// True iff a directed path `u ~> v` exists (including `u == v`).
    pub fn reaches(&self, u: usize, v: usize) -> bool {
        self.desc.get(u, v)
    }

    pub fn descendants(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        self.desc.ones(u)
    }

    pub fn ancestors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.anc.ones(v)
    }
}

/// Witness of a shortcut: the long path and the positions of a non-adjacent pair on it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShortcutCertificate {
    pub path: Vec<usize>,
    pub nonadjacent_pair: (usize, usize),
}

impl ShortcutCertificate {
    pub fn shortcut_arc(&self) -> (usize, usize) {
        (self.path[0], *self.path.last().unwrap())
    }

    /// The non-adjacent vertices themselves.
    pub fn pair_vertices(&self) -> (usize, usize) {
        (self.path[self.nonadjacent_pair.0], self.path[self.nonadjacent_pair.1])
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    SemiTransitive,
    DirectedCycle(Vec<usize>),
    Shortcut(ShortcutCertificate),
}

/// Serialized form of a [`Verdict`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateDocument {
    pub status: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cycle: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub path: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub shortcut_arc: Option<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub nonadjacent_pair: Option<[usize; 2]>,
}

impl Verdict {
    pub fn status(&self) -> &'static str {
        match self {
            Verdict::SemiTransitive => "semi-transitive",
            Verdict::DirectedCycle(_) => "cyclic",
            Verdict::Shortcut(_) => "shortcut",
        }
    }

    pub fn to_document(&self) -> CertificateDocument {
        let mut doc = CertificateDocument {
            status: self.status().to_string(),
            cycle: None,
            path: None,
            shortcut_arc: None,
            nonadjacent_pair: None,
        };
        match self {
            Verdict::SemiTransitive => {}
            Verdict::DirectedCycle(c) => doc.cycle = Some(c.clone()),
            Verdict::Shortcut(s) => {
                let (a, b) = s.shortcut_arc();
                let (x, y) = s.pair_vertices();
                doc.path = Some(s.path.clone());
                doc.shortcut_arc = Some([a, b]);
                doc.nonadjacent_pair = Some([x, y]);
            }
        }
        doc
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_document()).expect("serializable")
    }

    /// Rebuilds a verdict; a shortcut's pair is located on its path.
    pub fn from_document(doc: &CertificateDocument) -> Result<Verdict> {
        let bad = |m: &str| Error::Format { line: 0, message: format!("certificate: {m}") };
        match doc.status.as_str() {
            "semi-transitive" => Ok(Verdict::SemiTransitive),
            "cyclic" => Ok(Verdict::DirectedCycle(doc.cycle.clone().ok_or_else(|| bad("missing cycle"))?)),
            "shortcut" => {
                let path = doc.path.clone().ok_or_else(|| bad("missing path"))?;
                let [x, y] = doc.nonadjacent_pair.ok_or_else(|| bad("missing nonadjacent_pair"))?;
                let i = path.iter().position(|&p| p == x).ok_or_else(|| bad("pair not on path"))?;
                let j = path.iter().position(|&p| p == y).ok_or_else(|| bad("pair not on path"))?;
                if let Some([a, b]) = doc.shortcut_arc {
                    if path.first() != Some(&a) || path.last() != Some(&b) {
                        return Err(bad("shortcut arc does not span the path"));
                    }
                }
                Ok(Verdict::Shortcut(ShortcutCertificate {
                    path,
                    nonadjacent_pair: (i.min(j), i.max(j)),
                }))
            }
            other => Err(bad(&format!("unknown status `{other}`"))),
        }
    }

    pub fn from_json(text: &str) -> Result<Verdict> {
        let doc: CertificateDocument = serde_json::from_str(text).map_err(|e| Error::Format {
            line: e.line(),
            message: e.to_string(),
        })?;
        Self::from_document(&doc)
    }
}

/// Independent audit of a verdict against a graph and an orientation.
pub fn verify_certificate(g: &Graph, o: &Orientation, verdict: &Verdict) -> bool {
    if o.graph() != g {
        return false;
    }
    let distinct = |vs: &[usize]| {
        let mut seen = vec![false; g.vertex_count()];
        vs.iter().all(|&v| v < seen.len() && !std::mem::replace(&mut seen[v], true))
    };
    match verdict {
        Verdict::SemiTransitive => {
            if !o.is_acyclic().is_acyclic() {
                return false;
            }
            let found = if g.edge_count() <= ORACLE_AUDIT_EDGE_LIMIT {
                o.find_shortcut_oracle()
            } else {
                o.find_shortcut()
            };
            matches!(found, Ok(None))
        }
        Verdict::DirectedCycle(c) => {
            c.len() >= 3
                && distinct(c)
                && (0..c.len()).all(|i| o.has_arc(c[i], c[(i + 1) % c.len()]))
        }
        Verdict::Shortcut(s) => {
            let p = &s.path;
            let (i, j) = s.nonadjacent_pair;
            p.len() >= 4
                && distinct(p)
                && p.windows(2).all(|w| o.has_arc(w[0], w[1]))
                && o.has_arc(p[0], p[p.len() - 1])
                && i < j
                && j < p.len()
                && !g.adjacent(p[i], p[j])
        }
    }
}

/// Which observation justified removing a vertex during peeling.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum PeelRule {
    /// A source or sink whose neighbours are all sinks, or all sources, once it
    /// is gone; also one with fewer than two live neighbours.
    SourceSinkNeighbours,
    /// A source with no out-neighbour `w` reachable along a path of three or more arcs.
    NoLongPath,
}

#[derive(Clone, Debug)]
pub struct Peeling {
    /// The original vertex set with every arc at a removed vertex dropped.
    pub reduced: Orientation,
    pub removed: Vec<(usize, PeelRule)>,
    pub remaining: Vec<usize>,
}

impl Peeling {
    pub fn removed_vertices(&self) -> Vec<usize> {
        self.removed.iter().map(|&(v, _)| v).collect()
    }
}

struct PeelState<'a> {
    o: &'a Orientation,
    alive: Vec<bool>,
    removed: Vec<(usize, PeelRule)>,
}

impl<'a> PeelState<'a> {
    fn new(o: &'a Orientation) -> Self {
        PeelState {
            o,
            alive: vec![true; o.graph.vertex_count()],
            removed: Vec::new(),
        }
    }

    fn candidates(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.alive.len()).filter(|&v| self.alive[v])
    }

    fn alive_out(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.o.out[v].iter().copied().filter(|&w| self.alive[w])
    }

    fn alive_in(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.o.inc[v].iter().copied().filter(|&w| self.alive[w])
    }

    fn by_neighbour_rule(&self, v: usize) -> bool {
        let source = self.alive_in(v).next().is_none();
        let sink = self.alive_out(v).next().is_none();
        if !source && !sink {
            return false;
        }
        let neighbours: Vec<usize> = self.alive_in(v).chain(self.alive_out(v)).collect();
        // a shortcut through a source or sink uses two of its neighbours
        if neighbours.len() < 2 {
            return true;
        }
        let all_sinks = neighbours.iter().all(|&w| self.alive_out(w).all(|x| x == v));
        let all_sources = neighbours.iter().all(|&w| self.alive_in(w).all(|x| x == v));
        all_sinks || all_sources
    }

    fn by_long_path_rule(&self, v: usize) -> bool {
        if self.alive_in(v).next().is_some() {
            return false;
        }
        // longest path length from v to every vertex, over the alive digraph
        let n = self.alive.len();
        let order = match self.o.is_acyclic() {
            Acyclicity::Acyclic(order) => order,
            Acyclicity::Cyclic(_) => unreachable!("peeling requires an acyclic orientation"),
        };
        let mut longest = vec![None::<usize>; n];
        longest[v] = Some(0);
        for &a in &order {
            if let (true, Some(la)) = (self.alive[a], longest[a]) {
                for b in self.alive_out(a) {
                    longest[b] = Some(longest[b].map_or(la + 1, |lb| lb.max(la + 1)));
                }
            }
        }
        !self.alive_out(v).any(|w| longest[w].is_some_and(|l| l >= 3))
    }

    fn remaining_is_forest(&self) -> bool {
        let n = self.alive.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for &(a, b) in self.o.graph.edges() {
            if self.alive[a] && self.alive[b] {
                let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                if ra == rb {
                    return false;
                }
                parent[ra] = rb;
            }
        }
        true
    }

    fn remove(&mut self, v: usize, rule: PeelRule) {
        self.alive[v] = false;
        self.removed.push((v, rule));
    }

    fn finish(self) -> Peeling {
        let keep: Vec<(usize, usize)> = self
            .o
            .graph
            .edges()
            .iter()
            .copied()
            .filter(|&(a, b)| self.alive[a] && self.alive[b])
            .collect();
        let graph = Graph::from_edges(self.o.graph.vertex_count(), keep.iter().copied()).expect("subgraph");
        let forward = keep
            .iter()
            .map(|&(a, b)| self.o.has_arc(a, b))
            .collect();
        Peeling {
            reduced: Orientation::from_directions(graph, forward),
            remaining: (0..self.alive.len()).filter(|&v| self.alive[v]).collect(),
            removed: self.removed,
        }
    }
}

/// A direction assignment for some of the edges of a graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialOrientation {
    graph: Graph,
    dir: Vec<Option<bool>>,
}

impl PartialOrientation {
    pub fn new(graph: Graph) -> Self {
        let m = graph.edge_count();
        PartialOrientation { graph, dir: vec![None; m] }
    }

    pub fn with_arcs(graph: Graph, arcs: &[(usize, usize)]) -> Result<Self> {
        let mut p = Self::new(graph);
        for &(u, v) in arcs {
            if !p.add_arc(u, v)? {
                return Err(Error::DoubleAssignment(u.min(v), u.max(v)));
            }
        }
        Ok(p)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// Per-edge directions: `Some(true)` for `min -> max`.
    pub fn directions(&self) -> &[Option<bool>] {
        &self.dir
    }

    /// Directs `{u, v}` as `u -> v`. Returns `false` if it already was;
    /// errors if the edge is missing or directed the other way.
    pub fn add_arc(&mut self, u: usize, v: usize) -> Result<bool> {
        let e = self.graph.edge_index(u, v).ok_or(Error::NotAnEdge(u, v))?;
        match self.dir[e] {
            None => {
                self.dir[e] = Some(u < v);
                Ok(true)
            }
            Some(d) if d == (u < v) => Ok(false),
            Some(_) => Err(Error::DoubleAssignment(u.min(v), u.max(v))),
        }
    }

    pub fn set_edge(&mut self, e: usize, forward: bool) {
        self.dir[e] = Some(forward);
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.graph
            .edge_index(u, v)
            .is_some_and(|e| self.dir[e] == Some(u < v))
    }

    pub fn is_assigned(&self, u: usize, v: usize) -> bool {
        self.graph.edge_index(u, v).is_some_and(|e| self.dir[e].is_some())
    }

    pub fn assigned_count(&self) -> usize {
        self.dir.iter().filter(|d| d.is_some()).count()
    }

    pub fn is_complete(&self) -> bool {
        self.dir.iter().all(Option::is_some)
    }

    /// Assigned arcs as `(tail, head)` in edge order.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        self.graph
            .edges()
            .iter()
            .zip(&self.dir)
            .filter_map(|(&(a, b), d)| d.map(|f| if f { (a, b) } else { (b, a) }))
            .collect()
    }

    pub fn to_orientation(&self) -> Option<Orientation> {
        let forward: Option<Vec<bool>> = self.dir.iter().copied().collect();
        Some(Orientation::from_directions(self.graph.clone(), forward?))
    }
}

impl From<&Orientation> for PartialOrientation {
    fn from(o: &Orientation) -> Self {
        PartialOrientation {
            graph: o.graph.clone(),
            dir: o.forward.iter().map(|&f| Some(f)).collect(),
        }
    }
}
