//! Undirected simple graphs and the structural queries used throughout the
//! crate: girth, triangle-freeness, degree profile and exact coloring.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use crate::bitset::BitMatrix;
use crate::error::{Error, Result};

/// Vertex count above which [`chromatic_number`] refuses to run an exact search.
pub const DEFAULT_CHROMATIC_BOUND: usize = 32;

/// An undirected simple graph on vertices `0..vertex_count`.
///
/// Edges are stored once, as `(min, max)` pairs in ascending order; the
/// position of an edge in [`Graph::edges`] is its edge index.
#[derive(Clone)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
    matrix: BitMatrix,
}

impl Graph {
    /// Builds a graph, rejecting loops, duplicates and out-of-range endpoints.
    pub fn from_edges(vertex_count: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            for w in [u, v] {
                if w >= vertex_count {
                    return Err(Error::VertexOutOfRange { vertex: w, vertex_count });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            let e = (u.min(v), u.max(v));
            if !set.insert(e) {
                return Err(Error::DuplicateEdge(e.0, e.1));
            }
        }
        Ok(Self::build(vertex_count, set.into_iter().collect()))
    }

    /// Like [`Graph::from_edges`] but silently merges duplicate edges.
    pub(crate) fn from_edge_set(vertex_count: usize, edges: BTreeSet<(usize, usize)>) -> Self {
        debug_assert!(edges.iter().all(|&(u, v)| u < v && v < vertex_count));
        Self::build(vertex_count, edges.into_iter().collect())
    }

    fn build(vertex_count: usize, edges: Vec<(usize, usize)>) -> Self {
        let mut adj = vec![Vec::new(); vertex_count];
        let mut matrix = BitMatrix::new(vertex_count);
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
            matrix.set(u, v);
            matrix.set(v, u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { vertex_count, edges, adj, matrix }
    }

    pub fn empty(vertex_count: usize) -> Self {
        Self::build(vertex_count, Vec::new())
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(min, max)` pairs, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        u < self.vertex_count && v < self.vertex_count && self.matrix.get(u, v)
    }

    /// Adjacency rows as bit sets.
    pub(crate) fn adjacency_matrix(&self) -> &BitMatrix {
        &self.matrix
    }

    /// Index of edge `{u, v}` in [`Graph::edges`].
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).ok()
    }

    /// Removes edge `{u, v}`; the vertex set is unchanged.
    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Graph> {
        let idx = self.edge_index(u, v).ok_or(Error::MissingEdge(u, v))?;
        let mut edges = self.edges.clone();
        edges.remove(idx);
        Ok(Self::build(self.vertex_count, edges))
    }

    /// The subgraph induced by `vertices`, relabelled `0..vertices.len()` in the given order.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Graph {
        let mut edges = BTreeSet::new();
        for (i, &a) in vertices.iter().enumerate() {
            for (j, &b) in vertices.iter().enumerate().skip(i + 1) {
                if self.adjacent(a, b) {
                    edges.insert((i, j));
                }
            }
        }
        Self::from_edge_set(vertices.len(), edges)
    }

    pub fn is_connected(&self) -> bool {
        if self.vertex_count == 0 {
            return true;
        }
        let mut seen = vec![false; self.vertex_count];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in &self.adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.vertex_count
    }

    /// True when the graph contains no cycle.
    pub fn is_forest(&self) -> bool {
        self.girth() == Girth::Infinite
    }

    /// Length of a shortest cycle.
    ///
    /// A BFS from every root; a non-tree edge `{x, y}` met during the BFS from
    /// `r` closes a closed walk of length `d(x) + d(y) + 1` through `r`, and the
    /// minimum over all roots is attained by a genuine shortest cycle.
    pub fn girth(&self) -> Girth {
        let n = self.vertex_count;
        let mut best = usize::MAX;
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        let mut queue = VecDeque::new();
        for root in 0..n {
            dist.fill(usize::MAX);
            parent.fill(usize::MAX);
            dist[root] = 0;
            queue.clear();
            queue.push_back(root);
            while let Some(x) = queue.pop_front() {
                if 2 * dist[x] + 1 >= best {
                    break;
                }
                for &y in &self.adj[x] {
                    if dist[y] == usize::MAX {
                        dist[y] = dist[x] + 1;
                        parent[y] = x;
                        queue.push_back(y);
                    } else if parent[x] != y {
                        best = best.min(dist[x] + dist[y] + 1);
                    }
                }
            }
        }
        if best == usize::MAX {
            Girth::Infinite
        } else {
            Girth::Finite(best)
        }
    }

    pub fn is_triangle_free(&self) -> bool {
        !self.edges.iter().any(|&(u, v)| {
            self.matrix
                .row(u)
                .iter()
                .zip(self.matrix.row(v))
                .any(|(a, b)| a & b != 0)
        })
    }

    pub fn degree_profile(&self) -> DegreeProfile {
        let min = self.adj.iter().map(Vec::len).min().unwrap_or(0);
        let max = self.adj.iter().map(Vec::len).max().unwrap_or(0);
        DegreeProfile {
            min,
            max,
            is_regular: min == max,
        }
    }

    /// Exact chromatic number, refusing graphs above [`DEFAULT_CHROMATIC_BOUND`] vertices.
    pub fn chromatic_number(&self) -> Result<usize> {
        self.chromatic_number_with_bound(DEFAULT_CHROMATIC_BOUND)
    }

    /// Exact chromatic number; `bound` caps the vertex count.
    pub fn chromatic_number_with_bound(&self, bound: usize) -> Result<usize> {
        if self.vertex_count > bound {
            return Err(Error::BoundExceeded {
                vertex_count: self.vertex_count,
                bound,
            });
        }
        if self.vertex_count == 0 {
            return Ok(0);
        }
        let lower = self.greedy_clique_size();
        let upper = self.dsatur_greedy().colors;
        for k in lower..upper {
            if self.proper_coloring(k).is_some() {
                return Ok(k);
            }
        }
        Ok(upper)
    }

    /// A proper coloring with at most `k` colors, if one exists.
    ///
    /// Backtracking in saturation-degree order; colors are introduced in
    /// increasing order so interchangeable colors are never retried.
    pub fn proper_coloring(&self, k: usize) -> Option<Coloring> {
        let n = self.vertex_count;
        if n == 0 {
            return Some(Coloring { color_of: Vec::new(), colors: k });
        }
        if k == 0 {
            return None;
        }
        let mut search = ColorSearch {
            graph: self,
            k,
            color: vec![usize::MAX; n],
            forbid: vec![0u32; n * k],
            saturation: vec![0; n],
        };
        if search.extend(0, 0) {
            Some(Coloring {
                color_of: search.color,
                colors: k,
            })
        } else {
            None
        }
    }

    fn greedy_clique_size(&self) -> usize {
        let mut best = 0;
        for start in 0..self.vertex_count {
            let mut clique = vec![start];
            let mut candidates: Vec<usize> = self.adj[start].clone();
            while !candidates.is_empty() {
                let &pick = candidates
                    .iter()
                    .max_by_key(|&&c| (candidates.iter().filter(|&&d| self.adjacent(c, d)).count(), usize::MAX - c))
                    .unwrap();
                clique.push(pick);
                candidates.retain(|&c| c != pick && self.adjacent(c, pick));
            }
            best = best.max(clique.len());
        }
        best
    }

    fn dsatur_greedy(&self) -> Coloring {
        let n = self.vertex_count;
        let mut color = vec![usize::MAX; n];
        let mut neighbor_colors: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
        let mut colors = 0;
        for _ in 0..n {
            let v = (0..n)
                .filter(|&v| color[v] == usize::MAX)
                .max_by_key(|&v| (neighbor_colors[v].len(), self.degree(v), usize::MAX - v))
                .unwrap();
            let c = (0..).find(|c| !neighbor_colors[v].contains(c)).unwrap();
            color[v] = c;
            colors = colors.max(c + 1);
            for &w in &self.adj[v] {
                neighbor_colors[w].insert(c);
            }
        }
        Coloring { color_of: color, colors }
    }
}

struct ColorSearch<'a> {
    graph: &'a Graph,
    k: usize,
    color: Vec<usize>,
    // forbid[v * k + c] counts colored neighbors of v holding color c
    forbid: Vec<u32>,
    saturation: Vec<usize>,
}

impl ColorSearch<'_> {
    fn extend(&mut self, colored: usize, used: usize) -> bool {
        let n = self.graph.vertex_count;
        if colored == n {
            return true;
        }
        let v = (0..n)
            .filter(|&v| self.color[v] == usize::MAX)
            .max_by_key(|&v| (self.saturation[v], self.graph.degree(v), usize::MAX - v))
            .unwrap();
        let limit = self.k.min(used + 1);
        for c in 0..limit {
            if self.forbid[v * self.k + c] != 0 {
                continue;
            }
            self.color[v] = c;
            for &w in &self.graph.adj[v] {
                let slot = &mut self.forbid[w * self.k + c];
                if *slot == 0 {
                    self.saturation[w] += 1;
                }
                *slot += 1;
            }
            if self.extend(colored + 1, used.max(c + 1)) {
                return true;
            }
            for &w in &self.graph.adj[v] {
                let slot = &mut self.forbid[w * self.k + c];
                *slot -= 1;
                if *slot == 0 {
                    self.saturation[w] -= 1;
                }
            }
            self.color[v] = usize::MAX;
        }
        false
    }
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.vertex_count == other.vertex_count && self.edges == other.edges
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("vertex_count", &self.vertex_count)
            .field("edges", &self.edges)
            .finish()
    }
}

/// Shortest-cycle length; forests have infinite girth.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Girth {
    Finite(usize),
    Infinite,
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{g}"),
            Girth::Infinite => write!(f, "inf"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DegreeProfile {
    pub min: usize,
    pub max: usize,
    pub is_regular: bool,
}

/// A vertex coloring with colors in `0..colors`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring {
    pub color_of: Vec<usize>,
    pub colors: usize,
}

impl Coloring {
    /// Checks that every color index is in range and no edge is monochromatic.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        if self.color_of.len() != g.vertex_count() {
            return Err(Error::BadParameters(format!(
                "coloring covers {} vertices, graph has {}",
                self.color_of.len(),
                g.vertex_count()
            )));
        }
        if let Some(&c) = self.color_of.iter().find(|&&c| c >= self.colors) {
            return Err(Error::BadParameters(format!("color {c} outside 0..{}", self.colors)));
        }
        match g.edges().iter().find(|&&(u, v)| self.color_of[u] == self.color_of[v]) {
            Some(&(u, v)) => Err(Error::ImproperColoring(u, v)),
            None => Ok(()),
        }
    }
}
