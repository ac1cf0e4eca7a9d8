//! Generators for the graph families and the hard-coded named instances.
//!
//! All generators are deterministic. Named graphs are hard-coded
//! edge lists; their label maps (drawing label → vertex index) are:
//!
//! * Grötzsch: outer cycle `1..5` → `0..4`, inner `1'..5'` → `5..9`, hub `0` → `10`.
//! * Chvátal: `i` → `i - 1`.
//! * 16-vertex subgraph of K(8,3): `i` → `i - 1`.
//! * Toft: `i` → `i - 1`, so `A1 = 0..n`, `A2 = n..2n`, `A3 = 2n..3n`, `A4 = 3n..4n`.
//!
//! Circulant, Toeplitz and cycle labels are their own indices.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::BadParameters(format!("cycle needs at least 3 vertices, got {n}")));
    }
    Ok(Graph::from_edge_set(n, (0..n).map(|i| ordered(i, (i + 1) % n)).collect()))
}

pub fn complete(n: usize) -> Graph {
    Graph::from_edge_set(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect())
}

/// Parts `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    Graph::from_edge_set(a + b, (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j))).collect())
}

/// Mycielski construction: shadow `n + i` copies the neighbourhood of `i`,
/// hub `2n` sees every shadow.
pub fn mycielski(g: &Graph) -> Graph {
    let n = g.vertex_count();
    let mut edges: BTreeSet<(usize, usize)> = g.edges().iter().copied().collect();
    for &(u, v) in g.edges() {
        edges.insert((u, n + v));
        edges.insert((v, n + u));
    }
    for i in 0..n {
        edges.insert((n + i, 2 * n));
    }
    Graph::from_edge_set(2 * n + 1, edges)
}

/// The 11-vertex Grötzsch graph.
pub fn grotzsch() -> Graph {
    let mut edges = BTreeSet::new();
    for i in 0..5 {
        let next = (i + 1) % 5;
        let prev = (i + 4) % 5;
        edges.insert(ordered(i, next));
        edges.insert(ordered(5 + i, next));
        edges.insert(ordered(5 + i, prev));
        edges.insert(ordered(5 + i, 10));
    }
    Graph::from_edge_set(11, edges)
}

const CHVATAL_EDGES: [(usize, usize); 24] = [
    (1, 2), (1, 4), (1, 7), (1, 12), (2, 3), (2, 6), (2, 9), (3, 4),
    (3, 8), (3, 11), (4, 5), (4, 10), (5, 6), (5, 9), (5, 12), (6, 7),
    (6, 10), (7, 8), (7, 11), (8, 9), (8, 12), (9, 10), (10, 11), (11, 12),
];

/// The 12-vertex Chvátal graph.
pub fn chvatal() -> Graph {
    Graph::from_edge_set(12, CHVATAL_EDGES.iter().map(|&(u, v)| ordered(u - 1, v - 1)).collect())
}

const KNESER83_SUB16_EDGES: [(usize, usize); 36] = [
    (1, 2), (1, 3), (1, 4), (1, 5), (1, 6),
    (2, 7), (2, 8), (2, 9), (2, 10),
    (3, 11), (3, 12), (3, 16),
    (7, 12), (7, 11), (7, 14),
    (4, 8), (4, 9), (4, 10), (4, 13),
    (5, 8), (5, 9), (5, 10), (5, 16),
    (6, 8), (6, 9), (6, 10), (6, 12),
    (8, 15), (9, 14), (10, 11),
    (13, 15), (13, 16), (13, 11),
    (14, 15), (14, 16),
    (12, 15),
];

/// The 16-vertex, 36-edge non-semi-transitive subgraph of K(8,3).
pub fn kneser83_sub16() -> Graph {
    Graph::from_edge_set(16, KNESER83_SUB16_EDGES.iter().map(|&(u, v)| ordered(u - 1, v - 1)).collect())
}

/// Kneser graph K(n, k): the `k`-subsets of `{1..n}` in colexicographic order,
/// adjacent when disjoint.
pub fn kneser(n: usize, k: usize) -> Result<Graph> {
    if k == 0 || n < 2 * k || n > 63 {
        return Err(Error::BadParameters(format!("kneser needs n >= 2k >= 2 and n <= 63, got n={n}, k={k}")));
    }
    let subsets = kneser_subsets(n, k);
    let mut edges = BTreeSet::new();
    for (i, a) in subsets.iter().enumerate() {
        for (j, b) in subsets.iter().enumerate().skip(i + 1) {
            if a & b == 0 {
                edges.insert((i, j));
            }
        }
    }
    Ok(Graph::from_edge_set(subsets.len(), edges))
}

/// Vertex labels of [`kneser`] as bit masks (bit `i - 1` set for element `i`).
pub fn kneser_subsets(n: usize, k: usize) -> Vec<u64> {
    // ascending masks enumerate subsets in colex order
    let mut out = Vec::new();
    let mut mask: u64 = (1 << k) - 1;
    while mask < 1 << n {
        out.push(mask);
        // Gosper's hack
        let c = mask & mask.wrapping_neg();
        let r = mask + c;
        mask = (((r ^ mask) >> 2) / c) | r;
    }
    out
}

/// Circulant graph C(n; jumps).
pub fn circulant(n: usize, jumps: &[usize]) -> Result<Graph> {
    if n < 3 {
        return Err(Error::BadParameters(format!("circulant needs n >= 3, got {n}")));
    }
    let max = n / 2;
    if let Some(&jump) = jumps.iter().find(|&&a| a == 0 || a > max) {
        return Err(Error::JumpOutOfRange { jump, max });
    }
    let mut edges = BTreeSet::new();
    for i in 0..n {
        for &a in jumps {
            edges.insert(ordered(i, (i + a) % n));
        }
    }
    Ok(Graph::from_edge_set(n, edges))
}

/// Toeplitz graph T_n(offsets): `{i, j}` is an edge iff `|i - j|` is an offset.
pub fn toeplitz(n: usize, offsets: &[usize]) -> Result<Graph> {
    let max = n.saturating_sub(1);
    if let Some(&offset) = offsets.iter().find(|&&t| t == 0 || t > max) {
        return Err(Error::OffsetOutOfRange { offset, max });
    }
    let mut edges = BTreeSet::new();
    for &t in offsets {
        for i in 0..n - t {
            edges.insert((i, i + t));
        }
    }
    Ok(Graph::from_edge_set(n, edges))
}

/// Toft's graph T_n on `4n` vertices, `n` odd and greater than 3.
///
/// `A1` and `A4` are cycles on consecutive labels, `A2 ∪ A3` is a complete
/// bipartite graph, and `i ∈ A1` (resp. `A3`) is matched to `i + n`.
pub fn toft(n: usize) -> Result<Graph> {
    if n <= 3 || n.is_multiple_of(2) {
        return Err(Error::BadParameters(format!("toft needs n odd and > 3, got {n}")));
    }
    let mut edges = BTreeSet::new();
    for i in 0..n {
        edges.insert(ordered(i, (i + 1) % n));
        edges.insert(ordered(3 * n + i, 3 * n + (i + 1) % n));
        edges.insert((i, i + n));
        edges.insert((2 * n + i, 3 * n + i));
        for j in 0..n {
            edges.insert((n + i, 2 * n + j));
        }
    }
    Ok(Graph::from_edge_set(4 * n, edges))
}

#[inline]
fn ordered(u: usize, v: usize) -> (usize, usize) {
    (u.min(v), u.max(v))
}

/// A parameterised family member.
///
/// Canonical text syntax: `cycle:7`, `complete:4`, `bipartite:3:3`,
/// `mycielski:cycle:5`, `grotzsch`, `chvatal`, `kneser:8:3`,
/// `kneser83sub16`, `circulant:13:1,5`, `toeplitz:13:1,5,8,12`, `toft:5`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    Cycle(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    Mycielski(Box<FamilySpec>),
    Grotzsch,
    Chvatal,
    Kneser(usize, usize),
    Kneser83Sub16,
    Circulant(usize, BTreeSet<usize>),
    Toeplitz(usize, BTreeSet<usize>),
    Toft(usize),
}

impl FamilySpec {
    pub fn build(&self) -> Result<Graph> {
        let as_vec = |s: &BTreeSet<usize>| s.iter().copied().collect::<Vec<_>>();
        match self {
            FamilySpec::Cycle(n) => cycle(*n),
            FamilySpec::Complete(n) => Ok(complete(*n)),
            FamilySpec::CompleteBipartite(a, b) => Ok(complete_bipartite(*a, *b)),
            FamilySpec::Mycielski(inner) => Ok(mycielski(&inner.build()?)),
            FamilySpec::Grotzsch => Ok(grotzsch()),
            FamilySpec::Chvatal => Ok(chvatal()),
            FamilySpec::Kneser(n, k) => kneser(*n, *k),
            FamilySpec::Kneser83Sub16 => Ok(kneser83_sub16()),
            FamilySpec::Circulant(n, jumps) => circulant(*n, &as_vec(jumps)),
            FamilySpec::Toeplitz(n, offsets) => toeplitz(*n, &as_vec(offsets)),
            FamilySpec::Toft(n) => toft(*n),
        }
    }

    /// Resolves a drawing label (e.g. `12`, `2'`, `0`) to a vertex index.
    pub fn resolve_label(&self, label: &str) -> Option<usize> {
        let (digits, primed) = match label.strip_suffix('\'') {
            Some(d) => (d, true),
            None => (label, false),
        };
        let value: usize = digits.parse().ok()?;
        match self {
            FamilySpec::Grotzsch => match (value, primed) {
                (0, false) => Some(10),
                (1..=5, false) => Some(value - 1),
                (1..=5, true) => Some(4 + value),
                _ => None,
            },
            _ if primed => None,
            FamilySpec::Chvatal | FamilySpec::Kneser83Sub16 | FamilySpec::Toft(_) => {
                let n = self.build().ok()?.vertex_count();
                (1..=n).contains(&value).then(|| value - 1)
            }
            _ => {
                let n = self.build().ok()?.vertex_count();
                (value < n).then_some(value)
            }
        }
    }

    /// Inverse of [`FamilySpec::resolve_label`].
    pub fn label_of(&self, vertex: usize) -> String {
        match self {
            FamilySpec::Grotzsch => match vertex {
                10 => "0".to_string(),
                0..=4 => (vertex + 1).to_string(),
                _ => format!("{}'", vertex - 4),
            },
            FamilySpec::Chvatal | FamilySpec::Kneser83Sub16 | FamilySpec::Toft(_) => (vertex + 1).to_string(),
            _ => vertex.to_string(),
        }
    }
}

fn join(set: &BTreeSet<usize>) -> String {
    set.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Cycle(n) => write!(f, "cycle:{n}"),
            FamilySpec::Complete(n) => write!(f, "complete:{n}"),
            FamilySpec::CompleteBipartite(a, b) => write!(f, "bipartite:{a}:{b}"),
            FamilySpec::Mycielski(inner) => write!(f, "mycielski:{inner}"),
            FamilySpec::Grotzsch => write!(f, "grotzsch"),
            FamilySpec::Chvatal => write!(f, "chvatal"),
            FamilySpec::Kneser(n, k) => write!(f, "kneser:{n}:{k}"),
            FamilySpec::Kneser83Sub16 => write!(f, "kneser83sub16"),
            FamilySpec::Circulant(n, jumps) => write!(f, "circulant:{n}:{}", join(jumps)),
            FamilySpec::Toeplitz(n, offsets) => write!(f, "toeplitz:{n}:{}", join(offsets)),
            FamilySpec::Toft(n) => write!(f, "toft:{n}"),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |msg: &str| Error::BadParameters(format!("family spec `{s}`: {msg}"));
        let int = |t: &str| t.trim().parse::<usize>().map_err(|_| bad(&format!("`{t}` is not a non-negative integer")));
        let list = |t: &str| -> Result<BTreeSet<usize>> {
            let set: BTreeSet<usize> = t.split(',').map(int).collect::<Result<_>>()?;
            if set.is_empty() {
                return Err(bad("empty list"));
            }
            Ok(set)
        };
        let s = s.trim();
        let (head, rest) = match s.split_once(':') {
            Some((h, r)) => (h, Some(r)),
            None => (s, None),
        };
        let parts: Vec<&str> = rest.map(|r| r.split(':').collect()).unwrap_or_default();
        let arity = |k: usize| {
            if parts.len() == k {
                Ok(())
            } else {
                Err(bad(&format!("expected {k} parameter(s), got {}", parts.len())))
            }
        };
        match head {
            "cycle" => {
                arity(1)?;
                Ok(FamilySpec::Cycle(int(parts[0])?))
            }
            "complete" => {
                arity(1)?;
                Ok(FamilySpec::Complete(int(parts[0])?))
            }
            "bipartite" => {
                arity(2)?;
                Ok(FamilySpec::CompleteBipartite(int(parts[0])?, int(parts[1])?))
            }
            "mycielski" => {
                let inner = rest.ok_or_else(|| bad("missing inner family"))?;
                Ok(FamilySpec::Mycielski(Box::new(inner.parse()?)))
            }
            "grotzsch" => {
                arity(0)?;
                Ok(FamilySpec::Grotzsch)
            }
            "chvatal" => {
                arity(0)?;
                Ok(FamilySpec::Chvatal)
            }
            "kneser" => {
                arity(2)?;
                Ok(FamilySpec::Kneser(int(parts[0])?, int(parts[1])?))
            }
            "kneser83sub16" => {
                arity(0)?;
                Ok(FamilySpec::Kneser83Sub16)
            }
            "circulant" => {
                arity(2)?;
                Ok(FamilySpec::Circulant(int(parts[0])?, list(parts[1])?))
            }
            "toeplitz" => {
                arity(2)?;
                Ok(FamilySpec::Toeplitz(int(parts[0])?, list(parts[1])?))
            }
            "toft" => {
                arity(1)?;
                Ok(FamilySpec::Toft(int(parts[0])?))
            }
            other => Err(bad(&format!("unknown family `{other}`"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{DegreeProfile, Girth};

    #[test]
    fn circulant_examples() {
        let c13 = circulant(13, &[1, 5]).unwrap();
        assert_eq!((c13.vertex_count(), c13.edge_count()), (13, 26));
        assert!(c13.degree_profile().is_regular);
        assert_eq!(circulant(5, &[1, 2]).unwrap(), complete(5));
        let m = circulant(6, &[3]).unwrap();
        assert_eq!(m.edges(), &[(0, 3), (1, 4), (2, 5)]);
        assert_eq!(circulant(13, &[7]).unwrap_err(), Error::JumpOutOfRange { jump: 7, max: 6 });
        assert_eq!(circulant(13, &[0]).unwrap_err(), Error::JumpOutOfRange { jump: 0, max: 6 });
    }

    #[test]
    fn toeplitz_examples() {
        assert_eq!(toeplitz(13, &[1, 5, 8, 12]).unwrap(), circulant(13, &[1, 5]).unwrap());
        assert_eq!(toeplitz(5, &[1]).unwrap().edges(), &[(0, 1), (1, 2), (2, 3), (3, 4)]);
        assert_eq!(toeplitz(4, &[1, 2, 3]).unwrap(), complete(4));
        assert_eq!(toeplitz(4, &[4]).unwrap_err(), Error::OffsetOutOfRange { offset: 4, max: 3 });
    }

    #[test]
    fn mycielski_examples() {
        let g = mycielski(&cycle(5).unwrap());
        assert_eq!((g.vertex_count(), g.edge_count()), (11, 20));
        assert_eq!(g, grotzsch());
        // the lone vertex has no neighbours to copy, so only shadow and hub meet
        assert_eq!(mycielski(&complete(1)).edges(), &[(1, 2)]);
        let g4 = mycielski(&cycle(4).unwrap());
        assert_eq!((g4.vertex_count(), g4.edge_count()), (9, 16));
    }

    #[test]
    fn named_graphs() {
        let g = grotzsch();
        assert_eq!((g.vertex_count(), g.edge_count()), (11, 20));
        assert_eq!(g.girth(), Girth::Finite(4));

        let h = chvatal();
        assert_eq!((h.vertex_count(), h.edge_count()), (12, 24));
        assert_eq!(h.degree_profile(), DegreeProfile { min: 4, max: 4, is_regular: true });
        assert!(h.is_triangle_free());

        let k = kneser83_sub16();
        assert_eq!((k.vertex_count(), k.edge_count()), (16, 36));
        assert!(k.is_triangle_free());
        let mut n13: Vec<usize> = k.neighbors(12).iter().map(|v| v + 1).collect();
        n13.sort();
        assert_eq!(n13, vec![4, 11, 15, 16]);
        let mut n1: Vec<usize> = k.neighbors(0).iter().map(|v| v + 1).collect();
        n1.sort();
        assert_eq!(n1, vec![2, 3, 4, 5, 6]);
    }

    #[test]
    fn kneser_examples() {
        let k83 = kneser(8, 3).unwrap();
        assert_eq!((k83.vertex_count(), k83.edge_count()), (56, 280));
        let petersen = kneser(5, 2).unwrap();
        assert_eq!((petersen.vertex_count(), petersen.edge_count()), (10, 15));
        let m = kneser(4, 2).unwrap();
        assert_eq!(m.edge_count(), 3);
        assert_eq!(m.degree_profile(), DegreeProfile { min: 1, max: 1, is_regular: true });
        assert!(kneser(5, 3).is_err());
        // colex: {1,2}, {1,3}, {2,3}, {1,4}, ...
        assert_eq!(&kneser_subsets(4, 2)[..4], &[0b0011, 0b0101, 0b0110, 0b1001]);
    }

    #[test]
    fn toft_examples() {
        let t5 = toft(5).unwrap();
        assert_eq!((t5.vertex_count(), t5.edge_count()), (20, 45));
        assert_eq!(t5.girth(), Girth::Finite(4));
        // A1/A4 vertices: two cycle neighbours plus one matching edge;
        // A2/A3 vertices: one matching edge plus n bipartite neighbours.
        assert_eq!(t5.degree_profile(), DegreeProfile { min: 3, max: 6, is_regular: false });
        assert!(toft(3).is_err());
        assert!(toft(6).is_err());
    }

    #[test]
    fn spec_syntax_round_trips() {
        for text in [
            "cycle:7", "complete:4", "bipartite:3:3", "mycielski:cycle:5", "mycielski:mycielski:complete:2",
            "grotzsch", "chvatal", "kneser:8:3", "kneser83sub16", "circulant:13:1,5",
            "toeplitz:13:1,5,8,12", "toft:5",
        ] {
            let spec: FamilySpec = text.parse().unwrap();
            assert_eq!(spec.to_string(), text);
        }
        assert_eq!("circulant:13:5,1".parse::<FamilySpec>().unwrap().to_string(), "circulant:13:1,5");
        for bad in ["petersen", "cycle", "cycle:x", "circulant:13", "grotzsch:1", "toft:5:5"] {
            assert!(bad.parse::<FamilySpec>().is_err(), "{bad}");
        }
    }

    #[test]
    fn label_maps_round_trip() {
        for spec in [FamilySpec::Grotzsch, FamilySpec::Chvatal, FamilySpec::Kneser83Sub16, FamilySpec::Toft(5), FamilySpec::Circulant(13, [1, 5].into())] {
            let n = spec.build().unwrap().vertex_count();
            for v in 0..n {
                assert_eq!(spec.resolve_label(&spec.label_of(v)), Some(v), "{spec} {v}");
            }
        }
        assert_eq!(FamilySpec::Grotzsch.resolve_label("2'"), Some(6));
        assert_eq!(FamilySpec::Grotzsch.resolve_label("0"), Some(10));
        assert_eq!(FamilySpec::Chvatal.resolve_label("0"), None);
        assert_eq!(FamilySpec::Chvatal.resolve_label("12"), Some(11));
        assert_eq!(FamilySpec::Chvatal.resolve_label("3'"), None);
    }
}
