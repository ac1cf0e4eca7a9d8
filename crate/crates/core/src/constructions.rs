//! Explicit semi-transitive orientations.
//!
//! Each constructor re-checks its output in debug builds.

use crate::error::{Error, Result};
use crate::families;
use crate::orientation::Orientation;

/// Arcs of the drawn orientation of `C(13; 1, 5)`.
pub const FIG4_ARCS: [(usize, usize); 26] = [
    (1, 0), (2, 1), (2, 3), (2, 7), (2, 10), (3, 4), (3, 8), (3, 11), (4, 5),
    (4, 12), (5, 0), (6, 1), (6, 5), (6, 7), (6, 11), (7, 8), (7, 12), (8, 0),
    (9, 1), (9, 4), (9, 8), (9, 10), (10, 5), (10, 11), (11, 12), (12, 0),
];

/// A removal order peeling [`fig4_orientation`] down to the tree on `{3, 4, 11}`.
pub const FIG4_PEEL_ORDER: [usize; 10] = [0, 1, 6, 9, 2, 7, 8, 10, 5, 12];

fn checked(o: Orientation) -> Orientation {
    debug_assert!(o.is_semi_transitive(), "construction is not semi-transitive");
    o
}

/// The semi-transitive orientation of the 4-chromatic girth-4 circulant `C(13; 1, 5)`.
pub fn fig4_orientation() -> Orientation {
    let g = families::circulant(13, &[1, 5]).expect("valid jumps");
    checked(Orientation::new(g, &FIG4_ARCS).expect("arcs cover the circulant"))
}

/// An orientation of `C(n; 1, 2)`: the edges inside `{0, .., n-3}` run low to
/// high and seven fixed arcs handle the last two vertices.
///
/// For `n = 5` the result is a transitive tournament.
pub fn lemma8_orientation(n: usize) -> Result<Orientation> {
    if n < 5 {
        return Err(Error::BadParameters(format!("need n >= 5, got {n}")));
    }
    let g = families::circulant(n, &[1, 2])?;
    let (a, b) = (n - 2, n - 1);
    let mut arcs: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .copied()
        .filter(|&(u, v)| u < a && v < a)
        .collect();
    arcs.extend([(1, b), (0, b), (0, a), (a, n - 4), (a, n - 3), (a, b), (b, n - 3)]);
    Ok(checked(Orientation::new(g, &arcs)?))
}

/// An orientation of Toft's graph `T_n`: layers `A1..A4` are the vertex
/// ranges `[0, n)`, `[n, 2n)`, `[2n, 3n)`, `[3n, 4n)`, every edge between
/// layers points to the higher layer, and each odd cycle splits into
/// directed paths of lengths `n - 2` and `2` leaving its first vertex.
pub fn toft_orientation(n: usize) -> Result<Orientation> {
    let g = families::toft(n)?;
    let mut arcs = Vec::with_capacity(g.edge_count());
    for base in [0, 3 * n] {
        arcs.extend((0..n - 2).map(|i| (base + i, base + i + 1)));
        arcs.push((base, base + n - 1));
        arcs.push((base + n - 1, base + n - 2));
    }
    let layer = |v: usize| v / n;
    arcs.extend(g.edges().iter().filter(|&&(u, v)| layer(u) != layer(v)).copied());
    Ok(checked(Orientation::new(g, &arcs)?))
}
