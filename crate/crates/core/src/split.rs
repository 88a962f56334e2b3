//! Diameters of a cyclic layout and how they split a pair of complementary
//! vertex sets.
//!
//! A diameter at position `p` puts positions `p, p+1, ..., p + m/2 - 1`
//! (mod m) on side one and the rest on side two. For a vertex set `part`
//! with complement `rest`, write A/B for the part/rest vertices on side one
//! and C/D for those on side two. The bracket records
//!
//! ```text
//! [ |A|     |e_AB|           |B|    ]
//! [ |e_AC|  |e_AD| + |e_BC|  |e_BD| ]
//! [ |C|     |e_CD|           |D|    ]
//! ```
//!
//! where `e_XY` counts edges with one endpoint in X and the other in Y. The
//! middle row holds exactly the edges crossing the diameter.

use serde::Serialize;

use crate::error::{check_dim, Error, Result};
use crate::hypercube::{facets, Graph, Host, Numbering};
use crate::isoperimetric::{theta_recursive, VertexSet, THETA_RECURSIVE_MAX_DIM};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Diameter {
    pub position: usize,
}

impl Diameter {
    pub fn on_side_one(&self, m: usize, pos: usize) -> bool {
        (pos + m - self.position % m) % m < m / 2
    }

    /// Same chord, sides swapped.
    pub fn flipped(&self, m: usize) -> Diameter {
        Diameter { position: (self.position + m / 2) % m }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct Bracket(pub [[usize; 3]; 3]);

impl Bracket {
    pub fn crossing_edges(&self) -> usize {
        self.0[1].iter().sum()
    }
}

fn check_split_args(graph: &Graph, eta: &Numbering, part: &VertexSet) -> Result<usize> {
    eta.require(Host::Cyclic, graph)?;
    let m = eta.len();
    if !m.is_multiple_of(2) {
        return Err(Error::OutOfRange(format!("diameters need an even cycle, got m = {m}")));
    }
    if part.iter().any(|v| v >= m) {
        return Err(Error::OutOfRange(format!("part has a vertex outside 0..{m}")));
    }
    let size = part.len();
    if size == 0 || size == m {
        return Err(Error::OutOfRange("part must be a proper, non-empty subset".into()));
    }
    Ok(m)
}

pub fn bracket(graph: &Graph, eta: &Numbering, d: Diameter, part: &VertexSet) -> Result<Bracket> {
    let m = check_split_args(graph, eta, part)?;
    // class 0 = A, 1 = B, 2 = C, 3 = D
    let class = |v: usize| -> usize {
        let side_two = !d.on_side_one(m, eta.position_of(v)) as usize;
        let rest = !part.contains(v) as usize;
        2 * side_two + rest
    };
    let mut size = [0usize; 4];
    for v in 0..m {
        size[class(v)] += 1;
    }
    let mut e = [[0usize; 4]; 4];
    for &(u, v) in graph.edges() {
        let (a, b) = (class(u), class(v));
        e[a.min(b)][a.max(b)] += 1;
    }
    const A: usize = 0;
    const B: usize = 1;
    const C: usize = 2;
    const D: usize = 3;
    Ok(Bracket([
        [size[A], e[A][B], size[B]],
        [e[A][C], e[A][D] + e[B][C], e[B][D]],
        [size[C], e[C][D], size[D]],
    ]))
}

/// |A|: how many vertices of `part` sit on side one.
pub fn split_size(graph: &Graph, eta: &Numbering, d: Diameter, part: &VertexSet) -> Result<usize> {
    let m = check_split_args(graph, eta, part)?;
    Ok(part.iter().filter(|&v| d.on_side_one(m, eta.position_of(v))).count())
}

fn rotation(eta: &Numbering, part: &VertexSet, steps: usize) -> Vec<usize> {
    let m = eta.len();
    let half = m / 2;
    let inside = |p: usize| part.contains(eta.vertex_at(p % m)) as usize;
    let mut current: usize = (0..half).map(inside).sum();
    let mut out = Vec::with_capacity(steps);
    for p in 0..steps {
        out.push(current);
        // side one loses position p and gains position p + m/2
        current = current + inside(p + half) - inside(p);
    }
    out
}

/// Split size at diameter positions `0..m/2`.
pub fn diameter_sweep(graph: &Graph, eta: &Numbering, part: &VertexSet) -> Result<Vec<usize>> {
    let m = check_split_args(graph, eta, part)?;
    Ok(rotation(eta, part, m / 2))
}

/// Split size at every diameter position `0..m`; the second half repeats
/// the first with sides swapped.
pub fn full_rotation(graph: &Graph, eta: &Numbering, part: &VertexSet) -> Result<Vec<usize>> {
    let m = check_split_args(graph, eta, part)?;
    Ok(rotation(eta, part, m))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SplitWitness {
    pub axis: u32,
    pub value: u8,
    pub diameter: Diameter,
    pub split: (usize, usize),
    pub bracket: Bracket,
}

/// First facet (in facet order) and diameter position whose split is
/// exactly `target_x / (m/2 - target_x)`. The graph must be a hypercube.
pub fn find_split(graph: &Graph, eta: &Numbering, target_x: usize) -> Result<Option<SplitWitness>> {
    let n = graph
        .cube_dimension()
        .ok_or_else(|| Error::InvalidGraph("facet splits need a hypercube".into()))?;
    check_dim(n, 1, crate::hypercube::MAX_DIM)?;
    eta.require(Host::Cyclic, graph)?;
    let half = eta.len() / 2;
    if target_x > half {
        return Ok(None);
    }
    for f in facets(n)? {
        let part = VertexSet::from_vertices(eta.len(), f.members.iter().copied())?;
        // facet (a, b) at p + m/2 is facet (a, 1 - b) at p, so half the
        // positions cover every orientation once both facets are scanned
        let sweep = diameter_sweep(graph, eta, &part)?;
        if let Some(p) = sweep.iter().position(|&s| s == target_x) {
            let diameter = Diameter { position: p };
            return Ok(Some(SplitWitness {
                axis: f.axis,
                value: f.value,
                diameter,
                split: (target_x, half - target_x),
                bracket: bracket(graph, eta, diameter, &part)?,
            }));
        }
    }
    Ok(None)
}

fn sign(n: u32) -> i128 {
    if n.is_multiple_of(2) { 1 } else { -1 }
}

/// The split `(2ⁿ + (−1)ⁿ⁺¹)/3 / (2ⁿ⁻¹ + (−1)ⁿ)/3` that settles Qₙ.
pub fn easy_split(n: u32) -> Result<(u64, u64)> {
    check_dim(n, 2, THETA_RECURSIVE_MAX_DIM)?;
    let big = ((1i128 << n) + sign(n + 1)) / 3;
    let small = ((1i128 << (n - 1)) + sign(n)) / 3;
    Ok((big as u64, small as u64))
}

/// Lower bound on the largest cut once the easy split occurs:
/// (5·2ⁿ⁻² − 1)/3 for odd n, (5·2ⁿ⁻² − 2)/3 for even n.
pub fn theorem_lower_bound(n: u32) -> Result<u64> {
    check_dim(n, 2, THETA_RECURSIVE_MAX_DIM)?;
    let five = 5u128 << (n - 2);
    let v = if n % 2 == 1 { (five - 1) / 3 } else { (five - 2) / 3 };
    Ok(v as u64)
}

/// Fewest edges crossing a diameter that realises the easy split:
/// 2·θₙ₋₁((2ⁿ⁻¹ + (−1)ⁿ)/3) + (2ⁿ⁻¹ + 2(−1)ⁿ⁺¹)/3.
pub fn min_diameter_crossings(n: u32) -> Result<u64> {
    let (_, small) = easy_split(n)?;
    let theta = theta_recursive(n - 1, small)? as i128;
    let matched = ((1i128 << (n - 1)) + 2 * sign(n + 1)) / 3;
    Ok((2 * theta + matched) as u64)
}

/// Whether a layout of Qₙ contains the easy split, with the sweeps that
/// decide it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SplitReport {
    pub n: u32,
    pub easy_split: (u64, u64),
    pub sweeps: Vec<FacetSweep>,
    pub hypothesis_holds: bool,
    pub witness: Option<SplitWitness>,
    pub lower_bound: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FacetSweep {
    pub axis: u32,
    pub value: u8,
    pub sweep: Vec<usize>,
}

pub fn split_report(graph: &Graph, eta: &Numbering) -> Result<SplitReport> {
    let n = graph
        .cube_dimension()
        .ok_or_else(|| Error::InvalidGraph("split report needs a hypercube".into()))?;
    let easy = easy_split(n)?;
    let mut sweeps = Vec::new();
    for f in facets(n)? {
        let part = VertexSet::from_vertices(eta.len(), f.members.iter().copied())?;
        sweeps.push(FacetSweep {
            axis: f.axis,
            value: f.value,
            sweep: diameter_sweep(graph, eta, &part)?,
        });
    }
    let reach = sweeps.iter().flat_map(|s| s.sweep.iter()).copied().max().unwrap_or(0);
    let hypothesis_holds = reach as u64 >= easy.0;
    let witness = if hypothesis_holds { find_split(graph, eta, easy.0 as usize)? } else { None };
    Ok(SplitReport {
        n,
        easy_split: easy,
        sweeps,
        hypothesis_holds,
        lower_bound: hypothesis_holds.then(|| theorem_lower_bound(n)).transpose()?,
        witness,
    })
}
