//! Graphs, the n-cube, its facet subcubes, and vertex numberings.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{check_dim, Error, Result};

/// Largest cube dimension any constructor accepts.
pub const MAX_DIM: u32 = 20;

/// Simple undirected graph on vertices `0..m`.
///
/// Edges are stored normalized (`u < v`) in insertion order; the edge index
/// is the position in that order and is what [`crate::metrics::Routing`]
/// refers to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
    cube_dim: Option<u32>,
}

impl Graph {
    pub fn new(vertex_count: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if vertex_count == 0 {
            return Err(Error::InvalidGraph("graph needs at least one vertex".into()));
        }
        let mut adjacency = vec![Vec::new(); vertex_count];
        let mut normalized = Vec::new();
        for (u, v) in edges {
            if u >= vertex_count || v >= vertex_count {
                return Err(Error::InvalidGraph(format!(
                    "edge ({u}, {v}) references a vertex outside 0..{vertex_count}"
                )));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop at vertex {u}")));
            }
            let (a, b) = if u < v { (u, v) } else { (v, u) };
            if adjacency[a].contains(&b) {
                return Err(Error::InvalidGraph(format!("duplicate edge ({a}, {b})")));
            }
            adjacency[a].push(b);
            adjacency[b].push(a);
            normalized.push((a, b));
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        let mut graph = Graph {
            vertex_count,
            edges: normalized,
            adjacency,
            cube_dim: None,
        };
        graph.cube_dim = graph.detect_cube();
        Ok(graph)
    }

    fn detect_cube(&self) -> Option<u32> {
        let m = self.vertex_count;
        if !m.is_power_of_two() {
            return None;
        }
        let n = m.trailing_zeros();
        if self.edges.len() != (n as usize) << n.saturating_sub(1) && n > 0 {
            return None;
        }
        let cube_edges = self
            .edges
            .iter()
            .all(|&(u, v)| (u ^ v).is_power_of_two());
        (cube_edges && (n > 0 || self.edges.is_empty())).then_some(n)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.vertex_count && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// `Some(n)` when this graph is exactly Qₙ with the bit labelling of
    /// [`build_hypercube`].
    pub fn cube_dimension(&self) -> Option<u32> {
        self.cube_dim
    }

    /// Vertex-induced subgraph, relabelled by position in `vertices`.
    pub fn induced(&self, vertices: &[usize]) -> Result<Graph> {
        let mut index = vec![usize::MAX; self.vertex_count];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| index[u] != usize::MAX && index[v] != usize::MAX)
            .map(|&(u, v)| (index[u], index[v]));
        Graph::new(vertices.len(), edges)
    }
}

/// A vertex of Qₙ viewed as an n-bit vector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct HypercubeLabel {
    pub n: u32,
    pub bits: usize,
}

impl HypercubeLabel {
    pub fn new(n: u32, bits: usize) -> Result<Self> {
        if n as usize >= usize::BITS as usize || bits >> n != 0 {
            return Err(Error::OutOfRange(format!("label {bits} does not fit in {n} bits")));
        }
        Ok(HypercubeLabel { n, bits })
    }

    pub fn is_adjacent(&self, other: &HypercubeLabel) -> bool {
        self.n == other.n && (self.bits ^ other.bits).count_ones() == 1
    }
}

impl fmt::Display for HypercubeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n == 0 {
            return f.write_str("ε");
        }
        write!(f, "{:0width$b}", self.bits, width = self.n as usize)
    }
}

/// Builds Qₙ: vertex `i` is adjacent to `i ^ (1 << k)` for every `k < n`.
pub fn build_hypercube(n: u32) -> Result<Graph> {
    check_dim(n, 0, MAX_DIM)?;
    let m = 1usize << n;
    let edges = (0..m).flat_map(|v| {
        (0..n)
            .map(move |k| (v, v ^ (1 << k)))
            .filter(|&(u, w)| u < w)
    });
    Graph::new(m, edges)
}

/// One of the 2n subcubes Hᵢ obtained by fixing coordinate `axis` to `value`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Facet {
    pub axis: u32,
    pub value: u8,
    pub members: Vec<usize>,
}

impl Facet {
    pub fn contains(&self, v: usize) -> bool {
        ((v >> self.axis) & 1) as u8 == self.value
    }

    pub fn opposite(&self, n: u32) -> Facet {
        facet(n, self.axis, 1 - self.value)
    }
}

fn facet(n: u32, axis: u32, value: u8) -> Facet {
    let members = (0..1usize << n)
        .filter(|v| ((v >> axis) & 1) as u8 == value)
        .collect();
    Facet { axis, value, members }
}

/// All 2n facets of Qₙ, ordered `(0,0), (0,1), (1,0), (1,1), ...`.
pub fn facets(n: u32) -> Result<Vec<Facet>> {
    check_dim(n, 1, MAX_DIM)?;
    Ok((0..n)
        .flat_map(|axis| [0u8, 1].map(|value| facet(n, axis, value)))
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Host {
    Linear,
    Cyclic,
}

impl fmt::Display for Host {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Host::Linear => "linear",
            Host::Cyclic => "cyclic",
        })
    }
}

/// A bijection between host positions `0..m` and vertices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Numbering {
    host: Host,
    placement: Vec<usize>,
    position: Vec<usize>,
}

impl Numbering {
    /// `placement[p]` is the vertex at position `p`.
    pub fn new(host: Host, placement: Vec<usize>) -> Result<Self> {
        let m = placement.len();
        if m == 0 {
            return Err(Error::InvalidNumbering("empty placement".into()));
        }
        let mut position = vec![usize::MAX; m];
        for (p, &v) in placement.iter().enumerate() {
            if v >= m {
                return Err(Error::InvalidNumbering(format!("vertex {v} outside 0..{m}")));
            }
            if position[v] != usize::MAX {
                return Err(Error::InvalidNumbering(format!("vertex {v} placed twice")));
            }
            position[v] = p;
        }
        Ok(Numbering { host, placement, position })
    }

    pub fn identity(host: Host, m: usize) -> Result<Self> {
        Numbering::new(host, (0..m).collect())
    }

    pub fn host(&self) -> Host {
        self.host
    }

    pub fn len(&self) -> usize {
        self.placement.len()
    }

    pub fn is_empty(&self) -> bool {
        self.placement.is_empty()
    }

    pub fn placement(&self) -> &[usize] {
        &self.placement
    }

    pub fn vertex_at(&self, p: usize) -> usize {
        self.placement[p]
    }

    pub fn position_of(&self, v: usize) -> usize {
        self.position[v]
    }

    pub fn with_host(&self, host: Host) -> Numbering {
        Numbering { host, ..self.clone() }
    }

    /// Shifts every vertex `k` positions forward (mod m).
    pub fn rotated(&self, k: usize) -> Numbering {
        let m = self.len();
        let mut placement = vec![0; m];
        for (p, &v) in self.placement.iter().enumerate() {
            placement[(p + k) % m] = v;
        }
        Numbering::new(self.host, placement).expect("rotation preserves bijection")
    }

    pub fn reversed(&self) -> Numbering {
        let mut placement = self.placement.clone();
        placement.reverse();
        Numbering::new(self.host, placement).expect("reversal preserves bijection")
    }

    pub(crate) fn require(&self, host: Host, graph: &Graph) -> Result<()> {
        if self.host != host {
            return Err(Error::HostMismatch { expected: host, found: self.host });
        }
        if self.len() != graph.vertex_count() {
            return Err(Error::SizeMismatch {
                graph: graph.vertex_count(),
                numbering: self.len(),
            });
        }
        Ok(())
    }
}

/// Reflected Gray code on the cycle: position `p` holds `p ^ (p >> 1)`.
pub fn gray_numbering(n: u32) -> Result<Numbering> {
    check_dim(n, 1, MAX_DIM)?;
    let placement = (0..1usize << n).map(|p| p ^ (p >> 1)).collect();
    Numbering::new(Host::Cyclic, placement)
}

/// Binary counting order on the line: position `p` holds vertex `p`.
pub fn lex_numbering(n: u32) -> Result<Numbering> {
    check_dim(n, 0, MAX_DIM)?;
    Numbering::identity(Host::Linear, 1 << n)
}
