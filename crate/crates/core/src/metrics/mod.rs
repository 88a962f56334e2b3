//! Bandwidth, wirelength and cutwidth of a graph under a linear or cyclic
//! numbering.
//!
//! Gaps are indexed by their left position: gap `g` sits between positions
//! `g` and `g + 1` (taken mod m on the cycle, so gap `m - 1` closes the
//! ring). Linear layouts have `m - 1` gaps, cyclic layouts have `m`.

mod ring;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypercube::{Graph, Host, Numbering};

pub use ring::DEFAULT_ROUTING_BUDGET;

/// Which way an edge travels around the cycle.
///
/// `Forward` runs from the endpoint with the lower position to the one with
/// the higher position through increasing positions; `Backward` takes the
/// complementary arc through the wrap-around gap.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Forward,
    Backward,
}

/// One direction per graph edge, indexed like [`Graph::edges`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Routing(pub Vec<Direction>);

impl Routing {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn directions(&self) -> &[Direction] {
        &self.0
    }
}

/// Per-gap edge crossing counts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CutProfile {
    pub loads: Vec<usize>,
}

impl CutProfile {
    pub fn max(&self) -> usize {
        self.loads.iter().copied().max().unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.loads.iter().sum()
    }
}

/// Sorted positions `(p, q)`, `p < q`, of every edge's endpoints.
pub(crate) fn edge_positions(graph: &Graph, eta: &Numbering) -> Vec<(usize, usize)> {
    graph
        .edges()
        .iter()
        .map(|&(u, v)| {
            let (a, b) = (eta.position_of(u), eta.position_of(v));
            (a.min(b), a.max(b))
        })
        .collect()
}

pub fn linear_bandwidth(graph: &Graph, eta: &Numbering) -> Result<usize> {
    eta.require(Host::Linear, graph)?;
    Ok(edge_positions(graph, eta)
        .into_iter()
        .map(|(p, q)| q - p)
        .max()
        .unwrap_or(0))
}

pub fn linear_wirelength(graph: &Graph, eta: &Numbering) -> Result<usize> {
    eta.require(Host::Linear, graph)?;
    Ok(edge_positions(graph, eta).into_iter().map(|(p, q)| q - p).sum())
}

/// Maximum gap load of a linear layout, with the `m - 1` gap loads.
pub fn linear_cutwidth(graph: &Graph, eta: &Numbering) -> Result<(usize, CutProfile)> {
    eta.require(Host::Linear, graph)?;
    let m = eta.len();
    let mut delta = vec![0isize; m];
    for (p, q) in edge_positions(graph, eta) {
        delta[p] += 1;
        delta[q] -= 1;
    }
    let loads: Vec<usize> = delta[..m - 1]
        .iter()
        .scan(0isize, |acc, d| {
            *acc += d;
            Some(*acc as usize)
        })
        .collect();
    let profile = CutProfile { loads };
    Ok((profile.max(), profile))
}

/// Length of the shorter arc between positions `p` and `q` on an m-cycle.
pub fn cyclic_distance(m: usize, p: usize, q: usize) -> Result<usize> {
    if p == q {
        return Err(Error::OutOfRange(format!("positions coincide ({p})")));
    }
    if p >= m || q >= m {
        return Err(Error::OutOfRange(format!("position outside 0..{m}")));
    }
    let d = (q + m - p) % m;
    Ok(d.min(m - d))
}

fn short_len(m: usize, (p, q): (usize, usize)) -> usize {
    (q - p).min(m - (q - p))
}

pub fn cyclic_wirelength(graph: &Graph, eta: &Numbering) -> Result<usize> {
    eta.require(Host::Cyclic, graph)?;
    let m = eta.len();
    Ok(edge_positions(graph, eta).into_iter().map(|e| short_len(m, e)).sum())
}

pub fn cyclic_bandwidth(graph: &Graph, eta: &Numbering) -> Result<usize> {
    eta.require(Host::Cyclic, graph)?;
    let m = eta.len();
    Ok(edge_positions(graph, eta)
        .into_iter()
        .map(|e| short_len(m, e))
        .max()
        .unwrap_or(0))
}

/// Every edge along its shorter arc; diameter ties go forward.
pub fn short_routing(graph: &Graph, eta: &Numbering) -> Result<Routing> {
    eta.require(Host::Cyclic, graph)?;
    let m = eta.len();
    Ok(Routing(
        edge_positions(graph, eta)
            .into_iter()
            .map(|(p, q)| if 2 * (q - p) <= m { Direction::Forward } else { Direction::Backward })
            .collect(),
    ))
}

pub fn cut_profile_cyclic(graph: &Graph, eta: &Numbering, routing: &Routing) -> Result<CutProfile> {
    eta.require(Host::Cyclic, graph)?;
    if routing.len() != graph.edge_count() {
        return Err(Error::RoutingMismatch { edges: graph.edge_count(), routing: routing.len() });
    }
    let m = eta.len();
    let mut delta = vec![0isize; m + 1];
    for ((p, q), dir) in edge_positions(graph, eta).into_iter().zip(routing.directions()) {
        match dir {
            Direction::Forward => {
                delta[p] += 1;
                delta[q] -= 1;
            }
            Direction::Backward => {
                delta[q] += 1;
                delta[m] -= 1;
                delta[0] += 1;
                delta[p] -= 1;
            }
        }
    }
    let loads = delta[..m]
        .iter()
        .scan(0isize, |acc, d| {
            *acc += d;
            Some(*acc as usize)
        })
        .collect();
    Ok(CutProfile { loads })
}

/// Result of optimizing the routing of a fixed cyclic numbering.
///
/// When the node budget runs out `exact` is false and the true value lies
/// in `lower..=value`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CyclicCutwidth {
    pub value: usize,
    pub lower: usize,
    pub routing: Routing,
    pub exact: bool,
    pub nodes: u64,
}

/// Minimum over all routings of the largest gap load, with a witness.
pub fn cyclic_cutwidth_of_numbering(graph: &Graph, eta: &Numbering) -> Result<CyclicCutwidth> {
    cyclic_cutwidth_with_budget(graph, eta, DEFAULT_ROUTING_BUDGET)
}

pub fn cyclic_cutwidth_with_budget(
    graph: &Graph,
    eta: &Numbering,
    budget: u64,
) -> Result<CyclicCutwidth> {
    eta.require(Host::Cyclic, graph)?;
    let solver = ring::RingLoading::new(eta.len(), edge_positions(graph, eta));
    let out = solver.solve(None, budget);
    let routing = out.routing.expect("uncapped solve always keeps a routing");
    Ok(CyclicCutwidth {
        value: out.value,
        lower: out.lower,
        routing: Routing(routing),
        exact: !out.exhausted,
        nodes: out.nodes,
    })
}

/// Searches only for routings strictly below `cap`. `Ok(None)` means none
/// exists (or, if the budget ran out, none was found).
pub(crate) fn cyclic_cutwidth_below(
    graph: &Graph,
    eta: &Numbering,
    cap: usize,
    budget: u64,
) -> Result<(Option<CyclicCutwidth>, bool)> {
    eta.require(Host::Cyclic, graph)?;
    let solver = ring::RingLoading::new(eta.len(), edge_positions(graph, eta));
    let out = solver.solve(Some(cap), budget);
    let found = out.routing.map(|r| CyclicCutwidth {
        value: out.value,
        lower: out.lower,
        routing: Routing(r),
        exact: !out.exhausted,
        nodes: out.nodes,
    });
    Ok((found, out.exhausted))
}

/// All six metrics for one placement, read once on the line and once on
/// the cycle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MetricsReport {
    pub lbw: usize,
    pub lwl: usize,
    pub lcw: usize,
    pub cbw: usize,
    pub cwl: usize,
    pub ccw: usize,
    pub ccw_lower: usize,
    pub routing: Routing,
    pub profile: CutProfile,
    pub exact: bool,
}

pub fn all_metrics(graph: &Graph, eta: &Numbering, budget: u64) -> Result<MetricsReport> {
    let linear = eta.with_host(Host::Linear);
    let cyclic = eta.with_host(Host::Cyclic);
    let ccw = cyclic_cutwidth_with_budget(graph, &cyclic, budget)?;
    Ok(MetricsReport {
        lbw: linear_bandwidth(graph, &linear)?,
        lwl: linear_wirelength(graph, &linear)?,
        lcw: linear_cutwidth(graph, &linear)?.0,
        cbw: cyclic_bandwidth(graph, &cyclic)?,
        cwl: cyclic_wirelength(graph, &cyclic)?,
        profile: cut_profile_cyclic(graph, &cyclic, &ccw.routing)?,
        ccw: ccw.value,
        ccw_lower: ccw.lower,
        routing: ccw.routing,
        exact: ccw.exact,
    })
}
