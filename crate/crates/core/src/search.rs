//! Exact and heuristic searches over numberings for small graphs.
//!
//! Cyclic searches fix vertex 0 at position 0 (every cyclic numbering has a
//! rotation of that form) and, unless hypercube symmetry is used instead,
//! keep only one of each mirror pair.

use std::time::{Duration, Instant};

use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::format::render_numbering;
use crate::hypercube::{gray_numbering, Graph, Host, Numbering};
use crate::isoperimetric::{ThetaTable, THETA_TABLE_MAX_DIM};
use crate::metrics::{
    cyclic_cutwidth_below, cyclic_cutwidth_with_budget, linear_cutwidth, DEFAULT_ROUTING_BUDGET,
};

/// Largest vertex count the factorial scans accept.
pub const EXHAUSTIVE_MAX_VERTICES: usize = 8;
/// Per-layout routing budget inside placement searches.
pub const LEAF_ROUTING_BUDGET: u64 = 1_000_000;

fn as_text<S: Serializer>(eta: &Numbering, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&render_numbering(eta))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BoundEvent {
    pub nodes: u64,
    pub upper: usize,
    pub lower: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchResult {
    pub optimum: usize,
    pub lower: usize,
    #[serde(serialize_with = "as_text")]
    pub witness: Numbering,
    /// Numberings scanned (exhaustive) or placement nodes (branch and bound).
    pub nodes_explored: u64,
    pub exact: bool,
    pub trace: Vec<BoundEvent>,
    #[serde(skip)]
    pub elapsed: Duration,
}

fn guard(graph: &Graph) -> Result<usize> {
    let m = graph.vertex_count();
    if m > EXHAUSTIVE_MAX_VERTICES {
        return Err(Error::Guard(format!(
            "exhaustive search limited to {EXHAUSTIVE_MAX_VERTICES} vertices, graph has {m}"
        )));
    }
    Ok(m)
}

struct BranchBest {
    value: usize,
    placement: Vec<usize>,
    scanned: u64,
}

/// Minimum cyclic cutwidth over all numberings, scanning one representative
/// per rotation/reflection class ((m−1)!/2 of them).
pub fn exhaustive_ccw(graph: &Graph) -> Result<SearchResult> {
    let start = Instant::now();
    let m = guard(graph)?;
    if m <= 3 {
        // every cyclic order of at most three vertices is a rotation or mirror of the identity
        let eta = Numbering::identity(Host::Cyclic, m)?;
        let value = cyclic_cutwidth_with_budget(graph, &eta, DEFAULT_ROUTING_BUDGET)?.value;
        return Ok(finish(value, value, eta, 1, true, start));
    }
    let branches: Vec<BranchBest> = (1..m)
        .into_par_iter()
        .map(|second| -> Result<BranchBest> {
            let mut best = BranchBest { value: usize::MAX, placement: Vec::new(), scanned: 0 };
            let rest: Vec<usize> = (1..m).filter(|&v| v != second).collect();
            for tail in rest.iter().copied().permutations(rest.len()) {
                if second > *tail.last().expect("m > 3") {
                    continue;
                }
                best.scanned += 1;
                let placement: Vec<usize> = [0, second].into_iter().chain(tail).collect();
                let eta = Numbering::new(Host::Cyclic, placement)?;
                let (found, _) = cyclic_cutwidth_below(graph, &eta, best.value, DEFAULT_ROUTING_BUDGET)?;
                if let Some(found) = found {
                    best.value = found.value;
                    best.placement = eta.placement().to_vec();
                }
            }
            Ok(best)
        })
        .collect::<Result<_>>()?;
    let scanned = branches.iter().map(|b| b.scanned).sum();
    let best = branches
        .into_iter()
        .filter(|b| !b.placement.is_empty())
        .min_by_key(|b| b.value)
        .expect("at least one canonical order");
    let eta = Numbering::new(Host::Cyclic, best.placement)?;
    Ok(finish(best.value, best.value, eta, scanned, true, start))
}

/// Minimum linear cutwidth over all m! orders, one of each reversal pair.
pub fn exhaustive_lcw(graph: &Graph) -> Result<SearchResult> {
    let start = Instant::now();
    let m = guard(graph)?;
    if m == 1 {
        return Ok(finish(0, 0, Numbering::identity(Host::Linear, 1)?, 1, true, start));
    }
    let branches: Vec<BranchBest> = (0..m)
        .into_par_iter()
        .map(|first| -> Result<BranchBest> {
            let mut best = BranchBest { value: usize::MAX, placement: Vec::new(), scanned: 0 };
            let rest: Vec<usize> = (0..m).filter(|&v| v != first).collect();
            for tail in rest.iter().copied().permutations(rest.len()) {
                if first > *tail.last().expect("m > 1") {
                    continue;
                }
                best.scanned += 1;
                let eta = Numbering::new(Host::Linear, [first].into_iter().chain(tail).collect())?;
                let (value, _) = linear_cutwidth(graph, &eta)?;
                if value < best.value {
                    best.value = value;
                    best.placement = eta.placement().to_vec();
                }
            }
            Ok(best)
        })
        .collect::<Result<_>>()?;
    let scanned = branches.iter().map(|b| b.scanned).sum();
    let best = branches
        .into_iter()
        .filter(|b| !b.placement.is_empty())
        .min_by_key(|b| b.value)
        .expect("at least one order");
    let eta = Numbering::new(Host::Linear, best.placement)?;
    Ok(finish(best.value, best.value, eta, scanned, true, start))
}

fn finish(
    optimum: usize,
    lower: usize,
    witness: Numbering,
    nodes: u64,
    exact: bool,
    start: Instant,
) -> SearchResult {
    SearchResult {
        optimum,
        lower,
        witness,
        nodes_explored: nodes,
        exact,
        trace: vec![BoundEvent { nodes, upper: optimum, lower }],
        elapsed: start.elapsed(),
    }
}

#[derive(Debug, Clone)]
pub struct BbOptions {
    /// Placement nodes before giving up.
    pub budget: u64,
    /// Starting incumbent; defaults to the Gray layout for cubes and the
    /// identity otherwise.
    pub seed_numbering: Option<Numbering>,
    /// Prune placements equivalent under coordinate permutations of Qₙ
    /// (replaces mirror-image pruning).
    pub cube_symmetry: bool,
    pub leaf_routing_budget: u64,
}

impl Default for BbOptions {
    fn default() -> Self {
        BbOptions {
            budget: 100_000_000,
            seed_numbering: None,
            cube_symmetry: false,
            leaf_routing_budget: LEAF_ROUTING_BUDGET,
        }
    }
}

/// Bound that holds for every cyclic numbering of `graph`: an arc of ℓ
/// positions is bounded by two gaps whose loads add up to at least its edge
/// boundary.
pub fn global_ccw_lower_bound(graph: &Graph) -> usize {
    let m = graph.vertex_count();
    let mut lower = graph.edge_count().div_ceil(m).max(graph.max_degree().div_ceil(2));
    if let Some(n) = graph.cube_dimension() {
        if n <= THETA_TABLE_MAX_DIM {
            let theta = ThetaTable::recursive(n).expect("dimension checked");
            lower = lower.max((theta.max() as usize).div_ceil(2));
        }
    }
    lower
}

struct Placer<'a> {
    graph: &'a Graph,
    m: usize,
    cube: Option<u32>,
    opts: &'a BbOptions,
    placement: Vec<usize>,
    position: Vec<usize>,
    /// arcs[k][a] = edge boundary of positions a..=k once position k is filled.
    arcs: Vec<Vec<usize>>,
    /// Routed length of edges between placed vertices, per depth.
    length: Vec<usize>,
    /// Axis equivalence classes (cube symmetry), per depth.
    classes: Vec<Vec<u32>>,
    best: usize,
    best_placement: Vec<usize>,
    lower: usize,
    nodes: u64,
    exhausted: bool,
    leaf_unresolved: bool,
    trace: Vec<BoundEvent>,
}

const UNPLACED: usize = usize::MAX;

impl<'a> Placer<'a> {
    fn target(&self) -> usize {
        self.best - 1
    }

    /// Routed length forced once `k` positions are filled: placed pairs at
    /// their cyclic distance, a placed vertex at q to an unplaced one at
    /// least min(k − q, q + 1), unplaced pairs at least 1.
    fn length_bound(&self, k: usize, pairs: usize) -> usize {
        let mut total = pairs;
        for q in 0..k {
            for &w in self.graph.neighbors(self.placement[q]) {
                if self.position[w] == UNPLACED {
                    total += (k - q).min(q + 1);
                }
            }
        }
        let open = self.graph.edges().iter().filter(|&&(a, b)| {
            self.position[a] == UNPLACED && self.position[b] == UNPLACED
        });
        total + open.count()
    }

    fn candidates(&self, k: usize) -> Vec<usize> {
        let placed = &self.placement[..k];
        let mut out: Vec<(usize, usize)> = (0..self.m)
            .filter(|&v| self.position[v] == UNPLACED)
            .filter(|&v| self.canonical_under_cube(k, v))
            .map(|v| {
                let adj = self.graph.neighbors(v).iter().filter(|w| placed.contains(w)).count();
                (v, adj)
            })
            .collect();
        out.sort_by_key(|&(v, adj)| (std::cmp::Reverse(adj), v));
        out.into_iter().map(|(v, _)| v).collect()
    }

    fn canonical_under_cube(&self, k: usize, v: usize) -> bool {
        let Some(n) = self.cube.filter(|_| self.opts.cube_symmetry) else {
            return true;
        };
        let classes = &self.classes[k - 1];
        // inside each class of interchangeable axes, ones must precede zeros
        let mut seen_zero = vec![false; n as usize];
        for (axis, &c) in classes.iter().enumerate() {
            let c = c as usize;
            let bit = v >> axis & 1 == 1;
            if bit && seen_zero[c] {
                return false;
            }
            if !bit {
                seen_zero[c] = true;
            }
        }
        true
    }

    fn refine_classes(&self, k: usize, v: usize) -> Vec<u32> {
        let prev = &self.classes[k - 2];
        let n = prev.len();
        let mut next = vec![0u32; n];
        let mut keys: Vec<(u32, usize)> = Vec::new();
        for axis in 0..n {
            let key = (prev[axis], v >> axis & 1);
            let id = match keys.iter().position(|&k| k == key) {
                Some(i) => i,
                None => {
                    keys.push(key);
                    keys.len() - 1
                }
            };
            next[axis] = id as u32;
        }
        next
    }

    fn place(&mut self, k: usize, v: usize) -> bool {
        let p = k - 1;
        self.placement[p] = v;
        self.position[v] = p;
        let deg = self.graph.degree(v);
        // placed neighbour counts per suffix start a
        let mut hits = vec![0usize; k + 1];
        for &w in self.graph.neighbors(v) {
            let q = self.position[w];
            if q != UNPLACED && q < p {
                hits[q] += 1;
            }
        }
        let limit = 2 * self.target();
        let mut feasible = true;
        let mut row = vec![0usize; k];
        let mut inside = 0usize;
        for a in (0..k).rev() {
            if a < p {
                inside += hits[a];
            }
            let prev = if a < p { self.arcs[p - 1][a] } else { 0 };
            row[a] = prev + deg - 2 * inside;
            if row[a] > limit && !(a == 0 && k == self.m) {
                feasible = false;
            }
        }
        self.arcs[p] = row;
        let pairs = self.length[k - 1]
            + self.graph
                .neighbors(v)
                .iter()
                .filter(|&&w| self.position[w] != UNPLACED && self.position[w] < p)
                .map(|&w| {
                    let d = p - self.position[w];
                    d.min(self.m - d)
                })
                .sum::<usize>();
        self.length[k] = pairs;
        feasible && self.length_bound(k, pairs) <= self.m * self.target()
    }

    fn unplace(&mut self, k: usize) {
        let v = self.placement[k - 1];
        self.position[v] = UNPLACED;
        self.placement[k - 1] = UNPLACED;
    }

    fn leaf(&mut self) -> Result<()> {
        let eta = Numbering::new(Host::Cyclic, self.placement.clone())?;
        let (found, exhausted) =
            cyclic_cutwidth_below(self.graph, &eta, self.best, self.opts.leaf_routing_budget)?;
        if let Some(found) = found {
            self.best = found.value;
            self.best_placement = self.placement.clone();
            self.trace.push(BoundEvent { nodes: self.nodes, upper: self.best, lower: self.lower });
        } else if exhausted {
            self.leaf_unresolved = true;
        }
        Ok(())
    }

    fn dfs(&mut self, k: usize) -> Result<()> {
        if self.best <= self.lower || self.exhausted {
            return Ok(());
        }
        if k == self.m {
            return self.leaf();
        }
        let mut cands = self.candidates(k);
        if !self.opts.cube_symmetry && k >= 2 {
            // mirror pruning: position 1 must hold a smaller vertex than position m-1
            let second = self.placement[1];
            if k == self.m - 1 {
                cands.retain(|&v| v > second);
            } else if !(0..self.m).any(|v| self.position[v] == UNPLACED && v > second) {
                return Ok(());
            }
        }
        for v in cands {
            if self.best <= self.lower {
                break;
            }
            self.nodes += 1;
            if self.nodes > self.opts.budget {
                self.exhausted = true;
                break;
            }
            let ok = self.place(k + 1, v);
            if ok {
                if self.cube.is_some() && self.opts.cube_symmetry {
                    let refined = self.refine_classes(k + 1, v);
                    self.classes[k] = refined;
                }
                self.dfs(k + 1)?;
            }
            self.unplace(k + 1);
            if self.exhausted {
                break;
            }
        }
        Ok(())
    }
}

/// Branch and bound over cyclic placements, filled position by position.
///
/// A partial placement is cut when some run of consecutive placed
/// positions has edge boundary above twice the best value still sought, or
/// when the routed length already forced (placed-to-placed edges at their
/// cyclic distance, everything else at its least possible length) exceeds
/// m times that value. Complete placements are routed exactly.
pub fn bb_ccw(graph: &Graph, opts: &BbOptions) -> Result<SearchResult> {
    let start = Instant::now();
    let m = graph.vertex_count();
    let cube = graph.cube_dimension();
    let seed = match (&opts.seed_numbering, cube) {
        (Some(eta), _) => eta.with_host(Host::Cyclic),
        (None, Some(n)) if n >= 1 => gray_numbering(n)?,
        _ => Numbering::identity(Host::Cyclic, m)?,
    };
    let seeded = cyclic_cutwidth_with_budget(graph, &seed, opts.leaf_routing_budget.max(DEFAULT_ROUTING_BUDGET))?;
    let lower = global_ccw_lower_bound(graph).min(seeded.value);
    let mut trace = vec![BoundEvent { nodes: 0, upper: seeded.value, lower }];
    if seeded.value <= lower || m <= 3 {
        trace[0].lower = seeded.value;
        return Ok(SearchResult {
            optimum: seeded.value,
            lower: seeded.value,
            witness: seed,
            nodes_explored: 0,
            exact: true,
            trace,
            elapsed: start.elapsed(),
        });
    }

    let mut placer = Placer {
        graph,
        m,
        cube,
        opts,
        placement: vec![UNPLACED; m],
        position: vec![UNPLACED; m],
        arcs: vec![Vec::new(); m],
        length: vec![0; m + 1],
        classes: vec![vec![0; cube.unwrap_or(0) as usize]; m],
        best: seeded.value,
        best_placement: seed.placement().to_vec(),
        lower,
        nodes: 0,
        exhausted: false,
        leaf_unresolved: false,
        trace: Vec::new(),
    };
    placer.trace = std::mem::take(&mut trace);
    placer.nodes = 1;
    placer.place(1, 0);
    placer.dfs(1)?;

    let exact = !placer.exhausted && !placer.leaf_unresolved;
    let lower = if exact { placer.best } else { placer.lower };
    let optimum = placer.best;
    placer.trace.push(BoundEvent { nodes: placer.nodes, upper: optimum, lower });
    Ok(SearchResult {
        optimum,
        lower,
        witness: Numbering::new(Host::Cyclic, placer.best_placement)?,
        nodes_explored: placer.nodes,
        exact,
        trace: placer.trace,
        elapsed: start.elapsed(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LocalSearchResult {
    #[serde(serialize_with = "as_text")]
    pub numbering: Numbering,
    /// Upper bound on the cyclic cutwidth of `numbering` (a routing
    /// achieving it was found).
    pub value: usize,
    pub start_value: usize,
    pub accepted_moves: u64,
}

/// Seeded pair-swap hill climbing that also accepts sideways moves; the
/// best numbering seen is returned, so the result is never worse than the
/// start.
pub fn local_search_ccw(
    graph: &Graph,
    start: &Numbering,
    steps: u64,
    seed: u64,
    routing_budget: u64,
) -> Result<LocalSearchResult> {
    if start.host() != Host::Cyclic {
        return Err(Error::HostMismatch { expected: Host::Cyclic, found: start.host() });
    }
    let start_value = cyclic_cutwidth_with_budget(graph, start, routing_budget)?.value;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let m = start.len();
    let mut current = start.placement().to_vec();
    let mut current_value = start_value;
    let mut best = (start.clone(), start_value);
    let mut accepted = 0;
    if m < 2 {
        return Ok(LocalSearchResult { numbering: best.0, value: best.1, start_value, accepted_moves: 0 });
    }
    for _ in 0..steps {
        let i = rng.gen_range(0..m);
        let j = (i + rng.gen_range(1..m)) % m;
        current.swap(i, j);
        let eta = Numbering::new(Host::Cyclic, current.clone())?;
        let (found, _) = cyclic_cutwidth_below(graph, &eta, current_value + 1, routing_budget)?;
        match found {
            Some(found) => {
                accepted += 1;
                current_value = found.value;
                if current_value < best.1 {
                    best = (eta, current_value);
                }
            }
            None => current.swap(i, j),
        }
    }
    Ok(LocalSearchResult { numbering: best.0, value: best.1, start_value, accepted_moves: accepted })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypercube::build_hypercube;
    use crate::metrics::cyclic_cutwidth_of_numbering;
    use proptest::prelude::{prop_assert, prop_assert_eq, proptest, ProptestConfig, Strategy};

    fn cycle(m: usize) -> Graph {
        Graph::new(m, (0..m).map(|i| (i, (i + 1) % m))).unwrap()
    }

    fn path(m: usize) -> Graph {
        Graph::new(m, (0..m - 1).map(|i| (i, i + 1))).unwrap()
    }

    /// Every one of the m! placements, no symmetry reduction.
    fn unreduced_ccw(graph: &Graph) -> usize {
        let m = graph.vertex_count();
        (0..m)
            .permutations(m)
            .map(|p| {
                let eta = Numbering::new(Host::Cyclic, p).unwrap();
                cyclic_cutwidth_of_numbering(graph, &eta).unwrap().value
            })
            .min()
            .unwrap()
    }

    #[test]
    fn exhaustive_ccw_examples() {
        let q2 = exhaustive_ccw(&build_hypercube(2).unwrap()).unwrap();
        assert_eq!(q2.optimum, 1);
        let q3 = exhaustive_ccw(&build_hypercube(3).unwrap()).unwrap();
        assert_eq!((q3.optimum, q3.nodes_explored), (3, 2520));
        let q3g = build_hypercube(3).unwrap();
        assert_eq!(cyclic_cutwidth_of_numbering(&q3g, &q3.witness).unwrap().value, 3);
        assert_eq!(exhaustive_ccw(&cycle(5)).unwrap().optimum, 1);
        assert!(matches!(exhaustive_ccw(&build_hypercube(4).unwrap()), Err(Error::Guard(_))));
    }

    #[test]
    fn exhaustive_lcw_examples() {
        let q3 = exhaustive_lcw(&build_hypercube(3).unwrap()).unwrap();
        assert_eq!((q3.optimum, q3.nodes_explored), (5, 20160));
        assert_eq!(exhaustive_lcw(&build_hypercube(2).unwrap()).unwrap().optimum, 2);
        assert_eq!(exhaustive_lcw(&path(4)).unwrap().optimum, 1);
        assert_eq!(exhaustive_lcw(&Graph::new(1, []).unwrap()).unwrap().optimum, 0);
        assert!(exhaustive_lcw(&Graph::new(9, []).unwrap()).is_err());
    }

    #[test]
    fn canonical_scan_loses_nothing() {
        let graphs = [
            build_hypercube(2).unwrap(),
            cycle(6),
            path(5),
            Graph::new(6, [(0, 1), (0, 2), (0, 3), (3, 4), (4, 5), (1, 5), (2, 4)]).unwrap(),
            Graph::new(6, [(0, 3), (1, 4), (2, 5), (0, 1), (2, 3)]).unwrap(),
        ];
        for g in &graphs {
            assert_eq!(exhaustive_ccw(g).unwrap().optimum, unreduced_ccw(g));
        }
    }

    #[test]
    fn exhaustive_beats_random_numberings() {
        let q3 = build_hypercube(3).unwrap();
        let best = exhaustive_ccw(&q3).unwrap().optimum;
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..100 {
            let mut p: Vec<usize> = (0..8).collect();
            for i in (1..8).rev() {
                p.swap(i, rng.gen_range(0..=i));
            }
            let eta = Numbering::new(Host::Cyclic, p).unwrap();
            assert!(best <= cyclic_cutwidth_of_numbering(&q3, &eta).unwrap().value);
        }
    }

    #[test]
    fn bb_matches_exhaustive_on_q3() {
        let q3 = build_hypercube(3).unwrap();
        for cube_symmetry in [false, true] {
            let opts = BbOptions {
                seed_numbering: Some(Numbering::identity(Host::Cyclic, 8).unwrap()),
                cube_symmetry,
                ..BbOptions::default()
            };
            let res = bb_ccw(&q3, &opts).unwrap();
            assert!(res.exact);
            assert_eq!(res.optimum, 3, "cube_symmetry={cube_symmetry}");
            assert_eq!(cyclic_cutwidth_of_numbering(&q3, &res.witness).unwrap().value, 3);
        }
    }

    #[test]
    fn bb_upper_never_exceeds_seed() {
        let q3 = build_hypercube(3).unwrap();
        let seed = Numbering::new(Host::Cyclic, vec![0, 7, 1, 6, 2, 5, 3, 4]).unwrap();
        let seeded = cyclic_cutwidth_of_numbering(&q3, &seed).unwrap().value;
        let opts = BbOptions { budget: 5, seed_numbering: Some(seed), ..BbOptions::default() };
        let res = bb_ccw(&q3, &opts).unwrap();
        assert!(res.optimum <= seeded);
        assert!(res.lower <= res.optimum);
    }

    #[test]
    fn bb_trace_is_monotone() {
        let g = Graph::new(7, [(0, 4), (1, 5), (2, 6), (0, 1), (2, 3), (3, 6), (4, 5), (1, 3)]).unwrap();
        let opts = BbOptions {
            seed_numbering: Some(Numbering::new(Host::Cyclic, vec![0, 3, 5, 1, 6, 2, 4]).unwrap()),
            ..BbOptions::default()
        };
        let res = bb_ccw(&g, &opts).unwrap();
        for w in res.trace.windows(2) {
            assert!(w[1].upper <= w[0].upper);
            assert!(w[1].lower >= w[0].lower);
        }
        assert_eq!(res.optimum, exhaustive_ccw(&g).unwrap().optimum);
    }

    #[test]
    fn local_search_contract() {
        let q5 = build_hypercube(5).unwrap();
        let gray = gray_numbering(5).unwrap();
        let res = local_search_ccw(&q5, &gray, 20, 3, 20_000).unwrap();
        assert!(res.value <= 13);
        let again = local_search_ccw(&q5, &gray, 20, 3, 20_000).unwrap();
        assert_eq!(res, again);
        let zero = local_search_ccw(&q5, &gray, 0, 3, 20_000).unwrap();
        assert_eq!(zero.numbering, gray);

        let q3 = build_hypercube(3).unwrap();
        let bad = Numbering::new(Host::Cyclic, vec![0, 7, 1, 6, 2, 5, 3, 4]).unwrap();
        let start = cyclic_cutwidth_of_numbering(&q3, &bad).unwrap().value;
        let improved = local_search_ccw(&q3, &bad, 200, 1, DEFAULT_ROUTING_BUDGET).unwrap();
        assert!(improved.value <= start);
        assert_eq!(cyclic_cutwidth_of_numbering(&q3, &improved.numbering).unwrap().value, improved.value);
    }

    #[test]
    fn bb_proves_q4() {
        let q4 = build_hypercube(4).unwrap();
        for cube_symmetry in [true, false] {
            let res = bb_ccw(&q4, &BbOptions { cube_symmetry, ..BbOptions::default() }).unwrap();
            assert_eq!((res.optimum, res.lower, res.exact), (6, 6, true));
            assert_eq!(cyclic_cutwidth_of_numbering(&q4, &res.witness).unwrap().value, 6);
        }
    }

    #[test]
    fn bb_budget_exhaustion_is_reported() {
        let q5 = build_hypercube(5).unwrap();
        let res = bb_ccw(&q5, &BbOptions { budget: 2_000, ..BbOptions::default() }).unwrap();
        assert!(!res.exact);
        assert_eq!(res.optimum, 13);
        assert!(res.lower >= 11 && res.lower <= 13);
    }

    fn small_graph() -> impl Strategy<Value = Graph> {
        (4usize..=7).prop_flat_map(|m| {
            let pairs: Vec<(usize, usize)> = (0..m).tuple_combinations().collect();
            proptest::sample::subsequence(pairs.clone(), 0..=pairs.len())
                .prop_map(move |edges| Graph::new(m, edges).unwrap())
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(40))]

        #[test]
        fn bb_agrees_with_exhaustive(g in small_graph()) {
            let res = bb_ccw(&g, &BbOptions::default()).unwrap();
            prop_assert!(res.exact);
            prop_assert_eq!(res.optimum, exhaustive_ccw(&g).unwrap().optimum);
        }
    }
}

