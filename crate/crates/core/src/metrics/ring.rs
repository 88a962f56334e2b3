//! Exact routing of a fixed cyclic layout (the ring loading problem).
//!
//! Every edge picks one of its two arcs; the goal is the smallest possible
//! maximum gap load. Depth-first branch and bound over edge directions,
//! edges taken longest first, shorter arc tried first.
//!
//! Pruning rests on the gap-pair bound: for two distinct gaps `g1`, `g2`,
//! an edge whose endpoints lie on different sides of the pair crosses
//! exactly one of them whichever way it is routed, and any other edge
//! crosses both or neither. So
//!
//! ```text
//! max(load g1, load g2) >= ceil((committed g1 + committed g2 + undecided separating) / 2)
//! ```
//!
//! Routing an edge leaves that sum unchanged for the pairs it separates and
//! raises it by two for pairs lying inside its arc, which is what
//! [`PairSums`] tracks.

use super::Direction;

pub const DEFAULT_ROUTING_BUDGET: u64 = 100_000_000;

/// Full pair matrix up to this many positions; diameter pairs beyond.
const FULL_PAIR_LIMIT: usize = 256;

pub(crate) struct RingLoading {
    m: usize,
    arcs: Vec<(usize, usize)>,
    order: Vec<usize>,
}

pub(crate) struct RingOutcome {
    pub value: usize,
    pub routing: Option<Vec<Direction>>,
    pub lower: usize,
    pub exhausted: bool,
    pub nodes: u64,
}

enum PairSums {
    Full { m: usize, sums: Vec<u32> },
    Diameter { half: usize, sums: Vec<u32> },
}

impl PairSums {
    fn new(m: usize, arcs: &[(usize, usize)]) -> Self {
        if m <= FULL_PAIR_LIMIT {
            // in_arc[g] counts edges whose forward arc covers g; both[g1][g2]
            // counts edges covering both. separated = in1 + in2 - 2 both.
            let mut in_arc = vec![0u32; m];
            let mut both = vec![0u32; m * m];
            for &(p, q) in arcs {
                for g1 in p..q {
                    in_arc[g1] += 1;
                    for g2 in p..q {
                        both[g1 * m + g2] += 1;
                    }
                }
            }
            let mut sums = vec![0u32; m * m];
            for g1 in 0..m {
                for g2 in 0..m {
                    if g1 != g2 {
                        sums[g1 * m + g2] = in_arc[g1] + in_arc[g2] - 2 * both[g1 * m + g2];
                    }
                }
            }
            PairSums::Full { m, sums }
        } else {
            let half = m / 2;
            let sums = (0..half)
                .map(|g| {
                    arcs.iter()
                        .filter(|&&(p, q)| (p <= g && g < q) != (p <= g + half && g + half < q))
                        .count() as u32
                })
                .collect();
            PairSums::Diameter { half, sums }
        }
    }

    fn root_bound(&self) -> u32 {
        let best = match self {
            PairSums::Full { sums, .. } | PairSums::Diameter { sums, .. } => {
                sums.iter().copied().max().unwrap_or(0)
            }
        };
        best.div_ceil(2)
    }

    /// Adds `delta` (±2) to every pair inside `gaps`; returns the largest
    /// updated pair sum.
    fn shift(&mut self, gaps: &[usize], delta: i32) -> u32 {
        let mut worst = 0;
        match self {
            PairSums::Full { m, sums } => {
                for (i, &g1) in gaps.iter().enumerate() {
                    for &g2 in &gaps[i + 1..] {
                        for idx in [g1 * *m + g2, g2 * *m + g1] {
                            sums[idx] = sums[idx].wrapping_add_signed(delta);
                            worst = worst.max(sums[idx]);
                        }
                    }
                }
            }
            PairSums::Diameter { half, sums } => {
                if gaps.len() > *half {
                    let mut covered = vec![0u8; 2 * *half];
                    for &g in gaps {
                        covered[g] = 1;
                    }
                    for g in 0..*half {
                        if covered[g] == 1 && covered[g + *half] == 1 {
                            sums[g] = sums[g].wrapping_add_signed(delta);
                            worst = worst.max(sums[g]);
                        }
                    }
                }
            }
        }
        worst
    }
}

impl RingLoading {
    pub fn new(m: usize, arcs: Vec<(usize, usize)>) -> Self {
        let mut order: Vec<usize> = (0..arcs.len()).collect();
        let short = |(p, q): (usize, usize)| (q - p).min(m - (q - p));
        order.sort_by_key(|&i| (std::cmp::Reverse(short(arcs[i])), i));
        RingLoading { m, arcs, order }
    }

    fn gaps(&self, edge: usize, dir: Direction) -> Vec<usize> {
        let (p, q) = self.arcs[edge];
        match dir {
            Direction::Forward => (p..q).collect(),
            Direction::Backward => (q..self.m).chain(0..p).collect(),
        }
    }

    fn arc_len(&self, edge: usize, dir: Direction) -> usize {
        let (p, q) = self.arcs[edge];
        match dir {
            Direction::Forward => q - p,
            Direction::Backward => self.m - (q - p),
        }
    }

    fn preferred(&self, edge: usize) -> [Direction; 2] {
        let (p, q) = self.arcs[edge];
        if 2 * (q - p) <= self.m {
            [Direction::Forward, Direction::Backward]
        } else {
            [Direction::Backward, Direction::Forward]
        }
    }

    fn max_load(&self, dirs: &[Direction]) -> usize {
        let mut loads = vec![0usize; self.m];
        for (e, &d) in dirs.iter().enumerate() {
            for g in self.gaps(e, d) {
                loads[g] += 1;
            }
        }
        loads.into_iter().max().unwrap_or(0)
    }

    /// Minimizes the maximum gap load. With `cap`, only routings strictly
    /// below `cap` are of interest and `routing` stays `None` if there are
    /// none.
    pub fn solve(&self, cap: Option<usize>, budget: u64) -> RingOutcome {
        let m = self.m;
        let edges = self.arcs.len();
        let short: Vec<Direction> = (0..edges).map(|e| self.preferred(e)[0]).collect();
        let short_max = self.max_load(&short);

        let mut pairs = PairSums::new(m, &self.arcs);
        let min_total: usize = (0..edges)
            .map(|e| self.arc_len(e, self.preferred(e)[0]))
            .sum();
        let root_lower = (pairs.root_bound() as usize).max(if m > 0 { min_total.div_ceil(m) } else { 0 });

        let (mut best, mut best_routing) = match cap {
            Some(c) if c <= short_max => (c, None),
            _ => (short_max, Some(short.clone())),
        };
        let done = |best: usize| best <= root_lower;
        if edges == 0 || done(best) {
            return RingOutcome {
                value: best,
                routing: best_routing,
                lower: root_lower.min(best),
                exhausted: false,
                nodes: 0,
            };
        }

        let mut loads = vec![0u32; m];
        let mut total = min_total;
        let mut current = short;
        let mut tried = vec![0u8; edges];
        let mut nodes = 0u64;
        let mut exhausted = false;
        let mut depth = 0usize;

        loop {
            if depth == edges {
                let leaf = loads.iter().copied().max().unwrap_or(0) as usize;
                if leaf < best {
                    best = leaf;
                    best_routing = Some(current.clone());
                    if done(best) {
                        break;
                    }
                }
                depth -= 1;
                continue;
            }
            let edge = self.order[depth];
            if tried[depth] > 0 {
                let dir = current[edge];
                let gaps = self.gaps(edge, dir);
                for &g in &gaps {
                    loads[g] -= 1;
                }
                pairs.shift(&gaps, -2);
                total -= self.arc_len(edge, dir) - self.arc_len(edge, self.preferred(edge)[0]);
            }
            if tried[depth] == 2 {
                tried[depth] = 0;
                if depth == 0 {
                    break;
                }
                depth -= 1;
                continue;
            }
            let dir = self.preferred(edge)[tried[depth] as usize];
            tried[depth] += 1;
            nodes += 1;
            if nodes > budget {
                exhausted = true;
                break;
            }
            current[edge] = dir;
            let gaps = self.gaps(edge, dir);
            let target = (best - 1) as u32;
            let mut feasible = true;
            for &g in &gaps {
                loads[g] += 1;
                feasible &= loads[g] <= target;
            }
            let worst_pair = pairs.shift(&gaps, 2);
            total += self.arc_len(edge, dir) - self.arc_len(edge, self.preferred(edge)[0]);
            feasible &= worst_pair <= 2 * target && total <= m * target as usize;
            if feasible {
                depth += 1;
            }
        }

        let lower = if exhausted { root_lower.min(best) } else { best };
        RingOutcome {
            value: best,
            routing: best_routing,
            lower,
            exhausted,
            nodes,
        }
    }
}
