//! Edge boundaries, the edge-isoperimetric function θ of the n-cube, facet
//! intersection statistics (Type/Split), and the quadratic midpoint
//! inequality used for "big" half-sets.

use fixedbitset::FixedBitSet;
use num_rational::Rational64;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{check_dim, Error, Result};
use crate::hypercube::{Graph, MAX_DIM};

/// Subset scans over all 2^(2ⁿ) vertex sets stop here.
pub const THETA_EXACT_MAX_DIM: u32 = 4;
/// Full recursive tables hold 2ⁿ + 1 entries.
pub const THETA_TABLE_MAX_DIM: u32 = 22;
/// Single-value recursion; 2ⁿ must fit in a u64.
pub const THETA_RECURSIVE_MAX_DIM: u32 = 62;

/// A set of vertices of a host graph with `universe` vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexSet {
    bits: FixedBitSet,
}

impl VertexSet {
    pub fn empty(universe: usize) -> Self {
        VertexSet { bits: FixedBitSet::with_capacity(universe) }
    }

    pub fn from_vertices(universe: usize, vertices: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut set = VertexSet::empty(universe);
        for v in vertices {
            if v >= universe {
                return Err(Error::OutOfRange(format!("vertex {v} outside 0..{universe}")));
            }
            set.bits.insert(v);
        }
        Ok(set)
    }

    pub fn universe(&self) -> usize {
        self.bits.len()
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.bits.contains(v)
    }

    pub fn insert(&mut self, v: usize) {
        self.bits.insert(v);
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.ones()
    }

    pub fn complement(&self) -> VertexSet {
        let mut bits = self.bits.clone();
        bits.toggle_range(..);
        VertexSet { bits }
    }

    fn check_host(&self, m: usize) -> Result<()> {
        if self.universe() > m && self.bits.ones().any(|v| v >= m) {
            return Err(Error::OutOfRange(format!("set contains a vertex outside 0..{m}")));
        }
        Ok(())
    }
}

/// θ(S): number of edges with exactly one endpoint in `set`.
pub fn edge_boundary(graph: &Graph, set: &VertexSet) -> Result<usize> {
    set.check_host(graph.vertex_count())?;
    Ok(graph
        .edges()
        .iter()
        .filter(|&&(u, v)| set.contains(u) != set.contains(v))
        .count())
}

/// θₙ(ℓ) for ℓ = 0..=2ⁿ.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ThetaTable {
    pub n: u32,
    pub values: Vec<u64>,
}

impl ThetaTable {
    /// Builds the table from the two-step recursion, one level at a time.
    pub fn recursive(n: u32) -> Result<Self> {
        check_dim(n, 0, THETA_TABLE_MAX_DIM)?;
        let mut tables: [Vec<u64>; 2] = [vec![0, 0], vec![0, 1, 0]];
        if n <= 1 {
            return Ok(ThetaTable { n, values: tables[n as usize].clone() });
        }
        for k in 2..=n {
            let prev = &tables[(k % 2) as usize];
            let (quarter, half, full) = (1u64 << (k - 2), 1u64 << (k - 1), 1u64 << k);
            let mut values = vec![0u64; full as usize + 1];
            for l in 0..=half {
                values[l as usize] = if l < quarter {
                    2 * l + prev[l as usize]
                } else {
                    half + prev[(l - quarter) as usize]
                };
            }
            for l in half + 1..=full {
                values[l as usize] = values[(full - l) as usize];
            }
            tables[(k % 2) as usize] = values;
        }
        Ok(ThetaTable { n, values: tables[(n % 2) as usize].clone() })
    }

    /// Brute-force table: every vertex subset of Qₙ is scanned once.
    pub fn exact(n: u32) -> Result<Self> {
        check_dim(n, 0, THETA_EXACT_MAX_DIM)?;
        let m = 1usize << n;
        let edges: Vec<(usize, usize)> = (0..m)
            .flat_map(|v| (0..n).map(move |k| (v, v ^ (1 << k))))
            .filter(|&(u, v)| u < v)
            .collect();
        let inf = u64::MAX;
        let values = (0..1u64 << m)
            .into_par_iter()
            .fold(
                || vec![inf; m + 1],
                |mut best, mask| {
                    let boundary = edges
                        .iter()
                        .filter(|&&(u, v)| (mask >> u & 1) != (mask >> v & 1))
                        .count() as u64;
                    let size = mask.count_ones() as usize;
                    best[size] = best[size].min(boundary);
                    best
                },
            )
            .reduce(
                || vec![inf; m + 1],
                |a, b| a.into_iter().zip(b).map(|(x, y)| x.min(y)).collect(),
            );
        Ok(ThetaTable { n, values })
    }

    pub fn get(&self, l: usize) -> Option<u64> {
        self.values.get(l).copied()
    }

    pub fn max(&self) -> u64 {
        self.values.iter().copied().max().unwrap_or(0)
    }
}

/// θₙ(ℓ) by scanning every ℓ-subset of Qₙ; n ≤ 4.
pub fn theta_exact(n: u32, l: usize) -> Result<u64> {
    let table = ThetaTable::exact(n)?;
    table
        .get(l)
        .ok_or_else(|| Error::OutOfRange(format!("set size {l} exceeds 2^{n}")))
}

/// θₙ(ℓ) from the recursion
/// θₙ(ℓ) = 2ℓ + θₙ₋₂(ℓ) for ℓ ≤ 2ⁿ⁻², and 2ⁿ⁻¹ + θₙ₋₂(ℓ − 2ⁿ⁻²) for
/// 2ⁿ⁻² ≤ ℓ ≤ 2ⁿ⁻¹, extended past 2ⁿ⁻¹ by complement symmetry. Base cases
/// θ₀ ≡ 0 and θ₁ = (0, 1, 0).
pub fn theta_recursive(n: u32, l: u64) -> Result<u64> {
    check_dim(n, 0, THETA_RECURSIVE_MAX_DIM)?;
    if l > 1u64 << n {
        return Err(Error::OutOfRange(format!("set size {l} exceeds 2^{n}")));
    }
    Ok(theta_rec(n, l))
}

fn theta_rec(n: u32, l: u64) -> u64 {
    let full = 1u64 << n;
    let l = l.min(full - l);
    match n {
        0 => 0,
        1 => l,
        _ => {
            let quarter = 1u64 << (n - 2);
            if l < quarter {
                2 * l + theta_rec(n - 2, l)
            } else {
                (full >> 1) + theta_rec(n - 2, l - quarter)
            }
        }
    }
}

/// `(Type(S), Split(S))`: the smallest and largest |S ∩ H| over the 2n
/// facets H of Qₙ.
pub fn type_and_split(n: u32, set: &VertexSet) -> Result<(usize, usize)> {
    check_dim(n, 1, MAX_DIM)?;
    set.check_host(1 << n)?;
    let mut counts = vec![[0usize; 2]; n as usize];
    for v in set.iter() {
        for (axis, c) in counts.iter_mut().enumerate() {
            c[v >> axis & 1] += 1;
        }
    }
    let all = counts.iter().flatten();
    let min = *all.clone().min().expect("n >= 1");
    let max = *all.max().expect("n >= 1");
    Ok((min, max))
}

fn half_set_type(n: u32, set: &VertexSet) -> Result<usize> {
    check_dim(n, 3, MAX_DIM)?;
    if set.len() != 1 << (n - 1) {
        return Err(Error::OutOfRange(format!(
            "big/small applies to sets of size 2^{} = {}, got {}",
            n - 1,
            1usize << (n - 1),
            set.len()
        )));
    }
    Ok(type_and_split(n, set)?.0)
}

/// Half-set with Type ≥ 2ⁿ⁻³.
pub fn is_big(n: u32, set: &VertexSet) -> Result<bool> {
    Ok(half_set_type(n, set)? >= 1 << (n - 3))
}

/// Half-set with Type ≤ 2ⁿ⁻³. Sets with Type exactly 2ⁿ⁻³ are both big
/// and small.
pub fn is_small(n: u32, set: &VertexSet) -> Result<bool> {
    Ok(half_set_type(n, set)? <= 1 << (n - 3))
}

/// f(x) = peak − curvature·(x − ½)².
///
/// The midpoint margin f(x−t) + f(x+t) + 2t − 2f(x) works out to
/// 2t − 2·curvature·t², independent of x, so it is non-negative exactly
/// for 0 ≤ t ≤ 1/curvature.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Quadratic {
    pub peak: Rational64,
    pub curvature: Rational64,
}

impl Quadratic {
    /// f(x) = 3/4 − (64/7)(x − ½)².
    pub fn guu() -> Self {
        Quadratic {
            peak: Rational64::new(3, 4),
            curvature: Rational64::new(64, 7),
        }
    }

    /// f(x) = 5/6 − k(x − ½)², with k left open.
    pub fn five_sixths(curvature: Rational64) -> Self {
        Quadratic { peak: Rational64::new(5, 6), curvature }
    }

    pub fn value(&self, x: Rational64) -> Rational64 {
        let d = x - Rational64::new(1, 2);
        self.peak - self.curvature * d * d
    }

    pub fn midpoint_margin(&self, x: Rational64, t: Rational64) -> Rational64 {
        self.value(x - t) + self.value(x + t) + t * 2 - self.value(x) * 2
    }

    /// Largest t with a non-negative margin.
    pub fn max_step(&self) -> Option<Rational64> {
        (self.curvature > Rational64::from_integer(0)).then(|| self.curvature.recip())
    }
}

/// Floating-point f(x) = 3/4 − (64/7)(x − ½)², for reports.
pub fn guu_f(x: f64) -> f64 {
    0.75 - 64.0 / 7.0 * (x - 0.5) * (x - 0.5)
}

/// Outcome of sweeping the midpoint inequality over a rational grid.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GridCheck {
    pub points: usize,
    pub violations: usize,
    /// Grid steps t > 0 where the margin is exactly zero at every x.
    pub tight_steps: Vec<String>,
}

/// Checks f(x−t) + f(x+t) + 2t ≥ 2f(x) exactly for x = i/x_den (0 ≤ i ≤
/// x_den) and t = j/t_den for 0 ≤ t ≤ t_max.
pub fn midpoint_grid_check(f: &Quadratic, x_den: i64, t_den: i64, t_max: Rational64) -> GridCheck {
    let ts: Vec<Rational64> = (0..)
        .map(|j| Rational64::new(j, t_den))
        .take_while(|t| *t <= t_max)
        .collect();
    let zero = Rational64::from_integer(0);
    let mut points = 0;
    let mut violations = 0;
    let mut tight_steps = Vec::new();
    for &t in &ts {
        let mut all_zero = true;
        for i in 0..=x_den {
            let margin = f.midpoint_margin(Rational64::new(i, x_den), t);
            points += 1;
            if margin < zero {
                violations += 1;
            }
            all_zero &= margin == zero;
        }
        if all_zero && t > zero {
            tight_steps.push(t.to_string());
        }
    }
    GridCheck { points, violations, tight_steps }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypercube::{build_hypercube, facets, gray_numbering, Host};
    use crate::metrics::linear_cutwidth;
    use itertools::Itertools;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn r(a: i64, b: i64) -> Rational64 {
        Rational64::new(a, b)
    }

    #[test]
    fn boundary_examples() {
        let q3 = build_hypercube(3).unwrap();
        let one = VertexSet::from_vertices(8, [5]).unwrap();
        assert_eq!(edge_boundary(&q3, &one).unwrap(), 3);
        let facet = VertexSet::from_vertices(8, facets(3).unwrap()[0].members.clone()).unwrap();
        assert_eq!(edge_boundary(&q3, &facet).unwrap(), 4);
        let all = VertexSet::from_vertices(8, 0..8).unwrap();
        assert_eq!(edge_boundary(&q3, &all).unwrap(), 0);
        let too_big = VertexSet::from_vertices(9, [8]).unwrap();
        assert!(edge_boundary(&q3, &too_big).is_err());
        assert!(VertexSet::from_vertices(8, [8]).is_err());
    }

    #[test]
    fn theta_exact_examples() {
        let t3 = ThetaTable::exact(3).unwrap();
        assert_eq!(t3.values, vec![0, 3, 4, 5, 4, 5, 4, 3, 0]);
        assert_eq!(theta_exact(4, 5).unwrap(), 10);
        assert_eq!(theta_exact(2, 0).unwrap(), 0);
        assert!(matches!(theta_exact(5, 1), Err(Error::Dimension { .. })));
        assert!(theta_exact(3, 9).is_err());
    }

    #[test]
    fn theta_exact_n4_by_combinations() {
        // second oracle for one size: enumerate the 4368 5-subsets directly
        let q4 = build_hypercube(4).unwrap();
        let subsets = (0..16usize).combinations(5);
        let mut count = 0;
        let best = subsets
            .map(|c| {
                count += 1;
                edge_boundary(&q4, &VertexSet::from_vertices(16, c).unwrap()).unwrap()
            })
            .min()
            .unwrap();
        assert_eq!((count, best), (4368, 10));
    }

    #[test]
    fn theta_recursive_examples() {
        assert_eq!(theta_recursive(3, 3).unwrap(), 5);
        assert_eq!(theta_recursive(4, 5).unwrap(), 10);
        assert_eq!(theta_recursive(5, 11).unwrap(), 21);
        assert_eq!(theta_recursive(5, 11).unwrap(), (64 - 1) / 3);
        assert_eq!(theta_recursive(0, 0).unwrap(), 0);
        assert_eq!(theta_recursive(1, 1).unwrap(), 1);
        assert!(theta_recursive(3, 9).is_err());
        assert!(theta_recursive(63, 0).is_err());
    }

    #[test]
    fn recursion_matches_subset_scan() {
        for n in 0..=THETA_EXACT_MAX_DIM {
            let exact = ThetaTable::exact(n).unwrap();
            let table = ThetaTable::recursive(n).unwrap();
            assert_eq!(exact, table, "n={n}");
            for l in 0..=1u64 << n {
                assert_eq!(theta_recursive(n, l).unwrap(), exact.values[l as usize]);
            }
        }
    }

    #[test]
    fn table_agrees_with_pointwise_recursion() {
        for n in 0..=12 {
            let table = ThetaTable::recursive(n).unwrap();
            for (l, &v) in table.values.iter().enumerate() {
                assert_eq!(theta_recursive(n, l as u64).unwrap(), v);
            }
        }
    }

    #[test]
    fn recursion_branches_meet_and_table_is_symmetric() {
        for n in 2..=20u32 {
            let quarter = 1u64 << (n - 2);
            let low = 2 * quarter + theta_recursive(n - 2, quarter).unwrap();
            let high = (1u64 << (n - 1)) + theta_recursive(n - 2, 0).unwrap();
            assert_eq!(low, high, "n={n}");
        }
        for n in 0..=14 {
            let t = ThetaTable::recursive(n).unwrap();
            let full = t.values.len() - 1;
            assert_eq!((t.values[0], t.values[full]), (0, 0));
            for l in 0..=full {
                assert_eq!(t.values[l], t.values[full - l]);
            }
        }
    }

    #[test]
    fn random_sets_respect_theta() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in 1..=6u32 {
            let g = build_hypercube(n).unwrap();
            let m = 1usize << n;
            for _ in 0..300 {
                let set = VertexSet::from_vertices(m, (0..m).filter(|_| rng.gen_bool(0.5))).unwrap();
                let boundary = edge_boundary(&g, &set).unwrap() as u64;
                assert!(boundary >= theta_recursive(n, set.len() as u64).unwrap());
                assert_eq!(boundary, edge_boundary(&g, &set.complement()).unwrap() as u64);
            }
        }
    }

    #[test]
    fn linear_gap_load_is_prefix_boundary() {
        let q4 = build_hypercube(4).unwrap();
        let eta = gray_numbering(4).unwrap().with_host(Host::Linear);
        let (_, profile) = linear_cutwidth(&q4, &eta).unwrap();
        for (l, &load) in profile.loads.iter().enumerate() {
            let prefix = VertexSet::from_vertices(16, eta.placement()[..=l].iter().copied()).unwrap();
            assert_eq!(load, edge_boundary(&q4, &prefix).unwrap());
            assert!(load as u64 >= theta_recursive(4, l as u64 + 1).unwrap());
        }
    }

    #[test]
    fn type_split_examples() {
        let f = &facets(3).unwrap()[0];
        let s = VertexSet::from_vertices(8, f.members.clone()).unwrap();
        assert_eq!(type_and_split(3, &s).unwrap(), (0, 4));

        // 11 vertices of one Q4 facet plus 5 of the other, balanced on the
        // remaining axes: an 11/5 split whose Type is the small side
        let split_11_5 = VertexSet::from_vertices(32, (0..11).chain(16 + 11..32)).unwrap();
        assert_eq!(type_and_split(5, &split_11_5).unwrap(), (5, 11));

        // the Gray side set at diameter 5 splits 11/5 across axis 4 but only
        // 3/13 across another axis
        let gray = gray_numbering(5).unwrap();
        let side = VertexSet::from_vertices(32, gray.placement()[5..21].iter().copied()).unwrap();
        assert_eq!((0..32).filter(|&v| side.contains(v) && v >> 4 & 1 == 0).count(), 11);
        assert_eq!(type_and_split(5, &side).unwrap(), (3, 13));
    }

    #[test]
    fn big_and_small() {
        let f = &facets(3).unwrap()[0];
        let facet = VertexSet::from_vertices(8, f.members.clone()).unwrap();
        assert!(!is_big(3, &facet).unwrap());
        assert!(is_small(3, &facet).unwrap());

        let type_one = VertexSet::from_vertices(8, [0b000, 0b001, 0b010, 0b111]).unwrap();
        assert_eq!(type_and_split(3, &type_one).unwrap().0, 1);
        assert!(is_big(3, &type_one).unwrap() && is_small(3, &type_one).unwrap());

        // first Type-2 half-set of Q4 in lexicographic combination order
        let witness = (0..16usize)
            .combinations(8)
            .map(|c| VertexSet::from_vertices(16, c).unwrap())
            .find(|s| type_and_split(4, s).unwrap().0 == 2)
            .unwrap();
        assert!(is_big(4, &witness).unwrap());

        assert!(is_big(3, &VertexSet::from_vertices(8, [0]).unwrap()).is_err());
        assert!(is_big(2, &VertexSet::from_vertices(4, [0, 1]).unwrap()).is_err());
    }

    #[test]
    fn guu_quadratic_values() {
        let f = Quadratic::guu();
        assert_eq!(f.value(r(1, 2)), r(3, 4));
        assert_eq!(f.value(r(0, 1)), r(3, 4) - r(16, 7));
        assert_eq!(f.max_step(), Some(r(7, 64)));
        for x in [r(0, 1), r(1, 3), r(1, 2), r(9, 10)] {
            assert_eq!(f.midpoint_margin(x, r(7, 64)), r(0, 1));
            let t = r(1, 32);
            assert_eq!(f.midpoint_margin(x, t), t * 2 - r(128, 7) * t * t);
        }
        assert!(f.midpoint_margin(r(1, 2), r(8, 64)) < r(0, 1));
        assert!((guu_f(0.5) - 0.75).abs() < 1e-15);
        assert!((guu_f(0.0) - (0.75 - 16.0 / 7.0)).abs() < 1e-12);
    }

    #[test]
    fn exploratory_five_sixths_quadratic() {
        // no claim: only that the admissible step shrinks as k grows
        let steps: Vec<_> = [4, 8, 16]
            .map(|k| Quadratic::five_sixths(r(k, 1)).max_step().unwrap())
            .to_vec();
        assert!(steps.windows(2).all(|w| w[0] > w[1]));
    }

    #[test]
    fn small_grid_check() {
        let check = midpoint_grid_check(&Quadratic::guu(), 64, 64, r(7, 64));
        assert_eq!(check.points, 65 * 8);
        assert_eq!(check.violations, 0);
        assert_eq!(check.tight_steps, vec!["7/64".to_string()]);
    }

    proptest! {
        #[test]
        fn type_plus_split_is_size(n in 1u32..=6, seed in any::<u64>()) {
            let m = 1usize << n;
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let set = VertexSet::from_vertices(m, (0..m).filter(|_| rng.gen_bool(0.5))).unwrap();
            let (t, s) = type_and_split(n, &set).unwrap();
            prop_assert_eq!(t + s, set.len());
        }
    }
}
