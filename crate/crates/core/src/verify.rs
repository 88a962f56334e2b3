//! Reproduction battery: each check recomputes a known value or property
//! for every dimension up to a limit and reports pass, fail or skip.

use std::fmt::Write as _;

use num_rational::Rational64;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::bounds::{bounds_report, ct_value, cwl_closed_form, lcw_value};
use crate::error::{check_dim, Result};
use crate::hypercube::{build_hypercube, facets, gray_numbering, Host, Numbering};
use crate::isoperimetric::{
    midpoint_grid_check, theta_exact, theta_recursive, type_and_split, Quadratic, VertexSet,
};
use crate::metrics::{cyclic_cutwidth_with_budget, cyclic_wirelength, DEFAULT_ROUTING_BUDGET};
use crate::search::{bb_ccw, exhaustive_ccw, exhaustive_lcw, BbOptions};
use crate::split::{
    bracket, diameter_sweep, full_rotation, min_diameter_crossings, theorem_lower_bound, Bracket,
    Diameter,
};

pub const VERIFY_MAX_DIM: u32 = 30;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Pass,
    Fail,
    Skip,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub id: u32,
    pub name: &'static str,
    pub outcome: Outcome,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub n_max: u32,
    pub checks: Vec<Check>,
    pub passed: bool,
}

/// Sweep continuity violations over `samples` seeded random cyclic
/// numberings of Qₙ, every facet: a step of more than one, or a split value
/// between a position and its flip that the half-turn never visits.
pub fn sweep_violations(n: u32, samples: usize, seed: u64) -> Result<usize> {
    check_dim(n, 1, crate::hypercube::MAX_DIM)?;
    let q = build_hypercube(n)?;
    let m = q.vertex_count();
    let half = m / 2;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut violations = 0;
    for _ in 0..samples {
        let mut placement: Vec<usize> = (0..m).collect();
        placement.shuffle(&mut rng);
        let eta = Numbering::new(Host::Cyclic, placement)?;
        for f in facets(n)? {
            let part = VertexSet::from_vertices(m, f.members.iter().copied())?;
            let r = full_rotation(&q, &eta, &part)?;
            for p in 0..m {
                if r[p].abs_diff(r[(p + 1) % m]) > 1 {
                    violations += 1;
                }
                let flip = r[(p + half) % m];
                if flip != half - r[p] {
                    violations += 1;
                }
                let (lo, hi) = (r[p].min(flip), r[p].max(flip));
                let seen: Vec<usize> = (0..=half).map(|i| r[(p + i) % m]).collect();
                violations += (lo..=hi).filter(|x| !seen.contains(x)).count();
            }
        }
    }
    Ok(violations)
}

/// Sets violating Type(S) + Split(S) = |S| among `samples` seeded random
/// subsets of Qₙ (sizes uniform in 0..=2ⁿ).
pub fn type_split_violations(n: u32, samples: usize, seed: u64) -> Result<usize> {
    check_dim(n, 1, crate::hypercube::MAX_DIM)?;
    let m = 1usize << n;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut violations = 0;
    for _ in 0..samples {
        let size = rng.gen_range(0..=m);
        let set = VertexSet::from_vertices(m, rand::seq::index::sample(&mut rng, m, size))?;
        let (ty, split) = type_and_split(n, &set)?;
        if ty + split != set.len() {
            violations += 1;
        }
    }
    Ok(violations)
}

/// First facet and diameter of the Gray layout of Qₙ whose bracket equals
/// `target`, in facet order then diameter position.
pub fn find_bracket(n: u32, target: &Bracket) -> Result<Option<(u32, u8, Diameter)>> {
    let q = build_hypercube(n)?;
    let eta = gray_numbering(n)?;
    for f in facets(n)? {
        let part = VertexSet::from_vertices(q.vertex_count(), f.members.iter().copied())?;
        for position in 0..diameter_sweep(&q, &eta, &part)?.len() {
            let d = Diameter { position };
            if bracket(&q, &eta, d, &part)? == *target {
                return Ok(Some((f.axis, f.value, d)));
            }
        }
    }
    Ok(None)
}

struct Battery {
    checks: Vec<Check>,
}

impl Battery {
    fn push(&mut self, name: &'static str, outcome: Outcome, detail: String) {
        let id = self.checks.len() as u32 + 1;
        self.checks.push(Check { id, name, outcome, detail });
    }

    fn record(&mut self, name: &'static str, ok: bool, detail: String) {
        self.push(name, if ok { Outcome::Pass } else { Outcome::Fail }, detail);
    }

    fn skip(&mut self, name: &'static str, need: u32) {
        self.push(name, Outcome::Skip, format!("needs n-max >= {need}"));
    }
}

pub fn verify(n_max: u32) -> Result<VerifyReport> {
    check_dim(n_max, 2, VERIFY_MAX_DIM)?;
    let mut b = Battery { checks: Vec::new() };

    // Gray layouts reach the conjectured value
    let mut ok = true;
    let mut detail = String::new();
    for n in 2..=n_max.min(4) {
        let got = cyclic_cutwidth_with_budget(&build_hypercube(n)?, &gray_numbering(n)?, DEFAULT_ROUTING_BUDGET)?;
        let want = ct_value(n)?;
        ok &= got.exact && got.value as u64 == want;
        write!(detail, "n={n}: {} (want {want}); ", got.value).ok();
    }
    if n_max >= 5 {
        let got = cyclic_cutwidth_with_budget(&build_hypercube(5)?, &gray_numbering(5)?, DEFAULT_ROUTING_BUDGET)?;
        ok &= got.value <= 13;
        write!(detail, "n=5: upper {}", got.value).ok();
    }
    b.record("gray_ccw", ok, detail.trim_end_matches([';', ' ']).to_string());

    if n_max >= 3 {
        let q3 = build_hypercube(3)?;
        let ccw = exhaustive_ccw(&q3)?;
        let lcw = exhaustive_lcw(&q3)?;
        b.record(
            "exhaustive_q3",
            ccw.optimum == 3 && ccw.nodes_explored == 2520 && lcw.optimum == 5,
            format!("ccw {} over {} orders, lcw {}", ccw.optimum, ccw.nodes_explored, lcw.optimum),
        );
    } else {
        b.skip("exhaustive_q3", 3);
    }

    let top = n_max.min(crate::isoperimetric::THETA_EXACT_MAX_DIM);
    let mut mismatches = 0;
    for n in 1..=top {
        for l in 0..=(1usize << n) {
            if theta_recursive(n, l as u64)? != theta_exact(n, l)? {
                mismatches += 1;
            }
        }
    }
    b.record("theta_recursion", mismatches == 0, format!("n=1..{top}, {mismatches} mismatches"));

    let mut bad = Vec::new();
    for n in 2..=VERIFY_MAX_DIM {
        let half = min_diameter_crossings(n)?.div_ceil(2);
        if half != theorem_lower_bound(n)? || half != ct_value(n)? {
            bad.push(n);
        }
    }
    b.record("cut_bound_consistency", bad.is_empty(), format!("n=2..{VERIFY_MAX_DIM}, failing {bad:?}"));

    if n_max >= 5 {
        let target = Bracket([[11, 5, 5], [10, 6, 10], [5, 5, 11]]);
        let found = find_bracket(5, &target)?;
        let detail = match found {
            Some((axis, value, d)) => format!("axis {axis} value {value} diameter {}", d.position),
            None => "not found".into(),
        };
        b.record("q5_bracket", found.is_some(), detail);
    } else {
        b.skip("q5_bracket", 5);
    }

    let top = n_max.min(12);
    let mut bad = Vec::new();
    for n in 2..=top {
        if cyclic_wirelength(&build_hypercube(n)?, &gray_numbering(n)?)? as u64 != cwl_closed_form(n)? {
            bad.push(n);
        }
    }
    b.record("gray_cwl", bad.is_empty(), format!("n=2..{top}, failing {bad:?}"));

    let n = n_max.min(4);
    let v = sweep_violations(n, 1000, 0)?;
    b.record("sweep_continuity", v == 0, format!("Q{n}, 1000 numberings, {v} violations"));

    if n_max >= 3 {
        let top = n_max.min(6);
        let v: usize = (3..=top).map(|n| type_split_violations(n, 10_000, n as u64)).sum::<Result<_>>()?;
        b.record("type_split", v == 0, format!("n=3..{top}, 10000 sets each, {v} violations"));
    } else {
        b.skip("type_split", 3);
    }

    let grid = midpoint_grid_check(&Quadratic::guu(), 1024, 1024, Rational64::new(7, 64));
    let tight = grid.tight_steps == ["7/64"];
    b.record(
        "midpoint_inequality",
        grid.violations == 0 && tight,
        format!("{} points, {} violations, tight at {:?}", grid.points, grid.violations, grid.tight_steps),
    );

    let top = n_max.min(6);
    let mut ok = true;
    let mut detail = String::new();
    for n in 2..=top {
        let r = bounds_report(n)?;
        ok &= r.chain_holds;
        write!(detail, "n={n}: {} <= {} <= {}; ", r.lower_half_lcw.max(r.lower_from_cwl), r.ct_value, r.upper_5_8).ok();
    }
    let known = [5, 10, 21, 42];
    for n in 3..=top {
        ok &= lcw_value(n)? == known[n as usize - 3];
    }
    if n_max >= 3 {
        let scanned = exhaustive_lcw(&build_hypercube(3)?)?.optimum as u64;
        ok &= scanned == lcw_value(3)?;
        write!(detail, "lcw(Q3) by scan {scanned}").ok();
    }
    b.record("bounds_chain", ok, detail.trim_end_matches([';', ' ']).to_string());

    if n_max >= 4 {
        let res = bb_ccw(&build_hypercube(4)?, &BbOptions { cube_symmetry: true, ..BbOptions::default() })?;
        b.record(
            "bb_q4",
            res.exact && res.optimum == 6,
            format!("optimum {} exact {} nodes {}", res.optimum, res.exact, res.nodes_explored),
        );
    } else {
        b.skip("bb_q4", 4);
    }

    let passed = b.checks.iter().all(|c| c.outcome != Outcome::Fail);
    Ok(VerifyReport { n_max, checks: b.checks, passed })
}
