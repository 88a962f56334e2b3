//! Closed-form values and bounds for the cutwidth and wirelength of Qₙ.

use num_rational::Rational64;
use serde::Serialize;

use crate::error::{check_dim, Result};
use crate::isoperimetric::{ThetaTable, THETA_TABLE_MAX_DIM};
use crate::split::theorem_lower_bound;

/// Keeps 2^(2n−2) + 2^(2n−3) inside an i64.
pub const BOUNDS_MAX_DIM: u32 = 31;

/// Conjectured ccw(Qₙ) = ⌊5·2ⁿ⁻²/3⌋, the Gray layout's value.
pub fn ct_value(n: u32) -> Result<u64> {
    check_dim(n, 2, 62)?;
    Ok(((5u128 << (n - 2)) / 3) as u64)
}

/// cwl(Qₙ) = 2^(2n−2) + 2^(2n−3) − 2^(n−1).
///
/// Not defined for n = 1, where the expression is not an integer.
pub fn cwl_closed_form(n: u32) -> Result<u64> {
    check_dim(n, 2, BOUNDS_MAX_DIM)?;
    Ok((1u64 << (2 * n - 2)) + (1u64 << (2 * n - 3)) - (1u64 << (n - 1)))
}

/// The same total summed wire class by wire class along the Gray layout:
/// four runs of odd lengths 1, 3, ..., 2ⁿ⁻¹ − 1, then 2ʲ runs of odd
/// lengths up to 2ⁿ⁻ʲ − 1 for j = 2..n−1.
pub fn cwl_by_summation(n: u32) -> Result<u64> {
    check_dim(n, 2, BOUNDS_MAX_DIM)?;
    let odd_sum = |top: u64| (1..=top).step_by(2).sum::<u64>();
    let mut total = 4 * odd_sum((1u64 << (n - 1)) - 1);
    for j in 2..n {
        total += (1u64 << j) * odd_sum((1u64 << (n - j)) - 1);
    }
    Ok(total)
}

/// cwl(Qₙ)/2ⁿ as an exact fraction.
pub fn lower_bound_from_cwl_exact(n: u32) -> Result<Rational64> {
    Ok(Rational64::new(cwl_closed_form(n)? as i64, 1i64 << n))
}

/// ⌈cwl(Qₙ)/2ⁿ⌉.
pub fn lower_bound_from_cwl(n: u32) -> Result<u64> {
    Ok(cwl_closed_form(n)?.div_ceil(1 << n))
}

/// lcw(Qₙ) as the largest θₙ(ℓ).
pub fn lcw_value(n: u32) -> Result<u64> {
    check_dim(n, 1, THETA_TABLE_MAX_DIM)?;
    Ok(ThetaTable::recursive(n)?.max())
}

/// ⌊(9/16)·lcw(Qₙ)⌋.
pub fn bound_9_16(n: u32) -> Result<u64> {
    check_dim(n, 2, THETA_TABLE_MAX_DIM)?;
    Ok(9 * lcw_value(n)? / 16)
}

/// ⌊(5/8)·lcw(Qₙ)⌋.
pub fn bound_5_8(n: u32) -> Result<u64> {
    check_dim(n, 2, THETA_TABLE_MAX_DIM)?;
    Ok(5 * lcw_value(n)? / 8)
}

/// 2ⁿ·(target − 1) where target is the parity-dependent cut bound; the
/// value cwl(Qₙ) would have to exceed for the averaging argument to reach
/// the conjectured cutwidth.
pub fn cwl_threshold(n: u32) -> Result<u64> {
    check_dim(n, 2, BOUNDS_MAX_DIM)?;
    Ok((theorem_lower_bound(n)? - 1) << n)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundsReport {
    pub n: u32,
    pub ct_value: u64,
    pub theorem_bound: u64,
    pub cwl_closed: u64,
    pub lcw_value: u64,
    pub lower_half_lcw: u64,
    pub lower_from_cwl: u64,
    pub lower_from_cwl_exact: String,
    pub lower_9_16: u64,
    pub upper_5_8: u64,
    pub cwl_threshold: u64,
    pub cwl_exceeds_threshold: bool,
    pub chain_holds: bool,
}

pub fn bounds_report(n: u32) -> Result<BoundsReport> {
    check_dim(n, 2, THETA_TABLE_MAX_DIM)?;
    let ct = ct_value(n)?;
    let lcw = lcw_value(n)?;
    let cwl = cwl_closed_form(n)?;
    let lower_from_cwl = lower_bound_from_cwl(n)?;
    let lower_half_lcw = lcw.div_ceil(2);
    let upper_5_8 = bound_5_8(n)?;
    let threshold = cwl_threshold(n)?;
    Ok(BoundsReport {
        n,
        ct_value: ct,
        theorem_bound: theorem_lower_bound(n)?,
        cwl_closed: cwl,
        lcw_value: lcw,
        lower_half_lcw,
        lower_from_cwl,
        lower_from_cwl_exact: lower_bound_from_cwl_exact(n)?.to_string(),
        lower_9_16: bound_9_16(n)?,
        upper_5_8,
        cwl_threshold: threshold,
        cwl_exceeds_threshold: cwl > threshold,
        chain_holds: lower_half_lcw.max(lower_from_cwl) <= ct && ct <= upper_5_8,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ct_examples() {
        assert_eq!(ct_value(2).unwrap(), 1);
        assert_eq!(ct_value(5).unwrap(), 13);
        assert_eq!(ct_value(6).unwrap(), 26);
        assert!(ct_value(1).is_err());
    }

    #[test]
    fn cwl_examples() {
        assert_eq!(cwl_closed_form(3).unwrap(), 20);
        assert_eq!(cwl_closed_form(2).unwrap(), 4);
        assert_eq!(cwl_closed_form(5).unwrap(), 368);
        assert!(cwl_closed_form(1).is_err());
        assert!(cwl_closed_form(0).is_err());
    }

    #[test]
    fn summation_route_matches_closed_form() {
        for n in 2..=20 {
            assert_eq!(cwl_by_summation(n).unwrap(), cwl_closed_form(n).unwrap(), "n={n}");
        }
    }

    #[test]
    fn cwl_lower_bound_examples() {
        assert_eq!(lower_bound_from_cwl(3).unwrap(), 3);
        assert_eq!(lower_bound_from_cwl(4).unwrap(), 6);
        assert_eq!(lower_bound_from_cwl(5).unwrap(), 12);
        assert_eq!(lower_bound_from_cwl_exact(5).unwrap(), Rational64::new(23, 2));
        for n in 3..=20 {
            // 2^(n-2) + 2^(n-3) - 1/2
            let expect = Rational64::new((1 << (n - 2)) + (1 << (n - 3)), 1) - Rational64::new(1, 2);
            assert_eq!(lower_bound_from_cwl_exact(n).unwrap(), expect);
        }
    }

    #[test]
    fn lcw_examples() {
        assert_eq!(lcw_value(3).unwrap(), 5);
        assert_eq!(lcw_value(4).unwrap(), 10);
        assert_eq!(lcw_value(1).unwrap(), 1);
        let lcws: Vec<u64> = (3..=6).map(|n| lcw_value(n).unwrap()).collect();
        assert_eq!(lcws, [5, 10, 21, 42]);
    }

    #[test]
    fn lcw_fraction_bounds() {
        assert_eq!((bound_9_16(3).unwrap(), bound_5_8(3).unwrap()), (2, 3));
        assert_eq!((bound_9_16(4).unwrap(), bound_5_8(4).unwrap()), (5, 6));
        assert_eq!((bound_9_16(5).unwrap(), bound_5_8(5).unwrap()), (11, 13));
        assert!(bound_5_8(1).is_err());
    }

    #[test]
    fn threshold_examples() {
        assert_eq!(cwl_threshold(3).unwrap(), 16);
        assert_eq!(cwl_threshold(4).unwrap(), 80);
        assert_eq!(cwl_threshold(5).unwrap(), 384);
        let flags: Vec<bool> = (3..=5).map(|n| bounds_report(n).unwrap().cwl_exceeds_threshold).collect();
        assert_eq!(flags, [true, true, false]);
    }

    #[test]
    fn ct_equals_theorem_bound() {
        for n in 2..=30 {
            assert_eq!(ct_value(n).unwrap(), theorem_lower_bound(n).unwrap());
        }
    }

    #[test]
    fn ordering_sanity() {
        for n in 2..=10 {
            let r = bounds_report(n).unwrap();
            assert!(r.lower_from_cwl >= r.lower_half_lcw, "n={n}");
            assert!(r.chain_holds, "n={n}");
            assert!(r.lower_9_16 <= r.ct_value);
        }
    }
}
