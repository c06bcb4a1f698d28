//! Evaluation of the closed-form expansion bounds and parameter thresholds.
//!
//! All formulas mix ln / 2^x with rational parameters, so they are evaluated
//! in `f64` and rounded outward (up): a returned bound is always ≥ the true
//! value, which keeps "expansion ≤ bound" acceptance checks one-sided. `log`
//! means log₂ except where `ln` is written.

use alloc::format;
use alloc::string::String;

use libm::{ceil, exp2, floor, log, log2, pow, sqrt};

use crate::error::Error;
use crate::num::{ratio_to_f64, ratio_upper, HalfInt, Ratio};
use crate::Result;

fn check_common(n: usize, d: u32, delta: HalfInt, mu: &Ratio) -> Result<f64> {
    if n < 4 {
        return Err(Error::BadParameter(format!("n = {n} < 4")));
    }
    if d < 2 {
        return Err(Error::BadParameter(format!("d = {d} < 2")));
    }
    if delta < HalfInt::HALF {
        return Err(Error::BadParameter(format!("delta = {delta} < 1/2")));
    }
    let mu = ratio_to_f64(mu);
    if !(mu > 0.0 && mu < 1.0) {
        return Err(Error::BadParameter(format!("mu = {mu} outside (0,1)")));
    }
    Ok(mu)
}

/// 8·ln(n/2)/Δ — the first (ball-sweep) term of the nested-family bound.
pub fn part1_threshold(delta_cap: u32, n: usize) -> f64 {
    8.0 * log(n as f64 / 2.0) / delta_cap as f64
}

/// max{ (1/Δ)^{1−μ}, 500·ln n / (Δ·2^{Δ^μ/(28·δ·log(2d))}) } — the
/// cylinder-sweep term.
pub fn part2_threshold(delta_cap: u32, n: usize, d: u32, delta: HalfInt, mu: f64) -> f64 {
    let dd = delta_cap as f64;
    let t_a = pow(1.0 / dd, 1.0 - mu);
    let expo = pow(dd, mu) / (28.0 * delta.as_f64() * log2(2.0 * d as f64));
    let t_b = 500.0 * log(n as f64) / (dd * exp2(expo));
    t_a.max(t_b)
}

/// min{ part1, part2 } as an outward-rounded rational.
pub fn nested_family_bound(
    delta_cap: u32,
    n: usize,
    d: u32,
    delta: HalfInt,
    mu: &Ratio,
) -> Result<Ratio> {
    let mu = check_common(n, d, delta, mu)?;
    if delta_cap < 1 {
        return Err(Error::BadParameter(String::from("Delta < 1")));
    }
    let v = part1_threshold(delta_cap, n).min(part2_threshold(delta_cap, n, d, delta, mu));
    Ok(ratio_upper(v))
}

/// Diameter-based bound max{ (log d/log n)^{1−μ},
/// 500·log d / 2^{log^μ n/(28·δ·log^{1+μ}(2d))} }, outward-rounded.
pub fn diameter_family_bound(n: usize, d: u32, delta: HalfInt, mu: &Ratio) -> Result<Ratio> {
    let mu = check_common(n, d, delta, mu)?;
    let ld = log2(d as f64);
    let ln2 = log2(n as f64);
    let t1 = pow(ld / ln2, 1.0 - mu);
    let expo = pow(ln2, mu) / (28.0 * delta.as_f64() * pow(log2(2.0 * d as f64), 1.0 + mu));
    let t2 = 500.0 * ld / exp2(expo);
    Ok(ratio_upper(t1.max(t2)))
}

/// Per-family bound of the segmented construction: Δ replaced by Δ/τ and the
/// constants tightened to 360 / 7δ, outward-rounded.
pub fn segment_family_bound(
    delta_cap: u32,
    tau: u32,
    n: usize,
    d: u32,
    delta: HalfInt,
    mu: &Ratio,
) -> Result<Ratio> {
    let mu = check_common(n, d, delta, mu)?;
    if tau < 1 || tau > delta_cap {
        return Err(Error::BadParameter(format!("tau = {tau} outside [1, Delta]")));
    }
    let seg = delta_cap as f64 / tau as f64;
    let t1 = pow(1.0 / seg, 1.0 - mu);
    let expo = pow(seg, mu) / (7.0 * delta.as_f64() * log2(2.0 * d as f64));
    let t2 = 360.0 * log2(n as f64) / (seg * exp2(expo));
    Ok(ratio_upper(t1.max(t2)))
}

/// Number of nested subsets guaranteed: t = max{⌊Δ^μ/(56·log d)⌋, 1}.
pub fn guaranteed_family_size(delta_cap: u32, d: u32, mu: &Ratio) -> u32 {
    let mu = ratio_to_f64(mu);
    let t = floor(pow(delta_cap as f64, mu) / (56.0 * log2(d as f64)));
    if t.is_finite() && t >= 1.0 {
        t as u32
    } else {
        1
    }
}

/// Cylinder radius of the α sweep's starting point: ⌊αΔ⌋ with
/// α = 1/(14·Δ^{1−μ}·log(2d)), i.e. ⌊Δ^μ/(14·log(2d))⌋.
pub fn alpha_sweep_radius(delta_cap: u32, d: u32, mu: f64) -> u32 {
    floor(pow(delta_cap as f64, mu) / (14.0 * log2(2.0 * d as f64))) as u32
}

/// Outcome of the segment-count feasibility checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TauCheck {
    /// τ ≤ Δ/4.
    pub quarter_ok: bool,
    /// τ < Δ/(42·δ·log(2d)·log(2Δ))^{1/μ}.
    pub statement_ok: bool,
    /// Δ/(60τ)·2^{(Δ/τ)^μ/(28·δ·log(2d))} > Δ/τ + 2Δ.
    pub growth_ok: bool,
}

impl TauCheck {
    pub fn is_valid(&self) -> bool {
        self.quarter_ok && self.statement_ok && self.growth_ok
    }

    pub fn failure(&self) -> Option<&'static str> {
        if !self.quarter_ok {
            Some("tau > Delta/4")
        } else if !self.statement_ok {
            Some("tau >= Delta / (42 delta log(2d) log(2Delta))^(1/mu)")
        } else if !self.growth_ok {
            Some("Delta/(60 tau) * 2^((Delta/tau)^mu / (28 delta log(2d))) <= Delta/tau + 2 Delta")
        } else {
            None
        }
    }
}

/// Check the two τ constraints of the segmented construction.
pub fn validate_tau(
    delta_cap: u32,
    tau: u32,
    delta: HalfInt,
    d: u32,
    mu: &Ratio,
) -> Result<TauCheck> {
    let mu = check_common(4, d, delta, mu)?;
    if delta_cap <= 8 {
        return Err(Error::BadParameter(format!("Delta = {delta_cap} <= 8")));
    }
    if tau < 1 {
        return Err(Error::BadParameter(String::from("tau < 1")));
    }
    let dd = delta_cap as f64;
    let tf = tau as f64;
    let quarter_ok = 4 * tau <= delta_cap;
    let denom = pow(
        42.0 * delta.as_f64() * log2(2.0 * d as f64) * log2(2.0 * dd),
        1.0 / mu,
    );
    let statement_ok = tf < dd / denom;
    let seg = dd / tf;
    let growth_ok = dd / (60.0 * tf) * exp2(pow(seg, mu) / (28.0 * delta.as_f64() * log2(2.0 * d as f64)))
        > seg + 2.0 * dd;
    Ok(TauCheck { quarter_ok, statement_ok, growth_ok })
}

/// Distance threshold 48δ + 8δ·log n that s and t must exceed for the
/// disjoint-cut construction.
pub fn cut_distance_threshold(delta: HalfInt, n: usize) -> f64 {
    48.0 * delta.as_f64() + 8.0 * delta.as_f64() * log2(n as f64)
}

/// ⌈8δ·log n⌉, the slack kept between the last cut level and t.
pub fn cut_tail_margin(delta: HalfInt, n: usize) -> u32 {
    ceil(8.0 * delta.as_f64() * log2(n as f64)) as u32
}

/// d^{⌊12δ⌋+1}, the hitting-set branch threshold, saturating at `u64::MAX`.
pub fn hitting_threshold(d: u32, delta: HalfInt) -> u64 {
    let exp = delta.floor_mul(12) + 1;
    let mut acc: u64 = 1;
    for _ in 0..exp {
        acc = acc.saturating_mul(d as u64);
    }
    acc
}

/// Approximation-ratio ceiling max{d^{12δ+1}, 100δ, 48δ + 8δ·log n}.
pub fn hitting_ratio_bound(d: u32, delta: HalfInt, n: usize) -> f64 {
    let t = hitting_threshold(d, delta) as f64;
    t.max(100.0 * delta.as_f64()).max(cut_distance_threshold(delta, n))
}

/// Block length η = ⌈(8/ε)·ln n⌉ of the level-block search.
pub fn level_block_length(eps: f64, n: usize) -> u32 {
    ceil(8.0 / eps * log(n as f64)) as u32
}

/// Cylinder radius ⌈αΔ⌉ with α = 1/(14·√Δ·log(2d)) (the μ = 1/2 sweep start).
pub fn sse_cylinder_radius(delta_cap: u32, d: u32) -> u32 {
    ceil(sqrt(delta_cap as f64) / (14.0 * log2(2.0 * d as f64))) as u32
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::{ratio, ratio_to_f64};

    fn half() -> Ratio {
        ratio(1, 2)
    }

    #[test]
    fn nested_bound_path100_numbers() {
        // Δ=99, n=100, d=2, δ=1/2, μ=1/2
        let t1 = part1_threshold(99, 100);
        assert!((t1 - 0.3162).abs() < 1e-3, "{t1}");
        let t2 = part2_threshold(99, 100, 2, HalfInt::HALF, 0.5);
        assert!((t2 - 18.17).abs() < 0.1, "{t2}");
        let b = nested_family_bound(99, 100, 2, HalfInt::HALF, &half()).unwrap();
        let bf = ratio_to_f64(&b);
        assert!(bf > 0.316 && bf < 0.317, "{bf}");
        // 1/4 (e.g. the ball of radius 3 on the path) is under the bound
        assert!(ratio(1, 4) <= b);
    }

    #[test]
    fn nested_bound_is_generous_at_delta_one() {
        let b = nested_family_bound(1, 100, 2, HalfInt::HALF, &half()).unwrap();
        assert!(ratio_to_f64(&b) > 1.0);
    }

    #[test]
    fn diameter_bound_numbers() {
        // n = 2^16, d = 4, δ = 1/2, μ = 1/2
        let b = diameter_family_bound(1 << 16, 4, HalfInt::HALF, &half()).unwrap();
        let bf = ratio_to_f64(&b);
        // first term (2/16)^{1/2} ≈ 0.3536; second ≈ 1000/2^{4/72.7} ≈ 962.6
        assert!((bf - 962.6).abs() < 1.0, "{bf}");
        // d → n pushes the first term to 1
        let b2 = diameter_family_bound(64, 64, HalfInt::HALF, &half()).unwrap();
        assert!(ratio_to_f64(&b2) >= 1.0);
    }

    #[test]
    fn family_size_floor() {
        // ⌊√99/56⌋ = 0 → clamped to 1
        assert_eq!(guaranteed_family_size(99, 2, &half()), 1);
        // large Δ: ⌊√10^6/56⌋ = 17
        assert_eq!(guaranteed_family_size(1_000_000, 2, &half()), 17);
    }

    #[test]
    fn tau_checks() {
        assert!(validate_tau(8, 1, HalfInt::HALF, 2, &half()).is_err());
        let c = validate_tau(100, 30, HalfInt::HALF, 2, &half()).unwrap();
        assert!(!c.quarter_ok);
        assert!(!c.is_valid());
        // huge Δ with τ = 1: the exponential term dominates
        let c = validate_tau(4_000_000, 1, HalfInt::HALF, 2, &half()).unwrap();
        assert!(c.growth_ok && c.quarter_ok);
        assert!(c.is_valid(), "{c:?}");
    }

    #[test]
    fn cut_thresholds_path200() {
        // δ=1/2: 24 + 4·log2(200) ≈ 54.58
        let t = cut_distance_threshold(HalfInt::HALF, 200);
        assert!((t - 54.575).abs() < 0.01, "{t}");
        assert_eq!(cut_tail_margin(HalfInt::HALF, 200), 31);
        assert_eq!(hitting_threshold(2, HalfInt::HALF), 128);
    }

    #[test]
    fn sse_parameters() {
        // ε=1/2, n=16: ⌈16·ln 16⌉ = ⌈44.36⌉ = 45
        assert_eq!(level_block_length(0.5, 16), 45);
        assert!(sse_cylinder_radius(2, 4) >= 1);
    }
}
