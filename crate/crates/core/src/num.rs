//! Exact numeric types: rational expansion ratios and half-integer δ values.

use alloc::format;
use alloc::string::String;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

/// Exact non-negative rational, kept in canonical reduced form by the
/// underlying `num_rational` type.
pub type Ratio = num_rational::BigRational;

/// Build a ratio from small integers.
pub fn ratio(num: i64, den: i64) -> Ratio {
    Ratio::new(BigInt::from(num), BigInt::from(den))
}

/// Exact rational value of a finite `f64`.
pub fn ratio_from_f64(x: f64) -> Ratio {
    Ratio::from_float(x).expect("finite float")
}

/// Outward-rounded (upper) rational enclosure of a bound computed in `f64`.
///
/// Bound formulas involve `ln` and `2^x`, so the `f64` value carries rounding
/// error of a few ulps; inflating by a relative 1e-9 guarantees the returned
/// rational is an upper bound on the true value, so "expansion <= bound"
/// checks never fail spuriously.
pub fn ratio_upper(x: f64) -> Ratio {
    debug_assert!(x.is_finite() && x >= 0.0);
    ratio_from_f64(x * (1.0 + 1e-9) + f64::MIN_POSITIVE)
}

/// Render a ratio as `num/den` (or just `num` for integers).
pub fn ratio_display(r: &Ratio) -> String {
    if r.is_integer() {
        format!("{}", r.numer())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Approximate a ratio as `f64` (for reporting only, never for comparisons).
pub fn ratio_to_f64(r: &Ratio) -> f64 {
    let n = r.numer().to_f64().unwrap_or(f64::NAN);
    let d = r.denom().to_f64().unwrap_or(f64::NAN);
    n / d
}

/// An exact half-integer, stored as a count of halves.
///
/// ρ values of the four-point condition are always multiples of 1/2 on
/// integer distances, so δ and every threshold derived from it (12δ, 35δ,
/// 50δ, ...) stays exact.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfInt(i64);

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt(0);
    pub const HALF: HalfInt = HalfInt(1);
    pub const ONE: HalfInt = HalfInt(2);

    pub fn from_halves(halves: i64) -> Self {
        HalfInt(halves)
    }

    pub fn from_int(v: i64) -> Self {
        HalfInt(2 * v)
    }

    pub fn halves(self) -> i64 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// `max(self, 1/2)`: the effective δ used by every downstream algorithm.
    pub fn effective(self) -> Self {
        if self.0 < 1 {
            HalfInt(1)
        } else {
            self
        }
    }

    /// `⌊k · self⌋` computed exactly.
    pub fn floor_mul(self, k: i64) -> i64 {
        (k * self.0).div_euclid(2)
    }

    /// `⌈k · self⌉` computed exactly.
    pub fn ceil_mul(self, k: i64) -> i64 {
        (k * self.0 + 1).div_euclid(2)
    }

    pub fn as_f64(self) -> f64 {
        self.0 as f64 / 2.0
    }

    pub fn to_ratio(self) -> Ratio {
        ratio(self.0, 2)
    }

    /// Doubled value, i.e. `2·self` as an exact integer.
    pub fn doubled(self) -> i64 {
        self.0
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 % 2 == 0 {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

impl core::ops::Add for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: HalfInt) -> HalfInt {
        HalfInt(self.0 + rhs.0)
    }
}

/// Compare a half-integer against an integer without going through floats.
pub fn halfint_cmp_int(h: HalfInt, v: i64) -> Ordering {
    h.halves().cmp(&(2 * v))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn halfint_display_and_floor() {
        assert_eq!(format!("{}", HalfInt::from_halves(3)), "3/2");
        assert_eq!(format!("{}", HalfInt::from_int(2)), "2");
        // ⌊12 · 1/2⌋ = 6, ⌊35 · 1/2⌋ = 17, ⌊50 · 1/2⌋ = 25
        let d = HalfInt::HALF;
        assert_eq!(d.floor_mul(12), 6);
        assert_eq!(d.floor_mul(35), 17);
        assert_eq!(d.floor_mul(50), 25);
    }

    #[test]
    fn effective_delta_floor() {
        assert_eq!(HalfInt::ZERO.effective(), HalfInt::HALF);
        assert_eq!(HalfInt::ONE.effective(), HalfInt::ONE);
        assert_eq!(HalfInt::from_halves(5).effective(), HalfInt::from_halves(5));
    }

    #[test]
    fn ratio_upper_is_upper() {
        let exact = ratio(1, 3);
        let upper = ratio_upper(1.0 / 3.0);
        assert!(upper >= exact);
    }
}
