//! High-precision ground truth for the Gaussian density, upper tail and
//! Mills' ratio.
//!
//! Two independent evaluation routes are kept side by side and cross-checked
//! by the verification suites:
//!
//! * a Maclaurin series for the distribution function, summed until terms
//!   fall below 1e-35 (fast and alternating for small x);
//! * the classic continued fraction for the tail, evaluated by backward
//!   recurrence at an adaptively doubled depth (fast for large x).
//!
//! `upper_tail` routes to the series for x <= 2 and the fraction for x > 2.
//! Beyond x ~ 36 the tail leaves the f64 exponent range; `upper_tail_scaled`
//! keeps full precision there via a (mantissa, base-10 exponent) pair.

use crate::dd::{consts, pow10, Dd};
use crate::tol;

/// Where the plain double-double tail starts losing its low limb to the
/// subnormal range; the scaled representation takes over.
const PLAIN_TAIL_LIMIT: f64 = 36.0;

/// Depth cap for the adaptive continued fraction (reached only for x ~ 0.05
/// and below, where the series is the primary route anyway).
const CF_MAX_DEPTH: u32 = 1 << 22;

/// Past this the tail's decimal exponent leaves i32; the scaled forms
/// return an exact zero mantissa (the value is zero at any representable
/// precision) and Mills' ratio degenerates to its 1/x asymptote.
const SCALED_X_MAX: f64 = 6.0e4;

/// Standard Gaussian density exp(-x^2/2)/sqrt(2*pi).
pub fn gaussian_density(x: f64) -> Dd {
    let half_sq = Dd::from_prod(x, x).ldexp(-1);
    (-half_sq).exp() * consts::INV_SQRT_2PI
}

/// A positive value m * 10^e with m in [1, 10); survives past f64 underflow.
#[derive(Copy, Clone, Debug)]
pub struct Scaled {
    pub mantissa: Dd,
    pub exp10: i32,
}

impl Scaled {
    fn normalized(mut mantissa: Dd, mut exp10: i32) -> Self {
        while mantissa.hi() >= 10.0 {
            mantissa = mantissa.div_f64(10.0);
            exp10 += 1;
        }
        while !mantissa.is_zero() && mantissa.hi() < 1.0 {
            mantissa = mantissa.mul_f64(10.0);
            exp10 -= 1;
        }
        Scaled { mantissa, exp10 }
    }

    fn from_dd(v: Dd) -> Self {
        debug_assert!(v.hi() > 0.0);
        let e = v.hi().log10().floor() as i32;
        Scaled::normalized(v * pow10(-e), e)
    }

    /// Collapse to a plain double-double; underflows gracefully for
    /// exponents beyond the f64 range.
    pub fn to_dd(self) -> Dd {
        crate::dd::mul_pow10(self.mantissa, self.exp10)
    }
}

/// Density in scaled form, valid for any finite x.
pub fn gaussian_density_scaled(x: f64) -> Scaled {
    if x.abs() > SCALED_X_MAX {
        return Scaled {
            mantissa: Dd::ZERO,
            exp10: 0,
        };
    }
    // exp(-x^2/2) = 10^t, t = -(x^2/2)/ln 10; split t into integer + fraction.
    let t = -Dd::from_prod(x, x).ldexp(-1) / consts::LN10;
    let e = t.hi().floor();
    let frac = t - Dd::from_f64(e);
    let m = (frac * consts::LN10).exp() * consts::INV_SQRT_2PI;
    Scaled::normalized(m, e as i32)
}

/// Upper tail 1 - Phi(x) via the Maclaurin series of Phi, terms summed in
/// extended precision until they fall below 1e-35.
///
/// The alternating terms peak near exp(x^2/2) before shrinking, so
/// cancellation eats the result for |x| beyond ~8; this is the small-x
/// reference route. Terms are capped at 10^4 (never reached for |x| <= 64).
pub fn upper_tail_series(x: f64) -> Dd {
    let x2 = Dd::from_prod(x, x);
    let mut term = Dd::from_f64(x);
    let mut sum = Dd::ZERO;
    let mut k = 0u64;
    while term.abs().hi() >= 1e-35 && term.is_finite() && k < 10_000 {
        if k % 2 == 0 {
            sum = sum + term;
        } else {
            sum = sum - term;
        }
        k += 1;
        // term_k = term_{k-1} * x^2 (2k-1) / (2k (2k+1))
        term = (term * x2)
            .mul_f64((2 * k - 1) as f64)
            .div_f64((2 * k * (2 * k + 1)) as f64);
    }
    Dd::from_f64(0.5) - sum * consts::INV_SQRT_2PI
}

fn classic_cf_h(x: f64, depth: u32) -> Dd {
    let xd = Dd::from_f64(x);
    let mut r = xd;
    for j in (1..=depth).rev() {
        r = xd + Dd::from_f64(j as f64) / r;
    }
    r
}

/// Denominator h(x) of the tail's continued-fraction form, deepened until two
/// successive doublings agree to [`tol::CF_DEPTH_REL`].
fn adaptive_cf_h(x: f64) -> Dd {
    debug_assert!(x > 0.0);
    let guess = (40.0 / x) * (40.0 / x);
    let mut depth = (guess.clamp(32.0, CF_MAX_DEPTH as f64) as u32).next_power_of_two();
    let mut prev = classic_cf_h(x, depth);
    while depth < CF_MAX_DEPTH {
        depth *= 2;
        let cur = classic_cf_h(x, depth);
        if (((cur - prev) / cur).to_f64()).abs() < tol::CF_DEPTH_REL {
            return cur;
        }
        prev = cur;
    }
    prev
}

/// Upper tail via the continued fraction; x > 0.
pub fn upper_tail_cf(x: f64) -> Dd {
    gaussian_density(x) / adaptive_cf_h(x)
}

/// Upper tail 1 - Phi(x).
///
/// Full oracle precision (<= 1e-25 relative) for x <= 36; beyond that the
/// value sinks into f64 subnormals and callers needing the extreme tail
/// should use [`upper_tail_scaled`]. Negative x via 1 - (1 - Phi(-x)).
pub fn upper_tail(x: f64) -> Dd {
    if x < 0.0 {
        return Dd::ONE - upper_tail(-x);
    }
    if x <= 2.0 {
        upper_tail_series(x)
    } else if x <= PLAIN_TAIL_LIMIT {
        upper_tail_cf(x)
    } else {
        upper_tail_scaled(x).to_dd()
    }
}

/// Upper tail in scaled form; full precision for any finite x >= 0 and for
/// moderate negative x.
pub fn upper_tail_scaled(x: f64) -> Scaled {
    if x <= PLAIN_TAIL_LIMIT {
        return Scaled::from_dd(upper_tail(x));
    }
    if x > SCALED_X_MAX {
        return Scaled {
            mantissa: Dd::ZERO,
            exp10: 0,
        };
    }
    let d = gaussian_density_scaled(x);
    let h = adaptive_cf_h(x);
    Scaled::normalized(d.mantissa / h, d.exp10)
}

/// Mills' ratio (1 - Phi(x)) / phi(x).
///
/// For x beyond the density's underflow point the ratio is formed from the
/// scaled pieces; for x below roughly -38.6 it exceeds the f64 exponent
/// range and +inf is returned.
pub fn mills_ratio(x: f64) -> Dd {
    if x > PLAIN_TAIL_LIMIT {
        // (1 - Phi)/phi = 1/h exactly, no underflow anywhere
        return adaptive_cf_h(x).recip();
    }
    if x < -PLAIN_TAIL_LIMIT {
        let d = gaussian_density_scaled(-x); // phi is even
        if x < -SCALED_X_MAX || -d.exp10 >= 308 {
            return Dd::new(f64::INFINITY, 0.0);
        }
        let tail = upper_tail(x); // ~ 1
        return tail / d.mantissa * pow10(-d.exp10);
    }
    upper_tail(x) / gaussian_density(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(a: Dd, b: Dd) -> f64 {
        ((a - b) / b).to_f64().abs()
    }

    #[test]
    fn density_reference_values() {
        assert!(rel(gaussian_density(0.0), consts::INV_SQRT_2PI) < 1e-31);
        let want = Dd::parse("0.241970724519143349797830192935561").unwrap();
        assert!(rel(gaussian_density(1.0), want) < 1e-29);
        assert_eq!(gaussian_density(-3.0), gaussian_density(3.0));
    }

    #[test]
    fn tail_at_zero_is_exactly_half() {
        assert_eq!(upper_tail(0.0).to_f64(), 0.5);
        assert!(upper_tail(0.0).lo() == 0.0);
    }

    #[test]
    fn tail_reference_values() {
        let cases = [
            (1.0, "0.158655253931457051414767454367962"),
            (2.0, "0.0227501319481792072002826371665334"),
            (3.0, "0.00134989803163009452665181476759498"),
        ];
        for (x, want) in cases {
            let want = Dd::parse(want).unwrap();
            assert!(rel(upper_tail(x), want) < 1e-27, "x={x}");
        }
    }

    #[test]
    fn series_and_cf_agree_at_one() {
        let s = upper_tail_series(1.0);
        let c = upper_tail_cf(1.0);
        assert!(rel(s, c) < 1e-27);
    }

    #[test]
    fn series_terminates_outside_its_useful_range() {
        // terms overflow past x ~ 38; only termination is contractual there
        let _ = upper_tail_series(40.0);
        let _ = upper_tail_series(64.0);
        // still solid at the top of the dual-check band
        assert!(rel(upper_tail_series(3.0), upper_tail_cf(3.0)) < 1e-25);
    }

    #[test]
    fn mills_reference_values() {
        assert!(rel(mills_ratio(0.0), consts::SQRT_PI_OVER_TWO) < 1e-29);
        let want = Dd::parse("0.655679542418798471543871230730811").unwrap();
        assert!(rel(mills_ratio(1.0), want) < 1e-27);
    }

    #[test]
    fn mills_gordon_sandwich_large_x() {
        for x in [5.0, 10.0, 20.0, 50.0] {
            let m = mills_ratio(x);
            let upper = Dd::from_f64(1.0).div_f64(x);
            let lower = Dd::from_f64(x).add_f64(1.0 / x).recip();
            assert!(lower < m && m < upper, "x={x}");
        }
    }

    #[test]
    fn extreme_tail_scaled_no_underflow() {
        let s = upper_tail_scaled(40.0);
        assert!(s.exp10 < -300);
        assert!(s.mantissa.hi() >= 1.0 && s.mantissa.hi() < 10.0);
        // 1 - Phi(40) = 3.655893540915029703748986e-350
        assert_eq!(s.exp10, -350);
        let want = Dd::parse("3.655893540915029703748986").unwrap();
        assert!(rel(s.mantissa, want) < 1e-22);
    }

    #[test]
    fn complementarity() {
        for x in [0.25, 1.0, 2.5, 7.0] {
            let s = upper_tail(x) + upper_tail(-x);
            assert!(rel(s, Dd::ONE) < 1e-30, "x={x}");
        }
    }

    #[test]
    fn monotone_decreasing() {
        let mut prev = upper_tail(0.0);
        for i in 1..=60 {
            let cur = upper_tail(i as f64 * 0.25);
            assert!(cur < prev);
            prev = cur;
        }
    }

    #[test]
    fn negative_x_mills_finite_then_infinite() {
        assert!(mills_ratio(-8.0).is_finite());
        assert!(mills_ratio(-37.0).is_finite());
        assert!(!mills_ratio(-45.0).is_finite());
    }

    #[test]
    fn absurd_arguments_stay_defined() {
        // far past the representable exponent range: exact zero, not NaN
        let s = upper_tail_scaled(1e300);
        assert!(s.mantissa.is_zero());
        assert!(upper_tail(1e300).is_zero());
        assert!(!mills_ratio(-1e300).is_finite());
        // Mills' ratio keeps its 1/x asymptote out here
        let m = mills_ratio(1e8).to_f64();
        assert!((m * 1e8 - 1.0).abs() < 1e-10, "{m}");
    }
}
