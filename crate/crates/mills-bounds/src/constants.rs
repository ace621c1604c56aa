//! The optimal constants c_k* and the quantities derived from them.
//!
//! c_0* = 2/pi, c_1* = pi/2, and c_k* = (k/(k-1))^2 c_{k-2}* — the two-step
//! form of the reciprocal recurrence c_k* = k^2/c_{k-1}*. The two-step form
//! multiplies by a benign factor and avoids the error oscillation of the
//! alternating reciprocal; the closed products serve as a cross-check only.
//!
//! Constants are materialized lazily into a grow-only cache: readers share a
//! lock-free-in-the-common-case read path, extension happens under exclusive
//! access and is published atomically by the lock release.

use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;

use crate::dd::{consts, Dd};

/// Correctness claims (product identity, sandwich) are asserted up to this
/// index by the verification suites; larger k is permitted.
pub const GUARANTEED_K: u32 = 10_000;

static CACHE: OnceLock<RwLock<Vec<Dd>>> = OnceLock::new();

fn cache() -> &'static RwLock<Vec<Dd>> {
    CACHE.get_or_init(|| RwLock::new(vec![consts::TWO_OVER_PI, consts::PI_OVER_TWO]))
}

fn ensure(k: u32) {
    let need = k as usize + 1;
    {
        let r = cache().read().unwrap();
        if r.len() >= need {
            return;
        }
    }
    let mut w = cache().write().unwrap();
    while w.len() < need {
        let k = w.len();
        let num = Dd::from_prod(k as f64, k as f64);
        let den = Dd::from_prod((k - 1) as f64, (k - 1) as f64);
        let next = w[k - 2] * num / den;
        w.push(next);
    }
}

/// The optimal constant c_k* making the depth-k fraction exact at zero.
pub fn c_star(k: u32) -> Dd {
    ensure(k);
    cache().read().unwrap()[k as usize]
}

/// Largest index currently materialized in the grow-only cache.
pub fn materialized_max_k() -> u32 {
    cache().read().unwrap().len() as u32 - 1
}

/// delta_k = (k + 1 - c_k*)/sqrt(c_k*).
pub fn delta_k(k: u32) -> Dd {
    let c = c_star(k);
    (Dd::from_f64((k + 1) as f64) - c) / c.sqrt()
}

/// The equivalent form delta_k = sqrt(c_{k+1}*) - sqrt(c_k*); exposed for the
/// dual-formula agreement checks.
pub fn delta_k_alt(k: u32) -> Dd {
    c_star(k + 1).sqrt() - c_star(k).sqrt()
}

/// Distance of c_k* above k + 1/2; in (0, 1/2) for every k.
fn excess(k: u32) -> Dd {
    c_star(k) - Dd::from_f64(k as f64 + 0.5)
}

/// Maximizer x_k of the square-root family's absolute error,
/// 2 sqrt(c) (c - k - 1/2) / sqrt((c - k)(k + 1 - c)).
pub fn x_star(k: u32) -> Dd {
    let c = c_star(k);
    let num = c.sqrt().ldexp(1) * excess(k);
    let a = c - Dd::from_f64(k as f64);
    let b = Dd::from_f64((k + 1) as f64) - c;
    num / (a * b).sqrt()
}

/// The algebraically equal form with denominator sqrt(1/4 - (c-k-1/2)^2);
/// exposed for the dual-formula agreement checks.
pub fn x_star_alt(k: u32) -> Dd {
    let c = c_star(k);
    let e = excess(k);
    let num = c.sqrt().ldexp(1) * e;
    num / (Dd::from_f64(0.25) - e * e).sqrt()
}

/// Maximizer x~_k of the rational family's absolute error,
/// 2 sqrt(c) (c - k - 1/2) / ((c - k)(k + 1 - c)).
pub fn x_tilde(k: u32) -> Dd {
    let c = c_star(k);
    let num = c.sqrt().ldexp(1) * excess(k);
    let a = c - Dd::from_f64(k as f64);
    let b = Dd::from_f64((k + 1) as f64) - c;
    num / (a * b)
}

/// The three slacks of the sandwich
/// 1/(8(k+1)) < c_k* - k - 1/2 < 1/(8 c_k*) < 1/(8(k+1/2)).
#[derive(Copy, Clone, Debug)]
pub struct SandwichReport {
    pub holds: bool,
    /// (c - k - 1/2) - 1/(8(k+1))
    pub slack_lower: Dd,
    /// 1/(8 c) - (c - k - 1/2)
    pub slack_mid: Dd,
    /// 1/(8(k+1/2)) - 1/(8 c)
    pub slack_upper: Dd,
}

/// Checks the sandwich on c_k*; all three slacks must be strictly positive.
pub fn sandwich_check(k: u32) -> SandwichReport {
    let c = c_star(k);
    let e = excess(k);
    let lower = Dd::ONE / Dd::from_f64(8.0 * (k as f64 + 1.0));
    let mid = (c.ldexp(3)).recip();
    let upper = Dd::ONE / Dd::from_f64(8.0 * (k as f64 + 0.5));
    let slack_lower = e - lower;
    let slack_mid = mid - e;
    let slack_upper = upper - mid;
    SandwichReport {
        holds: slack_lower > Dd::ZERO && slack_mid > Dd::ZERO && slack_upper > Dd::ZERO,
        slack_lower,
        slack_mid,
        slack_upper,
    }
}

/// Closed product form of c_k* from exact integer factorials:
/// (2*4*...*2m / 1*3*...*(2m-1))^2 * 2/pi for k = 2m, reciprocal pattern
/// times pi/2 for odd k. Cross-check route only; k <= 200.
pub fn c_star_closed(k: u32) -> Dd {
    assert!(k <= 200, "closed products kept exact only up to k = 200");
    match k {
        0 => return consts::TWO_OVER_PI,
        1 => return consts::PI_OVER_TWO,
        _ => {}
    }
    let mut even = BigInt::from(1u32);
    let mut odd = BigInt::from(1u32);
    if k % 2 == 0 {
        let m = k / 2;
        for j in 1..=m {
            even *= 2 * j;
            odd *= 2 * j - 1;
        }
        Dd::from_bigint_ratio(&(&even * &even), &(&odd * &odd)) * consts::TWO_OVER_PI
    } else {
        let m = (k - 1) / 2;
        for j in 1..=m {
            even *= 2 * j;
            odd *= 2 * j + 1;
        }
        Dd::from_bigint_ratio(&(&odd * &odd), &(&even * &even)) * consts::PI_OVER_TWO
    }
}

/// Central-binomial identity: sqrt(pi) C(k, k/2) 2^-(k+1/2) sqrt(k+1/2)
/// must land in [1 - 1/(16(k+1/2)^2), 1]. Even k in [2, 60] only (the
/// binomials are taken exactly).
pub fn binomial_identity_check(k: u32) -> crate::Result<bool> {
    if k % 2 != 0 || k < 2 {
        return Err(crate::Error::OddOrder(k));
    }
    if k > 60 {
        return Err(crate::Error::OrderTooLarge { k, max: 60 });
    }
    let mut binom = BigInt::from(1u32);
    for j in 0..k / 2 {
        binom = binom * (k - j) / (j + 1);
    }
    let half = k as f64 + 0.5;
    let v = consts::SQRT_PI
        * Dd::from_bigint(&binom).ldexp(-(k as i32))
        * Dd::from_f64(0.5).sqrt()
        * Dd::from_f64(half).sqrt();
    let lo = Dd::ONE - Dd::ONE / Dd::from_prod(16.0 * half, half);
    Ok(lo <= v && v <= Dd::ONE)
}
