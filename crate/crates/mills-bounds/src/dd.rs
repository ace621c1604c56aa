//! Double-double arithmetic: each value is an unevaluated sum `hi + lo` of two
//! f64 with |lo| <= ulp(hi)/2, giving roughly 31 significant decimal digits.
//!
//! Operations stay within a couple of ulps of the 106-bit format, which is far
//! more headroom than the 1e-25 relative budgets enforced by the test suites.
//! The implementation is portable (Dekker splitting, no FMA requirement).

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

/// Relative epsilon of the format as exposed to callers.
///
/// Individual operations round to ~2^-106; composed operations (division,
/// exp, decimal conversion) are guaranteed within one `EPSILON`. 2^-103
/// still carries 31.0 significant decimal digits.
pub const EPSILON: f64 = 9.860761315262648e-32; // 2^-103

#[derive(Copy, Clone, Debug, Default)]
pub struct Dd {
    hi: f64,
    lo: f64,
}

// Knuth two-sum, no magnitude ordering required.
#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let v = s - a;
    let e = (a - (s - v)) + (b - v);
    (s, e)
}

// valid only for |a| >= |b|
#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let e = b - (s - a);
    (s, e)
}

// Dekker split; valid for |a| < 2^996.
#[inline]
fn split(a: f64) -> (f64, f64) {
    const C: f64 = 134217729.0; // 2^27 + 1
    let t = C * a;
    let hi = t - (t - a);
    (hi, a - hi)
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    if !p.is_finite() {
        // the split products would turn the overflow into NaN
        return (p, 0.0);
    }
    let (ah, al) = split(a);
    let (bh, bl) = split(b);
    let e = ((ah * bh - p) + ah * bl + al * bh) + al * bl;
    (p, e)
}

impl Dd {
    pub const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };
    pub const ONE: Dd = Dd { hi: 1.0, lo: 0.0 };

    /// Raw constructor; `hi`, `lo` must already be a normalized pair.
    #[inline]
    pub const fn new(hi: f64, lo: f64) -> Self {
        Dd { hi, lo }
    }

    #[inline]
    pub fn from_f64(v: f64) -> Self {
        Dd { hi: v, lo: 0.0 }
    }

    #[inline]
    pub fn from_u64(v: u64) -> Self {
        // u64 may need 64 bits; split into two exactly representable halves.
        let hi = (v >> 32) as f64 * 4294967296.0;
        let lo = (v & 0xffff_ffff) as f64;
        let (s, e) = two_sum(hi, lo);
        Dd { hi: s, lo: e }
    }

    #[inline]
    pub fn from_i64(v: i64) -> Self {
        if v < 0 {
            -Dd::from_u64(v.unsigned_abs())
        } else {
            Dd::from_u64(v as u64)
        }
    }

    /// Exact product of two f64.
    #[inline]
    pub fn from_prod(a: f64, b: f64) -> Self {
        let (p, e) = two_prod(a, b);
        Dd { hi: p, lo: e }
    }

    /// Nearest double-double to an arbitrary-precision integer
    /// (relative error <= 2^-106; exact when the integer fits in 106 bits).
    pub fn from_bigint(v: &BigInt) -> Self {
        if v.is_zero() {
            return Dd::ZERO;
        }
        let neg = v.is_negative();
        let mag = v.abs();
        let shift = mag.bits().saturating_sub(106);
        let top = (&mag >> shift).to_u128().expect("106-bit mantissa");
        let r = dd_from_u128(top).ldexp(shift as i32);
        if neg {
            -r
        } else {
            r
        }
    }

    /// Nearest double-double to the exact rational n/d. Both magnitudes may
    /// exceed the f64 exponent range as long as the ratio does not.
    pub fn from_bigint_ratio(n: &BigInt, d: &BigInt) -> Self {
        assert!(!d.is_zero(), "zero denominator");
        if n.is_zero() {
            return Dd::ZERO;
        }
        let neg = n.is_negative() != d.is_negative();
        let (n, d) = (n.abs(), d.abs());
        let sn = n.bits().saturating_sub(106);
        let sd = d.bits().saturating_sub(106);
        let mn = dd_from_u128((&n >> sn).to_u128().expect("106-bit mantissa"));
        let md = dd_from_u128((&d >> sd).to_u128().expect("106-bit mantissa"));
        let r = (mn / md).ldexp((sn as i64 - sd as i64) as i32);
        if neg {
            -r
        } else {
            r
        }
    }

    #[inline]
    pub fn hi(self) -> f64 {
        self.hi
    }

    #[inline]
    pub fn lo(self) -> f64 {
        self.lo
    }

    #[inline]
    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    #[inline]
    pub fn is_finite(self) -> bool {
        self.hi.is_finite() && self.lo.is_finite()
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.hi == 0.0 && self.lo == 0.0
    }

    #[inline]
    pub fn is_sign_negative(self) -> bool {
        self.hi < 0.0 || (self.hi == 0.0 && self.lo < 0.0)
    }

    #[inline]
    pub fn abs(self) -> Self {
        if self.is_sign_negative() {
            -self
        } else {
            self
        }
    }

    /// Exact scaling by 2^e (staged when |e| exceeds the f64 exponent range).
    pub fn ldexp(self, e: i32) -> Self {
        let mut r = self;
        let mut e = e;
        while e > 1000 {
            r = Dd {
                hi: r.hi * 2f64.powi(1000),
                lo: r.lo * 2f64.powi(1000),
            };
            e -= 1000;
        }
        while e < -1000 {
            r = Dd {
                hi: r.hi * 2f64.powi(-1000),
                lo: r.lo * 2f64.powi(-1000),
            };
            e += 1000;
        }
        let f = 2f64.powi(e);
        Dd {
            hi: r.hi * f,
            lo: r.lo * f,
        }
    }

    #[inline]
    pub fn add_f64(self, b: f64) -> Self {
        let (s, e) = two_sum(self.hi, b);
        if !s.is_finite() {
            return Dd { hi: s, lo: 0.0 };
        }
        let e = e + self.lo;
        let (hi, lo) = quick_two_sum(s, e);
        Dd { hi, lo }
    }

    #[inline]
    pub fn mul_f64(self, b: f64) -> Self {
        let (p, e) = two_prod(self.hi, b);
        if !p.is_finite() {
            return Dd { hi: p, lo: 0.0 };
        }
        let e = e + self.lo * b;
        let (hi, lo) = quick_two_sum(p, e);
        Dd { hi, lo }
    }

    #[inline]
    pub fn div_f64(self, b: f64) -> Self {
        let q1 = self.hi / b;
        let (p, e) = two_prod(q1, b);
        let r_hi = self.hi - p;
        let r = (r_hi - e) + self.lo;
        let q2 = r / b;
        let (hi, lo) = quick_two_sum(q1, q2);
        Dd { hi, lo }
    }

    pub fn recip(self) -> Self {
        Dd::ONE / self
    }

    pub fn sqrt(self) -> Self {
        if self.is_zero() {
            return Dd::ZERO;
        }
        if self.hi < 0.0 || !self.hi.is_finite() {
            return Dd {
                hi: if self.hi < 0.0 { f64::NAN } else { self.hi },
                lo: 0.0,
            };
        }
        // One Newton correction on the f64 estimate: x + (a - x^2)/(2x).
        let x = self.hi.sqrt();
        let (p, e) = two_prod(x, x);
        let r = ((self.hi - p) - e) + self.lo;
        let dx = r / (2.0 * x);
        let (hi, lo) = quick_two_sum(x, dx);
        Dd { hi, lo }
    }

    /// exp(self); clamps to 0 / +inf outside the representable range.
    pub fn exp(self) -> Self {
        if self.hi < -745.2 {
            return Dd::ZERO;
        }
        if self.hi > 709.7 {
            return Dd {
                hi: f64::INFINITY,
                lo: 0.0,
            };
        }
        // self = m ln2 + r, |r| <= ln2/2; exp(r) by Taylor on r/32, 5 squarings.
        let m = (self.hi / std::f64::consts::LN_2).round();
        let r = self - consts::LN2.mul_f64(m);
        let r32 = r.ldexp(-5);
        // Horner over r32^n/n!, n = 0..=14
        let mut t = r32.div_f64(14.0).add_f64(1.0);
        for j in (1..14).rev() {
            t = (t * r32).div_f64(j as f64).add_f64(1.0);
        }
        for _ in 0..5 {
            t = t * t;
        }
        t.ldexp(m as i32)
    }

    /// Decimal significand/exponent: value = digits * 10^(exp10 - ndigits + 1),
    /// first digit nonzero. `ndigits` in 1..=32.
    pub fn to_decimal(self, ndigits: u32) -> Option<(bool, u128, i32)> {
        assert!((1..=32).contains(&ndigits));
        if !self.is_finite() || self.is_zero() {
            return None;
        }
        let neg = self.is_sign_negative();
        let v = self.abs();
        let mut e10 = v.hi.log10().floor() as i32;
        // scale into [10^(n-1), 10^n)
        let mut w = mul_pow10(v, ndigits as i32 - 1 - e10);
        let limit_lo = 10f64.powi(ndigits as i32 - 1);
        let limit_hi = 10f64.powi(ndigits as i32);
        if w.hi >= limit_hi {
            w = w.div_f64(10.0);
            e10 += 1;
        } else if w.hi < limit_lo {
            w = w.mul_f64(10.0);
            e10 -= 1;
        }
        // round to integer: hi truncates exactly (integral multiple of its ulp),
        // lo carries everything below.
        let int_hi = w.hi as u128;
        let back = int_hi as f64; // exact, |w.hi| < 2^107 and integral in f64
        let frac = (w.hi - back) + w.lo;
        let mut n = int_hi as i128 + frac.round() as i128;
        if n >= limit_hi as i128 {
            n /= 10;
            e10 += 1;
        } else if n < limit_lo as i128 {
            // downward rounding crossed the decade floor; redo one decade lower
            n = int_hi as i128 * 10 + (frac * 10.0).round() as i128;
            e10 -= 1;
        }
        Some((neg, n as u128, e10))
    }

    /// Scientific-notation string with `ndigits` significant digits
    /// (lowercase `e`, unpadded exponent): e.g. `2.074e-3`.
    pub fn to_sci(self, ndigits: u32) -> String {
        if self.hi.is_nan() {
            return "nan".to_string();
        }
        if self.hi.is_infinite() {
            return if self.hi > 0.0 { "inf" } else { "-inf" }.to_string();
        }
        match self.to_decimal(ndigits) {
            None => {
                if ndigits == 1 {
                    "0e0".to_string()
                } else {
                    format!("0.{}e0", "0".repeat(ndigits as usize - 1))
                }
            }
            Some((neg, digits, e10)) => {
                let s = digits.to_string();
                let sign = if neg { "-" } else { "" };
                if s.len() == 1 {
                    format!("{sign}{s}e{e10}")
                } else {
                    format!("{sign}{}.{}e{}", &s[..1], &s[1..], e10)
                }
            }
        }
    }

    /// Parse a decimal string (optionally scientific). Accepts up to 32
    /// significant digits; result within one [`EPSILON`] of the exact value.
    pub fn parse(s: &str) -> Option<Dd> {
        let s = s.trim();
        let (neg, s) = match s.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, s.strip_prefix('+').unwrap_or(s)),
        };
        let (mant, exp) = match s.find(['e', 'E']) {
            Some(i) => (&s[..i], s[i + 1..].parse::<i32>().ok()?),
            None => (s, 0),
        };
        let (int_part, frac_part) = match mant.find('.') {
            Some(i) => (&mant[..i], &mant[i + 1..]),
            None => (mant, ""),
        };
        if int_part.is_empty() && frac_part.is_empty() {
            return None;
        }
        let mut digits = String::with_capacity(int_part.len() + frac_part.len());
        digits.push_str(int_part);
        digits.push_str(frac_part);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        // strip leading zeros, track significance
        let lead = digits.bytes().take_while(|&b| b == b'0').count();
        let sig = &digits[lead..];
        if sig.is_empty() {
            return Some(Dd::ZERO);
        }
        let kept = &sig[..sig.len().min(32)];
        let dropped = sig.len() - kept.len();
        let n: u128 = kept.parse().ok()?;
        let scale = exp - frac_part.len() as i32 + dropped as i32;
        let v = mul_pow10(dd_from_u128(n), scale);
        Some(if neg { -v } else { v })
    }
}

#[inline]
fn dd_from_u128(v: u128) -> Dd {
    let hi = v as f64; // rounds to nearest
    let hi_int = hi as u128; // exact (hi is integral and <= 2^128 boundary safe for our <=107-bit inputs)
    let d = v as i128 - hi_int as i128;
    let (s, e) = two_sum(hi, d as f64);
    Dd { hi: s, lo: e }
}

/// 10^n as a double-double. Exact for 0 <= n <= 44 (two exact f64 factors);
/// within a couple of 2^-106 ulps elsewhere. Overflows past |n| ~ 300; use
/// [`mul_pow10`] to scale values that stay in range.
pub fn pow10(n: i32) -> Dd {
    if n < 0 {
        return Dd::ONE / pow10(-n);
    }
    if n <= 22 {
        return Dd::from_f64(10f64.powi(n));
    }
    if n <= 44 {
        return Dd::from_prod(1e22, 10f64.powi(n - 22));
    }
    let mut r = Dd::from_prod(1e22, 1e22);
    let mut rem = n - 44;
    while rem > 22 {
        r = r.mul_f64(1e22);
        rem -= 22;
    }
    r.mul_f64(10f64.powi(rem))
}

/// v * 10^n, staged so intermediates never leave the f64 exponent range as
/// long as the result does not.
pub fn mul_pow10(mut v: Dd, mut n: i32) -> Dd {
    while n > 250 {
        v = v * pow10(250);
        n -= 250;
    }
    while n < -250 {
        v = v * pow10(-250);
        n += 250;
    }
    v * pow10(n)
}

impl Neg for Dd {
    type Output = Dd;
    #[inline]
    fn neg(self) -> Dd {
        Dd {
            hi: -self.hi,
            lo: -self.lo,
        }
    }
}

impl Add for Dd {
    type Output = Dd;
    #[inline]
    fn add(self, b: Dd) -> Dd {
        let (s, e) = two_sum(self.hi, b.hi);
        if !s.is_finite() {
            // keep IEEE semantics; the error limbs would fabricate NaN
            return Dd { hi: s, lo: 0.0 };
        }
        let (t, f) = two_sum(self.lo, b.lo);
        let (s2, e2) = quick_two_sum(s, e + t);
        let (hi, lo) = quick_two_sum(s2, e2 + f);
        Dd { hi, lo }
    }
}

impl Sub for Dd {
    type Output = Dd;
    #[inline]
    fn sub(self, b: Dd) -> Dd {
        self + (-b)
    }
}

impl Mul for Dd {
    type Output = Dd;
    #[inline]
    fn mul(self, b: Dd) -> Dd {
        let (p, e) = two_prod(self.hi, b.hi);
        if !p.is_finite() {
            return Dd { hi: p, lo: 0.0 };
        }
        let e = e + (self.hi * b.lo + self.lo * b.hi);
        let (hi, lo) = quick_two_sum(p, e);
        Dd { hi, lo }
    }
}

impl Div for Dd {
    type Output = Dd;
    fn div(self, b: Dd) -> Dd {
        if self.is_zero() && !b.is_zero() {
            // avoids inf * 0 = NaN in the correction terms
            return Dd::ZERO;
        }
        let q1 = self.hi / b.hi;
        if !q1.is_finite() || !b.hi.is_finite() {
            // overflowed quotient, zero divisor, or infinite divisor:
            // the f64 quotient already tells the whole story
            return Dd { hi: q1, lo: 0.0 };
        }
        // long division with two correction terms
        let r = self - b.mul_f64(q1);
        let q2 = r.hi / b.hi;
        let r = r - b.mul_f64(q2);
        let q3 = r.hi / b.hi;
        let (s, e) = quick_two_sum(q1, q2);
        Dd { hi: s, lo: e }.add_f64(q3)
    }
}

impl PartialEq for Dd {
    #[inline]
    fn eq(&self, other: &Self) -> bool {
        self.hi == other.hi && self.lo == other.lo
    }
}

impl PartialOrd for Dd {
    #[inline]
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        match self.hi.partial_cmp(&other.hi) {
            Some(Ordering::Equal) => self.lo.partial_cmp(&other.lo),
            ord => ord,
        }
    }
}

impl fmt::Display for Dd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_sci(32))
    }
}

/// Shared mathematical constants, each correct to ~1e-33 relative.
pub mod consts {
    use super::Dd;

    pub const PI: Dd = Dd::new(f64::from_bits(0x400921FB54442D18), f64::from_bits(0x3CA1A62633145C07));
    pub const TWO_OVER_PI: Dd = Dd::new(f64::from_bits(0x3FE45F306DC9C883), f64::from_bits(0xBC86B01EC5417056));
    pub const PI_OVER_TWO: Dd = Dd::new(f64::from_bits(0x3FF921FB54442D18), f64::from_bits(0x3C91A62633145C07));
    pub const SQRT_2PI: Dd = Dd::new(f64::from_bits(0x40040D931FF62706), f64::from_bits(0xBCAA6A0D6F814637));
    pub const INV_SQRT_2PI: Dd = Dd::new(f64::from_bits(0x3FD9884533D43651), f64::from_bits(0xBC7CBC0D30EBFD15));
    pub const SQRT_TWO_OVER_PI: Dd = Dd::new(f64::from_bits(0x3FE9884533D43651), f64::from_bits(0xBC8CBC0D30EBFD15));
    pub const SQRT_PI_OVER_TWO: Dd = Dd::new(f64::from_bits(0x3FF40D931FF62706), f64::from_bits(0xBC9A6A0D6F814637));
    pub const SQRT_PI: Dd = Dd::new(f64::from_bits(0x3FFC5BF891B4EF6B), f64::from_bits(0xBC9618F13EB7CA89));
    pub const LN2: Dd = Dd::new(f64::from_bits(0x3FE62E42FEFA39EF), f64::from_bits(0x3C7ABC9E3B39803F));
    pub const LN10: Dd = Dd::new(f64::from_bits(0x40026BB1BBB55516), f64::from_bits(0xBCAF48AD494EA3E9));
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(a: Dd, b: Dd) -> f64 {
        ((a - b) / b).to_f64().abs()
    }

    #[test]
    fn basic_arithmetic_vs_f64() {
        let a = Dd::from_f64(1.25);
        let b = Dd::from_f64(0.375);
        assert_eq!((a + b).to_f64(), 1.625);
        assert_eq!((a - b).to_f64(), 0.875);
        assert_eq!((a * b).to_f64(), 0.46875);
        assert_eq!((a / b).to_f64(), 1.25 / 0.375);
    }

    #[test]
    fn division_recovers_product() {
        let a = consts::PI;
        let b = consts::LN10;
        let q = a / b;
        assert!(rel(q * b, a) < 1e-31);
    }

    #[test]
    fn sqrt_squares_back() {
        for v in [2.0, 0.5, 1e10, 1e-12, std::f64::consts::PI] {
            let s = Dd::from_f64(v).sqrt();
            assert!(rel(s * s, Dd::from_f64(v)) < 1e-31, "v={v}");
        }
        // sqrt(pi/2) against the frozen constant
        assert!(rel(consts::PI_OVER_TWO.sqrt(), consts::SQRT_PI_OVER_TWO) < 1e-31);
    }

    #[test]
    fn exp_reference_values() {
        // exp(1) = 2.71828182845904523536028747135266250
        let e = Dd::from_f64(1.0).exp();
        let want = Dd::parse("2.71828182845904523536028747135266250").unwrap();
        assert!(rel(e, want) < 1e-30);
        // exp(-0.5) = 0.606530659712633423603799534991180453
        let want = Dd::parse("0.606530659712633423603799534991180453").unwrap();
        assert!(rel(Dd::from_f64(-0.5).exp(), want) < 1e-30);
        // exp(ln 10 * 20) = 1e20
        let big = (consts::LN10.mul_f64(20.0)).exp();
        assert!(rel(big, pow10(20)) < 1e-29);
        assert_eq!(Dd::from_f64(0.0).exp().to_f64(), 1.0);
        assert!(Dd::from_f64(-800.0).exp().is_zero());
    }

    #[test]
    fn exp_large_negative_argument() {
        // exp(-700) = 9.85967654375977085670537294785e-305; the low limb is
        // subnormal there, so precision floors at ~1e-20 relative
        let v = Dd::from_f64(-700.0).exp();
        let want = Dd::parse("9.85967654375977085670537294785e-305").unwrap();
        assert!(rel(v, want) < 1e-17);
    }

    #[test]
    fn decimal_roundtrip_within_one_ulp() {
        let cases = [
            consts::PI,
            consts::INV_SQRT_2PI,
            Dd::from_f64(1.0) / Dd::from_f64(3.0),
            pow10(20) + Dd::from_f64(0.25),
            Dd::from_f64(-7.25e-19) * consts::PI,
        ];
        for v in cases {
            let s = v.to_sci(32);
            let back = Dd::parse(&s).unwrap();
            let err = ((back - v) / v).to_f64().abs();
            assert!(err <= EPSILON, "{s}: err {err:e}");
        }
    }

    #[test]
    fn sci_formatting_matches_expected_shape() {
        assert_eq!(Dd::from_f64(0.002074).to_sci(4), "2.074e-3");
        assert_eq!(Dd::from_f64(12345.0).to_sci(4), "1.235e4"); // half rounds away from zero
        assert_eq!(Dd::from_f64(1.0).to_sci(1), "1e0");
        assert_eq!(Dd::ZERO.to_sci(3), "0.00e0");
    }

    #[test]
    fn decimal_decade_floor_rounding() {
        // 999.4999... must round to (9995, 2) at 4 digits, not to a fabricated digit
        let v = Dd::parse("9.994999e2").unwrap();
        assert_eq!(v.to_decimal(4), Some((false, 9995, 2)));
        let v = Dd::parse("9.99949999999999e-1").unwrap();
        assert_eq!(v.to_decimal(4), Some((false, 9999, -1)));
        // just below a power of ten: carries up only past the half-ulp
        let v = Dd::ONE - pow10(-6);
        assert_eq!(v.to_decimal(4), Some((false, 1000, 0)));
        assert_eq!(Dd::parse("0.99994").unwrap().to_decimal(4), Some((false, 9999, -1)));
    }

    #[test]
    fn parse_handles_forms() {
        assert_eq!(Dd::parse("42").unwrap().to_f64(), 42.0);
        assert_eq!(Dd::parse("-0.5e1").unwrap().to_f64(), -5.0);
        assert_eq!(Dd::parse("+.25").unwrap().to_f64(), 0.25);
        assert!(Dd::parse("abc").is_none());
        assert!(Dd::parse("").is_none());
    }

    #[test]
    fn bigint_conversion() {
        let b: BigInt = BigInt::from(3u32).pow(100); // 3^100 ~ 5.15e47, needs >106 bits
        let v = Dd::from_bigint(&b);
        // 3^100 = 5.153775207320113310364611297656212727021075220010e47
        let want = Dd::parse("5.153775207320113310364611297656212727e47").unwrap();
        assert!(rel(v, want) < 1e-30);
        let small = BigInt::from(123456789u64);
        assert_eq!(Dd::from_bigint(&small).to_f64(), 123456789.0);
        assert_eq!(Dd::from_bigint(&BigInt::zero()), Dd::ZERO);
        assert_eq!(Dd::from_bigint(&BigInt::from(-5)).to_f64(), -5.0);
    }

    #[test]
    fn non_finite_values_propagate_without_nan() {
        let inf = Dd::from_f64(f64::INFINITY);
        let one = Dd::ONE;
        assert!((one + inf).hi().is_infinite());
        assert!((inf * one).hi().is_infinite());
        assert!((one / inf).is_zero());
        assert!(inf.sqrt().hi().is_infinite());
        assert_eq!((one / Dd::ZERO).hi(), f64::INFINITY);
        assert!(Dd::from_prod(1e300, 1e300).hi().is_infinite());
        // genuinely undefined stays NaN
        assert!((inf - inf).hi().is_nan());
    }

    #[test]
    fn ordering_uses_both_limbs() {
        let a = Dd::new(1.0, 1e-20);
        let b = Dd::new(1.0, 2e-20);
        assert!(a < b);
        assert!(Dd::from_f64(-1.0) < Dd::ZERO);
    }
}
