//! Exact integer polynomials P_k, Q_k from the three-term recurrence
//!
//!   P_k = (k-1) P_{k-2} + x P_{k-1},   P_0 = 1, P_1 = x,
//!   Q_k = (k-1) Q_{k-2} + x Q_{k-1},   Q_0 = 0, Q_1 = 1,
//!
//! giving the depth-k fraction as the simple ratio
//! h_k = (k P_{k-1} + P_k g) / (k Q_{k-1} + Q_k g). This is the alternate
//! evaluation route used to cross-validate the backward recurrence.
//!
//! Coefficients are exact big integers (they reach ~1e187 by k = 200);
//! double-double shadows are kept alongside for Horner evaluation.

use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::dd::Dd;
use crate::{Error, Result};

/// Coefficient growth is kept exact up to this order.
pub const MAX_POLY_ORDER: u32 = 200;

/// Dense integer polynomial, coefficients ascending by degree, canonical
/// (no trailing zeros; the zero polynomial is the empty vector).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Horner evaluation in extended precision.
    pub fn eval(&self, x: f64) -> Dd {
        let mut acc = Dd::ZERO;
        for c in self.coeffs.iter().rev() {
            acc = acc.mul_f64(x) + Dd::from_bigint(c);
        }
        acc
    }
}

struct PolyPair {
    p: IntPolynomial,
    q: IntPolynomial,
    p_dd: Vec<Dd>,
    q_dd: Vec<Dd>,
}

impl PolyPair {
    fn from(p: IntPolynomial, q: IntPolynomial) -> Self {
        let p_dd = p.coeffs.iter().map(Dd::from_bigint).collect();
        let q_dd = q.coeffs.iter().map(Dd::from_bigint).collect();
        PolyPair { p, q, p_dd, q_dd }
    }
}

static CACHE: OnceLock<RwLock<Vec<Arc<PolyPair>>>> = OnceLock::new();

fn cache() -> &'static RwLock<Vec<Arc<PolyPair>>> {
    CACHE.get_or_init(|| {
        let p0 = IntPolynomial::new(vec![BigInt::from(1)]);
        let q0 = IntPolynomial::zero();
        let p1 = IntPolynomial::new(vec![BigInt::zero(), BigInt::from(1)]);
        let q1 = IntPolynomial::new(vec![BigInt::from(1)]);
        RwLock::new(vec![
            Arc::new(PolyPair::from(p0, q0)),
            Arc::new(PolyPair::from(p1, q1)),
        ])
    })
}

fn pair(k: u32) -> Result<Arc<PolyPair>> {
    if k > MAX_POLY_ORDER {
        return Err(Error::OrderTooLarge {
            k,
            max: MAX_POLY_ORDER,
        });
    }
    let need = k as usize + 1;
    {
        let r = cache().read().unwrap();
        if r.len() >= need {
            return Ok(Arc::clone(&r[k as usize]));
        }
    }
    let mut w = cache().write().unwrap();
    while w.len() < need {
        let k = w.len();
        let step = |a: &IntPolynomial, b: &IntPolynomial| {
            // (k-1) a + x b
            let deg = b.coeffs.len() + 1;
            let mut out = vec![BigInt::zero(); deg.max(a.coeffs.len())];
            for (i, c) in a.coeffs.iter().enumerate() {
                out[i] += c * (k as i64 - 1);
            }
            for (i, c) in b.coeffs.iter().enumerate() {
                out[i + 1] += c;
            }
            IntPolynomial::new(out)
        };
        let (prev2, prev1) = (&w[k - 2], &w[k - 1]);
        let p = step(&prev2.p, &prev1.p);
        let q = step(&prev2.q, &prev1.q);
        w.push(Arc::new(PolyPair::from(p, q)));
    }
    Ok(Arc::clone(&w[k as usize]))
}

/// The exact pair (P_k, Q_k).
pub fn pq_polynomials(k: u32) -> Result<(IntPolynomial, IntPolynomial)> {
    let pr = pair(k)?;
    Ok((pr.p.clone(), pr.q.clone()))
}

fn horner(coeffs: &[Dd], x: f64) -> Dd {
    let mut acc = Dd::ZERO;
    for c in coeffs.iter().rev() {
        acc = acc.mul_f64(x) + *c;
    }
    acc
}

/// h_k(x) through the rational form (k P_{k-1} + P_k g)/(k Q_{k-1} + Q_k g);
/// k >= 1, g > 0.
pub fn eval_rational_form(k: u32, x: f64, g_value: Dd) -> Result<Dd> {
    assert!(k >= 1, "rational form is defined for k >= 1");
    if x < 0.0 {
        return Err(Error::NegativeX(x));
    }
    if !(g_value > Dd::ZERO) {
        return Err(Error::NonPositiveSeed(g_value.to_f64()));
    }
    let cur = pair(k)?;
    let prev = pair(k - 1)?;
    let kf = Dd::from_f64(k as f64);
    let num = kf * horner(&prev.p_dd, x) + horner(&cur.p_dd, x) * g_value;
    let den = kf * horner(&prev.q_dd, x) + horner(&cur.q_dd, x) * g_value;
    if !(den > Dd::ZERO) {
        return Err(Error::NonFinite("rational-form denominator"));
    }
    Ok(num / den)
}

/// The equivalent entry point in terms of the seed's tail part G = g - x:
/// h_k = (P_{k+1} + P_k G)/(Q_{k+1} + Q_k G).
pub fn eval_rational_form_shifted(k: u32, x: f64, g_tail: Dd) -> Result<Dd> {
    if x < 0.0 {
        return Err(Error::NegativeX(x));
    }
    if !(g_tail > Dd::ZERO) {
        return Err(Error::NonPositiveSeed(g_tail.to_f64()));
    }
    let next = pair(k + 1)?;
    let cur = pair(k)?;
    let num = horner(&next.p_dd, x) + horner(&cur.p_dd, x) * g_tail;
    let den = horner(&next.q_dd, x) + horner(&cur.q_dd, x) * g_tail;
    if !(den > Dd::ZERO) {
        return Err(Error::NonFinite("rational-form denominator"));
    }
    Ok(num / den)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constants;
    use crate::dd::consts;
    use crate::families::{continued_fraction_h, eval_h, terminal_g, BoundId, Family};

    fn rel(a: Dd, b: Dd) -> f64 {
        ((a - b) / b).to_f64().abs()
    }

    fn coeffs_i64(p: &IntPolynomial) -> Vec<i64> {
        p.coeffs().iter().map(|c| i64::try_from(c).unwrap()).collect()
    }

    #[test]
    fn seed_polynomials() {
        let (p0, q0) = pq_polynomials(0).unwrap();
        assert_eq!(coeffs_i64(&p0), vec![1]);
        assert!(q0.is_zero());
        let (p1, q1) = pq_polynomials(1).unwrap();
        assert_eq!(coeffs_i64(&p1), vec![0, 1]);
        assert_eq!(coeffs_i64(&q1), vec![1]);
    }

    #[test]
    fn reference_coefficient_rows() {
        let rows: [(u32, &[i64], &[i64]); 7] = [
            (2, &[1, 0, 1], &[0, 1]),
            (3, &[0, 3, 0, 1], &[2, 0, 1]),
            (4, &[3, 0, 6, 0, 1], &[0, 5, 0, 1]),
            (5, &[0, 15, 0, 10, 0, 1], &[8, 0, 9, 0, 1]),
            (6, &[15, 0, 45, 0, 15, 0, 1], &[0, 33, 0, 14, 0, 1]),
            (7, &[0, 105, 0, 105, 0, 21, 0, 1], &[48, 0, 87, 0, 20, 0, 1]),
            (8, &[105, 0, 420, 0, 210, 0, 28, 0, 1], &[0, 279, 0, 185, 0, 27, 0, 1]),
        ];
        for (k, p_want, q_want) in rows {
            let (p, q) = pq_polynomials(k).unwrap();
            assert_eq!(coeffs_i64(&p), p_want, "P_{k}");
            assert_eq!(coeffs_i64(&q), q_want, "Q_{k}");
        }
    }

    #[test]
    fn degree_parity_invariants() {
        for k in 1..=200u32 {
            let (p, q) = pq_polynomials(k).unwrap();
            assert_eq!(p.degree(), Some(k as usize));
            assert_eq!(q.degree(), Some(k as usize - 1));
            assert_eq!(*p.coeffs().last().unwrap(), BigInt::from(1));
            assert_eq!(*q.coeffs().last().unwrap(), BigInt::from(1));
            for (i, c) in p.coeffs().iter().enumerate() {
                if (i as u32) % 2 != k % 2 {
                    assert!(c.is_zero(), "P_{k} coefficient {i}");
                }
            }
            for (i, c) in q.coeffs().iter().enumerate() {
                if (i as u32) % 2 == k % 2 {
                    assert!(c.is_zero(), "Q_{k} coefficient {i}");
                }
            }
        }
        assert!(pq_polynomials(MAX_POLY_ORDER + 1).is_err());
    }

    #[test]
    fn rational_form_hand_check_depth_two() {
        // h_2 = (2x + (x^2+1) g)/(2 + x g); at x = 1, g = 1 this is 4/3,
        // agreeing with the two-level fraction 1 + 1/(1 + 2/1)
        let h = eval_rational_form(2, 1.0, Dd::ONE).unwrap();
        assert!(rel(h, Dd::from_f64(4.0).div_f64(3.0)) < 1e-30);
        let cf = continued_fraction_h(2, 1.0, Dd::ONE).unwrap();
        assert!(rel(h, cf) < 1e-30);
    }

    #[test]
    fn rational_form_matches_optimal_family_at_zero() {
        let g = constants::c_star(3).sqrt();
        let h = eval_rational_form(3, 0.0, g).unwrap();
        let direct = eval_h(BoundId::new(Family::SqrtStar, 3), 0.0).unwrap();
        assert!(rel(h, direct) < 1e-20);
        assert!(rel(h, consts::SQRT_TWO_OVER_PI) < 1e-20);
    }

    #[test]
    fn depth_five_display_form() {
        // h_5 = (x^6 + 15x^4 + 45x^2 + 15 + (x^5 + 10x^3 + 15x) G)
        //     / (x^5 + 14x^3 + 33x + (x^4 + 9x^2 + 8) G)
        let x = 2.0;
        let g_tail = Dd::from_f64(0.734);
        let h = eval_rational_form_shifted(5, x, g_tail).unwrap();
        let poly = |coef: &[f64]| {
            let mut acc = Dd::ZERO;
            for c in coef.iter().rev() {
                acc = acc.mul_f64(x) + Dd::from_f64(*c);
            }
            acc
        };
        let num = poly(&[15.0, 0.0, 45.0, 0.0, 15.0, 0.0, 1.0])
            + poly(&[0.0, 15.0, 0.0, 10.0, 0.0, 1.0]) * g_tail;
        let den = poly(&[0.0, 33.0, 0.0, 14.0, 0.0, 1.0])
            + poly(&[8.0, 0.0, 9.0, 0.0, 1.0]) * g_tail;
        assert!(rel(h, num / den) < 1e-29);
        // and the unshifted entry point agrees with g = x + G
        let h2 = eval_rational_form(5, x, Dd::from_f64(x) + g_tail).unwrap();
        assert!(rel(h, h2) < 1e-25);
    }

    #[test]
    fn classic_fraction_reduces_to_convergent_ratio() {
        // with g(x) = x: h_k(x) = P_{k+1}(x)/Q_{k+1}(x)
        for k in 1..=12u32 {
            for x in [0.4, 1.0, 3.3] {
                let h = eval_rational_form(k, x, Dd::from_f64(x)).unwrap();
                let (p, q) = pq_polynomials(k + 1).unwrap();
                let want = p.eval(x) / q.eval(x);
                assert!(rel(h, want) < 1e-26, "k={k} x={x}");
            }
        }
    }

    #[test]
    fn cross_representation_with_real_seeds() {
        for k in 1..=12u32 {
            for x in [0.0, 0.5, 2.0, 7.5, 10.0] {
                let g = terminal_g(Family::SqrtStar, k, x).unwrap();
                let cf = continued_fraction_h(k, x, g).unwrap();
                let rf = eval_rational_form(k, x, g).unwrap();
                assert!(rel(cf, rf) < 1e-20, "k={k} x={x}");
            }
        }
    }

    #[test]
    fn rejects_bad_inputs() {
        assert!(eval_rational_form(2, -1.0, Dd::ONE).is_err());
        assert!(eval_rational_form(2, 1.0, Dd::ZERO).is_err());
        assert!(eval_rational_form_shifted(2, 1.0, -Dd::ONE).is_err());
    }
}
