//! Property tests: arithmetic contracts of the extended-precision carrier
//! and the certified-side contract of the bound families.

use proptest::prelude::*;

use mills_bounds::analysis;
use mills_bounds::dd::{self, Dd};
use mills_bounds::families::{self, BoundId, Family, Side};
use mills_bounds::oracle;
use mills_bounds::poly;

fn arb_dd() -> impl Strategy<Value = Dd> {
    // a full-width significand: high part plus an independent low tail
    (
        -1.0e12f64..1.0e12,
        -1.0f64..1.0,
        prop::sample::select(vec![1e-13, 1e-16, 1e-20]),
    )
        .prop_map(|(hi, lo, scale)| Dd::from_f64(hi) + Dd::from_f64(lo).mul_f64(scale * hi.abs().max(1.0)))
        .prop_filter("nonzero", |v| !v.is_zero())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn add_sub_cancels(a in arb_dd(), b in arb_dd()) {
        // absorption bound: error scales with the larger operand
        let r = (a + b) - b;
        let scale = a.abs().to_f64().max(b.abs().to_f64());
        let err = (r - a).abs().to_f64();
        prop_assert!(err <= 4.0 * dd::EPSILON * scale, "err {err:e}");
    }

    #[test]
    fn mul_div_cancels(a in arb_dd(), b in arb_dd()) {
        let r = (a * b) / b;
        let err = ((r - a) / a).to_f64().abs();
        prop_assert!(err <= 4.0 * dd::EPSILON, "err {err:e}");
    }

    #[test]
    fn sqrt_squares_back(a in arb_dd()) {
        let v = a.abs();
        let r = v.sqrt();
        let err = ((r * r - v) / v).to_f64().abs();
        prop_assert!(err <= 4.0 * dd::EPSILON, "err {err:e}");
    }

    #[test]
    fn decimal_roundtrip(a in arb_dd()) {
        let s = a.to_sci(32);
        let back = Dd::parse(&s).unwrap();
        let err = ((back - a) / a).to_f64().abs();
        prop_assert!(err <= dd::EPSILON, "{s}: err {err:e}");
    }

    #[test]
    fn ordering_is_consistent_with_subtraction(a in arb_dd(), b in arb_dd()) {
        let diff = a - b;
        if a < b {
            prop_assert!(diff < Dd::ZERO || diff.is_zero());
        } else if a > b {
            prop_assert!(diff > Dd::ZERO || diff.is_zero());
        }
    }

    #[test]
    fn exp_inverse_pairs_cancel(a in -64.0f64..64.0) {
        let v = Dd::from_f64(a);
        let prod = v.exp() * (-v).exp();
        let err = ((prod - Dd::ONE) / Dd::ONE).to_f64().abs();
        prop_assert!(err < 1e-29, "a={a} err={err:e}");
    }

    #[test]
    fn exp_additivity(a in -30.0f64..30.0, b in -30.0f64..30.0) {
        let lhs = (Dd::from_f64(a) + Dd::from_f64(b)).exp();
        let rhs = Dd::from_f64(a).exp() * Dd::from_f64(b).exp();
        let err = ((lhs - rhs) / rhs).to_f64().abs();
        prop_assert!(err < 1e-29, "a={a} b={b} err={err:e}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn tail_complementarity(x in -8.0f64..8.0) {
        let s = oracle::upper_tail(x) + oracle::upper_tail(-x);
        let err = ((s - Dd::ONE) / Dd::ONE).to_f64().abs();
        prop_assert!(err < 1e-28);
    }

    #[test]
    fn bounds_sit_on_their_declared_side(
        fam_ix in 0usize..6,
        k in 0u32..=12,
        x in 1e-3f64..10.0,
    ) {
        let fam = [
            Family::ClassicCf,
            Family::ShentonJ1,
            Family::ShentonJ2,
            Family::SqrtStar,
            Family::RationalStar,
            Family::ExpStar,
        ][fam_ix];
        let bound = BoundId::new(fam, k);
        let (v, side) = families::tail_bound(bound, x).unwrap();
        let tail = oracle::upper_tail(x);
        match side {
            Side::Upper => prop_assert!(v > tail, "{bound} at {x}"),
            Side::Lower => prop_assert!(v < tail, "{bound} at {x}"),
        }
    }

    #[test]
    fn fraction_and_rational_form_agree(
        k in 1u32..=12,
        x in 0.0f64..10.0,
        g in 0.05f64..50.0,
    ) {
        let g = Dd::from_f64(g);
        let cf = families::continued_fraction_h(k, x, g).unwrap();
        let rf = poly::eval_rational_form(k, x, g).unwrap();
        let err = ((cf - rf) / rf).to_f64().abs();
        prop_assert!(err < 1e-20, "k={k} x={x} err={err:e}");
    }

    #[test]
    fn signed_error_matches_side(
        k in 0u32..=8,
        x in 1e-3f64..10.0,
    ) {
        let bound = BoundId::new(Family::SqrtStar, k);
        let e = analysis::error_at(bound, x).unwrap();
        if k % 2 == 0 {
            prop_assert!(e > Dd::ZERO);
        } else {
            prop_assert!(e < Dd::ZERO);
        }
    }
}
