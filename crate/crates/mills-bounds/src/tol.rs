//! Tolerances used by the verification suites, pinned in one place.
//!
//! Each constant is a contract of the library, not a tunable: the suites in
//! [`crate::verify`] and the acceptance tests assert at exactly these values.

/// Relative agreement between the series and continued-fraction tail
/// evaluations on [0.1, 3.0].
pub const ORACLE_DUAL_METHOD_REL: f64 = 1e-25;

/// Relative error budget of the tail oracle on [0, 40] (scaled form beyond
/// the plain f64 underflow threshold).
pub const ORACLE_REL: f64 = 1e-25;

/// Internal stop criterion for the adaptive continued-fraction depth:
/// successive depth doublings must agree to this relative difference.
pub const CF_DEPTH_REL: f64 = 1e-30;

/// Central-difference check of d/dx of the upper tail against the negated
/// density.
pub const DERIVATIVE_REL: f64 = 1e-10;

/// Relative agreement of the optimal-constant product identity
/// c_k * c_{k-1} = k^2 and of the dual formulas for delta_k and x_k.
pub const CONSTANTS_REL: f64 = 1e-25;

/// Relative agreement between the recurrence and the exact-rational closed
/// products for the optimal constants (k <= 200).
pub const CLOSED_FORM_REL: f64 = 1e-20;

/// Exactness of h(0) = sqrt(2/pi) for the optimal-constant families.
pub const EXACT_AT_ZERO_REL: f64 = 1e-20;

/// Relative agreement between continued-fraction and rational-form
/// evaluation of the same bound.
pub const CROSS_REPR_REL: f64 = 1e-20;

/// Relative agreement between the golden-section argmax and the closed-form
/// maximizer expressions.
pub const MAXIMIZER_REL: f64 = 1e-6;

/// Agreement between the structural maximum and an independent dense-grid
/// scan, in significant digits.
pub const SCAN_AGREEMENT_DIGITS: u32 = 4;

/// Absolute x-resolution of the crossover-threshold bisection.
pub const CROSSOVER_ABS: f64 = 1e-8;

/// Relative gap to the oracle required at x = 30 for every order-k >= 1
/// family (asymptotic exactness).
pub const ASYMPTOTE_REL: f64 = 1e-3;

/// Every |error| at x = 10 for the optimal-constant families, k <= 20, must
/// sit below this; justifies the [domain_low, 10] maximization bracket.
pub const BRACKET_EDGE_ABS: f64 = 1e-23;
