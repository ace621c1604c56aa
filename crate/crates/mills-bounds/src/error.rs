use std::fmt;

use crate::families::{BoundId, Family};

/// Errors from bound evaluation and analysis.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Evaluation point outside the bound's domain (x >= 0, or x > 0 where stated).
    DomainX { bound: BoundId, x: f64 },
    /// Bare negative argument where x >= 0 is required.
    NegativeX(f64),
    /// The named closed-form bounds have no terminal seed.
    NoTerminalSeed(Family),
    /// Operation defined only for the optimal-constant families.
    NotOptimalFamily(Family),
    /// Order k above the practical depth cap.
    OrderTooLarge { k: u32, max: u32 },
    /// Operation requires an even order.
    OddOrder(u32),
    /// Continued-fraction terminal seed must be strictly positive.
    NonPositiveSeed(f64),
    /// A non-finite value surfaced mid-computation (defensive; should not occur
    /// on valid domains).
    NonFinite(&'static str),
    /// Root bracketing failed: no sign change over the search interval.
    NoSignChange { k: u32, lo: f64, hi: f64 },
    /// Grid specification violates low < high, points >= 2, or positivity
    /// for log spacing.
    BadGrid { low: f64, high: f64, points: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DomainX { bound, x } => {
                write!(f, "x = {x} outside the domain of {bound} (requires x >= 0; x > 0 for the classic fraction at order 0)")
            }
            Error::NegativeX(x) => write!(f, "x = {x} must be nonnegative"),
            Error::NoTerminalSeed(fam) => {
                write!(f, "{fam} is a closed-form bound with no terminal seed")
            }
            Error::NotOptimalFamily(fam) => {
                write!(f, "{fam} is not one of the optimal-constant families")
            }
            Error::OrderTooLarge { k, max } => write!(f, "order k = {k} exceeds the cap {max}"),
            Error::OddOrder(k) => write!(f, "k = {k} must be even"),
            Error::NonPositiveSeed(g) => write!(f, "terminal seed g = {g} must be positive"),
            Error::NonFinite(what) => write!(f, "non-finite intermediate in {what}"),
            Error::NoSignChange { k, lo, hi } => {
                write!(f, "no sign change for k = {k} on [{lo}, {hi}]")
            }
            Error::BadGrid { low, high, points } => {
                write!(f, "bad grid: low = {low}, high = {high}, points = {points}")
            }
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
