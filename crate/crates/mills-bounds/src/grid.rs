//! Evaluation grids and the data-parallel map the analysis suites run on.
//!
//! With the `parallel` feature (default) grids fan out over rayon; the
//! sequential fallback is always compiled and exposed so results can be
//! compared for determinism and benched against the parallel path. Both
//! produce identical, order-independent output: work is collected by index,
//! never reduced with order-dependent rounding.

use crate::{Error, Result};

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Spacing {
    Linear,
    Log,
}

/// A deterministic 1-d evaluation grid over [low, high], endpoints included.
#[derive(Copy, Clone, Debug)]
pub struct GridSpec {
    pub low: f64,
    pub high: f64,
    pub points: usize,
    pub spacing: Spacing,
}

impl GridSpec {
    pub fn new(low: f64, high: f64, points: usize, spacing: Spacing) -> Result<Self> {
        if !(low < high) || points < 2 {
            return Err(Error::BadGrid { low, high, points });
        }
        if spacing == Spacing::Log && low <= 0.0 {
            return Err(Error::BadGrid { low, high, points });
        }
        Ok(GridSpec {
            low,
            high,
            points,
            spacing,
        })
    }

    pub fn linear(low: f64, high: f64, points: usize) -> Result<Self> {
        GridSpec::new(low, high, points, Spacing::Linear)
    }

    pub fn log(low: f64, high: f64, points: usize) -> Result<Self> {
        GridSpec::new(low, high, points, Spacing::Log)
    }

    pub fn values(&self) -> Vec<f64> {
        let n = self.points;
        let mut out = Vec::with_capacity(n);
        match self.spacing {
            Spacing::Linear => {
                let step = (self.high - self.low) / (n - 1) as f64;
                for i in 0..n - 1 {
                    out.push(self.low + step * i as f64);
                }
            }
            Spacing::Log => {
                let (la, lb) = (self.low.log10(), self.high.log10());
                let step = (lb - la) / (n - 1) as f64;
                for i in 0..n - 1 {
                    out.push(10f64.powf(la + step * i as f64));
                }
            }
        }
        out.push(self.high);
        out
    }
}

/// Index-ordered map over 0..n; parallel when the feature is enabled.
#[cfg(feature = "parallel")]
pub fn map<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    use rayon::prelude::*;
    (0..n).into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn map<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    (0..n).map(f).collect()
}

/// Sequential reference path, always available; byte-identical to [`map`].
pub fn map_seq<T, F>(n: usize, f: F) -> Vec<T>
where
    F: Fn(usize) -> T,
{
    (0..n).map(f).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn endpoints_are_exact() {
        let g = GridSpec::linear(0.0, 10.0, 11).unwrap().values();
        assert_eq!(g.len(), 11);
        assert_eq!(g[0], 0.0);
        assert_eq!(g[10], 10.0);
        assert!((g[3] - 3.0).abs() < 1e-14);
        let g = GridSpec::log(1e-3, 10.0, 5).unwrap().values();
        assert_eq!(g[0], 1e-3);
        assert_eq!(*g.last().unwrap(), 10.0);
    }

    #[test]
    fn invalid_specs_rejected() {
        assert!(GridSpec::linear(1.0, 1.0, 10).is_err());
        assert!(GridSpec::linear(0.0, 1.0, 1).is_err());
        assert!(GridSpec::log(0.0, 1.0, 10).is_err());
        assert!(GridSpec::log(-1.0, 1.0, 10).is_err());
    }

    #[test]
    fn parallel_and_sequential_agree() {
        let f = |i: usize| (i as f64).sqrt().to_bits();
        assert_eq!(map(1000, f), map_seq(1000, f));
    }
}
