//! Certified upper and lower bounds on the standard Gaussian upper tail
//! 1 - Phi(x), through bounds on Mills' ratio (1 - Phi)/phi.
//!
//! Every bound has the shape phi(x)/h(x) where h is either a closed form or
//! a finite continued fraction x + 1/(x + 2/(... x + k/g(x))) closed by a
//! terminal seed g. Choosing the seed's constant as the optimal c_k* makes
//! the bound exact at x = 0 and pins which side of the tail it sits on by
//! the parity of k alone.
//!
//! Modules:
//! * [`dd`] — double-double arithmetic, the extended-precision carrier;
//! * [`oracle`] — ground-truth tail, density and Mills' ratio;
//! * [`constants`] — the optimal constants c_k* and derived quantities;
//! * [`families`] — all bound families and their certified sides;
//! * [`poly`] — exact integer polynomials giving the rational form of h;
//! * [`analysis`] — maximal errors, orderings, crossovers, curve export;
//! * [`verify`] — the named invariant suites the CLI and tests run.
//!
//! Grid-heavy suites run data-parallel under the `parallel` feature
//! (default); a sequential fallback is always compiled and produces
//! bit-identical results.
//!
//! ```
//! use mills_bounds::{families, oracle, BoundId, Family, Side};
//!
//! // the depth-4 square-root-seed bound at x = 1.5
//! let bound = BoundId::new(Family::SqrtStar, 4);
//! let (value, side) = families::tail_bound(bound, 1.5).unwrap();
//! let tail = oracle::upper_tail(1.5);
//!
//! assert_eq!(side, Side::Upper);
//! assert!(value > tail);
//! // ... and it is tight: within 1e-3 relative at this point
//! assert!(((value - tail) / tail).to_f64() < 1e-3);
//! ```

pub mod analysis;
pub mod constants;
pub mod dd;
mod error;
pub mod families;
pub mod grid;
pub mod oracle;
pub mod poly;
pub mod tol;
pub mod verify;

pub use dd::Dd;
pub use error::{Error, Result};
pub use families::{BoundId, Family, Side};
pub use grid::{GridSpec, Spacing};
