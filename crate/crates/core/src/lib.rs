//! Exact Nochka weights for divisors in subgeneral position, and verification of
//! the associated second main theorems on rational and polynomial curves.
//!
//! The crate is organized bottom-up:
//!
//! * [`exact`]: arithmetic in `Q(i)`, polynomials, ranks, Wronskians.
//! * [`position`]: the rank function `c(K)` on hyperplane families and
//!   certification of subgeneral position.
//! * [`weights`]: filtrations, Nochka weights and the selection procedures built on them.
//! * [`curves`]: rational curves `P¹ → Pᵐ`, pullback divisors, truncated counts.
//! * [`numeric`]: floating-point characteristic and counting functions on `C`.
//! * [`smt`]: constants and verifiers for the second-main-theorem inequalities.
//! * [`scene`], [`fixtures`], [`cli`]: input format, bundled corpus, command front end.

pub mod cli;
pub mod curves;
mod error;
pub mod exact;
pub mod fixtures;
pub mod numeric;
pub mod position;
pub mod scene;
pub mod smt;
pub mod weights;

pub use error::{Error, Result};
