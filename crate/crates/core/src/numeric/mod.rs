//! Floating-point value distribution of polynomial curves on `C`.

mod nevanlinna;
pub mod roots;

pub use nevanlinna::{
    characteristic, circle_mean, counting_function, proximity, NumericCurve, QUADRATURE_RTOL,
};
pub use roots::{find_roots_exact, find_roots_numeric, Root, CLUSTER_RADIUS, RESIDUAL_TOL};
