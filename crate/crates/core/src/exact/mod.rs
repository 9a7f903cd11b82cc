//! Exact field, polynomial and matrix arithmetic over `Q(i)`.

mod gaussian;
mod homogeneous;
pub mod matrix;
mod poly;
mod wronskian;

pub(crate) use gaussian::rational_to_f64;
pub use gaussian::{
    fmt_rational, parse_rational, rational_str, rational_vec_str, GaussianRational,
};
pub use homogeneous::HomogeneousPoly;
pub use matrix::{determinant, matrix_rank, rank_of_rows, GaussianInt};
pub use poly::{
    poly_gcd, poly_gcd_all, square_free_decompose, AffinePoly, Degree, SquareFreeDecomposition,
};
pub use wronskian::wronskian;

/// Parses a row of coefficient strings.
pub fn parse_row(row: &[String]) -> crate::Result<Vec<GaussianRational>> {
    row.iter().map(|s| s.parse()).collect()
}
