//! Wronskian determinants of polynomial tuples.

use super::matrix::determinant;
use super::AffinePoly;

/// `W(f_0, …, f_l) = det [ f_j^{(r)} ]_{r, j}` computed exactly.
///
/// Panics on an empty list.
pub fn wronskian(fs: &[AffinePoly]) -> AffinePoly {
    assert!(!fs.is_empty(), "wronskian of an empty list");
    let n = fs.len();
    let m: Vec<Vec<AffinePoly>> = (0..n)
        .map(|r| fs.iter().map(|f| f.nth_derivative(r)).collect())
        .collect();
    determinant(&m)
}
