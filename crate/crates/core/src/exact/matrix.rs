//! Fraction-free (Bareiss) elimination for ranks and determinants.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{AffinePoly, GaussianRational};

/// An integral domain in which exact division is available.
///
/// `div_exact(a, b)` is only called by Bareiss elimination when `b` divides `a`.
pub trait ExactRing: Clone {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn mul(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn div_exact(&self, rhs: &Self) -> Self;
}

/// `a + b·i` with integer parts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaussianInt {
    pub re: BigInt,
    pub im: BigInt,
}

impl ExactRing for GaussianInt {
    fn zero() -> Self {
        Self {
            re: BigInt::zero(),
            im: BigInt::zero(),
        }
    }
    fn one() -> Self {
        Self {
            re: BigInt::one(),
            im: BigInt::zero(),
        }
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
    fn mul(&self, rhs: &Self) -> Self {
        if self.im.is_zero() && rhs.im.is_zero() {
            return Self {
                re: &self.re * &rhs.re,
                im: BigInt::zero(),
            };
        }
        Self {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
    fn sub(&self, rhs: &Self) -> Self {
        Self {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }
    fn neg(&self) -> Self {
        Self {
            re: -&self.re,
            im: -&self.im,
        }
    }
    fn div_exact(&self, rhs: &Self) -> Self {
        if rhs.im.is_zero() {
            return Self {
                re: &self.re / &rhs.re,
                im: &self.im / &rhs.re,
            };
        }
        // (a+bi)/(c+di) = (a+bi)(c-di)/(c²+d²)
        let n = &rhs.re * &rhs.re + &rhs.im * &rhs.im;
        let re = &self.re * &rhs.re + &self.im * &rhs.im;
        let im = &self.im * &rhs.re - &self.re * &rhs.im;
        debug_assert!(re.is_multiple_of(&n) && im.is_multiple_of(&n));
        Self {
            re: re / &n,
            im: im / n,
        }
    }
}

impl ExactRing for GaussianRational {
    fn zero() -> Self {
        <Self as Zero>::zero()
    }
    fn one() -> Self {
        <Self as One>::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div_exact(&self, rhs: &Self) -> Self {
        self / rhs
    }
}

impl ExactRing for AffinePoly {
    fn zero() -> Self {
        <Self as Zero>::zero()
    }
    fn one() -> Self {
        <Self as One>::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div_exact(&self, rhs: &Self) -> Self {
        self.exact_div(rhs).expect("Bareiss division is exact")
    }
}

/// Runs Bareiss elimination in place; returns `(rank, sign)` where `sign` is the
/// parity of the row swaps performed. For a square full-rank matrix the last
/// pivot times `sign` is the determinant.
fn bareiss<T: ExactRing>(m: &mut [Vec<T>]) -> (usize, bool) {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut prev = T::one();
    let mut rank = 0;
    let mut negate = false;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        if p != rank {
            m.swap(p, rank);
            negate = !negate;
        }
        for r in rank + 1..rows {
            for c in col + 1..cols {
                let v = m[rank][col].mul(&m[r][c]).sub(&m[r][col].mul(&m[rank][c]));
                m[r][c] = v.div_exact(&prev);
            }
            m[r][col] = T::zero();
        }
        prev = m[rank][col].clone();
        rank += 1;
    }
    (rank, negate)
}

/// Clears denominators row by row, producing a Gaussian-integer matrix of equal rank.
fn integer_rows(rows: &[&[GaussianRational]]) -> Vec<Vec<GaussianInt>> {
    rows.iter()
        .map(|row| {
            let l = row
                .iter()
                .fold(BigInt::one(), |acc, x| acc.lcm(&x.denom_lcm()));
            row.iter()
                .map(|x| GaussianInt {
                    re: x.re.numer() * (&l / x.re.denom()),
                    im: x.im.numer() * (&l / x.im.denom()),
                })
                .collect()
        })
        .collect()
}

pub(crate) fn integer_rows_owned(rows: &[Vec<GaussianRational>]) -> Vec<Vec<GaussianInt>> {
    let refs: Vec<&[GaussianRational]> = rows.iter().map(Vec::as_slice).collect();
    integer_rows(&refs)
}

/// Rank of a Gaussian-integer matrix, consuming it.
pub fn rank_int_rows(mut rows: Vec<Vec<GaussianInt>>) -> usize {
    bareiss(&mut rows).0
}

/// Exact rank of the matrix whose rows are given.
pub fn rank_of_rows(rows: &[&[GaussianRational]]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let mut m = integer_rows(rows);
    bareiss(&mut m).0
}

/// Exact rank of a row-major matrix.
pub fn matrix_rank(m: &[Vec<GaussianRational>]) -> usize {
    let refs: Vec<&[GaussianRational]> = m.iter().map(Vec::as_slice).collect();
    rank_of_rows(&refs)
}

/// Determinant of a square matrix over any exact ring.
pub fn determinant<T: ExactRing>(m: &[Vec<T>]) -> T {
    let n = m.len();
    assert!(
        m.iter().all(|r| r.len() == n),
        "determinant of a non-square matrix"
    );
    if n == 0 {
        return T::one();
    }
    let mut work = m.to_vec();
    let (rank, negate) = bareiss(&mut work);
    if rank < n {
        return T::zero();
    }
    let d = work[n - 1][n - 1].clone();
    if negate {
        d.neg()
    } else {
        d
    }
}
