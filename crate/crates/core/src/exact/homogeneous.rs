//! Binary forms in `(s, t)` and their two affine charts.

use std::fmt;

use num_traits::Zero;

use super::{AffinePoly, GaussianRational};
use crate::error::{Error, Result};

/// A form of degree `degree` in `(s, t)`.
///
/// `coeffs[k]` is the coefficient of `s^{degree-k} t^k`, so dehomogenizing at
/// `s = 1` gives an affine polynomial in `z = t/s` with ascending coefficients
/// `coeffs`. The point at infinity of that chart is `(s:t) = (0:1)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct HomogeneousPoly {
    degree: usize,
    coeffs: Vec<GaussianRational>,
}

impl HomogeneousPoly {
    pub fn new(degree: usize, mut coeffs: Vec<GaussianRational>) -> Result<Self> {
        if coeffs.len() > degree + 1 {
            let extra_nonzero = coeffs[degree + 1..].iter().any(|c| !c.is_zero());
            if extra_nonzero {
                return Err(Error::InvalidInput(format!(
                    "form has {} coefficients but degree {degree}",
                    coeffs.len()
                )));
            }
        }
        coeffs.resize(degree + 1, GaussianRational::zero());
        Ok(Self { degree, coeffs })
    }

    /// Homogenizes `p` (in `z = t/s`) to degree `degree`.
    pub fn from_affine(p: &AffinePoly, degree: usize) -> Result<Self> {
        if let Some(d) = p.degree().finite() {
            if d > degree {
                return Err(Error::InvalidInput(format!(
                    "polynomial of degree {d} cannot be homogenized to degree {degree}"
                )));
            }
        }
        Self::new(degree, p.coeffs().to_vec())
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeffs(&self) -> &[GaussianRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// `f(1, z)`.
    pub fn affine_s1(&self) -> AffinePoly {
        AffinePoly::new(self.coeffs.clone())
    }

    /// `f(w, 1)` as a polynomial in `w = s/t`.
    pub fn affine_t1(&self) -> AffinePoly {
        let mut c = self.coeffs.clone();
        c.reverse();
        AffinePoly::new(c)
    }

    /// Vanishing order at `(0:1)`, i.e. `degree - deg f(1, z)`. `None` for the zero form.
    pub fn order_at_infinity(&self) -> Option<usize> {
        self.affine_s1().degree().finite().map(|d| self.degree - d)
    }

    /// `Σ a_j f_j` for forms of equal degree.
    pub fn linear_combination(weights: &[GaussianRational], forms: &[HomogeneousPoly]) -> Self {
        assert_eq!(weights.len(), forms.len());
        let degree = forms.first().map_or(0, |f| f.degree);
        let mut coeffs = vec![GaussianRational::zero(); degree + 1];
        for (a, f) in weights.iter().zip(forms) {
            assert_eq!(f.degree, degree, "forms of different degree");
            if a.is_zero() {
                continue;
            }
            for (c, fc) in coeffs.iter_mut().zip(&f.coeffs) {
                *c += &(a * fc);
            }
        }
        Self { degree, coeffs }
    }
}

impl fmt::Debug for HomogeneousPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Form[deg {}]({:?})", self.degree, self.coeffs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn charts_and_order_at_infinity() {
        // s^2 t  (degree 3): affine z, chart t=1 gives w^2
        let f = HomogeneousPoly::new(3, vec![0.into(), 1.into()]).unwrap();
        assert_eq!(f.affine_s1(), AffinePoly::z());
        assert_eq!(f.affine_t1(), AffinePoly::from_ints(&[0, 0, 1]));
        assert_eq!(f.order_at_infinity(), Some(2));
        let zero = HomogeneousPoly::new(2, vec![]).unwrap();
        assert_eq!(zero.order_at_infinity(), None);
    }

    #[test]
    fn rejects_overlong_coefficients() {
        assert!(HomogeneousPoly::new(1, vec![1.into(), 2.into(), 3.into()]).is_err());
        assert!(HomogeneousPoly::new(1, vec![1.into(), 2.into(), 0.into()]).is_ok());
    }
}
