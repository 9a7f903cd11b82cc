//! Rational curves `P^1 → P^m` given by coprime binary forms.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::{
    matrix_rank, poly_gcd_all, wronskian, AffinePoly, GaussianRational, HomogeneousPoly,
};

/// `[f_0 : … : f_m]` with forms of common degree `δ ≥ 1` in `(s, t)`.
///
/// The affine coordinate is `z = t/s`, so the chart `s = 1` covers everything
/// except `(0:1)`, which the chart `t = 1` (coordinate `w = s/t`) handles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalCurve {
    degree: usize,
    coords: Vec<HomogeneousPoly>,
}

impl RationalCurve {
    pub fn new(coords: Vec<HomogeneousPoly>) -> Result<Self> {
        if coords.len() < 2 {
            return Err(Error::InvalidInput(
                "a curve needs at least two coordinates".into(),
            ));
        }
        let degree = coords[0].degree();
        if coords.iter().any(|f| f.degree() != degree) {
            return Err(Error::InvalidInput(
                "coordinates have different degrees".into(),
            ));
        }
        if degree == 0 {
            return Err(Error::InvalidInput(
                "curve degree must be at least 1".into(),
            ));
        }
        let affine: Vec<AffinePoly> = coords.iter().map(HomogeneousPoly::affine_s1).collect();
        let g = poly_gcd_all(affine.iter());
        if g.is_zero() {
            return Err(Error::InvalidInput("all coordinates vanish".into()));
        }
        if !g.is_constant() {
            return Err(Error::InvalidInput(format!(
                "coordinates share the factor {g}"
            )));
        }
        if coords
            .iter()
            .all(|f| f.order_at_infinity().is_none_or(|o| o > 0))
        {
            return Err(Error::InvalidInput(
                "coordinates share a zero at (0:1)".into(),
            ));
        }
        let matrix: Vec<Vec<GaussianRational>> =
            coords.iter().map(|f| f.coeffs().to_vec()).collect();
        if matrix_rank(&matrix) < 2 {
            return Err(Error::InvalidInput("curve is constant".into()));
        }
        Ok(Self { degree, coords })
    }

    /// Homogenizes affine coordinates in `z` to the given degree.
    pub fn from_affine(degree: usize, coords: &[AffinePoly]) -> Result<Self> {
        let forms = coords
            .iter()
            .map(|p| HomogeneousPoly::from_affine(p, degree))
            .collect::<Result<Vec<_>>>()?;
        Self::new(forms)
    }

    /// Curve of the smallest degree with these affine coordinates.
    pub fn from_affine_min_degree(coords: &[AffinePoly]) -> Result<Self> {
        let degree = coords
            .iter()
            .filter_map(|p| p.degree().finite())
            .max()
            .unwrap_or(0);
        Self::from_affine(degree, coords)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Target dimension `m`.
    pub fn m(&self) -> usize {
        self.coords.len() - 1
    }

    pub fn coords(&self) -> &[HomogeneousPoly] {
        &self.coords
    }

    pub fn affine(&self) -> Vec<AffinePoly> {
        self.coords.iter().map(HomogeneousPoly::affine_s1).collect()
    }

    pub fn affine_at_infinity(&self) -> Vec<AffinePoly> {
        self.coords.iter().map(HomogeneousPoly::affine_t1).collect()
    }

    /// `H∘F = Σ a_j f_j`.
    pub fn pullback(&self, row: &[GaussianRational]) -> Result<HomogeneousPoly> {
        if row.len() != self.coords.len() {
            return Err(Error::InvalidInput(format!(
                "hyperplane has {} coefficients, curve has {} coordinates",
                row.len(),
                self.coords.len()
            )));
        }
        Ok(HomogeneousPoly::linear_combination(row, &self.coords))
    }

    /// `(m + 1)δ - m(m + 1)`: number of zeros of the Wronskian on `P^1`.
    pub fn wronskian_degree(&self) -> i64 {
        let m = self.m() as i64;
        (m + 1) * self.degree as i64 - m * (m + 1)
    }

    /// The Wronskian in the chart `s = 1` with its order at `(0:1)`.
    pub fn wronskian(&self) -> Result<CurveWronskian> {
        let affine = wronskian(&self.affine());
        if affine.is_zero() {
            return Err(Error::LinearlyDegenerate);
        }
        let at_inf = wronskian(&self.affine_at_infinity());
        let order_at_infinity = at_inf
            .low_order()
            .ok_or_else(|| Error::Internal("Wronskian vanishes in one chart only".into()))?;
        let total = self.wronskian_degree();
        if total < 0 || (total as usize) < affine.deg() {
            return Err(Error::Internal(format!(
                "affine Wronskian of degree {} exceeds the expected zero count {total}",
                affine.deg()
            )));
        }
        let total = total as usize;
        // transition to w = 1/z: W_z(z) = ± z^total W_w(1/z)
        let reversed = at_inf.reversed(total + 1);
        if reversed != affine && reversed != -&affine {
            return Err(Error::Internal(
                "Wronskian transition law fails between charts".into(),
            ));
        }
        if order_at_infinity != total - affine.deg() {
            return Err(Error::Internal(format!(
                "order at (0:1) is {order_at_infinity} in the second chart but {} by degree count",
                total - affine.deg()
            )));
        }
        Ok(CurveWronskian {
            affine,
            order_at_infinity,
            total,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveWronskian {
    /// `W(f_0(1,z), …, f_m(1,z))`.
    pub affine: AffinePoly,
    pub order_at_infinity: usize,
    /// Total number of zeros on `P^1`, with multiplicity.
    pub total: usize,
}
