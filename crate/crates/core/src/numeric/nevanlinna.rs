//! Characteristic, counting and proximity functions of polynomial curves `C → P^m`.

use std::f64::consts::TAU;

use num_complex::Complex64;
use num_traits::Zero;

use super::roots::{eval, Root};
use crate::curves::RationalCurve;
use crate::error::{Error, Result};

pub const QUADRATURE_RTOL: f64 = 1e-9;
const MIN_POINTS: usize = 64;
const MAX_POINTS: usize = 1 << 22;

/// `z ↦ [p_0(z) : … : p_m(z)]` with floating-point coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct NumericCurve {
    coords: Vec<Vec<Complex64>>,
}

impl NumericCurve {
    pub fn new(coords: Vec<Vec<Complex64>>) -> Result<Self> {
        if coords.len() < 2 {
            return Err(Error::InvalidInput(
                "a curve needs at least two coordinates".into(),
            ));
        }
        if coords.iter().all(|c| c.iter().all(Zero::is_zero)) {
            return Err(Error::InvalidInput("all coordinates vanish".into()));
        }
        Ok(Self { coords })
    }

    /// The chart `s = 1` of an exact curve.
    pub fn from_exact(curve: &RationalCurve) -> Self {
        let coords = curve
            .affine()
            .iter()
            .map(|p| p.coeffs().iter().map(|c| c.to_complex64()).collect())
            .collect();
        Self { coords }
    }

    pub fn m(&self) -> usize {
        self.coords.len() - 1
    }

    pub fn coords(&self) -> &[Vec<Complex64>] {
        &self.coords
    }

    /// Largest coordinate degree.
    pub fn degree(&self) -> usize {
        self.coords
            .iter()
            .filter_map(|c| c.iter().rposition(|a| !a.is_zero()))
            .max()
            .unwrap_or(0)
    }

    pub fn eval(&self, z: Complex64) -> Vec<Complex64> {
        self.coords.iter().map(|c| eval(c, z)).collect()
    }

    pub fn norm_at(&self, z: Complex64) -> f64 {
        self.eval(z)
            .iter()
            .map(|v| v.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    /// Coefficients of `Σ a_j p_j`.
    pub fn pullback(&self, row: &[Complex64]) -> Vec<Complex64> {
        let len = self.coords.iter().map(Vec::len).max().unwrap_or(0);
        let mut out = vec![Complex64::zero(); len];
        for (a, c) in row.iter().zip(&self.coords) {
            for (o, x) in out.iter_mut().zip(c) {
                *o += a * x;
            }
        }
        out
    }
}

/// `(1/2π) ∫ g(r e^{iθ}) dθ` by trapezoid sums, doubling the sample count until
/// two successive refinements agree to `QUADRATURE_RTOL`.
pub fn circle_mean(g: impl Fn(Complex64) -> f64, r: f64) -> Result<f64> {
    let sample = |n: usize, offset: usize, stride: usize| -> f64 {
        (offset..n)
            .step_by(stride)
            .map(|k| g(Complex64::from_polar(r, TAU * k as f64 / n as f64)))
            .sum::<f64>()
    };
    let mut n = MIN_POINTS;
    let mut sum = sample(n, 0, 1);
    let mut mean = sum / n as f64;
    let mut agreed = 0;
    while n < MAX_POINTS {
        n *= 2;
        sum += sample(n, 1, 2);
        let next = sum / n as f64;
        if !next.is_finite() {
            return Err(Error::Quadrature(format!(
                "non-finite integrand on |z| = {r}"
            )));
        }
        if (next - mean).abs() <= QUADRATURE_RTOL * next.abs().max(1.0) {
            agreed += 1;
            if agreed == 2 {
                return Ok(next);
            }
        } else {
            agreed = 0;
        }
        mean = next;
    }
    Err(Error::Quadrature(format!(
        "no convergence on |z| = {r} with {MAX_POINTS} points"
    )))
}

/// `T(r) = mean log‖F(re^{iθ})‖ - mean log‖F(e^{iθ})‖`.
pub fn characteristic(curve: &NumericCurve, r: f64) -> Result<f64> {
    if r < 1.0 {
        return Err(Error::InvalidInput(format!("radius {r} is below 1")));
    }
    let g = |z: Complex64| curve.norm_at(z).ln();
    Ok(circle_mean(g, r)? - circle_mean(g, 1.0)?)
}

/// `N^{[k]}(r) = Σ_{|a|<r} min(s, k) log(r / max(|a|, 1))`; `k = None` means no truncation.
pub fn counting_function(roots: &[Root], r: f64, k: Option<u32>) -> f64 {
    roots
        .iter()
        .filter(|a| a.value.norm() < r)
        .map(|a| {
            let s = k.map_or(a.multiplicity, |k| a.multiplicity.min(k)) as f64;
            s * (r / a.value.norm().max(1.0)).ln()
        })
        .sum()
}

/// Proximity `m_H(r) = mean log(‖F‖ ‖H‖ / |H∘F|)`.
pub fn proximity(curve: &NumericCurve, row: &[Complex64], r: f64) -> Result<f64> {
    let pb = curve.pullback(row);
    let h_norm = row.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
    circle_mean(
        |z| (curve.norm_at(z) * h_norm / eval(&pb, z).norm()).ln(),
        r,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::E;

    fn c(v: &[f64]) -> Vec<Complex64> {
        v.iter().map(|&x| x.into()).collect()
    }

    #[test]
    fn line_closed_form() {
        // F = [1 : z]: T(r) = log sqrt(1 + r^2) - log sqrt 2
        let f = NumericCurve::new(vec![c(&[1.0]), c(&[0.0, 1.0])]).unwrap();
        for r in [10.0f64, 1000.0] {
            let expected = 0.5 * (1.0 + r * r).ln() - 0.5 * 2f64.ln();
            assert!((characteristic(&f, r).unwrap() - expected).abs() < 1e-8);
        }
    }

    #[test]
    fn constant_curve_has_zero_characteristic() {
        let f = NumericCurve::new(vec![c(&[1.0]), c(&[2.0])]).unwrap();
        assert!(characteristic(&f, 100.0).unwrap().abs() < 1e-12);
    }

    #[test]
    fn counting_examples() {
        let root = Root {
            value: Complex64::new(E, 0.0),
            multiplicity: 1,
        };
        assert!((counting_function(std::slice::from_ref(&root), E * E, None) - 1.0).abs() < 1e-12);
        assert_eq!(counting_function(&[root], 2.0, None), 0.0);
        let inner = Root {
            value: Complex64::new(0.5, 0.0),
            multiplicity: 3,
        };
        assert!((counting_function(&[inner], 10.0, Some(2)) - 2.0 * 10f64.ln()).abs() < 1e-12);
    }

    #[test]
    fn first_main_theorem_constant() {
        // T - m - N does not depend on r
        let f = NumericCurve::new(vec![c(&[2.0, 0.0, 1.0]), c(&[0.0, 3.0])]).unwrap();
        let row = [Complex64::new(1.0, 0.0), Complex64::new(-1.0, 0.0)];
        let pb = f.pullback(&row);
        let roots: Vec<Root> = super::super::roots::aberth(&pb)
            .unwrap()
            .into_iter()
            .map(|value| Root {
                value,
                multiplicity: 1,
            })
            .collect();
        let vals: Vec<f64> = [10.0, 100.0, 1000.0]
            .iter()
            .map(|&r| {
                characteristic(&f, r).unwrap()
                    - proximity(&f, &row, r).unwrap()
                    - counting_function(&roots, r, None)
            })
            .collect();
        assert!((vals[0] - vals[2]).abs() < 1e-6, "{vals:?}");
    }
}
