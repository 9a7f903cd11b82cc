//! Rational curves, pullback divisors, Wronskians and the genus-0 first main theorem.

mod curve;
mod divisor;

pub use curve::{CurveWronskian, RationalCurve};
pub use divisor::{split_rational_roots, CountingReport, Divisor, DivisorEntry, Place};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{poly_gcd, AffinePoly, GaussianRational, HomogeneousPoly};

fn row_label(row: &[GaussianRational]) -> String {
    let parts: Vec<String> = row.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(", "))
}

/// Zero divisor of `H∘F`, total degree `δ`.
pub fn pullback_divisor(curve: &RationalCurve, row: &[GaussianRational]) -> Result<Divisor> {
    let form = curve.pullback(row)?;
    if form.is_zero() {
        return Err(Error::DegenerateCurveForH(row_label(row)));
    }
    let d = Divisor::of_form(&form)?;
    if d.degree() != curve.degree() as u64 {
        return Err(Error::Internal(format!(
            "pullback divisor has degree {} on a curve of degree {}",
            d.degree(),
            curve.degree()
        )));
    }
    Ok(d)
}

/// Vanishing order of a nonzero form at a place. For a factor place the order
/// is the exponent of the factor in the form.
pub fn order_at_place(form: &HomogeneousPoly, place: &Place) -> u32 {
    match place {
        Place::Infinity => form.order_at_infinity().expect("nonzero form") as u32,
        Place::Finite(a) => form.affine_s1().order_at(a),
        Place::Factor(h) => {
            let mut p = form.affine_s1();
            let mut k = 0;
            while let Ok(q) = p.exact_div(h) {
                p = q;
                k += 1;
            }
            k
        }
    }
}

/// Order of the curve's Wronskian at a place.
pub fn wronskian_order(w: &CurveWronskian, place: &Place) -> u32 {
    match place {
        Place::Infinity => w.order_at_infinity as u32,
        Place::Finite(a) => w.affine.order_at(a),
        Place::Factor(h) => {
            let mut p = w.affine.clone();
            let mut k = 0;
            while let Ok(q) = p.exact_div(h) {
                p = q;
                k += 1;
            }
            k
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FmtReport {
    pub curve_degree: usize,
    pub divisor_degree: u64,
    pub bundle_power: u32,
    /// `δ / d`.
    #[serde(with = "crate::exact::rational_str")]
    pub characteristic: BigRational,
    /// `N(f, D) / d`.
    #[serde(with = "crate::exact::rational_str")]
    pub counting: BigRational,
    pub holds: bool,
}

/// Checks `T(f, L') = N(f, D)/d` on `P^1`: both sides are `δ/d` exactly when the
/// pullback divisor has degree `δ`.
pub fn fmt_check(curve: &RationalCurve, row: &[GaussianRational], d: u32) -> Result<FmtReport> {
    if d == 0 {
        return Err(Error::InvalidInput("bundle power must be positive".into()));
    }
    let div = pullback_divisor(curve, row)?;
    let dd = BigInt::from(d);
    let characteristic = BigRational::new(BigInt::from(curve.degree()), dd.clone());
    let counting = BigRational::new(BigInt::from(div.degree()), dd);
    Ok(FmtReport {
        curve_degree: curve.degree(),
        divisor_degree: div.degree(),
        bundle_power: d,
        holds: characteristic == counting,
        characteristic,
        counting,
    })
}

/// Finds `N + 1` pullbacks with a common zero, if any. Finite common zeros are
/// detected by running gcds, so no root extraction is needed.
pub fn shared_zero(forms: &[HomogeneousPoly], n_sub: usize) -> Option<Vec<usize>> {
    let k = n_sub + 1;
    if forms.len() < k {
        return None;
    }
    let at_inf: Vec<usize> = (0..forms.len())
        .filter(|&j| forms[j].order_at_infinity().is_none_or(|o| o > 0))
        .collect();
    if at_inf.len() >= k {
        return Some(at_inf[..k].to_vec());
    }
    let affine: Vec<AffinePoly> = forms.iter().map(HomogeneousPoly::affine_s1).collect();
    fn dfs(
        affine: &[AffinePoly],
        start: usize,
        k: usize,
        g: &AffinePoly,
        chosen: &mut Vec<usize>,
    ) -> bool {
        if chosen.len() == k {
            return true;
        }
        for j in start..affine.len() {
            if affine.len() - j < k - chosen.len() {
                break;
            }
            let next = if chosen.is_empty() {
                affine[j].clone()
            } else {
                poly_gcd(g, &affine[j])
            };
            if next.is_zero() || !next.is_constant() {
                chosen.push(j);
                if dfs(affine, j + 1, k, &next, chosen) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    let mut chosen = Vec::new();
    dfs(&affine, 0, k, &AffinePoly::zero(), &mut chosen).then_some(chosen)
}
