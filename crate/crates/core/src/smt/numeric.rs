//! Finite-radius sampling of the second main theorem for polynomial curves `C → P^m`.
//!
//! The theorem holds only outside an exceptional set of radii and with an
//! unspecified error term, so this is a trend test: each radius is compared
//! against `slack(r) = C1 log(T_f(r) + e) + C2 log r`, and the normalized
//! gap `(LHS - RHS) / T_f` at the largest radius must stay below a tolerance.

use std::f64::consts::E;

use num_complex::Complex64;
use serde::Serialize;

use super::constants::SmtConstants;
use super::report::{all_hold, one_based, text_table, HypothesisCheck, Verdict};
use crate::error::{Error, Result};
use crate::exact::rational_to_f64;
use crate::numeric::{
    characteristic, counting_function, find_roots_numeric, NumericCurve, Root, CLUSTER_RADIUS,
};
use crate::position::{check_subgeneral, GeometryContext, HyperplaneFamily};
use crate::weights::NochkaWeights;

pub const DEFAULT_RADII: [f64; 3] = [10.0, 100.0, 1000.0];
pub const DEFAULT_SLACK_C1: f64 = 10.0;
pub const DEFAULT_SLACK_C2: f64 = 1.0;
pub const DEFAULT_GAP_TOLERANCE: f64 = 0.05;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SampleOptions {
    pub radii: Vec<f64>,
    pub slack_c1: f64,
    pub slack_c2: f64,
    pub gap_tolerance: f64,
}

impl Default for SampleOptions {
    fn default() -> Self {
        Self {
            radii: DEFAULT_RADII.to_vec(),
            slack_c1: DEFAULT_SLACK_C1,
            slack_c2: DEFAULT_SLACK_C2,
            gap_tolerance: DEFAULT_GAP_TOLERANCE,
        }
    }
}

/// Finite roots of `H_j∘F` with multiplicities already divided by `d / d_j`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct NumericDivisor {
    #[serde(rename = "H", serialize_with = "one_based")]
    pub index: usize,
    pub d_j: u32,
    #[serde(serialize_with = "roots_as_pairs")]
    pub roots: Vec<Root>,
}

fn roots_as_pairs<S: serde::Serializer>(
    roots: &[Root],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(roots.len()))?;
    for r in roots {
        seq.serialize_element(&([r.value.re, r.value.im], r.multiplicity))?;
    }
    seq.end()
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RadiusRow {
    pub r: f64,
    /// `T_f(r) = T_F(r) / d`.
    pub characteristic: f64,
    /// `(q - (m + 1)K) T_f(r)`.
    pub lhs: f64,
    /// `Σ_j N^{[m]}(r, R_j) / d_j`.
    pub rhs: f64,
    pub slack: f64,
    /// `(lhs - rhs) / T_f(r)`.
    pub normalized_gap: f64,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SampleReport {
    pub constants: SmtConstants,
    pub options: SampleOptions,
    pub divisors: Vec<NumericDivisor>,
    pub rows: Vec<RadiusRow>,
    /// Normalized gap at the largest radius.
    pub final_gap: Option<f64>,
    pub hypotheses: Vec<HypothesisCheck>,
    pub verdict: Verdict,
}

pub fn slack(t: f64, r: f64, c1: f64, c2: f64) -> f64 {
    c1 * (t.max(0.0) + E).ln() + c2 * r.ln()
}

/// Samples `(q - (m + 1)K) T_f(r) ≤ Σ_j N^{[m]}(r, R_j) / d_j + slack(r)` at each radius.
pub fn sample_second_main_theorem(
    curve: &NumericCurve,
    family: &HyperplaneFamily,
    ctx: &GeometryContext,
    weights: &NochkaWeights,
    d: u32,
    d_i: &[u32],
    options: &SampleOptions,
) -> Result<SampleReport> {
    if curve.m() != family.m() {
        return Err(Error::InvalidInput(format!(
            "curve lies in P^{} but hyperplanes live in P^{}",
            curve.m(),
            family.m()
        )));
    }
    if d_i.len() != family.q() {
        return Err(Error::InvalidInput(format!(
            "{} values of d_i for {} divisors",
            d_i.len(),
            family.q()
        )));
    }
    if options.radii.is_empty() || options.radii.iter().any(|&r| !(r > 1.0 && r.is_finite())) {
        return Err(Error::InvalidInput(
            "radii must be finite and greater than 1".into(),
        ));
    }
    let constants = SmtConstants::new(family.m(), ctx, weights, 0);
    let m = family.m() as u32;
    let mut trail = vec![HypothesisCheck::new(
        "subgeneral position (rank)",
        check_subgeneral(family, ctx)?.is_certified(),
        "",
    )];
    let divides = d > 0 && d_i.iter().all(|&dj| dj > 0 && d.is_multiple_of(dj));
    trail.push(HypothesisCheck::new("d_j divides d", divides, ""));

    let mut divisors = Vec::new();
    let mut problems = Vec::new();
    for (j, &dj) in d_i.iter().enumerate() {
        let row: Vec<Complex64> = family.row(j).iter().map(|x| x.to_complex64()).collect();
        let pb = curve.pullback(&row);
        if pb.iter().all(|c| c.norm() == 0.0) {
            problems.push(format!("H{} contains the curve", j + 1));
            continue;
        }
        let roots = if pb.iter().skip(1).all(|c| c.norm() == 0.0) {
            Vec::new()
        } else {
            find_roots_numeric(&pb, CLUSTER_RADIUS)?
        };
        let e = if divides { d / dj } else { 1 };
        if roots.iter().any(|r| r.multiplicity % e != 0) {
            problems.push(format!(
                "root multiplicities of H{} are not divisible by {e}",
                j + 1
            ));
            continue;
        }
        let roots = roots
            .into_iter()
            .map(|r| Root {
                value: r.value,
                multiplicity: r.multiplicity / e,
            })
            .collect();
        divisors.push(NumericDivisor {
            index: j,
            d_j: dj,
            roots,
        });
    }
    trail.push(HypothesisCheck::new(
        "pullbacks reduce to R_j",
        problems.is_empty(),
        problems.join("; "),
    ));

    let coefficient = rational_to_f64(&constants.coefficient);
    let mut rows = Vec::new();
    if all_hold(&trail) {
        for &r in &options.radii {
            let t = characteristic(curve, r)? / d as f64;
            let rhs: f64 = divisors
                .iter()
                .map(|dv| counting_function(&dv.roots, r, Some(m)) / dv.d_j as f64)
                .sum();
            let lhs = coefficient * t;
            let s = slack(t, r, options.slack_c1, options.slack_c2);
            rows.push(RadiusRow {
                r,
                characteristic: t,
                lhs,
                rhs,
                slack: s,
                normalized_gap: (lhs - rhs) / t,
                holds: lhs <= rhs + s,
            });
        }
    }
    let final_gap = rows
        .iter()
        .max_by(|a, b| a.r.total_cmp(&b.r))
        .map(|row| row.normalized_gap);
    let verdict = if !all_hold(&trail) {
        Verdict::HypothesisFailure
    } else if constants.is_vacuous() {
        Verdict::VacuousPass
    } else if rows.iter().all(|r| r.holds) && final_gap.is_some_and(|g| g <= options.gap_tolerance)
    {
        Verdict::Pass
    } else {
        Verdict::Violation
    };
    Ok(SampleReport {
        constants,
        options: options.clone(),
        divisors,
        rows,
        final_gap,
        hypotheses: trail,
        verdict,
    })
}

impl SampleReport {
    pub fn to_text(&self) -> String {
        let rows: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|r| {
                vec![
                    format!("{}", r.r),
                    format!("{:.6}", r.characteristic),
                    format!("{:.6}", r.lhs),
                    format!("{:.6}", r.rhs),
                    format!("{:.6}", r.slack),
                    format!("{:+.6}", r.normalized_gap),
                    if r.holds { "yes" } else { "no" }.to_string(),
                ]
            })
            .collect();
        let mut out = format!(
            "sampled second main theorem: {}\n  coefficient q-(m+1)K = {}\n",
            self.verdict, self.constants.coefficient
        );
        out.push_str(&text_table(
            &["r", "T_f", "LHS", "RHS", "slack", "gap/T", "holds"],
            &rows,
        ));
        out.push_str(&super::genus0::hypothesis_text(&self.hypotheses));
        out
    }
}
