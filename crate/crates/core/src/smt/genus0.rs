//! Exact verification on rational curves: the genus-0 second main theorem, the
//! pointwise Wronskian bounds, and the ramification inequality.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use super::constants::SmtConstants;
use super::report::{all_hold, one_based, text_table, HypothesisCheck, Verdict};
use crate::curves::{
    order_at_place, pullback_divisor, shared_zero, wronskian_order, Divisor, Place, RationalCurve,
};
use crate::error::{Error, Result};
use crate::exact::{rank_of_rows, rational_str, GaussianRational, HomogeneousPoly};
use crate::position::{check_subgeneral, GeometryContext, HyperplaneFamily, PositionReport};
use crate::weights::{
    auxiliary_requirement, generic_auxiliary_hyperplanes, NochkaWeights, DEFAULT_RETRIES,
};

fn int(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

fn frac(p: i64, q: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

/// Per-hyperplane bookkeeping: `D_j = div(H_j∘F)` and `R_j = D_j / (d / d_j)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DivisorRow {
    #[serde(rename = "H", serialize_with = "one_based")]
    pub index: usize,
    pub d_j: u32,
    /// Total count `N(R_j)`.
    pub total: u64,
    /// `N^{[m]}(R_j)`.
    pub truncated: u64,
    /// `N^{[m]}(R_j) / d_j`.
    #[serde(with = "rational_str")]
    pub contribution: BigRational,
    pub divisor: Divisor,
}

/// Pullbacks of a family along a curve, with the hypotheses checked on the way.
struct Pullbacks {
    forms: Vec<HomogeneousPoly>,
    /// `D_j`, when `H_j∘F ≢ 0`.
    divisors: Vec<Option<Divisor>>,
    /// `R_j`, when `D_j` exists and is divisible by `d / d_j`.
    reduced: Vec<Option<Divisor>>,
    trail: Vec<HypothesisCheck>,
}

fn validate_shapes(curve: &RationalCurve, family: &HyperplaneFamily, d_i: &[u32]) -> Result<()> {
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
    Ok(())
}

fn pullbacks(
    curve: &RationalCurve,
    family: &HyperplaneFamily,
    ctx: &GeometryContext,
    d: u32,
    d_i: &[u32],
) -> Result<Pullbacks> {
    validate_shapes(curve, family, d_i)?;
    let mut trail = Vec::new();
    let position = check_subgeneral(family, ctx)?;
    trail.push(match &position {
        PositionReport::Certified { .. } => {
            HypothesisCheck::new("subgeneral position (rank)", true, "")
        }
        PositionReport::Violation {
            subset,
            rank,
            required,
        } => HypothesisCheck::new(
            "subgeneral position (rank)",
            false,
            format!(
                "hyperplanes {:?} have rank {rank} < {required}",
                subset.iter().map(|i| i + 1).collect::<Vec<_>>()
            ),
        ),
    });
    let bad_d: Vec<usize> = (0..d_i.len())
        .filter(|&j| d_i[j] == 0 || !d.is_multiple_of(d_i[j]))
        .collect();
    trail.push(HypothesisCheck::new(
        "d_j divides d",
        d > 0 && bad_d.is_empty(),
        if bad_d.is_empty() {
            String::new()
        } else {
            format!("fails for hyperplanes {:?}", plus_one(&bad_d))
        },
    ));
    trail.push(match curve.wronskian() {
        Ok(_) => HypothesisCheck::new("linearly nondegenerate curve", true, ""),
        Err(Error::LinearlyDegenerate) => HypothesisCheck::new(
            "linearly nondegenerate curve",
            false,
            "Wronskian vanishes identically",
        ),
        Err(e) => return Err(e),
    });
    let mut forms = Vec::with_capacity(family.q());
    let mut divisors = Vec::with_capacity(family.q());
    let mut zero = Vec::new();
    for j in 0..family.q() {
        let form = curve.pullback(family.row(j))?;
        match pullback_divisor(curve, family.row(j)) {
            Ok(div) => divisors.push(Some(div)),
            Err(Error::DegenerateCurveForH(_)) => {
                zero.push(j);
                divisors.push(None);
            }
            Err(e) => return Err(e),
        }
        forms.push(form);
    }
    trail.push(HypothesisCheck::new(
        "curve lies in no hyperplane",
        zero.is_empty(),
        if zero.is_empty() {
            String::new()
        } else {
            format!("pullbacks of {:?} vanish", plus_one(&zero))
        },
    ));
    let mut reduced = Vec::with_capacity(family.q());
    let mut indivisible = Vec::new();
    for (j, div) in divisors.iter().enumerate() {
        let r = match div {
            Some(div) if bad_d.is_empty() && d > 0 => match div.divide(d / d_i[j]) {
                Ok(r) => Some(r),
                Err(_) => {
                    indivisible.push(j);
                    None
                }
            },
            _ => None,
        };
        reduced.push(r);
    }
    trail.push(HypothesisCheck::new(
        "pullback multiplicities divisible by d/d_j",
        indivisible.is_empty(),
        if indivisible.is_empty() {
            String::new()
        } else {
            format!("fails for {:?}", plus_one(&indivisible))
        },
    ));
    let nonzero: Vec<HomogeneousPoly> = forms.iter().filter(|f| !f.is_zero()).cloned().collect();
    let shared = if zero.is_empty() {
        shared_zero(&nonzero, ctx.n as usize)
    } else {
        None
    };
    trail.push(HypothesisCheck::new(
        "no point on N+1 pullbacks",
        shared.is_none(),
        shared.map_or(String::new(), |s| {
            format!("pullbacks of {:?} share a zero", plus_one(&s))
        }),
    ));
    Ok(Pullbacks {
        forms,
        divisors,
        reduced,
        trail,
    })
}

fn plus_one(v: &[usize]) -> Vec<usize> {
    v.iter().map(|i| i + 1).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Genus0Report {
    pub constants: SmtConstants,
    pub curve_degree: usize,
    pub d: u32,
    /// `T_f = δ / d`.
    #[serde(with = "rational_str")]
    pub characteristic: BigRational,
    /// `(q - (m + 1)K) T_f`; present whenever it could be computed, even if a hypothesis fails.
    #[serde(
        skip_serializing_if = "Option::is_none",
        serialize_with = "opt_rational"
    )]
    pub lhs: Option<BigRational>,
    /// `Σ N^{[m]}(R_j) / d_j + A`.
    #[serde(
        skip_serializing_if = "Option::is_none",
        serialize_with = "opt_rational"
    )]
    pub rhs: Option<BigRational>,
    pub divisors: Vec<DivisorRow>,
    pub hypotheses: Vec<HypothesisCheck>,
    pub verdict: Verdict,
}

pub(crate) fn opt_rational<S: serde::Serializer>(
    v: &Option<BigRational>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    match v {
        Some(r) => s.serialize_str(&crate::exact::fmt_rational(r)),
        None => s.serialize_none(),
    }
}

/// `(q - (m + 1)K) δ/d ≤ Σ_j N^{[m]}(f, R_j) / d_j` on `P^1`, compared exactly.
///
/// Hypothesis failures are reported as such; when the divisor data exists the
/// raw sides are still included for diagnosis.
pub fn verify_genus0(
    curve: &RationalCurve,
    family: &HyperplaneFamily,
    ctx: &GeometryContext,
    weights: &NochkaWeights,
    d: u32,
    d_i: &[u32],
) -> Result<Genus0Report> {
    let pb = pullbacks(curve, family, ctx, d, d_i)?;
    let constants = SmtConstants::new(family.m(), ctx, weights, 0);
    let m = family.m() as u32;
    let characteristic = frac(curve.degree() as i64, d.max(1) as i64);
    // raw diagnostics fall back to undivided divisors when R_j cannot be formed
    let usable: Vec<Option<&Divisor>> = pb
        .reduced
        .iter()
        .zip(&pb.divisors)
        .map(|(r, dv)| r.as_ref().or(dv.as_ref()))
        .collect();
    let mut divisors = Vec::new();
    let mut rhs_sum = Some(BigRational::zero());
    for (j, div) in usable.iter().enumerate() {
        match div {
            Some(div) => {
                let truncated = div.truncated(m);
                let contribution = frac(truncated as i64, d_i[j].max(1) as i64);
                if let Some(s) = rhs_sum.as_mut() {
                    *s += &contribution;
                }
                divisors.push(DivisorRow {
                    index: j,
                    d_j: d_i[j],
                    total: div.degree(),
                    truncated,
                    contribution,
                    divisor: (*div).clone(),
                });
            }
            None => rhs_sum = None,
        }
    }
    let lhs = &constants.coefficient * &characteristic;
    let rhs = rhs_sum.map(|s| s + &constants.a);
    let verdict = if !all_hold(&pb.trail) {
        Verdict::HypothesisFailure
    } else {
        let rhs = rhs
            .as_ref()
            .expect("all divisors exist when hypotheses hold");
        if constants.is_vacuous() {
            Verdict::VacuousPass
        } else if lhs <= *rhs {
            Verdict::Pass
        } else {
            Verdict::Violation
        }
    };
    Ok(Genus0Report {
        constants,
        curve_degree: curve.degree(),
        d,
        characteristic,
        lhs: Some(lhs),
        rhs,
        divisors,
        hypotheses: pb.trail,
        verdict,
    })
}

impl Genus0Report {
    pub fn to_text(&self) -> String {
        let rows: Vec<Vec<String>> = self
            .divisors
            .iter()
            .map(|r| {
                vec![
                    format!("H{}", r.index + 1),
                    r.total.to_string(),
                    r.truncated.to_string(),
                    r.d_j.to_string(),
                    r.contribution.to_string(),
                ]
            })
            .collect();
        let mut out = format!(
            "genus-0 second main theorem: {}\n  coefficient q-(m+1)K = {}   T_f = {}\n",
            self.verdict, self.constants.coefficient, self.characteristic
        );
        if let (Some(l), Some(r)) = (&self.lhs, &self.rhs) {
            out.push_str(&format!("  LHS = {l}   RHS = {r}\n"));
        }
        out.push_str(&text_table(
            &["divisor", "N", "N^[m]", "d_j", "N^[m]/d_j"],
            &rows,
        ));
        out.push_str(&hypothesis_text(&self.hypotheses));
        out
    }
}

pub(crate) fn hypothesis_text(trail: &[HypothesisCheck]) -> String {
    trail
        .iter()
        .map(|h| {
            let mark = if h.holds { "ok  " } else { "FAIL" };
            if h.detail.is_empty() {
                format!("  [{mark}] {}\n", h.name)
            } else {
                format!("  [{mark}] {}: {}\n", h.name, h.detail)
            }
        })
        .collect()
}

/// One point of `P^1` in the pointwise check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PointRow {
    pub place: Place,
    /// `ν_{H_j(F)}` for the family followed by the auxiliary hyperplanes.
    pub orders: Vec<u32>,
    pub wronskian_order: u32,
    /// `Σ ω(j) max(ν_j - m, 0)`, auxiliary hyperplanes weighted by `Θ`.
    #[serde(with = "rational_str")]
    pub weighted_excess: BigRational,
    /// `(s_N - u + 2 + b) ν_W`.
    #[serde(with = "rational_str")]
    pub weighted_bound: BigRational,
    /// Largest `Σ_{j∈R} max(ν_j - m, 0)` over independent `(m+1)`-subsets `R`.
    pub max_basis_excess: u32,
    pub weighted_ok: bool,
    pub basis_ok: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PointwiseReport {
    pub auxiliary_rows: Vec<Vec<GaussianRational>>,
    pub wronskian_factor: i64,
    pub points: Vec<PointRow>,
    /// Sum of `weighted_excess` over the listed points.
    #[serde(with = "rational_str")]
    pub pointwise_sum: BigRational,
    /// `Σ ω(j) (N(D_j) - N^{[m]}(D_j))` from the whole divisors.
    #[serde(with = "rational_str")]
    pub global_excess: BigRational,
    /// `(m + 1)δ - m(m + 1)`.
    pub wronskian_total: usize,
    pub sums_match: bool,
    /// `(s_N - u + 2 + b) N(W) ≥ Σ ω(j) (N - N^{[m]})`.
    pub counting_form_holds: bool,
    pub hypotheses: Vec<HypothesisCheck>,
    pub verdict: Verdict,
}

/// Largest `Σ_{j∈R} w_j` over independent subsets of the rows, by the matroid greedy rule.
fn max_independent_weight(rows: &[&[GaussianRational]], w: &[u32]) -> u32 {
    let mut order: Vec<usize> = (0..rows.len()).filter(|&j| w[j] > 0).collect();
    order.sort_by(|&a, &b| w[b].cmp(&w[a]).then(a.cmp(&b)));
    let mut chosen: Vec<&[GaussianRational]> = Vec::new();
    let mut total = 0;
    for j in order {
        chosen.push(rows[j]);
        if rank_of_rows(&chosen) == chosen.len() {
            total += w[j];
        } else {
            chosen.pop();
        }
    }
    total
}

/// Checks at every zero of every pullback that
/// `Σ ω(j) max(ν_j - m, 0) ≤ (s_N - u + 2 + b) ν_W` (auxiliary hyperplanes with weight `Θ`)
/// and `Σ_{j∈R} max(ν_j - m, 0) ≤ ν_W` for independent `(m+1)`-subsets `R`, then
/// sums the pointwise terms into the counting form.
///
/// Every pullback must split into linear factors over `Q(i)`.
pub fn verify_pointwise(
    curve: &RationalCurve,
    family: &HyperplaneFamily,
    ctx: &GeometryContext,
    weights: &NochkaWeights,
    seed: u64,
) -> Result<PointwiseReport> {
    let ones = vec![1; family.q()];
    let pb = pullbacks(curve, family, ctx, 1, &ones)?;
    let constants = SmtConstants::new(family.m(), ctx, weights, 0);
    let m = family.m() as u32;
    let factor = constants.wronskian_factor();
    if !all_hold(&pb.trail) {
        return Ok(PointwiseReport {
            auxiliary_rows: Vec::new(),
            wronskian_factor: factor,
            points: Vec::new(),
            pointwise_sum: BigRational::zero(),
            global_excess: BigRational::zero(),
            wronskian_total: 0,
            sums_match: false,
            counting_form_holds: false,
            hypotheses: pb.trail,
            verdict: Verdict::HypothesisFailure,
        });
    }
    let w = curve.wronskian()?;
    let requirement = auxiliary_requirement(family, ctx, weights)?;
    let aux = generic_auxiliary_hyperplanes(
        family,
        &requirement,
        constants.auxiliary_count(),
        seed,
        DEFAULT_RETRIES,
    )?;

    let mut all_rows: Vec<&[GaussianRational]> = family.rows().iter().map(Vec::as_slice).collect();
    all_rows.extend(aux.iter().map(Vec::as_slice));
    let mut forms = pb.forms.clone();
    let mut divisors: Vec<Divisor> = pb
        .divisors
        .into_iter()
        .map(|d| d.expect("hypotheses hold"))
        .collect();
    for row in &aux {
        forms.push(curve.pullback(row)?);
        divisors.push(pullback_divisor(curve, row)?);
    }
    let mut omega = weights.omega.clone();
    omega.extend(std::iter::repeat_n(weights.theta.clone(), aux.len()));

    let mut places: Vec<Place> = Vec::new();
    for (j, div) in divisors.iter().enumerate() {
        for e in div.entries() {
            let relevant = j < family.q() || e.multiplicity > m;
            if !relevant {
                continue;
            }
            if let Place::Factor(p) = &e.place {
                return Err(Error::RequiresSplitFixture(format!(
                    "pullback of hyperplane {} has the non-split factor {p}",
                    j + 1
                )));
            }
            if !places.contains(&e.place) {
                places.push(e.place.clone());
            }
        }
    }
    places.sort();

    let mut points = Vec::with_capacity(places.len());
    let mut pointwise_sum = BigRational::zero();
    for place in places {
        let orders: Vec<u32> = forms.iter().map(|f| order_at_place(f, &place)).collect();
        let excess: Vec<u32> = orders.iter().map(|&o| o.saturating_sub(m)).collect();
        let weighted_excess: BigRational = excess
            .iter()
            .zip(&omega)
            .filter(|(e, _)| **e > 0)
            .map(|(&e, w)| w * int(e as i64))
            .sum();
        let wo = wronskian_order(&w, &place);
        let weighted_bound = int(factor * wo as i64);
        let max_basis_excess = if rank_of_rows(&all_rows) == family.m() + 1 {
            max_independent_weight(&all_rows, &excess)
        } else {
            0
        };
        pointwise_sum += &weighted_excess;
        points.push(PointRow {
            weighted_ok: weighted_excess <= weighted_bound,
            basis_ok: max_basis_excess <= wo,
            place,
            orders,
            wronskian_order: wo,
            weighted_excess,
            weighted_bound,
            max_basis_excess,
        });
    }
    let global_excess: BigRational = divisors
        .iter()
        .zip(&omega)
        .map(|(d, w)| w * int(d.degree() as i64 - d.truncated(m) as i64))
        .sum();
    let sums_match = pointwise_sum == global_excess;
    let counting_form_holds = int(factor * w.total as i64) >= global_excess;
    let ok =
        points.iter().all(|p| p.weighted_ok && p.basis_ok) && sums_match && counting_form_holds;
    Ok(PointwiseReport {
        auxiliary_rows: aux,
        wronskian_factor: factor,
        points,
        pointwise_sum,
        global_excess,
        wronskian_total: w.total,
        sums_match,
        counting_form_holds,
        hypotheses: pb.trail,
        verdict: if ok {
            Verdict::Pass
        } else {
            Verdict::Violation
        },
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RamificationRow {
    #[serde(rename = "H", serialize_with = "one_based")]
    pub index: usize,
    /// Smallest multiplicity in `f^*R_j`.
    pub v: u32,
    /// `1 - min(1, m / v_j)`.
    #[serde(with = "rational_str")]
    pub term: BigRational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RamificationReport {
    pub rows: Vec<RamificationRow>,
    #[serde(with = "rational_str")]
    pub lhs: BigRational,
    /// `(m + 1)K`.
    #[serde(with = "rational_str")]
    pub rhs: BigRational,
    pub hypotheses: Vec<HypothesisCheck>,
    pub verdict: Verdict,
}

/// `Σ_j (1 - min(1, m / v_j)) ≤ (m + 1)K` with `v_j` the smallest multiplicity of `f^*R_j`.
pub fn ramification_check(
    curve: &RationalCurve,
    family: &HyperplaneFamily,
    ctx: &GeometryContext,
    weights: &NochkaWeights,
    d: u32,
    d_i: &[u32],
) -> Result<RamificationReport> {
    let pb = pullbacks(curve, family, ctx, d, d_i)?;
    let constants = SmtConstants::new(family.m(), ctx, weights, 0);
    let m = family.m() as i64;
    let mut rows = Vec::new();
    let mut lhs = BigRational::zero();
    for (j, r) in pb.reduced.iter().enumerate() {
        let Some(r) = r else { continue };
        let v = r.min_multiplicity().expect("a pullback on P^1 has zeros");
        let term = if (v as i64) <= m {
            BigRational::zero()
        } else {
            int(1) - frac(m, v as i64)
        };
        lhs += &term;
        rows.push(RamificationRow { index: j, v, term });
    }
    let rhs = constants.ramification_bound();
    let verdict = if !all_hold(&pb.trail) {
        Verdict::HypothesisFailure
    } else if lhs <= rhs {
        Verdict::Pass
    } else {
        Verdict::Violation
    };
    Ok(RamificationReport {
        rows,
        lhs,
        rhs,
        hypotheses: pb.trail,
        verdict,
    })
}

impl RamificationReport {
    pub fn to_text(&self) -> String {
        let rows: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|r| {
                vec![
                    format!("H{}", r.index + 1),
                    r.v.to_string(),
                    r.term.to_string(),
                ]
            })
            .collect();
        let mut out = format!(
            "ramification: {}\n  sum = {}   bound (m+1)K = {}\n",
            self.verdict, self.lhs, self.rhs
        );
        out.push_str(&text_table(&["divisor", "v_j", "1-min(1,m/v_j)"], &rows));
        out.push_str(&hypothesis_text(&self.hypotheses));
        out
    }
}

impl PointwiseReport {
    pub fn to_text(&self) -> String {
        let rows: Vec<Vec<String>> = self
            .points
            .iter()
            .map(|p| {
                vec![
                    p.place.to_string(),
                    format!("{:?}", p.orders),
                    p.wronskian_order.to_string(),
                    p.weighted_excess.to_string(),
                    p.weighted_bound.to_string(),
                    p.max_basis_excess.to_string(),
                ]
            })
            .collect();
        let mut out = format!(
            "pointwise Wronskian bounds: {}\n  sum over points = {}   from divisors = {}   factor * N(W) = {}\n",
            self.verdict,
            self.pointwise_sum,
            self.global_excess,
            self.wronskian_factor * self.wronskian_total as i64
        );
        out.push_str(&text_table(
            &["point", "orders", "ord W", "weighted", "bound", "basis"],
            &rows,
        ));
        out.push_str(&hypothesis_text(&self.hypotheses));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::AffinePoly;
    use crate::weights::build_weights;

    fn line() -> RationalCurve {
        RationalCurve::from_affine(1, &[AffinePoly::from_ints(&[1]), AffinePoly::z()]).unwrap()
    }

    #[test]
    fn three_points_on_a_line() {
        let f = HyperplaneFamily::from_ints(&[&[1, 0], &[0, 1], &[1, 1]]).unwrap();
        let ctx = GeometryContext::cartan(1);
        let w = build_weights(&f, &ctx).unwrap();
        let r = verify_genus0(&line(), &f, &ctx, &w, 1, &[1, 1, 1]).unwrap();
        assert_eq!(r.constants.coefficient, int(1));
        assert_eq!(r.lhs, Some(int(1)));
        assert_eq!(r.rhs, Some(int(3)));
        assert_eq!(r.verdict, Verdict::Pass);
    }

    #[test]
    fn dependent_coordinates_fail_the_hypothesis() {
        let c = RationalCurve::from_affine(
            2,
            &[
                AffinePoly::from_ints(&[1]),
                AffinePoly::from_ints(&[0, 0, 1]),
                AffinePoly::from_ints(&[1, 0, -1]),
            ],
        )
        .unwrap();
        let f =
            HyperplaneFamily::from_ints(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 1]]).unwrap();
        let ctx = GeometryContext::cartan(2);
        let w = build_weights(&f, &ctx).unwrap();
        let r = verify_genus0(&c, &f, &ctx, &w, 1, &[1; 4]).unwrap();
        assert_eq!(r.verdict, Verdict::HypothesisFailure);
        assert_eq!((r.lhs.clone(), r.rhs.clone()), (Some(int(2)), Some(int(8))));
    }

    #[test]
    fn double_cover_ramification() {
        // F = [z^2 : (z-1)^2]: two pullbacks are squares, v = 2m contributes 1/2 each
        let c = RationalCurve::from_affine(
            2,
            &[
                AffinePoly::from_ints(&[0, 0, 1]),
                AffinePoly::from_ints(&[1, -2, 1]),
            ],
        )
        .unwrap();
        let f = HyperplaneFamily::from_ints(&[&[1, 0], &[0, 1], &[1, -1], &[1, 1]]).unwrap();
        let ctx = GeometryContext::cartan(1);
        let w = build_weights(&f, &ctx).unwrap();
        let r = ramification_check(&c, &f, &ctx, &w, 1, &[1; 4]).unwrap();
        assert_eq!(r.rows[0].term, frac(1, 2));
        assert_eq!(r.rows[1].term, frac(1, 2));
        assert_eq!(r.lhs, int(1));
        assert_eq!(r.verdict, Verdict::Pass);
        let p = verify_pointwise(&c, &f, &ctx, &w, 0).unwrap();
        assert_eq!(p.verdict, Verdict::Pass);
        assert_eq!(p.global_excess, int(2));
    }
}
