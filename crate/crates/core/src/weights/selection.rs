//! Representative selection for weighted sums and product bases.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};

use super::NochkaWeights;
use crate::error::{Error, Result};
use crate::exact::{rank_of_rows, GaussianRational};
use crate::position::{indices_of, size, subset_of, GeometryContext, HyperplaneFamily, Subset};

fn sorted_by_weight_desc(r: Subset, e: &[BigRational]) -> Vec<usize> {
    let mut idx = indices_of(r);
    idx.sort_by(|&a, &b| e[b].cmp(&e[a]).then(a.cmp(&b)));
    idx
}

/// Picks `c(R)` indices of `R` spanning the same rows as `R`, greedily by
/// decreasing `E` (ties to the smaller index), and verifies
/// `Σ_{j∈R} ω'(j) E_j ≤ (n - u + 2 + b) Σ_i E_{j_i}` exactly.
pub fn select_representatives(
    family: &HyperplaneFamily,
    ctx: &GeometryContext,
    weights: &NochkaWeights,
    r: Subset,
    e: &[BigRational],
) -> Result<Vec<usize>> {
    if e.len() != family.q() {
        return Err(Error::InvalidInput(format!(
            "expected {} values, got {}",
            family.q(),
            e.len()
        )));
    }
    if size(r) > ctx.n as usize + 1 {
        return Err(Error::Precondition(format!(
            "|R| = {} exceeds N + 1",
            size(r)
        )));
    }
    if e.iter().any(Signed::is_negative) {
        return Err(Error::Precondition("values must be nonnegative".into()));
    }
    let target = family.c(r);
    let mut chosen: Vec<usize> = Vec::with_capacity(target);
    let mut mask: Subset = 0;
    for j in sorted_by_weight_desc(r, e) {
        if chosen.len() == target {
            break;
        }
        // elements already in the span of the chosen rows form the closure
        if family.c(mask | (1 << j)) > family.c(mask) {
            chosen.push(j);
            mask |= 1 << j;
        }
    }
    if family.c(mask) != target || chosen.len() != target {
        return Err(Error::SelectionFailure(
            "selected rows do not span R".into(),
        ));
    }
    let lhs: BigRational = indices_of(r)
        .iter()
        .map(|&j| &weights.omega_prime[j] * &e[j])
        .sum();
    let rhs: BigRational =
        chosen.iter().map(|&j| &e[j]).sum::<BigRational>() * BigInt::from(weights.scale);
    if lhs > rhs {
        return Err(Error::SelectionFailure(format!(
            "weighted sum {lhs} exceeds {rhs}"
        )));
    }
    Ok(chosen)
}

/// Extends a representative list to `s_N + 1` elements of `R` (next in the
/// same order) and verifies `Σ_{j∈R} ω(j) E_j ≤ Σ_i E_{j_i}` exactly.
pub fn pad_representatives(
    family: &HyperplaneFamily,
    weights: &NochkaWeights,
    r: Subset,
    e: &[BigRational],
    chosen: &[usize],
) -> Result<Vec<usize>> {
    let want = weights.s_n + 1;
    if size(r) < want {
        return Err(Error::Precondition(format!(
            "|R| = {} is below s_N + 1 = {want}",
            size(r)
        )));
    }
    let mut out = chosen.to_vec();
    for j in sorted_by_weight_desc(r, e) {
        if out.len() >= want {
            break;
        }
        if !out.contains(&j) {
            out.push(j);
        }
    }
    if family.c(subset_of(&out)) != family.c(r) {
        return Err(Error::SelectionFailure("padded rows do not span R".into()));
    }
    let lhs: BigRational = indices_of(r)
        .iter()
        .map(|&j| &weights.omega[j] * &e[j])
        .sum();
    let rhs: BigRational = out.iter().map(|&j| &e[j]).sum();
    if lhs > rhs {
        return Err(Error::SelectionFailure(format!(
            "weighted sum {lhs} exceeds {rhs}"
        )));
    }
    Ok(out)
}

/// `Π_all E ≤ (Π_selected E)^{m - k + 2}`, exactly.
pub fn verify_product_inequality(
    e: &[BigRational],
    selected: &[usize],
    m: usize,
    k: usize,
) -> bool {
    let all: BigRational = e.iter().fold(BigRational::one(), |acc, x| acc * x);
    let sel: BigRational = selected
        .iter()
        .fold(BigRational::one(), |acc, &j| acc * &e[j]);
    let exp = (m + 2 - k) as i32;
    all <= num_traits::pow(sel, exp as usize)
}

/// Among the rank-`k` independent `k`-subsets of `m + 1` rows, the one with
/// the largest product of `E` (ties to the lexicographically first), checked
/// against `Π_all E ≤ (Π_selected E)^{m - k + 2}`.
pub fn select_product_basis(
    rows: &[Vec<GaussianRational>],
    e: &[BigRational],
) -> Result<Vec<usize>> {
    let n = rows.len();
    if n == 0 || e.len() != n {
        return Err(Error::InvalidInput("need one value per row".into()));
    }
    let m = rows[0].len() - 1;
    if n != m + 1 {
        return Err(Error::InvalidInput(format!(
            "expected m + 1 = {} rows, got {n}",
            m + 1
        )));
    }
    let one = BigRational::one();
    if e.iter().any(|x| *x <= one) {
        return Err(Error::Precondition("values must exceed 1".into()));
    }
    let refs: Vec<&[GaussianRational]> = rows.iter().map(Vec::as_slice).collect();
    let k = rank_of_rows(&refs);
    if k == 0 {
        return Err(Error::InvalidInput("zero rows".into()));
    }
    let mut best: Option<(BigRational, Vec<usize>)> = None;
    for s in crate::position::subsets_of_size(n, k) {
        let idx = indices_of(s);
        let sub: Vec<&[GaussianRational]> = idx.iter().map(|&j| refs[j]).collect();
        if rank_of_rows(&sub) != k {
            continue;
        }
        let p: BigRational = idx.iter().fold(BigRational::one(), |acc, &j| acc * &e[j]);
        // subsets arrive in bitmask order, so only a strictly larger product replaces
        let replace = match &best {
            None => true,
            Some((bp, bidx)) => p > *bp || (p == *bp && idx < *bidx),
        };
        if replace {
            best = Some((p, idx));
        }
    }
    let (_, sel) = best.ok_or_else(|| Error::SelectionFailure("no independent subset".into()))?;
    if !verify_product_inequality(e, &sel, m, k) {
        return Err(Error::SelectionFailure(format!(
            "product inequality fails for {sel:?}"
        )));
    }
    Ok(sel)
}
