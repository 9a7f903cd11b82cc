//! Greedy minimal-slope filtrations `∅ = R_0 ⊊ R_1 ⊊ … ⊊ R_s`.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::position::{indices_of, size, GeometryContext, HyperplaneFamily, Subset};

/// `ρ(R_1, R_2) = (c(R_2) - c(R_1)) / (|R_2| - |R_1|)` for `R_1 ⊊ R_2`.
pub fn rho(family: &HyperplaneFamily, r1: Subset, r2: Subset) -> BigRational {
    debug_assert!(r1 & !r2 == 0 && r1 != r2);
    let dc = family.c(r2) as i64 - family.c(r1) as i64;
    let ds = size(r2) as i64 - size(r1) as i64;
    BigRational::new(BigInt::from(dc), BigInt::from(ds))
}

/// `(u - b - c(R)) / (k_N - |R|)`, or `None` when `|R| >= k_N`.
pub fn ceiling(family: &HyperplaneFamily, ctx: &GeometryContext, r: Subset) -> Option<BigRational> {
    let den = ctx.k_n() - size(r) as i64;
    (den > 0).then(|| {
        BigRational::new(
            BigInt::from(ctx.required_rank() - family.c(r) as i64),
            BigInt::from(den),
        )
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Filtration {
    /// `R_0 = ∅, R_1, …, R_s`.
    pub chain: Vec<Subset>,
    /// `ρ(R_{i-1}, R_i)` for `i = 1..=s`.
    pub rho_values: Vec<BigRational>,
}

impl Filtration {
    pub fn s(&self) -> usize {
        self.chain.len() - 1
    }

    pub fn last(&self) -> Subset {
        *self.chain.last().expect("chain starts with the empty set")
    }

    /// The chain as sorted 0-based index lists, without `R_0`.
    pub fn index_chain(&self) -> Vec<Vec<usize>> {
        self.chain[1..].iter().map(|&r| indices_of(r)).collect()
    }
}

fn lex_cmp(a: Subset, b: Subset) -> Ordering {
    indices_of(a).cmp(&indices_of(b))
}

/// All proper supersets `R` of `base` with `c(base) < c(R) < u - b`.
pub(crate) fn candidates<'a>(
    family: &'a HyperplaneFamily,
    ctx: &'a GeometryContext,
    base: Subset,
) -> impl Iterator<Item = Subset> + 'a {
    let comp = family.full() & !base;
    let base_c = family.c(base) as i64;
    let ub = ctx.required_rank();
    // enumerate nonempty submasks of comp
    let mut sub = comp;
    let mut done = comp == 0;
    std::iter::from_fn(move || {
        while !done {
            let r = base | sub;
            if sub == 0 {
                done = true;
                return None;
            }
            sub = (sub - 1) & comp;
            let c = family.c(r) as i64;
            if base_c < c && c < ub {
                return Some(r);
            }
        }
        None
    })
}

/// The candidate minimizing `ρ(base, R)`, ties going to larger `|R|` and then to
/// the lexicographically smaller sorted index list.
fn best_candidate(
    family: &HyperplaneFamily,
    ctx: &GeometryContext,
    base: Subset,
) -> Option<(Subset, BigRational)> {
    let mut best: Option<(Subset, BigRational)> = None;
    for r in candidates(family, ctx, base) {
        let p = rho(family, base, r);
        let better = match &best {
            None => true,
            Some((br, bp)) => match p.cmp(bp) {
                Ordering::Less => true,
                Ordering::Greater => false,
                Ordering::Equal => match size(r).cmp(&size(*br)) {
                    Ordering::Greater => true,
                    Ordering::Less => false,
                    Ordering::Equal => lex_cmp(r, *br) == Ordering::Less,
                },
            },
        };
        if better {
            best = Some((r, p));
        }
    }
    best
}

/// Builds the filtration greedily and certifies it before returning.
///
/// A step is taken only when its slope is strictly below the ceiling, so a
/// family in general position yields the empty chain.
///
/// The family is expected to be certified for `ctx` already.
pub fn build_filtration(family: &HyperplaneFamily, ctx: &GeometryContext) -> Result<Filtration> {
    family.ensure_enumerable()?;
    let k_n = ctx.k_n();
    if (family.q() as i64) < k_n {
        return Err(Error::TooFewDivisors { q: family.q(), k_n });
    }
    let mut chain = vec![0];
    let mut rho_values: Vec<BigRational> = Vec::new();
    loop {
        let base = *chain.last().unwrap();
        let Some((r, p)) = best_candidate(family, ctx, base) else {
            break;
        };
        match ceiling(family, ctx, r) {
            Some(cap) if p < cap => {}
            _ => break,
        }
        chain.push(r);
        rho_values.push(p);
    }
    let f = Filtration { chain, rho_values };
    certify_filtration(family, ctx, &f)?;
    Ok(f)
}

/// Checks the defining conditions of a filtration exhaustively:
/// `c(R_s) < u - b`; `0 < ρ_1 < … < ρ_s <= (u - b - c(R_s)) / (k_N - |R_s|)`;
/// every step has minimal slope among candidates, and slope ties never involve
/// sets larger than `R_s`; every candidate above `R_s` has slope at least
/// `(u - b - c(R_s)) / (k_N - |R_s|)`.
pub fn certify_filtration(
    family: &HyperplaneFamily,
    ctx: &GeometryContext,
    f: &Filtration,
) -> Result<()> {
    let fail = |msg: String| Err(Error::ConstructionFailure(msg));
    if f.chain.first() != Some(&0) || f.rho_values.len() + 1 != f.chain.len() {
        return fail("malformed chain".into());
    }
    for w in f.chain.windows(2) {
        if w[0] & !w[1] != 0 || w[0] == w[1] {
            return fail("chain is not strictly increasing".into());
        }
    }
    for (i, w) in f.chain.windows(2).enumerate() {
        if rho(family, w[0], w[1]) != f.rho_values[i] {
            return fail(format!("recorded slope {} is stale", i + 1));
        }
    }
    let last = f.last();
    let ub = ctx.required_rank();
    if family.c(last) as i64 >= ub {
        return fail(format!(
            "c(R_s) = {} is not below u - b = {ub}",
            family.c(last)
        ));
    }
    let mut prev = BigRational::zero();
    for p in &f.rho_values {
        if *p <= prev {
            return fail("slopes are not strictly increasing from 0".into());
        }
        prev = p.clone();
    }
    let cap = ceiling(family, ctx, last)
        .ok_or_else(|| Error::ConstructionFailure("|R_s| >= k_N".into()))?;
    if let Some(p) = f.rho_values.last() {
        if *p > cap {
            return fail(format!("last slope {p} exceeds ceiling {cap}"));
        }
    }
    for i in 1..f.chain.len() {
        let base = f.chain[i - 1];
        for r in candidates(family, ctx, base) {
            let p = rho(family, base, r);
            match p.cmp(&f.rho_values[i - 1]) {
                Ordering::Less => {
                    return fail(format!(
                        "step {i} is not of minimal slope: {:?} has {p}",
                        indices_of(r)
                    ))
                }
                Ordering::Equal if size(r) > size(last) => {
                    return fail(format!(
                        "step {i}: slope tie with {:?} larger than R_s",
                        indices_of(r)
                    ))
                }
                _ => {}
            }
        }
    }
    for r in candidates(family, ctx, last) {
        if rho(family, last, r) < cap {
            return fail(format!(
                "candidate {:?} above R_s has slope below the ceiling",
                indices_of(r)
            ));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::position::subset_of;

    #[test]
    fn general_position_gives_empty_chain() {
        let f = HyperplaneFamily::from_ints(&[
            &[1, 0, 0],
            &[0, 1, 0],
            &[0, 0, 1],
            &[1, 1, 1],
            &[1, 2, 3],
        ])
        .unwrap();
        let fil = build_filtration(&f, &GeometryContext::cartan(2)).unwrap();
        assert_eq!(fil.s(), 0);
    }

    #[test]
    fn concurrent_triple_gives_empty_chain() {
        let f = HyperplaneFamily::from_ints(&[
            &[1, 0, 0],
            &[0, 1, 0],
            &[1, 1, 0],
            &[0, 0, 1],
            &[1, 2, 3],
        ])
        .unwrap();
        let ctx = GeometryContext::new(2, -1, 3).unwrap();
        let fil = build_filtration(&f, &ctx).unwrap();
        assert_eq!(fil.s(), 0);
        assert_eq!(
            rho(&f, 0, subset_of(&[0, 1, 2])),
            BigRational::new(2.into(), 3.into())
        );
        assert_eq!(
            ceiling(&f, &ctx, subset_of(&[0, 1, 2])).unwrap(),
            BigRational::new(1.into(), 2.into())
        );
    }

    #[test]
    fn nonempty_chain_for_degenerate_pool() {
        // three copies of one plane in P^3 plus generic planes, N = 5
        let f = HyperplaneFamily::from_ints(&[
            &[1, 0, 0, 0],
            &[2, 0, 0, 0],
            &[3, 0, 0, 0],
            &[0, 1, 0, 0],
            &[0, 0, 1, 0],
            &[0, 0, 0, 1],
            &[1, 1, 1, 1],
            &[1, 2, 3, 5],
        ])
        .unwrap();
        let ctx = GeometryContext::new(3, -1, 5).unwrap();
        assert!(crate::position::check_subgeneral(&f, &ctx)
            .unwrap()
            .is_certified());
        let fil = build_filtration(&f, &ctx).unwrap();
        assert_eq!(fil.index_chain(), vec![vec![0, 1, 2]]);
        assert_eq!(fil.rho_values, vec![BigRational::new(1.into(), 3.into())]);
    }

    #[test]
    fn too_few_divisors() {
        let f = HyperplaneFamily::from_ints(&[&[1, 0, 0], &[0, 1, 0]]).unwrap();
        let err = build_filtration(&f, &GeometryContext::cartan(2)).unwrap_err();
        assert_eq!(err, Error::TooFewDivisors { q: 2, k_n: 3 });
    }
}
