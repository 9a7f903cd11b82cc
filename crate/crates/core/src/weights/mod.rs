//! Nochka weights and the selection procedures built on them.

mod auxiliary;
mod filtration;
mod selection;

pub use auxiliary::{
    auxiliary_requirement, generic_auxiliary_hyperplanes, AuxiliaryRequirement, DEFAULT_RETRIES,
};
pub use filtration::{build_filtration, ceiling, certify_filtration, rho, Filtration};
pub use selection::{
    pad_representatives, select_product_basis, select_representatives, verify_product_inequality,
};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::position::{
    check_subgeneral, indices_of, size, subsets_of_size, GeometryContext, HyperplaneFamily, Subset,
};

/// Scaled weights `ω(j)`, `Θ` with the constants `k_N`, `s_N`, `t_N` and the
/// unscaled data they came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NochkaWeights {
    pub omega: Vec<BigRational>,
    pub theta: BigRational,
    pub k_n: i64,
    pub s_n: usize,
    pub t_n: BigRational,
    /// `n({D_j})`: rank of the whole family minus one.
    pub n: usize,
    /// `n - u + 2 + b`, the factor between scaled and unscaled weights.
    pub scale: i64,
    pub omega_prime: Vec<BigRational>,
    pub theta_prime: BigRational,
    pub filtration: Filtration,
    /// `R_{s+1}`.
    pub completion: Subset,
}

fn int(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

fn frac(p: i64, q: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

/// `R_s` filled up with the smallest unused indices to size `k`.
fn complete(last: Subset, k: usize, q: usize) -> Subset {
    let mut r = last;
    for j in 0..q {
        if size(r) >= k {
            break;
        }
        r |= 1 << j;
    }
    r
}

/// Certifies the family, builds the filtration and derives the weights.
///
/// Every property the weights are supposed to have (positivity, `ω ≤ Θ`,
/// `Θ ≥ t_N/k_N`, the sum bound and the scaling) is checked before return.
pub fn build_weights(family: &HyperplaneFamily, ctx: &GeometryContext) -> Result<NochkaWeights> {
    let k_n = ctx.k_n();
    let q = family.q();
    if (q as i64) < k_n {
        return Err(Error::TooFewDivisors { q, k_n });
    }
    check_subgeneral(family, ctx)?.into_result()?;
    let (n0, n) = family.n0_and_n(ctx.n as usize)?;
    let scale = n as i64 - ctx.u + 2 + ctx.b;
    if scale <= 0 {
        return Err(Error::ConstructionFailure(format!(
            "n - u + 2 + b = {scale} is not positive"
        )));
    }
    let filtration = build_filtration(family, ctx)?;
    let last = filtration.last();
    let completion = complete(last, k_n as usize, q);
    let theta_prime = frac(
        family.c(completion) as i64 - family.c(last) as i64,
        k_n - size(last) as i64,
    );
    let mut omega_prime = vec![theta_prime.clone(); q];
    for (i, w) in filtration.chain.windows(2).enumerate() {
        for j in indices_of(w[1] & !w[0]) {
            omega_prime[j] = filtration.rho_values[i].clone();
        }
    }
    let sc = int(scale);
    let omega: Vec<BigRational> = omega_prime.iter().map(|w| w / &sc).collect();
    let theta = &theta_prime / &sc;
    let t_n = frac(ctx.required_rank(), scale);
    let weights = NochkaWeights {
        omega,
        theta,
        k_n,
        s_n: n0,
        t_n,
        n,
        scale,
        omega_prime,
        theta_prime,
        filtration,
        completion,
    };
    weights.check_invariants()?;
    Ok(weights)
}

impl NochkaWeights {
    pub fn q(&self) -> usize {
        self.omega.len()
    }

    /// Positivity, `ω(j) ≤ Θ`, `Θ ≥ t_N/k_N`, `Σω ≥ Θ(q - k_N) + t_N` and the scaling.
    pub fn check_invariants(&self) -> Result<()> {
        let fail = |msg: String| Err(Error::ConstructionFailure(msg));
        let sc = int(self.scale);
        for (j, (w, wp)) in self.omega.iter().zip(&self.omega_prime).enumerate() {
            if *w <= BigRational::zero() || *w > self.theta {
                return fail(format!(
                    "weight {} = {w} is outside (0, {}]",
                    j + 1,
                    self.theta
                ));
            }
            if w * &sc != *wp {
                return fail(format!(
                    "weight {} is not the scaled unscaled weight",
                    j + 1
                ));
            }
        }
        if &self.theta * &sc != self.theta_prime {
            return fail("theta is not the scaled unscaled theta".into());
        }
        if self.theta < &self.t_n / int(self.k_n) {
            return fail(format!("theta = {} is below t_N/k_N", self.theta));
        }
        let sum: BigRational = self.omega.iter().sum();
        let bound = &self.theta * int(self.q() as i64 - self.k_n) + &self.t_n;
        if sum < bound {
            return fail(format!("sum of weights {sum} is below {bound}"));
        }
        Ok(())
    }

    /// Exhaustively checks `Σ_{j∈R} ω'(j) ≤ (n - u + 2 + b) c(R)` over all `|R| ≤ N + 1`.
    /// Returns the first violating subset.
    pub fn subset_bound_violation(
        &self,
        family: &HyperplaneFamily,
        ctx: &GeometryContext,
    ) -> Option<Vec<usize>> {
        let q = family.q();
        let sc = int(self.scale);
        for k in 1..=(ctx.n as usize + 1).min(q) {
            for r in subsets_of_size(q, k) {
                let lhs: BigRational = indices_of(r)
                    .into_iter()
                    .map(|j| &self.omega_prime[j])
                    .sum();
                if lhs > &sc * int(family.c(r) as i64) {
                    return Some(indices_of(r));
                }
            }
        }
        None
    }

    /// `Θ(q - k_N) + t_N`.
    pub fn sum_lower_bound(&self) -> BigRational {
        &self.theta * int(self.q() as i64 - self.k_n) + &self.t_n
    }

    pub fn omega_sum(&self) -> BigRational {
        self.omega
            .iter()
            .fold(BigRational::zero(), |acc, w| acc + w)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn is_one(r: &BigRational) -> bool {
        r.is_one()
    }

    #[test]
    fn cartan_weights_are_one() {
        let f = HyperplaneFamily::from_ints(&[
            &[1, 0, 0],
            &[0, 1, 0],
            &[0, 0, 1],
            &[1, 1, 1],
            &[1, 2, 5],
        ])
        .unwrap();
        let w = build_weights(&f, &GeometryContext::cartan(2)).unwrap();
        assert!(w.omega.iter().all(is_one));
        assert!(is_one(&w.theta));
        assert_eq!((w.k_n, w.s_n, w.t_n.clone()), (3, 2, int(3)));
        assert_eq!(w.filtration.s(), 0);
    }

    #[test]
    fn concurrent_triple_weights() {
        let f = HyperplaneFamily::from_ints(&[
            &[1, 0, 0],
            &[0, 1, 0],
            &[1, 1, 0],
            &[0, 0, 1],
            &[1, 2, 3],
        ])
        .unwrap();
        let ctx = GeometryContext::new(2, -1, 3).unwrap();
        let w = build_weights(&f, &ctx).unwrap();
        assert!(w.omega.iter().all(|x| *x == frac(3, 5)));
        assert_eq!(w.theta, frac(3, 5));
        assert_eq!((w.k_n, w.s_n, w.t_n.clone()), (5, 2, int(3)));
        assert_eq!(w.subset_bound_violation(&f, &ctx), None);
    }

    #[test]
    fn degenerate_pool_weights() {
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
        let w = build_weights(&f, &ctx).unwrap();
        // R_1 = {0,1,2} at slope 1/3; completion is everything, (4 - 1)/(8 - 3)
        assert_eq!(
            &w.omega_prime[..4],
            &[frac(1, 3), frac(1, 3), frac(1, 3), frac(3, 5)]
        );
        assert_eq!(w.theta, frac(3, 5));
        assert_eq!(w.omega_sum(), w.sum_lower_bound());
        assert_eq!(w.subset_bound_violation(&f, &ctx), None);
    }

    #[test]
    fn not_subgeneral_is_rejected() {
        let f =
            HyperplaneFamily::from_ints(&[&[1, 0, 0], &[0, 1, 0], &[1, 1, 0], &[0, 0, 1]]).unwrap();
        assert!(matches!(
            build_weights(&f, &GeometryContext::cartan(2)),
            Err(Error::NotSubgeneral { .. })
        ));
    }
}
