//! Constants of the second main theorems and the unicity threshold.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use crate::exact::rational_str;
use crate::position::GeometryContext;
use crate::weights::NochkaWeights;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SmtConstants {
    pub q: usize,
    pub m: usize,
    #[serde(rename = "N")]
    pub n_sub: i64,
    pub u: i64,
    pub b: i64,
    pub genus: u32,
    #[serde(rename = "kN")]
    pub k_n: i64,
    #[serde(rename = "sN")]
    pub s_n: usize,
    #[serde(rename = "tN", with = "rational_str")]
    pub t_n: BigRational,
    /// `k_N (s_N - u + 2 + b) / t_N`.
    #[serde(rename = "K", with = "rational_str")]
    pub k: BigRational,
    /// `q - (m + 1) K`.
    #[serde(with = "rational_str")]
    pub coefficient: BigRational,
    /// `m (m + 1) k_N (g - 1) / t_N` for `g ≥ 1`, else 0.
    #[serde(rename = "A", with = "rational_str")]
    pub a: BigRational,
    /// `k_N (m + 1) / t_N`.
    #[serde(rename = "B", with = "rational_str")]
    pub b_const: BigRational,
}

fn int(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

impl SmtConstants {
    pub fn new(m: usize, ctx: &GeometryContext, weights: &NochkaWeights, genus: u32) -> Self {
        let q = weights.q();
        let mm = m as i64;
        let k = int(weights.k_n) * int(weights.s_n as i64 - ctx.u + 2 + ctx.b) / &weights.t_n;
        let coefficient = int(q as i64) - int(mm + 1) * &k;
        let a = if genus >= 1 {
            int(mm * (mm + 1) * weights.k_n * (genus as i64 - 1)) / &weights.t_n
        } else {
            BigRational::zero()
        };
        let b_const = int(weights.k_n * (mm + 1)) / &weights.t_n;
        Self {
            q,
            m,
            n_sub: ctx.n,
            u: ctx.u,
            b: ctx.b,
            genus,
            k_n: weights.k_n,
            s_n: weights.s_n,
            t_n: weights.t_n.clone(),
            k,
            coefficient,
            a,
            b_const,
        }
    }

    /// Whether `q - (m + 1) K ≤ 0`, which makes the inequality empty.
    pub fn is_vacuous(&self) -> bool {
        self.coefficient <= BigRational::zero()
    }

    /// `s_N - u + 2 + b`.
    pub fn wronskian_factor(&self) -> i64 {
        self.s_n as i64 - self.u + 2 + self.b
    }

    /// Number of auxiliary hyperplanes, `m - u + b + 1`.
    pub fn auxiliary_count(&self) -> usize {
        (self.m as i64 - self.u + self.b + 1).max(0) as usize
    }

    /// `(m + 1) K`, the bound in the ramification inequality.
    pub fn ramification_bound(&self) -> BigRational {
        int(self.m as i64 + 1) * &self.k
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UnicityThreshold {
    #[serde(with = "rational_str")]
    pub threshold: BigRational,
    pub q: usize,
    pub exceeded: bool,
}

/// `B + 2m(N + 1) + 2A`, and whether `q` exceeds it.
pub fn unicity_threshold(c: &SmtConstants) -> UnicityThreshold {
    let threshold = &c.b_const + int(2 * c.m as i64 * (c.n_sub + 1)) + int(2) * &c.a;
    UnicityThreshold {
        exceeded: int(c.q as i64) > threshold,
        threshold,
        q: c.q,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::position::HyperplaneFamily;
    use crate::weights::build_weights;

    fn frac(p: i64, q: i64) -> BigRational {
        BigRational::new(p.into(), q.into())
    }

    #[test]
    fn concurrent_triple_constants() {
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
        let c = SmtConstants::new(2, &ctx, &w, 0);
        assert_eq!(c.k, frac(5, 3));
        assert_eq!(c.coefficient, int(0));
        assert!(c.is_vacuous());
        assert_eq!(c.a, int(0));
    }

    #[test]
    fn cartan_constants_and_threshold() {
        let f = HyperplaneFamily::from_ints(&[&[1, 0], &[0, 1], &[1, 1], &[1, 2]]).unwrap();
        let ctx = GeometryContext::cartan(1);
        let w = build_weights(&f, &ctx).unwrap();
        for g in 0..4u32 {
            let c = SmtConstants::new(1, &ctx, &w, g);
            // q - 2N + u - 1 = 4 - 2 + 1 - 1
            assert_eq!(c.coefficient, int(2));
            let a = if g == 0 {
                int(0)
            } else {
                frac(2 * 2 * (g as i64 - 1), 2)
            };
            assert_eq!(c.a, a);
            assert_eq!(c.b_const, int(2));
            let t = unicity_threshold(&c);
            assert_eq!(t.threshold, int(2) + int(4) + int(2) * a);
        }
    }
}
