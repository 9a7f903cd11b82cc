mod common;

use num_rational::BigRational;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::*;
use nochka::curves::{shared_zero, RationalCurve};
use nochka::exact::{poly_gcd_all, AffinePoly};
use nochka::fixtures::{of_kind, FixtureKind};
use nochka::position::HyperplaneFamily;
use nochka::smt::verify_genus0;
use nochka::weights::build_weights;

#[test]
fn right_side_is_the_sum_of_truncated_counts() {
    for f in of_kind(&[
        FixtureKind::Exact,
        FixtureKind::Split,
        FixtureKind::Degenerate,
    ]) {
        let s = &f.scene;
        let family = s.family().unwrap();
        let ctx = s.context().unwrap();
        let w = build_weights(&family, &ctx).unwrap();
        let curve = s.rational_curve().unwrap().unwrap();
        let rep = verify_genus0(&curve, &family, &ctx, &w, s.d, &s.d_i()).unwrap();
        let mut sum = BigRational::from_integer(0.into());
        for row in &rep.divisors {
            let t = row.divisor.truncated(s.m as u32);
            assert_eq!(row.truncated, t, "{}", f.name());
            assert_eq!(
                row.divisor.degree() * s.d as u64,
                curve.degree() as u64 * row.d_j as u64
            );
            assert_eq!(row.contribution, frac(t as i64, row.d_j as i64));
            sum += &row.contribution;
        }
        assert_eq!(rep.rhs, Some(sum), "{}", f.name());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// `N + 1` hyperplanes in subgeneral position meet only in the base
    /// locus, which a curve outside every hyperplane of the family avoids when
    /// the base locus is empty.
    #[test]
    fn no_point_on_n_plus_one_pullbacks(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let Some((rows, ctx)) = random_degenerate_family(&mut rng, 3, 8) else { return Ok(()) };
        prop_assume!(ctx.b == -1);
        let m = rows[0].len() - 1;
        let delta = rng.gen_range(1..=4usize);
        let coords: Vec<AffinePoly> =
            (0..=m).map(|_| AffinePoly::new((0..=delta).map(|_| g(rng.gen_range(-3..=3))).collect())).collect();
        let Ok(curve) = RationalCurve::from_affine(delta, &coords) else { return Ok(()) };
        let family = HyperplaneFamily::new(rows.clone()).unwrap();
        let forms: Vec<_> = family.rows().iter().map(|r| curve.pullback(r).unwrap()).collect();
        prop_assume!(forms.iter().all(|f| !f.is_zero()));

        let found = shared_zero(&forms, ctx.n as usize);
        // independent check: a common finite zero shows up as a nonconstant gcd
        let pbs: Vec<AffinePoly> = rows.iter().map(|r| pullback_affine(&coords, r)).collect();
        let oracle = combinations(rows.len(), ctx.n as usize + 1).into_iter().find(|s| {
            let at_inf = s.iter().all(|&j| pbs[j].deg() < delta);
            at_inf || !poly_gcd_all(s.iter().map(|&j| &pbs[j])).is_constant()
        });
        prop_assert_eq!(found.is_some(), oracle.is_some());
        prop_assert!(found.is_none());
    }
}
