mod common;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::*;
use nochka::position::{check_subgeneral, subset_of, HyperplaneFamily};

fn family_rows() -> impl Strategy<Value = Vec<Row>> {
    (1usize..=3, 2usize..=8).prop_flat_map(|(m, q)| {
        prop::collection::vec(prop::collection::vec(-2i64..=2, m + 1), q)
            .prop_filter("nonzero rows", |rows| {
                rows.iter().all(|r| r.iter().any(|&x| x != 0))
            })
            .prop_map(|rows| {
                rows.into_iter()
                    .map(|r| r.into_iter().map(g).collect())
                    .collect()
            })
    })
}

fn certified_family() -> impl Strategy<Value = u64> {
    any::<u64>()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn rank_function_shape(rows in family_rows(), a in any::<u64>(), b in any::<u64>()) {
        let q = rows.len();
        let family = HyperplaneFamily::new(rows.clone()).unwrap();
        let full = (1u64 << q) - 1;
        let (s1, s2) = (a & full, b & full);
        let c = |s: u64| family.c(s);
        prop_assert!(c(s1 | s2) + c(s1 & s2) <= c(s1) + c(s2));
        let idx: Vec<usize> = (0..q).filter(|&i| s1 >> i & 1 == 1).collect();
        prop_assert_eq!(c(s1), c_oracle(&rows, &idx));
        prop_assert!(c(s1) <= idx.len().min(family.m() + 1));
        // monotone under inclusion, and the deficiency |S| - c(S) grows with S
        let sup = s1 | s2;
        prop_assert!(c(s1) <= c(sup));
        prop_assert!(s1.count_ones() as usize - c(s1) <= sup.count_ones() as usize - c(sup));
    }

    #[test]
    fn certified_families_respect_the_bounds(seed in certified_family()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let Some((rows, ctx)) = random_degenerate_family(&mut rng, 4, 9) else { return Ok(()) };
        let family = HyperplaneFamily::new(rows.clone()).unwrap();
        prop_assert!(check_subgeneral(&family, &ctx).unwrap().is_certified());
        let slack = ctx.n - ctx.u + ctx.b + 1;
        for s in all_subsets(rows.len()).filter(|s| s.len() as i64 <= ctx.n + 1) {
            let deficiency = s.len() as i64 - family.c(subset_of(&s)) as i64;
            prop_assert!(deficiency <= slack, "{:?} has deficiency {}", s, deficiency);
        }
        let (n0, n) = family.n0_and_n(ctx.n as usize).unwrap();
        prop_assert!(ctx.u <= n0 as i64 && n0 <= n && n <= family.m());
    }
}
