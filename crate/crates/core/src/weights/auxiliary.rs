//! Random auxiliary hyperplanes completing the ranks of a family.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::NochkaWeights;
use crate::error::{Error, Result};
use crate::exact::{matrix::rank_int_rows, GaussianInt, GaussianRational};
use crate::position::{indices_of, subsets_of_size, GeometryContext, HyperplaneFamily, Subset};

pub const DEFAULT_RETRIES: usize = 64;
const BOX: i64 = 50;

/// The subsets the auxiliary rows must complete: all `R` with `|R| = s_N + 1`
/// and `c(R) ≥ u - b`.
#[derive(Clone, Debug)]
pub struct AuxiliaryRequirement {
    pub subsets: Vec<Subset>,
}

pub fn auxiliary_requirement(
    family: &HyperplaneFamily,
    ctx: &GeometryContext,
    weights: &NochkaWeights,
) -> Result<AuxiliaryRequirement> {
    family.ensure_enumerable()?;
    let k = (weights.s_n + 1).min(family.q());
    let subsets = subsets_of_size(family.q(), k)
        .filter(|&r| family.c(r) as i64 >= ctx.required_rank())
        .collect();
    Ok(AuxiliaryRequirement { subsets })
}

fn to_int(row: &[GaussianRational]) -> Vec<GaussianInt> {
    // sampled rows are integral
    row.iter()
        .map(|x| GaussianInt {
            re: x.re.to_integer(),
            im: x.im.to_integer(),
        })
        .collect()
}

/// Draws `count` rows with integer entries in `[-50, 50]` from a seeded
/// ChaCha stream until, for every `R` in the requirement, the rows of `R`
/// together with the new rows reach rank `min(m + 1, c(R) + count)`. With an
/// empty requirement the new rows only need to be independent.
pub fn generic_auxiliary_hyperplanes(
    family: &HyperplaneFamily,
    requirement: &AuxiliaryRequirement,
    count: usize,
    seed: u64,
    retries: usize,
) -> Result<Vec<Vec<GaussianRational>>> {
    if count == 0 {
        return Ok(Vec::new());
    }
    let width = family.m() + 1;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let base = crate::exact::matrix::integer_rows_owned(family.rows());
    let mut last_detail = String::new();
    for _ in 0..retries {
        let rows: Vec<Vec<GaussianRational>> = (0..count)
            .map(|_| {
                (0..width)
                    .map(|_| GaussianRational::from(rng.gen_range(-BOX..=BOX)))
                    .collect()
            })
            .collect();
        let ints: Vec<Vec<GaussianInt>> = rows.iter().map(|r| to_int(r)).collect();
        let ok_alone = rank_int_rows(ints.clone()) == count.min(width);
        let failing = if !ok_alone {
            Some("sampled rows are dependent".to_string())
        } else {
            requirement.subsets.iter().find_map(|&r| {
                let mut m: Vec<Vec<GaussianInt>> =
                    indices_of(r).into_iter().map(|j| base[j].clone()).collect();
                let want = width.min(family.c(r) + count);
                m.extend(ints.iter().cloned());
                (rank_int_rows(m) != want)
                    .then(|| format!("subset {:?} not completed", indices_of(r)))
            })
        };
        match failing {
            None => return Ok(rows),
            Some(d) => last_detail = d,
        }
    }
    Err(Error::GenericitySamplingFailed {
        attempts: retries,
        detail: last_detail,
    })
}
