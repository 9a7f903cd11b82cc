//! Rank calculus on hyperplane families and certification of subgeneral position.

use std::collections::HashMap;
use std::fmt;
use std::sync::atomic::{AtomicU8, Ordering};
use std::sync::RwLock;

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{matrix::rank_int_rows, GaussianInt, GaussianRational};

/// Index subsets of a family are bitmasks over `0..q`.
pub type Subset = u64;

/// Default cap on `q` for operations that enumerate all subsets.
pub const DEFAULT_MAX_Q: usize = 24;
/// Families beyond this size cannot be represented by [`Subset`] enumeration at all.
pub const HARD_MAX_Q: usize = 30;
const DENSE_CACHE_MAX_Q: usize = 22;
const UNSET: u8 = u8::MAX;

/// Enumeration cap, from `NOCHKA_MAX_Q` when set.
pub fn max_q() -> usize {
    std::env::var("NOCHKA_MAX_Q")
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .map_or(DEFAULT_MAX_Q, |v| v.min(HARD_MAX_Q))
}

pub fn subset_of(indices: &[usize]) -> Subset {
    indices.iter().fold(0, |acc, &i| acc | (1 << i))
}

pub fn indices_of(mut s: Subset) -> Vec<usize> {
    let mut out = Vec::with_capacity(s.count_ones() as usize);
    while s != 0 {
        let i = s.trailing_zeros() as usize;
        out.push(i);
        s &= s - 1;
    }
    out
}

pub fn size(s: Subset) -> usize {
    s.count_ones() as usize
}

/// All subsets of `0..q` with exactly `k` elements, in increasing bitmask order.
pub fn subsets_of_size(q: usize, k: usize) -> impl Iterator<Item = Subset> {
    // Gosper's hack
    let limit: u64 = 1u64 << q;
    let first: Option<u64> = if k > q {
        None
    } else if k == 0 {
        Some(0)
    } else {
        Some((1u64 << k) - 1)
    };
    std::iter::successors(first, move |&x| {
        if x == 0 {
            return None;
        }
        let c = x & x.wrapping_neg();
        let r = x + c;
        let next = (((r ^ x) >> 2) / c) | r;
        (next < limit).then_some(next)
    })
}

enum RankCache {
    Dense(Vec<AtomicU8>),
    Sparse(RwLock<HashMap<Subset, u8>>),
}

/// `q` hyperplanes of `P^m`, one coefficient row each, with a memoized rank oracle.
pub struct HyperplaneFamily {
    m: usize,
    rows: Vec<Vec<GaussianRational>>,
    int_rows: Vec<Vec<GaussianInt>>,
    cache: RankCache,
}

impl HyperplaneFamily {
    pub fn new(rows: Vec<Vec<GaussianRational>>) -> Result<Self> {
        let Some(first) = rows.first() else {
            return Err(Error::InvalidInput(
                "a family needs at least one hyperplane".into(),
            ));
        };
        let width = first.len();
        if width < 2 {
            return Err(Error::InvalidInput(
                "hyperplane rows need at least 2 coefficients".into(),
            ));
        }
        for (j, row) in rows.iter().enumerate() {
            if row.len() != width {
                return Err(Error::InvalidInput(format!(
                    "hyperplane {} has {} coefficients, expected {width}",
                    j + 1,
                    row.len()
                )));
            }
            if row.iter().all(Zero::is_zero) {
                return Err(Error::InvalidInput(format!(
                    "hyperplane {} is the zero row",
                    j + 1
                )));
            }
        }
        let q = rows.len();
        if q > HARD_MAX_Q {
            return Err(Error::TooManyDivisors { q, cap: HARD_MAX_Q });
        }
        let int_rows = crate::exact::matrix::integer_rows_owned(&rows);
        let cache = if q <= DENSE_CACHE_MAX_Q {
            RankCache::Dense((0..1usize << q).map(|_| AtomicU8::new(UNSET)).collect())
        } else {
            RankCache::Sparse(RwLock::new(HashMap::new()))
        };
        Ok(Self {
            m: width - 1,
            rows,
            int_rows,
            cache,
        })
    }

    pub fn from_ints(rows: &[&[i64]]) -> Result<Self> {
        Self::new(
            rows.iter()
                .map(|r| r.iter().map(|&x| GaussianRational::from(x)).collect())
                .collect(),
        )
    }

    pub fn q(&self) -> usize {
        self.rows.len()
    }

    /// Dimension of the ambient projective space.
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn rows(&self) -> &[Vec<GaussianRational>] {
        &self.rows
    }

    pub fn row(&self, j: usize) -> &[GaussianRational] {
        &self.rows[j]
    }

    pub fn full(&self) -> Subset {
        if self.q() == 64 {
            u64::MAX
        } else {
            (1u64 << self.q()) - 1
        }
    }

    /// Fails when exhaustive subset enumeration is over the configured cap.
    pub fn ensure_enumerable(&self) -> Result<()> {
        let cap = max_q();
        if self.q() > cap {
            return Err(Error::TooManyDivisors { q: self.q(), cap });
        }
        Ok(())
    }

    /// `c(K)`: rank of the rows indexed by `K`.
    pub fn c(&self, k: Subset) -> usize {
        debug_assert!(k & !self.full() == 0);
        if k == 0 {
            return 0;
        }
        match &self.cache {
            RankCache::Dense(v) => {
                let slot = &v[k as usize];
                let cached = slot.load(Ordering::Relaxed);
                if cached != UNSET {
                    return cached as usize;
                }
                let r = self.compute_rank(k);
                slot.store(r as u8, Ordering::Relaxed);
                r
            }
            RankCache::Sparse(map) => {
                if let Some(&r) = map.read().expect("rank cache poisoned").get(&k) {
                    return r as usize;
                }
                let r = self.compute_rank(k);
                map.write().expect("rank cache poisoned").insert(k, r as u8);
                r
            }
        }
    }

    /// `c(K)` for an explicit index list, with range checking.
    pub fn c_of(&self, indices: &[usize]) -> Result<usize> {
        for &i in indices {
            if i >= self.q() {
                return Err(Error::IndexOutOfRange {
                    index: i,
                    q: self.q(),
                });
            }
        }
        Ok(self.c(subset_of(indices)))
    }

    fn compute_rank(&self, k: Subset) -> usize {
        let rows: Vec<Vec<GaussianInt>> = indices_of(k)
            .into_iter()
            .map(|i| self.int_rows[i].clone())
            .collect();
        rank_int_rows(rows)
    }

    /// `(n_0, n)`: the largest rank among subsets of size `min(N+1, q)`, and the
    /// rank of the whole family, each minus one.
    pub fn n0_and_n(&self, n_sub: usize) -> Result<(usize, usize)> {
        self.ensure_enumerable()?;
        let n = self.c(self.full()) - 1;
        let k = (n_sub + 1).min(self.q());
        let mut best = 0;
        for s in subsets_of_size(self.q(), k) {
            best = best.max(self.c(s));
            if best == n + 1 {
                break;
            }
        }
        Ok((best - 1, n))
    }
}

impl Clone for HyperplaneFamily {
    fn clone(&self) -> Self {
        Self::new(self.rows.clone()).expect("family was valid")
    }
}

impl fmt::Debug for HyperplaneFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("HyperplaneFamily")
            .field("m", &self.m)
            .field("rows", &self.rows)
            .finish()
    }
}

/// How the base-locus parameter `b` was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BaseLocusProvenance {
    UserSupplied,
    /// `b = -1` and every `(N+1)`-subset spans all of `P^m`.
    CertifiedEmpty,
}

/// `u = rank E`, `b = dim B(E) + 1` and the subgeneral index `N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeometryContext {
    pub u: i64,
    pub b: i64,
    pub n: i64,
    pub provenance: BaseLocusProvenance,
}

impl GeometryContext {
    pub fn new(u: i64, b: i64, n: i64) -> Result<Self> {
        if u < 1 {
            return Err(Error::InvalidInput(format!("u = {u} must be at least 1")));
        }
        if b < -1 || b == 0 {
            return Err(Error::InvalidInput(format!(
                "b = {b} must be -1 or at least 1"
            )));
        }
        if u <= b {
            return Err(Error::InvalidInput(format!("u = {u} must exceed b = {b}")));
        }
        if n < u {
            return Err(Error::InvalidInput(format!(
                "N = {n} must be at least u = {u}"
            )));
        }
        Ok(Self {
            u,
            b,
            n,
            provenance: BaseLocusProvenance::UserSupplied,
        })
    }

    /// Projective space itself, empty base locus, general position (`N = m`).
    pub fn cartan(m: i64) -> Self {
        Self::new(m, -1, m).expect("valid Cartan context")
    }

    /// `u - b`.
    pub fn required_rank(&self) -> i64 {
        self.u - self.b
    }

    /// `k_N = 2N - u + 2 + b`.
    pub fn k_n(&self) -> i64 {
        2 * self.n - self.u + 2 + self.b
    }
}

/// Outcome of [`check_subgeneral`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PositionReport {
    Certified {
        subsets_checked: usize,
        provenance: BaseLocusProvenance,
    },
    Violation {
        subset: Vec<usize>,
        rank: usize,
        required: i64,
    },
}

impl PositionReport {
    pub fn is_certified(&self) -> bool {
        matches!(self, Self::Certified { .. })
    }

    pub fn into_result(self) -> Result<BaseLocusProvenance> {
        match self {
            Self::Certified { provenance, .. } => Ok(provenance),
            Self::Violation {
                subset,
                rank,
                required,
            } => Err(Error::NotSubgeneral {
                subset,
                rank,
                required,
            }),
        }
    }
}

/// Checks `c(R) >= u - b` for every subset of size `min(N+1, q)`, and that
/// the claimed `u` does not exceed `n_0`.
///
/// With `b = -1` and `u = m` this is exactly `c(R) = m + 1`, i.e. the chosen
/// hyperplanes have no common point in `P^m`, and the empty base locus is
/// reported as certified.
pub fn check_subgeneral(
    family: &HyperplaneFamily,
    ctx: &GeometryContext,
) -> Result<PositionReport> {
    family.ensure_enumerable()?;
    let m = family.m() as i64;
    if ctx.u > m {
        return Err(Error::InvalidInput(format!(
            "u = {} exceeds m = {m}",
            ctx.u
        )));
    }
    let required = ctx.required_rank();
    let k = (ctx.n as usize + 1).min(family.q());
    let mut checked = 0;
    let mut widest = 0;
    for s in subsets_of_size(family.q(), k) {
        checked += 1;
        let r = family.c(s);
        if (r as i64) < required {
            return Ok(PositionReport::Violation {
                subset: indices_of(s),
                rank: r,
                required,
            });
        }
        widest = widest.max(r);
    }
    if (widest as i64) - 1 < ctx.u {
        return Err(Error::InvalidInput(format!(
            "u = {} exceeds n_0 = {}, so it cannot be the rank of the system",
            ctx.u,
            widest as i64 - 1
        )));
    }
    let provenance = if ctx.b == -1 && ctx.u == m {
        BaseLocusProvenance::CertifiedEmpty
    } else {
        ctx.provenance
    };
    Ok(PositionReport::Certified {
        subsets_checked: checked,
        provenance,
    })
}
