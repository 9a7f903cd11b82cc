//! Test-side oracles written independently of the library's algorithms:
//! Gauss-Jordan rank over `Q(i)`, Laplace determinants, brute-force subset
//! searches and derivative-gcd multiplicity counts.
#![allow(dead_code)]

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use nochka::exact::{poly_gcd, AffinePoly, GaussianRational};
use nochka::position::GeometryContext;

pub type Row = Vec<GaussianRational>;

pub fn int(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

pub fn frac(p: i64, q: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

pub fn g(v: i64) -> GaussianRational {
    GaussianRational::from(v)
}

/// Rank by Gauss-Jordan elimination with field division.
pub fn rank_oracle(rows: &[Row]) -> usize {
    let mut m: Vec<Row> = rows.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let pivot = m[rank][col].clone();
        let pivot_row: Row = m[rank].iter().map(|x| x / &pivot).collect();
        for (r, row) in m.iter_mut().enumerate() {
            if r != rank && !row[col].is_zero() {
                let f = row[col].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x -= &(&f * y);
                }
            }
        }
        m[rank] = pivot_row;
        rank += 1;
    }
    rank
}

/// Determinant by cofactor expansion along the first row.
pub fn det_laplace(m: &[Row]) -> GaussianRational {
    let n = m.len();
    if n == 0 {
        return GaussianRational::one();
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = GaussianRational::zero();
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Row> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(k, _)| k != j)
                    .map(|(_, x)| x.clone())
                    .collect()
            })
            .collect();
        let term = &m[0][j] * &det_laplace(&minor);
        if j % 2 == 0 {
            acc += &term;
        } else {
            acc -= &term;
        }
    }
    acc
}

/// Largest `k` with a nonzero `k × k` minor.
pub fn rank_by_minors(rows: &[Row]) -> usize {
    let r = rows.len();
    let c = rows.first().map_or(0, Vec::len);
    for k in (1..=r.min(c)).rev() {
        for rs in combinations(r, k) {
            for cs in combinations(c, k) {
                let minor: Vec<Row> = rs
                    .iter()
                    .map(|&i| cs.iter().map(|&j| rows[i][j].clone()).collect())
                    .collect();
                if !det_laplace(&minor).is_zero() {
                    return k;
                }
            }
        }
    }
    0
}

pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

pub fn all_subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0u64..(1 << n)).map(move |mask| (0..n).filter(|&i| mask >> i & 1 == 1).collect())
}

pub fn c_oracle(rows: &[Row], idx: &[usize]) -> usize {
    let sub: Vec<Row> = idx.iter().map(|&i| rows[i].clone()).collect();
    rank_oracle(&sub)
}

pub fn random_row(rng: &mut ChaCha8Rng, width: usize, bound: i64) -> Row {
    loop {
        let r: Row = (0..width)
            .map(|_| g(rng.gen_range(-bound..=bound)))
            .collect();
        if r.iter().any(|x| !x.is_zero()) {
            return r;
        }
    }
}

const PRIME: i64 = 2_147_483_647;

/// Rank of an integer matrix modulo `PRIME`. Never exceeds the rank over `Q`.
pub fn rank_mod_p(rows: &[Vec<i64>]) -> usize {
    fn inv(a: i64) -> i64 {
        let (mut r, mut b, mut e) = (1i64, a, PRIME - 2);
        while e > 0 {
            if e & 1 == 1 {
                r = r * b % PRIME;
            }
            b = b * b % PRIME;
            e >>= 1;
        }
        r
    }
    let mut m: Vec<Vec<i64>> = rows
        .iter()
        .map(|r| r.iter().map(|x| x.rem_euclid(PRIME)).collect())
        .collect();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(rank, p);
        let iv = inv(m[rank][col]);
        let pivot = m[rank].clone();
        for row in &mut m[rank + 1..] {
            let f = row[col] * iv % PRIME;
            for (x, p) in row.iter_mut().zip(&pivot).skip(col) {
                *x = (*x - f * p).rem_euclid(PRIME);
            }
        }
        rank += 1;
    }
    rank
}

/// Integer rows in `P^m` with every `(m+1)`-subset independent. Independence
/// modulo a prime implies independence over `Q`.
pub fn random_general_position(rng: &mut ChaCha8Rng, m: usize, q: usize) -> Vec<Row> {
    let mut rows: Vec<Vec<i64>> = Vec::new();
    while rows.len() < q {
        let cand: Vec<i64> = (0..=m).map(|_| rng.gen_range(-9..=9)).collect();
        let k = m.min(rows.len());
        let ok = combinations(rows.len(), k).into_iter().all(|s| {
            let mut sub: Vec<Vec<i64>> = s.iter().map(|&i| rows[i].clone()).collect();
            sub.push(cand.clone());
            rank_mod_p(&sub) == k + 1
        });
        if ok {
            rows.push(cand);
        }
    }
    rows.into_iter()
        .map(|r| r.into_iter().map(g).collect())
        .collect()
}

/// A family drawn from a small pool of rows, so that repeats and dependencies
/// are common, together with the smallest `N` for which it is certified for
/// randomly chosen `u` and `b`. `None` when the draw cannot be certified with
/// enough divisors.
pub fn random_degenerate_family(
    rng: &mut ChaCha8Rng,
    max_m: usize,
    max_q: usize,
) -> Option<(Vec<Row>, GeometryContext)> {
    let m = rng.gen_range(1..=max_m);
    let pool_size = rng.gen_range(2..=m + 3);
    let pool: Vec<Row> = (0..pool_size).map(|_| random_row(rng, m + 1, 2)).collect();
    let q = rng.gen_range(2..=max_q);
    let rows: Vec<Row> = (0..q)
        .map(|_| {
            // small combinations of pool rows
            let a = &pool[rng.gen_range(0..pool_size)];
            let b = &pool[rng.gen_range(0..pool_size)];
            let s = g(rng.gen_range(-1..=1));
            a.iter().zip(b).map(|(x, y)| x + &(&s * y)).collect::<Row>()
        })
        .filter(|r: &Row| r.iter().any(|x| !x.is_zero()))
        .collect();
    let q = rows.len();
    let total = rank_oracle(&rows);
    if total < 2 {
        return None;
    }
    let b = if rng.gen_bool(0.5) { -1 } else { 1 };
    let required = rng.gen_range(1..=total) as i64;
    let u = required + b;
    if u < 1 || u as usize > m {
        return None;
    }
    // smallest N with every (N+1)-subset of rank >= u - b
    let mut largest_deficient = 0;
    for s in all_subsets(q) {
        if (c_oracle(&rows, &s) as i64) < required {
            largest_deficient = largest_deficient.max(s.len());
        }
    }
    let n = (largest_deficient as i64).max(u);
    let ctx = GeometryContext::new(u, b, n).ok()?;
    if (q as i64) < ctx.k_n() {
        return None;
    }
    // u must stay within n_0 to be the rank of a linear system
    let k = (n as usize + 1).min(q);
    let n0 = combinations(q, k)
        .iter()
        .map(|s| c_oracle(&rows, s))
        .max()? as i64
        - 1;
    if n0 < u {
        return None;
    }
    Some((rows, ctx))
}

/// Brute-force filtration: at each step scan every subset of the family.
pub fn filtration_oracle(rows: &[Row], ctx: &GeometryContext) -> Vec<(Vec<usize>, BigRational)> {
    let q = rows.len();
    let k_n = ctx.k_n();
    let ub = ctx.u - ctx.b;
    let all: Vec<(Vec<usize>, usize)> = all_subsets(q)
        .map(|s| {
            let c = c_oracle(rows, &s);
            (s, c)
        })
        .collect();
    let mut chain: Vec<(Vec<usize>, BigRational)> = Vec::new();
    let mut base: Vec<usize> = Vec::new();
    let mut base_c = 0usize;
    loop {
        let mut best: Option<(Vec<usize>, BigRational)> = None;
        for (s, c) in &all {
            let superset = s.len() > base.len() && base.iter().all(|i| s.contains(i));
            if !superset || *c <= base_c || *c as i64 >= ub {
                continue;
            }
            let rho = frac((*c - base_c) as i64, (s.len() - base.len()) as i64);
            let better = match &best {
                None => true,
                Some((bs, br)) => match rho.cmp(br) {
                    Ordering::Less => true,
                    Ordering::Greater => false,
                    Ordering::Equal => s.len() > bs.len() || (s.len() == bs.len() && s < bs),
                },
            };
            if better {
                best = Some((s.clone(), rho));
            }
        }
        let Some((s, rho)) = best else { break };
        let c = all.iter().find(|(t, _)| *t == s).unwrap().1;
        // the step must stay strictly below (u - b - c(R)) / (k_N - |R|)
        if s.len() as i64 >= k_n || rho >= frac(ub - c as i64, k_n - s.len() as i64) {
            break;
        }
        base_c = c;
        base = s.clone();
        chain.push((s, rho));
    }
    chain
}

/// `ord_a p`: the first derivative not vanishing at `a`.
pub fn order_at(p: &AffinePoly, a: &GaussianRational) -> u32 {
    if p.is_zero() {
        return u32::MAX;
    }
    let mut d = p.clone();
    let mut k = 0;
    while d.eval(a).is_zero() {
        d = d.derivative();
        k += 1;
    }
    k
}

/// `Σ_a max(ord_a p - k, 0)` over finite points, as `deg gcd(p, p', …, p^{(k)})`.
pub fn excess_beyond(p: &AffinePoly, k: u32) -> usize {
    let mut g = p.clone();
    let mut d = p.clone();
    for _ in 0..k {
        d = d.derivative();
        g = poly_gcd(&g, &d);
    }
    g.deg()
}

/// `N^{[k]}` of `(1/e)·div(P)` for a homogeneous form of degree `delta` with
/// affine part `p`, where every multiplicity is divisible by `e`.
pub fn truncated_count(p: &AffinePoly, delta: usize, k: u32, e: u32) -> u64 {
    let finite_total = p.deg();
    let finite = finite_total - excess_beyond(p, k * e);
    let at_inf = (delta - finite_total) as u32;
    ((finite as u64) + at_inf.min(k * e) as u64) / e as u64
}

/// `Σ h_k p_k` for affine coordinates.
pub fn pullback_affine(coords: &[AffinePoly], row: &[GaussianRational]) -> AffinePoly {
    coords
        .iter()
        .zip(row)
        .fold(AffinePoly::zero(), |acc, (p, h)| &acc + &p.scale(h))
}

/// `Σ_k h_k z^k` style Wronskian by cofactor expansion over polynomials.
pub fn wronskian_laplace(fs: &[AffinePoly]) -> AffinePoly {
    fn det(m: &[Vec<AffinePoly>]) -> AffinePoly {
        let n = m.len();
        if n == 1 {
            return m[0][0].clone();
        }
        let mut acc = AffinePoly::zero();
        for j in 0..n {
            let minor: Vec<Vec<AffinePoly>> = m[1..]
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .filter(|&(k, _)| k != j)
                        .map(|(_, x)| x.clone())
                        .collect()
                })
                .collect();
            let term = &m[0][j] * &det(&minor);
            acc = if j % 2 == 0 {
                &acc + &term
            } else {
                &acc - &term
            };
        }
        acc
    }
    let n = fs.len();
    let m: Vec<Vec<AffinePoly>> = (0..n)
        .map(|r| fs.iter().map(|f| f.nth_derivative(r)).collect())
        .collect();
    det(&m)
}

/// `w^δ p(1/w)`: the chart at infinity.
pub fn reverse(p: &AffinePoly, delta: usize) -> AffinePoly {
    let mut c = vec![GaussianRational::zero(); delta + 1];
    for (k, a) in p.coeffs().iter().enumerate() {
        c[delta - k] = a.clone();
    }
    AffinePoly::new(c)
}

pub fn low_order(p: &AffinePoly) -> usize {
    p.coeffs()
        .iter()
        .position(|c| !c.is_zero())
        .unwrap_or(usize::MAX)
}
