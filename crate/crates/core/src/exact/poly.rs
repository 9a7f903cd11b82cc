//! Univariate polynomials over `Q(i)`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::GaussianRational;
use crate::error::{Error, Result};

/// Degree of a polynomial. The zero polynomial has degree `NegInfinity`,
/// which sorts below every finite degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInfinity,
    Finite(usize),
}

impl Degree {
    pub fn finite(self) -> Option<usize> {
        match self {
            Degree::NegInfinity => None,
            Degree::Finite(d) => Some(d),
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInfinity => write!(f, "-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

/// A polynomial in one variable, coefficients in ascending degree.
///
/// Trailing zero coefficients are always stripped, so the leading coefficient
/// is nonzero unless the polynomial is zero (empty coefficient list).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct AffinePoly {
    coeffs: Vec<GaussianRational>,
}

impl AffinePoly {
    pub fn new(mut coeffs: Vec<GaussianRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| c.into()).collect())
    }

    pub fn constant(c: GaussianRational) -> Self {
        Self::new(vec![c])
    }

    /// The monomial `z`.
    pub fn z() -> Self {
        Self::from_ints(&[0, 1])
    }

    /// `z - a`.
    pub fn linear_root(a: &GaussianRational) -> Self {
        Self::new(vec![-a, GaussianRational::one()])
    }

    /// `∏ (z - a)^k` over the given roots.
    pub fn from_roots(roots: &[(GaussianRational, u32)]) -> Self {
        roots.iter().fold(Self::one(), |acc, (a, k)| {
            &acc * &Self::linear_root(a).pow(*k)
        })
    }

    pub fn coeffs(&self) -> &[GaussianRational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> GaussianRational {
        self.coeffs
            .get(k)
            .cloned()
            .unwrap_or_else(GaussianRational::zero)
    }

    pub fn degree(&self) -> Degree {
        match self.coeffs.len() {
            0 => Degree::NegInfinity,
            n => Degree::Finite(n - 1),
        }
    }

    /// Degree as an integer, for callers that have already excluded zero.
    pub fn deg(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> Option<&GaussianRational> {
        self.coeffs.last()
    }

    pub fn eval(&self, z: &GaussianRational) -> GaussianRational {
        self.coeffs
            .iter()
            .rev()
            .fold(GaussianRational::zero(), |acc, c| &(&acc * z) + c)
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * &GaussianRational::from_integer(k as i64))
                .collect(),
        )
    }

    pub fn nth_derivative(&self, n: usize) -> Self {
        (0..n).fold(self.clone(), |p, _| p.derivative())
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Divides by the leading coefficient. Zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(lc) => {
                let inv = lc.inv().expect("leading coefficient is nonzero");
                self.scale(&inv)
            }
        }
    }

    /// Euclidean division `self = q·divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let Degree::Finite(dd) = divisor.degree() else {
            return Err(Error::InvalidInput("polynomial division by zero".into()));
        };
        let lc_inv = divisor.coeffs[dd]
            .inv()
            .expect("nonzero leading coefficient");
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![GaussianRational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] * &lc_inv;
            if !c.is_zero() {
                for (j, dc) in divisor.coeffs.iter().enumerate() {
                    let t = &c * dc;
                    rem[k + j] -= &t;
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// Division that must be exact; a nonzero remainder is reported as an error.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self> {
        let (q, r) = self.div_rem(divisor)?;
        if !r.is_zero() {
            return Err(Error::Internal(format!(
                "inexact polynomial division ({self} / {divisor})"
            )));
        }
        Ok(q)
    }

    /// Multiplicity of `a` as a root (0 if `p(a) != 0`). Zero polynomial panics.
    pub fn order_at(&self, a: &GaussianRational) -> u32 {
        assert!(!self.is_zero(), "order of the zero polynomial is infinite");
        let mut p = self.clone();
        let mut k = 0;
        loop {
            // Synthetic division by (z - a).
            let n = p.coeffs.len();
            if n == 0 {
                break;
            }
            let mut q = vec![GaussianRational::zero(); n.saturating_sub(1)];
            let mut carry = GaussianRational::zero();
            for j in (0..n).rev() {
                let v = &p.coeffs[j] + &(&carry * a);
                if j == 0 {
                    carry = v;
                } else {
                    q[j - 1] = v.clone();
                    carry = v;
                }
            }
            if !carry.is_zero() {
                break;
            }
            k += 1;
            p = Self::new(q);
        }
        k
    }

    /// Coefficients reversed after padding to length `len` (i.e. `z^{len-1} p(1/z)`).
    pub fn reversed(&self, len: usize) -> Self {
        let mut c: Vec<_> = (0..len).map(|k| self.coeff(k)).collect();
        c.reverse();
        Self::new(c)
    }

    /// Lowest index with a nonzero coefficient (order of vanishing at 0).
    pub fn low_order(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }
}

/// Monic greatest common divisor; `gcd(a, 0) = monic(a)` and `gcd(0, 0) = 0`.
pub fn poly_gcd(a: &AffinePoly, b: &AffinePoly) -> AffinePoly {
    let mut x = a.monic();
    let mut y = b.monic();
    if x.degree() < y.degree() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_zero() {
        let (_, r) = x.div_rem(&y).expect("y is nonzero");
        x = y;
        y = r.monic();
    }
    x.monic()
}

/// Multi-argument gcd.
pub fn poly_gcd_all<'a>(polys: impl IntoIterator<Item = &'a AffinePoly>) -> AffinePoly {
    polys
        .into_iter()
        .fold(AffinePoly::zero(), |acc, p| poly_gcd(&acc, p))
}

/// `p = unit · ∏ factor^multiplicity` with monic, square-free, pairwise coprime factors.
#[derive(Clone, Debug, PartialEq)]
pub struct SquareFreeDecomposition {
    pub unit: GaussianRational,
    pub factors: Vec<(AffinePoly, u32)>,
}

impl SquareFreeDecomposition {
    pub fn reconstruct(&self) -> AffinePoly {
        self.factors
            .iter()
            .fold(AffinePoly::constant(self.unit.clone()), |acc, (f, k)| {
                &acc * &f.pow(*k)
            })
    }

    pub fn degree(&self) -> usize {
        self.factors
            .iter()
            .map(|(f, k)| f.deg() * *k as usize)
            .sum()
    }
}

/// Yun's square-free decomposition. Factors are listed by increasing multiplicity.
pub fn square_free_decompose(p: &AffinePoly) -> Result<SquareFreeDecomposition> {
    let Some(unit) = p.leading().cloned() else {
        return Err(Error::ZeroInput);
    };
    let f = p.monic();
    let mut factors = Vec::new();
    if f.is_constant() {
        return Ok(SquareFreeDecomposition { unit, factors });
    }
    let df = f.derivative();
    let a0 = poly_gcd(&f, &df);
    let mut b = f.exact_div(&a0)?;
    let c = df.exact_div(&a0)?;
    let mut d = &c - &b.derivative();
    let mut k = 1u32;
    while !b.is_constant() {
        let a = poly_gcd(&b, &d);
        let b_next = b.exact_div(&a)?;
        let c_next = d.exact_div(&a)?;
        d = &c_next - &b_next.derivative();
        if !a.is_constant() {
            factors.push((a, k));
        }
        b = b_next;
        k += 1;
    }
    Ok(SquareFreeDecomposition { unit, factors })
}

impl Zero for AffinePoly {
    fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for AffinePoly {
    fn one() -> Self {
        Self::constant(GaussianRational::one())
    }
}

impl<'a> Add<&'a AffinePoly> for &'a AffinePoly {
    type Output = AffinePoly;
    fn add(self, rhs: &AffinePoly) -> AffinePoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        AffinePoly::new((0..n).map(|k| &self.coeff(k) + &rhs.coeff(k)).collect())
    }
}

impl<'a> Sub<&'a AffinePoly> for &'a AffinePoly {
    type Output = AffinePoly;
    fn sub(self, rhs: &AffinePoly) -> AffinePoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        AffinePoly::new((0..n).map(|k| &self.coeff(k) - &rhs.coeff(k)).collect())
    }
}

impl<'a> Mul<&'a AffinePoly> for &'a AffinePoly {
    type Output = AffinePoly;
    fn mul(self, rhs: &AffinePoly) -> AffinePoly {
        if self.is_zero() || rhs.is_zero() {
            return AffinePoly::zero();
        }
        let mut out = vec![GaussianRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        AffinePoly::new(out)
    }
}

impl Add for AffinePoly {
    type Output = AffinePoly;
    fn add(self, rhs: AffinePoly) -> AffinePoly {
        &self + &rhs
    }
}

impl Sub for AffinePoly {
    type Output = AffinePoly;
    fn sub(self, rhs: AffinePoly) -> AffinePoly {
        &self - &rhs
    }
}

impl Mul for AffinePoly {
    type Output = AffinePoly;
    fn mul(self, rhs: AffinePoly) -> AffinePoly {
        &self * &rhs
    }
}

impl Neg for &AffinePoly {
    type Output = AffinePoly;
    fn neg(self) -> AffinePoly {
        AffinePoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

/// Sort key for polynomials: by degree, then by coefficient strings.
#[derive(PartialEq, Eq)]
pub(crate) struct PolySortKey(pub Degree, pub Vec<String>);

impl PartialOrd for PolySortKey {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for PolySortKey {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.cmp(&other.0).then_with(|| self.1.cmp(&other.1))
    }
}

impl AffinePoly {
    pub(crate) fn sort_key(&self) -> PolySortKey {
        PolySortKey(
            self.degree(),
            self.coeffs.iter().map(|c| c.to_string()).collect(),
        )
    }
}

impl fmt::Display for AffinePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| match k {
                0 => format!("({c})"),
                1 => format!("({c})z"),
                _ => format!("({c})z^{k}"),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

impl fmt::Debug for AffinePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for AffinePoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.coeffs.serialize(s)
    }
}

impl<'de> Deserialize<'de> for AffinePoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Ok(Self::new(Vec::<GaussianRational>::deserialize(d)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gr(s: &str) -> GaussianRational {
        s.parse().unwrap()
    }

    #[test]
    fn zero_has_negative_infinite_degree() {
        assert_eq!(AffinePoly::zero().degree(), Degree::NegInfinity);
        assert_eq!(AffinePoly::one().degree(), Degree::Finite(0));
        assert!(Degree::NegInfinity < Degree::Finite(0));
        assert_eq!(
            AffinePoly::from_ints(&[1, 2, 0, 0]).degree(),
            Degree::Finite(1)
        );
    }

    #[test]
    fn gcd_examples() {
        let z2m1 = AffinePoly::from_ints(&[-1, 0, 1]);
        let zm1 = AffinePoly::from_ints(&[-1, 1]);
        assert_eq!(poly_gcd(&z2m1, &zm1), zm1);

        let p = AffinePoly::from_ints(&[3, 0, 6]);
        assert_eq!(poly_gcd(&p, &AffinePoly::zero()), p.monic());
        assert_eq!(
            poly_gcd(&AffinePoly::zero(), &AffinePoly::zero()),
            AffinePoly::zero()
        );

        let i = GaussianRational::i();
        let a = AffinePoly::from_roots(&[(i.clone(), 3), (GaussianRational::from(-2), 1)]);
        let b = AffinePoly::from_roots(&[(i.clone(), 2)]);
        let g = poly_gcd(&a, &b);
        assert_eq!(g, b);
        // exact-division oracle: both quotients leave no remainder
        assert!(a.div_rem(&g).unwrap().1.is_zero());
        assert!(b.div_rem(&g).unwrap().1.is_zero());
    }

    #[test]
    fn square_free_examples() {
        let p = AffinePoly::from_roots(&[(1.into(), 2), ((-1).into(), 1)]);
        let sf = square_free_decompose(&p).unwrap();
        assert_eq!(
            sf.factors,
            vec![
                (AffinePoly::from_ints(&[1, 1]), 1),
                (AffinePoly::from_ints(&[-1, 1]), 2)
            ]
        );
        assert_eq!(sf.reconstruct(), p);

        let q = AffinePoly::from_ints(&[-1, 0, 0, 1]);
        let sf = square_free_decompose(&q).unwrap();
        assert_eq!(sf.factors, vec![(q.clone(), 1)]);

        assert_eq!(
            square_free_decompose(&AffinePoly::zero()),
            Err(Error::ZeroInput)
        );
        let c = square_free_decompose(&AffinePoly::from_ints(&[5])).unwrap();
        assert!(c.factors.is_empty());
    }

    #[test]
    fn multiplicities_1_2_2_5_reconstruct() {
        let roots = [
            (gr("1/2"), 1),
            (gr("-1+i"), 2),
            (gr("3i"), 2),
            (gr("2/3-1/5i"), 5),
        ];
        let p = AffinePoly::from_roots(&roots).scale(&gr("7-2i"));
        let sf = square_free_decompose(&p).unwrap();
        assert_eq!(sf.degree(), 10);
        assert_eq!(sf.reconstruct(), p);
        let mults: Vec<u32> = sf.factors.iter().map(|(_, k)| *k).collect();
        assert_eq!(mults, vec![1, 2, 5]);
        assert_eq!(sf.factors[1].0.deg(), 2);
    }

    #[test]
    fn order_at_counts_root_multiplicity() {
        let a = gr("1-i");
        let p = AffinePoly::from_roots(&[(a.clone(), 3), (2.into(), 1)]);
        assert_eq!(p.order_at(&a), 3);
        assert_eq!(p.order_at(&2.into()), 1);
        assert_eq!(p.order_at(&0.into()), 0);
    }

    #[test]
    fn div_rem_identity() {
        let a = AffinePoly::from_ints(&[1, 2, 3, 4, 5]);
        let b = AffinePoly::new(vec![gr("i"), gr("1/2")]);
        let (q, r) = a.div_rem(&b).unwrap();
        assert_eq!(&(&q * &b) + &r, a);
        assert!(r.degree() < b.degree());
    }
}
