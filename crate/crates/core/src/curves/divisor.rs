//! Effective divisors on `P^1` and truncated counting.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{square_free_decompose, AffinePoly, GaussianRational, HomogeneousPoly};
use crate::numeric::roots::aberth;

/// A point of `P^1`, or a block of conjugate points cut out by an irreducible-looking
/// factor that has no roots in `Q(i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Place {
    /// The point `(1:a)`, i.e. `z = a`.
    Finite(GaussianRational),
    /// The point `(0:1)`.
    Infinity,
    /// All roots of a monic square-free polynomial of degree at least 2.
    Factor(AffinePoly),
}

impl Place {
    /// Number of points of `P^1` the place stands for.
    pub fn degree(&self) -> usize {
        match self {
            Place::Finite(_) | Place::Infinity => 1,
            Place::Factor(p) => p.deg(),
        }
    }

    fn rank(&self) -> u8 {
        match self {
            Place::Finite(_) => 0,
            Place::Factor(_) => 1,
            Place::Infinity => 2,
        }
    }
}

impl Ord for Place {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Place::Finite(a), Place::Finite(b)) => a.re.cmp(&b.re).then_with(|| a.im.cmp(&b.im)),
            (Place::Factor(a), Place::Factor(b)) => a.sort_key().cmp(&b.sort_key()),
            _ => self.rank().cmp(&other.rank()),
        }
    }
}

impl PartialOrd for Place {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Finite(a) => write!(f, "z = {a}"),
            Place::Infinity => write!(f, "(0:1)"),
            Place::Factor(p) => write!(f, "roots of {p}"),
        }
    }
}

impl Serialize for Place {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DivisorEntry {
    pub place: Place,
    pub multiplicity: u32,
}

/// `Σ λ_a a` with pairwise distinct places, sorted.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Divisor {
    entries: Vec<DivisorEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CountingReport {
    pub total: u64,
    pub truncated: BTreeMap<u32, u64>,
}

impl Divisor {
    pub fn new(mut entries: Vec<DivisorEntry>) -> Result<Self> {
        entries.retain(|e| e.multiplicity > 0);
        entries.sort_by(|a, b| a.place.cmp(&b.place));
        for w in entries.windows(2) {
            if w[0].place == w[1].place {
                return Err(Error::InvalidInput(format!(
                    "place {} listed twice",
                    w[0].place
                )));
            }
        }
        Ok(Self { entries })
    }

    /// Zero divisor of a nonzero binary form: finite zeros from the chart `s = 1`,
    /// plus `(0:1)` with the form's order there.
    pub fn of_form(form: &HomogeneousPoly) -> Result<Self> {
        let order_inf = form.order_at_infinity().ok_or(Error::ZeroInput)?;
        let mut entries = finite_entries(&form.affine_s1())?;
        if order_inf > 0 {
            entries.push(DivisorEntry {
                place: Place::Infinity,
                multiplicity: order_inf as u32,
            });
        }
        Self::new(entries)
    }

    pub fn entries(&self) -> &[DivisorEntry] {
        &self.entries
    }

    /// Degree `Σ λ_a`, counting each point of a factor place.
    pub fn degree(&self) -> u64 {
        self.truncated(u32::MAX)
    }

    /// `Σ min(k, λ_a)`.
    pub fn truncated(&self, k: u32) -> u64 {
        self.entries
            .iter()
            .map(|e| e.place.degree() as u64 * e.multiplicity.min(k) as u64)
            .sum()
    }

    pub fn counting_report(&self, ks: &[u32]) -> CountingReport {
        CountingReport {
            total: self.degree(),
            truncated: ks.iter().map(|&k| (k, self.truncated(k))).collect(),
        }
    }

    pub fn is_split(&self) -> bool {
        self.entries
            .iter()
            .all(|e| !matches!(e.place, Place::Factor(_)))
    }

    pub fn min_multiplicity(&self) -> Option<u32> {
        self.entries.iter().map(|e| e.multiplicity).min()
    }

    /// Multiplicity at a point (0 if absent).
    pub fn multiplicity_at(&self, place: &Place) -> u32 {
        self.entries
            .iter()
            .find(|e| e.place == *place)
            .map_or(0, |e| e.multiplicity)
    }

    /// Every multiplicity divided by `e`; fails unless all are divisible.
    pub fn divide(&self, e: u32) -> Result<Self> {
        if e == 0 {
            return Err(Error::InvalidInput("division by zero".into()));
        }
        let mut entries = Vec::with_capacity(self.entries.len());
        for en in &self.entries {
            if en.multiplicity % e != 0 {
                return Err(Error::Precondition(format!(
                    "multiplicity {} at {} is not divisible by {e}",
                    en.multiplicity, en.place
                )));
            }
            entries.push(DivisorEntry {
                place: en.place.clone(),
                multiplicity: en.multiplicity / e,
            });
        }
        Ok(Self { entries })
    }
}

/// Splits every square-free factor into linear factors over `Q(i)` as far as
/// numerical roots can be rationalized and confirmed exactly.
fn finite_entries(p: &AffinePoly) -> Result<Vec<DivisorEntry>> {
    if p.is_constant() {
        return Ok(Vec::new());
    }
    let sf = square_free_decompose(p)?;
    let mut out = Vec::new();
    for (factor, mult) in sf.factors {
        let (roots, rest) = split_rational_roots(&factor)?;
        out.extend(roots.into_iter().map(|a| DivisorEntry {
            place: Place::Finite(a),
            multiplicity: mult,
        }));
        if let Some(rest) = rest {
            out.push(DivisorEntry {
                place: Place::Factor(rest),
                multiplicity: mult,
            });
        }
    }
    Ok(out)
}

/// Roots of a square-free `p` lying in `Q(i)`, and the monic cofactor when it
/// still has degree ≥ 2.
pub fn split_rational_roots(p: &AffinePoly) -> Result<(Vec<GaussianRational>, Option<AffinePoly>)> {
    let mut rest = p.monic();
    let mut roots = Vec::new();
    if rest.deg() >= 2 {
        let c: Vec<_> = rest
            .coeffs()
            .iter()
            .map(GaussianRational::to_complex64)
            .collect();
        for z in aberth(&c)? {
            if rest.deg() < 2 {
                break;
            }
            if let Some(a) = rationalize_root(&rest, z.re, z.im) {
                rest = rest.exact_div(&AffinePoly::linear_root(&a))?;
                roots.push(a);
            }
        }
    }
    if rest.deg() == 1 {
        let c = rest.coeffs();
        roots.push(-&(&c[0] / &c[1]));
        rest = AffinePoly::one();
    }
    Ok((roots, (rest.deg() >= 2).then_some(rest)))
}

/// Continued-fraction convergents of `x` with denominator up to `max_den`.
fn convergents(x: f64, max_den: i64) -> Vec<BigRational> {
    let mut out = Vec::new();
    if !x.is_finite() {
        return out;
    }
    let (mut h0, mut h1) = (BigInt::zero(), BigInt::one());
    let (mut k0, mut k1) = (BigInt::one(), BigInt::zero());
    let mut v = x;
    for _ in 0..40 {
        let a = v.floor();
        let Some(ai) = a.to_i64() else { break };
        let ai = BigInt::from(ai);
        let h2 = &ai * &h1 + &h0;
        let k2 = &ai * &k1 + &k0;
        if k2 > BigInt::from(max_den) {
            break;
        }
        out.push(BigRational::new(h2.clone(), k2.clone()));
        (h0, h1, k0, k1) = (h1, h2, k1, k2);
        let frac = v - a;
        if frac.abs() < 1e-12 {
            break;
        }
        v = 1.0 / frac;
    }
    out
}

fn rationalize_root(p: &AffinePoly, re: f64, im: f64) -> Option<GaussianRational> {
    let tol = 1e-7 * (1.0 + re.abs().max(im.abs()));
    let close = |x: f64| -> Vec<BigRational> {
        let mut c: Vec<BigRational> = convergents(x, 1_000_000)
            .into_iter()
            .filter(|r| (crate::exact::rational_to_f64(r) - x).abs() <= tol)
            .take(3)
            .collect();
        if x.abs() <= tol {
            c.insert(0, BigRational::zero());
        }
        c
    };
    for a in close(re) {
        for b in close(im) {
            let z = GaussianRational::new(a.clone(), b);
            if p.eval(&z).is_zero() {
                return Some(z);
            }
        }
    }
    None
}

impl fmt::Display for Divisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .entries
            .iter()
            .map(|e| format!("{}·[{}]", e.multiplicity, e.place))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}
