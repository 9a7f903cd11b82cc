//! Aberth–Ehrlich simultaneous root finding.

use num_complex::Complex64;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::{square_free_decompose, AffinePoly};

const MAX_ITER: usize = 600;
pub const RESIDUAL_TOL: f64 = 1e-10;
pub const CLUSTER_RADIUS: f64 = 1e-6;

#[derive(Clone, Debug, PartialEq)]
pub struct Root {
    pub value: Complex64,
    pub multiplicity: u32,
}

fn trim(coeffs: &[Complex64]) -> &[Complex64] {
    let mut n = coeffs.len();
    while n > 0 && coeffs[n - 1].is_zero() {
        n -= 1;
    }
    &coeffs[..n]
}

/// `(p(z), p'(z))` by Horner.
fn eval_with_derivative(c: &[Complex64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::zero();
    let mut dp = Complex64::zero();
    for &a in c.iter().rev() {
        dp = dp * z + p;
        p = p * z + a;
    }
    (p, dp)
}

pub fn eval(c: &[Complex64], z: Complex64) -> Complex64 {
    c.iter()
        .rev()
        .fold(Complex64::zero(), |acc, &a| acc * z + a)
}

/// `|p(z)| / Σ |c_k| |z|^k`, the residual relative to the evaluation scale.
pub fn relative_residual(c: &[Complex64], z: Complex64) -> f64 {
    let scale: f64 = c.iter().rev().fold(0.0, |acc, a| acc * z.norm() + a.norm());
    if scale == 0.0 {
        return 0.0;
    }
    eval(c, z).norm() / scale
}

/// All roots of `Σ c_k z^k` (ascending coefficients), repeated by multiplicity.
pub fn aberth(coeffs: &[Complex64]) -> Result<Vec<Complex64>> {
    let c = trim(coeffs);
    if c.is_empty() {
        return Err(Error::ZeroInput);
    }
    let n = c.len() - 1;
    if n == 0 {
        return Ok(Vec::new());
    }
    let lead = c[n];
    // roots of z^k factors are exactly zero
    let zeros = c.iter().take_while(|a| a.is_zero()).count();
    let c = &c[zeros..];
    let n = c.len() - 1;
    let mut out = vec![Complex64::zero(); zeros];
    if n == 0 {
        return Ok(out);
    }
    // Fujiwara-type bound for the initial circle
    let radius = (0..n)
        .map(|k| (c[k] / lead).norm().powf(1.0 / (n - k) as f64))
        .fold(0.0_f64, f64::max)
        .max(1e-3);
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| Complex64::from_polar(radius, std::f64::consts::TAU * k as f64 / n as f64 + 0.4))
        .collect();
    let mut converged = false;
    for _ in 0..MAX_ITER {
        let mut max_step: f64 = 0.0;
        for k in 0..n {
            let (p, dp) = eval_with_derivative(c, z[k]);
            if p.is_zero() {
                continue;
            }
            let ratio = p / dp;
            let s: Complex64 = (0..n)
                .filter(|&j| j != k)
                .map(|j| {
                    let d = z[k] - z[j];
                    if d.is_zero() {
                        Complex64::zero()
                    } else {
                        d.inv()
                    }
                })
                .sum();
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * s);
            if step.is_finite() {
                z[k] -= step;
                max_step = max_step.max(step.norm() / (1.0 + z[k].norm()));
            }
        }
        if max_step < 1e-15 {
            converged = true;
            break;
        }
    }
    if !converged {
        let worst = z
            .iter()
            .map(|&r| relative_residual(c, r))
            .fold(0.0, f64::max);
        if worst > RESIDUAL_TOL {
            return Err(Error::RootFinding(format!(
                "no convergence after {MAX_ITER} iterations, worst residual {worst:e}"
            )));
        }
    }
    out.extend(z);
    Ok(out)
}

fn newton_polish(c: &[Complex64], mut z: Complex64) -> Complex64 {
    for _ in 0..3 {
        let (p, dp) = eval_with_derivative(c, z);
        if dp.is_zero() {
            break;
        }
        let next = z - p / dp;
        if !next.is_finite() || relative_residual(c, next) > relative_residual(c, z) {
            break;
        }
        z = next;
    }
    z
}

fn check_residuals(c: &[Complex64], roots: &[Complex64]) -> Result<()> {
    for r in roots {
        let res = relative_residual(c, *r);
        if res > RESIDUAL_TOL {
            return Err(Error::RootFinding(format!(
                "root {r} has relative residual {res:e}"
            )));
        }
    }
    Ok(())
}

/// Roots of an exact polynomial, with multiplicities taken from its square-free decomposition.
pub fn find_roots_exact(p: &AffinePoly) -> Result<Vec<Root>> {
    let sf = square_free_decompose(p)?;
    let mut out = Vec::new();
    for (factor, mult) in &sf.factors {
        let c: Vec<Complex64> = factor.coeffs().iter().map(|x| x.to_complex64()).collect();
        let roots: Vec<Complex64> = aberth(&c)?
            .into_iter()
            .map(|z| newton_polish(&c, z))
            .collect();
        check_residuals(&c, &roots)?;
        out.extend(roots.into_iter().map(|value| Root {
            value,
            multiplicity: *mult,
        }));
    }
    Ok(out)
}

/// Roots of a floating-point polynomial. Roots closer than `radius` (relative
/// to `max(1, |z|)`) are merged into one root whose multiplicity is the cluster size.
pub fn find_roots_numeric(coeffs: &[Complex64], radius: f64) -> Result<Vec<Root>> {
    let c = trim(coeffs);
    let raw = aberth(c)?;
    check_residuals(c, &raw)?;
    let mut clusters: Vec<(Complex64, u32)> = Vec::new();
    for z in raw {
        let near = clusters
            .iter_mut()
            .find(|(w, k)| ((*w / *k as f64) - z).norm() <= radius * z.norm().max(1.0));
        match near {
            Some((sum, k)) => {
                *sum += z;
                *k += 1;
            }
            None => clusters.push((z, 1)),
        }
    }
    Ok(clusters
        .into_iter()
        .map(|(sum, k)| Root {
            value: sum / k as f64,
            multiplicity: k,
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::GaussianRational;

    fn sorted_re(mut v: Vec<Complex64>) -> Vec<Complex64> {
        v.sort_by(|a, b| a.re.partial_cmp(&b.re).unwrap());
        v
    }

    #[test]
    fn quadratic() {
        let r = sorted_re(aberth(&[(-1.0).into(), 0.0.into(), 1.0.into()]).unwrap());
        assert!((r[0] + 1.0).norm() < 1e-12 && (r[1] - 1.0).norm() < 1e-12);
    }

    #[test]
    fn triple_root_exact_path() {
        let p = AffinePoly::from_roots(&[(GaussianRational::from(2), 3)]);
        let roots = find_roots_exact(&p).unwrap();
        assert_eq!(roots.len(), 1);
        assert_eq!(roots[0].multiplicity, 3);
        assert!((roots[0].value - 2.0).norm() < 1e-12);
    }

    #[test]
    fn wilkinson_eight() {
        let roots: Vec<(GaussianRational, u32)> =
            (1..=8).map(|k| (GaussianRational::from(k), 1)).collect();
        let p = AffinePoly::from_roots(&roots);
        let found = sorted_re(
            find_roots_exact(&p)
                .unwrap()
                .into_iter()
                .map(|r| r.value)
                .collect(),
        );
        for (k, z) in found.iter().enumerate() {
            assert!((z - (k as f64 + 1.0)).norm() < 1e-8, "{z}");
        }
    }

    #[test]
    fn zero_roots_and_clusters() {
        // z^2 (z - 1)^2
        let c: Vec<Complex64> = [0.0, 0.0, 1.0, -2.0, 1.0]
            .iter()
            .map(|&x| x.into())
            .collect();
        let roots = find_roots_numeric(&c, CLUSTER_RADIUS).unwrap();
        assert_eq!(roots.len(), 2);
        assert!(roots.iter().all(|r| r.multiplicity == 2));
        assert!(matches!(aberth(&[]), Err(Error::ZeroInput)));
    }
}
