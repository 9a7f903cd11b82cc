//! Bundled scenes: hand-built rational curves whose pullbacks split over `Q(i)`,
//! seeded random curves with mixed divisor degrees, one linearly degenerate
//! curve, and polynomial curves for the numeric sampler.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::curves::RationalCurve;
use crate::exact::{AffinePoly, GaussianRational};
use crate::numeric::NumericCurve;
use crate::position::{check_subgeneral, GeometryContext, HyperplaneFamily};
use crate::scene::{CurveSpec, FloatCoeff, NumericCurveSpec, Scene, Target};
use crate::smt::verify_genus0;
use crate::weights::build_weights;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FixtureKind {
    /// Exact curve satisfying every hypothesis of the genus-0 theorem.
    Exact,
    /// Exact curve whose pullbacks all split into linear factors over `Q(i)`.
    Split,
    /// Exact curve that violates a hypothesis on purpose.
    Degenerate,
    /// Polynomial curve for the finite-radius sampler.
    Numeric,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Fixture {
    pub kind: FixtureKind,
    pub scene: Scene,
}

impl Fixture {
    pub fn name(&self) -> &str {
        self.scene.name.as_deref().unwrap_or("")
    }
}

const RANDOM_EXACT: usize = 25;
const RANDOM_NUMERIC: usize = 10;
const CORPUS_SEED: u64 = 0x6e6f63686b61;

fn g(s: &str) -> GaussianRational {
    s.parse().expect("fixture literal")
}

fn rows(r: &[&[&str]]) -> Vec<Vec<GaussianRational>> {
    r.iter()
        .map(|row| row.iter().map(|s| g(s)).collect())
        .collect()
}

fn exact_scene(
    name: &str,
    (n, u, b): (i64, i64, i64),
    degree: usize,
    coords: &[&[&str]],
    hyperplanes: &[&[&str]],
) -> Scene {
    let m = coords.len() - 1;
    let mut s = Scene::new(m, n, u, b, rows(hyperplanes));
    s.name = Some(name.into());
    s.curve = Some(CurveSpec {
        degree,
        coords: rows(coords),
    });
    s.targets = vec![Target::Genus0, Target::Ramification];
    s
}

fn split(mut s: Scene) -> Fixture {
    s.targets.push(Target::Pointwise);
    Fixture {
        kind: FixtureKind::Split,
        scene: s,
    }
}

fn exact(s: Scene) -> Fixture {
    Fixture {
        kind: FixtureKind::Exact,
        scene: s,
    }
}

fn hand_built() -> Vec<Fixture> {
    vec![
        exact(exact_scene(
            "line-three-points",
            (1, 1, -1),
            1,
            &[&["1"], &["0", "1"]],
            &[&["1", "0"], &["0", "1"], &["1", "1"]],
        )),
        split(exact_scene(
            "quartic-pencil",
            (1, 1, -1),
            4,
            &[&["0", "0", "0", "0", "1"], &["1", "0", "0", "0", "-1"]],
            &[&["1", "0"], &["0", "1"], &["1", "1"], &["1", "16/15"]],
        )),
        // z^2 and (z-1)^2 are squares: both pullbacks ramify to order 2m
        split(exact_scene(
            "double-cover",
            (1, 1, -1),
            2,
            &[&["0", "0", "1"], &["1", "-2", "1"]],
            &[&["1", "0"], &["0", "1"], &["1", "-1"], &["1", "1"]],
        )),
        split(exact_scene(
            "power-line",
            (1, 1, -1),
            4,
            &[&["1"], &["0", "0", "0", "0", "1"]],
            &[
                &["1", "0"],
                &["0", "1"],
                &["1", "-1"],
                &["1", "4"],
                &["1", "-16"],
            ],
        )),
        split(exact_scene(
            "twisted-cubes",
            (2, 2, -1),
            3,
            &[&["1"], &["0", "0", "0", "1"], &["1", "3", "3", "1"]],
            &[
                &["1", "0", "0"],
                &["0", "1", "0"],
                &["0", "0", "1"],
                &["1", "1", "-1"],
            ],
        )),
        split(exact_scene(
            "biquadratic-plane",
            (2, 2, -1),
            4,
            &[&["1"], &["0", "0", "0", "0", "1"], &["0", "0", "1"]],
            &[
                &["1", "0", "0"],
                &["0", "1", "0"],
                &["0", "0", "1"],
                &["1", "1", "-2"],
                &["4", "1", "-5"],
            ],
        )),
        // the fifth pullback is 4 (z + 2)^2 (z + 1/2)^2
        split(exact_scene(
            "quartic-space",
            (3, 3, -1),
            4,
            &[
                &["1"],
                &["0", "0", "0", "0", "1"],
                &["0", "0", "1"],
                &["1", "4", "6", "4", "1"],
            ],
            &[
                &["1", "0", "0", "0"],
                &["0", "1", "0", "0"],
                &["0", "0", "1", "0"],
                &["0", "0", "0", "1"],
                &["-1", "-1", "3", "5"],
            ],
        )),
        // tangent lines of the conic pull back to double points
        split(exact_scene(
            "conic-tangents",
            (2, 2, -1),
            2,
            &[&["1"], &["0", "2"], &["0", "0", "1"]],
            &[
                &["1", "0", "0"],
                &["0", "1", "0"],
                &["0", "0", "1"],
                &["1", "-1", "1"],
                &["1", "2", "4"],
                &["1", "3", "9"],
            ],
        )),
        exact(exact_scene(
            "conic-st",
            (2, 2, -1),
            2,
            &[&["1"], &["0", "0", "1"], &["0", "1"]],
            &[
                &["1", "0", "0"],
                &["0", "1", "0"],
                &["0", "0", "1"],
                &["1", "1", "1"],
            ],
        )),
        // the first three hyperplanes share the point (0:0:1), so N = 3
        exact(exact_scene(
            "concurrent-plane",
            (3, 2, -1),
            3,
            &[&["1"], &["0", "0", "0", "1"], &["0", "1"]],
            &[
                &["1", "0", "0"],
                &["0", "1", "0"],
                &["1", "1", "0"],
                &["0", "0", "1"],
                &["1", "2", "3"],
                &["2", "-1", "5"],
                &["3", "1", "-2"],
            ],
        )),
        exact(exact_scene(
            "gaussian-line",
            (1, 1, -1),
            3,
            &[&["1", "i"], &["0", "1", "0", "1+i"]],
            &[&["1", "0"], &["0", "1"], &["1", "i"], &["2", "-1/3"]],
        )),
    ]
}

/// `[s^2 : t^2 : s^2 - t^2]`: its third coordinate is a combination of the first two.
pub fn degenerate() -> Fixture {
    let mut s = exact_scene(
        "dependent-conic",
        (2, 2, -1),
        2,
        &[&["1"], &["0", "0", "1"], &["1", "0", "-1"]],
        &[
            &["1", "0", "0"],
            &["0", "1", "0"],
            &["0", "0", "1"],
            &["1", "1", "1"],
        ],
    );
    s.targets = vec![Target::Genus0];
    Fixture {
        kind: FixtureKind::Degenerate,
        scene: s,
    }
}

fn random_poly(rng: &mut ChaCha8Rng, degree: usize) -> AffinePoly {
    loop {
        let mut c: Vec<GaussianRational> = (0..=degree)
            .map(|_| GaussianRational::from(rng.gen_range(-3i64..=3)))
            .collect();
        if rng.gen_bool(0.5) {
            c[degree] = GaussianRational::from(rng.gen_range(1i64..=3));
        }
        let p = AffinePoly::new(c);
        if !num_traits::Zero::is_zero(&p) {
            return p;
        }
    }
}

fn random_row(rng: &mut ChaCha8Rng, width: usize) -> Vec<GaussianRational> {
    (0..width)
        .map(|_| GaussianRational::from(rng.gen_range(-5i64..=5)))
        .collect()
}

/// `F = [a_0^d : … : a_m^d]` with coordinate hyperplanes of degree 1 (their
/// pullbacks are `d`-th powers) and random hyperplanes of degree `d`.
fn random_power_curve(rng: &mut ChaCha8Rng, index: usize) -> Option<Fixture> {
    let d: u32 = if rng.gen_bool(0.7) { 2 } else { 3 };
    let m = rng.gen_range(1..=3usize);
    let base = rng.gen_range(1..=(6 / d as usize));
    let coords: Vec<AffinePoly> = (0..=m)
        .map(|k| {
            let deg = if k == 0 {
                base
            } else {
                rng.gen_range(0..=base)
            };
            random_poly(rng, deg).pow(d)
        })
        .collect();
    let degree = base * d as usize;
    let curve = RationalCurve::from_affine(degree, &coords).ok()?;
    let extra = rng.gen_range(1..=3usize);
    let mut hyper: Vec<Vec<GaussianRational>> = (0..=m)
        .map(|k| {
            (0..=m)
                .map(|j| GaussianRational::from((j == k) as i64))
                .collect()
        })
        .collect();
    hyper.extend((0..extra).map(|_| random_row(rng, m + 1)));
    let mut d_i = vec![1; m + 1];
    d_i.extend(std::iter::repeat_n(d, extra));

    let family = HyperplaneFamily::new(hyper.clone()).ok()?;
    let ctx = GeometryContext::cartan(m as i64);
    if !check_subgeneral(&family, &ctx).ok()?.is_certified() {
        return None;
    }
    let weights = build_weights(&family, &ctx).ok()?;
    let report = verify_genus0(&curve, &family, &ctx, &weights, d, &d_i).ok()?;
    if !report.hypotheses.iter().all(|h| h.holds) {
        return None;
    }
    let mut s = Scene::new(m, m as i64, m as i64, -1, hyper);
    s.name = Some(format!("power-curve-{index:02}"));
    s.d = d;
    s.d_i = Some(d_i);
    s.curve = Some(CurveSpec {
        degree,
        coords: curve.affine().iter().map(|p| p.coeffs().to_vec()).collect(),
    });
    s.targets = vec![Target::Genus0, Target::Ramification];
    Some(Fixture {
        kind: FixtureKind::Exact,
        scene: s,
    })
}

fn complex_in_disk(rng: &mut ChaCha8Rng, radius: f64) -> Complex64 {
    loop {
        let z = Complex64::new(
            rng.gen_range(-radius..radius),
            rng.gen_range(-radius..radius),
        );
        if z.norm() < radius {
            return z;
        }
    }
}

fn round(x: f64) -> f64 {
    (x * 1e6).round() / 1e6
}

/// One coordinate `100 ∏ (z - a_k)` with every `|a_k| < 0.3` dominates the
/// others on and outside the unit circle, so `T(r)` is close to `δ log r`.
fn random_numeric(rng: &mut ChaCha8Rng, index: usize) -> Option<Fixture> {
    let m = rng.gen_range(1..=2usize);
    let delta = rng.gen_range(2..=5usize);
    let mut dominant = vec![Complex64::new(100.0, 0.0)];
    for _ in 0..delta {
        let a = complex_in_disk(rng, 0.3);
        let mut next = vec![Complex64::new(0.0, 0.0); dominant.len() + 1];
        for (k, c) in dominant.iter().enumerate() {
            next[k + 1] += c;
            next[k] -= c * a;
        }
        dominant = next;
    }
    let small = |rng: &mut ChaCha8Rng, deg: usize| -> Vec<Complex64> {
        (0..=deg)
            .map(|_| Complex64::new(rng.gen_range(-1.0..1.0), 0.0))
            .collect()
    };
    let mut coords = vec![small(rng, 1), dominant];
    if m == 2 {
        coords.push(small(rng, delta - 1));
    }
    let coords: Vec<Vec<Complex64>> = coords
        .into_iter()
        .map(|p| {
            p.into_iter()
                .map(|c| Complex64::new(round(c.re), round(c.im)))
                .collect()
        })
        .collect();
    NumericCurve::new(coords.clone()).ok()?;

    let mut hyper: Vec<Vec<GaussianRational>> = (0..=m)
        .map(|k| {
            (0..=m)
                .map(|j| GaussianRational::from((j == k) as i64))
                .collect()
        })
        .collect();
    hyper.extend((0..2).map(|_| random_row(rng, m + 1)));
    let family = HyperplaneFamily::new(hyper.clone()).ok()?;
    if !check_subgeneral(&family, &GeometryContext::cartan(m as i64))
        .ok()?
        .is_certified()
    {
        return None;
    }
    let mut s = Scene::new(m, m as i64, m as i64, -1, hyper);
    s.name = Some(format!("dominant-polynomial-{index:02}"));
    s.numeric_curve = Some(NumericCurveSpec {
        coords: coords
            .iter()
            .map(|p| {
                p.iter()
                    .map(|c| {
                        if c.im == 0.0 {
                            FloatCoeff::Real(c.re)
                        } else {
                            FloatCoeff::Complex([c.re, c.im])
                        }
                    })
                    .collect()
            })
            .collect(),
    });
    s.targets = vec![Target::Sampled];
    s.radii = Some(vec![10.0, 100.0, 1000.0]);
    Some(Fixture {
        kind: FixtureKind::Numeric,
        scene: s,
    })
}

/// Every bundled scene, in a fixed order.
pub fn corpus() -> Vec<Fixture> {
    let mut out = hand_built();
    out.push(degenerate());
    let mut rng = ChaCha8Rng::seed_from_u64(CORPUS_SEED);
    let mut made = 0;
    while made < RANDOM_EXACT {
        if let Some(f) = random_power_curve(&mut rng, made) {
            out.push(f);
            made += 1;
        }
    }
    let mut made = 0;
    while made < RANDOM_NUMERIC {
        if let Some(f) = random_numeric(&mut rng, made) {
            out.push(f);
            made += 1;
        }
    }
    out
}

pub fn of_kind(kinds: &[FixtureKind]) -> Vec<Fixture> {
    corpus()
        .into_iter()
        .filter(|f| kinds.contains(&f.kind))
        .collect()
}
