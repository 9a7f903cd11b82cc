//! JSON scene files: a hyperplane family, the geometric parameters and optional curves.
//!
//! ```json
//! {
//!   "schema": "v1",
//!   "m": 1, "N": 1, "u": 1, "b": -1,
//!   "hyperplanes": [["1", "0"], ["0", "1"], ["1", "1"]],
//!   "curve": {"degree": 1, "coords": [["1"], ["0", "1"]]}
//! }
//! ```
//!
//! Coefficients are strings over `Q(i)` such as `"3/4"`, `"-2+i/3"`. Curve
//! coordinates list affine coefficients in ascending powers of `z = t/s`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::curves::RationalCurve;
use crate::error::{Error, Result};
use crate::exact::{AffinePoly, GaussianRational};
use crate::numeric::NumericCurve;
use crate::position::{GeometryContext, HyperplaneFamily};

pub const SCHEMA: &str = "v1";
pub const FIELD: &str = "Q(i)";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Target {
    Position,
    Weights,
    Genus0,
    Pointwise,
    Ramification,
    Sampled,
    Unicity,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CurveSpec {
    pub degree: usize,
    pub coords: Vec<Vec<GaussianRational>>,
}

/// A floating coefficient, either real or `[re, im]`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FloatCoeff {
    Real(f64),
    Complex([f64; 2]),
}

impl From<FloatCoeff> for Complex64 {
    fn from(c: FloatCoeff) -> Self {
        match c {
            FloatCoeff::Real(x) => Complex64::new(x, 0.0),
            FloatCoeff::Complex([re, im]) => Complex64::new(re, im),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NumericCurveSpec {
    pub coords: Vec<Vec<FloatCoeff>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Scene {
    pub schema: String,
    #[serde(default = "default_field")]
    pub field: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub m: usize,
    /// Redundant with the number of hyperplanes; checked when present.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q: Option<usize>,
    #[serde(rename = "N")]
    pub n: i64,
    pub u: i64,
    pub b: i64,
    #[serde(default = "one")]
    pub d: u32,
    #[serde(default)]
    pub genus: u32,
    /// Defaults to `d` for every divisor.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d_i: Option<Vec<u32>>,
    pub hyperplanes: Vec<Vec<GaussianRational>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub curve: Option<CurveSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub numeric_curve: Option<NumericCurveSpec>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub targets: Vec<Target>,
    #[serde(default)]
    pub seed: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub radii: Option<Vec<f64>>,
}

fn default_field() -> String {
    FIELD.to_string()
}

fn one() -> u32 {
    1
}

impl Scene {
    /// A scene with no curve, `d = 1` and genus 0.
    pub fn new(m: usize, n: i64, u: i64, b: i64, hyperplanes: Vec<Vec<GaussianRational>>) -> Self {
        Self {
            schema: SCHEMA.into(),
            field: FIELD.into(),
            name: None,
            m,
            q: None,
            n,
            u,
            b,
            d: 1,
            genus: 0,
            d_i: None,
            hyperplanes,
            curve: None,
            numeric_curve: None,
            targets: Vec::new(),
            seed: 0,
            radii: None,
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let scene: Scene = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        scene.validate()?;
        Ok(scene)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("scenes serialize")
    }

    /// Structural checks that do not need any rank computation.
    pub fn validate(&self) -> Result<()> {
        if self.schema != SCHEMA {
            return Err(Error::Parse(format!(
                "unsupported schema {:?}, expected {SCHEMA:?}",
                self.schema
            )));
        }
        if self.field != FIELD {
            return Err(Error::InvalidInput(format!(
                "unsupported field {:?}, only {FIELD} is available",
                self.field
            )));
        }
        if self.m == 0 {
            return Err(Error::InvalidInput("m must be at least 1".into()));
        }
        if let Some(q) = self.q {
            if q != self.hyperplanes.len() {
                return Err(Error::InvalidInput(format!(
                    "q = {q} but {} hyperplanes given",
                    self.hyperplanes.len()
                )));
            }
        }
        if let Some(row) = self.hyperplanes.iter().find(|r| r.len() != self.m + 1) {
            return Err(Error::InvalidInput(format!(
                "hyperplane row of length {} in P^{}",
                row.len(),
                self.m
            )));
        }
        GeometryContext::new(self.u, self.b, self.n)?;
        if self.d == 0 {
            return Err(Error::InvalidInput("d must be positive".into()));
        }
        let d_i = self.d_i();
        if d_i.len() != self.hyperplanes.len() {
            return Err(Error::InvalidInput(format!(
                "{} values of d_i for {} hyperplanes",
                d_i.len(),
                self.hyperplanes.len()
            )));
        }
        if let Some((j, dj)) = d_i
            .iter()
            .enumerate()
            .find(|(_, &dj)| dj == 0 || !self.d.is_multiple_of(dj))
        {
            return Err(Error::InvalidInput(format!(
                "d_{} = {dj} does not divide d = {}",
                j + 1,
                self.d
            )));
        }
        if let Some(c) = &self.curve {
            if c.coords.len() != self.m + 1 {
                return Err(Error::InvalidInput(format!(
                    "curve has {} coordinates in P^{}",
                    c.coords.len(),
                    self.m
                )));
            }
        }
        if let Some(c) = &self.numeric_curve {
            if c.coords.len() != self.m + 1 {
                return Err(Error::InvalidInput(format!(
                    "numeric curve has {} coordinates in P^{}",
                    c.coords.len(),
                    self.m
                )));
            }
        }
        if let Some(r) = &self.radii {
            if r.iter().any(|&x| !(x > 1.0 && x.is_finite())) {
                return Err(Error::InvalidInput(
                    "radii must be finite and greater than 1".into(),
                ));
            }
        }
        Ok(())
    }

    pub fn d_i(&self) -> Vec<u32> {
        self.d_i
            .clone()
            .unwrap_or_else(|| vec![self.d; self.hyperplanes.len()])
    }

    pub fn family(&self) -> Result<HyperplaneFamily> {
        HyperplaneFamily::new(self.hyperplanes.clone())
    }

    pub fn context(&self) -> Result<GeometryContext> {
        GeometryContext::new(self.u, self.b, self.n)
    }

    pub fn rational_curve(&self) -> Result<Option<RationalCurve>> {
        self.curve
            .as_ref()
            .map(|c| {
                let coords: Vec<AffinePoly> = c
                    .coords
                    .iter()
                    .map(|p| AffinePoly::new(p.clone()))
                    .collect();
                RationalCurve::from_affine(c.degree, &coords)
            })
            .transpose()
    }

    /// The explicit numeric curve, or the exact curve converted to floats.
    pub fn numeric(&self) -> Result<Option<NumericCurve>> {
        if let Some(c) = &self.numeric_curve {
            let coords = c
                .coords
                .iter()
                .map(|p| p.iter().map(|&x| x.into()).collect())
                .collect();
            return NumericCurve::new(coords).map(Some);
        }
        Ok(self
            .rational_curve()?
            .as_ref()
            .map(NumericCurve::from_exact))
    }
}
