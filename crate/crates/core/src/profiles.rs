// Copyright 2026 the Cornu Authors
// SPDX-License-Identifier: Apache-2.0

//! Curvature profiles: κ(s) as a function of arc length on `[0, S]`.
//!
//! Every profile exposes the curvature, its first two arc-length derivatives
//! and the exact tangent angle θ(s) = ∫₀ˢ κ, with θ(0) = 0. The initial
//! tangent direction is applied later, when a curve is synthesized.
//!
//! The Generalized Cornu Spiral (GCS) is the rational-linear profile
//!
//! ```text
//! κ(s) = ((κ1 − κ0 + rκ1)·s + κ0·S) / (r·s + S),   0 ≤ s ≤ S,  r > −1
//! ```
//!
//! which interpolates κ0 at `s = 0` and κ1 at `s = S`. Internally it is
//! evaluated in the normalized variable `u = s/S` as
//! `(κ1(1+r)u + κ0(1−u)) / (1 + ru)`, which hits both endpoint values to
//! within one rounding even when `1 + r` is tiny.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Relative threshold below which a curvature is treated as zero.
pub const ZERO_CURVATURE_TOL: f64 = 1e-12;

/// A rational-linear curvature segment fixed by its end curvatures, arc length
/// and shape factor `r`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GcsProfile {
    kappa0: f64,
    kappa1: f64,
    total_arc_length: f64,
    shape_factor: f64,
    /// Numerator slope κ1 − κ0 + rκ1.
    n1: f64,
    /// Numerator constant κ0·S.
    n0: f64,
}

/// The special curves a GCS reduces to for particular parameter values.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DegenerateClass {
    StraightLine,
    CircularArc,
    LogSpiral,
    Clothoid,
    GeneralGcs,
}

impl DegenerateClass {
    pub fn as_str(self) -> &'static str {
        match self {
            DegenerateClass::StraightLine => "straight_line",
            DegenerateClass::CircularArc => "circular_arc",
            DegenerateClass::LogSpiral => "log_spiral",
            DegenerateClass::Clothoid => "clothoid",
            DegenerateClass::GeneralGcs => "general_gcs",
        }
    }
}

fn check_finite(name: &str, v: f64) -> Result<()> {
    if v.is_finite() {
        Ok(())
    } else {
        Err(Error::domain(format!("{name} must be finite, got {v}")))
    }
}

fn check_length(arc_length: f64) -> Result<()> {
    check_finite("arc_length", arc_length)?;
    if arc_length > 0.0 {
        Ok(())
    } else {
        Err(Error::domain(format!(
            "arc_length must be > 0, got {arc_length}"
        )))
    }
}

fn check_s(s: f64, arc_length: f64) -> Result<()> {
    if s.is_finite() && (0.0..=arc_length).contains(&s) {
        Ok(())
    } else {
        Err(Error::domain(format!(
            "arc length {s} outside the profile domain [0, {arc_length}]"
        )))
    }
}

/// `(x − ln(1+x)) / x²`, continuous at 0 where it equals 1/2.
fn log_remainder(x: f64) -> f64 {
    if x.abs() < 0.1 {
        // 1/2 − x/3 + x²/4 − …
        let mut sum = 0.0;
        let mut pow = 1.0;
        for k in 2..40 {
            let term = pow / k as f64;
            sum += term;
            if term.abs() < 1e-18 {
                break;
            }
            pow *= -x;
        }
        sum
    } else {
        (x - x.ln_1p()) / (x * x)
    }
}

/// `ln(1+x) / x`, continuous at 0 where it equals 1.
fn log_ratio(x: f64) -> f64 {
    if x == 0.0 {
        1.0
    } else {
        x.ln_1p() / x
    }
}

impl GcsProfile {
    /// Builds the GCS segment with curvature `kappa0` at `s = 0`, `kappa1` at
    /// `s = arc_length`, and shape factor `r > −1`.
    pub fn new(kappa0: f64, kappa1: f64, arc_length: f64, r: f64) -> Result<Self> {
        check_finite("kappa0", kappa0)?;
        check_finite("kappa1", kappa1)?;
        check_length(arc_length)?;
        check_finite("r", r)?;
        if r <= -1.0 {
            return Err(Error::domain(format!(
                "shape factor r must satisfy r > -1, got {r}"
            )));
        }
        Ok(GcsProfile {
            kappa0,
            kappa1,
            total_arc_length: arc_length,
            shape_factor: r,
            n1: kappa1 - kappa0 + r * kappa1,
            n0: kappa0 * arc_length,
        })
    }

    /// Alias of [`GcsProfile::new`] named after the construction it performs.
    pub fn from_endpoint_data(kappa0: f64, kappa1: f64, arc_length: f64, r: f64) -> Result<Self> {
        Self::new(kappa0, kappa1, arc_length, r)
    }

    pub fn kappa0(&self) -> f64 {
        self.kappa0
    }

    pub fn kappa1(&self) -> f64 {
        self.kappa1
    }

    pub fn arc_length(&self) -> f64 {
        self.total_arc_length
    }

    pub fn r(&self) -> f64 {
        self.shape_factor
    }

    /// Numerator slope of the rational curvature, κ1 − κ0 + rκ1.
    pub fn n1(&self) -> f64 {
        self.n1
    }

    /// Numerator constant of the rational curvature, κ0·S.
    pub fn n0(&self) -> f64 {
        self.n0
    }

    /// Unit-bearing scale `max(|κ0|, |κ1|, 1/S)` used for relative tolerances.
    pub fn scale(&self) -> f64 {
        self.kappa0
            .abs()
            .max(self.kappa1.abs())
            .max(1.0 / self.total_arc_length)
    }

    /// Sign of κ′ over the whole segment: the curvature is monotone.
    pub fn monotonic_sign(&self) -> f64 {
        let d = self.n1 * self.total_arc_length - self.n0 * self.shape_factor;
        if d == 0.0 {
            0.0
        } else {
            d.signum()
        }
    }

    pub(crate) fn eval_kappa(&self, s: f64) -> f64 {
        let u = s / self.total_arc_length;
        let r = self.shape_factor;
        (self.kappa1 * (1.0 + r) * u + self.kappa0 * (1.0 - u)) / (1.0 + r * u)
    }

    pub(crate) fn eval_kappa_prime(&self, s: f64) -> f64 {
        let u = s / self.total_arc_length;
        let r = self.shape_factor;
        let den = 1.0 + r * u;
        (1.0 + r) * (self.kappa1 - self.kappa0) / (self.total_arc_length * den * den)
    }

    pub(crate) fn eval_kappa_second(&self, s: f64) -> f64 {
        let big_s = self.total_arc_length;
        let u = s / big_s;
        let r = self.shape_factor;
        let den = 1.0 + r * u;
        -2.0 * r * (1.0 + r) * (self.kappa1 - self.kappa0) / (big_s * big_s * den * den * den)
    }

    pub(crate) fn eval_theta(&self, s: f64) -> f64 {
        // θ(s) = κ0·s·ln(1+x)/x + n1·s²/S·(x − ln(1+x))/x²  with x = r·s/S
        let x = self.shape_factor * s / self.total_arc_length;
        self.kappa0 * s * log_ratio(x) + self.n1 * s * s / self.total_arc_length * log_remainder(x)
    }

    pub fn kappa(&self, s: f64) -> Result<f64> {
        check_s(s, self.total_arc_length)?;
        Ok(self.eval_kappa(s))
    }

    pub fn kappa_prime(&self, s: f64) -> Result<f64> {
        check_s(s, self.total_arc_length)?;
        Ok(self.eval_kappa_prime(s))
    }

    pub fn theta(&self, s: f64) -> Result<f64> {
        check_s(s, self.total_arc_length)?;
        Ok(self.eval_theta(s))
    }

    /// Which special curve this segment is, if any.
    ///
    /// Curvature-valued coefficients are compared against `tol · scale()`,
    /// the dimensionless shape factor against `tol`. Equal end curvatures give
    /// a circular arc for every `r`, because the numerator is then κ0 times
    /// the denominator.
    pub fn classify_degenerate(&self, tol: f64) -> DegenerateClass {
        let ktol = tol * self.scale();
        let r_zero = self.shape_factor.abs() <= tol;
        if self.kappa0.abs() <= ktol && self.kappa1.abs() <= ktol {
            DegenerateClass::StraightLine
        } else if (self.kappa0 - self.kappa1).abs() <= ktol {
            DegenerateClass::CircularArc
        } else if r_zero {
            DegenerateClass::Clothoid
        } else if self.n1.abs() <= ktol {
            DegenerateClass::LogSpiral
        } else {
            DegenerateClass::GeneralGcs
        }
    }

    /// Arc length where the curvature changes sign, if it does so on `[0, S]`.
    pub fn inflection(&self) -> Option<f64> {
        if self.n1 == 0.0 {
            return None;
        }
        let s = -self.n0 / self.n1;
        // normalizes −0.0
        let s = s + 0.0;
        (0.0..=self.total_arc_length).contains(&s).then_some(s)
    }
}

/// A curvature function on `[0, S]`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "ProfileRepr", into = "ProfileRepr")]
pub enum CurvatureProfile {
    /// Circular arc (or a straight line when `kappa == 0`).
    Constant {
        kappa: f64,
        arc_length: f64,
    },
    /// Clothoid: curvature interpolates linearly between the end values.
    Linear {
        kappa0: f64,
        kappa1: f64,
        arc_length: f64,
    },
    /// `κ(s) = a·s² + b·s + κ0` with `b` chosen so that `κ(S) = κ1`.
    Quadratic {
        a: f64,
        kappa0: f64,
        kappa1: f64,
        arc_length: f64,
    },
    Gcs(GcsProfile),
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
enum ProfileRepr {
    Constant {
        kappa: f64,
        arc_length: f64,
    },
    Linear {
        kappa0: f64,
        kappa1: f64,
        arc_length: f64,
    },
    Quadratic {
        a: f64,
        kappa0: f64,
        kappa1: f64,
        arc_length: f64,
    },
    Gcs {
        kappa0: f64,
        kappa1: f64,
        arc_length: f64,
        r: f64,
    },
}

impl TryFrom<ProfileRepr> for CurvatureProfile {
    type Error = Error;

    fn try_from(repr: ProfileRepr) -> Result<Self> {
        match repr {
            ProfileRepr::Constant { kappa, arc_length } => Self::constant(kappa, arc_length),
            ProfileRepr::Linear {
                kappa0,
                kappa1,
                arc_length,
            } => Self::linear(kappa0, kappa1, arc_length),
            ProfileRepr::Quadratic {
                a,
                kappa0,
                kappa1,
                arc_length,
            } => Self::quadratic(a, kappa0, kappa1, arc_length),
            ProfileRepr::Gcs {
                kappa0,
                kappa1,
                arc_length,
                r,
            } => GcsProfile::new(kappa0, kappa1, arc_length, r).map(CurvatureProfile::Gcs),
        }
    }
}

impl From<CurvatureProfile> for ProfileRepr {
    fn from(p: CurvatureProfile) -> Self {
        match p {
            CurvatureProfile::Constant { kappa, arc_length } => {
                ProfileRepr::Constant { kappa, arc_length }
            }
            CurvatureProfile::Linear {
                kappa0,
                kappa1,
                arc_length,
            } => ProfileRepr::Linear {
                kappa0,
                kappa1,
                arc_length,
            },
            CurvatureProfile::Quadratic {
                a,
                kappa0,
                kappa1,
                arc_length,
            } => ProfileRepr::Quadratic {
                a,
                kappa0,
                kappa1,
                arc_length,
            },
            CurvatureProfile::Gcs(g) => ProfileRepr::Gcs {
                kappa0: g.kappa0,
                kappa1: g.kappa1,
                arc_length: g.total_arc_length,
                r: g.shape_factor,
            },
        }
    }
}

impl From<GcsProfile> for CurvatureProfile {
    fn from(g: GcsProfile) -> Self {
        CurvatureProfile::Gcs(g)
    }
}

impl CurvatureProfile {
    pub fn constant(kappa: f64, arc_length: f64) -> Result<Self> {
        check_finite("kappa", kappa)?;
        check_length(arc_length)?;
        Ok(CurvatureProfile::Constant { kappa, arc_length })
    }

    pub fn linear(kappa0: f64, kappa1: f64, arc_length: f64) -> Result<Self> {
        check_finite("kappa0", kappa0)?;
        check_finite("kappa1", kappa1)?;
        check_length(arc_length)?;
        Ok(CurvatureProfile::Linear {
            kappa0,
            kappa1,
            arc_length,
        })
    }

    pub fn quadratic(a: f64, kappa0: f64, kappa1: f64, arc_length: f64) -> Result<Self> {
        check_finite("a", a)?;
        check_finite("kappa0", kappa0)?;
        check_finite("kappa1", kappa1)?;
        check_length(arc_length)?;
        Ok(CurvatureProfile::Quadratic {
            a,
            kappa0,
            kappa1,
            arc_length,
        })
    }

    pub fn gcs(kappa0: f64, kappa1: f64, arc_length: f64, r: f64) -> Result<Self> {
        GcsProfile::new(kappa0, kappa1, arc_length, r).map(CurvatureProfile::Gcs)
    }

    /// Re-runs constructor validation; enum variants can be built directly.
    pub fn validate(&self) -> Result<()> {
        CurvatureProfile::try_from(ProfileRepr::from(*self)).map(|_| ())
    }

    pub fn arc_length(&self) -> f64 {
        match *self {
            CurvatureProfile::Constant { arc_length, .. }
            | CurvatureProfile::Linear { arc_length, .. }
            | CurvatureProfile::Quadratic { arc_length, .. } => arc_length,
            CurvatureProfile::Gcs(g) => g.total_arc_length,
        }
    }

    /// Short name of the profile family.
    pub fn kind(&self) -> &'static str {
        match self {
            CurvatureProfile::Constant { .. } => "constant",
            CurvatureProfile::Linear { .. } => "linear",
            CurvatureProfile::Quadratic { .. } => "quadratic",
            CurvatureProfile::Gcs(_) => "gcs",
        }
    }

    /// `max(|κ(0)|, |κ(S)|, 1/S)`.
    pub fn scale(&self) -> f64 {
        let s = self.arc_length();
        self.eval_kappa(0.0)
            .abs()
            .max(self.eval_kappa(s).abs())
            .max(1.0 / s)
    }

    /// The equivalent GCS segment, for the families that are special cases of it.
    pub fn as_gcs(&self) -> Option<GcsProfile> {
        match *self {
            CurvatureProfile::Gcs(g) => Some(g),
            CurvatureProfile::Constant { kappa, arc_length } => {
                GcsProfile::new(kappa, kappa, arc_length, 0.0).ok()
            }
            CurvatureProfile::Linear {
                kappa0,
                kappa1,
                arc_length,
            } => GcsProfile::new(kappa0, kappa1, arc_length, 0.0).ok(),
            CurvatureProfile::Quadratic {
                a: 0.0,
                kappa0,
                kappa1,
                arc_length,
            } => GcsProfile::new(kappa0, kappa1, arc_length, 0.0).ok(),
            CurvatureProfile::Quadratic { .. } => None,
        }
    }

    fn quadratic_b(a: f64, kappa0: f64, kappa1: f64, arc_length: f64) -> f64 {
        (kappa1 - kappa0 - a * arc_length * arc_length) / arc_length
    }

    pub(crate) fn eval_kappa(&self, s: f64) -> f64 {
        match *self {
            CurvatureProfile::Constant { kappa, .. } => kappa,
            CurvatureProfile::Linear {
                kappa0,
                kappa1,
                arc_length,
            } => {
                let u = s / arc_length;
                kappa0 * (1.0 - u) + kappa1 * u
            }
            CurvatureProfile::Quadratic {
                a,
                kappa0,
                kappa1,
                arc_length,
            } => {
                if s == arc_length {
                    return kappa1;
                }
                let b = Self::quadratic_b(a, kappa0, kappa1, arc_length);
                (a * s + b) * s + kappa0
            }
            CurvatureProfile::Gcs(g) => g.eval_kappa(s),
        }
    }

    pub(crate) fn eval_kappa_prime(&self, s: f64) -> f64 {
        match *self {
            CurvatureProfile::Constant { .. } => 0.0,
            CurvatureProfile::Linear {
                kappa0,
                kappa1,
                arc_length,
            } => (kappa1 - kappa0) / arc_length,
            CurvatureProfile::Quadratic {
                a,
                kappa0,
                kappa1,
                arc_length,
            } => 2.0 * a * s + Self::quadratic_b(a, kappa0, kappa1, arc_length),
            CurvatureProfile::Gcs(g) => g.eval_kappa_prime(s),
        }
    }

    pub(crate) fn eval_kappa_second(&self, s: f64) -> f64 {
        match *self {
            CurvatureProfile::Constant { .. } | CurvatureProfile::Linear { .. } => 0.0,
            CurvatureProfile::Quadratic { a, .. } => 2.0 * a,
            CurvatureProfile::Gcs(g) => g.eval_kappa_second(s),
        }
    }

    pub(crate) fn eval_theta(&self, s: f64) -> f64 {
        match *self {
            CurvatureProfile::Constant { kappa, .. } => kappa * s,
            CurvatureProfile::Linear {
                kappa0,
                kappa1,
                arc_length,
            } => kappa0 * s + (kappa1 - kappa0) * s * s / (2.0 * arc_length),
            CurvatureProfile::Quadratic {
                a,
                kappa0,
                kappa1,
                arc_length,
            } => {
                let b = Self::quadratic_b(a, kappa0, kappa1, arc_length);
                ((a / 3.0 * s + b / 2.0) * s + kappa0) * s
            }
            CurvatureProfile::Gcs(g) => g.eval_theta(s),
        }
    }

    /// Signed curvature κ(s).
    pub fn kappa(&self, s: f64) -> Result<f64> {
        check_s(s, self.arc_length())?;
        Ok(self.eval_kappa(s))
    }

    /// dκ/ds.
    pub fn kappa_prime(&self, s: f64) -> Result<f64> {
        check_s(s, self.arc_length())?;
        Ok(self.eval_kappa_prime(s))
    }

    /// d²κ/ds².
    pub fn kappa_second(&self, s: f64) -> Result<f64> {
        check_s(s, self.arc_length())?;
        Ok(self.eval_kappa_second(s))
    }

    /// Tangent angle θ(s) = ∫₀ˢ κ, exact, with θ(0) = 0.
    pub fn theta(&self, s: f64) -> Result<f64> {
        check_s(s, self.arc_length())?;
        Ok(self.eval_theta(s))
    }
}

/// Curvature at one arc length, as written to curvature-profile CSV files.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ProfileSample {
    pub s: f64,
    pub kappa: f64,
}

const PROFILE_HEADER: [&str; 2] = ["s", "kappa"];

impl CurvatureProfile {
    /// κ at `n ≥ 2` uniformly spaced arc lengths, ends included.
    pub fn sample(&self, n: usize) -> Vec<ProfileSample> {
        let n = n.max(2);
        let len = self.arc_length();
        (0..n)
            .map(|i| {
                let s = if i == n - 1 {
                    len
                } else {
                    len * i as f64 / (n - 1) as f64
                };
                ProfileSample {
                    s,
                    kappa: self.eval_kappa(s),
                }
            })
            .collect()
    }
}

pub fn profile_samples_to_csv(samples: &[ProfileSample]) -> String {
    let mut out = PROFILE_HEADER.join(",");
    out.push('\n');
    for p in samples {
        out.push_str(&crate::export::format_f64(p.s));
        out.push(',');
        out.push_str(&crate::export::format_f64(p.kappa));
        out.push('\n');
    }
    out
}

pub fn profile_samples_from_csv<R: std::io::Read>(reader: R) -> Result<Vec<ProfileSample>> {
    let mut rdr = csv::Reader::from_reader(reader);
    if rdr.headers()?.iter().ne(PROFILE_HEADER.iter().copied()) {
        return Err(Error::domain("unexpected curvature CSV header"));
    }
    Ok(rdr.deserialize().collect::<std::result::Result<_, _>>()?)
}
