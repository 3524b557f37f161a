// Copyright 2026 the Cornu Authors
// SPDX-License-Identifier: Apache-2.0

//! Curve synthesis: positions from a curvature profile.
//!
//! A curve with tangent angle θ(s) = θ0 + ∫₀ˢ κ has position
//! `(x0 + ∫₀ˢ cos θ, y0 + ∫₀ˢ sin θ)`. The integrals are computed once for the
//! pose-free curve (θ0 = 0, origin) and then rotated and translated, so
//! changing the pose moves the samples rigidly to rounding accuracy.

use std::f64::consts::FRAC_PI_2;
use std::io::Read;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::export::{format_f64, Series, SvgPlot};
use crate::profiles::CurvatureProfile;
use crate::quadrature::{adaptive_simpson, GaussLegendre};

/// Start position and initial tangent angle.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Pose {
    pub x0: f64,
    pub y0: f64,
    pub theta0: f64,
}

impl Pose {
    pub fn new(x0: f64, y0: f64, theta0: f64) -> Self {
        Pose { x0, y0, theta0 }
    }

    pub fn validate(&self) -> Result<()> {
        if self.x0.is_finite() && self.y0.is_finite() && self.theta0.is_finite() {
            Ok(())
        } else {
            Err(Error::domain(format!("pose must be finite, got {self:?}")))
        }
    }

    /// Maps a point of the pose-free curve into this pose's frame.
    fn place(&self, x: f64, y: f64) -> (f64, f64) {
        let (sin, cos) = self.theta0.sin_cos();
        (self.x0 + cos * x - sin * y, self.y0 + sin * x + cos * y)
    }
}

/// Integration rule used for the position integrals.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Scheme {
    /// Adaptive Simpson with Richardson error estimate; honours `abs_tol`.
    AdaptiveSimpson,
    /// Composite Gauss–Legendre with panels sized by total turning, each
    /// bisected until it agrees with its two halves. Used as an independent
    /// cross-check.
    GaussLegendre { order: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct QuadratureConfig {
    /// Absolute tolerance on each coordinate integral.
    pub abs_tol: f64,
    /// Recursion depth cap for adaptive subdivision.
    pub max_subdivisions: usize,
    /// Number of output samples, at least 2.
    pub samples_per_curve: usize,
    pub scheme: Scheme,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        QuadratureConfig {
            abs_tol: 1e-10,
            max_subdivisions: 40,
            samples_per_curve: 256,
            scheme: Scheme::AdaptiveSimpson,
        }
    }
}

impl QuadratureConfig {
    pub fn with_samples(mut self, n: usize) -> Self {
        self.samples_per_curve = n;
        self
    }

    pub fn with_scheme(mut self, scheme: Scheme) -> Self {
        self.scheme = scheme;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.abs_tol > 0.0 && self.abs_tol.is_finite()) {
            return Err(Error::domain(format!(
                "abs_tol must be positive and finite, got {}",
                self.abs_tol
            )));
        }
        if self.max_subdivisions < 1 {
            return Err(Error::domain("max_subdivisions must be at least 1"));
        }
        if self.samples_per_curve < 2 {
            return Err(Error::domain(format!(
                "samples_per_curve must be at least 2, got {}",
                self.samples_per_curve
            )));
        }
        if let Scheme::GaussLegendre { order } = self.scheme {
            if order == 0 {
                return Err(Error::domain("Gauss-Legendre order must be at least 1"));
            }
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct CurveSample {
    pub s: f64,
    pub x: f64,
    pub y: f64,
    pub theta: f64,
    pub kappa: f64,
}

/// Unit tangent and left normal at a sample.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Frame {
    pub tangent: [f64; 2],
    pub normal: [f64; 2],
}

/// Final position and tangent angle of a synthesized curve.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct EndState {
    pub x: f64,
    pub y: f64,
    pub theta: f64,
}

/// An arc-length sampled planar curve.
#[derive(Clone, Debug, PartialEq)]
pub struct PlanarCurve {
    samples: Vec<CurveSample>,
    profile: Option<CurvatureProfile>,
}

const CSV_HEADER: [&str; 5] = ["s", "x", "y", "theta", "kappa"];

impl PlanarCurve {
    /// Wraps externally produced samples. They must start at `s = 0` and be
    /// strictly increasing in `s`.
    pub fn from_samples(samples: Vec<CurveSample>) -> Result<Self> {
        if samples.len() < 2 {
            return Err(Error::domain("a curve needs at least two samples"));
        }
        if samples[0].s != 0.0 {
            return Err(Error::domain("first sample must be at s = 0"));
        }
        for w in samples.windows(2) {
            if !(w[1].s > w[0].s) {
                return Err(Error::domain(format!(
                    "samples must be strictly increasing in s (at s = {})",
                    w[1].s
                )));
            }
        }
        if samples.iter().any(|p| {
            ![p.s, p.x, p.y, p.theta, p.kappa]
                .iter()
                .all(|v| v.is_finite())
        }) {
            return Err(Error::domain("samples must be finite"));
        }
        Ok(PlanarCurve {
            samples,
            profile: None,
        })
    }

    pub fn samples(&self) -> &[CurveSample] {
        &self.samples
    }

    /// The profile this curve was synthesized from, when known.
    pub fn profile(&self) -> Option<&CurvatureProfile> {
        self.profile.as_ref()
    }

    pub fn arc_length(&self) -> f64 {
        self.samples.last().map_or(0.0, |p| p.s)
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    pub fn end_state(&self) -> EndState {
        let last = self
            .samples
            .last()
            .expect("curves have at least two samples");
        EndState {
            x: last.x,
            y: last.y,
            theta: last.theta,
        }
    }

    /// Total length of the sample polyline.
    pub fn polyline_length(&self) -> f64 {
        self.samples
            .windows(2)
            .map(|w| (w[1].x - w[0].x).hypot(w[1].y - w[0].y))
            .sum()
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::with_capacity(self.samples.len() * 120);
        out.push_str(&CSV_HEADER.join(","));
        out.push('\n');
        for p in &self.samples {
            let row = [p.s, p.x, p.y, p.theta, p.kappa].map(format_f64);
            out.push_str(&row.join(","));
            out.push('\n');
        }
        out
    }

    /// Parses the output of [`PlanarCurve::to_csv`].
    pub fn from_csv<R: Read>(reader: R) -> Result<Self> {
        let mut rdr = csv::Reader::from_reader(reader);
        let headers = rdr.headers()?.clone();
        if headers.iter().ne(CSV_HEADER.iter().copied()) {
            return Err(Error::domain(format!(
                "unexpected curve CSV header {:?}",
                headers.iter().collect::<Vec<_>>()
            )));
        }
        let samples = rdr
            .deserialize::<CurveSample>()
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Self::from_samples(samples)
    }

    pub fn to_svg(&self) -> String {
        let mut plot = SvgPlot::new();
        plot.series.push(Series::new(
            self.samples.iter().map(|p| [p.x, p.y]).collect(),
        ));
        plot.render()
    }
}

/// Unit tangent `(cos θ, sin θ)` and normal `(−sin θ, cos θ)` per sample.
pub fn frames(curve: &PlanarCurve) -> Vec<Frame> {
    curve
        .samples
        .iter()
        .map(|p| {
            let (sin, cos) = p.theta.sin_cos();
            Frame {
                tangent: [cos, sin],
                normal: [-sin, cos],
            }
        })
        .collect()
}

/// Integrates `(cos θ, sin θ)` of the pose-free curve over `[a, b]`.
struct PositionIntegrator<'a> {
    profile: &'a CurvatureProfile,
    config: &'a QuadratureConfig,
    rule: Option<GaussLegendre>,
}

impl<'a> PositionIntegrator<'a> {
    fn new(profile: &'a CurvatureProfile, config: &'a QuadratureConfig) -> Self {
        let rule = match config.scheme {
            Scheme::GaussLegendre { order } => Some(GaussLegendre::new(order)),
            Scheme::AdaptiveSimpson => None,
        };
        PositionIntegrator {
            profile,
            config,
            rule,
        }
    }

    fn integrate(&self, a: f64, b: f64, tol: f64) -> Result<[f64; 2]> {
        let profile = self.profile;
        let f = |t: f64| {
            let (sin, cos) = profile.eval_theta(t).sin_cos();
            [cos, sin]
        };
        match &self.rule {
            None => {
                // Error estimates are unreliable across a full oscillation,
                // so any interval turning more than a quarter turn is split.
                let guard = |lo: f64, hi: f64| {
                    (profile.eval_theta(hi) - profile.eval_theta(lo)).abs() > FRAC_PI_2
                };
                let res = adaptive_simpson(&f, a, b, tol, self.config.max_subdivisions, &guard);
                match res.worst {
                    None => Ok(res.value),
                    Some(w) => Err(Error::Quadrature {
                        a: w.a,
                        b: w.b,
                        estimate: w.estimate,
                        tolerance: w.tolerance,
                    }),
                }
            }
            Some(rule) => {
                let turning = (profile.eval_theta(b) - profile.eval_theta(a)).abs();
                let panels = ((turning / (std::f64::consts::PI / 8.0)).ceil() as usize).max(1);
                let width = (b - a) / panels as f64;
                let mut sum = [0.0, 0.0];
                for i in 0..panels {
                    let lo = a + i as f64 * width;
                    let hi = if i == panels - 1 { b } else { lo + width };
                    let whole = rule.integrate(&f, lo, hi);
                    let d = self.refine_gl(rule, &f, lo, hi, whole, tol / panels as f64, 0)?;
                    sum[0] += d[0];
                    sum[1] += d[1];
                }
                Ok(sum)
            }
        }
    }

    /// Bisects a Gauss–Legendre panel until it agrees with its two halves.
    #[allow(clippy::too_many_arguments)]
    fn refine_gl(
        &self,
        rule: &GaussLegendre,
        f: &impl Fn(f64) -> [f64; 2],
        a: f64,
        b: f64,
        whole: [f64; 2],
        tol: f64,
        depth: usize,
    ) -> Result<[f64; 2]> {
        let m = 0.5 * (a + b);
        let left = rule.integrate(f, a, m);
        let right = rule.integrate(f, m, b);
        let halves = [left[0] + right[0], left[1] + right[1]];
        let err = (halves[0] - whole[0])
            .abs()
            .max((halves[1] - whole[1]).abs());
        let floor = 8.0 * f64::EPSILON * (b - a);
        if err <= tol.max(floor) {
            return Ok(halves);
        }
        if depth >= self.config.max_subdivisions || !(m > a && m < b) {
            return Err(Error::Quadrature {
                a,
                b,
                estimate: err,
                tolerance: tol,
            });
        }
        let l = self.refine_gl(rule, f, a, m, left, 0.5 * tol, depth + 1)?;
        let r = self.refine_gl(rule, f, m, b, right, 0.5 * tol, depth + 1)?;
        Ok([l[0] + r[0], l[1] + r[1]])
    }
}

fn sample_positions(arc_length: f64, n: usize) -> Vec<f64> {
    let last = (n - 1) as f64;
    (0..n)
        .map(|i| {
            if i == n - 1 {
                arc_length
            } else {
                arc_length * i as f64 / last
            }
        })
        .collect()
}

/// Samples the curve with the given curvature profile at `samples_per_curve`
/// uniformly spaced arc lengths.
///
/// Each sample's position extends the previous one by the integral over the
/// gap, with per-gap tolerance `abs_tol / (N − 1)` so the accumulated error
/// on every coordinate stays within `abs_tol`.
pub fn synthesize(
    profile: &CurvatureProfile,
    pose: &Pose,
    config: &QuadratureConfig,
) -> Result<PlanarCurve> {
    profile.validate()?;
    pose.validate()?;
    config.validate()?;

    let n = config.samples_per_curve;
    let arc_length = profile.arc_length();
    let integrator = PositionIntegrator::new(profile, config);
    let gap_tol = config.abs_tol / (n - 1) as f64;

    let positions = sample_positions(arc_length, n);
    let mut samples = Vec::with_capacity(n);
    let mut acc = [0.0f64, 0.0f64];
    let mut prev = 0.0;
    for &s in &positions {
        if s > prev {
            let d = integrator.integrate(prev, s, gap_tol)?;
            acc[0] += d[0];
            acc[1] += d[1];
        }
        prev = s;
        let (x, y) = pose.place(acc[0], acc[1]);
        samples.push(CurveSample {
            s,
            x,
            y,
            theta: pose.theta0 + profile.eval_theta(s),
            kappa: profile.eval_kappa(s),
        });
    }
    Ok(PlanarCurve {
        samples,
        profile: Some(*profile),
    })
}

/// Final state of the curve, integrated over `[0, S]` in one pass.
pub fn endpoint(
    profile: &CurvatureProfile,
    pose: &Pose,
    config: &QuadratureConfig,
) -> Result<EndState> {
    profile.validate()?;
    pose.validate()?;
    config.validate()?;
    let arc_length = profile.arc_length();
    let d = PositionIntegrator::new(profile, config).integrate(0.0, arc_length, config.abs_tol)?;
    let (x, y) = pose.place(d[0], d[1]);
    Ok(EndState {
        x,
        y,
        theta: pose.theta0 + profile.eval_theta(arc_length),
    })
}
