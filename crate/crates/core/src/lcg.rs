// Copyright 2026 the Cornu Authors
// SPDX-License-Identifier: Apache-2.0

//! Logarithmic curvature graphs (LCG) and their gradients.
//!
//! For a curve with radius of curvature ρ(t) and arc length s(t), the LCG is
//! the graph of `log|ρ s′/ρ′|` against `log|ρ|`. Its slope is
//!
//! ```text
//! gradient(t) = 1 + ρ/ρ′² · (ρ′ s″/s′ − ρ″)
//! ```
//!
//! For a GCS segment both the graph and the gradient have closed forms, and
//! the gradient is affine in arc length: `gradient(s) = A·s + B`. A curve
//! whose gradient is constant (`A = 0`) is log-aesthetic; a GCS with `A ≠ 0`
//! still has a linear gradient.

use std::io::Read;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result, SingularCause};
use crate::export::format_f64;
use crate::profiles::{CurvatureProfile, GcsProfile, ZERO_CURVATURE_TOL};
use crate::synthesis::PlanarCurve;

/// A radius-of-curvature function and its derivatives along a parameter `t`.
///
/// `speed` is ds/dt; it defaults to 1 (arc-length parameterization).
pub trait RadiusOfCurvature {
    fn rho(&self, t: f64) -> f64;
    fn rho_prime(&self, t: f64) -> f64;
    fn rho_second(&self, t: f64) -> f64;
    fn speed(&self, _t: f64) -> f64 {
        1.0
    }
    fn speed_prime(&self, _t: f64) -> f64 {
        0.0
    }
}

type ScalarFn<'a> = Box<dyn Fn(f64) -> f64 + 'a>;

/// [`RadiusOfCurvature`] assembled from closures.
pub struct ParametricRadius<'a> {
    rho: ScalarFn<'a>,
    rho_prime: ScalarFn<'a>,
    rho_second: ScalarFn<'a>,
    speed: ScalarFn<'a>,
    speed_prime: ScalarFn<'a>,
}

impl<'a> ParametricRadius<'a> {
    pub fn new(
        rho: impl Fn(f64) -> f64 + 'a,
        rho_prime: impl Fn(f64) -> f64 + 'a,
        rho_second: impl Fn(f64) -> f64 + 'a,
    ) -> Self {
        ParametricRadius {
            rho: Box::new(rho),
            rho_prime: Box::new(rho_prime),
            rho_second: Box::new(rho_second),
            speed: Box::new(|_| 1.0),
            speed_prime: Box::new(|_| 0.0),
        }
    }

    /// Sets s′(t) and s″(t) for a non-arc-length parameterization.
    pub fn with_speed(
        mut self,
        speed: impl Fn(f64) -> f64 + 'a,
        speed_prime: impl Fn(f64) -> f64 + 'a,
    ) -> Self {
        self.speed = Box::new(speed);
        self.speed_prime = Box::new(speed_prime);
        self
    }
}

impl RadiusOfCurvature for ParametricRadius<'_> {
    fn rho(&self, t: f64) -> f64 {
        (self.rho)(t)
    }
    fn rho_prime(&self, t: f64) -> f64 {
        (self.rho_prime)(t)
    }
    fn rho_second(&self, t: f64) -> f64 {
        (self.rho_second)(t)
    }
    fn speed(&self, t: f64) -> f64 {
        (self.speed)(t)
    }
    fn speed_prime(&self, t: f64) -> f64 {
        (self.speed_prime)(t)
    }
}

/// The GCS radius of curvature `ρ(t) = (rt + S)/((κ1 − κ0 + rκ1)t + κ0S)`,
/// with `s(t) = t`, and its exact derivatives.
#[derive(Clone, Copy, Debug)]
pub struct GcsRadius<'a>(pub &'a GcsProfile);

impl GcsRadius<'_> {
    fn numerator_constant(&self) -> f64 {
        // ρ′ = c / (n1 t + n0)²
        let g = self.0;
        g.arc_length() * (1.0 + g.r()) * (g.kappa0() - g.kappa1())
    }

    fn den(&self, t: f64) -> f64 {
        self.0.n1() * t + self.0.n0()
    }
}

impl RadiusOfCurvature for GcsRadius<'_> {
    fn rho(&self, t: f64) -> f64 {
        (self.0.r() * t + self.0.arc_length()) / self.den(t)
    }

    fn rho_prime(&self, t: f64) -> f64 {
        let d = self.den(t);
        self.numerator_constant() / (d * d)
    }

    fn rho_second(&self, t: f64) -> f64 {
        let d = self.den(t);
        -2.0 * self.numerator_constant() * self.0.n1() / (d * d * d)
    }
}

/// Any profile viewed as `ρ = 1/κ` in arc length. Curvatures below
/// `1e-12 · scale` count as inflections (ρ = ∞).
impl RadiusOfCurvature for CurvatureProfile {
    fn rho(&self, t: f64) -> f64 {
        let k = self.eval_kappa(t);
        if k.abs() < ZERO_CURVATURE_TOL * self.scale() {
            f64::INFINITY
        } else {
            1.0 / k
        }
    }

    fn rho_prime(&self, t: f64) -> f64 {
        let k = self.eval_kappa(t);
        -self.eval_kappa_prime(t) / (k * k)
    }

    fn rho_second(&self, t: f64) -> f64 {
        let k = self.eval_kappa(t);
        let kp = self.eval_kappa_prime(t);
        2.0 * kp * kp / (k * k * k) - self.eval_kappa_second(t) / (k * k)
    }
}

/// One point of the LCG.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct LcgPoint {
    pub t: f64,
    pub log_rho: f64,
    pub log_freq: f64,
}

/// A parameter value left out of an LCG, with the reason.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct SingularPoint {
    pub t: f64,
    pub cause: SingularCause,
}

/// LCG points over a grid plus diagnostics for the grid values that were skipped.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct LcgTrace {
    pub points: Vec<LcgPoint>,
    pub skipped: Vec<SingularPoint>,
}

const LCG_HEADER: [&str; 3] = ["t", "log_rho", "log_freq"];
const GRADIENT_HEADER: [&str; 2] = ["s", "gradient"];

fn check_header<R: Read>(rdr: &mut csv::Reader<R>, expected: &[&str]) -> Result<()> {
    let headers = rdr.headers()?;
    if headers.iter().ne(expected.iter().copied()) {
        return Err(Error::domain(format!(
            "unexpected CSV header {:?}, expected {expected:?}",
            headers.iter().collect::<Vec<_>>()
        )));
    }
    Ok(())
}

impl LcgTrace {
    pub fn to_csv(&self) -> String {
        let mut out = LCG_HEADER.join(",");
        out.push('\n');
        for p in &self.points {
            out.push_str(&[p.t, p.log_rho, p.log_freq].map(format_f64).join(","));
            out.push('\n');
        }
        out
    }

    /// Reads LCG points written by [`LcgTrace::to_csv`]; diagnostics are not stored.
    pub fn from_csv<R: Read>(reader: R) -> Result<Vec<LcgPoint>> {
        let mut rdr = csv::Reader::from_reader(reader);
        check_header(&mut rdr, &LCG_HEADER)?;
        Ok(rdr.deserialize().collect::<std::result::Result<_, _>>()?)
    }
}

fn check_grid(grid: &[f64]) -> Result<()> {
    if grid.iter().any(|t| !t.is_finite()) {
        return Err(Error::domain("parameter grid must be finite"));
    }
    if grid.windows(2).any(|w| !(w[1] > w[0])) {
        return Err(Error::domain("parameter grid must be strictly increasing"));
    }
    Ok(())
}

fn lcg_point<F: RadiusOfCurvature + ?Sized>(
    f: &F,
    t: f64,
) -> std::result::Result<LcgPoint, SingularCause> {
    let rho = f.rho(t);
    if rho == 0.0 || rho.is_infinite() {
        return Err(SingularCause::Inflection);
    }
    let rho_prime = f.rho_prime(t);
    if rho_prime == 0.0 {
        return Err(SingularCause::RhoPrimeZero);
    }
    let speed = f.speed(t);
    if speed == 0.0 {
        return Err(SingularCause::SpeedZero);
    }
    let log_rho = rho.abs().ln();
    let log_freq = (rho * speed / rho_prime).abs().ln();
    if log_rho.is_finite() && log_freq.is_finite() {
        Ok(LcgPoint {
            t,
            log_rho,
            log_freq,
        })
    } else {
        Err(SingularCause::NonFinite)
    }
}

/// LCG points `(log|ρ|, log|ρ s′/ρ′|)` on a strictly increasing grid.
///
/// Grid values where ρ′ = 0, ρ = 0, ρ is unbounded or s′ = 0 are skipped and
/// listed in [`LcgTrace::skipped`].
pub fn lcg_numeric<F: RadiusOfCurvature + ?Sized>(f: &F, grid: &[f64]) -> Result<LcgTrace> {
    check_grid(grid)?;
    let mut trace = LcgTrace::default();
    for &t in grid {
        match lcg_point(f, t) {
            Ok(p) => trace.points.push(p),
            Err(cause) => trace.skipped.push(SingularPoint { t, cause }),
        }
    }
    Ok(trace)
}

/// The LCG gradient from ρ, its derivatives and the parameter speed.
pub fn gradient_from_values(
    rho: f64,
    rho_prime: f64,
    rho_second: f64,
    speed: f64,
    speed_prime: f64,
) -> std::result::Result<f64, SingularCause> {
    if rho == 0.0 || rho.is_infinite() {
        return Err(SingularCause::Inflection);
    }
    if rho_prime == 0.0 {
        return Err(SingularCause::RhoPrimeZero);
    }
    if speed == 0.0 {
        return Err(SingularCause::SpeedZero);
    }
    let g = 1.0 + rho / (rho_prime * rho_prime) * (rho_prime * speed_prime / speed - rho_second);
    if g.is_finite() {
        Ok(g)
    } else {
        Err(SingularCause::NonFinite)
    }
}

/// Slope of the LCG at `t`.
pub fn lcg_gradient_numeric<F: RadiusOfCurvature + ?Sized>(f: &F, t: f64) -> Result<f64> {
    gradient_from_values(
        f.rho(t),
        f.rho_prime(t),
        f.rho_second(t),
        f.speed(t),
        f.speed_prime(t),
    )
    .map_err(|cause| Error::SingularPoint { t, cause })
}

fn require_distinct_ends(profile: &GcsProfile) -> Result<()> {
    if (profile.kappa0() - profile.kappa1()).abs() <= ZERO_CURVATURE_TOL * profile.scale() {
        Err(Error::SingularProfile(format!(
            "kappa0 = kappa1 = {}: the closed-form LCG divides by kappa0 - kappa1",
            profile.kappa0()
        )))
    } else {
        Ok(())
    }
}

fn check_t(profile: &GcsProfile, t: f64) -> Result<()> {
    if t.is_finite() && (0.0..=profile.arc_length()).contains(&t) {
        Ok(())
    } else {
        Err(Error::domain(format!(
            "t = {t} outside [0, {}]",
            profile.arc_length()
        )))
    }
}

/// Closed-form LCG point of a GCS segment at arc length `t`.
pub fn lcg_gcs_closed_form(profile: &GcsProfile, t: f64) -> Result<LcgPoint> {
    require_distinct_ends(profile)?;
    check_t(profile, t)?;
    let (k0, k1, s, r) = (
        profile.kappa0(),
        profile.kappa1(),
        profile.arc_length(),
        profile.r(),
    );
    if profile.kappa(t)?.abs() < ZERO_CURVATURE_TOL * profile.scale() {
        return Err(Error::SingularPoint {
            t,
            cause: SingularCause::Inflection,
        });
    }
    let num = r * t + s;
    let den = (k1 - k0 + r * k1) * t + k0 * s;
    let log_rho = (num / den).abs().ln();
    let log_freq = ((s + r * t) * (s * k0 + t * (-k0 + k1 + r * k1)) / ((1.0 + r) * s * (k0 - k1)))
        .abs()
        .ln();
    if !(log_rho.is_finite() && log_freq.is_finite()) {
        return Err(Error::SingularPoint {
            t,
            cause: SingularCause::NonFinite,
        });
    }
    Ok(LcgPoint {
        t,
        log_rho,
        log_freq,
    })
}

/// Closed-form LCG of a GCS segment on a grid, with singular grid values reported.
pub fn gcs_lcg_trace(profile: &GcsProfile, grid: &[f64]) -> Result<LcgTrace> {
    require_distinct_ends(profile)?;
    check_grid(grid)?;
    let mut trace = LcgTrace::default();
    for &t in grid {
        match lcg_gcs_closed_form(profile, t) {
            Ok(p) => trace.points.push(p),
            Err(Error::SingularPoint { t, cause }) => {
                trace.skipped.push(SingularPoint { t, cause })
            }
            Err(e) => return Err(e),
        }
    }
    Ok(trace)
}

/// Closed-form LCG gradient of a GCS segment at arc length `t`.
pub fn gradient_gcs(profile: &GcsProfile, t: f64) -> Result<f64> {
    require_distinct_ends(profile)?;
    check_t(profile, t)?;
    let (k0, k1, s, r) = (
        profile.kappa0(),
        profile.kappa1(),
        profile.arc_length(),
        profile.r(),
    );
    Ok(
        (((-1.0 + r) * s - 2.0 * r * t) * k0 + (1.0 + r) * (s + 2.0 * r * t) * k1)
            / ((1.0 + r) * s * (k0 - k1)),
    )
}

/// `gradient(s) = A·s + B` on `[domain[0], domain[1]]`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct LcgLine {
    pub slope_a: f64,
    pub intercept_b: f64,
    pub domain: [f64; 2],
}

impl LcgLine {
    pub fn eval(&self, s: f64) -> f64 {
        self.slope_a * s + self.intercept_b
    }

    /// Largest `|gradient(t) − line(t)|` over `samples` equally spaced points
    /// of the domain, skipping points where `gradient` is undefined.
    pub fn max_residual(&self, samples: usize, gradient: impl Fn(f64) -> Result<f64>) -> f64 {
        let [lo, hi] = self.domain;
        let n = samples.max(2);
        (0..n)
            .map(|i| {
                let t = if i == n - 1 {
                    hi
                } else {
                    lo + (hi - lo) * i as f64 / (n - 1) as f64
                };
                gradient(t).map_or(0.0, |g| (g - self.eval(t)).abs())
            })
            .fold(0.0, f64::max)
    }
}

/// Slope and intercept of the (affine) GCS gradient.
pub fn gradient_line(profile: &GcsProfile) -> Result<LcgLine> {
    require_distinct_ends(profile)?;
    let (k0, k1, s, r) = (
        profile.kappa0(),
        profile.kappa1(),
        profile.arc_length(),
        profile.r(),
    );
    let slope_a = 2.0 * r * (-k0 + k1 + r * k1) / ((1.0 + r) * s * (k0 - k1));
    let intercept_b = 2.0 * r * k0 / ((1.0 + r) * (k0 - k1)) - 1.0;
    Ok(LcgLine {
        slope_a,
        intercept_b,
        domain: [0.0, s],
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum AestheticClass {
    /// Constant LCG gradient.
    #[serde(rename = "log_aesthetic")]
    LogAesthetic,
    /// Linear, non-constant LCG gradient.
    #[serde(rename = "gcs")]
    GcsClass,
    /// The gradient is not a straight line in arc length.
    #[serde(rename = "other")]
    Other,
}

impl AestheticClass {
    pub fn as_str(self) -> &'static str {
        match self {
            AestheticClass::LogAesthetic => "log_aesthetic",
            AestheticClass::GcsClass => "gcs",
            AestheticClass::Other => "other",
        }
    }
}

/// Thresholds for [`classify_aesthetic`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AestheticTolerances {
    /// Largest |A| still read as a constant gradient (per unit length).
    pub tol_a: f64,
    /// Largest line-fit residual still read as a linear gradient.
    pub tol_fit: f64,
}

impl AestheticTolerances {
    /// For gradients evaluated from closed forms on a segment of length `s`.
    pub fn closed_form(s: f64) -> Self {
        AestheticTolerances {
            tol_a: 1e-6 / s,
            tol_fit: 1e-6,
        }
    }

    /// For gradients estimated from sampled curves.
    pub fn sampled(s: f64) -> Self {
        AestheticTolerances {
            tol_a: 1e-2 / s,
            tol_fit: 1e-2,
        }
    }
}

pub fn classify_aesthetic(
    line: &LcgLine,
    residual: f64,
    tol: AestheticTolerances,
) -> AestheticClass {
    if !(residual <= tol.tol_fit) {
        AestheticClass::Other
    } else if line.slope_a.abs() <= tol.tol_a {
        AestheticClass::LogAesthetic
    } else {
        AestheticClass::GcsClass
    }
}

/// JSON record of a fitted or closed-form gradient line.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct LineRecord {
    #[serde(rename = "A")]
    pub a: f64,
    #[serde(rename = "B")]
    pub b: f64,
    pub domain: [f64; 2],
    pub residual: f64,
    pub class: AestheticClass,
}

impl LineRecord {
    pub fn new(line: &LcgLine, residual: f64, class: AestheticClass) -> Self {
        LineRecord {
            a: line.slope_a,
            b: line.intercept_b,
            domain: line.domain,
            residual,
            class,
        }
    }

    pub fn line(&self) -> LcgLine {
        LcgLine {
            slope_a: self.a,
            intercept_b: self.b,
            domain: self.domain,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct GradientSample {
    pub s: f64,
    pub gradient: f64,
}

pub fn gradient_trace_to_csv(trace: &[GradientSample]) -> String {
    let mut out = GRADIENT_HEADER.join(",");
    out.push('\n');
    for g in trace {
        out.push_str(&format_f64(g.s));
        out.push(',');
        out.push_str(&format_f64(g.gradient));
        out.push('\n');
    }
    out
}

pub fn gradient_trace_from_csv<R: Read>(reader: R) -> Result<Vec<GradientSample>> {
    let mut rdr = csv::Reader::from_reader(reader);
    check_header(&mut rdr, &GRADIENT_HEADER)?;
    Ok(rdr.deserialize().collect::<std::result::Result<_, _>>()?)
}

/// Ordinary least-squares line through `(s, gradient)` pairs, with the
/// largest absolute residual.
pub fn fit_line(points: &[GradientSample], domain: [f64; 2]) -> Result<(LcgLine, f64)> {
    if points.len() < 2 {
        return Err(Error::DegenerateData(format!(
            "need at least two gradient values to fit a line, got {}",
            points.len()
        )));
    }
    let n = points.len() as f64;
    let mean_s = points.iter().map(|p| p.s).sum::<f64>() / n;
    let mean_g = points.iter().map(|p| p.gradient).sum::<f64>() / n;
    let (mut sxx, mut sxy) = (0.0, 0.0);
    for p in points {
        let ds = p.s - mean_s;
        sxx += ds * ds;
        sxy += ds * (p.gradient - mean_g);
    }
    if sxx == 0.0 {
        return Err(Error::DegenerateData(
            "gradient values share one arc length".into(),
        ));
    }
    let slope_a = sxy / sxx;
    let line = LcgLine {
        slope_a,
        intercept_b: mean_g - slope_a * mean_s,
        domain,
    };
    let residual = points
        .iter()
        .map(|p| (p.gradient - line.eval(p.s)).abs())
        .fold(0.0, f64::max);
    Ok((line, residual))
}

/// LCG gradient estimated from a sampled curve, with its least-squares line.
#[derive(Clone, Debug, PartialEq)]
pub struct SampledGradient {
    /// Gradient at every sample where it is defined, boundaries included.
    pub trace: Vec<GradientSample>,
    /// Fit over interior samples only.
    pub line: LcgLine,
    pub residual: f64,
}

/// Estimates the LCG gradient along a uniformly sampled curve.
///
/// κ′ and κ″ come from second-order central differences of the sampled
/// curvature (one-sided second-order stencils at the two ends); ρ = 1/κ and
/// its derivatives follow by the chain rule, and the gradient is evaluated
/// with s′ = 1, s″ = 0.
pub fn gradient_from_samples(curve: &PlanarCurve) -> Result<SampledGradient> {
    let samples = curve.samples();
    let n = samples.len();
    if n < 7 {
        return Err(Error::DegenerateData(format!(
            "need at least 7 samples, got {n}"
        )));
    }
    let h = samples[1].s - samples[0].s;
    for w in samples.windows(2) {
        if ((w[1].s - w[0].s) - h).abs() > 1e-6 * h {
            return Err(Error::domain(
                "samples must be uniformly spaced in arc length",
            ));
        }
    }
    let kappa: Vec<f64> = samples.iter().map(|p| p.kappa).collect();
    let scale = kappa
        .iter()
        .fold(1.0 / curve.arc_length(), |m, k| m.max(k.abs()));
    let total = kappa[n - 1] - kappa[0];
    if kappa
        .windows(2)
        .all(|w| (w[1] - w[0]).abs() <= ZERO_CURVATURE_TOL * scale)
    {
        return Err(Error::DegenerateData(
            "curvature is constant, so rho' = 0 everywhere".into(),
        ));
    }
    if kappa.windows(2).any(|w| !((w[1] - w[0]) * total > 0.0)) {
        return Err(Error::DegenerateData(
            "curvature is not strictly monotone (interior extremum)".into(),
        ));
    }

    let derivs = |i: usize| -> (f64, f64) {
        let k = &kappa;
        if i == 0 {
            (
                (-3.0 * k[0] + 4.0 * k[1] - k[2]) / (2.0 * h),
                (2.0 * k[0] - 5.0 * k[1] + 4.0 * k[2] - k[3]) / (h * h),
            )
        } else if i == n - 1 {
            (
                (3.0 * k[i] - 4.0 * k[i - 1] + k[i - 2]) / (2.0 * h),
                (2.0 * k[i] - 5.0 * k[i - 1] + 4.0 * k[i - 2] - k[i - 3]) / (h * h),
            )
        } else {
            (
                (k[i + 1] - k[i - 1]) / (2.0 * h),
                (k[i + 1] - 2.0 * k[i] + k[i - 1]) / (h * h),
            )
        }
    };

    let mut trace = Vec::with_capacity(n);
    let mut interior = Vec::with_capacity(n);
    for (i, p) in samples.iter().enumerate() {
        let k = kappa[i];
        if k.abs() < ZERO_CURVATURE_TOL * scale {
            continue;
        }
        let (kp, kpp) = derivs(i);
        let rho = 1.0 / k;
        let rho_prime = -kp / (k * k);
        let rho_second = 2.0 * kp * kp / (k * k * k) - kpp / (k * k);
        if let Ok(g) = gradient_from_values(rho, rho_prime, rho_second, 1.0, 0.0) {
            let gs = GradientSample {
                s: p.s,
                gradient: g,
            };
            trace.push(gs);
            if i != 0 && i != n - 1 {
                interior.push(gs);
            }
        }
    }
    let (line, residual) = fit_line(&interior, [0.0, curve.arc_length()])?;
    Ok(SampledGradient {
        trace,
        line,
        residual,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::synthesis::{synthesize, Pose, QuadratureConfig};
    use std::f64::consts::PI;

    fn grid(lo: f64, hi: f64, n: usize) -> Vec<f64> {
        (0..n)
            .map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64)
            .collect()
    }

    #[test]
    fn circle_lcg_is_empty() {
        let f = ParametricRadius::new(|_| 2.0, |_| 0.0, |_| 0.0);
        let trace = lcg_numeric(&f, &grid(0.0, 1.0, 11)).unwrap();
        assert!(trace.points.is_empty());
        assert_eq!(trace.skipped.len(), 11);
        assert!(trace
            .skipped
            .iter()
            .all(|p| p.cause == SingularCause::RhoPrimeZero));
        assert!(matches!(
            lcg_gradient_numeric(&f, 0.5),
            Err(Error::SingularPoint {
                cause: SingularCause::RhoPrimeZero,
                ..
            })
        ));
    }

    #[test]
    fn log_spiral_lcg_has_unit_slope() {
        let g = GcsProfile::new(3.0, 1.0, 1.0, 2.0).unwrap();
        let trace = lcg_numeric(&GcsRadius(&g), &grid(0.0, 1.0, 21)).unwrap();
        assert_eq!(trace.points.len(), 21);
        for p in &trace.points {
            assert!((p.log_freq - p.log_rho - 1.5f64.ln()).abs() < 1e-14);
        }
        assert_eq!(lcg_gradient_numeric(&GcsRadius(&g), 0.3).unwrap(), 1.0);
    }

    #[test]
    fn clothoid_point_matches_closed_form() {
        let g = GcsProfile::new(0.1, 2.0, PI, 0.0).unwrap();
        for t in [0.0, 0.5, 1.7, PI] {
            let numeric = lcg_numeric(&GcsRadius(&g), &[t]).unwrap().points[0];
            let closed = lcg_gcs_closed_form(&g, t).unwrap();
            assert!((numeric.log_rho - closed.log_rho).abs() < 1e-10);
            assert!((numeric.log_freq - closed.log_freq).abs() < 1e-10);
        }
    }

    #[test]
    fn closed_form_examples() {
        let g = GcsProfile::new(0.0, 2.0, PI, 0.0).unwrap();
        let p = lcg_gcs_closed_form(&g, PI / 2.0).unwrap();
        assert!(p.log_rho.abs() < 1e-15);
        let numeric = lcg_numeric(&GcsRadius(&g), &[PI / 2.0]).unwrap().points[0];
        assert!((numeric.log_freq - p.log_freq).abs() < 1e-12);

        assert!(matches!(
            lcg_gcs_closed_form(&g, 0.0),
            Err(Error::SingularPoint {
                cause: SingularCause::Inflection,
                ..
            })
        ));
        let circle = GcsProfile::new(1.0, 1.0, 1.0, 0.5).unwrap();
        assert!(matches!(
            lcg_gcs_closed_form(&circle, 0.5),
            Err(Error::SingularProfile(_))
        ));
        assert!(matches!(
            gradient_line(&circle),
            Err(Error::SingularProfile(_))
        ));
    }

    #[test]
    fn clothoid_gradient_is_minus_one() {
        let b = 0.7;
        let f = ParametricRadius::new(
            move |s| 1.0 / (b * s),
            move |s| -1.0 / (b * s * s),
            move |s| 2.0 / (b * s * s * s),
        );
        for s in [0.1, 1.0, 3.0] {
            assert!((lcg_gradient_numeric(&f, s).unwrap() + 1.0).abs() < 1e-14);
        }
    }

    #[test]
    fn general_parameterization_reduces_correctly() {
        // log spiral ρ = e^t with s(t) = e^t: ρ s′/ρ′ = e^t, so the slope is 1
        let f = ParametricRadius::new(f64::exp, f64::exp, f64::exp).with_speed(f64::exp, f64::exp);
        assert!((lcg_gradient_numeric(&f, 0.4).unwrap() - 1.0).abs() < 1e-14);
        let zero_speed =
            ParametricRadius::new(|_| 1.0, |_| 1.0, |_| 0.0).with_speed(|_| 0.0, |_| 0.0);
        assert!(matches!(
            lcg_gradient_numeric(&zero_speed, 0.0),
            Err(Error::SingularPoint {
                cause: SingularCause::SpeedZero,
                ..
            })
        ));
    }

    #[test]
    fn gradient_line_examples() {
        let line = gradient_line(&GcsProfile::new(0.0, 2.0, PI, 0.0).unwrap()).unwrap();
        assert_eq!(line.slope_a, 0.0);
        assert_eq!(line.intercept_b, -1.0);
        let line = gradient_line(&GcsProfile::new(0.0, 2.0, PI, 1.0).unwrap()).unwrap();
        assert!((line.slope_a + 2.0 / PI).abs() < 1e-15);
        assert_eq!(line.intercept_b, -1.0);
        let line = gradient_line(&GcsProfile::new(0.0, 2.0, PI, -0.5).unwrap()).unwrap();
        assert!((line.slope_a - 1.0 / PI).abs() < 1e-15);
        assert_eq!(line.intercept_b, -1.0);
    }

    #[test]
    fn gradient_line_matches_finite_difference_of_lcg() {
        let g = GcsProfile::new(0.0, 2.0, PI, 1.0).unwrap();
        let line = gradient_line(&g).unwrap();
        let h = 1e-5 * PI;
        for t in [0.5, 1.5, 2.5] {
            let a = lcg_gcs_closed_form(&g, t - h).unwrap();
            let b = lcg_gcs_closed_form(&g, t + h).unwrap();
            let slope = (b.log_freq - a.log_freq) / (b.log_rho - a.log_rho);
            assert!((slope - line.eval(t)).abs() < 1e-6);
        }
    }

    #[test]
    fn classification_examples() {
        let tol = AestheticTolerances::closed_form(PI);
        let clothoid = gradient_line(&GcsProfile::new(0.0, 2.0, PI, 0.0).unwrap()).unwrap();
        assert_eq!(
            classify_aesthetic(&clothoid, 0.0, tol),
            AestheticClass::LogAesthetic
        );

        let g = GcsProfile::new(0.0, 2.0, PI, 1.0).unwrap();
        let line = gradient_line(&g).unwrap();
        let residual = line.max_residual(50, |t| gradient_gcs(&g, t));
        assert!(residual < 1e-14);
        assert_eq!(
            classify_aesthetic(&line, residual, tol),
            AestheticClass::GcsClass
        );

        let quadratic: Vec<GradientSample> = grid(0.0, 1.0, 50)
            .into_iter()
            .map(|s| GradientSample {
                s,
                gradient: 3.0 * s * s - 1.0,
            })
            .collect();
        let (fit, residual) = fit_line(&quadratic, [0.0, 1.0]).unwrap();
        assert!(residual > 0.1);
        assert_eq!(
            classify_aesthetic(&fit, residual, tol),
            AestheticClass::Other
        );
    }

    #[test]
    fn line_record_json_shape() {
        let line = LcgLine {
            slope_a: -0.5,
            intercept_b: -1.0,
            domain: [0.0, 2.0],
        };
        let rec = LineRecord::new(&line, 1e-16, AestheticClass::GcsClass);
        let v: serde_json::Value = serde_json::to_value(rec).unwrap();
        assert_eq!(v["A"], -0.5);
        assert_eq!(v["B"], -1.0);
        assert_eq!(v["domain"], serde_json::json!([0.0, 2.0]));
        assert_eq!(v["class"], "gcs");
        let back: LineRecord = serde_json::from_value(v).unwrap();
        assert_eq!(back, rec);
    }

    #[test]
    fn grid_validation() {
        let g = GcsProfile::new(0.0, 2.0, PI, 1.0).unwrap();
        assert!(lcg_numeric(&GcsRadius(&g), &[0.5, 0.5]).is_err());
        assert!(lcg_numeric(&GcsRadius(&g), &[f64::NAN]).is_err());
        assert!(lcg_gcs_closed_form(&g, PI + 0.1).is_err());
    }

    #[test]
    fn sampled_gradient_rejects_degenerate_curves() {
        let cfg = QuadratureConfig::default().with_samples(64);
        let circle = synthesize(
            &CurvatureProfile::constant(1.0, 2.0).unwrap(),
            &Pose::default(),
            &cfg,
        )
        .unwrap();
        assert!(matches!(
            gradient_from_samples(&circle),
            Err(Error::DegenerateData(_))
        ));
        let bump = synthesize(
            &CurvatureProfile::quadratic(-4.0, 0.0, 0.0, 1.0).unwrap(),
            &Pose::default(),
            &cfg,
        )
        .unwrap();
        assert!(matches!(
            gradient_from_samples(&bump),
            Err(Error::DegenerateData(_))
        ));
        let short = synthesize(
            &CurvatureProfile::gcs(0.1, 2.0, 1.0, 1.0).unwrap(),
            &Pose::default(),
            &QuadratureConfig::default().with_samples(6),
        )
        .unwrap();
        assert!(matches!(
            gradient_from_samples(&short),
            Err(Error::DegenerateData(_))
        ));
    }

    #[test]
    fn sampled_log_spiral_has_unit_gradient() {
        let p = CurvatureProfile::gcs(3.0, 1.0, 1.0, 2.0).unwrap();
        let curve = synthesize(
            &p,
            &Pose::default(),
            &QuadratureConfig::default().with_samples(2000),
        )
        .unwrap();
        let fit = gradient_from_samples(&curve).unwrap();
        assert!(fit.line.slope_a.abs() < 1e-3, "{:?}", fit.line);
        assert!((fit.line.intercept_b - 1.0).abs() < 1e-3, "{:?}", fit.line);
    }

    #[test]
    fn gradient_csv_round_trip() {
        let trace = vec![
            GradientSample {
                s: 0.0,
                gradient: -1.0,
            },
            GradientSample {
                s: 0.1,
                gradient: -1.2345678901234567,
            },
        ];
        let text = gradient_trace_to_csv(&trace);
        assert!(text.starts_with("s,gradient\n"));
        assert_eq!(gradient_trace_from_csv(text.as_bytes()).unwrap(), trace);
    }
}
