// Copyright 2026 the Cornu Authors
// SPDX-License-Identifier: Apache-2.0

//! Logarithmic Distribution Diagram of Curvature (LDDC).
//!
//! The curve is cut at its samples; each segment contributes its arc length
//! to the bin holding `log10 ρ` at the segment midpoint. The analytic
//! counterpart for a GCS inverts `ρ(s)` at the bin edges.

use std::io::Read;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::export::{format_f64, Bar, SvgPlot};
use crate::lcg::LcgLine;
use crate::profiles::{GcsProfile, ZERO_CURVATURE_TOL};
use crate::synthesis::PlanarCurve;

/// Arc length accumulated per `log10 ρ` interval.
#[derive(Clone, Debug, PartialEq)]
pub struct LddcHistogram {
    /// K + 1 strictly increasing `log10 ρ` boundaries.
    pub bin_edges: Vec<f64>,
    /// K accumulated lengths.
    pub lengths: Vec<f64>,
    /// Arc length of the whole curve.
    pub total_length: f64,
    /// Length of segments left out as near-inflection (ρ effectively infinite).
    pub excluded_length: f64,
    /// Length of segments falling outside caller-supplied edges.
    pub out_of_range_length: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct LddcBin {
    pub bin_lo_log10rho: f64,
    pub bin_hi_log10rho: f64,
    pub length: f64,
}

const LDDC_HEADER: [&str; 3] = ["bin_lo_log10rho", "bin_hi_log10rho", "length"];

/// Midpoint `log10 ρ` and length of every segment; `None` for near-inflection ones.
fn segment_values(curve: &PlanarCurve) -> Vec<(Option<f64>, f64)> {
    let samples = curve.samples();
    let scale = samples
        .iter()
        .fold(1.0 / curve.arc_length(), |m, p| m.max(p.kappa.abs()));
    samples
        .windows(2)
        .map(|w| {
            let mid = 0.5 * (w[0].s + w[1].s);
            let kappa = match curve.profile() {
                Some(p) => p.kappa(mid).unwrap_or(0.5 * (w[0].kappa + w[1].kappa)),
                None => 0.5 * (w[0].kappa + w[1].kappa),
            };
            let ds = w[1].s - w[0].s;
            if kappa.abs() < ZERO_CURVATURE_TOL * scale {
                (None, ds)
            } else {
                (Some((1.0 / kappa.abs()).log10()), ds)
            }
        })
        .collect()
}

fn bin_index(edges: &[f64], v: f64) -> Option<usize> {
    let k = edges.len() - 1;
    if v < edges[0] || v > edges[k] {
        return None;
    }
    // last edge is inclusive
    let idx = edges.partition_point(|e| *e <= v);
    Some(idx.saturating_sub(1).min(k - 1))
}

fn accumulate(
    curve: &PlanarCurve,
    values: &[(Option<f64>, f64)],
    bin_edges: Vec<f64>,
) -> LddcHistogram {
    let mut lengths = vec![0.0; bin_edges.len() - 1];
    let mut excluded_length = 0.0;
    let mut out_of_range_length = 0.0;
    for &(v, ds) in values {
        match v {
            None => excluded_length += ds,
            Some(v) => match bin_index(&bin_edges, v) {
                Some(i) => lengths[i] += ds,
                None => out_of_range_length += ds,
            },
        }
    }
    LddcHistogram {
        bin_edges,
        lengths,
        total_length: curve.arc_length(),
        excluded_length,
        out_of_range_length,
    }
}

/// Builds a `num_bins` histogram whose edges span the observed `log10 ρ` range.
///
/// When every segment has the same radius (a circle) the range is widened to
/// one decade centred on it.
pub fn lddc_histogram(curve: &PlanarCurve, num_bins: usize) -> Result<LddcHistogram> {
    if num_bins < 1 {
        return Err(Error::domain("num_bins must be at least 1"));
    }
    if curve.len() < 2 {
        return Err(Error::domain("curve needs at least two samples"));
    }
    let values = segment_values(curve);
    let (lo, hi) = values
        .iter()
        .filter_map(|(v, _)| *v)
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| {
            (lo.min(v), hi.max(v))
        });
    if !lo.is_finite() {
        return Err(Error::DegenerateData(
            "every segment has zero curvature; radius of curvature is undefined".into(),
        ));
    }
    let (lo, hi) = if hi > lo {
        (lo, hi)
    } else {
        (lo - 0.5, hi + 0.5)
    };
    let edges = (0..=num_bins)
        .map(|i| {
            if i == num_bins {
                hi
            } else {
                lo + (hi - lo) * i as f64 / num_bins as f64
            }
        })
        .collect();
    Ok(accumulate(curve, &values, edges))
}

/// Builds a histogram on caller-supplied `log10 ρ` edges.
pub fn lddc_histogram_with_edges(curve: &PlanarCurve, bin_edges: &[f64]) -> Result<LddcHistogram> {
    if bin_edges.len() < 2 {
        return Err(Error::domain("need at least two bin edges"));
    }
    if bin_edges.iter().any(|e| !e.is_finite()) || bin_edges.windows(2).any(|w| !(w[1] > w[0])) {
        return Err(Error::domain(
            "bin edges must be finite and strictly increasing",
        ));
    }
    let values = segment_values(curve);
    if values.iter().all(|(v, _)| v.is_none()) {
        return Err(Error::DegenerateData(
            "every segment has zero curvature; radius of curvature is undefined".into(),
        ));
    }
    Ok(accumulate(curve, &values, bin_edges.to_vec()))
}

impl LddcHistogram {
    pub fn num_bins(&self) -> usize {
        self.lengths.len()
    }

    pub fn covered_length(&self) -> f64 {
        self.lengths.iter().sum()
    }

    pub fn bins(&self) -> Vec<LddcBin> {
        self.lengths
            .iter()
            .enumerate()
            .map(|(i, &length)| LddcBin {
                bin_lo_log10rho: self.bin_edges[i],
                bin_hi_log10rho: self.bin_edges[i + 1],
                length,
            })
            .collect()
    }

    pub fn to_csv(&self) -> String {
        let mut out = LDDC_HEADER.join(",");
        out.push('\n');
        for b in self.bins() {
            out.push_str(
                &[b.bin_lo_log10rho, b.bin_hi_log10rho, b.length]
                    .map(format_f64)
                    .join(","),
            );
            out.push('\n');
        }
        out
    }

    pub fn bins_from_csv<R: Read>(reader: R) -> Result<Vec<LddcBin>> {
        let mut rdr = csv::Reader::from_reader(reader);
        let headers = rdr.headers()?;
        if headers.iter().ne(LDDC_HEADER.iter().copied()) {
            return Err(Error::domain("unexpected LDDC CSV header"));
        }
        Ok(rdr.deserialize().collect::<std::result::Result<_, _>>()?)
    }

    /// Bar chart of `log10(length)` against `log10 ρ`; empty bins are omitted.
    pub fn to_svg(&self) -> String {
        let logs: Vec<Option<f64>> = self
            .lengths
            .iter()
            .map(|&l| (l > 0.0).then(|| l.log10()))
            .collect();
        let min = logs.iter().flatten().fold(f64::INFINITY, |m, v| m.min(*v));
        let base = if min.is_finite() {
            min.floor() - 0.5
        } else {
            0.0
        };
        let mut plot = SvgPlot::new();
        plot.axes = true;
        plot.bar_base = base;
        for (i, l) in logs.iter().enumerate() {
            if let Some(h) = l {
                plot.bars.push(Bar {
                    x0: self.bin_edges[i],
                    x1: self.bin_edges[i + 1],
                    height: *h,
                });
            }
        }
        plot.render()
    }
}

/// Measured against predicted length in one bin.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct BinComparison {
    pub bin_lo_log10rho: f64,
    pub bin_hi_log10rho: f64,
    pub measured_length: f64,
    pub predicted_length: f64,
    /// `log10` of the lengths; `None` when the length is zero.
    pub measured_log10_length: Option<f64>,
    pub predicted_log10_length: Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LddcComparison {
    pub bins: Vec<BinComparison>,
    /// Largest |measured − predicted| length over the bins.
    pub max_abs_length_deviation: f64,
    /// Largest |log10 measured − log10 predicted| over bins where both are nonzero.
    pub max_abs_log_deviation: f64,
    pub line: LcgLine,
}

/// Arc length on `[lo, hi]` where `log10|ρ(s)| ∈ [a, b]`; `|ρ|` must be
/// monotone on the piece and κ of one sign there.
fn length_in_band(profile: &GcsProfile, lo: f64, hi: f64, a: f64, b: f64) -> f64 {
    if hi <= lo {
        return 0.0;
    }
    let mid = 0.5 * (lo + hi);
    let sign = profile.eval_kappa(mid).signum();
    let log_abs_rho = |s: f64| {
        let k = profile.eval_kappa(s).abs();
        if k == 0.0 {
            f64::INFINITY
        } else {
            (1.0 / k).log10()
        }
    };
    // s where ρ(s) = sign·10^v, clamped into the piece
    let invert = |v: f64| {
        let rho = sign * 10f64.powf(v);
        let big_s = profile.arc_length();
        let u = (1.0 - rho * profile.kappa0()) / (rho * profile.n1() - profile.r());
        (big_s * u).clamp(lo, hi)
    };
    let (g_lo, g_hi) = (log_abs_rho(lo), log_abs_rho(hi));
    let increasing = g_hi > g_lo;
    let (g_min, g_max) = if increasing {
        (g_lo, g_hi)
    } else {
        (g_hi, g_lo)
    };
    if b < g_min || a > g_max {
        return 0.0;
    }
    let sa = if a <= g_min {
        if increasing {
            lo
        } else {
            hi
        }
    } else {
        invert(a)
    };
    let sb = if b >= g_max {
        if increasing {
            hi
        } else {
            lo
        }
    } else {
        invert(b)
    };
    (sb - sa).abs()
}

/// Exact arc length of `profile` whose `log10|ρ|` lies in `[a, b]`.
pub fn predicted_band_length(profile: &GcsProfile, a: f64, b: f64) -> f64 {
    let big_s = profile.arc_length();
    match profile.inflection() {
        Some(s) if s > 0.0 && s < big_s => {
            length_in_band(profile, 0.0, s, a, b) + length_in_band(profile, s, big_s, a, b)
        }
        _ => length_in_band(profile, 0.0, big_s, a, b),
    }
}

/// Compares a measured histogram with the lengths predicted by inverting the
/// GCS radius of curvature at the bin edges.
pub fn lddc_vs_lcg(
    histogram: &LddcHistogram,
    line: &LcgLine,
    profile: &GcsProfile,
) -> Result<LddcComparison> {
    let big_s = profile.arc_length();
    if (histogram.total_length - big_s).abs() > 1e-9 * big_s {
        return Err(Error::MismatchedInputs(format!(
            "histogram covers length {} but the profile has length {big_s}",
            histogram.total_length
        )));
    }
    if (line.domain[1] - big_s).abs() > 1e-9 * big_s || line.domain[0] != 0.0 {
        return Err(Error::MismatchedInputs(format!(
            "LCG line domain {:?} does not match profile length {big_s}",
            line.domain
        )));
    }
    if (profile.kappa0() - profile.kappa1()).abs() <= ZERO_CURVATURE_TOL * profile.scale() {
        return Err(Error::MismatchedInputs(
            "constant-curvature profile: radius of curvature is not invertible".into(),
        ));
    }

    let mut bins = Vec::with_capacity(histogram.num_bins());
    let mut max_len = 0.0f64;
    let mut max_log = 0.0f64;
    for (i, &measured) in histogram.lengths.iter().enumerate() {
        let (a, b) = (histogram.bin_edges[i], histogram.bin_edges[i + 1]);
        let predicted = predicted_band_length(profile, a, b);
        let m_log = (measured > 0.0).then(|| measured.log10());
        let p_log = (predicted > 0.0).then(|| predicted.log10());
        max_len = max_len.max((measured - predicted).abs());
        if let (Some(m), Some(p)) = (m_log, p_log) {
            max_log = max_log.max((m - p).abs());
        }
        bins.push(BinComparison {
            bin_lo_log10rho: a,
            bin_hi_log10rho: b,
            measured_length: measured,
            predicted_length: predicted,
            measured_log10_length: m_log,
            predicted_log10_length: p_log,
        });
    }
    Ok(LddcComparison {
        bins,
        max_abs_length_deviation: max_len,
        max_abs_log_deviation: max_log,
        line: *line,
    })
}
