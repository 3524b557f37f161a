// Copyright 2026 the Cornu Authors
// SPDX-License-Identifier: Apache-2.0

//! Number formatting and static SVG plots shared by the file exporters.

use std::fmt::Write;

/// 17 significant digits, enough to round-trip any finite double.
pub fn format_f64(v: f64) -> String {
    format!("{v:.16e}")
}

const PALETTE: [&str; 8] = [
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf",
];

#[derive(Clone, Debug, Default)]
pub struct Series {
    pub label: Option<String>,
    pub points: Vec<[f64; 2]>,
    pub dashed: bool,
}

impl Series {
    pub fn new(points: Vec<[f64; 2]>) -> Self {
        Series {
            label: None,
            points,
            dashed: false,
        }
    }

    pub fn labelled(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn dashed(mut self, dashed: bool) -> Self {
        self.dashed = dashed;
        self
    }
}

/// A filled bar spanning `[x0, x1]` from `base` up to `height`.
#[derive(Clone, Copy, Debug)]
pub struct Bar {
    pub x0: f64,
    pub x1: f64,
    pub height: f64,
}

/// A static plot in data coordinates; y points up.
#[derive(Clone, Debug, Default)]
pub struct SvgPlot {
    pub title: Option<String>,
    pub series: Vec<Series>,
    pub bars: Vec<Bar>,
    pub bar_base: f64,
    pub axes: bool,
}

impl SvgPlot {
    pub fn new() -> Self {
        SvgPlot::default()
    }

    fn bounds(&self) -> Option<[f64; 4]> {
        let mut b = [
            f64::INFINITY,
            f64::INFINITY,
            f64::NEG_INFINITY,
            f64::NEG_INFINITY,
        ];
        let mut grow = |x: f64, y: f64| {
            if x.is_finite() && y.is_finite() {
                b[0] = b[0].min(x);
                b[1] = b[1].min(y);
                b[2] = b[2].max(x);
                b[3] = b[3].max(y);
            }
        };
        for s in &self.series {
            for p in &s.points {
                grow(p[0], p[1]);
            }
        }
        for bar in &self.bars {
            grow(bar.x0, self.bar_base);
            grow(bar.x1, bar.height);
        }
        b[0].is_finite().then_some(b)
    }

    /// Renders the plot with a viewBox fitted to the data plus a 5% margin.
    pub fn render(&self) -> String {
        let [min_x, min_y, max_x, max_y] = self.bounds().unwrap_or([0.0, 0.0, 1.0, 1.0]);
        let extent = (max_x - min_x).max(max_y - min_y);
        let extent = if extent > 0.0 { extent } else { 1.0 };
        let (w, h) = (
            (max_x - min_x).max(1e-3 * extent),
            (max_y - min_y).max(1e-3 * extent),
        );
        let margin = 0.05 * w.max(h);
        // SVG's y axis points down, so data y is negated.
        let vb = [
            min_x - margin,
            -max_y - margin,
            w + 2.0 * margin,
            h + 2.0 * margin,
        ];
        let stroke = 0.004 * vb[2].max(vb[3]);

        let mut out = String::new();
        let _ = writeln!(
            out,
            r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{} {} {} {}" width="800" height="{}">"#,
            format_f64(vb[0]),
            format_f64(vb[1]),
            format_f64(vb[2]),
            format_f64(vb[3]),
            (800.0 * vb[3] / vb[2]).round().clamp(100.0, 4000.0)
        );
        if let Some(title) = &self.title {
            let _ = writeln!(out, "  <title>{}</title>", escape(title));
        }
        if self.axes {
            let _ = writeln!(
                out,
                r##"  <g stroke="#555" stroke-width="{}" fill="none"><line x1="{}" y1="{}" x2="{}" y2="{}"/><line x1="{}" y1="{}" x2="{}" y2="{}"/></g>"##,
                format_f64(0.5 * stroke),
                format_f64(min_x),
                format_f64(-min_y),
                format_f64(max_x),
                format_f64(-min_y),
                format_f64(min_x),
                format_f64(-min_y),
                format_f64(min_x),
                format_f64(-max_y),
            );
        }
        for bar in &self.bars {
            let top = bar.height.max(self.bar_base);
            let bottom = bar.height.min(self.bar_base);
            let _ = writeln!(
                out,
                r##"  <rect x="{}" y="{}" width="{}" height="{}" fill="#1f77b4" fill-opacity="0.6" stroke="#1f77b4" stroke-width="{}"/>"##,
                format_f64(bar.x0),
                format_f64(-top),
                format_f64(bar.x1 - bar.x0),
                format_f64(top - bottom),
                format_f64(0.5 * stroke),
            );
        }
        for (i, s) in self.series.iter().enumerate() {
            let color = PALETTE[i % PALETTE.len()];
            let dash = if s.dashed {
                format!(
                    r#" stroke-dasharray="{} {}""#,
                    format_f64(4.0 * stroke),
                    format_f64(3.0 * stroke)
                )
            } else {
                String::new()
            };
            let _ = write!(
                out,
                r#"  <polyline fill="none" stroke="{color}" stroke-width="{}"{dash} points=""#,
                format_f64(stroke)
            );
            let mut first = true;
            for p in s
                .points
                .iter()
                .filter(|p| p[0].is_finite() && p[1].is_finite())
            {
                if !first {
                    out.push(' ');
                }
                first = false;
                let _ = write!(out, "{},{}", format_f64(p[0]), format_f64(-p[1]));
            }
            out.push('"');
            match &s.label {
                Some(label) => {
                    let _ = writeln!(out, "><title>{}</title></polyline>", escape(label));
                }
                None => out.push_str("/>\n"),
            }
        }
        out.push_str("</svg>\n");
        out
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn numbers_round_trip() {
        for v in [0.1, -1.0 / 3.0, std::f64::consts::PI, 1e-300, 6.02e23, -0.0] {
            let back: f64 = format_f64(v).parse().unwrap();
            assert_eq!(back.to_bits(), v.to_bits());
        }
    }

    #[test]
    fn view_box_has_five_percent_margin() {
        let mut plot = SvgPlot::new();
        plot.series.push(Series::new(vec![[0.0, 0.0], [10.0, 5.0]]));
        let svg = plot.render();
        let vb = svg
            .split("viewBox=\"")
            .nth(1)
            .unwrap()
            .split('"')
            .next()
            .unwrap();
        let v: Vec<f64> = vb.split(' ').map(|t| t.parse().unwrap()).collect();
        assert!((v[0] + 0.5).abs() < 1e-12);
        assert!((v[1] + 5.5).abs() < 1e-12);
        assert!((v[2] - 11.0).abs() < 1e-12);
        assert!((v[3] - 6.0).abs() < 1e-12);
        assert!(svg.contains("<polyline"));
    }

    #[test]
    fn flat_data_still_gets_a_box() {
        let mut plot = SvgPlot::new();
        plot.series.push(Series::new(vec![[0.0, 1.0], [2.0, 1.0]]));
        let svg = plot.render();
        assert!(!svg.contains("NaN") && !svg.contains("inf"));
    }
}
