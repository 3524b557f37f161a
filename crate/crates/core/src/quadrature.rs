// Copyright 2026 the Cornu Authors
// SPDX-License-Identifier: Apache-2.0

//! Quadrature for pairs of integrands.
//!
//! Curve synthesis integrates `cos θ` and `sin θ` together, so both rules here
//! work on `[f64; 2]`-valued functions and share every function evaluation.
//! Two unrelated rules are provided so one can be checked against the other:
//! adaptive Simpson with a Richardson error estimate, and fixed-order
//! composite Gauss–Legendre.

/// A sub-interval on which adaptive Simpson gave up.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Unconverged {
    pub a: f64,
    pub b: f64,
    pub estimate: f64,
    pub tolerance: f64,
}

/// Result of [`adaptive_simpson`]: the best value found, plus the worst
/// sub-interval if any failed to converge within the depth limit.
#[derive(Clone, Copy, Debug)]
pub struct AdaptiveResult {
    pub value: [f64; 2],
    pub evaluations: usize,
    pub worst: Option<Unconverged>,
}

struct Simpson<'a, F, G> {
    f: &'a F,
    must_split: &'a G,
    evaluations: usize,
    worst: Option<Unconverged>,
}

fn simpson_rule(h: f64, fa: [f64; 2], fm: [f64; 2], fb: [f64; 2]) -> [f64; 2] {
    [
        h / 6.0 * (fa[0] + 4.0 * fm[0] + fb[0]),
        h / 6.0 * (fa[1] + 4.0 * fm[1] + fb[1]),
    ]
}

impl<F, G> Simpson<'_, F, G>
where
    F: Fn(f64) -> [f64; 2],
    G: Fn(f64, f64) -> bool,
{
    fn eval(&mut self, x: f64) -> [f64; 2] {
        self.evaluations += 1;
        (self.f)(x)
    }

    fn record(&mut self, a: f64, b: f64, estimate: f64, tolerance: f64) {
        let worse = match self.worst {
            None => true,
            Some(w) => !(estimate <= w.estimate),
        };
        if worse {
            self.worst = Some(Unconverged {
                a,
                b,
                estimate,
                tolerance,
            });
        }
    }

    #[allow(clippy::too_many_arguments)]
    fn refine(
        &mut self,
        a: f64,
        fa: [f64; 2],
        m: f64,
        fm: [f64; 2],
        b: f64,
        fb: [f64; 2],
        whole: [f64; 2],
        tol: f64,
        depth: usize,
    ) -> [f64; 2] {
        let lm = 0.5 * (a + m);
        let rm = 0.5 * (m + b);
        let flm = self.eval(lm);
        let frm = self.eval(rm);
        let left = simpson_rule(m - a, fa, flm, fm);
        let right = simpson_rule(b - m, fm, frm, fb);
        let diff = [left[0] + right[0] - whole[0], left[1] + right[1] - whole[1]];
        let estimate = diff[0].abs().max(diff[1].abs()) / 15.0;
        let extrapolated = [
            left[0] + right[0] + diff[0] / 15.0,
            left[1] + right[1] + diff[1] / 15.0,
        ];
        if !estimate.is_finite() || !extrapolated.iter().all(|v| v.is_finite()) {
            self.record(a, b, f64::INFINITY, tol);
            return extrapolated;
        }

        // Tolerances below the rounding noise of the interval cannot be met.
        let magnitude = [fa, flm, fm, frm, fb]
            .iter()
            .flat_map(|v| v.iter())
            .fold(0.0f64, |acc, v| acc.max(v.abs()));
        let floor = 8.0 * f64::EPSILON * magnitude * (b - a);
        let split = (self.must_split)(a, b);

        if !split && estimate <= tol.max(floor) {
            return extrapolated;
        }
        if depth == 0 {
            self.record(a, b, estimate, tol);
            return extrapolated;
        }
        let l = self.refine(a, fa, lm, flm, m, fm, left, 0.5 * tol, depth - 1);
        let r = self.refine(m, fm, rm, frm, b, fb, right, 0.5 * tol, depth - 1);
        [l[0] + r[0], l[1] + r[1]]
    }
}

/// Integrates `f` over `[a, b]` to absolute tolerance `tol` per component.
///
/// `must_split(lo, hi)` forces subdivision of intervals the caller does not
/// trust the error estimate on, regardless of how small the estimate is.
/// Recursion depth is capped at `max_depth`; intervals that hit the cap are
/// reported through [`AdaptiveResult::worst`].
pub fn adaptive_simpson<F, G>(
    f: &F,
    a: f64,
    b: f64,
    tol: f64,
    max_depth: usize,
    must_split: &G,
) -> AdaptiveResult
where
    F: Fn(f64) -> [f64; 2],
    G: Fn(f64, f64) -> bool,
{
    if a == b {
        return AdaptiveResult {
            value: [0.0, 0.0],
            evaluations: 0,
            worst: None,
        };
    }
    let mut state = Simpson {
        f,
        must_split,
        evaluations: 0,
        worst: None,
    };
    let m = 0.5 * (a + b);
    let fa = state.eval(a);
    let fm = state.eval(m);
    let fb = state.eval(b);
    let whole = simpson_rule(b - a, fa, fm, fb);
    let value = state.refine(a, fa, m, fm, b, fb, whole, tol, max_depth);
    AdaptiveResult {
        value,
        evaluations: state.evaluations,
        worst: state.worst,
    }
}

/// Gauss–Legendre nodes and weights on `[-1, 1]`.
#[derive(Clone, Debug)]
pub struct GaussLegendre {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl GaussLegendre {
    /// Builds the `order`-point rule by Newton iteration on Pₙ.
    pub fn new(order: usize) -> Self {
        assert!(order >= 1, "Gauss-Legendre order must be at least 1");
        let n = order;
        let mut nodes = vec![0.0; n];
        let mut weights = vec![0.0; n];
        let half = n.div_ceil(2);
        for i in 0..half {
            let mut z = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
            let mut dp = 1.0;
            for _ in 0..100 {
                let (mut p1, mut p2) = (1.0, 0.0);
                for j in 0..n {
                    let p3 = p2;
                    p2 = p1;
                    p1 = ((2 * j + 1) as f64 * z * p2 - j as f64 * p3) / (j + 1) as f64;
                }
                dp = n as f64 * (z * p1 - p2) / (z * z - 1.0);
                let z_prev = z;
                z = z_prev - p1 / dp;
                if (z - z_prev).abs() <= 1e-16 {
                    break;
                }
            }
            nodes[i] = -z;
            nodes[n - 1 - i] = z;
            let w = 2.0 / ((1.0 - z * z) * dp * dp);
            weights[i] = w;
            weights[n - 1 - i] = w;
        }
        GaussLegendre { nodes, weights }
    }

    pub fn order(&self) -> usize {
        self.nodes.len()
    }

    /// Single-panel rule on `[a, b]`.
    pub fn integrate<F: Fn(f64) -> [f64; 2]>(&self, f: &F, a: f64, b: f64) -> [f64; 2] {
        let half = 0.5 * (b - a);
        let mid = 0.5 * (a + b);
        let mut acc = [0.0, 0.0];
        for (x, w) in self.nodes.iter().zip(&self.weights) {
            let v = f(mid + half * x);
            acc[0] += w * v[0];
            acc[1] += w * v[1];
        }
        [acc[0] * half, acc[1] * half]
    }

    /// The rule applied on `panels` equal panels of `[a, b]`.
    pub fn composite<F: Fn(f64) -> [f64; 2]>(
        &self,
        f: &F,
        a: f64,
        b: f64,
        panels: usize,
    ) -> [f64; 2] {
        let panels = panels.max(1);
        let h = (b - a) / panels as f64;
        let mut acc = [0.0, 0.0];
        for k in 0..panels {
            let lo = a + k as f64 * h;
            let hi = if k + 1 == panels { b } else { lo + h };
            let v = self.integrate(f, lo, hi);
            acc[0] += v[0];
            acc[1] += v[1];
        }
        acc
    }
}
