// Copyright 2026 the Cornu Authors
// SPDX-License-Identifier: Apache-2.0

use std::f64::consts::PI;

use cornu::lcg::gradient_line;
use cornu::lddc::{lddc_histogram, lddc_histogram_with_edges, lddc_vs_lcg, predicted_band_length};
use cornu::synthesis::synthesize;
use cornu::{CurvatureProfile, GcsProfile, Pose, QuadratureConfig};
use proptest::prelude::*;

/// Arc length per bin by midpoint sampling of `log10|1/κ|` on `m` cells.
fn brute_force_bins(g: &GcsProfile, edges: &[f64], m: usize) -> Vec<f64> {
    let len = g.arc_length();
    let h = len / m as f64;
    let mut bins = vec![0.0; edges.len() - 1];
    for i in 0..m {
        let k = g.kappa((i as f64 + 0.5) * h).unwrap();
        let v = -k.abs().log10();
        if let Some(j) = edges.windows(2).position(|w| v >= w[0] && v < w[1]) {
            bins[j] += h;
        } else if v == edges[edges.len() - 1] {
            bins[edges.len() - 2] += h;
        }
    }
    bins
}

#[test]
fn histogram_matches_brute_force() {
    let g = GcsProfile::new(0.5, 2.0, PI, 0.0).unwrap();
    let n = 4096;
    let curve = synthesize(
        &CurvatureProfile::Gcs(g),
        &Pose::default(),
        &QuadratureConfig::default().with_samples(n),
    )
    .unwrap();
    let hist = lddc_histogram(&curve, 16).unwrap();
    let oracle = brute_force_bins(&g, &hist.bin_edges, 2_000_000);
    let spacing = PI / (n - 1) as f64;
    for (i, (&measured, &expected)) in hist.lengths.iter().zip(&oracle).enumerate() {
        // at most one segment straddles each bin edge
        assert!((measured - expected).abs() <= 2.0 * spacing, "bin {i}");
        let predicted = predicted_band_length(&g, hist.bin_edges[i], hist.bin_edges[i + 1]);
        assert!((predicted - expected).abs() <= 1e-5, "bin {i}");
    }

    let cmp = lddc_vs_lcg(&hist, &gradient_line(&g).unwrap(), &g).unwrap();
    assert!(cmp.max_abs_length_deviation <= 2.0 * spacing);
}

#[test]
fn band_across_inflection() {
    let g = GcsProfile::new(-1.0, 2.0, 2.0, 1.5).unwrap();
    assert!(g.inflection().is_some());
    let edges = [-1.0, -0.5, 0.0, 0.5, 1.0, 2.0];
    let oracle = brute_force_bins(&g, &edges, 2_000_000);
    for (i, w) in edges.windows(2).enumerate() {
        assert!(
            (predicted_band_length(&g, w[0], w[1]) - oracle[i]).abs() <= 1e-5,
            "bin {i}"
        );
    }
}

#[test]
fn fixed_edges_report_out_of_range() {
    let g = GcsProfile::new(0.5, 2.0, PI, 0.0).unwrap();
    let curve = synthesize(
        &CurvatureProfile::Gcs(g),
        &Pose::default(),
        &QuadratureConfig::default(),
    )
    .unwrap();
    let hist = lddc_histogram_with_edges(&curve, &[-0.3, -0.1, 0.1]).unwrap();
    let sum = hist.covered_length() + hist.out_of_range_length + hist.excluded_length;
    assert!((sum - PI).abs() < 1e-12);
    assert!(hist.out_of_range_length > 0.0);
}

#[test]
fn circle_widens_to_one_decade() {
    let p = CurvatureProfile::constant(2.0, 1.0).unwrap();
    let curve = synthesize(&p, &Pose::default(), &QuadratureConfig::default()).unwrap();
    let hist = lddc_histogram(&curve, 4).unwrap();
    let centre = -(2.0f64).log10();
    assert!((hist.bin_edges[0] - (centre - 0.5)).abs() < 1e-12);
    assert!((hist.bin_edges[4] - (centre + 0.5)).abs() < 1e-12);
    assert!((hist.covered_length() - 1.0).abs() < 1e-12);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn histogram_conserves_length(
        k0 in -3.0..3.0f64,
        k1 in -3.0..3.0f64,
        s in 0.1..5.0f64,
        r in -0.9..20.0f64,
        bins in 1usize..40,
    ) {
        let p = CurvatureProfile::gcs(k0, k1, s, r).unwrap();
        let curve = synthesize(&p, &Pose::default(), &QuadratureConfig::default().with_samples(128))
            .unwrap();
        let hist = lddc_histogram(&curve, bins).unwrap();
        prop_assert_eq!(hist.num_bins(), bins);
        prop_assert_eq!(hist.out_of_range_length, 0.0);
        prop_assert!((hist.covered_length() + hist.excluded_length - s).abs() <= 1e-9 * s);
    }
}
