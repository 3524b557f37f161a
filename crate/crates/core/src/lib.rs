// Copyright 2026 the Cornu Authors
// SPDX-License-Identifier: Apache-2.0

//! Curve synthesis from curvature profiles and curve interrogation.
//!
//! * [`profiles`]: curvature functions, including the Generalized Cornu
//!   Spiral, with exact tangent angles.
//! * [`synthesis`]: sampled planar curves from a profile and a start pose.
//! * [`lcg`]: logarithmic curvature graphs, their gradients, and the
//!   constant/linear gradient classification.
//! * [`lddc`]: histograms of arc length per radius-of-curvature interval.
//! * [`cli`]: the `cornu` command-line front end.

// `!(a > b)` is used on purpose so that NaN fails validation.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod error;
pub mod export;
pub mod lcg;
pub mod lddc;
pub mod profiles;
pub mod quadrature;
pub mod synthesis;

pub use error::{Error, Result, SingularCause};
pub use lcg::{AestheticClass, LcgLine, LcgPoint};
pub use lddc::LddcHistogram;
pub use profiles::{CurvatureProfile, DegenerateClass, GcsProfile};
pub use synthesis::{PlanarCurve, Pose, QuadratureConfig};
