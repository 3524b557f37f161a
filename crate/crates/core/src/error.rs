// Copyright 2026 the Cornu Authors
// SPDX-License-Identifier: Apache-2.0

//! Error type shared by every module.

use thiserror::Error;

/// Why a point of the logarithmic curvature graph is undefined.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SingularCause {
    /// ρ′ = 0: curvature extremum (or a circle, where ρ′ vanishes everywhere).
    RhoPrimeZero,
    /// ρ = 0 or ρ is unbounded: an inflection point.
    Inflection,
    /// s′ = 0: the parameterization is not regular.
    SpeedZero,
    /// Some intermediate value was not finite.
    NonFinite,
}

impl std::fmt::Display for SingularCause {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            SingularCause::RhoPrimeZero => "rho' = 0 (curvature extremum)",
            SingularCause::Inflection => "rho = 0 or unbounded (inflection)",
            SingularCause::SpeedZero => "s' = 0 (irregular parameterization)",
            SingularCause::NonFinite => "non-finite value",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Error)]
pub enum Error {
    /// Bad parameters: out-of-range, non-finite, or outside the profile's domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// Adaptive quadrature ran out of subdivisions before meeting its tolerance.
    #[error(
        "quadrature did not converge: worst sub-interval [{a}, {b}] has error estimate {estimate:e} (tolerance {tolerance:e})"
    )]
    Quadrature {
        a: f64,
        b: f64,
        estimate: f64,
        tolerance: f64,
    },

    /// The closed-form LCG is undefined for this profile (κ0 = κ1).
    #[error("singular profile: {0}")]
    SingularProfile(String),

    #[error("singular point at t = {t}: {cause}")]
    SingularPoint { t: f64, cause: SingularCause },

    /// Sampled data cannot support the requested estimate.
    #[error("degenerate data: {0}")]
    DegenerateData(String),

    #[error("mismatched inputs: {0}")]
    MismatchedInputs(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),

    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
