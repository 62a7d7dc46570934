//! Attachment kernels.
//!
//! A kernel maps the degree of an existing node to an unnormalized
//! attractiveness. Normalization over the candidate set happens in the
//! sampler.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum PreferenceScheme {
    /// `k`
    Linear,
    /// `k^alpha`, `alpha > 1`
    FixedExponent { alpha: f64 },
    /// `k^(1 + delta * log10 k)`, `0 <= delta <= 1`
    PositiveFeedback { delta: f64 },
}

impl PreferenceScheme {
    pub fn validate(&self) -> Result<()> {
        match *self {
            PreferenceScheme::Linear => Ok(()),
            PreferenceScheme::FixedExponent { alpha } => {
                if alpha.is_finite() && alpha > 1.0 {
                    Ok(())
                } else {
                    Err(Error::InvalidParameter(format!(
                        "alpha must be a finite number > 1, got {alpha}"
                    )))
                }
            }
            PreferenceScheme::PositiveFeedback { delta } => {
                if (0.0..=1.0).contains(&delta) {
                    Ok(())
                } else {
                    Err(Error::InvalidParameter(format!(
                        "delta must lie in [0, 1], got {delta}"
                    )))
                }
            }
        }
    }

    /// Effective exponent applied to `k`.
    pub fn exponent(&self, k: usize) -> f64 {
        match *self {
            PreferenceScheme::Linear => 1.0,
            PreferenceScheme::FixedExponent { alpha } => alpha,
            PreferenceScheme::PositiveFeedback { delta } => 1.0 + delta * (k as f64).log10(),
        }
    }

    /// Kernel value without the `k >= 1` check. Hot path for the growth loop.
    #[inline]
    pub(crate) fn weight(&self, k: usize) -> f64 {
        match *self {
            PreferenceScheme::Linear => k as f64,
            _ => (k as f64).powf(self.exponent(k)),
        }
    }
}

/// Unnormalized attachment weight of a node with degree `k`.
///
/// Degree-0 nodes are never candidates, so `k == 0` is rejected.
pub fn preference_weight(k: usize, scheme: &PreferenceScheme) -> Result<f64> {
    if k == 0 {
        return Err(Error::NonPositiveDegree(k));
    }
    Ok(scheme.weight(k))
}
