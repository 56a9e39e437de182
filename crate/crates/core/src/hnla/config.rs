use serde::{Deserialize, Serialize};

use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum OperatingMode {
    /// Unbounded `g^n̂`, unnormalized; only relative weights.
    IdealUnnormalized,
    /// `g^{n̂}/g^N` on the input truncated at `N` photons.
    TruncatedPhysical,
}

/// Amplifier settings. The gain is tied to the scissor transmissivity by
/// `g = √((1 - η)/η)`, so `g > 1` corresponds to `0 < η < 1/2`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HnlaConfig {
    g: f64,
    n_trunc: usize,
    mode: OperatingMode,
}

impl HnlaConfig {
    pub fn new(g: f64, n_trunc: usize, mode: OperatingMode) -> Result<Self> {
        if !g.is_finite() || g <= 1.0 {
            return Err(Error::invalid(format!("amplifier gain must exceed 1, got {g}")));
        }
        Ok(HnlaConfig { g, n_trunc, mode })
    }

    /// Admits any positive gain, including the identity `g = 1`.
    #[cfg(any(test, feature = "test-fixtures"))]
    pub fn fixture(g: f64, n_trunc: usize, mode: OperatingMode) -> Self {
        assert!(g > 0.0);
        HnlaConfig { g, n_trunc, mode }
    }

    pub fn g(&self) -> f64 {
        self.g
    }

    pub fn n_trunc(&self) -> usize {
        self.n_trunc
    }

    pub fn mode(&self) -> OperatingMode {
        self.mode
    }

    /// `η = 1/(1 + g²)`.
    pub fn eta(&self) -> f64 {
        1.0 / (1.0 + self.g * self.g)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eta_relation() {
        for g in [1.01, 1.1, 2.0, 7.5] {
            let cfg = HnlaConfig::new(g, 3, OperatingMode::TruncatedPhysical).unwrap();
            let eta = cfg.eta();
            assert!(eta > 0.0 && eta < 0.5);
            assert!((g * g - (1.0 - eta) / eta).abs() < 1e-12 * g * g);
        }
    }

    #[test]
    fn gain_domain() {
        assert!(HnlaConfig::new(1.0, 0, OperatingMode::IdealUnnormalized).is_err());
        assert!(HnlaConfig::new(0.9, 0, OperatingMode::IdealUnnormalized).is_err());
        assert!(HnlaConfig::new(f64::NAN, 0, OperatingMode::IdealUnnormalized).is_err());
        assert_eq!(HnlaConfig::fixture(1.0, 0, OperatingMode::IdealUnnormalized).g(), 1.0);
    }
}
