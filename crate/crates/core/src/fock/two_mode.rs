use serde::{Deserialize, Serialize};

use super::density::DensityMatrix;
use crate::{Error, Result};

/// Two-mode state `Σ λ_n |n⟩|n⟩` in Schmidt form.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TwoModeSchmidtState {
    lambdas: Vec<f64>,
}

impl TwoModeSchmidtState {
    pub fn new(lambdas: Vec<f64>) -> Result<Self> {
        if lambdas.is_empty() {
            return Err(Error::invalid("need at least one Schmidt coefficient"));
        }
        if let Some(l) = lambdas.iter().find(|l| !l.is_finite() || **l < 0.0) {
            return Err(Error::invalid(format!("Schmidt coefficient {l} is negative or non-finite")));
        }
        Ok(TwoModeSchmidtState { lambdas })
    }

    /// Two-mode squeezed vacuum: `λ_n = (tanh s)^n / cosh s`, cut at `n_max`.
    pub fn epr(s: f64, n_max: usize) -> Result<Self> {
        if !s.is_finite() || s < 0.0 {
            return Err(Error::invalid(format!("two-mode squeezing s = {s} must be ≥ 0")));
        }
        let t = s.tanh();
        let c = s.cosh().recip();
        Self::new((0..=n_max).map(|n| c * t.powi(n as i32)).collect())
    }

    pub fn lambdas(&self) -> &[f64] {
        &self.lambdas
    }

    pub fn n_max(&self) -> usize {
        self.lambdas.len() - 1
    }

    pub fn norm_sqr(&self) -> f64 {
        self.lambdas.iter().map(|l| l * l).sum()
    }

    pub fn normalized(&self) -> Result<Self> {
        let norm = self.norm_sqr().sqrt();
        if norm == 0.0 {
            return Err(Error::invalid("cannot normalize a zero state"));
        }
        Self::new(self.lambdas.iter().map(|l| l / norm).collect())
    }

    /// `(1 ⊗ g^{n̂})` on the second mode; returns the unnormalized state and
    /// its squared norm (a relative success weight).
    pub fn filter_second_mode(&self, g: f64) -> Result<(Self, f64)> {
        if !(g > 0.0) || !g.is_finite() {
            return Err(Error::invalid(format!("gain {g} must be positive")));
        }
        let out = Self::new(
            self.lambdas
                .iter()
                .enumerate()
                .map(|(n, l)| l * g.powi(n as i32))
                .collect(),
        )?;
        let w = out.norm_sqr();
        Ok((out, w))
    }

    /// Reduced state of either mode: `diag(λ_n²)`.
    pub fn reduced_density(&self) -> Result<DensityMatrix> {
        let probs: Vec<f64> = self.lambdas.iter().map(|l| l * l).collect();
        DensityMatrix::diagonal(&probs)
    }
}

#[cfg(test)]
mod tests {
    use super::super::thermal_density;
    use super::*;

    #[test]
    fn epr_reduces_to_thermal() {
        let epr = TwoModeSchmidtState::epr(0.6, 50).unwrap();
        assert!(epr.norm_sqr() <= 1.0 + 1e-12);
        let rho = epr.reduced_density().unwrap();
        assert!(rho.max_abs_diff(&thermal_density(0.6, 50).unwrap()).unwrap() < 1e-15);
        let ratio = epr.lambdas()[5] / epr.lambdas()[4];
        assert!((ratio - 0.6f64.tanh()).abs() < 1e-15);
    }

    #[test]
    fn filtering_strengthens_entanglement() {
        let (s, g) = (0.5f64, 1.1f64);
        let sp = (g * s.tanh()).atanh();
        let (out, _) = TwoModeSchmidtState::epr(s, 120).unwrap().filter_second_mode(g).unwrap();
        let out = out.normalized().unwrap();
        let expect = TwoModeSchmidtState::epr(sp, 120).unwrap();
        for (a, b) in out.lambdas().iter().zip(expect.lambdas()) {
            assert!((a - b).abs() < 1e-14);
        }
    }
}
