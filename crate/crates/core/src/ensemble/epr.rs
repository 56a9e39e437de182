use serde::{Deserialize, Serialize};

use super::check_epr_gain;
use crate::fock::{DensityMatrix, TwoModeSchmidtState, MAX_CUTOFF};
use crate::{Error, Result};

/// Two-mode squeezed vacuum `Σ (tanh s)^n / cosh s |n⟩|n⟩`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EprSpec {
    s: f64,
}

impl EprSpec {
    pub fn new(s: f64) -> Result<Self> {
        if !s.is_finite() || s <= 0.0 {
            return Err(Error::invalid(format!("two-mode squeezing s = {s} must be > 0")));
        }
        Ok(EprSpec { s })
    }

    pub fn s(&self) -> f64 {
        self.s
    }

    pub fn state(&self, n_max: usize) -> Result<TwoModeSchmidtState> {
        TwoModeSchmidtState::epr(self.s, n_max)
    }

    pub fn amplified(&self, g: f64) -> Result<EprSpec> {
        EprSpec::new(amplify_epr(self.s, g)?)
    }

    pub fn reduced(&self) -> ThermalSpec {
        ThermalSpec::new(self.s).expect("s > 0 already checked")
    }
}

/// Reduced state of an EPR pair: mean photon number `ν = sinh² s`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ThermalSpec {
    s: f64,
    nu: f64,
}

impl ThermalSpec {
    pub fn new(s: f64) -> Result<Self> {
        if !s.is_finite() || s < 0.0 {
            return Err(Error::invalid(format!("thermal parameter s = {s} must be ≥ 0")));
        }
        Ok(ThermalSpec { s, nu: s.sinh().powi(2) })
    }

    pub fn s(&self) -> f64 {
        self.s
    }

    pub fn nu(&self) -> f64 {
        self.nu
    }

    /// `diag(cosh 2s, cosh 2s)` in vacuum-variance-one units.
    pub fn covariance(&self) -> [[f64; 2]; 2] {
        let v = (2.0 * self.s).cosh();
        [[v, 0.0], [0.0, v]]
    }

    pub fn density(&self, n_max: usize) -> Result<DensityMatrix> {
        crate::fock::thermal_density(self.s, n_max)
    }
}

/// Products within a few ulp of 1 count as the divergence point.
const BOUNDARY_SLACK: f64 = 4.0 * f64::EPSILON;

/// `s' = artanh(g tanh s)`.
pub fn amplify_epr(s: f64, g: f64) -> Result<f64> {
    if !s.is_finite() || s < 0.0 {
        return Err(Error::invalid(format!("two-mode squeezing s = {s} must be ≥ 0")));
    }
    if !g.is_finite() || g <= 0.0 {
        return Err(Error::invalid(format!("gain {g} must be positive")));
    }
    let t = g * s.tanh();
    if t >= 1.0 - BOUNDARY_SLACK {
        return Err(Error::UnphysicalGain(format!(
            "g tanh s = {t} ≥ 1 (g = {g}, s = {s}); the amplified EPR state is not normalizable"
        )));
    }
    Ok(t.atanh())
}

/// Photon-number distributions before and after Bayes conditioning.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PhotonNumberScenario {
    pub s: f64,
    pub g: f64,
    pub s_prime: f64,
    pub n_max: usize,
    pub p_before: Vec<f64>,
    pub p_conditioned: Vec<f64>,
    /// Largest `|p_conditioned,n - p_n(s')|` against the geometric law of `s'`
    /// on the same support.
    pub max_deviation: f64,
}

/// `(g tanh s)^{2 n_max}` must fall below this for the truncated law to be
/// faithful.
const PHOTON_TAIL_BUDGET: f64 = 1e-14;

fn geometric(q: f64, n_max: usize) -> Vec<f64> {
    let raw: Vec<f64> = (0..=n_max).map(|n| q.powi(n as i32)).collect();
    let total: f64 = raw.iter().sum();
    raw.into_iter().map(|p| p / total).collect()
}

/// Alice counts photons on `|EPR_s⟩`; Bob's `|n⟩` survives the amplifier with
/// relative weight `g^{2n}`.
pub fn photon_number_scenario(s: f64, g: f64, n_max: Option<usize>) -> Result<PhotonNumberScenario> {
    check_epr_gain(s, g)?;
    let s_prime = amplify_epr(s, g)?;
    let gt = g * s.tanh();
    let needed = if gt == 0.0 {
        0
    } else {
        (PHOTON_TAIL_BUDGET.ln() / (2.0 * gt.ln())).floor() as usize + 1
    };
    let n_max = match n_max {
        Some(n) if n < needed => {
            return Err(Error::Budget(format!(
                "(g tanh s)^(2 n_max) = {:e} at n_max = {n} exceeds {PHOTON_TAIL_BUDGET:e}",
                gt.powf(2.0 * n as f64)
            )))
        }
        Some(n) => n,
        None => needed,
    };
    if n_max > MAX_CUTOFF {
        return Err(Error::CutoffTooLarge(format!("n_max = {n_max}")));
    }
    let p_before = geometric(s.tanh().powi(2), n_max);
    let raw: Vec<f64> = p_before
        .iter()
        .enumerate()
        .map(|(n, p)| p * g.powi(2 * n as i32))
        .collect();
    let total: f64 = raw.iter().sum();
    let p_conditioned: Vec<f64> = raw.into_iter().map(|p| p / total).collect();
    let target = geometric(s_prime.tanh().powi(2), n_max);
    let max_deviation = p_conditioned
        .iter()
        .zip(&target)
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max);
    Ok(PhotonNumberScenario {
        s,
        g,
        s_prime,
        n_max,
        p_before,
        p_conditioned,
        max_deviation,
    })
}

/// Entrywise gap between "condition Bob's photon-number ensemble, then mix"
/// and "amplify the EPR pair, then trace out Alice".
pub fn bayes_order_residual(s: f64, g: f64, n_max: usize) -> Result<f64> {
    let conditioned = photon_number_scenario(s, g, Some(n_max))?;
    let measured_first = DensityMatrix::diagonal(&conditioned.p_conditioned)?;
    let (filtered, _) = TwoModeSchmidtState::epr(s, n_max)?.filter_second_mode(g)?;
    let amplified_first = filtered.normalized()?.reduced_density()?;
    measured_first.max_abs_diff(&amplified_first)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn amplify_examples() {
        assert_eq!(amplify_epr(0.5, 1.0).unwrap(), 0.5);
        let sp = amplify_epr(0.5, 1.1).unwrap();
        assert!((sp.tanh() - 0.508_328_872_986_010_7).abs() < 1e-14);
        assert!((sp - 0.560_473_779_183_838_7).abs() < 1e-13);
        let g = 1.7f64;
        assert!(matches!(amplify_epr((1.0 / g).atanh(), g), Err(Error::UnphysicalGain(_))));
    }

    #[test]
    fn schmidt_filtration_cross_check() {
        let (s, g) = (0.5, 1.1);
        let sp = amplify_epr(s, g).unwrap();
        let (out, _) = EprSpec::new(s).unwrap().state(150).unwrap().filter_second_mode(g).unwrap();
        let out = out.normalized().unwrap();
        for (n, l) in out.lambdas().iter().enumerate() {
            let expect = sp.tanh().powi(n as i32) / sp.cosh();
            assert!((l - expect).abs() < 1e-14);
        }
    }

    #[test]
    fn photon_number_identity() {
        let sc = photon_number_scenario(0.5, 1.1, None).unwrap();
        assert!(sc.max_deviation < 1e-12);
        let q = 0.508_328_872_986_010_7f64.powi(2);
        for (n, p) in sc.p_conditioned.iter().enumerate().take(10) {
            assert!((p - q.powi(n as i32) * (1.0 - q)).abs() < 1e-12);
        }
        let mean: f64 = sc.p_conditioned.iter().enumerate().map(|(n, p)| n as f64 * p).sum();
        assert!((mean - sc.s_prime.sinh().powi(2)).abs() < 1e-12);
    }

    #[test]
    fn unit_gain_changes_nothing() {
        let sc = photon_number_scenario(0.8, 1.0, None).unwrap();
        assert_eq!(sc.p_before, sc.p_conditioned);
    }

    #[test]
    fn cutoff_budget() {
        assert!(matches!(photon_number_scenario(0.5, 1.1, Some(5)), Err(Error::Budget(_))));
    }

    #[test]
    fn order_independence() {
        assert!(bayes_order_residual(0.5, 1.1, 60).unwrap() < 1e-12);
    }

    #[test]
    fn thermal_spec() {
        let th = ThermalSpec::new(0.5).unwrap();
        assert!((th.nu() - 0.5f64.sinh().powi(2)).abs() < 1e-12);
        assert!((th.covariance()[0][0] - 2.0 * th.nu() - 1.0).abs() < 1e-12);
    }
}
