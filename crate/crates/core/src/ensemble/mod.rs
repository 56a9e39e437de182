//! Remote state preparation on one half of an EPR pair, followed by the ideal
//! amplifier on the other half.
//!
//! Each scenario builds the ensemble Alice's measurement prepares at Bob's
//! side and reweights every component by its relative success weight (Bayes
//! rule, one global renormalization). The resulting mixture is compared with
//! the reduced state of the amplified EPR pair, `thermal(s')`.

mod epr;
mod grid;
mod heterodyne;
mod homodyne;
mod weighted;

pub use epr::{
    amplify_epr, bayes_order_residual, photon_number_scenario, EprSpec, PhotonNumberScenario,
    ThermalSpec,
};
pub use grid::{GridKind, GridMeta, GridSpec};
pub use heterodyne::{heterodyne_ensemble, heterodyne_scenario, HeterodyneReport};
pub use homodyne::{
    homodyne_ensemble, homodyne_squeezing, homodyne_variance, no_signaling_check, NoSignalDiagnostics,
    NoSignalReport, Quadrature,
};
pub use weighted::{condition_ensemble, ensemble_density, WeightedEnsemble};

use crate::fock::{thermal_tail, DEFAULT_TAIL_TOLERANCE};
use crate::{Error, Result};

/// Trace tolerance the distance metric requires of both inputs.
const TRACE_BUDGET: f64 = 1e-8;

/// Checks the thermal(s') truncation tail at `n_max`. Tails beyond the trace
/// budget are an error; tails between the default tolerance and the trace
/// budget come back as a warning for the report diagnostics.
fn check_thermal_tail(s_prime: f64, n_max: usize) -> Result<Option<String>> {
    let tail = thermal_tail(s_prime, n_max);
    if tail > TRACE_BUDGET {
        return Err(Error::Budget(format!(
            "thermal tail {tail:e} at n_max = {n_max} exceeds the trace budget {TRACE_BUDGET:e}"
        )));
    }
    if tail > DEFAULT_TAIL_TOLERANCE {
        return Ok(Some(format!(
            "thermal tail {tail:e} at n_max = {n_max} exceeds {DEFAULT_TAIL_TOLERANCE:e}"
        )));
    }
    Ok(None)
}

fn check_epr_gain(s: f64, g: f64) -> Result<()> {
    if !s.is_finite() || s <= 0.0 {
        return Err(Error::invalid(format!("two-mode squeezing s = {s} must be > 0")));
    }
    if !g.is_finite() || g <= 0.0 {
        return Err(Error::invalid(format!("gain {g} must be positive")));
    }
    Ok(())
}
