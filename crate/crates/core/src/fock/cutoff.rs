//! Photon-number cutoffs from analytic tail bounds.
//!
//! For a Gaussian pure state the generating function `⟨z^{n̂}⟩` is the
//! filtration success weight at gain `√z`, known in closed form for every
//! `z < 1/tanh r`. Markov's inequality on `z^{n̂}` then gives
//! `P(n̂ > N) ≤ ⟨z^{n̂}⟩ / z^{N+1}`, minimized over a fixed set of `z`.

use super::state::{SqueezedCoherentParams, MAX_CUTOFF};
use crate::hnla::ln_success_weight;
use crate::{Error, Result};

pub const DEFAULT_TAIL_TOLERANCE: f64 = 1e-10;

const Z_CANDIDATES: usize = 96;
const LN_Z_CEILING: f64 = 18.0;

fn ln_z_candidates(params: &SqueezedCoherentParams) -> impl Iterator<Item = f64> {
    let t = params.r().tanh();
    let ln_z_max = if t > 0.0 { (-t.ln()).min(LN_Z_CEILING) } else { LN_Z_CEILING };
    (1..Z_CANDIDATES).map(move |k| ln_z_max * k as f64 / Z_CANDIDATES as f64)
}

/// Upper bound on `Σ_{n > n_max} |c_n|²` for the normalized state `params`.
pub fn tail_bound(params: &SqueezedCoherentParams, n_max: usize) -> f64 {
    ln_z_candidates(params)
        .filter_map(|ln_z| {
            let ln_w = ln_success_weight(params, (0.5 * ln_z).exp()).ok()?;
            Some(ln_w - (n_max + 1) as f64 * ln_z)
        })
        .fold(f64::INFINITY, f64::min)
        .exp()
        .min(1.0)
}

/// Smallest cutoff whose tail bound is below `tol`.
pub fn auto_cutoff(params: &SqueezedCoherentParams, tol: f64) -> Result<usize> {
    if !(tol > 0.0 && tol < 1.0) {
        return Err(Error::invalid(format!("tail tolerance {tol} must lie in (0, 1)")));
    }
    let best = ln_z_candidates(params)
        .filter_map(|ln_z| {
            let ln_w = ln_success_weight(params, (0.5 * ln_z).exp()).ok()?;
            Some(((ln_w - tol.ln()) / ln_z).floor())
        })
        .fold(f64::INFINITY, f64::min);
    if !best.is_finite() || best > MAX_CUTOFF as f64 {
        return Err(Error::CutoffTooLarge(format!(
            "tail below {tol:e} needs a cutoff beyond {MAX_CUTOFF}"
        )));
    }
    Ok(best.max(0.0) as usize)
}

/// Exact tail `Σ_{n > n_max} p_n = (tanh s)^{2(n_max+1)}` of the thermal state.
pub fn thermal_tail(s: f64, n_max: usize) -> f64 {
    s.tanh().powi(2).powf((n_max + 1) as f64)
}

pub fn auto_cutoff_thermal(s: f64, tol: f64) -> Result<usize> {
    if !(tol > 0.0 && tol < 1.0) {
        return Err(Error::invalid(format!("tail tolerance {tol} must lie in (0, 1)")));
    }
    let q = s.tanh().powi(2);
    if q == 0.0 {
        return Ok(0);
    }
    let n = (tol.ln() / q.ln()).floor();
    if !n.is_finite() || n > MAX_CUTOFF as f64 {
        return Err(Error::CutoffTooLarge(format!(
            "thermal tail below {tol:e} at s = {s} needs a cutoff beyond {MAX_CUTOFF}"
        )));
    }
    Ok(n as usize)
}
