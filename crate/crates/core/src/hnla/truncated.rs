//! The physical approximation `T_tr = g^{n̂}/g^N` acting on the input cut at
//! `N` photons.

use serde::{Deserialize, Serialize};

use super::laws::transform_squeezing;
use crate::fock::{inner_product, vacuum_squeezed_coeffs, FockVector};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TruncatedSqueezerResult {
    pub r_prime: f64,
    /// `|⟨0,ξ'|0,ξ'⟩_tr|²` against the ideal untruncated output.
    pub fidelity: f64,
    /// Same fidelity from the closed-form sum `f_N(r')`.
    pub fidelity_closed_form: f64,
    /// `‖T_tr ψ_tr‖²` with `ψ_tr` the renormalized truncated input.
    pub p_succ: f64,
    /// `f_N(r') / (g^{2N} f_N(r))`, a closed form that omits the
    /// `cosh r'/cosh r` factor. Reported for comparison only.
    pub p_succ_formula: f64,
}

/// `f_N(r) = (1/cosh r) Σ_{n ≤ N} (tanh r / 2)^n H_n(0)² / n!`, the squared
/// norm of the squeezed vacuum cut at `N` photons.
pub fn truncated_norm(r: f64, n_trunc: usize) -> f64 {
    // even terms only: C(2m, m) (tanh² r / 4)^m, ratio (2m+1)/(2m+2) tanh² r
    let t2 = r.tanh().powi(2);
    let mut term = 1.0f64;
    let mut sum = 1.0f64;
    let mut m = 0usize;
    while 2 * m + 2 <= n_trunc {
        term *= (2 * m + 1) as f64 / (2 * m + 2) as f64 * t2;
        sum += term;
        m += 1;
        if term < f64::EPSILON * 1e-4 * sum {
            break;
        }
    }
    sum / r.cosh()
}

/// Fidelity and success probability of the truncated squeezer on `|0, r e^{iφ}⟩`.
pub fn truncated_squeezer(r: f64, phi: f64, g: f64, n_trunc: usize) -> Result<TruncatedSqueezerResult> {
    let rp = transform_squeezing(r, g)?;
    let input = vacuum_squeezed_coeffs(r, phi, n_trunc)?.normalized()?;
    let top = n_trunc as i32;
    let filtered: Vec<_> = input
        .amps()
        .iter()
        .enumerate()
        .map(|(n, c)| c * g.powi(n as i32 - top))
        .collect();
    let filtered = FockVector::new(filtered)?;
    let p_succ = filtered.norm_sqr();
    if !(p_succ > 0.0) {
        return Err(Error::CutoffTooLarge(format!(
            "success probability underflows at N = {n_trunc}"
        )));
    }
    let out = filtered.normalized()?;
    let ideal = vacuum_squeezed_coeffs(rp, phi, n_trunc)?;
    let fidelity = inner_product(&ideal, &out).norm_sqr();

    let (f_out, f_in) = (truncated_norm(rp, n_trunc), truncated_norm(r, n_trunc));
    let p_succ_formula = (f_out.ln() - 2.0 * n_trunc as f64 * g.ln() - f_in.ln()).exp();
    Ok(TruncatedSqueezerResult {
        r_prime: rp,
        fidelity,
        fidelity_closed_form: f_out,
        p_succ,
        p_succ_formula,
    })
}
