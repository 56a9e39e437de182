//! Closed-form transformation laws of the ideal filtration on `|α, ξ⟩`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::fock::SqueezedCoherentParams;
use crate::{Error, Result};

/// Products within a few ulp of 1 count as the divergence point.
const BOUNDARY_SLACK: f64 = 4.0 * f64::EPSILON;

fn check_gain(g: f64) -> Result<()> {
    if !g.is_finite() || g <= 0.0 {
        return Err(Error::invalid(format!("gain {g} must be positive and finite")));
    }
    Ok(())
}

fn ln_cosh(x: f64) -> f64 {
    let a = x.abs();
    a + (-2.0 * a).exp().ln_1p() - std::f64::consts::LN_2
}

/// Output squeezing `r' = artanh(g² tanh r)`, independent of the angle.
pub fn transform_squeezing(r: f64, g: f64) -> Result<f64> {
    check_gain(g)?;
    if !r.is_finite() || r < 0.0 {
        return Err(Error::invalid(format!("squeezing r = {r} must be ≥ 0")));
    }
    let t = g * g * r.tanh();
    if t >= 1.0 - BOUNDARY_SLACK {
        return Err(Error::UnphysicalGain(format!(
            "g² tanh r = {t} ≥ 1 (g = {g}, r = {r}); the output squeezing diverges"
        )));
    }
    Ok(t.atanh())
}

/// Output displacement `α'` solving `α' + α'* τ' = g (α + α* τ)`.
///
/// Split into real and imaginary parts this is a 2×2 linear system with
/// determinant `1 - tanh² r' > 0`.
pub fn transform_displacement(params: &SqueezedCoherentParams, g: f64) -> Result<Complex64> {
    let rp = transform_squeezing(params.r(), g)?;
    let tau_p = Complex64::from_polar(rp.tanh(), params.phi());
    let rhs = params.beta() * g;
    let (c, d) = (tau_p.re, tau_p.im);
    // [1 + c, d; d, 1 - c] [u; v] = [Re rhs; Im rhs]
    let det = 1.0 - c * c - d * d;
    let u = ((1.0 - c) * rhs.re - d * rhs.im) / det;
    let v = ((1.0 + c) * rhs.im - d * rhs.re) / det;
    Ok(Complex64::new(u, v))
}

/// Gains `(x'/x, p'/p)` for an x-squeezed (`φ = 0`) input:
/// `g(1 + tanh r)/(1 + tanh r')` and `g(1 - tanh r)/(1 - tanh r')`.
pub fn quadrature_gains(r: f64, g: f64) -> Result<(f64, f64)> {
    let rp = transform_squeezing(r, g)?;
    let (t, tp) = (r.tanh(), rp.tanh());
    Ok((g * (1.0 + t) / (1.0 + tp), g * (1.0 - t) / (1.0 - tp)))
}

/// Mean of the squeezed quadrature after amplification.
pub fn squeezed_quadrature_map(x: f64, r: f64, g: f64) -> Result<f64> {
    Ok(quadrature_gains(r, g)?.0 * x)
}

/// Natural log of [`success_weight_closed_form`].
pub fn ln_success_weight(params: &SqueezedCoherentParams, g: f64) -> Result<f64> {
    let rp = transform_squeezing(params.r(), g)?;
    let alpha_p = transform_displacement(params, g)?;
    let out = SqueezedCoherentParams::new(alpha_p, rp, params.phi())?;
    let quad = |p: &SqueezedCoherentParams| (p.alpha().conj() * p.beta()).re;
    Ok(ln_cosh(rp) - ln_cosh(params.r()) + quad(&out) - quad(params))
}

/// Relative success weight
/// `(cosh r'/cosh r) exp{Re[α'*(α' + α'* τ')] - Re[α*(α + α* τ)]}`.
///
/// Equals `Σ g^{2n} |c_n|²` of the normalized input, i.e. the ratio of the
/// ideal device's success probabilities for this input and for vacuum.
pub fn success_weight_closed_form(params: &SqueezedCoherentParams, g: f64) -> Result<f64> {
    Ok(ln_success_weight(params, g)?.exp())
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TransformResult {
    pub params_out: SqueezedCoherentParams,
    pub rel_success_weight: f64,
}

/// Output state parameters and relative success weight together.
pub fn transform(params: &SqueezedCoherentParams, g: f64) -> Result<TransformResult> {
    let rp = transform_squeezing(params.r(), g)?;
    let alpha_p = transform_displacement(params, g)?;
    Ok(TransformResult {
        params_out: SqueezedCoherentParams::new(alpha_p, rp, params.phi())?,
        rel_success_weight: success_weight_closed_form(params, g)?,
    })
}
