use std::f64::consts::TAU;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Largest photon-number cutoff any constructor accepts.
pub const MAX_CUTOFF: usize = 20_000;

/// Below this squeezing the coherent-state branch replaces the Hermite
/// expansion, whose argument contains `1/√(tanh r)`.
const COHERENT_BRANCH_R: f64 = 1e-12;

/// Scaled recurrence values are renormalized once they leave this window.
const RESCALE_HI: f64 = 1e150;
const RESCALE_LO: f64 = 1e-150;

/// Log-magnitude beyond which an amplitude cannot be represented.
const LOG_MAGNITUDE_BUDGET: f64 = 700.0;

/// Amplitudes `c_0 … c_{n_max}` of a single-mode pure state.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "FockVectorRepr", into = "FockVectorRepr")]
pub struct FockVector {
    amps: Vec<Complex64>,
}

/// JSON layout: `{"n_max": N, "amps": [[re, im], ...]}`.
#[derive(Serialize, Deserialize)]
struct FockVectorRepr {
    n_max: usize,
    amps: Vec<Complex64>,
}

impl TryFrom<FockVectorRepr> for FockVector {
    type Error = Error;

    fn try_from(repr: FockVectorRepr) -> Result<Self> {
        if repr.amps.len() != repr.n_max + 1 {
            return Err(Error::invalid(format!(
                "n_max = {} but {} amplitudes given",
                repr.n_max,
                repr.amps.len()
            )));
        }
        FockVector::new(repr.amps)
    }
}

impl From<FockVector> for FockVectorRepr {
    fn from(v: FockVector) -> Self {
        FockVectorRepr {
            n_max: v.n_max(),
            amps: v.amps,
        }
    }
}

impl FockVector {
    pub fn new(amps: Vec<Complex64>) -> Result<Self> {
        if amps.is_empty() {
            return Err(Error::invalid("a Fock vector needs at least the vacuum amplitude"));
        }
        if amps.len() > MAX_CUTOFF + 1 {
            return Err(Error::CutoffTooLarge(format!(
                "{} amplitudes exceed the cutoff limit {MAX_CUTOFF}",
                amps.len()
            )));
        }
        if let Some(n) = amps.iter().position(|c| !c.re.is_finite() || !c.im.is_finite()) {
            return Err(Error::invalid(format!("amplitude c_{n} is not finite")));
        }
        Ok(FockVector { amps })
    }

    pub fn zeros(n_max: usize) -> Self {
        FockVector {
            amps: vec![Complex64::new(0.0, 0.0); n_max + 1],
        }
    }

    /// Number state `|n⟩` in a space cut at `n_max`.
    pub fn basis(n: usize, n_max: usize) -> Result<Self> {
        if n > n_max {
            return Err(Error::invalid(format!("|{n}⟩ does not fit below cutoff {n_max}")));
        }
        let mut v = FockVector::zeros(n_max);
        v.amps[n] = Complex64::new(1.0, 0.0);
        Ok(v)
    }

    pub fn n_max(&self) -> usize {
        self.amps.len() - 1
    }

    pub fn amps(&self) -> &[Complex64] {
        &self.amps
    }

    pub fn into_amps(self) -> Vec<Complex64> {
        self.amps
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amps.iter().map(|c| c.norm_sqr()).sum()
    }

    pub fn normalized(&self) -> Result<FockVector> {
        let norm = self.norm_sqr().sqrt();
        if norm == 0.0 || !norm.is_finite() {
            return Err(Error::invalid("cannot normalize a zero or non-finite vector"));
        }
        Ok(FockVector {
            amps: self.amps.iter().map(|c| c / norm).collect(),
        })
    }

    /// First `n_max + 1` amplitudes, or zero-padded up to `n_max`.
    pub fn resized(&self, n_max: usize) -> FockVector {
        let mut amps = self.amps.clone();
        amps.resize(n_max + 1, Complex64::new(0.0, 0.0));
        FockVector { amps }
    }

    /// Applies `e^{iθ n̂}`.
    pub fn phase_rotated(&self, theta: f64) -> FockVector {
        FockVector {
            amps: self
                .amps
                .iter()
                .enumerate()
                .map(|(n, c)| c * Complex64::from_polar(1.0, theta * n as f64))
                .collect(),
        }
    }
}

/// Gaussian pure state `D(α)S(ξ)|0⟩` with `ξ = r e^{iφ}` and
/// `S(ξ) = exp((ξ* â² - ξ â†²)/2)`; `φ = 0` squeezes `x`, `φ = π` squeezes `p`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "ParamsRepr", into = "ParamsRepr")]
pub struct SqueezedCoherentParams {
    alpha: Complex64,
    r: f64,
    phi: f64,
}

#[derive(Serialize, Deserialize)]
struct ParamsRepr {
    alpha: Complex64,
    r: f64,
    phi: f64,
}

impl TryFrom<ParamsRepr> for SqueezedCoherentParams {
    type Error = Error;

    fn try_from(p: ParamsRepr) -> Result<Self> {
        SqueezedCoherentParams::new(p.alpha, p.r, p.phi)
    }
}

impl From<SqueezedCoherentParams> for ParamsRepr {
    fn from(p: SqueezedCoherentParams) -> Self {
        ParamsRepr {
            alpha: p.alpha,
            r: p.r,
            phi: p.phi,
        }
    }
}

impl SqueezedCoherentParams {
    /// `phi` is reduced to `[0, 2π)`.
    pub fn new(alpha: Complex64, r: f64, phi: f64) -> Result<Self> {
        if !(alpha.re.is_finite() && alpha.im.is_finite()) {
            return Err(Error::invalid("displacement must be finite"));
        }
        if !r.is_finite() || r < 0.0 {
            return Err(Error::invalid(format!("squeezing strength r = {r} must be finite and ≥ 0")));
        }
        if !phi.is_finite() {
            return Err(Error::invalid("squeezing angle must be finite"));
        }
        let mut phi = phi.rem_euclid(TAU);
        if phi >= TAU {
            phi = 0.0;
        }
        Ok(SqueezedCoherentParams { alpha, r, phi })
    }

    /// State centred on quadrature means `(x, p)`.
    pub fn from_quadratures(x: f64, p: f64, r: f64, phi: f64) -> Result<Self> {
        Self::new(Complex64::new(x / 2.0, p / 2.0), r, phi)
    }

    pub fn coherent(alpha: Complex64) -> Result<Self> {
        Self::new(alpha, 0.0, 0.0)
    }

    pub fn vacuum_squeezed(r: f64, phi: f64) -> Result<Self> {
        Self::new(Complex64::new(0.0, 0.0), r, phi)
    }

    pub fn alpha(&self) -> Complex64 {
        self.alpha
    }

    pub fn r(&self) -> f64 {
        self.r
    }

    pub fn phi(&self) -> f64 {
        self.phi
    }

    pub fn x(&self) -> f64 {
        2.0 * self.alpha.re
    }

    pub fn p(&self) -> f64 {
        2.0 * self.alpha.im
    }

    /// `τ = e^{iφ} tanh r`.
    pub fn tau(&self) -> Complex64 {
        Complex64::from_polar(self.r.tanh(), self.phi)
    }

    /// `α + α* τ`, the combination the filtration scales by `g`.
    pub fn beta(&self) -> Complex64 {
        self.alpha + self.alpha.conj() * self.tau()
    }

    /// Parameters of `e^{iθ n̂}|α, ξ⟩`: `α → α e^{iθ}`, `φ → φ + 2θ`.
    pub fn rotated(&self, theta: f64) -> Self {
        Self::new(self.alpha * Complex64::from_polar(1.0, theta), self.r, self.phi + 2.0 * theta)
            .expect("rotation preserves validity")
    }

    pub fn with_alpha(&self, alpha: Complex64) -> Result<Self> {
        Self::new(alpha, self.r, self.phi)
    }

    pub fn with_r(&self, r: f64) -> Result<Self> {
        Self::new(self.alpha, r, self.phi)
    }
}

fn check_cutoff(n_max: usize) -> Result<()> {
    if n_max > MAX_CUTOFF {
        return Err(Error::CutoffTooLarge(format!(
            "n_max = {n_max} exceeds the limit {MAX_CUTOFF}"
        )));
    }
    Ok(())
}

/// Squeezed vacuum `|0, r e^{iφ}⟩` cut at `n_max` (not renormalized):
/// `c_{2n} = (cosh r)^{-1/2} √C(2n, n) (-e^{iφ} tanh r / 2)^n`, odd amplitudes zero.
pub fn vacuum_squeezed_coeffs(r: f64, phi: f64, n_max: usize) -> Result<FockVector> {
    let params = SqueezedCoherentParams::vacuum_squeezed(r, phi)?;
    check_cutoff(n_max)?;
    let tau = params.tau();
    let mut amps = vec![Complex64::new(0.0, 0.0); n_max + 1];
    let mut c = Complex64::new(r.cosh().powf(-0.5), 0.0);
    amps[0] = c;
    // c_{2n+2} = -τ √((2n+1)/(2n+2)) c_{2n}
    let mut n = 0usize;
    while 2 * n + 2 <= n_max {
        let k = (2 * n) as f64;
        c *= -tau * ((k + 1.0) / (k + 2.0)).sqrt();
        amps[2 * n + 2] = c;
        n += 1;
    }
    FockVector::new(amps)
}

/// Coherent state `e^{-|α|²/2} α^n / √n!`, evaluated in log magnitude.
pub fn coherent_coeffs(alpha: Complex64, n_max: usize) -> Result<FockVector> {
    check_cutoff(n_max)?;
    let mut amps = vec![Complex64::new(0.0, 0.0); n_max + 1];
    let base = -0.5 * alpha.norm_sqr();
    amps[0] = Complex64::new(base.exp(), 0.0);
    if alpha.norm() == 0.0 {
        return FockVector::new(amps);
    }
    let (ln_mod, arg) = (alpha.norm().ln(), alpha.arg());
    let mut ln_mag = base;
    for (n, amp) in amps.iter_mut().enumerate().skip(1) {
        ln_mag += ln_mod - 0.5 * (n as f64).ln();
        if ln_mag > LOG_MAGNITUDE_BUDGET {
            return Err(Error::CutoffTooLarge(format!(
                "coherent amplitude c_{n} exceeds the log-magnitude budget"
            )));
        }
        *amp = Complex64::from_polar(ln_mag.exp(), arg * n as f64);
    }
    FockVector::new(amps)
}

/// Squeezed coherent state `|α, ξ⟩` cut at `n_max` (not renormalized).
///
/// The amplitudes are `c_n = N₀ b_n` with
/// `N₀ = (cosh r)^{-1/2} exp{-(|α|² + α*² τ)/2}` and
/// `b_n = H_n(β/√(2τ)) (τ/2)^{n/2} / √n!`, `β = α + α* τ`. From the Hermite
/// recurrence, `b_{n+1} = (β b_n - τ √n b_{n-1}) / √(n+1)`, which is free of
/// `√τ`, factorials and bare Hermite values. `b` is kept inside a bounded
/// window and the removed scale is carried as a log offset.
pub fn coherent_squeezed_coeffs(params: &SqueezedCoherentParams, n_max: usize) -> Result<FockVector> {
    check_cutoff(n_max)?;
    if params.r() < COHERENT_BRANCH_R {
        return coherent_coeffs(params.alpha(), n_max);
    }
    let alpha = params.alpha();
    let tau = params.tau();
    let beta = params.beta();
    let ln_n0 = -0.5 * params.r().cosh().ln() - 0.5 * (alpha.norm_sqr() + alpha.conj() * alpha.conj() * tau);

    let mut amps = vec![Complex64::new(0.0, 0.0); n_max + 1];
    let mut log_scale = 0.0f64;
    let mut prev = Complex64::new(0.0, 0.0);
    let mut cur = Complex64::new(1.0, 0.0);
    let emit = |b: Complex64, log_scale: f64, n: usize| -> Result<Complex64> {
        if b.norm() == 0.0 {
            return Ok(Complex64::new(0.0, 0.0));
        }
        let ln_mag = ln_n0.re + log_scale + b.norm().ln();
        if ln_mag > LOG_MAGNITUDE_BUDGET {
            return Err(Error::CutoffTooLarge(format!(
                "amplitude c_{n} exceeds the log-magnitude budget"
            )));
        }
        Ok(Complex64::from_polar(ln_mag.exp(), ln_n0.im + b.arg()))
    };
    amps[0] = emit(cur, log_scale, 0)?;
    for n in 0..n_max {
        let next = (beta * cur - tau * (n as f64).sqrt() * prev) / ((n + 1) as f64).sqrt();
        prev = cur;
        cur = next;
        let big = cur.norm().max(prev.norm());
        if big > RESCALE_HI || (big < RESCALE_LO && big > 0.0) {
            cur /= big;
            prev /= big;
            log_scale += big.ln();
        }
        amps[n + 1] = emit(cur, log_scale, n + 1)?;
    }
    FockVector::new(amps)
}
