use std::f64::consts::PI;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use super::epr::amplify_epr;
use super::grid::{GridKind, GridMeta, GridSpec};
use super::weighted::{condition_ensemble, ensemble_density, WeightedEnsemble};
use super::{check_epr_gain, check_thermal_tail};
use crate::fock::{auto_cutoff_thermal, thermal_density, trace_distance, DensityMatrix, SqueezedCoherentParams, DEFAULT_TAIL_TOLERANCE};
use crate::hnla::{squeezed_quadrature_map, transform_squeezing};
use crate::quadrature::standard_normal;
use crate::{Error, Result};

/// Quadrature Alice measures with her homodyne detector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Quadrature {
    X,
    P,
}

/// Single-mode squeezing of the states a homodyne measurement prepares:
/// `e^{2r} = cosh 2s`, equivalently `tanh r = tanh² s`.
pub fn homodyne_squeezing(s: f64) -> f64 {
    0.5 * (2.0 * s).cosh().ln()
}

/// Variance of the prepared means, `σ² = e^{2r} - e^{-2r}`.
pub fn homodyne_variance(r: f64) -> f64 {
    2.0 * (2.0 * r).sinh()
}

/// Ensemble of x-squeezed states centred on `(x, 0)` (or p-squeezed on
/// `(0, p)`) with Gaussian-distributed means of variance `σ²`.
pub fn homodyne_ensemble(s: f64, quadrature: Quadrature, grid: &GridSpec) -> Result<WeightedEnsemble> {
    if !s.is_finite() || s <= 0.0 {
        return Err(Error::invalid(format!("two-mode squeezing s = {s} must be > 0")));
    }
    grid.validate()?;
    let r = homodyne_squeezing(s);
    let sigma = homodyne_variance(r).sqrt();
    let nodes: Vec<(f64, f64)> = match grid.kind {
        GridKind::Gauss => {
            let rule = standard_normal(grid.points)?;
            rule.nodes.iter().zip(&rule.weights).map(|(z, w)| (sigma * z, *w)).collect()
        }
        GridKind::Uniform => {
            let half = grid.sigmas * sigma;
            let h = 2.0 * half / (grid.points - 1) as f64;
            (0..grid.points)
                .map(|k| {
                    let x = -half + k as f64 * h;
                    let end = if k == 0 || k == grid.points - 1 { 0.5 } else { 1.0 };
                    (x, end * h * (-0.5 * (x / sigma).powi(2)).exp())
                })
                .collect()
        }
    };
    let components = nodes
        .into_iter()
        .map(|(m, w)| {
            let p = match quadrature {
                Quadrature::X => SqueezedCoherentParams::from_quadratures(m, 0.0, r, 0.0)?,
                Quadrature::P => SqueezedCoherentParams::from_quadratures(0.0, m, r, PI)?,
            };
            Ok((w, p))
        })
        .collect::<Result<Vec<_>>>()?;
    let variable = match quadrature {
        Quadrature::X => "x",
        Quadrature::P => "p",
    };
    WeightedEnsemble::new(
        components,
        GridMeta {
            grid: *grid,
            variable: variable.into(),
            scale: sigma,
        },
    )
}

/// Numerical budgets and secondary checks behind a [`NoSignalReport`].
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct NoSignalDiagnostics {
    pub n_max_auto: bool,
    pub thermal_tail: f64,
    pub r: f64,
    pub r_prime: f64,
    pub sigma: f64,
    /// `|tanh r' - tanh² s'|`.
    pub squeezing_relation_residual: f64,
    pub weight_sum_residual_x: f64,
    pub weight_sum_residual_p: f64,
    pub trace_x: f64,
    pub trace_p: f64,
    pub min_eigenvalue: f64,
    pub max_off_diagonal: f64,
    /// `max |ρ_p - U ρ_x U†|`, `U = e^{iπn̂/2}`.
    pub rotation_residual: f64,
    /// Largest gap between the scalar squeezed-quadrature map and the
    /// displacement returned by conditioning.
    pub displacement_map_residual: f64,
    pub budget_warnings: Vec<String>,
}

/// Outcome of the x-versus-p signaling test.
///
/// Serializes to exactly `s, g, s_prime, grid, n_max, d_xp, d_x_thermal,
/// d_p_thermal, identity_residual_max, runtime_ms`; diagnostics stay
/// in-process.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NoSignalReport {
    pub s: f64,
    pub g: f64,
    pub s_prime: f64,
    pub grid: GridSpec,
    pub n_max: usize,
    pub d_xp: f64,
    pub d_x_thermal: f64,
    pub d_p_thermal: f64,
    /// Largest relative residual of `(1+t)²/t · x² = (1+t')²/t' · x'²` over
    /// the grid.
    pub identity_residual_max: f64,
    pub runtime_ms: f64,
    #[serde(skip)]
    pub diagnostics: NoSignalDiagnostics,
}

impl NoSignalReport {
    pub fn max_distance(&self) -> f64 {
        self.d_xp.max(self.d_x_thermal).max(self.d_p_thermal)
    }
}

fn cancellation_residual(x: f64, t: f64, x_prime: f64, t_prime: f64) -> f64 {
    let lhs = (1.0 + t).powi(2) / t * x * x;
    let rhs = (1.0 + t_prime).powi(2) / t_prime * x_prime * x_prime;
    let scale = lhs.abs().max(rhs.abs());
    if scale == 0.0 {
        0.0
    } else {
        (lhs - rhs).abs() / scale
    }
}

/// Alice homodynes x or p on `|EPR_s⟩`; Bob amplifies every component. The
/// two conditioned mixtures are compared with each other and with
/// thermal(s').
pub fn no_signaling_check(s: f64, g: f64, grid: &GridSpec, n_max: Option<usize>) -> Result<NoSignalReport> {
    let start = Instant::now();
    check_epr_gain(s, g)?;
    let s_prime = amplify_epr(s, g)?;
    let r = homodyne_squeezing(s);
    let r_prime = transform_squeezing(r, g)?;
    let n_max_auto = n_max.is_none();
    let n_max = match n_max {
        Some(n) => n,
        None => auto_cutoff_thermal(s_prime, DEFAULT_TAIL_TOLERANCE)?,
    };
    let mut budget_warnings: Vec<String> = check_thermal_tail(s_prime, n_max)?.into_iter().collect();

    let ens_x = homodyne_ensemble(s, Quadrature::X, grid)?;
    let ens_p = homodyne_ensemble(s, Quadrature::P, grid)?;
    let cond_x = condition_ensemble(&ens_x, g)?;
    let cond_p = condition_ensemble(&ens_p, g)?;

    let (t, tp) = (r.tanh(), r_prime.tanh());
    let mut identity_residual_max = 0.0f64;
    let mut displacement_map_residual = 0.0f64;
    for ((_, before), (_, after)) in ens_x.components().iter().zip(cond_x.components()) {
        let x_prime = squeezed_quadrature_map(before.x(), r, g)?;
        identity_residual_max = identity_residual_max.max(cancellation_residual(before.x(), t, x_prime, tp));
        displacement_map_residual = displacement_map_residual.max((after.x() - x_prime).abs());
    }
    for ((_, before), (_, after)) in ens_p.components().iter().zip(cond_p.components()) {
        let p_prime = squeezed_quadrature_map(before.p(), r, g)?;
        identity_residual_max = identity_residual_max.max(cancellation_residual(before.p(), t, p_prime, tp));
        displacement_map_residual = displacement_map_residual.max((after.p() - p_prime).abs());
    }
    if identity_residual_max > 1e-10 {
        budget_warnings.push(format!(
            "cancellation identity residual {identity_residual_max:e} exceeds 1e-10"
        ));
    }

    let rho_x = ensemble_density(&cond_x, n_max)?;
    let rho_p = ensemble_density(&cond_p, n_max)?;
    let thermal = thermal_density(s_prime, n_max)?;
    let d_xp = trace_distance(&rho_x, &rho_p)?;
    let d_x_thermal = trace_distance(&rho_x, &thermal)?;
    let d_p_thermal = trace_distance(&rho_p, &thermal)?;

    let rotation_residual = rho_p.max_abs_diff(&rho_x.phase_rotated(PI / 2.0))?;
    let min_eig = |rho: &DensityMatrix| rho.min_eigenvalue();
    let diagnostics = NoSignalDiagnostics {
        n_max_auto,
        thermal_tail: crate::fock::thermal_tail(s_prime, n_max),
        r,
        r_prime,
        sigma: homodyne_variance(r).sqrt(),
        squeezing_relation_residual: (tp - s_prime.tanh().powi(2)).abs(),
        weight_sum_residual_x: (cond_x.weight_sum() - 1.0).abs(),
        weight_sum_residual_p: (cond_p.weight_sum() - 1.0).abs(),
        trace_x: rho_x.trace(),
        trace_p: rho_p.trace(),
        min_eigenvalue: min_eig(&rho_x).min(min_eig(&rho_p)),
        max_off_diagonal: rho_x.max_off_diagonal().max(rho_p.max_off_diagonal()),
        rotation_residual,
        displacement_map_residual,
        budget_warnings,
    };
    Ok(NoSignalReport {
        s,
        g,
        s_prime,
        grid: *grid,
        n_max,
        d_xp,
        d_x_thermal,
        d_p_thermal,
        identity_residual_max,
        runtime_ms: start.elapsed().as_secs_f64() * 1e3,
        diagnostics,
    })
}
