use std::f64::consts::TAU;
use std::time::Instant;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::epr::{amplify_epr, ThermalSpec};
use super::grid::{GridKind, GridMeta, GridSpec};
use super::weighted::{condition_ensemble, ensemble_density, WeightedEnsemble};
use super::{check_epr_gain, check_thermal_tail};
use crate::fock::{auto_cutoff_thermal, thermal_density, trace_distance, SqueezedCoherentParams, DEFAULT_TAIL_TOLERANCE};
use crate::quadrature::gauss_laguerre;
use crate::Result;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HeterodyneReport {
    pub s: f64,
    pub g: f64,
    pub s_prime: f64,
    pub grid: GridSpec,
    pub n_max: usize,
    /// Trace distance between the conditioned coherent mixture and thermal(s').
    pub distance: f64,
    pub mean_photon_number: f64,
    /// `sinh² s'`.
    pub expected_mean_photon_number: f64,
    pub weight_sum_residual: f64,
    pub budget_warnings: Vec<String>,
    pub runtime_ms: f64,
}

/// Coherent states `|α⟩` drawn from `e^{-|α|²/ν}/(πν)`, `ν = sinh² s`, on a
/// polar grid (radial rule × uniform angles).
pub fn heterodyne_ensemble(s: f64, grid: &GridSpec) -> Result<WeightedEnsemble> {
    grid.validate()?;
    let nu = ThermalSpec::new(s)?.nu();
    let radial: Vec<(f64, f64)> = match grid.kind {
        GridKind::Gauss => {
            let rule = gauss_laguerre(grid.points)?;
            rule.nodes
                .iter()
                .zip(&rule.weights)
                .map(|(u, w)| ((nu * u).sqrt(), *w))
                .collect()
        }
        GridKind::Uniform => {
            let h = grid.sigmas * nu.sqrt() / grid.points as f64;
            (0..grid.points)
                .map(|k| {
                    let rho = (k as f64 + 0.5) * h;
                    (rho, 2.0 * rho / nu * (-rho * rho / nu).exp() * h)
                })
                .collect()
        }
    };
    let m = grid.angles;
    let mut components = Vec::with_capacity(radial.len() * m);
    for (rho, w) in radial {
        for j in 0..m {
            let alpha = Complex64::from_polar(rho, TAU * j as f64 / m as f64);
            components.push((w / m as f64, SqueezedCoherentParams::coherent(alpha)?));
        }
    }
    WeightedEnsemble::new(
        components,
        GridMeta {
            grid: *grid,
            variable: "alpha".into(),
            scale: nu.sqrt(),
        },
    )
}

/// Alice heterodynes her half of `|EPR_s⟩`; Bob amplifies each prepared
/// coherent state (`|α⟩ → |gα⟩`, weight `e^{(g²-1)|α|²}`).
pub fn heterodyne_scenario(s: f64, g: f64, grid: &GridSpec, n_max: Option<usize>) -> Result<HeterodyneReport> {
    let start = Instant::now();
    check_epr_gain(s, g)?;
    let s_prime = amplify_epr(s, g)?;
    let n_max = match n_max {
        Some(n) => n,
        None => auto_cutoff_thermal(s_prime, DEFAULT_TAIL_TOLERANCE)?,
    };
    let budget_warnings: Vec<String> = check_thermal_tail(s_prime, n_max)?.into_iter().collect();
    let ens = heterodyne_ensemble(s, grid)?;
    let cond = condition_ensemble(&ens, g)?;
    let rho = ensemble_density(&cond, n_max)?;
    let target = thermal_density(s_prime, n_max)?;
    let distance = trace_distance(&rho, &target)?;
    Ok(HeterodyneReport {
        s,
        g,
        s_prime,
        grid: *grid,
        n_max,
        distance,
        mean_photon_number: rho.mean_photon_number(),
        expected_mean_photon_number: s_prime.sinh().powi(2),
        weight_sum_residual: (cond.weight_sum() - 1.0).abs(),
        budget_warnings,
        runtime_ms: start.elapsed().as_secs_f64() * 1e3,
    })
}
