use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::grid::GridMeta;
use crate::fock::density::mix_pure;
use crate::fock::{coherent_squeezed_coeffs, DensityMatrix, SqueezedCoherentParams};
use crate::hnla::{ln_success_weight, transform_displacement, transform_squeezing};
use crate::{Error, Result};

/// Finite mixture of squeezed coherent states with weights summing to one.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WeightedEnsemble {
    components: Vec<(f64, SqueezedCoherentParams)>,
    grid_meta: GridMeta,
    /// `|Σ w - 1|` of the raw weights before normalization.
    raw_weight_residual: f64,
}

impl WeightedEnsemble {
    /// Normalizes the weights; all must be finite and non-negative with a
    /// positive sum.
    pub fn new(components: Vec<(f64, SqueezedCoherentParams)>, grid_meta: GridMeta) -> Result<Self> {
        if let Some((i, (w, _))) = components
            .iter()
            .enumerate()
            .find(|(_, (w, _))| !w.is_finite() || *w < 0.0)
        {
            return Err(Error::invalid(format!("component {i} has weight {w}")));
        }
        let total: f64 = components.iter().map(|(w, _)| w).sum();
        if !(total > 0.0) || !total.is_finite() {
            return Err(Error::invalid(format!("ensemble weights sum to {total}")));
        }
        let components = components.into_iter().map(|(w, p)| (w / total, p)).collect();
        Ok(WeightedEnsemble {
            components,
            grid_meta,
            raw_weight_residual: (total - 1.0).abs(),
        })
    }

    pub fn components(&self) -> &[(f64, SqueezedCoherentParams)] {
        &self.components
    }

    pub fn grid_meta(&self) -> &GridMeta {
        &self.grid_meta
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn weight_sum(&self) -> f64 {
        self.components.iter().map(|(w, _)| w).sum()
    }

    pub fn raw_weight_residual(&self) -> f64 {
        self.raw_weight_residual
    }
}

/// Bayes rule: every component goes through the ideal amplifier and its
/// weight is multiplied by its relative success weight; the list is
/// renormalized once at the end.
pub fn condition_ensemble(ens: &WeightedEnsemble, g: f64) -> Result<WeightedEnsemble> {
    let mapped: Vec<(f64, SqueezedCoherentParams)> = ens
        .components
        .par_iter()
        .enumerate()
        .map(|(i, (w, p))| {
            let tag = |e: Error| match e {
                Error::UnphysicalGain(m) => Error::UnphysicalGain(format!("component {i}: {m}")),
                other => other,
            };
            let rp = transform_squeezing(p.r(), g).map_err(tag)?;
            let alpha = transform_displacement(p, g).map_err(tag)?;
            let ln_w = if *w > 0.0 {
                w.ln() + ln_success_weight(p, g).map_err(tag)?
            } else {
                f64::NEG_INFINITY
            };
            Ok((ln_w, SqueezedCoherentParams::new(alpha, rp, p.phi())?))
        })
        .collect::<Result<_>>()?;
    let top = mapped.iter().map(|(l, _)| *l).fold(f64::NEG_INFINITY, f64::max);
    if !top.is_finite() {
        return Err(Error::invalid("conditioned ensemble has no weight left"));
    }
    let components = mapped.into_iter().map(|(l, p)| ((l - top).exp(), p)).collect();
    WeightedEnsemble::new(components, ens.grid_meta.clone())
}

/// `Σ w_i |ψ_i⟩⟨ψ_i|` on `|0⟩ … |n_max⟩`, component vectors not
/// renormalized, summed pairwise in a fixed order.
pub fn ensemble_density(ens: &WeightedEnsemble, n_max: usize) -> Result<DensityMatrix> {
    let amps: Vec<_> = ens
        .components
        .par_iter()
        .map(|(_, p)| coherent_squeezed_coeffs(p, n_max).map(|v| v.into_amps()))
        .collect::<Result<_>>()?;
    Ok(mix_pure(ens.len(), n_max + 1, |i| (ens.components[i].0, amps[i].clone())))
}
