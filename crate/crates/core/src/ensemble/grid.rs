use serde::{Deserialize, Serialize};

use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GridKind {
    /// Gauss–Hermite in a quadrature variable, Gauss–Laguerre in `|α|²`.
    /// The node range is intrinsic to the rule and `sigmas` is not used.
    Gauss,
    /// Trapezoid on `±sigmas·σ` (homodyne) or midpoint on
    /// `|α| ≤ sigmas·√ν` (heterodyne).
    Uniform,
}

/// Discretization of a continuous preparation ensemble.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GridSpec {
    pub kind: GridKind,
    /// Nodes in the quadrature variable, or radial nodes for heterodyne.
    pub points: usize,
    /// Half-width of a uniform grid in standard deviations.
    pub sigmas: f64,
    /// Angular nodes for heterodyne grids.
    pub angles: usize,
}

impl Default for GridSpec {
    fn default() -> Self {
        GridSpec {
            kind: GridKind::Gauss,
            points: 201,
            sigmas: 6.0,
            angles: 64,
        }
    }
}

impl GridSpec {
    pub fn with_points(self, points: usize) -> Self {
        GridSpec { points, ..self }
    }

    pub fn with_kind(self, kind: GridKind) -> Self {
        GridSpec { kind, ..self }
    }

    pub fn validate(&self) -> Result<()> {
        let min_points = match self.kind {
            GridKind::Gauss => 1,
            GridKind::Uniform => 2,
        };
        if self.points < min_points || self.points > 2000 {
            return Err(Error::invalid(format!(
                "grid points {} must lie in {min_points}..=2000",
                self.points
            )));
        }
        if !(self.sigmas > 0.0 && self.sigmas.is_finite()) {
            return Err(Error::invalid(format!("grid range {} σ must be positive", self.sigmas)));
        }
        if self.angles == 0 || self.angles > 4096 {
            return Err(Error::invalid(format!("angular nodes {} must lie in 1..=4096", self.angles)));
        }
        Ok(())
    }
}

/// What a [`WeightedEnsemble`](super::WeightedEnsemble) discretizes.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GridMeta {
    pub grid: GridSpec,
    /// `"x"`, `"p"` or `"alpha"`.
    pub variable: String,
    /// Standard deviation of the discretized variable (`σ`, or `√ν` for `α`).
    pub scale: f64,
}
