use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::state::{FockVector, MAX_CUTOFF};
use crate::reduce::pairwise_sum;
use crate::{Error, Result};

/// Hermitian, positive-semidefinite operator on `|0⟩ … |n_max⟩`.
///
/// The trace is recorded at construction and not forced to one: truncated
/// blocks of normalized states carry the missing tail mass.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "DensityRepr", into = "DensityRepr")]
pub struct DensityMatrix {
    elems: DMatrix<Complex64>,
    trace: f64,
}

/// JSON layout: `{"n_max": N, "trace": t, "elems": [[[re, im], ...], ...]}` (row-major).
#[derive(Serialize, Deserialize)]
struct DensityRepr {
    n_max: usize,
    trace: f64,
    elems: Vec<Vec<Complex64>>,
}

impl TryFrom<DensityRepr> for DensityMatrix {
    type Error = Error;

    fn try_from(repr: DensityRepr) -> Result<Self> {
        let dim = repr.n_max + 1;
        if repr.elems.len() != dim || repr.elems.iter().any(|row| row.len() != dim) {
            return Err(Error::invalid(format!("expected a {dim}×{dim} element array")));
        }
        let m = DMatrix::from_fn(dim, dim, |i, j| repr.elems[i][j]);
        DensityMatrix::from_matrix(m)
    }
}

impl From<DensityMatrix> for DensityRepr {
    fn from(d: DensityMatrix) -> Self {
        let dim = d.dim();
        DensityRepr {
            n_max: d.n_max(),
            trace: d.trace,
            elems: (0..dim).map(|i| (0..dim).map(|j| d.elems[(i, j)]).collect()).collect(),
        }
    }
}

const HERMITIAN_TOL: f64 = 1e-12;

impl DensityMatrix {
    /// Accepts a square matrix that is Hermitian to 1e-12 and symmetrizes it.
    pub fn from_matrix(m: DMatrix<Complex64>) -> Result<Self> {
        if !m.is_square() || m.nrows() == 0 {
            return Err(Error::invalid("density matrix must be square and non-empty"));
        }
        if m.nrows() > MAX_CUTOFF + 1 {
            return Err(Error::CutoffTooLarge(format!("dimension {} too large", m.nrows())));
        }
        if m.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::invalid("density matrix has non-finite entries"));
        }
        let residual = hermiticity_residual(&m);
        let scale = m.iter().map(|z| z.norm()).fold(1.0, f64::max);
        if residual > HERMITIAN_TOL * scale {
            return Err(Error::invalid(format!(
                "matrix is not Hermitian (residual {residual:e})"
            )));
        }
        Ok(Self::from_hermitian_unchecked(m))
    }

    fn from_hermitian_unchecked(m: DMatrix<Complex64>) -> Self {
        let elems = (&m + m.adjoint()) * Complex64::new(0.5, 0.0);
        let trace = elems.diagonal().iter().map(|z| z.re).sum();
        DensityMatrix { elems, trace }
    }

    pub fn diagonal(probs: &[f64]) -> Result<Self> {
        if let Some(p) = probs.iter().find(|p| !p.is_finite() || **p < 0.0) {
            return Err(Error::invalid(format!("diagonal entry {p} is negative or non-finite")));
        }
        let dim = probs.len();
        Self::from_matrix(DMatrix::from_fn(dim, dim, |i, j| {
            if i == j {
                Complex64::new(probs[i], 0.0)
            } else {
                Complex64::new(0.0, 0.0)
            }
        }))
    }

    pub fn n_max(&self) -> usize {
        self.elems.nrows() - 1
    }

    pub fn dim(&self) -> usize {
        self.elems.nrows()
    }

    pub fn elems(&self) -> &DMatrix<Complex64> {
        &self.elems
    }

    pub fn get(&self, m: usize, n: usize) -> Complex64 {
        self.elems[(m, n)]
    }

    pub fn trace(&self) -> f64 {
        self.trace
    }

    pub fn renormalized(&self) -> Result<DensityMatrix> {
        if self.trace <= 0.0 {
            return Err(Error::invalid("cannot renormalize a density matrix with trace ≤ 0"));
        }
        Ok(Self::from_hermitian_unchecked(
            &self.elems * Complex64::new(1.0 / self.trace, 0.0),
        ))
    }

    /// Ascending eigenvalues.
    pub fn eigenvalues(&self) -> Vec<f64> {
        let mut ev: Vec<f64> = SymmetricEigen::new(self.elems.clone()).eigenvalues.iter().copied().collect();
        ev.sort_by(f64::total_cmp);
        ev
    }

    pub fn min_eigenvalue(&self) -> f64 {
        self.eigenvalues()[0]
    }

    pub fn hermiticity_residual(&self) -> f64 {
        hermiticity_residual(&self.elems)
    }

    /// Largest `|ρ_{mn}|` with `m ≠ n`.
    pub fn max_off_diagonal(&self) -> f64 {
        let dim = self.dim();
        let mut best = 0.0f64;
        for i in 0..dim {
            for j in 0..dim {
                if i != j {
                    best = best.max(self.elems[(i, j)].norm());
                }
            }
        }
        best
    }

    /// Mean of `n̂` (relative to the recorded trace).
    pub fn mean_photon_number(&self) -> f64 {
        self.elems
            .diagonal()
            .iter()
            .enumerate()
            .map(|(n, z)| n as f64 * z.re)
            .sum::<f64>()
            / self.trace
    }

    /// `U ρ U†` with `U = e^{iθ n̂}`.
    pub fn phase_rotated(&self, theta: f64) -> DensityMatrix {
        let dim = self.dim();
        let m = DMatrix::from_fn(dim, dim, |i, j| {
            self.elems[(i, j)] * Complex64::from_polar(1.0, theta * (i as f64 - j as f64))
        });
        DensityMatrix {
            elems: m,
            trace: self.trace,
        }
    }

    /// Largest entrywise `|a_{mn} - b_{mn}|`.
    pub fn max_abs_diff(&self, other: &DensityMatrix) -> Result<f64> {
        if self.dim() != other.dim() {
            return Err(Error::invalid(format!(
                "dimension mismatch: {} vs {}",
                self.dim(),
                other.dim()
            )));
        }
        Ok((&self.elems - &other.elems).iter().map(|z| z.norm()).fold(0.0, f64::max))
    }
}

fn hermiticity_residual(m: &DMatrix<Complex64>) -> f64 {
    (m - m.adjoint()).iter().map(|z| z.norm()).fold(0.0, f64::max)
}

pub(crate) fn outer(v: &[Complex64]) -> DMatrix<Complex64> {
    let dim = v.len();
    DMatrix::from_fn(dim, dim, |i, j| v[i] * v[j].conj())
}

/// `|ψ⟩⟨ψ|`, trace = ‖ψ‖².
pub fn pure_to_density(v: &FockVector) -> DensityMatrix {
    let elems = outer(v.amps());
    let trace = v.norm_sqr();
    DensityMatrix { elems, trace }
}

/// `Σ w_i ρ_i` by pairwise summation; the result is not renormalized.
pub fn mix(ens: &[(f64, DensityMatrix)]) -> Result<DensityMatrix> {
    let (_, first) = ens
        .first()
        .ok_or_else(|| Error::invalid("cannot mix an empty ensemble"))?;
    let dim = first.dim();
    for (i, (w, rho)) in ens.iter().enumerate() {
        if !w.is_finite() || *w < 0.0 {
            return Err(Error::invalid(format!("weight {w} of component {i} is negative or non-finite")));
        }
        if rho.dim() != dim {
            return Err(Error::invalid(format!(
                "component {i} has dimension {} instead of {dim}",
                rho.dim()
            )));
        }
    }
    let sum = pairwise_sum(ens.len(), dim, &|i| {
        let (w, rho) = &ens[i];
        &rho.elems * Complex64::new(*w, 0.0)
    });
    Ok(DensityMatrix::from_hermitian_unchecked(sum))
}

/// Mixture of pure states without materializing every projector.
pub(crate) fn mix_pure<F>(len: usize, dim: usize, component: F) -> DensityMatrix
where
    F: Fn(usize) -> (f64, Vec<Complex64>) + Sync,
{
    let sum = pairwise_sum(len, dim, &|i| {
        let (w, amps) = component(i);
        outer(&amps) * Complex64::new(w, 0.0)
    });
    DensityMatrix::from_hermitian_unchecked(sum)
}

/// Truncated block of the thermal state `(cosh s)^{-2} Σ (tanh s)^{2n} |n⟩⟨n|`
/// (not renormalized).
pub fn thermal_density(s: f64, n_max: usize) -> Result<DensityMatrix> {
    if !s.is_finite() || s < 0.0 {
        return Err(Error::invalid(format!("thermal parameter s = {s} must be ≥ 0")));
    }
    if n_max > MAX_CUTOFF {
        return Err(Error::CutoffTooLarge(format!("n_max = {n_max}")));
    }
    let q = s.tanh().powi(2);
    let c2 = s.cosh().powi(-2);
    let probs: Vec<f64> = (0..=n_max).map(|n| c2 * q.powi(n as i32)).collect();
    DensityMatrix::diagonal(&probs)
}
