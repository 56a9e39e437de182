use nalgebra::SymmetricEigen;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::density::DensityMatrix;
use super::state::FockVector;
use crate::{Error, Result};

/// Edge mass above which quadrature moments are flagged as cutoff-sensitive.
const EDGE_MASS_WARN: f64 = 1e-8;

/// Normalization tolerance required by [`trace_distance`].
const TRACE_TOL: f64 = 1e-8;

/// `Σ a_n* b_n`; the shorter vector is implicitly zero-padded.
pub fn inner_product(a: &FockVector, b: &FockVector) -> Complex64 {
    a.amps().iter().zip(b.amps()).map(|(x, y)| x.conj() * y).sum()
}

/// `|⟨a|b⟩|² / (‖a‖² ‖b‖²)`.
pub fn fidelity_pure(a: &FockVector, b: &FockVector) -> f64 {
    inner_product(a, b).norm_sqr() / (a.norm_sqr() * b.norm_sqr())
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadratureStats {
    pub mean_x: f64,
    pub mean_p: f64,
    pub var_x: f64,
    pub var_p: f64,
    /// `|c_{N-1}|² + |c_N|²` of the normalized vector; a proxy for the
    /// truncation tail.
    pub edge_mass: f64,
}

impl QuadratureStats {
    pub fn cutoff_sensitive(&self) -> bool {
        self.edge_mass > EDGE_MASS_WARN
    }
}

/// First and second moments of `x̂ = â + â†` and `p̂ = -i(â - â†)`.
///
/// Moments are taken for `v/‖v‖`. A large edge mass is logged, not treated as
/// an error.
pub fn quadrature_stats(v: &FockVector) -> QuadratureStats {
    let amps = v.amps();
    let norm = v.norm_sqr();
    let mut a1 = Complex64::new(0.0, 0.0);
    let mut a2 = Complex64::new(0.0, 0.0);
    let mut num = 0.0;
    for (n, cn) in amps.iter().enumerate() {
        num += n as f64 * cn.norm_sqr();
        if let Some(next) = amps.get(n + 1) {
            a1 += cn.conj() * next * ((n + 1) as f64).sqrt();
        }
        if let Some(next2) = amps.get(n + 2) {
            a2 += cn.conj() * next2 * (((n + 1) * (n + 2)) as f64).sqrt();
        }
    }
    let (a1, a2, num) = (a1 / norm, a2 / norm, num / norm);
    let mean_x = 2.0 * a1.re;
    let mean_p = 2.0 * a1.im;
    let x2 = 2.0 * a2.re + 2.0 * num + 1.0;
    let p2 = -2.0 * a2.re + 2.0 * num + 1.0;
    let n_max = v.n_max();
    let edge_mass = (amps[n_max].norm_sqr() + if n_max > 0 { amps[n_max - 1].norm_sqr() } else { 0.0 }) / norm;
    let stats = QuadratureStats {
        mean_x,
        mean_p,
        var_x: x2 - mean_x * mean_x,
        var_p: p2 - mean_p * mean_p,
        edge_mass,
    };
    if stats.cutoff_sensitive() {
        log::warn!(
            "quadrature moments at cutoff {n_max} may be truncation-limited (edge mass {edge_mass:e})"
        );
    }
    stats
}

/// `½ Σ |λ_i(a - b)|`.
///
/// Both inputs must have trace within 1e-8 of one and the same cutoff.
pub fn trace_distance(a: &DensityMatrix, b: &DensityMatrix) -> Result<f64> {
    if a.dim() != b.dim() {
        return Err(Error::invalid(format!(
            "dimension mismatch: {} vs {}",
            a.dim(),
            b.dim()
        )));
    }
    for (name, rho) in [("first", a), ("second", b)] {
        if (rho.trace() - 1.0).abs() > TRACE_TOL {
            return Err(Error::invalid(format!(
                "{name} density matrix has trace {} (needs 1 ± {TRACE_TOL:e})",
                rho.trace()
            )));
        }
    }
    let diff = a.elems() - b.elems();
    let diff = (&diff + diff.adjoint()) * Complex64::new(0.5, 0.0);
    let eig = SymmetricEigen::new(diff).eigenvalues;
    Ok(0.5 * eig.iter().map(|l| l.abs()).sum::<f64>())
}

#[cfg(test)]
mod tests {
    use super::super::{pure_to_density, thermal_density, vacuum_squeezed_coeffs};
    use super::*;

    #[test]
    fn orthogonality_and_norm() {
        let v0 = FockVector::basis(0, 3).unwrap();
        let v1 = FockVector::basis(1, 3).unwrap();
        assert_eq!(inner_product(&v0, &v1).norm(), 0.0);
        let psi = FockVector::new(vec![Complex64::new(0.3, 0.1), Complex64::new(-0.2, 0.9)]).unwrap();
        let ip = inner_product(&psi, &psi);
        assert!((ip.re - psi.norm_sqr()).abs() < 1e-15 && ip.im == 0.0);
    }

    #[test]
    fn zero_padding() {
        let short = FockVector::basis(1, 1).unwrap();
        let long = FockVector::basis(1, 5).unwrap();
        assert_eq!(inner_product(&short, &long), Complex64::new(1.0, 0.0));
    }

    #[test]
    fn squeezed_vacuum_overlap() {
        // ⟨0,ξ|0,ξ'⟩ with equal angles; reference from 400-term summation at 40 digits
        let a = vacuum_squeezed_coeffs(0.3, 0.7, 400).unwrap();
        let b = vacuum_squeezed_coeffs(0.5, 0.7, 400).unwrap();
        let ip = inner_product(&a, &b);
        assert!((ip.re - 0.990_115_143_629_631_3).abs() < 1e-13);
        assert!(ip.im.abs() < 1e-15);
    }

    #[test]
    fn vacuum_moments() {
        let s = quadrature_stats(&FockVector::basis(0, 4).unwrap());
        assert_eq!((s.mean_x, s.mean_p, s.var_x, s.var_p), (0.0, 0.0, 1.0, 1.0));
    }

    #[test]
    fn trace_distance_basics() {
        let a = pure_to_density(&FockVector::basis(0, 2).unwrap());
        let b = pure_to_density(&FockVector::basis(1, 2).unwrap());
        assert!(trace_distance(&a, &a).unwrap().abs() < 1e-15);
        assert!((trace_distance(&a, &b).unwrap() - 1.0).abs() < 1e-14);
        let c = pure_to_density(&FockVector::basis(1, 3).unwrap());
        assert!(matches!(trace_distance(&a, &c), Err(Error::InvalidArgument(_))));
        let half = thermal_density(0.5, 1).unwrap();
        assert!(trace_distance(&half, &half).is_err());
    }

    #[test]
    fn thermal_pair_matches_diagonal_formula() {
        let s = 0.5f64;
        let sp = (1.1 * s.tanh()).atanh();
        let (a, b) = (thermal_density(s, 60).unwrap(), thermal_density(sp, 60).unwrap());
        let d = trace_distance(&a, &b).unwrap();
        let diag: f64 = 0.5
            * (0..=60)
                .map(|n| (a.get(n, n).re - b.get(n, n).re).abs())
                .sum::<f64>();
        assert!(d > 0.0);
        assert!((d - diag).abs() < 1e-14);
        assert!((d - 0.044_845_976_077_155_24).abs() < 1e-12);
    }
}
