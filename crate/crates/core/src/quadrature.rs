//! Gauss rules by the Golub–Welsch eigenvalue method.

use nalgebra::{DMatrix, SymmetricEigen};

use crate::{Error, Result};

/// Nodes and weights of an n-point Gauss rule, nodes ascending.
#[derive(Debug, Clone, PartialEq)]
pub struct GaussRule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl GaussRule {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn integrate<F: Fn(f64) -> f64>(&self, f: F) -> f64 {
        self.nodes.iter().zip(&self.weights).map(|(x, w)| w * f(*x)).sum()
    }
}

fn golub_welsch(diag: &[f64], off: &[f64], mu0: f64) -> GaussRule {
    let n = diag.len();
    let jacobi = DMatrix::from_fn(n, n, |i, j| {
        if i == j {
            diag[i]
        } else if i + 1 == j {
            off[i]
        } else if j + 1 == i {
            off[j]
        } else {
            0.0
        }
    });
    let eig = SymmetricEigen::new(jacobi);
    let mut pairs: Vec<(f64, f64)> = (0..n)
        .map(|k| (eig.eigenvalues[k], mu0 * eig.eigenvectors[(0, k)].powi(2)))
        .collect();
    pairs.sort_by(|a, b| a.0.total_cmp(&b.0));
    GaussRule {
        nodes: pairs.iter().map(|p| p.0).collect(),
        weights: pairs.iter().map(|p| p.1).collect(),
    }
}

fn check_points(n: usize) -> Result<()> {
    if n == 0 || n > 2000 {
        return Err(Error::invalid(format!("quadrature order {n} must lie in 1..=2000")));
    }
    Ok(())
}

/// Weight `e^{-x²}` on the real line; weights sum to `√π`.
pub fn gauss_hermite(n: usize) -> Result<GaussRule> {
    check_points(n)?;
    let diag = vec![0.0; n];
    let off: Vec<f64> = (1..n).map(|k| (k as f64 / 2.0).sqrt()).collect();
    let mut rule = golub_welsch(&diag, &off, std::f64::consts::PI.sqrt());
    // exact antisymmetry of the nodes
    for k in 0..n / 2 {
        let (a, b) = (rule.nodes[k], rule.nodes[n - 1 - k]);
        let x = 0.5 * (b - a);
        rule.nodes[k] = -x;
        rule.nodes[n - 1 - k] = x;
        let w = 0.5 * (rule.weights[k] + rule.weights[n - 1 - k]);
        rule.weights[k] = w;
        rule.weights[n - 1 - k] = w;
    }
    if n % 2 == 1 {
        rule.nodes[n / 2] = 0.0;
    }
    Ok(rule)
}

/// Standard normal expectation: `E[f(Z)] ≈ Σ w_k f(z_k)`, weights sum to 1.
pub fn standard_normal(n: usize) -> Result<GaussRule> {
    let gh = gauss_hermite(n)?;
    let sqrt_pi = std::f64::consts::PI.sqrt();
    Ok(GaussRule {
        nodes: gh.nodes.iter().map(|x| x * std::f64::consts::SQRT_2).collect(),
        weights: gh.weights.iter().map(|w| w / sqrt_pi).collect(),
    })
}

/// Weight `e^{-u}` on `[0, ∞)`; weights sum to 1.
pub fn gauss_laguerre(n: usize) -> Result<GaussRule> {
    check_points(n)?;
    let diag: Vec<f64> = (0..n).map(|k| (2 * k + 1) as f64).collect();
    let off: Vec<f64> = (1..n).map(|k| k as f64).collect();
    Ok(golub_welsch(&diag, &off, 1.0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn hermite_moments() {
        let q = gauss_hermite(10).unwrap();
        assert!((q.integrate(|_| 1.0) - PI.sqrt()).abs() < 1e-14);
        assert!((q.integrate(|x| x * x) - PI.sqrt() / 2.0).abs() < 1e-14);
        assert!((q.integrate(|x| x.cos()) - PI.sqrt() * (-0.25f64).exp()).abs() < 1e-14);
    }

    #[test]
    fn normal_moments() {
        let q = standard_normal(201).unwrap();
        assert!((q.weights.iter().sum::<f64>() - 1.0).abs() < 1e-13);
        assert!((q.integrate(|z| z * z) - 1.0).abs() < 1e-12);
        assert!((q.integrate(|z| z.powi(4)) - 3.0).abs() < 1e-11);
        assert!(q.integrate(|z| z.powi(3)).abs() < 1e-12);
    }

    #[test]
    fn laguerre_moments() {
        let q = gauss_laguerre(12).unwrap();
        // ∫ u^k e^{-u} = k!
        for (k, f) in [(0, 1.0), (1, 1.0), (3, 6.0), (5, 120.0)] {
            assert!((q.integrate(|u| u.powi(k)) - f).abs() < 1e-11 * f);
        }
        let big = gauss_laguerre(201).unwrap();
        assert!((big.weights.iter().sum::<f64>() - 1.0).abs() < 1e-12);
        assert!(big.nodes[0] > 0.0);
    }

    #[test]
    fn rejects_empty_rule() {
        assert!(gauss_hermite(0).is_err());
    }
}
