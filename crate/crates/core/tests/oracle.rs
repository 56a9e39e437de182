//! Independent construction of `D(α)S(ξ)|0⟩` by dense matrix exponentials in
//! a large truncated space, compared with the recurrence amplitudes.

use hnla_core::fock::{coherent_squeezed_coeffs, vacuum_squeezed_coeffs};
use hnla_core::fock::fidelity_pure;
use hnla_core::hnla::transform;
use hnla_core::{apply_filtration_bruteforce, Complex64, FockVector, SqueezedCoherentParams};
use nalgebra::{DMatrix, DVector};

const BIG: usize = 100;
const KEEP: usize = 30;

fn annihilation(dim: usize) -> DMatrix<Complex64> {
    DMatrix::from_fn(dim, dim, |i, j| {
        if j == i + 1 {
            Complex64::new((j as f64).sqrt(), 0.0)
        } else {
            Complex64::new(0.0, 0.0)
        }
    })
}

fn by_expm(params: &SqueezedCoherentParams) -> Vec<Complex64> {
    let a = annihilation(BIG);
    let ad = a.adjoint();
    let xi = Complex64::from_polar(params.r(), params.phi());
    let alpha = params.alpha();
    let half = Complex64::new(0.5, 0.0);
    let sq_gen = (&a * &a * xi.conj() - &ad * &ad * xi) * half;
    let disp_gen = &ad * alpha - &a * alpha.conj();
    let mut vac = DVector::zeros(BIG);
    vac[0] = Complex64::new(1.0, 0.0);
    let psi = disp_gen.exp() * (sq_gen.exp() * vac);
    psi.iter().take(KEEP + 1).copied().collect()
}

fn max_gap(a: &[Complex64], b: &[Complex64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)
}

#[test]
fn recurrence_matches_matrix_exponential() {
    let cases = [
        (Complex64::new(0.0, 0.0), 0.4, 0.0),
        (Complex64::new(0.0, 0.0), 0.7, 2.1),
        (Complex64::new(0.8, 0.0), 0.0, 0.0),
        (Complex64::new(0.5, -0.3), 0.3, 0.0),
        (Complex64::new(-0.4, 0.9), 0.5, 1.3),
        (Complex64::new(1.1, 0.2), 0.6, 4.0),
    ];
    for (alpha, r, phi) in cases {
        let params = SqueezedCoherentParams::new(alpha, r, phi).unwrap();
        let oracle = by_expm(&params);
        let ours = coherent_squeezed_coeffs(&params, KEEP).unwrap();
        let gap = max_gap(ours.amps(), &oracle);
        assert!(gap < 1e-10, "α = {alpha}, r = {r}, φ = {phi}: gap {gap:e}");
    }
}

#[test]
fn vacuum_branch_matches_matrix_exponential() {
    let params = SqueezedCoherentParams::vacuum_squeezed(0.55, 0.9).unwrap();
    let oracle = by_expm(&params);
    let ours = vacuum_squeezed_coeffs(0.55, 0.9, KEEP).unwrap();
    assert!(max_gap(ours.amps(), &oracle) < 1e-10);
}

#[test]
fn filtered_oracle_state_is_the_closed_form_output() {
    let params = SqueezedCoherentParams::new(Complex64::new(0.6, -0.4), 0.35, 2.5).unwrap();
    let g = 1.15;
    let oracle = FockVector::new(by_expm(&params)).unwrap();
    let (filtered, _) = apply_filtration_bruteforce(&oracle, g).unwrap();
    let out = transform(&params, g).unwrap().params_out;
    let expect = FockVector::new(by_expm(&out)).unwrap();
    assert!(1.0 - fidelity_pure(&expect, &filtered) < 1e-10);
}
