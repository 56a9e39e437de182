use std::f64::consts::{PI, TAU};

use hnla_core::fock::{
    auto_cutoff, coherent_squeezed_coeffs, pure_to_density, quadrature_stats, tail_bound, thermal_density,
    trace_distance, vacuum_squeezed_coeffs, DensityMatrix, FockVector,
};
use hnla_core::hnla::{ln_success_weight, transform};
use hnla_core::{
    apply_filtration_bruteforce, quadrature_gains, transform_displacement, transform_squeezing, Complex64,
    SqueezedCoherentParams,
};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn params() -> impl Strategy<Value = SqueezedCoherentParams> {
    (-2.0..2.0f64, -2.0..2.0f64, 0.0..0.9f64, 0.0..TAU)
        .prop_map(|(re, im, r, phi)| SqueezedCoherentParams::new(Complex64::new(re, im), r, phi).unwrap())
}

fn density(seed: u64, n_max: usize) -> DensityMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let amps = (0..=n_max)
        .map(|_| Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)))
        .collect();
    pure_to_density(&FockVector::new(amps).unwrap().normalized().unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn squeezed_vacuum_has_even_support(r in 0.0..2.0f64, phi in 0.0..TAU) {
        let v = vacuum_squeezed_coeffs(r, phi, 101).unwrap();
        for c in v.amps().iter().skip(1).step_by(2) {
            prop_assert_eq!(*c, Complex64::new(0.0, 0.0));
        }
    }

    #[test]
    fn rotation_covariance(p in params(), theta in -PI..PI) {
        let n = auto_cutoff(&p, 1e-12).unwrap();
        let lhs = coherent_squeezed_coeffs(&p, n).unwrap().phase_rotated(theta);
        let rhs = coherent_squeezed_coeffs(&p.rotated(theta), n).unwrap();
        for (a, b) in lhs.amps().iter().zip(rhs.amps()) {
            prop_assert!((a - b).norm() < 1e-10);
        }
    }

    #[test]
    fn minimum_uncertainty(x in -3.0..3.0f64, p in -3.0..3.0f64, r in 0.0..1.0f64) {
        let params = SqueezedCoherentParams::from_quadratures(x, p, r, 0.0).unwrap();
        let st = quadrature_stats(&coherent_squeezed_coeffs(&params, auto_cutoff(&params, 1e-14).unwrap()).unwrap());
        prop_assert!((st.var_x * st.var_p - 1.0).abs() < 1e-8);
        prop_assert!((st.var_x - (-2.0 * r).exp()).abs() < 1e-8);
        prop_assert!((st.mean_x - x).abs() < 1e-8 && (st.mean_p - p).abs() < 1e-8);
    }

    #[test]
    fn tail_bound_dominates_true_tail(p in params(), extra in 0usize..30) {
        let n = extra + 2;
        let full = coherent_squeezed_coeffs(&p, 400).unwrap();
        let tail: f64 = full.amps().iter().skip(n + 1).map(|c| c.norm_sqr()).sum();
        prop_assert!(tail_bound(&p, n) >= tail * (1.0 - 1e-9));
    }

    #[test]
    fn auto_cutoff_meets_tolerance(p in params()) {
        let n = auto_cutoff(&p, 1e-10).unwrap();
        prop_assert!(1.0 - coherent_squeezed_coeffs(&p, n).unwrap().norm_sqr() < 1e-10);
    }

    #[test]
    fn trace_distance_axioms(a in any::<u64>(), b in any::<u64>(), c in any::<u64>()) {
        let (ra, rb, rc) = (density(a, 6), density(b, 6), density(c, 6));
        let ab = trace_distance(&ra, &rb).unwrap();
        prop_assert!(trace_distance(&ra, &ra).unwrap() < 1e-14);
        prop_assert!((ab - trace_distance(&rb, &ra).unwrap()).abs() < 1e-14);
        prop_assert!((0.0..=1.0 + 1e-14).contains(&ab));
        prop_assert!(trace_distance(&ra, &rc).unwrap() <= ab + trace_distance(&rb, &rc).unwrap() + 1e-14);
    }

    #[test]
    fn density_invariants(p in params(), s in 0.05..1.2f64) {
        let n = auto_cutoff(&p, 1e-12).unwrap();
        let rho = pure_to_density(&coherent_squeezed_coeffs(&p, n).unwrap()).renormalized().unwrap();
        prop_assert!(rho.min_eigenvalue() > -1e-12);
        prop_assert!((rho.trace() - 1.0).abs() < 1e-12);
        let th = thermal_density(s, 200).unwrap();
        prop_assert!(th.min_eigenvalue() >= 0.0);
        prop_assert!((th.mean_photon_number() - s.sinh().powi(2)).abs() < 1e-8 * (1.0 + s.sinh().powi(2)));
    }

    #[test]
    fn snr_is_conserved(r in 0.0..0.8f64, g in 1.0..1.2f64, x in -3.0..3.0f64, p in -3.0..3.0f64) {
        prop_assume!(g * g * r.tanh() < 0.95);
        let params = SqueezedCoherentParams::from_quadratures(x, p, r, 0.0).unwrap();
        let rp = transform_squeezing(r, g).unwrap();
        let (gx, _) = quadrature_gains(r, g).unwrap();
        let out_params = params.with_r(rp).unwrap();
        let n = auto_cutoff(&params, 1e-14).unwrap().max(auto_cutoff(&out_params, 1e-14).unwrap());
        let (out, _) = apply_filtration_bruteforce(&coherent_squeezed_coeffs(&params, n).unwrap(), g).unwrap();
        let st = quadrature_stats(&out);
        let expect = gx * x / (-2.0 * rp).exp().sqrt();
        prop_assert!((st.mean_x / st.var_x.sqrt() - expect).abs() < 1e-6);
        let ap = transform_displacement(&params, g).unwrap();
        prop_assert!((2.0 * ap.re - gx * x).abs() < 1e-10 * (1.0 + x.abs()));
    }

    #[test]
    fn weight_ratio_matches_bruteforce(a in params(), b in params(), g in 1.0..1.15f64) {
        prop_assume!(g * g * a.r().tanh() < 0.95 && g * g * b.r().tanh() < 0.95);
        let weight = |p: &SqueezedCoherentParams| {
            let out = transform(p, g).unwrap().params_out;
            let n = auto_cutoff(p, 1e-14).unwrap().max(auto_cutoff(&out, 1e-14).unwrap());
            let v = coherent_squeezed_coeffs(p, n).unwrap();
            apply_filtration_bruteforce(&v, g).unwrap().1 / v.norm_sqr()
        };
        let closed = (ln_success_weight(&a, g).unwrap() - ln_success_weight(&b, g).unwrap()).exp();
        prop_assert!((weight(&a) / weight(&b) / closed - 1.0).abs() < 1e-8);
    }
}
