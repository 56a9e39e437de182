//! Numerical laboratory for the heralded noiseless linear amplifier (HNLA).
//!
//! The amplifier is modelled as the Fock-diagonal filtration `g^n̂`. On a
//! squeezed coherent state it acts as a phase-insensitive squeezer:
//! `tanh r' = g² tanh r` for every squeezing angle. This crate provides
//!
//! * [`fock`]: truncated single-mode states and the metrics that compare them;
//! * [`hnla`]: brute-force filtration next to the closed-form laws, plus the
//!   truncated physical device;
//! * [`ensemble`]: remote state preparation on an amplified EPR pair and the
//!   no-signaling verdict;
//! * [`quadrature`]: Gauss rules used to discretize continuous ensembles.
//!
//! Quadrature convention throughout: `x̂ = â + â†`, `p̂ = -i(â - â†)`, vacuum
//! variance 1, `α = (x + ip)/2`.

// `!(x > 0.0)` style checks are intended to reject NaN as well.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod ensemble;
pub mod error;
pub mod fock;
pub mod hnla;
pub mod quadrature;
mod reduce;
pub mod units;

pub use num_complex::Complex64;

pub use error::{Error, Result};
pub use fock::{
    coherent_squeezed_coeffs, hermite, inner_product, mix, pure_to_density, quadrature_stats,
    thermal_density, trace_distance, vacuum_squeezed_coeffs, DensityMatrix, FockVector,
    QuadratureStats, SqueezedCoherentParams, TwoModeSchmidtState,
};
pub use hnla::{
    apply_filtration_bruteforce, quadrature_gains, success_weight_closed_form,
    transform_displacement, transform_squeezing, truncated_squeezer, HnlaConfig, OperatingMode,
    TransformResult, TruncatedSqueezerResult,
};
pub use ensemble::{
    amplify_epr, condition_ensemble, heterodyne_scenario, homodyne_ensemble, no_signaling_check,
    photon_number_scenario, EprSpec, GridKind, GridSpec, NoSignalReport, Quadrature, ThermalSpec,
    WeightedEnsemble,
};
