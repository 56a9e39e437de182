//! Single- and two-mode bosonic states on a truncated Fock space.

mod cutoff;
pub(crate) mod density;
mod hermite;
mod metrics;
mod state;
mod two_mode;

pub use cutoff::{auto_cutoff, auto_cutoff_thermal, tail_bound, thermal_tail, DEFAULT_TAIL_TOLERANCE};
pub use density::{mix, pure_to_density, thermal_density, DensityMatrix};
pub use hermite::hermite;
pub use metrics::{fidelity_pure, inner_product, quadrature_stats, trace_distance, QuadratureStats};
pub use state::{
    coherent_coeffs, coherent_squeezed_coeffs, vacuum_squeezed_coeffs, FockVector,
    SqueezedCoherentParams, MAX_CUTOFF,
};
pub use two_mode::TwoModeSchmidtState;
