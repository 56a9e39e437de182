//! The amplifier as the Fock-space filtration `g^n̂`, with its closed-form
//! action on squeezed coherent states. The truncated physical device lives
//! here too.
//!
//! The ideal filtration is unbounded, so its success probability carries a
//! normalization that vanishes in the ideal limit. Every quantity returned for
//! the ideal device is therefore a *relative* weight, meaningful only as a
//! ratio between inputs at the same gain.

mod config;
mod filtration;
mod laws;
mod truncated;

pub use config::{HnlaConfig, OperatingMode};
pub use filtration::apply_filtration_bruteforce;
pub use laws::{
    ln_success_weight, quadrature_gains, squeezed_quadrature_map, success_weight_closed_form,
    transform, transform_displacement, transform_squeezing, TransformResult,
};
pub use truncated::{truncated_norm, truncated_squeezer, TruncatedSqueezerResult};
