use num_complex::Complex64;

use crate::fock::FockVector;
use crate::{Error, Result};

const LOG_GAIN_BUDGET: f64 = 700.0;

/// Brute-force filtration `c_n → g^n c_n`.
///
/// Returns the unnormalized output and `Σ g^{2n} |c_n|²`, a relative success
/// weight that is only meaningful as a ratio between inputs at the same `g`.
pub fn apply_filtration_bruteforce(v: &FockVector, g: f64) -> Result<(FockVector, f64)> {
    if !g.is_finite() || g <= 0.0 {
        return Err(Error::invalid(format!("gain {g} must be positive")));
    }
    let n_max = v.n_max();
    if n_max as f64 * g.ln() > LOG_GAIN_BUDGET {
        return Err(Error::CutoffTooLarge(format!(
            "g^n_max = {g}^{n_max} overflows; lower the cutoff"
        )));
    }
    let mut gn = 1.0f64;
    let amps: Vec<Complex64> = v
        .amps()
        .iter()
        .map(|c| {
            let out = c * gn;
            gn *= g;
            out
        })
        .collect();
    let out = FockVector::new(amps)?;
    let w = out.norm_sqr();
    Ok((out, w))
}
