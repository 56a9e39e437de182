use num_complex::Complex64;

use crate::{Error, Result};

const MAX_ORDER: usize = 10_000;

/// Physicists' Hermite polynomial `H_n(z)` by the three-term recurrence
/// `H_{k+1} = 2z H_k - 2k H_{k-1}`.
///
/// Only meant for moderate orders; the state constructors never call this and
/// carry scaled amplitudes instead, since `H_n` alone overflows near n ≈ 170.
pub fn hermite(n: usize, z: Complex64) -> Result<Complex64> {
    if n > MAX_ORDER {
        return Err(Error::invalid(format!(
            "Hermite order {n} exceeds the limit {MAX_ORDER}"
        )));
    }
    let mut prev = Complex64::new(1.0, 0.0);
    if n == 0 {
        return Ok(prev);
    }
    let mut cur = 2.0 * z;
    for k in 1..n {
        let next = 2.0 * z * cur - 2.0 * k as f64 * prev;
        prev = cur;
        cur = next;
    }
    Ok(cur)
}
