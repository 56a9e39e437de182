//! Squeezing units.
//!
//! `d` dB of squeezing means the squeezed-quadrature variance is reduced by
//! `10^{-d/10}`, i.e. `e^{-2r} = 10^{-d/10}`.

use std::f64::consts::LN_10;

pub fn db_to_r(db: f64) -> f64 {
    db * LN_10 / 20.0
}

pub fn r_to_db(r: f64) -> f64 {
    r * 20.0 / LN_10
}
