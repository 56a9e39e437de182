//! Pairwise tree summation of matrices with a fixed topology.
//!
//! The split points depend only on the number of terms, so the floating-point
//! result is identical whether the halves run sequentially or on the rayon
//! pool.

use nalgebra::DMatrix;
use num_complex::Complex64;

const PARALLEL_SPAN: usize = 64;

pub(crate) fn pairwise_sum<F>(len: usize, dim: usize, leaf: &F) -> DMatrix<Complex64>
where
    F: Fn(usize) -> DMatrix<Complex64> + Sync,
{
    if len == 0 {
        return DMatrix::zeros(dim, dim);
    }
    span(0, len, leaf)
}

fn span<F>(lo: usize, hi: usize, leaf: &F) -> DMatrix<Complex64>
where
    F: Fn(usize) -> DMatrix<Complex64> + Sync,
{
    if hi - lo == 1 {
        return leaf(lo);
    }
    let mid = lo + (hi - lo) / 2;
    let (a, b) = if hi - lo >= PARALLEL_SPAN {
        rayon::join(|| span(lo, mid, leaf), || span(mid, hi, leaf))
    } else {
        (span(lo, mid, leaf), span(mid, hi, leaf))
    };
    a + b
}
