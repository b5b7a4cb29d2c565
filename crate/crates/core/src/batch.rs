//! Batch operations over many polynomials.
//!
//! The per-instance algorithms are chains of dependent exact-rational steps
//! (each f_k(b) needs f_{k−1}(b), each bisection step needs the last), so
//! the parallelism worth having is across instances. With the `parallel`
//! feature (on by default) these functions fan out over rayon; without it
//! they fall back to the sequential implementations. The `_seq` variants
//! are always available, and every function returns results in input order
//! with identical values either way, so the two paths can be compared
//! directly, as the bench suite does.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::division::{verify, Certificate, VerifyOutcome};
use crate::error::Error;
use crate::poly::Poly;
use crate::rat::Rat;
use crate::search::{certify_minimal, optimal_threshold, ShiftMode, ThresholdBracket};

/// Certifies every polynomial at its minimal shift in the given mode.
pub fn certify_minimal_all(fs: &[Poly], mode: &ShiftMode) -> Vec<Result<Certificate, Error>> {
    #[cfg(feature = "parallel")]
    {
        fs.par_iter().map(|f| certify_minimal(f, mode)).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        certify_minimal_all_seq(fs, mode)
    }
}

/// Sequential twin of [`certify_minimal_all`].
pub fn certify_minimal_all_seq(fs: &[Poly], mode: &ShiftMode) -> Vec<Result<Certificate, Error>> {
    fs.iter().map(|f| certify_minimal(f, mode)).collect()
}

/// Re-checks every certificate from scratch.
pub fn verify_all(certs: &[Certificate]) -> Vec<VerifyOutcome> {
    #[cfg(feature = "parallel")]
    {
        certs.par_iter().map(verify).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        verify_all_seq(certs)
    }
}

/// Sequential twin of [`verify_all`].
pub fn verify_all_seq(certs: &[Certificate]) -> Vec<VerifyOutcome> {
    certs.iter().map(verify).collect()
}

/// Brackets the optimal threshold of every polynomial within `epsilon`.
pub fn optimal_threshold_all(
    fs: &[Poly],
    epsilon: &Rat,
) -> Vec<Result<ThresholdBracket, Error>> {
    #[cfg(feature = "parallel")]
    {
        fs.par_iter().map(|f| optimal_threshold(f, epsilon)).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        optimal_threshold_all_seq(fs, epsilon)
    }
}

/// Sequential twin of [`optimal_threshold_all`].
pub fn optimal_threshold_all_seq(
    fs: &[Poly],
    epsilon: &Rat,
) -> Vec<Result<ThresholdBracket, Error>> {
    fs.iter().map(|f| optimal_threshold(f, epsilon)).collect()
}
