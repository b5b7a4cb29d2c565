//! Classical upper bounds on positive roots.
//!
//! Two independent instruments, both exact:
//!
//! * Lagrange's bound: if a_k is the first negative coefficient (descending
//!   indexing from the leading a_0 > 0) and B the largest magnitude among the
//!   negative coefficients, then f(x) > 0 for every x > 1 + (B/a_0)^{1/k},
//!   so that value exceeds the largest positive root. The k-th root is
//!   irrational in general; [`lagrange_bound`] returns a rational
//!   overestimate within a configurable epsilon, rounded up so the guarantee
//!   survives.
//!
//! * Laguerre's test: if the shift values satisfy f_1(b), …, f_{n−1}(b) ≥ 0
//!   and f_n(b) > 0, then b is an upper bound for the largest real root.
//!   This is the strict cousin of the certificate scan: pass or fail, no
//!   approximation anywhere.
//!
//! [`monotone_extension_check`] is an executable form of the monotonicity
//! fact behind the whole search pipeline: a nonnegative prefix of shift
//! values stays nonnegative as the shift grows. It recomputes both tables
//! and reports what it finds, so property tests can hammer the claim.

use num_bigint::BigInt;
use num_traits::One;

use crate::division::shift_table;
use crate::error::Error;
use crate::poly::Poly;
use crate::rat::Rat;

/// Default enclosure width for [`lagrange_bound`], 2⁻³².
pub fn default_epsilon() -> Rat {
    Rat::pow2_inverse(32)
}

/// The data behind a Lagrange bound: which coefficient triggered it, the
/// magnitude B, and the certified rational overestimate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundReport {
    /// 1-based descending index k of the first negative coefficient.
    pub first_negative_index: usize,
    /// B: the largest |a_j| among negative coefficients a_j.
    pub magnitude: Rat,
    /// Rational value ≥ 1 + (B/a_0)^{1/k}; f(x) > 0 for all x beyond it.
    pub bound_overestimate: Rat,
    /// Width of the enclosure certifying the k-th root, hence an upper bound
    /// on how far `bound_overestimate` overshoots the true 1 + (B/a_0)^{1/k}.
    /// At most the requested epsilon; exactly zero when the root is rational.
    pub slack: Rat,
}

/// Result of [`lagrange_bound`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LagrangeBound {
    Bound(BoundReport),
    /// No negative coefficient: f has no positive root, and no bound is
    /// needed (f(x) ≥ a_0·xⁿ > 0 for x > 0 already when the constant
    /// term is positive, and f is nondecreasing there regardless).
    NoNegativeCoefficients,
}

/// Computes Lagrange's upper bound for the positive roots of f.
pub fn lagrange_bound(f: &Poly, epsilon: &Rat) -> Result<LagrangeBound, Error> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let leading = f.leading_coefficient().expect("nonzero");
    if !leading.is_positive() {
        return Err(Error::NonpositiveLeadingCoefficient {
            leading: leading.clone(),
        });
    }
    if !epsilon.is_positive() {
        return Err(Error::NonpositiveEpsilon {
            epsilon: epsilon.clone(),
        });
    }
    let descending = f.coeffs_descending();
    let mut first_negative = None;
    let mut magnitude = Rat::zero();
    for (k, a) in descending.iter().enumerate().skip(1) {
        if a.is_negative() {
            if first_negative.is_none() {
                first_negative = Some(k);
            }
            let m = a.abs();
            if m > magnitude {
                magnitude = m;
            }
        }
    }
    let Some(k) = first_negative else {
        return Ok(LagrangeBound::NoNegativeCoefficients);
    };
    let ratio = &magnitude / leading;
    let (root_upper, slack) = kth_root_upper(&ratio, k.try_into().expect("degree fits u32"), epsilon)?;
    Ok(LagrangeBound::Bound(BoundReport {
        first_negative_index: k,
        magnitude,
        bound_overestimate: &Rat::one() + &root_upper,
        slack,
    }))
}

/// Returns `(upper, width)` with upper ≥ r^{1/k} and upper − r^{1/k} ≤ width
/// ≤ epsilon. Rational roots are detected exactly (width 0); otherwise a
/// bisection from an integer bracket of width one narrows until the
/// enclosure is within epsilon, and the upper endpoint is returned so the
/// rounding is always on the sound side.
///
/// Panics if r ≤ 0 or k = 0; fails with [`Error::NonpositiveEpsilon`] if
/// epsilon ≤ 0.
pub fn kth_root_upper(r: &Rat, k: u32, epsilon: &Rat) -> Result<(Rat, Rat), Error> {
    assert!(r.is_positive(), "radicand must be positive");
    assert!(k > 0, "root order must be at least 1");
    if !epsilon.is_positive() {
        return Err(Error::NonpositiveEpsilon {
            epsilon: epsilon.clone(),
        });
    }
    if k == 1 {
        return Ok((r.clone(), Rat::zero()));
    }
    let numer_root = r.numer().nth_root(k);
    let denom_root = r.denom().nth_root(k);
    if numer_root.pow(k) == *r.numer() && denom_root.pow(k) == *r.denom() {
        return Ok((Rat::new(numer_root, denom_root), Rat::zero()));
    }
    // Integer bracket: c = ⌊⌊r⌋^{1/k}⌋ gives c^k ≤ r < (c+1)^k, the upper
    // side because (c+1)^k ≥ ⌊r⌋ + 1 > r once r is not a perfect power.
    let c = r.floor().nth_root(k);
    let mut lo = Rat::from(c.clone());
    let mut hi = Rat::from(c + BigInt::one());
    while &(&hi - &lo) > epsilon {
        let mid = &(&lo + &hi) / &Rat::from(2);
        if &mid.pow(k) <= r {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let width = &hi - &lo;
    Ok((hi, width))
}

/// Outcome of [`laguerre_test`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LaguerreOutcome {
    /// f_1(b), …, f_{n−1}(b) ≥ 0 and f_n(b) > 0: no real root of f is ≥ b.
    UpperBoundCertified,
    /// Index of the first violation: some f_k(b) < 0 with k < n, or k = n
    /// with f_n(b) ≤ 0 (the remainder must be strictly positive here).
    Inconclusive(usize),
}

/// Tests whether b certifiably exceeds every real root of f.
///
/// Strictness matters: the remainder f_n(b) = f(b) must be positive, which
/// is a stronger demand than the certificate scan's f_n(b) ≥ 0. The two
/// claims differ exactly at roots of f.
pub fn laguerre_test(f: &Poly, b: &Rat) -> Result<LaguerreOutcome, Error> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let leading = f.leading_coefficient().expect("nonzero");
    if !leading.is_positive() {
        return Err(Error::NonpositiveLeadingCoefficient {
            leading: leading.clone(),
        });
    }
    if !b.is_positive() {
        return Err(Error::NonpositiveShift { shift: b.clone() });
    }
    let table = shift_table(f, b)?;
    let n = table.degree();
    for (k, value) in table.values().iter().enumerate().skip(1).take(n.saturating_sub(1)) {
        if value.is_negative() {
            return Ok(LaguerreOutcome::Inconclusive(k));
        }
    }
    if table.values()[n].is_positive() {
        Ok(LaguerreOutcome::UpperBoundCertified)
    } else {
        Ok(LaguerreOutcome::Inconclusive(n))
    }
}

/// Checks that a nonnegative prefix of shift values survives a shift
/// increase: given f_1(b), …, f_k(b) ≥ 0 (verified, error otherwise) and
/// b′ > b, recomputes the table at b′ and reports whether
/// f_1(b′), …, f_k(b′) are all ≥ 0.
///
/// Monotonicity guarantees the answer is `true`; the function earns its keep
/// as a property-test oracle that computes the answer instead of assuming it.
pub fn monotone_extension_check(
    f: &Poly,
    b: &Rat,
    b_prime: &Rat,
    k: usize,
) -> Result<bool, Error> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let leading = f.leading_coefficient().expect("nonzero");
    if !leading.is_positive() {
        return Err(Error::NonpositiveLeadingCoefficient {
            leading: leading.clone(),
        });
    }
    if !b.is_positive() {
        return Err(Error::NonpositiveShift { shift: b.clone() });
    }
    if b_prime <= b {
        return Err(Error::ShiftNotIncreased {
            first: b.clone(),
            second: b_prime.clone(),
        });
    }
    let n = f.degree().expect("nonzero");
    if k == 0 || k > n {
        return Err(Error::IndexOutOfRange { index: k, degree: n });
    }
    let at_b = shift_table(f, b)?;
    for (i, value) in at_b.values().iter().enumerate().skip(1).take(k) {
        if value.is_negative() {
            return Err(Error::PreconditionNotNonnegative {
                index: i,
                value: value.clone(),
            });
        }
    }
    let at_b_prime = shift_table(f, b_prime)?;
    Ok(at_b_prime.values()[1..=k].iter().all(|v| !v.is_negative()))
}
