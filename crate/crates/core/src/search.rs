//! Shift search: integer shifts by staged scanning, the minimal integer
//! shift, and epsilon-tight brackets on the optimal real threshold.
//!
//! Everything here leans on one monotonicity fact: the predicate
//!
//! ```text
//! P(b) = "f_1(b), f_2(b), …, f_n(b) are all ≥ 0"
//! ```
//!
//! once true stays true as b grows, so there is a single threshold b* (the
//! largest positive root among the coefficient polynomials f_1, …, f_n, or 0
//! when none has one) with P failing strictly below it and holding from b*
//! on. That shape makes three searches sound:
//!
//! * [`laguerre_integer_search`] finds some working integer by solving the
//!   linear f_1 directly and then advancing one step at a time whenever a
//!   deeper value is still negative. Each stage strictly extends the
//!   nonnegative prefix, so at most n stages run. The result is small but
//!   not always minimal.
//! * [`minimal_integer_shift`] walks downward from there to the least
//!   working integer, which monotonicity makes a correct stopping rule.
//! * [`optimal_threshold`] bisects on P to bracket b* itself within a
//!   requested epsilon, with an exact fast path: if P holds at a tested
//!   point m > 0 where some f_p(m) = 0, then m is a positive root of f_p,
//!   so b* ≥ m, while P(m) forces b* ≤ m. Equality is detected, not
//!   approximated.

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::division::{certify_at, shift_table, Certificate, PositivityVerdict};
use crate::error::Error;
use crate::poly::Poly;
use crate::rat::Rat;

/// Default bracket width for [`optimal_threshold`], 2⁻²⁰.
pub fn default_epsilon() -> Rat {
    Rat::pow2_inverse(20)
}

/// Outcome of the nonnegativity predicate P at a shift.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PredicateOutcome {
    /// Every f_k(b) ≥ 0 for k = 1…n; certificates at b are all-nonnegative.
    Holds,
    /// 1-based index of the first f_k(b) < 0.
    Fails(usize),
}

impl PredicateOutcome {
    pub fn holds(&self) -> bool {
        matches!(self, PredicateOutcome::Holds)
    }
}

fn require_positive_leading(f: &Poly) -> Result<(), Error> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let leading = f.leading_coefficient().expect("nonzero");
    if leading.is_positive() {
        Ok(())
    } else {
        Err(Error::NonpositiveLeadingCoefficient {
            leading: leading.clone(),
        })
    }
}

/// One predicate evaluation, also reporting whether any scanned value is
/// exactly zero (the threshold-hit signal for [`optimal_threshold`]).
fn scan(f: &Poly, b: &Rat) -> Result<(PredicateOutcome, bool), Error> {
    let table = shift_table(f, b)?;
    let mut has_zero = false;
    for (k, value) in table.values().iter().enumerate().skip(1) {
        if value.is_negative() {
            return Ok((PredicateOutcome::Fails(k), false));
        }
        if value.is_zero() {
            has_zero = true;
        }
    }
    Ok((PredicateOutcome::Holds, has_zero))
}

/// Evaluates P(b): are f_1(b), …, f_n(b) all nonnegative?
///
/// This is the certificate condition (zeros allowed), weaker than the strict
/// remainder demanded by an upper-bound claim on roots.
pub fn predicate_p(f: &Poly, b: &Rat) -> Result<PredicateOutcome, Error> {
    require_positive_leading(f)?;
    if b.is_negative() {
        return Err(Error::NegativeShift { shift: b.clone() });
    }
    Ok(scan(f, b)?.0)
}

/// Finds a working positive integer shift by the staged scheme: take the
/// smallest positive integer making the linear f_1 nonnegative, then, as
/// long as the scan fails at some index k, advance b by single steps until
/// f_k(b) ≥ 0 and rescan.
///
/// Monotonicity keeps the already-nonnegative prefix intact while b
/// advances, and f_k has positive leading coefficient a_0, so each inner
/// loop ends and each rescan fails strictly deeper: at most n stages in
/// total. The result is a valid anchor but not necessarily the least one;
/// see [`minimal_integer_shift`].
pub fn laguerre_integer_search(f: &Poly) -> Result<BigInt, Error> {
    require_positive_leading(f)?;
    let n = f.degree().expect("nonzero");
    if n == 0 {
        return Ok(BigInt::one());
    }
    let a0 = f.coeff(n);
    let a1 = f.coeff(n - 1);
    let mut b = (&(-&a1) / &a0).ceil().max(BigInt::one());
    loop {
        let (outcome, _) = scan(f, &Rat::from(b.clone()))?;
        let k = match outcome {
            PredicateOutcome::Holds => return Ok(b),
            PredicateOutcome::Fails(k) => k,
        };
        loop {
            b += BigInt::one();
            let table = shift_table(f, &Rat::from(b.clone()))?;
            if !table.values()[k].is_negative() {
                break;
            }
        }
    }
}

/// The least nonnegative integer m with P(m) holding, found by walking down
/// from [`laguerre_integer_search`]'s anchor; monotonicity of P makes the
/// first failure below m a proof of minimality.
pub fn minimal_integer_shift(f: &Poly) -> Result<BigInt, Error> {
    let mut m = laguerre_integer_search(f)?;
    while m.is_positive() {
        let below = &m - BigInt::one();
        match scan(f, &Rat::from(below.clone()))?.0 {
            PredicateOutcome::Holds => m = below,
            PredicateOutcome::Fails(_) => break,
        }
    }
    Ok(m)
}

/// An enclosure of the optimal threshold b*: the infimum of shifts at which
/// the whole coefficient table is nonnegative.
///
/// P provably fails at `lo` and holds at `hi`, both re-checkable with
/// [`predicate_p`]; any shift ≥ `hi` therefore certifies. When the
/// threshold was hit exactly, `exact` carries it and equals `hi`;
/// otherwise `hi − lo ≤ epsilon`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThresholdBracket {
    lo: Rat,
    hi: Rat,
    epsilon: Rat,
    exact: Option<Rat>,
    witness_index: Option<usize>,
}

impl ThresholdBracket {
    /// Lower end: P(lo) fails (degenerate brackets excepted).
    pub fn lo(&self) -> &Rat {
        &self.lo
    }

    /// Upper end: P(hi) holds, so certificates at hi are all-nonnegative.
    pub fn hi(&self) -> &Rat {
        &self.hi
    }

    /// The width this bracket was asked to meet.
    pub fn epsilon(&self) -> &Rat {
        &self.epsilon
    }

    /// The threshold itself, when it was hit exactly (then equal to `hi`).
    pub fn exact(&self) -> Option<&Rat> {
        self.exact.as_ref()
    }

    /// Index p of the binding constraint: the k ≥ 1 minimizing f_k(hi),
    /// recomputed at output time. `None` only for constant input, where no
    /// f_k exists.
    pub fn witness_index(&self) -> Option<usize> {
        self.witness_index
    }

    /// True when the input had no negative coefficient at all, so the
    /// threshold is 0 and no bracketing was needed (`lo` = `hi` = 0).
    pub fn is_degenerate(&self) -> bool {
        self.lo == self.hi
    }
}

/// Brackets the optimal threshold b* within `epsilon`.
///
/// The bracket starts at [m−1, m] for m = [`minimal_integer_shift`], whose
/// endpoints already satisfy the P-fails/P-holds invariant, and bisects with
/// exact rational midpoints. A zero among the scanned values at a point
/// where P holds pins b* exactly and stops early. Inputs with no negative
/// coefficient short-circuit to the degenerate bracket at 0.
pub fn optimal_threshold(f: &Poly, epsilon: &Rat) -> Result<ThresholdBracket, Error> {
    require_positive_leading(f)?;
    if !epsilon.is_positive() {
        return Err(Error::NonpositiveEpsilon {
            epsilon: epsilon.clone(),
        });
    }
    let at_zero = shift_table(f, &Rat::zero())?;
    if at_zero.verdict() == PositivityVerdict::AllNonnegative {
        return Ok(ThresholdBracket {
            lo: Rat::zero(),
            hi: Rat::zero(),
            epsilon: epsilon.clone(),
            exact: Some(Rat::zero()),
            witness_index: at_zero.min_entry_index(),
        });
    }
    // P(0) fails, so the minimal integer shift is ≥ 1 and [m−1, m] is a
    // valid starting bracket of width 1.
    let m = minimal_integer_shift(f)?;
    let mut hi = Rat::from(m.clone());
    let mut lo = Rat::from(&m - BigInt::one());
    let mut exact = None;
    let (_, zero_at_hi) = scan(f, &hi)?;
    if zero_at_hi {
        exact = Some(hi.clone());
    } else {
        while &(&hi - &lo) > epsilon {
            let mid = &(&lo + &hi) / &Rat::from(2);
            match scan(f, &mid)? {
                (PredicateOutcome::Holds, true) => {
                    hi = mid.clone();
                    exact = Some(mid);
                    break;
                }
                (PredicateOutcome::Holds, false) => hi = mid,
                (PredicateOutcome::Fails(_), _) => lo = mid,
            }
        }
    }
    let witness_index = shift_table(f, &hi)?.min_entry_index();
    Ok(ThresholdBracket {
        lo,
        hi,
        epsilon: epsilon.clone(),
        exact,
        witness_index,
    })
}

/// How [`certify_minimal`] picks its shift.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ShiftMode {
    /// The least working integer.
    Integer,
    /// The upper end of an epsilon bracket on the optimal real threshold.
    Real { epsilon: Rat },
}

/// Searches for the minimal shift in the requested mode and certifies
/// there. The returned certificate always carries the all-nonnegative
/// verdict: both searches stop only at shifts where P holds.
pub fn certify_minimal(f: &Poly, mode: &ShiftMode) -> Result<Certificate, Error> {
    match mode {
        ShiftMode::Integer => {
            let m = minimal_integer_shift(f)?;
            certify_at(f, &Rat::from(m))
        }
        ShiftMode::Real { epsilon } => {
            let bracket = optimal_threshold(f, epsilon)?;
            certify_at(f, bracket.hi())
        }
    }
}
