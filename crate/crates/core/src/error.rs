use crate::rat::Rat;

/// Errors raised by certificate, bound, and search operations.
///
/// Parsing has its own error type, [`crate::ParseError`].
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// The operation needs a nonzero polynomial.
    #[error("the zero polynomial is not accepted here")]
    ZeroPolynomial,

    /// The leading coefficient must be strictly positive.
    #[error("leading coefficient {leading} is not positive")]
    NonpositiveLeadingCoefficient { leading: Rat },

    /// The shift must be nonnegative.
    #[error("shift {shift} is negative")]
    NegativeShift { shift: Rat },

    /// The shift must be strictly positive.
    #[error("shift {shift} is not positive")]
    NonpositiveShift { shift: Rat },

    /// The second shift must exceed the first.
    #[error("second shift {second} does not exceed first shift {first}")]
    ShiftNotIncreased { first: Rat, second: Rat },

    /// A coefficient index lies outside `1..=degree`.
    #[error("index {index} is outside 1..={degree}")]
    IndexOutOfRange { index: usize, degree: usize },

    /// A prefix entry required to be nonnegative is negative.
    #[error("precondition violated: entry {index} equals {value} < 0")]
    PreconditionNotNonnegative { index: usize, value: Rat },

    /// A tolerance argument must be strictly positive.
    #[error("epsilon {epsilon} is not positive")]
    NonpositiveEpsilon { epsilon: Rat },
}
