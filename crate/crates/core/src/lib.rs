//! Exact positivity certificates for univariate polynomials over the
//! rationals.
//!
//! Dividing f by x − b with the shift recurrence produces the identity
//!
//! ```text
//! f(x) = (x − b)·(f_0(b) x^{n-1} + ⋯ + f_{n-1}(b)) + f_n(b)
//! ```
//!
//! with every value an exact rational. If b ≥ 0, the leading coefficient is
//! positive, and all of f_1(b), …, f_n(b) are nonnegative, the identity is a
//! one-line proof that f(x) > 0 for every x > b, checkable by anyone who can
//! multiply polynomials. Such a b always exists, because each value is
//! monotone in b once nonnegative; this crate finds the least integer one,
//! brackets the optimal real threshold to any requested width, and verifies
//! certificates from scratch without trusting the prover.
//!
//! ```
//! use polycert::{certify_minimal, parse, verify, ShiftMode, VerifyOutcome};
//!
//! let f = parse("(x-1)*(x-2)*(x-3)*(x-4)").unwrap().poly;
//! let cert = certify_minimal(&f, &ShiftMode::Integer).unwrap();
//! assert_eq!(cert.shift().to_string(), "10");
//! assert_eq!(cert.to_string(), "(x^3 + 35*x + 300)*(x - 10) + 3024");
//! assert_eq!(verify(&cert), VerifyOutcome::Valid);
//! ```
//!
//! The classical instruments live in [`bounds`]: Lagrange's coefficient
//! bound with sound one-sided rounding, and the strict upper-bound test on
//! shift values. [`batch`] runs any of it across many polynomials, in
//! parallel when the default `parallel` feature is on.

#![forbid(unsafe_code)]

pub mod batch;
pub mod bounds;
pub mod division;
pub mod error;
pub mod parse;
pub mod poly;
pub mod rat;
pub mod render;
pub mod search;

pub use num_bigint::BigInt;

pub use bounds::{
    kth_root_upper, lagrange_bound, laguerre_test, monotone_extension_check, BoundReport,
    LagrangeBound, LaguerreOutcome,
};
pub use division::{
    certify_at, shift_table, verify, Certificate, PositivityVerdict, ShiftTable, VerifyOutcome,
};
pub use error::Error;
pub use parse::{
    parse, parse_with_exponent_cap, ParseError, ParseResult, Span, DEFAULT_EXPONENT_CAP,
};
pub use poly::{Poly, DEFAULT_VARIABLE};
pub use rat::{Rat, RatParseError};
pub use render::{render, render_rat, Style};
pub use search::{
    certify_minimal, laguerre_integer_search, minimal_integer_shift, optimal_threshold,
    predicate_p, PredicateOutcome, ShiftMode, ThresholdBracket,
};
