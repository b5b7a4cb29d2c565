//! Division by x − b via the shift recurrence, and positivity certificates.
//!
//! For f with descending coefficients a_0, …, a_n, the values
//!
//! ```text
//! f_0(b) = a_0,    f_k(b) = b·f_{k-1}(b) + a_k    (k = 1…n)
//! ```
//!
//! are simultaneously the coefficients of the quotient of f by x − b and, at
//! k = n, the remainder f(b):
//!
//! ```text
//! f(x) = (x − b)·(f_0(b) x^{n-1} + ⋯ + f_{n-1}(b)) + f_n(b)
//! ```
//!
//! When b ≥ 0, every f_k(b) ≥ 0, and the leading a_0 > 0, this identity is a
//! self-contained proof that f(x) > 0 for all x > b: each factor on the right
//! is nonnegative and the quotient's leading term grows. [`certify_at`]
//! packages the identity and the coefficient scan; [`verify`] re-derives both
//! from scratch, trusting nothing stored in the certificate.

use std::fmt;

use crate::error::Error;
use crate::poly::Poly;
use crate::rat::Rat;
use crate::render::{render, render_rat, Style};

/// The values f_0(b), …, f_n(b) of the shift recurrence at a fixed shift.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftTable {
    shift: Rat,
    values: Vec<Rat>,
}

impl ShiftTable {
    pub fn shift(&self) -> &Rat {
        &self.shift
    }

    /// All n + 1 values, index k holding f_k(shift).
    pub fn values(&self) -> &[Rat] {
        &self.values
    }

    /// Degree of the dividend.
    pub fn degree(&self) -> usize {
        self.values.len() - 1
    }

    /// Quotient coefficients f_0(b), …, f_{n−1}(b) in descending powers.
    pub fn quotient_values(&self) -> &[Rat] {
        &self.values[..self.values.len() - 1]
    }

    /// The remainder f_n(b) = f(b).
    pub fn remainder_value(&self) -> &Rat {
        self.values.last().expect("nonempty")
    }

    /// Scans f_1, …, f_n for the first negative entry.
    pub fn verdict(&self) -> PositivityVerdict {
        scan_verdict(self.values[1..].iter())
    }

    /// Index k ≥ 1 of the smallest of f_1, …, f_n, ties to the smaller k.
    /// `None` only for degree 0, where the scanned range is empty.
    pub fn min_entry_index(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for (k, value) in self.values.iter().enumerate().skip(1) {
            match best {
                Some(b) if self.values[b] <= *value => {}
                _ => best = Some(k),
            }
        }
        best
    }
}

/// Outcome of scanning f_1(b), …, f_n(b) for negativity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PositivityVerdict {
    /// Every scanned value is ≥ 0 (zeros are acceptable).
    AllNonnegative,
    /// Index k (1-based, k = n meaning the remainder) of the first f_k(b) < 0.
    HasNegative(usize),
}

pub(crate) fn scan_verdict<'a>(entries: impl Iterator<Item = &'a Rat>) -> PositivityVerdict {
    for (i, value) in entries.enumerate() {
        if value.is_negative() {
            return PositivityVerdict::HasNegative(i + 1);
        }
    }
    PositivityVerdict::AllNonnegative
}

/// Runs the shift recurrence for f at b.
pub fn shift_table(f: &Poly, b: &Rat) -> Result<ShiftTable, Error> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let n = f.degree().expect("nonzero");
    let mut values = Vec::with_capacity(n + 1);
    values.push(f.coeff(n));
    for k in 1..=n {
        let prev = values.last().expect("nonempty");
        values.push(b * prev + f.coeff(n - k));
    }
    Ok(ShiftTable {
        shift: b.clone(),
        values,
    })
}

/// A positivity certificate: the division identity at a fixed shift, plus the
/// verdict of the coefficient scan. When the verdict is [`AllNonnegative`]
/// the certificate proves f(x) > 0 for all x > shift.
///
/// [`AllNonnegative`]: PositivityVerdict::AllNonnegative
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    input_poly: Poly,
    shift: Rat,
    quotient: Vec<Rat>,
    remainder: Rat,
    verdict: PositivityVerdict,
}

impl Certificate {
    /// Assembles a certificate from stored parts without any checking, e.g.
    /// after deserialization. [`verify`] is the validity judge.
    pub fn from_parts(
        input_poly: Poly,
        shift: Rat,
        quotient: Vec<Rat>,
        remainder: Rat,
        verdict: PositivityVerdict,
    ) -> Self {
        Certificate {
            input_poly,
            shift,
            quotient,
            remainder,
            verdict,
        }
    }

    pub fn input_poly(&self) -> &Poly {
        &self.input_poly
    }

    pub fn shift(&self) -> &Rat {
        &self.shift
    }

    /// Quotient coefficients in descending powers; empty for constant input.
    pub fn quotient_coefficients(&self) -> &[Rat] {
        &self.quotient
    }

    pub fn remainder(&self) -> &Rat {
        &self.remainder
    }

    pub fn verdict(&self) -> &PositivityVerdict {
        &self.verdict
    }

    /// The quotient as a polynomial in the input's variable.
    pub fn quotient_poly(&self) -> Poly {
        Poly::from_descending(self.quotient.clone()).with_variable(self.input_poly.variable_name())
    }
}

impl fmt::Display for Certificate {
    /// Identity form, e.g. `(2842*n^4 + ...)*(n - 5) + 2166128`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let var = self.input_poly.variable_name();
        let linear = if self.shift.is_zero() {
            var.to_string()
        } else if self.shift.is_negative() {
            format!("{var} + {}", render_rat(&self.shift.abs(), Style::Plain))
        } else {
            format!("{var} - {}", render_rat(&self.shift, Style::Plain))
        };
        write!(
            f,
            "({})*({}) + {}",
            render(&self.quotient_poly(), Style::Plain),
            linear,
            render_rat(&self.remainder, Style::Plain)
        )
    }
}

/// Divides f by x − b and scans the resulting values for negativity.
///
/// The quotient gets coefficients f_0(b), …, f_{n−1}(b) and the remainder is
/// f_n(b). The verdict scans f_1(b), …, f_n(b); b = 0 is allowed and simply
/// restates f.
pub fn certify_at(f: &Poly, b: &Rat) -> Result<Certificate, Error> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let leading = f.leading_coefficient().expect("nonzero");
    if !leading.is_positive() {
        return Err(Error::NonpositiveLeadingCoefficient {
            leading: leading.clone(),
        });
    }
    if b.is_negative() {
        return Err(Error::NegativeShift { shift: b.clone() });
    }
    let table = shift_table(f, b)?;
    let verdict = table.verdict();
    let mut values = table.values;
    let remainder = values.pop().expect("nonempty");
    Ok(Certificate {
        input_poly: f.clone(),
        shift: b.clone(),
        quotient: values,
        remainder,
        verdict,
    })
}

/// Outcome of re-checking a certificate from scratch.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VerifyOutcome {
    Valid,
    /// (x − b)·quotient + remainder does not re-expand to the input.
    IdentityMismatch,
    /// The stored verdict disagrees with a fresh scan of the stored values.
    NegativeCoefficientClaimed,
}

/// Re-checks a certificate, trusting none of its stored values.
///
/// The identity is re-expanded with exact arithmetic and compared
/// coefficient-by-coefficient; the verdict is recomputed by a fresh scan of
/// the stored quotient tail and remainder. A claimed `AllNonnegative`
/// additionally requires a positive leading quotient coefficient, since that
/// is what makes the certificate a positivity proof.
pub fn verify(cert: &Certificate) -> VerifyOutcome {
    let q = cert.quotient_poly();
    let linear = Poly::from_descending(vec![Rat::one(), -cert.shift.clone()]);
    let reassembled = &(&linear * &q) + &Poly::constant(cert.remainder.clone());
    if reassembled != cert.input_poly {
        return VerifyOutcome::IdentityMismatch;
    }
    let fresh = scan_verdict(cert.quotient.iter().skip(1).chain([&cert.remainder]));
    let consistent = match (&cert.verdict, &fresh) {
        (PositivityVerdict::AllNonnegative, PositivityVerdict::AllNonnegative) => cert
            .quotient
            .first()
            .map_or(true, |leading| leading.is_positive()),
        (PositivityVerdict::HasNegative(stored), PositivityVerdict::HasNegative(found)) => {
            stored == found
        }
        _ => false,
    };
    if consistent {
        VerifyOutcome::Valid
    } else {
        VerifyOutcome::NegativeCoefficientClaimed
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn desc(coeffs: &[i64]) -> Poly {
        Poly::from_descending(coeffs.iter().map(|&c| Rat::from(c)).collect())
    }

    fn quintic() -> Poly {
        desc(&[2842, -7821, -16884, 10428, 5082, -2607]).with_variable("n")
    }

    fn quartic() -> Poly {
        desc(&[1, -10, 35, -50, 24])
    }

    fn rats(cs: &[i64]) -> Vec<Rat> {
        cs.iter().map(|&c| Rat::from(c)).collect()
    }

    #[test]
    fn quintic_table_at_five() {
        let table = shift_table(&quintic(), &Rat::from(5)).expect("nonzero");
        assert_eq!(
            table.values(),
            rats(&[2842, 6389, 15061, 85733, 433747, 2166128])
        );
        assert_eq!(table.remainder_value(), &quintic().eval(&Rat::from(5)));
    }

    #[test]
    fn quartic_table_at_ten() {
        let table = shift_table(&quartic(), &Rat::from(10)).expect("nonzero");
        assert_eq!(table.values(), rats(&[1, 0, 35, 300, 3024]));
    }

    #[test]
    fn table_at_zero_restates_coefficients() {
        let table = shift_table(&desc(&[1, -3]), &Rat::zero()).expect("nonzero");
        assert_eq!(table.values(), rats(&[1, -3]));
    }

    #[test]
    fn recurrence_invariant_holds_entrywise() {
        let f = quintic();
        let b = Rat::new(7, 2);
        let table = shift_table(&f, &b).expect("nonzero");
        let n = f.degree().expect("nonzero");
        assert_eq!(table.values()[0], f.coeff(n));
        for k in 1..=n {
            assert_eq!(
                table.values()[k],
                &(&b * &table.values()[k - 1]) + &f.coeff(n - k)
            );
        }
        assert_eq!(table.values()[n], f.eval(&b));
    }

    #[test]
    fn certify_quintic_at_five() {
        let cert = certify_at(&quintic(), &Rat::from(5)).expect("certifies");
        assert_eq!(cert.verdict(), &PositivityVerdict::AllNonnegative);
        assert_eq!(
            cert.quotient_coefficients(),
            rats(&[2842, 6389, 15061, 85733, 433747])
        );
        assert_eq!(cert.remainder(), &Rat::from(2166128));
        assert_eq!(verify(&cert), VerifyOutcome::Valid);
    }

    #[test]
    fn certify_quartic_at_five_finds_negative() {
        let cert = certify_at(&quartic(), &Rat::from(5)).expect("runs");
        assert_eq!(cert.verdict(), &PositivityVerdict::HasNegative(1));
        assert_eq!(cert.quotient_coefficients()[1], Rat::from(-5));
        // The verdict is honest, so the certificate still verifies.
        assert_eq!(verify(&cert), VerifyOutcome::Valid);
    }

    #[test]
    fn certify_quartic_at_ten() {
        let cert = certify_at(&quartic(), &Rat::from(10)).expect("certifies");
        assert_eq!(cert.verdict(), &PositivityVerdict::AllNonnegative);
        assert_eq!(cert.quotient_coefficients(), rats(&[1, 0, 35, 300]));
        assert_eq!(cert.remainder(), &Rat::from(3024));
        assert_eq!(verify(&cert), VerifyOutcome::Valid);
    }

    #[test]
    fn certify_at_zero_restates_input() {
        let f = desc(&[2, 0, 1]);
        let cert = certify_at(&f, &Rat::zero()).expect("certifies");
        assert_eq!(cert.verdict(), &PositivityVerdict::AllNonnegative);
        assert_eq!(cert.quotient_coefficients(), rats(&[2, 0]));
        assert_eq!(cert.remainder(), &Rat::from(1));
        assert_eq!(verify(&cert), VerifyOutcome::Valid);
    }

    #[test]
    fn constant_input_has_empty_quotient() {
        let cert = certify_at(&Poly::constant(Rat::from(7)), &Rat::from(2)).expect("certifies");
        assert!(cert.quotient_coefficients().is_empty());
        assert_eq!(cert.remainder(), &Rat::from(7));
        assert_eq!(cert.verdict(), &PositivityVerdict::AllNonnegative);
        assert_eq!(verify(&cert), VerifyOutcome::Valid);
    }

    #[test]
    fn preconditions_are_enforced() {
        assert!(matches!(
            certify_at(&Poly::zero(), &Rat::one()),
            Err(Error::ZeroPolynomial)
        ));
        assert!(matches!(
            certify_at(&desc(&[-1, 2]), &Rat::one()),
            Err(Error::NonpositiveLeadingCoefficient { .. })
        ));
        assert!(matches!(
            certify_at(&quartic(), &Rat::from(-1)),
            Err(Error::NegativeShift { .. })
        ));
        assert!(matches!(
            shift_table(&Poly::zero(), &Rat::one()),
            Err(Error::ZeroPolynomial)
        ));
    }

    #[test]
    fn tampered_remainder_fails_identity() {
        let cert = certify_at(&quintic(), &Rat::from(5)).expect("certifies");
        let tampered = Certificate::from_parts(
            cert.input_poly().clone(),
            cert.shift().clone(),
            cert.quotient_coefficients().to_vec(),
            Rat::from(2166129),
            cert.verdict().clone(),
        );
        assert_eq!(verify(&tampered), VerifyOutcome::IdentityMismatch);
    }

    #[test]
    fn false_nonnegativity_claim_is_caught() {
        let honest = certify_at(&quartic(), &Rat::from(5)).expect("runs");
        let dishonest = Certificate::from_parts(
            honest.input_poly().clone(),
            honest.shift().clone(),
            honest.quotient_coefficients().to_vec(),
            honest.remainder().clone(),
            PositivityVerdict::AllNonnegative,
        );
        assert_eq!(verify(&dishonest), VerifyOutcome::NegativeCoefficientClaimed);
    }

    #[test]
    fn misplaced_negative_index_is_caught() {
        let honest = certify_at(&quartic(), &Rat::from(5)).expect("runs");
        let wrong_index = Certificate::from_parts(
            honest.input_poly().clone(),
            honest.shift().clone(),
            honest.quotient_coefficients().to_vec(),
            honest.remainder().clone(),
            PositivityVerdict::HasNegative(3),
        );
        assert_eq!(
            verify(&wrong_index),
            VerifyOutcome::NegativeCoefficientClaimed
        );
    }

    #[test]
    fn min_entry_index_prefers_earliest() {
        let table = shift_table(&quartic(), &Rat::from(10)).expect("nonzero");
        // Values 0, 35, 300, 3024 at k = 1..4: the zero at k = 1 is binding.
        assert_eq!(table.min_entry_index(), Some(1));
        let constant = shift_table(&Poly::constant(Rat::one()), &Rat::one()).expect("nonzero");
        assert_eq!(constant.min_entry_index(), None);
    }

    #[test]
    fn display_matches_identity_shape() {
        let cert = certify_at(&quintic(), &Rat::from(5)).expect("certifies");
        assert_eq!(
            cert.to_string(),
            "(2842*n^4 + 6389*n^3 + 15061*n^2 + 85733*n + 433747)*(n - 5) + 2166128"
        );
    }

    #[test]
    fn rational_shift_divides_exactly() {
        let f = desc(&[4, -4, 1]);
        let b = Rat::new(1, 2);
        let cert = certify_at(&f, &b).expect("certifies");
        assert_eq!(cert.quotient_coefficients(), vec![Rat::from(4), Rat::from(-2)]);
        assert_eq!(cert.remainder(), &Rat::zero());
        assert_eq!(verify(&cert), VerifyOutcome::Valid);
    }
}
