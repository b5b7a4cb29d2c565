//! Dense univariate polynomials over `Rat`.
//!
//! Coefficients are stored ascending by power (`coeffs[i]` multiplies
//! `x^i`); display and certificate output use descending order. The zero
//! polynomial is the single coefficient `0`; every other polynomial keeps a
//! nonzero top coefficient.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::rat::Rat;
use crate::render::{render, Style};

pub const DEFAULT_VARIABLE: &str = "x";

/// Dense univariate polynomial with exact rational coefficients.
///
/// Equality compares coefficients only; the variable name is display
/// metadata and does not affect the polynomial's identity.
#[derive(Clone, Debug)]
pub struct Poly {
    coeffs: Vec<Rat>,
    var: String,
}

impl PartialEq for Poly {
    fn eq(&self, other: &Poly) -> bool {
        self.coeffs == other.coeffs
    }
}

impl Eq for Poly {}

impl Poly {
    /// Builds a polynomial from coefficients in ascending power order.
    pub fn from_ascending(coeffs: Vec<Rat>) -> Poly {
        let mut p = Poly {
            coeffs,
            var: DEFAULT_VARIABLE.to_string(),
        };
        p.normalize();
        p
    }

    /// Builds a polynomial from coefficients in descending power order.
    pub fn from_descending(mut coeffs: Vec<Rat>) -> Poly {
        coeffs.reverse();
        Poly::from_ascending(coeffs)
    }

    pub fn zero() -> Poly {
        Poly::from_ascending(vec![])
    }

    pub fn constant(c: Rat) -> Poly {
        Poly::from_ascending(vec![c])
    }

    /// The monomial `x` for the named variable.
    pub fn variable(name: &str) -> Poly {
        Poly::from_ascending(vec![Rat::zero(), Rat::one()]).with_variable(name)
    }

    pub fn with_variable(mut self, name: &str) -> Poly {
        self.var = name.to_string();
        self
    }

    pub fn variable_name(&self) -> &str {
        &self.var
    }

    fn normalize(&mut self) {
        while self.coeffs.len() > 1 && self.coeffs.last().is_some_and(Rat::is_zero) {
            self.coeffs.pop();
        }
        if self.coeffs.is_empty() {
            self.coeffs.push(Rat::zero());
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_zero()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() == 1
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.is_zero() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    /// Leading coefficient, or `None` for the zero polynomial.
    pub fn leading_coefficient(&self) -> Option<&Rat> {
        if self.is_zero() {
            None
        } else {
            self.coeffs.last()
        }
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn coeffs_ascending(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeffs_descending(&self) -> Vec<Rat> {
        self.coeffs.iter().rev().cloned().collect()
    }

    /// Exact evaluation by Horner's scheme.
    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        Poly::from_ascending(self.coeffs.iter().map(|a| a * c).collect())
            .with_variable(&self.var)
    }

    /// Integer power by repeated squaring.
    pub fn pow(&self, exp: u32) -> Poly {
        let mut result = Poly::constant(Rat::one()).with_variable(&self.var);
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Variable name for the result of a binary operation: prefer a
    /// non-constant operand's name so constants do not erase it.
    fn joined_var(&self, other: &Poly) -> String {
        if self.is_constant() && !other.is_constant() {
            other.var.clone()
        } else {
            self.var.clone()
        }
    }
}

impl Add<&Poly> for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(&self.coeff(i) + &rhs.coeff(i));
        }
        let var = self.joined_var(rhs);
        Poly::from_ascending(coeffs).with_variable(&var)
    }
}

impl Sub<&Poly> for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl Mul<&Poly> for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        let var = self.joined_var(rhs);
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero().with_variable(&var);
        }
        let mut coeffs = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        Poly::from_ascending(coeffs).with_variable(&var)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::from_ascending(self.coeffs.iter().map(|a| -a).collect())
            .with_variable(&self.var)
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", render(self, Style::Plain))
    }
}
