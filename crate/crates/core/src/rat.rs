//! Exact rational scalar.
//!
//! `Rat` wraps an arbitrary-precision rational kept in canonical form:
//! positive denominator, numerator and denominator coprime. It is the only
//! scalar type used anywhere a certificate is produced or checked; no
//! floating point enters those paths.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, ToPrimitive, Zero};

/// Exact rational number in canonical form.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rat(BigRational);

impl Rat {
    /// Builds `numer/denom` reduced to canonical form.
    ///
    /// Panics if `denom` is zero.
    pub fn new(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Rat {
        let denom = denom.into();
        assert!(!denom.is_zero(), "rational denominator must be nonzero");
        Rat(BigRational::new(numer.into(), denom))
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Rat {
        Rat(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Rat {
        Rat(BigRational::zero())
    }

    pub fn one() -> Rat {
        Rat(BigRational::one())
    }

    /// `1 / 2^exp`, the usual tolerance shape.
    pub fn pow2_inverse(exp: u32) -> Rat {
        Rat(BigRational::new(BigInt::one(), BigInt::from(2).pow(exp)))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn abs(&self) -> Rat {
        Rat(self.0.abs())
    }

    pub fn pow(&self, exp: u32) -> Rat {
        // Powering preserves canonical form, so skip re-reduction.
        Rat(BigRational::new_raw(
            self.numer().pow(exp),
            self.denom().pow(exp),
        ))
    }

    pub fn floor(&self) -> BigInt {
        self.0.floor().to_integer()
    }

    pub fn ceil(&self) -> BigInt {
        self.0.ceil().to_integer()
    }

    /// Approximate value for display only; never used in certified paths.
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }
}

impl From<i64> for Rat {
    fn from(n: i64) -> Rat {
        Rat::from_integer(n)
    }
}

impl From<i32> for Rat {
    fn from(n: i32) -> Rat {
        Rat::from_integer(n)
    }
}

impl From<BigInt> for Rat {
    fn from(n: BigInt) -> Rat {
        Rat::from_integer(n)
    }
}

macro_rules! rat_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<&Rat> for &Rat {
            type Output = Rat;
            fn $method(self, rhs: &Rat) -> Rat {
                Rat((&self.0).$method(&rhs.0))
            }
        }
        impl $trait<Rat> for Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Rat> for Rat {
            type Output = Rat;
            fn $method(self, rhs: &Rat) -> Rat {
                (&self).$method(rhs)
            }
        }
        impl $trait<Rat> for &Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                self.$method(&rhs)
            }
        }
    };
}

rat_binop!(Add, add);
rat_binop!(Sub, sub);
rat_binop!(Mul, mul);
rat_binop!(Div, div);

impl Neg for &Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-&self.0)
    }
}

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

/// Error from parsing a rational literal.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid rational literal `{input}`: {reason}")]
pub struct RatParseError {
    pub input: String,
    pub reason: String,
}

impl FromStr for Rat {
    type Err = RatParseError;

    /// Accepts `a` or `a/b` with optional sign on either part.
    fn from_str(s: &str) -> Result<Rat, RatParseError> {
        let err = |reason: &str| RatParseError {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let t = s.trim();
        match t.split_once('/') {
            None => {
                let n = BigInt::from_str(t).map_err(|_| err("expected an integer"))?;
                Ok(Rat::from_integer(n))
            }
            Some((np, dp)) => {
                let n =
                    BigInt::from_str(np.trim()).map_err(|_| err("expected an integer numerator"))?;
                let d = BigInt::from_str(dp.trim())
                    .map_err(|_| err("expected an integer denominator"))?;
                if d.is_zero() {
                    return Err(err("denominator is zero"));
                }
                Ok(Rat::new(n, d))
            }
        }
    }
}
