//! Arbitrary-precision rational numbers, always reduced, denominator > 0.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::Error;

/// Exact rational number. Arithmetic never rounds; values are kept in
/// lowest terms with a positive denominator.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Default)]
pub struct Rational(BigRational);

impl Rational {
    /// `num / den`. Panics if `den == 0`.
    pub fn new(num: i64, den: i64) -> Self {
        Rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_int(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Rational(BigRational::from_integer(n))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
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

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn recip(&self) -> Self {
        Rational(self.0.recip())
    }

    pub fn pow(&self, exp: u32) -> Self {
        Rational(self.0.pow(exp as i32))
    }

    /// Nearest double; exact huge values degrade gracefully to +-inf.
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    /// Parses `"p"`, `"p/q"`, or a plain decimal such as `"-0.25"`.
    pub fn parse(text: &str) -> Result<Self, Error> {
        let s = text.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty rational".into()));
        }
        if let Some((num, den)) = s.split_once('/') {
            let n = BigInt::from_str(num.trim())
                .map_err(|_| Error::Parse(format!("bad numerator in '{s}'")))?;
            let d = BigInt::from_str(den.trim())
                .map_err(|_| Error::Parse(format!("bad denominator in '{s}'")))?;
            if d.is_zero() {
                return Err(Error::Parse(format!("zero denominator in '{s}'")));
            }
            return Ok(Rational(BigRational::new(n, d)));
        }
        if let Some((int_part, frac_part)) = s.split_once('.') {
            let sign = if s.starts_with('-') { -1 } else { 1 };
            let int_digits = int_part.trim_start_matches(['+', '-']);
            let int_val = if int_digits.is_empty() {
                BigInt::zero()
            } else {
                BigInt::from_str(int_digits)
                    .map_err(|_| Error::Parse(format!("bad decimal '{s}'")))?
            };
            if frac_part.is_empty() || !frac_part.bytes().all(|b| b.is_ascii_digit()) {
                return Err(Error::Parse(format!("bad decimal '{s}'")));
            }
            let frac_val = BigInt::from_str(frac_part)
                .map_err(|_| Error::Parse(format!("bad decimal '{s}'")))?;
            let scale = BigInt::from(10u32).pow(frac_part.len() as u32);
            let num = int_val * &scale + frac_val;
            return Ok(Rational(BigRational::new(num * sign, scale)));
        }
        let n = BigInt::from_str(s).map_err(|_| Error::Parse(format!("bad integer '{s}'")))?;
        Ok(Rational(BigRational::from_integer(n)))
    }
}

impl FromStr for Rational {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        Rational::parse(s)
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_int(n)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((self.0).$method(rhs.0))
            }
        }
        impl<'a> $trait<&'a Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &'a Rational) -> Rational {
                Rational((self.0).$method(&rhs.0))
            }
        }
        impl<'a> $trait<Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((&self.0).$method(rhs.0))
            }
        }
        impl<'a, 'b> $trait<&'b Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: &'b Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&Rational> for Rational {
    fn sub_assign(&mut self, rhs: &Rational) {
        self.0 -= &rhs.0;
    }
}

impl MulAssign<&Rational> for Rational {
    fn mul_assign(&mut self, rhs: &Rational) {
        self.0 *= &rhs.0;
    }
}
