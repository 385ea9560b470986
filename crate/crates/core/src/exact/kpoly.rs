//! Polynomials in the deformation parameter kappa over the rationals.

use std::fmt;

use super::rational::Rational;

/// Polynomial in kappa with exact rational coefficients, stored by
/// ascending degree with no trailing zeros.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct KPoly {
    coeffs: Vec<Rational>,
}

impl KPoly {
    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        KPoly { coeffs }
    }

    pub fn zero() -> Self {
        KPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        KPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        KPoly::from_coeffs(vec![c])
    }

    /// The monomial kappa itself.
    pub fn kappa() -> Self {
        KPoly::from_coeffs(vec![Rational::zero(), Rational::one()])
    }

    pub fn monomial(degree: usize, c: Rational) -> Self {
        let mut coeffs = vec![Rational::zero(); degree + 1];
        coeffs[degree] = c;
        KPoly::from_coeffs(coeffs)
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(0)
    }

    pub fn add(&self, other: &KPoly) -> KPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + other.coeff(i)).collect();
        KPoly::from_coeffs(coeffs)
    }

    pub fn sub(&self, other: &KPoly) -> KPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) - other.coeff(i)).collect();
        KPoly::from_coeffs(coeffs)
    }

    pub fn neg(&self) -> KPoly {
        KPoly::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn mul(&self, other: &KPoly) -> KPoly {
        if self.is_zero() || other.is_zero() {
            return KPoly::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += &(a * b);
            }
        }
        KPoly::from_coeffs(coeffs)
    }

    pub fn scale(&self, c: &Rational) -> KPoly {
        KPoly::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, exp: u32) -> KPoly {
        let mut acc = KPoly::one();
        for _ in 0..exp {
            acc = acc.mul(self);
        }
        acc
    }

    /// Exact evaluation at kappa = `kappa0` by Horner's rule.
    pub fn eval(&self, kappa0: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * kappa0 + c;
        }
        acc
    }
}

impl fmt::Display for KPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            let mag = c.abs();
            match i {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        if mag.is_integer() {
                            write!(f, "{mag}")?;
                        } else {
                            write!(f, "({mag})")?;
                        }
                    }
                    write!(f, "κ")?;
                    if i > 1 {
                        write!(f, "^{i}")?;
                    }
                }
            }
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for KPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn canonical_trim() {
        let p = KPoly::from_coeffs(vec![k(1, 1), k(0, 1), k(0, 1)]);
        assert_eq!(p.degree(), Some(0));
        assert!(KPoly::from_coeffs(vec![k(0, 1)]).is_zero());
        assert_eq!(KPoly::zero().degree(), None);
    }

    #[test]
    fn eval_horner() {
        // 1 + 2k at k = 1/3 -> 5/3
        let p = KPoly::from_coeffs(vec![k(1, 1), k(2, 1)]);
        assert_eq!(p.eval(&k(1, 3)), k(5, 3));
    }

    #[test]
    fn mul_matches_expansion() {
        // (1 + 2k)^2 = 1 + 4k + 4k^2
        let p = KPoly::from_coeffs(vec![k(1, 1), k(2, 1)]);
        let sq = p.mul(&p);
        assert_eq!(sq.coeff(0), k(1, 1));
        assert_eq!(sq.coeff(1), k(4, 1));
        assert_eq!(sq.coeff(2), k(4, 1));
        assert_eq!(sq.degree(), Some(2));
    }

    #[test]
    fn display_text() {
        let p = KPoly::from_coeffs(vec![k(-1, 1), k(0, 1), k(4, 1)]);
        assert_eq!(p.to_string(), "4κ^2 - 1");
    }
}
