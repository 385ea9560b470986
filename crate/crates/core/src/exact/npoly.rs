//! Polynomials in the number operator N with kappa-polynomial coefficients.

use std::fmt;

use super::kpoly::KPoly;
use super::rational::Rational;

/// Polynomial in N over `KPoly`, ascending degree, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct NPoly {
    coeffs: Vec<KPoly>,
}

impl NPoly {
    pub fn from_coeffs(mut coeffs: Vec<KPoly>) -> Self {
        while coeffs.last().is_some_and(KPoly::is_zero) {
            coeffs.pop();
        }
        NPoly { coeffs }
    }

    pub fn zero() -> Self {
        NPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        NPoly::constant(KPoly::one())
    }

    pub fn constant(c: KPoly) -> Self {
        NPoly::from_coeffs(vec![c])
    }

    /// The monomial N itself.
    pub fn n() -> Self {
        NPoly::from_coeffs(vec![KPoly::zero(), KPoly::one()])
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, i: usize) -> KPoly {
        self.coeffs.get(i).cloned().unwrap_or_else(KPoly::zero)
    }

    pub fn coeffs(&self) -> &[KPoly] {
        &self.coeffs
    }

    pub fn add(&self, other: &NPoly) -> NPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i).add(&other.coeff(i))).collect();
        NPoly::from_coeffs(coeffs)
    }

    pub fn sub(&self, other: &NPoly) -> NPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i).sub(&other.coeff(i))).collect();
        NPoly::from_coeffs(coeffs)
    }

    pub fn neg(&self) -> NPoly {
        NPoly::from_coeffs(self.coeffs.iter().map(KPoly::neg).collect())
    }

    pub fn mul(&self, other: &NPoly) -> NPoly {
        if self.is_zero() || other.is_zero() {
            return NPoly::zero();
        }
        let mut coeffs = vec![KPoly::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
            }
        }
        NPoly::from_coeffs(coeffs)
    }

    pub fn scale_kpoly(&self, c: &KPoly) -> NPoly {
        NPoly::from_coeffs(self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    pub fn scale(&self, c: &Rational) -> NPoly {
        NPoly::from_coeffs(self.coeffs.iter().map(|a| a.scale(c)).collect())
    }

    /// Substitutes N -> N + d. Horner form keeps it exact for any integer d.
    pub fn shift(&self, d: i64) -> NPoly {
        if d == 0 || self.is_zero() {
            return self.clone();
        }
        let dr = Rational::from_int(d);
        let mut acc = NPoly::zero();
        for c in self.coeffs.iter().rev() {
            // acc = acc * (N + d) + c
            let mut shifted = vec![KPoly::zero(); acc.coeffs.len() + 1];
            for (j, a) in acc.coeffs.iter().enumerate() {
                shifted[j + 1] = shifted[j + 1].add(a);
                shifted[j] = shifted[j].add(&a.scale(&dr));
            }
            let mut next = NPoly::from_coeffs(shifted);
            next = next.add(&NPoly::constant(c.clone()));
            acc = next;
        }
        acc
    }

    /// Evaluates at N = n, leaving kappa symbolic.
    pub fn eval_level(&self, n: u32) -> KPoly {
        let nr = Rational::from_int(n as i64);
        let mut acc = KPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.scale(&nr).add(c);
        }
        acc
    }

    /// Fully evaluates at kappa = `kappa0`, N = n.
    pub fn eval(&self, kappa0: &Rational, n: u32) -> Rational {
        self.eval_level(n).eval(kappa0)
    }

    /// Substitutes kappa = `kappa0`, leaving a polynomial in N.
    pub fn substitute_kappa(&self, kappa0: &Rational) -> NPoly {
        NPoly::from_coeffs(
            self.coeffs
                .iter()
                .map(|c| KPoly::constant(c.eval(kappa0)))
                .collect(),
        )
    }
}

impl fmt::Display for NPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let multi_term = c.coeffs().iter().filter(|r| !r.is_zero()).count() > 1;
            let piece = match i {
                0 => c.to_string(),
                _ => {
                    let mut s = if c.is_one() {
                        String::new()
                    } else if multi_term {
                        format!("({c})")
                    } else {
                        format!("{c}·")
                    };
                    s.push('N');
                    if i > 1 {
                        s.push_str(&format!("^{i}"));
                    }
                    s
                }
            };
            if first {
                write!(f, "{piece}")?;
            } else if let Some(rest) = (!multi_term).then(|| piece.strip_prefix('-')).flatten() {
                write!(f, " - {rest}")?;
            } else if multi_term && i == 0 {
                write!(f, " + ({piece})")?;
            } else {
                write!(f, " + {piece}")?;
            }
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for NPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
