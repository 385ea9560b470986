//! The coefficient ring of the whole operator calculus: elements
//! p(N) + q(N)·σ with σ = (-1)^N, σ² = 1, and polynomial entries in N
//! whose coefficients are themselves polynomials in kappa.

use std::fmt;

use serde_json::{json, Value};

use super::kpoly::KPoly;
use super::npoly::NPoly;
use super::rational::Rational;
use crate::error::Error;

/// Ring element p(N) + q(N)·σ. The involution σ never appears to a
/// power: σ² = 1 is applied on construction, so equality is structural.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct NSigmaPoly {
    even: NPoly,
    sigma: NPoly,
}

impl NSigmaPoly {
    pub fn from_parts(even: NPoly, sigma: NPoly) -> Self {
        NSigmaPoly { even, sigma }
    }

    pub fn zero() -> Self {
        NSigmaPoly::default()
    }

    pub fn one() -> Self {
        NSigmaPoly::from_parts(NPoly::one(), NPoly::zero())
    }

    pub fn constant(c: Rational) -> Self {
        NSigmaPoly::from_parts(NPoly::constant(KPoly::constant(c)), NPoly::zero())
    }

    pub fn from_int(n: i64) -> Self {
        NSigmaPoly::constant(Rational::from_int(n))
    }

    pub fn from_kpoly(c: KPoly) -> Self {
        NSigmaPoly::from_parts(NPoly::constant(c), NPoly::zero())
    }

    /// The deformation parameter kappa as a ring element.
    pub fn kappa() -> Self {
        NSigmaPoly::from_kpoly(KPoly::kappa())
    }

    /// The number operator N.
    pub fn n_op() -> Self {
        NSigmaPoly::from_parts(NPoly::n(), NPoly::zero())
    }

    /// The involution σ = (-1)^N.
    pub fn sigma() -> Self {
        NSigmaPoly::from_parts(NPoly::zero(), NPoly::one())
    }

    pub fn even_part(&self) -> &NPoly {
        &self.even
    }

    pub fn sigma_part(&self) -> &NPoly {
        &self.sigma
    }

    pub fn is_zero(&self) -> bool {
        self.even.is_zero() && self.sigma.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.sigma.is_zero() && self.even == NPoly::one()
    }

    pub fn add(&self, other: &NSigmaPoly) -> NSigmaPoly {
        NSigmaPoly::from_parts(self.even.add(&other.even), self.sigma.add(&other.sigma))
    }

    pub fn sub(&self, other: &NSigmaPoly) -> NSigmaPoly {
        NSigmaPoly::from_parts(self.even.sub(&other.even), self.sigma.sub(&other.sigma))
    }

    pub fn neg(&self) -> NSigmaPoly {
        NSigmaPoly::from_parts(self.even.neg(), self.sigma.neg())
    }

    /// Ring product; commutative, with σ² = 1 folding the cross terms.
    pub fn mul(&self, other: &NSigmaPoly) -> NSigmaPoly {
        let even = self
            .even
            .mul(&other.even)
            .add(&self.sigma.mul(&other.sigma));
        let sigma = self
            .even
            .mul(&other.sigma)
            .add(&self.sigma.mul(&other.even));
        NSigmaPoly::from_parts(even, sigma)
    }

    pub fn scale(&self, c: &Rational) -> NSigmaPoly {
        NSigmaPoly::from_parts(self.even.scale(c), self.sigma.scale(c))
    }

    pub fn scale_kpoly(&self, c: &KPoly) -> NSigmaPoly {
        NSigmaPoly::from_parts(self.even.scale_kpoly(c), self.sigma.scale_kpoly(c))
    }

    pub fn pow(&self, exp: u32) -> NSigmaPoly {
        let mut acc = NSigmaPoly::one();
        for _ in 0..exp {
            acc = acc.mul(self);
        }
        acc
    }

    /// Substitutes N -> N + d and σ -> (-1)^d σ.
    pub fn shift(&self, d: i64) -> NSigmaPoly {
        let sigma = self.sigma.shift(d);
        NSigmaPoly::from_parts(
            self.even.shift(d),
            if d.rem_euclid(2) == 1 {
                sigma.neg()
            } else {
                sigma
            },
        )
    }

    /// Evaluates at N = n with σ = (-1)^n, leaving kappa symbolic.
    pub fn eval_level(&self, n: u32) -> KPoly {
        let e = self.even.eval_level(n);
        let s = self.sigma.eval_level(n);
        if n.is_multiple_of(2) {
            e.add(&s)
        } else {
            e.sub(&s)
        }
    }

    /// Exact value at kappa = `kappa0`, N = n, σ = (-1)^n.
    pub fn eval(&self, kappa0: &Rational, n: u32) -> Rational {
        self.eval_level(n).eval(kappa0)
    }

    /// Substitutes kappa = `kappa0`, leaving the (N, σ) structure intact.
    pub fn substitute_kappa(&self, kappa0: &Rational) -> NSigmaPoly {
        NSigmaPoly::from_parts(
            self.even.substitute_kappa(kappa0),
            self.sigma.substitute_kappa(kappa0),
        )
    }

    /// JSON encoding: rows indexed by N-degree, each row the list of
    /// kappa coefficients as exact `"p/q"` strings.
    pub fn to_json(&self) -> Value {
        let encode = |p: &NPoly| -> Value {
            Value::Array(
                p.coeffs()
                    .iter()
                    .map(|row| {
                        Value::Array(
                            row.coeffs()
                                .iter()
                                .map(|c| Value::String(c.to_string()))
                                .collect(),
                        )
                    })
                    .collect(),
            )
        };
        json!({ "even": encode(&self.even), "sigma": encode(&self.sigma) })
    }

    pub fn from_json(value: &Value) -> Result<Self, Error> {
        let decode = |v: &Value| -> Result<NPoly, Error> {
            let rows = v
                .as_array()
                .ok_or_else(|| Error::Parse("expected array of coefficient rows".into()))?;
            let mut coeffs = Vec::with_capacity(rows.len());
            for row in rows {
                let entries = row
                    .as_array()
                    .ok_or_else(|| Error::Parse("expected array of kappa coefficients".into()))?;
                let mut kc = Vec::with_capacity(entries.len());
                for e in entries {
                    let s = e
                        .as_str()
                        .ok_or_else(|| Error::Parse("expected rational string".into()))?;
                    kc.push(Rational::parse(s)?);
                }
                coeffs.push(KPoly::from_coeffs(kc));
            }
            Ok(NPoly::from_coeffs(coeffs))
        };
        let even = decode(
            value
                .get("even")
                .ok_or_else(|| Error::Parse("missing 'even' field".into()))?,
        )?;
        let sigma = decode(
            value
                .get("sigma")
                .ok_or_else(|| Error::Parse("missing 'sigma' field".into()))?,
        )?;
        Ok(NSigmaPoly::from_parts(even, sigma))
    }
}

impl fmt::Display for NSigmaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        if self.sigma.is_zero() {
            return write!(f, "{}", self.even);
        }
        if self.even.is_zero() {
            return write!(f, "({})·σ", self.sigma);
        }
        write!(f, "{} + ({})·σ", self.even, self.sigma)
    }
}

impl fmt::Debug for NSigmaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
