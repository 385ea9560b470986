//! Polynomial realization of the algebra: states become polynomials in
//! z, the creation operator becomes multiplication by z, and the
//! annihilation operator becomes the generalized derivative
//! D^κ = κ d/dz + (1−κ) ∂₋₁ built from the parity difference quotient.

use num_complex::Complex64;

use super::gamma::gamma;
use crate::algebra::structure_function_value_unchecked;
use crate::exact::Rational;

/// Polynomial in z with complex coefficients, ascending degree.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct BargmannPoly {
    coeffs: Vec<Complex64>,
}

impl BargmannPoly {
    pub fn from_coeffs(mut coeffs: Vec<Complex64>) -> Self {
        while coeffs.last().is_some_and(|c| c.re == 0.0 && c.im == 0.0) {
            coeffs.pop();
        }
        BargmannPoly { coeffs }
    }

    pub fn zero() -> Self {
        BargmannPoly::default()
    }

    pub fn monomial(degree: usize, c: Complex64) -> Self {
        let mut coeffs = vec![Complex64::new(0.0, 0.0); degree + 1];
        coeffs[degree] = c;
        BargmannPoly::from_coeffs(coeffs)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> Complex64 {
        self.coeffs
            .get(i)
            .copied()
            .unwrap_or(Complex64::new(0.0, 0.0))
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn scale(&self, c: Complex64) -> BargmannPoly {
        BargmannPoly::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn add(&self, other: &BargmannPoly) -> BargmannPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        BargmannPoly::from_coeffs((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &BargmannPoly) -> BargmannPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        BargmannPoly::from_coeffs((0..n).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub fn max_abs_diff(&self, other: &BargmannPoly) -> f64 {
        let n = self.coeffs.len().max(other.coeffs.len());
        (0..n)
            .map(|i| (self.coeff(i) - other.coeff(i)).norm())
            .fold(0.0, f64::max)
    }

    /// Substitutes z -> −z; the parity action on transforms.
    pub fn parity_flip(&self) -> BargmannPoly {
        BargmannPoly::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 0 { *c } else { -c })
                .collect(),
        )
    }
}

/// Normalized basis monomial f_n(z) = z^n / √(norm) with
/// norm = (2κ)^{2m} m! Γ(1/(2κ)+m) for n = 2m and
/// norm = (2κ)^{2m+1} m! Γ(1/(2κ)+m+1) for n = 2m+1.
pub fn bargmann_monomial(kappa0: &Rational, n: u32) -> BargmannPoly {
    assert!(kappa0.is_positive(), "monomials need kappa > 0");
    let two_kappa = 2.0 * kappa0.to_f64();
    let g = (Rational::new(1, 2) / kappa0).to_f64();
    let m = (n / 2) as f64;
    let mut fact = 1.0;
    for j in 1..=(n / 2) {
        fact *= j as f64;
    }
    let norm = if n.is_multiple_of(2) {
        two_kappa.powi(n as i32) * fact * gamma(g + m)
    } else {
        two_kappa.powi(n as i32) * fact * gamma(g + m + 1.0)
    };
    BargmannPoly::monomial(n as usize, Complex64::new(1.0 / norm.sqrt(), 0.0))
}

/// Multiplication by z: the creation operator in this realization.
pub fn multiply_by_z(p: &BargmannPoly) -> BargmannPoly {
    if p.coeffs.is_empty() {
        return BargmannPoly::zero();
    }
    let mut coeffs = vec![Complex64::new(0.0, 0.0)];
    coeffs.extend_from_slice(&p.coeffs);
    BargmannPoly::from_coeffs(coeffs)
}

/// Ordinary derivative d/dz.
pub fn derivative(p: &BargmannPoly) -> BargmannPoly {
    BargmannPoly::from_coeffs(
        p.coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * i as f64)
            .collect(),
    )
}

/// Parity difference quotient (f(z) − f(−z)) / (2z): kills even powers,
/// sends z^{2m+1} to z^{2m}.
pub fn fibonacci_difference(p: &BargmannPoly) -> BargmannPoly {
    BargmannPoly::from_coeffs(
        p.coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| {
                if i % 2 == 1 {
                    *c
                } else {
                    Complex64::new(0.0, 0.0)
                }
            })
            .collect(),
    )
}

/// Generalized derivative D^κ = κ d/dz + (1−κ) ∂₋₁; acts on z^m as
/// multiplication by F₊(m) and degree drop.
pub fn generalized_derivative(kappa0: &Rational, p: &BargmannPoly) -> BargmannPoly {
    let k = kappa0.to_f64();
    derivative(p)
        .scale(Complex64::new(k, 0.0))
        .add(&fibonacci_difference(p).scale(Complex64::new(1.0 - k, 0.0)))
}

/// The same annihilator realized as (1/z) F₊(z d/dz); must agree with
/// the generalized derivative on every monomial.
pub fn annihilator_via_structure_function(kappa0: &Rational, p: &BargmannPoly) -> BargmannPoly {
    BargmannPoly::from_coeffs(
        p.coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(m, c)| c * structure_function_value_unchecked(kappa0, m as u32).to_f64())
            .collect(),
    )
}

/// Euler operator z d/dz.
pub fn euler_operator(p: &BargmannPoly) -> BargmannPoly {
    BargmannPoly::from_coeffs(
        p.coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| c * i as f64)
            .collect(),
    )
}

/// Transforms a Fock coefficient sequence into its polynomial:
/// Ψ(z) = Σ Ψ_n f_n(z).
pub fn bargmann_transform(coeffs: &[Complex64], kappa0: &Rational) -> BargmannPoly {
    let mut out = BargmannPoly::zero();
    for (n, psi) in coeffs.iter().enumerate() {
        if psi.re == 0.0 && psi.im == 0.0 {
            continue;
        }
        out = out.add(&bargmann_monomial(kappa0, n as u32).scale(*psi));
    }
    out
}

/// Creation on coefficient sequences: (f⁺Ψ)_n = √F₊(n) Ψ_{n−1}.
pub fn raise_coefficients(kappa0: &Rational, coeffs: &[Complex64]) -> Vec<Complex64> {
    let mut out = vec![Complex64::new(0.0, 0.0); coeffs.len() + 1];
    for (n, c) in coeffs.iter().enumerate() {
        let f = structure_function_value_unchecked(kappa0, n as u32 + 1).to_f64();
        out[n + 1] = c * f.sqrt();
    }
    out
}

/// Annihilation on coefficient sequences: (f⁻Ψ)_n = √F₊(n+1) Ψ_{n+1}.
pub fn lower_coefficients(kappa0: &Rational, coeffs: &[Complex64]) -> Vec<Complex64> {
    if coeffs.len() <= 1 {
        return vec![];
    }
    (1..coeffs.len())
        .map(|n| {
            let f = structure_function_value_unchecked(kappa0, n as u32).to_f64();
            coeffs[n] * f.sqrt()
        })
        .collect()
}

// Exact-rational mirrors of the operators, for identity checks that
// must hold with no floating error at all.

fn trim_rational(mut coeffs: Vec<Rational>) -> Vec<Rational> {
    while coeffs.last().is_some_and(Rational::is_zero) {
        coeffs.pop();
    }
    coeffs
}

/// z · p over exact rational coefficients.
pub fn multiply_by_z_rational(p: &[Rational]) -> Vec<Rational> {
    if p.is_empty() {
        return vec![];
    }
    let mut out = vec![Rational::zero()];
    out.extend_from_slice(p);
    trim_rational(out)
}

/// d/dz over exact rational coefficients.
pub fn derivative_rational(p: &[Rational]) -> Vec<Rational> {
    trim_rational(
        p.iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * Rational::from_int(i as i64))
            .collect(),
    )
}

/// ∂₋₁ over exact rational coefficients.
pub fn fibonacci_difference_rational(p: &[Rational]) -> Vec<Rational> {
    trim_rational(
        p.iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| {
                if i % 2 == 1 {
                    c.clone()
                } else {
                    Rational::zero()
                }
            })
            .collect(),
    )
}

/// D^κ over exact rational coefficients: coefficient m picks up F₊(m).
pub fn generalized_derivative_rational(kappa0: &Rational, p: &[Rational]) -> Vec<Rational> {
    trim_rational(
        p.iter()
            .enumerate()
            .skip(1)
            .map(|(m, c)| c * structure_function_value_unchecked(kappa0, m as u32))
            .collect(),
    )
}
