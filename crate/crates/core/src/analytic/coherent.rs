//! Coherent states: annihilation-operator eigenvectors with adaptive
//! truncation, and the normalization series they sum to.

use num_complex::Complex64;
use serde_json::{json, Value};

use super::gamma::{gamma, ln_gamma};
use crate::algebra::structure_function_value_unchecked;
use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::fock::{build_operator, OperatorKind};

/// Normalized coherent state: f⁻|z⟩ = z|z⟩ on a truncation chosen so
/// the discarded tail of Σ|c_n|² stays below the requested tolerance.
#[derive(Clone, Debug)]
pub struct CoherentState {
    pub kappa: Rational,
    pub z: Complex64,
    pub coefficients: Vec<Complex64>,
    /// Σ|c_n|² of the stored (normalized) coefficients.
    pub norm_sq: f64,
}

impl CoherentState {
    pub fn truncation(&self) -> usize {
        self.coefficients.len()
    }

    /// ‖f⁻|z⟩ − z|z⟩‖ evaluated with the truncated ladder matrix.
    pub fn residual(&self) -> f64 {
        let d = self.coefficients.len().max(2);
        let mut v = self.coefficients.clone();
        v.resize(d, Complex64::new(0.0, 0.0));
        let lower = build_operator(OperatorKind::Lower, d, &self.kappa)
            .expect("state kappa already validated");
        let image = lower.apply_complex(&v);
        image
            .iter()
            .zip(&v)
            .map(|(a, b)| (a - b * self.z).norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    pub fn norm_error(&self) -> f64 {
        (self.norm_sq - 1.0).abs()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "kappa": self.kappa.to_string(),
            "z": [self.z.re, self.z.im],
            "D": self.truncation(),
            "residual": self.residual(),
            "norm_error": self.norm_error(),
            "coefficients": self.coefficients.iter().map(|c| vec![c.re, c.im]).collect::<Vec<_>>(),
        })
    }
}

/// Builds the coherent state for exact rational kappa > 0.
///
/// Coefficients follow c_{n+1} = z c_n / √F₊(n+1); truncation stops once
/// a geometric majorant of the coefficient ratio bounds the remaining
/// tail below `tol` relative to the accumulated norm.
pub fn coherent_state(kappa0: &Rational, z: Complex64, tol: f64) -> Result<CoherentState> {
    if !kappa0.is_positive() {
        return Err(Error::NonPositiveKappa(kappa0.to_string()));
    }
    if !tol.is_finite() || tol <= 0.0 {
        return Err(Error::InvalidTolerance(tol));
    }
    let z_sq = z.norm_sqr();
    let mut coeffs = vec![Complex64::new(1.0, 0.0)];
    let mut total = 1.0f64;
    let cap = 100_000usize;
    while coeffs.len() < cap {
        let n = coeffs.len() as u32; // building c_n
        let f = structure_function_value_unchecked(kappa0, n).to_f64();
        let next = coeffs[n as usize - 1] * z / f.sqrt();
        coeffs.push(next);
        total += next.norm_sqr();
        // geometric tail bound: later ratios |c_{m+1}/c_m|² are at most
        // |z|² / min(F₊(n+1), F₊(n+2)) since F₊ grows along each parity
        let fmin = structure_function_value_unchecked(kappa0, n + 1)
            .to_f64()
            .min(structure_function_value_unchecked(kappa0, n + 2).to_f64());
        let rho = z_sq / fmin;
        if rho < 0.5 {
            let tail = next.norm_sqr() * rho / (1.0 - rho);
            if tail < tol * total {
                break;
            }
        }
    }
    // keep the truncation at least two states so the ladder matrix exists
    while coeffs.len() < 2 {
        coeffs.push(Complex64::new(0.0, 0.0));
    }
    let norm = total.sqrt();
    for c in coeffs.iter_mut() {
        *c /= norm;
    }
    let norm_sq = coeffs.iter().map(|c| c.norm_sqr()).sum();
    Ok(CoherentState {
        kappa: kappa0.clone(),
        z,
        coefficients: coeffs,
        norm_sq,
    })
}

/// The normalization series e_κ(x) = Σ (1/(2κ)+n+x) x^{2n} / (n! Γ(1/(2κ)+n+1)),
/// summed to relative accuracy 1e-14. The coherent-state norm is
/// e_κ(|z|²/(2κ)).
pub fn e_kappa(kappa0: &Rational, x: f64) -> f64 {
    assert!(kappa0.is_positive(), "e_kappa needs kappa > 0");
    assert!(x >= 0.0, "e_kappa needs x >= 0");
    let g = (Rational::new(1, 2) / kappa0).to_f64();
    // u_n = x^{2n} / (n! Γ(g+n+1)) via the ratio recursion
    let mut u = (-ln_gamma(g + 1.0)).exp();
    let mut sum = 0.0;
    for n in 0..100_000 {
        let term = (g + n as f64 + x) * u;
        sum += term;
        if term < sum * 1e-16 && n > 2 {
            break;
        }
        u *= x * x / ((n as f64 + 1.0) * (g + n as f64 + 1.0));
    }
    sum
}

/// The n-th term of the e_κ series; exposed so the pair-sum identity
/// with the squared coherent coefficients can be checked term by term.
pub fn e_kappa_term(kappa0: &Rational, x: f64, n: u32) -> f64 {
    let g = (Rational::new(1, 2) / kappa0).to_f64();
    let log_term = 2.0 * (n as f64) * x.max(f64::MIN_POSITIVE).ln()
        - ln_gamma(n as f64 + 1.0)
        - ln_gamma(g + n as f64 + 1.0);
    if n == 0 {
        (g + x) * (-ln_gamma(g + 1.0)).exp()
    } else {
        (g + n as f64 + x) * log_term.exp()
    }
}

/// Unnormalized coefficient magnitudes |ĉ_{2n}|², |ĉ_{2n+1}|² from the
/// ladder recurrence with ĉ₀ = 1.
pub fn unnormalized_pair_sums(kappa0: &Rational, z: Complex64, pairs: u32) -> Vec<f64> {
    let mut out = Vec::with_capacity(pairs as usize);
    let mut c = Complex64::new(1.0, 0.0);
    let mut level = 0u32;
    for _ in 0..pairs {
        let even_sq = c.norm_sqr();
        let f_odd = structure_function_value_unchecked(kappa0, level + 1).to_f64();
        let c_odd = c * z / f_odd.sqrt();
        out.push(even_sq + c_odd.norm_sqr());
        let f_even = structure_function_value_unchecked(kappa0, level + 2).to_f64();
        c = c_odd * z / f_even.sqrt();
        level += 2;
    }
    out
}

/// Γ(1/(2κ)) as a float; the single global constant between the
/// recurrence-built coefficients and the closed form.
pub fn gamma_of_inverse_2kappa(kappa0: &Rational) -> f64 {
    gamma((Rational::new(1, 2) / kappa0).to_f64())
}
