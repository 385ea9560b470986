//! The zero-deformation limit: coherent states labeled by a nilpotent
//! anticommuting variable on the two-state fermion module.

use std::fmt;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::report::Report;

/// Element of the Grassmann algebra on generators θ, θ̄ over the
/// complex numbers, with θ² = θ̄² = 0 and θθ̄ = −θ̄θ. Basis order:
/// 1, θ, θ̄, θθ̄.
#[derive(Clone, Copy, Debug, PartialEq, Default)]
pub struct GrassmannElement {
    pub scalar: Complex64,
    pub theta: Complex64,
    pub theta_bar: Complex64,
    pub theta_theta_bar: Complex64,
}

impl GrassmannElement {
    pub fn zero() -> Self {
        GrassmannElement::default()
    }

    pub fn one() -> Self {
        GrassmannElement {
            scalar: Complex64::new(1.0, 0.0),
            ..Default::default()
        }
    }

    /// b·θ for complex b.
    pub fn theta(b: Complex64) -> Self {
        GrassmannElement {
            theta: b,
            ..Default::default()
        }
    }

    pub fn is_zero(&self) -> bool {
        self.scalar == Complex64::new(0.0, 0.0)
            && self.theta == Complex64::new(0.0, 0.0)
            && self.theta_bar == Complex64::new(0.0, 0.0)
            && self.theta_theta_bar == Complex64::new(0.0, 0.0)
    }

    /// Pure θ multiple (possibly zero): the valid coherent-state labels.
    pub fn is_theta_multiple(&self) -> bool {
        self.scalar == Complex64::new(0.0, 0.0)
            && self.theta_bar == Complex64::new(0.0, 0.0)
            && self.theta_theta_bar == Complex64::new(0.0, 0.0)
    }

    pub fn add(&self, other: &GrassmannElement) -> GrassmannElement {
        GrassmannElement {
            scalar: self.scalar + other.scalar,
            theta: self.theta + other.theta,
            theta_bar: self.theta_bar + other.theta_bar,
            theta_theta_bar: self.theta_theta_bar + other.theta_theta_bar,
        }
    }

    pub fn sub(&self, other: &GrassmannElement) -> GrassmannElement {
        GrassmannElement {
            scalar: self.scalar - other.scalar,
            theta: self.theta - other.theta,
            theta_bar: self.theta_bar - other.theta_bar,
            theta_theta_bar: self.theta_theta_bar - other.theta_theta_bar,
        }
    }

    /// Product with θ² = θ̄² = 0 and θθ̄ = −θ̄θ folded in.
    pub fn mul(&self, other: &GrassmannElement) -> GrassmannElement {
        let (a1, a2, a3, a4) = (
            self.scalar,
            self.theta,
            self.theta_bar,
            self.theta_theta_bar,
        );
        let (b1, b2, b3, b4) = (
            other.scalar,
            other.theta,
            other.theta_bar,
            other.theta_theta_bar,
        );
        GrassmannElement {
            scalar: a1 * b1,
            theta: a1 * b2 + a2 * b1,
            theta_bar: a1 * b3 + a3 * b1,
            theta_theta_bar: a1 * b4 + a4 * b1 + a2 * b3 - a3 * b2,
        }
    }

    /// Conjugation swaps θ and θ̄, conjugates the scalars, and reverses
    /// products: (ab)* = b*a*, so (θθ̄)* = θ̄*θ* = θθ̄ keeps its sign.
    pub fn conj(&self) -> GrassmannElement {
        GrassmannElement {
            scalar: self.scalar.conj(),
            theta: self.theta_bar.conj(),
            theta_bar: self.theta.conj(),
            theta_theta_bar: self.theta_theta_bar.conj(),
        }
    }
}

impl fmt::Display for GrassmannElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} + {}θ + {}θ̄ + {}θθ̄",
            self.scalar, self.theta, self.theta_bar, self.theta_theta_bar
        )
    }
}

/// Two-state vector with Grassmann coefficients: v₀|0⟩ + v₁|1⟩.
type TwoState = [GrassmannElement; 2];

fn annihilate(state: &TwoState) -> TwoState {
    // f⁻|0⟩ = 0, f⁻|1⟩ = |0⟩ at zero deformation
    [state[1], GrassmannElement::zero()]
}

fn scale_state(z: &GrassmannElement, state: &TwoState) -> TwoState {
    [z.mul(&state[0]), z.mul(&state[1])]
}

/// Parity difference quotient on the two-dimensional basis {1, z}:
/// α + βz ↦ β.
fn nilpotent_derivative(p: &TwoState) -> TwoState {
    [p[1], GrassmannElement::zero()]
}

/// Checks the zero-deformation coherent state and the nilpotency of the
/// parity derivative, exactly, for an odd label z.
pub fn grassmann_coherent(label: &GrassmannElement) -> Result<Report> {
    if !label.is_theta_multiple() {
        return Err(Error::GrassmannLabelNotOdd);
    }
    let mut report = Report::new(format!("Grassmann coherent state with label {label}"));

    // |z⟩ ∝ |0⟩ + z|1⟩; the normalization is even and drops out of the
    // eigenvalue equation.
    let state: TwoState = [GrassmannElement::one(), *label];
    let lhs = annihilate(&state);
    let rhs = scale_state(label, &state);
    let eigen_ok = lhs[0].sub(&rhs[0]).is_zero() && lhs[1].sub(&rhs[1]).is_zero();
    report.push(
        "annihilator-eigenvector",
        eigen_ok,
        "f⁻(|0⟩ + z|1⟩) = z(|0⟩ + z|1⟩) using z² = 0",
    );

    // z² = 0 for the odd label itself
    report.push(
        "label-nilpotency",
        label.mul(label).is_zero(),
        "z·z vanishes",
    );

    // (∂₋₁)² = 0 on α + βz
    let p: TwoState = [
        GrassmannElement {
            scalar: Complex64::new(0.7, -0.2),
            ..Default::default()
        },
        GrassmannElement {
            scalar: Complex64::new(-1.3, 0.4),
            ..Default::default()
        },
    ];
    let twice = nilpotent_derivative(&nilpotent_derivative(&p));
    report.push(
        "derivative-nilpotency",
        twice[0].is_zero() && twice[1].is_zero(),
        "applying the parity derivative twice kills every α + βz",
    );
    Ok(report)
}
