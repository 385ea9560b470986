//! Numerical spectra: half-line finite-difference discretization of
//! H = −d²/dx² + V with Dirichlet walls, a Sturm bisection eigensolver,
//! and ladder-refinement verification against the algebraic targets.
//!
//! Units put ħ = 2m = 1: with that kinetic normalization the closed-form
//! radial-oscillator spectrum κ(2n + 1 + a) − offset reproduces the
//! algebraic eigenvalue families exactly, which fixes the convention.

pub mod cs;
pub mod potential;
pub mod sturm;

pub use cs::{cs_verify, isospectral_deviation, richardson_extrapolate, ConvergenceReport};
pub use potential::{potential_value, PotentialFamily, PotentialSpec};
pub use sturm::{eigenvalues_sturm, sturm_count, SymTridiagonal};

use crate::error::{Error, Result};

/// Uniform interior grid on (0, L) with Dirichlet boundaries at 0 and L.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GridSpec {
    length: f64,
    points: usize,
}

impl GridSpec {
    /// `points` interior nodes on a domain of the given length. At
    /// least 100 points; the harmonic wall should dominate at L, so
    /// L ≳ 10/√κ is the sensible regime.
    pub fn new(length: f64, points: usize) -> Result<Self> {
        if !length.is_finite() || length <= 0.0 {
            return Err(Error::InvalidGrid(format!("bad length {length}")));
        }
        if points < 100 {
            return Err(Error::InvalidGrid(format!(
                "need at least 100 interior points, got {points}"
            )));
        }
        Ok(GridSpec { length, points })
    }

    pub fn length(&self) -> f64 {
        self.length
    }

    pub fn points(&self) -> usize {
        self.points
    }

    pub fn spacing(&self) -> f64 {
        self.length / (self.points as f64 + 1.0)
    }

    pub fn node(&self, j: usize) -> f64 {
        (j as f64 + 1.0) * self.spacing()
    }
}

/// Second-order central-difference discretization of −d²/dx² + V on the
/// interior nodes: diagonal 2/h² + V(xⱼ), off-diagonal −1/h².
pub fn discretize(spec: &PotentialSpec, grid: &GridSpec) -> SymTridiagonal {
    discretize_fn(
        |x| potential_value(spec, x).expect("interior nodes are positive"),
        grid,
    )
}

/// Same discretization for an arbitrary potential; test hook for known
/// closed-form spectra (free particle, pure harmonic).
pub fn discretize_fn(v: impl Fn(f64) -> f64, grid: &GridSpec) -> SymTridiagonal {
    let h = grid.spacing();
    let inv_h2 = 1.0 / (h * h);
    let diagonal = (0..grid.points())
        .map(|j| 2.0 * inv_h2 + v(grid.node(j)))
        .collect();
    let off_diagonal = vec![-inv_h2; grid.points() - 1];
    SymTridiagonal::new(diagonal, off_diagonal)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn free_particle_box_levels() {
        // V = 0 on (0, π): eigenvalues n², n = 1, 2, ...
        let grid = GridSpec::new(std::f64::consts::PI, 2000).unwrap();
        let t = discretize_fn(|_| 0.0, &grid);
        let ev = eigenvalues_sturm(&t, 2, 1e-10).unwrap();
        assert!((ev[0] - 1.0).abs() < 2e-6, "ground {}", ev[0]);
        let ratio = ev[1] / ev[0];
        assert!((ratio - 4.0).abs() < 0.02, "ratio {ratio}");
    }

    #[test]
    fn discretization_is_symmetric() {
        let spec = PotentialSpec::new(PotentialFamily::V0, 0.4).unwrap();
        let grid = GridSpec::new(20.0, 250).unwrap();
        let t = discretize(&spec, &grid);
        // symmetric by construction: one shared off-diagonal
        assert_eq!(t.off_diagonal.len() + 1, t.diagonal.len());
        assert!(t.off_diagonal.iter().all(|&e| e == t.off_diagonal[0]));
    }

    #[test]
    fn half_line_harmonic_closed_form() {
        // κ = 1: V₀ = x²/4 − 1/2 with Dirichlet at 0 picks the odd
        // states of the full line: E_n = 2n + 1.
        let spec = PotentialSpec::new(PotentialFamily::V0, 1.0).unwrap();
        let grid = GridSpec::new(25.0, 4000).unwrap();
        let t = discretize(&spec, &grid);
        let ev = eigenvalues_sturm(&t, 3, 1e-10).unwrap();
        for (n, e) in ev.iter().enumerate() {
            let target = 2.0 * n as f64 + 1.0;
            assert!((e - target).abs() / target < 2e-4, "level {n}: {e}");
        }
    }

    #[test]
    fn second_order_convergence_on_smooth_case() {
        // mesh halving shrinks the eigenvalue error by ~4 on the pure
        // harmonic case; accept a ratio in [3, 5]
        let spec = PotentialSpec::new(PotentialFamily::V0, 1.0).unwrap();
        let mut errors = Vec::new();
        for m in [500usize, 1000, 2000] {
            let grid = GridSpec::new(25.0, m).unwrap();
            let t = discretize(&spec, &grid);
            let ev = eigenvalues_sturm(&t, 1, 1e-12).unwrap();
            errors.push((ev[0] - 1.0).abs());
        }
        for w in errors.windows(2) {
            let ratio = w[0] / w[1];
            assert!((3.0..5.0).contains(&ratio), "ratio {ratio}");
        }
    }

    #[test]
    fn grid_validation() {
        assert!(GridSpec::new(0.0, 500).is_err());
        assert!(GridSpec::new(10.0, 50).is_err());
        let g = GridSpec::new(10.0, 999).unwrap();
        assert!((g.spacing() - 0.01).abs() < 1e-15);
        assert!((g.node(0) - 0.01).abs() < 1e-15);
    }
}
