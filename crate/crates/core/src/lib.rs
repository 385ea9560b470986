//! Exact operator calculus and numerics for the one-parameter deformed
//! fermion algebra with {f⁻, f⁺} = 1 + 2κN.
//!
//! The crate is organized around the coefficient ring Q[κ][N] ⊕ Q[κ][N]σ
//! (σ the parity involution (−1)^N):
//!
//! - [`exact`]: arbitrary-precision rationals and the coefficient ring;
//! - [`algebra`]: the normal-form word calculus, reordering identities,
//!   parity projectors, and the squared-ladder boson map;
//! - [`ordering`]: deformed Stirling/Bell operators, the Wick diagonal
//!   identity oracle, and the published-table audit;
//! - [`fock`]: truncated matrix representations and an exact
//!   shared-radical evaluation of ladder-word actions;
//! - [`analytic`]: coherent states, the polynomial realization with its
//!   generalized derivative, and the Grassmann zero-deformation limit;
//! - [`spectral`]: finite-difference verification that the partner
//!   potentials reproduce the algebraic spectra;
//! - [`suites`]: named check bundles backing the command-line `verify`.
//!
//! All values are immutable and all operations pure functions.

pub mod algebra;
pub mod analytic;
pub mod error;
pub mod exact;
pub mod fock;
pub mod ordering;
pub mod report;
pub mod spectral;
pub mod suites;

pub use algebra::{Generator, NormalForm};
pub use analytic::{BargmannPoly, CoherentState, GrassmannElement};
pub use error::{Error, Result};
pub use exact::{KPoly, NPoly, NSigmaPoly, Rational};
pub use fock::{ActionCoefficient, FockMatrix, LadderProduct, OperatorKind};
pub use ordering::{DiscrepancyReport, StirlingTable};
pub use report::{Check, Report};
pub use spectral::{ConvergenceReport, GridSpec, PotentialFamily, PotentialSpec, SymTridiagonal};
