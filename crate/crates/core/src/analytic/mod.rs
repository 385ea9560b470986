//! Analytic representations: coherent states, the polynomial (Bargmann)
//! realization with its generalized derivative, and the Grassmann
//! zero-deformation limit.

pub mod bargmann;
pub mod coherent;
pub mod gamma;
pub mod grassmann;

pub use bargmann::{
    annihilator_via_structure_function, bargmann_monomial, bargmann_transform, derivative,
    euler_operator, fibonacci_difference, generalized_derivative, multiply_by_z, BargmannPoly,
};
pub use coherent::{coherent_state, e_kappa, e_kappa_term, CoherentState};
pub use gamma::{gamma, ln_gamma, rising_factorial};
pub use grassmann::{grassmann_coherent, GrassmannElement};
