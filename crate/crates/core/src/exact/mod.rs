//! Exact arithmetic layer: rationals, kappa-polynomials, and the
//! N/σ coefficient ring every symbolic operation works over.
//!
//! Everything here is immutable and pure; values can be shared and sent
//! across threads freely.

pub mod kpoly;
pub mod npoly;
pub mod nsigma;
pub mod rational;

pub use kpoly::KPoly;
pub use npoly::NPoly;
pub use nsigma::NSigmaPoly;
pub use rational::Rational;
