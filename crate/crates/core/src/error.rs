//! Crate-wide error type for domain-boundary violations.

use std::fmt;

/// Errors raised when an operation is asked to leave its valid domain.
#[derive(Clone, Debug, PartialEq)]
pub enum Error {
    /// The deformation parameter must be nonnegative so the structure
    /// function stays positive on excited levels.
    NegativeKappa(String),
    /// The deformation parameter must be strictly positive here; the
    /// zero limit is handled by the two-state fermion path.
    NonPositiveKappa(String),
    /// Ordering tables are defined for order r >= 1.
    InvalidOrder(u32),
    /// Published reference tables stop at order 4.
    PublishedTableRange(u32),
    /// Truncated Fock matrices need at least two states.
    DimensionTooSmall(usize),
    /// Tolerances must be positive and finite.
    InvalidTolerance(f64),
    /// Coherent-state labels in the zero-deformation limit must be pure
    /// odd Grassmann elements.
    GrassmannLabelNotOdd,
    /// Potentials live on the open half line x > 0.
    NonPositivePosition(f64),
    /// Grid specification out of range.
    InvalidGrid(String),
    /// The eigensolver could not establish a bracketing interval.
    EigenSolver(String),
    /// Malformed rational or numeric text.
    Parse(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NegativeKappa(k) => write!(f, "kappa must be >= 0, got {k}"),
            Error::NonPositiveKappa(k) => write!(f, "kappa must be > 0, got {k}"),
            Error::InvalidOrder(r) => write!(f, "order must be >= 1, got {r}"),
            Error::PublishedTableRange(r) => {
                write!(f, "published tables stop at order 4, got {r}")
            }
            Error::DimensionTooSmall(d) => write!(f, "dimension must be >= 2, got {d}"),
            Error::InvalidTolerance(t) => write!(f, "tolerance must be positive, got {t}"),
            Error::GrassmannLabelNotOdd => {
                write!(f, "coherent-state label must be a pure theta multiple")
            }
            Error::NonPositivePosition(x) => write!(f, "position must be > 0, got {x}"),
            Error::InvalidGrid(msg) => write!(f, "invalid grid: {msg}"),
            Error::EigenSolver(msg) => write!(f, "eigensolver failure: {msg}"),
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
