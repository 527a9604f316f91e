//! Error type shared by all modules.

use core::fmt;

/// Errors from node generation, operator assembly and time integration.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A precondition on an argument was violated.
    InvalidArgument(&'static str),
    /// The interpolation matrix is numerically singular; carries the
    /// reciprocal condition number estimate in the 1-norm.
    IllConditioned { rcond: f64 },
    /// The fictitious-point block `B_f` cannot be inverted reliably.
    BoundaryElimination { rcond: f64 },
    /// Exact zero pivot during LU factorization.
    SingularMatrix,
    /// Operation not available for the requested kernel family or dimension.
    NotImplemented(&'static str),
    /// The integrator gave up; `t_reached` is the last accepted time.
    IntegrationFailure { t_reached: f64, reason: &'static str },
    /// Algebraic residual of the initial state exceeds the consistency
    /// tolerance of the DAE run.
    InconsistentInitialState { residual: f64 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidArgument(msg) => write!(f, "invalid argument: {msg}"),
            Error::IllConditioned { rcond } => {
                write!(f, "interpolation matrix ill-conditioned (rcond = {rcond:.3e})")
            }
            Error::BoundaryElimination { rcond } => {
                write!(f, "fictitious-point block not invertible (rcond = {rcond:.3e})")
            }
            Error::SingularMatrix => write!(f, "singular matrix"),
            Error::NotImplemented(msg) => write!(f, "not implemented: {msg}"),
            Error::IntegrationFailure { t_reached, reason } => {
                write!(f, "integration failed at t = {t_reached}: {reason}")
            }
            Error::InconsistentInitialState { residual } => {
                write!(f, "initial state violates algebraic constraints (residual = {residual:.3e})")
            }
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
