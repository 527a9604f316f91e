//! Meshfree radial-basis-function collocation for the Rosenau equation.
//!
//! The Rosenau equation `u_t + alpha(x,t) * biharmonic(u_t) = div g(u)` needs
//! two boundary conditions (Dirichlet and normal-derivative) at every boundary
//! point, which is one more than a collocation method has room for. This crate
//! implements the two strategies that restore the balance:
//!
//! * the **fictitious point method**: extra RBF centres outside the domain are
//!   eliminated algebraically, producing modified differentiation matrices and
//!   boundary forcing terms ([`boundary::eliminate`]), and
//! * the **resampling method**: all boundary conditions are kept as algebraic
//!   equations and the PDE is collocated at fewer auxiliary interior points,
//!   yielding an index-1 DAE ([`rosenau::Resampling`]).
//!
//! Building blocks are kept separable: [`kernel`] evaluates radial kernels and
//! their derivatives in closed form, [`nodes`] generates classified point sets
//! for intervals, squares and the starfish domain, [`operators`] assembles
//! interpolation and differentiation matrices, and [`timestepper`] integrates
//! the resulting mass-matrix ODE/DAE systems with an adaptive BDF1/BDF2 method.
//!
//! The crate is `no_std`-compatible (requires `alloc`); the companion CLI
//! crate carries file formats and experiment drivers.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod boundary;
pub mod error;
pub mod kernel;
pub mod linalg;
pub mod nodes;
pub mod operators;
pub mod rosenau;
pub mod timestepper;

pub use error::{Error, Result};
pub use kernel::{Family, Kernel};
pub use linalg::{LuFactor, Mat};
pub use nodes::{AuxiliarySet, NodeClass, NodeSet, Point};
pub use operators::{assemble, condition_estimate, OpTag, OperatorSet};
pub use rosenau::{PdeInstance, SemidiscreteSystem};
pub use timestepper::{integrate, JacobianMode, SolverConfig, Trajectory};
