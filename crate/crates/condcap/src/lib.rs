//! Capacity computation for axially symmetric planar polygonal condensers.
//!
//! Three independent high-accuracy methods plus a finite-difference oracle:
//!
//! - `theta_solver` — genus-1 theta-function map for two parallel slots
//!   (configuration E), capacities to ~1e-12.
//! - `sc_solver` — Schwarz-Christoffel parameter problem and the
//!   hypergeometric modulus formula for doubly connected condensers
//!   (configurations F, G).
//! - `bie` — boundary-integral solver (Green-formula equation with
//!   trigonometric collocation, Symm-kernel splitting and singular
//!   enrichment) for every configuration A-G.
//! - `fd` — five-point finite-difference Laplace oracle, ~1-3% accuracy,
//!   used for initial guesses and cross-checks.
//!
//! `tables` carries the built-in registry of 42 reference capacities used by
//! the acceptance suite and the CLI `table` subcommand.

pub mod error;
pub mod result;

pub mod geometry;
pub mod specfun;

pub mod bie;
pub mod fd;
pub mod sc_solver;
pub mod theta_solver;

pub mod compute;
pub mod tables;

pub use error::{Error, Result};
pub use result::{fmt17, CapacityResult, Method};
