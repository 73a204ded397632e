//! Special-function kernel: theta functions, elliptic integrals via the AGM,
//! Gauss hypergeometric values, the Lauricella function, and endpoint-singular
//! quadrature for Schwarz-Christoffel side integrals.
//!
//! Everything here is a stateless pure function; the only shared state is an
//! immutable cache of quadrature node tables.

mod agm;
mod gamma;
mod lauricella;
mod quad;
mod theta;

pub use agm::{agm, capacity_from_modulus, ellip_k, hyp_half};
pub use gamma::gamma;
pub use lauricella::lauricella_fd;
pub use quad::{gauss_jacobi, sc_side_integral, JacobiExponents};
pub use theta::{theta1, theta1_logderiv, theta1_prime, EllipticTau};

pub(crate) use quad::{adaptive_power_integral, Scaled};
