//! Error types shared by all solvers.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    // geometry
    #[error("x array must be strictly increasing and start at 0")]
    NonMonotoneX,
    #[error("array lengths inconsistent with family {family}: {detail}")]
    BadArity { family: char, detail: String },
    #[error("lengths and half-heights must be strictly positive")]
    NonpositiveLength,
    #[error("family decoding cannot produce a simple configuration: {0}")]
    DecodeAmbiguous(String),
    #[error("contour is self-intersecting")]
    SelfIntersection,
    #[error("half-domain is not simply connected: {0}")]
    NotSimplyConnected(String),
    #[error("contour set is not mirror-symmetric about the real axis")]
    NotSymmetric,

    // specfun
    #[error("theta series does not converge (Im tau <= 0)")]
    Nonconvergent,
    #[error("theta log-derivative evaluated at a lattice zero")]
    PoleAtLatticePoint,
    #[error("argument outside function domain: {0}")]
    Domain(String),
    #[error("invalid hypergeometric parameters: {0}")]
    ParamDomain(String),
    #[error("quadrature refinement stalled (relative error {rel:.2e})")]
    QuadratureStall { rel: f64 },
    #[error("endpoint exponent {0} <= -1 is not integrable")]
    NonintegrableEndpoint(f64),
    #[error("singular node {0} lies strictly inside the integration interval")]
    NodeInsideInterval(f64),

    // theta solver
    #[error("map evaluated at the pole p")]
    PoleAtP,
    #[error("nonlinear solve did not converge: {0}")]
    NoConvergence(String),
    #[error("Newton iterate left the parameter box and projection failed")]
    LeftDomain,

    // sc solver
    #[error("prevertex gap underflowed below 1e-290 (crowding)")]
    Crowding,
    #[error("half-domain has {0} Neumann arcs, doubly connected solver needs exactly 2")]
    WrongArcCount(usize),
    #[error("degenerate endpoint configuration")]
    Degenerate,
    #[error("modulus orientation check failed: reciprocal capacity matches the oracle better")]
    OrientationFlip,

    // bie solver
    #[error("singular enrichment supports overlap; refine the level")]
    SingularOverlap,
    #[error("iteration limit reached, relative residual {rel:.2e}")]
    IterationLimit { rel: f64 },
    #[error("capacity matrix consistency check failed: {0}")]
    CheckFail(String),

    // fd oracle
    #[error("grid would exceed the node limit ({nodes} > {limit})")]
    OomGuard { nodes: usize, limit: usize },

    // harness
    #[error("method {method} not applicable to this spec: {detail}")]
    MethodScope { method: String, detail: String },
    #[error("malformed spec document: {0}")]
    BadSpec(String),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}
