//! Slice regular polynomial algebra over quaternions, octonions and Clifford
//! algebras `R_{0,m}`, together with numerical verifiers for the extremal
//! inequalities satisfied by such polynomials on the unit ball: the Bernstein
//! inequality `‖P′‖ ≤ n‖P‖` (sup and L² flavours), its min-modulus dual, the
//! Erdős–Lax refinement for the slice-coefficient subclass, and the
//! Ankeny–Rivlin growth bound with its converse scenario.
//!
//! The crate is organised as a stack:
//!
//! * [`hypercomplex`] — arithmetic for the three coefficient algebras and
//!   slice decomposition of evaluation points;
//! * [`slicepoly`] — polynomials with right-hand coefficients: evaluation,
//!   derivative, *-product, regular conjugate, symmetrization, slice
//!   restriction;
//! * [`kernels`] — Dirichlet/Fejér kernels, Fourier coefficients over a slice
//!   and Cesàro sums by both the coefficient formula and convolution;
//! * [`analysis`] — extremal norms on spheres, H² norms, root finding for
//!   real polynomials, zero-set classification, representation formula;
//! * [`inequalities`] — the inequality verifiers, a seeded polynomial
//!   generator and deterministic fuzz campaigns.

pub mod analysis;
pub mod hypercomplex;
pub mod inequalities;
pub mod kernels;
pub mod slicepoly;

pub use hypercomplex::{
    inner_product_s, slice_decompose, Algebra, AlgebraTag, CliffordElement, ImaginaryUnit,
    Octonion, Quaternion, SlicePoint,
};
pub use slicepoly::{AnyPolynomial, ComplexSlicePolynomial, SlicePolynomial};

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("non-invertible element")]
    NonInvertible,
    #[error("zero direction vector")]
    ZeroDirection,
    #[error("Clifford signature m = {0} exceeds the supported cap {max}", max = hypercomplex::MAX_SIGNATURE)]
    SignatureTooLarge(usize),
    #[error("blade coefficient list has length {got}, expected {expected}")]
    BladeCount { expected: usize, got: usize },
    #[error("evaluation point must be a paravector")]
    NotParavector,
    #[error("mixed algebras: {0:?} vs {1:?}")]
    AlgebraMismatch(AlgebraTag, AlgebraTag),
    #[error("element is not a slice unit")]
    NotSliceUnit,
    #[error("coefficients leave the slice")]
    CoefficientsLeaveSlice,
    #[error("insufficient quadrature nodes: need at least {need}, got {got}")]
    InsufficientNodes { need: usize, got: usize },
    #[error("Fourier coefficients cover orders up to {got}, need {need}")]
    InsufficientCoverage { need: usize, got: usize },
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("constant polynomial")]
    ConstantPolynomial,
    #[error("root finding did not converge after {0} sweeps")]
    NoConvergence(usize),
    #[error("zero classification ambiguous: residual {0:.3e} lies between accept and reject thresholds")]
    AmbiguousClassification(f64),
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Shorthand for precondition failures that do not fit a named variant.
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::Invalid(msg.into())
    }
}
