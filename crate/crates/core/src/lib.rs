//! Exact Dirac cohomology for graded Hecke algebras.
//!
//! The crate builds standard modules of the graded Hecke algebras of types
//! A_{l-1} and C_n from combinatorial data, forms the Dirac operator on
//! `X ⊗ S`, and computes Dirac cohomology, Dirac index and the spin-Weyl
//! characters carried by them. All arithmetic is exact.
//!
//! Linear algebra is generic over [`exactalg::Field`]. The concrete fields are
//! re-exported here:
//!
//! * [`Q`]: arbitrary precision rationals, used for module action matrices.
//! * [`GaussRat`]: `Q(i)`, where the Dirac operator lives.
//! * [`Scalar`]: the multi-quadratic tower `Q(i, √2, √3, …)` for character
//!   values, norms and orthonormal bases.

pub mod awring;
pub mod cli;
pub mod clifford;
pub mod dirac;
pub mod exactalg;
pub mod hecke;
pub mod segments;
pub mod weyl;

pub use exactalg::{Field, GaussRat, Matrix, Scalar, Subspace};

/// Rational numbers.
pub type Q = num_rational::BigRational;
/// Matrix over the scalar tower.
pub type Mat = Matrix<Scalar>;
/// Rational matrix.
pub type QMat = Matrix<Q>;
/// Matrix over `Q(i)`.
pub type GMat = Matrix<GaussRat>;

/// Errors raised across the crate.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("subspace is not contained in the ambient subspace")]
    NotContained,
    #[error("matrices do not commute")]
    NonCommuting,
    #[error("eigenvalues are not rational")]
    IrrationalEigenvalues,
    #[error("size bound exceeded: {0}")]
    SizeBound(String),
    #[error("invalid root system: {0}")]
    InvalidRootSystem(String),
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("not a ladder multisegment")]
    NotLadder,
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("relation audit failed: {0}")]
    Audit(String),
    #[error("{0}")]
    Certificate(String),
    #[error("no central character")]
    NoCentralCharacter,
}

pub type Result<T> = std::result::Result<T, Error>;
