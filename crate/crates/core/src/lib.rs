//! Workbench for finite-type quasi-hereditary module categories presented as
//! quiver algebras, together with an equivariant graded-module calculator for
//! the coordinate ring of a nodal curve.
//!
//! The crate is organised bottom-up:
//!
//! * [`linalg`] — deterministic exact linear algebra over any field scalar
//!   (reduced echelon forms, kernels, images, quotient projections);
//! * [`quiver`] — quiver algebras with relations and their finite-dimensional
//!   representations: Hom spaces, first extension groups, extension
//!   realisation, open/closed restriction and the adjoint triple;
//! * [`qh`] — the quasi-hereditary layer: standard and costandard objects,
//!   filtrations, reciprocity, and the stratified projective-cover
//!   construction with its diagnostic ladder;
//! * [`nodal`] — the bigraded calculator for `k[x,y]/(xy)`: minimal periodic
//!   resolutions, Tor/Ext towers, and the block-by-block comparison between
//!   sheaf-theoretic and quiver-theoretic extension data;
//! * [`io`] / [`report`] — the JSON schemas used by the CLI.
//!
//! All core math is generic over the scalar type via [`scalar::Scalar`]
//! (any `num-traits` field works); the concrete instantiation used by the
//! I/O layer and the CLI is the arbitrary-precision rational type [`Q`].

pub mod error;
pub mod fixtures;
pub mod io;
pub mod linalg;
pub mod nodal;
pub mod qh;
pub mod quiver;
pub mod report;
pub mod scalar;

pub use error::Error;

/// Arbitrary-precision rational scalar used by the CLI and the JSON layer.
pub type Q = num_rational::BigRational;

/// Dense matrix over the concrete rational scalar.
pub type QMat = linalg::Mat<Q>;

/// Quiver algebra over the concrete rational scalar.
pub type QAlgebra = quiver::Algebra<Q>;

/// Finite-dimensional representation over the concrete rational scalar.
pub type QModule = quiver::Module<Q>;

/// Map of representations over the concrete rational scalar.
pub type QModuleMap = quiver::ModuleMap<Q>;

/// Convenience result alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
