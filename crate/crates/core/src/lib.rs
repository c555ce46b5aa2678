//! Exact arithmetic for determinant line bundles on moduli of sheaves over
//! the projective plane.
//!
//! The crate is organized around four small engines:
//!
//! * [`kring`] — the Grothendieck algebra of the plane, `Z[eta]/(eta^3)`,
//!   with classes stored as `(rank, c1, chi)` triples: products, duals,
//!   the Euler pairing, orthogonal generators and moduli dimensions.
//! * [`rep3`] — characters of polynomial GL(3)/SL(3) representations:
//!   Schur characters, tensor products, symmetric and exterior powers
//!   (plethysm via Adams operations), and decomposition into the Schur basis.
//! * [`series`] — Poincare series `Q(t)/(1-t)^(D+1)` with palindromic integer
//!   numerators: expansion, reconstruction from section counts, Hilbert
//!   polynomials.
//! * [`duality`] — the two sides of the strange-duality dimension check for
//!   rank-2 classes against multiples of the orthogonal generator, plus the
//!   kernel/cokernel bookkeeping audit behind the cubic case.
//!
//! Everything is exact: arbitrary-precision integers throughout, rationals
//! only as checked intermediate scratch. No floating point.

pub mod binom;
pub mod duality;
pub mod kring;
pub mod rep3;
pub mod series;

use num_bigint::BigInt;

/// Error type shared by all modules.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("orthogonal generator needs positive rank, got {0}")]
    NonPositiveRank(BigInt),
    #[error("invalid partition ({0},{1},{2}): parts must be weakly decreasing and nonnegative")]
    InvalidPartition(i64, i64, i64),
    #[error("character is not S3-symmetric: weight ({0},{1},{2}) and a permutation of it carry different multiplicities")]
    AsymmetricCharacter(u32, u32, u32),
    #[error("virtual character: multiplicity {mult} at weight ({w0},{w1},{w2}); symmetric and exterior powers require nonnegative multiplicities")]
    VirtualCharacter { w0: u32, w1: u32, w2: u32, mult: BigInt },
    #[error("unsupported degree d={0}: section formulas exist for d = 1, 2, 3 only")]
    UnsupportedDegree(i64),
    #[error("{what} must be nonnegative, got {got}")]
    NegativeInput { what: &'static str, got: i64 },
    #[error("delta must be positive, got {0}")]
    NonPositiveDelta(i64),
    #[error("numerator degree D+1-3*delta = {0} is negative")]
    NegativeNumeratorDegree(i64),
    #[error("numerator of degree {got} does not match D+1-3*delta = {want}")]
    NumeratorDegreeMismatch { got: i64, want: i64 },
    #[error("numerator is not palindromic over length {0}")]
    NotPalindromic(usize),
    #[error("duplicate sample position k={0}")]
    DuplicateSample(u64),
    #[error("insufficient data: {missing} degrees of freedom remain after all constraints")]
    InsufficientData { missing: usize },
    #[error("inconsistent constraints: {0}")]
    InconsistentConstraints(String),
    #[error("audit failure: {0}")]
    AuditFailure(String),
}

pub type Result<T> = std::result::Result<T, Error>;
