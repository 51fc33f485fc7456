//! Exact enumeration of hyperelliptic curves of genus g over F_q, one curve
//! per isomorphism class, built on unique PGL2(F_q)-orbit representatives of
//! Galois-stable point sets on the projective line.
//!
//! The pipeline is: canonical finite field towers (`ff`), the projective line
//! and PGL2 actions (`pgl2`), monic homogeneous forms and the cross-polynomial
//! invariant (`binforms`), closed-form quartic classifications (`quartics`),
//! explicit coset representatives (`cosets`), per-Galois-type orbit
//! enumeration (`galois_enum`), and curve lifting with twists and automorphism
//! counts (`curves`). `oracle` holds independent brute-force reference
//! implementations used for verification.

pub mod binforms;
pub mod cosets;
pub mod curves;
pub mod ff;
pub mod galois_enum;
pub mod oracle;
pub mod pgl2;
pub mod quartics;

use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("characteristic {0} is too large (limit 2^20)")]
    CharTooLarge(u64),
    #[error("extension degree {0} is out of range")]
    BadExtensionDegree(usize),
    #[error("field F_{p}^{k} is too large for this build", p = .0, k = .1)]
    FieldTooLarge(u64, usize),
    #[error("base field is not a prime field")]
    NotPrimeField,
    #[error("elements belong to different field contexts")]
    ContextMismatch,
    #[error("characteristic mismatch between fields")]
    CharMismatch,
    #[error("source degree does not divide target degree")]
    DegreeNotDivisible,
    #[error("{0} is not a power of the characteristic")]
    NotCharPower(u64),
    #[error("element is not in the image of the embedding")]
    NotInSubfield,
    #[error("division by zero in a finite field")]
    DivisionByZero,
    #[error("{0} does not divide the multiplicative group order {1}")]
    OrderDoesNotDivide(u64, u64),
    #[error("square class of zero is undefined")]
    ZeroSquareClass,
    #[error("polynomial is not monic")]
    NotMonic,
    #[error("polynomial degree {got} exceeds the allowed {max}")]
    DegreeTooLarge { got: usize, max: usize },
    #[error("polynomial is zero")]
    ZeroPolynomial,
    #[error("form is not separable")]
    NotSeparable,
    #[error("form is not irreducible")]
    NotIrreducible,
    #[error("wrong degree: expected {expected}, got {got}")]
    WrongDegree { expected: usize, got: usize },
    #[error("wrong Galois type for this operation")]
    WrongGaloisType,
    #[error("points are not pairwise distinct")]
    CoincidentPoints,
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("conjugate set is degenerate")]
    DegenerateConjugates,
    #[error("operation requires odd characteristic")]
    EvenCharacteristic,
    #[error("operation requires characteristic 2")]
    OddCharacteristic,
    #[error("operation requires an odd prime, got {0}")]
    NotOddPrime(u64),
    #[error("unsupported degree {0} (need {1})")]
    UnsupportedDegree(usize, &'static str),
    #[error("desk-scale guard exceeded: {0}")]
    GuardExceeded(String),
    #[error("internal invariant violated: {0}")]
    Internal(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
