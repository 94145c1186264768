//! Exact-arithmetic enumerative geometry of the projective plane.
//!
//! Everything here is computed over arbitrary-precision rationals: the
//! degree-d rational curve counts `N_d` via the Kontsevich recursion, the
//! genus-0 potential of the plane and its WDVV identity, the small and big
//! quantum products on projective spaces, sublattice/cover counts, and
//! exact interpolation of plane curves through rational points.

pub mod cohomology;
pub mod enumerative;
pub mod error;
pub mod exact;
pub mod plane;
pub mod potential;
pub mod quantum;
pub mod rational;
pub mod series;

pub use error::Error;

/// Crate-wide result type.
pub type Result<T> = std::result::Result<T, Error>;

/// The universal scalar: an arbitrary-precision rational, always in lowest
/// terms with a positive denominator.
pub type Rational = num::BigRational;

/// Arbitrary-precision integer.
pub type Int = num::BigInt;
