//! Positivity certificates for univariate Hermitian matrix polynomials on
//! closed semialgebraic subsets of the real line.
//!
//! The crate computes weighted sums of hermitian squares (membership in
//! matrix quadratic modules and preorderings), Fejér–Riesz factorizations,
//! the `h²F` reduction for compact sets, denominator certificates for
//! unbounded sets, and the explicit 2×2 counterexample family.

pub mod certsearch;
pub mod circle;
pub mod counterexamples;
pub mod json;
pub mod reduction;
pub mod polymat;
pub mod scalar;
pub mod sdp;
pub mod semialg;

pub use polymat::{AnyPoly, LaurentMatrixPoly, Mat, MatrixPoly, PolyError, ScalarPoly};
pub use scalar::{Cq, Mode, Qi2, Scalar};
