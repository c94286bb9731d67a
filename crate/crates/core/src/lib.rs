//! Exact and arbitrary-precision toolkit for the inverse logarithmic
//! integral `ali = li^{-1}` and the asymptotic behaviour of the n-th prime.
//!
//! The crate is organized around four layers:
//!
//! * [`polyengine`] — exact big-integer generation of the asymptotic
//!   expansion polynomials and their coefficient triangles, by three
//!   independent methods that are kept in lockstep by the test suite.
//! * [`numerics`] — arbitrary-precision evaluation of `li`, `Ei` and `ali`
//!   (by safeguarded Newton inversion), truncated-expansion evaluation, and
//!   certified error radii for it.
//! * [`constants`] — the explicit threshold constants that make the error
//!   bounds effective, each obtained by certified bisection of a monotone
//!   defining equation.
//! * [`primes`] — applications to the n-th prime: sieve-backed ground
//!   truth, truncated approximants, inequality sweeps, real-root catalogs
//!   of the expansion polynomials, and the window computation for the
//!   third-order crossover index.

pub mod bigreal;
pub mod constants;
pub mod error;
pub mod numerics;
pub mod polyengine;
pub mod primes;

pub use bigreal::BigReal;
pub use error::{Error, Result};
