//! Spectral solver for the radial Schrödinger equation of a 3D spherical
//! oscillator coupled to static electric or magnetic fields.
//!
//! The wavefunction is expanded in the square-integrable Laguerre basis
//! φ_n(r) = A_n y^α e^{−βy} L_n^ν(y), y = (λr)², whose exponents are pinned
//! so that the Hamiltonian is exactly symmetric tridiagonal. The eigenproblem
//! then reduces to either a closed-form diagonal (at the scale λ* where the
//! coupling ξ vanishes) or a three-term recursion for energy polynomials,
//! whose family matches hyperbolic Meixner–Pollaczek polynomials.
//!
//! Layout:
//! - [`specfun`]: Laguerre/hypergeometric/Meixner–Pollaczek evaluation,
//!   log-gamma ratios, Gauss–Laguerre rules.
//! - [`basis`]: the radial basis, its normalization and overlaps.
//! - [`assembly`]: the two physical systems and their tridiagonal matrices,
//!   with quadrature cross-checks.
//! - [`eigensolve`]: Sturm-bisection eigenvalues, inverse-iteration
//!   eigenvectors, convergence studies, closed-form spectra.
//! - [`recursion`]: the generic three-term engine, energy polynomials,
//!   Meixner–Pollaczek matching, wavefunction synthesis.
//! - [`oracle`]: independent finite-difference solver and quadratic-potential
//!   closed forms used to validate everything else.
//! - [`verify`]: the runtime invariant suites behind `qosc verify`.
//!
//! All numerics are pure, deterministic f64; no global state.

// negated comparisons like !(x > 0.0) are deliberate: they reject NaN along
// with the out-of-domain values, where x <= 0.0 would let NaN through
#![allow(clippy::neg_cmp_op_on_partial_ord)]
// index loops here walk matched positions of several arrays at once
#![allow(clippy::needless_range_loop)]

pub mod assembly;
pub mod basis;
pub mod eigensolve;
mod error;
pub mod oracle;
pub mod recursion;
pub mod specfun;
pub mod verify;

pub use error::{Error, Result};
