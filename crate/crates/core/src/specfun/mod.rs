//! Special functions and quadrature underlying the spectral method:
//! generalized Laguerre polynomials and their identities, terminating
//! hypergeometric sums, hyperbolic Meixner–Pollaczek polynomials, log-gamma
//! ratios, and Gauss–Laguerre rules.
//!
//! Everything here is pure and deterministic; values are safe to share
//! across threads.

mod dd;
mod gamma;
mod hypergeometric;
mod laguerre;
mod meixner;
mod quadrature;

pub use gamma::{gamma, log_gamma, log_gamma_ratio};
pub use hypergeometric::{hyp1f1_terminating, hyp1f1_with_magnitude, hyp2f1_terminating};
pub use laguerre::{
    laguerre, laguerre_derivative_action, laguerre_norm_sq, laguerre_via_1f1,
    orthonormal_laguerre_row, verify_laguerre_ode,
};
pub use meixner::meixner_pollaczek;
pub use quadrature::{gauss_laguerre, QuadratureRule};
