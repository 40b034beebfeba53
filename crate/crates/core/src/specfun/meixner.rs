//! Hyperbolic Meixner–Pollaczek polynomials.
//!
//! The trigonometric family p_n(x; φ) continues to a real, orthonormal-style
//! family under φ → iθ, x → −iz with θ > 0 and z real. In that parametrization
//!
//!   p_n(z; θ) = √((2μ)_n / n!) e^{−nθ} ₂F₁(−n, μ+z; 2μ; 1−e^{2θ})
//!
//! and the family satisfies the symmetric three-term recurrence
//!
//!   2[z sinh θ + (n+μ) cosh θ] p_n = √((n+1)(n+2μ)) p_{n+1}
//!                                   + √(n(n+2μ−1)) p_{n−1},   p₀ = 1.
//!
//! Writing the ₂F₁ argument as 1−e^{−2θ} instead requires flipping the
//! prefactor to e^{+nθ} and the parameter to μ−z (a Pfaff transformation);
//! mixing the two conventions breaks the recurrence, so this module pins the
//! pair above and the tests assert definition/recurrence agreement.

use super::gamma::{log_gamma, log_gamma_ratio};
use super::hypergeometric::hyp2f1_terminating;
use crate::error::{Error, Result};

/// Hyperbolic Meixner–Pollaczek value p_n(z; θ) for μ > 0, θ > 0.
///
/// `z` is the real evaluation variable (the continuation of ix).
pub fn meixner_pollaczek(n: usize, mu: f64, z: f64, theta: f64) -> Result<f64> {
    if !(mu > 0.0) {
        return Err(Error::Domain(format!(
            "Meixner-Pollaczek parameter must satisfy mu > 0, got {mu}"
        )));
    }
    if !(theta > 0.0) {
        return Err(Error::Domain(format!(
            "hyperbolic angle must satisfy theta > 0, got {theta}"
        )));
    }
    let nf = n as f64;
    // √((2μ)_n / n!) e^{−nθ}, assembled in log space
    let ln_prefactor =
        0.5 * (log_gamma_ratio(2.0 * mu + nf, 2.0 * mu)? - log_gamma(nf + 1.0)?) - nf * theta;
    // all series terms share one sign when μ+z > 0 since the argument is negative
    let sum = hyp2f1_terminating(n, mu + z, 2.0 * mu, 1.0 - (2.0 * theta).exp())?;
    Ok(ln_prefactor.exp() * sum)
}
