//! Generalized Laguerre polynomials L_n^ν and their identities.
//!
//! The workhorse is the upward three-term recurrence in n, which stays at a
//! few ulps of relative error across the whole oscillatory region used here.
//! The terminating-series route exists as an independent cross-check of the
//! recurrence, and the derivative/ODE identities feed the operator assembly
//! and its verification suite.

use super::gamma::{log_gamma, log_gamma_ratio};
use super::hypergeometric::hyp1f1_terminating;
use crate::error::{Error, Result};

fn check_nu(nu: f64) -> Result<()> {
    if !(nu > -1.0) {
        return Err(Error::Domain(format!(
            "Laguerre exponent must satisfy nu > -1, got {nu}"
        )));
    }
    Ok(())
}

fn check_y(y: f64) -> Result<()> {
    if !(y >= 0.0) {
        return Err(Error::Domain(format!(
            "Laguerre argument must satisfy y >= 0, got {y}"
        )));
    }
    Ok(())
}

/// L_n^ν(y) by upward recurrence:
/// (n+1) L_{n+1} = (2n+ν+1−y) L_n − (n+ν) L_{n−1}, L₀ = 1, L₁ = ν+1−y.
///
/// ```
/// use qosc_core::specfun::laguerre;
///
/// assert_eq!(laguerre(0, 0.5, 3.7).unwrap(), 1.0);          // L₀ ≡ 1
/// assert_eq!(laguerre(1, 0.5, 1.0).unwrap(), 0.5);          // ν + 1 − y
/// assert!((laguerre(2, 0.5, 1.0).unwrap() + 0.125).abs() < 1e-15);
/// ```
pub fn laguerre(n: usize, nu: f64, y: f64) -> Result<f64> {
    check_nu(nu)?;
    check_y(y)?;
    if n == 0 {
        return Ok(1.0);
    }
    let mut prev = 1.0;
    let mut cur = nu + 1.0 - y;
    for k in 1..n {
        let kf = k as f64;
        let next = ((2.0 * kf + nu + 1.0 - y) * cur - (kf + nu) * prev) / (kf + 1.0);
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// L_n^ν(y) through the terminating confluent series,
/// Γ(n+ν+1)/(Γ(n+1)Γ(ν+1)) · ₁F₁(−n; ν+1; y).
///
/// Kept as an oracle independent of the recurrence route.
pub fn laguerre_via_1f1(n: usize, nu: f64, y: f64) -> Result<f64> {
    check_nu(nu)?;
    check_y(y)?;
    let ln_prefactor =
        log_gamma_ratio(n as f64 + nu + 1.0, n as f64 + 1.0)? - log_gamma(nu + 1.0)?;
    Ok(ln_prefactor.exp() * hyp1f1_terminating(n, nu + 1.0, y)?)
}

/// The derivative action y·dL_n^ν/dy = n L_n^ν(y) − (n+ν) L_{n−1}^ν(y).
pub fn laguerre_derivative_action(n: usize, nu: f64, y: f64) -> Result<f64> {
    check_nu(nu)?;
    check_y(y)?;
    if n == 0 {
        return Ok(0.0);
    }
    Ok(n as f64 * laguerre(n, nu, y)? - (n as f64 + nu) * laguerre(n - 1, nu, y)?)
}

/// Residual of the Laguerre differential operator
/// [y d²/dy² + (ν+1−y) d/dy + n] applied to L_n^ν at y.
///
/// Both derivatives are built from the derivative action identity, so a
/// vanishing residual witnesses the mutual consistency of the recurrence and
/// derivative relations rather than restating either one.
pub fn verify_laguerre_ode(n: usize, nu: f64, y: f64) -> Result<f64> {
    check_nu(nu)?;
    if !(y > 0.0) {
        return Err(Error::Domain(format!(
            "ODE residual needs y > 0, got {y}"
        )));
    }
    let nf = n as f64;
    let l_n = laguerre(n, nu, y)?;
    if n == 0 {
        return Ok(0.0);
    }
    let l_nm1 = laguerre(n - 1, nu, y)?;
    let l_nm2 = if n >= 2 { laguerre(n - 2, nu, y)? } else { 0.0 };
    let d_n = (nf * l_n - (nf + nu) * l_nm1) / y;
    let d_nm1 = ((nf - 1.0) * l_nm1 - (nf - 1.0 + nu) * l_nm2) / y;
    // differentiating the derivative action once: y L_n'' = (n−1) L_n' − (n+ν) L_{n−1}'
    let y_d2 = (nf - 1.0) * d_n - (nf + nu) * d_nm1;
    Ok(y_d2 + (nu + 1.0 - y) * d_n + nf * l_n)
}

/// Values p₀(y)..p_{n_max}(y) of the Laguerre polynomials orthonormal with
/// respect to the weight y^ν e^{−y}, i.e. p_n = L_n^ν / √(Γ(n+ν+1)/Γ(n+1)).
///
/// The whole row comes out of one pass of the symmetrized recurrence; matrix
/// assembly and quadrature weights both consume it.
pub fn orthonormal_laguerre_row(n_max: usize, nu: f64, y: f64) -> Result<Vec<f64>> {
    check_nu(nu)?;
    check_y(y)?;
    let mut row = Vec::with_capacity(n_max + 1);
    let p0 = (-0.5 * log_gamma(nu + 1.0)?).exp();
    row.push(p0);
    if n_max == 0 {
        return Ok(row);
    }
    row.push((nu + 1.0 - y) * p0 / (nu + 1.0).sqrt());
    for k in 1..n_max {
        let kf = k as f64;
        let next = ((2.0 * kf + nu + 1.0 - y) * row[k] - (kf * (kf + nu)).sqrt() * row[k - 1])
            / ((kf + 1.0) * (kf + 1.0 + nu)).sqrt();
        row.push(next);
    }
    Ok(row)
}

/// Squared norm h_n = ∫ y^ν e^{−y} [L_n^ν]² dy = Γ(n+ν+1)/Γ(n+1).
pub fn laguerre_norm_sq(n: usize, nu: f64) -> Result<f64> {
    check_nu(nu)?;
    Ok(log_gamma_ratio(n as f64 + nu + 1.0, n as f64 + 1.0)?.exp())
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::{assert_abs_diff_eq, assert_relative_eq};
    use proptest::prelude::*;

    #[test]
    fn low_orders_exact() {
        assert_eq!(laguerre(0, 0.5, 3.7).unwrap(), 1.0);
        assert_eq!(laguerre(1, 0.5, 1.0).unwrap(), 0.5);
        // L₂^{1/2}(1) = (ν+1)(ν+2)/2 − (ν+2)y + y²/2 = −1/8
        assert_abs_diff_eq!(laguerre(2, 0.5, 1.0).unwrap(), -0.125, epsilon = 1e-15);
    }

    #[test]
    fn series_route_low_orders() {
        assert_eq!(laguerre_via_1f1(0, 0.5, 2.0).unwrap(), 1.0);
        assert_relative_eq!(
            laguerre_via_1f1(1, 1.5, 0.0).unwrap(),
            2.5,
            max_relative = 1e-14
        );
        assert_relative_eq!(
            laguerre_via_1f1(2, 0.5, 1.0).unwrap(),
            -0.125,
            max_relative = 1e-13
        );
    }

    #[test]
    fn recurrence_matches_series() {
        // the acceptance suite sweeps this much harder; spot grid here
        for n in [3usize, 10, 17, 30] {
            for nu in [-0.5, 0.5, 1.5, 3.0] {
                for y in [0.0, 0.3, 2.0, 9.0, 24.0] {
                    let a = laguerre(n, nu, y).unwrap();
                    let b = laguerre_via_1f1(n, nu, y).unwrap();
                    let scale = a.abs().max(1.0);
                    assert!(
                        (a - b).abs() <= 1e-12 * scale,
                        "n={n} nu={nu} y={y}: {a} vs {b}"
                    );
                }
            }
        }
    }

    #[test]
    fn derivative_action_values() {
        assert_eq!(laguerre_derivative_action(0, 0.5, 1.0).unwrap(), 0.0);
        // n=1: 1·L₁ − 1.5·L₀ = 0.5 − 1.5
        assert_abs_diff_eq!(
            laguerre_derivative_action(1, 0.5, 1.0).unwrap(),
            -1.0,
            epsilon = 1e-15
        );
        // n=2: 2·(−1/8) − 2.5·(1/2) = −3/2
        assert_abs_diff_eq!(
            laguerre_derivative_action(2, 0.5, 1.0).unwrap(),
            -1.5,
            epsilon = 1e-15
        );
    }

    #[test]
    fn derivative_action_matches_central_difference() {
        for (n, nu, y) in [(2usize, 0.5f64, 1.0f64), (7, 1.5, 3.2), (15, 0.5, 12.0)] {
            let h = 4e-6 * y.max(1.0);
            let fd = y * (laguerre(n, nu, y + h).unwrap() - laguerre(n, nu, y - h).unwrap())
                / (2.0 * h);
            let exact = laguerre_derivative_action(n, nu, y).unwrap();
            assert_relative_eq!(fd, exact, max_relative = 1e-8);
        }
    }

    #[test]
    fn ode_residual_vanishes() {
        assert_eq!(verify_laguerre_ode(0, 0.5, 2.0).unwrap(), 0.0);
        let r = verify_laguerre_ode(3, 1.5, 0.7).unwrap();
        assert!(r.abs() < 1e-9, "residual {r}");
        // large-y stress case, relative to the polynomial magnitude
        let l = laguerre(10, 0.5, 25.0).unwrap();
        let r = verify_laguerre_ode(10, 0.5, 25.0).unwrap();
        assert!(r.abs() < 1e-7 * l.abs().max(1.0), "residual {r} vs {l}");
    }

    #[test]
    fn orthonormal_row_consistent_with_norms() {
        let nu = 1.5;
        let y = 4.2;
        let row = orthonormal_laguerre_row(12, nu, y).unwrap();
        for (n, p) in row.iter().enumerate() {
            let expected = laguerre(n, nu, y).unwrap() / laguerre_norm_sq(n, nu).unwrap().sqrt();
            assert_relative_eq!(*p, expected, max_relative = 1e-12);
        }
    }

    #[test]
    fn domain_errors() {
        assert!(laguerre(3, -1.0, 1.0).is_err());
        assert!(laguerre(3, 0.5, -0.1).is_err());
        assert!(verify_laguerre_ode(3, 0.5, 0.0).is_err());
    }

    proptest! {
        // A2 rearranged: y L_n = (2n+ν+1) L_n − (n+ν) L_{n−1} − (n+1) L_{n+1}
        #[test]
        fn three_term_identity(n in 1usize..40, nu in -0.9f64..4.0, y in 0.0f64..40.0) {
            let lm = laguerre(n - 1, nu, y).unwrap();
            let l = laguerre(n, nu, y).unwrap();
            let lp = laguerre(n + 1, nu, y).unwrap();
            let nf = n as f64;
            let lhs = y * l;
            let rhs = (2.0 * nf + nu + 1.0) * l - (nf + nu) * lm - (nf + 1.0) * lp;
            let scale = [lhs.abs(), l.abs(), lm.abs(), lp.abs(), 1.0]
                .into_iter()
                .fold(0.0f64, f64::max);
            prop_assert!((lhs - rhs).abs() <= 1e-12 * scale * (2.0 * nf + nu + 1.0 + y));
        }
    }
}
