//! Terminating hypergeometric sums.
//!
//! Only the polynomial cases are needed here: a negative-integer first
//! parameter truncates both series after n+1 terms. The confluent sum is
//! accumulated in double-double precision because its alternating terms can
//! cancel by many orders of magnitude at large (n, y); the Gauss sum is used
//! with negative arguments where all terms share one sign.

use super::dd::Dd;
use crate::error::{Error, Result};

/// Terminating confluent series ₁F₁(−n; b; y) = Σ_{k≤n} (−n)_k y^k / ((b)_k k!).
///
/// Accumulated in double-double so the f64 result stays accurate through the
/// alternating-sum cancellation (which reaches ~10²² at n = 50, y = 50).
pub fn hyp1f1_terminating(n: usize, b: f64, y: f64) -> Result<f64> {
    Ok(hyp1f1_dd(n, b, y)?.0)
}

/// As [`hyp1f1_terminating`] but also returns Σ|tₖ|, the magnitude sum that
/// bounds the conditioning of the evaluation.
pub fn hyp1f1_with_magnitude(n: usize, b: f64, y: f64) -> Result<(f64, f64)> {
    hyp1f1_dd(n, b, y)
}

fn hyp1f1_dd(n: usize, b: f64, y: f64) -> Result<(f64, f64)> {
    if b <= 0.0 {
        return Err(Error::Domain(format!(
            "hyp1f1_terminating requires b > 0, got {b}"
        )));
    }
    let mut sum = Dd::from_f64(1.0);
    let mut mag = Dd::from_f64(1.0);
    let mut term = Dd::from_f64(1.0);
    for k in 0..n {
        let kf = k as f64;
        term = term
            .mul_f64(kf - n as f64)
            .mul_f64(y)
            .div_f64(b + kf)
            .div_f64(kf + 1.0);
        sum = sum.add(term);
        mag = mag.add(term.abs());
    }
    Ok((sum.to_f64(), mag.to_f64()))
}

/// Terminating Gauss series ₂F₁(−n, a; c; s) = Σ_{k≤n} (−n)_k (a)_k s^k / ((c)_k k!).
pub fn hyp2f1_terminating(n: usize, a: f64, c: f64, s: f64) -> Result<f64> {
    if c <= 0.0 {
        return Err(Error::Domain(format!(
            "hyp2f1_terminating requires c > 0, got {c}"
        )));
    }
    let mut sum = Dd::from_f64(1.0);
    let mut term = Dd::from_f64(1.0);
    for k in 0..n {
        let kf = k as f64;
        term = term
            .mul_f64((kf - n as f64) * (a + kf))
            .mul_f64(s)
            .div_f64(c + kf)
            .div_f64(kf + 1.0);
        sum = sum.add(term);
    }
    Ok(sum.to_f64())
}
