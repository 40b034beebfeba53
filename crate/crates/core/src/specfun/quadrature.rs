//! Gauss–Laguerre quadrature for the weight y^ν e^{−y} on [0, ∞).
//!
//! Nodes are the eigenvalues of the Jacobi matrix of the orthonormal
//! Laguerre family (Golub–Welsch), obtained from the same Sturm-bisection
//! eigensolver that serves the physics. Weights come from the Christoffel
//! function, 1/w_i = Σ_{k<N} p_k(x_i)², which is positive by construction.

use super::gamma::gamma;
use super::laguerre::orthonormal_laguerre_row;
use crate::assembly::SymTridiagonal;
use crate::eigensolve::eigenvalues;
use crate::error::{Error, Result};

/// Nodes and weights integrating y^ν e^{−y} p(y) exactly for polynomials p
/// of degree ≤ 2·order − 1.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureRule {
    order: usize,
    exponent: f64,
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl QuadratureRule {
    pub fn order(&self) -> usize {
        self.order
    }

    /// Weight-function exponent ν.
    pub fn exponent(&self) -> f64 {
        self.exponent
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// Σ w_i f(x_i) ≈ ∫₀^∞ y^ν e^{−y} f(y) dy.
    pub fn integrate<F: Fn(f64) -> f64>(&self, f: F) -> f64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| w * f(x))
            .sum()
    }

    /// Check the structural invariants: matching lengths, strictly ascending
    /// positive nodes, positive weights, and Σw = Γ(ν+1) to 1e−12 relative.
    pub fn validate(&self) -> Result<()> {
        if self.nodes.len() != self.order || self.weights.len() != self.order {
            return Err(Error::Internal("node/weight count mismatch".into()));
        }
        if self.nodes.windows(2).any(|w| w[0] >= w[1]) || self.nodes[0] <= 0.0 {
            return Err(Error::Internal("nodes not strictly ascending and positive".into()));
        }
        if self.weights.iter().any(|&w| !(w > 0.0)) {
            return Err(Error::Internal("nonpositive quadrature weight".into()));
        }
        let moment = gamma(self.exponent + 1.0)?;
        let total: f64 = self.weights.iter().sum();
        if ((total - moment) / moment).abs() > 1e-12 {
            return Err(Error::Internal(format!(
                "weight sum {total} deviates from gamma(nu+1) = {moment}"
            )));
        }
        Ok(())
    }
}

/// Build the order-point Gauss–Laguerre rule for exponent ν > −1.
///
/// ```
/// use qosc_core::specfun::gauss_laguerre;
///
/// // one point suffices for linear integrands: node Γ(2)/Γ(1) = 1, weight Γ(1) = 1
/// let rule = gauss_laguerre(1, 0.0)?;
/// assert!((rule.nodes()[0] - 1.0).abs() < 1e-14);
/// assert!((rule.weights()[0] - 1.0).abs() < 1e-14);
///
/// // ∫ y^{1/2} e^{-y} · y² dy = Γ(3.5)
/// let rule = gauss_laguerre(4, 0.5)?;
/// assert!((rule.integrate(|y| y * y) - 3.32335097044784).abs() < 1e-13);
/// # Ok::<(), qosc_core::Error>(())
/// ```
pub fn gauss_laguerre(order: usize, nu: f64) -> Result<QuadratureRule> {
    if order == 0 {
        return Err(Error::Domain("quadrature order must be at least 1".into()));
    }
    if !(nu > -1.0) {
        return Err(Error::Domain(format!(
            "quadrature exponent must satisfy nu > -1, got {nu}"
        )));
    }
    let diag: Vec<f64> = (0..order).map(|i| 2.0 * i as f64 + nu + 1.0).collect();
    let sub: Vec<f64> = (1..order)
        .map(|i| (i as f64 * (i as f64 + nu)).sqrt())
        .collect();
    let jacobi = SymTridiagonal::new(diag, sub)?;
    let nodes = eigenvalues(&jacobi, order)?.energies;

    let mut weights = Vec::with_capacity(order);
    for &x in &nodes {
        let row = orthonormal_laguerre_row(order - 1, nu, x)?;
        let christoffel: f64 = row.iter().map(|p| p * p).sum();
        weights.push(1.0 / christoffel);
    }

    let rule = QuadratureRule {
        order,
        exponent: nu,
        nodes,
        weights,
    };
    rule.validate().map_err(|e| {
        Error::Internal(format!("Gauss-Laguerre construction failed for order {order}, nu {nu}: {e}"))
    })?;
    Ok(rule)
}
