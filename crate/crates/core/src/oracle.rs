//! Independent ground truth: a finite-difference radial solver and the
//! closed-form spectrum of quadratic potentials.
//!
//! The solver uses plain 3-point central differences with Dirichlet walls at
//! r = 0 and r = r_max. O(h²) accuracy is ample for the 1e−3/1e−4 level
//! cross-validation it serves, and the Dirichlet origin handles the
//! centrifugal singularity automatically (u ~ r^{ℓ+1}). Deliberately shares
//! nothing with the spectral path except the tridiagonal eigensolver.

use crate::assembly::SymTridiagonal;
use crate::eigensolve::{eigenvalues, eigenvector, Spectrum};
use crate::error::{Error, Result};

/// Uniform radial grid: interior points r_i = i·h, i = 1..M, h = r_max/(M+1),
/// with u(0) = u(r_max) = 0 implied.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadialGrid {
    r_max: f64,
    interior: usize,
}

impl RadialGrid {
    pub fn new(r_max: f64, interior_points: usize) -> Result<Self> {
        if !(r_max > 0.0) || !r_max.is_finite() {
            return Err(Error::Domain(format!(
                "grid extent must be positive and finite, got {r_max}"
            )));
        }
        if interior_points == 0 {
            return Err(Error::Domain("grid needs at least one interior point".into()));
        }
        Ok(Self {
            r_max,
            interior: interior_points,
        })
    }

    pub fn r_max(&self) -> f64 {
        self.r_max
    }

    pub fn interior_points(&self) -> usize {
        self.interior
    }

    pub fn spacing(&self) -> f64 {
        self.r_max / (self.interior as f64 + 1.0)
    }

    /// i-th interior radius (0-based index).
    pub fn radius(&self, i: usize) -> f64 {
        self.spacing() * (i as f64 + 1.0)
    }
}

/// Default box size for a quadratic potential ½Ω²r²: eight times the
/// classical turning point of the highest requested level.
pub fn suggested_r_max(omega_sq: f64, ell: u32, levels: usize) -> Result<f64> {
    if !(omega_sq > 0.0) {
        return Err(Error::Domain(format!(
            "quadratic coefficient must be positive, got {omega_sq}"
        )));
    }
    if levels == 0 {
        return Err(Error::Domain("need at least one level".into()));
    }
    let omega = omega_sq.sqrt();
    let top = quadratic_spectrum(omega_sq, ell, levels - 1)?;
    Ok(8.0 * (2.0 * top).sqrt() / omega)
}

/// Finite-difference spectrum with a boundary-quality flag.
#[derive(Debug, Clone, PartialEq)]
pub struct FdSpectrum {
    pub spectrum: Spectrum,
    /// Set when the ground state still has support at r_max
    /// (amplitude > 1e−8 of its maximum): the box is too small.
    pub boundary_warning: bool,
}

/// k lowest Dirichlet eigenvalues of −½u″ + [ℓ(ℓ+1)/2r² + V(r)]u = Eu
/// discretized by central differences on the grid.
pub fn fd_spectrum<V: Fn(f64) -> f64>(
    potential: V,
    ell: u32,
    grid: &RadialGrid,
    k: usize,
) -> Result<FdSpectrum> {
    let m = grid.interior_points();
    if k > m {
        return Err(Error::Domain(format!(
            "requested {k} levels from a {m}-point grid"
        )));
    }
    let h = grid.spacing();
    let kinetic = 1.0 / (h * h);
    let centrifugal = ell as f64 * (ell as f64 + 1.0) / 2.0;
    let diag: Vec<f64> = (0..m)
        .map(|i| {
            let r = grid.radius(i);
            kinetic + centrifugal / (r * r) + potential(r)
        })
        .collect();
    let sub = vec![-0.5 * kinetic; m - 1];
    let t = SymTridiagonal::new(diag, sub)?;
    let mut spectrum = eigenvalues(&t, k)?;
    spectrum.descriptor = format!("finite-difference(ell={ell}, M={m}, r_max={})", grid.r_max());

    let ground = eigenvector(&t, spectrum.energies[0])?;
    let peak = ground.iter().fold(0.0f64, |a, v| a.max(v.abs()));
    let boundary_warning = ground[m - 1].abs() > 1e-8 * peak;
    Ok(FdSpectrum {
        spectrum,
        boundary_warning,
    })
}

/// Closed-form levels of V = ½Ω²r²: E_n = Ω(2n + ℓ + 3/2).
pub fn quadratic_spectrum(omega_sq: f64, ell: u32, n: usize) -> Result<f64> {
    if !(omega_sq > 0.0) {
        return Err(Error::Domain(format!(
            "quadratic coefficient must be positive, got {omega_sq}"
        )));
    }
    Ok(omega_sq.sqrt() * (2.0 * n as f64 + ell as f64 + 1.5))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn oscillator_levels() {
        let grid = RadialGrid::new(12.0, 4000).unwrap();
        let fd = fd_spectrum(|r| 0.5 * r * r, 0, &grid, 3).unwrap();
        assert!(!fd.boundary_warning);
        for (n, expected) in [1.5, 3.5, 5.5].iter().enumerate() {
            assert_abs_diff_eq!(fd.spectrum.energies[n], *expected, epsilon = 2e-5);
        }
        let fd = fd_spectrum(|r| 0.5 * r * r, 1, &grid, 1).unwrap();
        assert_abs_diff_eq!(fd.spectrum.energies[0], 2.5, epsilon = 2e-5);
    }

    #[test]
    fn efield_combination() {
        // ½ω⁴r² + qζr² with ω=1, q=1, ζ=1.5: Ω = 2, E₀ = 3
        let grid = RadialGrid::new(12.0, 4000).unwrap();
        let fd = fd_spectrum(|r| 0.5 * r * r + 1.5 * r * r, 0, &grid, 1).unwrap();
        assert_abs_diff_eq!(fd.spectrum.energies[0], 3.0, epsilon = 1e-4);
    }

    #[test]
    fn quadratic_closed_form() {
        assert_eq!(quadratic_spectrum(1.0, 0, 0).unwrap(), 1.5);
        assert_eq!(quadratic_spectrum(4.0, 0, 0).unwrap(), 3.0);
        assert_eq!(quadratic_spectrum(1.0, 1, 0).unwrap(), 2.5);
        assert!(quadratic_spectrum(0.0, 0, 0).is_err());
    }

    #[test]
    fn richardson_order_two() {
        let exact = [1.5, 3.5, 5.5];
        let coarse = fd_spectrum(|r| 0.5 * r * r, 0, &RadialGrid::new(12.0, 1000).unwrap(), 3).unwrap();
        let fine = fd_spectrum(|r| 0.5 * r * r, 0, &RadialGrid::new(12.0, 2001).unwrap(), 3).unwrap();
        for j in 0..3 {
            let e1 = (coarse.spectrum.energies[j] - exact[j]).abs();
            let e2 = (fine.spectrum.energies[j] - exact[j]).abs();
            let order = (e1 / e2).log2();
            assert!((order - 2.0).abs() < 0.1, "level {j}: order {order}");
        }
    }

    #[test]
    fn boundary_warning_raised_for_small_box() {
        let grid = RadialGrid::new(2.0, 400).unwrap();
        let fd = fd_spectrum(|r| 0.5 * r * r, 0, &grid, 1).unwrap();
        assert!(fd.boundary_warning);
    }

    #[test]
    fn suggested_box_is_generous() {
        let r = suggested_r_max(1.0, 0, 3).unwrap();
        assert_abs_diff_eq!(r, 8.0 * 11.0f64.sqrt(), epsilon = 1e-12);
        let grid = RadialGrid::new(r, 2000).unwrap();
        assert!(!fd_spectrum(|x| 0.5 * x * x, 0, &grid, 3).unwrap().boundary_warning);
    }

    #[test]
    fn grid_validation() {
        assert!(RadialGrid::new(0.0, 100).is_err());
        assert!(RadialGrid::new(5.0, 0).is_err());
        let grid = RadialGrid::new(5.0, 3).unwrap();
        assert!(fd_spectrum(|_| 0.0, 0, &grid, 4).is_err());
        assert_abs_diff_eq!(grid.spacing(), 1.25);
        assert_abs_diff_eq!(grid.radius(2), 3.75);
    }
}
