//! Browser bindings for the interactive demo page.
//!
//! Three operations, each returning a JSON string the page parses and plots:
//! Zeeman fan lines over a field grid, matrix-vs-analytic spectra at a
//! detunable basis scale, and bound-state wavefunctions on a radius grid.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

use serde::Serialize;
use wasm_bindgen::prelude::*;

use qosc_core::assembly::{BFieldSystem, EFieldSystem, PhysicalSystem};
use qosc_core::eigensolve::{convergence_study, spectrum};
use qosc_core::recursion::eigenstate_wavefunction;
use qosc_core::Result;

#[allow(clippy::too_many_arguments)]
fn system_from(
    system: &str,
    omega: f64,
    q: f64,
    zeta: f64,
    b: f64,
    c: f64,
    ell: u32,
    mu_az: i32,
) -> Result<PhysicalSystem> {
    Ok(match system {
        "bfield" => BFieldSystem::new(omega, q, b, c, ell, mu_az)?.into(),
        _ => EFieldSystem::new(omega, q, zeta, ell)?.into(),
    })
}

#[derive(Serialize)]
struct FanLine {
    mu: i32,
    n: usize,
    energies: Vec<f64>,
}

#[derive(Serialize)]
struct Fan {
    b_grid: Vec<f64>,
    lines: Vec<FanLine>,
}

fn zeeman_fan(
    omega: f64,
    q: f64,
    c: f64,
    ell: u32,
    b_max: f64,
    b_steps: usize,
    n_levels: usize,
) -> Result<String> {
    let steps = b_steps.max(2);
    let b_grid: Vec<f64> = (0..steps)
        .map(|i| b_max * i as f64 / (steps - 1) as f64)
        .collect();
    let mut lines = Vec::new();
    for mu in -(ell as i32)..=ell as i32 {
        for n in 0..n_levels {
            let mut energies = Vec::with_capacity(steps);
            for &b in &b_grid {
                let sys = BFieldSystem::new(omega, q, b, c, ell, mu)?;
                energies.push(qosc_core::eigensolve::analytic_spectrum_bfield(&sys, n));
            }
            lines.push(FanLine { mu, n, energies });
        }
    }
    Ok(serde_json::to_string(&Fan { b_grid, lines }).expect("serialize"))
}

#[derive(Serialize)]
struct SpectrumDoc {
    lambda: f64,
    lambda_star: f64,
    xi: f64,
    matrix: Vec<f64>,
    analytic: Vec<f64>,
    convergence_sizes: Vec<usize>,
    convergence_ground: Vec<f64>,
}

#[allow(clippy::too_many_arguments)]
fn spectrum_doc(
    system: &str,
    omega: f64,
    q: f64,
    zeta: f64,
    b: f64,
    c: f64,
    ell: u32,
    mu_az: i32,
    lambda_factor: f64,
    basis_size: usize,
    levels: usize,
) -> Result<String> {
    let sys = system_from(system, omega, q, zeta, b, c, ell, mu_az)?;
    let lambda = lambda_factor.max(1e-3) * sys.lambda_star();
    let s = spectrum(&sys, lambda, basis_size.max(levels), levels)?;
    let analytic: Vec<f64> = (0..levels).map(|n| sys.analytic_level(n)).collect();
    let sizes: Vec<usize> = [4usize, 8, 16, 32, 64, 128]
        .iter()
        .copied()
        .filter(|&n| n <= basis_size.max(4))
        .collect();
    let ground: Vec<f64> = convergence_study(&sys, lambda, 1, &sizes)?
        .into_iter()
        .map(|row| row.energies[0])
        .collect();
    Ok(serde_json::to_string(&SpectrumDoc {
        lambda,
        lambda_star: sys.lambda_star(),
        xi: sys.xi(lambda),
        matrix: s.energies,
        analytic,
        convergence_sizes: sizes,
        convergence_ground: ground,
    })
    .expect("serialize"))
}

#[derive(Serialize)]
struct WavefunctionDoc {
    energy: f64,
    radii: Vec<f64>,
    values: Vec<f64>,
}

#[allow(clippy::too_many_arguments)]
fn wavefunction_doc(
    system: &str,
    omega: f64,
    q: f64,
    zeta: f64,
    b: f64,
    c: f64,
    ell: u32,
    mu_az: i32,
    lambda_factor: f64,
    level: usize,
    basis_size: usize,
    r_max: f64,
    points: usize,
) -> Result<String> {
    let sys = system_from(system, omega, q, zeta, b, c, ell, mu_az)?;
    let lambda = lambda_factor.max(1e-3) * sys.lambda_star();
    let n = points.max(2);
    let radii: Vec<f64> = (1..=n).map(|i| r_max * i as f64 / n as f64).collect();
    let (energy, values) =
        eigenstate_wavefunction(&sys, lambda, basis_size.max(level + 1), level, &radii)?;
    Ok(serde_json::to_string(&WavefunctionDoc {
        energy,
        radii,
        values,
    })
    .expect("serialize"))
}

fn to_js<T>(result: Result<T>) -> std::result::Result<T, JsValue> {
    result.map_err(|e| JsValue::from_str(&e.to_string()))
}

/// Zeeman fan: analytic levels E(B; n, μ) over a field grid, every μ in
/// −ℓ..=ℓ and n below `n_levels`.
#[wasm_bindgen]
pub fn zeeman_fan_json(
    omega: f64,
    q: f64,
    c: f64,
    ell: u32,
    b_max: f64,
    b_steps: usize,
    n_levels: usize,
) -> std::result::Result<String, JsValue> {
    to_js(zeeman_fan(omega, q, c, ell, b_max, b_steps, n_levels))
}

/// Matrix vs analytic spectrum at basis scale `lambda_factor`·λ*, plus the
/// ground-level truncation-convergence trace.
#[wasm_bindgen]
#[allow(clippy::too_many_arguments)]
pub fn spectrum_json(
    system: &str,
    omega: f64,
    q: f64,
    zeta: f64,
    b: f64,
    c: f64,
    ell: u32,
    mu_az: i32,
    lambda_factor: f64,
    basis_size: usize,
    levels: usize,
) -> std::result::Result<String, JsValue> {
    to_js(spectrum_doc(
        system, omega, q, zeta, b, c, ell, mu_az, lambda_factor, basis_size, levels,
    ))
}

/// Bound-state wavefunction of the given level on a radius grid,
/// synthesized from the truncated-matrix eigenvector.
#[wasm_bindgen]
#[allow(clippy::too_many_arguments)]
pub fn wavefunction_json(
    system: &str,
    omega: f64,
    q: f64,
    zeta: f64,
    b: f64,
    c: f64,
    ell: u32,
    mu_az: i32,
    lambda_factor: f64,
    level: usize,
    basis_size: usize,
    r_max: f64,
    points: usize,
) -> std::result::Result<String, JsValue> {
    to_js(wavefunction_doc(
        system, omega, q, zeta, b, c, ell, mu_az, lambda_factor, level, basis_size, r_max, points,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fan_has_zeeman_structure() {
        let doc: serde_json::Value =
            serde_json::from_str(&zeeman_fan(1.0, 1.0, 1.0, 1, 0.4, 5, 2).unwrap()).unwrap();
        let lines = doc["lines"].as_array().unwrap();
        assert_eq!(lines.len(), 6); // mu in {-1,0,1} x 2 levels
        // at B = 0 all mu degenerate; at B > 0 they split linearly
        let e = |mu: i64, idx: usize| -> f64 {
            lines
                .iter()
                .find(|l| l["mu"].as_i64() == Some(mu) && l["n"].as_u64() == Some(0))
                .unwrap()["energies"][idx]
                .as_f64()
                .unwrap()
        };
        assert_eq!(e(-1, 0), e(1, 0));
        let b = doc["b_grid"][4].as_f64().unwrap();
        assert!((e(-1, 4) - e(1, 4) - b).abs() < 1e-12); // split = 2 qB/2c = B
    }

    #[test]
    fn spectrum_doc_matches_analytic_at_lambda_star() {
        let doc: serde_json::Value = serde_json::from_str(
            &spectrum_doc("efield", 1.0, 1.0, 0.0, 0.0, 1.0, 0, 0, 1.0, 64, 3).unwrap(),
        )
        .unwrap();
        for (m, a) in doc["matrix"]
            .as_array()
            .unwrap()
            .iter()
            .zip(doc["analytic"].as_array().unwrap())
        {
            assert!((m.as_f64().unwrap() - a.as_f64().unwrap()).abs() < 1e-12);
        }
        assert_eq!(doc["xi"].as_f64().unwrap(), 0.0);
    }

    #[test]
    fn wavefunction_doc_ground_state_is_nodeless() {
        let doc: serde_json::Value = serde_json::from_str(
            &wavefunction_doc("efield", 1.0, 1.0, 0.5, 0.0, 1.0, 0, 0, 1.3, 0, 48, 5.0, 80)
                .unwrap(),
        )
        .unwrap();
        assert!((doc["energy"].as_f64().unwrap() - (2.0f64).sqrt() * 1.5).abs() < 1e-9);
        let values: Vec<f64> = doc["values"]
            .as_array()
            .unwrap()
            .iter()
            .map(|v| v.as_f64().unwrap())
            .collect();
        let sign = values[10].signum();
        assert!(values.iter().take(60).all(|v| v.signum() == sign));
    }

    #[test]
    fn errors_become_messages() {
        assert!(spectrum_doc("efield", -1.0, 1.0, 0.0, 0.0, 1.0, 0, 0, 1.0, 32, 3).is_err());
        assert!(zeeman_fan(1.0, 1.0, 1.0, 0, 0.4, 5, 2).is_ok());
    }
}
