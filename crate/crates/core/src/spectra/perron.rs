use std::f64::consts::PI;

use nalgebra::DVector;
use serde::Serialize;

use super::SpectraError;
use crate::lie::CartanMatrix;

/// Residual target for the power iteration, in the max norm with `max(v) = 1`.
const PF_RESIDUAL_TOL: f64 = 1e-13;
const PF_MAX_ITERATIONS: usize = 200_000;
/// Largest rank for which a failed power iteration falls back to a dense solve.
const DENSE_FALLBACK_MAX_RANK: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PfMethod {
    PowerIteration,
    DenseFallback,
}

/// Smallest eigenvalue of a Cartan matrix with its positive eigenvector.
#[derive(Clone, Debug, Serialize)]
pub struct PerronFrobenius {
    pub eigenvalue: f64,
    /// Entries indexed by Dynkin node, scaled so the largest is 1.
    pub vector: Vec<f64>,
    /// `max |C v - lambda v|`.
    pub residual: f64,
    pub iterations: usize,
    pub method: PfMethod,
}

impl PerronFrobenius {
    /// Entries indexed by node, scaled so the smallest is 1.
    pub fn normalized_by_min(&self) -> Vec<f64> {
        let min = self.vector.iter().copied().fold(f64::INFINITY, f64::min);
        self.vector.iter().map(|x| x / min).collect()
    }
}

/// `4 sin^2(pi / 2h)`, the smallest Cartan eigenvalue for Coxeter number `h`.
pub fn expected_pf_eigenvalue(h: usize) -> f64 {
    4.0 * (PI / (2.0 * h as f64)).sin().powi(2)
}

fn is_connected(c: &CartanMatrix) -> bool {
    let n = c.size();
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(i) = stack.pop() {
        for j in c.neighbors(i) {
            if !seen[j] {
                seen[j] = true;
                stack.push(j);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

fn rayleigh_and_residual(c: &nalgebra::DMatrix<f64>, v: &DVector<f64>) -> (f64, f64) {
    let cv = c * v;
    let lambda = v.dot(&cv) / v.dot(v);
    (lambda, (cv - v * lambda).amax())
}

/// Perron-Frobenius eigenpair of a connected simply-laced Cartan matrix.
///
/// Runs power iteration on `4I - C`, whose spectrum lies in `(0, 4)` with the
/// wanted direction dominant; if that stalls and the rank is small, falls back
/// to a full symmetric eigendecomposition. `h` is carried into the
/// non-convergence error for context.
pub fn pf_eigenvector(cartan: &CartanMatrix, h: usize) -> Result<PerronFrobenius, SpectraError> {
    let n = cartan.size();
    if n == 0 || !cartan.is_simply_laced() || !cartan.is_symmetric() || !is_connected(cartan) {
        return Err(SpectraError::InvalidCartan);
    }
    let c = cartan.to_f64();
    let shifted = nalgebra::DMatrix::identity(n, n) * 4.0 - &c;

    let mut v = DVector::from_element(n, 1.0);
    let (mut lambda, mut residual) = rayleigh_and_residual(&c, &v);
    let mut iterations = 0;
    while residual > PF_RESIDUAL_TOL && iterations < PF_MAX_ITERATIONS {
        v = &shifted * &v;
        let m = v.amax();
        v /= m;
        iterations += 1;
        (lambda, residual) = rayleigh_and_residual(&c, &v);
    }

    let mut method = PfMethod::PowerIteration;
    if residual > PF_RESIDUAL_TOL {
        if n > DENSE_FALLBACK_MAX_RANK {
            return Err(SpectraError::PfNonConvergence {
                residual,
                iterations,
                h,
            });
        }
        let eig = c.clone().symmetric_eigen();
        let imin = eig.eigenvalues.imin();
        v = eig.eigenvectors.column(imin).into_owned();
        if v.sum() < 0.0 {
            v = -v;
        }
        v /= v.amax();
        (lambda, residual) = rayleigh_and_residual(&c, &v);
        method = PfMethod::DenseFallback;
    }
    if v.iter().any(|&x| x <= 0.0) {
        return Err(SpectraError::PfNotPositive);
    }
    Ok(PerronFrobenius {
        eigenvalue: lambda,
        vector: v.iter().copied().collect(),
        residual,
        iterations,
        method,
    })
}
