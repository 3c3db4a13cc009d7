use nalgebra::{DMatrix, DVector, SymmetricEigen};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::hamiltonian::LinearOperator;
use super::ChainError;

/// Largest Krylov basis kept in memory by [`lanczos_lowest`].
pub const MAX_KRYLOV: usize = 120;
/// [`Solver::Auto`] diagonalizes densely up to this dimension.
pub const DENSE_MAX_DIM: usize = 1 << 8;
pub const DEFAULT_LEVELS: usize = 6;
/// Relative residual tolerance `|H x - theta x| <= tol * max(1, |theta|)`.
pub const DEFAULT_TOL: f64 = 1e-8;
/// Restart cycles allowed per eigenpair.
pub const MAX_RESTARTS: usize = 400;

const SEED: u64 = 0x1a2c_705e;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Solver {
    #[default]
    Auto,
    Dense,
    Lanczos,
}

/// Materializes an operator column by column.
pub fn to_dense(op: &dyn LinearOperator) -> DMatrix<f64> {
    let n = op.dim();
    let cols: Vec<Vec<f64>> = (0..n)
        .into_par_iter()
        .map(|j| {
            let mut e = vec![0.0; n];
            e[j] = 1.0;
            let mut col = vec![0.0; n];
            op.apply(&e, &mut col);
            col
        })
        .collect();
    DMatrix::from_fn(n, n, |i, j| cols[j][i])
}

/// Entire spectrum, ascending.
pub fn dense_eigenvalues(op: &dyn LinearOperator) -> Vec<f64> {
    let mut m = to_dense(op);
    // Exactly symmetric input for the solver.
    let t = m.transpose();
    m += t;
    m *= 0.5;
    let mut evals: Vec<f64> = SymmetricEigen::new(m).eigenvalues.iter().copied().collect();
    evals.sort_by(f64::total_cmp);
    evals
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn axpy(alpha: f64, x: &[f64], y: &mut [f64]) {
    y.iter_mut().zip(x).for_each(|(yi, xi)| *yi += alpha * xi);
}

fn normalize(x: &mut [f64]) -> f64 {
    let n = dot(x, x).sqrt();
    if n > 0.0 {
        x.iter_mut().for_each(|v| *v /= n);
    }
    n
}

/// Two passes of classical Gram-Schmidt against every vector in `bases`.
fn orthogonalize(x: &mut [f64], bases: &[&[Vec<f64>]]) {
    for _ in 0..2 {
        for basis in bases {
            for q in basis.iter() {
                let c = dot(q, x);
                axpy(-c, q, x);
            }
        }
    }
}

/// Lowest eigenpair of `op` restricted to the complement of `locked`.
fn lowest_unlocked(
    op: &dyn LinearOperator,
    locked: &[Vec<f64>],
    rng: &mut ChaCha8Rng,
    tol: f64,
) -> Result<(f64, Vec<f64>), ChainError> {
    let n = op.dim();
    let m_max = MAX_KRYLOV.min(n - locked.len());
    let mut start: Vec<f64> = (0..n).map(|_| rng.random_range(-1.0..1.0)).collect();
    let mut best_residual = f64::INFINITY;
    let mut w = vec![0.0; n];

    for _ in 0..MAX_RESTARTS {
        orthogonalize(&mut start, &[locked]);
        if normalize(&mut start) == 0.0 {
            return Err(ChainError::NonConvergence {
                residual: f64::NAN,
                iterations: 0,
            });
        }
        let mut basis: Vec<Vec<f64>> = vec![start];
        let mut alpha = Vec::with_capacity(m_max);
        let mut beta: Vec<f64> = Vec::with_capacity(m_max);
        loop {
            let q = basis.last().unwrap();
            op.apply(q, &mut w);
            let a = dot(q, &w);
            alpha.push(a);
            orthogonalize(&mut w, &[locked, &basis]);
            let b = normalize(&mut w);
            let breakdown = b <= 1e-13 * a.abs().max(1.0);
            if breakdown || basis.len() == m_max {
                beta.push(if breakdown { 0.0 } else { b });
                break;
            }
            beta.push(b);
            basis.push(w.clone());
        }

        let m = alpha.len();
        let t = DMatrix::from_fn(m, m, |i, j| match i.abs_diff(j) {
            0 => alpha[i],
            1 => beta[i.min(j)],
            _ => 0.0,
        });
        let eig = SymmetricEigen::new(t);
        let k = eig.eigenvalues.imin();
        let theta = eig.eigenvalues[k];
        let y: DVector<f64> = eig.eigenvectors.column(k).into_owned();
        let residual = (beta[m - 1] * y[m - 1]).abs();
        best_residual = best_residual.min(residual);

        let mut ritz = vec![0.0; n];
        for (qi, &yi) in basis.iter().zip(y.iter()) {
            axpy(yi, qi, &mut ritz);
        }
        if residual <= tol * theta.abs().max(1.0) {
            orthogonalize(&mut ritz, &[locked]);
            normalize(&mut ritz);
            return Ok((theta, ritz));
        }
        start = ritz;
    }
    Err(ChainError::NonConvergence {
        residual: best_residual,
        iterations: MAX_RESTARTS * m_max,
    })
}

/// The `k` lowest eigenvalues of a symmetric operator, ascending.
///
/// Restarted Lanczos with full reorthogonalization; converged eigenvectors
/// are locked and deflated one at a time, so degenerate levels are found
/// with their multiplicity. The start vectors are seeded, making results
/// reproducible.
pub fn lanczos_lowest(op: &dyn LinearOperator, k: usize, tol: f64) -> Result<Vec<f64>, ChainError> {
    let dim = op.dim();
    if k == 0 || k > dim {
        return Err(ChainError::InvalidLevels { requested: k, dim });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut locked = Vec::with_capacity(k);
    let mut evals = Vec::with_capacity(k);
    while evals.len() < k {
        let (theta, x) = lowest_unlocked(op, &locked, &mut rng, tol)?;
        evals.push(theta);
        locked.push(x);
    }
    evals.sort_by(f64::total_cmp);
    Ok(evals)
}

/// The `k` lowest eigenvalues, ascending, by the requested method.
pub fn lowest_eigenvalues(
    op: &dyn LinearOperator,
    k: usize,
    tol: f64,
    solver: Solver,
) -> Result<Vec<f64>, ChainError> {
    let dim = op.dim();
    if k == 0 || k > dim {
        return Err(ChainError::InvalidLevels { requested: k, dim });
    }
    let dense = match solver {
        Solver::Auto => dim <= DENSE_MAX_DIM,
        Solver::Dense => true,
        Solver::Lanczos => false,
    };
    if dense {
        let mut evals = dense_eigenvalues(op);
        evals.truncate(k);
        Ok(evals)
    } else {
        lanczos_lowest(op, k, tol)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ising::{build_hamiltonian, Boundary, ChainParams, MemoryBudget};

    struct Diagonal(Vec<f64>);

    impl LinearOperator for Diagonal {
        fn dim(&self) -> usize {
            self.0.len()
        }

        fn apply(&self, x: &[f64], y: &mut [f64]) {
            for ((yi, xi), d) in y.iter_mut().zip(x).zip(&self.0) {
                *yi = d * xi;
            }
        }
    }

    fn assert_close(got: &[f64], want: &[f64]) {
        assert_eq!(got.len(), want.len());
        for (g, w) in got.iter().zip(want) {
            assert!((g - w).abs() < 1e-12, "{got:?} vs {want:?}");
        }
    }

    fn chain(n: usize, gx: f64, gz: f64, boundary: Boundary) -> impl LinearOperator {
        build_hamiltonian(
            &ChainParams::new(n, 1.0, gx, gz, boundary).unwrap(),
            &MemoryBudget::default(),
        )
        .unwrap()
    }

    #[test]
    fn lanczos_matches_dense_up_to_ten_sites() {
        let cases = [
            (4, 0.5, 0.0, Boundary::Periodic),
            (6, 1.0, 0.0, Boundary::Periodic),
            (7, 0.3, 0.0, Boundary::Open),
            (8, 1.0, 0.05, Boundary::Periodic),
            (9, 1.7, 0.2, Boundary::Open),
            (10, 0.9, 0.0, Boundary::Periodic),
            (10, 1.0, 0.04, Boundary::Periodic),
        ];
        for (n, gx, gz, b) in cases {
            let h = chain(n, gx, gz, b);
            let dense = dense_eigenvalues(&h);
            let iter = lanczos_lowest(&h, DEFAULT_LEVELS, 1e-10).unwrap();
            for (i, e) in iter.iter().enumerate() {
                assert!(
                    (e - dense[i]).abs() < 1e-10,
                    "N={n} gx={gx} gz={gz} level {i}: {e} vs {}",
                    dense[i]
                );
            }
        }
    }

    #[test]
    fn degenerate_levels_keep_their_multiplicity() {
        // Classical chain at N=3: -3 twice, then +1 six times.
        let h = chain(3, 0.0, 0.0, Boundary::Periodic);
        let evals = lanczos_lowest(&h, 5, 1e-12).unwrap();
        let want = [-3.0, -3.0, 1.0, 1.0, 1.0];
        for (e, w) in evals.iter().zip(want) {
            assert!((e - w).abs() < 1e-12);
        }
        let d = Diagonal(vec![2.0, -1.0, 5.0, -1.0, -1.0, 0.0, 2.0]);
        assert_close(
            &lanczos_lowest(&d, 4, 1e-12).unwrap(),
            &[-1.0, -1.0, -1.0, 0.0],
        );
    }

    #[test]
    fn aligned_ground_state_energy() {
        for n in [3, 6, 11] {
            let evals = lowest_eigenvalues(
                &chain(n, 0.0, 0.0, Boundary::Periodic),
                2,
                DEFAULT_TOL,
                Solver::Auto,
            )
            .unwrap();
            assert!((evals[0] + n as f64).abs() < 1e-12);
        }
    }

    #[test]
    fn output_is_sorted_and_reproducible() {
        let h = chain(11, 0.8, 0.1, Boundary::Periodic);
        let a = lanczos_lowest(&h, 6, DEFAULT_TOL).unwrap();
        assert!(a.windows(2).all(|w| w[0] <= w[1]));
        assert_eq!(a, lanczos_lowest(&h, 6, DEFAULT_TOL).unwrap());
    }

    #[test]
    fn whole_spectrum_of_a_tiny_operator() {
        let d = Diagonal(vec![3.0, 1.0, 2.0]);
        assert_close(&lanczos_lowest(&d, 3, 1e-12).unwrap(), &[1.0, 2.0, 3.0]);
    }

    #[test]
    fn level_count_is_checked() {
        let d = Diagonal(vec![1.0, 2.0]);
        assert!(matches!(
            lanczos_lowest(&d, 3, 1e-8),
            Err(ChainError::InvalidLevels {
                requested: 3,
                dim: 2
            })
        ));
        assert!(lowest_eigenvalues(&d, 0, 1e-8, Solver::Dense).is_err());
    }

    #[test]
    fn extensive_ground_state_energy() {
        let per_site = |n: usize| {
            let h = chain(n, 0.9, 0.05, Boundary::Periodic);
            lowest_eigenvalues(&h, 1, DEFAULT_TOL, Solver::Auto).unwrap()[0] / n as f64
        };
        let (e12, e14) = (per_site(12), per_site(14));
        assert!(((e12 - e14) / e14).abs() < 0.01, "{e12} {e14}");
    }
}
