use rayon::prelude::*;

use super::{Boundary, ChainError, ChainParams, MemoryBudget};

/// Problems at least this large are applied in parallel.
const PARALLEL_MIN_DIM: usize = 1 << 12;

/// A real symmetric operator known only through its action on vectors.
pub trait LinearOperator: Sync {
    fn dim(&self) -> usize;

    /// `y = A x`; both slices have length [`dim`](Self::dim).
    fn apply(&self, x: &[f64], y: &mut [f64]);
}

/// Bonds `(j, j+1)`; periodic chains include the wrap-around bond, so a
/// two-site periodic chain counts its single pair twice.
pub fn bonds(sites: usize, boundary: Boundary) -> impl Iterator<Item = (usize, usize)> {
    let count = match boundary {
        Boundary::Periodic => sites,
        Boundary::Open => sites - 1,
    };
    (0..count).map(move |j| (j, (j + 1) % sites))
}

/// Pauli `Z` eigenvalue of site `j`: bit clear is `+1`, bit set is `-1`.
#[inline]
pub fn z_value(state: usize, site: usize) -> f64 {
    if state >> site & 1 == 0 {
        1.0
    } else {
        -1.0
    }
}

/// Diagonal matrix element `-K [sum Z_j Z_{j+1} + gz sum Z_j]`.
pub fn diagonal_energy(p: &ChainParams, state: usize) -> f64 {
    let bond: f64 = bonds(p.sites, p.boundary)
        .map(|(a, b)| z_value(state, a) * z_value(state, b))
        .sum();
    let field: f64 = (0..p.sites).map(|j| z_value(state, j)).sum();
    -p.coupling * (bond + p.gz * field)
}

/// Matrix-free Hamiltonian on the full `2^N` product basis.
///
/// The diagonal is tabulated; each transverse term flips one bit.
#[derive(Clone, Debug)]
pub struct IsingHamiltonian {
    params: ChainParams,
    diag: Vec<f64>,
    hop: f64,
}

impl IsingHamiltonian {
    pub fn params(&self) -> &ChainParams {
        &self.params
    }

    pub fn diagonal(&self) -> &[f64] {
        &self.diag
    }

    /// Whether the operator commutes with the global spin flip `prod_j X_j`.
    pub fn is_parity_symmetric(&self) -> bool {
        self.params.has_spin_flip_symmetry()
    }

    fn row(&self, s: usize, x: &[f64]) -> f64 {
        let flips: f64 = (0..self.params.sites).map(|j| x[s ^ (1 << j)]).sum();
        self.diag[s] * x[s] + self.hop * flips
    }
}

impl LinearOperator for IsingHamiltonian {
    fn dim(&self) -> usize {
        self.diag.len()
    }

    fn apply(&self, x: &[f64], y: &mut [f64]) {
        if y.len() >= PARALLEL_MIN_DIM {
            y.par_iter_mut()
                .enumerate()
                .for_each(|(s, ys)| *ys = self.row(s, x));
        } else {
            y.iter_mut()
                .enumerate()
                .for_each(|(s, ys)| *ys = self.row(s, x));
        }
    }
}

/// Builds the full-space operator after checking the memory budget.
///
/// Field signs are not re-validated here so that symmetry checks can use
/// `gz < 0`; [`ChainParams::new`] enforces the physical ranges.
pub fn build_hamiltonian(
    p: &ChainParams,
    budget: &MemoryBudget,
) -> Result<IsingHamiltonian, ChainError> {
    budget.check(p.sites)?;
    let diag = (0..p.dim())
        .into_par_iter()
        .map(|s| diagonal_energy(p, s))
        .collect();
    Ok(IsingHamiltonian {
        params: *p,
        diag,
        hop: -p.coupling * p.gx,
    })
}

/// Global spin flip `prod_j X_j` applied to a vector.
pub fn spin_flip(x: &[f64]) -> Vec<f64> {
    let mask = x.len() - 1;
    (0..x.len()).map(|s| x[s ^ mask]).collect()
}

/// One-site translation `j -> j + 1` of an `N`-site product basis vector.
pub fn translate(x: &[f64], sites: usize) -> Vec<f64> {
    let mut y = vec![0.0; x.len()];
    for (s, &xs) in x.iter().enumerate() {
        y[rotate_left(s, sites)] = xs;
    }
    y
}

#[inline]
pub(crate) fn rotate_left(s: usize, sites: usize) -> usize {
    let mask = (1 << sites) - 1;
    ((s << 1) | (s >> (sites - 1))) & mask
}
