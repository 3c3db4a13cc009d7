//! Exact diagonalization of the transverse- and longitudinal-field Ising chain.

mod eigen;
mod hamiltonian;
mod params;
mod sector;
mod sweep;

use thiserror::Error;

pub use eigen::{
    dense_eigenvalues, lanczos_lowest, lowest_eigenvalues, to_dense, Solver, DEFAULT_LEVELS,
    DEFAULT_TOL, DENSE_MAX_DIM, MAX_KRYLOV,
};
pub use hamiltonian::{build_hamiltonian, spin_flip, translate, IsingHamiltonian, LinearOperator};
pub use params::{Boundary, ChainParams, MemoryBudget, MAX_SITES, MEMORY_BUDGET_ENV};
pub use sector::{Parity, Sector, SectorHamiltonian};
pub use sweep::{
    mass_gaps, parse_grid, pseudo_critical_scan, ratio_sweep, sector_levels, CriticalScan, GapRow,
    GapTable,
};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ChainError {
    #[error("invalid chain parameters: {0}")]
    InvalidParams(String),
    #[error("{sites} sites need about {required} bytes, over the memory budget of {budget} bytes")]
    MemoryBudget {
        sites: usize,
        required: u64,
        budget: u64,
    },
    #[error("eigensolver did not converge: residual {residual:e} after {iterations} iterations")]
    NonConvergence { residual: f64, iterations: usize },
    #[error("asked for {requested} eigenvalues of a {dim}-dimensional operator")]
    InvalidLevels { requested: usize, dim: usize },
    #[error("symmetry sector unavailable: {0}")]
    SectorUnavailable(String),
    #[error("the field grid is empty")]
    EmptyGrid,
}
