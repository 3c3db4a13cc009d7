use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::ChainError;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Boundary {
    #[default]
    Periodic,
    Open,
}

impl fmt::Display for Boundary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Boundary::Periodic => "periodic",
            Boundary::Open => "open",
        })
    }
}

impl FromStr for Boundary {
    type Err = ChainError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "periodic" => Ok(Boundary::Periodic),
            "open" => Ok(Boundary::Open),
            _ => Err(ChainError::InvalidParams(format!("unknown boundary `{s}`"))),
        }
    }
}

/// Parameters of `H = -K sum_j [Z_j Z_{j+1} + gx X_j + gz Z_j]` with Pauli `X`, `Z`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ChainParams {
    pub sites: usize,
    pub coupling: f64,
    pub gx: f64,
    pub gz: f64,
    pub boundary: Boundary,
}

/// Hard ceiling on chain length; states are indexed by `u32`.
pub const MAX_SITES: usize = 30;

impl ChainParams {
    pub fn new(
        sites: usize,
        coupling: f64,
        gx: f64,
        gz: f64,
        boundary: Boundary,
    ) -> Result<Self, ChainError> {
        let bad = |msg: String| Err(ChainError::InvalidParams(msg));
        if !(2..=MAX_SITES).contains(&sites) {
            return bad(format!("site count {sites} outside 2..={MAX_SITES}"));
        }
        if !(coupling.is_finite() && coupling > 0.0) {
            return bad(format!("coupling K = {coupling} must be positive"));
        }
        if !(gx.is_finite() && gx >= 0.0) {
            return bad(format!("transverse field gx = {gx} must be non-negative"));
        }
        if !(gz.is_finite() && gz >= 0.0) {
            return bad(format!("longitudinal field gz = {gz} must be non-negative"));
        }
        Ok(Self {
            sites,
            coupling,
            gx,
            gz,
            boundary,
        })
    }

    pub fn with_gx(self, gx: f64) -> Result<Self, ChainError> {
        Self::new(self.sites, self.coupling, gx, self.gz, self.boundary)
    }

    /// Hilbert-space dimension `2^N`.
    pub fn dim(&self) -> usize {
        1 << self.sites
    }

    /// Spin-flip symmetry is exact only without a longitudinal field.
    pub fn has_spin_flip_symmetry(&self) -> bool {
        self.gz == 0.0
    }
}

/// Upper bound on memory the eigensolvers may use.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MemoryBudget {
    pub bytes: u64,
}

/// Environment variable overriding the budget, in MiB.
pub const MEMORY_BUDGET_ENV: &str = "E8ISING_MEMORY_BUDGET_MB";

impl Default for MemoryBudget {
    fn default() -> Self {
        Self { bytes: 2 << 30 }
    }
}

impl MemoryBudget {
    pub fn from_mib(mib: u64) -> Self {
        Self { bytes: mib << 20 }
    }

    /// Reads [`MEMORY_BUDGET_ENV`], falling back to the 2 GiB default.
    pub fn from_env() -> Result<Self, ChainError> {
        match std::env::var(MEMORY_BUDGET_ENV) {
            Ok(v) => v.trim().parse().map(Self::from_mib).map_err(|_| {
                ChainError::InvalidParams(format!(
                    "{MEMORY_BUDGET_ENV}=`{v}` is not a whole number of MiB"
                ))
            }),
            Err(_) => Ok(Self::default()),
        }
    }

    /// Rough peak usage for a chain: Krylov basis plus work vectors plus
    /// symmetry lookup tables, all over the full `2^N` space.
    pub fn estimate(sites: usize) -> u64 {
        let dim = 1u64 << sites;
        dim * 8 * (super::eigen::MAX_KRYLOV as u64 + 8) + dim * 5
    }

    pub fn check(&self, sites: usize) -> Result<(), ChainError> {
        let required = Self::estimate(sites);
        if required > self.bytes {
            return Err(ChainError::MemoryBudget {
                sites,
                required,
                budget: self.bytes,
            });
        }
        Ok(())
    }
}
