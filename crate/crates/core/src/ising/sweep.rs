use rayon::prelude::*;
use serde::Serialize;

use super::eigen::{lowest_eigenvalues, Solver, DEFAULT_TOL};
use super::hamiltonian::{build_hamiltonian, LinearOperator};
use super::sector::{Sector, SectorHamiltonian};
use super::{Boundary, ChainError, ChainParams, MemoryBudget};
use crate::format::sig12;

/// Gaps `E_i - E_0` for `i >= 1` of an ascending spectrum.
pub fn mass_gaps(evals: &[f64]) -> Vec<f64> {
    match evals.first() {
        Some(&e0) => evals[1..].iter().map(|e| e - e0).collect(),
        None => Vec::new(),
    }
}

/// Lowest `levels` eigenvalues of a chain within `sector`.
pub fn sector_levels(
    p: &ChainParams,
    sector: Sector,
    levels: usize,
    budget: &MemoryBudget,
) -> Result<Vec<f64>, ChainError> {
    let op: Box<dyn LinearOperator> = if sector == Sector::FULL {
        Box::new(build_hamiltonian(p, budget)?)
    } else {
        Box::new(SectorHamiltonian::build(p, sector, budget)?)
    };
    lowest_eigenvalues(op.as_ref(), levels.min(op.dim()), DEFAULT_TOL, Solver::Auto)
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct GapRow {
    pub gx: f64,
    #[serde(rename = "E0")]
    pub e0: f64,
    pub m1: f64,
    pub m2: f64,
    pub ratio: f64,
}

/// Ground energy and the two lowest gaps along a transverse-field grid.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GapTable {
    pub sites: usize,
    pub coupling: f64,
    pub gz: f64,
    pub boundary: Boundary,
    pub sector: Sector,
    pub rows: Vec<GapRow>,
}

impl GapTable {
    pub fn to_csv(&self) -> String {
        let mut out = String::from("gx,E0,m1,m2,ratio\n");
        for r in &self.rows {
            let cells = [r.gx, r.e0, r.m1, r.m2, r.ratio].map(sig12);
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("gap tables always serialize")
    }
}

/// Computes one [`GapRow`] per grid point, in grid order.
///
/// `base.gx` is ignored. Levels come from [`Sector::natural`].
pub fn ratio_sweep(
    base: &ChainParams,
    grid: &[f64],
    levels: usize,
    budget: &MemoryBudget,
) -> Result<GapTable, ChainError> {
    if grid.is_empty() {
        return Err(ChainError::EmptyGrid);
    }
    if levels < 3 {
        return Err(ChainError::InvalidLevels {
            requested: levels,
            dim: base.dim(),
        });
    }
    budget.check(base.sites)?;
    let sector = Sector::natural(base);
    let rows = grid
        .par_iter()
        .map(|&gx| {
            let p = base.with_gx(gx)?;
            let evals = sector_levels(&p, sector, levels, budget)?;
            let gaps = mass_gaps(&evals);
            if gaps.len() < 2 {
                return Err(ChainError::InvalidLevels {
                    requested: levels,
                    dim: evals.len(),
                });
            }
            Ok(GapRow {
                gx,
                e0: evals[0],
                m1: gaps[0],
                m2: gaps[1],
                ratio: gaps[1] / gaps[0],
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(GapTable {
        sites: base.sites,
        coupling: base.coupling,
        gz: base.gz,
        boundary: base.boundary,
        sector,
        rows,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CriticalScan {
    pub sites: usize,
    pub gx_star: f64,
    /// `(gx, gap)` with the gap taken in the even-parity sector.
    pub points: Vec<(f64, f64)>,
}

/// Grid point minimizing the first even-parity gap at `gz = 0`.
///
/// Ties go to the earlier grid point.
pub fn pseudo_critical_scan(
    sites: usize,
    coupling: f64,
    grid: &[f64],
    boundary: Boundary,
    budget: &MemoryBudget,
) -> Result<CriticalScan, ChainError> {
    if grid.is_empty() {
        return Err(ChainError::EmptyGrid);
    }
    let base = ChainParams::new(sites, coupling, 0.0, 0.0, boundary)?;
    budget.check(sites)?;
    let sector = Sector::natural(&base);
    let points = grid
        .par_iter()
        .map(|&gx| {
            let evals = sector_levels(&base.with_gx(gx)?, sector, 2, budget)?;
            Ok((gx, evals[1] - evals[0]))
        })
        .collect::<Result<Vec<_>, ChainError>>()?;
    let gx_star = points
        .iter()
        .fold(None::<(f64, f64)>, |best, &(gx, gap)| match best {
            Some((_, g)) if g <= gap => best,
            _ => Some((gx, gap)),
        })
        .map(|(gx, _)| gx)
        .expect("grid is non-empty");
    Ok(CriticalScan {
        sites,
        gx_star,
        points,
    })
}

/// Parses `start:stop:step` (endpoints inclusive within half a step) or a single value.
pub fn parse_grid(spec: &str) -> Result<Vec<f64>, ChainError> {
    let bad = || ChainError::InvalidParams(format!("bad grid `{spec}`, expected start:stop:step"));
    let parts: Vec<f64> = spec
        .split(':')
        .map(|s| s.trim().parse::<f64>().map_err(|_| bad()))
        .collect::<Result<_, _>>()?;
    if parts.iter().any(|x| !x.is_finite()) {
        return Err(bad());
    }
    match parts[..] {
        [x] => Ok(vec![x]),
        [start, stop, step] => {
            if step <= 0.0 || stop < start {
                return Err(bad());
            }
            let count = ((stop - start) / step + 0.5).floor() as usize + 1;
            // Points are start + i * step; no rounding accumulates along the grid.
            Ok((0..count).map(|i| start + i as f64 * step).collect())
        }
        _ => Err(bad()),
    }
}
