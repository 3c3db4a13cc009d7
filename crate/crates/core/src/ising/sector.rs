use rayon::prelude::*;
use serde::Serialize;

use super::hamiltonian::{diagonal_energy, rotate_left, LinearOperator};
use super::{Boundary, ChainError, ChainParams, MemoryBudget};

const PARALLEL_MIN_DIM: usize = 1 << 12;

/// Eigenvalue of the global spin flip `prod_j X_j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    fn character(self) -> i8 {
        match self {
            Parity::Even => 1,
            Parity::Odd => -1,
        }
    }
}

/// A symmetry sector: optionally zero total momentum, optionally fixed spin-flip parity.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Sector {
    pub zero_momentum: bool,
    pub parity: Option<Parity>,
}

impl Sector {
    pub const FULL: Sector = Sector {
        zero_momentum: false,
        parity: None,
    };

    /// Sector used for gap extraction: the even-parity sector when `gz = 0`,
    /// so the ground state's parity partner is not mistaken for an
    /// excitation, and the whole space otherwise.
    pub fn natural(p: &ChainParams) -> Sector {
        Sector {
            zero_momentum: false,
            parity: p.has_spin_flip_symmetry().then_some(Parity::Even),
        }
    }
}

/// Hamiltonian restricted to a symmetry sector, stored as a sparse matrix.
///
/// Basis states are symmetrized orbits of product states under the
/// translations and/or spin flip, labelled by their smallest member.
#[derive(Clone, Debug)]
pub struct SectorHamiltonian {
    params: ChainParams,
    sector: Sector,
    representatives: Vec<u32>,
    row_start: Vec<usize>,
    cols: Vec<u32>,
    vals: Vec<f64>,
}

/// Smallest image of `s` under the group and the character linking them.
fn canonical(s: usize, sites: usize, translations: usize, parity: Option<Parity>) -> (usize, i8) {
    let mask = (1 << sites) - 1;
    let mut best = (s, 1);
    let flips: &[(usize, i8)] = match parity {
        None => &[(0, 1)],
        Some(par) => &[(0, 1), (1, par.character())],
    };
    for &(f, chi) in flips {
        let mut t = if f == 1 { s ^ mask } else { s };
        for _ in 0..translations {
            if t < best.0 {
                best = (t, chi);
            }
            t = rotate_left(t, sites);
        }
    }
    best
}

/// Sum of characters over the stabilizer of `s`; zero means the symmetrized state vanishes.
fn stabilizer_weight(s: usize, sites: usize, translations: usize, parity: Option<Parity>) -> i32 {
    let mask = (1 << sites) - 1;
    let mut weight = 0;
    let flips: &[(usize, i8)] = match parity {
        None => &[(0, 1)],
        Some(par) => &[(0, 1), (1, par.character())],
    };
    for &(f, chi) in flips {
        let mut t = if f == 1 { s ^ mask } else { s };
        for _ in 0..translations {
            if t == s {
                weight += chi as i32;
            }
            t = rotate_left(t, sites);
        }
    }
    weight
}

impl SectorHamiltonian {
    pub fn build(
        p: &ChainParams,
        sector: Sector,
        budget: &MemoryBudget,
    ) -> Result<Self, ChainError> {
        budget.check(p.sites)?;
        if sector.zero_momentum && p.boundary != Boundary::Periodic {
            return Err(ChainError::SectorUnavailable(
                "momentum needs a periodic chain".into(),
            ));
        }
        if sector.parity.is_some() && !p.has_spin_flip_symmetry() {
            return Err(ChainError::SectorUnavailable(
                "spin-flip parity needs gz = 0".into(),
            ));
        }
        let n = p.sites;
        let translations = if sector.zero_momentum { n } else { 1 };
        let parity = sector.parity;

        let table: Vec<(u32, i8)> = (0..p.dim())
            .into_par_iter()
            .map(|s| {
                let (r, chi) = canonical(s, n, translations, parity);
                (r as u32, chi)
            })
            .collect();
        let weights: Vec<(u32, i32)> = (0..p.dim())
            .into_par_iter()
            .filter(|&s| table[s].0 as usize == s)
            .map(|s| (s as u32, stabilizer_weight(s, n, translations, parity)))
            .filter(|&(_, w)| w > 0)
            .collect();
        let mut index = vec![u32::MAX; p.dim()];
        for (i, &(s, _)) in weights.iter().enumerate() {
            index[s as usize] = i as u32;
        }

        let hop = -p.coupling * p.gx;
        let rows: Vec<Vec<(u32, f64)>> = weights
            .par_iter()
            .map(|&(a, wa)| {
                let a = a as usize;
                let mut row = vec![(index[a], diagonal_energy(p, a))];
                if hop != 0.0 {
                    for j in 0..n {
                        let s = a ^ (1 << j);
                        let (b, chi) = table[s];
                        let ib = index[b as usize];
                        if ib == u32::MAX {
                            continue;
                        }
                        let wb = weights[ib as usize].1;
                        row.push((ib, hop * chi as f64 * (wb as f64 / wa as f64).sqrt()));
                    }
                }
                row.sort_by_key(|e| e.0);
                row.dedup_by(|next, kept| {
                    if next.0 == kept.0 {
                        kept.1 += next.1;
                        true
                    } else {
                        false
                    }
                });
                row
            })
            .collect();

        let mut row_start = Vec::with_capacity(rows.len() + 1);
        let mut cols = Vec::new();
        let mut vals = Vec::new();
        row_start.push(0);
        for row in rows {
            for (c, v) in row {
                cols.push(c);
                vals.push(v);
            }
            row_start.push(cols.len());
        }
        Ok(Self {
            params: *p,
            sector,
            representatives: weights.into_iter().map(|(s, _)| s).collect(),
            row_start,
            cols,
            vals,
        })
    }

    pub fn params(&self) -> &ChainParams {
        &self.params
    }

    pub fn sector(&self) -> Sector {
        self.sector
    }

    /// Product state labelling each basis vector.
    pub fn representatives(&self) -> &[u32] {
        &self.representatives
    }

    fn row(&self, i: usize, x: &[f64]) -> f64 {
        let range = self.row_start[i]..self.row_start[i + 1];
        self.cols[range.clone()]
            .iter()
            .zip(&self.vals[range])
            .map(|(&c, v)| v * x[c as usize])
            .sum()
    }
}

impl LinearOperator for SectorHamiltonian {
    fn dim(&self) -> usize {
        self.representatives.len()
    }

    fn apply(&self, x: &[f64], y: &mut [f64]) {
        if y.len() >= PARALLEL_MIN_DIM {
            y.par_iter_mut()
                .enumerate()
                .for_each(|(i, yi)| *yi = self.row(i, x));
        } else {
            y.iter_mut()
                .enumerate()
                .for_each(|(i, yi)| *yi = self.row(i, x));
        }
    }
}
