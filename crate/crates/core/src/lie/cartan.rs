use nalgebra::DMatrix;
use serde::{Serialize, Serializer};

use super::{LieError, Root};

/// Integer Cartan matrix `C_ij = 2 (b_i, b_j) / (b_j, b_j)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CartanMatrix {
    size: usize,
    entries: Vec<i32>,
}

impl CartanMatrix {
    pub fn from_rows(rows: &[Vec<i32>]) -> Self {
        let size = rows.len();
        assert!(
            rows.iter().all(|r| r.len() == size),
            "Cartan matrix must be square"
        );
        Self {
            size,
            entries: rows.concat(),
        }
    }

    /// Simply-laced Cartan matrix of a Dynkin diagram given by its edge list.
    pub fn from_dynkin_edges(size: usize, edges: &[(usize, usize)]) -> Self {
        let mut entries = vec![0; size * size];
        for i in 0..size {
            entries[i * size + i] = 2;
        }
        for &(i, j) in edges {
            entries[i * size + j] = -1;
            entries[j * size + i] = -1;
        }
        Self { size, entries }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, i: usize, j: usize) -> i32 {
        self.entries[i * self.size + j]
    }

    pub fn rows(&self) -> Vec<Vec<i32>> {
        self.entries
            .chunks(self.size)
            .map(<[i32]>::to_vec)
            .collect()
    }

    /// True when nodes `i != j` are joined in the Dynkin diagram.
    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        i != j && self.get(i, j) != 0
    }

    pub fn neighbors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.size).filter(move |&j| self.adjacent(i, j))
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.size).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// Diagonal all 2, off-diagonal entries in {0, -1}.
    pub fn is_simply_laced(&self) -> bool {
        (0..self.size).all(|i| {
            (0..self.size).all(|j| {
                let c = self.get(i, j);
                if i == j {
                    c == 2
                } else {
                    c == 0 || c == -1
                }
            })
        })
    }

    pub fn to_f64(&self) -> DMatrix<f64> {
        DMatrix::from_fn(self.size, self.size, |i, j| self.get(i, j) as f64)
    }

    /// Ascending eigenvalues. Only meaningful for symmetric (simply-laced) matrices.
    pub fn eigenvalues(&self) -> Vec<f64> {
        let mut ev: Vec<f64> = self
            .to_f64()
            .symmetric_eigenvalues()
            .iter()
            .copied()
            .collect();
        ev.sort_by(f64::total_cmp);
        ev
    }
}

impl Serialize for CartanMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.rows().serialize(serializer)
    }
}

/// Computes the Cartan matrix of a list of simple roots.
pub fn cartan_matrix(simple: &[Root]) -> Result<CartanMatrix, LieError> {
    let n = simple.len();
    let mut entries = Vec::with_capacity(n * n);
    for (i, bi) in simple.iter().enumerate() {
        for (j, bj) in simple.iter().enumerate() {
            let num = 2 * bi.inner4(bj);
            let den = bj.inner4(bj);
            if den == 0 || num % den != 0 {
                return Err(LieError::NonIntegerCartan { i, j });
            }
            entries.push((num / den) as i32);
        }
    }
    Ok(CartanMatrix { size: n, entries })
}
