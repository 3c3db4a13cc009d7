use std::collections::VecDeque;
use std::f64::consts::TAU;

use nalgebra::{DMatrix, DVector};

use super::{CartanMatrix, LieError, Root, RootSystem};

/// Tolerance for orthogonality and `w^k = I` checks.
pub const ORDER_TOL: f64 = 1e-10;

/// Eigenvalue angles of `w` must sit this close (radians) to a multiple of `2 pi / h`.
///
/// Repeated exponents (D_even) make the eigenvalue problem defective-looking
/// to a nonsymmetric solver, which costs roughly half the digits.
pub const EXPONENT_ANGLE_TOL: f64 = 1e-6;

/// Proper 2-coloring of a Dynkin diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bicoloring(Vec<i32>);

impl Bicoloring {
    pub fn from_signs(signs: Vec<i32>) -> Self {
        assert!(signs.iter().all(|s| *s == 1 || *s == -1));
        Self(signs)
    }

    pub fn sign(&self, node: usize) -> i32 {
        self.0[node]
    }

    pub fn signs(&self) -> &[i32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_proper(&self, cartan: &CartanMatrix) -> bool {
        (0..cartan.size()).all(|i| cartan.neighbors(i).all(|j| self.0[i] != self.0[j]))
    }

    /// `+1` nodes ascending, then `-1` nodes ascending.
    pub fn bipartite_ordering(&self) -> Vec<usize> {
        let pos = (0..self.len()).filter(|&i| self.0[i] == 1);
        let neg = (0..self.len()).filter(|&i| self.0[i] == -1);
        pos.chain(neg).collect()
    }
}

/// BFS 2-coloring; the lowest-index node of each component gets `+1`.
pub fn bicolor(cartan: &CartanMatrix) -> Result<Bicoloring, LieError> {
    let n = cartan.size();
    let mut color = vec![0i32; n];
    for start in 0..n {
        if color[start] != 0 {
            continue;
        }
        color[start] = 1;
        let mut queue = VecDeque::from([start]);
        while let Some(i) = queue.pop_front() {
            for j in cartan.neighbors(i) {
                if color[j] == 0 {
                    color[j] = -color[i];
                    queue.push_back(j);
                } else if color[j] == color[i] {
                    return Err(LieError::NotBipartite);
                }
            }
        }
    }
    Ok(Bicoloring(color))
}

/// Matrix of the reflection `s_b` in an orthonormal frame.
fn reflection_matrix(b: &DVector<f64>) -> DMatrix<f64> {
    let n = b.len();
    DMatrix::identity(n, n) - (b * b.transpose()) * (2.0 / b.norm_squared())
}

/// Product of all simple reflections, `w = s_{o[0]} s_{o[1]} ... s_{o[l-1]}`.
///
/// The matrix acts on intrinsic coordinates (see [`RootSystem::intrinsic`]);
/// [`CoxeterElement::apply`] gives the same action on exact roots.
#[derive(Clone, Debug)]
pub struct CoxeterElement {
    matrix: DMatrix<f64>,
    coloring: Bicoloring,
    ordering: Vec<usize>,
    reflections: Vec<Root>,
    simple_intrinsic: Vec<DVector<f64>>,
}

/// Coxeter element for a bicoloring: `+1`-colored reflections first.
pub fn coxeter_element(rs: &RootSystem, coloring: &Bicoloring) -> CoxeterElement {
    CoxeterElement::with_ordering(rs, coloring, coloring.bipartite_ordering())
        .expect("bipartite ordering is a permutation")
}

impl CoxeterElement {
    pub fn with_ordering(
        rs: &RootSystem,
        coloring: &Bicoloring,
        ordering: Vec<usize>,
    ) -> Result<Self, LieError> {
        let l = rs.rank();
        let mut seen = vec![false; l];
        if ordering.len() != l || coloring.len() != l {
            return Err(LieError::BadOrdering(l));
        }
        for &i in &ordering {
            if i >= l || std::mem::replace(&mut seen[i], true) {
                return Err(LieError::BadOrdering(l));
            }
        }
        let simple_intrinsic: Vec<DVector<f64>> =
            rs.simple_roots().iter().map(|b| rs.intrinsic(b)).collect();
        let matrix = ordering
            .iter()
            .map(|&i| reflection_matrix(&simple_intrinsic[i]))
            .fold(DMatrix::identity(l, l), |acc, s| acc * s);
        let reflections = ordering
            .iter()
            .map(|&i| rs.simple_roots()[i].clone())
            .collect();
        Ok(Self {
            matrix,
            coloring: coloring.clone(),
            ordering,
            reflections,
            simple_intrinsic,
        })
    }

    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.matrix
    }

    pub fn coloring(&self) -> &Bicoloring {
        &self.coloring
    }

    pub fn ordering(&self) -> &[usize] {
        &self.ordering
    }

    pub fn rank(&self) -> usize {
        self.matrix.nrows()
    }

    /// Exact action on a root: the rightmost reflection is applied first.
    pub fn apply(&self, root: &Root) -> Root {
        self.reflections.iter().rev().fold(root.clone(), |r, b| {
            r.reflect(b)
                .expect("simple reflections preserve the root lattice")
        })
    }

    /// `sigma(b_i) b_i` in intrinsic coordinates.
    pub fn signed_simple_root(&self, node: usize) -> DVector<f64> {
        &self.simple_intrinsic[node] * self.coloring.sign(node) as f64
    }

    /// Largest entry of `|w^T w - I|`.
    pub fn orthogonality_defect(&self) -> f64 {
        let l = self.rank();
        (self.matrix.transpose() * &self.matrix - DMatrix::identity(l, l)).amax()
    }

    pub fn determinant(&self) -> f64 {
        self.matrix.determinant()
    }

    /// Smallest `k <= max` with `w^k = I` entrywise within `tol`.
    pub fn order(&self, max: usize, tol: f64) -> Option<usize> {
        let l = self.rank();
        let id = DMatrix::<f64>::identity(l, l);
        let mut power = self.matrix.clone();
        for k in 1..=max {
            if (&power - &id).amax() <= tol {
                return Some(k);
            }
            power = &power * &self.matrix;
        }
        None
    }
}

/// Exponents `m` with eigenvalues `exp(2 pi i m / h)`, sorted ascending.
pub fn exponents(w: &CoxeterElement, h: usize) -> Result<Vec<usize>, LieError> {
    let step = TAU / h as f64;
    let mut out: Vec<usize> = w
        .matrix
        .clone()
        .complex_eigenvalues()
        .iter()
        .map(|z| {
            let angle = z.im.atan2(z.re).rem_euclid(TAU);
            let m = (angle / step).round();
            let err = (angle - m * step).abs();
            let m = m as usize % h;
            if err > EXPONENT_ANGLE_TOL || m == 0 || (z.norm() - 1.0).abs() > EXPONENT_ANGLE_TOL {
                Err(LieError::EigenAngle { angle, h })
            } else {
                Ok(m)
            }
        })
        .collect::<Result<_, _>>()?;
    out.sort_unstable();
    Ok(out)
}
