use std::collections::{BTreeSet, VecDeque};

use nalgebra::DVector;

use super::{cartan_matrix, simple_roots, CartanMatrix, LieError, Root, SimpleTypeId};

/// Upper bound on closure size; the largest simply-laced system handled here
/// has far fewer roots, so hitting it means the input is not a finite root system.
pub const MAX_CLOSURE_SIZE: usize = 100_000;

/// Orbit closure of `simple` under the simple reflections.
///
/// Returns the full root set in sorted order. Coordinates are exact, so the
/// result does not depend on the order roots are processed in.
pub fn close_under_reflections(simple: &[Root]) -> Result<Vec<Root>, LieError> {
    let mut seen: BTreeSet<Root> = simple.iter().cloned().collect();
    let mut queue: VecDeque<Root> = simple.iter().cloned().collect();
    while let Some(root) = queue.pop_front() {
        for beta in simple {
            let image = root.reflect(beta)?;
            if seen.insert(image.clone()) {
                if seen.len() > MAX_CLOSURE_SIZE {
                    return Err(LieError::ClosureBound(MAX_CLOSURE_SIZE));
                }
                queue.push_back(image);
            }
        }
    }
    Ok(seen.into_iter().collect())
}

/// A finite simply-laced root system with its base and Cartan data.
#[derive(Clone, Debug)]
pub struct RootSystem {
    type_id: SimpleTypeId,
    simple_roots: Vec<Root>,
    roots: Vec<Root>,
    cartan: CartanMatrix,
    coxeter_number: usize,
    /// Orthonormal basis of the span of the simple roots, in ambient coordinates.
    frame: Vec<Vec<f64>>,
}

impl RootSystem {
    pub fn new(type_id: SimpleTypeId) -> Result<Self, LieError> {
        Self::from_simple_roots(type_id, simple_roots(type_id))
    }

    pub fn from_simple_roots(type_id: SimpleTypeId, simple: Vec<Root>) -> Result<Self, LieError> {
        if simple.len() != type_id.rank() {
            return Err(LieError::NotABase(format!(
                "{} simple roots for rank {}",
                simple.len(),
                type_id.rank()
            )));
        }
        let cartan = cartan_matrix(&simple)?;
        if !cartan.is_simply_laced() {
            return Err(LieError::NotABase(
                "Cartan matrix is not simply laced".into(),
            ));
        }
        let frame = orthonormal_frame(&simple)?;
        let roots = close_under_reflections(&simple)?;
        let l = simple.len();
        if roots.len() % l != 0 {
            return Err(LieError::NotABase(format!(
                "{} roots is not a multiple of the rank {l}",
                roots.len()
            )));
        }
        let coxeter_number = roots.len() / l;
        Ok(Self {
            type_id,
            simple_roots: simple,
            roots,
            cartan,
            coxeter_number,
            frame,
        })
    }

    pub fn type_id(&self) -> SimpleTypeId {
        self.type_id
    }

    pub fn rank(&self) -> usize {
        self.simple_roots.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.simple_roots[0].dim()
    }

    pub fn simple_roots(&self) -> &[Root] {
        &self.simple_roots
    }

    /// All roots, sorted.
    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn cartan(&self) -> &CartanMatrix {
        &self.cartan
    }

    pub fn coxeter_number(&self) -> usize {
        self.coxeter_number
    }

    pub fn contains(&self, root: &Root) -> bool {
        self.roots.binary_search(root).is_ok()
    }

    pub fn index_of(&self, root: &Root) -> Option<usize> {
        self.roots.binary_search(root).ok()
    }

    /// Coordinates of an ambient vector in the orthonormal frame of the root span.
    pub fn intrinsic(&self, root: &Root) -> DVector<f64> {
        let x = root.to_f64();
        DVector::from_iterator(
            self.frame.len(),
            self.frame
                .iter()
                .map(|e| e.iter().zip(&x).map(|(a, b)| a * b).sum()),
        )
    }
}

/// `h = |R| / l`.
pub fn coxeter_number(rs: &RootSystem) -> usize {
    rs.coxeter_number()
}

/// Modified Gram-Schmidt with one reorthogonalization pass.
fn orthonormal_frame(simple: &[Root]) -> Result<Vec<Vec<f64>>, LieError> {
    let mut frame: Vec<Vec<f64>> = Vec::with_capacity(simple.len());
    for b in simple {
        let mut v = b.to_f64();
        for _ in 0..2 {
            for e in &frame {
                let d: f64 = e.iter().zip(&v).map(|(a, b)| a * b).sum();
                v.iter_mut().zip(e).for_each(|(vi, ei)| *vi -= d * ei);
            }
        }
        let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        if norm < 1e-9 {
            return Err(LieError::NotABase(
                "simple roots are linearly dependent".into(),
            ));
        }
        v.iter_mut().for_each(|x| *x /= norm);
        frame.push(v);
    }
    Ok(frame)
}
