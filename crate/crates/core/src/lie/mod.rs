//! Simply-laced root systems, Cartan matrices and Coxeter elements.
//!
//! Roots are held in exact half-integer coordinates; floating point enters
//! only when the Coxeter element is turned into a matrix.

mod cartan;
mod coxeter;
mod root;
mod system;
mod types;

use thiserror::Error;

pub use cartan::{cartan_matrix, CartanMatrix};
pub use coxeter::{
    bicolor, coxeter_element, exponents, Bicoloring, CoxeterElement, EXPONENT_ANGLE_TOL, ORDER_TOL,
};
pub use root::Root;
pub use system::{close_under_reflections, coxeter_number, RootSystem, MAX_CLOSURE_SIZE};
pub use types::{simple_roots, Family, SimpleTypeId};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum LieError {
    #[error("invalid rank {rank} for family {family}")]
    InvalidRank { family: Family, rank: usize },
    #[error("unknown root system type `{0}` (expected A<n>, D<n> or E6/E7/E8)")]
    UnknownType(String),
    #[error("Cartan entry ({i}, {j}) is not an integer")]
    NonIntegerCartan { i: usize, j: usize },
    #[error("reflection coefficient is not an integer; input is not crystallographic")]
    NonCrystallographic,
    #[error("not a simple-root base: {0}")]
    NotABase(String),
    #[error("reflection closure exceeded {0} roots")]
    ClosureBound(usize),
    #[error("Dynkin diagram is not bipartite")]
    NotBipartite,
    #[error("eigenvalue angle {angle} is not a multiple of 2pi/{h}")]
    EigenAngle { angle: f64, h: usize },
    #[error("ordering is not a permutation of the {0} simple roots")]
    BadOrdering(usize),
}
