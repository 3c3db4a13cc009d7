//! The mass legs: closed-form E8 masses, Perron-Frobenius eigenvectors of
//! Cartan matrices, Coxeter orbits, fusing triples, and the three-way
//! comparison against Coxeter-plane circle radii.

mod masses;
mod orbits;
mod perron;
mod verify;

use thiserror::Error;

pub use masses::{
    e8_masses_from_nodes, zamolodchikov_masses, zamolodchikov_ratios, MassSpectrum, CLOSED_FORMS,
    E8_NODE_MASS, TABLE_DECIMALS,
};
pub use orbits::{
    fusing_triples, orbit_decomposition, orbit_lookup, orbit_representatives, FusingTriple, Orbit,
};
pub use perron::{expected_pf_eigenvalue, pf_eigenvector, PerronFrobenius, PfMethod};
pub use verify::{verify_mass_correspondence, verify_with_ordering, Multisets, VerificationReport};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SpectraError {
    #[error("mass spectrum is empty")]
    EmptySpectrum,
    #[error("mass {0} is not a positive finite number")]
    NonPositiveMass(f64),
    #[error("expected the Cartan matrix of a connected simply-laced diagram")]
    InvalidCartan,
    #[error("power iteration stalled at residual {residual:e} after {iterations} steps (h = {h})")]
    PfNonConvergence {
        residual: f64,
        iterations: usize,
        h: usize,
    },
    #[error("Perron-Frobenius vector has a non-positive entry")]
    PfNotPositive,
    #[error("root is not in the root system")]
    ForeignRoot,
    #[error("orbit of size {found}, expected {expected}")]
    OrbitSize { expected: usize, found: usize },
    #[error("{found} orbits, expected {expected}")]
    OrbitCount { expected: usize, found: usize },
    #[error("{0} is excluded: the mass correspondence needs a simple type of rank at least 2")]
    ExcludedType(String),
}
