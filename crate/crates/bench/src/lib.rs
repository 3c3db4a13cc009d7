//! Shared fixtures for the criterion benches.

use e8ising::ising::{Boundary, ChainParams};
use e8ising::SimpleTypeId;

pub fn type_id(name: &str) -> SimpleTypeId {
    name.parse().expect("valid type name")
}

/// Periodic chain with the given size and fields, unit coupling.
pub fn chain(sites: usize, gx: f64, gz: f64) -> ChainParams {
    ChainParams::new(sites, 1.0, gx, gz, Boundary::Periodic).expect("valid chain")
}
