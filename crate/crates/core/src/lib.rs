//! Numerical checks of the E8 mass spectrum of the magnetically perturbed
//! Ising chain.
//!
//! * [`lie`]: simply-laced root systems, Cartan matrices, Coxeter elements.
//! * [`spectra`]: Perron-Frobenius masses, orbits, fusing triples and the
//!   three-way mass/radius/eigenvector comparison.
//! * [`coxplane`]: Coxeter-plane projection, circle radii and CSV/SVG output.
//! * [`ising`]: exact diagonalization of the quantum Ising chain in
//!   transverse and longitudinal fields.

pub mod coxplane;
mod error;
pub mod format;
pub mod ising;
pub mod lie;
pub mod spectra;

pub use error::{Error, Result};
pub use lie::{Root, RootSystem, SimpleTypeId};
pub use spectra::{MassSpectrum, VerificationReport};
