use serde::Serialize;

use super::{
    orbit_decomposition, pf_eigenvector, zamolodchikov_masses, MassSpectrum, SpectraError,
};
use crate::coxplane::{circle_radii, coxeter_plane, project};
use crate::lie::{bicolor, CoxeterElement, Family, RootSystem, SimpleTypeId};
use crate::Result;

#[derive(Clone, Debug, Serialize)]
pub struct Multisets {
    /// Coxeter-plane circle radii.
    pub radii: MassSpectrum,
    /// Perron-Frobenius eigenvector entries.
    pub perron_frobenius: MassSpectrum,
    /// Closed-form masses; only known for E8.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub closed_form: Option<MassSpectrum>,
}

/// Outcome of comparing the mass legs for one type.
#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    #[serde(rename = "type")]
    pub type_id: SimpleTypeId,
    pub coxeter_number: usize,
    pub multisets: Multisets,
    /// Largest pairwise relative deviation between the normalized multisets.
    pub deviation: f64,
    pub pass: bool,
    pub tol: f64,
}

impl VerificationReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

/// Compares circle radii, Perron-Frobenius entries and (for E8) the closed
/// forms, each normalized by its smallest element, using the bipartite
/// Coxeter element.
pub fn verify_mass_correspondence(type_id: SimpleTypeId, tol: f64) -> Result<VerificationReport> {
    verify_with_ordering(type_id, tol, None)
}

/// As [`verify_mass_correspondence`], with an explicit reflection ordering for `w`.
pub fn verify_with_ordering(
    type_id: SimpleTypeId,
    tol: f64,
    ordering: Option<Vec<usize>>,
) -> Result<VerificationReport> {
    if type_id.rank() < 2 {
        return Err(SpectraError::ExcludedType(type_id.to_string()).into());
    }
    let rs = RootSystem::new(type_id)?;
    let h = rs.coxeter_number();
    let coloring = bicolor(rs.cartan())?;
    let ordering = ordering.unwrap_or_else(|| coloring.bipartite_ordering());
    let w = CoxeterElement::with_ordering(&rs, &coloring, ordering)?;
    let orbits = orbit_decomposition(&rs, &w)?;
    let basis = coxeter_plane(&w, h)?;
    let radii = circle_radii(&project(&rs, &basis, &orbits))?;
    let pf = pf_eigenvector(rs.cartan(), h)?;
    let perron_frobenius = MassSpectrum::normalized(pf.vector.iter().copied())?;
    let closed_form =
        (type_id.family() == Family::E && type_id.rank() == 8).then(zamolodchikov_masses);

    let mut legs = vec![&radii, &perron_frobenius];
    legs.extend(closed_form.as_ref());
    let mut deviation: f64 = 0.0;
    for (i, a) in legs.iter().enumerate() {
        for b in &legs[i + 1..] {
            deviation = deviation.max(a.max_relative_deviation(b));
        }
    }
    Ok(VerificationReport {
        type_id,
        coxeter_number: h,
        multisets: Multisets {
            radii,
            perron_frobenius,
            closed_form,
        },
        deviation,
        pass: deviation <= tol,
        tol,
    })
}
