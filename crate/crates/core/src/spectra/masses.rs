use std::f64::consts::PI;

use serde::Serialize;

use super::SpectraError;

/// A multiset of positive reals, sorted ascending and scaled so the smallest is 1.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(transparent)]
pub struct MassSpectrum {
    values: Vec<f64>,
}

impl MassSpectrum {
    /// Sorts and normalizes by the smallest entry. Repeated values are kept.
    pub fn normalized(raw: impl IntoIterator<Item = f64>) -> Result<Self, SpectraError> {
        let mut values: Vec<f64> = raw.into_iter().collect();
        if values.is_empty() {
            return Err(SpectraError::EmptySpectrum);
        }
        if let Some(&bad) = values.iter().find(|v| !(v.is_finite() && **v > 0.0)) {
            return Err(SpectraError::NonPositiveMass(bad));
        }
        values.sort_by(f64::total_cmp);
        let min = values[0];
        values.iter_mut().for_each(|v| *v /= min);
        Ok(Self { values })
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Largest elementwise relative difference; infinite when the sizes differ.
    pub fn max_relative_deviation(&self, other: &MassSpectrum) -> f64 {
        if self.len() != other.len() {
            return f64::INFINITY;
        }
        self.values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| (a - b).abs() / a.abs().max(b.abs()))
            .fold(0.0, f64::max)
    }
}

/// Closed-form ratios `m_k / m_1`, k = 1..8, of the magnetically perturbed
/// critical Ising field theory.
pub fn zamolodchikov_ratios() -> [f64; 8] {
    let c5 = (PI / 5.0).cos();
    let c30 = (PI / 30.0).cos();
    let c7_30 = (7.0 * PI / 30.0).cos();
    let c2_15 = (2.0 * PI / 15.0).cos();
    [
        1.0,
        2.0 * c5,
        2.0 * c30,
        // m_4 = 2 m_2 cos(7pi/30).
        4.0 * c5 * c7_30,
        4.0 * c5 * c2_15,
        4.0 * c5 * c30,
        8.0 * c5 * c5 * c7_30,
        8.0 * c5 * c5 * c2_15,
    ]
}

/// Printed three-decimal values of the closed forms, `m_2/m_1` through `m_8/m_1`.
pub const TABLE_DECIMALS: [f64; 7] = [1.618, 1.989, 2.405, 2.956, 3.218, 3.891, 4.783];

/// Human-readable closed forms, indexed like [`zamolodchikov_ratios`].
pub const CLOSED_FORMS: [&str; 8] = [
    "1",
    "2 cos(pi/5)",
    "2 cos(pi/30)",
    "4 cos(pi/5) cos(7pi/30)",
    "4 cos(pi/5) cos(2pi/15)",
    "4 cos(pi/5) cos(pi/30)",
    "8 cos(pi/5)^2 cos(7pi/30)",
    "8 cos(pi/5)^2 cos(2pi/15)",
];

pub fn zamolodchikov_masses() -> MassSpectrum {
    MassSpectrum::normalized(zamolodchikov_ratios()).expect("closed forms are positive")
}

/// Mass label (1-based) carried by each E8 Dynkin node, Bourbaki numbering.
pub const E8_NODE_MASS: [usize; 8] = [2, 4, 6, 8, 7, 5, 3, 1];

/// Reorders a per-node E8 vector into mass order and scales so `m_1 = 1`.
pub fn e8_masses_from_nodes(per_node: &[f64]) -> [f64; 8] {
    assert_eq!(per_node.len(), 8);
    let mut out = [0.0; 8];
    for (node, &label) in E8_NODE_MASS.iter().enumerate() {
        out[label - 1] = per_node[node];
    }
    let m1 = out[0];
    out.iter_mut().for_each(|m| *m /= m1);
    out
}
