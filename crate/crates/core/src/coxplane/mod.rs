//! Coxeter-plane projection of a root system and the circles it lands on.

mod emit;

use std::f64::consts::TAU;

use nalgebra::{DMatrix, DVector};
use serde::Serialize;
use thiserror::Error;

pub use emit::{emit_csv, emit_svg, SvgStyle};

use crate::lie::{bicolor, coxeter_element, CoxeterElement, Root, RootSystem, SimpleTypeId};
use crate::spectra::{orbit_decomposition, MassSpectrum, Orbit};

/// Singular values below this count as kernel directions of `m(w)`.
pub const KERNEL_THRESHOLD: f64 = 1e-8;
/// Allowed spread of radii within one orbit, relative to the largest.
pub const RADIUS_SPREAD_TOL: f64 = 1e-9;
/// Relative gap below which two circles are drawn and counted as one.
pub const CIRCLE_CLUSTER_TOL: f64 = 1e-6;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum PlaneError {
    #[error("Coxeter plane needs rank >= 2, got {0}")]
    RankTooSmall(usize),
    #[error("kernel of m(w) has dimension {0}, expected 2")]
    KernelDimension(usize),
    #[error("anchor root projects to zero in the Coxeter plane")]
    DegenerateAnchor,
    #[error("w does not act as a rotation on the plane (defect {0:e})")]
    NotARotation(f64),
    #[error("orbit {orbit} has radius spread {spread:e}")]
    RadiusSpread { orbit: usize, spread: f64 },
    #[error("no points to process")]
    NoPoints,
}

/// Orthonormal basis `(u, v)` of the Coxeter plane, in intrinsic coordinates.
///
/// The frame is oriented so that `w u = cos t u + sin t v` with `t = 2 pi / h`,
/// and `u` points along the projection of orbit 0's representative.
#[derive(Clone, Debug)]
pub struct PlaneBasis {
    pub u: DVector<f64>,
    pub v: DVector<f64>,
}

impl PlaneBasis {
    pub fn coords(&self, x: &DVector<f64>) -> (f64, f64) {
        (x.dot(&self.u), x.dot(&self.v))
    }

    /// Matrix of `w` restricted to the plane in the `(u, v)` frame.
    pub fn restricted(&self, w: &CoxeterElement) -> [[f64; 2]; 2] {
        let wu = w.matrix() * &self.u;
        let wv = w.matrix() * &self.v;
        [
            [self.u.dot(&wu), self.u.dot(&wv)],
            [self.v.dot(&wu), self.v.dot(&wv)],
        ]
    }
}

/// Kernel of `w^2 - 2 cos(2 pi / h) w + I`, oriented as described on [`PlaneBasis`].
pub fn coxeter_plane(w: &CoxeterElement, h: usize) -> Result<PlaneBasis, PlaneError> {
    let l = w.rank();
    if l < 2 {
        return Err(PlaneError::RankTooSmall(l));
    }
    let theta = TAU / h as f64;
    let (c, s) = (theta.cos(), theta.sin());
    let m = w.matrix();
    let poly = m * m - m * (2.0 * c) + DMatrix::identity(l, l);
    let svd = poly.svd(false, true);
    let v_t = svd.v_t.expect("requested right singular vectors");
    let kernel: Vec<DVector<f64>> = svd
        .singular_values
        .iter()
        .enumerate()
        .filter(|(_, &sv)| sv <= KERNEL_THRESHOLD)
        .map(|(i, _)| v_t.row(i).transpose())
        .collect();
    if kernel.len() != 2 {
        return Err(PlaneError::KernelDimension(kernel.len()));
    }

    let anchor = w.signed_simple_root(0);
    let mut u = kernel
        .iter()
        .map(|k| k * k.dot(&anchor))
        .sum::<DVector<f64>>();
    let norm = u.norm();
    if norm < 1e-9 {
        return Err(PlaneError::DegenerateAnchor);
    }
    u /= norm;
    let v = (m * &u - &u * c) / s;
    let defect = (v.norm() - 1.0).abs().max(u.dot(&v).abs());
    if defect > 1e-8 {
        return Err(PlaneError::NotARotation(defect));
    }
    Ok(PlaneBasis { u, v })
}

/// A root's image in the Coxeter plane.
#[derive(Clone, Debug, Serialize)]
pub struct ProjectedRoot {
    pub x: f64,
    pub y: f64,
    pub orbit: usize,
    pub root: Root,
}

impl ProjectedRoot {
    pub fn radius(&self) -> f64 {
        self.x.hypot(self.y)
    }

    /// Polar angle in `[0, 2 pi)`.
    pub fn angle(&self) -> f64 {
        let a = self.y.atan2(self.x).rem_euclid(TAU);
        if TAU - a < 1e-12 {
            0.0
        } else {
            a
        }
    }
}

/// Projects every orbit member, keeping the orbit label.
pub fn project(rs: &RootSystem, basis: &PlaneBasis, orbits: &[Orbit]) -> Vec<ProjectedRoot> {
    orbits
        .iter()
        .enumerate()
        .flat_map(|(i, o)| {
            o.members.iter().map(move |r| {
                let (x, y) = basis.coords(&rs.intrinsic(r));
                ProjectedRoot {
                    x,
                    y,
                    orbit: i,
                    root: r.clone(),
                }
            })
        })
        .collect()
}

/// Mean radius of each orbit, indexed by orbit label.
///
/// Fails if any orbit's radii spread by more than [`RADIUS_SPREAD_TOL`] of its largest.
pub fn orbit_radii(points: &[ProjectedRoot]) -> Result<Vec<f64>, PlaneError> {
    let count = points
        .iter()
        .map(|p| p.orbit + 1)
        .max()
        .ok_or(PlaneError::NoPoints)?;
    let mut groups: Vec<Vec<f64>> = vec![Vec::new(); count];
    for p in points {
        groups[p.orbit].push(p.radius());
    }
    groups
        .iter()
        .enumerate()
        .filter(|(_, g)| !g.is_empty())
        .map(|(orbit, g)| {
            let max = g.iter().copied().fold(f64::MIN, f64::max);
            let min = g.iter().copied().fold(f64::MAX, f64::min);
            if max - min > RADIUS_SPREAD_TOL * max {
                return Err(PlaneError::RadiusSpread {
                    orbit,
                    spread: max - min,
                });
            }
            Ok(g.iter().sum::<f64>() / g.len() as f64)
        })
        .collect()
}

/// Radii of the orbit circles as a normalized multiset.
pub fn circle_radii(points: &[ProjectedRoot]) -> Result<MassSpectrum, crate::Error> {
    let radii = orbit_radii(points)?;
    Ok(MassSpectrum::normalized(radii)?)
}

/// Number of visually distinct circles, merging radii within [`CIRCLE_CLUSTER_TOL`].
pub fn distinct_circles(radii: &[f64]) -> usize {
    let mut r = radii.to_vec();
    r.sort_by(f64::total_cmp);
    r.windows(2)
        .filter(|w| w[1] - w[0] > CIRCLE_CLUSTER_TOL * w[1])
        .count()
        + usize::from(!r.is_empty())
}

/// A root system projected onto the Coxeter plane of its bipartite Coxeter element.
#[derive(Clone, Debug)]
pub struct Projection {
    pub type_id: SimpleTypeId,
    pub coxeter_number: usize,
    pub points: Vec<ProjectedRoot>,
    /// Mean radius of each orbit, indexed by orbit label.
    pub orbit_radii: Vec<f64>,
}

impl Projection {
    pub fn orbit_count(&self) -> usize {
        self.orbit_radii.len()
    }

    pub fn circle_count(&self) -> usize {
        distinct_circles(&self.orbit_radii)
    }
}

pub fn coxeter_projection(type_id: SimpleTypeId) -> crate::Result<Projection> {
    if type_id.rank() < 2 {
        return Err(PlaneError::RankTooSmall(type_id.rank()).into());
    }
    let rs = RootSystem::new(type_id)?;
    let h = rs.coxeter_number();
    let w = coxeter_element(&rs, &bicolor(rs.cartan())?);
    let orbits = orbit_decomposition(&rs, &w)?;
    let basis = coxeter_plane(&w, h)?;
    let points = project(&rs, &basis, &orbits);
    let orbit_radii = orbit_radii(&points)?;
    Ok(Projection {
        type_id,
        coxeter_number: h,
        points,
        orbit_radii,
    })
}
