use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use super::SpectraError;
use crate::lie::{Bicoloring, CoxeterElement, Root, RootSystem};

/// One orbit of a Coxeter element on the roots.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Orbit {
    pub representative: Root,
    /// `representative, w(representative), w^2(representative), ...`
    pub members: Vec<Root>,
}

/// `sigma(b) b` for every simple root `b`, in node order.
pub fn orbit_representatives(rs: &RootSystem, coloring: &Bicoloring) -> Vec<Root> {
    rs.simple_roots()
        .iter()
        .enumerate()
        .map(|(i, b)| b.scaled(coloring.sign(i)))
        .collect()
}

/// Partitions the roots into `w`-orbits.
///
/// Orbits are seeded from the signed simple roots of `w`'s coloring in node
/// order, then from any root not yet covered, so when the signed simple roots
/// represent distinct orbits, orbit `i` is the one containing node `i`.
pub fn orbit_decomposition(
    rs: &RootSystem,
    w: &CoxeterElement,
) -> Result<Vec<Orbit>, SpectraError> {
    let h = rs.coxeter_number();
    let mut assigned = vec![false; rs.roots().len()];
    let mut orbits = Vec::with_capacity(rs.rank());
    let seeds = orbit_representatives(rs, w.coloring())
        .into_iter()
        .chain(rs.roots().iter().cloned());
    for seed in seeds {
        let idx = rs.index_of(&seed).ok_or(SpectraError::ForeignRoot)?;
        if assigned[idx] {
            continue;
        }
        let mut members = vec![seed.clone()];
        assigned[idx] = true;
        let mut current = w.apply(&seed);
        while current != seed {
            let i = rs.index_of(&current).ok_or(SpectraError::ForeignRoot)?;
            if assigned[i] || members.len() > h {
                return Err(SpectraError::OrbitSize {
                    expected: h,
                    found: members.len() + 1,
                });
            }
            assigned[i] = true;
            members.push(current.clone());
            current = w.apply(&current);
        }
        if members.len() != h {
            return Err(SpectraError::OrbitSize {
                expected: h,
                found: members.len(),
            });
        }
        orbits.push(Orbit {
            representative: seed,
            members,
        });
    }
    if orbits.len() != rs.rank() {
        return Err(SpectraError::OrbitCount {
            expected: rs.rank(),
            found: orbits.len(),
        });
    }
    Ok(orbits)
}

/// Map from every root to the index of its orbit.
pub fn orbit_lookup(orbits: &[Orbit]) -> HashMap<Root, usize> {
    orbits
        .iter()
        .enumerate()
        .flat_map(|(i, o)| o.members.iter().map(move |r| (r.clone(), i)))
        .collect()
}

/// An unordered orbit triple with roots summing to zero.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct FusingTriple {
    /// Orbit indices, ascending.
    pub orbits: [usize; 3],
    /// `witness[k]` lies in orbit `orbits[k]`; the three sum to zero.
    pub witness: [Root; 3],
}

/// All orbit triples (with repetition) admitting a zero-sum witness.
///
/// Every ordered root pair is tried against a hash of the root set. The
/// witness kept for each triple is the first found scanning pairs in sorted
/// root order, so the output depends only on the root set and its partition.
pub fn fusing_triples(orbits: &[Orbit]) -> Vec<FusingTriple> {
    let lookup = orbit_lookup(orbits);
    let mut roots: Vec<&Root> = lookup.keys().collect();
    roots.sort();
    let mut found: BTreeMap<[usize; 3], [Root; 3]> = BTreeMap::new();
    for a in &roots {
        for b in &roots {
            let c = -&(*a + *b);
            let Some(&oc) = lookup.get(&c) else { continue };
            let mut triple = [
                (lookup[*a], (*a).clone()),
                (lookup[*b], (*b).clone()),
                (oc, c),
            ];
            triple.sort();
            let key = [triple[0].0, triple[1].0, triple[2].0];
            found.entry(key).or_insert_with(|| triple.map(|(_, r)| r));
        }
    }
    found
        .into_iter()
        .map(|(orbits, witness)| FusingTriple { orbits, witness })
        .collect()
}
