use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use super::{LieError, Root};

/// Simply-laced families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    D,
    E,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Family::A => 'A',
            Family::D => 'D',
            Family::E => 'E',
        };
        write!(f, "{c}")
    }
}

/// A simply-laced Cartan type such as `A2`, `D5` or `E8`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimpleTypeId {
    family: Family,
    rank: usize,
}

impl SimpleTypeId {
    pub fn new(family: Family, rank: usize) -> Result<Self, LieError> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::D => rank >= 3,
            Family::E => (6..=8).contains(&rank),
        };
        if !ok {
            return Err(LieError::InvalidRank { family, rank });
        }
        Ok(Self { family, rank })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Edges of the Dynkin diagram (0-based node labels, Bourbaki numbering).
    ///
    /// This is the golden data that `cartan_matrix(simple_roots(t))` must match.
    pub fn dynkin_edges(&self) -> Vec<(usize, usize)> {
        let l = self.rank;
        match self.family {
            Family::A => (0..l.saturating_sub(1)).map(|i| (i, i + 1)).collect(),
            Family::D => {
                let mut e: Vec<_> = (0..l - 2).map(|i| (i, i + 1)).collect();
                e.push((l - 3, l - 1));
                e
            }
            Family::E => {
                let mut e = vec![(0, 2), (1, 3), (2, 3)];
                e.extend((3..l - 1).map(|i| (i, i + 1)));
                e
            }
        }
    }

    /// Dimension of the coordinate space the roots live in.
    pub fn ambient_dim(&self) -> usize {
        match self.family {
            Family::A => self.rank + 1,
            Family::D => self.rank,
            Family::E => 8,
        }
    }

    /// Parses a comma-separated list such as `A2,D4,E8`.
    pub fn parse_list(s: &str) -> Result<Vec<Self>, LieError> {
        s.split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(str::parse)
            .collect()
    }
}

impl fmt::Display for SimpleTypeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

impl FromStr for SimpleTypeId {
    type Err = LieError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || LieError::UnknownType(s.to_string());
        let mut chars = s.chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('D') => Family::D,
            Some('E') => Family::E,
            _ => return Err(bad()),
        };
        let rank: usize = chars.as_str().parse().map_err(|_| bad())?;
        Self::new(family, rank)
    }
}

impl Serialize for SimpleTypeId {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Bourbaki simple roots of E8 in the even coordinate system, doubled.
const E8_SIMPLE_DOUBLED: [[i32; 8]; 8] = [
    [1, -1, -1, -1, -1, -1, -1, 1],
    [2, 2, 0, 0, 0, 0, 0, 0],
    [-2, 2, 0, 0, 0, 0, 0, 0],
    [0, -2, 2, 0, 0, 0, 0, 0],
    [0, 0, -2, 2, 0, 0, 0, 0],
    [0, 0, 0, -2, 2, 0, 0, 0],
    [0, 0, 0, 0, -2, 2, 0, 0],
    [0, 0, 0, 0, 0, -2, 2, 0],
];

fn unit_difference(dim: usize, i: usize, j: usize, sign: i32) -> Root {
    let mut c = vec![0; dim];
    c[i] = 1;
    c[j] = sign;
    Root::from_integers(&c)
}

/// Simple roots in standard coordinates, normalized to squared length 2.
///
/// A_l lives in the sum-zero hyperplane of R^(l+1); D_l in R^l; E6, E7 and E8
/// all live in R^8, with E6 and E7 spanned by the first Bourbaki simple roots
/// of E8.
pub fn simple_roots(type_id: SimpleTypeId) -> Vec<Root> {
    let l = type_id.rank();
    let dim = type_id.ambient_dim();
    match type_id.family() {
        Family::A => (0..l).map(|i| unit_difference(dim, i, i + 1, -1)).collect(),
        Family::D => {
            let mut b: Vec<_> = (0..l - 1)
                .map(|i| unit_difference(dim, i, i + 1, -1))
                .collect();
            b.push(unit_difference(dim, l - 2, l - 1, 1));
            b
        }
        Family::E => E8_SIMPLE_DOUBLED[..l]
            .iter()
            .map(|r| Root::from_doubled(r.to_vec()))
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_bounds() {
        assert!(SimpleTypeId::new(Family::A, 1).is_ok());
        assert!(SimpleTypeId::new(Family::A, 0).is_err());
        assert!(SimpleTypeId::new(Family::D, 2).is_err());
        assert!(SimpleTypeId::new(Family::D, 3).is_ok());
        assert!(SimpleTypeId::new(Family::E, 5).is_err());
        assert!(SimpleTypeId::new(Family::E, 9).is_err());
        assert_eq!(
            "E9".parse::<SimpleTypeId>(),
            Err(LieError::InvalidRank {
                family: Family::E,
                rank: 9
            })
        );
    }

    #[test]
    fn parse_and_display() {
        let ts = SimpleTypeId::parse_list("A2, d4,E8").unwrap();
        let names: Vec<_> = ts.iter().map(ToString::to_string).collect();
        assert_eq!(names, ["A2", "D4", "E8"]);
        assert!("B3".parse::<SimpleTypeId>().is_err());
        assert!("A".parse::<SimpleTypeId>().is_err());
    }

    #[test]
    fn a2_and_d4_coordinates() {
        let a2 = simple_roots("A2".parse().unwrap());
        assert_eq!(
            a2,
            [
                Root::from_integers(&[1, -1, 0]),
                Root::from_integers(&[0, 1, -1])
            ]
        );
        let d4 = simple_roots("D4".parse().unwrap());
        assert_eq!(
            d4,
            [
                Root::from_integers(&[1, -1, 0, 0]),
                Root::from_integers(&[0, 1, -1, 0]),
                Root::from_integers(&[0, 0, 1, -1]),
                Root::from_integers(&[0, 0, 1, 1]),
            ]
        );
    }

    #[test]
    fn e8_simple_roots_are_in_the_lattice() {
        for r in simple_roots("E8".parse().unwrap()) {
            assert_eq!(r.inner4(&r), 8);
            let d = r.doubled();
            let all_even = d.iter().all(|c| c % 2 == 0);
            let all_odd = d.iter().all(|c| c % 2 != 0);
            assert!(all_even || all_odd);
            if all_odd {
                assert_eq!(d.iter().filter(|&&c| c < 0).count() % 2, 0);
            }
        }
    }
}
