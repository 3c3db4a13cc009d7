use std::fmt;
use std::ops::{Add, Neg};

use serde::{Serialize, Serializer};

use super::LieError;

/// A root vector with coordinates that are multiples of one half.
///
/// Coordinates are stored doubled (`doubled[i] == 2 * x_i`) so every root of a
/// simply-laced system is held exactly as small integers, and set membership
/// never involves floating point.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root {
    doubled: Vec<i32>,
}

impl Root {
    pub fn from_doubled(doubled: Vec<i32>) -> Self {
        Self { doubled }
    }

    /// Builds a root from integer coordinates.
    pub fn from_integers(coords: &[i32]) -> Self {
        Self {
            doubled: coords.iter().map(|c| 2 * c).collect(),
        }
    }

    pub fn doubled(&self) -> &[i32] {
        &self.doubled
    }

    pub fn dim(&self) -> usize {
        self.doubled.len()
    }

    pub fn is_zero(&self) -> bool {
        self.doubled.iter().all(|&c| c == 0)
    }

    /// Four times the Euclidean inner product, exact.
    pub fn inner4(&self, other: &Root) -> i64 {
        debug_assert_eq!(self.dim(), other.dim());
        self.doubled
            .iter()
            .zip(&other.doubled)
            .map(|(&a, &b)| a as i64 * b as i64)
            .sum()
    }

    pub fn inner(&self, other: &Root) -> f64 {
        self.inner4(other) as f64 / 4.0
    }

    pub fn norm_sq(&self) -> f64 {
        self.inner(self)
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.doubled.iter().map(|&c| c as f64 / 2.0).collect()
    }

    /// Reflection in the hyperplane orthogonal to `beta`:
    /// `self - (2 (self, beta) / (beta, beta)) beta`.
    ///
    /// Fails when the coefficient is not an integer, which means `beta` and
    /// `self` do not belong to a common crystallographic root system.
    pub fn reflect(&self, beta: &Root) -> Result<Root, LieError> {
        let num = 2 * self.inner4(beta);
        let den = beta.inner4(beta);
        if den == 0 || num % den != 0 {
            return Err(LieError::NonCrystallographic);
        }
        let k = (num / den) as i32;
        Ok(Root {
            doubled: self
                .doubled
                .iter()
                .zip(&beta.doubled)
                .map(|(&r, &b)| r - k * b)
                .collect(),
        })
    }

    pub fn scaled(&self, sign: i32) -> Root {
        Root {
            doubled: self.doubled.iter().map(|&c| sign * c).collect(),
        }
    }
}

impl Neg for &Root {
    type Output = Root;

    fn neg(self) -> Root {
        self.scaled(-1)
    }
}

impl Add for &Root {
    type Output = Root;

    fn add(self, rhs: &Root) -> Root {
        Root {
            doubled: self
                .doubled
                .iter()
                .zip(&rhs.doubled)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, &c) in self.doubled.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            if c % 2 == 0 {
                write!(f, "{}", c / 2)?;
            } else {
                write!(f, "{c}/2")?;
            }
        }
        write!(f, ")")
    }
}

impl Serialize for Root {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.to_f64().serialize(serializer)
    }
}
