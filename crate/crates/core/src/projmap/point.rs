use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::MapError;
use crate::algebra::Rational;

/// Point of projective space; equality is up to a nonzero scalar.
#[derive(Clone, Debug)]
pub struct ProjectivePoint {
    coords: Vec<Rational>,
}

impl ProjectivePoint {
    pub fn new(coords: Vec<Rational>) -> Result<Self, MapError> {
        if coords.iter().all(Zero::is_zero) {
            return Err(MapError::ZeroPoint);
        }
        Ok(ProjectivePoint { coords })
    }

    pub fn from_ints(coords: &[i64]) -> Result<Self, MapError> {
        Self::new(coords.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    /// Integer representative with coprime entries and first nonzero entry positive.
    pub fn normalized(&self) -> Vec<BigInt> {
        let den = self
            .coords
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self
            .coords
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        let sign = ints
            .iter()
            .find(|c| !c.is_zero())
            .map(|c| if c.is_negative() { -BigInt::one() } else { BigInt::one() })
            .unwrap_or_else(BigInt::one);
        ints.into_iter().map(|c| c / &g * &sign).collect()
    }
}

impl PartialEq for ProjectivePoint {
    fn eq(&self, other: &Self) -> bool {
        if self.coords.len() != other.coords.len() {
            return false;
        }
        let n = self.coords.len();
        (0..n).all(|i| {
            (i + 1..n).all(|j| {
                &self.coords[i] * &other.coords[j] == &self.coords[j] * &other.coords[i]
            })
        })
    }
}

impl Eq for ProjectivePoint {}

impl fmt::Display for ProjectivePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.normalized().iter().enumerate() {
            if i > 0 {
                write!(f, ":")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}
