use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An integral weight in fundamental-weight coordinates.
///
/// Entry `i` is the pairing `⟨λ, α_i∨⟩`, so `ω_i` is the `i`-th standard basis
/// vector. Simple spherical roots are stored the same way.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(Vec<i64>);

impl Weight {
    pub fn new(coords: Vec<i64>) -> Self {
        Weight(coords)
    }

    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    /// The fundamental weight `ω_{index+1}`.
    pub fn fundamental(rank: usize, index: usize) -> Self {
        let mut coords = vec![0; rank];
        coords[index] = 1;
        Weight(coords)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<i64> {
        self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// All coordinates nonnegative, without reference to a root system.
    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn scaled(&self, k: i64) -> Self {
        Weight(self.0.iter().map(|c| c * k).collect())
    }

    /// Coordinate sum; handy as a size measure when enumerating weights.
    pub fn level(&self) -> i64 {
        self.0.iter().sum()
    }

    pub(crate) fn check_rank(&self, rank: usize) -> Result<()> {
        if self.0.len() == rank {
            Ok(())
        } else {
            Err(Error::Dimension {
                expected: rank,
                got: self.0.len(),
            })
        }
    }

    pub(crate) fn coords_mut(&mut self) -> &mut [i64] {
        &mut self.0
    }
}

impl From<Vec<i64>> for Weight {
    fn from(coords: Vec<i64>) -> Self {
        Weight(coords)
    }
}

impl From<&[i64]> for Weight {
    fn from(coords: &[i64]) -> Self {
        Weight(coords.to_vec())
    }
}

impl<const N: usize> From<[i64; N]> for Weight {
    fn from(coords: [i64; N]) -> Self {
        Weight(coords.to_vec())
    }
}

fn zip_with(a: &Weight, b: &Weight, f: impl Fn(i64, i64) -> i64) -> Weight {
    assert_eq!(a.rank(), b.rank(), "weights of different rank");
    Weight(a.0.iter().zip(&b.0).map(|(&x, &y)| f(x, y)).collect())
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        zip_with(self, rhs, |x, y| x + y)
    }
}

impl Add for Weight {
    type Output = Weight;
    fn add(self, rhs: Weight) -> Weight {
        &self + &rhs
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        zip_with(self, rhs, |x, y| x - y)
    }
}

impl Sub for Weight {
    type Output = Weight;
    fn sub(self, rhs: Weight) -> Weight {
        &self - &rhs
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|c| -c).collect())
    }
}

impl Neg for Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        -&self
    }
}

impl Mul<i64> for &Weight {
    type Output = Weight;
    fn mul(self, k: i64) -> Weight {
        self.scaled(k)
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Parses comma-separated fundamental coordinates, e.g. `"2,0,1"`.
impl FromStr for Weight {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s
            .trim()
            .trim_start_matches(['(', '['])
            .trim_end_matches([')', ']']);
        if s.trim().is_empty() {
            return Ok(Weight(Vec::new()));
        }
        s.split(',')
            .map(|part| {
                part.trim()
                    .parse::<i64>()
                    .map_err(|e| Error::Config(format!("bad weight coordinate {part:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()
            .map(Weight)
    }
}
