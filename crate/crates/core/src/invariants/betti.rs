//! Graded Betti numbers for the families with a known minimal resolution.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};

/// Graded Betti numbers beta_{i,j} of a quotient ring, keyed by
/// (homological degree, internal degree). Zero entries are not stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiTable {
    entries: BTreeMap<(usize, usize), BigInt>,
}

impl BettiTable {
    pub fn new(entries: impl IntoIterator<Item = (usize, usize, BigInt)>) -> Self {
        let entries = entries
            .into_iter()
            .filter(|(_, _, v)| !v.is_zero())
            .map(|(i, j, v)| ((i, j), v))
            .collect();
        BettiTable { entries }
    }

    pub fn entry(&self, i: usize, j: usize) -> BigInt {
        self.entries.get(&(i, j)).cloned().unwrap_or_default()
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &BigInt)> {
        self.entries.iter().map(|(&(i, j), v)| (i, j, v))
    }

    pub fn projective_dimension(&self) -> usize {
        self.entries.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }

    /// Regularity of the resolved ideal: one past the largest degree excess
    /// j - i over the quotient's resolution.
    pub fn regularity(&self) -> usize {
        self.entries.keys().map(|&(i, j)| j - i).max().unwrap_or(0) + 1
    }

    /// Alternating-sign numerator sum_{i,j} (-1)^i beta_{i,j} z^j of the
    /// quotient's Hilbert series over the full ring.
    pub fn numerator(&self) -> Vec<BigInt> {
        let deg = self.entries.keys().map(|&(_, j)| j).max().unwrap_or(0);
        let mut out = vec![BigInt::zero(); deg + 1];
        for (&(i, j), v) in &self.entries {
            if i % 2 == 0 {
                out[j] += v;
            } else {
                out[j] -= v;
            }
        }
        out
    }
}

/// Betti table of the submaximal pfaffian quotient: the 1 - (2t+1) - (2t+1)
/// - 1 self-dual resolution with the last twist in degree 2t+1.
pub fn betti_mt(t: usize) -> Result<BettiTable> {
    if t < 1 {
        return Err(Error::bad_params("t must be at least 1"));
    }
    let w = BigInt::from(2 * t + 1);
    Ok(BettiTable::new([
        (0, 0, BigInt::from(1)),
        (1, t, w.clone()),
        (2, t + 1, w),
        (3, 2 * t + 1, BigInt::from(1)),
    ]))
}
