//! h-vectors of graded quotients and their shape predicates.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

/// Coefficients h(0..s) of an h-polynomial, trailing entry nonzero.
/// Sum of entries equals the multiplicity of the quotient.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct HVector(Vec<i64>);

impl HVector {
    /// Trims trailing zeros; the zero vector collapses to a single 0 entry.
    pub fn new(mut coeffs: Vec<i64>) -> Self {
        while coeffs.len() > 1 && *coeffs.last().unwrap() == 0 {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(0);
        }
        HVector(coeffs)
    }

    pub fn one() -> Self {
        HVector(vec![1])
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len() - 1
    }

    pub fn get(&self, m: usize) -> i64 {
        self.0.get(m).copied().unwrap_or(0)
    }

    pub fn sum(&self) -> BigInt {
        self.0.iter().map(|&c| BigInt::from(c)).sum()
    }

    /// Multiplication by z^s.
    pub fn shifted(&self, s: usize) -> HVector {
        let mut coeffs = vec![0; s];
        coeffs.extend_from_slice(&self.0);
        HVector::new(coeffs)
    }

    pub fn add(&self, other: &HVector) -> HVector {
        let len = self.0.len().max(other.0.len());
        let coeffs = (0..len)
            .map(|m| {
                self.get(m)
                    .checked_add(other.get(m))
                    .expect("h-vector entry overflow")
            })
            .collect();
        HVector::new(coeffs)
    }
}

/// First difference of a Hilbert function, with H(m) = 0 for m < 0.
pub fn delta(hf: &[i64]) -> Vec<i64> {
    (0..hf.len())
        .map(|m| if m == 0 { hf[0] } else { hf[m] - hf[m - 1] })
        .collect()
}

/// Once the entries strictly decrease they must keep strictly decreasing.
pub fn is_decreasing_type(h: &HVector) -> bool {
    let c = h.coeffs();
    let mut decreasing = false;
    for w in c.windows(2) {
        if decreasing && w[0] <= w[1] {
            return false;
        }
        if w[0] > w[1] {
            decreasing = true;
        }
    }
    true
}

/// Single peak over h(1..s); h(0) is excluded from the comparison.
pub fn is_unimodal(h: &HVector) -> bool {
    let c = &h.coeffs()[1.min(h.coeffs().len())..];
    let mut falling = false;
    for w in c.windows(2) {
        if w[0] > w[1] {
            falling = true;
        } else if falling && w[0] < w[1] {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trims_trailing_zeros() {
        let h = HVector::new(vec![1, 3, 1, 0, 0]);
        assert_eq!(h.coeffs(), &[1, 3, 1]);
        assert_eq!(h.degree(), 2);
        assert_eq!(h.sum(), 5.into());
    }

    #[test]
    fn shift_and_add() {
        let h = HVector::new(vec![1, 1]);
        let sum = h.shifted(1).add(&HVector::new(vec![1, 2, 1]));
        assert_eq!(sum.coeffs(), &[1, 3, 2]);
    }

    #[test]
    fn delta_examples() {
        assert_eq!(delta(&[1, 1, 1, 1]), vec![1, 0, 0, 0]);
        assert_eq!(delta(&[1, 2, 3, 4]), vec![1, 1, 1, 1]);
    }

    #[test]
    fn shape_predicates() {
        let peak = HVector::new(vec![1, 3, 1]);
        assert!(is_decreasing_type(&peak));
        assert!(is_unimodal(&peak));

        let wobble = HVector::new(vec![1, 2, 1, 2]);
        assert!(!is_decreasing_type(&wobble));
        assert!(!is_unimodal(&wobble));

        // plateau after a strict decrease is not of decreasing type
        let plateau = HVector::new(vec![1, 3, 2, 2]);
        assert!(!is_decreasing_type(&plateau));
        assert!(is_unimodal(&plateau));
    }
}
