//! Hilbert series numerators of monomial ideals, and the numerical
//! invariants they carry.
//!
//! The numerator N with HS(R/I) = N(z)/(1-z)^nvars is computed by splitting
//! on a frequent variable x: N(I) = N(I + (x)) + z N(I : x). It does not
//! depend on the number of ring variables.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::invariants::hvector::HVector;
use crate::oracle::poly::Monomial;

/// Minimal generating set: duplicates and multiples removed, sorted.
pub fn minimalize(gens: &[Monomial]) -> Vec<Monomial> {
    let mut gens = gens.to_vec();
    gens.sort();
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::new();
    // ascending order puts every divisor before its multiples
    for m in gens {
        if !out.iter().any(|g| g.divides(&m)) {
            out.push(m);
        }
    }
    out
}

/// Coefficients of the Hilbert series numerator of R/I for the monomial
/// ideal I the generators span.
pub fn hilbert_numerator(gens: &[Monomial]) -> Vec<BigInt> {
    let mut memo = HashMap::new();
    numerator(minimalize(gens), &mut memo)
}

fn numerator(
    gens: Vec<Monomial>,
    memo: &mut HashMap<Vec<Monomial>, Vec<BigInt>>,
) -> Vec<BigInt> {
    if gens.is_empty() {
        return vec![BigInt::one()];
    }
    if gens[0].is_one() {
        return vec![BigInt::zero()];
    }
    if let Some(v) = memo.get(&gens) {
        return v.clone();
    }
    let result = if pairwise_coprime(&gens) {
        let mut acc = vec![BigInt::one()];
        for g in &gens {
            acc = mul_one_minus_power(&acc, g.degree());
        }
        acc
    } else {
        let v = pivot_variable(&gens);
        let mut plus: Vec<Monomial> = gens
            .iter()
            .filter(|m| !m.contains_var(v))
            .cloned()
            .collect();
        plus.push(Monomial::var(v));
        let colon: Vec<Monomial> = gens
            .iter()
            .map(|m| m.colon_var(v).unwrap_or_else(|| m.clone()))
            .collect();
        let plus_n = numerator(minimalize(&plus), memo);
        let colon_n = numerator(minimalize(&colon), memo);
        add_shifted(&plus_n, &colon_n, 1)
    };
    memo.insert(gens, result.clone());
    result
}

fn pairwise_coprime(gens: &[Monomial]) -> bool {
    for (i, a) in gens.iter().enumerate() {
        for b in &gens[i + 1..] {
            if !a.coprime(b) {
                return false;
            }
        }
    }
    true
}

/// The variable occurring in the most generators, smallest index on ties.
/// With a non-coprime input it occurs in at least two of them.
fn pivot_variable(gens: &[Monomial]) -> usize {
    let mut count: HashMap<usize, usize> = HashMap::new();
    for g in gens {
        for &(v, _) in g.exponents() {
            *count.entry(v).or_insert(0) += 1;
        }
    }
    let (&v, _) = count
        .iter()
        .max_by_key(|&(&v, &c)| (c, std::cmp::Reverse(v)))
        .expect("nonempty generators");
    v
}

/// p * (1 - z^d).
fn mul_one_minus_power(p: &[BigInt], d: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); p.len() + d];
    for (i, c) in p.iter().enumerate() {
        out[i] += c;
        out[i + d] -= c;
    }
    out
}

/// a + z^s b.
fn add_shifted(a: &[BigInt], b: &[BigInt], s: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len().max(b.len() + s)];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i + s] += c;
    }
    out
}

/// Height, dimension, multiplicity, h-vector, and regularity of a graded
/// Cohen-Macaulay quotient, read off its Hilbert series numerator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientInvariants {
    pub height: usize,
    pub dim: usize,
    pub multiplicity: BigInt,
    pub hvector: HVector,
    pub regularity: usize,
}

/// Divides the numerator by (1-z) until the value at 1 is nonzero; the
/// number of divisions is the height, the remaining coefficients are the
/// h-vector.
pub fn quotient_invariants(numerator: &[BigInt], nvars: usize) -> Result<QuotientInvariants> {
    let mut q: Vec<BigInt> = numerator.to_vec();
    while q.last().is_some_and(|c| c.is_zero()) {
        q.pop();
    }
    if q.is_empty() {
        return Err(Error::bad_params(
            "zero numerator: the unit ideal has no quotient invariants",
        ));
    }
    let mut height = 0;
    while q.iter().sum::<BigInt>().is_zero() {
        // exact division by (1-z): prefix sums, the last of which is zero
        let mut acc = BigInt::zero();
        let mut next = Vec::with_capacity(q.len() - 1);
        for c in &q[..q.len() - 1] {
            acc += c;
            next.push(acc.clone());
        }
        q = next;
        while q.last().is_some_and(|c| c.is_zero()) {
            q.pop();
        }
        height += 1;
    }
    if height > nvars {
        return Err(Error::bad_params(format!(
            "numerator divisible by (1-z)^{height} in {nvars} variables"
        )));
    }
    let mut coeffs = Vec::with_capacity(q.len());
    for (index, c) in q.iter().enumerate() {
        if c.is_negative() {
            return Err(Error::NegativeHEntry {
                index,
                value: c.to_i64().unwrap_or(i64::MIN),
            });
        }
        coeffs.push(
            c.to_i64()
                .ok_or_else(|| Error::bad_params("h-vector entry exceeds i64"))?,
        );
    }
    let hvector = HVector::new(coeffs);
    Ok(QuotientInvariants {
        height,
        dim: nvars - height,
        multiplicity: hvector.sum(),
        regularity: q.len(),
        hvector,
    })
}

/// Hilbert function of R/I at m, from the numerator:
/// sum_k N_k binom(m - k + nvars - 1, nvars - 1).
pub fn hilbert_function(numerator: &[BigInt], nvars: usize, m: usize) -> BigInt {
    let mut acc = BigInt::zero();
    for (k, c) in numerator.iter().enumerate().take(m + 1) {
        acc += c * binomial(m - k + nvars - 1, nvars - 1);
    }
    acc
}

fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k.min(n - k) {
        num *= BigInt::from(n - i);
        den *= BigInt::from(i + 1);
    }
    num / den
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn bigs(vs: &[i64]) -> Vec<BigInt> {
        vs.iter().map(|&v| BigInt::from(v)).collect()
    }

    fn mono(vs: &[(usize, u32)]) -> Monomial {
        Monomial::from_pairs(vs.iter().copied())
    }

    #[test]
    fn minimal_generators() {
        let gens = [
            mono(&[(0, 1)]),
            mono(&[(0, 2)]),
            mono(&[(0, 1), (1, 1)]),
            mono(&[(1, 2)]),
        ];
        // ascending order: the linear generator sorts first
        assert_eq!(
            minimalize(&gens),
            vec![mono(&[(0, 1)]), mono(&[(1, 2)])]
        );
    }

    #[test]
    fn coprime_numerators() {
        assert_eq!(hilbert_numerator(&[]), bigs(&[1]));
        assert_eq!(hilbert_numerator(&[mono(&[(0, 1)])]), bigs(&[1, -1]));
        assert_eq!(
            hilbert_numerator(&[mono(&[(0, 1), (1, 1)]), mono(&[(2, 2)])]),
            bigs(&[1, 0, -2, 0, 1])
        );
    }

    #[test]
    fn split_numerator() {
        // (x^2, xy): splitting on x gives (x) and (x, y)
        let n = hilbert_numerator(&[mono(&[(0, 2)]), mono(&[(0, 1), (1, 1)])]);
        assert_eq!(n, bigs(&[1, 0, -2, 1]));
    }

    #[test]
    fn invariants_from_numerator() {
        let q = quotient_invariants(&bigs(&[1, 0, -5, 5, 0, -1]), 10).unwrap();
        assert_eq!(q.height, 3);
        assert_eq!(q.dim, 7);
        assert_eq!(q.multiplicity, big(5));
        assert_eq!(q.hvector.coeffs(), &[1, 3, 1]);
        assert_eq!(q.regularity, 3);

        let zero_ideal = quotient_invariants(&bigs(&[1]), 4).unwrap();
        assert_eq!(zero_ideal.height, 0);
        assert_eq!(zero_ideal.dim, 4);
        assert_eq!(zero_ideal.multiplicity, big(1));
        assert_eq!(zero_ideal.hvector.coeffs(), &[1]);

        assert!(matches!(
            quotient_invariants(&bigs(&[1, -2, 2, -1]), 5),
            Err(Error::NegativeHEntry { index: 1, value: -1 })
        ));
        assert!(quotient_invariants(&bigs(&[0, 0]), 3).is_err());
    }

    #[test]
    fn hilbert_function_values() {
        // zero ideal in 3 variables
        let n = bigs(&[1]);
        let hf: Vec<BigInt> = (0..4).map(|m| hilbert_function(&n, 3, m)).collect();
        assert_eq!(hf, bigs(&[1, 3, 6, 10]));
        // one linear form in 2 variables
        let n = bigs(&[1, -1]);
        let hf: Vec<BigInt> = (0..3).map(|m| hilbert_function(&n, 2, m)).collect();
        assert_eq!(hf, bigs(&[1, 1, 1]));
    }
}
