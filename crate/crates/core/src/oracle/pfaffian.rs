//! Pfaffians of principal skew submatrices, and the pfaffian generators of
//! a ladder ideal.

use std::collections::BTreeSet;

use itertools::Itertools;
use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};
use crate::ladder::LadderIdealSpec;
use crate::oracle::poly::{Monomial, Polynomial, Ring};

/// Pfaffian of the skew submatrix on the given rows (and columns). The rows
/// must be distinct, within the ring, and even in number; the empty set
/// gives the constant 1.
pub fn pfaffian(ring: &Ring, rows: &[usize]) -> Result<Polynomial> {
    let mut rows = rows.to_vec();
    rows.sort_unstable();
    if rows.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::bad_params("pfaffian rows must be distinct"));
    }
    if rows.len() % 2 != 0 {
        return Err(Error::OddSubset { len: rows.len() });
    }
    for &r in &rows {
        if r < 1 || r > ring.n() {
            return Err(Error::IndexOutOfRange { idx: r, n: ring.n() });
        }
    }
    Ok(Polynomial::from_terms(expand(ring, &rows)?))
}

/// Laplace-style expansion along the first row: matching it with the row in
/// (0-based) position p carries sign (-1)^(p+1).
fn expand(ring: &Ring, rows: &[usize]) -> Result<Vec<(BigRational, Monomial)>> {
    if rows.is_empty() {
        return Ok(vec![(BigRational::one(), Monomial::one())]);
    }
    let i1 = rows[0];
    let mut out = Vec::new();
    for (p, &ij) in rows.iter().enumerate().skip(1) {
        let x = Monomial::var(ring.var(i1, ij)?);
        let rest: Vec<usize> = rows[1..]
            .iter()
            .copied()
            .filter(|&r| r != ij)
            .collect();
        for (c, m) in expand(ring, &rest)? {
            let c = if p % 2 == 1 { c } else { -c };
            out.push((c, m.mul(&x)));
        }
    }
    Ok(out)
}

/// Generators of the ladder pfaffian ideal: for each corner block, the
/// pfaffians of all 2t-subsets of its rows, deduplicated across blocks.
/// Blocks too small for their size contribute nothing. Fails once the
/// number of distinct subsets passes the cap.
pub fn generators(
    ring: &Ring,
    spec: &LadderIdealSpec,
    cap: usize,
) -> Result<Vec<Polynomial>> {
    let mut subsets: BTreeSet<Vec<usize>> = BTreeSet::new();
    for (c, &t) in spec.corners().iter().zip(spec.t()) {
        for subset in (c.a..=c.b).combinations(2 * t) {
            subsets.insert(subset);
            if subsets.len() > cap {
                return Err(Error::TooManyGenerators { cap });
            }
        }
    }
    subsets
        .into_iter()
        .map(|rows| pfaffian(ring, &rows))
        .collect()
}
