//! Closed and recursive multiplicity formulas for the named families.
//!
//! All arithmetic is exact; products of rationals are accumulated as one
//! numerator and one denominator and divided once at the end.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::invariants::engine::mult_generic;
use crate::invariants::hvector::HVector;
use crate::ladder::LadderIdealSpec;

/// Degree of the locus of n x n skew-symmetric matrices of rank below 2t:
/// the product of (2(t-1)+i+j)/(i+j) over 1 <= i <= j <= n-2t+1.
pub fn mult_krattenthaler(t: usize, n: usize) -> Result<BigInt> {
    if t < 1 || 2 * t > n {
        return Err(Error::bad_params(format!(
            "need 1 <= 2t <= n, got t={t}, n={n}"
        )));
    }
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 1..=(n - 2 * t + 1) {
        for j in i..=(n - 2 * t + 1) {
            num *= BigInt::from(2 * (t - 1) + i + j);
            den *= BigInt::from(i + j);
        }
    }
    let (q, r) = num.div_rem(&den);
    assert!(r.is_zero(), "rank locus degree must be an integer");
    Ok(q)
}

/// Sum of the first t squares; the degree of the submaximal pfaffian locus
/// of a (2t+1) x (2t+1) skew matrix.
pub fn mult_mt(t: usize) -> Result<BigInt> {
    if t < 1 {
        return Err(Error::bad_params("t must be at least 1"));
    }
    Ok((1..=t).map(|s| BigInt::from(s * s)).sum())
}

/// Degree of the notched-square ideal, via the biliaison difference
/// identity: the full square value at n minus the value one size down
/// at n-2.
pub fn mult_ltn(t: usize, n: usize) -> Result<BigInt> {
    if t < 1 || 2 * t > n - 1 {
        return Err(Error::bad_params(format!(
            "need 2t <= n-1, got t={t}, n={n}"
        )));
    }
    if t == 1 {
        // generated by indeterminates
        return Ok(BigInt::one());
    }
    Ok(mult_krattenthaler(t, n)? - mult_krattenthaler(t - 1, n - 2)?)
}

/// Closed product form for the notched-square degree. Evaluates at (t,n) to
/// the same number as `mult_ltn(t, n+1)`; tests pin that correspondence.
pub fn closed_form_ltn(t: usize, n: usize) -> Result<BigInt> {
    if t < 2 || 2 * t > n {
        return Err(Error::bad_params(format!(
            "need t >= 2 and 2t <= n, got t={t}, n={n}"
        )));
    }
    // (n-2t+2)!/(2n-4t+4)! * [ (2n-2t+2)!/n! - (n-1)!/(2t-3)! ] * rank-locus product
    let bracket = falling(2 * n - 2 * t + 2, n) - falling(n - 1, 2 * t - 3);
    let mut num = bracket;
    let mut den = rising_ratio(2 * n - 4 * t + 4, n - 2 * t + 2);
    for i in 1..=(n - 2 * t + 1) {
        for j in i..=(n - 2 * t + 1) {
            num *= BigInt::from(2 * (t - 1) + i + j);
            den *= BigInt::from(i + j);
        }
    }
    let (q, r) = num.div_rem(&den);
    assert!(r.is_zero(), "closed form must be an integer");
    Ok(q)
}

/// m!/k! for m >= k.
fn falling(m: usize, k: usize) -> BigInt {
    ((k + 1)..=m).map(BigInt::from).product()
}

/// m!/k! as the denominator-side helper: returns m!/k! given m >= k.
fn rising_ratio(m: usize, k: usize) -> BigInt {
    falling(m, k)
}

fn two_s_pyramid(s: usize) -> BigInt {
    // 2s(1 + 2^2 + ... + s^2) - s^3
    let sq: BigInt = (1..=s).map(|r| BigInt::from(r * r)).sum();
    BigInt::from(2 * s) * sq - BigInt::from(s * s * s)
}

/// Degree of the two-step staircase: 1 + sum_{s=2}^t (2s(1+..+s^2) - s^3).
pub fn mult_lt2(t: usize) -> Result<BigInt> {
    if t < 1 {
        return Err(Error::bad_params("t must be at least 1"));
    }
    Ok(BigInt::one() + (2..=t).map(two_s_pyramid).sum::<BigInt>())
}

/// Degree of the interlocked two-block family; t = 1 degenerates to
/// indeterminates.
pub fn mult_nt(t: usize) -> Result<BigInt> {
    if t < 1 {
        return Err(Error::bad_params("t must be at least 1"));
    }
    if t == 1 {
        return Ok(BigInt::one());
    }
    let head: BigInt = (2..t).map(two_s_pyramid).sum();
    let tail: BigInt =
        BigInt::from(t) * (1..t).map(|r| BigInt::from(r * r)).sum::<BigInt>();
    Ok(BigInt::one() + head + tail)
}

/// Degree of the even-square family: t + double sum of the staircase terms.
pub fn mult_smt(t: usize) -> Result<BigInt> {
    if t < 1 {
        return Err(Error::bad_params("t must be at least 1"));
    }
    let mut acc = BigInt::from(t);
    for r in 2..=t {
        for s in 2..=r {
            acc += two_s_pyramid(s);
        }
    }
    Ok(acc)
}

/// Degree of the k-step staircase, by its own recursion with memoization.
pub fn mult_ltk(t: usize, k: usize) -> Result<BigInt> {
    if t < 1 || k < 1 {
        return Err(Error::bad_params("t and k must be at least 1"));
    }
    let mut memo = HashMap::new();
    Ok(ltk(t, k, &mut memo))
}

fn ltk(t: usize, k: usize, memo: &mut HashMap<(usize, usize), BigInt>) -> BigInt {
    if let Some(v) = memo.get(&(t, k)) {
        return v.clone();
    }
    let v = if t == 1 {
        BigInt::one()
    } else if k == 1 {
        mult_mt(t).unwrap()
    } else if k == 2 {
        mult_lt2(t).unwrap()
    } else {
        let mut acc = ltk(t - 1, k, memo)
            + BigInt::from(t) * (ltk(t, k - 1, memo) + ltk(t - 1, k - 1, memo));
        for l in 1..=(k - 2) {
            acc += ltk(t - 1, k - 1 - l, memo) * ltk(t, l, memo);
        }
        acc
    };
    memo.insert((t, k), v.clone());
    v
}

/// Degree of the interlocked staircase with j size-(t-1) steps and k size-t
/// steps, both blocks nonempty.
pub fn mult_ltjk(t: usize, j: usize, k: usize) -> Result<BigInt> {
    if j < 1 || k < 1 {
        return Err(Error::bad_params(
            "both blocks must be nonempty; use the plain staircase otherwise",
        ));
    }
    if t < 2 {
        return Err(Error::bad_params("a size t-1 block needs t >= 2"));
    }
    let mut acc = mult_ltk(t - 1, j + k)? + BigInt::from(t) * mult_ltk(t - 1, j + k - 1)?;
    for l in 1..=(k - 1) {
        acc += mult_ltk(t - 1, j + k - 1 - l)? * mult_ltk(t, l)?;
    }
    Ok(acc)
}

/// Degree of the separated staircase: the two blocks share no tilde cell,
/// so the degree is the product of the block degrees.
pub fn mult_htjk(t: usize, j: usize, k: usize) -> Result<BigInt> {
    if j == 0 && k == 0 {
        return Err(Error::bad_params("j and k cannot both be 0"));
    }
    if j >= 1 && t < 2 {
        return Err(Error::bad_params("a size t-1 block needs t >= 2"));
    }
    let left = if j == 0 { BigInt::one() } else { mult_ltk(t - 1, j)? };
    let right = if k == 0 { BigInt::one() } else { mult_ltk(t, k)? };
    Ok(left * right)
}

/// Degree of the even interlocked family.
pub fn mult_snt(t: usize) -> Result<BigInt> {
    if t < 1 {
        return Err(Error::bad_params("t must be at least 1"));
    }
    let mut acc = BigInt::one();
    for s in 2..=t {
        acc += mult_ltjk(s, 1, 2)?;
    }
    for s in 2..t {
        acc += BigInt::from(s) * mult_smt(s)?;
    }
    Ok(acc)
}

/// Product rule: when the tilde ladders of two specs share no strictly upper
/// cell, the multiplicity of the sum ideal is the product of multiplicities.
/// When the combined corner list itself forms a valid spec the product is
/// checked against the recursive engine on the union.
pub fn mult_product(s1: &LadderIdealSpec, s2: &LadderIdealSpec) -> Result<BigInt> {
    let n1 = s1.normalize();
    let n2 = s2.normalize();
    let c1 = n1.tilde_upper_cells();
    let c2 = n2.tilde_upper_cells();
    if let Some(shared) = c1.intersection(&c2).next() {
        return Err(Error::HypothesisFails {
            msg: format!("tilde ladders share cell ({},{})", shared.0, shared.1),
        });
    }
    let product = mult_generic(s1)? * mult_generic(s2)?;
    let n = s1.n().max(s2.n());
    let mut pairs: Vec<((usize, usize), usize)> = Vec::new();
    for s in [&n1, &n2] {
        pairs.extend(
            s.corners()
                .iter()
                .zip(s.t())
                .map(|(c, &t)| ((c.a, c.b), t)),
        );
    }
    if let Ok(union) = LadderIdealSpec::from_pairs(n, pairs) {
        assert_eq!(
            mult_generic(&union)?,
            product,
            "disjoint-tilde product disagrees with the engine on the union"
        );
    }
    Ok(product)
}

/// h-vector (1 + z + ... + z^(t-1))^2 of a complete intersection of two
/// degree-t forms.
pub fn hvec_ci2(t: usize) -> Result<HVector> {
    if t < 1 {
        return Err(Error::bad_params("t must be at least 1"));
    }
    let coeffs = (0..(2 * t - 1))
        .map(|m| {
            let m = m as i64;
            let t = t as i64;
            t - (m + 1 - t).abs()
        })
        .collect();
    Ok(HVector::new(coeffs))
}

/// h-vector of the submaximal pfaffian quotient, by the closed shift sum:
/// h(m) = h_1(m-t+1) + sum_{s=2}^t ci2_s(m-t+s).
pub fn hvec_mt(t: usize) -> Result<HVector> {
    if t < 1 {
        return Err(Error::bad_params("t must be at least 1"));
    }
    let mut acc = HVector::one().shifted(t - 1);
    for s in 2..=t {
        acc = acc.add(&hvec_ci2(s)?.shifted(t - s));
    }
    Ok(acc)
}
