//! Exact sparse polynomial arithmetic over Q in the upper entries of a
//! generic skew-symmetric matrix, under degree reverse lexicographic order.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// The polynomial ring Q[x_ij : 1 <= i < j <= n]. Variable 0 is x_12, the
/// largest variable; indices increase row by row and order decreases.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ring {
    n: usize,
    pairs: Vec<(usize, usize)>,
}

impl Ring {
    pub fn new(n: usize) -> Self {
        let mut pairs = Vec::with_capacity(n * (n - 1) / 2);
        for i in 1..=n {
            for j in (i + 1)..=n {
                pairs.push((i, j));
            }
        }
        Ring { n, pairs }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn nvars(&self) -> usize {
        self.pairs.len()
    }

    /// Variable index of x_ij.
    pub fn var(&self, i: usize, j: usize) -> Result<usize> {
        if i < 1 || j <= i || j > self.n {
            let idx = if i < 1 || i > self.n { i } else { j };
            return Err(Error::IndexOutOfRange { idx, n: self.n });
        }
        Ok((i - 1) * self.n - i * (i - 1) / 2 + (j - i - 1))
    }

    /// Matrix position of a variable.
    pub fn pair(&self, v: usize) -> (usize, usize) {
        self.pairs[v]
    }

    pub fn var_label(&self, v: usize) -> String {
        let (i, j) = self.pair(v);
        format!("x({i},{j})")
    }
}

/// Sparse exponent vector: (variable, exponent) pairs sorted by variable,
/// exponents positive. Ordered by degrevlex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    vars: Vec<(usize, u32)>,
    deg: u32,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial {
            vars: Vec::new(),
            deg: 0,
        }
    }

    pub fn var(v: usize) -> Self {
        Monomial {
            vars: vec![(v, 1)],
            deg: 1,
        }
    }

    /// From arbitrary (variable, exponent) pairs; duplicates accumulate.
    pub fn from_pairs(exps: impl IntoIterator<Item = (usize, u32)>) -> Monomial {
        let mut vars: Vec<(usize, u32)> = exps.into_iter().filter(|&(_, e)| e > 0).collect();
        vars.sort();
        let mut merged: Vec<(usize, u32)> = Vec::with_capacity(vars.len());
        for (v, e) in vars {
            match merged.last_mut() {
                Some(last) if last.0 == v => last.1 += e,
                _ => merged.push((v, e)),
            }
        }
        let deg = merged.iter().map(|&(_, e)| e).sum();
        Monomial { vars: merged, deg }
    }

    pub fn is_one(&self) -> bool {
        self.vars.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.deg as usize
    }

    pub fn exponents(&self) -> &[(usize, u32)] {
        &self.vars
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let vars = merge_exps(&self.vars, &other.vars, |a, b| Some(a + b));
        Monomial {
            deg: self.deg + other.deg,
            vars,
        }
    }

    /// self / other, when other divides self.
    pub fn try_div(&self, other: &Monomial) -> Option<Monomial> {
        if other.deg > self.deg {
            return None;
        }
        let mut vars = Vec::with_capacity(self.vars.len());
        let mut it = self.vars.iter().copied().peekable();
        for &(v, e) in &other.vars {
            loop {
                let (sv, se) = it.next()?;
                match sv.cmp(&v) {
                    Ordering::Less => vars.push((sv, se)),
                    Ordering::Equal => {
                        if se < e {
                            return None;
                        }
                        if se > e {
                            vars.push((sv, se - e));
                        }
                        break;
                    }
                    Ordering::Greater => return None,
                }
            }
        }
        vars.extend(it);
        Some(Monomial {
            deg: self.deg - other.deg,
            vars,
        })
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        other.try_div(self).is_some()
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let vars = merge_exps_keep(&self.vars, &other.vars, |a, b| a.max(b));
        let deg = vars.iter().map(|&(_, e)| e).sum();
        Monomial { vars, deg }
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        let (mut a, mut b) = (self.vars.iter().peekable(), other.vars.iter().peekable());
        while let (Some(&&(va, _)), Some(&&(vb, _))) = (a.peek(), b.peek()) {
            match va.cmp(&vb) {
                Ordering::Less => {
                    a.next();
                }
                Ordering::Greater => {
                    b.next();
                }
                Ordering::Equal => return false,
            }
        }
        true
    }

    /// Exponent dropped by one; None when the variable is absent.
    pub fn colon_var(&self, v: usize) -> Option<Monomial> {
        let pos = self.vars.iter().position(|&(sv, _)| sv == v)?;
        let mut vars = self.vars.clone();
        if vars[pos].1 == 1 {
            vars.remove(pos);
        } else {
            vars[pos].1 -= 1;
        }
        Some(Monomial {
            deg: self.deg - 1,
            vars,
        })
    }

    pub fn contains_var(&self, v: usize) -> bool {
        self.vars.iter().any(|&(sv, _)| sv == v)
    }
}

fn merge_exps(
    a: &[(usize, u32)],
    b: &[(usize, u32)],
    combine: impl Fn(u32, u32) -> Option<u32>,
) -> Vec<(usize, u32)> {
    merge_exps_keep(a, b, |x, y| combine(x, y).unwrap_or(0))
        .into_iter()
        .filter(|&(_, e)| e > 0)
        .collect()
}

fn merge_exps_keep(
    a: &[(usize, u32)],
    b: &[(usize, u32)],
    combine: impl Fn(u32, u32) -> u32,
) -> Vec<(usize, u32)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut ia, mut ib) = (0, 0);
    while ia < a.len() && ib < b.len() {
        match a[ia].0.cmp(&b[ib].0) {
            Ordering::Less => {
                out.push(a[ia]);
                ia += 1;
            }
            Ordering::Greater => {
                out.push(b[ib]);
                ib += 1;
            }
            Ordering::Equal => {
                out.push((a[ia].0, combine(a[ia].1, b[ib].1)));
                ia += 1;
                ib += 1;
            }
        }
    }
    out.extend_from_slice(&a[ia..]);
    out.extend_from_slice(&b[ib..]);
    out
}

impl Ord for Monomial {
    /// Degrevlex with variable 0 largest: higher total degree wins; on ties
    /// the monomial with the smaller exponent on the least variable wins.
    fn cmp(&self, other: &Self) -> Ordering {
        match self.deg.cmp(&other.deg) {
            Ordering::Equal => {}
            o => return o,
        }
        let mut a = self.vars.iter().rev().peekable();
        let mut b = other.vars.iter().rev().peekable();
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => return Ordering::Equal,
                // with equal degrees one side cannot simply run out, but keep
                // the comparison total: leftover weight sits on larger variables
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some(&&(va, ea)), Some(&&(vb, eb))) => {
                    if va > vb {
                        return Ordering::Less;
                    }
                    if vb > va {
                        return Ordering::Greater;
                    }
                    if ea != eb {
                        return if ea < eb {
                            Ordering::Greater
                        } else {
                            Ordering::Less
                        };
                    }
                    a.next();
                    b.next();
                }
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Terms in strictly descending monomial order, coefficients nonzero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    terms: Vec<(BigRational, Monomial)>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { terms: Vec::new() }
    }

    pub fn from_terms(mut terms: Vec<(BigRational, Monomial)>) -> Self {
        terms.sort_by(|a, b| b.1.cmp(&a.1));
        let mut out: Vec<(BigRational, Monomial)> = Vec::with_capacity(terms.len());
        for (c, m) in terms {
            match out.last_mut() {
                Some(last) if last.1 == m => last.0 += c,
                _ => out.push((c, m)),
            }
        }
        out.retain(|(c, _)| !c.is_zero());
        Polynomial { terms: out }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> &[(BigRational, Monomial)] {
        &self.terms
    }

    pub fn leading(&self) -> Option<(&BigRational, &Monomial)> {
        self.terms.first().map(|(c, m)| (c, m))
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(_, m)| m)
    }

    pub fn into_monic(mut self) -> Polynomial {
        if let Some((c, _)) = self.terms.first() {
            if !c.is_one() {
                let c = c.clone();
                for (tc, _) in &mut self.terms {
                    *tc /= c.clone();
                }
            }
        }
        self
    }

    pub fn drop_leading(&mut self) {
        if !self.terms.is_empty() {
            self.terms.remove(0);
        }
    }

    /// self - c * m * g, by an ordered merge.
    pub fn sub_scaled(&self, c: &BigRational, m: &Monomial, g: &Polynomial) -> Polynomial {
        let mut out = Vec::with_capacity(self.terms.len() + g.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = g.terms.iter().peekable();
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => {
                    out.extend(a.by_ref().cloned());
                    break;
                }
                (None, Some(_)) => {
                    for (bc, bm) in b.by_ref() {
                        out.push((-(c.clone() * bc), bm.mul(m)));
                    }
                    break;
                }
                (Some(&(_, ref am)), Some(&(_, ref bm0))) => {
                    let bm = bm0.mul(m);
                    match am.cmp(&bm) {
                        Ordering::Greater => out.push(a.next().unwrap().clone()),
                        Ordering::Less => {
                            let (bc, _) = b.next().unwrap();
                            out.push((-(c.clone() * bc), bm));
                        }
                        Ordering::Equal => {
                            let (ac, am) = a.next().unwrap();
                            let (bc, _) = b.next().unwrap();
                            let nc = ac - c.clone() * bc;
                            if !nc.is_zero() {
                                out.push((nc, am.clone()));
                            }
                        }
                    }
                }
            }
        }
        Polynomial { terms: out }
    }

    /// c * m * self.
    pub fn mul_term(&self, c: &BigRational, m: &Monomial) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(tc, tm)| (c * tc, tm.mul(m)))
                .collect(),
        }
    }

    /// Value at a point, one integer per variable.
    pub fn eval(&self, vals: &[BigInt]) -> BigRational {
        let mut acc = BigRational::zero();
        for (c, m) in &self.terms {
            let mut prod = BigRational::one();
            for &(v, e) in m.exponents() {
                prod *= BigRational::from(vals[v].pow(e));
            }
            acc += c * prod;
        }
        acc
    }
}

/// "x(1,2)^2*x(3,4)", or "1" for the empty monomial.
pub fn format_monomial(ring: &Ring, m: &Monomial) -> String {
    if m.is_one() {
        return "1".to_string();
    }
    m.exponents()
        .iter()
        .map(|&(v, e)| {
            if e == 1 {
                ring.var_label(v)
            } else {
                format!("{}^{e}", ring.var_label(v))
            }
        })
        .collect::<Vec<_>>()
        .join("*")
}

/// Signs folded into the separators, unit coefficients omitted.
pub fn format_polynomial(ring: &Ring, p: &Polynomial) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, (c, m)) in p.terms().iter().enumerate() {
        let mag = c.abs();
        if k == 0 {
            if c.is_negative() {
                out.push('-');
            }
        } else if c.is_negative() {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        if mag.is_one() && !m.is_one() {
            out.push_str(&format_monomial(ring, m));
        } else if m.is_one() {
            out.push_str(&mag.to_string());
        } else {
            out.push_str(&format!("{}*{}", mag, format_monomial(ring, m)));
        }
    }
    out
}
