//! Buchberger's algorithm, returning the unique reduced Groebner basis.
//!
//! Pairs are processed smallest lcm first. The coprime and chain criteria
//! prune most of them; a global budget on reduction steps turns runaway
//! inputs into an error instead of a hang.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashSet};

use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::oracle::poly::{format_polynomial, Monomial, Polynomial, Ring};

pub const DEFAULT_REDUCTION_BUDGET: usize = 2_000_000;

/// Counts single-term cancellations across one basis computation.
#[derive(Debug)]
pub struct ReductionBudget {
    limit: usize,
    spent: usize,
}

impl ReductionBudget {
    pub fn new(limit: usize) -> Self {
        ReductionBudget { limit, spent: 0 }
    }

    pub fn spent(&self) -> usize {
        self.spent
    }

    fn spend(&mut self) -> Result<()> {
        if self.spent >= self.limit {
            return Err(Error::BudgetExceeded { budget: self.limit });
        }
        self.spent += 1;
        Ok(())
    }
}

/// Full normal form: no term of the result is divisible by any leading
/// monomial of the (monic) basis.
pub fn normal_form(
    p: &Polynomial,
    basis: &[Polynomial],
    budget: &mut ReductionBudget,
) -> Result<Polynomial> {
    let mut work = p.clone();
    let mut rem: Vec<(BigRational, Monomial)> = Vec::new();
    'terms: while let Some((c, m)) = work.leading().map(|(c, m)| (c.clone(), m.clone())) {
        for g in basis {
            if let Some(q) = m.try_div(g.leading_monomial().expect("basis has no zeros")) {
                budget.spend()?;
                work = work.sub_scaled(&c, &q, g);
                continue 'terms;
            }
        }
        rem.push((c, m));
        work.drop_leading();
    }
    Ok(Polynomial::from_terms(rem))
}

/// S-polynomial of two monic polynomials.
fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let lf = f.leading_monomial().expect("nonzero");
    let lg = g.leading_monomial().expect("nonzero");
    let lcm = lf.lcm(lg);
    let one = BigRational::from_integer(1.into());
    f.mul_term(&one, &lcm.try_div(lf).expect("lcm divisible"))
        .sub_scaled(&one, &lcm.try_div(lg).expect("lcm divisible"), g)
}

fn pair_key(i: usize, j: usize) -> (usize, usize) {
    (i.min(j), i.max(j))
}

/// Queue the pairs of element j with everything before it, keyed by lcm.
fn push_pairs(
    heap: &mut BinaryHeap<Reverse<(Monomial, usize, usize)>>,
    basis: &[Polynomial],
    j: usize,
) {
    let lj = basis[j].leading_monomial().unwrap();
    for (i, f) in basis.iter().take(j).enumerate() {
        heap.push(Reverse((f.leading_monomial().unwrap().lcm(lj), i, j)));
    }
}

/// Reduced Groebner basis of the ideal the generators span, sorted by
/// ascending leading monomial. The result is independent of generator order.
pub fn groebner(gens: &[Polynomial], budget_limit: usize) -> Result<Vec<Polynomial>> {
    let mut budget = ReductionBudget::new(budget_limit);
    let mut basis: Vec<Polynomial> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| g.clone().into_monic())
        .collect();
    basis.sort_by(|a, b| {
        a.leading_monomial()
            .unwrap()
            .cmp(b.leading_monomial().unwrap())
            .then_with(|| a.num_terms().cmp(&b.num_terms()))
    });
    basis.dedup();

    let mut heap: BinaryHeap<Reverse<(Monomial, usize, usize)>> = BinaryHeap::new();
    for j in 0..basis.len() {
        push_pairs(&mut heap, &basis, j);
    }

    let mut treated: HashSet<(usize, usize)> = HashSet::new();
    while let Some(Reverse((lcm, i, j))) = heap.pop() {
        treated.insert(pair_key(i, j));
        let li = basis[i].leading_monomial().unwrap();
        let lj = basis[j].leading_monomial().unwrap();
        if li.coprime(lj) {
            continue;
        }
        // chain criterion: both flanking pairs already treated
        let chained = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k].leading_monomial().unwrap().divides(&lcm)
                && treated.contains(&pair_key(i, k))
                && treated.contains(&pair_key(j, k))
        });
        if chained {
            continue;
        }
        let r = normal_form(&s_polynomial(&basis[i], &basis[j]), &basis, &mut budget)?;
        if r.is_zero() {
            continue;
        }
        basis.push(r.into_monic());
        push_pairs(&mut heap, &basis, basis.len() - 1);
    }

    // minimalize: drop elements whose leading monomial another one divides
    basis.sort_by(|a, b| a.leading_monomial().unwrap().cmp(b.leading_monomial().unwrap()));
    let mut minimal: Vec<Polynomial> = Vec::with_capacity(basis.len());
    for g in basis {
        let lg = g.leading_monomial().unwrap();
        if !minimal
            .iter()
            .any(|h| h.leading_monomial().unwrap().divides(lg))
        {
            minimal.push(g);
        }
    }

    // interreduce tails; leading monomials are untouched by construction
    for i in 0..minimal.len() {
        let g = minimal[i].clone();
        let mut others = minimal.clone();
        others.remove(i);
        let r = normal_form(&g, &others, &mut budget)?;
        debug_assert_eq!(r.leading_monomial(), g.leading_monomial());
        minimal[i] = r;
    }
    Ok(minimal)
}

/// One polynomial per line, ascending leading monomials.
pub fn format_basis(ring: &Ring, basis: &[Polynomial]) -> String {
    basis
        .iter()
        .map(|p| format_polynomial(ring, p))
        .collect::<Vec<_>>()
        .join("\n")
}
