//! Recursive h-vector computation by elementary biliaison.
//!
//! Each step trades a corner for two smaller specs: the quotient's h-vector
//! is the divisor's plus the reduced one's shifted by a degree. Recursion
//! bottoms out at ideals of indeterminates.

use std::cmp::Reverse;
use std::collections::HashMap;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::invariants::hvector::HVector;
use crate::ladder::{CanonicalKey, LadderIdealSpec};

/// Which eligible corner to rewrite first. Every policy falls back to the
/// next candidate when the preferred corner does not admit a step.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CornerPolicy {
    /// Largest pfaffian size, ties towards the last corner. A corner of
    /// maximal size always admits a step, so this policy never backtracks.
    #[default]
    MaxT,
    /// First corner in ladder order.
    MinIndex,
    /// Widest corner block, ties towards the last corner.
    LargestSquare,
}

impl CornerPolicy {
    /// 1-based corner indices with t >= 2, most preferred first.
    fn candidates(self, spec: &LadderIdealSpec) -> Vec<usize> {
        let t = spec.t();
        let mut ks: Vec<usize> = (1..=t.len()).filter(|&k| t[k - 1] >= 2).collect();
        match self {
            CornerPolicy::MaxT => ks.sort_by_key(|&k| (Reverse(t[k - 1]), Reverse(k))),
            CornerPolicy::MinIndex => {}
            CornerPolicy::LargestSquare => {
                ks.sort_by_key(|&k| (Reverse(spec.corners()[k - 1].side()), Reverse(k)))
            }
        }
        ks
    }
}

/// Memoizing evaluator. Reuse one engine across many specs: results are
/// cached under translation-invariant keys, so related specs share work.
#[derive(Debug, Default)]
pub struct Engine {
    policy: CornerPolicy,
    memo: HashMap<CanonicalKey, HVector>,
}

impl Engine {
    pub fn new(policy: CornerPolicy) -> Self {
        Engine {
            policy,
            memo: HashMap::new(),
        }
    }

    pub fn policy(&self) -> CornerPolicy {
        self.policy
    }

    /// h-vector of the quotient by the ideal the spec describes.
    pub fn h_vector(&mut self, spec: &LadderIdealSpec) -> Result<HVector> {
        let norm = spec.normalize();
        // actual recursion depth is bounded by the cell count; the slack
        // turns a logic error into NonTermination instead of a stack overflow
        let guard = 10 * norm.ladder().upper_cell_count() + 10;
        self.eval(&norm, 0, guard)
    }

    /// Multiplicity: the sum of the h-vector entries.
    pub fn multiplicity(&mut self, spec: &LadderIdealSpec) -> Result<BigInt> {
        Ok(self.h_vector(spec)?.sum())
    }

    fn eval(&mut self, spec: &LadderIdealSpec, depth: usize, guard: usize) -> Result<HVector> {
        if depth > guard {
            return Err(Error::NonTermination);
        }
        if spec.t().iter().all(|&t| t == 1) {
            // empty, or generated by the indeterminates of the tilde ladder
            return Ok(HVector::one());
        }
        let key = spec.canonical_key();
        if let Some(h) = self.memo.get(&key) {
            return Ok(h.clone());
        }
        for k in self.policy.candidates(spec) {
            let step = match spec.biliaison_step(k) {
                Ok(step) => step,
                Err(Error::NotSortable { .. }) | Err(Error::CoincidentCorners { .. }) => continue,
                Err(e) => return Err(e),
            };
            let reduced = self.eval(&step.reduced, depth + 1, guard)?;
            let divisor = self.eval(&step.divisor, depth + 1, guard)?;
            let h = reduced.shifted(1).add(&divisor);
            self.memo.insert(key, h.clone());
            return Ok(h);
        }
        unreachable!("a corner of maximal pfaffian size always admits a step")
    }
}

/// h-vector under the default policy, with a throwaway cache.
pub fn hvec_generic(spec: &LadderIdealSpec) -> Result<HVector> {
    Engine::default().h_vector(spec)
}

/// Multiplicity under the default policy, with a throwaway cache.
pub fn mult_generic(spec: &LadderIdealSpec) -> Result<BigInt> {
    Engine::default().multiplicity(spec)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::formulas;
    use crate::ladder::Family;

    fn spec(n: usize, pairs: &[((usize, usize), usize)]) -> LadderIdealSpec {
        LadderIdealSpec::from_pairs(n, pairs.to_vec()).unwrap()
    }

    #[test]
    fn indeterminate_ideals_have_trivial_hvector() {
        assert_eq!(hvec_generic(&LadderIdealSpec::empty(4)).unwrap().coeffs(), &[1]);
        let s = spec(5, &[((1, 3), 1), ((2, 5), 1)]);
        assert_eq!(hvec_generic(&s).unwrap().coeffs(), &[1]);
    }

    #[test]
    fn principal_pfaffian_hvector_is_flat() {
        for t in 1..=5usize {
            let s = spec(2 * t, &[((1, 2 * t), t)]);
            assert_eq!(hvec_generic(&s).unwrap().coeffs(), vec![1; t]);
        }
    }

    #[test]
    fn submaximal_square_hvectors() {
        for t in 1..=4 {
            let s = Family::M { t }.spec().unwrap();
            assert_eq!(
                hvec_generic(&s).unwrap(),
                formulas::hvec_mt(t).unwrap(),
                "t={t}"
            );
        }
    }

    #[test]
    fn small_hand_checked_hvectors() {
        let n2 = Family::N { t: 2 }.spec().unwrap();
        assert_eq!(hvec_generic(&n2).unwrap().coeffs(), &[1, 2]);
        let l25 = Family::Ln { t: 2, n: 5 }.spec().unwrap();
        assert_eq!(hvec_generic(&l25).unwrap().coeffs(), &[1, 2, 1]);
    }

    #[test]
    fn matches_closed_formulas_on_small_cases() {
        let mut e = Engine::default();
        let cases: Vec<(LadderIdealSpec, BigInt)> = vec![
            (
                Family::Ln { t: 2, n: 6 }.spec().unwrap(),
                formulas::mult_ltn(2, 6).unwrap(),
            ),
            (
                Family::Sm { t: 2 }.spec().unwrap(),
                formulas::mult_smt(2).unwrap(),
            ),
            (
                Family::Sn { t: 2 }.spec().unwrap(),
                formulas::mult_snt(2).unwrap(),
            ),
            (
                Family::Lk { t: 2, k: 3 }.spec().unwrap(),
                formulas::mult_ltk(2, 3).unwrap(),
            ),
            (
                Family::Ljk { t: 2, j: 1, k: 2 }.spec().unwrap(),
                formulas::mult_ltjk(2, 1, 2).unwrap(),
            ),
            (
                Family::Hjk { t: 2, j: 1, k: 1 }.spec().unwrap(),
                formulas::mult_htjk(2, 1, 1).unwrap(),
            ),
            (
                Family::I { t: 3, n: 7 }.spec().unwrap(),
                formulas::mult_krattenthaler(3, 7).unwrap(),
            ),
        ];
        for (s, want) in cases {
            assert_eq!(e.multiplicity(&s).unwrap(), want, "spec {s:?}");
        }
    }

    #[test]
    fn policies_agree() {
        let specs = [
            Family::N { t: 3 }.spec().unwrap(),
            Family::Lk { t: 2, k: 3 }.spec().unwrap(),
            Family::Hjk { t: 2, j: 2, k: 1 }.spec().unwrap(),
            spec(7, &[((1, 5), 2), ((3, 7), 2)]),
        ];
        let h: Vec<Vec<HVector>> = [CornerPolicy::MaxT, CornerPolicy::MinIndex, CornerPolicy::LargestSquare]
            .iter()
            .map(|&p| {
                let mut e = Engine::new(p);
                specs.iter().map(|s| e.h_vector(s).unwrap()).collect()
            })
            .collect();
        assert_eq!(h[0], h[1]);
        assert_eq!(h[0], h[2]);
    }
}
