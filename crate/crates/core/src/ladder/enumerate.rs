//! Exhaustive enumeration of normalized specs, for sweep tests and selftests.

use crate::ladder::LadderIdealSpec;

/// All normalized specs, up to index translation, whose ladder fits in a
/// max_n x max_n matrix. Representatives start at row 1 and use the smallest
/// ambient size that holds them, so each canonical key appears exactly once.
pub fn enumerate_normalized(max_n: usize) -> Vec<LadderIdealSpec> {
    let mut out = Vec::new();
    let mut chain: Vec<((usize, usize), usize)> = Vec::new();
    for b in 2..=max_n {
        descend(max_n, (1, b), &mut chain, &mut out);
    }
    out
}

fn descend(
    max_n: usize,
    corner: (usize, usize),
    chain: &mut Vec<((usize, usize), usize)>,
    out: &mut Vec<LadderIdealSpec>,
) {
    let (a, b) = corner;
    for t in 1..=((b - a + 1) / 2) {
        if let Some(&((pa, pb), pt)) = chain.last() {
            if (a - pa) as isize <= pt as isize - t as isize {
                continue;
            }
            if (b - pb) as isize <= t as isize - pt as isize {
                continue;
            }
        }
        chain.push(((a, b), t));
        let n = chain.iter().map(|&((_, cb), _)| cb).max().unwrap();
        out.push(LadderIdealSpec::from_pairs(n, chain.clone()).unwrap());
        let (pa, pb) = (a, b);
        for na in pa..max_n {
            for nb in pb..=max_n {
                if na >= nb {
                    continue;
                }
                if (na, nb) <= (pa, pb) {
                    continue;
                }
                descend(max_n, (na, nb), chain, out);
            }
        }
        chain.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    #[test]
    fn enumeration_is_normalized_and_key_unique() {
        let specs = enumerate_normalized(5);
        let mut keys = BTreeSet::new();
        for s in &specs {
            assert!(s.is_normalized(), "{s:?}");
            assert_eq!(s.corners()[0].a, 1);
            assert!(keys.insert(s.canonical_key()), "duplicate key for {s:?}");
        }
        // single corner (1,b), b = 2..5, with t <= side/2: 1+1+2+2 specs
        let singles = specs.iter().filter(|s| s.corners().len() == 1).count();
        assert_eq!(singles, 6);
    }

    #[test]
    fn small_counts_are_stable() {
        assert_eq!(enumerate_normalized(2).len(), 1);
        // (1,2) t1; (1,3) t1; (1,2)+(2,3) both t1
        assert_eq!(enumerate_normalized(3).len(), 3);
    }
}
