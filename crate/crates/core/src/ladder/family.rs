//! Constructors for the named families of pfaffian ladder ideals.

use crate::error::{Error, Result};
use crate::ladder::LadderIdealSpec;

/// Named families, identified by their classical letters.
///
/// All use 1-based matrix indices; `t` is the pfaffian half-size, so a
/// corner with size t contributes 2t-pfaffians.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// All 2t-pfaffians of the full n x n skew matrix: corner (1,n).
    I { t: usize, n: usize },
    /// The full square with the (1,n) cell removed: corners (1,n-1),(2,n).
    Ln { t: usize, n: usize },
    /// Submaximal pfaffians of a (2t+1) x (2t+1) matrix: corner (1,2t+1).
    M { t: usize },
    /// 2t-pfaffians of a (2t+2) x (2t+2) matrix: corner (1,2t+2).
    Sm { t: usize },
    /// Corners (1,2t-1) with size t-1 and (1,2t+1) with size t.
    N { t: usize },
    /// Corners (1,2t-1) with size t-1 and (1,2t+2) with size t.
    Sn { t: usize },
    /// Staircase of k corners (i,2t+i), i = 1..k, all with size t.
    Lk { t: usize, k: usize },
    /// j corners (i,2t-2+i) with size t-1 followed by k corners starting at
    /// (j,2t+j) with size t, advancing one row and one column each.
    Ljk { t: usize, j: usize, k: usize },
    /// j corners (i,2t-2+i) with size t-1 followed by k corners starting at
    /// (j+1,2t+j+1) with size t; the blocks do not interlock.
    Hjk { t: usize, j: usize, k: usize },
}

impl Family {
    /// Builds the corner/size data of the family.
    pub fn spec(self) -> Result<LadderIdealSpec> {
        match self {
            Family::I { t, n } => {
                require(t >= 1, "t must be at least 1")?;
                require(2 * t <= n, "the full square needs 2t <= n")?;
                LadderIdealSpec::from_pairs(n, vec![((1, n), t)])
            }
            Family::Ln { t, n } => {
                require(t >= 1, "t must be at least 1")?;
                require(2 * t <= n - 1, "the notched square needs 2t <= n-1")?;
                LadderIdealSpec::from_pairs(n, vec![((1, n - 1), t), ((2, n), t)])
            }
            Family::M { t } => {
                require(t >= 1, "t must be at least 1")?;
                LadderIdealSpec::from_pairs(2 * t + 1, vec![((1, 2 * t + 1), t)])
            }
            Family::Sm { t } => {
                require(t >= 1, "t must be at least 1")?;
                LadderIdealSpec::from_pairs(2 * t + 2, vec![((1, 2 * t + 2), t)])
            }
            Family::N { t } => {
                require(t >= 1, "t must be at least 1")?;
                if t == 1 {
                    // the size-0 corner vanishes; indeterminates remain
                    LadderIdealSpec::from_pairs(3, vec![((1, 3), 1)])
                } else {
                    LadderIdealSpec::from_pairs(
                        2 * t + 1,
                        vec![((1, 2 * t - 1), t - 1), ((1, 2 * t + 1), t)],
                    )
                }
            }
            Family::Sn { t } => {
                require(t >= 1, "t must be at least 1")?;
                if t == 1 {
                    LadderIdealSpec::from_pairs(4, vec![((1, 4), 1)])
                } else {
                    LadderIdealSpec::from_pairs(
                        2 * t + 2,
                        vec![((1, 2 * t - 1), t - 1), ((1, 2 * t + 2), t)],
                    )
                }
            }
            Family::Lk { t, k } => {
                require(t >= 1, "t must be at least 1")?;
                require(k >= 1, "k must be at least 1")?;
                let pairs = (1..=k).map(|i| ((i, 2 * t + i), t)).collect();
                LadderIdealSpec::from_pairs(2 * t + k, pairs)
            }
            Family::Ljk { t, j, k } => {
                if j == 0 && k == 0 {
                    return Err(Error::bad_params("j and k cannot both be 0"));
                }
                if j == 0 {
                    return Family::Lk { t, k }.spec();
                }
                if k == 0 {
                    // the only member with an empty second block
                    require(j == 1, "interlocked staircase needs k >= 1 unless j = 1")?;
                    return Family::Sm { t }.spec();
                }
                require(t >= 2, "a size t-1 block needs t >= 2")?;
                let mut pairs: Vec<((usize, usize), usize)> =
                    (1..=j).map(|i| ((i, 2 * t - 2 + i), t - 1)).collect();
                pairs.extend((0..k).map(|i| ((j + i, 2 * t + j + i), t)));
                LadderIdealSpec::from_pairs(2 * t + j + k - 1, pairs)
            }
            Family::Hjk { t, j, k } => {
                if j == 0 && k == 0 {
                    return Err(Error::bad_params("j and k cannot both be 0"));
                }
                if j >= 1 {
                    require(t >= 2, "a size t-1 block needs t >= 2")?;
                }
                let n = if k >= 1 { 2 * t + j + k } else { 2 * t - 2 + j };
                let mut pairs: Vec<((usize, usize), usize)> =
                    (1..=j).map(|i| ((i, 2 * t - 2 + i), t - 1)).collect();
                pairs.extend((1..=k).map(|i| ((j + i, 2 * t + j + i), t)));
                LadderIdealSpec::from_pairs(n, pairs)
            }
        }
    }
}

fn require(cond: bool, msg: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::bad_params(msg))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn staircase_of_one_square_is_the_odd_square() {
        let lk = Family::Lk { t: 2, k: 1 }.spec().unwrap();
        let m = Family::M { t: 2 }.spec().unwrap();
        assert_eq!(lk, m);
    }

    #[test]
    fn interlocked_1_1_is_the_two_block_family() {
        let ljk = Family::Ljk { t: 2, j: 1, k: 1 }.spec().unwrap();
        let n = Family::N { t: 2 }.spec().unwrap();
        assert_eq!(ljk, n);
        assert_eq!(
            serde_json::to_string(&ljk).unwrap(),
            r#"{"n":5,"corners":[[1,3],[1,5]],"t":[1,2]}"#
        );
    }

    #[test]
    fn separated_block_identities() {
        // H with an empty first block is the plain staircase
        let h = Family::Hjk { t: 3, j: 0, k: 2 }.spec().unwrap();
        let lk = Family::Lk { t: 3, k: 2 }.spec().unwrap();
        assert_eq!(h, lk);
        // H with an empty second block is the staircase one size down
        let h = Family::Hjk { t: 3, j: 2, k: 0 }.spec().unwrap();
        let lk = Family::Lk { t: 2, k: 2 }.spec().unwrap();
        assert_eq!(h, lk);
    }

    #[test]
    fn staircase_of_two_is_the_notched_square() {
        let lk = Family::Lk { t: 2, k: 2 }.spec().unwrap();
        let ln = Family::Ln { t: 2, n: 6 }.spec().unwrap();
        assert_eq!(lk, ln);
    }

    #[test]
    fn interlocked_with_empty_second_block() {
        let s = Family::Ljk { t: 2, j: 1, k: 0 }.spec().unwrap();
        assert_eq!(s, Family::Sm { t: 2 }.spec().unwrap());
        assert!(Family::Ljk { t: 2, j: 2, k: 0 }.spec().is_err());
    }

    #[test]
    fn separated_blocks_do_not_interlock() {
        let h = Family::Hjk { t: 2, j: 1, k: 1 }.spec().unwrap();
        assert_eq!(
            serde_json::to_string(&h).unwrap(),
            r#"{"n":6,"corners":[[1,3],[2,6]],"t":[1,2]}"#
        );
    }

    #[test]
    fn degenerate_params_rejected() {
        assert!(Family::I { t: 3, n: 5 }.spec().is_err());
        assert!(Family::Ln { t: 2, n: 4 }.spec().is_err());
        assert!(Family::Ljk { t: 1, j: 1, k: 1 }.spec().is_err());
        assert!(Family::Hjk { t: 1, j: 1, k: 1 }.spec().is_err());
        assert!(Family::Lk { t: 2, k: 0 }.spec().is_err());
    }

    #[test]
    fn degenerate_first_blocks_drop() {
        assert_eq!(
            serde_json::to_string(&Family::N { t: 1 }.spec().unwrap()).unwrap(),
            r#"{"n":3,"corners":[[1,3]],"t":[1]}"#
        );
        assert_eq!(
            serde_json::to_string(&Family::Sn { t: 1 }.spec().unwrap()).unwrap(),
            r#"{"n":4,"corners":[[1,4]],"t":[1]}"#
        );
    }

    #[test]
    fn constructed_families_are_normalized() {
        for t in 1..=4usize {
            for fam in [
                Family::M { t },
                Family::Sm { t },
                Family::N { t },
                Family::Sn { t },
                Family::Lk { t, k: 3 },
            ] {
                let s = fam.spec().unwrap();
                assert!(s.is_normalized(), "{fam:?} not normalized");
            }
            if t >= 2 {
                for (j, k) in [(1, 1), (2, 3), (3, 1)] {
                    for fam in [Family::Ljk { t, j, k }, Family::Hjk { t, j, k }] {
                        let s = fam.spec().unwrap();
                        assert!(s.is_normalized(), "{fam:?} not normalized");
                    }
                }
            }
        }
    }
}
