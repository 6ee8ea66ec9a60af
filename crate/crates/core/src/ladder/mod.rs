//! Symmetric ladders of a skew-symmetric matrix and their pfaffian ideal specs.
//!
//! A ladder is stored as its list of upper corners; the cell set is the union
//! of the square blocks [a_k,b_k] x [a_k,b_k] and is never materialized.

mod enumerate;
mod family;
mod render;

pub use enumerate::enumerate_normalized;
pub use family::Family;

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Upper corner (a,b) of a square subladder with rows and columns a..=b.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct UpperCorner {
    pub a: usize,
    pub b: usize,
}

impl UpperCorner {
    pub fn new(a: usize, b: usize) -> Self {
        UpperCorner { a, b }
    }

    /// Side length of the square block.
    pub fn side(&self) -> usize {
        self.b - self.a + 1
    }
}

/// Staircase-shaped symmetric subset of an n x n index square,
/// stored as sorted upper corners of its square subladders.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Ladder {
    n: usize,
    corners: Vec<UpperCorner>,
}

impl Ladder {
    /// Validates and sorts the corner list. Corners must satisfy
    /// 1 <= a < b <= n, be pairwise distinct, and sort into a staircase
    /// (both coordinates nondecreasing).
    pub fn new(n: usize, corners: &[(usize, usize)]) -> Result<Self> {
        if corners.is_empty() {
            return Err(Error::bad_params("corner list must be nonempty"));
        }
        let mut cs: Vec<UpperCorner> = corners.iter().map(|&(a, b)| UpperCorner::new(a, b)).collect();
        for c in &cs {
            if !(1 <= c.a && c.a < c.b && c.b <= n) {
                return Err(Error::CornerOutOfRange { a: c.a, b: c.b, n });
            }
        }
        cs.sort();
        for w in cs.windows(2) {
            if w[0] == w[1] {
                return Err(Error::CoincidentCorners { a: w[0].a, b: w[0].b });
            }
            if w[0].b > w[1].b {
                return Err(Error::NotSortable {
                    a1: w[0].a,
                    b1: w[0].b,
                    a2: w[1].a,
                    b2: w[1].b,
                });
            }
        }
        Ok(Ladder { n, corners: cs })
    }

    /// Internal constructor for results of corner-dropping rules.
    fn from_sorted(n: usize, corners: Vec<UpperCorner>) -> Self {
        Ladder { n, corners }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn corners(&self) -> &[UpperCorner] {
        &self.corners
    }

    pub fn is_empty(&self) -> bool {
        self.corners.is_empty()
    }

    /// Cell membership in the union of square blocks.
    pub fn contains(&self, i: usize, j: usize) -> bool {
        let (lo, hi) = if i <= j { (i, j) } else { (j, i) };
        self.corners.iter().any(|c| c.a <= lo && hi <= c.b)
    }

    /// All cells (i,j) with i < j, the variable positions of the ladder.
    pub fn upper_cells(&self) -> BTreeSet<(usize, usize)> {
        let mut cells = BTreeSet::new();
        for c in &self.corners {
            for i in c.a..c.b {
                for j in (i + 1)..=c.b {
                    cells.insert((i, j));
                }
            }
        }
        cells
    }

    pub fn upper_cell_count(&self) -> usize {
        self.upper_cells().len()
    }
}

/// A pfaffian ideal spec: a ladder plus one pfaffian size t_k per corner.
/// The ideal is the sum over corners of the ideals of 2t_k-pfaffians of
/// the square blocks.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "SpecJson", into = "SpecJson")]
pub struct LadderIdealSpec {
    ladder: Ladder,
    t: Vec<usize>,
}

/// JSON interchange shape: {"n": int, "corners": [[a,b],...], "t": [int,...]}.
#[derive(Serialize, Deserialize)]
struct SpecJson {
    n: usize,
    corners: Vec<(usize, usize)>,
    t: Vec<usize>,
}

impl TryFrom<SpecJson> for LadderIdealSpec {
    type Error = Error;

    fn try_from(j: SpecJson) -> Result<Self> {
        if j.corners.len() != j.t.len() {
            return Err(Error::bad_params(format!(
                "{} corners but {} pfaffian sizes",
                j.corners.len(),
                j.t.len()
            )));
        }
        LadderIdealSpec::from_pairs(j.n, j.corners.iter().cloned().zip(j.t).collect())
    }
}

impl From<LadderIdealSpec> for SpecJson {
    fn from(s: LadderIdealSpec) -> SpecJson {
        SpecJson {
            n: s.ladder.n,
            corners: s.ladder.corners.iter().map(|c| (c.a, c.b)).collect(),
            t: s.t,
        }
    }
}

/// One elementary biliaison rewrite at a corner (a,b) with pfaffian size t.
/// The reduced spec shrinks the corner to (a+1,b-1) with size t-1; the
/// divisor spec lives on the ladder with cell (a,b) removed, splitting the
/// corner into (a,b-1) and (a+1,b), both with size t.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiliaisonStep {
    pub reduced: LadderIdealSpec,
    pub divisor: LadderIdealSpec,
    /// Degree t-1 of the pfaffian relating the reduced ideal to the divisor.
    pub deg_f: usize,
    /// Degree t of the pfaffian relating the source ideal to the divisor.
    pub deg_g: usize,
    /// Height shift deg_g - deg_f, always 1.
    pub height: usize,
    /// True when the raw divisor corner list carried a redundant corner
    /// that normalization removed.
    pub divisor_renormalized: bool,
}

/// Memoization key: corner/t data with rows and columns shifted so the
/// smallest row index is 1. Specs that differ by a simultaneous index
/// translation share a key; the ambient size is deliberately excluded.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalKey(Vec<(usize, usize, usize)>);

impl LadderIdealSpec {
    pub fn new(ladder: Ladder, t: Vec<usize>) -> Result<Self> {
        if ladder.corners.len() != t.len() {
            return Err(Error::bad_params(format!(
                "{} corners but {} pfaffian sizes",
                ladder.corners.len(),
                t.len()
            )));
        }
        if t.iter().any(|&tk| tk == 0) {
            return Err(Error::bad_params("pfaffian sizes must be positive"));
        }
        Ok(LadderIdealSpec { ladder, t })
    }

    /// Builds a spec from unsorted (corner, t) pairs, sorting pairs together.
    pub fn from_pairs(n: usize, pairs: Vec<((usize, usize), usize)>) -> Result<Self> {
        let mut pairs = pairs;
        pairs.sort();
        let corners: Vec<(usize, usize)> = pairs.iter().map(|p| p.0).collect();
        let t: Vec<usize> = pairs.iter().map(|p| p.1).collect();
        LadderIdealSpec::new(Ladder::new(n, &corners)?, t)
    }

    /// The zero-ideal spec on an n x n ambient matrix.
    pub fn empty(n: usize) -> Self {
        LadderIdealSpec {
            ladder: Ladder::from_sorted(n, Vec::new()),
            t: Vec::new(),
        }
    }

    pub fn ladder(&self) -> &Ladder {
        &self.ladder
    }

    pub fn n(&self) -> usize {
        self.ladder.n
    }

    pub fn corners(&self) -> &[UpperCorner] {
        &self.ladder.corners
    }

    pub fn t(&self) -> &[usize] {
        &self.t
    }

    pub fn is_empty(&self) -> bool {
        self.ladder.is_empty()
    }

    fn pairs(&self) -> Vec<(UpperCorner, usize)> {
        self.ladder.corners.iter().cloned().zip(self.t.iter().cloned()).collect()
    }

    /// Whether every corner block admits a 2t_k-pfaffian and adjacent corners
    /// satisfy the strict redundancy inequalities.
    pub fn is_normalized(&self) -> bool {
        let ps = self.pairs();
        for &(c, t) in &ps {
            if 2 * t > c.side() {
                return false;
            }
        }
        for w in ps.windows(2) {
            let ((c0, t0), (c1, t1)) = (w[0], w[1]);
            if (c1.a - c0.a) as isize <= t0 as isize - t1 as isize {
                return false;
            }
            if (c1.b - c0.b) as isize <= t1 as isize - t0 as isize {
                return false;
            }
        }
        true
    }

    /// Removes corners that contribute nothing to the ideal: blocks too small
    /// for a 2t-pfaffian, duplicated (corner, t) pairs, and corners made
    /// redundant by a neighbor (the containment drop rules). The result is
    /// normalized or empty; the ideal is unchanged.
    pub fn normalize(&self) -> LadderIdealSpec {
        let mut ps = self.pairs();
        loop {
            let len_before = ps.len();
            ps.retain(|&(c, t)| 2 * t <= c.side());
            ps.dedup();
            let mut dropped = None;
            for k in 1..ps.len() {
                let ((c0, t0), (c1, t1)) = (ps[k - 1], ps[k]);
                if (c1.a - c0.a) as isize <= t0 as isize - t1 as isize {
                    // every 2t0-pfaffian of block k-1 lies in the ideal of block k
                    dropped = Some(k - 1);
                    break;
                }
                if (c1.b - c0.b) as isize <= t1 as isize - t0 as isize {
                    // every 2t1-pfaffian of block k lies in the ideal of block k-1
                    dropped = Some(k);
                    break;
                }
            }
            if let Some(k) = dropped {
                ps.remove(k);
                continue;
            }
            if ps.len() == len_before {
                break;
            }
        }
        let corners: Vec<UpperCorner> = ps.iter().map(|p| p.0).collect();
        let t: Vec<usize> = ps.iter().map(|p| p.1).collect();
        LadderIdealSpec {
            ladder: Ladder::from_sorted(self.ladder.n, corners),
            t,
        }
    }

    /// The ladder with corners (a_k + t_k - 1, b_k - t_k + 1). Its strictly
    /// upper cell count is the height of the ideal. Requires a normalized,
    /// nonempty spec.
    pub fn tilde(&self) -> Result<Ladder> {
        if self.is_empty() {
            return Err(Error::EmptySpec);
        }
        debug_assert!(self.is_normalized());
        let corners: Vec<(usize, usize)> = self
            .pairs()
            .iter()
            .map(|&(c, t)| (c.a + t - 1, c.b - t + 1))
            .collect();
        Ladder::new(self.ladder.n, &corners)
    }

    /// Strictly upper cells of the tilde ladder; empty specs give the empty set.
    pub fn tilde_upper_cells(&self) -> BTreeSet<(usize, usize)> {
        match self.tilde() {
            Ok(l) => l.upper_cells(),
            Err(_) => BTreeSet::new(),
        }
    }

    /// Height of the pfaffian ideal: the strictly upper cell count of the
    /// tilde ladder. Requires a normalized spec; the empty spec has height 0.
    pub fn height(&self) -> usize {
        self.tilde_upper_cells().len()
    }

    /// Applies the elementary biliaison rewrite at the 1-based corner index k.
    /// Both returned specs are re-normalized. Fails with NotSortable or
    /// CoincidentCorners when the rewritten corner lists do not form ladders,
    /// which happens exactly when the corner cell (a_k,b_k) is shared with a
    /// neighboring block.
    pub fn biliaison_step(&self, k: usize) -> Result<BiliaisonStep> {
        let s = self.t.len();
        if k == 0 || k > s {
            return Err(Error::BadCornerIndex { k, s });
        }
        debug_assert!(self.is_normalized());
        let t = self.t[k - 1];
        if t < 2 {
            return Err(Error::StepNotApplicable { t });
        }
        let mut reduced_pairs = Vec::with_capacity(s);
        let mut divisor_pairs = Vec::with_capacity(s + 1);
        for (idx, &(ci, ti)) in self.pairs().iter().enumerate() {
            if idx == k - 1 {
                reduced_pairs.push(((ci.a + 1, ci.b - 1), ti - 1));
                divisor_pairs.push(((ci.a, ci.b - 1), ti));
                divisor_pairs.push(((ci.a + 1, ci.b), ti));
            } else {
                reduced_pairs.push(((ci.a, ci.b), ti));
                divisor_pairs.push(((ci.a, ci.b), ti));
            }
        }
        let reduced_raw = LadderIdealSpec::from_pairs(self.ladder.n, reduced_pairs)?;
        let divisor_raw = LadderIdealSpec::from_pairs(self.ladder.n, divisor_pairs)?;
        let reduced = reduced_raw.normalize();
        debug_assert_eq!(reduced, reduced_raw);
        let divisor = divisor_raw.normalize();
        let divisor_renormalized = divisor != divisor_raw;
        Ok(BiliaisonStep {
            reduced,
            divisor,
            deg_f: t - 1,
            deg_g: t,
            height: 1,
            divisor_renormalized,
        })
    }

    /// Translation-invariant memo key; see CanonicalKey.
    pub fn canonical_key(&self) -> CanonicalKey {
        let shift = self.ladder.corners.first().map_or(0, |c| c.a - 1);
        CanonicalKey(
            self.pairs()
                .iter()
                .map(|&(c, t)| (c.a - shift, c.b - shift, t))
                .collect(),
        )
    }

    /// The same spec with all indices shifted by the offset, in an ambient
    /// large enough to hold it.
    pub fn translated(&self, offset: usize, n: usize) -> Result<Self> {
        let pairs = self
            .pairs()
            .iter()
            .map(|&(c, t)| ((c.a + offset, c.b + offset), t))
            .collect();
        LadderIdealSpec::from_pairs(n, pairs)
    }
}
