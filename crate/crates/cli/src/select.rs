//! Choosing the target ideal: a named family with numeric parameters, or a
//! ladder spec loaded from a JSON file. Exactly one of the two.

use std::fs;
use std::path::PathBuf;

use clap::{Args, ValueEnum};
use pfaffian_ladders::ladder::{Family, LadderIdealSpec};

use crate::Failure;

/// Families the cli knows by name.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyName {
    /// One square block of side n, pfaffians of size 2t
    #[value(name = "I")]
    I,
    /// Square with the outermost corner cell removed: corners (1,n-1), (2,n)
    #[value(name = "Ln")]
    Ln,
    /// Square of side 2t+1, pfaffians of size 2t
    #[value(name = "M")]
    M,
    /// Square of side 2t+2, pfaffians of size 2t
    #[value(name = "SM")]
    Sm,
    /// Nested corners (1,2t-1) size t-1 and (1,2t+1) size t
    #[value(name = "N")]
    N,
    /// Nested corners (1,2t-1) size t-1 and (1,2t+2) size t
    #[value(name = "SN")]
    Sn,
    /// Staircase of k interlocking square blocks, pfaffians of size 2t
    #[value(name = "Lk")]
    Lk,
    /// Staircase of j blocks of size t-1 then k of size t, runs sharing a step
    #[value(name = "Ljk")]
    Ljk,
    /// Staircase of j blocks of size t-1 then k of size t, runs one step apart
    #[value(name = "Hjk")]
    Hjk,
}

impl FamilyName {
    pub fn cli_name(self) -> &'static str {
        match self {
            FamilyName::I => "I",
            FamilyName::Ln => "Ln",
            FamilyName::M => "M",
            FamilyName::Sm => "SM",
            FamilyName::N => "N",
            FamilyName::Sn => "SN",
            FamilyName::Lk => "Lk",
            FamilyName::Ljk => "Ljk",
            FamilyName::Hjk => "Hjk",
        }
    }

    pub fn takes_n(self) -> bool {
        matches!(self, FamilyName::I | FamilyName::Ln)
    }

    pub fn takes_j(self) -> bool {
        matches!(self, FamilyName::Ljk | FamilyName::Hjk)
    }

    pub fn takes_k(self) -> bool {
        matches!(self, FamilyName::Lk | FamilyName::Ljk | FamilyName::Hjk)
    }
}

/// Closed parameter range; both `7` and `2..9` parse, bounds inclusive.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct InclusiveRange {
    lo: usize,
    hi: usize,
}

impl InclusiveRange {
    pub fn iter(self) -> std::ops::RangeInclusive<usize> {
        self.lo..=self.hi
    }
}

pub fn parse_range(s: &str) -> Result<InclusiveRange, String> {
    let (lo, hi) = match s.split_once("..") {
        Some(parts) => parts,
        None => (s, s),
    };
    let bound = |part: &str| {
        part.trim()
            .parse::<usize>()
            .map_err(|_| format!("expected an integer or lo..hi, got {s:?}"))
    };
    let (lo, hi) = (bound(lo)?, bound(hi)?);
    if lo > hi {
        return Err(format!("range {s:?} runs backwards"));
    }
    Ok(InclusiveRange { lo, hi })
}

/// Validates one scalar parameter against what the family expects.
fn scalar_param(flag: &str, value: Option<usize>, needed: bool) -> Result<Option<usize>, Failure> {
    match (value, needed) {
        (Some(v), true) => Ok(Some(v)),
        (None, true) => Err(Failure::usage(format!(
            "--{flag} is required for this family"
        ))),
        (Some(_), false) => Err(Failure::usage(format!(
            "--{flag} does not apply to this family"
        ))),
        (None, false) => Ok(None),
    }
}

/// Validates one range parameter; unneeded parameters collapse to one
/// placeholder slot so the table loops stay uniform.
pub fn range_values(
    flag: &str,
    value: Option<InclusiveRange>,
    needed: bool,
) -> Result<Vec<Option<usize>>, Failure> {
    match (value, needed) {
        (Some(r), true) => Ok(r.iter().map(Some).collect()),
        (None, true) => Err(Failure::usage(format!(
            "--{flag} is required for this family"
        ))),
        (Some(_), false) => Err(Failure::usage(format!(
            "--{flag} does not apply to this family"
        ))),
        (None, false) => Ok(vec![None]),
    }
}

/// Builds the family value; parameters must already be gated, so unneeded
/// slots are ignored.
pub fn assemble(
    name: FamilyName,
    t: usize,
    n: Option<usize>,
    j: Option<usize>,
    k: Option<usize>,
) -> Family {
    let n = n.unwrap_or(0);
    let j = j.unwrap_or(0);
    let k = k.unwrap_or(0);
    match name {
        FamilyName::I => Family::I { t, n },
        FamilyName::Ln => Family::Ln { t, n },
        FamilyName::M => Family::M { t },
        FamilyName::Sm => Family::Sm { t },
        FamilyName::N => Family::N { t },
        FamilyName::Sn => Family::Sn { t },
        FamilyName::Lk => Family::Lk { t, k },
        FamilyName::Ljk => Family::Ljk { t, j, k },
        FamilyName::Hjk => Family::Hjk { t, j, k },
    }
}

pub fn build_family(
    name: FamilyName,
    t: Option<usize>,
    n: Option<usize>,
    j: Option<usize>,
    k: Option<usize>,
) -> Result<Family, Failure> {
    let t = t.ok_or_else(|| Failure::usage("--t is required with --family"))?;
    let n = scalar_param("n", n, name.takes_n())?;
    let j = scalar_param("j", j, name.takes_j())?;
    let k = scalar_param("k", k, name.takes_k())?;
    Ok(assemble(name, t, n, j, k))
}

#[derive(Args)]
pub struct SelectArgs {
    /// Named family; combine with --t and the family's other parameters
    #[arg(long, value_enum, ignore_case = true)]
    pub family: Option<FamilyName>,

    /// Pfaffian size parameter
    #[arg(long)]
    pub t: Option<usize>,

    /// Ambient matrix size (families I and Ln)
    #[arg(long)]
    pub n: Option<usize>,

    /// Count of leading smaller blocks (families Ljk and Hjk)
    #[arg(long)]
    pub j: Option<usize>,

    /// Block count (families Lk, Ljk and Hjk)
    #[arg(long)]
    pub k: Option<usize>,

    /// Ladder spec JSON file: {"n": int, "corners": [[a,b],...], "t": [int,...]}
    #[arg(long, value_name = "FILE", conflicts_with_all = ["family", "t", "n", "j", "k"])]
    pub spec: Option<PathBuf>,
}

/// A resolved target. The family is kept when one was named; the oracle
/// uses it to pick a closed regularity form where one exists.
pub struct Selection {
    pub spec: LadderIdealSpec,
    pub family: Option<Family>,
}

impl SelectArgs {
    pub fn resolve(&self) -> Result<Selection, Failure> {
        match (self.family, &self.spec) {
            (Some(name), None) => {
                let family = build_family(name, self.t, self.n, self.j, self.k)?;
                let spec = family.spec()?;
                Ok(Selection {
                    spec,
                    family: Some(family),
                })
            }
            (None, Some(path)) => {
                let text = fs::read_to_string(path).map_err(|e| {
                    Failure::usage(format!("cannot read {}: {e}", path.display()))
                })?;
                let spec = serde_json::from_str(&text).map_err(|e| {
                    Failure::usage(format!("bad spec file {}: {e}", path.display()))
                })?;
                Ok(Selection { spec, family: None })
            }
            (None, None) => Err(Failure::usage("give either --family or --spec")),
            (Some(_), Some(_)) => unreachable!("clap rejects the combination"),
        }
    }
}
