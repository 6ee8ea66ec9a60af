//! Numerical invariants of ladder pfaffian ideals: multiplicity, h-vector,
//! height, regularity, and Betti numbers, with both closed formulas and a
//! recursion that works on arbitrary specs.

pub mod betti;
pub mod engine;
pub mod formulas;
pub mod hvector;
pub mod regularity;

pub use betti::{betti_mt, BettiTable};
pub use engine::{hvec_generic, mult_generic, CornerPolicy, Engine};
pub use hvector::{delta, is_decreasing_type, is_unimodal, HVector};
pub use regularity::{reg_biliaison, reg_closed, reg_from_hvector, reg_hypersurface};

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::ladder::{Family, LadderIdealSpec};

/// How a report's numbers were obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Source {
    Formula,
    Engine,
    Oracle,
}

/// Invariants of one ideal. The multiplicity is serialized as a decimal
/// string; it outgrows fixed-width integers quickly.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantReport {
    pub spec: LadderIdealSpec,
    pub height: usize,
    #[serde(with = "bigint_decimal")]
    pub multiplicity: BigInt,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hvector: Option<HVector>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub regularity: Option<usize>,
    pub source: Source,
}

impl InvariantReport {
    /// Full report from the biliaison recursion; works on any spec.
    pub fn from_engine(spec: &LadderIdealSpec) -> Result<Self> {
        let norm = spec.normalize();
        let h = hvec_generic(&norm)?;
        Ok(InvariantReport {
            height: norm.height(),
            multiplicity: h.sum(),
            regularity: Some(reg_from_hvector(&h)),
            hvector: Some(h),
            source: Source::Engine,
            spec: norm,
        })
    }

    /// Report from the closed formulas for a named family. The h-vector and
    /// regularity are filled in only where a closed form is known.
    pub fn from_formula(family: Family) -> Result<Self> {
        let spec = family.spec()?.normalize();
        let multiplicity = family_multiplicity(family)?;
        let hvector = match family {
            Family::M { t } => Some(formulas::hvec_mt(t)?),
            _ => None,
        };
        Ok(InvariantReport {
            height: spec.height(),
            multiplicity,
            hvector,
            regularity: reg_closed(&family).ok(),
            source: Source::Formula,
            spec,
        })
    }
}

/// Multiplicity of a named family by its closed formula.
pub fn family_multiplicity(family: Family) -> Result<BigInt> {
    match family {
        Family::I { t, n } => formulas::mult_krattenthaler(t, n),
        Family::Ln { t, n } => formulas::mult_ltn(t, n),
        Family::M { t } => formulas::mult_mt(t),
        Family::Sm { t } => formulas::mult_smt(t),
        Family::N { t } => formulas::mult_nt(t),
        Family::Sn { t } => formulas::mult_snt(t),
        Family::Lk { t, k } => formulas::mult_ltk(t, k),
        // the mixed staircase degenerates to a plain one when a block is empty
        Family::Ljk { t, j: 0, k } => formulas::mult_ltk(t, k),
        Family::Ljk { t, j: 1, k: 0 } => formulas::mult_smt(t),
        Family::Ljk { t, j, k } => formulas::mult_ltjk(t, j, k),
        Family::Hjk { t, j, k } => formulas::mult_htjk(t, j, k),
    }
}

mod bigint_decimal {
    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn engine_report_golden_json() {
        let spec = Family::N { t: 2 }.spec().unwrap();
        let report = InvariantReport::from_engine(&spec).unwrap();
        let json = serde_json::to_string(&report).unwrap();
        assert_eq!(
            json,
            "{\"spec\":{\"n\":5,\"corners\":[[1,3],[1,5]],\"t\":[1,2]},\
             \"height\":5,\"multiplicity\":\"3\",\"hvector\":[1,2],\
             \"regularity\":2,\"source\":\"engine\"}"
        );
        let back: InvariantReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, report);
    }

    #[test]
    fn formula_report_fills_known_fields() {
        let r = InvariantReport::from_formula(Family::M { t: 2 }).unwrap();
        assert_eq!(r.height, 3);
        assert_eq!(r.multiplicity, BigInt::from(5));
        assert_eq!(r.hvector.unwrap().coeffs(), &[1, 3, 1]);
        assert_eq!(r.regularity, Some(3));
        let r = InvariantReport::from_formula(Family::Sn { t: 2 }).unwrap();
        assert_eq!(r.multiplicity, BigInt::from(9));
        assert_eq!(r.hvector, None);
        assert_eq!(r.regularity, None);
    }

    #[test]
    fn formula_and_engine_agree_on_each_family() {
        let fams = [
            Family::I { t: 2, n: 6 },
            Family::Ln { t: 2, n: 6 },
            Family::M { t: 2 },
            Family::Sm { t: 2 },
            Family::N { t: 2 },
            Family::Sn { t: 2 },
            Family::Lk { t: 2, k: 2 },
            Family::Ljk { t: 2, j: 2, k: 1 },
            Family::Hjk { t: 2, j: 1, k: 1 },
        ];
        for f in fams {
            let formula = InvariantReport::from_formula(f).unwrap();
            let engine = InvariantReport::from_engine(&formula.spec).unwrap();
            assert_eq!(formula.multiplicity, engine.multiplicity, "{f:?}");
            assert_eq!(formula.height, engine.height, "{f:?}");
        }
    }
}
