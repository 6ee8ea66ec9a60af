//! Independent verification from first principles: expand the pfaffian
//! generators, compute a reduced Groebner basis, and read height,
//! multiplicity, h-vector, and regularity off the initial ideal's Hilbert
//! series. No closed formula or recursion is consulted on the oracle side.

pub mod buchberger;
pub mod hilbert;
pub mod pfaffian;
pub mod poly;

pub use buchberger::{
    format_basis, groebner, normal_form, ReductionBudget, DEFAULT_REDUCTION_BUDGET,
};
pub use hilbert::{
    hilbert_function, hilbert_numerator, minimalize, quotient_invariants, QuotientInvariants,
};
pub use pfaffian::{generators, pfaffian};
pub use poly::{format_monomial, format_polynomial, Monomial, Polynomial, Ring};

use std::fmt::Display;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::invariants::{hvec_generic, reg_closed, reg_from_hvector};
use crate::ladder::{Family, LadderIdealSpec};

/// Hard stop on the number of distinct pfaffian generators.
pub const GENERATOR_CAP: usize = 5_000;

/// One verified field: both sides rendered the same way.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldCheck {
    pub field: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

/// Outcome of one oracle run against the ladder-side predictions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub spec: LadderIdealSpec,
    pub checks: Vec<FieldCheck>,
    pub gb_size: usize,
    /// Hilbert series numerator coefficients, as decimal strings.
    pub numerator: Vec<String>,
    pub pass: bool,
}

fn check<T: PartialEq + Display>(field: &str, expected: T, actual: T) -> FieldCheck {
    FieldCheck {
        field: field.to_string(),
        pass: expected == actual,
        expected: expected.to_string(),
        actual: actual.to_string(),
    }
}

/// Groebner basis of the ideal a spec describes, exactly as given: the spec
/// is not normalized first, so two specs of the same ideal can be compared.
pub fn groebner_for_spec(spec: &LadderIdealSpec) -> Result<(Ring, Vec<Polynomial>)> {
    let ring = Ring::new(spec.n());
    let gens = generators(&ring, spec, GENERATOR_CAP)?;
    let gb = groebner(&gens, DEFAULT_REDUCTION_BUDGET)?;
    Ok((ring, gb))
}

/// Checks the recursion's height, multiplicity, h-vector, and regularity
/// against the Groebner route. The regularity expectation comes from the
/// family's closed form when one is known, else from the h-vector.
pub fn verify(spec: &LadderIdealSpec, family: Option<Family>) -> Result<VerifyReport> {
    let norm = spec.normalize();
    let (ring, gb) = groebner_for_spec(&norm)?;
    let lms: Vec<Monomial> = gb
        .iter()
        .map(|g| g.leading_monomial().expect("basis has no zeros").clone())
        .collect();
    let numerator = hilbert_numerator(&lms);
    let q = quotient_invariants(&numerator, ring.nvars())?;

    let expected_hvec = hvec_generic(&norm)?;
    let expected_reg = family
        .and_then(|f| reg_closed(&f).ok())
        .unwrap_or_else(|| reg_from_hvector(&expected_hvec));

    let checks = vec![
        check("height", norm.height(), q.height),
        check("multiplicity", expected_hvec.sum(), q.multiplicity),
        check(
            "hvector",
            format!("{:?}", expected_hvec.coeffs()),
            format!("{:?}", q.hvector.coeffs()),
        ),
        check("regularity", expected_reg, q.regularity),
    ];
    let pass = checks.iter().all(|c| c.pass);
    Ok(VerifyReport {
        spec: norm,
        checks,
        gb_size: gb.len(),
        numerator: numerator.iter().map(|c| c.to_string()).collect(),
        pass,
    })
}
