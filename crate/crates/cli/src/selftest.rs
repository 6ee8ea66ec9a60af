//! Built-in consistency battery. Every check crosses two independent routes
//! to the same number, so a pass certifies agreement rather than either
//! route on its own.

use pfaffian_ladders::invariants::formulas::{hvec_mt, mult_krattenthaler, mult_mt, mult_smt};
use pfaffian_ladders::invariants::{betti_mt, family_multiplicity, is_decreasing_type, mult_generic};
use pfaffian_ladders::ladder::{enumerate_normalized, Family};
use pfaffian_ladders::oracle::verify;

use crate::output::spec_summary;
use crate::Failure;

type Check = fn() -> Result<(), String>;

const CHECKS: &[(&str, Check)] = &[
    (
        "square family multiplicities match the degree products",
        squares_match_products,
    ),
    (
        "closed formulas agree with the recursion engine",
        formulas_match_engine,
    ),
    (
        "square h-vectors are decreasing type and sum to the multiplicity",
        square_hvectors,
    ),
    (
        "resolution numerators interlock with the h-vectors",
        betti_interlocks,
    ),
    (
        "constructor identities land on one canonical ladder",
        constructor_identities,
    ),
    (
        "oracle confirms every ladder with n <= 5",
        oracle_sweep,
    ),
];

pub fn run() -> Result<u8, Failure> {
    let mut failed = 0usize;
    for (name, check) in CHECKS {
        match check() {
            Ok(()) => println!("ok {name}"),
            Err(msg) => {
                failed += 1;
                println!("FAIL {name}: {msg}");
            }
        }
    }
    if failed == 0 {
        println!("selftest: {} checks passed", CHECKS.len());
        Ok(0)
    } else {
        eprintln!("selftest: {failed} of {} checks failed", CHECKS.len());
        Ok(1)
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn lib<T>(r: pfaffian_ladders::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn squares_match_products() -> Result<(), String> {
    for t in 1..=10 {
        ensure(
            lib(mult_mt(t))? == lib(mult_krattenthaler(t, 2 * t + 1))?,
            || format!("odd square disagrees at t={t}"),
        )?;
        ensure(
            lib(mult_smt(t))? == lib(mult_krattenthaler(t, 2 * t + 2))?,
            || format!("even square disagrees at t={t}"),
        )?;
    }
    Ok(())
}

fn formulas_match_engine() -> Result<(), String> {
    let mut panel: Vec<Family> = Vec::new();
    for t in 1..=3 {
        panel.extend([
            Family::M { t },
            Family::Sm { t },
            Family::N { t },
            Family::Sn { t },
        ]);
        for k in 1..=3 {
            panel.push(Family::Lk { t, k });
        }
        for n in (2 * t + 1)..=8 {
            panel.push(Family::Ln { t, n });
        }
    }
    panel.push(Family::Ljk { t: 2, j: 1, k: 2 });
    panel.push(Family::Hjk { t: 2, j: 1, k: 1 });
    for family in panel {
        let spec = lib(family.spec())?;
        let engine = lib(mult_generic(&spec))?;
        let formula = lib(family_multiplicity(family))?;
        ensure(engine == formula, || {
            format!("{family:?}: engine says {engine}, formula says {formula}")
        })?;
    }
    Ok(())
}

fn square_hvectors() -> Result<(), String> {
    for t in 1..=12 {
        let h = lib(hvec_mt(t))?;
        ensure(is_decreasing_type(&h), || {
            format!("h-vector at t={t} is not decreasing type")
        })?;
        ensure(h.sum() == lib(mult_mt(t))?, || {
            format!("h-vector sum disagrees at t={t}")
        })?;
    }
    Ok(())
}

fn betti_interlocks() -> Result<(), String> {
    for t in 1..=8 {
        let h = lib(hvec_mt(t))?;
        let table = lib(betti_mt(t))?;
        // h(z) * (1-z)^3 must reproduce the free resolution's numerator
        let mut expanded = vec![0i128; h.coeffs().len() + 3];
        for (i, &c) in h.coeffs().iter().enumerate() {
            for (off, sign) in [(0, 1i128), (1, -3), (2, 3), (3, -1)] {
                expanded[i + off] += i128::from(c) * sign;
            }
        }
        let want: Vec<String> = expanded.iter().map(|v| v.to_string()).collect();
        let got: Vec<String> = table.numerator().iter().map(|v| v.to_string()).collect();
        ensure(want == got, || format!("numerator disagrees at t={t}"))?;
    }
    Ok(())
}

fn constructor_identities() -> Result<(), String> {
    let key = |f: Family| lib(f.spec()).map(|s| s.canonical_key());
    for t in 1..=3 {
        ensure(key(Family::Lk { t, k: 1 })? == key(Family::M { t })?, || {
            format!("one-block staircase differs from the square at t={t}")
        })?;
        ensure(
            key(Family::Ljk { t, j: 1, k: 0 })? == key(Family::Sm { t })?,
            || format!("degenerate staircase differs from the wide square at t={t}"),
        )?;
        if t >= 2 {
            ensure(
                key(Family::Ljk { t, j: 1, k: 1 })? == key(Family::N { t })?,
                || format!("two-block staircase differs from the nested pair at t={t}"),
            )?;
            ensure(
                key(Family::Hjk { t, j: 2, k: 0 })? == key(Family::Lk { t: t - 1, k: 2 })?,
                || format!("separated staircase does not shrink to the plain one at t={t}"),
            )?;
        }
    }
    Ok(())
}

fn oracle_sweep() -> Result<(), String> {
    for spec in enumerate_normalized(5) {
        let report = lib(verify(&spec, None))?;
        ensure(report.pass, || {
            format!("oracle disagrees on {}", spec_summary(&spec))
        })?;
    }
    Ok(())
}
