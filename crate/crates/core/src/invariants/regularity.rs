//! Castelnuovo-Mumford regularity of the pfaffian ideals.
//!
//! All quotients here are Cohen-Macaulay, so the regularity of the ideal is
//! one more than the degree of the quotient's h-vector. Closed forms exist
//! for a few families; the transfer rules track regularity along a biliaison
//! or a hypersurface section.

use crate::error::{Error, Result};
use crate::invariants::hvector::HVector;
use crate::ladder::Family;

/// Closed-form regularity for the families where one is known.
pub fn reg_closed(family: &Family) -> Result<usize> {
    match *family {
        Family::M { t } => Ok(2 * t - 1),
        Family::Lk { t, k } if k == 2 => Ok(3 * t - 2),
        // t = 1 degenerates to an ideal of indeterminates
        Family::N { t } if t == 1 => Ok(1),
        Family::N { t } => Ok(3 * t - 4),
        Family::Sm { t } => Ok(3 * t - 2),
        // two degenerate square cases: indeterminates and one pfaffian
        Family::I { t, n } if n == 2 * t + 1 => Ok(2 * t - 1),
        Family::I { t, n } if n == 2 * t => Ok(t),
        ref f => Err(Error::UnknownFamily {
            name: format!("{f:?}"),
        }),
    }
}

/// Regularity across an elementary biliaison of height shift ell, from the
/// regularities of the reduced ideal and the divisor ideal. Valid only when
/// the divisor strictly dominates.
pub fn reg_biliaison(reg_reduced: usize, reg_divisor: usize, ell: usize) -> Result<usize> {
    if reg_reduced >= reg_divisor {
        return Err(Error::HypothesisFails {
            msg: format!(
                "needs reg(reduced) < reg(divisor), got {reg_reduced} >= {reg_divisor}"
            ),
        });
    }
    Ok(reg_divisor + ell - 1)
}

/// Regularity after adding one regular hypersurface of degree d.
pub fn reg_hypersurface(reg: usize, d: usize) -> Result<usize> {
    if d < 1 {
        return Err(Error::bad_params("hypersurface degree must be positive"));
    }
    Ok(reg + d - 1)
}

/// Regularity read off a Cohen-Macaulay quotient's h-vector.
pub fn reg_from_hvector(h: &HVector) -> usize {
    h.degree() + 1
}
