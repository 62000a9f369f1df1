//! Jones polynomial via the Kauffman bracket.
//!
//! Variable conventions, fixed here once and used by every test: the
//! bracket lives in Z[A^±1]; the Jones polynomial is the writhe-normalized
//! bracket (-A)^(-3w) <D> with A^(-4) substituted by the Jones variable q,
//! so a bracket exponent e becomes q^(-e/4). Under these choices the
//! closure of the positive 2-braid word "1 1 1" (signature -2 in this
//! crate) has V = q + q^3 - q^4, and mirroring inverts q.

mod bracket;

pub use bracket::{bracket_by_enumeration, kauffman_bracket, BracketState};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::knotio::pd::PdCode;
use crate::laurent::LaurentPoly;

/// Jones polynomial of a knot diagram in the variable q.
pub fn jones(pd: &PdCode) -> Result<LaurentPoly> {
    let br = kauffman_bracket(pd)?;
    normalize_bracket(&br, pd.writhe())
}

/// Writhe normalization plus variable substitution:
/// (-A)^(-3w) * bracket, then A-exponent e -> q-exponent -e/4.
fn normalize_bracket(bracket: &LaurentPoly, writhe: i64) -> Result<LaurentPoly> {
    // (-A)^(-3w) = (-1)^w A^(-3w).
    let shifted = bracket.shifted(-3 * writhe);
    let signed = if writhe.rem_euclid(2) == 1 { -&shifted } else { shifted };
    let mut terms = Vec::new();
    for (e, c) in signed.terms() {
        if e % 4 != 0 {
            return Err(Error::internal(format!(
                "normalized bracket exponent {e} is not a multiple of four"
            )));
        }
        terms.push((-e / 4, c.clone()));
    }
    Ok(LaurentPoly::from_terms(&terms))
}

/// Exact first derivative of a Jones polynomial at q = -1: the left-hand
/// side of Miyazawa's congruence. For V = sum c_e q^e this is
/// sum e * c_e * (-1)^(e-1).
pub fn miyazawa_left_side(v_jones: &LaurentPoly) -> BigInt {
    let mut acc = BigInt::zero();
    for (e, c) in v_jones.terms() {
        let term = c * BigInt::from(e);
        if e.rem_euclid(2) == 1 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}
