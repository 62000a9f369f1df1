//! The u = 1 congruence obstruction from the Jones derivative.
//!
//! For a knot with unknotting number one and signature ±2, V'(-1), the
//! Conway coefficient a4, the signature, and the determinant satisfy a
//! congruence mod 48 (Miyazawa). A violated congruence certifies u >= 2.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Outcome of the congruence test. Both sides are reported exactly;
/// `Obstructed` and `Consistent` compare them mod 48.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MiyazawaVerdict {
    Obstructed { lhs: i64, rhs: i64 },
    Consistent { lhs: i64, rhs: i64 },
    Inapplicable,
}

/// Runs the test on V'(-1), a4 = [z^4] of the Conway polynomial, the
/// signature, and the (positive, odd) determinant. Signatures other than
/// ±2 make the test inapplicable; the right-hand side
/// 24 a4 - (sigma/8)(det+1)(det+5) is always an integer for odd det,
/// which is asserted rather than assumed.
pub fn miyazawa_test(v1: i64, a4: i64, sigma: i64, det: i64) -> Result<MiyazawaVerdict> {
    if det <= 0 || det % 2 == 0 {
        return Err(Error::invalid(format!(
            "determinant must be positive and odd, got {det}"
        )));
    }
    if sigma != 2 && sigma != -2 {
        return Ok(MiyazawaVerdict::Inapplicable);
    }
    let num = BigInt::from(sigma) * BigInt::from(det + 1) * BigInt::from(det + 5);
    let (q, r) = num_integer::Integer::div_rem(&num, &BigInt::from(8));
    if !r.is_zero() {
        return Err(Error::invalid(format!(
            "non-integral correction term {num}/8; inputs are inconsistent"
        )));
    }
    let rhs_big = BigInt::from(24) * BigInt::from(a4) - q;
    let rhs = rhs_big
        .to_i64()
        .ok_or_else(|| Error::invalid("congruence right-hand side overflows"))?;
    let agree = (BigInt::from(v1) - rhs_big).abs() % BigInt::from(48) == BigInt::zero();
    Ok(if agree {
        MiyazawaVerdict::Consistent { lhs: v1, rhs }
    } else {
        MiyazawaVerdict::Obstructed { lhs: v1, rhs }
    })
}
