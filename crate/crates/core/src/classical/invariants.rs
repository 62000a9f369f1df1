//! Abelian invariants derived from a Seifert matrix: Alexander and Conway
//! polynomials, determinant, signature, and Tristram-Levine signatures at
//! the low-order roots of unity.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::classical::fox::alexander_normal_form;
use crate::error::{Error, Result};
use crate::laurent::modular::det_by_interpolation;
use crate::laurent::LaurentPoly;
use crate::linalg::{inertia_symmetric_int, IntMat};

/// det(V - t V^T) in Alexander normal form.
pub fn alexander_from_seifert(v: &IntMat) -> Result<LaurentPoly> {
    if !v.is_square() {
        return Err(Error::internal("Seifert matrix must be square"));
    }
    let r = v.nrows();
    if r == 0 {
        return Ok(LaurentPoly::one());
    }
    let rows: Vec<Vec<LaurentPoly>> = (0..r)
        .map(|i| {
            (0..r)
                .map(|j| {
                    LaurentPoly::from_terms(&[
                        (0, v.get(i, j).clone()),
                        (1, -v.get(j, i).clone()),
                    ])
                })
                .collect()
        })
        .collect();
    alexander_normal_form(det_by_interpolation(&rows))
}

/// Conway polynomial: det(x V - 1/x V^T) rewritten in z = x - 1/x. The
/// constant term is always 1.
pub fn conway_from_seifert(v: &IntMat) -> Result<LaurentPoly> {
    if !v.is_square() {
        return Err(Error::internal("Seifert matrix must be square"));
    }
    let r = v.nrows();
    if r == 0 {
        return Ok(LaurentPoly::one());
    }
    let rows: Vec<Vec<LaurentPoly>> = (0..r)
        .map(|i| {
            (0..r)
                .map(|j| {
                    LaurentPoly::from_terms(&[
                        (1, v.get(i, j).clone()),
                        (-1, -v.get(j, i).clone()),
                    ])
                })
                .collect()
        })
        .collect();
    let mut p = det_by_interpolation(&rows);
    // Rewrite in z: strip leading terms with powers of (x - 1/x), which
    // succeeds exactly because the determinant lies in Z[x - 1/x].
    let z = LaurentPoly::from_terms(&[(1, BigInt::one()), (-1, -BigInt::one())]);
    let mut conway = LaurentPoly::zero();
    while !p.is_zero() {
        let m = p.max_exp().expect("nonzero polynomial has a top term");
        if m < 0 {
            return Err(Error::internal("Conway rewrite left negative powers"));
        }
        let c = p.coeff(m);
        conway = &conway + &LaurentPoly::monomial(c.clone(), m);
        p = &p - &(&z.pow(m as u32) * &LaurentPoly::monomial(c, 0));
    }
    if conway.coeff(0) != BigInt::one() {
        return Err(Error::internal("Conway polynomial constant term is not 1"));
    }
    Ok(conway)
}

/// |H_1| of the double branched cover: |det(V + V^T)|, always odd.
pub fn determinant_from_seifert(v: &IntMat) -> Result<BigInt> {
    let s = v.add(&v.transpose());
    let d = s.det().abs();
    if (&d % BigInt::from(2)).is_zero() {
        return Err(Error::internal("knot determinant must be odd"));
    }
    Ok(d)
}

/// Signature: sign(V + V^T), negative on the right trefoil.
pub fn signature_from_seifert(v: &IntMat) -> Result<i64> {
    let s = v.add(&v.transpose());
    let inertia = inertia_symmetric_int(&s)?;
    if inertia.zero != 0 {
        return Err(Error::internal("V + V^T is singular"));
    }
    Ok(inertia.signature())
}

/// Orders of unity at which `tristram_levine_from_seifert` evaluates.
pub const TRISTRAM_LEVINE_ORDERS: [u32; 4] = [2, 3, 4, 6];

/// Tristram-Levine signature at a primitive root of unity of the given
/// order: sign((1-w)V + (1-conj w)V^T). Fails with `JumpPoint` when the
/// Alexander polynomial vanishes there (the signature jumps and is not
/// defined by this formula).
pub fn tristram_levine_from_seifert(v: &IntMat, order: u32) -> Result<i64> {
    if order == 2 {
        return signature_from_seifert(v);
    }
    let phi = match order {
        3 => LaurentPoly::parse("t^2 + t + 1"),
        4 => LaurentPoly::parse("t^2 + 1"),
        6 => LaurentPoly::parse("t^2 - t + 1"),
        _ => {
            return Err(Error::Unsupported(format!(
                "Tristram-Levine order {order}; supported orders are 2, 3, 4, 6"
            )))
        }
    }
    .expect("fixed cyclotomic polynomial");
    let delta = alexander_from_seifert(v)?;
    if phi.divides(&delta) {
        return Err(Error::JumpPoint(format!(
            "Alexander polynomial vanishes at the order-{order} root of unity"
        )));
    }
    let s = v.add(&v.transpose());
    let k = v.sub(&v.transpose());
    // Realification of the hermitian form, rescaled by a congruence to
    // clear the irrational parts; positive scalings preserve signature.
    let m = match order {
        3 => blocks(&s.scale_int(3), &k, &s),
        4 => blocks(&s, &k, &s),
        6 => blocks(&s.scale_int(3), &k.scale_int(3), &s),
        _ => unreachable!(),
    };
    let inertia = inertia_symmetric_int(&m)?;
    if inertia.zero != 0 {
        return Err(Error::internal(
            "realified Tristram-Levine form is singular away from a jump",
        ));
    }
    let sig = inertia.signature();
    if sig % 2 != 0 {
        return Err(Error::internal("realified signature must be even"));
    }
    Ok(sig / 2)
}

/// [[a, k], [-k, d]] as one symmetric matrix (k is antisymmetric).
fn blocks(a: &IntMat, k: &IntMat, d: &IntMat) -> IntMat {
    let r = a.nrows();
    let mut m = IntMat::zero(2 * r, 2 * r);
    for i in 0..r {
        for j in 0..r {
            m.set(i, j, a.get(i, j).clone());
            m.set(i, r + j, k.get(i, j).clone());
            m.set(r + i, j, -k.get(i, j).clone());
            m.set(r + i, r + j, d.get(i, j).clone());
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classical::seifert::seifert_matrix;
    use crate::knotio::braid::BraidWord;

    fn v(s: &str) -> IntMat {
        seifert_matrix(&BraidWord::parse(s).unwrap()).unwrap()
    }

    #[test]
    fn conway_examples() {
        let tref = conway_from_seifert(&v("2: 1 1 1")).unwrap();
        assert_eq!(tref, LaurentPoly::parse("1 + t^2").unwrap());
        let fig8 = conway_from_seifert(&v("3: 1 -2 1 -2")).unwrap();
        assert_eq!(fig8, LaurentPoly::parse("1 - t^2").unwrap());
        let unknot = conway_from_seifert(&v("2: 1")).unwrap();
        assert!(unknot.is_one());
    }

    #[test]
    fn determinant_examples() {
        assert_eq!(determinant_from_seifert(&v("2: 1 1 1")).unwrap(), 3.into());
        assert_eq!(determinant_from_seifert(&v("3: 1 -2 1 -2")).unwrap(), 5.into());
        assert_eq!(determinant_from_seifert(&v("2: 1 1 1 1 1")).unwrap(), 5.into());
        assert_eq!(determinant_from_seifert(&v("2: 1")).unwrap(), 1.into());
    }

    #[test]
    fn tristram_levine_trefoil() {
        let tref = v("2: 1 1 1");
        assert_eq!(tristram_levine_from_seifert(&tref, 2).unwrap(), -2);
        assert_eq!(tristram_levine_from_seifert(&tref, 3).unwrap(), -2);
        assert_eq!(tristram_levine_from_seifert(&tref, 4).unwrap(), -2);
        // The order-6 root is a root of the Alexander polynomial.
        assert!(matches!(
            tristram_levine_from_seifert(&tref, 6),
            Err(Error::JumpPoint(_))
        ));
    }

    #[test]
    fn tristram_levine_figure_eight() {
        let fig8 = v("3: 1 -2 1 -2");
        for order in TRISTRAM_LEVINE_ORDERS {
            assert_eq!(tristram_levine_from_seifert(&fig8, order).unwrap(), 0);
        }
    }

    #[test]
    fn tristram_levine_mirror_flips() {
        let pos = v("2: 1 1 1 1 1");
        let neg = v("2: -1 -1 -1 -1 -1");
        for order in [2, 3, 4] {
            let a = tristram_levine_from_seifert(&pos, order).unwrap();
            let b = tristram_levine_from_seifert(&neg, order).unwrap();
            assert_eq!(a, -b);
            assert!(a < 0);
        }
    }

    #[test]
    fn unsupported_order_rejected() {
        assert!(matches!(
            tristram_levine_from_seifert(&v("2: 1 1 1"), 5),
            Err(Error::Unsupported(_))
        ));
    }
}
