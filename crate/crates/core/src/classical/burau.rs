//! Reduced Burau representation, used as a second independent route to
//! the Alexander polynomial of a braid closure.
//!
//! The unreduced Burau matrix of a generator fixes the vector of ones;
//! the reduced representation is the induced action on the quotient by
//! that vector. For a braid b on k strands whose closure is a knot,
//! det(B(b) - I) equals the Alexander polynomial times 1 + t + ... +
//! t^(k-1), up to units.

use num_bigint::BigInt;
use num_traits::One;

use crate::classical::fox::alexander_normal_form;
use crate::error::{Error, Result};
use crate::knotio::braid::BraidWord;
use crate::laurent::modular::det_by_interpolation;
use crate::laurent::LaurentPoly;

/// Reduced Burau matrix of one generator: the action on the quotient of
/// Z[t,1/t]^k by the all-ones vector, in the basis of the first k-1
/// coordinate images.
fn letter_matrix(k: usize, letter: i32) -> Vec<Vec<LaurentPoly>> {
    let i = letter.unsigned_abs() as usize - 1;
    // Unreduced action on columns i, i+1, written on (row, col) pairs.
    let t = LaurentPoly::t_pow(1);
    let tinv = LaurentPoly::t_pow(-1);
    let one = LaurentPoly::one();
    let mut u = vec![vec![LaurentPoly::zero(); k]; k];
    for (d, row) in u.iter_mut().enumerate() {
        row[d] = one.clone();
    }
    if letter > 0 {
        u[i][i] = &one - &t;
        u[i + 1][i] = one.clone();
        u[i][i + 1] = t;
        u[i + 1][i + 1] = LaurentPoly::zero();
    } else {
        u[i][i] = LaurentPoly::zero();
        u[i + 1][i] = tinv.clone();
        u[i][i + 1] = one.clone();
        u[i + 1][i + 1] = &one - &tinv;
    }
    // Quotient by the ones vector: subtract the last row from each column
    // entry's contribution, i.e. R[r][c] = U[r][c] - U[k-1][c].
    let mut r = vec![vec![LaurentPoly::zero(); k - 1]; k - 1];
    for (row, r_row) in r.iter_mut().enumerate() {
        for (col, entry) in r_row.iter_mut().enumerate() {
            *entry = &u[row][col] - &u[k - 1][col];
        }
    }
    r
}

fn mat_mul(a: &[Vec<LaurentPoly>], b: &[Vec<LaurentPoly>]) -> Vec<Vec<LaurentPoly>> {
    let n = a.len();
    let mut out = vec![vec![LaurentPoly::zero(); n]; n];
    for i in 0..n {
        for (j, o) in out[i].iter_mut().enumerate() {
            let mut acc = LaurentPoly::zero();
            for (l, al) in a[i].iter().enumerate() {
                if !al.is_zero() && !b[l][j].is_zero() {
                    acc = &acc + &(al * &b[l][j]);
                }
            }
            *o = acc;
        }
    }
    out
}

/// Reduced Burau matrix of the whole word.
pub fn reduced_burau(b: &BraidWord) -> Vec<Vec<LaurentPoly>> {
    let k = b.strands();
    let mut m: Vec<Vec<LaurentPoly>> = (0..k.saturating_sub(1))
        .map(|i| {
            (0..k - 1)
                .map(|j| if i == j { LaurentPoly::one() } else { LaurentPoly::zero() })
                .collect()
        })
        .collect();
    for &l in b.letters() {
        m = mat_mul(&m, &letter_matrix(k, l));
    }
    m
}

/// Alexander polynomial of the closure via the Burau determinant identity.
pub fn alexander_via_burau(b: &BraidWord) -> Result<LaurentPoly> {
    if !b.is_knot_closure() {
        return Err(Error::invalid("Burau route needs a knot closure"));
    }
    let k = b.strands();
    if k == 1 {
        return Ok(LaurentPoly::one());
    }
    let m = reduced_burau(b);
    let n = m.len();
    let mut rows = m;
    for (i, row) in rows.iter_mut().enumerate() {
        row[i] = &row[i] - &LaurentPoly::one();
    }
    debug_assert_eq!(n, k - 1);
    let d = det_by_interpolation(&rows);
    let cyclic = LaurentPoly::from_coeffs(0, vec![BigInt::one(); k]);
    let quotient = d
        .exact_div(&cyclic)
        .ok_or_else(|| Error::internal("Burau determinant not divisible by 1 + t + ... + t^(k-1)"))?;
    alexander_normal_form(quotient)
}
