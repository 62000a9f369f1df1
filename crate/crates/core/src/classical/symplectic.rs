//! Symplectic normalization of the antisymmetrization V - V^T.
//!
//! A Seifert matrix V of size 2k has det(V - V^T) = 1, so V - V^T is an
//! integer symplectic form and some unimodular P brings it to the standard
//! block shape. We normalize to
//!
//! ```text
//! P (V - V^T) P^T = [[0, I_k], [-I_k, 0]]
//! ```
//!
//! (upper-right +I). With this orientation the normalized matrix splits as
//! W = [[B, C+I], [C^T, D]] with B, D symmetric, which is the shape the
//! Blanchfield presentation matrix is built from.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::IntMat;

/// Result of normalizing a Seifert matrix: `v_normalized = p * v * p^T`
/// and `v_normalized - v_normalized^T` is the standard form for genus `k`.
#[derive(Clone, Debug)]
pub struct SymplecticNormalization {
    pub p: IntMat,
    pub v_normalized: IntMat,
    pub k: usize,
}

/// The standard symplectic form [[0, I_k], [-I_k, 0]] of size 2k.
pub fn standard_symplectic_form(k: usize) -> IntMat {
    let mut j = IntMat::zero(2 * k, 2 * k);
    for b in 0..k {
        j.set(b, k + b, 1);
        j.set(k + b, b, -1);
    }
    j
}

/// Congruence ops applied simultaneously to the working matrix and the
/// accumulated transform, keeping `w = p * v * p^T` at every step.
struct State {
    w: IntMat,
    p: IntMat,
}

impl State {
    fn n(&self) -> usize {
        self.w.nrows()
    }

    /// Antisymmetric part entry w[i][j] - w[j][i].
    fn m(&self, i: usize, j: usize) -> BigInt {
        self.w.get(i, j) - self.w.get(j, i)
    }

    fn swap(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        let n = self.n();
        for c in 0..n {
            let a = self.w.get(i, c).clone();
            let b = self.w.get(j, c).clone();
            self.w.set(i, c, b);
            self.w.set(j, c, a);
        }
        for r in 0..n {
            let a = self.w.get(r, i).clone();
            let b = self.w.get(r, j).clone();
            self.w.set(r, i, b);
            self.w.set(r, j, a);
        }
        for c in 0..n {
            let a = self.p.get(i, c).clone();
            let b = self.p.get(j, c).clone();
            self.p.set(i, c, b);
            self.p.set(j, c, a);
        }
    }

    fn negate(&mut self, i: usize) {
        let n = self.n();
        for c in 0..n {
            let v = -self.w.get(i, c);
            self.w.set(i, c, v);
        }
        for r in 0..n {
            let v = -self.w.get(r, i);
            self.w.set(r, i, v);
        }
        for c in 0..n {
            let v = -self.p.get(i, c);
            self.p.set(i, c, v);
        }
    }

    /// Row/col `dst` += c * row/col `src` (the congruence by I + c*E_{dst,src}).
    fn addmul(&mut self, src: usize, dst: usize, c: &BigInt) {
        debug_assert_ne!(src, dst);
        if c.is_zero() {
            return;
        }
        let n = self.n();
        for col in 0..n {
            let add = c * self.w.get(src, col);
            *self.w.get_mut(dst, col) += add;
        }
        for row in 0..n {
            let add = c * self.w.get(row, src);
            *self.w.get_mut(row, dst) += add;
        }
        for col in 0..n {
            let add = c * self.p.get(src, col);
            *self.p.get_mut(dst, col) += add;
        }
    }
}

/// Euclidean quotient such that `a - q*d` lies in `[0, d)` for d > 0.
fn quot(a: &BigInt, d: &BigInt) -> BigInt {
    use num_integer::Integer;
    let r = a.mod_floor(d);
    (a - r) / d
}

/// Brings `v - v^T` to the standard symplectic form by an integer
/// congruence, returning the transform and the transformed matrix.
///
/// The reduction is the skew analogue of Smith normal form: pick the
/// smallest antisymmetric entry as a pivot pair, clear its two rows by
/// euclidean steps (each nonzero remainder strictly shrinks the pivot),
/// and peel off a hyperbolic block once the pivot reaches 1. Determinant
/// one forces every block pivot to 1, so a stuck pivot is a hard error.
pub fn symplectic_normalize(v: &IntMat) -> Result<SymplecticNormalization> {
    if !v.is_square() {
        return Err(Error::invalid("Seifert matrix must be square"));
    }
    let n = v.nrows();
    if n % 2 != 0 {
        return Err(Error::invalid("Seifert matrix must have even size"));
    }
    let k = n / 2;
    let m = v.sub(&v.transpose());
    if !m.det().is_one() {
        return Err(Error::invalid(
            "antisymmetrization of the Seifert matrix must have determinant one",
        ));
    }

    let mut st = State { w: v.clone(), p: IntMat::identity(n) };

    for b in 0..k {
        let lo = 2 * b;
        'block: loop {
            // Smallest nonzero antisymmetric entry in the live submatrix.
            let mut best: Option<(usize, usize, BigInt)> = None;
            for i in lo..n {
                for j in i + 1..n {
                    let e = st.m(i, j);
                    if e.is_zero() {
                        continue;
                    }
                    let a = e.abs();
                    if best.as_ref().map(|(_, _, v)| a < *v).unwrap_or(true) {
                        best = Some((i, j, a));
                    }
                }
            }
            let (i, j) = match best {
                Some((i, j, _)) => (i, j),
                None => return Err(Error::internal("degenerate symplectic form")),
            };
            st.swap(i, lo);
            let j = if j == lo { i } else { j };
            st.swap(j, lo + 1);
            if st.m(lo, lo + 1).is_negative() {
                st.negate(lo + 1);
            }

            let d = st.m(lo, lo + 1);
            debug_assert!(d.is_positive());
            // Clear row `lo` (pivot partner is column lo+1) and row `lo+1`
            // (partner column lo). A nonzero remainder is a smaller pivot;
            // restart the block on it.
            let mut shrunk = false;
            for c in lo + 2..n {
                let q = quot(&st.m(lo, c), &d);
                st.addmul(lo + 1, c, &(-q));
                if !st.m(lo, c).is_zero() {
                    shrunk = true;
                }
            }
            for c in lo + 2..n {
                // m(lo+1, lo) = -d, so adding q copies of col `lo` subtracts q*d.
                let q = quot(&st.m(lo + 1, c), &d);
                st.addmul(lo, c, &q);
                if !st.m(lo + 1, c).is_zero() {
                    shrunk = true;
                }
            }
            if shrunk {
                continue 'block;
            }
            if d.is_one() {
                break 'block;
            }
            // Pivot > 1 with clean rows: pull in any entry it does not
            // divide; the next sweep then shrinks the pivot.
            for r in lo + 2..n {
                for c in r + 1..n {
                    if !(st.m(r, c) % &d).is_zero() {
                        st.addmul(r, lo, &BigInt::one());
                        continue 'block;
                    }
                }
            }
            return Err(Error::internal(
                "symplectic reduction stalled on a pivot greater than one",
            ));
        }
    }

    // Interleaved hyperbolic pairs (0,1), (2,3), ... -> block layout
    // (0..k | k..2k) via the permutation sending 2b to b and 2b+1 to k+b.
    let mut q = IntMat::zero(n, n);
    for b in 0..k {
        q.set(b, 2 * b, 1);
        q.set(k + b, 2 * b + 1, 1);
    }
    let w = st.w.congruence(&q);
    let p = q.mul(&st.p);

    let norm = SymplecticNormalization { p, v_normalized: w, k };
    norm.verify(v)?;
    Ok(norm)
}

impl SymplecticNormalization {
    /// Re-checks the defining identities by exact multiplication.
    pub fn verify(&self, v: &IntMat) -> Result<()> {
        if !self.p.is_unimodular() {
            return Err(Error::internal("normalizing transform is not unimodular"));
        }
        if v.congruence(&self.p) != self.v_normalized {
            return Err(Error::internal("normalization does not reproduce P V P^T"));
        }
        let anti = self.v_normalized.sub(&self.v_normalized.transpose());
        if anti != standard_symplectic_form(self.k) {
            return Err(Error::internal(
                "normalized antisymmetrization is not the standard form",
            ));
        }
        Ok(())
    }

    /// The four k-square blocks [[B, C+I], [C^T, D]] of the normalized
    /// matrix; B and D come out symmetric.
    pub fn blocks(&self) -> (IntMat, IntMat, IntMat) {
        let k = self.k;
        let mut b = IntMat::zero(k, k);
        let mut c = IntMat::zero(k, k);
        let mut d = IntMat::zero(k, k);
        for i in 0..k {
            for j in 0..k {
                b.set(i, j, self.v_normalized.get(i, j).clone());
                let mut cij = self.v_normalized.get(i, k + j).clone();
                if i == j {
                    cij -= 1;
                }
                c.set(i, j, cij);
                d.set(i, j, self.v_normalized.get(k + i, k + j).clone());
            }
        }
        (b, c, d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn trefoil_v() -> IntMat {
        IntMat::from_i64(&[&[-1, 1], &[0, -1]])
    }

    #[test]
    fn trefoil_already_standard() {
        let norm = symplectic_normalize(&trefoil_v()).unwrap();
        assert_eq!(norm.k, 1);
        assert_eq!(
            norm.v_normalized.sub(&norm.v_normalized.transpose()),
            standard_symplectic_form(1)
        );
        let (b, c, d) = norm.blocks();
        assert!(b.is_symmetric());
        assert!(d.is_symmetric());
        assert_eq!(c, IntMat::zero(1, 1));
    }

    #[test]
    fn transposed_trefoil_needs_a_swap() {
        let v = trefoil_v().transpose();
        let norm = symplectic_normalize(&v).unwrap();
        norm.verify(&v).unwrap();
        assert_eq!(norm.k, 1);
    }

    #[test]
    fn block_sum_of_two_trefoils_interleaves() {
        let mut v = IntMat::zero(4, 4);
        for (a, b) in [(0usize, 1usize), (2, 3)] {
            v.set(a, a, -1);
            v.set(a, b, 1);
            v.set(b, b, -1);
        }
        let norm = symplectic_normalize(&v).unwrap();
        norm.verify(&v).unwrap();
        assert_eq!(norm.k, 2);
        let (b, _, d) = norm.blocks();
        assert!(b.is_symmetric());
        assert!(d.is_symmetric());
        // The transform genuinely interleaves: it is not the identity.
        assert_ne!(norm.p, IntMat::identity(4));
    }

    #[test]
    fn scrambled_input_recovered() {
        // Conjugate a standard-form matrix by a unimodular transform and
        // check the algorithm recovers a normalization of the scramble.
        let w0 = IntMat::from_i64(&[
            &[1, 0, 1, 1],
            &[0, -1, 0, 1],
            &[0, 0, 0, 0],
            &[1, 0, 0, 2],
        ]);
        assert_eq!(w0.sub(&w0.transpose()), standard_symplectic_form(2));
        let p0 = IntMat::from_i64(&[
            &[1, 1, 0, 0],
            &[0, 1, 0, 0],
            &[0, 2, 1, 0],
            &[0, 0, -1, 1],
        ]);
        assert!(p0.is_unimodular());
        let v = w0.congruence(&p0);
        let norm = symplectic_normalize(&v).unwrap();
        norm.verify(&v).unwrap();
        assert_eq!(norm.k, 2);
    }

    #[test]
    fn rejects_odd_and_degenerate() {
        let odd = IntMat::from_i64(&[&[0]]);
        assert!(symplectic_normalize(&odd).is_err());
        // Antisymmetrization [[0, 2], [-2, 0]] has determinant 4.
        let deg = IntMat::from_i64(&[&[0, 2], &[0, 0]]);
        assert!(symplectic_normalize(&deg).is_err());
    }

    #[test]
    fn empty_matrix_is_already_normal() {
        let v = IntMat::zero(0, 0);
        let norm = symplectic_normalize(&v).unwrap();
        assert_eq!(norm.k, 0);
        norm.verify(&v).unwrap();
    }
}
