//! Integer and rational dense matrices: exact determinants, congruence
//! transforms, and signatures of symmetric forms. Sizes here are small
//! (twice the genus of a Seifert surface), so dense BigInt arithmetic is
//! plenty.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Dense matrix over Z, row-major, not necessarily square.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntMat {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMat { rows, cols, entries: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            *m.get_mut(i, i) = BigInt::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map(|x| x.len()).unwrap_or(0);
        if rows.iter().any(|x| x.len() != c) {
            return Err(Error::invalid("ragged matrix rows"));
        }
        Ok(IntMat { rows: r, cols: c, entries: rows.into_iter().flatten().collect() })
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
        .expect("literal rows are rectangular")
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.cols + j]
    }

    pub fn get_mut(&mut self, i: usize, j: usize) -> &mut BigInt {
        &mut self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: impl Into<BigInt>) {
        self.entries[i * self.cols + j] = v.into();
    }

    pub fn transpose(&self) -> Self {
        let mut m = Self::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                *m.get_mut(j, i) = self.get(i, j).clone();
            }
        }
        m
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows);
        let mut m = Self::zero(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let add = a * rhs.get(k, j);
                    *m.get_mut(i, j) += add;
                }
            }
        }
        m
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        IntMat {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        IntMat {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scale_int(&self, k: i64) -> Self {
        let k = BigInt::from(k);
        IntMat {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e * &k).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        IntMat {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|a| -a).collect(),
        }
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && self.transpose() == *self
    }

    pub fn is_antisymmetric(&self) -> bool {
        self.is_square() && self.transpose() == self.neg()
    }

    /// Congruence transform `P * self * P^T`.
    pub fn congruence(&self, p: &IntMat) -> Self {
        p.mul(self).mul(&p.transpose())
    }

    /// Exact determinant by fraction-free Bareiss elimination.
    pub fn det(&self) -> BigInt {
        assert!(self.is_square());
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut m: Vec<Vec<BigInt>> = (0..n)
            .map(|i| (0..n).map(|j| self.get(i, j).clone()).collect())
            .collect();
        let mut sign = 1i32;
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                    Some(r) => {
                        m.swap(k, r);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &m[k][k] * &m[i][j] - &m[i][k] * &m[k][j];
                    m[i][j] = &num / &prev;
                }
                m[i][k] = BigInt::zero();
            }
            prev = m[k][k].clone();
        }
        let d = m[n - 1][n - 1].clone();
        if sign < 0 {
            -d
        } else {
            d
        }
    }

    pub fn is_unimodular(&self) -> bool {
        self.is_square() && self.det().abs().is_one()
    }

    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.rows.min(self.cols))
            .map(|i| self.get(i, i).clone())
            .collect()
    }
}

/// Signature data of a symmetric rational matrix.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Inertia {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

impl Inertia {
    pub fn signature(&self) -> i64 {
        self.positive as i64 - self.negative as i64
    }
}

/// Inertia of a symmetric matrix over Q by exact congruence
/// diagonalization (Lagrange reduction with the off-diagonal fallback).
pub fn inertia_symmetric(m: &[Vec<BigRational>]) -> Result<Inertia> {
    let n = m.len();
    if m.iter().any(|r| r.len() != n) {
        return Err(Error::invalid("inertia needs a square matrix"));
    }
    for i in 0..n {
        for j in 0..i {
            if m[i][j] != m[j][i] {
                return Err(Error::invalid("inertia needs a symmetric matrix"));
            }
        }
    }
    let mut a = m.to_vec();
    let mut pos = 0usize;
    let mut neg = 0usize;
    let mut zer = 0usize;
    let mut live: Vec<usize> = (0..n).collect();
    while !live.is_empty() {
        // Prefer a nonzero diagonal pivot among live indices.
        let pivot = live.iter().copied().find(|&i| !a[i][i].is_zero());
        let p = match pivot {
            Some(p) => p,
            None => {
                // All live diagonal entries are zero; find an off-diagonal
                // nonzero and fold it onto the diagonal.
                let mut found = None;
                'outer: for (ii, &i) in live.iter().enumerate() {
                    for &j in &live[ii + 1..] {
                        if !a[i][j].is_zero() {
                            found = Some((i, j));
                            break 'outer;
                        }
                    }
                }
                match found {
                    Some((i, j)) => {
                        // Row/col i += row/col j makes a[i][i] = 2 a[i][j].
                        for k in 0..n {
                            let add = a[j][k].clone();
                            a[i][k] += add;
                        }
                        for k in 0..n {
                            let add = a[k][j].clone();
                            a[k][i] += add;
                        }
                        i
                    }
                    None => {
                        zer += live.len();
                        break;
                    }
                }
            }
        };
        let d = a[p][p].clone();
        if d.is_positive() {
            pos += 1;
        } else {
            neg += 1;
        }
        live.retain(|&i| i != p);
        // Clear row/col p against the remaining live block.
        let others: Vec<usize> = live.clone();
        for &i in &others {
            if a[i][p].is_zero() {
                continue;
            }
            let factor = &a[i][p] / &d;
            for k in 0..n {
                let sub = &factor * &a[p][k];
                a[i][k] -= sub;
            }
            for k in 0..n {
                let sub = &factor * &a[k][p];
                a[k][i] -= sub;
            }
        }
    }
    Ok(Inertia { positive: pos, negative: neg, zero: zer })
}

/// Inertia of a symmetric integer matrix.
pub fn inertia_symmetric_int(m: &IntMat) -> Result<Inertia> {
    let n = m.nrows();
    let rows: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| BigRational::from_integer(m.get(i, j).clone()))
                .collect()
        })
        .collect();
    inertia_symmetric(&rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn det_examples() {
        let m = IntMat::from_i64(&[&[1, 2], &[3, 4]]);
        assert_eq!(m.det(), BigInt::from(-2));
        let m = IntMat::from_i64(&[&[0, 1], &[1, 0]]);
        assert_eq!(m.det(), BigInt::from(-1));
        assert!(m.is_unimodular());
        let id = IntMat::identity(4);
        assert_eq!(id.det(), BigInt::one());
    }

    #[test]
    fn congruence_transform() {
        let m = IntMat::from_i64(&[&[0, 1], &[-1, 0]]);
        let p = IntMat::from_i64(&[&[1, 1], &[0, 1]]);
        let c = m.congruence(&p);
        assert!(c.is_antisymmetric());
        assert_eq!(c.det(), BigInt::one());
    }

    #[test]
    fn inertia_diagonal_and_hyperbolic() {
        let m = IntMat::from_i64(&[&[2, 0], &[0, -3]]);
        let i = inertia_symmetric_int(&m).unwrap();
        assert_eq!((i.positive, i.negative, i.zero), (1, 1, 0));
        assert_eq!(i.signature(), 0);
        // Hyperbolic plane: signature 0, no kernel.
        let h = IntMat::from_i64(&[&[0, 1], &[1, 0]]);
        let i = inertia_symmetric_int(&h).unwrap();
        assert_eq!((i.positive, i.negative, i.zero), (1, 1, 0));
        // Definite example.
        let d = IntMat::from_i64(&[&[2, 1], &[1, 2]]);
        let i = inertia_symmetric_int(&d).unwrap();
        assert_eq!((i.positive, i.negative), (2, 0));
        // Singular example.
        let s = IntMat::from_i64(&[&[1, 1], &[1, 1]]);
        let i = inertia_symmetric_int(&s).unwrap();
        assert_eq!((i.positive, i.negative, i.zero), (1, 0, 1));
    }

    #[test]
    fn inertia_rejects_asymmetric() {
        let m = IntMat::from_i64(&[&[0, 1], &[2, 0]]);
        assert!(inertia_symmetric_int(&m).is_err());
    }
}
