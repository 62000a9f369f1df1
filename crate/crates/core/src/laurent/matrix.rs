use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::laurent::modular::det_by_interpolation;
use crate::laurent::{LaurentPoly, RationalFn};

/// Square matrix with entries in Z[t^±1].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LambdaMatrix {
    n: usize,
    entries: Vec<LaurentPoly>,
}

/// Symbolic Bareiss stays exact but its intermediate polynomials grow;
/// beyond this size the modular-interpolation path is faster.
const BAREISS_LIMIT: usize = 12;

impl LambdaMatrix {
    pub fn zero(n: usize) -> Self {
        LambdaMatrix { n, entries: vec![LaurentPoly::zero(); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            *m.get_mut(i, i) = LaurentPoly::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<LaurentPoly>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::invalid("matrix rows must form a square"));
        }
        Ok(LambdaMatrix { n, entries: rows.into_iter().flatten().collect() })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &LaurentPoly {
        &self.entries[i * self.n + j]
    }

    pub fn get_mut(&mut self, i: usize, j: usize) -> &mut LaurentPoly {
        &mut self.entries[i * self.n + j]
    }

    pub fn rows(&self) -> Vec<Vec<LaurentPoly>> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j).clone()).collect())
            .collect()
    }

    pub fn transpose(&self) -> Self {
        let mut m = Self::zero(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                *m.get_mut(j, i) = self.get(i, j).clone();
            }
        }
        m
    }

    /// Transpose composed with the involution `t -> t^{-1}` on entries.
    pub fn conj_transpose(&self) -> Self {
        let mut m = Self::zero(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                *m.get_mut(j, i) = self.get(i, j).involute();
            }
        }
        m
    }

    pub fn is_hermitian(&self) -> bool {
        self.conj_transpose() == *self
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.n, rhs.n);
        let entries = self
            .entries
            .iter()
            .zip(&rhs.entries)
            .map(|(a, b)| a + b)
            .collect();
        LambdaMatrix { n: self.n, entries }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!(self.n, rhs.n);
        let entries = self
            .entries
            .iter()
            .zip(&rhs.entries)
            .map(|(a, b)| a - b)
            .collect();
        LambdaMatrix { n: self.n, entries }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.n, rhs.n);
        let mut m = Self::zero(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                let mut acc = LaurentPoly::zero();
                for k in 0..self.n {
                    acc = &acc + &(self.get(i, k) * rhs.get(k, j));
                }
                *m.get_mut(i, j) = acc;
            }
        }
        m
    }

    pub fn scale(&self, s: &LaurentPoly) -> Self {
        let entries = self.entries.iter().map(|e| e * s).collect();
        LambdaMatrix { n: self.n, entries }
    }

    /// Exact determinant. Dispatches between fraction-free Bareiss and
    /// certified modular interpolation by size.
    pub fn det(&self) -> LaurentPoly {
        if self.n <= BAREISS_LIMIT {
            self.det_bareiss()
        } else {
            det_by_interpolation(&self.rows())
        }
    }

    /// Fraction-free Bareiss elimination; every division is exact in the
    /// Laurent ring.
    pub fn det_bareiss(&self) -> LaurentPoly {
        let n = self.n;
        if n == 0 {
            return LaurentPoly::one();
        }
        let mut m = self.rows();
        let mut sign = 1i32;
        let mut prev = LaurentPoly::one();
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                    Some(r) => {
                        m.swap(k, r);
                        sign = -sign;
                    }
                    None => return LaurentPoly::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(&m[k][k] * &m[i][j]) - &(&m[i][k] * &m[k][j]);
                    m[i][j] = num
                        .exact_div(&prev)
                        .expect("Bareiss division is exact over an integral domain");
                }
                m[i][k] = LaurentPoly::zero();
            }
            prev = m[k][k].clone();
        }
        let det = m[n - 1][n - 1].clone();
        if sign < 0 {
            -det
        } else {
            det
        }
    }

    /// Reference determinant by cofactor expansion along the first row.
    /// Exponential; kept as an independent cross-check for small matrices.
    pub fn det_cofactor(&self) -> LaurentPoly {
        fn go(rows: &[Vec<LaurentPoly>]) -> LaurentPoly {
            let n = rows.len();
            if n == 0 {
                return LaurentPoly::one();
            }
            if n == 1 {
                return rows[0][0].clone();
            }
            let mut acc = LaurentPoly::zero();
            for j in 0..n {
                if rows[0][j].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<LaurentPoly>> = rows[1..]
                    .iter()
                    .map(|r| {
                        r.iter()
                            .enumerate()
                            .filter(|(c, _)| *c != j)
                            .map(|(_, e)| e.clone())
                            .collect()
                    })
                    .collect();
                let term = &rows[0][j] * &go(&minor);
                acc = if j % 2 == 0 { &acc + &term } else { &acc - &term };
            }
            acc
        }
        go(&self.rows())
    }

    /// Determinant by certified modular interpolation, independent of size.
    pub fn det_interpolated(&self) -> LaurentPoly {
        det_by_interpolation(&self.rows())
    }

    /// Solves `A x = b` by Cramer's rule; entries of `x` are rational
    /// functions. Fails when the determinant vanishes.
    pub fn solve(&self, b: &[LaurentPoly]) -> Result<Vec<RationalFn>> {
        assert_eq!(b.len(), self.n);
        let det = self.det();
        if det.is_zero() {
            return Err(Error::invalid("singular matrix"));
        }
        let mut out = Vec::with_capacity(self.n);
        for col in 0..self.n {
            let mut m = self.clone();
            for i in 0..self.n {
                *m.get_mut(i, col) = b[i].clone();
            }
            out.push(RationalFn::new(m.det(), det.clone())?);
        }
        Ok(out)
    }

    /// Entrywise exact evaluation at a nonzero rational point.
    pub fn evaluate(&self, x: &BigRational) -> Result<Vec<Vec<BigRational>>> {
        let mut rows = Vec::with_capacity(self.n);
        for i in 0..self.n {
            let mut row = Vec::with_capacity(self.n);
            for j in 0..self.n {
                row.push(self.get(i, j).evaluate(x)?);
            }
            rows.push(row);
        }
        Ok(rows)
    }
}
