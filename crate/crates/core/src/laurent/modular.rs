//! Exact determinants of Laurent-entry matrices via modular evaluation.
//!
//! The determinant is a Laurent polynomial whose coefficient sizes are
//! bounded a priori by the product of row 1-norms (a permanent-style bound).
//! Evaluating the matrix at enough integer points modulo enough 62-bit
//! primes, interpolating, and CRT-lifting into the certified range
//! reconstructs the determinant exactly. All primes and sample points are
//! fixed deterministically.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::laurent::LaurentPoly;

pub(crate) fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn powmod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod(acc, base, p);
        }
        base = mulmod(base, base, p);
        exp >>= 1;
    }
    acc
}

pub(crate) fn invmod(a: u64, p: u64) -> u64 {
    powmod(a, p - 2, p)
}

/// Deterministic Miller-Rabin; the witness set is complete for u64.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == q {
            return true;
        }
        if n % q == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// The first `count` primes below 2^62, descending.
pub(crate) fn working_primes(count: usize) -> Vec<u64> {
    let mut primes = Vec::with_capacity(count);
    let mut candidate: u64 = (1 << 62) - 1;
    while primes.len() < count {
        if is_prime_u64(candidate) {
            primes.push(candidate);
        }
        candidate -= 2;
    }
    primes
}

/// Determinant over F_p by Gaussian elimination with partial pivoting.
pub(crate) fn det_mod(mut m: Vec<Vec<u64>>, p: u64) -> u64 {
    let n = m.len();
    let mut det = 1u64;
    for k in 0..n {
        let pivot_row = match (k..n).find(|&r| m[r][k] % p != 0) {
            Some(r) => r,
            None => return 0,
        };
        if pivot_row != k {
            m.swap(k, pivot_row);
            det = p - det;
        }
        let pivot = m[k][k] % p;
        det = mulmod(det, pivot, p);
        let pinv = invmod(pivot, p);
        for i in k + 1..n {
            if m[i][k] % p == 0 {
                continue;
            }
            let factor = mulmod(m[i][k] % p, pinv, p);
            for j in k..n {
                let sub = mulmod(factor, m[k][j] % p, p);
                m[i][j] = (m[i][j] % p + p - sub) % p;
            }
        }
    }
    det % p
}

/// Coefficients of the unique polynomial of degree < points.len() through
/// the given values, mod p. O(D^2) Lagrange with synthetic division.
pub(crate) fn interpolate_mod(points: &[u64], values: &[u64], p: u64) -> Vec<u64> {
    let d = points.len();
    assert_eq!(values.len(), d);
    // Master polynomial M(x) = prod (x - x_j).
    let mut master = vec![0u64; d + 1];
    master[0] = 1;
    let mut deg = 0usize;
    for &xj in points {
        let neg = (p - xj % p) % p;
        master[deg + 1] = 0;
        for i in (0..=deg).rev() {
            let shifted = master[i];
            master[i + 1] = (master[i + 1] + shifted) % p;
            master[i] = mulmod(master[i], neg, p);
        }
        deg += 1;
    }
    let mut result = vec![0u64; d];
    let mut quotient = vec![0u64; d];
    for (&xj, &vj) in points.iter().zip(values) {
        // Synthetic division of master by (x - xj): master has degree d.
        let mut carry = 0u64;
        for i in (0..d).rev() {
            let c = (master[i + 1] + mulmod(carry, xj % p, p)) % p;
            quotient[i] = c;
            carry = c;
        }
        // Denominator = Q(xj) = prod_{k != j} (xj - x_k).
        let mut denom = 0u64;
        for i in (0..d).rev() {
            denom = (mulmod(denom, xj % p, p) + quotient[i]) % p;
        }
        let w = mulmod(vj % p, invmod(denom, p), p);
        for i in 0..d {
            result[i] = (result[i] + mulmod(w, quotient[i], p)) % p;
        }
    }
    result
}

/// CRT lift of per-prime residue vectors into the symmetric range of the
/// prime product.
pub(crate) fn crt_lift(residues: &[Vec<u64>], primes: &[u64]) -> Vec<BigInt> {
    let len = residues[0].len();
    let mut modulus = BigInt::one();
    for &p in primes {
        modulus *= BigInt::from(p);
    }
    let half = &modulus / 2;
    let mut out = Vec::with_capacity(len);
    for i in 0..len {
        let mut x = BigInt::zero();
        let mut m_part = BigInt::one();
        for (vec, &p) in residues.iter().zip(primes) {
            let pb = BigInt::from(p);
            let r = BigInt::from(vec[i]);
            // Solve x + m_part * k ≡ r (mod p).
            let x_mod = ((&x % &pb) + &pb) % &pb;
            let diff = ((r - x_mod) % &pb + &pb) % &pb;
            let m_mod = ((&m_part % &pb) + &pb) % &pb;
            let m_inv = BigInt::from(invmod(
                u64::try_from(&m_mod % &pb).expect("residue fits"),
                p,
            ));
            let k = (diff * m_inv) % &pb;
            x += &m_part * k;
            m_part *= pb;
        }
        x %= &modulus;
        if x > half {
            x -= &modulus;
        }
        if x < -&half {
            x += &modulus;
        }
        out.push(x);
    }
    out
}

/// Exact determinant of a square Laurent-entry matrix by modular
/// evaluation-interpolation. Suitable for large matrices; the result is
/// certified by the row-norm coefficient bound.
pub(crate) fn det_by_interpolation(rows: &[Vec<LaurentPoly>]) -> LaurentPoly {
    let n = rows.len();
    if n == 0 {
        return LaurentPoly::one();
    }
    // Shift each row to nonnegative exponents, tracking the total shift.
    let mut shift_total: i64 = 0;
    let mut shifted: Vec<Vec<LaurentPoly>> = Vec::with_capacity(n);
    let mut degree_bound: i64 = 0;
    let mut coeff_bound = BigInt::one();
    for row in rows {
        let row_min = row
            .iter()
            .filter_map(|e| e.min_exp())
            .min();
        let row_min = match row_min {
            Some(m) => m,
            None => return LaurentPoly::zero(),
        };
        let srow: Vec<LaurentPoly> = row.iter().map(|e| e.shifted(-row_min)).collect();
        let row_deg = srow.iter().filter_map(|e| e.max_exp()).max().unwrap_or(0);
        let mut row_norm = BigInt::zero();
        for e in &srow {
            for (_, c) in e.terms() {
                row_norm += c.abs();
            }
        }
        if row_norm.is_zero() {
            return LaurentPoly::zero();
        }
        coeff_bound *= row_norm;
        degree_bound += row_deg;
        shift_total += row_min;
        shifted.push(srow);
    }
    let num_points = (degree_bound + 1) as usize;
    // Enough primes that the product exceeds twice the coefficient bound.
    let mut primes = Vec::new();
    {
        let target = BigInt::from(2) * &coeff_bound + BigInt::one();
        let mut product = BigInt::one();
        let mut pool_size = 1;
        while product < target {
            primes = working_primes(pool_size);
            product = primes.iter().map(|&p| BigInt::from(p)).product();
            pool_size += 1;
        }
    }

    let points: Vec<u64> = (1..=num_points as u64).collect();
    let mut residues: Vec<Vec<u64>> = Vec::with_capacity(primes.len());
    for &p in &primes {
        let mut values = Vec::with_capacity(num_points);
        for &x in &points {
            let mut m = Vec::with_capacity(n);
            for row in &shifted {
                let mut mrow = Vec::with_capacity(n);
                for entry in row {
                    mrow.push(eval_entry_mod(entry, x, p));
                }
                m.push(mrow);
            }
            values.push(det_mod(m, p));
        }
        residues.push(interpolate_mod(&points, &values, p));
    }
    let coeffs = crt_lift(&residues, &primes);
    LaurentPoly::from_coeffs(shift_total, coeffs)
}

fn eval_entry_mod(entry: &LaurentPoly, x: u64, p: u64) -> u64 {
    // Entries are shifted to nonnegative exponents before evaluation.
    let mut acc = 0u64;
    let max = match entry.max_exp() {
        Some(m) => m,
        None => return 0,
    };
    debug_assert!(entry.min_exp().unwrap() >= 0);
    let mut e = max;
    loop {
        acc = mulmod(acc, x % p, p);
        let c = entry.coeff(e);
        let c_mod = ((&c % BigInt::from(p)) + BigInt::from(p)) % BigInt::from(p);
        acc = (acc + u64::try_from(c_mod).expect("residue fits")) % p;
        if e == 0 {
            break;
        }
        e -= 1;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        assert!(is_prime_u64(2));
        assert!(is_prime_u64((1 << 61) - 1));
        assert!(!is_prime_u64(1));
        assert!(!is_prime_u64((1 << 62) - 1));
        let ps = working_primes(3);
        assert_eq!(ps.len(), 3);
        for p in ps {
            assert!(is_prime_u64(p));
            assert!(p < 1 << 62);
        }
    }

    #[test]
    fn det_mod_small() {
        let p = working_primes(1)[0];
        // det [[1,2],[3,4]] = -2.
        let d = det_mod(vec![vec![1, 2], vec![3, 4]], p);
        assert_eq!(d, p - 2);
        // Singular matrix.
        let d = det_mod(vec![vec![1, 2], vec![2, 4]], p);
        assert_eq!(d, 0);
    }

    #[test]
    fn interpolation_round_trip() {
        let p = working_primes(1)[0];
        // f(x) = 3x^2 + 2x + 7.
        let points: Vec<u64> = vec![1, 2, 3];
        let values: Vec<u64> = points.iter().map(|&x| (3 * x * x + 2 * x + 7) % p).collect();
        let coeffs = interpolate_mod(&points, &values, p);
        assert_eq!(coeffs, vec![7, 2, 3]);
    }

    #[test]
    fn interp_det_matches_direct() {
        use crate::laurent::LaurentPoly as P;
        let t = P::t_pow(1);
        let one = P::one();
        // [[t, 1], [1, t^-1 + 1]]: det = t*(t^-1 + 1) - 1 = t.
        let rows = vec![
            vec![t.clone(), one.clone()],
            vec![one.clone(), &P::t_pow(-1) + &one],
        ];
        let det = det_by_interpolation(&rows);
        assert_eq!(det, t);
    }
}
