use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Laurent polynomial in one variable `t` with `BigInt` coefficients.
///
/// Invariant: `coeffs` is empty exactly for the zero polynomial; otherwise
/// its first and last entries are nonzero and `coeffs[i]` is the coefficient
/// of `t^(min_exp + i)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    min_exp: i64,
    coeffs: Vec<BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { min_exp: 0, coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(BigInt::one(), 0)
    }

    pub fn monomial(coeff: impl Into<BigInt>, exp: i64) -> Self {
        let c: BigInt = coeff.into();
        if c.is_zero() {
            Self::zero()
        } else {
            LaurentPoly { min_exp: exp, coeffs: vec![c] }
        }
    }

    /// `t^exp`.
    pub fn t_pow(exp: i64) -> Self {
        Self::monomial(1, exp)
    }

    /// Builds from a coefficient run starting at `min_exp`, trimming zeros.
    pub fn from_coeffs(min_exp: i64, coeffs: Vec<BigInt>) -> Self {
        let mut p = LaurentPoly { min_exp, coeffs };
        p.normalize();
        p
    }

    pub fn from_terms(terms: &[(i64, BigInt)]) -> Self {
        let mut acc = Self::zero();
        for (e, c) in terms {
            acc = &acc + &Self::monomial(c.clone(), *e);
        }
        acc
    }

    fn normalize(&mut self) {
        while let Some(last) = self.coeffs.last() {
            if last.is_zero() {
                self.coeffs.pop();
            } else {
                break;
            }
        }
        let lead_zeros = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead_zeros > 0 {
            self.coeffs.drain(..lead_zeros);
            self.min_exp += lead_zeros as i64;
        }
        if self.coeffs.is_empty() {
            self.min_exp = 0;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.min_exp == 0 && self.coeffs[0].is_one()
    }

    /// True for `±t^k`.
    pub fn is_unit(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].abs().is_one()
    }

    pub fn min_exp(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.min_exp)
        }
    }

    pub fn max_exp(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.min_exp + self.coeffs.len() as i64 - 1)
        }
    }

    /// Exponent span `max_exp - min_exp`; 0 for monomials and for zero.
    pub fn span(&self) -> i64 {
        if self.is_zero() {
            0
        } else {
            self.coeffs.len() as i64 - 1
        }
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        if self.is_zero() {
            return BigInt::zero();
        }
        let idx = exp - self.min_exp;
        if idx < 0 || idx >= self.coeffs.len() as i64 {
            BigInt::zero()
        } else {
            self.coeffs[idx as usize].clone()
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        let min = self.min_exp;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (min + i as i64, c))
    }

    pub fn leading_coeff(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn trailing_coeff(&self) -> BigInt {
        self.coeffs.first().cloned().unwrap_or_else(BigInt::zero)
    }

    /// Gcd of all coefficients (positive), 0 for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = num_integer::gcd(g, c.clone());
        }
        g
    }

    /// The involution `t -> t^{-1}`.
    pub fn involute(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        LaurentPoly {
            min_exp: -(self.min_exp + self.coeffs.len() as i64 - 1),
            coeffs,
        }
    }

    /// Substitutes `t -> t^k` for `k != 0` (negative `k` composes with the
    /// involution).
    pub fn substitute_power(&self, k: i64) -> Self {
        assert!(k != 0, "substitute_power requires a nonzero exponent");
        if self.is_zero() {
            return Self::zero();
        }
        let mut terms: Vec<(i64, BigInt)> = Vec::new();
        for (e, c) in self.terms() {
            terms.push((e * k, c.clone()));
        }
        Self::from_terms(&terms)
    }

    pub fn shifted(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        LaurentPoly { min_exp: self.min_exp + k, coeffs: self.coeffs.clone() }
    }

    /// Formal derivative with respect to `t`.
    pub fn derivative(&self) -> Self {
        let mut terms: Vec<(i64, BigInt)> = Vec::new();
        for (e, c) in self.terms() {
            if e != 0 {
                terms.push((e - 1, c * BigInt::from(e)));
            }
        }
        Self::from_terms(&terms)
    }

    /// Exact evaluation at a nonzero rational point.
    pub fn evaluate(&self, x: &BigRational) -> Result<BigRational> {
        if x.is_zero() && self.min_exp < 0 {
            return Err(Error::invalid(
                "cannot evaluate a Laurent polynomial with negative exponents at 0",
            ));
        }
        // Horner on the polynomial part, then multiply by x^min_exp.
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from_integer(c.clone());
        }
        let shift = pow_rational(x, self.min_exp)?;
        Ok(acc * shift)
    }

    pub fn evaluate_int(&self, x: i64) -> Result<BigRational> {
        self.evaluate(&BigRational::from_integer(BigInt::from(x)))
    }

    /// Canonical associate: trailing exponent 0 and positive leading
    /// coefficient. Zero maps to zero.
    pub fn unit_normal(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut p = LaurentPoly { min_exp: 0, coeffs: self.coeffs.clone() };
        if p.coeffs.last().unwrap().is_negative() {
            for c in &mut p.coeffs {
                *c = -std::mem::take(c);
            }
        }
        p
    }

    /// Equality up to multiplication by `±t^k`.
    pub fn eq_up_to_unit(&self, other: &Self) -> bool {
        self.unit_normal() == other.unit_normal()
    }

    /// Exact division; `None` when `other` does not divide `self` in Z[t^±1].
    pub fn exact_div(&self, other: &Self) -> Option<Self> {
        if other.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        // Long division from the top; exactness requires every step to
        // divide in Z and a zero remainder.
        let mut rem = self.clone();
        let mut q_terms: Vec<(i64, BigInt)> = Vec::new();
        let d_lead = other.leading_coeff();
        let d_deg = other.max_exp().unwrap();
        while !rem.is_zero() && rem.span() >= other.span() {
            let r_lead = rem.leading_coeff();
            let (quot, r) = num_integer::div_rem(r_lead, d_lead.clone());
            if !r.is_zero() {
                return None;
            }
            let e = rem.max_exp().unwrap() - d_deg;
            let mono = Self::monomial(quot, e);
            rem = &rem - &(&mono * other);
            q_terms.push((e, mono.leading_coeff()));
            if !q_terms.is_empty() && rem.is_zero() {
                break;
            }
            if rem.span() >= self.span() + other.span() + 2 {
                // Degree must strictly drop; guards against a stuck loop.
                return None;
            }
        }
        if rem.is_zero() {
            Some(Self::from_terms(&q_terms))
        } else {
            None
        }
    }

    pub fn divides(&self, other: &Self) -> bool {
        other.exact_div(self).is_some()
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Parses the textual form emitted by `Display`: terms `c`, `t^e`,
    /// `c*t^e` (also `c t^e`) joined by `+` and `-`.
    pub fn parse(input: &str) -> Result<Self> {
        let cleaned = input.trim();
        if cleaned.is_empty() {
            return Err(Error::parse("empty polynomial"));
        }
        let mut terms: Vec<(i64, BigInt)> = Vec::new();
        let mut rest = cleaned;
        let mut sign = BigInt::one();
        let mut first = true;
        while !rest.is_empty() {
            rest = rest.trim_start();
            if rest.is_empty() {
                break;
            }
            if !first || rest.starts_with('+') || rest.starts_with('-') {
                let (s, tail) = rest.split_at(1);
                match s {
                    "+" => sign = BigInt::one(),
                    "-" => sign = -BigInt::one(),
                    _ if first => {}
                    _ => return Err(Error::parse(format!("expected sign at `{rest}`"))),
                }
                if s == "+" || s == "-" {
                    rest = tail.trim_start();
                }
            }
            first = false;
            let term_end = find_term_end(rest);
            let (term, tail) = rest.split_at(term_end);
            let term = term.trim();
            if term.is_empty() {
                return Err(Error::parse(format!("dangling sign near `{rest}`")));
            }
            let (coeff, exp) = parse_term(term)?;
            terms.push((exp, sign.clone() * coeff));
            sign = BigInt::one();
            rest = tail;
        }
        Ok(Self::from_terms(&terms))
    }
}

/// Index of the next `+`/`-` that separates terms; a sign directly after
/// `^` belongs to an exponent and does not split.
fn find_term_end(s: &str) -> usize {
    for (i, ch) in s.char_indices() {
        if ch == '+' || ch == '-' {
            let prev = s[..i].trim_end().chars().last();
            if prev != Some('^') {
                return i;
            }
        }
    }
    s.len()
}

fn parse_term(term: &str) -> Result<(BigInt, i64)> {
    let term = term.replace('*', " ");
    let term = term.trim();
    if let Some(tpos) = term.find('t') {
        let (coeff_str, t_part) = term.split_at(tpos);
        let coeff_str = coeff_str.trim();
        let coeff = if coeff_str.is_empty() {
            BigInt::one()
        } else {
            coeff_str
                .parse::<BigInt>()
                .map_err(|_| Error::parse(format!("bad coefficient `{coeff_str}`")))?
        };
        let exp_part = t_part[1..].trim();
        let exp = if exp_part.is_empty() {
            1
        } else if let Some(e) = exp_part.strip_prefix('^') {
            e.trim()
                .parse::<i64>()
                .map_err(|_| Error::parse(format!("bad exponent `{e}`")))?
        } else {
            return Err(Error::parse(format!("malformed term `{term}`")));
        };
        Ok((coeff, exp))
    } else {
        let coeff = term
            .parse::<BigInt>()
            .map_err(|_| Error::parse(format!("bad term `{term}`")))?;
        Ok((coeff, 0))
    }
}

fn pow_rational(x: &BigRational, e: i64) -> Result<BigRational> {
    if e == 0 {
        return Ok(BigRational::one());
    }
    if x.is_zero() {
        return if e > 0 {
            Ok(BigRational::zero())
        } else {
            Err(Error::invalid("zero raised to a negative power"))
        };
    }
    let mut acc = BigRational::one();
    let base = if e > 0 { x.clone() } else { x.recip() };
    for _ in 0..e.unsigned_abs() {
        acc *= base.clone();
    }
    Ok(acc)
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms() {
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit_mag = mag.is_one();
            match (e, unit_mag) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "t")?,
                (1, false) => write!(f, "{mag}*t")?,
                (_, true) => write!(f, "t^{e}")?,
                (_, false) => write!(f, "{mag}*t^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let min = self.min_exp.min(rhs.min_exp);
        let max = (self.min_exp + self.coeffs.len() as i64)
            .max(rhs.min_exp + rhs.coeffs.len() as i64);
        let mut coeffs = vec![BigInt::zero(); (max - min) as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[(self.min_exp - min) as usize + i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            coeffs[(rhs.min_exp - min) as usize + i] += c;
        }
        LaurentPoly::from_coeffs(min, coeffs)
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            min_exp: self.min_exp,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        LaurentPoly::from_coeffs(self.min_exp + rhs.min_exp, coeffs)
    }
}

macro_rules! forward_owned {
    ($trait:ident, $method:ident) => {
        impl $trait for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> LaurentPoly {
        LaurentPoly::parse(s).unwrap()
    }

    #[test]
    fn parse_and_display_round_trip() {
        for s in ["t^-1 - 1 + t", "1", "-3", "2*t^5 - t^-3", "t"] {
            let q = p(s);
            assert_eq!(p(&q.to_string()), q, "round trip for {s}");
        }
    }

    #[test]
    fn arithmetic_basics() {
        let a = p("t - 1 + t^-1");
        let b = p("t + 1");
        assert_eq!(&a * &b, p("t^2 + t^-1"));
        assert_eq!(&a + &(-&a), LaurentPoly::zero());
        assert_eq!((&a - &a), LaurentPoly::zero());
    }

    #[test]
    fn involute_reverses_exponents() {
        let a = p("2*t^3 - t + 5*t^-2");
        let b = a.involute();
        assert_eq!(b, p("2*t^-3 - t^-1 + 5*t^2"));
        assert_eq!(b.involute(), a);
    }

    #[test]
    fn derivative_and_evaluate() {
        // Derivative of t^2 - 3t + 1 at 2 is 2*2 - 3 = 1.
        let a = p("t^2 - 3*t + 1");
        let d = a.derivative();
        assert_eq!(d, p("2*t - 3"));
        assert_eq!(d.evaluate_int(2).unwrap(), BigRational::from_integer(1.into()));
        // Negative exponents evaluate exactly at rational points.
        let b = p("t^-2 + t");
        assert_eq!(
            b.evaluate_int(2).unwrap(),
            BigRational::new(9.into(), 4.into())
        );
        assert!(b.evaluate(&BigRational::zero()).is_err());
    }

    #[test]
    fn unit_normal_and_unit_equality() {
        let a = p("t - 1 + t^-1");
        let b = p("-t^3 + t^2 - t");
        assert!(a.eq_up_to_unit(&b));
        assert!(!a.eq_up_to_unit(&p("t + 1")));
        assert_eq!(a.unit_normal(), p("1 - t + t^2"));
    }

    #[test]
    fn exact_division() {
        let a = p("t^2 + t^-1");
        let b = p("t + 1");
        assert_eq!(a.exact_div(&b), Some(p("t - 1 + t^-1")));
        assert_eq!(p("t^2 + 1").exact_div(&p("t + 1")), None);
        assert_eq!(p("2*t").exact_div(&p("4")), None);
        assert_eq!(p("4*t").exact_div(&p("2")), Some(p("2*t")));
    }

    #[test]
    fn substitute_power_stretches() {
        let a = p("t - 1 + t^-1");
        assert_eq!(a.substitute_power(2), p("t^2 - 1 + t^-2"));
        assert_eq!(a.substitute_power(-1), a.involute());
    }
}
