use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;

/// Ratio of Laurent polynomials in canonical form: the denominator has
/// trailing exponent 0, positive leading coefficient, no common polynomial
/// or content factor with the numerator. Values of the Blanchfield pairing
/// live here, considered modulo Z[t^±1].
#[derive(Clone, PartialEq, Eq)]
pub struct RationalFn {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RationalFn {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::invalid("zero denominator"));
        }
        let mut f = RationalFn { num, den };
        f.normalize();
        Ok(f)
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        RationalFn { num: p, den: LaurentPoly::one() }
    }

    pub fn zero() -> Self {
        Self::from_poly(LaurentPoly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(LaurentPoly::one())
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// True when the value lies in Z[t^±1].
    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    pub fn to_laurent(&self) -> Option<LaurentPoly> {
        if self.is_laurent() {
            Some(self.num.clone())
        } else {
            None
        }
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::invalid("cannot invert zero"));
        }
        Self::new(self.den.clone(), self.num.clone())
    }

    /// The involution `t -> t^{-1}` applied to the value.
    pub fn involute(&self) -> Self {
        let mut f = RationalFn {
            num: self.num.involute(),
            den: self.den.involute(),
        };
        f.normalize();
        f
    }

    fn normalize(&mut self) {
        if self.num.is_zero() {
            self.den = LaurentPoly::one();
            return;
        }
        // Shift the denominator to trailing exponent 0, absorbing the unit
        // into the numerator.
        let dmin = self.den.min_exp().unwrap();
        self.den = self.den.shifted(-dmin);
        self.num = self.num.shifted(-dmin);
        // Remove the common polynomial factor.
        let g = poly_gcd(&self.num, &self.den);
        if !g.is_unit() {
            self.num = self.num.exact_div(&g).expect("gcd divides numerator");
            self.den = self.den.exact_div(&g).expect("gcd divides denominator");
            let dmin = self.den.min_exp().unwrap();
            self.den = self.den.shifted(-dmin);
            self.num = self.num.shifted(dmin);
        }
        // Remove common content and fix the denominator sign.
        let c = num_integer::gcd(self.num.content(), self.den.content());
        if c > BigInt::one() {
            let cp = LaurentPoly::monomial(c, 0);
            self.num = self.num.exact_div(&cp).expect("content divides");
            self.den = self.den.exact_div(&cp).expect("content divides");
        }
        if self.den.leading_coeff().is_negative() {
            self.num = -&self.num;
            self.den = -&self.den;
        }
    }

    /// Canonical representative of the class of `self` in Q(t)/Z[t^±1].
    ///
    /// The numerator is reduced modulo the lattice `{ t^j * den }` by floored
    /// top-down then bottom-up elimination, so two values represent the same
    /// class exactly when their reductions are equal. The reduction of any
    /// element of Z[t^±1] is zero.
    pub fn reduce_mod_lambda(&self) -> Self {
        if self.is_laurent() {
            return Self::zero();
        }
        let d = &self.den;
        let deg = d.max_exp().unwrap();
        let lc = d.leading_coeff();
        let tc = d.trailing_coeff();
        let mut r = self.num.clone();

        // Top-down: clear exponents >= deg using t^(e-deg) * den, whose
        // leading term sits at e. Subtractions only touch exponents <= e,
        // which the downward sweep revisits.
        if let Some(top) = r.max_exp() {
            let mut e = top;
            while e >= deg {
                let q = div_euclid_big(&r.coeff(e), &lc);
                if !q.is_zero() {
                    r = &r - &(&LaurentPoly::monomial(q, e - deg) * d);
                }
                e -= 1;
            }
        }
        // Bottom-up: clear exponents < 0 using t^e * den, whose trailing
        // term sits at e. Subtractions only touch exponents in [e, e+deg],
        // never the settled top region.
        if let Some(bottom) = r.min_exp() {
            let mut e = bottom;
            while e < 0 {
                let q = div_euclid_big(&r.coeff(e), &tc);
                if !q.is_zero() {
                    r = &r - &(&LaurentPoly::monomial(q, e) * d);
                }
                e += 1;
            }
        }
        Self::new(r, d.clone()).expect("denominator is nonzero")
    }

    /// Whether two values represent the same class modulo Z[t^±1].
    pub fn class_eq(&self, other: &Self) -> bool {
        (self - other).reduce_mod_lambda().is_zero()
    }
}

/// Euclidean quotient: `c - q*d` lies in `[0, |d|)`.
fn div_euclid_big(c: &BigInt, d: &BigInt) -> BigInt {
    let r = c.mod_floor(&d.abs());
    (c - r) / d
}

/// Gcd in Z[t] up to sign, computed by the primitive polynomial remainder
/// sequence. Inputs are treated up to unit multiples, so the result is the
/// gcd in Z[t^±1] normalized to trailing exponent 0 and positive leading
/// coefficient.
pub fn poly_gcd(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    if a.is_zero() {
        return b.unit_normal();
    }
    if b.is_zero() {
        return a.unit_normal();
    }
    let content_gcd = num_integer::gcd(a.content(), b.content());
    let mut f = primitive_part(a);
    let mut g = primitive_part(b);
    if f.span() < g.span() {
        std::mem::swap(&mut f, &mut g);
    }
    while !g.is_zero() {
        let r = pseudo_rem(&f, &g);
        f = g;
        g = primitive_part(&r);
    }
    let mono = LaurentPoly::monomial(content_gcd, 0);
    &f.unit_normal() * &mono
}

fn primitive_part(p: &LaurentPoly) -> LaurentPoly {
    if p.is_zero() {
        return LaurentPoly::zero();
    }
    let c = p.content();
    let q = p
        .exact_div(&LaurentPoly::monomial(c, 0))
        .expect("content divides");
    q.unit_normal()
}

/// Scalar multiple of the remainder of `f` by `g` (both shifted to ordinary
/// polynomials), enough for the primitive remainder sequence where content
/// is stripped after every step.
fn pseudo_rem(f: &LaurentPoly, g: &LaurentPoly) -> LaurentPoly {
    let mut r = f.unit_normal();
    let g = g.unit_normal();
    let glead = LaurentPoly::monomial(g.leading_coeff(), 0);
    let gdeg = g.max_exp().unwrap();
    while !r.is_zero() && r.max_exp().unwrap() >= gdeg {
        let rdeg = r.max_exp().unwrap();
        let lead = r.leading_coeff();
        r = &(&r * &glead) - &(&g * &LaurentPoly::monomial(lead, rdeg - gdeg));
        debug_assert!(r.is_zero() || r.max_exp().unwrap() < rdeg);
    }
    r
}

impl Add for &RationalFn {
    type Output = RationalFn;
    fn add(self, rhs: &RationalFn) -> RationalFn {
        let num = &(self.num.clone() * rhs.den.clone()) + &(rhs.num.clone() * self.den.clone());
        let den = &self.den * &rhs.den;
        RationalFn::new(num, den).expect("nonzero denominator")
    }
}

impl Sub for &RationalFn {
    type Output = RationalFn;
    fn sub(self, rhs: &RationalFn) -> RationalFn {
        self + &(-rhs)
    }
}

impl Neg for &RationalFn {
    type Output = RationalFn;
    fn neg(self) -> RationalFn {
        RationalFn { num: -&self.num, den: self.den.clone() }
    }
}

impl Mul for &RationalFn {
    type Output = RationalFn;
    fn mul(self, rhs: &RationalFn) -> RationalFn {
        RationalFn::new(&self.num * &rhs.num, &self.den * &rhs.den)
            .expect("nonzero denominator")
    }
}

impl fmt::Display for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_laurent() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> LaurentPoly {
        LaurentPoly::parse(s).unwrap()
    }

    fn rf(n: &str, d: &str) -> RationalFn {
        RationalFn::new(p(n), p(d)).unwrap()
    }

    #[test]
    fn normalization_reduces() {
        let f = rf("t^2 + t", "t^3 + t^2");
        assert_eq!(f, rf("1", "t"));
        let g = rf("2*t", "4");
        assert_eq!(g.numerator(), &p("t"));
        assert_eq!(g.denominator(), &p("2"));
        // The denominator sign is normalized.
        let h = rf("1", "-t + 1");
        assert_eq!(h.denominator(), &p("t - 1"));
    }

    #[test]
    fn gcd_examples() {
        let g = poly_gcd(&p("t^2 - 1"), &p("t^2 + 2*t + 1"));
        assert!(g.eq_up_to_unit(&p("t + 1")));
        let g = poly_gcd(&p("t^2 + 1"), &p("t + 2"));
        assert!(g.is_unit());
        let g = poly_gcd(&p("2*t + 2"), &p("4*t + 4"));
        assert!(g.eq_up_to_unit(&p("2*t + 2")));
    }

    #[test]
    fn arithmetic() {
        let a = rf("1", "t - 1");
        let b = rf("1", "t + 1");
        let s = &a + &b;
        assert_eq!(s, rf("2*t", "t^2 - 1"));
        let prod = &a * &b;
        assert_eq!(prod, rf("1", "t^2 - 1"));
        let z = &a - &a;
        assert!(z.is_zero());
    }

    #[test]
    fn reduce_mod_lambda_proper() {
        // t^2 / (t - 1 + t^-1): the reduction is proper and differs from the
        // input by an element of Z[t^±1].
        let f = rf("t^2", "t - 1 + t^-1");
        let r = f.reduce_mod_lambda();
        assert!(r.numerator().span() < r.denominator().span());
        let diff = &f - &r;
        assert!(diff.is_laurent(), "difference {diff} should lie in the ring");
        // Any Laurent polynomial reduces to zero.
        let g = RationalFn::from_poly(p("t^5 - 7 + 3*t^-2"));
        assert!(g.reduce_mod_lambda().is_zero());
    }

    #[test]
    fn class_equality() {
        let f = rf("1", "t - 1 + t^-1");
        let shifted = &f + &RationalFn::from_poly(p("t^3 - 2"));
        assert!(f.class_eq(&shifted));
        assert!(!f.class_eq(&rf("t", "t - 1 + t^-1")));
    }

    #[test]
    fn involution() {
        let f = rf("1", "t - 2");
        let g = f.involute();
        assert_eq!(g, rf("-t", "2*t - 1"));
        assert_eq!(g.involute(), f);
    }

    #[test]
    fn half_integer_classes() {
        // 1/2 and 3/2 agree mod Z[t^±1]; 1/2 and 1/3 do not.
        let h = rf("1", "2");
        let h3 = rf("3", "2");
        assert!(h.class_eq(&h3));
        assert!(!h.class_eq(&rf("1", "3")));
        assert_eq!(h.reduce_mod_lambda(), rf("1", "2"));
        assert_eq!(h3.reduce_mod_lambda(), rf("1", "2"));
    }
}
