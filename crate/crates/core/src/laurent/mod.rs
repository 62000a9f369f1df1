//! Exact Laurent polynomial arithmetic over Z, rational functions over
//! Q(t) with canonical reduction modulo Z[t^±1], and matrices with
//! fraction-free determinants. Foundation for every invariant in the crate.

mod matrix;
pub(crate) mod modular;
mod poly;
mod ratfn;

pub use matrix::LambdaMatrix;
pub use modular::is_prime_u64;
pub use poly::LaurentPoly;
pub use ratfn::{poly_gcd, RationalFn};
