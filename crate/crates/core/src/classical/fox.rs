//! Alexander polynomial from the Wirtinger presentation via Fox calculus.
//!
//! This route works on any PD code, independently of Seifert surfaces, so
//! it doubles as a cross-check for the braid-based computation and covers
//! diagrams (doubles, PD cables) that are not presented as braids.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::knotio::pd::PdCode;
use crate::laurent::modular::det_by_interpolation;
use crate::laurent::LaurentPoly;

/// Arc class of each edge (0-based, indexed by edge label - 1): edges are
/// identified when one continues the other across an overpass.
pub fn arc_classes(pd: &PdCode) -> Vec<usize> {
    let m = pd.edge_count();
    let mut parent: Vec<usize> = (0..m).collect();
    fn find(parent: &mut Vec<usize>, x: usize) -> usize {
        if parent[x] != x {
            let r = find(parent, parent[x]);
            parent[x] = r;
        }
        parent[x]
    }
    for c in 0..pd.crossing_count() {
        let (oin, oout) = pd.over_edges(c);
        let (a, b) = (find(&mut parent, oin as usize - 1), find(&mut parent, oout as usize - 1));
        parent[a] = b;
    }
    // Compact representatives to 0..k.
    let mut label = vec![usize::MAX; m];
    let mut next = 0;
    let mut out = vec![0; m];
    for e in 0..m {
        let r = find(&mut parent, e);
        if label[r] == usize::MAX {
            label[r] = next;
            next += 1;
        }
        out[e] = label[r];
    }
    out
}

/// The n x n Fox Jacobian of the Wirtinger presentation, abelianized to
/// Z[t, 1/t]: row per crossing, column per arc. At a positive crossing
/// with over-arc o taking under-arc u to u', the relation u' = o u o^-1
/// differentiates to (1 - t) on o, t on u, -1 on u'; a negative crossing
/// conjugates the other way, giving (1 - 1/t), 1/t, -1.
pub fn fox_matrix(pd: &PdCode) -> Vec<Vec<LaurentPoly>> {
    let n = pd.crossing_count();
    let arcs = arc_classes(pd);
    let arc_of = |e: u32| arcs[e as usize - 1];
    let mut rows = vec![vec![LaurentPoly::zero(); n]; n];
    let t = LaurentPoly::t_pow(1);
    let tinv = LaurentPoly::t_pow(-1);
    for c in 0..n {
        let (oin, _) = pd.over_edges(c);
        let (uin, uout) = pd.under_edges(c);
        let (on_over, on_in) = if pd.sign(c) > 0 {
            (&LaurentPoly::one() - &t, t.clone())
        } else {
            (&LaurentPoly::one() - &tinv, tinv.clone())
        };
        let row = &mut rows[c];
        row[arc_of(oin)] = &row[arc_of(oin)] + &on_over;
        row[arc_of(uin)] = &row[arc_of(uin)] + &on_in;
        row[arc_of(uout)] = &row[arc_of(uout)] - &LaurentPoly::one();
    }
    rows
}

/// Alexander polynomial in normal form: symmetric in t -> 1/t, centered
/// exponents, value 1 at t = 1.
pub fn alexander_via_fox(pd: &PdCode) -> Result<LaurentPoly> {
    let n = pd.crossing_count();
    if n <= 1 {
        return Ok(LaurentPoly::one());
    }
    let rows = fox_matrix(pd);
    // Any first minor of the Jacobian is the Alexander polynomial up to
    // units; drop the last row and column.
    let minor: Vec<Vec<LaurentPoly>> = rows[..n - 1]
        .iter()
        .map(|r| r[..n - 1].to_vec())
        .collect();
    alexander_normal_form(det_by_interpolation(&minor))
}

/// Normalizes a raw determinant to the symmetric Alexander form, checking
/// the knot conditions (nonzero, even span, palindromic, value +-1 at 1).
pub fn alexander_normal_form(p: LaurentPoly) -> Result<LaurentPoly> {
    if p.is_zero() {
        return Err(Error::internal("Alexander determinant vanished"));
    }
    let u = p.unit_normal();
    let span = u.span();
    if span % 2 != 0 {
        return Err(Error::internal(format!(
            "Alexander polynomial has odd span: {u}"
        )));
    }
    let mut q = u.shifted(-(span / 2));
    if q.involute() != q {
        return Err(Error::internal(format!(
            "Alexander polynomial is not symmetric: {q}"
        )));
    }
    let at_one = q.evaluate_int(1)?;
    if at_one == BigRational::from_integer(BigInt::from(-1)) {
        q = -&q;
    } else if at_one != BigRational::from_integer(BigInt::from(1)) {
        return Err(Error::internal(format!(
            "Alexander polynomial value {at_one} at t = 1"
        )));
    }
    Ok(q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::knotio::braid::BraidWord;

    fn closure(s: &str) -> PdCode {
        BraidWord::parse(s).unwrap().closure_pd().unwrap()
    }

    fn poly(s: &str) -> LaurentPoly {
        LaurentPoly::parse(s).unwrap()
    }

    #[test]
    fn unknot_diagrams() {
        assert!(alexander_via_fox(&PdCode::unknot()).unwrap().is_one());
        assert!(alexander_via_fox(&closure("2: 1")).unwrap().is_one());
        assert!(alexander_via_fox(&closure("3: 1 2")).unwrap().is_one());
        // A reducible three-crossing unknot diagram.
        assert!(alexander_via_fox(&closure("2: 1 1 -1")).unwrap().is_one());
    }

    #[test]
    fn trefoil() {
        let d = alexander_via_fox(&closure("2: 1 1 1")).unwrap();
        assert_eq!(d, poly("t^-1 - 1 + t"));
        // Mirror has the same Alexander polynomial.
        let m = alexander_via_fox(&closure("2: -1 -1 -1")).unwrap();
        assert_eq!(m, d);
    }

    #[test]
    fn figure_eight() {
        let d = alexander_via_fox(&closure("3: 1 -2 1 -2")).unwrap();
        assert_eq!(d, poly("-t^-1 + 3 - t"));
    }

    #[test]
    fn torus_knots() {
        let t25 = alexander_via_fox(&closure("2: 1 1 1 1 1")).unwrap();
        assert_eq!(t25, poly("t^-2 - t^-1 + 1 - t + t^2"));
        let t34 = alexander_via_fox(&closure("3: 1 2 1 2 1 2 1 2")).unwrap();
        assert_eq!(t34, poly("t^-3 - t^-2 + 1 - t^2 + t^3"));
    }

    #[test]
    fn arc_count_matches_crossings() {
        let pd = closure("3: 1 -2 1 -2");
        let arcs = arc_classes(&pd);
        let k = arcs.iter().max().unwrap() + 1;
        assert_eq!(k, 4);
    }
}
