//! Seifert matrices of braid closures.
//!
//! The closure of a braid bounds the surface from Seifert's algorithm: one
//! disk per strand, one half-twisted band per letter. A homology basis has
//! one loop for each pair of consecutive bands between the same two disks;
//! the Seifert pairing of two such loops depends only on the band signs
//! and on how the pairs of letter positions interleave in the word.

use crate::error::{Error, Result};
use crate::knotio::braid::BraidWord;
use crate::linalg::IntMat;

/// Basis loop: through the bands at word positions `a` and `b` (a < b),
/// both letters at the same index.
#[derive(Clone, Copy, Debug)]
struct Loop {
    index: usize,
    a: usize,
    b: usize,
    /// Signs of the two bands.
    ea: i64,
    eb: i64,
}

fn basis(b: &BraidWord) -> Vec<Loop> {
    let mut occ: Vec<Vec<(usize, i64)>> = vec![Vec::new(); b.strands()];
    for (pos, &l) in b.letters().iter().enumerate() {
        occ[l.unsigned_abs() as usize - 1].push((pos, l.signum() as i64));
    }
    let mut out = Vec::new();
    for (index, bands) in occ.iter().enumerate() {
        for w in bands.windows(2) {
            out.push(Loop { index, a: w[0].0, b: w[1].0, ea: w[0].1, eb: w[1].1 });
        }
    }
    out
}

/// Pairing entries (V[g][d], V[d][g]) for loops g, d at adjacent indices
/// (d one to the right of g) whose position pairs interleave.
/// `g_first` tells whether g's first band comes before d's.
fn interleave_entries(g_first: bool) -> (i64, i64) {
    if g_first {
        (-1, 0)
    } else {
        (0, 1)
    }
}

/// Seifert matrix of the closure (which must be a knot) in the basis
/// above, with lk(x, y+) in row x, column y.
pub fn seifert_matrix(b: &BraidWord) -> Result<IntMat> {
    if !b.is_knot_closure() {
        return Err(Error::invalid("Seifert matrix needs a knot closure"));
    }
    let loops = basis(b);
    let r = loops.len();
    let mut v = IntMat::zero(r, r);
    for (x, g) in loops.iter().enumerate() {
        v.set(x, x, -(g.ea + g.eb) / 2);
        for (y, d) in loops.iter().enumerate().skip(x + 1) {
            if d.index == g.index && d.a == g.b {
                // Consecutive loops sharing the middle band.
                let e = g.eb;
                v.set(x, y, (1 + e) / 2);
                v.set(y, x, (e - 1) / 2);
            } else if d.index == g.index + 1 {
                let (xy, yx) = if g.a < d.a && d.a < g.b && g.b < d.b {
                    interleave_entries(true)
                } else if d.a < g.a && g.a < d.b && d.b < g.b {
                    interleave_entries(false)
                } else {
                    (0, 0)
                };
                v.set(x, y, xy);
                v.set(y, x, yx);
            }
        }
    }
    Ok(v)
}

/// Genus of the closure's Seifert surface, half the basis rank.
pub fn seifert_genus(b: &BraidWord) -> Result<usize> {
    let v = seifert_matrix(b)?;
    if v.nrows() % 2 != 0 {
        return Err(Error::internal("odd Seifert rank for a knot"));
    }
    Ok(v.nrows() / 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classical::fox::alexander_via_fox;
    use crate::classical::invariants::{alexander_from_seifert, signature_from_seifert};
    use crate::knotio::braid::BraidWord;
    use crate::laurent::LaurentPoly;

    fn b(s: &str) -> BraidWord {
        BraidWord::parse(s).unwrap()
    }

    fn poly(s: &str) -> LaurentPoly {
        LaurentPoly::parse(s).unwrap()
    }

    #[test]
    fn trefoil_matrix() {
        let v = seifert_matrix(&b("2: 1 1 1")).unwrap();
        assert_eq!(v, IntMat::from_i64(&[&[-1, 1], &[0, -1]]));
        assert_eq!(signature_from_seifert(&v).unwrap(), -2);
        let m = seifert_matrix(&b("2: -1 -1 -1")).unwrap();
        assert_eq!(m, IntMat::from_i64(&[&[1, 0], &[-1, 1]]));
        assert_eq!(signature_from_seifert(&m).unwrap(), 2);
    }

    #[test]
    fn figure_eight_matrix() {
        let v = seifert_matrix(&b("3: 1 -2 1 -2")).unwrap();
        assert_eq!(alexander_from_seifert(&v).unwrap(), poly("-t^-1 + 3 - t"));
        assert_eq!(signature_from_seifert(&v).unwrap(), 0);
    }

    #[test]
    fn torus_3_4() {
        let word = b("3: 1 2 1 2 1 2 1 2");
        let v = seifert_matrix(&word).unwrap();
        assert_eq!(v.nrows(), 6);
        assert_eq!(
            alexander_from_seifert(&v).unwrap(),
            poly("t^-3 - t^-2 + 1 - t^2 + t^3")
        );
        assert_eq!(signature_from_seifert(&v).unwrap(), -6);
    }

    #[test]
    fn torus_2_7() {
        let v = seifert_matrix(&b("2: 1 1 1 1 1 1 1")).unwrap();
        assert_eq!(signature_from_seifert(&v).unwrap(), -6);
    }

    #[test]
    fn matches_fox_on_assorted_words() {
        for word in [
            "3: 1 2 1 2",
            "3: -1 2 -1 2",
            "3: 1 1 1 -2 1 -2",
            "4: 1 2 3 1 2 3",
            "3: 1 1 2 2",
            "3: 2 2 1 1",
            "4: 1 -2 3 -2 1 -2 3 -2",
            "3: 1 1 1 2 -1 2",
            "3: -1 -1 -1 -2 -2 -2",
        ] {
            let word = b(word);
            if !word.is_knot_closure() {
                continue;
            }
            let v = seifert_matrix(&word).unwrap();
            let from_v = alexander_from_seifert(&v).unwrap();
            let from_fox = alexander_via_fox(&word.closure_pd().unwrap()).unwrap();
            assert_eq!(from_v, from_fox, "word {word}");
        }
    }

    #[test]
    fn stabilization_preserves_invariants() {
        let base = b("2: 1 1 1");
        let stab = base.stabilized(1);
        let neg = base.stabilized(-1);
        let v0 = seifert_matrix(&base).unwrap();
        for w in [stab, neg] {
            let v = seifert_matrix(&w).unwrap();
            assert_eq!(
                alexander_from_seifert(&v).unwrap(),
                alexander_from_seifert(&v0).unwrap()
            );
            assert_eq!(
                signature_from_seifert(&v).unwrap(),
                signature_from_seifert(&v0).unwrap()
            );
        }
    }

    #[test]
    fn genus_examples() {
        assert_eq!(seifert_genus(&b("2: 1 1 1")).unwrap(), 1);
        assert_eq!(seifert_genus(&b("3: 1 -2 1 -2")).unwrap(), 1);
        assert_eq!(seifert_genus(&b("3: 1 2 1 2 1 2 1 2")).unwrap(), 3);
        assert_eq!(seifert_genus(&b("2: 1")).unwrap(), 0);
    }
}
