//! Cross-checks between diagram constructions and the Alexander
//! polynomial identities that constrain them:
//!
//! - a double with total framing 0 has trivial Alexander polynomial,
//!   whatever the base knot (this exercises the writhe correction);
//! - the t-twisted double of the unknot is a twist knot with
//!   Alexander polynomial -n/t + (2n+1) - n*t where n is the framing;
//! - a (p, q)-cable satisfies
//!   Alexander(C_{p,q}(K))(t) = Alexander(K)(t^p) * Alexander(T(p,q))(t).

use untwist_core::classical::alexander_via_fox;
use untwist_core::knotio::{whitehead_double, BraidWord, ClaspSign, PdCode};
use untwist_core::laurent::LaurentPoly;

fn braid(s: &str) -> BraidWord {
    BraidWord::parse(s).unwrap()
}

fn poly(s: &str) -> LaurentPoly {
    LaurentPoly::parse(s).unwrap()
}

fn alex(pd: &PdCode) -> LaurentPoly {
    alexander_via_fox(pd).unwrap()
}

/// Alexander polynomial of the n-framed, clasped double of the unknot.
fn twist_knot_alexander(n: i64) -> LaurentPoly {
    LaurentPoly::from_terms(&[(-1, (-n).into()), (0, (2 * n + 1).into()), (1, (-n).into())])
}

#[test]
fn untwisted_doubles_have_trivial_alexander() {
    let unknot = braid("1:");
    let trefoil = braid("2: 1 1 1");
    let mirror_trefoil = braid("2: -1 -1 -1");
    let figure_eight = braid("3: 1 -2 1 -2");
    for base in [&unknot, &trefoil, &mirror_trefoil, &figure_eight] {
        for clasp in [ClaspSign::Positive, ClaspSign::Negative] {
            let d = whitehead_double(base, 0, clasp).unwrap();
            assert!(
                alex(&d).is_one(),
                "double of {base} with clasp {clasp:?} has nontrivial Alexander polynomial"
            );
        }
    }
}

#[test]
fn twisted_doubles_of_unknot_are_twist_knots() {
    let unknot = braid("1:");
    for n in [-3i64, -2, -1, 1, 2, 3] {
        let d = whitehead_double(&unknot, n, ClaspSign::Positive).unwrap();
        assert_eq!(
            alex(&d),
            twist_knot_alexander(n),
            "positive-clasp double with framing {n}"
        );
        // The negative clasp with framing n mirrors the positive clasp
        // with framing -n.
        let d = whitehead_double(&unknot, n, ClaspSign::Negative).unwrap();
        assert_eq!(
            alex(&d),
            twist_knot_alexander(-n),
            "negative-clasp double with framing {n}"
        );
    }
}

#[test]
fn twisted_double_of_trefoil_framing_shift() {
    // The base contributes writhe 3, so framing -1 needs -4 added twists;
    // the Alexander polynomial only sees the net framing.
    let trefoil = braid("2: 1 1 1");
    let d = whitehead_double(&trefoil, -1, ClaspSign::Positive).unwrap();
    assert_eq!(alex(&d), twist_knot_alexander(-1));
}

#[test]
fn braid_cable_alexander_identity() {
    let trefoil = braid("2: 1 1 1");
    let tref = poly("t^-1 - 1 + t");
    for (p, q, torus_factor) in [
        (2usize, 1i64, LaurentPoly::one()),
        (3, 1, LaurentPoly::one()),
        (3, 2, poly("t^-1 - 1 + t")),
        (2, 3, poly("t^-1 - 1 + t")),
    ] {
        let c = trefoil.cable(p, q).unwrap();
        let got = alexander_via_fox(&c.closure_pd().unwrap()).unwrap();
        let want = &tref.substitute_power(p as i64) * &torus_factor;
        assert_eq!(got, want, "({p},{q})-cable of the trefoil");
    }

    // Cables of the unknot are torus knots.
    let unknot = braid("2: 1");
    let c = unknot.cable(2, 3).unwrap();
    assert_eq!(alexander_via_fox(&c.closure_pd().unwrap()).unwrap(), tref);
    let c = unknot.cable(2, 5).unwrap();
    assert_eq!(
        alexander_via_fox(&c.closure_pd().unwrap()).unwrap(),
        poly("t^-2 - t^-1 + 1 - t + t^2")
    );
}

#[test]
fn pd_cable_alexander_identity() {
    let trefoil_pd = braid("2: 1 1 1").closure_pd().unwrap();
    let tref = poly("t^-1 - 1 + t");
    let c = trefoil_pd.cable(2, 1).unwrap();
    assert_eq!(alex(&c), tref.substitute_power(2));

    let fig8_pd = braid("3: 1 -2 1 -2").closure_pd().unwrap();
    let c = fig8_pd.cable(3, 1).unwrap();
    assert_eq!(alex(&c), poly("-t^-1 + 3 - t").substitute_power(3));

    // Torus knot via cabling a one-crossing unknot diagram (writhe 1).
    let unknot_pd = braid("2: 1").closure_pd().unwrap();
    let c = unknot_pd.cable(2, 3).unwrap();
    assert_eq!(alex(&c), tref);

    // Cable of a non-braid diagram: the (2,1)-cable of a twist knot.
    let twist = whitehead_double(&braid("1:"), -1, ClaspSign::Positive).unwrap();
    let c = twist.cable(2, 1).unwrap();
    assert_eq!(alex(&c), twist_knot_alexander(-1).substitute_power(2));
}

#[test]
fn connected_sum_alexander_multiplies() {
    let trefoil_pd = braid("2: 1 1 1").closure_pd().unwrap();
    let fig8_pd = braid("3: 1 -2 1 -2").closure_pd().unwrap();
    let s = trefoil_pd.connected_sum(&fig8_pd).unwrap();
    assert_eq!(alex(&s), &poly("t^-1 - 1 + t") * &poly("-t^-1 + 3 - t"));

    let braid_sum = braid("2: 1 1 1").connected_sum(&braid("2: 1 1 1"));
    assert_eq!(
        alexander_via_fox(&braid_sum.closure_pd().unwrap()).unwrap(),
        &poly("t^-1 - 1 + t") * &poly("t^-1 - 1 + t")
    );
}
