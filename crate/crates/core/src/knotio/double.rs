//! Whitehead doubles built from a braid presentation of the companion.
//!
//! The double of the closure of `b` is drawn as the blackboard two-parallel
//! of the closed braid with opposite orientations on the two copies, plus a
//! run of full twists correcting the blackboard framing to the requested
//! one, plus a clasp where the band is cut and hooked through itself. Each
//! base letter becomes four crossings; the twist run and clasp sit on the
//! first lane pair between the braid and its closure arcs.

use crate::error::Result;
use crate::knotio::braid::BraidWord;
use crate::knotio::pd::PdCode;
use crate::knotio::portgraph::{Dir, LaneTracker, OverDiag, Port, PortGraph, Stub};

/// Handedness of the clasp: `Positive` makes both clasp crossings
/// positive.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ClaspSign {
    Positive,
    Negative,
}

impl ClaspSign {
    pub fn sign(self) -> i64 {
        match self {
            ClaspSign::Positive => 1,
            ClaspSign::Negative => -1,
        }
    }
}

/// Diagram of the `twists`-twisted double of the closure of `base` with the
/// given clasp. `twists` is the framing of the doubling band; the diagram
/// inserts `twists - writhe` full twists to correct the blackboard framing.
/// Because the two strands of the band are antiparallel, a twist raising
/// the framing by one appears as two negative crossings.
pub fn whitehead_double(base: &BraidWord, twists: i64, clasp: ClaspSign) -> Result<PdCode> {
    if !base.is_knot_closure() {
        return Err(crate::error::Error::invalid(
            "double companion must close to a knot",
        ));
    }
    let k = base.strands();
    let mut graph = PortGraph::new();
    let mut dirs: Vec<Dir> = (0..2 * k)
        .map(|l| if l % 2 == 0 { Dir::Down } else { Dir::Up })
        .collect();
    let mut lanes = LaneTracker::new(2 * k, &dirs);

    // Doubled braid letters: the four-crossing block that carries one
    // two-strand bundle past the next, right bundle on the R diagonal.
    for &l in base.letters() {
        let x = 2 * (l.unsigned_abs() as usize - 1);
        for sub in bundle_pass(x, l.signum()) {
            let lane = sub.unsigned_abs() as usize - 1;
            let over = if sub > 0 { OverDiag::R } else { OverDiag::L };
            lanes.place(&mut graph, &mut dirs, lane, over);
        }
    }

    // Framing correction on the first pair, which runs Down, Up here. The
    // R diagonal gives negative crossings on this pair, raising the
    // framing; the L diagonal lowers it.
    let m = twists - base.writhe();
    let over = if m >= 0 { OverDiag::R } else { OverDiag::L };
    for _ in 0..2 * m.unsigned_abs() {
        lanes.place(&mut graph, &mut dirs, 0, over);
    }

    place_clasp(&mut graph, &mut lanes, clasp);
    lanes.close_all(&mut graph)?;
    graph.into_pd()
}

/// The interleaving block passing the bundle on lanes x, x+1 and the one on
/// x+2, x+3 through each other, as signed one-based lane letters.
fn bundle_pass(x: usize, sign: i32) -> Vec<i32> {
    let x = x as i32;
    let mut out = vec![x + 2, x + 3, x + 1, x + 2];
    if sign < 0 {
        out.reverse();
        for l in &mut out {
            *l = -*l;
        }
    }
    out
}

/// Hooks the band through itself on lanes 0 and 1 (running Down, Up): the
/// strand coming down lane 0 U-turns back up lane 1, the strand rising
/// toward the closure U-turns back down, and the two fingers cross twice
/// with the same sign.
///
/// Crossing `x1` is the descending finger's bottom curve (heading right)
/// against the returning finger's left leg (heading down); its ports in
/// counterclockwise order are W, S, E, N. Crossing `x2` is the descending
/// finger's right leg (heading up) against the returning finger's top
/// curve (heading left); its ports are S, E, N, W.
fn place_clasp(graph: &mut PortGraph, lanes: &mut LaneTracker, clasp: ClaspSign) {
    let (u1, u2) = match clasp {
        // Positive: at x1 the down-finger is under (enters at W, slot 0);
        // at x2 the returning finger is under (enters at E, slot 1).
        ClaspSign::Positive => (0, 1),
        // Negative: the opposite strand is under at each crossing.
        ClaspSign::Negative => (3, 0),
    };
    let x1 = graph.add_crossing([true, false, false, true], u1);
    let x2 = graph.add_crossing([true, true, false, false], u2);
    let p = |node, slot| Port { node, slot };
    // Lane 0's strand enters x1 heading right; lane 1's strand leaves
    // upward out of x2.
    lanes.attach(graph, 0, Dir::Down, p(x1, 0));
    lanes.attach(graph, 1, Dir::Up, p(x2, 2));
    // Down-finger: exits x1 heading right, climbs into x2 from below.
    graph.wire(p(x1, 2), p(x2, 0));
    // Returning finger: exits x2 heading left, descends into x1 from above.
    graph.wire(p(x2, 3), p(x1, 3));
    // Below the clasp the pair continues to the closure arcs.
    lanes.front[0] = Some(Stub { port: p(x1, 1), dir: Dir::Down });
    lanes.front[1] = Some(Stub { port: p(x2, 1), dir: Dir::Up });
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(s: &str) -> BraidWord {
        BraidWord::parse(s).unwrap()
    }

    #[test]
    fn unknot_double_is_bare_clasp() {
        let pd = whitehead_double(&b("1:"), 0, ClaspSign::Positive).unwrap();
        assert_eq!(pd.crossing_count(), 2);
        assert_eq!(pd.writhe(), 2);
        assert_eq!(pd.sign(0), 1);
        assert_eq!(pd.sign(1), 1);
        let neg = whitehead_double(&b("1:"), 0, ClaspSign::Negative).unwrap();
        assert_eq!(neg.writhe(), -2);
    }

    #[test]
    fn twist_knot_diagrams() {
        // Framing t on the unknot: 2|t| twist crossings (sign opposite to
        // t) plus the two positive clasp crossings.
        for t in [-2i64, -1, 1, 2] {
            let pd = whitehead_double(&b("1:"), t, ClaspSign::Positive).unwrap();
            assert_eq!(pd.crossing_count(), 2 + 2 * t.unsigned_abs() as usize);
            assert_eq!(pd.writhe(), 2 - 2 * t);
        }
    }

    #[test]
    fn trefoil_double_counts() {
        let tref = b("2: 1 1 1");
        let pd = whitehead_double(&tref, 0, ClaspSign::Positive).unwrap();
        // 4 per letter, plus 2*|0-3| correction crossings, plus the clasp.
        assert_eq!(pd.crossing_count(), 12 + 6 + 2);
        // Blocks cancel; lowering the framing from 3 to 0 adds six
        // positive crossings; the clasp adds two more.
        assert_eq!(pd.writhe(), 6 + 2);
    }

    #[test]
    fn double_is_a_knot_diagram() {
        // from_tuples validates single-component structure throughout.
        for t in [-1i64, 0, 3] {
            for clasp in [ClaspSign::Positive, ClaspSign::Negative] {
                let pd = whitehead_double(&b("3: 1 -2 1 -2"), t, clasp).unwrap();
                assert_eq!(pd.crossing_count(), 16 + 2 * (t.unsigned_abs() as usize) + 2);
            }
        }
    }
}
