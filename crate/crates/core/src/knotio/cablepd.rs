//! Cables and connected sums built directly on PD diagrams, for companions
//! that are not presented as braids (doubles in particular).

use crate::error::{Error, Result};
use crate::knotio::braid::BraidWord;
use crate::knotio::pd::PdCode;
use crate::knotio::portgraph::{lane_crossing, Dir, OverDiag, Port, PortGraph};

/// Rebuilds the port graph of a diagram; node i's slot k carries the edge
/// in tuple position k of crossing i. Returns the graph with every edge
/// wired except those listed in `skip`, plus the tail (out) and head (in)
/// port of every edge, indexed by label - 1.
fn graph_of(pd: &PdCode, skip: &[u32]) -> (PortGraph, Vec<Port>, Vec<Port>) {
    let n = pd.crossing_count();
    let mut graph = PortGraph::new();
    for i in 0..n {
        let o = pd.over_in_slot(i);
        let mut in_slots = [false; 4];
        in_slots[0] = true;
        in_slots[o as usize] = true;
        graph.add_crossing(in_slots, 0);
    }
    let mut tail = vec![None; 2 * n];
    let mut head = vec![None; 2 * n];
    for (i, tuple) in pd.tuples().iter().enumerate() {
        let o = pd.over_in_slot(i) as usize;
        for (k, &e) in tuple.iter().enumerate() {
            let port = Port { node: i, slot: k as u8 };
            let slot = if k == 0 || k == o { &mut head } else { &mut tail };
            let prev = slot[e as usize - 1].replace(port);
            debug_assert!(prev.is_none(), "edge endpoint seen twice");
        }
    }
    let tail: Vec<Port> = tail.into_iter().map(|p| p.expect("validated")).collect();
    let head: Vec<Port> = head.into_iter().map(|p| p.expect("validated")).collect();
    for e in 0..2 * n as u32 {
        if !skip.contains(&(e + 1)) {
            graph.wire(tail[e as usize], head[e as usize]);
        }
    }
    (graph, tail, head)
}

impl PdCode {
    /// Connected sum, splicing the diagrams at their edge-1 arcs with
    /// orientations preserved.
    pub fn connected_sum(&self, other: &PdCode) -> Result<PdCode> {
        if self.crossing_count() == 0 {
            return Ok(other.clone());
        }
        if other.crossing_count() == 0 {
            return Ok(self.clone());
        }
        let (mut graph, tail_a, head_a) = graph_of(self, &[1]);
        let shift = self.crossing_count();
        let (other_graph, tail_b, head_b) = graph_of(other, &[1]);
        graph.absorb(other_graph, shift);
        let lift = |p: Port| Port { node: p.node + shift, slot: p.slot };
        graph.wire(tail_a[0], lift(head_b[0]));
        graph.wire(lift(tail_b[0]), head_a[0]);
        graph.into_pd()
    }

    /// The (p, q)-cable: p blackboard-parallel copies of the diagram with a
    /// run of `q - p * writhe` torus turns spliced at edge 1, so the
    /// cabling annulus has framing q. Fails when gcd(p, q) > 1 (the result
    /// is a link). The caller is expected to validate the result against
    /// the Alexander cabling identity (see `classical`).
    pub fn cable(&self, p: usize, q: i64) -> Result<PdCode> {
        if p == 0 {
            return Err(Error::invalid("cable width must be positive"));
        }
        if p == 1 {
            return Ok(self.clone());
        }
        let n = self.crossing_count();
        if n == 0 {
            // Cable of a crossingless circle: a torus knot closure.
            let runs = torus_runs(p, q);
            return BraidWord::new(p, runs)?.closure_pd();
        }
        let w = self.writhe();
        let mut graph = PortGraph::new();
        // grid[i][j]: copy i of the understrand (0 = leftmost along its
        // travel) crossing copy j of the overstrand. Slots follow the
        // parent's counterclockwise sides: 0 = under-in side, 1, 2, 3.
        let mut grid: Vec<Vec<Vec<usize>>> = Vec::with_capacity(n);
        for c in 0..n {
            let o = self.over_in_slot(c);
            let mut in_slots = [false; 4];
            in_slots[0] = true;
            in_slots[o as usize] = true;
            let mut rows = Vec::with_capacity(p);
            for _ in 0..p {
                let mut row = Vec::with_capacity(p);
                for _ in 0..p {
                    row.push(graph.add_crossing(in_slots, 0));
                }
                rows.push(row);
            }
            grid.push(rows);
        }
        // Internal wiring of each grid: the under copies run side 0 to
        // side 2, the over copies between sides o and o+2. With the over
        // entering on side 3 the under copies meet it in descending j and
        // the over copies cross in ascending i; entering on side 1 both
        // orders flip.
        for c in 0..n {
            let g = &grid[c];
            let positive = self.over_in_slot(c) == 3;
            for i in 0..p {
                for j in 1..p {
                    let (from, to) = if positive { (j, j - 1) } else { (j - 1, j) };
                    graph.wire(
                        Port { node: g[i][from], slot: 2 },
                        Port { node: g[i][to], slot: 0 },
                    );
                }
            }
            for j in 0..p {
                for i in 1..p {
                    // The over strand exits the side it did not enter.
                    let (from, to) = if positive {
                        (Port { node: g[i - 1][j], slot: 1 }, Port { node: g[i][j], slot: 3 })
                    } else {
                        (Port { node: g[i][j], slot: 3 }, Port { node: g[i - 1][j], slot: 1 })
                    };
                    graph.wire(from, to);
                }
            }
        }
        // Ports on each side of a parent crossing, in copy order.
        let boundary = |c: usize, side: u8| -> Vec<Port> {
            let g = &grid[c];
            let positive = self.over_in_slot(c) == 3;
            (0..p)
                .map(|k| {
                    let (node, slot) = match (side, positive) {
                        (0, true) => (g[k][p - 1], 0),
                        (0, false) => (g[k][0], 0),
                        (2, true) => (g[k][0], 2),
                        (2, false) => (g[k][p - 1], 2),
                        (3, true) => (g[0][k], 3),
                        (3, false) => (g[0][k], 3),
                        (1, true) => (g[p - 1][k], 1),
                        (1, false) => (g[p - 1][k], 1),
                        _ => unreachable!("side is 0..4"),
                    };
                    Port { node, slot }
                })
                .collect()
        };
        // Wire the parallel copies of every parent edge; copy order is
        // preserved along an edge. Edge 1 carries the framing correction.
        let mut ends: Vec<[Option<(usize, u8)>; 2]> = vec![[None; 2]; 2 * n];
        for (c, tuple) in self.tuples().iter().enumerate() {
            let o = self.over_in_slot(c) as usize;
            for (k, &e) in tuple.iter().enumerate() {
                let inward = k == 0 || k == o;
                ends[e as usize - 1][usize::from(inward)] = Some((c, k as u8));
            }
        }
        for (e, pair) in ends.iter().enumerate() {
            let (tc, ts) = pair[0].expect("validated");
            let (hc, hs) = pair[1].expect("validated");
            let tails = boundary(tc, ts);
            let heads = boundary(hc, hs);
            if e == 0 {
                let mut fronts = tails;
                thread_run(&mut graph, &mut fronts, &torus_runs(p, q - p as i64 * w));
                for (f, h) in fronts.into_iter().zip(heads) {
                    graph.wire(f, h);
                }
            } else {
                for (t, h) in tails.into_iter().zip(heads) {
                    graph.wire(t, h);
                }
            }
        }
        graph.into_pd()
    }
}

/// `|m|` torus runs `(σ_1 … σ_{p-1})^{sign m}` as signed letters.
fn torus_runs(p: usize, m: i64) -> Vec<i32> {
    if p < 2 {
        return Vec::new();
    }
    let mut one: Vec<i32> = (1..p as i32).collect();
    if m < 0 {
        one.reverse();
        for l in &mut one {
            *l = -*l;
        }
    }
    let mut out = Vec::new();
    for _ in 0..m.unsigned_abs() {
        out.extend_from_slice(&one);
    }
    out
}

/// Threads braid letters through parallel down-going strands given as
/// dangling out-ports, updating `fronts` to the ports below the run.
///
/// `fronts` lists the strands leftmost-in-travel-direction first. For a
/// braid patch drawn flowing down the page, the traveler's left is the
/// east side, so front k occupies braid lane `p - 1 - k`; the reversal
/// below aligns the two labelings (wiring them in order would mirror the
/// patch and destroy planarity).
fn thread_run(graph: &mut PortGraph, fronts: &mut [Port], letters: &[i32]) {
    use crate::knotio::portgraph::{NE, NW, SE, SW};
    fronts.reverse();
    for &l in letters {
        let lane = l.unsigned_abs() as usize - 1;
        let over = if l > 0 { OverDiag::R } else { OverDiag::L };
        let node = lane_crossing(graph, Dir::Down, Dir::Down, over);
        graph.wire(fronts[lane], Port { node, slot: NW });
        graph.wire(fronts[lane + 1], Port { node, slot: NE });
        fronts[lane] = Port { node, slot: SW };
        fronts[lane + 1] = Port { node, slot: SE };
    }
    fronts.reverse();
}

#[cfg(test)]
mod tests {
    use super::*;

    fn trefoil() -> PdCode {
        BraidWord::parse("2: 1 1 1").unwrap().closure_pd().unwrap()
    }

    fn fig8() -> PdCode {
        BraidWord::parse("3: 1 -2 1 -2").unwrap().closure_pd().unwrap()
    }

    #[test]
    fn connected_sum_counts() {
        let s = trefoil().connected_sum(&fig8()).unwrap();
        assert_eq!(s.crossing_count(), 7);
        assert_eq!(s.writhe(), 3);
        let granny = trefoil().connected_sum(&trefoil()).unwrap();
        assert_eq!(granny.writhe(), 6);
    }

    #[test]
    fn connected_sum_with_unknot() {
        let u = PdCode::unknot();
        assert_eq!(trefoil().connected_sum(&u).unwrap(), trefoil());
        assert_eq!(u.connected_sum(&trefoil()).unwrap(), trefoil());
    }

    #[test]
    fn width_one_cable_is_identity() {
        assert_eq!(trefoil().cable(1, 7).unwrap(), trefoil());
    }

    #[test]
    fn cable_of_unknot_is_torus_closure() {
        let pd = PdCode::unknot().cable(2, 3).unwrap();
        assert_eq!(pd.crossing_count(), 3);
        assert_eq!(pd.writhe(), 3);
        assert!(PdCode::unknot().cable(2, 2).is_err());
    }

    #[test]
    fn trefoil_two_cable_counts() {
        let c = trefoil().cable(2, 1).unwrap();
        // 3 crossings blown up to 4 each, plus |1 - 2*3| run letters.
        assert_eq!(c.crossing_count(), 17);
        assert_eq!(c.writhe(), 12 - 5);
    }

    #[test]
    fn fig8_three_cable_counts() {
        let c = fig8().cable(3, 1).unwrap();
        assert_eq!(c.crossing_count(), 4 * 9 + 2);
        assert_eq!(c.writhe(), 0 + 1 * 2);
    }

    #[test]
    fn cable_matches_braid_cable_shape() {
        let from_pd = trefoil().cable(2, 1).unwrap();
        let from_braid = BraidWord::parse("2: 1 1 1")
            .unwrap()
            .cable(2, 1)
            .unwrap()
            .closure_pd()
            .unwrap();
        assert_eq!(from_pd.crossing_count(), from_braid.crossing_count());
        assert_eq!(from_pd.writhe(), from_braid.writhe());
    }
}
