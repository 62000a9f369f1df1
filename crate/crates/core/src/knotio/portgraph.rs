//! Low-level planar diagram builder.
//!
//! A diagram under construction is a set of crossing nodes, each with four
//! ports in counterclockwise order, plus oriented wires joining an out-port
//! to an in-port. Strands run between opposite ports of a node. Emitting a
//! `PdCode` walks the single closed curve and numbers wires along it.
//!
//! Slot layout (counterclockwise, page coordinates with y up):
//! 0 = NW, 1 = SW, 2 = SE, 3 = NE. The "L diagonal" joins NW-SE (slots
//! 0 and 2), the "R diagonal" joins SW-NE (slots 1 and 3).

use crate::error::{Error, Result};
use crate::knotio::pd::PdCode;

pub(crate) const NW: u8 = 0;
pub(crate) const SW: u8 = 1;
pub(crate) const SE: u8 = 2;
pub(crate) const NE: u8 = 3;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub(crate) struct Port {
    pub node: usize,
    pub slot: u8,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub(crate) enum Dir {
    Down,
    Up,
}

/// Which diagonal of a crossing carries the over strand.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub(crate) enum OverDiag {
    L,
    R,
}

struct Node {
    in_slots: [bool; 4],
    under_in: u8,
}

pub(crate) struct PortGraph {
    nodes: Vec<Node>,
    wires: Vec<(Port, Port)>,
}

impl PortGraph {
    pub fn new() -> Self {
        PortGraph { nodes: Vec::new(), wires: Vec::new() }
    }

    /// Adds a crossing node. `in_slots[s]` marks the strand entering at
    /// slot `s`; opposite slots must be one in, one out, and the under-in
    /// slot must be an in slot.
    pub fn add_crossing(&mut self, in_slots: [bool; 4], under_in: u8) -> usize {
        assert!(in_slots[0] != in_slots[2] && in_slots[1] != in_slots[3]);
        assert!(in_slots[under_in as usize]);
        self.nodes.push(Node { in_slots, under_in });
        self.nodes.len() - 1
    }

    /// Merges another graph in; its node i must have been allocated while
    /// this graph had exactly `shift + i` nodes, so ports carry over by
    /// adding `shift`.
    pub fn absorb(&mut self, other: PortGraph, shift: usize) {
        assert_eq!(shift, self.nodes.len());
        self.nodes.extend(other.nodes);
        let lift = |p: Port| Port { node: p.node + shift, slot: p.slot };
        self.wires
            .extend(other.wires.into_iter().map(|(f, t)| (lift(f), lift(t))));
    }

    /// Wires `from` (an out-port) to `to` (an in-port).
    pub fn wire(&mut self, from: Port, to: Port) {
        debug_assert!(!self.nodes[from.node].in_slots[from.slot as usize]);
        debug_assert!(self.nodes[to.node].in_slots[to.slot as usize]);
        self.wires.push((from, to));
    }

    /// Emits the PD code of the single closed component. Fails when ports
    /// are left dangling or the diagram has several components.
    pub fn into_pd(self) -> Result<PdCode> {
        let n = self.nodes.len();
        if n == 0 {
            return Ok(PdCode::unknot());
        }
        let total_wires = self.wires.len();
        if total_wires != 2 * n {
            return Err(Error::internal(format!(
                "diagram has {total_wires} wires for {n} crossings"
            )));
        }
        // Index wires by their endpoint ports.
        let mut out_of: Vec<Vec<Option<usize>>> = (0..n).map(|_| vec![None; 4]).collect();
        let mut in_of: Vec<Vec<Option<usize>>> = (0..n).map(|_| vec![None; 4]).collect();
        for (w, (from, to)) in self.wires.iter().enumerate() {
            if out_of[from.node][from.slot as usize].replace(w).is_some() {
                return Err(Error::internal("port wired twice"));
            }
            if in_of[to.node][to.slot as usize].replace(w).is_some() {
                return Err(Error::internal("port wired twice"));
            }
        }
        for (node, slots) in out_of.iter().enumerate() {
            for slot in 0..4 {
                let is_in = self.nodes[node].in_slots[slot];
                let have = if is_in {
                    in_of[node][slot].is_some()
                } else {
                    slots[slot].is_some()
                };
                if !have {
                    return Err(Error::internal(format!(
                        "dangling port at node {node} slot {slot}"
                    )));
                }
            }
        }
        // Walk the curve starting from the wire that enters crossing 0 at
        // its under-in port; that wire becomes edge 1.
        let start_port = Port { node: 0, slot: self.nodes[0].under_in };
        let start_wire = in_of[0][start_port.slot as usize].expect("checked above");
        let mut edge_of_wire: Vec<Option<u32>> = vec![None; total_wires];
        let mut wire = start_wire;
        let mut next_edge = 1u32;
        loop {
            if edge_of_wire[wire].is_some() {
                break;
            }
            edge_of_wire[wire] = Some(next_edge);
            next_edge += 1;
            let (_, to) = self.wires[wire];
            let out_slot = (to.slot + 2) % 4;
            wire = out_of[to.node][out_slot as usize].expect("checked above");
        }
        if edge_of_wire.iter().any(|e| e.is_none()) {
            return Err(Error::invalid(
                "diagram closes into more than one component",
            ));
        }
        // Assemble tuples counterclockwise from each under-in slot.
        let mut tuples = Vec::with_capacity(n);
        for (node_idx, node) in self.nodes.iter().enumerate() {
            let mut tuple = [0u32; 4];
            for k in 0..4 {
                let slot = (node.under_in + k) % 4;
                let w = if node.in_slots[slot as usize] {
                    in_of[node_idx][slot as usize]
                } else {
                    out_of[node_idx][slot as usize]
                }
                .expect("checked above");
                tuple[k as usize] = edge_of_wire[w].expect("single component");
            }
            tuples.push(tuple);
        }
        PdCode::from_tuples(tuples)
    }
}

/// One elementary crossing between adjacent vertical lanes, with the lane
/// directions read above the crossing. Returns the node index; the caller
/// reads the four ports off the known layout.
pub(crate) fn lane_crossing(
    graph: &mut PortGraph,
    dl: Dir,
    dr: Dir,
    over: OverDiag,
) -> usize {
    let mut in_slots = [false; 4];
    // L diagonal joins NW and SE; its flow follows the left lane above.
    match dl {
        Dir::Down => in_slots[NW as usize] = true,
        Dir::Up => in_slots[SE as usize] = true,
    }
    // R diagonal joins SW and NE; its flow follows the right lane above.
    match dr {
        Dir::Down => in_slots[NE as usize] = true,
        Dir::Up => in_slots[SW as usize] = true,
    }
    let under_in = match over {
        // Under strand is the other diagonal.
        OverDiag::L => match dr {
            Dir::Down => NE,
            Dir::Up => SW,
        },
        OverDiag::R => match dl {
            Dir::Down => NW,
            Dir::Up => SE,
        },
    };
    graph.add_crossing(in_slots, under_in)
}

/// A dangling lane stub: for a Down lane the out-port waiting to feed the
/// next crossing below; for an Up lane the in-port waiting to be fed from
/// below.
#[derive(Clone, Copy, Debug)]
pub(crate) struct Stub {
    pub port: Port,
    pub dir: Dir,
}

/// Tracks per-lane dangling stubs while stacking crossings top-down.
/// `tops` records each lane's first port for final closure.
pub(crate) struct LaneTracker {
    pub front: Vec<Option<Stub>>,
    pub tops: Vec<Option<Stub>>,
}

impl LaneTracker {
    pub fn new(lanes: usize, dirs: &[Dir]) -> Self {
        assert_eq!(dirs.len(), lanes);
        LaneTracker {
            front: dirs.iter().map(|_| None).collect(),
            tops: vec![None; lanes],
        }
    }

    /// Places one crossing between `lane` and `lane + 1`, updating stubs,
    /// tops, and the direction vector (lane directions swap across it).
    pub fn place(
        &mut self,
        graph: &mut PortGraph,
        dirs: &mut [Dir],
        lane: usize,
        over: OverDiag,
    ) {
        let dl = dirs[lane];
        let dr = dirs[lane + 1];
        let node = lane_crossing(graph, dl, dr, over);
        // Upper ports: NW belongs to the left lane, NE to the right lane.
        let nw = Port { node, slot: NW };
        let ne = Port { node, slot: NE };
        let sw = Port { node, slot: SW };
        let se = Port { node, slot: SE };
        self.attach(graph, lane, dl, nw);
        self.attach(graph, lane + 1, dr, ne);
        // Lower ports: SW continues the left lane, SE the right lane.
        // Directions swap: the left lane below carries the R-diagonal
        // strand (direction dr), and vice versa.
        self.front[lane] = Some(Stub { port: sw, dir: dr });
        self.front[lane + 1] = Some(Stub { port: se, dir: dl });
        dirs[lane] = dr;
        dirs[lane + 1] = dl;
    }

    /// Connects the upper port of a new crossing to the lane's dangling
    /// stub, or records it as the lane's top. For a Down lane `upper` is an
    /// in-port, for an Up lane an out-port.
    pub fn attach(&mut self, graph: &mut PortGraph, lane: usize, dir: Dir, upper: Port) {
        match self.front[lane].take() {
            Some(stub) => match dir {
                Dir::Down => graph.wire(stub.port, upper),
                Dir::Up => graph.wire(upper, stub.port),
            },
            None => {
                self.tops[lane] = Some(Stub { port: upper, dir });
            }
        }
    }

    /// Standard closure: joins each lane's bottom stub back to its top.
    pub fn close_all(&mut self, graph: &mut PortGraph) -> Result<()> {
        let lanes: Vec<usize> = (0..self.front.len()).collect();
        self.close_lanes(graph, &lanes)
    }

    /// Joins the given lanes' bottom stubs back to their tops.
    pub fn close_lanes(&mut self, graph: &mut PortGraph, lanes: &[usize]) -> Result<()> {
        for &lane in lanes {
            let (bottom, top) = match (self.front[lane].take(), self.tops[lane].take()) {
                (Some(b), Some(t)) => (b, t),
                (None, None) => {
                    return Err(Error::invalid(
                        "closure has an unused strand, so it is a link, not a knot",
                    ))
                }
                _ => return Err(Error::internal("mismatched lane stubs")),
            };
            match bottom.dir {
                Dir::Down => graph.wire(bottom.port, top.port),
                Dir::Up => graph.wire(top.port, bottom.port),
            }
        }
        Ok(())
    }
}
