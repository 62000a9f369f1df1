//! Planar diagram codes for knots.
//!
//! A crossing `X[a,b,c,d]` lists the four incident edges counterclockwise
//! starting from the incoming under-strand. Edges are numbered 1..2n along
//! the knot, so the under strand runs a -> c with c = a mod 2n + 1, and the
//! over strand runs b -> d or d -> b, whichever is compatible with the
//! numbering. A crossing is positive when the over strand runs d -> b.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The serialized form is just the tuple list; deserializing re-runs full
/// validation, so hand-edited codes cannot smuggle in broken invariants.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(try_from = "Vec<[u32; 4]>", into = "Vec<[u32; 4]>")]
pub struct PdCode {
    tuples: Vec<[u32; 4]>,
    /// Per crossing: +1 or -1.
    signs: Vec<i8>,
    /// Per crossing: the slot (1 = b or 3 = d) where the over strand enters.
    over_in_slot: Vec<u8>,
}

impl PdCode {
    /// The zero-crossing unknot diagram.
    pub fn unknot() -> Self {
        PdCode { tuples: Vec::new(), signs: Vec::new(), over_in_slot: Vec::new() }
    }

    pub fn from_tuples(tuples: Vec<[u32; 4]>) -> Result<Self> {
        let n = tuples.len();
        if n == 0 {
            return Ok(Self::unknot());
        }
        let edges = 2 * n as u32;
        let next = |e: u32| e % edges + 1;
        // Every edge label appears exactly twice.
        let mut counts = vec![0u8; edges as usize + 1];
        for t in &tuples {
            for &e in t {
                if e == 0 || e > edges {
                    return Err(Error::invalid(format!(
                        "edge label {e} out of range 1..{edges}"
                    )));
                }
                counts[e as usize] += 1;
            }
        }
        if counts[1..].iter().any(|&c| c != 2) {
            return Err(Error::invalid("each edge label must appear exactly twice"));
        }
        let mut signs = Vec::with_capacity(n);
        let mut over_in_slot = Vec::with_capacity(n);
        for t in &tuples {
            let [a, b, c, d] = *t;
            if next(a) != c {
                return Err(Error::invalid(format!(
                    "under strand of X[{a},{b},{c},{d}] must run a -> a+1"
                )));
            }
            let b_to_d = next(b) == d;
            let d_to_b = next(d) == b;
            let over_in = match (b_to_d, d_to_b) {
                (true, false) => 1u8,
                (false, true) => 3u8,
                (true, true) => {
                    // Only possible for a one-crossing diagram; resolve by
                    // head/tail consistency with the under strand.
                    debug_assert_eq!(n, 1);
                    // Slot b is an in-port exactly when its edge's other
                    // occurrence is an out position (slot c or an over-out).
                    // With edges {1, 2}: a = 1 is the head of edge 1, so the
                    // occurrence of edge 1 among {b, d} is a tail (out), and
                    // the occurrence of edge c = 2 among {b, d} is a head.
                    if b == a {
                        // b is edge a's other occurrence: out, so over runs
                        // d -> b.
                        3u8
                    } else {
                        1u8
                    }
                }
                (false, false) => {
                    return Err(Error::invalid(format!(
                        "over strand of X[{a},{b},{c},{d}] does not fit the numbering"
                    )))
                }
            };
            signs.push(if over_in == 3 { 1 } else { -1 });
            over_in_slot.push(over_in);
        }
        let pd = PdCode { tuples, signs, over_in_slot };
        pd.check_single_component()?;
        pd.check_planar()?;
        Ok(pd)
    }

    /// Euler-characteristic planarity check: the tuples define a rotation
    /// system (counterclockwise slot order at each crossing); its faces are
    /// the orbits of twin-then-next. A knot shadow with n crossings embeds
    /// in the sphere exactly when there are n + 2 faces.
    fn check_planar(&self) -> Result<()> {
        let n = self.tuples.len();
        if n == 0 {
            return Ok(());
        }
        let mut occurrences = vec![[usize::MAX; 2]; 2 * n + 1];
        for (c, t) in self.tuples.iter().enumerate() {
            for (k, &e) in t.iter().enumerate() {
                let h = 4 * c + k;
                let pair = &mut occurrences[e as usize];
                if pair[0] == usize::MAX {
                    pair[0] = h;
                } else {
                    pair[1] = h;
                }
            }
        }
        let twin = |h: usize| {
            let e = self.tuples[h / 4][h % 4] as usize;
            let [x, y] = occurrences[e];
            if x == h {
                y
            } else {
                x
            }
        };
        let mut seen = vec![false; 4 * n];
        let mut faces = 0usize;
        for start in 0..4 * n {
            if seen[start] {
                continue;
            }
            faces += 1;
            let mut h = start;
            while !seen[h] {
                seen[h] = true;
                let t = twin(h);
                h = t - t % 4 + (t + 1) % 4;
            }
        }
        if faces != n + 2 {
            return Err(Error::invalid(format!(
                "diagram is not planar: {n} crossings but {faces} faces"
            )));
        }
        Ok(())
    }

    fn check_single_component(&self) -> Result<()> {
        let n = self.tuples.len();
        if n == 0 {
            return Ok(());
        }
        // Edges 1..2n must form a single cycle under e -> e+1, which they
        // do by construction; the real condition is that each consecutive
        // pair shares a crossing consistently, which the head/tail count
        // below enforces: every edge must occur once as a head (positions
        // a, over-in) and once as a tail (positions c, over-out).
        let edges = 2 * n;
        let mut heads = vec![0u8; edges + 1];
        let mut tails = vec![0u8; edges + 1];
        for (i, t) in self.tuples.iter().enumerate() {
            let (over_in, over_out) = self.over_edges(i);
            heads[t[0] as usize] += 1;
            heads[over_in as usize] += 1;
            tails[t[2] as usize] += 1;
            tails[over_out as usize] += 1;
        }
        if heads[1..].iter().any(|&c| c != 1) || tails[1..].iter().any(|&c| c != 1) {
            return Err(Error::invalid(
                "edge orientations are inconsistent; diagram is not a knot traversal",
            ));
        }
        Ok(())
    }

    pub fn crossing_count(&self) -> usize {
        self.tuples.len()
    }

    pub fn edge_count(&self) -> usize {
        2 * self.tuples.len()
    }

    pub fn tuples(&self) -> &[[u32; 4]] {
        &self.tuples
    }

    pub fn sign(&self, crossing: usize) -> i8 {
        self.signs[crossing]
    }

    /// Tuple position (1 or 3) where the over strand enters.
    pub fn over_in_slot(&self, crossing: usize) -> u8 {
        self.over_in_slot[crossing]
    }

    pub fn writhe(&self) -> i64 {
        self.signs.iter().map(|&s| s as i64).sum()
    }

    /// (over-in edge, over-out edge) of a crossing.
    pub fn over_edges(&self, crossing: usize) -> (u32, u32) {
        let t = self.tuples[crossing];
        if self.over_in_slot[crossing] == 3 {
            (t[3], t[1])
        } else {
            (t[1], t[3])
        }
    }

    /// (under-in edge, under-out edge) of a crossing.
    pub fn under_edges(&self, crossing: usize) -> (u32, u32) {
        let t = self.tuples[crossing];
        (t[0], t[2])
    }

    /// Mirror image: reflect the diagram, which flips every crossing sign.
    pub fn mirror(&self) -> Self {
        let tuples = self
            .tuples
            .iter()
            .map(|&[a, b, c, d]| [a, d, c, b])
            .collect();
        Self::from_tuples(tuples).expect("mirror of a valid code is valid")
    }

    /// The same diagram with one crossing switched. The arcs and edge
    /// labels are untouched; the tuple is re-anchored so the old over
    /// strand becomes the under strand entering at slot 0.
    pub fn crossing_changed(&self, crossing: usize) -> Result<Self> {
        if crossing >= self.tuples.len() {
            return Err(Error::invalid(format!(
                "crossing {crossing} out of range for {} crossings",
                self.tuples.len()
            )));
        }
        let mut tuples = self.tuples.clone();
        let t = tuples[crossing];
        let s = self.over_in_slot[crossing] as usize;
        tuples[crossing] = [t[s], t[(s + 1) % 4], t[(s + 2) % 4], t[(s + 3) % 4]];
        Self::from_tuples(tuples)
    }

    /// Number of Seifert circles of the oriented resolution. The oriented
    /// smoothing is the A-smoothing at positive crossings and the
    /// B-smoothing at negative ones.
    pub fn seifert_circle_count(&self) -> usize {
        if self.tuples.is_empty() {
            return 1;
        }
        count_circles(self, |i| {
            if self.signs[i] > 0 {
                Smoothing::A
            } else {
                Smoothing::B
            }
        })
    }

    /// Parses the textual form `X[1,4,2,5] X[3,6,4,1] ...`. An empty string
    /// denotes the zero-crossing unknot.
    pub fn parse(input: &str) -> Result<Self> {
        let trimmed = input.trim();
        if trimmed.is_empty() {
            return Ok(Self::unknot());
        }
        let mut tuples = Vec::new();
        let mut rest = trimmed;
        while !rest.is_empty() {
            rest = rest.trim_start_matches(|c: char| c.is_whitespace() || c == ',');
            if rest.is_empty() {
                break;
            }
            if !(rest.starts_with("X[") || rest.starts_with("x[")) {
                return Err(Error::parse(format!(
                    "expected `X[...]` near `{}`",
                    &rest[..rest.len().min(12)]
                )));
            }
            let close = rest
                .find(']')
                .ok_or_else(|| Error::parse("unterminated `X[`"))?;
            let inner = &rest[2..close];
            let parts: Vec<&str> = inner.split(',').map(str::trim).collect();
            if parts.len() != 4 {
                return Err(Error::parse(format!(
                    "crossing needs four edges, got `{inner}`"
                )));
            }
            let mut tuple = [0u32; 4];
            for (k, p) in parts.iter().enumerate() {
                tuple[k] = p
                    .parse::<u32>()
                    .map_err(|_| Error::parse(format!("bad edge label `{p}`")))?;
            }
            tuples.push(tuple);
            rest = &rest[close + 1..];
        }
        Self::from_tuples(tuples)
    }
}

impl TryFrom<Vec<[u32; 4]>> for PdCode {
    type Error = Error;

    fn try_from(tuples: Vec<[u32; 4]>) -> Result<Self> {
        Self::from_tuples(tuples)
    }
}

impl From<PdCode> for Vec<[u32; 4]> {
    fn from(pd: PdCode) -> Self {
        pd.tuples
    }
}

/// Local replacement of a crossing by two non-crossing arcs, in terms of
/// the counterclockwise slot order (a, b, c, d): `A` joins a-b and c-d,
/// `B` joins a-d and b-c.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Smoothing {
    A,
    B,
}

/// Counts the circles obtained by smoothing every crossing according to
/// `choice`. Works on slot occurrences, so it is orientation-free.
pub(crate) fn count_circles<F>(pd: &PdCode, choice: F) -> usize
where
    F: Fn(usize) -> Smoothing,
{
    let n = pd.crossing_count();
    if n == 0 {
        return 1;
    }
    // Union-find over slot ids 4*crossing + slot. Each edge joins its two
    // occurrences; each smoothing joins slots inside the crossing.
    let mut uf = UnionFind::new(4 * n);
    let mut first_occurrence = vec![usize::MAX; pd.edge_count() + 1];
    for (i, t) in pd.tuples.iter().enumerate() {
        for (s, &e) in t.iter().enumerate() {
            let id = 4 * i + s;
            if first_occurrence[e as usize] == usize::MAX {
                first_occurrence[e as usize] = id;
            } else {
                uf.union(first_occurrence[e as usize], id);
            }
        }
    }
    for i in 0..n {
        match choice(i) {
            Smoothing::A => {
                uf.union(4 * i, 4 * i + 1);
                uf.union(4 * i + 2, 4 * i + 3);
            }
            Smoothing::B => {
                uf.union(4 * i, 4 * i + 3);
                uf.union(4 * i + 1, 4 * i + 2);
            }
        }
    }
    let mut roots = std::collections::HashSet::new();
    for id in 0..4 * n {
        roots.insert(uf.find(id));
    }
    roots.len()
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    pub fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let root = self.find(self.parent[x]);
            self.parent[x] = root;
        }
        self.parent[x]
    }

    pub fn union(&mut self, a: usize, b: usize) {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra != rb {
            self.parent[ra] = rb;
        }
    }
}

impl fmt::Display for PdCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.tuples.is_empty() {
            return write!(f, "unknot");
        }
        for (i, [a, b, c, d]) in self.tuples.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "X[{a},{b},{c},{d}]")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub const LEFT_TREFOIL: &str = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]";
    pub const FIG8: &str = "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]";

    #[test]
    fn parse_trefoil() {
        let pd = PdCode::parse(LEFT_TREFOIL).unwrap();
        assert_eq!(pd.crossing_count(), 3);
        assert_eq!(pd.writhe(), -3);
        assert_eq!(pd.seifert_circle_count(), 2);
    }

    #[test]
    fn mirror_flips_signs() {
        let pd = PdCode::parse(LEFT_TREFOIL).unwrap();
        let m = pd.mirror();
        assert_eq!(m.writhe(), 3);
        assert_eq!(m.mirror(), pd);
    }

    #[test]
    fn figure_eight_diagram() {
        let pd = PdCode::parse(FIG8).unwrap();
        assert_eq!(pd.crossing_count(), 4);
        assert_eq!(pd.writhe(), 0);
        assert_eq!(pd.seifert_circle_count(), 3);
        // Figure-eight is amphichiral as a code after renumbering, but the
        // mirror code still validates and flips the writhe.
        assert_eq!(pd.mirror().writhe(), 0);
    }

    #[test]
    fn kinks() {
        let pos = PdCode::parse("X[1,1,2,2]").unwrap();
        assert_eq!(pos.writhe(), 1);
        let neg = PdCode::parse("X[1,2,2,1]").unwrap();
        assert_eq!(neg.writhe(), -1);
    }

    #[test]
    fn rejects_bad_codes() {
        assert!(PdCode::parse("X[1,2,3,4]").is_err());
        assert!(PdCode::parse("X[1,4,2,5]").is_err());
        assert!(PdCode::parse("X[1,3,2,3]").is_err());
    }

    #[test]
    fn unknot_round_trip() {
        let u = PdCode::parse("").unwrap();
        assert_eq!(u.crossing_count(), 0);
        assert_eq!(u.seifert_circle_count(), 1);
    }

    #[test]
    fn crossing_change_flips_one_sign() {
        let pd = PdCode::parse(LEFT_TREFOIL).unwrap();
        for i in 0..3 {
            let changed = pd.crossing_changed(i).unwrap();
            assert_eq!(changed.writhe(), -1);
            assert_eq!(changed.sign(i), 1);
            // The under strand at the switched crossing is the old over
            // strand; the other crossings keep their tuples.
            assert_eq!(changed.under_edges(i).0, pd.over_edges(i).0);
            for j in 0..3 {
                if j != i {
                    assert_eq!(changed.tuples()[j], pd.tuples()[j]);
                }
            }
            // Switching twice restores the diagram.
            assert_eq!(changed.crossing_changed(i).unwrap(), pd);
        }
        assert!(pd.crossing_changed(3).is_err());
    }

    #[test]
    fn serde_round_trips_and_validates() {
        let pd = PdCode::parse(FIG8).unwrap();
        let json = serde_json::to_string(&pd).unwrap();
        assert_eq!(serde_json::from_str::<PdCode>(&json).unwrap(), pd);
        assert!(serde_json::from_str::<PdCode>("[[1,2,3,4]]").is_err());
    }
}
