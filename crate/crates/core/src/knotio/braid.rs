//! Braid words and the diagram constructions that start from them.
//!
//! Letters are nonzero integers: `+i` crosses strands i and i+1 with the
//! right strand passing over (a positive crossing in the closure), `-i` the
//! inverse. The closure joins each strand's bottom back to its top.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::knotio::pd::PdCode;
use crate::knotio::portgraph::{Dir, LaneTracker, OverDiag, PortGraph};

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

/// A full-twist region: `2 * half_width` adjacent strands starting at
/// `first_strand` (1-based), twisted by one full twist of the given sign,
/// spliced in front of letter index `position`.
///
/// As a surgery move this is only meaningful where half the strands run
/// each way through the region; constructions that emit witnesses record
/// how that condition is met, since a braid-word splice cannot see it.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct TwistRegion {
    pub first_strand: usize,
    pub half_width: usize,
    pub sign: i8,
    pub position: usize,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::invalid("braid needs at least one strand"));
        }
        for &l in &letters {
            if l == 0 || l.unsigned_abs() as usize >= strands {
                return Err(Error::invalid(format!(
                    "letter {l} out of range for {strands} strands"
                )));
            }
        }
        Ok(BraidWord { strands, letters })
    }

    /// Parses `"3: 1 -2 1 -2"` (strand count, then letters).
    pub fn parse(input: &str) -> Result<Self> {
        let (head, tail) = input
            .split_once(':')
            .ok_or_else(|| Error::parse("expected `strands: letters`"))?;
        let strands: usize = head
            .trim()
            .parse()
            .map_err(|_| Error::parse(format!("bad strand count `{}`", head.trim())))?;
        let mut letters = Vec::new();
        for tok in tail.split(|c: char| c.is_whitespace() || c == ',') {
            if tok.is_empty() {
                continue;
            }
            let l: i32 = tok
                .parse()
                .map_err(|_| Error::parse(format!("bad braid letter `{tok}`")))?;
            letters.push(l);
        }
        Self::new(strands, letters)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn writhe(&self) -> i64 {
        self.letters.iter().map(|&l| l.signum() as i64).sum()
    }

    pub fn mirror(&self) -> Self {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().map(|&l| -l).collect(),
        }
    }

    /// The permutation of strand positions induced by the word:
    /// `perm[i]` is the bottom position of the strand entering at top
    /// position `i` (0-based).
    pub fn permutation(&self) -> Vec<usize> {
        let mut pos: Vec<usize> = (0..self.strands).collect();
        for &l in &self.letters {
            let i = l.unsigned_abs() as usize - 1;
            pos.swap(i, i + 1);
        }
        // pos[j] = strand at bottom position j; invert.
        let mut perm = vec![0; self.strands];
        for (bottom, &top) in pos.iter().enumerate() {
            perm[top] = bottom;
        }
        perm
    }

    /// Number of components of the closure.
    pub fn closure_components(&self) -> usize {
        let perm = self.permutation();
        let mut seen = vec![false; self.strands];
        let mut cycles = 0;
        for start in 0..self.strands {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = perm[i];
            }
        }
        cycles
    }

    pub fn is_knot_closure(&self) -> bool {
        self.closure_components() == 1
    }

    /// PD code of the closure. Fails when the closure is a link.
    pub fn closure_pd(&self) -> Result<PdCode> {
        if !self.is_knot_closure() {
            return Err(Error::invalid(format!(
                "closure has {} components; only knots are supported",
                self.closure_components()
            )));
        }
        let mut graph = PortGraph::new();
        let mut dirs = vec![Dir::Down; self.strands];
        let mut lanes = LaneTracker::new(self.strands, &dirs);
        for &l in &self.letters {
            let lane = l.unsigned_abs() as usize - 1;
            let over = if l > 0 { OverDiag::R } else { OverDiag::L };
            lanes.place(&mut graph, &mut dirs, lane, over);
        }
        lanes.close_all(&mut graph)?;
        graph.into_pd()
    }

    /// Concatenation with `other` shifted past this word's strands, sharing
    /// one strand: the closure is the connected sum of the two closures.
    pub fn connected_sum(&self, other: &Self) -> Self {
        let strands = self.strands + other.strands - 1;
        let shift = (self.strands - 1) as i32;
        let mut letters = self.letters.clone();
        letters.extend(other.letters.iter().map(|&l| l + shift * l.signum()));
        BraidWord { strands, letters }
    }

    /// Markov stabilization: one more strand, one more letter `±(k)` where
    /// k is the old strand count.
    pub fn stabilized(&self, sign: i8) -> Self {
        let mut letters = self.letters.clone();
        letters.push(self.strands as i32 * sign.signum() as i32);
        BraidWord { strands: self.strands + 1, letters }
    }

    /// Splices a full twist into the word at the region's position.
    pub fn insert_full_twist(&self, region: &TwistRegion) -> Result<Self> {
        let width = 2 * region.half_width;
        if region.half_width == 0 {
            return Err(Error::invalid("twist region needs positive width"));
        }
        if region.sign != 1 && region.sign != -1 {
            return Err(Error::invalid("twist sign must be +1 or -1"));
        }
        if region.first_strand == 0 || region.first_strand + width - 1 > self.strands {
            return Err(Error::invalid(format!(
                "twist region strands {}..{} out of range for {} strands",
                region.first_strand,
                region.first_strand + width - 1,
                self.strands
            )));
        }
        if region.position > self.letters.len() {
            return Err(Error::invalid("twist position beyond end of word"));
        }
        let twist = full_twist_word(region.first_strand, width, region.sign);
        let mut letters = Vec::with_capacity(self.letters.len() + twist.len());
        letters.extend_from_slice(&self.letters[..region.position]);
        letters.extend_from_slice(&twist);
        letters.extend_from_slice(&self.letters[region.position..]);
        Ok(BraidWord { strands: self.strands, letters })
    }

    /// The (p, q)-cable: p parallel copies in blackboard framing, corrected
    /// by `q - p * writhe` torus runs on the first bundle so the cabling
    /// annulus has framing q. The caller is expected to validate the result
    /// against the Alexander cabling identity (see `classical`).
    pub fn cable(&self, p: usize, q: i64) -> Result<Self> {
        if p == 0 {
            return Err(Error::invalid("cable width must be positive"));
        }
        if !self.is_knot_closure() {
            return Err(Error::invalid("cable base must close to a knot"));
        }
        let strands = self.strands * p;
        let mut letters = Vec::new();
        for &l in &self.letters {
            let x = (l.unsigned_abs() as usize - 1) * p;
            letters.extend(bundle_block(x, p, l.signum()));
        }
        let m = q - p as i64 * self.writhe();
        letters.extend(torus_runs(p, m));
        BraidWord::new(strands, letters)
    }
}

/// One full twist of the given sign on `width` strands starting at
/// `first` (1-based): `(σ_first ... σ_{first+width-2})^width`, inverted
/// letterwise and reversed for the negative twist.
pub(crate) fn full_twist_word(first: usize, width: usize, sign: i8) -> Vec<i32> {
    let mut run: Vec<i32> = Vec::new();
    for _ in 0..width {
        for j in 0..width - 1 {
            run.push((first + j) as i32);
        }
    }
    if sign < 0 {
        run.reverse();
        for l in &mut run {
            *l = -*l;
        }
    }
    run
}

/// The block of p^2 crossings where the p-strand bundle starting after
/// strand `x` crosses the next bundle, all with the given sign, preserving
/// the internal order of each bundle.
fn bundle_block(x: usize, p: usize, sign: i32) -> Vec<i32> {
    let mut out = Vec::with_capacity(p * p);
    for r in 1..=p {
        for j in 0..p {
            out.push((x + p - r + 1 + j) as i32);
        }
    }
    if sign < 0 {
        out.reverse();
        for l in &mut out {
            *l = -*l;
        }
    }
    out
}

/// `m` torus runs `(σ_1 ... σ_{p-1})^m` on the first `p` strands; negative
/// `m` uses the inverse run.
fn torus_runs(p: usize, m: i64) -> Vec<i32> {
    if p < 2 {
        return Vec::new();
    }
    let mut one_run: Vec<i32> = (1..p as i32).collect();
    if m < 0 {
        one_run.reverse();
        for l in &mut one_run {
            *l = -*l;
        }
    }
    let mut out = Vec::new();
    for _ in 0..m.unsigned_abs() {
        out.extend_from_slice(&one_run);
    }
    out
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.strands)?;
        for l in &self.letters {
            write!(f, " {l}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(s: &str) -> BraidWord {
        BraidWord::parse(s).unwrap()
    }

    #[test]
    fn parse_and_validate() {
        let w = b("2: 1 1 1");
        assert_eq!(w.strands(), 2);
        assert_eq!(w.writhe(), 3);
        assert!(BraidWord::parse("2: 2").is_err());
        assert!(BraidWord::parse("0:").is_err());
        assert!(BraidWord::parse("1 1 1").is_err());
    }

    #[test]
    fn closure_components() {
        assert!(b("2: 1 1 1").is_knot_closure());
        assert!(!b("2: 1 1").is_knot_closure());
        assert!(b("3: 1 -2 1 -2").is_knot_closure());
        assert!(!b("3:").is_knot_closure());
    }

    #[test]
    fn trefoil_closure_pd() {
        let pd = b("2: 1 1 1").closure_pd().unwrap();
        assert_eq!(pd.crossing_count(), 3);
        assert_eq!(pd.writhe(), 3);
        assert_eq!(pd.seifert_circle_count(), 2);
        let neg = b("2: -1 -1 -1").closure_pd().unwrap();
        assert_eq!(neg.writhe(), -3);
    }

    #[test]
    fn figure_eight_closure_pd() {
        let pd = b("3: 1 -2 1 -2").closure_pd().unwrap();
        assert_eq!(pd.crossing_count(), 4);
        assert_eq!(pd.writhe(), 0);
        assert_eq!(pd.seifert_circle_count(), 3);
    }

    #[test]
    fn link_closure_rejected() {
        assert!(b("2: 1 1").closure_pd().is_err());
    }

    #[test]
    fn single_letter_closure_is_unknot_diagram() {
        let pd = b("2: 1").closure_pd().unwrap();
        assert_eq!(pd.crossing_count(), 1);
        assert_eq!(pd.writhe(), 1);
    }

    #[test]
    fn connected_sum_shifts() {
        let s = b("2: 1 1 1").connected_sum(&b("2: -1 -1 -1"));
        assert_eq!(s.strands(), 3);
        assert_eq!(s.letters(), &[1, 1, 1, -2, -2, -2]);
        assert!(s.is_knot_closure());
    }

    #[test]
    fn full_twist_width_two_is_sigma_squared() {
        let w = b("2: 1 1 1");
        let t = w
            .insert_full_twist(&TwistRegion {
                first_strand: 1,
                half_width: 1,
                sign: -1,
                position: 3,
            })
            .unwrap();
        assert_eq!(t.letters(), &[1, 1, 1, -1, -1]);
    }

    #[test]
    fn twist_region_validation() {
        let w = b("2: 1 1 1");
        let bad = TwistRegion { first_strand: 2, half_width: 1, sign: 1, position: 0 };
        assert!(w.insert_full_twist(&bad).is_err());
        let bad = TwistRegion { first_strand: 1, half_width: 2, sign: 1, position: 0 };
        assert!(w.insert_full_twist(&bad).is_err());
    }

    #[test]
    fn cable_structure() {
        let tref = b("2: 1 1 1");
        let c = tref.cable(2, 1).unwrap();
        assert_eq!(c.strands(), 4);
        // 3 blocks of 4 crossings plus |1 - 2*3| = 5 corrective letters.
        assert_eq!(c.len(), 17);
        assert!(c.is_knot_closure());
        let c3 = tref.cable(3, 1).unwrap();
        assert_eq!(c3.strands(), 6);
        assert!(c3.is_knot_closure());
    }

    #[test]
    fn cable_of_one_is_identity_on_closure() {
        let tref = b("2: 1 1 1");
        let c = tref.cable(1, 5).unwrap();
        assert_eq!(c.letters(), tref.letters());
    }

    #[test]
    fn stabilization_keeps_knot() {
        let w = b("2: 1 1 1").stabilized(1);
        assert_eq!(w.strands(), 3);
        assert_eq!(w.letters(), &[1, 1, 1, 2]);
        assert!(w.is_knot_closure());
    }
}
