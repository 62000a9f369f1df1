//! Knot diagram input: PD codes, braid words, and constructions
//! (closures, cables, doubles, connected sums) that produce them.

pub mod braid;
pub mod cablepd;
pub mod double;
pub mod pd;
pub mod portgraph;

pub use braid::{BraidWord, TwistRegion};
pub use double::{whitehead_double, ClaspSign};
pub use pd::{PdCode, Smoothing};
