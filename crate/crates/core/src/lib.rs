//! Exact computational knot theory: diagram handling, classical and
//! polynomial invariants, the Blanchfield presentation matrix, and
//! certified bounds on unknotting and untwisting numbers.

pub mod blanchfield;
pub mod bounds;
pub mod classical;
pub mod families;
pub mod jones;
pub mod error;
pub mod knotio;
pub mod laurent;
pub mod linalg;

pub use error::{Error, Result};
