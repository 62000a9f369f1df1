//! Certified bounds on unknotting and untwisting numbers.
//!
//! Everything here produces or consumes [`BoundCertificate`]s: a τ-fact
//! pipeline for lower bounds, a signature rule and a parity obstruction,
//! witness replay for upper bounds, and a consolidation fold that turns
//! a pile of certificates into per-target intervals with gap statements.
//! Certificates carry their full derivation and replay from scratch;
//! nothing is trusted on say-so except facts the caller supplies as
//! context.

mod cert;
mod consolidate;
mod miyazawa;
mod tau;
mod witness;

pub use cert::{
    lower_tu_from_sigma, miyazawa_certificate, upper_from_witness, BoundCertificate, BoundKind,
    BoundTarget, DerivationStep, DerivedTau, Grade, WitnessTarget,
};
pub(crate) use cert::to_i64_matrix;
pub use consolidate::{
    consolidate, BoundsReport, ExactStatement, GapStatement, IntervalEntry,
};
pub use miyazawa::{miyazawa_test, MiyazawaVerdict};
pub use tau::{
    load_tau_facts, parse_tau_facts, tau_cable, tau_connected_sum, tau_torus, tau_whitehead,
    TauFact,
};
pub use witness::{
    Diagram, LeafMove, Presentation, ReplayBudget, ReplayChecks, Witness, WitnessMove,
};
