//! The three knot families with certified unknotting/untwisting gaps:
//! cables K_{p,1}, connected sums J_p^q = #^p K_{q,1}, and S_p^q built
//! from untwisted Whitehead doubles.
//!
//! Each builder assembles the family knot as a presentation tree, derives
//! a lower bound on u through the τ pipeline, replays an untwisting
//! witness for the upper bound, and consolidates everything into one
//! report. The witnesses all reduce to crossing changes on a leaf: a
//! crossing change on the companion acts on the cable as one generalized
//! crossing change of half-width p (the cable passes 2p strands through
//! the twist ball), which is exactly what the presentation tree's Cable
//! nodes encode.

use serde::{Deserialize, Serialize};

use crate::bounds::{
    consolidate, lower_tu_from_sigma, upper_from_witness, BoundCertificate, BoundTarget,
    BoundsReport, DerivationStep, DerivedTau, Grade, LeafMove, Presentation, ReplayBudget,
    ReplayChecks, TauFact, Witness, WitnessMove, WitnessTarget,
};
use crate::classical::{alexander_via_fox, seifert_matrix, signature_from_seifert};
use crate::error::{Error, Result};
use crate::knotio::{whitehead_double, BraidWord, ClaspSign, PdCode};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FamilyKind {
    Cable,
    Jpq,
    Spq,
}

impl FamilyKind {
    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::Cable => "cable",
            FamilyKind::Jpq => "jpq",
            FamilyKind::Spq => "spq",
        }
    }
}

/// Parameters for one family instance. `base_moves` must unknot the base
/// in a single move for the cable and J families; the S family supplies
/// its own clasp move. Parameters are capped at desk scale (p, q ≤ 9) —
/// the constructions are exact at any size, but diagram growth is
/// quadratic in p·q and replay cost grows with it.
#[derive(Clone, Debug)]
pub struct FamilySpec {
    pub family: FamilyKind,
    pub base: BraidWord,
    pub p: i64,
    pub q: i64,
    pub base_fact: TauFact,
    pub base_moves: Vec<WitnessMove>,
}

const MAX_PARAM: i64 = 9;

impl FamilySpec {
    fn validate(&self) -> Result<()> {
        if !self.base.is_knot_closure() {
            return Err(Error::invalid("family base must close to a knot"));
        }
        let p_min = match self.family {
            FamilyKind::Spq => 0,
            _ => 1,
        };
        if self.p < p_min || self.p > MAX_PARAM {
            return Err(Error::invalid(format!(
                "family parameter p = {} outside {p_min}..={MAX_PARAM}",
                self.p
            )));
        }
        match self.family {
            FamilyKind::Cable => {
                // A crossing change on the companion turns the (p, q)-cable
                // into the (p, q)-cable of the unknot, i.e. the torus knot
                // T(p, q); only |q| = 1 makes that residue trivial, so only
                // there does the lifted move finish the job in one step.
                if self.q.abs() != 1 {
                    return Err(Error::invalid(
                        "cable family needs framing q = ±1 for its one-move witness",
                    ));
                }
            }
            FamilyKind::Jpq | FamilyKind::Spq => {
                if self.q < 1 || self.q > MAX_PARAM {
                    return Err(Error::invalid(format!(
                        "family parameter q = {} outside 1..={MAX_PARAM}",
                        self.q
                    )));
                }
            }
        }
        if matches!(self.family, FamilyKind::Cable | FamilyKind::Jpq) {
            if self.base_moves.len() != 1 {
                return Err(Error::invalid(
                    "the construction needs a one-move unknotting witness for the base",
                ));
            }
            if self.base_moves[0].summand != 0 {
                return Err(Error::invalid("base moves address the base itself"));
            }
        }
        Ok(())
    }
}

/// Everything a family build produces: the knot, its witness, the
/// consolidated report, and any cited-but-not-computed properties.
#[derive(Clone, Debug, Serialize)]
pub struct FamilyOutcome {
    pub family: FamilyKind,
    pub p: i64,
    pub q: i64,
    /// Width parameter of the untwisting claim (cable: p; J, S: q).
    pub width: u32,
    pub knot: String,
    pub presentation: Presentation,
    pub witness: Witness,
    pub replay: ReplayChecks,
    pub report: BoundsReport,
    pub notes: Vec<String>,
}

pub const CSV_HEADER: &str = "family,p,q,lower_u,upper_tu_p,gap,grades";

fn grade_str(g: Option<Grade>) -> &'static str {
    match g {
        Some(Grade::Proof) => "proof",
        Some(Grade::Evidence) => "evidence",
        None => "-",
    }
}

impl FamilyOutcome {
    /// One gap-table row: family,p,q,lower_u,upper_tu_p,gap,grades.
    pub fn csv_row(&self) -> String {
        let u = self.report.interval(BoundTarget::U);
        let tu = self.report.interval(width_target(self.width));
        let lower_u = u.map(|e| e.lower).unwrap_or(0);
        let upper_tu = tu.and_then(|e| e.upper);
        let gap = self
            .report
            .gaps
            .iter()
            .find(|g| g.smaller == width_target(self.width))
            .map(|g| g.at_least)
            .unwrap_or(0);
        let grades = format!(
            "{}/{}",
            grade_str(u.and_then(|e| e.lower_grade)),
            grade_str(tu.and_then(|e| e.upper_grade)),
        );
        let upper = match upper_tu {
            Some(v) => v.to_string(),
            None => "-".to_string(),
        };
        format!(
            "{},{},{},{lower_u},{upper},{gap},{grades}",
            self.family.name(),
            self.p,
            self.q
        )
    }
}

fn width_target(width: u32) -> BoundTarget {
    if width == 1 {
        BoundTarget::U
    } else {
        BoundTarget::Tu(width)
    }
}

fn jones_checked_in(cert: &BoundCertificate) -> bool {
    cert.derivation.iter().any(|s| {
        matches!(
            s,
            DerivationStep::WitnessReplay {
                jones_checked: true,
                ..
            }
        )
    })
}

/// Dispatches on the spec's family kind.
pub fn build_family(spec: &FamilySpec, budget: &ReplayBudget) -> Result<FamilyOutcome> {
    match spec.family {
        FamilyKind::Cable => build_cable_family(spec, budget),
        FamilyKind::Jpq => build_j_family(spec, budget),
        FamilyKind::Spq => build_s_family(spec, budget),
    }
}

/// K_{p,q}: the (p, q)-cable of the base. One base crossing change lifts
/// to a single width-2p move, so tu_p ≤ 1, while τ multiplies up to give
/// u ≥ p·τ(base); together the gap grows linearly in p.
pub fn build_cable_family(spec: &FamilySpec, budget: &ReplayBudget) -> Result<FamilyOutcome> {
    spec.validate()?;
    if spec.family != FamilyKind::Cable {
        return Err(Error::invalid("spec is not a cable-family spec"));
    }
    let derived = DerivedTau::axiom(&spec.base_fact).cable(spec.p, spec.q)?;
    let knot = derived.fact().id.clone();
    let lower = derived.lower_u(knot.clone());

    let start = Presentation::braid(spec.base.clone()).cable(spec.p as u64, spec.q);
    let witness = Witness::new(start.clone(), spec.base_moves.clone());
    let upper = upper_from_witness(knot.clone(), &witness, WitnessTarget::Geometric, budget)?;
    let jones = jones_checked_in(&upper);

    let report = consolidate(&knot, &[lower, upper])?;
    Ok(FamilyOutcome {
        family: FamilyKind::Cable,
        p: spec.p,
        q: spec.q,
        width: spec.p as u32,
        knot,
        presentation: start,
        witness,
        replay: ReplayChecks {
            alexander_trivial: true,
            jones_checked: jones,
        },
        report,
        notes: Vec::new(),
    })
}

/// Signature of the family knot, computed on one summand's braid and
/// scaled: σ is additive under connected sum, and all summands here are
/// identical. Keeps the Seifert matrix at single-copy size.
fn summand_signature(summand: &BraidWord, copies: i64) -> Result<i64> {
    let v = seifert_matrix(summand)?;
    Ok(copies * signature_from_seifert(&v)?)
}

/// J_p^q = #^p K_{q,1}: p-fold connected sum of the (q, 1)-cable. The p
/// base moves act one per summand at half-width q, giving tu_q ≤ p; τ
/// gives u ≥ p·q·τ(base); the signature rule upgrades the witness bound
/// to equality whenever |σ| = 2p (odd q with σ(base) = ±2).
pub fn build_j_family(spec: &FamilySpec, budget: &ReplayBudget) -> Result<FamilyOutcome> {
    spec.validate()?;
    if spec.family != FamilyKind::Jpq {
        return Err(Error::invalid("spec is not a J-family spec"));
    }
    let cable = DerivedTau::axiom(&spec.base_fact).cable(spec.q, 1)?;
    let parts: Vec<DerivedTau> = vec![cable; spec.p as usize];
    let derived = DerivedTau::sum(&parts)?;
    let knot = derived.fact().id.clone();
    let lower = derived.lower_u(knot.clone());

    let summand = Presentation::braid(spec.base.clone()).cable(spec.q as u64, 1);
    let start = Presentation::sum(vec![summand; spec.p as usize]);
    let moves: Vec<WitnessMove> = (0..spec.p as usize)
        .map(|s| WitnessMove {
            summand: s,
            action: spec.base_moves[0].action.clone(),
        })
        .collect();
    let witness = Witness::new(start.clone(), moves);
    let upper = upper_from_witness(knot.clone(), &witness, WitnessTarget::Geometric, budget)?;
    let jones = jones_checked_in(&upper);

    let mut certs = vec![lower, upper];
    let cable_braid = spec.base.cable(spec.q as usize, 1)?;
    let sigma = summand_signature(&cable_braid, spec.p)?;
    if sigma != 0 {
        certs.push(lower_tu_from_sigma(
            knot.clone(),
            sigma,
            Some(spec.q as u32),
        )?);
    }

    let report = consolidate(&knot, &certs)?;
    Ok(FamilyOutcome {
        family: FamilyKind::Jpq,
        p: spec.p,
        q: spec.q,
        width: spec.q as u32,
        knot,
        presentation: start,
        witness,
        replay: ReplayChecks {
            alexander_trivial: true,
            jones_checked: jones,
        },
        report,
        notes: Vec::new(),
    })
}

/// The untwisted, positively clasped Whitehead double of a braid-closure
/// knot, with its defining property checked on the spot: untwisted
/// doubles have Alexander polynomial 1, and a failure here is a hard
/// error, not a warning.
pub fn untwisted_double(base: &BraidWord) -> Result<PdCode> {
    checked_double(base, 0)
}

fn checked_double(base: &BraidWord, framing: i64) -> Result<PdCode> {
    let pd = whitehead_double(base, framing, ClaspSign::Positive)?;
    let delta = alexander_via_fox(&pd)?;
    if !delta.is_one() {
        return Err(Error::internal(format!(
            "double fails the Alexander-triviality oracle: {delta}"
        )));
    }
    Ok(pd)
}

/// S_p^q = #^p (D_+(base, 0))_{q,1}: connected sums of cabled untwisted
/// Whitehead doubles. τ flows through double → cable → sum to give
/// u ≥ p·q when τ(base) > 0; undoing one clasp crossing per summand
/// (half-width q after cabling) gives tu_q ≤ p. The summands are
/// Alexander-trivial, so the whole knot is topologically slice by
/// Freedman's theorem — cited, not computed.
pub fn build_s_family(spec: &FamilySpec, budget: &ReplayBudget) -> Result<FamilyOutcome> {
    spec.validate()?;
    if spec.family != FamilyKind::Spq {
        return Err(Error::invalid("spec is not an S-family spec"));
    }
    let doubled = DerivedTau::axiom(&spec.base_fact).whitehead(0)?;
    let cable = doubled.cable(spec.q, 1)?;
    let parts: Vec<DerivedTau> = vec![cable; spec.p as usize];
    let derived = DerivedTau::sum(&parts)?;
    let knot = derived.fact().id.clone();
    let lower = derived.lower_u(knot.clone());

    let double_pd = untwisted_double(&spec.base)?;
    // The doubling construction places the clasp last, so the clasp pair
    // are the final two crossings; switching either one undoes the clasp
    // and the pattern retracts into its solid torus, leaving the unknot.
    let clasp_crossing = double_pd.tuples().len() - 1;
    let summand = Presentation::diagram(double_pd).cable(spec.q as u64, 1);
    let start = Presentation::sum(vec![summand; spec.p as usize]);
    let moves: Vec<WitnessMove> = (0..spec.p as usize)
        .map(|s| WitnessMove {
            summand: s,
            action: LeafMove::CrossingChange {
                crossing: clasp_crossing,
            },
        })
        .collect();
    let witness = Witness::new(start.clone(), moves);
    let upper = upper_from_witness(knot.clone(), &witness, WitnessTarget::Geometric, budget)?;
    let jones = jones_checked_in(&upper);

    let report = consolidate(&knot, &[lower, upper])?;
    Ok(FamilyOutcome {
        family: FamilyKind::Spq,
        p: spec.p,
        q: spec.q,
        width: spec.q as u32,
        knot,
        presentation: start,
        witness,
        replay: ReplayChecks {
            alexander_trivial: true,
            jones_checked: jones,
        },
        report,
        notes: vec![
            "summands are Alexander-trivial, hence the knot is topologically slice \
             (Freedman); cited, not verified computationally"
                .to_string(),
        ],
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::{tau_cable, tau_connected_sum};

    fn trefoil_fact() -> TauFact {
        TauFact::new("trefoil", 1, Some(1), Some(1), "test fixture").unwrap()
    }

    fn trefoil() -> BraidWord {
        BraidWord::parse("2: 1 1 1").unwrap()
    }

    /// One negative full twist after the word: σ1³ σ1⁻² closes to the
    /// unknot.
    fn trefoil_unknotting_move() -> WitnessMove {
        WitnessMove {
            summand: 0,
            action: LeafMove::BraidTwist {
                region: crate::knotio::TwistRegion {
                    first_strand: 1,
                    half_width: 1,
                    sign: -1,
                    position: 3,
                },
            },
        }
    }

    fn cable_spec(p: i64) -> FamilySpec {
        FamilySpec {
            family: FamilyKind::Cable,
            base: trefoil(),
            p,
            q: 1,
            base_fact: trefoil_fact(),
            base_moves: vec![trefoil_unknotting_move()],
        }
    }

    #[test]
    fn cable_family_certifies_the_gap() {
        let out = build_cable_family(&cable_spec(3), &ReplayBudget::default()).unwrap();
        let u = out.report.interval(BoundTarget::U).unwrap();
        assert_eq!(u.lower, 3);
        let tu3 = out.report.interval(BoundTarget::Tu(3)).unwrap();
        assert_eq!(tu3.upper, Some(1));
        assert_eq!(out.report.gaps.len(), 1);
        assert_eq!(out.report.gaps[0].at_least, 2);
        assert_eq!(out.width, 3);
        assert!(out.csv_row().starts_with("cable,3,1,3,1,2,"));
    }

    #[test]
    fn cable_family_p2_has_gap_one() {
        let out = build_cable_family(&cable_spec(2), &ReplayBudget::default()).unwrap();
        assert_eq!(out.report.gaps[0].at_least, 1);
        assert_eq!(out.report.interval(BoundTarget::U).unwrap().lower, 2);
    }

    #[test]
    fn unknot_base_gives_vacuous_bounds() {
        // σ1 closes to the unknot; the extra move keeps the witness shape.
        let base = BraidWord::parse("2: 1").unwrap();
        let spec = FamilySpec {
            family: FamilyKind::Cable,
            base,
            p: 3,
            q: 1,
            base_fact: TauFact::new("unknot", 0, Some(0), Some(0), "test fixture").unwrap(),
            base_moves: vec![WitnessMove {
                summand: 0,
                action: LeafMove::BraidTwist {
                    region: crate::knotio::TwistRegion {
                        first_strand: 1,
                        half_width: 1,
                        sign: -1,
                        position: 1,
                    },
                },
            }],
        };
        let out = build_cable_family(&spec, &ReplayBudget::default()).unwrap();
        assert_eq!(out.report.interval(BoundTarget::U).unwrap().lower, 0);
        assert!(out.report.gaps.is_empty());
    }

    #[test]
    fn missing_base_witness_is_an_error() {
        let mut spec = cable_spec(3);
        spec.base_moves.clear();
        let err = build_cable_family(&spec, &ReplayBudget::default()).unwrap_err();
        assert!(err.to_string().contains("one-move"), "{err}");
    }

    #[test]
    fn wide_cable_framing_is_rejected() {
        let mut spec = cable_spec(3);
        spec.q = 2;
        assert!(build_cable_family(&spec, &ReplayBudget::default()).is_err());
    }

    fn j_spec(p: i64, q: i64) -> FamilySpec {
        FamilySpec {
            family: FamilyKind::Jpq,
            base: trefoil(),
            p,
            q,
            base_fact: trefoil_fact(),
            base_moves: vec![trefoil_unknotting_move()],
        }
    }

    #[test]
    fn j_family_3_2_certifies_the_gap() {
        let out = build_j_family(&j_spec(3, 2), &ReplayBudget::default()).unwrap();
        assert_eq!(out.report.interval(BoundTarget::U).unwrap().lower, 6);
        let tu2 = out.report.interval(BoundTarget::Tu(2)).unwrap();
        assert_eq!(tu2.upper, Some(3));
        // Even q: the signature at -1 sees the base at +1 and vanishes, so
        // no exactness claim appears.
        assert_eq!(tu2.lower, 0);
        let gap = out
            .report
            .gaps
            .iter()
            .find(|g| g.smaller == BoundTarget::Tu(2))
            .unwrap();
        assert_eq!(gap.at_least, 3);
    }

    #[test]
    fn j_family_odd_parameters_pin_tu_exactly() {
        let out = build_j_family(&j_spec(3, 3), &ReplayBudget::default()).unwrap();
        let tu3 = out.report.interval(BoundTarget::Tu(3)).unwrap();
        assert_eq!((tu3.lower, tu3.upper), (3, Some(3)));
        assert!(out
            .report
            .exact
            .iter()
            .any(|e| e.target == BoundTarget::Tu(3) && e.value == 3));
        assert_eq!(out.report.interval(BoundTarget::U).unwrap().lower, 9);
    }

    #[test]
    fn j_family_degenerate_parameters_reduce_to_the_base() {
        let out = build_j_family(&j_spec(1, 1), &ReplayBudget::default()).unwrap();
        let u = out.report.interval(BoundTarget::U).unwrap();
        assert_eq!((u.lower, u.upper), (1, Some(1)));
        assert!(out
            .report
            .exact
            .iter()
            .any(|e| e.target == BoundTarget::U && e.value == 1));
    }

    #[test]
    fn double_wrapper_enforces_its_oracle() {
        let pd = untwisted_double(&trefoil()).unwrap();
        assert!(alexander_via_fox(&pd).unwrap().is_one());
        // A wrong framing correction leaves a twisted double, whose
        // Alexander polynomial is visibly nontrivial.
        let err = checked_double(&trefoil(), 1).unwrap_err();
        assert!(err.to_string().contains("oracle"), "{err}");
    }

    #[test]
    fn s_family_2_2_certifies_the_gap() {
        let spec = FamilySpec {
            family: FamilyKind::Spq,
            base: trefoil(),
            p: 2,
            q: 2,
            base_fact: trefoil_fact(),
            base_moves: Vec::new(),
        };
        let out = build_s_family(&spec, &ReplayBudget::default()).unwrap();
        assert_eq!(out.report.interval(BoundTarget::U).unwrap().lower, 4);
        let tu2 = out.report.interval(BoundTarget::Tu(2)).unwrap();
        assert_eq!(tu2.upper, Some(2));
        let gap = out
            .report
            .gaps
            .iter()
            .find(|g| g.smaller == BoundTarget::Tu(2))
            .unwrap();
        assert_eq!(gap.at_least, 2);
        assert!(out.notes.iter().any(|n| n.contains("slice")));
        assert!(out.replay.alexander_trivial);
    }

    #[test]
    fn s_family_empty_sum_is_the_unknot() {
        let spec = FamilySpec {
            family: FamilyKind::Spq,
            base: trefoil(),
            p: 0,
            q: 1,
            base_fact: trefoil_fact(),
            base_moves: Vec::new(),
        };
        let out = build_s_family(&spec, &ReplayBudget::default()).unwrap();
        let u = out.report.interval(BoundTarget::U).unwrap();
        assert_eq!((u.lower, u.upper), (0, Some(0)));
    }

    #[test]
    fn tau_pipeline_is_order_independent() {
        // Summing first then cabling must agree with cabling each summand
        // and then summing, wherever both sides are defined.
        let base = trefoil_fact();
        for p in 1..=3i64 {
            for q in 1..=3i64 {
                let summed = tau_connected_sum(&vec![base.clone(); p as usize]).unwrap();
                let lhs = tau_cable(&summed, q, 1).unwrap();
                let cabled = tau_cable(&base, q, 1).unwrap();
                let rhs = tau_connected_sum(&vec![cabled; p as usize]).unwrap();
                assert_eq!(lhs.tau, rhs.tau, "p={p} q={q}");
            }
        }
    }

    #[test]
    fn family_presentations_realize_and_validate() {
        let cable = build_cable_family(&cable_spec(2), &ReplayBudget::default()).unwrap();
        cable.presentation.realize().unwrap();
        let j = build_j_family(&j_spec(2, 2), &ReplayBudget::default()).unwrap();
        j.presentation.realize().unwrap();
    }
}
