//! Folding a pile of certificates into intervals, gaps, and exact values.
//!
//! The untwisting numbers sit in a chain tu ≤ … ≤ tu_{p+1} ≤ tu_p ≤ … ≤
//! tu_1 = u, so a bound at one width says something at the neighboring
//! widths too: a lower bound on tu_p lower-bounds tu_q for q ≤ p, an
//! upper bound on tu_p upper-bounds tu_q for q ≥ p and the unrestricted
//! tu. On the algebraic side u_a and tu_a are a single quantity. The
//! fold propagates every certificate along these rules, reports one
//! interval per target, and raises a hard error when any interval turns
//! empty — crossed bounds mean a bug, never a shrug.

use serde::{Deserialize, Serialize};

use super::cert::{BoundCertificate, BoundKind, BoundTarget, Grade};
use crate::error::{Error, Result};

/// One consolidated interval. `upper` of `None` means no upper bound is
/// known, i.e. the interval is [lower, ∞). Grades are absent when the
/// bound is the vacuous zero rather than certified.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct IntervalEntry {
    pub target: BoundTarget,
    pub lower: u64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub lower_grade: Option<Grade>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub upper: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub upper_grade: Option<Grade>,
}

/// `larger − smaller ≥ at_least`, e.g. u − tu_p ≥ p − 1.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct GapStatement {
    pub larger: BoundTarget,
    pub smaller: BoundTarget,
    pub at_least: u64,
    pub grade: Grade,
}

/// A target whose lower and upper bounds met.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ExactStatement {
    pub target: BoundTarget,
    pub value: u64,
    pub grade: Grade,
}

#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct BoundsReport {
    pub knot: String,
    pub certificates: Vec<BoundCertificate>,
    pub intervals: Vec<IntervalEntry>,
    pub gaps: Vec<GapStatement>,
    pub exact: Vec<ExactStatement>,
}

/// A proof chained through an evidence-grade link is itself evidence.
fn combine(a: Grade, b: Grade) -> Grade {
    if a == Grade::Proof && b == Grade::Proof {
        Grade::Proof
    } else {
        Grade::Evidence
    }
}

/// Tu(1) is u and tu_a is u_a; fold both aliases away before propagating.
fn canonical(target: BoundTarget) -> BoundTarget {
    match target {
        BoundTarget::Tu(1) => BoundTarget::U,
        BoundTarget::TuAlg => BoundTarget::UAlg,
        t => t,
    }
}

/// Whether a bound on `source` constrains `report` after chain
/// propagation. Both arguments are canonical.
fn applies(kind: BoundKind, source: BoundTarget, report: BoundTarget) -> bool {
    use BoundTarget::*;
    match kind {
        // Lower bounds travel up the chain, toward smaller widths.
        BoundKind::Lower => match (source, report) {
            (UAlg, UAlg) => true,
            (UAlg, _) | (_, UAlg) => false,
            (TuAny, _) => true,
            (U, U) => true,
            (U, _) => false,
            (Tu(p), Tu(q)) => q <= p,
            (Tu(_), U) => true,
            (Tu(_), TuAny) => false,
            (_, _) => false,
        },
        // Upper bounds travel down the chain, toward larger widths.
        BoundKind::Upper => match (source, report) {
            (UAlg, UAlg) => true,
            (UAlg, _) | (_, UAlg) => false,
            (U, _) => true,
            (Tu(p), Tu(q)) => q >= p,
            (Tu(_), TuAny) => true,
            (Tu(_), U) => false,
            (TuAny, TuAny) => true,
            (TuAny, _) => false,
            (_, _) => false,
        },
    }
}

fn better_lower(best: &mut Option<(u64, Grade)>, value: u64, grade: Grade) {
    match best {
        Some((v, g)) if *v > value || (*v == value && *g == Grade::Proof) => {}
        _ => *best = Some((value, grade)),
    }
}

fn better_upper(best: &mut Option<(u64, Grade)>, value: u64, grade: Grade) {
    match best {
        Some((v, g)) if *v < value || (*v == value && *g == Grade::Proof) => {}
        _ => *best = Some((value, grade)),
    }
}

/// Folds certificates for one knot into a report. Certificates are taken
/// at face value — replay them first if they come from outside.
pub fn consolidate(knot: &str, certs: &[BoundCertificate]) -> Result<BoundsReport> {
    for c in certs {
        if c.knot != knot {
            return Err(Error::invalid(format!(
                "certificate for {} mixed into the report for {knot}",
                c.knot
            )));
        }
    }

    // Report u always, each explicitly mentioned width, tu and the
    // algebraic pair when anything touches them.
    let mut widths: Vec<u32> = Vec::new();
    let mut mention_tu_any = false;
    let mut mention_alg = false;
    for c in certs {
        match canonical(c.target) {
            BoundTarget::Tu(p) => {
                if !widths.contains(&p) {
                    widths.push(p);
                }
            }
            BoundTarget::TuAny => mention_tu_any = true,
            BoundTarget::UAlg | BoundTarget::TuAlg => mention_alg = true,
            BoundTarget::U => {}
        }
    }
    widths.sort_unstable();

    let mut reported: Vec<BoundTarget> = vec![BoundTarget::U];
    reported.extend(widths.iter().map(|&p| BoundTarget::Tu(p)));
    if mention_tu_any {
        reported.push(BoundTarget::TuAny);
    }
    if mention_alg {
        reported.push(BoundTarget::UAlg);
    }

    let mut intervals = Vec::with_capacity(reported.len());
    for &target in &reported {
        let mut lower: Option<(u64, Grade)> = None;
        let mut upper: Option<(u64, Grade)> = None;
        for c in certs {
            let source = canonical(c.target);
            if !applies(c.kind, source, target) {
                continue;
            }
            match c.kind {
                BoundKind::Lower => better_lower(&mut lower, c.value, c.grade),
                BoundKind::Upper => better_upper(&mut upper, c.value, c.grade),
            }
        }
        let (lo, lo_grade) = match lower {
            Some((v, g)) => (v, Some(g)),
            None => (0, None),
        };
        if let Some((up, _)) = upper {
            if lo > up {
                return Err(Error::Contradiction(format!(
                    "{knot}: {target} has lower bound {lo} above upper bound {up}"
                )));
            }
        }
        intervals.push(IntervalEntry {
            target,
            lower: lo,
            lower_grade: lo_grade,
            upper: upper.map(|(v, _)| v),
            upper_grade: upper.map(|(_, g)| g),
        });
    }

    let mut exact = Vec::new();
    for e in &intervals {
        if let (Some(up), Some(ug)) = (e.upper, e.upper_grade) {
            if e.lower == up {
                let grade = match e.lower_grade {
                    Some(lg) => combine(lg, ug),
                    // A vacuous lower bound of 0 meeting an upper bound of
                    // 0 is still exact at the upper bound's own grade.
                    None => ug,
                };
                exact.push(ExactStatement {
                    target: e.target,
                    value: up,
                    grade,
                });
            }
        }
    }

    let u_entry = intervals[0].clone();
    let mut gaps = Vec::new();
    if let Some(u_lower_grade) = u_entry.lower_grade {
        for e in &intervals[1..] {
            let narrower = match e.target {
                BoundTarget::Tu(_) | BoundTarget::TuAny => true,
                BoundTarget::U | BoundTarget::UAlg | BoundTarget::TuAlg => false,
            };
            if !narrower {
                continue;
            }
            if let (Some(up), Some(ug)) = (e.upper, e.upper_grade) {
                if u_entry.lower > up {
                    gaps.push(GapStatement {
                        larger: BoundTarget::U,
                        smaller: e.target,
                        at_least: u_entry.lower - up,
                        grade: combine(u_lower_grade, ug),
                    });
                }
            }
        }
    }

    // tu_a is the same number as u_a; report it under both names.
    if mention_alg {
        let alg = intervals
            .iter()
            .find(|e| e.target == BoundTarget::UAlg)
            .cloned()
            .expect("algebraic interval was just built");
        intervals.push(IntervalEntry {
            target: BoundTarget::TuAlg,
            ..alg
        });
    }

    Ok(BoundsReport {
        knot: knot.to_string(),
        certificates: certs.to_vec(),
        intervals,
        gaps,
        exact,
    })
}

impl BoundsReport {
    /// The interval reported for a target, if present.
    pub fn interval(&self, target: BoundTarget) -> Option<&IntervalEntry> {
        self.intervals.iter().find(|e| e.target == target)
    }
}
