//! Certified bounds: every inequality the engine reports carries an
//! ordered derivation that can be replayed from its recorded inputs.
//!
//! A derivation is a list of rule applications. Tau-propagation steps
//! re-run their formulas against a context of trusted base facts; witness
//! steps re-apply their moves and re-verify triviality; matrix steps
//! re-multiply their recorded transforms. Replaying must reproduce the
//! certificate's target, kind, and value exactly — anything else is an
//! error, never a warning.

use std::fmt;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::bounds::miyazawa::{miyazawa_test, MiyazawaVerdict};
use crate::bounds::tau::{
    tau_cable, tau_connected_sum, tau_torus, tau_whitehead, TauFact,
};
use crate::bounds::witness::{ReplayBudget, Witness};
use crate::error::{Error, Result};
use crate::linalg::IntMat;

/// The quantity a certificate bounds.
///
/// `Tu(p)` is the untwisting number with twist regions spanning at most
/// 2p strands; `TuAny` is the width-unrestricted untwisting number, so a
/// lower bound on it constrains every `Tu(p)`. The algebraic pair `UAlg`
/// and `TuAlg` coincide and are merged during consolidation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundTarget {
    U,
    Tu(u32),
    TuAny,
    UAlg,
    TuAlg,
}

impl fmt::Display for BoundTarget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundTarget::U => write!(f, "u"),
            BoundTarget::Tu(p) => write!(f, "tu_{p}"),
            BoundTarget::TuAny => write!(f, "tu"),
            BoundTarget::UAlg => write!(f, "u_a"),
            BoundTarget::TuAlg => write!(f, "tu_a"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundKind {
    Lower,
    Upper,
}

/// Honesty grade. Algebraic conclusions (Alexander-polynomial facts,
/// signature and tau inequalities, matrix witnesses) are proof-grade;
/// geometric unknottedness inferred from trivial polynomials is evidence.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Grade {
    Proof,
    Evidence,
}

/// One rule application inside a derivation. Tau steps embed both their
/// input facts and their output so the chain is auditable offline.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "rule", rename_all = "kebab-case")]
pub enum DerivationStep {
    /// tau of the positive torus knot T(p, q) by the genus formula.
    TorusTau { p: i64, q: i64, fact: TauFact },
    /// The cable formula applied to an established fact.
    CableTau { base: TauFact, p: i64, q: i64, fact: TauFact },
    /// The positive-clasp twisted double of an established fact.
    DoubleTau { base: TauFact, twists: i64, fact: TauFact },
    /// Additivity of tau over a connected sum of established facts.
    SumTau { parts: Vec<TauFact>, fact: TauFact },
    /// u >= |tau|, concluding from the recorded (established) fact.
    TauLowerBound { fact: TauFact, value: u64 },
    /// tu_p >= |sigma| / 2 for every p. The inequality is imported from
    /// the literature rather than derived here, hence `external`.
    SignatureLowerBound { sigma: i64, value: u64, external: bool },
    /// The u = 1 congruence obstruction; concluding u >= 2.
    ParityObstruction { v1: i64, a4: i64, sigma: i64, det: i64, lhs: i64, rhs: i64 },
    /// A replayed untwisting sequence, concluding an upper bound equal to
    /// the number of moves at the recorded half-width.
    WitnessReplay {
        witness: Witness,
        value: u64,
        half_width: u32,
        algebraic: bool,
        jones_checked: bool,
    },
    /// A hermitian presentation of size 2k built from the recorded
    /// Seifert matrix, whose value at 1 is congruent over the integers to
    /// a diagonal matrix of u_plus entries -1 and u_minus entries +1;
    /// concluding the algebraic numbers are at most 2k.
    HermitianPresentation {
        seifert: Vec<Vec<i64>>,
        size: u64,
        u_plus: u64,
        u_minus: u64,
        transform: Vec<Vec<i64>>,
        value_at_one: Vec<Vec<i64>>,
    },
}

/// A certified one-sided bound on one target quantity of one knot.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundCertificate {
    pub knot: String,
    pub target: BoundTarget,
    pub kind: BoundKind,
    pub value: u64,
    pub grade: Grade,
    pub derivation: Vec<DerivationStep>,
}

/// Semantic equality of tau facts: same numbers, any labeling.
fn same_fact(a: &TauFact, b: &TauFact) -> bool {
    a.tau == b.tau && a.epsilon == b.epsilon && a.genus == b.genus
}

fn established<'a>(pool: &'a [TauFact], fact: &TauFact) -> Result<&'a TauFact> {
    pool.iter()
        .find(|f| f.id == fact.id && same_fact(f, fact))
        .ok_or_else(|| {
            Error::invalid(format!(
                "derivation uses fact {} that is neither context nor derived",
                fact.id
            ))
        })
}

pub(crate) fn to_i64_matrix(m: &IntMat) -> Result<Vec<Vec<i64>>> {
    let mut out = Vec::with_capacity(m.nrows());
    for i in 0..m.nrows() {
        let mut row = Vec::with_capacity(m.ncols());
        for j in 0..m.ncols() {
            row.push(m.get(i, j).to_i64().ok_or_else(|| {
                Error::invalid("matrix entry overflows the certificate encoding")
            })?);
        }
        out.push(row);
    }
    Ok(out)
}

pub(crate) fn from_i64_matrix(rows: &[Vec<i64>]) -> IntMat {
    let refs: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
    IntMat::from_i64(&refs)
}

impl BoundCertificate {
    /// Re-derives the certificate from scratch: every step is recomputed
    /// from its recorded inputs (base facts must be in `context` or
    /// produced by an earlier step), and the final concluding step must
    /// reproduce the target, kind, value, and grade exactly.
    pub fn replay(&self, context: &[TauFact], budget: &ReplayBudget) -> Result<()> {
        fn conclude(
            slot: &mut Option<(BoundKind, u64, Grade)>,
            c: (BoundKind, u64, Grade),
        ) -> Result<()> {
            if slot.replace(c).is_some() {
                return Err(Error::invalid("derivation concludes twice"));
            }
            Ok(())
        }
        let mut pool: Vec<TauFact> = context.to_vec();
        let mut current: Option<TauFact> = None;
        let mut conclusion: Option<(BoundKind, u64, Grade)> = None;
        for step in &self.derivation {
            match step {
                DerivationStep::TorusTau { p, q, fact } => {
                    let tau = tau_torus(*p, *q)?;
                    if fact.tau != tau {
                        return Err(Error::invalid(format!(
                            "torus step records tau {} but the formula gives {tau}",
                            fact.tau
                        )));
                    }
                    pool.push(fact.clone());
                    current = Some(fact.clone());
                }
                DerivationStep::CableTau { base, p, q, fact } => {
                    established(&pool, base)?;
                    let out = tau_cable(base, *p, *q)?;
                    if !same_fact(&out, fact) {
                        return Err(Error::invalid(format!(
                            "cable step for {} does not replay",
                            fact.id
                        )));
                    }
                    pool.push(fact.clone());
                    current = Some(fact.clone());
                }
                DerivationStep::DoubleTau { base, twists, fact } => {
                    established(&pool, base)?;
                    let out = tau_whitehead(base, *twists)?;
                    if !same_fact(&out, fact) {
                        return Err(Error::invalid(format!(
                            "double step for {} does not replay",
                            fact.id
                        )));
                    }
                    pool.push(fact.clone());
                    current = Some(fact.clone());
                }
                DerivationStep::SumTau { parts, fact } => {
                    for part in parts {
                        established(&pool, part)?;
                    }
                    let out = tau_connected_sum(parts)?;
                    if !same_fact(&out, fact) {
                        return Err(Error::invalid(format!(
                            "sum step for {} does not replay",
                            fact.id
                        )));
                    }
                    pool.push(fact.clone());
                    current = Some(fact.clone());
                }
                DerivationStep::TauLowerBound { fact, value } => {
                    match &current {
                        // A chained bound must conclude from the chain's
                        // final fact, a bare one from the context.
                        Some(cur) => {
                            if cur.id != fact.id || !same_fact(cur, fact) {
                                return Err(Error::invalid(
                                    "tau lower bound skips the derivation's final fact",
                                ));
                            }
                        }
                        None => {
                            established(&pool, fact)?;
                        }
                    }
                    if fact.tau.unsigned_abs() != *value {
                        return Err(Error::invalid(
                            "tau lower bound does not match its fact",
                        ));
                    }
                    if self.target != BoundTarget::U {
                        return Err(Error::invalid("tau bounds the unknotting number"));
                    }
                    conclude(&mut conclusion, (BoundKind::Lower, *value, Grade::Proof))?;
                }
                DerivationStep::SignatureLowerBound { sigma, value, external } => {
                    if !external {
                        return Err(Error::invalid(
                            "the signature rule is externally sourced and must say so",
                        ));
                    }
                    if sigma % 2 != 0 {
                        return Err(Error::invalid(format!(
                            "knot signature must be even, got {sigma}"
                        )));
                    }
                    if sigma.unsigned_abs() / 2 != *value {
                        return Err(Error::invalid("signature bound value mismatch"));
                    }
                    if !matches!(
                        self.target,
                        BoundTarget::U | BoundTarget::Tu(_) | BoundTarget::TuAny
                    ) {
                        return Err(Error::invalid(
                            "the signature rule bounds geometric targets",
                        ));
                    }
                    conclude(&mut conclusion, (BoundKind::Lower, *value, Grade::Proof))?;
                }
                DerivationStep::ParityObstruction { v1, a4, sigma, det, lhs, rhs } => {
                    match miyazawa_test(*v1, *a4, *sigma, *det)? {
                        MiyazawaVerdict::Obstructed { lhs: l, rhs: r } => {
                            if l != *lhs || r != *rhs {
                                return Err(Error::invalid(
                                    "obstruction sides do not replay",
                                ));
                            }
                        }
                        v => {
                            return Err(Error::invalid(format!(
                                "parity step replays as {v:?}, not an obstruction"
                            )))
                        }
                    }
                    if self.target != BoundTarget::U {
                        return Err(Error::invalid(
                            "the parity obstruction bounds the unknotting number",
                        ));
                    }
                    conclude(&mut conclusion, (BoundKind::Lower, 2, Grade::Proof))?;
                }
                DerivationStep::WitnessReplay {
                    witness,
                    value,
                    half_width,
                    algebraic,
                    jones_checked,
                } => {
                    if *value != witness.moves.len() as u64 {
                        return Err(Error::invalid("witness move count mismatch"));
                    }
                    let hw = witness.max_half_width()?;
                    if u64::from(*half_width) != hw {
                        return Err(Error::invalid("witness half-width mismatch"));
                    }
                    let checks = witness.verify(!*algebraic, budget)?;
                    if *jones_checked && !checks.jones_checked {
                        return Err(Error::Budget(
                            "replay could not repeat the recorded Jones check".into(),
                        ));
                    }
                    let (want, grade) = if *algebraic {
                        let t = if hw == 1 { BoundTarget::UAlg } else { BoundTarget::TuAlg };
                        (t, Grade::Proof)
                    } else {
                        let t = if hw == 1 {
                            BoundTarget::U
                        } else {
                            BoundTarget::Tu(*half_width)
                        };
                        (t, Grade::Evidence)
                    };
                    if self.target != want {
                        return Err(Error::invalid(format!(
                            "witness of half-width {hw} bounds {want}, not {}",
                            self.target
                        )));
                    }
                    conclude(&mut conclusion, (BoundKind::Upper, *value, grade))?;
                }
                DerivationStep::HermitianPresentation {
                    seifert,
                    size,
                    u_plus,
                    u_minus,
                    transform,
                    value_at_one,
                } => {
                    let v = from_i64_matrix(seifert);
                    let a1 = crate::blanchfield::build_from_seifert(&v)?.value_at_one();
                    if to_i64_matrix(&a1)? != *value_at_one {
                        return Err(Error::invalid(
                            "recorded hermitian value at 1 does not replay",
                        ));
                    }
                    if *size != a1.nrows() as u64 {
                        return Err(Error::invalid("hermitian presentation size mismatch"));
                    }
                    let p = from_i64_matrix(transform);
                    let d = a1.congruence(&p);
                    let (mut plus, mut minus) = (0u64, 0u64);
                    for i in 0..d.nrows() {
                        for j in 0..d.ncols() {
                            let e = d.get(i, j);
                            if i != j {
                                if e != &BigInt::from(0) {
                                    return Err(Error::invalid(
                                        "transform does not diagonalize the form",
                                    ));
                                }
                                continue;
                            }
                            if e == &BigInt::from(-1) {
                                plus += 1;
                            } else if e == &BigInt::from(1) {
                                minus += 1;
                            } else {
                                return Err(Error::invalid(
                                    "diagonal entries must be +1 or -1",
                                ));
                            }
                        }
                    }
                    if plus != *u_plus || minus != *u_minus {
                        return Err(Error::invalid("diagonal sign counts mismatch"));
                    }
                    if !matches!(self.target, BoundTarget::UAlg | BoundTarget::TuAlg) {
                        return Err(Error::invalid(
                            "hermitian presentations bound the algebraic numbers",
                        ));
                    }
                    conclude(&mut conclusion, (BoundKind::Upper, *size, Grade::Proof))?;
                }
            }
        }
        match conclusion {
            None => Err(Error::invalid("derivation never concludes a bound")),
            Some((kind, value, grade)) => {
                if kind != self.kind || value != self.value || grade != self.grade {
                    return Err(Error::invalid(format!(
                        "derivation concludes {kind:?} {value} ({grade:?}), certificate \
                         says {:?} {} ({:?})",
                        self.kind, self.value, self.grade
                    )));
                }
                Ok(())
            }
        }
    }
}

/// A tau fact together with the derivation steps that produced it; the
/// bridge between the plain formulas and certificate assembly.
#[derive(Clone, Debug)]
pub struct DerivedTau {
    fact: TauFact,
    steps: Vec<DerivationStep>,
}

impl DerivedTau {
    /// A fact taken on trust from the facts database; replay requires it
    /// in the context.
    pub fn axiom(fact: &TauFact) -> Self {
        DerivedTau { fact: fact.clone(), steps: Vec::new() }
    }

    pub fn torus(p: i64, q: i64) -> Result<Self> {
        let tau = tau_torus(p, q)?;
        let fact = TauFact::new(
            format!("T({p},{q})"),
            tau,
            None,
            Some(tau.unsigned_abs()),
            "torus genus formula (Ozsvath-Szabo)",
        )?;
        Ok(DerivedTau {
            steps: vec![DerivationStep::TorusTau { p, q, fact: fact.clone() }],
            fact,
        })
    }

    pub fn cable(&self, p: i64, q: i64) -> Result<Self> {
        let fact = tau_cable(&self.fact, p, q)?;
        let mut steps = self.steps.clone();
        steps.push(DerivationStep::CableTau {
            base: self.fact.clone(),
            p,
            q,
            fact: fact.clone(),
        });
        Ok(DerivedTau { fact, steps })
    }

    pub fn whitehead(&self, twists: i64) -> Result<Self> {
        let fact = tau_whitehead(&self.fact, twists)?;
        let mut steps = self.steps.clone();
        steps.push(DerivationStep::DoubleTau {
            base: self.fact.clone(),
            twists,
            fact: fact.clone(),
        });
        Ok(DerivedTau { fact, steps })
    }

    pub fn sum(parts: &[DerivedTau]) -> Result<Self> {
        let part_facts: Vec<TauFact> = parts.iter().map(|p| p.fact.clone()).collect();
        let fact = tau_connected_sum(&part_facts)?;
        let mut steps: Vec<DerivationStep> = Vec::new();
        for part in parts {
            for step in &part.steps {
                if !steps.contains(step) {
                    steps.push(step.clone());
                }
            }
        }
        steps.push(DerivationStep::SumTau { parts: part_facts, fact: fact.clone() });
        Ok(DerivedTau { fact, steps })
    }

    pub fn fact(&self) -> &TauFact {
        &self.fact
    }

    /// Concludes u >= |tau| for the named knot.
    pub fn lower_u(&self, knot: impl Into<String>) -> BoundCertificate {
        let value = self.fact.tau.unsigned_abs();
        let mut derivation = self.steps.clone();
        derivation.push(DerivationStep::TauLowerBound { fact: self.fact.clone(), value });
        BoundCertificate {
            knot: knot.into(),
            target: BoundTarget::U,
            kind: BoundKind::Lower,
            value,
            grade: Grade::Proof,
            derivation,
        }
    }
}

/// tu_p >= |sigma| / 2 for every p; with `p` given the certificate names
/// that level (level 1 is the unknotting number itself), otherwise it
/// binds the width-unrestricted untwisting number, which propagates to
/// every level during consolidation.
pub fn lower_tu_from_sigma(
    knot: impl Into<String>,
    sigma: i64,
    p: Option<u32>,
) -> Result<BoundCertificate> {
    if sigma % 2 != 0 {
        return Err(Error::invalid(format!(
            "knot signature must be even, got {sigma}"
        )));
    }
    let value = sigma.unsigned_abs() / 2;
    let target = match p {
        Some(1) => BoundTarget::U,
        Some(p) => BoundTarget::Tu(p),
        None => BoundTarget::TuAny,
    };
    Ok(BoundCertificate {
        knot: knot.into(),
        target,
        kind: BoundKind::Lower,
        value,
        grade: Grade::Proof,
        derivation: vec![DerivationStep::SignatureLowerBound {
            sigma,
            value,
            external: true,
        }],
    })
}

/// Wraps an obstructed congruence test into a u >= 2 certificate;
/// consistent or inapplicable data yields no certificate.
pub fn miyazawa_certificate(
    knot: impl Into<String>,
    v1: i64,
    a4: i64,
    sigma: i64,
    det: i64,
) -> Result<Option<BoundCertificate>> {
    match miyazawa_test(v1, a4, sigma, det)? {
        MiyazawaVerdict::Obstructed { lhs, rhs } => Ok(Some(BoundCertificate {
            knot: knot.into(),
            target: BoundTarget::U,
            kind: BoundKind::Lower,
            value: 2,
            grade: Grade::Proof,
            derivation: vec![DerivationStep::ParityObstruction {
                v1,
                a4,
                sigma,
                det,
                lhs,
                rhs,
            }],
        })),
        _ => Ok(None),
    }
}

/// What a witness claims to reach: the unknot (geometric targets u and
/// tu_p) or merely an Alexander-polynomial-one knot (algebraic targets).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WitnessTarget {
    Geometric,
    Algebraic,
}

/// Verifies the witness now and, on success, certifies the upper bound
/// its moves realize. Geometric certificates are evidence-grade (trivial
/// polynomials do not prove unknottedness); algebraic ones are
/// proof-grade because Alexander-triviality is decided exactly.
pub fn upper_from_witness(
    knot: impl Into<String>,
    witness: &Witness,
    target: WitnessTarget,
    budget: &ReplayBudget,
) -> Result<BoundCertificate> {
    let algebraic = target == WitnessTarget::Algebraic;
    let checks = witness.verify(!algebraic, budget)?;
    let hw = witness.max_half_width()?;
    let half_width = u32::try_from(hw)
        .map_err(|_| Error::invalid("witness half-width overflows"))?;
    let (target, grade) = if algebraic {
        let t = if hw == 1 { BoundTarget::UAlg } else { BoundTarget::TuAlg };
        (t, Grade::Proof)
    } else {
        let t = if hw == 1 { BoundTarget::U } else { BoundTarget::Tu(half_width) };
        (t, Grade::Evidence)
    };
    let value = witness.moves.len() as u64;
    Ok(BoundCertificate {
        knot: knot.into(),
        target,
        kind: BoundKind::Upper,
        value,
        grade,
        derivation: vec![DerivationStep::WitnessReplay {
            witness: witness.clone(),
            value,
            half_width,
            algebraic,
            jones_checked: checks.jones_checked,
        }],
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::witness::{LeafMove, Presentation, WitnessMove};
    use crate::knotio::{BraidWord, TwistRegion};

    fn trefoil_fact() -> TauFact {
        TauFact::new("trefoil", 1, Some(1), Some(1), "torus formula").unwrap()
    }

    #[test]
    fn tau_chain_certificate_replays() {
        let base = trefoil_fact();
        let cert = DerivedTau::axiom(&base)
            .cable(3, 1)
            .unwrap()
            .lower_u("(trefoil)_(3,1)");
        assert_eq!(cert.value, 3);
        assert_eq!(cert.target, BoundTarget::U);
        cert.replay(&[base.clone()], &ReplayBudget::default()).unwrap();
        // Without the context fact the chain has no axiom to stand on.
        assert!(cert.replay(&[], &ReplayBudget::default()).is_err());
        // Tampered value fails replay.
        let mut bad = cert.clone();
        bad.value = 4;
        assert!(bad.replay(&[base], &ReplayBudget::default()).is_err());
    }

    #[test]
    fn sum_certificate_shares_steps() {
        let base = trefoil_fact();
        let cable = DerivedTau::axiom(&base).cable(2, 1).unwrap();
        let sum = DerivedTau::sum(&[cable.clone(), cable.clone(), cable]).unwrap();
        assert_eq!(sum.fact().tau, 6);
        let cert = sum.lower_u("J");
        // The shared cable step is recorded once, then the sum and bound.
        assert_eq!(cert.derivation.len(), 3);
        cert.replay(&[base], &ReplayBudget::default()).unwrap();
    }

    #[test]
    fn signature_certificate_replays() {
        let cert = lower_tu_from_sigma("granny", -4, None).unwrap();
        assert_eq!((cert.target, cert.value), (BoundTarget::TuAny, 2));
        cert.replay(&[], &ReplayBudget::default()).unwrap();
        assert!(lower_tu_from_sigma("bad", 3, None).is_err());
        let named = lower_tu_from_sigma("J", 6, Some(3)).unwrap();
        assert_eq!(named.target, BoundTarget::Tu(3));
        named.replay(&[], &ReplayBudget::default()).unwrap();
        let level_one = lower_tu_from_sigma("trefoil", -2, Some(1)).unwrap();
        assert_eq!(level_one.target, BoundTarget::U);
    }

    #[test]
    fn parity_certificate_only_when_obstructed() {
        let cert = miyazawa_certificate("published", 8, 0, 2, 3).unwrap().unwrap();
        assert_eq!((cert.target, cert.kind, cert.value), (
            BoundTarget::U,
            BoundKind::Lower,
            2
        ));
        cert.replay(&[], &ReplayBudget::default()).unwrap();
        assert!(miyazawa_certificate("trefoil", 8, 0, -2, 3).unwrap().is_none());
    }

    #[test]
    fn witness_certificate_replays_and_serializes() {
        let w = Witness::new(
            Presentation::braid(BraidWord::parse("2: 1 1 1").unwrap()).cable(2, 1),
            vec![WitnessMove {
                summand: 0,
                action: LeafMove::BraidTwist {
                    region: TwistRegion {
                        first_strand: 1,
                        half_width: 1,
                        sign: -1,
                        position: 3,
                    },
                },
            }],
        );
        let budget = ReplayBudget::default();
        let cert = upper_from_witness("K_(2,1)", &w, WitnessTarget::Geometric, &budget)
            .unwrap();
        assert_eq!((cert.target, cert.kind, cert.value), (
            BoundTarget::Tu(2),
            BoundKind::Upper,
            1
        ));
        assert_eq!(cert.grade, Grade::Evidence);
        cert.replay(&[], &budget).unwrap();

        let json = serde_json::to_string(&cert).unwrap();
        let back: BoundCertificate = serde_json::from_str(&json).unwrap();
        assert_eq!(back, cert);
        back.replay(&[], &budget).unwrap();

        let alg = upper_from_witness("K_(2,1)", &w, WitnessTarget::Algebraic, &budget)
            .unwrap();
        assert_eq!(alg.target, BoundTarget::TuAlg);
        assert_eq!(alg.grade, Grade::Proof);
        alg.replay(&[], &budget).unwrap();
    }
}
