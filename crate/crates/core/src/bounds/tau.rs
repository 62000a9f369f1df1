//! Tau/epsilon facts and their propagation through cables, doubles, and
//! connected sums.
//!
//! Tau is not computable from the classical data this crate works with, so
//! base values enter only through a facts file or the torus-knot genus
//! formula; everything else is derived by the cable formula (Hom), the
//! double formula (Hedden), and additivity under connected sum. Every fact
//! carries a free-text source so reports stay auditable.

use std::collections::HashSet;
use std::fmt::Write as _;
use std::path::Path;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A trusted (tau, epsilon, genus) record for one knot.
///
/// Held invariants: epsilon = 0 forces tau = 0; |tau| never exceeds a
/// recorded genus; and |tau| = genus forces epsilon = sign(tau). The last
/// rule doubles as an inference — `normalized` fills epsilon in whenever
/// the genus pins it down.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TauFact {
    pub id: String,
    pub tau: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub epsilon: Option<i8>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub genus: Option<u64>,
    pub source: String,
}

impl TauFact {
    pub fn new(
        id: impl Into<String>,
        tau: i64,
        epsilon: Option<i8>,
        genus: Option<u64>,
        source: impl Into<String>,
    ) -> Result<Self> {
        TauFact { id: id.into(), tau, epsilon, genus, source: source.into() }.normalized()
    }

    fn check(&self) -> Result<()> {
        if self.id.trim().is_empty() {
            return Err(Error::invalid("tau fact needs a non-empty id"));
        }
        if let Some(e) = self.epsilon {
            if !(-1..=1).contains(&e) {
                return Err(Error::invalid(format!(
                    "{}: epsilon must be -1, 0, or +1, got {e}",
                    self.id
                )));
            }
            if e == 0 && self.tau != 0 {
                return Err(Error::invalid(format!(
                    "{}: epsilon = 0 forces tau = 0, got tau = {}",
                    self.id, self.tau
                )));
            }
        }
        if let Some(g) = self.genus {
            if self.tau.unsigned_abs() > g {
                return Err(Error::invalid(format!(
                    "{}: |tau| = {} exceeds genus {g}",
                    self.id,
                    self.tau.unsigned_abs()
                )));
            }
            if self.tau.unsigned_abs() == g {
                if let Some(e) = self.epsilon {
                    if i64::from(e) != self.tau.signum() {
                        return Err(Error::invalid(format!(
                            "{}: |tau| = genus forces epsilon = {}, got {e}",
                            self.id,
                            self.tau.signum()
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Validates the record and infers epsilon when |tau| equals a known
    /// genus.
    pub fn normalized(mut self) -> Result<Self> {
        self.check()?;
        if self.epsilon.is_none() {
            if let Some(g) = self.genus {
                if self.tau.unsigned_abs() == g {
                    self.epsilon = Some(self.tau.signum() as i8);
                }
            }
        }
        self.check()?;
        Ok(self)
    }
}

/// Parses a line-delimited JSON facts file; blank lines are skipped.
/// Duplicate ids and records violating the fact invariants are errors.
pub fn parse_tau_facts(text: &str) -> Result<Vec<TauFact>> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let fact: TauFact = serde_json::from_str(line).map_err(|e| {
            Error::parse(format!("tau facts line {}: {e}", lineno + 1))
        })?;
        let fact = fact.normalized()?;
        if !seen.insert(fact.id.clone()) {
            return Err(Error::invalid(format!(
                "tau facts line {}: duplicate id {}",
                lineno + 1,
                fact.id
            )));
        }
        out.push(fact);
    }
    Ok(out)
}

pub fn load_tau_facts(path: &Path) -> Result<Vec<TauFact>> {
    let text = std::fs::read_to_string(path).map_err(|e| {
        Error::invalid(format!("cannot read tau facts {}: {e}", path.display()))
    })?;
    parse_tau_facts(&text)
}

/// tau of the positive torus knot T(p, q): (p-1)(q-1)/2, its 3-genus.
pub fn tau_torus(p: i64, q: i64) -> Result<i64> {
    if p <= 0 || q <= 0 {
        return Err(Error::invalid(format!(
            "torus tau needs positive parameters, got ({p}, {q})"
        )));
    }
    if p.gcd(&q) != 1 {
        return Err(Error::invalid(format!(
            "torus parameters ({p}, {q}) must be coprime to give a knot"
        )));
    }
    Ok((p - 1) * (q - 1) / 2)
}

/// The (p, q)-cable fact derived from a base fact with known epsilon.
///
/// Cases: epsilon = +1 gives p tau + (p-1)(q-1)/2; epsilon = -1 gives
/// p tau + (p-1)(q+1)/2; epsilon = 0 (so tau = 0) gives the torus value,
/// (p-1)(q-1)/2 for q > 0 and (p-1)(q+1)/2 for q < 0. The result's
/// epsilon is left unknown: no genus is recorded for the cable.
pub fn tau_cable(f: &TauFact, p: i64, q: i64) -> Result<TauFact> {
    if p < 1 {
        return Err(Error::invalid(format!("cable width must be positive, got {p}")));
    }
    if p.gcd(&q) != 1 {
        return Err(Error::invalid(format!(
            "cable parameters ({p}, {q}) must be coprime to give a knot"
        )));
    }
    let half = |n: i64| -> Result<i64> {
        if n % 2 != 0 {
            return Err(Error::internal(format!("odd cable correction {n}")));
        }
        Ok(n / 2)
    };
    let tau = match f.epsilon {
        None => {
            return Err(Error::invalid(format!(
                "cable formula needs epsilon for {}",
                f.id
            )))
        }
        Some(1) => p * f.tau + half((p - 1) * (q - 1))?,
        Some(-1) => p * f.tau + half((p - 1) * (q + 1))?,
        Some(0) => {
            if q >= 0 {
                half((p - 1) * (q - 1))?
            } else {
                half((p - 1) * (q + 1))?
            }
        }
        Some(e) => return Err(Error::invalid(format!("bad epsilon {e} for {}", f.id))),
    };
    TauFact::new(
        format!("({})_({p},{q})", f.id),
        tau,
        None,
        None,
        format!("cable formula (Hom) from {}", f.id),
    )
}

/// The positive-clasp `twists`-twisted double: tau is 1 when
/// twists < 2 tau(base) and 0 otherwise, and the double bounds a genus-1
/// surface, so epsilon follows by inference whenever tau = 1.
pub fn tau_whitehead(f: &TauFact, twists: i64) -> Result<TauFact> {
    let tau = if twists < 2 * f.tau { 1 } else { 0 };
    TauFact::new(
        format!("D+({};{twists})", f.id),
        tau,
        None,
        Some(1),
        format!("double formula (Hedden) from {}", f.id),
    )
}

/// Additivity of tau (and genus, when every summand records one) under
/// connected sum; the empty sum is the unknot.
pub fn tau_connected_sum(facts: &[TauFact]) -> Result<TauFact> {
    let tau = facts.iter().map(|f| f.tau).sum();
    let genus = facts
        .iter()
        .map(|f| f.genus)
        .sum::<Option<u64>>();
    let mut id = String::new();
    for (i, f) in facts.iter().enumerate() {
        if i > 0 {
            id.push_str(" # ");
        }
        let _ = write!(id, "{}", f.id);
    }
    if facts.is_empty() {
        id.push_str("unknot");
    }
    TauFact::new(
        id,
        tau,
        None,
        if facts.is_empty() { Some(0) } else { genus },
        "additivity of tau under connected sum",
    )
}
