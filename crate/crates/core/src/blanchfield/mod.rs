//! Hermitian presentation of the Blanchfield pairing over Λ = Z[t, t⁻¹].
//!
//! A Seifert matrix V of size 2k, symplectically normalized so that
//! V − Vᵀ is the standard form, determines a 2k × 2k hermitian matrix
//! A(t) over Λ presenting the linking pairing on the Alexander module.
//! Three exact identities pin the construction down and are re-checked
//! on every build: A is hermitian, A(1) is the integer block matrix
//! [[B, −I], [−I, 0]] built from the symmetric block B of the normalized
//! Seifert matrix, and det A(1) = (−1)^k.
//!
//! When A(1) is congruent over Z to a diagonal matrix with ±1 entries,
//! the size 2k bounds the algebraic unknotting number from above
//! (Borodzik–Friedl); [`n_upper_bound`] searches for such a congruence
//! and packages the result as a replayable certificate.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::collections::{HashSet, VecDeque};

use crate::bounds::{BoundCertificate, BoundKind, BoundTarget, DerivationStep, Grade};
use crate::classical::{symplectic_normalize, SymplecticNormalization};
use crate::error::{Error, Result};
use crate::laurent::{LambdaMatrix, LaurentPoly, RationalFn};
use crate::linalg::IntMat;

/// The presentation matrix together with the data needed to state its
/// value-at-one identity.
#[derive(Clone, Debug)]
pub struct BlanchfieldMatrix {
    a: LambdaMatrix,
    k: usize,
    b: IntMat,
}

fn rf_from_int(m: &IntMat) -> Vec<Vec<RationalFn>> {
    (0..m.nrows())
        .map(|i| {
            (0..m.ncols())
                .map(|j| {
                    RationalFn::from_poly(LaurentPoly::monomial(m.get(i, j).clone(), 0))
                })
                .collect()
        })
        .collect()
}

/// diag(top·I_k, bottom·I_k) as a rational-function matrix.
fn rf_diag(top: &RationalFn, bottom: &RationalFn, k: usize) -> Vec<Vec<RationalFn>> {
    let n = 2 * k;
    let mut m = vec![vec![RationalFn::zero(); n]; n];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = if i < k { top.clone() } else { bottom.clone() };
    }
    m
}

fn rf_mul(a: &[Vec<RationalFn>], b: &[Vec<RationalFn>]) -> Vec<Vec<RationalFn>> {
    let n = a.len();
    let mut out = vec![vec![RationalFn::zero(); n]; n];
    for i in 0..n {
        for (j, cell) in out[i].iter_mut().enumerate() {
            let mut acc = RationalFn::zero();
            for (l, ail) in a[i].iter().enumerate() {
                acc = &acc + &(ail * &b[l][j]);
            }
            *cell = acc;
        }
    }
    out
}

fn rf_add(a: &[Vec<RationalFn>], b: &[Vec<RationalFn>]) -> Vec<Vec<RationalFn>> {
    a.iter()
        .zip(b)
        .map(|(ra, rb)| ra.iter().zip(rb).map(|(x, y)| x + y).collect())
        .collect()
}

/// Builds the presentation matrix from a symplectically normalized
/// Seifert matrix, checking every defining identity along the way.
pub fn build_matrix(norm: &SymplecticNormalization) -> Result<BlanchfieldMatrix> {
    let k = norm.k;
    let n = 2 * k;
    let w = rf_from_int(&norm.v_normalized);
    let wt = rf_from_int(&norm.v_normalized.transpose());

    let one_minus_t = LaurentPoly::from_terms(&[(0, BigInt::one()), (1, -BigInt::one())]);
    let one_minus_tinv = one_minus_t.involute();
    let rf_one = RationalFn::one();
    let rf_1mt = RationalFn::from_poly(one_minus_t.clone());
    let rf_1mtinv = RationalFn::from_poly(one_minus_tinv);
    let inv_1mt = rf_1mt.inv()?;
    let inv_1mtinv = rf_1mtinv.inv()?;

    // A = diag((1-t⁻¹)⁻¹, I) W diag(I, (1-t)) + diag(I, (1-t⁻¹)) Wᵀ diag((1-t)⁻¹, I)
    let first = rf_mul(&rf_mul(&rf_diag(&inv_1mtinv, &rf_one, k), &w), &rf_diag(&rf_one, &rf_1mt, k));
    let second = rf_mul(&rf_mul(&rf_diag(&rf_one, &rf_1mtinv, k), &wt), &rf_diag(&inv_1mt, &rf_one, k));
    let sum = rf_add(&first, &second);

    let mut rows = Vec::with_capacity(n);
    for row in &sum {
        let mut out = Vec::with_capacity(n);
        for entry in row {
            out.push(entry.to_laurent().ok_or_else(|| {
                Error::internal("presentation entry fails to clear its denominator")
            })?);
        }
        rows.push(out);
    }
    let a = LambdaMatrix::from_rows(rows)?;
    if !a.is_hermitian() {
        return Err(Error::internal("presentation matrix is not hermitian"));
    }

    let (b, _, _) = norm.blocks();
    let expected = value_at_one_blocks(&b, k);
    let evaluated = a.evaluate(&BigRational::one())?;
    let mut got_rows = Vec::with_capacity(n);
    for row in &evaluated {
        let mut out = Vec::with_capacity(n);
        for e in row {
            if !e.is_integer() {
                return Err(Error::internal("presentation value at 1 is not integral"));
            }
            out.push(e.to_integer());
        }
        got_rows.push(out);
    }
    if IntMat::from_rows(got_rows)? != expected {
        return Err(Error::internal(
            "presentation value at 1 misses the block identity",
        ));
    }
    let want = if k % 2 == 0 { BigInt::one() } else { -BigInt::one() };
    if expected.det() != want {
        return Err(Error::internal("presentation value at 1 has the wrong determinant"));
    }

    Ok(BlanchfieldMatrix { a, k, b })
}

/// Normalizes the Seifert matrix and builds the presentation in one step.
pub fn build_from_seifert(v: &IntMat) -> Result<BlanchfieldMatrix> {
    let norm = symplectic_normalize(v)?;
    build_matrix(&norm)
}

/// The integer matrix [[B, −I], [−I, 0]].
fn value_at_one_blocks(b: &IntMat, k: usize) -> IntMat {
    let n = 2 * k;
    let mut m = IntMat::zero(n, n);
    for i in 0..k {
        for j in 0..k {
            m.set(i, j, b.get(i, j).clone());
        }
        m.set(i, k + i, -1);
        m.set(k + i, i, -1);
    }
    m
}

impl BlanchfieldMatrix {
    pub fn matrix(&self) -> &LambdaMatrix {
        &self.a
    }

    /// Half the presentation size; the genus of the surface behind the
    /// Seifert matrix.
    pub fn genus(&self) -> usize {
        self.k
    }

    pub fn size(&self) -> usize {
        2 * self.k
    }

    /// det A(t); agrees with the Alexander polynomial up to units.
    pub fn det(&self) -> LaurentPoly {
        self.a.det()
    }

    /// A(1) = [[B, −I], [−I, 0]], the symmetric unimodular integer matrix
    /// whose congruence class drives the algebraic bounds.
    pub fn value_at_one(&self) -> IntMat {
        value_at_one_blocks(&self.b, self.k)
    }

    /// The pairing conj(x)ᵀ A⁻¹ y of two coordinate vectors, as a class
    /// in Q(t)/Λ.
    pub fn pairing(&self, x: &[LaurentPoly], y: &[LaurentPoly]) -> Result<PairingValue> {
        let n = self.size();
        if x.len() != n || y.len() != n {
            return Err(Error::invalid(format!(
                "pairing vectors must have length {n}, got {} and {}",
                x.len(),
                y.len()
            )));
        }
        let z = self.a.solve(y)?;
        let mut acc = RationalFn::zero();
        for (xi, zi) in x.iter().zip(&z) {
            acc = &acc + &(&RationalFn::from_poly(xi.involute()) * zi);
        }
        Ok(PairingValue {
            representative: acc.reduce_mod_lambda(),
        })
    }
}

/// A class in Q(t)/Λ, held by its canonical reduced representative.
#[derive(Clone, Debug)]
pub struct PairingValue {
    representative: RationalFn,
}

impl PairingValue {
    pub fn representative(&self) -> &RationalFn {
        &self.representative
    }

    pub fn is_zero(&self) -> bool {
        self.representative.is_zero()
    }
}

impl PartialEq for PairingValue {
    fn eq(&self, other: &Self) -> bool {
        self.representative.class_eq(&other.representative)
    }
}

/// A unimodular congruence taking a symmetric matrix to a ±1 diagonal,
/// found by bounded search. `u_plus` counts the −1 diagonal entries and
/// `u_minus` the +1 entries, matching the sign conventions of the
/// algebraic unknotting framework.
#[derive(Clone, Debug)]
pub struct DiagonalWitness {
    pub transform: IntMat,
    pub diagonal: Vec<i64>,
    pub u_plus: usize,
    pub u_minus: usize,
}

impl DiagonalWitness {
    /// Re-checks `transform · m · transformᵀ` against the recorded diagonal.
    pub fn verify(&self, m: &IntMat) -> Result<()> {
        if !self.transform.is_unimodular() {
            return Err(Error::invalid("diagonalizing transform is not unimodular"));
        }
        let d = m.congruence(&self.transform);
        let n = m.nrows();
        for i in 0..n {
            for j in 0..n {
                let want = if i == j {
                    BigInt::from(self.diagonal[i])
                } else {
                    BigInt::zero()
                };
                if d.get(i, j) != &want {
                    return Err(Error::invalid("witness does not reproduce its diagonal"));
                }
            }
        }
        Ok(())
    }
}

fn matrix_key(m: &IntMat) -> Option<Vec<i64>> {
    let mut key = Vec::with_capacity(m.nrows() * m.ncols());
    for i in 0..m.nrows() {
        for j in 0..m.ncols() {
            key.push(m.get(i, j).to_i64()?);
        }
    }
    Some(key)
}

fn diagonal_pm1(m: &IntMat) -> Option<Vec<i64>> {
    let n = m.nrows();
    let mut diag = Vec::with_capacity(n);
    for i in 0..n {
        for j in 0..n {
            let e = m.get(i, j);
            if i == j {
                if e.abs() != BigInt::one() {
                    return None;
                }
                diag.push(e.to_i64().unwrap());
            } else if !e.is_zero() {
                return None;
            }
        }
    }
    Some(diag)
}

/// Searches breadth-first for a unimodular congruence taking `m` to a
/// diagonal of ±1 entries. The moves are elementary: add ± one row (and
/// the same column) to another, swap two rows and columns, negate one.
/// `budget` caps the number of states expanded; exhausting it returns
/// `None`, which means "not found within budget", never "impossible".
pub fn diagonal_pm1_witness(m: &IntMat, budget: usize) -> Result<Option<DiagonalWitness>> {
    if !m.is_square() || !m.is_symmetric() {
        return Err(Error::invalid("diagonalization needs a symmetric matrix"));
    }
    if !m.is_unimodular() {
        return Err(Error::invalid(
            "determinant is not ±1, so a ±1 diagonal congruence cannot exist",
        ));
    }
    let n = m.nrows();
    let identity = IntMat::identity(n);
    if let Some(diagonal) = diagonal_pm1(m) {
        let u_plus = diagonal.iter().filter(|&&d| d == -1).count();
        let u_minus = diagonal.iter().filter(|&&d| d == 1).count();
        return Ok(Some(DiagonalWitness {
            transform: identity,
            diagonal,
            u_plus,
            u_minus,
        }));
    }

    // Entry cap keeps the search space finite; anything growing past it
    // is abandoned rather than enqueued.
    let max0 = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .map(|(i, j)| m.get(i, j).abs())
        .max()
        .unwrap_or_else(BigInt::zero);
    let cap = BigInt::from(4) + max0 * BigInt::from(2);

    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let mut queue: VecDeque<(IntMat, IntMat)> = VecDeque::new();
    if let Some(key) = matrix_key(m) {
        seen.insert(key);
    }
    queue.push_back((m.clone(), identity));
    let mut expanded = 0usize;

    while let Some((cur, p)) = queue.pop_front() {
        expanded += 1;
        if expanded > budget {
            return Ok(None);
        }
        let mut moves: Vec<IntMat> = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                for s in [1i64, -1] {
                    let mut e = IntMat::identity(n);
                    e.set(i, j, s);
                    moves.push(e);
                }
                if i < j {
                    let mut e = IntMat::zero(n, n);
                    for r in 0..n {
                        let c = if r == i { j } else if r == j { i } else { r };
                        e.set(r, c, 1);
                    }
                    moves.push(e);
                }
            }
            let mut e = IntMat::identity(n);
            e.set(i, i, -1);
            moves.push(e);
        }
        for e in moves {
            let next = cur.congruence(&e);
            let over_cap = (0..n)
                .flat_map(|i| (0..n).map(move |j| (i, j)))
                .any(|(i, j)| next.get(i, j).abs() > cap);
            if over_cap {
                continue;
            }
            let Some(key) = matrix_key(&next) else {
                continue;
            };
            if !seen.insert(key) {
                continue;
            }
            let p_next = e.mul(&p);
            if let Some(diagonal) = diagonal_pm1(&next) {
                let witness = DiagonalWitness {
                    u_plus: diagonal.iter().filter(|&&d| d == -1).count(),
                    u_minus: diagonal.iter().filter(|&&d| d == 1).count(),
                    transform: p_next,
                    diagonal,
                };
                witness.verify(m)?;
                return Ok(Some(witness));
            }
            queue.push_back((next, p_next));
        }
    }
    Ok(None)
}

/// Upper bound 2k on the algebraic unknotting number of the knot behind
/// the Seifert matrix, certified when A(1) diagonalizes to ±1 entries
/// within the search budget. No witness, no certificate.
pub fn n_upper_bound(knot: &str, v: &IntMat, budget: usize) -> Result<Option<BoundCertificate>> {
    let bm = build_from_seifert(v)?;
    let a1 = bm.value_at_one();
    let Some(witness) = diagonal_pm1_witness(&a1, budget)? else {
        return Ok(None);
    };
    let step = DerivationStep::HermitianPresentation {
        seifert: crate::bounds::to_i64_matrix(v)?,
        size: bm.size() as u64,
        u_plus: witness.u_plus as u64,
        u_minus: witness.u_minus as u64,
        transform: crate::bounds::to_i64_matrix(&witness.transform)?,
        value_at_one: crate::bounds::to_i64_matrix(&a1)?,
    };
    Ok(Some(BoundCertificate {
        knot: knot.to_string(),
        target: BoundTarget::UAlg,
        kind: BoundKind::Upper,
        value: bm.size() as u64,
        grade: Grade::Proof,
        derivation: vec![step],
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::ReplayBudget;
    use crate::classical::{alexander_from_seifert, seifert_matrix};
    use crate::knotio::BraidWord;

    fn trefoil_v() -> IntMat {
        IntMat::from_i64(&[&[-1, 1], &[0, -1]])
    }

    fn fig8_v() -> IntMat {
        IntMat::from_i64(&[&[1, 1], &[0, -1]])
    }

    #[test]
    fn trefoil_matrix_is_the_known_form() {
        let bm = build_from_seifert(&trefoil_v()).unwrap();
        assert_eq!(bm.genus(), 1);
        let minus_one = LaurentPoly::monomial(-1, 0);
        let minus_t = LaurentPoly::monomial(-1, 1);
        let minus_tinv = LaurentPoly::monomial(-1, -1);
        let corner = LaurentPoly::from_terms(&[
            (1, BigInt::one()),
            (-1, BigInt::one()),
            (0, BigInt::from(-2)),
        ]);
        let want = LambdaMatrix::from_rows(vec![
            vec![minus_one, minus_t],
            vec![minus_tinv, corner],
        ])
        .unwrap();
        assert_eq!(bm.matrix(), &want);
        assert_eq!(bm.value_at_one(), IntMat::from_i64(&[&[-1, -1], &[-1, 0]]));
        assert_eq!(bm.value_at_one().det(), BigInt::from(-1));
    }

    #[test]
    fn determinant_matches_alexander_for_braid_corpus() {
        for word in [
            "2: 1 1 1",
            "2: -1 -1 -1",
            "3: 1 -2 1 -2",
            "2: 1 1 1 1 1",
            "3: 1 1 1 2 -1 2",
            "3: 1 2 1 2 1 2 1 2",
        ] {
            let braid = BraidWord::parse(word).unwrap();
            let v = seifert_matrix(&braid).unwrap();
            let bm = build_from_seifert(&v).unwrap();
            let delta = alexander_from_seifert(&v).unwrap();
            assert!(
                bm.det().eq_up_to_unit(&delta),
                "{word}: det {:?} vs alexander {:?}",
                bm.det(),
                delta
            );
        }
    }

    #[test]
    fn block_sum_of_trefoils_has_positive_unit_determinant_at_one() {
        let v = IntMat::from_i64(&[
            &[-1, 1, 0, 0],
            &[0, -1, 0, 0],
            &[0, 0, -1, 1],
            &[0, 0, 0, -1],
        ]);
        let bm = build_from_seifert(&v).unwrap();
        assert_eq!(bm.genus(), 2);
        assert_eq!(bm.value_at_one().det(), BigInt::one());
    }

    #[test]
    fn pairing_vanishes_on_the_image() {
        let bm = build_from_seifert(&trefoil_v()).unwrap();
        let a = bm.matrix();
        // y = A c lies in the image, so <x, y> must be the zero class for
        // every x.
        let c = vec![LaurentPoly::t_pow(1), LaurentPoly::from_terms(&[(0, BigInt::from(2))])];
        let y: Vec<LaurentPoly> = (0..2)
            .map(|i| (0..2).map(|j| a.get(i, j) * &c[j]).fold(LaurentPoly::zero(), |s, p| &s + &p))
            .collect();
        for x in [
            vec![LaurentPoly::one(), LaurentPoly::zero()],
            vec![LaurentPoly::zero(), LaurentPoly::t_pow(-2)],
            vec![LaurentPoly::t_pow(3), LaurentPoly::one()],
        ] {
            let p = bm.pairing(&x, &y).unwrap();
            assert!(p.is_zero(), "pairing {:?} not zero", p.representative());
        }
    }

    #[test]
    fn pairing_is_hermitian() {
        let bm = build_from_seifert(&fig8_v()).unwrap();
        let x = vec![LaurentPoly::one(), LaurentPoly::t_pow(1)];
        let y = vec![LaurentPoly::from_terms(&[(0, BigInt::from(3))]), LaurentPoly::t_pow(-1)];
        let pxy = bm.pairing(&x, &y).unwrap();
        let pyx = bm.pairing(&y, &x).unwrap();
        assert!(pxy.representative().class_eq(&pyx.representative().involute()));
    }

    #[test]
    fn trefoil_self_pairing_has_alexander_denominator() {
        let bm = build_from_seifert(&trefoil_v()).unwrap();
        let e1 = vec![LaurentPoly::one(), LaurentPoly::zero()];
        let p = bm.pairing(&e1, &e1).unwrap();
        assert!(!p.is_zero());
        let delta = LaurentPoly::from_terms(&[
            (1, BigInt::one()),
            (0, -BigInt::one()),
            (-1, BigInt::one()),
        ]);
        assert!(p.representative().denominator().eq_up_to_unit(&delta));
    }

    #[test]
    fn diagonal_witness_found_for_the_figure_eight_form() {
        let bm = build_from_seifert(&fig8_v()).unwrap();
        let a1 = bm.value_at_one();
        let w = diagonal_pm1_witness(&a1, 10_000).unwrap().unwrap();
        w.verify(&a1).unwrap();
        assert_eq!((w.u_plus, w.u_minus), (1, 1));
    }

    #[test]
    fn even_form_never_diagonalizes() {
        // x^T M x = -2 x1 x2 only takes even values, so no congruence can
        // put ±1 on the diagonal; the search must come back empty-handed.
        let m = IntMat::from_i64(&[&[0, -1], &[-1, 0]]);
        assert!(diagonal_pm1_witness(&m, 20_000).unwrap().is_none());
    }

    #[test]
    fn bad_diagonalization_inputs_are_rejected() {
        assert!(diagonal_pm1_witness(&IntMat::from_i64(&[&[2]]), 100).is_err());
        assert!(diagonal_pm1_witness(&IntMat::from_i64(&[&[0, 1], &[0, 0]]), 100).is_err());
    }

    #[test]
    fn already_diagonal_matrices_return_the_identity_witness() {
        let m = IntMat::from_i64(&[&[1, 0, 0], &[0, -1, 0], &[0, 0, 1]]);
        let w = diagonal_pm1_witness(&m, 10).unwrap().unwrap();
        assert_eq!(w.transform, IntMat::identity(3));
        assert_eq!((w.u_plus, w.u_minus), (1, 2));
    }

    #[test]
    fn upper_bound_certificate_replays_for_the_trefoil() {
        let cert = n_upper_bound("trefoil", &trefoil_v(), 10_000)
            .unwrap()
            .unwrap();
        assert_eq!(cert.target, BoundTarget::UAlg);
        assert_eq!(cert.kind, BoundKind::Upper);
        assert_eq!(cert.value, 2);
        assert_eq!(cert.grade, Grade::Proof);
        cert.replay(&[], &ReplayBudget::default()).unwrap();
    }

    #[test]
    fn unknot_gets_the_zero_bound() {
        let cert = n_upper_bound("unknot", &IntMat::zero(0, 0), 10)
            .unwrap()
            .unwrap();
        assert_eq!(cert.value, 0);
        cert.replay(&[], &ReplayBudget::default()).unwrap();
    }
}
