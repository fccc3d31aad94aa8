//! Moore-Penrose inverses: certificates, computation, and exhaustive search.

use alloc::string::ToString;
use core::fmt;

use crate::finite;
use crate::linalg::{self, rank_factorization};
use crate::matrix::MatrixElement;
use crate::ring::{RingContext, RingError};
use crate::scalar::{Scalar, ScalarKind};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum MpError {
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error("search space of {} candidates exceeds the budget of {budget}", fmt_count(.candidates))]
    SearchBudgetExceeded {
        candidates: Option<u128>,
        budget: u128,
    },
    #[error("{0} is not a finite ring")]
    NotFinite(RingContext),
}

fn fmt_count(c: &Option<u128>) -> alloc::string::String {
    match c {
        Some(c) => c.to_string(),
        None => "more than 2^128".to_string(),
    }
}

/// The four defining equations, in their customary order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PenroseEquation {
    /// aba = a
    Aba,
    /// bab = b
    Bab,
    /// (ab)* = ab
    AbSelfAdjoint,
    /// (ba)* = ba
    BaSelfAdjoint,
}

impl PenroseEquation {
    pub fn as_str(self) -> &'static str {
        match self {
            PenroseEquation::Aba => "aba = a",
            PenroseEquation::Bab => "bab = b",
            PenroseEquation::AbSelfAdjoint => "(ab)* = ab",
            PenroseEquation::BaSelfAdjoint => "(ba)* = ba",
        }
    }
}

impl fmt::Display for PenroseEquation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// The two sides of the first failing equation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PenroseWitness {
    pub equation: PenroseEquation,
    pub lhs: MatrixElement,
    pub rhs: MatrixElement,
}

/// Outcome of checking all four equations for a candidate pair (a, b).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PenroseReport {
    pub eq1_aba: bool,
    pub eq2_bab: bool,
    pub eq3_ab_sym: bool,
    pub eq4_ba_sym: bool,
    pub overall: bool,
    pub witness: Option<PenroseWitness>,
}

/// Evaluates all four equations, even after one has failed.
pub fn penrose_check(a: &MatrixElement, b: &MatrixElement) -> Result<PenroseReport, RingError> {
    a.same_ring(b)?;
    let ab = a * b;
    let ba = b * a;
    let sides = [
        (PenroseEquation::Aba, &ab * a, a.clone()),
        (PenroseEquation::Bab, &ba * b, b.clone()),
        (PenroseEquation::AbSelfAdjoint, ab.star(), ab.clone()),
        (PenroseEquation::BaSelfAdjoint, ba.star(), ba.clone()),
    ];
    let mut ok = [false; 4];
    let mut witness = None;
    for (slot, (equation, lhs, rhs)) in ok.iter_mut().zip(sides) {
        *slot = lhs == rhs;
        if !*slot && witness.is_none() {
            witness = Some(PenroseWitness { equation, lhs, rhs });
        }
    }
    Ok(PenroseReport {
        eq1_aba: ok[0],
        eq2_bab: ok[1],
        eq3_ab_sym: ok[2],
        eq4_ba_sym: ok[3],
        overall: ok.iter().all(|&x| x),
        witness,
    })
}

/// How an MP-inverse (or its absence) was established.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MpMethod {
    RankFactorization,
    BruteForce,
    AnalyticInteger,
}

impl MpMethod {
    pub fn as_str(self) -> &'static str {
        match self {
            MpMethod::RankFactorization => "rank_factorization",
            MpMethod::BruteForce => "brute_force",
            MpMethod::AnalyticInteger => "analytic_integer",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MpResult {
    inverse: Option<MatrixElement>,
    method: MpMethod,
    report: Option<PenroseReport>,
}

impl MpResult {
    fn found(a: &MatrixElement, inverse: MatrixElement, method: MpMethod) -> MpResult {
        let report = penrose_check(a, &inverse).expect("same context");
        assert!(
            report.overall,
            "{} route produced a non-inverse for {a}: {:?}",
            method.as_str(),
            report.witness
        );
        MpResult {
            inverse: Some(inverse),
            method,
            report: Some(report),
        }
    }

    fn absent(method: MpMethod) -> MpResult {
        MpResult {
            inverse: None,
            method,
            report: None,
        }
    }

    pub fn exists(&self) -> bool {
        self.inverse.is_some()
    }

    pub fn inverse(&self) -> Option<&MatrixElement> {
        self.inverse.as_ref()
    }

    pub fn into_inverse(self) -> Option<MatrixElement> {
        self.inverse
    }

    pub fn method(&self) -> MpMethod {
        self.method
    }

    /// Certificate for the returned inverse; `None` when there is none.
    pub fn report(&self) -> Option<&PenroseReport> {
        self.report.as_ref()
    }
}

/// The MP-inverse of `a`, computed by the route suited to its ring.
///
/// * ℚ, ℚ(i), ℤ/pℤ: full-rank factorization `A = FG`, `A† = G*(F*AG*)⁻¹F*`.
///   Over ℤ/pℤ the inverse exists iff `F*AG*` is invertible.
/// * ℤ/mℤ, m composite: exhaustive search.
/// * ℤ, 1×1: `a† ` exists iff `a ∈ {0, 1, −1}`.
pub fn mp_inverse(a: &MatrixElement) -> Result<MpResult, MpError> {
    let ctx = a.ctx();
    match ctx.kind() {
        ScalarKind::Rational | ScalarKind::GaussianRational => {
            let r = via_rank_factorization(a)?;
            assert!(
                r.exists(),
                "every element of M_n(QQ) and M_n(QI) is MP-invertible"
            );
            Ok(r)
        }
        ScalarKind::ModInt(_) if ctx.kind().is_field() => via_rank_factorization(a),
        ScalarKind::ModInt(_) => mp_inverse_brute(a),
        ScalarKind::Integer => {
            if ctx.dim() != 1 {
                return Err(RingError::UnsupportedRing {
                    ring: ctx.to_string(),
                    operation: "MP-inverse of integer matrices beyond 1×1",
                }
                .into());
            }
            let v = a.get(0, 0);
            if v.is_zero() || v.is_unit() {
                Ok(MpResult::found(a, a.clone(), MpMethod::AnalyticInteger))
            } else {
                Ok(MpResult::absent(MpMethod::AnalyticInteger))
            }
        }
    }
}

fn via_rank_factorization(a: &MatrixElement) -> Result<MpResult, MpError> {
    let rf = rank_factorization(a)?;
    if rf.rank() == 0 {
        return Ok(MpResult::found(
            a,
            MatrixElement::zero(a.ctx()),
            MpMethod::RankFactorization,
        ));
    }
    let f_star = rf.left.star();
    let g_star = rf.right.star();
    let core = &(&f_star * a.matrix()) * &g_star;
    let Some(core_inv) = linalg::matrix_inverse_rect(&core) else {
        return Ok(MpResult::absent(MpMethod::RankFactorization));
    };
    let inv = &(&g_star * &core_inv) * &f_star;
    let inv = MatrixElement::new(a.ctx(), inv)?;
    Ok(MpResult::found(a, inv, MpMethod::RankFactorization))
}

/// Exhaustive MP-inverse search in a finite ring.
///
/// # Panics
/// If two distinct candidates pass all four equations, which would
/// contradict uniqueness.
pub fn mp_inverse_brute(a: &MatrixElement) -> Result<MpResult, MpError> {
    if !a.ctx().is_finite() {
        return Err(MpError::NotFinite(a.ctx()));
    }
    let mut found = finite::brute_force_inverses(a)?;
    assert!(
        found.len() <= 1,
        "MP-inverse of {a} is not unique: {} candidates",
        found.len()
    );
    Ok(match found.pop() {
        Some(b) => MpResult::found(a, b, MpMethod::BruteForce),
        None => MpResult::absent(MpMethod::BruteForce),
    })
}

/// Shorthand: `Some(a†)` or `None`.
pub fn dagger(a: &MatrixElement) -> Result<Option<MatrixElement>, MpError> {
    mp_inverse(a).map(MpResult::into_inverse)
}

/// p² = p = p*.
pub fn is_projector(p: &MatrixElement) -> bool {
    p.square() == *p && p.is_self_adjoint()
}

/// aa* = a*a.
pub fn is_normal(a: &MatrixElement) -> bool {
    let s = a.star();
    a * &s == &s * a
}

/// Whether `a*ax = 0 ⇒ ax = 0` and `xaa* = 0 ⇒ xa = 0` for every x.
///
/// ℚ, ℚ(i) and ℤ with (conjugate) transpose are *-reducing, so every element
/// qualifies; finite rings are decided by enumeration.
pub fn is_star_cancellable(a: &MatrixElement) -> Result<bool, MpError> {
    if a.ctx().is_finite() {
        finite::star_cancellable(a)
    } else {
        Ok(true)
    }
}

/// Whether the scalar `k·1` is a unit of the ring.
pub fn is_invertible_integer(ctx: RingContext, k: i64) -> bool {
    Scalar::from_i64(ctx.kind(), k).is_unit()
}
