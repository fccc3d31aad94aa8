use crate::matrix::MatrixElement;
use crate::mp::{self, penrose_check};

use super::{witness, CheckError, Gate, StatementId};

/// One formula of the (p−q)† family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FormulaOutcome {
    /// Hypotheses held and the value passed all four Penrose equations.
    Verified {
        target: MatrixElement,
        inverse: MatrixElement,
    },
    /// The extra hypothesis failed. `holds_anyway` records whether the
    /// formula's value is nevertheless the MP-inverse (observation only).
    Skipped {
        hypothesis: &'static str,
        target: MatrixElement,
        holds_anyway: bool,
    },
}

impl FormulaOutcome {
    pub fn inverse(&self) -> Option<&MatrixElement> {
        match self {
            FormulaOutcome::Verified { inverse, .. } => Some(inverse),
            FormulaOutcome::Skipped { .. } => None,
        }
    }

    pub fn target(&self) -> &MatrixElement {
        match self {
            FormulaOutcome::Verified { target, .. } | FormulaOutcome::Skipped { target, .. } => {
                target
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DifferenceFormulas {
    /// (1−pqp)†, (1−pq)†, (p−pqp)†, (p−pq)†, (p−qp)† in that order.
    pub outcomes: [FormulaOutcome; 5],
}

impl DifferenceFormulas {
    pub const LABELS: [&'static str; 5] = [
        "(1-pqp)† = p((p-q)†)² + 1-p",
        "(1-pq)† = p((p-q)†)² - pq(p-q)† + 1-p",
        "(p-pqp)† = p((p-q)†)²",
        "(p-pq)† = (p-q)†p",
        "(p-qp)† = p(p-q)†",
    ];
}

/// Five expressions for MP-inverses in terms of (p−q)†; the last two need
/// p−pq to be *-cancellable.
pub fn difference_formula_suite(
    p: &MatrixElement,
    q: &MatrixElement,
) -> Result<DifferenceFormulas, CheckError> {
    let g = Gate(StatementId::ThmFiveFormulas);
    g.same_ring(&[p, q])?;
    g.projector("p is a projector", p)?;
    g.projector("q is a projector", q)?;
    let d = g.dagger("p-q ∈ R†", &(p - q))?;
    let np = p.complement();
    let pq = p * q;
    let qp = q * p;
    let pqp = &pq * p;
    let d2 = d.square();
    let p_d2 = p * &d2;

    let verified = |i: usize, target: MatrixElement, value: MatrixElement| {
        let inverse = g.certify(DifferenceFormulas::LABELS[i], &target, value)?;
        Ok::<_, CheckError>(FormulaOutcome::Verified { target, inverse })
    };
    let f1 = verified(0, pqp.complement(), &p_d2 + &np)?;
    let f2 = verified(1, pq.complement(), &(&p_d2 - &(&pq * &d)) + &np)?;
    let f3 = verified(2, p - &pqp, p_d2.clone())?;

    let p_minus_pq = p - &pq;
    let gated = if mp::is_star_cancellable(&p_minus_pq)? {
        [
            verified(3, p_minus_pq, &d * p)?,
            verified(4, p - &qp, p * &d)?,
        ]
    } else {
        let observe = |target: MatrixElement, value: MatrixElement| {
            let holds_anyway = penrose_check(&target, &value)?.overall;
            Ok::<_, CheckError>(FormulaOutcome::Skipped {
                hypothesis: "p-pq is *-cancellable",
                target,
                holds_anyway,
            })
        };
        [observe(p_minus_pq, &d * p)?, observe(p - &qp, p * &d)?]
    };
    let [f4, f5] = gated;
    Ok(DifferenceFormulas {
        outcomes: [f1, f2, f3, f4, f5],
    })
}

/// (p−q)† = (1−pq)†(p−pq) + (p+q−pq)†(pq−q), given 1−pq ∈ R† and p−pq
/// *-cancellable.
pub fn difference_from_products(
    p: &MatrixElement,
    q: &MatrixElement,
) -> Result<MatrixElement, CheckError> {
    let g = Gate(StatementId::CorDiffFromProducts);
    g.same_ring(&[p, q])?;
    g.projector("p is a projector", p)?;
    g.projector("q is a projector", q)?;
    let pq = p * q;
    let one_minus_pq_dag = g.dagger("1-pq ∈ R†", &pq.complement())?;
    g.cancellable("p-pq is *-cancellable", &(p - &pq))?;
    let sum_minus_pq = &(p + q) - &pq;
    let Some(sum_dag) = mp::dagger(&sum_minus_pq)? else {
        return Err(g.falsified("p+q-pq ∈ R†", witness(&[("p", p), ("q", q)])));
    };
    let x = &(&one_minus_pq_dag * &(p - &pq)) + &(&sum_dag * &(&pq - q));
    let d = g.certify("(p-q)† = (1-pq)†(p-pq) + (p+q-pq)†(pq-q)", &(p - q), x)?;
    let (np, nq) = (p.complement(), q.complement());
    let expected = &(&(&np * &d.square()) + &(&(&np * &nq) * &d)) + p;
    g.claim_eq(
        "(p+q-pq)† = (1-p)((p-q)†)² + (1-p)(1-q)(p-q)† + p",
        &sum_dag,
        &expected,
    )?;
    Ok(d)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SelfInverse {
    /// (p−q)† = p−q
    pub diff_self: bool,
    /// (p+q)† = p+q; `None` when 6 is not invertible.
    pub sum_self: Option<bool>,
}

/// (p−q)† = p−q ⇔ pq = qp, and (when 6 is invertible) (p+q)† = p+q ⇔ pq = 0.
pub fn self_inverse_characterization(
    p: &MatrixElement,
    q: &MatrixElement,
) -> Result<SelfInverse, CheckError> {
    let g = Gate(StatementId::ThmSelfInverse);
    g.same_ring(&[p, q])?;
    g.projector("p is a projector", p)?;
    g.projector("q is a projector", q)?;
    let pq = p * q;
    let qp = q * p;
    g.cancellable("pq-qp is *-cancellable", &(&pq - &qp))?;
    let diff = p - q;
    let diff_self = mp::dagger(&diff)?.as_ref() == Some(&diff);
    g.claim(
        diff_self == (pq == qp),
        "(p-q)† = p-q ⇔ pq = qp",
        &[("p", p), ("q", q)],
    )?;
    let sum_self = if mp::is_invertible_integer(p.ctx(), 6) {
        let sum = p + q;
        let s = mp::dagger(&sum)?.as_ref() == Some(&sum);
        g.claim(
            s == pq.is_zero(),
            "(p+q)† = p+q ⇔ pq = 0",
            &[("p", p), ("q", q)],
        )?;
        Some(s)
    } else {
        None
    };
    Ok(SelfInverse {
        diff_self,
        sum_self,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplementProduct {
    /// (pqp)† = p((1−p−q)†)²
    pub pqp_mp: MatrixElement,
    /// (pq)† = qp((1−p−q)†)², when pq is *-cancellable.
    pub pq_mp: Option<MatrixElement>,
}

/// MP-inverses of pqp and pq through (1−p−q)†.
pub fn product_mp_via_complement(
    p: &MatrixElement,
    q: &MatrixElement,
) -> Result<ComplementProduct, CheckError> {
    let g = Gate(StatementId::ThmComplementProduct);
    g.same_ring(&[p, q])?;
    g.projector("p is a projector", p)?;
    g.projector("q is a projector", q)?;
    let e = g.dagger("1-p-q ∈ R†", &(p + q).complement())?;
    let e2 = e.square();
    let pq = p * q;
    let pqp = &pq * p;
    let left = p * &e2;
    g.claim_eq("p((1-p-q)†)² = ((1-p-q)†)²p", &left, &(&e2 * p))?;
    let pqp_mp = g.certify("(pqp)† = p((1-p-q)†)²", &pqp, left)?;
    let pq_mp = if mp::is_star_cancellable(&pq)? {
        Some(g.certify("(pq)† = qp((1-p-q)†)²", &pq, &(q * p) * &e2)?)
    } else {
        None
    };
    Ok(ComplementProduct { pqp_mp, pq_mp })
}
