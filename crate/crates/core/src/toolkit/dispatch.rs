use alloc::vec::Vec;

use crate::matrix::MatrixElement;

use super::existence::{difference_equivalence_triple, existence_chain};
use super::fgh::{commuting_sum_mp, fgh_decomposition, sum_mp_via_difference};
use super::formulas::{
    difference_formula_suite, difference_from_products, product_mp_via_complement,
    self_inverse_characterization, DifferenceFormulas, FormulaOutcome,
};
use super::lemmas::{commuting_product_mp, intertwine_transfer, orthogonal_sum_mp, pencil_mp};
use super::{CheckError, Gate, HypothesisViolation, StatementId};

/// Elements supplied to a statement. `a`, `b` and `d` are only read by the
/// lemmas and the pencil theorem; when absent they are derived from `p`, `q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StatementInputs {
    pub p: MatrixElement,
    pub q: MatrixElement,
    pub a: Option<MatrixElement>,
    pub b: Option<MatrixElement>,
    pub d: Option<MatrixElement>,
}

impl StatementInputs {
    pub fn pair(p: MatrixElement, q: MatrixElement) -> Self {
        StatementInputs {
            p,
            q,
            a: None,
            b: None,
            d: None,
        }
    }

    pub fn swapped(&self) -> Self {
        StatementInputs {
            p: self.q.clone(),
            q: self.p.clone(),
            ..self.clone()
        }
    }
}

/// A Penrose-verified MP-inverse produced by a statement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub label: &'static str,
    pub target: MatrixElement,
    pub inverse: MatrixElement,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StatementReport {
    pub statement: StatementId,
    pub certificates: Vec<Certificate>,
    pub values: Vec<(&'static str, MatrixElement)>,
    pub flags: Vec<(&'static str, bool)>,
}

impl StatementReport {
    fn new(statement: StatementId) -> Self {
        StatementReport {
            statement,
            certificates: Vec::new(),
            values: Vec::new(),
            flags: Vec::new(),
        }
    }

    fn cert(&mut self, label: &'static str, target: MatrixElement, inverse: MatrixElement) {
        self.certificates.push(Certificate {
            label,
            target,
            inverse,
        });
    }

    pub fn value(&self, name: &str) -> Option<&MatrixElement> {
        self.values.iter().find(|(k, _)| *k == name).map(|(_, v)| v)
    }

    pub fn flag(&self, name: &str) -> Option<bool> {
        self.flags.iter().find(|(k, _)| *k == name).map(|&(_, v)| v)
    }
}

fn skip(id: StatementId, hypothesis: &'static str, inputs: &StatementInputs) -> CheckError {
    CheckError::Hypothesis(HypothesisViolation {
        statement: id,
        hypothesis,
        witness: super::witness(&[("p", &inputs.p), ("q", &inputs.q)]),
    })
}

/// Runs one statement on `inputs`.
///
/// Default operands: the intertwining lemma uses a1 = p, a2 = q, d = qp; the
/// commuting-product lemma a = p−q, b = (p−q)²; the orthogonal-sum lemma
/// a = pq, b = (1−p)(1−q); the pencil theorem a = 1−pqp,
/// b = 1−(1−p)(1−q)(1−p) with projector p. The existence statements report
/// a hypothesis skip when their cancellability assumptions fail.
pub fn run_statement(
    id: StatementId,
    inputs: &StatementInputs,
) -> Result<StatementReport, CheckError> {
    let (p, q) = (&inputs.p, &inputs.q);
    Gate(id).same_ring(&[p, q])?;
    for e in [&inputs.a, &inputs.b, &inputs.d].into_iter().flatten() {
        Gate(id).same_ring(&[p, e])?;
    }
    let pick = |given: &Option<MatrixElement>, default: &dyn Fn() -> MatrixElement| {
        given.clone().unwrap_or_else(default)
    };
    let mut r = StatementReport::new(id);
    match id {
        StatementId::LemmaIntertwine => {
            let a1 = pick(&inputs.a, &|| p.clone());
            let a2 = pick(&inputs.b, &|| q.clone());
            let d = pick(&inputs.d, &|| q * p);
            r.flags
                .push(("a2†·d = d·a1†", intertwine_transfer(&a1, &a2, &d)?));
        }
        StatementId::LemmaCommutingProduct => {
            let a = pick(&inputs.a, &|| p - q);
            let b = pick(&inputs.b, &|| (p - q).square());
            let x = commuting_product_mp(&a, &b)?;
            r.cert("(ab)†", &a * &b, x);
        }
        StatementId::LemmaOrthogonalSum => {
            let a = pick(&inputs.a, &|| p * q);
            let b = pick(&inputs.b, &|| &p.complement() * &q.complement());
            let x = orthogonal_sum_mp(&a, &b)?;
            r.cert("(a+b)†", &a + &b, x);
        }
        StatementId::ThmPencil => {
            let np = p.complement();
            let a = pick(&inputs.a, &|| (&(p * q) * p).complement());
            let b = pick(&inputs.b, &|| (&(&np * &q.complement()) * &np).complement());
            let x = pencil_mp(&a, &b, p)?;
            r.cert("(ap+b(1-p))†", &(&a * p) + &(&b * &np), x);
        }
        StatementId::PropTenEquivalences => {
            let c = existence_chain(p, q)?;
            if !c.cancel_p_nq {
                return Err(skip(id, "p(1-q) is *-cancellable", inputs));
            }
            if !c.cancel_q_np {
                return Err(skip(id, "q(1-p) is *-cancellable", inputs));
            }
            r.flags.extend(c.conditions);
            r.flags.push(("verdict", c.verdict));
        }
        StatementId::ThmDiffTriple => {
            let t = difference_equivalence_triple(p, q)?;
            for (ok, h) in [
                (t.cancel_diff, "p-q is *-cancellable"),
                (t.cancel_p_nq, "p(1-q) is *-cancellable"),
                (t.cancel_q_np, "q(1-p) is *-cancellable"),
            ] {
                if !ok {
                    return Err(skip(id, h, inputs));
                }
            }
            r.flags.extend([
                ("p-q", t.diff),
                ("1-pq", t.one_minus_pq),
                ("p+q-pq", t.sum_minus_pq),
                ("verdict", t.verdict()),
            ]);
        }
        StatementId::ThmFgh | StatementId::CorFghRelations | StatementId::CorFghRecompose => {
            let t = fgh_decomposition(p, q)?;
            r.cert("(p-q)†", p - q, t.diff_dagger.clone());
            r.values
                .extend([("F", t.f.clone()), ("G", t.g.clone()), ("H", t.h.clone())]);
            r.flags.extend(
                t.relations
                    .entries()
                    .into_iter()
                    .filter(|e| e.1 == id)
                    .map(|e| (e.0, e.3)),
            );
        }
        StatementId::ThmSumViaDiff => {
            let x = sum_mp_via_difference(p, q)?;
            r.flags.push(("pH = p", x.is_some()));
            if let Some(x) = x {
                r.cert("(p+q)†", p + q, x);
            }
        }
        StatementId::ThmCommutingSum => {
            let c = commuting_sum_mp(p, q)?;
            r.flags.push(("p+q ∈ R†", c.sum_mp.is_some()));
            if let Some(x) = c.sum_mp {
                r.cert("(p+q)†", p + q, x);
            }
            if let Some(x) = c.one_plus_pq_mp {
                r.cert("(1+pq)†", &MatrixElement::identity(p.ctx()) + &(p * q), x);
            }
        }
        StatementId::ThmFiveFormulas => {
            let s = difference_formula_suite(p, q)?;
            for (label, o) in DifferenceFormulas::LABELS.into_iter().zip(s.outcomes) {
                match o {
                    FormulaOutcome::Verified { target, inverse } => r.cert(label, target, inverse),
                    FormulaOutcome::Skipped { holds_anyway, .. } => {
                        r.flags.push((label, holds_anyway));
                    }
                }
            }
        }
        StatementId::CorDiffFromProducts => {
            let d = difference_from_products(p, q)?;
            r.cert("(p-q)†", p - q, d);
        }
        StatementId::ThmSelfInverse => {
            let s = self_inverse_characterization(p, q)?;
            r.flags.push(("(p-q)† = p-q", s.diff_self));
            if let Some(v) = s.sum_self {
                r.flags.push(("(p+q)† = p+q", v));
            }
        }
        StatementId::ThmComplementProduct => {
            let c = product_mp_via_complement(p, q)?;
            let pq = p * q;
            r.cert("(pqp)†", &pq * p, c.pqp_mp);
            if let Some(x) = c.pq_mp {
                r.cert("(pq)†", pq, x);
            }
        }
    }
    Ok(r)
}
