use alloc::vec::Vec;

use crate::matrix::MatrixElement;
use crate::mp::{self, MpError};

use super::{witness, CheckError, Gate, StatementId};

/// Keys of the ten conditions, in statement order (1)–(10).
pub const TEN_CONDITIONS: [&str; 10] = [
    "1-pq", "1-pqp", "p-pqp", "p-pq", "p-qp", "1-qp", "1-qpq", "q-qpq", "q-qp", "q-pq",
];

/// One implication link between two of the ten conditions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainLink {
    pub left: &'static str,
    pub right: &'static str,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExistenceChainReport {
    /// MP-existence of each element of [`TEN_CONDITIONS`].
    pub conditions: [(&'static str, bool); 10],
    /// p(1−q) is *-cancellable.
    pub cancel_p_nq: bool,
    /// q(1−p) is *-cancellable.
    pub cancel_q_np: bool,
    /// The proof's chain (1)⇔(6), (4)⇔(5), (1)⇔(2), (2)⇔(3), (3)⇔(4), for diagnostics.
    pub links: Vec<ChainLink>,
    /// All ten booleans agree.
    pub verdict: bool,
}

impl ExistenceChainReport {
    pub fn hypotheses_hold(&self) -> bool {
        self.cancel_p_nq && self.cancel_q_np
    }

    pub fn get(&self, key: &str) -> Option<bool> {
        self.conditions
            .iter()
            .find(|(k, _)| *k == key)
            .map(|&(_, v)| v)
    }
}

fn exists(a: &MatrixElement) -> Result<bool, MpError> {
    mp::mp_inverse(a).map(|r| r.exists())
}

/// Evaluates the ten conditions independently and checks that they agree
/// whenever p(1−q) and q(1−p) are *-cancellable.
///
/// (1)⇔(6) and (4)⇔(5) pair an element with its adjoint and are asserted
/// unconditionally.
pub fn existence_chain(
    p: &MatrixElement,
    q: &MatrixElement,
) -> Result<ExistenceChainReport, CheckError> {
    let g = Gate(StatementId::PropTenEquivalences);
    g.same_ring(&[p, q])?;
    g.projector("p is a projector", p)?;
    g.projector("q is a projector", q)?;
    let one = MatrixElement::identity(p.ctx());
    let pq = p * q;
    let qp = q * p;
    let pqp = &pq * p;
    let qpq = &qp * q;
    let elements = [
        &one - &pq,
        &one - &pqp,
        p - &pqp,
        p - &pq,
        p - &qp,
        &one - &qp,
        &one - &qpq,
        q - &qpq,
        q - &qp,
        q - &pq,
    ];
    let mut conditions = [("", false); 10];
    for (slot, (key, e)) in conditions
        .iter_mut()
        .zip(TEN_CONDITIONS.iter().zip(&elements))
    {
        *slot = (*key, exists(e)?);
    }
    let c = |i: usize| conditions[i - 1].1;
    let link = |l: usize, r: usize| ChainLink {
        left: TEN_CONDITIONS[l - 1],
        right: TEN_CONDITIONS[r - 1],
        holds: c(l) == c(r),
    };
    let links = alloc::vec![link(1, 6), link(4, 5), link(1, 2), link(2, 3), link(3, 4)];
    let cancel_p_nq = mp::is_star_cancellable(&(p * &q.complement()))?;
    let cancel_q_np = mp::is_star_cancellable(&(q * &p.complement()))?;
    let verdict = conditions.iter().all(|&(_, v)| v == c(1));

    // a ∈ R† ⇔ a* ∈ R†
    g.claim(
        links[0].holds,
        "1-pq ∈ R† ⇔ 1-qp ∈ R†",
        &[("p", p), ("q", q)],
    )?;
    g.claim(
        links[1].holds,
        "p-pq ∈ R† ⇔ p-qp ∈ R†",
        &[("p", p), ("q", q)],
    )?;
    if cancel_p_nq && cancel_q_np && !verdict {
        return Err(g.falsified(
            "the ten conditions are equivalent",
            witness(&[("p", p), ("q", q)]),
        ));
    }
    Ok(ExistenceChainReport {
        conditions,
        cancel_p_nq,
        cancel_q_np,
        links,
        verdict,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DifferenceTriple {
    /// p − q ∈ R†
    pub diff: bool,
    /// 1 − pq ∈ R†
    pub one_minus_pq: bool,
    /// p + q − pq ∈ R†
    pub sum_minus_pq: bool,
    pub cancel_diff: bool,
    pub cancel_p_nq: bool,
    pub cancel_q_np: bool,
}

impl DifferenceTriple {
    pub fn hypotheses_hold(&self) -> bool {
        self.cancel_diff && self.cancel_p_nq && self.cancel_q_np
    }

    pub fn verdict(&self) -> bool {
        self.diff == self.one_minus_pq && self.diff == self.sum_minus_pq
    }
}

/// p−q ∈ R† ⇔ 1−pq ∈ R† ⇔ p+q−pq ∈ R†, given that p−q, p(1−q) and q(1−p)
/// are *-cancellable.
pub fn difference_equivalence_triple(
    p: &MatrixElement,
    q: &MatrixElement,
) -> Result<DifferenceTriple, CheckError> {
    let g = Gate(StatementId::ThmDiffTriple);
    g.same_ring(&[p, q])?;
    g.projector("p is a projector", p)?;
    g.projector("q is a projector", q)?;
    let pq = p * q;
    let diff = p - q;
    let t = DifferenceTriple {
        diff: exists(&diff)?,
        one_minus_pq: exists(&pq.complement())?,
        sum_minus_pq: exists(&(&(p + q) - &pq))?,
        cancel_diff: mp::is_star_cancellable(&diff)?,
        cancel_p_nq: mp::is_star_cancellable(&(p * &q.complement()))?,
        cancel_q_np: mp::is_star_cancellable(&(q * &p.complement()))?,
    };
    if t.hypotheses_hold() && !t.verdict() {
        return Err(g.falsified(
            "p-q ∈ R† ⇔ 1-pq ∈ R† ⇔ p+q-pq ∈ R†",
            witness(&[("p", p), ("q", q)]),
        ));
    }
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::canonical_pair;
    use super::*;
    use crate::finite::{all_elements, ENUMERATION_BUDGET};
    use crate::ring::RingContext;

    fn projectors(ctx: RingContext) -> Vec<MatrixElement> {
        all_elements(ctx, ENUMERATION_BUDGET)
            .unwrap()
            .filter(mp::is_projector)
            .collect()
    }

    #[test]
    fn equal_projectors_satisfy_all_ten() {
        let (p, _) = canonical_pair();
        let r = existence_chain(&p, &p).unwrap();
        assert!(r.verdict && r.conditions.iter().all(|c| c.1));
    }

    #[test]
    fn canonical_pair_satisfies_all_ten() {
        let (p, q) = canonical_pair();
        let r = existence_chain(&p, &q).unwrap();
        assert!(r.hypotheses_hold());
        assert!(r.conditions.iter().all(|c| c.1));
        assert!(r.links.iter().all(|l| l.holds));
        assert_eq!(r.get("q-pq"), Some(true));
    }

    #[test]
    fn exhaustive_chain_over_z2() {
        let ps = projectors(RingContext::modular(2, 2));
        for p in &ps {
            for q in &ps {
                let r = existence_chain(p, q).unwrap();
                if r.hypotheses_hold() {
                    assert!(r.verdict, "p = {p}, q = {q}");
                }
            }
        }
    }

    #[test]
    fn triple_examples() {
        let (p, q) = canonical_pair();
        let same = difference_equivalence_triple(&p, &p).unwrap();
        assert!(same.diff && same.one_minus_pq && same.sum_minus_pq);
        let t = difference_equivalence_triple(&p, &q).unwrap();
        assert!(t.diff && t.one_minus_pq && t.sum_minus_pq && t.hypotheses_hold());
    }

    #[test]
    fn exhaustive_triple_over_z3() {
        let ps = projectors(RingContext::modular(3, 2));
        assert_eq!(ps.len(), 6);
        for p in &ps {
            for q in &ps {
                let t = difference_equivalence_triple(p, q).unwrap();
                // complement symmetry on the p−q boolean
                let c = difference_equivalence_triple(&p.complement(), &q.complement()).unwrap();
                assert_eq!(t.diff, c.diff);
            }
        }
    }

    #[test]
    fn non_projector_gate() {
        let ctx = RingContext::rational(2);
        let a = MatrixElement::from_i64(ctx, &[[1, 1], [0, 0]]).unwrap();
        let p = MatrixElement::identity(ctx);
        assert!(matches!(
            existence_chain(&a, &p),
            Err(CheckError::Hypothesis(h)) if h.hypothesis == "p is a projector"
        ));
    }
}
