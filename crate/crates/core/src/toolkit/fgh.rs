//! The F/G/H calculus of (p−q)† and the two sum theorems built on it.

use crate::matrix::MatrixElement;
use crate::mp::{self, penrose_check};

use super::{witness, CheckError, Gate, StatementId};

/// Truth values of every relation between F, G, H, p and q.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct FghRelations {
    pub f_idem: bool,
    pub g_idem: bool,
    pub h_proj: bool,
    pub f_alt: bool,
    pub g_alt: bool,
    /// q(p−q)† = (p−q)†(1−p)
    pub q_swap: bool,
    pub qh_hq: bool,
    pub gq_qf: bool,
    pub fp_pg_ph_hp: bool,
    pub qhq_chain: bool,
    pub comp_chain: bool,
    pub recompose: bool,
}

impl FghRelations {
    /// (name, statement, claim, value) for every relation.
    pub fn entries(&self) -> [(&'static str, StatementId, &'static str, bool); 12] {
        use StatementId::*;
        [
            ("F_idem", ThmFgh, "F² = F", self.f_idem),
            ("F_alt", ThmFgh, "F = (p-q)†(1-q)", self.f_alt),
            ("G_idem", ThmFgh, "G² = G", self.g_idem),
            ("G_alt", ThmFgh, "G = (1-q)(p-q)†", self.g_alt),
            ("H_proj", ThmFgh, "H² = H = H*", self.h_proj),
            (
                "q_swap",
                CorFghRelations,
                "q(p-q)† = (p-q)†(1-p)",
                self.q_swap,
            ),
            ("qH_Hq", CorFghRelations, "qH = Hq", self.qh_hq),
            ("Gq_qF", CorFghRelations, "G(1-q) = (1-q)F", self.gq_qf),
            (
                "Fp_pG_pH_Hp",
                CorFghRecompose,
                "Fp = pG = pH = Hp",
                self.fp_pg_ph_hp,
            ),
            (
                "qHq_chain",
                CorFghRecompose,
                "qHq = qH = Hq = HqH",
                self.qhq_chain,
            ),
            (
                "comp_chain",
                CorFghRecompose,
                "(1-q)(1-F) = (1-G)(1-q) = (1-q)(1-F)(1-q)",
                self.comp_chain,
            ),
            (
                "recompose",
                CorFghRecompose,
                "(p-q)† = F + G - H",
                self.recompose,
            ),
        ]
    }

    pub fn all(&self) -> bool {
        self.entries().iter().all(|e| e.3)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FghTriple {
    pub f: MatrixElement,
    pub g: MatrixElement,
    pub h: MatrixElement,
    /// (p−q)†
    pub diff_dagger: MatrixElement,
    pub relations: FghRelations,
}

fn all_equal(items: &[MatrixElement]) -> bool {
    items.windows(2).all(|w| w[0] == w[1])
}

/// F = p(p−q)†, G = (p−q)†p, H = (p−q)(p−q)† and all their relations.
pub fn fgh_decomposition(p: &MatrixElement, q: &MatrixElement) -> Result<FghTriple, CheckError> {
    let g = Gate(StatementId::ThmFgh);
    g.same_ring(&[p, q])?;
    g.projector("p is a projector", p)?;
    g.projector("q is a projector", q)?;
    let diff = p - q;
    let d = g.dagger("p-q ∈ R†", &diff)?;
    let (np, nq) = (p.complement(), q.complement());
    let f = p * &d;
    let gg = &d * p;
    let h = &diff * &d;
    let (nf, ng) = (f.complement(), gg.complement());

    let relations = FghRelations {
        f_idem: f.square() == f,
        g_idem: gg.square() == gg,
        h_proj: h.square() == h && h.is_self_adjoint(),
        f_alt: f == &d * &nq,
        g_alt: gg == &nq * &d,
        q_swap: q * &d == &d * &np,
        qh_hq: q * &h == &h * q,
        gq_qf: &gg * &nq == &nq * &f,
        fp_pg_ph_hp: all_equal(&[&f * p, p * &gg, p * &h, &h * p]),
        qhq_chain: all_equal(&[&(q * &h) * q, q * &h, &h * q, &(&h * q) * &h]),
        comp_chain: all_equal(&[&nq * &nf, &ng * &nq, &(&nq * &nf) * &nq]),
        recompose: &(&f + &gg) - &h == d,
    };
    if let Some((name, statement, claim, _)) = relations.entries().into_iter().find(|e| !e.3) {
        let w = witness(&[("p", p), ("q", q), ("F", &f), ("G", &gg), ("H", &h)]);
        let mut err = Gate(statement).falsified(claim, w);
        if let CheckError::Falsified(ref mut fl) = err {
            fl.claim = alloc::format!("{name}: {claim}");
        }
        return Err(err);
    }
    Ok(FghTriple {
        f,
        g: gg,
        h,
        diff_dagger: d,
        relations,
    })
}

/// When 2 is invertible: pH = p ⇔ (p+q)H = p+q ⇔ (p+q)† = (p−q)†(p+q)(p−q)†.
///
/// Returns the formula's value when the conditions hold and `None` when they
/// all fail.
pub fn sum_mp_via_difference(
    p: &MatrixElement,
    q: &MatrixElement,
) -> Result<Option<MatrixElement>, CheckError> {
    let g = Gate(StatementId::ThmSumViaDiff);
    g.same_ring(&[p, q])?;
    g.projector("p is a projector", p)?;
    g.projector("q is a projector", q)?;
    g.require(
        mp::is_invertible_integer(p.ctx(), 2),
        "2 is invertible in R",
        &[],
    )?;
    let diff = p - q;
    let d = g.dagger("p-q ∈ R†", &diff)?;
    let h = &diff * &d;
    let sum = p + q;
    let x = &(&d * &sum) * &d;
    let c1 = p * &h == *p;
    let c2 = &sum * &h == sum;
    let c3 = penrose_check(&sum, &x)?.overall;
    let w = || witness(&[("p", p), ("q", q), ("H", &h), ("(p-q)†(p+q)(p-q)†", &x)]);
    if c1 != c2 {
        return Err(g.falsified("pH = p ⇔ (p+q)H = p+q", w()));
    }
    if c2 != c3 {
        return Err(g.falsified("(p+q)H = p+q ⇔ (p+q)† = (p-q)†(p+q)(p-q)†", w()));
    }
    Ok(c3.then_some(x))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommutingSum {
    /// (p+q)† = (1+pq)†p + q(1−p)
    pub sum_mp: Option<MatrixElement>,
    /// (1+pq)† = (p+q)†p + 1 − p
    pub one_plus_pq_mp: Option<MatrixElement>,
}

/// For commuting projectors: p+q ∈ R† ⇔ 1+pq ∈ R†, with each inverse
/// expressed through the other.
pub fn commuting_sum_mp(p: &MatrixElement, q: &MatrixElement) -> Result<CommutingSum, CheckError> {
    let g = Gate(StatementId::ThmCommutingSum);
    g.same_ring(&[p, q])?;
    g.projector("p is a projector", p)?;
    g.projector("q is a projector", q)?;
    g.require(p.commutes_with(q), "pq = qp", &[("p", p), ("q", q)])?;
    let np = p.complement();
    let sum = p + q;
    let one_plus = &MatrixElement::identity(p.ctx()) + &(p * q);
    let sum_dag = mp::dagger(&sum)?;
    let one_plus_dag = mp::dagger(&one_plus)?;
    g.claim(
        sum_dag.is_some() == one_plus_dag.is_some(),
        "p+q ∈ R† ⇔ 1+pq ∈ R†",
        &[("p", p), ("q", q)],
    )?;
    let sum_mp = match &one_plus_dag {
        Some(t) => Some(g.certify("(p+q)† = (1+pq)†p + q(1-p)", &sum, &(t * p) + &(q * &np))?),
        None => None,
    };
    let one_plus_pq_mp = match &sum_dag {
        Some(s) => Some(g.certify("(1+pq)† = (p+q)†p + 1-p", &one_plus, &(s * p) + &np)?),
        None => None,
    };
    Ok(CommutingSum {
        sum_mp,
        one_plus_pq_mp,
    })
}
