use crate::matrix::MatrixElement;
use crate::mp;

use super::{CheckError, Gate, StatementId};

/// If `d·a1 = a2·d` and `d·a1* = a2*·d`, then `a2†·d = d·a1†`.
///
/// With `a1 = a2 = a` this is the statement that `a†` commutes with every
/// element commuting with both `a` and `a*`.
pub fn intertwine_transfer(
    a1: &MatrixElement,
    a2: &MatrixElement,
    d: &MatrixElement,
) -> Result<bool, CheckError> {
    let g = Gate(StatementId::LemmaIntertwine);
    g.same_ring(&[a1, a2, d])?;
    let a1_dag = g.dagger("a1 ∈ R†", a1)?;
    let a2_dag = g.dagger("a2 ∈ R†", a2)?;
    g.require(
        d * a1 == a2 * d,
        "d·a1 = a2·d",
        &[("a1", a1), ("a2", a2), ("d", d)],
    )?;
    g.require(
        d * &a1.star() == &a2.star() * d,
        "d·a1* = a2*·d",
        &[("a1", a1), ("a2", a2), ("d", d)],
    )?;
    g.claim_eq("a2†·d = d·a1†", &(&a2_dag * d), &(d * &a1_dag))?;
    Ok(true)
}

/// `(ab)† = b†a† = a†b†` for MP-invertible `a, b` with `ab = ba` and `a*b = ba*`.
pub fn commuting_product_mp(
    a: &MatrixElement,
    b: &MatrixElement,
) -> Result<MatrixElement, CheckError> {
    let g = Gate(StatementId::LemmaCommutingProduct);
    g.same_ring(&[a, b])?;
    let a_dag = g.dagger("a ∈ R†", a)?;
    let b_dag = g.dagger("b ∈ R†", b)?;
    g.require(a.commutes_with(b), "ab = ba", &[("a", a), ("b", b)])?;
    g.require(
        &a.star() * b == b * &a.star(),
        "a*b = ba*",
        &[("a", a), ("b", b)],
    )?;
    let x = g.certify("(ab)† = b†a†", &(a * b), &b_dag * &a_dag)?;
    g.claim_eq("b†a† = a†b†", &x, &(&a_dag * &b_dag))?;
    Ok(x)
}

/// `(a+b)† = a† + b†` when `a*b = ab* = 0`.
pub fn orthogonal_sum_mp(
    a: &MatrixElement,
    b: &MatrixElement,
) -> Result<MatrixElement, CheckError> {
    let g = Gate(StatementId::LemmaOrthogonalSum);
    g.same_ring(&[a, b])?;
    let a_dag = g.dagger("a ∈ R†", a)?;
    let b_dag = g.dagger("b ∈ R†", b)?;
    g.require((&a.star() * b).is_zero(), "a*b = 0", &[("a", a), ("b", b)])?;
    g.require((a * &b.star()).is_zero(), "ab* = 0", &[("a", a), ("b", b)])?;
    g.certify("(a+b)† = a† + b†", &(a + b), &a_dag + &b_dag)
}

/// `(ap + b(1−p))† = a†p + b†(1−p)` for a projector `p` commuting with `a*` and `b*`.
pub fn pencil_mp(
    a: &MatrixElement,
    b: &MatrixElement,
    p: &MatrixElement,
) -> Result<MatrixElement, CheckError> {
    let g = Gate(StatementId::ThmPencil);
    g.same_ring(&[a, b, p])?;
    g.require(mp::is_projector(p), "p is a projector", &[("p", p)])?;
    let a_dag = g.dagger("a ∈ R†", a)?;
    let b_dag = g.dagger("b ∈ R†", b)?;
    g.require(
        a.star().commutes_with(p),
        "a*p = pa*",
        &[("a", a), ("p", p)],
    )?;
    g.require(
        b.star().commutes_with(p),
        "b*p = pb*",
        &[("b", b), ("p", p)],
    )?;
    let np = p.complement();
    let pencil = &(a * p) + &(b * &np);
    g.certify(
        "(ap+b(1-p))† = a†p + b†(1-p)",
        &pencil,
        &(&a_dag * p) + &(&b_dag * &np),
    )
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::{canonical_pair, qq};
    use super::*;
    use crate::ring::RingContext;

    fn diag(v: &[&str]) -> MatrixElement {
        let n = v.len();
        let rows: alloc::vec::Vec<alloc::vec::Vec<&str>> = (0..n)
            .map(|i| (0..n).map(|j| if i == j { v[i] } else { "0" }).collect())
            .collect();
        MatrixElement::parse(RingContext::rational(n), &rows).unwrap()
    }

    fn is_hypothesis(r: Result<impl core::fmt::Debug, CheckError>, name: &str) -> bool {
        matches!(r, Err(CheckError::Hypothesis(h)) if h.hypothesis == name)
    }

    #[test]
    fn intertwine_examples() {
        let one = MatrixElement::identity(RingContext::rational(2));
        assert!(intertwine_transfer(&one, &one, &one).unwrap());
        let p = diag(&["1", "0"]);
        let d = diag(&["3", "5"]);
        assert!(intertwine_transfer(&p, &p, &d).unwrap());
        // both sides equal [[3,0],[0,0]]
        assert_eq!(&p * &d, diag(&["3", "0"]));
        let a1 = diag(&["1", "0"]);
        let a2 = diag(&["0", "1"]);
        let d = qq(&[&["0", "0"], &["1", "0"]]);
        assert!(intertwine_transfer(&a1, &a2, &d).unwrap());
        assert_eq!(&a2 * &d, d);
        assert_eq!(&d * &a1, d);
    }

    #[test]
    fn intertwine_gate() {
        let a1 = diag(&["1", "0"]);
        let a2 = diag(&["0", "1"]);
        let d = MatrixElement::identity(RingContext::rational(2));
        assert!(is_hypothesis(
            intertwine_transfer(&a1, &a2, &d),
            "d·a1 = a2·d"
        ));
        // ℤ: 2 has no MP-inverse
        let two = MatrixElement::from_i64(RingContext::integer(1), &[[2]]).unwrap();
        let one = MatrixElement::identity(RingContext::integer(1));
        assert!(is_hypothesis(
            intertwine_transfer(&two, &one, &one),
            "a1 ∈ R†"
        ));
    }

    #[test]
    fn commuting_product_examples() {
        let one = MatrixElement::identity(RingContext::rational(2));
        assert_eq!(commuting_product_mp(&one, &one).unwrap(), one);
        // diag(2,0)·diag(3,5) = diag(6,0); invert the nonzero diagonal entries
        let got = commuting_product_mp(&diag(&["2", "0"]), &diag(&["3", "5"])).unwrap();
        assert_eq!(got, diag(&["1/6", "0"]));
        let (_, q) = canonical_pair();
        let got = commuting_product_mp(&q, &q.complement()).unwrap();
        assert!(got.is_zero());
    }

    #[test]
    fn commuting_product_gate() {
        let (p, q) = canonical_pair();
        assert!(is_hypothesis(commuting_product_mp(&p, &q), "ab = ba"));
        // commutes but a*b ≠ ba*: a = [[0,1],[-1,0]]... use a non-normal a with b = a
        let a = qq(&[&["1", "1"], &["0", "1"]]);
        assert!(is_hypothesis(commuting_product_mp(&a, &a), "a*b = ba*"));
    }

    #[test]
    fn orthogonal_sum_examples() {
        let a = qq(&[&["1", "2"], &["3", "4"]]);
        let z = MatrixElement::zero(RingContext::rational(2));
        let a_dag = crate::mp::dagger(&a).unwrap().unwrap();
        assert_eq!(orthogonal_sum_mp(&a, &z).unwrap(), a_dag);
        let got = orthogonal_sum_mp(&diag(&["1", "0"]), &diag(&["0", "3"])).unwrap();
        assert_eq!(got, diag(&["1", "1/3"]));
        let (p, q) = canonical_pair();
        assert!(is_hypothesis(orthogonal_sum_mp(&p, &q), "a*b = 0"));
    }

    #[test]
    fn pencil_examples() {
        let one = MatrixElement::identity(RingContext::rational(2));
        let p = diag(&["1", "0"]);
        assert_eq!(pencil_mp(&one, &one, &p).unwrap(), one);
        let got = pencil_mp(&diag(&["2", "3"]), &diag(&["5", "7"]), &p).unwrap();
        assert_eq!(got, diag(&["1/2", "1/7"]));
    }

    #[test]
    fn pencil_reproduces_square_of_difference() {
        let (p, q) = canonical_pair();
        let (np, nq) = (p.complement(), q.complement());
        let a = (&(&p * &q) * &p).complement();
        let b = (&(&np * &nq) * &np).complement();
        let pencil = &(&a * &p) + &(&b * &np);
        let diff = &p - &q;
        assert_eq!(pencil, diff.square());
        let got = pencil_mp(&a, &b, &p).unwrap();
        let d = crate::mp::dagger(&diff).unwrap().unwrap();
        assert_eq!(got, d.square());
    }

    #[test]
    fn pencil_gate() {
        let (p, q) = canonical_pair();
        let one = MatrixElement::identity(RingContext::rational(2));
        assert!(is_hypothesis(pencil_mp(&q, &one, &p), "a*p = pa*"));
        let not_proj = qq(&[&["1", "1"], &["0", "0"]]);
        assert!(is_hypothesis(
            pencil_mp(&one, &one, &not_proj),
            "p is a projector"
        ));
    }
}
