//! Exhaustive search over finite matrix rings M_n(ℤ/mℤ).
//!
//! These routines work on raw residues instead of [`Scalar`]s; they sit in
//! the inner loop of every brute-force oracle.

use alloc::vec;
use alloc::vec::Vec;

use crate::matrix::{Matrix, MatrixElement};
use crate::mp::MpError;
use crate::ring::RingContext;
use crate::scalar::{Scalar, ScalarKind};

/// Candidate budget for brute-force MP-inverse search.
pub const BRUTE_FORCE_BUDGET: u128 = 10_000_000;
/// Budget for listing every element of a ring (projector enumeration).
pub const ENUMERATION_BUDGET: u128 = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Residues {
    n: usize,
    m: u64,
    v: Vec<u64>,
}

impl Residues {
    pub(crate) fn from_element(a: &MatrixElement) -> Residues {
        let m = a.ctx().modulus().expect("finite ring");
        let v = a
            .matrix()
            .entries()
            .iter()
            .map(|x| match x {
                Scalar::Mod(r) => r.value(),
                _ => unreachable!("finite ring entries are residues"),
            })
            .collect();
        Residues { n: a.dim(), m, v }
    }

    fn zeros(n: usize, m: u64) -> Residues {
        Residues {
            n,
            m,
            v: vec![0; n * n],
        }
    }

    pub(crate) fn to_element(&self, ctx: RingContext) -> MatrixElement {
        let kind = ScalarKind::ModInt(self.m);
        let mat = Matrix::from_fn(kind, self.n, self.n, |i, j| {
            Scalar::from_i64(kind, self.v[i * self.n + j] as i64)
        });
        MatrixElement::new(ctx, mat).expect("shape matches context")
    }

    fn mul_into(&self, rhs: &Residues, out: &mut Residues) {
        let n = self.n;
        let m = self.m as u128;
        for i in 0..n {
            for j in 0..n {
                let mut acc: u128 = 0;
                for k in 0..n {
                    acc += self.v[i * n + k] as u128 * rhs.v[k * n + j] as u128;
                }
                out.v[i * n + j] = (acc % m) as u64;
            }
        }
    }

    fn transpose(&self) -> Residues {
        let n = self.n;
        let mut t = Residues::zeros(n, self.m);
        for i in 0..n {
            for j in 0..n {
                t.v[j * n + i] = self.v[i * n + j];
            }
        }
        t
    }

    fn is_symmetric(&self) -> bool {
        let n = self.n;
        (0..n).all(|i| (0..i).all(|j| self.v[i * n + j] == self.v[j * n + i]))
    }

    fn apply(&self, x: &[u64], out: &mut [u64]) {
        let n = self.n;
        for (i, o) in out.iter_mut().enumerate() {
            let acc: u128 = (0..n)
                .map(|k| self.v[i * n + k] as u128 * x[k] as u128)
                .sum();
            *o = (acc % self.m as u128) as u64;
        }
    }
}

/// Advances `digits` to the next tuple in lexicographic order (last digit
/// fastest). Returns false after the last tuple.
fn increment(digits: &mut [u64], m: u64) -> bool {
    for d in digits.iter_mut().rev() {
        *d += 1;
        if *d < m {
            return true;
        }
        *d = 0;
    }
    false
}

fn check_budget(count: Option<u128>, budget: u128) -> Result<u128, MpError> {
    match count {
        Some(c) if c <= budget => Ok(c),
        _ => Err(MpError::SearchBudgetExceeded {
            candidates: count,
            budget,
        }),
    }
}

/// Every b with aba = a, bab = b, ab and ba symmetric. The transpose is the
/// involution of every finite context.
pub(crate) fn brute_force_inverses(a: &MatrixElement) -> Result<Vec<MatrixElement>, MpError> {
    let ctx = a.ctx();
    check_budget(ctx.cardinality(), BRUTE_FORCE_BUDGET)?;
    let a = Residues::from_element(a);
    let (n, m) = (a.n, a.m);
    let mut b = Residues::zeros(n, m);
    let mut ab = Residues::zeros(n, m);
    let mut ba = Residues::zeros(n, m);
    let mut tmp = Residues::zeros(n, m);
    let mut found = Vec::new();
    loop {
        a.mul_into(&b, &mut ab);
        if ab.is_symmetric() {
            ab.mul_into(&a, &mut tmp);
            if tmp.v == a.v {
                b.mul_into(&a, &mut ba);
                if ba.is_symmetric() {
                    ba.mul_into(&b, &mut tmp);
                    if tmp.v == b.v {
                        found.push(b.to_element(ctx));
                    }
                }
            }
        }
        if !increment(&mut b.v, m) {
            break;
        }
    }
    Ok(found)
}

/// `a*a x = 0 ⇒ a x = 0` and `x a a* = 0 ⇒ x a = 0` for all x.
///
/// Both implications act column by column (resp. row by row) on x, so it
/// suffices to range over vectors of ℤ_m^n.
pub(crate) fn star_cancellable(a: &MatrixElement) -> Result<bool, MpError> {
    let ctx = a.ctx();
    let m = ctx.modulus().expect("finite ring");
    let count = (m as u128).checked_pow(ctx.dim() as u32);
    check_budget(count, BRUTE_FORCE_BUDGET)?;
    let a = Residues::from_element(a);
    let at = a.transpose();
    let n = a.n;
    let mut ata = Residues::zeros(n, m);
    at.mul_into(&a, &mut ata);
    let mut aat = Residues::zeros(n, m);
    a.mul_into(&at, &mut aat);
    // Row condition w·(aa*) = 0 ⇒ w·a = 0 is the column condition for the
    // transposes: (aa*)ᵀ wᵀ = aa* wᵀ (symmetric) and aᵀ wᵀ.
    let mut x = vec![0u64; n];
    let mut y = vec![0u64; n];
    loop {
        ata.apply(&x, &mut y);
        if y.iter().all(|&v| v == 0) {
            a.apply(&x, &mut y);
            if y.iter().any(|&v| v != 0) {
                return Ok(false);
            }
        }
        aat.apply(&x, &mut y);
        if y.iter().all(|&v| v == 0) {
            at.apply(&x, &mut y);
            if y.iter().any(|&v| v != 0) {
                return Ok(false);
            }
        }
        if !increment(&mut x, m) {
            return Ok(true);
        }
    }
}

/// Every element of a finite context in lexicographic entry order.
pub fn all_elements(
    ctx: RingContext,
    budget: u128,
) -> Result<impl Iterator<Item = MatrixElement>, MpError> {
    let m = ctx.modulus().ok_or(MpError::NotFinite(ctx))?;
    check_budget(ctx.cardinality(), budget)?;
    let n = ctx.dim();
    let mut cur = Some(Residues::zeros(n, m));
    Ok(core::iter::from_fn(move || {
        let out = cur.as_ref()?.to_element(ctx);
        let c = cur.as_mut().expect("checked above");
        if !increment(&mut c.v, m) {
            cur = None;
        }
        Some(out)
    }))
}
