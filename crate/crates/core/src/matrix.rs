//! Dense matrices over a single scalar kind.
//!
//! [`Matrix`] is rectangular and only appears as an intermediate (rank
//! factors, vectors). [`MatrixElement`] is a square matrix bound to a
//! [`RingContext`] and is what every ring-level operation works on.

use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use crate::ring::{RingContext, RingError};
use crate::scalar::{Scalar, ScalarKind};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    kind: ScalarKind,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(kind: ScalarKind, rows: usize, cols: usize) -> Matrix {
        Matrix {
            kind,
            rows,
            cols,
            data: alloc::vec![Scalar::zero(kind); rows * cols],
        }
    }

    pub fn identity(kind: ScalarKind, n: usize) -> Matrix {
        Matrix::from_fn(kind, n, n, |i, j| Scalar::from_i64(kind, (i == j) as i64))
    }

    pub fn from_fn(
        kind: ScalarKind,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Scalar,
    ) -> Matrix {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                let x = f(i, j);
                assert_eq!(x.kind(), kind, "entry kind mismatch");
                data.push(x);
            }
        }
        Matrix {
            kind,
            rows,
            cols,
            data,
        }
    }

    /// Builds a matrix from row vectors, checking every entry's kind.
    pub fn from_rows(kind: ScalarKind, rows: Vec<Vec<Scalar>>) -> Result<Matrix, RingError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(RingError::Shape {
                    expected: c,
                    rows: r,
                    cols: row.len(),
                });
            }
            for x in row {
                if x.kind() != kind {
                    return Err(RingError::EntryKind {
                        expected: kind,
                        found: x.kind(),
                    });
                }
                data.push(x);
            }
        }
        Ok(Matrix {
            kind,
            rows: r,
            cols: c,
            data,
        })
    }

    pub fn kind(&self) -> ScalarKind {
        self.kind
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: Scalar) {
        assert_eq!(x.kind(), self.kind, "entry kind mismatch");
        self.data[i * self.cols + j] = x;
    }

    /// Row-major entries.
    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.kind, self.cols, self.rows, |i, j| {
            self.get(j, i).clone()
        })
    }

    /// Conjugate transpose (plain transpose for kinds with trivial conjugation).
    pub fn star(&self) -> Matrix {
        Matrix::from_fn(self.kind, self.cols, self.rows, |i, j| {
            self.get(j, i).conj()
        })
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        Matrix {
            data: self.data.iter().map(|x| x * s).collect(),
            ..self.clone()
        }
    }

    pub fn select_columns(&self, cols: &[usize]) -> Matrix {
        Matrix::from_fn(self.kind, self.rows, cols.len(), |i, j| {
            self.get(i, cols[j]).clone()
        })
    }

    pub fn select_rows(&self, rows: &[usize]) -> Matrix {
        Matrix::from_fn(self.kind, rows.len(), self.cols, |i, j| {
            self.get(rows[i], j).clone()
        })
    }

    /// Reinterprets integer-valued entries in another ring.
    ///
    /// # Panics
    /// If an entry has no integer lift (a proper fraction).
    pub(crate) fn lift(&self, kind: ScalarKind) -> Matrix {
        Matrix::from_fn(kind, self.rows, self.cols, |i, j| {
            let z = self
                .get(i, j)
                .to_bigint()
                .expect("entry has an integer lift");
            Scalar::from_bigint(kind, &z)
        })
    }

    fn zip(&self, rhs: &Matrix, f: impl Fn(&Scalar, &Scalar) -> Scalar) -> Matrix {
        assert_eq!(self.kind, rhs.kind, "matrix kind mismatch");
        assert_eq!(
            (self.rows, self.cols),
            (rhs.rows, rhs.cols),
            "matrix shape mismatch"
        );
        Matrix {
            kind: self.kind,
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| f(a, b))
                .collect(),
        }
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        self.zip(rhs, |a, b| a + b)
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        self.zip(rhs, |a, b| a - b)
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        Matrix {
            data: self.data.iter().map(|x| -x).collect(),
            ..self.clone()
        }
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.kind, rhs.kind, "matrix kind mismatch");
        assert_eq!(self.cols, rhs.rows, "matrix shape mismatch");
        let zero = Scalar::zero(self.kind);
        Matrix::from_fn(self.kind, self.rows, rhs.cols, |i, j| {
            (0..self.cols).fold(zero.clone(), |acc, k| {
                let a = self.get(i, k);
                if a.is_zero() {
                    acc
                } else {
                    &acc + &(a * rhs.get(k, j))
                }
            })
        })
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for i in 0..self.rows {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str("[")?;
            for (j, x) in self.row(i).iter().enumerate() {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{x}")?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

/// A ring element: an n×n matrix over the scalars of its context.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MatrixElement {
    ctx: RingContext,
    m: Matrix,
}

impl MatrixElement {
    pub fn new(ctx: RingContext, m: Matrix) -> Result<Self, RingError> {
        if m.kind != ctx.kind() {
            return Err(RingError::EntryKind {
                expected: ctx.kind(),
                found: m.kind,
            });
        }
        if m.rows != ctx.dim() || m.cols != ctx.dim() {
            return Err(RingError::Shape {
                expected: ctx.dim(),
                rows: m.rows,
                cols: m.cols,
            });
        }
        Ok(MatrixElement { ctx, m })
    }

    pub fn from_rows(ctx: RingContext, rows: Vec<Vec<Scalar>>) -> Result<Self, RingError> {
        MatrixElement::new(ctx, Matrix::from_rows(ctx.kind(), rows)?)
    }

    /// Parses rows of scalar strings.
    pub fn parse<R: AsRef<[S]>, S: AsRef<str>>(
        ctx: RingContext,
        rows: &[R],
    ) -> Result<Self, RingError> {
        let rows = rows
            .iter()
            .map(|row| {
                row.as_ref()
                    .iter()
                    .map(|s| Scalar::parse(ctx.kind(), s.as_ref()))
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        MatrixElement::from_rows(ctx, rows)
    }

    /// Integer entries, mapped into the context's ring.
    pub fn from_i64<R: AsRef<[i64]>>(ctx: RingContext, rows: &[R]) -> Result<Self, RingError> {
        let rows = rows
            .iter()
            .map(|row| {
                row.as_ref()
                    .iter()
                    .map(|&v| Scalar::from_i64(ctx.kind(), v))
                    .collect()
            })
            .collect();
        MatrixElement::from_rows(ctx, rows)
    }

    pub fn zero(ctx: RingContext) -> Self {
        MatrixElement {
            ctx,
            m: Matrix::zeros(ctx.kind(), ctx.dim(), ctx.dim()),
        }
    }

    pub fn identity(ctx: RingContext) -> Self {
        MatrixElement {
            ctx,
            m: Matrix::identity(ctx.kind(), ctx.dim()),
        }
    }

    /// Diagonal matrix from integer values.
    pub fn diagonal(ctx: RingContext, diag: &[i64]) -> Self {
        assert_eq!(diag.len(), ctx.dim(), "diagonal length");
        let k = ctx.kind();
        MatrixElement {
            ctx,
            m: Matrix::from_fn(k, ctx.dim(), ctx.dim(), |i, j| {
                Scalar::from_i64(k, if i == j { diag[i] } else { 0 })
            }),
        }
    }

    pub fn ctx(&self) -> RingContext {
        self.ctx
    }

    pub fn dim(&self) -> usize {
        self.ctx.dim()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.m
    }

    pub fn into_matrix(self) -> Matrix {
        self.m
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        self.m.get(i, j)
    }

    pub fn is_zero(&self) -> bool {
        self.m.is_zero()
    }

    pub fn is_identity(&self) -> bool {
        self.m == Matrix::identity(self.ctx.kind(), self.ctx.dim())
    }

    /// The involution of the context.
    pub fn star(&self) -> MatrixElement {
        MatrixElement {
            ctx: self.ctx,
            m: self.m.star(),
        }
    }

    pub fn scale(&self, s: &Scalar) -> MatrixElement {
        MatrixElement {
            ctx: self.ctx,
            m: self.m.scale(s),
        }
    }

    /// `1 − self`.
    pub fn complement(&self) -> MatrixElement {
        &MatrixElement::identity(self.ctx) - self
    }

    pub fn square(&self) -> MatrixElement {
        self * self
    }

    pub fn commutes_with(&self, other: &MatrixElement) -> bool {
        self * other == other * self
    }

    pub fn is_self_adjoint(&self) -> bool {
        self.star() == *self
    }

    pub fn same_ring(&self, other: &MatrixElement) -> Result<(), RingError> {
        if self.ctx == other.ctx {
            Ok(())
        } else {
            Err(RingError::ContextMismatch {
                left: self.ctx,
                right: other.ctx,
            })
        }
    }

    pub fn checked_add(&self, rhs: &MatrixElement) -> Result<MatrixElement, RingError> {
        self.same_ring(rhs)?;
        Ok(self + rhs)
    }

    pub fn checked_sub(&self, rhs: &MatrixElement) -> Result<MatrixElement, RingError> {
        self.same_ring(rhs)?;
        Ok(self - rhs)
    }

    pub fn checked_mul(&self, rhs: &MatrixElement) -> Result<MatrixElement, RingError> {
        self.same_ring(rhs)?;
        Ok(self * rhs)
    }

    fn assert_same(&self, rhs: &MatrixElement) {
        if let Err(e) = self.same_ring(rhs) {
            panic!("{e}");
        }
    }
}

impl Add for &MatrixElement {
    type Output = MatrixElement;
    fn add(self, rhs: &MatrixElement) -> MatrixElement {
        self.assert_same(rhs);
        MatrixElement {
            ctx: self.ctx,
            m: &self.m + &rhs.m,
        }
    }
}

impl Sub for &MatrixElement {
    type Output = MatrixElement;
    fn sub(self, rhs: &MatrixElement) -> MatrixElement {
        self.assert_same(rhs);
        MatrixElement {
            ctx: self.ctx,
            m: &self.m - &rhs.m,
        }
    }
}

impl Mul for &MatrixElement {
    type Output = MatrixElement;
    fn mul(self, rhs: &MatrixElement) -> MatrixElement {
        self.assert_same(rhs);
        MatrixElement {
            ctx: self.ctx,
            m: &self.m * &rhs.m,
        }
    }
}

impl Neg for &MatrixElement {
    type Output = MatrixElement;
    fn neg(self) -> MatrixElement {
        MatrixElement {
            ctx: self.ctx,
            m: -&self.m,
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for MatrixElement {
            type Output = MatrixElement;
            fn $f(self, rhs: MatrixElement) -> MatrixElement {
                (&self).$f(&rhs)
            }
        }
        impl $tr<&MatrixElement> for MatrixElement {
            type Output = MatrixElement;
            fn $f(self, rhs: &MatrixElement) -> MatrixElement {
                (&self).$f(rhs)
            }
        }
        impl $tr<MatrixElement> for &MatrixElement {
            type Output = MatrixElement;
            fn $f(self, rhs: MatrixElement) -> MatrixElement {
                self.$f(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for MatrixElement {
    type Output = MatrixElement;
    fn neg(self) -> MatrixElement {
        -&self
    }
}

impl fmt::Display for MatrixElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.m.fmt(f)
    }
}

/// Operations accepted by [`ring_arith`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Neg,
    Star,
    ScalarMul(Scalar),
}

/// Single entry point for ring arithmetic with context checking.
pub fn ring_arith(
    op: ArithOp,
    lhs: &MatrixElement,
    rhs: Option<&MatrixElement>,
) -> Result<MatrixElement, RingError> {
    let rhs = || rhs.ok_or(RingError::MissingOperand);
    match op {
        ArithOp::Add => lhs.checked_add(rhs()?),
        ArithOp::Sub => lhs.checked_sub(rhs()?),
        ArithOp::Mul => lhs.checked_mul(rhs()?),
        ArithOp::Neg => Ok(-lhs),
        ArithOp::Star => Ok(lhs.star()),
        ArithOp::ScalarMul(s) => {
            if s.kind() != lhs.ctx().kind() {
                return Err(RingError::EntryKind {
                    expected: lhs.ctx().kind(),
                    found: s.kind(),
                });
            }
            Ok(lhs.scale(&s))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qq(rows: &[&[&str]]) -> MatrixElement {
        MatrixElement::parse(RingContext::rational(rows.len()), rows).unwrap()
    }

    #[test]
    fn star_examples() {
        let a = qq(&[&["1", "2"], &["3", "4"]]);
        assert_eq!(a.star().star(), a);
        assert_eq!(
            qq(&[&["0", "1"], &["0", "0"]]).star(),
            qq(&[&["0", "0"], &["1", "0"]])
        );
        let ctx = RingContext::gaussian(2);
        let z = MatrixElement::parse(ctx, &[["i", "0"], ["0", "0"]]).unwrap();
        let want = MatrixElement::parse(ctx, &[["-i", "0"], ["0", "0"]]).unwrap();
        assert_eq!(z.star(), want);
    }

    #[test]
    fn context_mismatch_is_reported() {
        let a = MatrixElement::identity(RingContext::rational(2));
        let b = MatrixElement::identity(RingContext::modular(3, 2));
        let c = MatrixElement::identity(RingContext::modular(5, 2));
        assert!(matches!(
            ring_arith(ArithOp::Add, &a, Some(&b)),
            Err(RingError::ContextMismatch { .. })
        ));
        assert!(matches!(
            b.checked_mul(&c),
            Err(RingError::ContextMismatch { .. })
        ));
        assert!(matches!(
            ring_arith(ArithOp::Mul, &a, None),
            Err(RingError::MissingOperand)
        ));
    }

    #[test]
    fn shape_and_kind_validation() {
        let ctx = RingContext::rational(2);
        assert!(matches!(
            MatrixElement::parse(ctx, &[["1", "2", "3"]]),
            Err(RingError::Shape { .. })
        ));
        let m = Matrix::identity(ScalarKind::Integer, 2);
        assert!(matches!(
            MatrixElement::new(ctx, m),
            Err(RingError::EntryKind { .. })
        ));
        assert!(RingContext::new(ScalarKind::Rational, 0).is_err());
    }

    #[test]
    fn scalar_mul_and_complement() {
        let p = qq(&[&["1", "0"], &["0", "0"]]);
        let half = Scalar::ratio(ScalarKind::Rational, 1, 2);
        let got = ring_arith(ArithOp::ScalarMul(half), &p, None).unwrap();
        assert_eq!(got, qq(&[&["1/2", "0"], &["0", "0"]]));
        assert_eq!(p.complement(), qq(&[&["0", "0"], &["0", "1"]]));
    }
}
