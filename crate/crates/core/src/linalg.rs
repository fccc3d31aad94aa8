//! Exact elimination: determinants, inverses, and rank factorizations.

use alloc::string::ToString;
use alloc::vec::Vec;

use crate::matrix::{Matrix, MatrixElement};
use crate::ring::RingError;
use crate::scalar::{is_prime, Scalar, ScalarKind};

/// Determinant by fraction-free (Bareiss) elimination.
///
/// Over ℤ/mℤ with composite m the entries are lifted to ℤ first; the
/// determinant is a polynomial in the entries, so reducing afterwards is exact.
pub fn determinant(a: &Matrix) -> Scalar {
    assert_eq!(a.rows(), a.cols(), "determinant of a non-square matrix");
    match a.kind() {
        ScalarKind::ModInt(m) if !is_prime(m) => {
            let d = bareiss(&a.lift(ScalarKind::Integer));
            Scalar::from_bigint(a.kind(), &d.to_bigint().expect("integer determinant"))
        }
        _ => bareiss(a),
    }
}

fn bareiss(a: &Matrix) -> Scalar {
    let kind = a.kind();
    let n = a.rows();
    if n == 0 {
        return Scalar::one(kind);
    }
    let mut m: Vec<Vec<Scalar>> = (0..n).map(|i| a.row(i).to_vec()).collect();
    let mut negate = false;
    let mut prev = Scalar::one(kind);
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    negate = !negate;
                }
                None => return Scalar::zero(kind),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num.exact_div(&prev);
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if negate {
        -&d
    } else {
        d
    }
}

/// Inverse of a ring element, or `None` when it is not a unit.
///
/// Over fields this is Gauss–Jordan elimination. Over ℤ and composite ℤ/mℤ
/// the element is invertible iff its determinant is a unit, and the inverse
/// is `det⁻¹ · adj`, with the adjugate computed through ℚ.
pub fn matrix_inverse(a: &MatrixElement) -> Option<MatrixElement> {
    let kind = a.ctx().kind();
    let inv = if kind.is_field() {
        matrix_inverse_rect(a.matrix())?
    } else {
        let int = a.matrix().lift(ScalarKind::Integer);
        let det = bareiss(&int);
        let det_inv = Scalar::from_bigint(kind, &det.to_bigint()?).inverse()?;
        let over_q = matrix_inverse_rect(&int.lift(ScalarKind::Rational))?;
        let det_q = Scalar::from_bigint(ScalarKind::Rational, &det.to_bigint()?);
        let adj = over_q.scale(&det_q).lift(kind);
        adj.scale(&det_inv)
    };
    MatrixElement::new(a.ctx(), inv).ok()
}

/// Gauss–Jordan inverse of a square matrix over a field.
pub(crate) fn matrix_inverse_rect(a: &Matrix) -> Option<Matrix> {
    let kind = a.kind();
    let n = a.rows();
    let mut aug: Vec<Vec<Scalar>> = (0..n)
        .map(|i| {
            let mut row = a.row(i).to_vec();
            row.extend((0..n).map(|j| Scalar::from_i64(kind, (i == j) as i64)));
            row
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&i| !aug[i][col].is_zero())?;
        aug.swap(col, piv);
        let inv = aug[col][col].inverse()?;
        for x in aug[col].iter_mut() {
            *x = &*x * &inv;
        }
        let pivot_row = aug[col].clone();
        for (i, row) in aug.iter_mut().enumerate() {
            if i == col || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                *x = &*x - &(&f * p);
            }
        }
    }
    Some(Matrix::from_fn(kind, n, n, |i, j| aug[i][n + j].clone()))
}

/// Reduced row echelon form over a field, pivoting on the first nonzero
/// entry of each column. Returns the form and its pivot columns.
pub fn rref(a: &Matrix) -> Result<(Matrix, Vec<usize>), RingError> {
    require_field(a.kind(), "row reduction")?;
    let (rows, cols) = (a.rows(), a.cols());
    let mut m: Vec<Vec<Scalar>> = (0..rows).map(|i| a.row(i).to_vec()).collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(piv) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, piv);
        let inv = m[r][c].inverse().expect("nonzero field element");
        for x in m[r].iter_mut() {
            *x = &*x * &inv;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                *x = &*x - &(&f * p);
            }
        }
        pivots.push(c);
        r += 1;
    }
    Ok((
        Matrix::from_fn(a.kind(), rows, cols, |i, j| m[i][j].clone()),
        pivots,
    ))
}

pub fn rank(a: &Matrix) -> Result<usize, RingError> {
    rref(a).map(|(_, p)| p.len())
}

fn require_field(kind: ScalarKind, operation: &'static str) -> Result<(), RingError> {
    if kind.is_field() {
        Ok(())
    } else {
        Err(RingError::UnsupportedRing {
            ring: kind.ring_id().to_string(),
            operation,
        })
    }
}

/// `A = left · right` with `left` of full column rank and `right` of full row rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankFactorization {
    pub left: Matrix,
    pub right: Matrix,
}

impl RankFactorization {
    pub fn rank(&self) -> usize {
        self.left.cols()
    }
}

/// Column–row factorization: `right` is the nonzero part of the reduced row
/// echelon form and `left` collects the pivot columns of `A`.
///
/// Defined over fields only (ℚ, ℚ(i), ℤ/pℤ).
pub fn rank_factorization(a: &MatrixElement) -> Result<RankFactorization, RingError> {
    let (r, pivots) = rref(a.matrix())?;
    let rows: Vec<usize> = (0..pivots.len()).collect();
    Ok(RankFactorization {
        left: a.matrix().select_columns(&pivots),
        right: r.select_rows(&rows),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::RingContext;

    fn qq(rows: &[&[&str]]) -> MatrixElement {
        MatrixElement::parse(RingContext::rational(rows.len()), rows).unwrap()
    }

    // Schoolbook product, independent of `Mul for Matrix`.
    fn hand_product(a: &MatrixElement, b: &MatrixElement) -> Vec<Vec<Scalar>> {
        let n = a.dim();
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let mut s = Scalar::zero(a.ctx().kind());
                        for k in 0..n {
                            s = &s + &(a.get(i, k) * b.get(k, j));
                        }
                        s
                    })
                    .collect()
            })
            .collect()
    }

    fn is_identity(rows: &[Vec<Scalar>]) -> bool {
        rows.iter().enumerate().all(|(i, r)| {
            r.iter()
                .enumerate()
                .all(|(j, x)| if i == j { x.is_one() } else { x.is_zero() })
        })
    }

    #[test]
    fn inverse_of_difference_example() {
        let a = qq(&[&["1/2", "-1/2"], &["-1/2", "-1/2"]]);
        let b = matrix_inverse(&a).unwrap();
        assert!(is_identity(&hand_product(&a, &b)));
        assert!(is_identity(&hand_product(&b, &a)));
        assert_eq!(b, qq(&[&["1", "-1"], &["-1", "-1"]]));
    }

    #[test]
    fn identity_inverts_to_identity_everywhere() {
        for ctx in [
            RingContext::rational(3),
            RingContext::gaussian(2),
            RingContext::modular(6, 2),
            RingContext::modular(7, 3),
            RingContext::integer(2),
        ] {
            let one = MatrixElement::identity(ctx);
            assert_eq!(matrix_inverse(&one), Some(one));
        }
    }

    #[test]
    fn integer_two_is_not_invertible() {
        let two = MatrixElement::from_i64(RingContext::integer(1), &[[2]]).unwrap();
        assert_eq!(matrix_inverse(&two), None);
        let unimodular =
            MatrixElement::from_i64(RingContext::integer(2), &[[2, 1], [1, 1]]).unwrap();
        let inv = matrix_inverse(&unimodular).unwrap();
        assert_eq!(
            inv,
            MatrixElement::from_i64(RingContext::integer(2), &[[1, -1], [-1, 2]]).unwrap()
        );
    }

    #[test]
    fn composite_modulus_uses_unit_determinant() {
        let ctx = RingContext::modular(6, 2);
        // det = 3, not a unit mod 6
        let a = MatrixElement::from_i64(ctx, &[[1, 1], [1, 4]]).unwrap();
        assert_eq!(determinant(a.matrix()), Scalar::from_i64(ctx.kind(), 3));
        assert_eq!(matrix_inverse(&a), None);
        // det = 5, a unit
        let b = MatrixElement::from_i64(ctx, &[[1, 2], [0, 5]]).unwrap();
        let inv = matrix_inverse(&b).unwrap();
        assert!((&b * &inv).is_identity() && (&inv * &b).is_identity());
    }

    #[test]
    fn gaussian_inverse() {
        let ctx = RingContext::gaussian(2);
        let a = MatrixElement::parse(ctx, &[["1+i", "2"], ["i", "1"]]).unwrap();
        let inv = matrix_inverse(&a).unwrap();
        assert!((&a * &inv).is_identity());
    }

    #[test]
    fn bareiss_matches_cofactor_expansion() {
        let a = MatrixElement::from_i64(
            RingContext::integer(3),
            &[[2, -1, 3], [0, 4, 1], [5, 2, -2]],
        )
        .unwrap();
        // 2(4·-2 - 1·2) + 1(0·-2 - 1·5) + 3(0·2 - 4·5) = -20 - 5 - 60
        assert_eq!(
            determinant(a.matrix()),
            Scalar::from_i64(ScalarKind::Integer, -85)
        );
    }

    #[test]
    fn rank_factorization_examples() {
        let one = qq(&[&["1", "1"], &["1", "1"]]);
        let f = rank_factorization(&one).unwrap();
        assert_eq!(f.rank(), 1);
        assert_eq!(
            f.left.entries(),
            qq(&[&["1", "0"], &["1", "0"]])
                .matrix()
                .select_columns(&[0])
                .entries()
        );
        assert_eq!(
            f.right.entries(),
            &[
                Scalar::one(ScalarKind::Rational),
                Scalar::one(ScalarKind::Rational)
            ]
        );
        assert_eq!(&f.left * &f.right, *one.matrix());

        let zero = MatrixElement::zero(RingContext::rational(2));
        let f = rank_factorization(&zero).unwrap();
        assert_eq!((f.left.rows(), f.left.cols()), (2, 0));
        assert_eq!((f.right.rows(), f.right.cols()), (0, 2));

        let id = MatrixElement::identity(RingContext::rational(2));
        let f = rank_factorization(&id).unwrap();
        assert_eq!(&f.left * &f.right, *id.matrix());
        assert_eq!(f.rank(), 2);
    }

    #[test]
    fn rank_factorization_rejects_non_fields() {
        let a = MatrixElement::identity(RingContext::integer(2));
        assert!(matches!(
            rank_factorization(&a),
            Err(RingError::UnsupportedRing { .. })
        ));
        let b = MatrixElement::identity(RingContext::modular(4, 2));
        assert!(matches!(
            rank_factorization(&b),
            Err(RingError::UnsupportedRing { .. })
        ));
        let c = MatrixElement::identity(RingContext::modular(5, 2));
        assert!(rank_factorization(&c).is_ok());
    }
}
