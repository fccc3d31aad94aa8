//! Exact Moore-Penrose inverses in rings with involution.
//!
//! The crate models concrete *-rings (n×n matrices over ℚ, ℚ(i), ℤ/mℤ and
//! ℤ), computes and certifies MP-inverses, and provides one executable check
//! per identity for differences, sums and products of projectors (see
//! [`toolkit`]). Everything is exact; verification is equality.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

pub mod finite;
pub mod generators;
pub mod linalg;
pub mod matrix;
pub mod mp;
pub mod ring;
pub mod scalar;
pub mod toolkit;

pub use linalg::{determinant, matrix_inverse, rank_factorization, RankFactorization};
pub use matrix::{ring_arith, ArithOp, Matrix, MatrixElement};
pub use mp::{
    dagger, is_normal, is_projector, is_star_cancellable, mp_inverse, mp_inverse_brute,
    penrose_check, MpError, MpMethod, MpResult, PenroseEquation, PenroseReport, PenroseWitness,
};
pub use ring::{Involution, RingContext, RingError};
pub use scalar::{GaussianRational, ModInt, ParseScalarError, Scalar, ScalarKind};
