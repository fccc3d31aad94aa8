//! Seeded projector generation and finite-ring enumeration.
//!
//! Randomness is keyed by `(seed, index)`: each index selects its own
//! ChaCha stream, so trials are reproducible in any order.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::finite::{all_elements, ENUMERATION_BUDGET};
use crate::linalg::{matrix_inverse_rect, rank};
use crate::matrix::{Matrix, MatrixElement};
use crate::mp::{self, MpError};
use crate::ring::{RingContext, RingError};
use crate::scalar::{GaussianRational, Scalar, ScalarKind};

/// Entries of the random factor B are drawn from `-ENTRY_BOUND..=ENTRY_BOUND`.
pub const ENTRY_BOUND: i64 = 5;
/// Resampling attempts before a generator gives up.
pub const MAX_RETRIES: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PairKind {
    Generic,
    Commuting,
    /// pq = 0
    Orthogonal,
    Equal,
    /// q = 1 − p
    Complement,
    /// Both diagonal with 0/1 entries.
    Diagonal,
}

impl PairKind {
    pub const ALL: [PairKind; 6] = [
        PairKind::Generic,
        PairKind::Commuting,
        PairKind::Orthogonal,
        PairKind::Equal,
        PairKind::Complement,
        PairKind::Diagonal,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            PairKind::Generic => "generic",
            PairKind::Commuting => "commuting",
            PairKind::Orthogonal => "orthogonal",
            PairKind::Equal => "equal",
            PairKind::Complement => "complement",
            PairKind::Diagonal => "diagonal",
        }
    }
}

impl fmt::Display for PairKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("unknown pair kind `{0}`")]
pub struct UnknownPairKind(pub String);

impl FromStr for PairKind {
    type Err = UnknownPairKind;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        PairKind::ALL
            .into_iter()
            .find(|k| k.as_str() == s)
            .ok_or_else(|| UnknownPairKind(s.into()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GeneratorSpec {
    pub ring: RingContext,
    pub seed: u64,
    pub kind: PairKind,
    pub rank_min: usize,
    pub rank_max: usize,
}

impl GeneratorSpec {
    /// Ranks span `0..=n`.
    pub fn new(ring: RingContext, seed: u64, kind: PairKind) -> Self {
        GeneratorSpec {
            ring,
            seed,
            kind,
            rank_min: 0,
            rank_max: ring.dim(),
        }
    }

    pub fn with_ranks(self, rank_min: usize, rank_max: usize) -> Self {
        GeneratorSpec {
            rank_min,
            rank_max,
            ..self
        }
    }

    fn rng(&self, index: u64) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(index);
        rng
    }

    fn validate(&self) -> Result<(), GeneratorError> {
        if !matches!(
            self.ring.kind(),
            ScalarKind::Rational | ScalarKind::GaussianRational
        ) {
            return Err(GeneratorError::Ring(RingError::UnsupportedRing {
                ring: self.ring.kind().ring_id(),
                operation: "random projector generation",
            }));
        }
        if self.rank_min > self.rank_max || self.rank_max > self.ring.dim() {
            return Err(GeneratorError::RankBounds {
                min: self.rank_min,
                max: self.rank_max,
                n: self.ring.dim(),
            });
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum GeneratorError {
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error("rank bounds {min}..={max} are not within 0..={n}")]
    RankBounds { min: usize, max: usize, n: usize },
    #[error("no full-rank sample after {0} attempts")]
    RetriesExhausted(usize),
}

fn small_scalar<R: Rng>(rng: &mut R, kind: ScalarKind, bound: i64) -> Scalar {
    match kind {
        ScalarKind::GaussianRational => {
            let mut part =
                || BigRational::from_integer(BigInt::from(rng.gen_range(-bound..=bound)));
            let re = part();
            Scalar::Gaussian(GaussianRational::new(re, part()))
        }
        _ => Scalar::from_i64(kind, rng.gen_range(-bound..=bound)),
    }
}

fn random_matrix<R: Rng>(rng: &mut R, kind: ScalarKind, rows: usize, cols: usize) -> Matrix {
    Matrix::from_fn(kind, rows, cols, |_, _| {
        small_scalar(rng, kind, ENTRY_BOUND)
    })
}

/// Orthogonal projector onto the column space of a full-column-rank `b`:
/// B(B*B)⁻¹B*.
fn column_projector(ctx: RingContext, b: &Matrix) -> Result<MatrixElement, GeneratorError> {
    if b.cols() == 0 {
        return Ok(MatrixElement::zero(ctx));
    }
    let bs = b.star();
    let gram_inv = matrix_inverse_rect(&(&bs * b)).ok_or(GeneratorError::RetriesExhausted(0))?;
    Ok(MatrixElement::new(ctx, &(b * &gram_inv) * &bs)?)
}

fn draw_rank<R: Rng>(rng: &mut R, lo: usize, hi: usize) -> usize {
    rng.gen_range(lo..=hi)
}

/// Projector of rank exactly `k` from a random full-rank n×k factor, or the
/// projector onto `(1−avoid)·B` when `avoid` is given.
fn projector_of_rank<R: Rng>(
    rng: &mut R,
    ctx: RingContext,
    k: usize,
    avoid: Option<&MatrixElement>,
) -> Result<MatrixElement, GeneratorError> {
    let kind = ctx.kind();
    for _ in 0..MAX_RETRIES {
        let mut b = random_matrix(rng, kind, ctx.dim(), k);
        if let Some(p) = avoid {
            b = p.complement().matrix() * &b;
        }
        if rank(&b)? == k {
            return column_projector(ctx, &b);
        }
    }
    Err(GeneratorError::RetriesExhausted(MAX_RETRIES))
}

fn diagonal_projector<R: Rng>(rng: &mut R, ctx: RingContext, k: usize) -> MatrixElement {
    let n = ctx.dim();
    let mut d = alloc::vec![0i64; n];
    for i in sample(rng, n, k).iter() {
        d[i] = 1;
    }
    MatrixElement::diagonal(ctx, &d)
}

/// Q = (1−S)(1+S)⁻¹ for a random S with S* = −S; Q is unitary.
fn cayley_unitary<R: Rng>(rng: &mut R, ctx: RingContext) -> Result<MatrixElement, GeneratorError> {
    let (n, kind) = (ctx.dim(), ctx.kind());
    for _ in 0..MAX_RETRIES {
        let mut s = Matrix::zeros(kind, n, n);
        for i in 0..n {
            for j in i..n {
                let x = small_scalar(rng, kind, 3);
                if i == j {
                    // x − x* is purely imaginary (zero over ℚ)
                    s.set(i, i, &x - &x.conj());
                } else {
                    s.set(j, i, -&x.conj());
                    s.set(i, j, x);
                }
            }
        }
        let s = MatrixElement::new(ctx, s)?;
        let one = MatrixElement::identity(ctx);
        if let Some(inv) = crate::linalg::matrix_inverse(&(&one + &s)) {
            return Ok(&(&one - &s) * &inv);
        }
    }
    Err(GeneratorError::RetriesExhausted(MAX_RETRIES))
}

/// Random projector P = B(B*B)⁻¹B* of rank in `[rank_min, rank_max]`.
pub fn random_projector(spec: &GeneratorSpec, index: u64) -> Result<MatrixElement, GeneratorError> {
    spec.validate()?;
    let mut rng = spec.rng(index);
    let k = draw_rank(&mut rng, spec.rank_min, spec.rank_max);
    projector_of_rank(&mut rng, spec.ring, k, None)
}

/// Random projector pair whose shape is set by `spec.kind`.
pub fn random_pair(
    spec: &GeneratorSpec,
    index: u64,
) -> Result<(MatrixElement, MatrixElement), GeneratorError> {
    spec.validate()?;
    let ctx = spec.ring;
    let n = ctx.dim();
    let mut rng = spec.rng(index);
    let (lo, hi) = (spec.rank_min, spec.rank_max);
    match spec.kind {
        PairKind::Generic => {
            let k1 = draw_rank(&mut rng, lo, hi);
            let p = projector_of_rank(&mut rng, ctx, k1, None)?;
            let k2 = draw_rank(&mut rng, lo, hi);
            Ok((p, projector_of_rank(&mut rng, ctx, k2, None)?))
        }
        PairKind::Commuting => {
            let u = cayley_unitary(&mut rng, ctx)?;
            let us = u.star();
            let k1 = draw_rank(&mut rng, lo, hi);
            let d1 = diagonal_projector(&mut rng, ctx, k1);
            let k2 = draw_rank(&mut rng, lo, hi);
            let d2 = diagonal_projector(&mut rng, ctx, k2);
            Ok((&(&u * &d1) * &us, &(&u * &d2) * &us))
        }
        PairKind::Orthogonal => {
            let k1 = draw_rank(&mut rng, lo, hi);
            let p = projector_of_rank(&mut rng, ctx, k1, None)?;
            let room = n - k1;
            let k2 = draw_rank(&mut rng, lo.min(room), hi.min(room));
            let q = projector_of_rank(&mut rng, ctx, k2, Some(&p))?;
            Ok((p, q))
        }
        PairKind::Equal => {
            let k = draw_rank(&mut rng, lo, hi);
            let p = projector_of_rank(&mut rng, ctx, k, None)?;
            Ok((p.clone(), p))
        }
        PairKind::Complement => {
            let k = draw_rank(&mut rng, lo, hi);
            let p = projector_of_rank(&mut rng, ctx, k, None)?;
            let q = p.complement();
            Ok((p, q))
        }
        PairKind::Diagonal => {
            let k1 = draw_rank(&mut rng, lo, hi);
            let p = diagonal_projector(&mut rng, ctx, k1);
            let k2 = draw_rank(&mut rng, lo, hi);
            Ok((p, diagonal_projector(&mut rng, ctx, k2)))
        }
    }
}

/// All projectors of a finite context, in lexicographic entry order.
pub fn enumerate_projectors(ctx: RingContext) -> Result<Vec<MatrixElement>, MpError> {
    Ok(all_elements(ctx, ENUMERATION_BUDGET)?
        .filter(mp::is_projector)
        .collect())
}

/// p = q = 1 in ℤ and in ℚ: p−q always has an MP-inverse, p+q = 2 only over ℚ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegerDemo {
    /// (p−q)† over ℤ.
    pub diff_dagger: Option<MatrixElement>,
    /// Whether 2 ∈ ℤ†.
    pub integer_sum_exists: bool,
    /// 2† over ℚ.
    pub rational_sum_dagger: Option<MatrixElement>,
}

impl IntegerDemo {
    pub fn report(&self) -> String {
        let show = |x: &Option<MatrixElement>| match x {
            Some(m) => format!("{}", m.get(0, 0)),
            None => String::from("none"),
        };
        let mut s = String::new();
        s.push_str("R = ℤ, p = q = 1\n");
        s.push_str(&format!(
            "  p-q = 0 {} R†, (p-q)† = {}\n",
            if self.diff_dagger.is_some() {
                "∈"
            } else {
                "∉"
            },
            show(&self.diff_dagger)
        ));
        s.push_str(&format!(
            "  p+q = 2 {} R†\n",
            if self.integer_sum_exists {
                "∈"
            } else {
                "∉"
            }
        ));
        s.push_str(&format!(
            "  p-q = 0 ∈ R†, but p+q = 2 {} R†\n",
            if self.integer_sum_exists {
                "∈"
            } else {
                "∉"
            }
        ));
        s.push_str("R = ℚ, p = q = 1\n");
        s.push_str(&format!(
            "  p+q = 2 {} R†, 2† = {}\n",
            if self.rational_sum_dagger.is_some() {
                "∈"
            } else {
                "∉"
            },
            show(&self.rational_sum_dagger)
        ));
        s
    }
}

pub fn integer_counterexample_demo() -> Result<IntegerDemo, MpError> {
    let p = MatrixElement::identity(RingContext::integer(1));
    let q = p.clone();
    let diff_dagger = mp::dagger(&(&p - &q))?;
    let integer_sum_exists = mp::mp_inverse(&(&p + &q))?.exists();
    let p = MatrixElement::identity(RingContext::rational(1));
    let q = p.clone();
    let rational_sum_dagger = mp::dagger(&(&p + &q))?;
    Ok(IntegerDemo {
        diff_dagger,
        integer_sum_exists,
        rational_sum_dagger,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn qq(rows: &[&[&str]]) -> MatrixElement {
        MatrixElement::parse(RingContext::rational(rows.len()), rows).unwrap()
    }

    #[test]
    fn projector_of_column_vector() {
        let ctx = RingContext::rational(2);
        let b = Matrix::from_rows(
            ScalarKind::Rational,
            alloc::vec![
                alloc::vec![Scalar::from_i64(ScalarKind::Rational, 1)],
                alloc::vec![Scalar::from_i64(ScalarKind::Rational, 1)],
            ],
        )
        .unwrap();
        let p = column_projector(ctx, &b).unwrap();
        assert_eq!(p, qq(&[&["1/2", "1/2"], &["1/2", "1/2"]]));
    }

    #[test]
    fn extreme_ranks() {
        let ctx = RingContext::rational(3);
        let zero = GeneratorSpec::new(ctx, 1, PairKind::Generic).with_ranks(0, 0);
        assert!(random_projector(&zero, 0).unwrap().is_zero());
        let full = GeneratorSpec::new(ctx, 1, PairKind::Generic).with_ranks(3, 3);
        assert!(random_projector(&full, 0).unwrap().is_identity());
    }

    #[test]
    fn cayley_transform_of_fixed_skew() {
        // S = [[0,1],[-1,0]]: 1+S = [[1,1],[-1,1]], (1+S)⁻¹ = [[1/2,-1/2],[1/2,1/2]]
        let ctx = RingContext::rational(2);
        let s = MatrixElement::from_i64(ctx, &[[0, 1], [-1, 0]]).unwrap();
        let one = MatrixElement::identity(ctx);
        let inv = crate::linalg::matrix_inverse(&(&one + &s)).unwrap();
        assert_eq!(inv, qq(&[&["1/2", "-1/2"], &["1/2", "1/2"]]));
        let u = &(&one - &s) * &inv;
        assert_eq!(u, qq(&[&["0", "-1"], &["1", "0"]]));
        assert!((&u.star() * &u).is_identity());
    }

    #[test]
    fn rejects_finite_rings_and_bad_ranks() {
        let spec = GeneratorSpec::new(RingContext::modular(3, 2), 0, PairKind::Generic);
        assert!(matches!(
            random_pair(&spec, 0),
            Err(GeneratorError::Ring(_))
        ));
        let spec =
            GeneratorSpec::new(RingContext::rational(2), 0, PairKind::Generic).with_ranks(1, 3);
        assert!(matches!(
            random_pair(&spec, 0),
            Err(GeneratorError::RankBounds { .. })
        ));
    }

    /// Independent count: every 2×2 matrix over Z_m filtered by P² = P = Pᵀ.
    fn count_projectors_naive(m: i64) -> usize {
        let mut count = 0;
        for a in 0..m {
            for b in 0..m {
                for c in 0..m {
                    for d in 0..m {
                        let sq = [
                            (a * a + b * c) % m,
                            (a * b + b * d) % m,
                            (c * a + d * c) % m,
                            (c * b + d * d) % m,
                        ];
                        if sq == [a, b, c, d] && b == c {
                            count += 1;
                        }
                    }
                }
            }
        }
        count
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(
            enumerate_projectors(RingContext::modular(2, 1))
                .unwrap()
                .len(),
            2
        );
        assert_eq!(
            enumerate_projectors(RingContext::modular(3, 1))
                .unwrap()
                .len(),
            2
        );
        let z2 = enumerate_projectors(RingContext::modular(2, 2)).unwrap();
        let z3 = enumerate_projectors(RingContext::modular(3, 2)).unwrap();
        assert_eq!(z2.len(), count_projectors_naive(2));
        assert_eq!(z3.len(), count_projectors_naive(3));
        assert_eq!((z2.len(), z3.len()), (4, 6));
    }

    #[test]
    fn enumeration_budget() {
        assert!(matches!(
            enumerate_projectors(RingContext::modular(2, 5)),
            Err(MpError::SearchBudgetExceeded { .. })
        ));
        assert!(enumerate_projectors(RingContext::rational(2)).is_err());
    }

    #[test]
    fn demo_values() {
        let d = integer_counterexample_demo().unwrap();
        assert!(d.diff_dagger.as_ref().unwrap().is_zero());
        assert!(!d.integer_sum_exists);
        assert_eq!(d.rational_sum_dagger, Some(qq(&[&["1/2"]])));
        let text = d.report();
        assert!(text.contains("p+q = 2 ∉ R†"));
        assert!(text.contains("2† = 1/2"));
    }

    fn kind_strategy() -> impl Strategy<Value = PairKind> {
        prop::sample::select(PairKind::ALL.to_vec())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn pairs_satisfy_their_kind(
            seed in any::<u64>(),
            index in 0u64..1000,
            n in 1usize..4,
            gaussian in any::<bool>(),
            kind in kind_strategy(),
        ) {
            let ctx = if gaussian { RingContext::gaussian(n) } else { RingContext::rational(n) };
            let spec = GeneratorSpec::new(ctx, seed, kind);
            let (p, q) = random_pair(&spec, index).unwrap();
            prop_assert!(mp::is_projector(&p) && mp::is_projector(&q));
            match kind {
                PairKind::Commuting | PairKind::Diagonal => prop_assert!(p.commutes_with(&q)),
                PairKind::Orthogonal => {
                    prop_assert!((&p * &q).is_zero() && (&q * &p).is_zero());
                }
                PairKind::Equal => prop_assert_eq!(&p, &q),
                PairKind::Complement => prop_assert!((&p + &q).is_identity()),
                PairKind::Generic => {}
            }
            // determinism in (seed, index)
            prop_assert_eq!(random_pair(&spec, index).unwrap(), (p, q));
        }

        #[test]
        fn projector_rank_within_bounds(seed in any::<u64>(), n in 1usize..5, lo in 0usize..5, span in 0usize..5) {
            let lo = lo.min(n);
            let hi = (lo + span).min(n);
            let spec = GeneratorSpec::new(RingContext::rational(n), seed, PairKind::Generic)
                .with_ranks(lo, hi);
            let p = random_projector(&spec, 7).unwrap();
            prop_assert!(mp::is_projector(&p));
            let r = rank(p.matrix()).unwrap();
            prop_assert!(lo <= r && r <= hi);
        }
    }
}
