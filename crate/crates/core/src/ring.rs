use alloc::string::String;
use core::fmt;

use crate::scalar::{ParseScalarError, ScalarKind};

/// How `a ↦ a*` acts on matrices of a context.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Involution {
    Transpose,
    ConjugateTranspose,
}

/// The ambient *-ring: n×n matrices over one scalar kind.
///
/// The involution is fixed by the scalar kind, so there is no way to build a
/// context with a mismatched involution.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RingContext {
    kind: ScalarKind,
    n: usize,
}

impl RingContext {
    pub fn new(kind: ScalarKind, n: usize) -> Result<Self, RingError> {
        if n == 0 {
            return Err(RingError::ZeroDimension);
        }
        if let ScalarKind::ModInt(m) = kind {
            if m < 2 {
                return Err(RingError::Parse(ParseScalarError::BadModulus(m)));
            }
        }
        Ok(RingContext { kind, n })
    }

    pub fn rational(n: usize) -> Self {
        RingContext::new(ScalarKind::Rational, n).expect("n >= 1")
    }

    pub fn gaussian(n: usize) -> Self {
        RingContext::new(ScalarKind::GaussianRational, n).expect("n >= 1")
    }

    pub fn modular(m: u64, n: usize) -> Self {
        RingContext::new(ScalarKind::ModInt(m), n).expect("m >= 2 and n >= 1")
    }

    pub fn integer(n: usize) -> Self {
        RingContext::new(ScalarKind::Integer, n).expect("n >= 1")
    }

    pub fn kind(&self) -> ScalarKind {
        self.kind
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn involution(&self) -> Involution {
        match self.kind {
            ScalarKind::GaussianRational => Involution::ConjugateTranspose,
            _ => Involution::Transpose,
        }
    }

    pub fn is_finite(&self) -> bool {
        self.kind.is_finite()
    }

    pub fn modulus(&self) -> Option<u64> {
        self.kind.modulus()
    }

    /// Number of elements of the ring, `m^(n²)`, when finite and representable.
    pub fn cardinality(&self) -> Option<u128> {
        let m = self.modulus()? as u128;
        let exp = u32::try_from(self.n * self.n).ok()?;
        m.checked_pow(exp)
    }
}

impl fmt::Display for RingContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "M_{}({})", self.n, self.kind)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum RingError {
    #[error("ring context mismatch: {left} vs {right}")]
    ContextMismatch {
        left: RingContext,
        right: RingContext,
    },
    #[error("matrix dimension must be at least 1")]
    ZeroDimension,
    #[error("expected a {expected}×{expected} matrix, got {rows}×{cols}")]
    Shape {
        expected: usize,
        rows: usize,
        cols: usize,
    },
    #[error("entry of kind {found} in a matrix over {expected}")]
    EntryKind {
        expected: ScalarKind,
        found: ScalarKind,
    },
    #[error("{operation} is not supported over {ring}")]
    UnsupportedRing {
        ring: String,
        operation: &'static str,
    },
    #[error("missing right-hand operand for a binary operation")]
    MissingOperand,
    #[error(transparent)]
    Parse(#[from] ParseScalarError),
}
