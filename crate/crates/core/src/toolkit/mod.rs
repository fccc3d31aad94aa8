//! One executable check per identity on projectors.
//!
//! Every operation first checks the hypotheses of its statement. A failed
//! hypothesis is reported as [`CheckError::Hypothesis`] and nothing is
//! asserted. Once the hypotheses hold, the claimed MP-inverse is built from
//! its formula and certified with all four Penrose equations; any mismatch
//! is a [`CheckError::Falsified`].

mod dispatch;
mod existence;
mod fgh;
mod formulas;
mod lemmas;

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::matrix::MatrixElement;
use crate::mp::{self, penrose_check, MpError};
use crate::ring::RingError;

pub use dispatch::{run_statement, Certificate, StatementInputs, StatementReport};
pub use existence::{
    difference_equivalence_triple, existence_chain, ChainLink, DifferenceTriple,
    ExistenceChainReport, TEN_CONDITIONS,
};
pub use fgh::{
    commuting_sum_mp, fgh_decomposition, sum_mp_via_difference, CommutingSum, FghRelations,
    FghTriple,
};
pub use formulas::{
    difference_formula_suite, difference_from_products, product_mp_via_complement,
    self_inverse_characterization, ComplementProduct, DifferenceFormulas, FormulaOutcome,
    SelfInverse,
};
pub use lemmas::{commuting_product_mp, intertwine_transfer, orthogonal_sum_mp, pencil_mp};

/// Stable identifiers of the checked statements.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum StatementId {
    LemmaIntertwine,
    LemmaCommutingProduct,
    LemmaOrthogonalSum,
    ThmPencil,
    PropTenEquivalences,
    ThmDiffTriple,
    ThmFgh,
    CorFghRelations,
    CorFghRecompose,
    ThmSumViaDiff,
    ThmCommutingSum,
    ThmFiveFormulas,
    CorDiffFromProducts,
    ThmSelfInverse,
    ThmComplementProduct,
}

impl StatementId {
    pub const ALL: [StatementId; 15] = [
        StatementId::LemmaIntertwine,
        StatementId::LemmaCommutingProduct,
        StatementId::LemmaOrthogonalSum,
        StatementId::ThmPencil,
        StatementId::PropTenEquivalences,
        StatementId::ThmDiffTriple,
        StatementId::ThmFgh,
        StatementId::CorFghRelations,
        StatementId::CorFghRecompose,
        StatementId::ThmSumViaDiff,
        StatementId::ThmCommutingSum,
        StatementId::ThmFiveFormulas,
        StatementId::CorDiffFromProducts,
        StatementId::ThmSelfInverse,
        StatementId::ThmComplementProduct,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            StatementId::LemmaIntertwine => "lemma-intertwine",
            StatementId::LemmaCommutingProduct => "lemma-commuting-product",
            StatementId::LemmaOrthogonalSum => "lemma-orthogonal-sum",
            StatementId::ThmPencil => "thm-pencil",
            StatementId::PropTenEquivalences => "prop-ten-equivalences",
            StatementId::ThmDiffTriple => "thm-diff-triple",
            StatementId::ThmFgh => "thm-fgh",
            StatementId::CorFghRelations => "cor-fgh-relations",
            StatementId::CorFghRecompose => "cor-fgh-recompose",
            StatementId::ThmSumViaDiff => "thm-sum-via-diff",
            StatementId::ThmCommutingSum => "thm-commuting-sum",
            StatementId::ThmFiveFormulas => "thm-five-formulas",
            StatementId::CorDiffFromProducts => "cor-diff-from-products",
            StatementId::ThmSelfInverse => "thm-self-inverse",
            StatementId::ThmComplementProduct => "thm-complement-product",
        }
    }
}

impl fmt::Display for StatementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("unknown statement id `{0}`")]
pub struct UnknownStatement(pub String);

impl FromStr for StatementId {
    type Err = UnknownStatement;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        StatementId::ALL
            .into_iter()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| UnknownStatement(s.to_string()))
    }
}

/// Named elements attached to a report.
pub type Witness = Vec<(String, MatrixElement)>;

/// A hypothesis of the statement does not hold; the statement was skipped.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HypothesisViolation {
    pub statement: StatementId,
    pub hypothesis: &'static str,
    pub witness: Witness,
}

/// The hypotheses held but a claimed identity failed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Falsification {
    pub statement: StatementId,
    pub claim: String,
    pub witness: Witness,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum CheckError {
    #[error("{}: hypothesis `{}` does not hold", .0.statement, .0.hypothesis)]
    Hypothesis(HypothesisViolation),
    #[error("{}: claim `{}` is false", .0.statement, .0.claim)]
    Falsified(Falsification),
    #[error(transparent)]
    Mp(#[from] MpError),
}

impl From<RingError> for CheckError {
    fn from(e: RingError) -> Self {
        CheckError::Mp(MpError::Ring(e))
    }
}

pub(crate) fn witness(items: &[(&str, &MatrixElement)]) -> Witness {
    items
        .iter()
        .map(|(k, v)| (k.to_string(), (*v).clone()))
        .collect()
}

/// Hypothesis and claim helpers bound to one statement.
#[derive(Clone, Copy)]
pub(crate) struct Gate(pub StatementId);

impl Gate {
    pub fn same_ring(&self, elems: &[&MatrixElement]) -> Result<(), CheckError> {
        if let Some((first, rest)) = elems.split_first() {
            for e in rest {
                first.same_ring(e)?;
            }
        }
        Ok(())
    }

    pub fn require(
        &self,
        holds: bool,
        hypothesis: &'static str,
        w: &[(&str, &MatrixElement)],
    ) -> Result<(), CheckError> {
        if holds {
            Ok(())
        } else {
            Err(CheckError::Hypothesis(HypothesisViolation {
                statement: self.0,
                hypothesis,
                witness: witness(w),
            }))
        }
    }

    pub fn projector(&self, name: &'static str, p: &MatrixElement) -> Result<(), CheckError> {
        self.require(mp::is_projector(p), name, &[("element", p)])
    }

    /// `a†`, or a hypothesis violation naming `hypothesis`.
    pub fn dagger(
        &self,
        hypothesis: &'static str,
        a: &MatrixElement,
    ) -> Result<MatrixElement, CheckError> {
        match mp::dagger(a)? {
            Some(x) => Ok(x),
            None => Err(CheckError::Hypothesis(HypothesisViolation {
                statement: self.0,
                hypothesis,
                witness: witness(&[("element", a)]),
            })),
        }
    }

    pub fn cancellable(
        &self,
        hypothesis: &'static str,
        a: &MatrixElement,
    ) -> Result<(), CheckError> {
        let ok = mp::is_star_cancellable(a)?;
        self.require(ok, hypothesis, &[("element", a)])
    }

    pub fn falsified(&self, claim: impl Into<String>, w: Witness) -> CheckError {
        CheckError::Falsified(Falsification {
            statement: self.0,
            claim: claim.into(),
            witness: w,
        })
    }

    pub fn claim_eq(
        &self,
        claim: &'static str,
        lhs: &MatrixElement,
        rhs: &MatrixElement,
    ) -> Result<(), CheckError> {
        if lhs == rhs {
            Ok(())
        } else {
            Err(self.falsified(claim, witness(&[("lhs", lhs), ("rhs", rhs)])))
        }
    }

    pub fn claim(
        &self,
        holds: bool,
        claim: &'static str,
        w: &[(&str, &MatrixElement)],
    ) -> Result<(), CheckError> {
        if holds {
            Ok(())
        } else {
            Err(self.falsified(claim, witness(w)))
        }
    }

    /// Checks `candidate` against all four Penrose equations for `target`.
    pub fn certify(
        &self,
        claim: &'static str,
        target: &MatrixElement,
        candidate: MatrixElement,
    ) -> Result<MatrixElement, CheckError> {
        let report = penrose_check(target, &candidate)?;
        if report.overall {
            return Ok(candidate);
        }
        let mut w = witness(&[("target", target), ("candidate", &candidate)]);
        if let Some(pw) = report.witness {
            let eq = pw.equation.as_str();
            w.push((alloc::format!("{eq} lhs"), pw.lhs));
            w.push((alloc::format!("{eq} rhs"), pw.rhs));
        }
        Err(self.falsified(claim, w))
    }
}


#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn statement_ids_round_trip() {
        for id in StatementId::ALL {
            assert_eq!(id.as_str().parse::<StatementId>().unwrap(), id);
        }
        assert!("thm-nope".parse::<StatementId>().is_err());
    }
}
