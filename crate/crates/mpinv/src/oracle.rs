//! Exhaustive verification over all projector pairs of a finite ring.
//!
//! Every certificate a statement returns is compared with the MP-inverse
//! found by brute-force search over the whole ring.

use std::collections::{BTreeMap, HashMap};

use mpinv_core::generators::enumerate_projectors;
use mpinv_core::toolkit::{
    existence_chain, run_statement, CheckError, DifferenceFormulas, StatementId, StatementInputs,
};
use mpinv_core::{mp_inverse_brute, MatrixElement, MpError, RingContext};
use serde::Serialize;

use crate::json::MatrixFile;
use crate::report::{witness_json, Named};

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct OracleTally {
    pub verified: u64,
    pub skipped: u64,
    pub mismatches: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub statement: String,
    pub reason: String,
    pub p: MatrixFile,
    pub q: MatrixFile,
    pub witness: Vec<Named>,
}

/// A formula evaluated although its cancellability hypothesis failed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Observation {
    pub formula: String,
    pub holds: bool,
    pub p: MatrixFile,
    pub q: MatrixFile,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ChainTally {
    /// Pairs with p(1−q) and q(1−p) both *-cancellable.
    pub checked: u64,
    pub agreed: u64,
    /// Pairs outside the hypotheses where the ten conditions still agree.
    pub unconstrained_agreed: u64,
    pub unconstrained_disagreed: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleSummary {
    pub ring: String,
    pub dim: usize,
    pub projectors: usize,
    pub pairs: usize,
    pub certificates_checked: u64,
    pub statements: BTreeMap<String, OracleTally>,
    pub chain: ChainTally,
    pub observations: Vec<Observation>,
    pub mismatches: Vec<Mismatch>,
}

impl OracleSummary {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

struct BruteCache(HashMap<MatrixElement, Option<MatrixElement>>);

impl BruteCache {
    fn get(&mut self, a: &MatrixElement) -> Result<Option<MatrixElement>, MpError> {
        if let Some(v) = self.0.get(a) {
            return Ok(v.clone());
        }
        let v = mp_inverse_brute(a)?.into_inverse();
        self.0.insert(a.clone(), v.clone());
        Ok(v)
    }
}

pub fn run_oracle(ctx: RingContext, statements: &[StatementId]) -> Result<OracleSummary, MpError> {
    let ps = enumerate_projectors(ctx)?;
    let mut cache = BruteCache(HashMap::new());
    let mut s = OracleSummary {
        ring: ctx.kind().ring_id(),
        dim: ctx.dim(),
        projectors: ps.len(),
        pairs: ps.len() * ps.len(),
        certificates_checked: 0,
        statements: statements
            .iter()
            .map(|id| (id.to_string(), OracleTally::default()))
            .collect(),
        chain: ChainTally::default(),
        observations: Vec::new(),
        mismatches: Vec::new(),
    };
    for p in &ps {
        for q in &ps {
            let mismatch = |statement: &str, reason: String, witness: Vec<Named>| Mismatch {
                statement: statement.into(),
                reason,
                p: MatrixFile::from_element(p),
                q: MatrixFile::from_element(q),
                witness,
            };
            match existence_chain(p, q) {
                Ok(c) if c.hypotheses_hold() => {
                    s.chain.checked += 1;
                    s.chain.agreed += u64::from(c.verdict);
                }
                Ok(c) if c.verdict => s.chain.unconstrained_agreed += 1,
                Ok(_) => s.chain.unconstrained_disagreed += 1,
                Err(CheckError::Mp(e)) => return Err(e),
                Err(e) => {
                    s.mismatches
                        .push(mismatch("prop-ten-equivalences", e.to_string(), Vec::new()))
                }
            }

            let inputs = StatementInputs::pair(p.clone(), q.clone());
            for &id in statements {
                let tally = s.statements.get_mut(id.as_str()).expect("known id");
                match run_statement(id, &inputs) {
                    Ok(report) => {
                        let mut ok = true;
                        for c in &report.certificates {
                            s.certificates_checked += 1;
                            let brute = cache.get(&c.target)?;
                            if brute.as_ref() != Some(&c.inverse) {
                                ok = false;
                                let mut w = crate::report::named([
                                    ("target", &c.target),
                                    ("formula", &c.inverse),
                                ]);
                                if let Some(b) = &brute {
                                    w.extend(crate::report::named([("brute force", b)]));
                                }
                                s.mismatches.push(mismatch(
                                    id.as_str(),
                                    format!("`{}` disagrees with brute-force search", c.label),
                                    w,
                                ));
                            }
                        }
                        if id == StatementId::ThmFiveFormulas {
                            for &(label, holds) in &report.flags {
                                if DifferenceFormulas::LABELS.contains(&label) {
                                    s.observations.push(Observation {
                                        formula: label.into(),
                                        holds,
                                        p: MatrixFile::from_element(p),
                                        q: MatrixFile::from_element(q),
                                    });
                                }
                            }
                        }
                        if ok {
                            tally.verified += 1;
                        } else {
                            tally.mismatches += 1;
                        }
                    }
                    Err(CheckError::Hypothesis(_)) => tally.skipped += 1,
                    Err(CheckError::Mp(e)) => return Err(e),
                    Err(CheckError::Falsified(f)) => {
                        tally.mismatches += 1;
                        s.mismatches.push(mismatch(
                            id.as_str(),
                            format!("claim `{}` is false", f.claim),
                            witness_json(&f.witness),
                        ));
                    }
                }
            }
        }
    }
    Ok(s)
}

pub fn render_text(s: &OracleSummary) -> String {
    let mut out = format!(
        "oracle over M_{}({}): {} projectors, {} pairs, {} certificates checked against brute force\n",
        s.dim, s.ring, s.projectors, s.pairs, s.certificates_checked
    );
    for (id, t) in &s.statements {
        out += &format!(
            "  {id:<26} verified {:>6}  skipped {:>6}  mismatches {:>3}\n",
            t.verified, t.skipped, t.mismatches
        );
    }
    out += &format!(
        "ten-condition chain: {}/{} agree under the hypotheses; outside them {} agree, {} disagree\n",
        s.chain.agreed,
        s.chain.checked,
        s.chain.unconstrained_agreed,
        s.chain.unconstrained_disagreed
    );
    let held = s.observations.iter().filter(|o| o.holds).count();
    out += &format!(
        "five-formula observations without cancellability: {} evaluated, {} still hold\n",
        s.observations.len(),
        held
    );
    for m in &s.mismatches {
        out += &format!(
            "MISMATCH {}: {}\n  p = {}\n  q = {}\n",
            m.statement,
            m.reason,
            crate::report::render_matrix(&m.p),
            crate::report::render_matrix(&m.q)
        );
    }
    out += &format!("{} mismatches\n", s.mismatches.len());
    out
}
