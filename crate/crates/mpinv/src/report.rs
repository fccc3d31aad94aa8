//! Serializable views of toolkit results.

use mpinv_core::toolkit::{CheckError, StatementId, StatementReport, Witness};
use mpinv_core::{MatrixElement, PenroseReport};
use serde::Serialize;

use crate::json::MatrixFile;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Verified,
    Skipped,
    Error,
    Falsified,
}

impl Status {
    /// 0 verified, 1 skipped, 2 error, 3 falsified.
    pub fn exit_code(self) -> u8 {
        match self {
            Status::Verified => 0,
            Status::Skipped => 1,
            Status::Error => 2,
            Status::Falsified => 3,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Named {
    pub name: String,
    pub value: MatrixFile,
}

pub fn named<'a, S: Into<String>>(
    items: impl IntoIterator<Item = (S, &'a MatrixElement)>,
) -> Vec<Named> {
    items
        .into_iter()
        .map(|(k, v)| Named {
            name: k.into(),
            value: MatrixFile::from_element(v),
        })
        .collect()
}

pub fn witness_json(w: &Witness) -> Vec<Named> {
    named(w.iter().map(|(k, v)| (k.clone(), v)))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CertificateJson {
    pub label: String,
    pub target: MatrixFile,
    pub inverse: MatrixFile,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FlagJson {
    pub name: String,
    pub value: bool,
}

/// Outcome of one statement on one input.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Outcome {
    pub statement: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub certificates: Vec<CertificateJson>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub values: Vec<Named>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub flags: Vec<FlagJson>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub witness: Vec<Named>,
}

impl Outcome {
    fn bare(statement: StatementId, status: Status, detail: Option<String>) -> Self {
        Outcome {
            statement: statement.to_string(),
            status,
            detail,
            certificates: Vec::new(),
            values: Vec::new(),
            flags: Vec::new(),
            witness: Vec::new(),
        }
    }

    pub fn from_result(id: StatementId, r: &Result<StatementReport, CheckError>) -> Self {
        match r {
            Ok(rep) => Outcome {
                certificates: rep
                    .certificates
                    .iter()
                    .map(|c| CertificateJson {
                        label: c.label.into(),
                        target: MatrixFile::from_element(&c.target),
                        inverse: MatrixFile::from_element(&c.inverse),
                    })
                    .collect(),
                values: named(rep.values.iter().map(|(k, v)| (*k, v))),
                flags: rep
                    .flags
                    .iter()
                    .map(|&(k, v)| FlagJson {
                        name: k.into(),
                        value: v,
                    })
                    .collect(),
                ..Outcome::bare(id, Status::Verified, None)
            },
            Err(CheckError::Hypothesis(h)) => Outcome {
                witness: witness_json(&h.witness),
                ..Outcome::bare(
                    id,
                    Status::Skipped,
                    Some(format!("hypothesis `{}` does not hold", h.hypothesis)),
                )
            },
            Err(CheckError::Falsified(f)) => Outcome {
                witness: witness_json(&f.witness),
                ..Outcome::bare(
                    id,
                    Status::Falsified,
                    Some(format!("claim `{}` is false", f.claim)),
                )
            },
            Err(e @ CheckError::Mp(_)) => Outcome::bare(id, Status::Error, Some(e.to_string())),
        }
    }

    pub fn render_text(&self) -> String {
        let mut s = format!("{}: {}", self.statement, status_word(self.status));
        if let Some(d) = &self.detail {
            s += &format!(" ({d})");
        }
        s.push('\n');
        for c in &self.certificates {
            s += &format!("  {} = {}\n", c.label, render_matrix(&c.inverse));
        }
        for v in &self.values {
            s += &format!("  {} = {}\n", v.name, render_matrix(&v.value));
        }
        for f in &self.flags {
            s += &format!("  {}: {}\n", f.name, f.value);
        }
        for w in &self.witness {
            s += &format!("  witness {} = {}\n", w.name, render_matrix(&w.value));
        }
        s
    }
}

fn status_word(s: Status) -> &'static str {
    match s {
        Status::Verified => "verified",
        Status::Skipped => "skipped",
        Status::Error => "error",
        Status::Falsified => "FALSIFIED",
    }
}

pub fn render_matrix(m: &MatrixFile) -> String {
    let rows: Vec<String> = m
        .matrix
        .iter()
        .map(|r| format!("[{}]", r.join(", ")))
        .collect();
    format!("[{}]", rows.join(", "))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PenroseJson {
    pub aba: bool,
    pub bab: bool,
    pub ab_self_adjoint: bool,
    pub ba_self_adjoint: bool,
    pub overall: bool,
}

impl From<&PenroseReport> for PenroseJson {
    fn from(r: &PenroseReport) -> Self {
        PenroseJson {
            aba: r.eq1_aba,
            bab: r.eq2_bab,
            ab_self_adjoint: r.eq3_ab_sym,
            ba_self_adjoint: r.eq4_ba_sym,
            overall: r.overall,
        }
    }
}
