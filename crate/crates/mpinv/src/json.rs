//! Matrix and pair file formats.
//!
//! A matrix file is `{"ring": "QQ", "n": 2, "matrix": [["1/2", "0"], ["0", "1"]]}`.
//! Entries are strings in the ring's canonical syntax, so a file written by
//! [`MatrixFile::from_element`] parses back to the identical element.

use std::path::Path;

use mpinv_core::{MatrixElement, RingContext, RingError, ScalarKind};
use serde::{Deserialize, Serialize};

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error("`{field}` uses ring {found}, expected {expected}")]
    RingMismatch {
        field: &'static str,
        expected: String,
        found: String,
    },
}

impl From<mpinv_core::ParseScalarError> for FormatError {
    fn from(e: mpinv_core::ParseScalarError) -> Self {
        FormatError::Ring(RingError::Parse(e))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixFile {
    pub ring: String,
    pub n: usize,
    pub matrix: Vec<Vec<String>>,
}

impl MatrixFile {
    pub fn from_element(a: &MatrixElement) -> Self {
        let n = a.dim();
        MatrixFile {
            ring: a.ctx().kind().ring_id(),
            n,
            matrix: (0..n)
                .map(|i| (0..n).map(|j| a.get(i, j).to_string()).collect())
                .collect(),
        }
    }

    pub fn context(&self) -> Result<RingContext, FormatError> {
        let kind = ScalarKind::from_ring_id(&self.ring)?;
        Ok(RingContext::new(kind, self.n)?)
    }

    pub fn to_element(&self) -> Result<MatrixElement, FormatError> {
        Ok(MatrixElement::parse(self.context()?, &self.matrix)?)
    }
}

/// `{"p": …, "q": …}` with optional `"a"`, `"b"`, `"d"`, all in one ring.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PairFile {
    pub p: MatrixFile,
    pub q: MatrixFile,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub a: Option<MatrixFile>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub b: Option<MatrixFile>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d: Option<MatrixFile>,
}

impl PairFile {
    pub fn to_inputs(&self) -> Result<mpinv_core::toolkit::StatementInputs, FormatError> {
        let p = self.p.to_element()?;
        let ctx = p.ctx();
        let load = |field: &'static str, f: &MatrixFile| {
            let e = f.to_element()?;
            if e.ctx() != ctx {
                return Err(FormatError::RingMismatch {
                    field,
                    expected: ctx.to_string(),
                    found: e.ctx().to_string(),
                });
            }
            Ok(e)
        };
        let opt = |field, f: &Option<MatrixFile>| f.as_ref().map(|f| load(field, f)).transpose();
        Ok(mpinv_core::toolkit::StatementInputs {
            q: load("q", &self.q)?,
            a: opt("a", &self.a)?,
            b: opt("b", &self.b)?,
            d: opt("d", &self.d)?,
            p,
        })
    }
}

pub fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T, FormatError> {
    let text = std::fs::read_to_string(path).map_err(|source| FormatError::Io {
        path: path.display().to_string(),
        source,
    })?;
    Ok(serde_json::from_str(&text)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_every_ring() {
        let files = [
            r#"{"ring":"QQ","n":2,"matrix":[["1/2","-3"],["0","7/5"]]}"#,
            r#"{"ring":"QI","n":2,"matrix":[["i","1/2-i"],["-2/3+1/4i","0"]]}"#,
            r#"{"ring":"Zm:6","n":1,"matrix":[["5"]]}"#,
            r#"{"ring":"ZZ","n":1,"matrix":[["-12"]]}"#,
        ];
        for text in files {
            let f: MatrixFile = serde_json::from_str(text).unwrap();
            let e = f.to_element().unwrap();
            let back = MatrixFile::from_element(&e);
            assert_eq!(back, f);
            assert_eq!(serde_json::to_string(&back).unwrap(), text);
        }
    }

    #[test]
    fn rejects_bad_input() {
        for text in [
            r#"{"ring":"RR","n":1,"matrix":[["1"]]}"#,
            r#"{"ring":"QQ","n":2,"matrix":[["1"]]}"#,
            r#"{"ring":"Zm:3","n":1,"matrix":[["3"]]}"#,
            r#"{"ring":"QQ","n":1,"matrix":[["1/0"]]}"#,
        ] {
            let f: MatrixFile = serde_json::from_str(text).unwrap();
            assert!(f.to_element().is_err(), "{text}");
        }
        assert!(serde_json::from_str::<MatrixFile>(r#"{"ring":"QQ","n":1}"#).is_err());
    }

    #[test]
    fn pair_requires_one_ring() {
        let text = r#"{"p":{"ring":"QQ","n":1,"matrix":[["1"]]},"q":{"ring":"Zm:2","n":1,"matrix":[["1"]]}}"#;
        let f: PairFile = serde_json::from_str(text).unwrap();
        assert!(matches!(
            f.to_inputs(),
            Err(FormatError::RingMismatch { field: "q", .. })
        ));
    }
}
