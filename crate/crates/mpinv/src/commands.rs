//! The CLI commands as functions from arguments to (output, exit code).

use std::path::Path;

use mpinv_core::generators::integer_counterexample_demo;
use mpinv_core::toolkit::{run_statement, StatementId};
use mpinv_core::{mp_inverse, RingContext, ScalarKind};
use serde::Serialize;

use crate::fuzz::{run_fuzz, FuzzConfig};
use crate::json::{read_json, MatrixFile, PairFile};
use crate::oracle::run_oracle;
use crate::report::{render_matrix, Outcome, PenroseJson, Status};

pub const EXIT_OK: u8 = 0;
pub const EXIT_NEGATIVE: u8 = 1;
pub const EXIT_INPUT: u8 = 2;
pub const EXIT_FALSIFIED: u8 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug)]
pub struct CommandOutput {
    pub stdout: String,
    pub stderr: String,
    pub code: u8,
}

impl CommandOutput {
    fn ok(stdout: String, code: u8) -> Self {
        CommandOutput {
            stdout,
            stderr: String::new(),
            code,
        }
    }

    fn input_error(msg: impl std::fmt::Display) -> Self {
        CommandOutput {
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
            code: EXIT_INPUT,
        }
    }
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("report types serialize");
    s.push('\n');
    s
}

/// `all` or a comma-separated list of statement ids.
pub fn parse_statements(sel: &str) -> Result<Vec<StatementId>, String> {
    if sel == "all" {
        return Ok(StatementId::ALL.to_vec());
    }
    sel.split(',')
        .map(|s| s.trim().parse().map_err(|e| format!("{e}")))
        .collect()
}

pub fn parse_context(ring: &str, dim: usize) -> Result<RingContext, String> {
    let kind = ScalarKind::from_ring_id(ring).map_err(|e| e.to_string())?;
    RingContext::new(kind, dim).map_err(|e| e.to_string())
}

#[derive(Serialize)]
struct MpJson {
    ring: String,
    n: usize,
    exists: bool,
    method: &'static str,
    inverse: Option<MatrixFile>,
    penrose: Option<PenroseJson>,
}

pub fn cmd_mp(input: &Path, ring: Option<&str>, format: Format) -> CommandOutput {
    let file: MatrixFile = match read_json(input) {
        Ok(f) => f,
        Err(e) => return CommandOutput::input_error(e),
    };
    if let Some(r) = ring {
        if r != file.ring {
            return CommandOutput::input_error(format!(
                "--ring {r} does not match the file's ring {}",
                file.ring
            ));
        }
    }
    let a = match file.to_element() {
        Ok(a) => a,
        Err(e) => return CommandOutput::input_error(e),
    };
    let r = match mp_inverse(&a) {
        Ok(r) => r,
        Err(e) => return CommandOutput::input_error(e),
    };
    let code = if r.exists() { EXIT_OK } else { EXIT_NEGATIVE };
    let out = MpJson {
        ring: file.ring.clone(),
        n: file.n,
        exists: r.exists(),
        method: r.method().as_str(),
        inverse: r.inverse().map(MatrixFile::from_element),
        penrose: r.report().map(PenroseJson::from),
    };
    let stdout = match format {
        Format::Json => to_json(&out),
        Format::Text => match (&out.inverse, &out.penrose) {
            (Some(inv), Some(p)) => format!(
                "inverse: {}\nmethod: {}\npenrose: aba=a {}, bab=b {}, (ab)*=ab {}, (ba)*=ba {}\n",
                render_matrix(inv),
                out.method,
                p.aba,
                p.bab,
                p.ab_self_adjoint,
                p.ba_self_adjoint
            ),
            _ => format!("no MP-inverse ({})\n", out.method),
        },
    };
    CommandOutput::ok(stdout, code)
}

pub fn cmd_check(statement: &str, input: &Path, format: Format) -> CommandOutput {
    let ids = match parse_statements(statement) {
        Ok(ids) => ids,
        Err(e) => return CommandOutput::input_error(e),
    };
    let pair: PairFile = match read_json(input) {
        Ok(f) => f,
        Err(e) => return CommandOutput::input_error(e),
    };
    let inputs = match pair.to_inputs() {
        Ok(i) => i,
        Err(e) => return CommandOutput::input_error(e),
    };
    let outcomes: Vec<Outcome> = ids
        .iter()
        .map(|&id| Outcome::from_result(id, &run_statement(id, &inputs)))
        .collect();
    let worst = outcomes
        .iter()
        .map(|o| o.status)
        .max()
        .unwrap_or(Status::Verified);
    let stdout = match format {
        Format::Json => to_json(&outcomes),
        Format::Text => outcomes.iter().map(Outcome::render_text).collect(),
    };
    CommandOutput::ok(stdout, worst.exit_code())
}

pub fn cmd_fuzz(cfg: &FuzzConfig, format: Format) -> CommandOutput {
    match run_fuzz(cfg) {
        Ok(s) => {
            let code = if s.passed() { EXIT_OK } else { EXIT_FALSIFIED };
            let stdout = match format {
                Format::Json => to_json(&s),
                Format::Text => crate::fuzz::render_text(&s),
            };
            CommandOutput::ok(stdout, code)
        }
        Err(e) => CommandOutput::input_error(e),
    }
}

pub fn cmd_oracle(ctx: RingContext, statements: &[StatementId], format: Format) -> CommandOutput {
    match run_oracle(ctx, statements) {
        Ok(s) => {
            let code = if s.passed() { EXIT_OK } else { EXIT_FALSIFIED };
            let stdout = match format {
                Format::Json => to_json(&s),
                Format::Text => crate::oracle::render_text(&s),
            };
            CommandOutput::ok(stdout, code)
        }
        Err(e) => CommandOutput::input_error(e),
    }
}

#[derive(Serialize)]
struct DemoJson {
    integer_diff_dagger: Option<String>,
    integer_sum_exists: bool,
    rational_sum_dagger: Option<String>,
    report: String,
}

pub fn cmd_demo(format: Format) -> CommandOutput {
    let d = match integer_counterexample_demo() {
        Ok(d) => d,
        Err(e) => return CommandOutput::input_error(e),
    };
    let stdout = match format {
        Format::Text => d.report(),
        Format::Json => {
            let entry =
                |m: &Option<mpinv_core::MatrixElement>| m.as_ref().map(|m| m.get(0, 0).to_string());
            to_json(&DemoJson {
                integer_diff_dagger: entry(&d.diff_dagger),
                integer_sum_exists: d.integer_sum_exists,
                rational_sum_dagger: entry(&d.rational_sum_dagger),
                report: d.report(),
            })
        }
    };
    CommandOutput::ok(stdout, EXIT_OK)
}
