//! Seeded fuzzing of every statement over generated projector pairs.

use std::collections::BTreeMap;
use std::thread;

use mpinv_core::generators::{random_pair, GeneratorError, GeneratorSpec, PairKind};
use mpinv_core::toolkit::{run_statement, CheckError, StatementId, StatementInputs};
use mpinv_core::{penrose_check, MatrixElement, RingContext};
use serde::Serialize;

use crate::json::MatrixFile;
use crate::report::{witness_json, Named};

#[derive(Clone, Debug)]
pub struct FuzzConfig {
    pub ring: RingContext,
    pub seed: u64,
    pub trials: u64,
    pub statements: Vec<StatementId>,
    /// Harness self-test: negate every inverse this statement returns before
    /// re-verifying it.
    pub corrupt: Option<StatementId>,
    pub threads: usize,
}

impl FuzzConfig {
    pub fn new(ring: RingContext, seed: u64, trials: u64) -> Self {
        FuzzConfig {
            ring,
            seed,
            trials,
            statements: StatementId::ALL.to_vec(),
            corrupt: None,
            threads: thread::available_parallelism().map_or(1, |n| n.get()),
        }
    }
}

/// 40% generic, 20% commuting, 20% orthogonal, 10% equal, 10% complement.
pub fn kind_for_trial(index: u64) -> PairKind {
    match index % 10 {
        0..=3 => PairKind::Generic,
        4 | 5 => PairKind::Commuting,
        6 | 7 => PairKind::Orthogonal,
        8 => PairKind::Equal,
        _ => PairKind::Complement,
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub runs: u64,
    pub verified: u64,
    pub skipped: u64,
    pub failed: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FuzzFailure {
    pub trial: u64,
    pub kind: String,
    pub swapped: bool,
    pub statement: String,
    pub reason: String,
    pub p: MatrixFile,
    pub q: MatrixFile,
    pub witness: Vec<Named>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FuzzSummary {
    pub ring: String,
    pub dim: usize,
    pub seed: u64,
    pub trials: u64,
    pub kinds: BTreeMap<String, u64>,
    /// Keyed by statement id.
    pub statements: BTreeMap<String, Tally>,
    /// Hypothesis names that caused skips, with counts.
    pub skip_reasons: BTreeMap<String, u64>,
    pub failures: Vec<FuzzFailure>,
}

impl FuzzSummary {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

enum Event {
    Verified(StatementId),
    Skipped(StatementId, String),
    Failed(FuzzFailure),
}

fn run_trial(cfg: &FuzzConfig, index: u64) -> Result<(PairKind, Vec<Event>), GeneratorError> {
    let kind = kind_for_trial(index);
    let (p, q) = random_pair(&GeneratorSpec::new(cfg.ring, cfg.seed, kind), index)?;
    let mut events = Vec::new();
    for swapped in [false, true] {
        let inputs = if swapped {
            StatementInputs::pair(q.clone(), p.clone())
        } else {
            StatementInputs::pair(p.clone(), q.clone())
        };
        for &id in &cfg.statements {
            let fail = |reason: String, witness: Vec<Named>| {
                Event::Failed(FuzzFailure {
                    trial: index,
                    kind: kind.to_string(),
                    swapped,
                    statement: id.to_string(),
                    reason,
                    p: MatrixFile::from_element(&inputs.p),
                    q: MatrixFile::from_element(&inputs.q),
                    witness,
                })
            };
            let ev = match run_statement(id, &inputs) {
                Ok(report) => {
                    let bad = report.certificates.iter().find_map(|c| {
                        let inverse: MatrixElement = if cfg.corrupt == Some(id) {
                            -&c.inverse
                        } else {
                            c.inverse.clone()
                        };
                        match penrose_check(&c.target, &inverse) {
                            Ok(r) if r.overall => None,
                            _ => Some((c.label, c.target.clone(), inverse)),
                        }
                    });
                    match bad {
                        None => Event::Verified(id),
                        Some((label, target, inverse)) => fail(
                            format!("certificate `{label}` fails the Penrose equations"),
                            crate::report::named([("target", &target), ("candidate", &inverse)]),
                        ),
                    }
                }
                Err(CheckError::Hypothesis(h)) => Event::Skipped(id, h.hypothesis.to_string()),
                Err(CheckError::Falsified(f)) => fail(
                    format!("claim `{}` is false", f.claim),
                    witness_json(&f.witness),
                ),
                Err(e @ CheckError::Mp(_)) => fail(e.to_string(), Vec::new()),
            };
            events.push(ev);
        }
    }
    Ok((kind, events))
}

/// Runs all trials; the summary depends only on the configuration, never on
/// thread scheduling.
pub fn run_fuzz(cfg: &FuzzConfig) -> Result<FuzzSummary, GeneratorError> {
    let threads = cfg.threads.max(1) as u64;
    let results: Vec<_> = thread::scope(|s| {
        let handles: Vec<_> = (0..threads)
            .map(|t| {
                s.spawn(move || {
                    (t..cfg.trials)
                        .step_by(threads as usize)
                        .map(|i| (i, run_trial(cfg, i)))
                        .collect::<Vec<_>>()
                })
            })
            .collect();
        let mut all: Vec<_> = handles
            .into_iter()
            .flat_map(|h| h.join().expect("fuzz worker panicked"))
            .collect();
        all.sort_by_key(|(i, _)| *i);
        all
    });

    let mut summary = FuzzSummary {
        ring: cfg.ring.kind().ring_id(),
        dim: cfg.ring.dim(),
        seed: cfg.seed,
        trials: cfg.trials,
        kinds: BTreeMap::new(),
        statements: cfg
            .statements
            .iter()
            .map(|id| (id.to_string(), Tally::default()))
            .collect(),
        skip_reasons: BTreeMap::new(),
        failures: Vec::new(),
    };
    for (_, r) in results {
        let (kind, events) = r?;
        *summary.kinds.entry(kind.to_string()).or_default() += 1;
        for ev in events {
            match ev {
                Event::Verified(id) => {
                    let t = summary.statements.get_mut(id.as_str()).expect("known id");
                    t.runs += 1;
                    t.verified += 1;
                }
                Event::Skipped(id, why) => {
                    let t = summary.statements.get_mut(id.as_str()).expect("known id");
                    t.runs += 1;
                    t.skipped += 1;
                    *summary
                        .skip_reasons
                        .entry(format!("{id}: {why}"))
                        .or_default() += 1;
                }
                Event::Failed(f) => {
                    let t = summary.statements.get_mut(&f.statement).expect("known id");
                    t.runs += 1;
                    t.failed += 1;
                    summary.failures.push(f);
                }
            }
        }
    }
    Ok(summary)
}

pub fn render_text(s: &FuzzSummary) -> String {
    let mut out = format!(
        "fuzz over M_{}({}), seed {}, {} trials\n",
        s.dim, s.ring, s.seed, s.trials
    );
    let kinds: Vec<String> = s.kinds.iter().map(|(k, v)| format!("{k} {v}")).collect();
    out += &format!("pairs: {}\n", kinds.join(", "));
    for (id, t) in &s.statements {
        out += &format!(
            "  {id:<26} runs {:>5}  verified {:>5}  skipped {:>5}  failed {:>3}\n",
            t.runs, t.verified, t.skipped, t.failed
        );
    }
    for f in &s.failures {
        out += &format!(
            "FAIL trial {} ({}{}) {}: {}\n  p = {}\n  q = {}\n",
            f.trial,
            f.kind,
            if f.swapped { ", swapped" } else { "" },
            f.statement,
            f.reason,
            crate::report::render_matrix(&f.p),
            crate::report::render_matrix(&f.q),
        );
    }
    out += &format!("{} failures\n", s.failures.len());
    out
}
