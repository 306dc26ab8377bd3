//! Disagreement mining: run the heuristic and the exact oracle side by side
//! on seeded pairs and archive every case where they differ.

use std::fs::{self, File};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};

use anyhow::{bail, ensure, Context, Result};
use rand::{Rng, RngCore};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use isopos_core::corpus::{
    connected_gnp, emit_graph6, named_graph, parse_graph6, random_permutation, Provenance, Seed,
};
use isopos_core::oracle::EXHAUSTIVE_MAX;
use isopos_core::{
    decide_isomorphism, exact_isomorphism, exhaustive_isomorphism, FailureStage, Graph, Outcome,
};

use crate::report::mapping_verified;

pub const RECORDS_FILE: &str = "disagreements.jsonl";
pub const SUMMARY_FILE: &str = "summary.txt";

/// Every this-many trials with at most [`EXHAUSTIVE_MAX`] vertices, the
/// backtracking oracle is also checked against full enumeration.
const CROSS_CHECK_EVERY: u64 = 4;

#[derive(Debug, Clone)]
pub struct MineConfig {
    pub n_min: usize,
    pub n_max: usize,
    pub p: f64,
    pub trials: u64,
    pub seed: u64,
    pub out: PathBuf,
    /// Append one extra trial on the rook's 4x4 graph versus Shrikhande.
    pub stress: bool,
    /// Draw only relabeled pairs instead of a 50/50 mix.
    pub permuted_only: bool,
}

/// One archived disagreement, as written to the JSON-lines file.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Record {
    pub trial: u64,
    pub provenance: String,
    pub left_g6: String,
    pub right_g6: String,
    pub heuristic: String,
    pub oracle: String,
    pub failure_stage: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Classification {
    Agreement,
    FalseAccept,
    FalseReject,
}

#[derive(Debug, Clone)]
pub struct TrialResult {
    pub trial: u64,
    pub provenance: Provenance,
    pub left: Graph,
    pub right: Graph,
    pub outcome: Outcome,
    pub failure: Option<FailureStage>,
    pub oracle_isomorphic: bool,
    /// Whether the complete trace's pairing is an isomorphism.
    pub mapping_verified: Option<bool>,
    /// Enumeration result, when the cross-check ran.
    pub exhaustive_isomorphic: Option<bool>,
}

impl TrialResult {
    pub fn classification(&self) -> Classification {
        match (self.outcome, self.oracle_isomorphic) {
            (Outcome::HeuristicIsomorphic, false) => Classification::FalseAccept,
            (Outcome::HeuristicNotIsomorphic, true) => Classification::FalseReject,
            _ => Classification::Agreement,
        }
    }

    pub fn record(&self) -> Record {
        Record {
            trial: self.trial,
            provenance: self.provenance.to_string(),
            left_g6: emit_graph6(&self.left),
            right_g6: emit_graph6(&self.right),
            heuristic: self.outcome.to_string(),
            oracle: oracle_label(self.oracle_isomorphic).to_string(),
            failure_stage: self.failure.map(|f| f.to_string()),
        }
    }
}

fn oracle_label(iso: bool) -> &'static str {
    if iso {
        "ISOMORPHIC"
    } else {
        "NOT_ISOMORPHIC"
    }
}

#[derive(Debug, Clone, Default)]
pub struct MiningReport {
    pub trials: u64,
    pub agreements: u64,
    pub false_accepts: Vec<Record>,
    pub false_rejects: Vec<Record>,
    pub disconnected_intermediate_count: u64,
    pub permuted_trials: u64,
    pub heuristic_accepts: u64,
    pub mapping_verified: u64,
    pub mapping_not_verified: u64,
    pub cross_checks: u64,
    pub cross_check_mismatches: u64,
    /// Verified pairings on pairs the oracle calls non-isomorphic. Must be 0.
    pub witness_violations: u64,
}

impl MiningReport {
    pub fn summary(&self) -> String {
        let rows = [
            ("trials", self.trials),
            ("agreements", self.agreements),
            ("false_accepts", self.false_accepts.len() as u64),
            ("false_rejects", self.false_rejects.len() as u64),
            ("disconnected_intermediate", self.disconnected_intermediate_count),
            ("permuted_trials", self.permuted_trials),
            ("heuristic_accepts", self.heuristic_accepts),
            ("mapping_verified", self.mapping_verified),
            ("mapping_not_verified", self.mapping_not_verified),
            ("oracle_cross_checks", self.cross_checks),
            ("oracle_cross_check_mismatches", self.cross_check_mismatches),
            ("witness_soundness_violations", self.witness_violations),
        ];
        rows.iter().map(|(k, v)| format!("{k}={v}\n")).collect()
    }

    fn add(&mut self, t: &TrialResult) {
        self.trials += 1;
        match t.classification() {
            Classification::Agreement => self.agreements += 1,
            Classification::FalseAccept => self.false_accepts.push(t.record()),
            Classification::FalseReject => self.false_rejects.push(t.record()),
        }
        if matches!(t.failure, Some(FailureStage::DisconnectedIntermediate { .. })) {
            self.disconnected_intermediate_count += 1;
        }
        if t.provenance == Provenance::Permuted {
            self.permuted_trials += 1;
        }
        if t.outcome == Outcome::HeuristicIsomorphic {
            self.heuristic_accepts += 1;
        }
        match t.mapping_verified {
            Some(true) => {
                self.mapping_verified += 1;
                if !t.oracle_isomorphic {
                    self.witness_violations += 1;
                }
            }
            Some(false) => self.mapping_not_verified += 1,
            None => {}
        }
        if let Some(iso) = t.exhaustive_isomorphic {
            self.cross_checks += 1;
            if iso != t.oracle_isomorphic {
                self.cross_check_mismatches += 1;
            }
        }
    }

    /// Archived records in trial order.
    pub fn disagreements(&self) -> Vec<&Record> {
        let mut all: Vec<&Record> = self.false_accepts.iter().chain(&self.false_rejects).collect();
        all.sort_by_key(|r| r.trial);
        all
    }
}

/// Runs both deciders on one pair.
pub fn evaluate(trial: u64, provenance: Provenance, left: Graph, right: Graph, cross_check: bool) -> Result<TrialResult> {
    let decision = decide_isomorphism(&left, &right)?;
    let oracle_isomorphic = exact_isomorphism(&left, &right)?.isomorphic;
    let exhaustive_isomorphic = if cross_check && left.vertex_count() <= EXHAUSTIVE_MAX {
        Some(exhaustive_isomorphism(&left, &right)?.isomorphic)
    } else {
        None
    };
    Ok(TrialResult {
        trial,
        provenance,
        mapping_verified: mapping_verified(&left, &right, &decision)?,
        outcome: decision.verdict.outcome(),
        failure: decision.verdict.failure_stage(),
        left,
        right,
        oracle_isomorphic,
        exhaustive_isomorphic,
    })
}

fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = Seed(seed).rng();
    rng.set_stream(trial);
    rng
}

fn draw_trial(cfg: &MineConfig, trial: u64) -> Result<TrialResult> {
    let mut rng = trial_rng(cfg.seed, trial);
    let n = rng.random_range(cfg.n_min..=cfg.n_max);
    let permuted = cfg.permuted_only || rng.random_bool(0.5);
    let left = connected_gnp(n, cfg.p, &mut rng)?;
    let (provenance, right) = if permuted {
        let p = random_permutation(&left, &mut rng);
        (Provenance::Permuted, left.apply_permutation(&p)?)
    } else {
        (Provenance::IndependentGnp, connected_gnp(n, cfg.p, &mut rng)?)
    };
    // Consume one word so the cross-check choice is independent of n.
    let cross_check = rng.next_u64().is_multiple_of(CROSS_CHECK_EVERY);
    evaluate(trial, provenance, left, right, cross_check)
}

fn stress_trial(trial: u64) -> Result<TrialResult> {
    evaluate(
        trial,
        Provenance::Named("rook_4x4/shrikhande".into()),
        named_graph("rook_4x4")?,
        named_graph("shrikhande")?,
        false,
    )
}

pub fn trial_file(out: &Path, trial: u64, side: &str) -> PathBuf {
    out.join(format!("trial-{trial:06}-{side}.g6"))
}

/// Runs the whole mining session and archives its disagreements in `cfg.out`.
pub fn run_mine(cfg: &MineConfig) -> Result<MiningReport> {
    ensure!(cfg.n_min >= 1 && cfg.n_min <= cfg.n_max, "invalid size range {}..={}", cfg.n_min, cfg.n_max);
    ensure!((0.0..=1.0).contains(&cfg.p), "probability {} outside [0, 1]", cfg.p);
    fs::create_dir_all(&cfg.out).with_context(|| format!("creating {}", cfg.out.display()))?;

    let mut results: Vec<TrialResult> = (0..cfg.trials)
        .into_par_iter()
        .map(|t| draw_trial(cfg, t))
        .collect::<Result<_>>()?;
    if cfg.stress {
        results.push(stress_trial(cfg.trials)?);
    }

    let mut report = MiningReport::default();
    for r in &results {
        report.add(r);
    }

    let records_path = cfg.out.join(RECORDS_FILE);
    let mut records = File::create(&records_path)
        .with_context(|| format!("creating {}", records_path.display()))?;
    for record in report.disagreements() {
        writeln!(records, "{}", serde_json::to_string(record)?)?;
        fs::write(trial_file(&cfg.out, record.trial, "left"), format!("{}\n", record.left_g6))?;
        fs::write(trial_file(&cfg.out, record.trial, "right"), format!("{}\n", record.right_g6))?;
    }
    fs::write(cfg.out.join(SUMMARY_FILE), report.summary())?;
    Ok(report)
}

#[derive(Debug, Clone, Default)]
pub struct ReplayReport {
    pub records: usize,
    pub reproduced: usize,
    pub mismatched: Vec<u64>,
}

/// Reloads every archived pair from its graph6 files and re-runs both deciders.
pub fn replay(out: &Path) -> Result<ReplayReport> {
    let path = out.join(RECORDS_FILE);
    let file = File::open(&path).with_context(|| format!("opening {}", path.display()))?;
    let mut report = ReplayReport::default();
    for line in BufReader::new(file).lines() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let record: Record = serde_json::from_str(&line)?;
        let load = |side| -> Result<Graph> {
            let text = fs::read_to_string(trial_file(out, record.trial, side))?;
            Ok(parse_graph6(&text)?)
        };
        let (left, right) = (load("left")?, load("right")?);
        if emit_graph6(&left) != record.left_g6 || emit_graph6(&right) != record.right_g6 {
            bail!("trial {}: archived files differ from the record", record.trial);
        }
        let provenance = Provenance::Named(record.provenance.clone());
        let again = evaluate(record.trial, provenance, left, right, false)?.record();
        report.records += 1;
        let same = again.heuristic == record.heuristic
            && again.oracle == record.oracle
            && again.failure_stage == record.failure_stage;
        if same {
            report.reproduced += 1;
        } else {
            report.mismatched.push(record.trial);
        }
    }
    Ok(report)
}
