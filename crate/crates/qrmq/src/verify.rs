//! Seeded differential verification and trace export.

use qrmq_core::check::{run_differential, DiffOptions, Finding};
use qrmq_core::{gen_array, gen_ops, CreationTrace, FindminConfig, Op, OpSequence, OracleArray, QDynamicRMQ, WorkloadSpec};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    pub trials: usize,
    pub n_max: usize,
    pub seed: u64,
    /// Break the quantum pushdown on purpose; a sound run must then fail.
    pub mutate: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            trials: 200,
            n_max: 4096,
            seed: 0,
            mutate: false,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VerifyReport {
    pub trials: usize,
    pub ops: usize,
    pub queries: usize,
    pub lazy_creations: usize,
    pub mismatches: usize,
    pub structural_violations: usize,
    pub stale_creations: usize,
    pub first_failure: Option<String>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.mismatches == 0 && self.structural_violations == 0 && self.stale_creations == 0
    }
}

/// One randomly shaped workload. `n` is log-uniform in `1..=n_max`, `q`
/// uniform in `1..=n`, and the value range is sometimes tiny to force ties.
pub fn trial_workload(trial_seed: u64, n_max: usize) -> Result<(OracleArray, OpSequence)> {
    let mut rng = ChaCha8Rng::seed_from_u64(trial_seed);
    let top = usize::BITS - 1 - n_max.max(1).leading_zeros();
    let octave = rng.gen_range(0..=top);
    let lo = 1usize << octave;
    let hi = ((lo << 1) - 1).min(n_max.max(1));
    let n = rng.gen_range(lo..=hi);
    let q = rng.gen_range(1..=n);
    let value_range = [0, 3, 100, 1 << 30][rng.gen_range(0..4)];
    let arr = gen_array(n, value_range, rng.gen())?;
    let mut spec = WorkloadSpec::new(n, q, rng.gen());
    spec.value_range = value_range;
    spec.query_fraction = rng.gen_range(0.2..0.8);
    spec.point_bias = rng.gen_range(0.0..1.0);
    Ok((arr, gen_ops(&spec)?))
}

pub fn run_verify(opts: &VerifyOptions) -> Result<VerifyReport> {
    let mut master = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut report = VerifyReport::default();
    for _ in 0..opts.trials {
        let trial_seed: u64 = master.gen();
        let (arr, ops) = trial_workload(trial_seed, opts.n_max)?;
        let diff = run_differential(
            &arr,
            &ops,
            &DiffOptions {
                cfg: FindminConfig::with_seed(trial_seed),
                mutate: opts.mutate,
                ..DiffOptions::default()
            },
        )?;
        report.trials += 1;
        report.ops += diff.ops;
        report.queries += diff.queries;
        report.lazy_creations += diff.lazy_creations;
        report.mismatches += diff.mismatches();
        report.structural_violations += diff.structural_violations();
        report.stale_creations += diff.stale_creations();
        if report.first_failure.is_none() {
            report.first_failure = diff.findings.first().map(|f| describe(trial_seed, arr.len(), f));
        }
    }
    Ok(report)
}

fn describe(trial_seed: u64, n: usize, f: &Finding) -> String {
    let what = match f {
        Finding::Mismatch { subject, op_index, detail } => format!("{subject:?} mismatch at op {op_index}: {detail}"),
        Finding::Structure { op_index, detail } => format!("structure at op {op_index}: {detail}"),
        Finding::Stale { op_index, node, detail } => format!("stale node {node} at op {op_index}: {detail}"),
    };
    format!("trial seed {trial_seed} (n = {n}): {what}")
}

/// Replays `ops` on a fresh structure over a seeded array of length `n` and
/// returns one trace per operation. Which nodes get created does not depend
/// on the array contents.
pub fn trace_ops(n: usize, ops: &OpSequence, seed: u64) -> Result<Vec<CreationTrace>> {
    let arr = gen_array(n, 1 << 30, seed)?;
    let mut t = QDynamicRMQ::new(arr, ops.len().max(1), 0.1, FindminConfig::with_seed(seed))?;
    for op in ops {
        match *op {
            Op::Query { l, r } => {
                t.query(l, r)?;
            }
            Op::Modify { l, r, f } => t.modify(l, r, f)?,
        }
    }
    Ok(t.traces().to_vec())
}
