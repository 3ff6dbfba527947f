//! Cost benchmarking over `(n, q)` grids.
//!
//! Each cell generates a seeded array and operation sequence, replays it on the
//! quantum structure (failure injection off) and on the classical baseline,
//! and reports the ledger. The baseline's cost proxy is `n` element reads at
//! build time plus node visits per operation.

use std::io;

use qrmq_core::{
    gen_array, gen_ops, ClassicalSegTree, FindminConfig, Op, OpSequence, OracleArray, QDynamicRMQ, WorkloadSpec,
};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const CSV_HEADER: &str = "n,q,eps,seed,quantum_queries,classical_reads,findmin_calls,failures_injected,baseline_init_reads,baseline_node_visits";

/// Generated values are drawn from `0..=VALUE_RANGE`.
pub const VALUE_RANGE: u64 = 1 << 32;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchRow {
    pub n: usize,
    pub q: usize,
    pub eps: f64,
    pub seed: u64,
    pub quantum_queries: u64,
    pub classical_reads: u64,
    pub findmin_calls: u64,
    pub failures_injected: u64,
    #[serde(rename = "baseline_init_reads")]
    pub classical_baseline_init_reads: u64,
    #[serde(rename = "baseline_node_visits")]
    pub classical_baseline_node_visits: u64,
}

/// Replays `ops` on both structures. The quantum budget is `ops.len()`.
pub fn bench_ops(arr: &OracleArray, ops: &OpSequence, eps: f64, seed: u64) -> Result<BenchRow> {
    let q = ops.len();
    let mut quantum = QDynamicRMQ::new(arr.clone(), q.max(1), eps, FindminConfig::with_seed(seed))?;
    let mut classical = ClassicalSegTree::new(arr);
    for op in ops {
        match *op {
            Op::Query { l, r } => {
                quantum.query(l, r)?;
                classical.query(l, r)?;
            }
            Op::Modify { l, r, f } => {
                quantum.modify(l, r, f)?;
                classical.modify(l, r, f)?;
            }
        }
    }
    let ledger = quantum.ledger();
    Ok(BenchRow {
        n: arr.len(),
        q,
        eps,
        seed,
        quantum_queries: ledger.quantum_queries,
        classical_reads: ledger.classical_reads,
        findmin_calls: ledger.findmin_calls,
        failures_injected: ledger.failures_injected,
        classical_baseline_init_reads: classical.ledger().classical_reads,
        classical_baseline_node_visits: classical.node_visits(),
    })
}

pub fn bench_cell(n: usize, q: usize, eps: f64, seed: u64) -> Result<BenchRow> {
    if q > n {
        return Err(Error::QExceedsN { q, n });
    }
    let arr = gen_array(n, VALUE_RANGE, seed)?;
    let ops = gen_ops(&WorkloadSpec::new(n, q, seed))?;
    bench_ops(&arr, &ops, eps, seed)
}

/// One row per `(n, q, seed)`, ordered by `n`, then `q`, then seed. Seeds run
/// from `base_seed` to `base_seed + seeds - 1`.
pub fn bench_grid(ns: &[usize], qs: &[usize], eps: f64, seeds: u64, base_seed: u64) -> Result<Vec<BenchRow>> {
    let mut cells = Vec::new();
    for &n in ns {
        for &q in qs {
            if q > n {
                return Err(Error::QExceedsN { q, n });
            }
            cells.extend((0..seeds).map(|s| (n, q, base_seed + s)));
        }
    }
    cells
        .into_par_iter()
        .map(|(n, q, seed)| bench_cell(n, q, eps, seed))
        .collect()
}

pub fn write_csv<W: io::Write>(rows: &[BenchRow], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    if rows.is_empty() {
        w.write_record(CSV_HEADER.split(','))?;
    }
    for row in rows {
        w.serialize(row)?;
    }
    w.flush()?;
    Ok(())
}

pub fn read_csv<R: io::Read>(input: R) -> Result<Vec<BenchRow>> {
    let mut r = csv::Reader::from_reader(input);
    let rows = r.deserialize().collect::<std::result::Result<Vec<BenchRow>, _>>()?;
    Ok(rows)
}
