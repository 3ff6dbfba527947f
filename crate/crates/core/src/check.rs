//! Differential runs: replay one operation sequence on the classical tree, the
//! quantum structure and the brute-force reference in lockstep, and collect
//! every disagreement and every broken structural fact.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::classical::ClassicalSegTree;
use crate::error::Result;
use crate::oracle::{BruteRef, OracleArray};
use crate::qcost::{CostLedger, FindminConfig};
use crate::quantum::QDynamicRMQ;
use crate::workload::{Op, OpSequence};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Subject {
    Classical,
    Quantum,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Finding {
    /// A query answer differs from the brute-force reference.
    Mismatch { subject: Subject, op_index: usize, detail: String },
    /// A creation trace broke one of the per-operation structural bounds.
    Structure { op_index: usize, detail: String },
    /// A node was created from a stale view of the array.
    Stale { op_index: usize, node: usize, detail: String },
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct DiffReport {
    pub ops: usize,
    pub queries: usize,
    /// Lazily created nodes across all traces.
    pub lazy_creations: usize,
    pub findings: Vec<Finding>,
    pub quantum_ledger: CostLedger,
    pub classical_visits: u64,
}

impl DiffReport {
    pub fn passed(&self) -> bool {
        self.findings.is_empty()
    }

    pub fn mismatches(&self) -> usize {
        self.count(|f| matches!(f, Finding::Mismatch { .. }))
    }

    pub fn structural_violations(&self) -> usize {
        self.count(|f| matches!(f, Finding::Structure { .. }))
    }

    pub fn stale_creations(&self) -> usize {
        self.count(|f| matches!(f, Finding::Stale { .. }))
    }

    fn count(&self, pred: impl Fn(&Finding) -> bool) -> usize {
        self.findings.iter().filter(|f| pred(f)).count()
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiffOptions {
    pub eps: f64,
    pub cfg: FindminConfig,
    pub check_classical: bool,
    /// Compare each creation against the reference state before the operation.
    pub check_freshness: bool,
    /// Deliberately break the quantum pushdown.
    pub mutate: bool,
}

impl Default for DiffOptions {
    fn default() -> Self {
        DiffOptions {
            eps: 0.1,
            cfg: FindminConfig::default(),
            check_classical: true,
            check_freshness: true,
            mutate: false,
        }
    }
}

/// Replays `ops` with failure injection as configured in `opts.cfg`; the
/// quantum structure gets budget `ops.len()` (at least 1).
pub fn run_differential(arr: &OracleArray, ops: &OpSequence, opts: &DiffOptions) -> Result<DiffReport> {
    let mut brute = BruteRef::new(arr);
    let mut classical = opts.check_classical.then(|| ClassicalSegTree::new(arr));
    let mut quantum = QDynamicRMQ::new(arr.clone(), ops.len().max(1), opts.eps, opts.cfg)?;
    quantum.record_creations(opts.check_freshness);
    if opts.mutate {
        quantum.inject_pushdown_fault();
    }
    let geo = quantum.geometry();
    let mut report = DiffReport::default();

    for (j, op) in ops.iter().enumerate() {
        let op_index = j + 1;
        match *op {
            Op::Query { l, r } => {
                let want = brute.rmq(l, r)?;
                let got = quantum.query(l, r)?;
                if got != want {
                    report.findings.push(Finding::Mismatch {
                        subject: Subject::Quantum,
                        op_index,
                        detail: format!("query [{l}, {r}]: got {got}, want {want}"),
                    });
                }
                if let Some(t) = classical.as_mut() {
                    let got = t.query(l, r)?;
                    if got != want {
                        report.findings.push(Finding::Mismatch {
                            subject: Subject::Classical,
                            op_index,
                            detail: format!("query [{l}, {r}]: got {got}, want {want}"),
                        });
                    }
                }
                report.queries += 1;
            }
            Op::Modify { l, r, f } => {
                quantum.modify(l, r, f)?;
                if let Some(t) = classical.as_mut() {
                    t.modify(l, r, f)?;
                }
            }
        }

        // The reference still holds the state before this operation.
        for ev in quantum.take_creation_events() {
            let (lo, hi) = geo.range(ev.node);
            let want = brute.rmq_padded(lo, hi);
            let seen = ev.pending.apply_pair(ev.found)?;
            if seen != want {
                report.findings.push(Finding::Stale {
                    op_index,
                    node: ev.node,
                    detail: format!("created {seen} under pending {}, current minimum {want}", ev.pending),
                });
            }
        }
        if let Op::Modify { l, r, f } = *op {
            brute.modify(l, r, f)?;
        }

        let trace = &quantum.traces()[j];
        report.lazy_creations += trace.lazy.len();
        if let Err(v) = trace.check(&geo) {
            report.findings.push(Finding::Structure {
                op_index,
                detail: format!("{v} in `{trace}`"),
            });
        }
        report.ops += 1;
    }
    report.quantum_ledger = quantum.ledger();
    report.classical_visits = classical.map_or(0, |t| t.node_visits());
    Ok(report)
}
