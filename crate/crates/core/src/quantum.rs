//! Dynamic RMQ on top of the simulated minimum-finding oracle.
//!
//! Initialization does nothing but record the budget. Before the `k`-th
//! operation node `k` is created (top-down completion), and any node reached
//! by a traversal is created on the spot inside `pushdown` (lazy creation).
//! Creating a node runs minimum finding over the node's range of the original
//! array with error `ε / (4·q·log₂ n)`; that is the only place the oracle is
//! charged.
//!
//! Reading the original array at creation time is sound: a node that does not
//! exist yet has a parent that was never pushed down, so every modification
//! that touched its range covered the whole range and is still parked in the
//! tags of existing ancestors, waiting to be pushed onto it.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::oracle::{check_range, OracleArray};
use crate::qcost::{check_eps, findmin_over_padded, CostLedger, FindminConfig};
use crate::tree::{layer_of, modify_node, push_tag, query_node, Geometry, LazySkeleton, NodeRecord};
use crate::value::{ModFn, ValueIndexPair};

/// Nodes created during one operation.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CreationTrace {
    /// 1-based operation number `k`.
    pub op_index: usize,
    /// Node `k` if top-down completion had to create it.
    pub topdown: Option<usize>,
    /// Nodes created inside `pushdown`, ascending.
    pub lazy: Vec<usize>,
}

impl fmt::Display for CreationTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "op={} topdown=", self.op_index)?;
        match self.topdown {
            Some(k) => write!(f, "{k}")?,
            None => f.write_str("-")?,
        }
        f.write_str(" lazy=")?;
        for (i, m) in self.lazy.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{m}")?;
        }
        Ok(())
    }
}

/// A structural fact about creation traces that failed to hold.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TraceViolation {
    /// More than four lazily created nodes in one layer.
    LayerOverfull { layer: u32, count: usize },
    /// `m_i < 2^⌊(i−1)/8⌋ · m_1` for the 1-based position `i`.
    SlowGrowth { i: usize, m_i: usize, m_1: usize },
    /// A lazily created node numbered at or below the operation index.
    NotAfterOp { node: usize, op_index: usize },
    /// More lazy creations than `4·log₂ n + 2`.
    TooMany { count: usize, bound: usize },
    /// `lazy` is not strictly ascending.
    Unsorted,
}

impl fmt::Display for TraceViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            TraceViolation::LayerOverfull { layer, count } => {
                write!(f, "{count} lazily created nodes in layer {layer}")
            }
            TraceViolation::SlowGrowth { i, m_i, m_1 } => {
                write!(f, "m_{i} = {m_i} grows too slowly from m_1 = {m_1}")
            }
            TraceViolation::NotAfterOp { node, op_index } => {
                write!(f, "node {node} created lazily during operation {op_index}")
            }
            TraceViolation::TooMany { count, bound } => {
                write!(f, "{count} lazy creations exceed bound {bound}")
            }
            TraceViolation::Unsorted => f.write_str("lazy list not ascending"),
        }
    }
}

impl CreationTrace {
    /// Checks the per-operation structure of lazy creations: at most four per
    /// layer, geometric growth `m_i ≥ 2^⌊(i−1)/8⌋·m_1`, every node numbered
    /// above the operation index, and `O(log n)` in total.
    pub fn check(&self, geo: &Geometry) -> core::result::Result<(), TraceViolation> {
        if self.lazy.windows(2).any(|w| w[0] >= w[1]) {
            return Err(TraceViolation::Unsorted);
        }
        let bound = 4 * geo.height() as usize + 2;
        if self.lazy.len() > bound {
            return Err(TraceViolation::TooMany {
                count: self.lazy.len(),
                bound,
            });
        }
        if let Some(&node) = self.lazy.iter().find(|&&m| m <= self.op_index) {
            return Err(TraceViolation::NotAfterOp {
                node,
                op_index: self.op_index,
            });
        }
        // Ascending node numbers means layers come in contiguous runs.
        let mut run = (u32::MAX, 0usize);
        for &m in &self.lazy {
            let layer = layer_of(m);
            run = if layer == run.0 { (layer, run.1 + 1) } else { (layer, 1) };
            if run.1 > 4 {
                return Err(TraceViolation::LayerOverfull {
                    layer,
                    count: self.lazy.iter().filter(|&&x| layer_of(x) == layer).count(),
                });
            }
        }
        if let Some(&m_1) = self.lazy.first() {
            for (j, &m_i) in self.lazy.iter().enumerate() {
                let factor = 1u128 << (j / 8);
                if (m_i as u128) < factor * m_1 as u128 {
                    return Err(TraceViolation::SlowGrowth { i: j + 1, m_i, m_1 });
                }
            }
        }
        Ok(())
    }
}

/// One node creation, with the composition of tags pending above it at that
/// moment. Recorded only when enabled with
/// [`QDynamicRMQ::record_creations`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CreationEvent {
    pub op_index: usize,
    pub node: usize,
    /// Minimum pair found over the original array.
    pub found: ValueIndexPair,
    /// Composition of the existing strict ancestors' tags, root outermost.
    pub pending: ModFn,
}

/// A node reached during a traversal. Covered nodes end the recursion; the
/// others are pushed down and split.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NodeVisit {
    pub node: usize,
    pub covered: bool,
}

#[derive(Debug, Clone)]
pub struct QDynamicRMQ {
    arr: OracleArray,
    geo: Geometry,
    q_bound: usize,
    eps_total: f64,
    eps_call: f64,
    k_ops: usize,
    nodes: BTreeMap<usize, NodeRecord>,
    cfg: FindminConfig,
    rng: ChaCha8Rng,
    ledger: CostLedger,
    traces: Vec<CreationTrace>,
    events: Option<Vec<CreationEvent>>,
    visits: u64,
    visit_log: Option<Vec<NodeVisit>>,
    pushdown_fault: bool,
}

impl QDynamicRMQ {
    /// Constant-time setup; reads nothing from the oracle.
    ///
    /// `q` is the declared operation budget. Pass `q = n` when the exact count
    /// is unknown. Budgets up to `2·n_padded` are accepted so that k-minimum
    /// finding (`q = 2k`) works for every `k ≤ n`.
    pub fn new(arr: OracleArray, q: usize, eps: f64, cfg: FindminConfig) -> Result<Self> {
        check_eps(eps)?;
        cfg.validate()?;
        let geo = Geometry::new(arr.len(), 2);
        if q == 0 || q > 2 * geo.n_padded() {
            return Err(Error::InvalidBudget {
                q,
                n_padded: geo.n_padded(),
            });
        }
        let eps_call = eps / (4.0 * q as f64 * f64::from(geo.height()));
        Ok(QDynamicRMQ {
            arr,
            geo,
            q_bound: q,
            eps_total: eps,
            eps_call,
            k_ops: 0,
            nodes: BTreeMap::new(),
            cfg,
            rng: ChaCha8Rng::seed_from_u64(cfg.rng_seed),
            ledger: CostLedger::new(),
            traces: Vec::new(),
            events: None,
            visits: 0,
            visit_log: None,
            pushdown_fault: false,
        })
    }

    pub fn len(&self) -> usize {
        self.geo.n_logical()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn geometry(&self) -> Geometry {
        self.geo
    }

    pub fn q_bound(&self) -> usize {
        self.q_bound
    }

    pub fn eps_total(&self) -> f64 {
        self.eps_total
    }

    /// Error budget handed to each minimum-finding call.
    pub fn eps_per_call(&self) -> f64 {
        self.eps_call
    }

    pub fn ops_processed(&self) -> usize {
        self.k_ops
    }

    pub fn ledger(&self) -> CostLedger {
        self.ledger
    }

    pub fn config(&self) -> &FindminConfig {
        &self.cfg
    }

    pub fn node(&self, k: usize) -> Option<&NodeRecord> {
        self.nodes.get(&k)
    }

    pub fn created_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn node_visits(&self) -> u64 {
        self.visits
    }

    /// One trace per processed operation, in order.
    pub fn traces(&self) -> &[CreationTrace] {
        &self.traces
    }

    /// Starts (or stops) recording a [`CreationEvent`] for every creation.
    pub fn record_creations(&mut self, on: bool) {
        self.events = if on { Some(Vec::new()) } else { None };
    }

    pub fn take_creation_events(&mut self) -> Vec<CreationEvent> {
        self.events.as_mut().map(core::mem::take).unwrap_or_default()
    }

    /// Starts (or stops) logging every node a traversal reaches.
    pub fn record_visits(&mut self, on: bool) {
        self.visit_log = if on { Some(Vec::new()) } else { None };
    }

    pub fn take_visits(&mut self) -> Vec<NodeVisit> {
        self.visit_log.as_mut().map(core::mem::take).unwrap_or_default()
    }

    /// Makes `pushdown` drop the tag destined for the right child. Exists so
    /// that verification tooling can prove it notices a broken tree.
    #[doc(hidden)]
    pub fn inject_pushdown_fault(&mut self) {
        self.pushdown_fault = true;
    }

    pub fn query(&mut self, l: usize, r: usize) -> Result<ValueIndexPair> {
        self.begin_op(l, r)?;
        let out = query_node(self, 1, l, r);
        self.end_op();
        out
    }

    /// On an `Overflow` error the structure may be left partially updated.
    pub fn modify(&mut self, l: usize, r: usize, f: ModFn) -> Result<()> {
        self.begin_op(l, r)?;
        let out = modify_node(self, 1, l, r, f);
        self.end_op();
        out
    }

    fn begin_op(&mut self, l: usize, r: usize) -> Result<()> {
        check_range(l, r, self.len())?;
        if self.k_ops >= self.q_bound {
            return Err(Error::BudgetExhausted { q: self.q_bound });
        }
        self.k_ops += 1;
        let k = self.k_ops;
        self.traces.push(CreationTrace {
            op_index: k,
            ..CreationTrace::default()
        });
        if self.geo.is_valid(k) && self.create(k)? {
            self.current_trace().topdown = Some(k);
        }
        Ok(())
    }

    fn end_op(&mut self) {
        self.current_trace().lazy.sort_unstable();
    }

    fn current_trace(&mut self) -> &mut CreationTrace {
        self.traces.last_mut().expect("operation in progress")
    }

    /// Creates node `k` unless it already exists. Returns whether it was new.
    fn create(&mut self, k: usize) -> Result<bool> {
        if self.nodes.contains_key(&k) {
            return Ok(false);
        }
        let (l, r) = self.geo.range(k);
        let found = findmin_over_padded(
            &self.arr,
            l,
            r,
            self.eps_call,
            &self.cfg,
            &mut self.rng,
            &mut self.ledger,
        )?;
        if self.events.is_some() {
            let pending = self.pending_above(k)?;
            let op_index = self.k_ops;
            if let Some(events) = self.events.as_mut() {
                events.push(CreationEvent {
                    op_index,
                    node: k,
                    found,
                    pending,
                });
            }
        }
        self.nodes.insert(k, NodeRecord::new(found));
        Ok(true)
    }

    fn pending_above(&self, k: usize) -> Result<ModFn> {
        let mut acc = ModFn::Identity;
        let mut a = k / 2;
        while a >= 1 {
            if let Some(rec) = self.nodes.get(&a) {
                acc = rec.g.compose(acc)?;
            }
            a /= 2;
        }
        Ok(acc)
    }
}

impl LazySkeleton for QDynamicRMQ {
    fn geometry(&self) -> Geometry {
        self.geo
    }

    fn record(&self, k: usize) -> NodeRecord {
        self.nodes[&k]
    }

    fn record_mut(&mut self, k: usize) -> &mut NodeRecord {
        self.nodes.get_mut(&k).expect("node visited before creation")
    }

    fn pushdown(&mut self, k: usize) -> Result<()> {
        for child in [2 * k, 2 * k + 1] {
            if self.create(child)? {
                self.current_trace().lazy.push(child);
            }
        }
        if self.pushdown_fault {
            let g = self.nodes[&k].g;
            let left = self.record_mut(2 * k);
            left.v = g.apply_pair(left.v)?;
            left.g = g.compose(left.g)?;
            self.record_mut(k).g = ModFn::Identity;
            return Ok(());
        }
        push_tag(self, k)
    }

    fn visit(&mut self, k: usize, covered: bool) {
        self.visits += 1;
        if let Some(log) = self.visit_log.as_mut() {
            log.push(NodeVisit { node: k, covered });
        }
    }
}
