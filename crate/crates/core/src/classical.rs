//! Textbook lazy segment tree: eager O(n) build, O(log n) query and range
//! modification.

use alloc::vec::Vec;

use crate::error::Result;
use crate::oracle::{check_range, OracleArray};
use crate::qcost::CostLedger;
use crate::tree::{modify_node, push_tag, query_node, Geometry, LazySkeleton, NodeRecord};
use crate::value::{ModFn, Value, ValueIndexPair};

#[derive(Debug, Clone)]
pub struct ClassicalSegTree {
    geo: Geometry,
    /// Index 0 is unused so that `nodes[k]` is node `k`.
    nodes: Vec<NodeRecord>,
    visits: u64,
    ledger: CostLedger,
}

impl ClassicalSegTree {
    /// Reads every element once and builds all `2·n_padded − 1` nodes.
    pub fn new(arr: &OracleArray) -> Self {
        let geo = Geometry::new(arr.len(), 1);
        let mut ledger = CostLedger::new();
        let placeholder = NodeRecord::new(ValueIndexPair::new(Value::PlusInfinity, 0));
        let mut nodes = alloc::vec![placeholder; geo.node_count() + 1];
        for i in 1..=geo.n_padded() {
            let v = if i <= arr.len() {
                arr.read(i, &mut ledger).expect("index within array")
            } else {
                Value::PlusInfinity
            };
            nodes[geo.leaf_of(i)] = NodeRecord::new(ValueIndexPair::new(v, i));
        }
        let mut tree = ClassicalSegTree {
            geo,
            nodes,
            visits: 0,
            ledger,
        };
        for k in (1..geo.n_padded()).rev() {
            tree.update(k);
        }
        tree
    }

    pub fn geometry(&self) -> Geometry {
        self.geo
    }

    pub fn len(&self) -> usize {
        self.geo.n_logical()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn query(&mut self, l: usize, r: usize) -> Result<ValueIndexPair> {
        check_range(l, r, self.len())?;
        query_node(self, 1, l, r)
    }

    /// On an `Overflow` error the tree may be left partially updated.
    pub fn modify(&mut self, l: usize, r: usize, f: ModFn) -> Result<()> {
        check_range(l, r, self.len())?;
        modify_node(self, 1, l, r, f)
    }

    /// Pushes node `k`'s tag onto its children. `k` must be internal.
    pub fn pushdown(&mut self, k: usize) -> Result<()> {
        assert!(self.geo.is_valid(k) && !self.geo.is_leaf(k), "pushdown on non-internal node {k}");
        push_tag(self, k)
    }

    /// Recomputes node `k`'s minimum from its children. `k` must be internal.
    pub fn update(&mut self, k: usize) {
        assert!(self.geo.is_valid(k) && !self.geo.is_leaf(k), "update on non-internal node {k}");
        LazySkeleton::update(self, k)
    }

    pub fn node(&self, k: usize) -> Option<&NodeRecord> {
        if self.geo.is_valid(k) {
            self.nodes.get(k)
        } else {
            None
        }
    }

    pub fn node_mut(&mut self, k: usize) -> Option<&mut NodeRecord> {
        if self.geo.is_valid(k) {
            self.nodes.get_mut(k)
        } else {
            None
        }
    }

    /// Total node touches across all queries and modifications so far.
    pub fn node_visits(&self) -> u64 {
        self.visits
    }

    pub fn ledger(&self) -> CostLedger {
        self.ledger
    }
}

impl LazySkeleton for ClassicalSegTree {
    fn geometry(&self) -> Geometry {
        self.geo
    }

    fn record(&self, k: usize) -> NodeRecord {
        self.nodes[k]
    }

    fn record_mut(&mut self, k: usize) -> &mut NodeRecord {
        &mut self.nodes[k]
    }

    fn pushdown(&mut self, k: usize) -> Result<()> {
        push_tag(self, k)
    }

    fn visit(&mut self, _k: usize, _covered: bool) {
        self.visits += 1;
    }
}
