//! Node numbering and the lazy-tag traversal shared by the classical and the
//! quantum segment trees.
//!
//! Nodes are numbered heap-style: node 1 is the root, node `k` has children
//! `2k` and `2k + 1`, and layer `d` holds nodes `2^d .. 2^(d+1)`. With the
//! leaf count padded to a power of two, a node's range follows from its number
//! alone, so no node stores its bounds.

use crate::error::Result;
use crate::value::{pair_min, ModFn, ValueIndexPair};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Geometry {
    n_logical: usize,
    n_padded: usize,
}

impl Geometry {
    /// `min_padded` lets callers force at least two leaves.
    pub fn new(n_logical: usize, min_padded: usize) -> Self {
        let n_padded = n_logical.max(min_padded).max(1).next_power_of_two();
        Geometry {
            n_logical,
            n_padded,
        }
    }

    pub fn n_logical(&self) -> usize {
        self.n_logical
    }

    pub fn n_padded(&self) -> usize {
        self.n_padded
    }

    /// `log₂ n_padded`, the index of the leaf layer.
    pub fn height(&self) -> u32 {
        self.n_padded.trailing_zeros()
    }

    pub fn node_count(&self) -> usize {
        2 * self.n_padded - 1
    }

    pub fn is_valid(&self, k: usize) -> bool {
        (1..=self.node_count()).contains(&k)
    }

    pub fn is_leaf(&self, k: usize) -> bool {
        k >= self.n_padded
    }

    /// Inclusive 1-based range covered by node `k`.
    pub fn range(&self, k: usize) -> (usize, usize) {
        debug_assert!(self.is_valid(k));
        let d = layer_of(k);
        let width = self.n_padded >> d;
        let off = k - (1usize << d);
        (off * width + 1, (off + 1) * width)
    }

    pub fn leaf_of(&self, i: usize) -> usize {
        self.n_padded + i - 1
    }
}

/// Layer of node `k`, i.e. `⌊log₂ k⌋`.
pub fn layer_of(k: usize) -> u32 {
    debug_assert!(k >= 1);
    usize::BITS - 1 - k.leading_zeros()
}

/// Per-node state: the range minimum pair and the pending tag for descendants.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NodeRecord {
    pub v: ValueIndexPair,
    pub g: ModFn,
}

impl NodeRecord {
    pub fn new(v: ValueIndexPair) -> Self {
        NodeRecord {
            v,
            g: ModFn::Identity,
        }
    }
}

/// Storage and pushdown policy for a lazy segment tree. `query` and `modify`
/// below are written once against this trait; the quantum tree overrides only
/// `pushdown`.
pub(crate) trait LazySkeleton {
    fn geometry(&self) -> Geometry;

    /// The node must already exist.
    fn record(&self, k: usize) -> NodeRecord;

    fn record_mut(&mut self, k: usize) -> &mut NodeRecord;

    fn pushdown(&mut self, k: usize) -> Result<()>;

    /// Called once per node reached by a traversal, with whether the node's
    /// range lies inside the operation's range.
    fn visit(&mut self, _k: usize, _covered: bool) {}

    fn update(&mut self, k: usize) {
        let v = pair_min(self.record(2 * k).v, self.record(2 * k + 1).v);
        self.record_mut(k).v = v;
    }
}

/// Moves `k`'s tag onto both children, parent tag outermost, and resets it.
pub(crate) fn push_tag<T: LazySkeleton + ?Sized>(tree: &mut T, k: usize) -> Result<()> {
    let g = tree.record(k).g;
    if g.is_identity() {
        return Ok(());
    }
    for child in [2 * k, 2 * k + 1] {
        let rec = tree.record_mut(child);
        rec.v = g.apply_pair(rec.v)?;
        rec.g = g.compose(rec.g)?;
    }
    tree.record_mut(k).g = ModFn::Identity;
    Ok(())
}

fn intersects(a: (usize, usize), l: usize, r: usize) -> bool {
    a.0 <= r && l <= a.1
}

fn covered(a: (usize, usize), l: usize, r: usize) -> bool {
    l <= a.0 && a.1 <= r
}

pub(crate) fn query_node<T: LazySkeleton + ?Sized>(
    tree: &mut T,
    k: usize,
    l: usize,
    r: usize,
) -> Result<ValueIndexPair> {
    let geo = tree.geometry();
    let is_covered = covered(geo.range(k), l, r);
    tree.visit(k, is_covered);
    if is_covered {
        return Ok(tree.record(k).v);
    }
    tree.pushdown(k)?;
    let (lc, rc) = (2 * k, 2 * k + 1);
    if !intersects(geo.range(rc), l, r) {
        query_node(tree, lc, l, r)
    } else if !intersects(geo.range(lc), l, r) {
        query_node(tree, rc, l, r)
    } else {
        let left = query_node(tree, lc, l, r)?;
        let right = query_node(tree, rc, l, r)?;
        Ok(pair_min(left, right))
    }
}

pub(crate) fn modify_node<T: LazySkeleton + ?Sized>(
    tree: &mut T,
    k: usize,
    l: usize,
    r: usize,
    f: ModFn,
) -> Result<()> {
    let geo = tree.geometry();
    let is_covered = covered(geo.range(k), l, r);
    tree.visit(k, is_covered);
    if is_covered {
        let rec = tree.record_mut(k);
        rec.v = f.apply_pair(rec.v)?;
        rec.g = f.compose(rec.g)?;
        return Ok(());
    }
    tree.pushdown(k)?;
    for child in [2 * k, 2 * k + 1] {
        if intersects(geo.range(child), l, r) {
            modify_node(tree, child, l, r, f)?;
        }
    }
    tree.update(k);
    Ok(())
}
