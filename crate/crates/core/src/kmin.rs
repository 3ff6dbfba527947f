//! k-minimum finding by repeated global minimum queries, each followed by a
//! point assignment of `+∞`, on a structure sized for exactly `2k` operations.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::oracle::{BruteRef, OracleArray};
use crate::qcost::{CostLedger, FindminConfig};
use crate::quantum::QDynamicRMQ;
use crate::value::{ModFn, Value};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KMinResult {
    /// Selected indices in selection order.
    pub indices: Vec<usize>,
    pub ledger: CostLedger,
    /// Operations issued against the structure; always `2k`.
    pub ops_issued: usize,
}

pub fn qfindmin_k(arr: &OracleArray, k: usize, eps: f64, cfg: FindminConfig) -> Result<KMinResult> {
    let n = arr.len();
    if k == 0 || k > n {
        return Err(Error::KOutOfRange { k, len: n });
    }
    let mut tree = QDynamicRMQ::new(arr.clone(), 2 * k, eps, cfg)?;
    let mut indices = Vec::with_capacity(k);
    for _ in 0..k {
        let i = tree.query(1, n)?.index;
        indices.push(i);
        tree.modify(i, i, ModFn::Assign(Value::PlusInfinity))?;
    }
    Ok(KMinResult {
        indices,
        ledger: tree.ledger(),
        ops_issued: tree.ops_processed(),
    })
}

/// One run with failure injection on; true iff the selected index set equals
/// the true k smallest.
pub fn kmin_success_trial(arr: &OracleArray, k: usize, eps: f64, seed: u64) -> Result<bool> {
    let got = qfindmin_k(arr, k, eps, FindminConfig::injecting(seed))?;
    let want = BruteRef::new(arr).kmin(k)?;
    Ok(as_set(&got.indices) == as_set(&want))
}

fn as_set(xs: &[usize]) -> BTreeSet<usize> {
    xs.iter().copied().collect()
}
