//! Query accounting and the simulated quantum minimum-finding subroutine.
//!
//! The simulation reproduces the interface and the price of bounded-error
//! minimum finding, not its circuit: the answer is computed by exhaustion over
//! the immutable oracle array, the ledger is charged
//! `max(1, ⌈C·√(m·ln(1/ε))⌉)` queries for a range of length `m`, and, when
//! failure injection is on, the call returns a wrong index with probability
//! exactly `ε`.

use rand::Rng;

use crate::error::{Error, Result};
use crate::oracle::{check_range, OracleArray};
use crate::value::{Value, ValueIndexPair};

/// Monotone cost counters for one run.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct CostLedger {
    /// Oracle queries charged by minimum finding.
    pub quantum_queries: u64,
    /// Plain element reads (classical initialization, direct lookups).
    pub classical_reads: u64,
    pub findmin_calls: u64,
    pub failures_injected: u64,
}

impl CostLedger {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn snapshot(&self) -> CostLedger {
        *self
    }

    pub(crate) fn record_classical_reads(&mut self, n: u64) {
        self.classical_reads += n;
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FindminConfig {
    /// Constant in front of `√(m·ln(1/ε))`.
    pub charge_constant: f64,
    pub failure_injection: bool,
    pub rng_seed: u64,
}

impl Default for FindminConfig {
    fn default() -> Self {
        FindminConfig {
            charge_constant: 1.0,
            failure_injection: false,
            rng_seed: 0,
        }
    }
}

impl FindminConfig {
    pub fn with_seed(rng_seed: u64) -> Self {
        FindminConfig {
            rng_seed,
            ..Self::default()
        }
    }

    pub fn injecting(rng_seed: u64) -> Self {
        FindminConfig {
            failure_injection: true,
            rng_seed,
            ..Self::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.charge_constant.is_finite() && self.charge_constant > 0.0 {
            Ok(())
        } else {
            Err(Error::InvalidChargeConstant)
        }
    }
}

pub(crate) fn check_eps(eps: f64) -> Result<()> {
    if eps > 0.0 && eps < 1.0 {
        Ok(())
    } else {
        Err(Error::InvalidEpsilon)
    }
}

/// Number of oracle queries charged for minimum finding over `m` elements
/// with failure probability `eps`.
pub fn charge_formula(m: usize, eps: f64, charge_constant: f64) -> Result<u64> {
    check_eps(eps)?;
    if !(charge_constant.is_finite() && charge_constant > 0.0) {
        return Err(Error::InvalidChargeConstant);
    }
    if m == 0 {
        return Err(Error::BadRange { l: 1, r: 0, len: 0 });
    }
    let raw = charge_constant * libm::sqrt(m as f64 * libm::log(1.0 / eps));
    Ok((libm::ceil(raw) as u64).max(1))
}

/// Simulated minimum finding over `a[l..=r]`; returns the argmin index
/// (smallest index among ties) or, on an injected failure, some other index.
pub fn findmin_sim<R: Rng + ?Sized>(
    arr: &OracleArray,
    l: usize,
    r: usize,
    eps: f64,
    cfg: &FindminConfig,
    rng: &mut R,
    ledger: &mut CostLedger,
) -> Result<usize> {
    check_range(l, r, arr.len())?;
    findmin_over_padded(arr, l, r, eps, cfg, rng, ledger).map(|p| p.index)
}

/// Minimum finding over a node range that may extend past the logical array;
/// positions beyond `arr.len()` read as `+∞`.
///
/// The charge uses the full range length. Injected failures only ever return
/// logical positions, so a range holding a single logical element cannot fail.
pub(crate) fn findmin_over_padded<R: Rng + ?Sized>(
    arr: &OracleArray,
    l: usize,
    r: usize,
    eps: f64,
    cfg: &FindminConfig,
    rng: &mut R,
    ledger: &mut CostLedger,
) -> Result<ValueIndexPair> {
    check_eps(eps)?;
    cfg.validate()?;
    if l == 0 || l > r {
        return Err(Error::BadRange { l, r, len: arr.len() });
    }
    let charge = charge_formula(r - l + 1, eps, cfg.charge_constant)?;
    ledger.quantum_queries += charge;
    ledger.findmin_calls += 1;

    let read = |i: usize| arr.get(i).unwrap_or(Value::PlusInfinity);
    let hi = r.min(arr.len());
    let mut best = ValueIndexPair::new(read(l), l);
    for i in l + 1..=hi {
        let v = read(i);
        if v < best.value {
            best = ValueIndexPair::new(v, i);
        }
    }

    if cfg.failure_injection && hi > l && rng.gen::<f64>() < eps {
        // Uniform over the logical positions other than the true argmin.
        let mut idx = l + rng.gen_range(0..hi - l);
        if idx >= best.index {
            idx += 1;
        }
        ledger.failures_injected += 1;
        return Ok(ValueIndexPair::new(read(idx), idx));
    }
    Ok(best)
}
