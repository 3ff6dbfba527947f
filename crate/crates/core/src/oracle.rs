//! The immutable input array behind the oracle, and the mutable brute-force
//! reference used as ground truth.

use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::qcost::CostLedger;
use crate::value::{pair_min, ModFn, Value, ValueIndexPair};

/// The array `a[1..n]` addressed by the oracle.
///
/// Cloning is cheap and every clone sees the same values. There is no way to
/// mutate it once built: modifications live in the data structures, never
/// here.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleArray {
    values: Arc<[Value]>,
}

impl OracleArray {
    pub fn new(values: Vec<Value>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::EmptyArray);
        }
        Ok(OracleArray {
            values: values.into(),
        })
    }

    pub fn from_u64s(values: &[u64]) -> Result<Self> {
        Self::new(values.iter().copied().map(Value::Finite).collect())
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Plain classical read of `a[i]`, accounted in `classical_reads`.
    pub fn read(&self, i: usize, ledger: &mut CostLedger) -> Result<Value> {
        let v = self.get(i).ok_or(Error::IndexOutOfRange {
            index: i,
            len: self.len(),
        })?;
        ledger.record_classical_reads(1);
        Ok(v)
    }

    /// Unaccounted lookup, for callers that have already paid for the access.
    pub(crate) fn get(&self, i: usize) -> Option<Value> {
        i.checked_sub(1).and_then(|j| self.values.get(j)).copied()
    }

    pub fn values(&self) -> &[Value] {
        &self.values
    }
}

pub(crate) fn check_range(l: usize, r: usize, len: usize) -> Result<()> {
    if l == 0 || l > r || r > len {
        return Err(Error::BadRange { l, r, len });
    }
    Ok(())
}

/// Mutable array with linear-time operations; the differential-test oracle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BruteRef {
    values: Vec<Value>,
}

impl BruteRef {
    pub fn new(arr: &OracleArray) -> Self {
        BruteRef {
            values: arr.values().to_vec(),
        }
    }

    pub fn from_values(values: Vec<Value>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::EmptyArray);
        }
        Ok(BruteRef { values })
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[Value] {
        &self.values
    }

    pub fn rmq(&self, l: usize, r: usize) -> Result<ValueIndexPair> {
        check_range(l, r, self.len())?;
        let mut best = ValueIndexPair::new(self.values[l - 1], l);
        for i in l + 1..=r {
            let v = self.values[i - 1];
            if v < best.value {
                best = ValueIndexPair::new(v, i);
            }
        }
        Ok(best)
    }

    /// Minimum over `[l, r]` where positions past the end count as `+∞`.
    pub fn rmq_padded(&self, l: usize, r: usize) -> ValueIndexPair {
        if l > self.len() {
            return ValueIndexPair::new(Value::PlusInfinity, l);
        }
        let hi = r.min(self.len());
        let best = self.rmq(l, hi).expect("range clipped to array");
        if hi < r {
            pair_min(best, ValueIndexPair::new(Value::PlusInfinity, hi + 1))
        } else {
            best
        }
    }

    /// Applies `f` pointwise on `[l, r]`. On overflow the array is left as it
    /// was before the call.
    pub fn modify(&mut self, l: usize, r: usize, f: ModFn) -> Result<()> {
        check_range(l, r, self.len())?;
        let updated = self.values[l - 1..r]
            .iter()
            .map(|&v| f.apply(v))
            .collect::<Result<Vec<_>>>()?;
        self.values[l - 1..r].copy_from_slice(&updated);
        Ok(())
    }

    /// Indices of the `k` lexicographically smallest `(value, index)` pairs,
    /// in ascending pair order.
    pub fn kmin(&self, k: usize) -> Result<Vec<usize>> {
        if k == 0 || k > self.len() {
            return Err(Error::KOutOfRange { k, len: self.len() });
        }
        let mut pairs: Vec<ValueIndexPair> = self
            .values
            .iter()
            .enumerate()
            .map(|(j, &v)| ValueIndexPair::new(v, j + 1))
            .collect();
        pairs.sort_unstable();
        Ok(pairs.into_iter().take(k).map(|p| p.index).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use Value::{Finite, PlusInfinity};

    fn arr(xs: &[u64]) -> OracleArray {
        OracleArray::from_u64s(xs).unwrap()
    }

    #[test]
    fn oracle_read_counts_classical_reads() {
        let a = arr(&[3, 1, 4]);
        let mut ledger = CostLedger::default();
        assert_eq!(a.read(2, &mut ledger), Ok(Finite(1)));
        assert_eq!(ledger.classical_reads, 1);
        assert_eq!(ledger.quantum_queries, 0);
        assert!(matches!(a.read(4, &mut ledger), Err(Error::IndexOutOfRange { .. })));
        assert!(a.read(0, &mut ledger).is_err());
        assert_eq!(ledger.classical_reads, 1);

        let inf = OracleArray::new(vec![PlusInfinity]).unwrap();
        assert_eq!(inf.read(1, &mut ledger), Ok(PlusInfinity));
    }

    #[test]
    fn empty_arrays_rejected() {
        assert_eq!(OracleArray::new(vec![]), Err(Error::EmptyArray));
    }

    #[test]
    fn brute_rmq_examples() {
        let b = BruteRef::new(&arr(&[3, 1, 4, 1, 5, 9, 2, 6]));
        assert_eq!(b.rmq(1, 8), Ok(ValueIndexPair::new(1, 2)));
        assert_eq!(b.rmq(5, 8), Ok(ValueIndexPair::new(2, 7)));
        for k in 1..=8 {
            assert_eq!(b.rmq(k, k).unwrap(), ValueIndexPair::new(b.values()[k - 1], k));
        }
        assert!(b.rmq(3, 2).is_err());
        assert!(b.rmq(0, 2).is_err());
        assert!(b.rmq(1, 9).is_err());
    }

    #[test]
    fn brute_rmq_padded_treats_tail_as_infinity() {
        let b = BruteRef::new(&arr(&[3, 1, 4]));
        assert_eq!(b.rmq_padded(1, 4), ValueIndexPair::new(1, 2));
        assert_eq!(b.rmq_padded(4, 4), ValueIndexPair::new(PlusInfinity, 4));
        let all_inf = BruteRef::from_values(vec![PlusInfinity, PlusInfinity, PlusInfinity]).unwrap();
        assert_eq!(all_inf.rmq_padded(2, 4), ValueIndexPair::new(PlusInfinity, 2));
    }

    #[test]
    fn brute_modify_examples() {
        let mut b = BruteRef::new(&arr(&[3, 1, 4]));
        b.modify(1, 3, ModFn::Add(1)).unwrap();
        assert_eq!(b.values(), &[Finite(4), Finite(2), Finite(5)]);

        let mut b = BruteRef::new(&arr(&[3, 1, 4]));
        b.modify(2, 2, ModFn::Assign(PlusInfinity)).unwrap();
        assert_eq!(b.values(), &[Finite(3), PlusInfinity, Finite(4)]);

        let mut b = BruteRef::new(&arr(&[3, 1, 4]));
        b.modify(1, 2, ModFn::Identity).unwrap();
        assert_eq!(b.values(), &[Finite(3), Finite(1), Finite(4)]);
        assert!(b.modify(2, 4, ModFn::Identity).is_err());
    }

    #[test]
    fn brute_modify_overflow_leaves_state() {
        let mut b = BruteRef::new(&arr(&[1, u64::MAX]));
        assert_eq!(b.modify(1, 2, ModFn::Add(1)), Err(Error::Overflow));
        assert_eq!(b.values(), &[Finite(1), Finite(u64::MAX)]);
    }

    #[test]
    fn brute_kmin_examples() {
        assert_eq!(BruteRef::new(&arr(&[3, 1, 4, 1, 5])).kmin(2), Ok(vec![2, 4]));
        assert_eq!(BruteRef::new(&arr(&[9])).kmin(1), Ok(vec![1]));
        assert_eq!(BruteRef::new(&arr(&[2, 2, 2])).kmin(3), Ok(vec![1, 2, 3]));
        assert!(BruteRef::new(&arr(&[2, 2, 2])).kmin(0).is_err());
        assert!(BruteRef::new(&arr(&[2, 2, 2])).kmin(4).is_err());
    }
}
