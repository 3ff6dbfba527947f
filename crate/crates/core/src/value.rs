//! The ordered value set, the modification monoid, and the `(value, index)`
//! pair used for smallest-index tie-breaking.

use core::fmt;
use core::str::FromStr;

use alloc::string::ToString;

use crate::error::{Error, Result};

/// An element of `ℕ ∪ {+∞}`.
///
/// The derived ordering puts every `Finite` before `PlusInfinity`, which is
/// exactly the natural order on the extended naturals.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Value {
    Finite(u64),
    PlusInfinity,
}

impl Value {
    pub const INF: Value = Value::PlusInfinity;

    pub fn is_finite(self) -> bool {
        matches!(self, Value::Finite(_))
    }

    pub fn min(self, other: Value) -> Value {
        value_min(self, other)
    }

    /// `self + b`, with `+∞` absorbing.
    pub fn checked_add(self, b: u64) -> Result<Value> {
        match self {
            Value::Finite(x) => x.checked_add(b).map(Value::Finite).ok_or(Error::Overflow),
            Value::PlusInfinity => Ok(Value::PlusInfinity),
        }
    }
}

impl From<u64> for Value {
    fn from(x: u64) -> Self {
        Value::Finite(x)
    }
}

pub fn value_min(x: Value, y: Value) -> Value {
    if y < x {
        y
    } else {
        x
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Finite(x) => write!(f, "{x}"),
            Value::PlusInfinity => f.write_str("inf"),
        }
    }
}

impl FromStr for Value {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "inf" {
            return Ok(Value::PlusInfinity);
        }
        s.parse::<u64>().map(Value::Finite).map_err(|_| Error::Parse {
            what: "value",
            token: s.to_string(),
        })
    }
}

/// Canonical element of the modification monoid.
///
/// Every variant commutes with `min`, stores in O(1) and composes in O(1).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum ModFn {
    #[default]
    Identity,
    /// `x ↦ x + b`
    Add(u64),
    /// `x ↦ c`
    Assign(Value),
}

impl ModFn {
    /// `self ∘ inner`: apply `inner` first, then `self`.
    pub fn compose(self, inner: ModFn) -> Result<ModFn> {
        mod_compose(self, inner)
    }

    pub fn apply(self, x: Value) -> Result<Value> {
        mod_apply(self, x)
    }

    /// Applies the map to the value half of a pair; the index is carried along.
    pub fn apply_pair(self, p: ValueIndexPair) -> Result<ValueIndexPair> {
        Ok(ValueIndexPair {
            value: self.apply(p.value)?,
            index: p.index,
        })
    }

    pub fn is_identity(self) -> bool {
        matches!(self, ModFn::Identity)
    }
}

pub fn mod_compose(f: ModFn, g: ModFn) -> Result<ModFn> {
    Ok(match (f, g) {
        (ModFn::Identity, g) => g,
        (f, ModFn::Identity) => f,
        (ModFn::Assign(c), _) => ModFn::Assign(c),
        (ModFn::Add(b), ModFn::Add(b2)) => ModFn::Add(b.checked_add(b2).ok_or(Error::Overflow)?),
        (ModFn::Add(b), ModFn::Assign(c)) => ModFn::Assign(c.checked_add(b)?),
    })
}

pub fn mod_apply(f: ModFn, x: Value) -> Result<Value> {
    match f {
        ModFn::Identity => Ok(x),
        ModFn::Add(b) => x.checked_add(b),
        ModFn::Assign(c) => Ok(c),
    }
}

impl fmt::Display for ModFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModFn::Identity => f.write_str("id"),
            ModFn::Add(b) => write!(f, "add:{b}"),
            ModFn::Assign(c) => write!(f, "assign:{c}"),
        }
    }
}

impl FromStr for ModFn {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse {
            what: "modification",
            token: s.to_string(),
        };
        if s == "id" {
            return Ok(ModFn::Identity);
        }
        match s.split_once(':') {
            Some(("add", b)) => b.parse::<u64>().map(ModFn::Add).map_err(|_| bad()),
            Some(("assign", c)) => c.parse::<Value>().map(ModFn::Assign).map_err(|_| bad()),
            _ => Err(bad()),
        }
    }
}

/// A value together with its 1-based array position.
///
/// Field order matters: the derived `Ord` is lexicographic, so the smaller
/// value wins and ties go to the smaller index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ValueIndexPair {
    pub value: Value,
    pub index: usize,
}

impl ValueIndexPair {
    pub fn new(value: impl Into<Value>, index: usize) -> Self {
        ValueIndexPair {
            value: value.into(),
            index,
        }
    }
}

pub fn pair_min(p: ValueIndexPair, q: ValueIndexPair) -> ValueIndexPair {
    if q < p {
        q
    } else {
        p
    }
}

impl fmt::Display for ValueIndexPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.value, self.index)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Value::{Finite, PlusInfinity};

    fn p(v: Value, i: usize) -> ValueIndexPair {
        ValueIndexPair { value: v, index: i }
    }

    #[test]
    fn value_min_examples() {
        assert_eq!(value_min(Finite(3), Finite(7)), Finite(3));
        assert_eq!(value_min(PlusInfinity, Finite(0)), Finite(0));
        assert_eq!(value_min(PlusInfinity, PlusInfinity), PlusInfinity);
        assert!(Finite(u64::MAX) < PlusInfinity);
    }

    #[test]
    fn compose_examples() {
        assert_eq!(mod_compose(ModFn::Add(3), ModFn::Assign(Finite(5))), Ok(ModFn::Assign(Finite(8))));
        assert_eq!(mod_compose(ModFn::Assign(Finite(2)), ModFn::Add(9)), Ok(ModFn::Assign(Finite(2))));
        assert_eq!(mod_compose(ModFn::Identity, ModFn::Add(4)), Ok(ModFn::Add(4)));
        assert_eq!(
            mod_compose(ModFn::Add(1), ModFn::Assign(PlusInfinity)),
            Ok(ModFn::Assign(PlusInfinity))
        );
    }

    #[test]
    fn apply_examples() {
        assert_eq!(mod_apply(ModFn::Add(2), PlusInfinity), Ok(PlusInfinity));
        assert_eq!(mod_apply(ModFn::Assign(Finite(7)), Finite(1)), Ok(Finite(7)));
        assert_eq!(mod_apply(ModFn::Add(10), Finite(5)), Ok(Finite(15)));
    }

    #[test]
    fn overflow_is_an_error() {
        assert_eq!(mod_apply(ModFn::Add(1), Finite(u64::MAX)), Err(Error::Overflow));
        assert_eq!(mod_compose(ModFn::Add(u64::MAX), ModFn::Add(1)), Err(Error::Overflow));
        assert_eq!(
            mod_compose(ModFn::Add(2), ModFn::Assign(Finite(u64::MAX - 1))),
            Err(Error::Overflow)
        );
    }

    #[test]
    fn pair_min_examples() {
        assert_eq!(pair_min(p(Finite(1), 4), p(Finite(1), 2)), p(Finite(1), 2));
        assert_eq!(pair_min(p(Finite(0), 9), p(Finite(5), 1)), p(Finite(0), 9));
        assert_eq!(pair_min(p(PlusInfinity, 1), p(Finite(3), 8)), p(Finite(3), 8));
    }

    #[test]
    fn text_tokens() {
        assert_eq!("inf".parse::<Value>(), Ok(PlusInfinity));
        assert_eq!(" 42 ".parse::<Value>(), Ok(Finite(42)));
        assert!("-1".parse::<Value>().is_err());
        assert_eq!("id".parse::<ModFn>(), Ok(ModFn::Identity));
        assert_eq!("add:7".parse::<ModFn>(), Ok(ModFn::Add(7)));
        assert_eq!("assign:inf".parse::<ModFn>(), Ok(ModFn::Assign(PlusInfinity)));
        assert!("add:inf".parse::<ModFn>().is_err());
        assert!("mul:2".parse::<ModFn>().is_err());
        assert_eq!(ModFn::Assign(Finite(3)).to_string(), "assign:3");
        assert_eq!(ModFn::Add(0).to_string(), "add:0");
    }
}
