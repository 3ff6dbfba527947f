//! Seeded generators for arrays and operation sequences, plus the line-based
//! text form of an operation sequence (`Q <l> <r>` / `M <l> <r> <modfn>`).

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use rand::distributions::{Distribution, WeightedIndex};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::oracle::OracleArray;
use crate::value::{ModFn, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Op {
    Query { l: usize, r: usize },
    Modify { l: usize, r: usize, f: ModFn },
}

impl Op {
    pub fn range(&self) -> (usize, usize) {
        match *self {
            Op::Query { l, r } | Op::Modify { l, r, .. } => (l, r),
        }
    }
}

impl fmt::Display for Op {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Op::Query { l, r } => write!(f, "Q {l} {r}"),
            Op::Modify { l, r, f: m } => write!(f, "M {l} {r} {m}"),
        }
    }
}

impl FromStr for Op {
    type Err = Error;

    fn from_str(line: &str) -> Result<Self> {
        let bad = || Error::Parse {
            what: "operation",
            token: line.to_string(),
        };
        let mut parts = line.split_whitespace();
        let kind = parts.next().ok_or_else(bad)?;
        let mut index = || -> Result<usize> { parts.next().and_then(|t| t.parse().ok()).ok_or_else(bad) };
        let (l, r) = (index()?, index()?);
        let op = match kind {
            "Q" => Op::Query { l, r },
            "M" => {
                let f = parts.next().ok_or_else(bad)?.parse::<ModFn>()?;
                Op::Modify { l, r, f }
            }
            _ => return Err(bad()),
        };
        if parts.next().is_some() {
            return Err(bad());
        }
        Ok(op)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct OpSequence(pub Vec<Op>);

impl OpSequence {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> core::slice::Iter<'_, Op> {
        self.0.iter()
    }

    /// Every range lies within `[1, n]`.
    pub fn fits(&self, n: usize) -> bool {
        self.iter().all(|op| {
            let (l, r) = op.range();
            1 <= l && l <= r && r <= n
        })
    }

    pub fn to_text(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for OpSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for op in &self.0 {
            writeln!(f, "{op}")?;
        }
        Ok(())
    }
}

/// Parses one op per line. Blank lines and lines starting with `#` are
/// skipped.
impl FromStr for OpSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .map(str::parse)
            .collect::<Result<Vec<_>>>()
            .map(OpSequence)
    }
}

impl<'a> IntoIterator for &'a OpSequence {
    type Item = &'a Op;
    type IntoIter = core::slice::Iter<'a, Op>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

/// Relative weights of the three modification shapes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModifyMix {
    /// `Add(b)` on a random range.
    pub add: f64,
    /// `Assign(c)` on a single position.
    pub point_assign: f64,
    /// `Identity` on a random range.
    pub range_identity: f64,
}

impl Default for ModifyMix {
    fn default() -> Self {
        ModifyMix {
            add: 1.0,
            point_assign: 1.0,
            range_identity: 1.0,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct WorkloadSpec {
    pub n: usize,
    pub q: usize,
    pub query_fraction: f64,
    /// Values (and assigned constants) are drawn from `0..=value_range`.
    pub value_range: u64,
    /// Largest increment used by `Add`.
    pub add_max: u64,
    pub mix: ModifyMix,
    /// Chance that a query or range modification is shrunk to a single point.
    pub point_bias: f64,
    /// Chance that a point assignment writes `+∞` instead of a finite value.
    pub infinity_rate: f64,
    pub seed: u64,
}

impl WorkloadSpec {
    pub fn new(n: usize, q: usize, seed: u64) -> Self {
        WorkloadSpec {
            n,
            q,
            query_fraction: 0.5,
            value_range: 1_000_000,
            add_max: 1_000,
            mix: ModifyMix::default(),
            point_bias: 0.5,
            infinity_rate: 0.125,
            seed,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let unit = |x: f64| (0.0..=1.0).contains(&x);
        if self.n == 0 {
            return Err(Error::InvalidWorkload("n must be positive"));
        }
        if self.q > self.n {
            return Err(Error::InvalidWorkload("q must not exceed n"));
        }
        if !unit(self.query_fraction) || !unit(self.point_bias) || !unit(self.infinity_rate) {
            return Err(Error::InvalidWorkload("fractions must lie in [0, 1]"));
        }
        let w = [self.mix.add, self.mix.point_assign, self.mix.range_identity];
        if w.iter().any(|x| !x.is_finite() || *x < 0.0) || w.iter().all(|x| *x == 0.0) {
            return Err(Error::InvalidWorkload("modify weights must be non-negative and not all zero"));
        }
        Ok(())
    }
}

pub fn gen_array(n: usize, value_range: u64, seed: u64) -> Result<OracleArray> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    OracleArray::new(
        (0..n)
            .map(|_| Value::Finite(rng.gen_range(0..=value_range)))
            .collect(),
    )
}

pub fn gen_ops(spec: &WorkloadSpec) -> Result<OpSequence> {
    spec.validate()?;
    // Offset so arrays and op streams drawn from the same seed differ.
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed ^ 0x9e37_79b9_7f4a_7c15);
    let kinds = WeightedIndex::new([spec.mix.add, spec.mix.point_assign, spec.mix.range_identity])
        .map_err(|_| Error::InvalidWorkload("bad modify weights"))?;
    let n = spec.n;
    let mut ops = Vec::with_capacity(spec.q);
    for _ in 0..spec.q {
        let op = if rng.gen_bool(spec.query_fraction) {
            let (l, r) = draw_range(&mut rng, n, spec.point_bias);
            Op::Query { l, r }
        } else {
            match kinds.sample(&mut rng) {
                0 => {
                    let (l, r) = draw_range(&mut rng, n, spec.point_bias);
                    Op::Modify {
                        l,
                        r,
                        f: ModFn::Add(rng.gen_range(0..=spec.add_max)),
                    }
                }
                1 => {
                    let i = rng.gen_range(1..=n);
                    let c = if rng.gen_bool(spec.infinity_rate) {
                        Value::PlusInfinity
                    } else {
                        Value::Finite(rng.gen_range(0..=spec.value_range))
                    };
                    Op::Modify {
                        l: i,
                        r: i,
                        f: ModFn::Assign(c),
                    }
                }
                _ => {
                    let (l, r) = draw_range(&mut rng, n, spec.point_bias);
                    Op::Modify {
                        l,
                        r,
                        f: ModFn::Identity,
                    }
                }
            }
        };
        ops.push(op);
    }
    Ok(OpSequence(ops))
}

fn draw_range<R: Rng>(rng: &mut R, n: usize, point_bias: f64) -> (usize, usize) {
    if rng.gen_bool(point_bias) {
        let i = rng.gen_range(1..=n);
        (i, i)
    } else {
        let a = rng.gen_range(1..=n);
        let b = rng.gen_range(1..=n);
        (a.min(b), a.max(b))
    }
}
