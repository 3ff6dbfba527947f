//! Dynamic range minimum query with a simulated quantum minimum-finding
//! oracle.
//!
//! [`QDynamicRMQ`] answers `argmin` queries and applies range modifications
//! over an array it never preprocesses: nodes of a heap-numbered lazy segment
//! tree are created on demand, each one priced by a call to
//! [`findmin_sim`](qcost::findmin_sim). [`ClassicalSegTree`] is the eager
//! baseline and [`BruteRef`] the linear-scan ground truth.
//!
//! The crate is `no_std` and needs only `alloc`.

#![no_std]

extern crate alloc;

pub mod check;
pub mod classical;
pub mod error;
pub mod kmin;
pub mod oracle;
pub mod qcost;
pub mod quantum;
pub mod tree;
pub mod value;
pub mod workload;

pub use classical::ClassicalSegTree;
pub use error::{Error, Result};
pub use kmin::{kmin_success_trial, qfindmin_k, KMinResult};
pub use oracle::{BruteRef, OracleArray};
pub use qcost::{charge_formula, findmin_sim, CostLedger, FindminConfig};
pub use quantum::{CreationEvent, CreationTrace, NodeVisit, QDynamicRMQ, TraceViolation};
pub use tree::{Geometry, NodeRecord};
pub use value::{mod_apply, mod_compose, pair_min, value_min, ModFn, Value, ValueIndexPair};
pub use workload::{gen_array, gen_ops, ModifyMix, Op, OpSequence, WorkloadSpec};
