//! Files, benchmarks, fits and verification around [`qrmq_core`].

pub mod bench;
pub mod error;
pub mod fit;
pub mod formats;
pub mod verify;

pub use error::{Error, Result};
pub use qrmq_core;
