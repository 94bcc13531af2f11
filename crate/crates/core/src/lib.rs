//! Exact computations with saturated fusion systems over small finite
//! p-groups: realized fusion systems, their classical subsystems, quotients,
//! normality checks and centric linking systems.

pub mod bitset;
pub mod catalog;
pub mod cli;
pub mod error;
pub mod fusion;
pub mod group;
pub mod io;
pub mod limits;
pub mod linking;
pub mod perm;
pub mod report;
pub mod selftest;
pub mod subsystem;

pub use error::{FuseError, Result};
