//! Report construction and command dispatch behind the `testcat` binary,
//! exposed as a library so integration suites can drive the same code paths
//! in-process.

pub mod report;
pub mod run;
