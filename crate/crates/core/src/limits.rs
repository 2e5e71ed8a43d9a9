//! Search budgets shared by the enumeration-heavy operations.

use serde::Serialize;
use thiserror::Error;

/// Default number of coset-table deductions before an enumeration gives up.
pub const DEFAULT_COSET_BUDGET: u64 = 100_000;

/// Default cap on candidate tuples visited by exhaustive searches
/// (functor enumeration, homotopy enumeration, hom-groupoids).
pub const DEFAULT_ENUM_CAP: u64 = 1_000_000;

/// Default truncation dimension for nerves and homology reports.
pub const DEFAULT_NERVE_DIM: usize = 3;

/// Budgets used by searches. All values must be positive.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct Limits {
    /// One unit = one coset-table deduction in a coset enumeration.
    pub coset_budget: u64,
    /// One unit = one node visited in a backtracking enumeration.
    pub enum_cap: u64,
    /// Truncation bound for nerve-based evidence.
    pub nerve_dim: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            coset_budget: DEFAULT_COSET_BUDGET,
            enum_cap: DEFAULT_ENUM_CAP,
            nerve_dim: DEFAULT_NERVE_DIM,
        }
    }
}

/// An exhaustive search outgrew its cap. The operation fails fast instead of
/// hanging; callers either propagate the error or degrade to `Unknown`.
#[derive(Clone, Debug, Error, PartialEq, Eq, Serialize)]
#[error("search space exceeded cap of {cap} nodes ({context})")]
pub struct SizeExceeded {
    pub cap: u64,
    pub context: &'static str,
}

/// Counter ticking towards a cap.
#[derive(Clone, Debug)]
pub struct Counter {
    used: u64,
    cap: u64,
    context: &'static str,
}

impl Counter {
    pub fn new(cap: u64, context: &'static str) -> Self {
        Counter { used: 0, cap, context }
    }

    pub fn tick(&mut self) -> Result<(), SizeExceeded> {
        self.used += 1;
        if self.used > self.cap {
            Err(SizeExceeded { cap: self.cap, context: self.context })
        } else {
            Ok(())
        }
    }

    pub fn used(&self) -> u64 {
        self.used
    }
}
