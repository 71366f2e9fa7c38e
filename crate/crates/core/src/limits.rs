//! Size guards for the exhaustive procedures.

use crate::error::{Error, Result};

/// Upper bounds applied before any exhaustive enumeration starts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest alternative count for the maximal-Condorcet extension test.
    pub maximality_n: usize,
    /// Largest domain size for the majority-profile oracle.
    pub oracle_domain: usize,
    /// Largest alternative count for `enumerate_arrow_sp`.
    pub enumerate_n: usize,
    /// Largest alternative count for `represent`.
    pub represent_n: usize,
    /// Largest line count for the verification harnesses.
    pub verify_n: usize,
    /// Largest word length for the tame-theorem harness.
    pub verify_len: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            maximality_n: 8,
            oracle_domain: 64,
            enumerate_n: 5,
            represent_n: 7,
            verify_n: 4,
            verify_len: 8,
        }
    }
}

impl Limits {
    pub fn unbounded() -> Self {
        Limits {
            maximality_n: usize::MAX,
            oracle_domain: usize::MAX,
            enumerate_n: usize::MAX,
            represent_n: usize::MAX,
            verify_n: usize::MAX,
            verify_len: usize::MAX,
        }
    }

    pub(crate) fn check(what: &'static str, value: usize, bound: usize) -> Result<()> {
        if value > bound {
            return Err(Error::Guard {
                what,
                detail: format!("{value} > {bound}"),
            });
        }
        Ok(())
    }
}
