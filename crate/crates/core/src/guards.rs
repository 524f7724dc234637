//! Size guards for the exhaustive procedures.

use crate::error::{Error, Result};

pub const GUARD_ENV: &str = "INDUCED_TREES_GUARD_N";

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub struct Guards {
    /// Exact chromatic number.
    pub chromatic_n: usize,
    /// Backtracking kernel search.
    pub kernel_n: usize,
    /// Rainbow path enumeration and `mu`.
    pub enumerate_n: usize,
    pub enumerate_s: usize,
    /// Induced-copy oracle.
    pub contains_n: usize,
    /// Oriented tree catalog.
    pub catalog_s: usize,
    /// Number of colors for which all orderings may be tried.
    pub orderings_k: usize,
}

impl Default for Guards {
    fn default() -> Self {
        Guards {
            chromatic_n: 40,
            kernel_n: 30,
            enumerate_n: 40,
            enumerate_s: 10,
            contains_n: 14,
            catalog_s: 7,
            orderings_k: 8,
        }
    }
}

impl Guards {
    /// Overrides every vertex-count guard with `n`.
    pub fn with_vertex_guard(mut self, n: usize) -> Self {
        self.chromatic_n = n;
        self.kernel_n = n;
        self.enumerate_n = n;
        self.contains_n = n;
        self
    }

    /// Defaults, with vertex-count guards taken from `INDUCED_TREES_GUARD_N` when set.
    pub fn from_env() -> Self {
        match std::env::var(GUARD_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
        {
            Some(n) => Guards::default().with_vertex_guard(n),
            None => Guards::default(),
        }
    }
}

pub(crate) fn check(what: &'static str, limit: usize, actual: usize) -> Result<()> {
    if actual > limit {
        Err(Error::GuardExceeded {
            what,
            limit,
            actual,
        })
    } else {
        Ok(())
    }
}
