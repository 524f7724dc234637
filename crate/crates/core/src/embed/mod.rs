//! Constructive searches for induced copies of trees.
//!
//! Every search returns an [`Outcome`]: either an embedding whose verdict was
//! computed by [`verify_embedding`](crate::graph::verify_embedding), or the
//! state in which the search got stuck.

mod br;
mod dag;
mod decreasing;
mod diagnostic;
mod extract;
mod good_tree;
mod parity;
mod st;

pub use br::{
    br_chromatic_bound, br_tree_embedding, peeled_set_diagnostic, planted_br_host, BrTrace,
    PeelCheck, PeelRecord,
};
pub use dag::dag_tree_embedding;
pub use decreasing::{
    decreasing_tree_search, rainbow_paths_harness, DecreasingOutcome, Orderings, RainbowPaths,
};
pub use diagnostic::{stuck_state_diagnostic, DiagnosticReport};
pub use extract::extract_from_rainbow_ary_tree;
pub use good_tree::{good_tree_bound, good_tree_search, Blocked, SearchTrace, Step};
pub use parity::{bikernel_tree_embedding, parity_tree_search, BikernelOutcome};
pub use st::{st_plan, LeafSide, PeelStep, StPlan};

use serde::Serialize;

use crate::graph::Embedding;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum Outcome<T = SearchTrace> {
    Embedded { embedding: Embedding, trace: T },
    Stuck { trace: T },
}

impl<T> Outcome<T> {
    pub fn is_embedded(&self) -> bool {
        matches!(self, Outcome::Embedded { .. })
    }

    pub fn embedding(&self) -> Option<&Embedding> {
        match self {
            Outcome::Embedded { embedding, .. } => Some(embedding),
            Outcome::Stuck { .. } => None,
        }
    }

    pub fn trace(&self) -> &T {
        match self {
            Outcome::Embedded { trace, .. } | Outcome::Stuck { trace } => trace,
        }
    }

    pub fn into_trace(self) -> T {
        match self {
            Outcome::Embedded { trace, .. } | Outcome::Stuck { trace } => trace,
        }
    }
}
