//! Coloring constructions and their definitional checkers.

mod kernel;
mod orient;
mod parity;
mod refine;

pub use kernel::{is_kernel, kernel_set, KernelKind, KernelMethod};
pub use orient::{check_outtree_coloring, level_coloring, level_peel, natural_orientation};
pub use parity::{check_parity_coloring, parity_coloring};
pub use refine::{check_refinement_witnesses, greedy_refinement, RefinementResult};

use serde::Serialize;

/// First vertex found lacking a required color among its neighbours.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub vertex: usize,
    pub color: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PeelKind {
    /// Layer `i` is the set of sinks left after removing layers `1..i`.
    OutDegreePeel,
    /// Odd layers are antikernels and even layers kernels of what remains.
    KernelAlternation,
}

/// An ordered partition of the vertex set into nonempty layers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PeelLayers {
    pub layers: Vec<Vec<usize>>,
    pub kind: PeelKind,
}

impl PeelLayers {
    /// Coloring with `color(v) = i` for `v` in the `i`-th layer.
    pub fn to_coloring(&self, n: usize) -> crate::Result<crate::graph::Coloring> {
        let mut colors = vec![0u32; n];
        for (i, layer) in self.layers.iter().enumerate() {
            for &v in layer {
                colors[v] = i as u32 + 1;
            }
        }
        crate::graph::Coloring::new(colors)
    }
}
