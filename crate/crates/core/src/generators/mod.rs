//! Instance sources: named graphs, random graphs and digraphs, synthetic
//! out-tree-colored digraphs and tree catalogs.

mod named;
mod random;
mod synth;
mod trees;

pub use named::{mycielski, named_graph, NamedGraph};
pub use random::{
    random_color_order, random_dag, random_graph, random_greedy_coloring, triangle_free_process,
    GraphFilter,
};
pub use synth::{
    br_through_arc, default_class_sizes, synth_outtree_colored, Constraint, DigraphBuilder,
    SynthConfig, SynthInstance,
};
pub use trees::{complete_ary_tree, oriented_trees, random_tree, undirected_trees, TreeCatalog};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// The seeded generator used throughout.
pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}
