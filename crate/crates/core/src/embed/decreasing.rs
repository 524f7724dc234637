use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rayon::prelude::*;
use serde::Serialize;

use super::good_tree::good_tree_search;
use super::Outcome;
use crate::coloring::{greedy_refinement, natural_orientation};
use crate::error::{Error, Result};
use crate::generators::rng;
use crate::graph::{verify_embedding, Coloring, Embedding, RootedOrientedTree, UndirectedGraph};
use crate::guards::{self, Guards};
use crate::oracle::CanonicalPath;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DecreasingOutcome {
    /// Greedy refinement of `beta` used for the search.
    pub alpha: Coloring,
    /// Embedding verdicts are taken in `g` under `beta`.
    pub outcome: Outcome,
    pub rainbow_under_alpha: Option<bool>,
}

/// Induced copy of `tree` (orientation ignored) in `g` whose `beta` colors
/// strictly decrease away from the root.
///
/// Searches the natural orientation of the refined coloring, restricted to the
/// arcs along which `beta` decreases.
pub fn decreasing_tree_search(
    g: &UndirectedGraph,
    beta: &Coloring,
    tree: &RootedOrientedTree,
) -> Result<DecreasingOutcome> {
    let alpha = greedy_refinement(g, beta)?.alpha;
    let d = natural_orientation(g, &alpha)?;
    let down = d.filter_arcs(|u, v| beta.level(u) > beta.level(v));
    let outcome = match good_tree_search(&d, &down, &alpha, &tree.as_out_tree())? {
        Outcome::Embedded { embedding, trace } => {
            let rainbow = embedding.verdict.rainbow;
            let embedding = Embedding::new(g, tree, embedding.image, Some(beta))?;
            return Ok(DecreasingOutcome {
                alpha,
                outcome: Outcome::Embedded { embedding, trace },
                rainbow_under_alpha: rainbow,
            });
        }
        stuck => stuck,
    };
    Ok(DecreasingOutcome {
        alpha,
        outcome,
        rainbow_under_alpha: None,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Orderings {
    /// Every permutation of the used colors.
    All,
    /// `count` uniformly random permutations.
    Sample { count: usize, seed: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RainbowPaths {
    pub paths: BTreeSet<CanonicalPath>,
    pub runs: usize,
    pub successes: usize,
    /// Returned paths that failed independent verification (always 0 unless
    /// something is broken).
    pub unverified: usize,
}

impl RainbowPaths {
    pub fn distinct(&self) -> usize {
        self.paths.len()
    }
}

fn permutations(items: &[u32]) -> Vec<Vec<u32>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, head);
            out.push(tail);
        }
    }
    out
}

/// Runs [`decreasing_tree_search`] with an `s`-vertex path under many orders of
/// the colors of `beta` and collects the distinct induced rainbow paths found.
pub fn rainbow_paths_harness(
    g: &UndirectedGraph,
    beta: &Coloring,
    s: usize,
    orderings: Orderings,
    guards: &Guards,
) -> Result<RainbowPaths> {
    if s == 0 {
        return Err(Error::InvalidParameter(
            "paths need at least one vertex".into(),
        ));
    }
    beta.ensure_proper(g)?;
    let orders = match orderings {
        Orderings::All => {
            guards::check("color orderings", guards.orderings_k, beta.num_colors())?;
            permutations(beta.order())
        }
        Orderings::Sample { count, seed } => {
            let mut rng = rng(seed);
            (0..count)
                .map(|_| {
                    let mut o = beta.order().to_vec();
                    o.shuffle(&mut rng);
                    o
                })
                .collect()
        }
    };
    let path = RootedOrientedTree::path(s)?;
    let found: Vec<Option<Vec<usize>>> = orders
        .into_par_iter()
        .map(|order| {
            let ordered = beta.reordered(order)?;
            let run = decreasing_tree_search(g, &ordered, &path)?;
            Ok(run.outcome.embedding().map(|e| e.image.clone()))
        })
        .collect::<Result<_>>()?;

    let mut result = RainbowPaths {
        paths: BTreeSet::new(),
        runs: found.len(),
        successes: 0,
        unverified: 0,
    };
    for image in found.into_iter().flatten() {
        result.successes += 1;
        let v = verify_embedding(g, &path, &image, Some(beta))?;
        if v.induced && v.rainbow == Some(true) {
            result.paths.insert(CanonicalPath::new(image));
        } else {
            result.unverified += 1;
        }
    }
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{named_graph, NamedGraph};

    fn c5() -> UndirectedGraph {
        named_graph(NamedGraph::Cycle(5)).unwrap()
    }

    #[test]
    fn c5_two_paths() {
        let beta = Coloring::new(vec![1, 2, 1, 2, 3]).unwrap();
        let r = rainbow_paths_harness(&c5(), &beta, 2, Orderings::All, &Guards::default()).unwrap();
        assert_eq!(r.runs, 6);
        assert_eq!(r.unverified, 0);
        assert!(r.distinct() >= 1);
    }

    #[test]
    fn single_vertex_paths_collapse() {
        let beta = Coloring::new(vec![1, 2, 1, 2, 3]).unwrap();
        let r = rainbow_paths_harness(&c5(), &beta, 1, Orderings::All, &Guards::default()).unwrap();
        assert_eq!(r.successes, 6);
        assert!(r.paths.iter().all(|p| p.len() == 1));
    }

    #[test]
    fn decreasing_under_beta() {
        let beta = Coloring::new(vec![1, 2, 1, 2, 3]).unwrap();
        let t = RootedOrientedTree::path(3).unwrap();
        let out = decreasing_tree_search(&c5(), &beta, &t).unwrap();
        if let Some(e) = out.outcome.embedding() {
            assert!(e.verdict.induced);
            assert_eq!(e.verdict.decreasing, Some(true));
            assert_eq!(out.rainbow_under_alpha, Some(true));
        }
    }

    #[test]
    fn ordering_guard() {
        let g = named_graph(NamedGraph::Complete(9)).unwrap();
        let beta = Coloring::new((1..=9).collect()).unwrap();
        assert!(matches!(
            rainbow_paths_harness(&g, &beta, 2, Orderings::All, &Guards::default()),
            Err(Error::GuardExceeded { .. })
        ));
        let r = rainbow_paths_harness(
            &g,
            &beta,
            2,
            Orderings::Sample { count: 5, seed: 1 },
            &Guards::default(),
        )
        .unwrap();
        assert_eq!(r.runs, 5);
    }
}
