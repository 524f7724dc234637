use serde::Serialize;

use super::good_tree::{finish, grow};
use super::Outcome;
use crate::coloring::{check_parity_coloring, parity_coloring, PeelLayers};
use crate::error::{Error, Result};
use crate::graph::{Coloring, OrientedGraph, RootedOrientedTree};

/// Greedy search for an induced copy of any oriented tree under a parity
/// coloring. Tree vertices are placed in depth-first order; a child joined by
/// an arc away from its parent takes an out-neighbour of even color, otherwise
/// an in-neighbour of odd color.
pub fn parity_tree_search(
    d: &OrientedGraph,
    gamma: &Coloring,
    tree: &RootedOrientedTree,
) -> Result<Outcome> {
    let n = d.vertex_count();
    if n == 0 {
        return Err(Error::Precondition("empty host".into()));
    }
    if let Some(v) = check_parity_coloring(d, gamma)? {
        return Err(Error::Precondition(format!(
            "not a parity coloring: vertex {} misses color {}",
            v.vertex, v.color
        )));
    }
    let colors: Vec<usize> = gamma.colors().iter().map(|&c| c as usize).collect();
    let top = *colors.iter().max().unwrap();
    let reps: Vec<Vec<usize>> = (0..n)
        .map(|v| {
            let mut row = vec![usize::MAX; colors[v]];
            for &w in d.out_neighbors(v) {
                let t = colors[w];
                if t < colors[v] && t.is_multiple_of(2) && row[t] == usize::MAX {
                    row[t] = w;
                }
            }
            for &w in d.in_neighbors(v) {
                let t = colors[w];
                if t < colors[v] && t % 2 == 1 && row[t] == usize::MAX {
                    row[t] = w;
                }
            }
            row
        })
        .collect();
    let start = (0..n).find(|&v| colors[v] == top).unwrap();
    let trace = grow(d, tree, tree.dfs_order(), start, top, |vp, t, away| {
        if away != (t % 2 == 0) {
            return None;
        }
        Some(reps[vp][t]).filter(|&x| x != usize::MAX)
    });
    finish(d, tree, gamma, trace)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BikernelOutcome {
    pub gamma: Coloring,
    pub layers: PeelLayers,
    /// Root of the tree under which the returned outcome was found.
    pub root: usize,
    pub outcome: Outcome,
}

/// Parity coloring by kernel peeling followed by [`parity_tree_search`].
/// If the search gets stuck with the given root, the other vertices are tried
/// as roots in ascending order; the last stuck outcome is kept otherwise.
pub fn bikernel_tree_embedding(
    d: &OrientedGraph,
    tree: &RootedOrientedTree,
    kernel_guard_n: usize,
) -> Result<BikernelOutcome> {
    let (gamma, layers) = parity_coloring(d, kernel_guard_n)?;
    let roots =
        std::iter::once(tree.root()).chain((0..tree.vertex_count()).filter(|&v| v != tree.root()));
    let mut last = None;
    for root in roots {
        let rooted = tree.with_root(root)?;
        let outcome = parity_tree_search(d, &gamma, &rooted)?;
        let done = outcome.is_embedded();
        last = Some((root, outcome));
        if done {
            break;
        }
    }
    let (root, outcome) = last.expect("a tree has a vertex");
    Ok(BikernelOutcome {
        gamma,
        layers,
        root,
        outcome,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_arc_rooted_at_head() {
        // u=0 -> v=1, colors 1 and 2
        let d = OrientedGraph::from_arcs(2, [(0, 1)]).unwrap();
        let gamma = Coloring::new(vec![1, 2]).unwrap();
        let t = RootedOrientedTree::new(2, vec![(0, 1)], 1).unwrap();
        let out = parity_tree_search(&d, &gamma, &t).unwrap();
        assert_eq!(out.trace().placed, vec![1, 0]);
        let e = out.embedding().unwrap();
        assert_eq!(e.image, vec![0, 1]);
        assert!(e.verdict.holds());
        // rooted at the tail the only candidate color (1) has the wrong parity
        let tail = RootedOrientedTree::path(2).unwrap();
        assert!(!parity_tree_search(&d, &gamma, &tail).unwrap().is_embedded());
    }

    #[test]
    fn bikernel_retries_roots() {
        let d = OrientedGraph::from_arcs(2, [(0, 1)]).unwrap();
        let r = bikernel_tree_embedding(&d, &RootedOrientedTree::path(2).unwrap(), 30).unwrap();
        assert!(r.outcome.is_embedded());
        assert_eq!(r.root, 1);
        let single = RootedOrientedTree::path(1).unwrap();
        assert!(bikernel_tree_embedding(&d, &single, 30)
            .unwrap()
            .outcome
            .is_embedded());
    }

    #[test]
    fn rejects_non_parity_coloring() {
        // u -> v with u colored 2 needs an in-neighbour of color 1
        let d = OrientedGraph::from_arcs(2, [(0, 1)]).unwrap();
        let gamma = Coloring::new(vec![2, 1]).unwrap();
        let t = RootedOrientedTree::path(1).unwrap();
        assert!(matches!(
            parity_tree_search(&d, &gamma, &t),
            Err(Error::Precondition(_))
        ));
    }
}
