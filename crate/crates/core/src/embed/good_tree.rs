use serde::Serialize;

use super::Outcome;
use crate::coloring::check_outtree_coloring;
use crate::error::{Error, Result};
use crate::graph::{Coloring, Embedding, GraphView, OrientedGraph, RootedOrientedTree, TreeKind};

/// A candidate rejected because it already has a neighbour among the placed
/// vertices other than the intended parent.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Blocked {
    pub level: usize,
    pub candidate: usize,
    /// First placed vertex (in placement order) adjacent to the candidate.
    pub blocker: usize,
}

/// One attempt to place a non-root tree vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Step {
    pub tree_vertex: usize,
    /// Index into `placed` of the parent's image.
    pub parent_position: usize,
    /// Rejected candidates, from the highest level down.
    pub blocked: Vec<Blocked>,
    /// Accepted `(level, host vertex)`, or `None` if the step got stuck.
    pub accepted: Option<(usize, usize)>,
}

/// Record of a greedy tree search. Levels are positions in the color order
/// counted from 1 (for parity searches, the numeric colors themselves).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchTrace {
    pub top_level: usize,
    /// Tree vertices in placement order.
    pub tree_order: Vec<usize>,
    /// Host vertices in placement order.
    pub placed: Vec<usize>,
    pub placed_levels: Vec<usize>,
    pub steps: Vec<Step>,
    pub stuck: bool,
}

/// Smallest number of colors for which the search is guaranteed to embed
/// every out-tree on `s` vertices in a host free of the `r`-pattern.
pub fn good_tree_bound(r: usize, s: usize) -> usize {
    (r.saturating_sub(1)) * s.saturating_sub(1) * s / 2 + s
}

/// Places tree vertices in `order`, each at the highest admissible level below
/// the previously placed one. `rep(parent, t, away)` names the candidate of
/// level `t` for a child whose arc points away from (or toward) the parent.
pub(crate) fn grow<G: GraphView + ?Sized>(
    host: &G,
    tree: &RootedOrientedTree,
    order: &[usize],
    start: usize,
    top_level: usize,
    rep: impl Fn(usize, usize, bool) -> Option<usize>,
) -> SearchTrace {
    let s = tree.vertex_count();
    let mut pos = vec![0; s];
    for (i, &w) in order.iter().enumerate() {
        pos[w] = i;
    }
    let mut trace = SearchTrace {
        top_level,
        tree_order: order.to_vec(),
        placed: vec![start],
        placed_levels: vec![top_level],
        steps: Vec::new(),
        stuck: false,
    };
    for &w in &order[1..] {
        let parent = tree.parent(w).expect("non-root vertex has a parent");
        let pj = pos[parent];
        let vp = trace.placed[pj];
        let away = tree.points_away_from_parent(w).expect("non-root vertex");
        let mut step = Step {
            tree_vertex: w,
            parent_position: pj,
            blocked: Vec::new(),
            accepted: None,
        };
        let below = *trace.placed_levels.last().unwrap();
        for t in (1..below).rev() {
            let Some(x) = rep(vp, t, away) else { continue };
            let blocker = trace
                .placed
                .iter()
                .enumerate()
                .find(|&(q, &y)| q != pj && host.adjacent(x, y))
                .map(|(_, &y)| y);
            match blocker {
                Some(blocker) => step.blocked.push(Blocked {
                    level: t,
                    candidate: x,
                    blocker,
                }),
                None => {
                    step.accepted = Some((t, x));
                    break;
                }
            }
        }
        let accepted = step.accepted;
        trace.steps.push(step);
        match accepted {
            Some((t, x)) => {
                trace.placed.push(x);
                trace.placed_levels.push(t);
            }
            None => {
                trace.stuck = true;
                break;
            }
        }
    }
    trace
}

pub(crate) fn image_of(trace: &SearchTrace, s: usize) -> Vec<usize> {
    let mut image = vec![0; s];
    for (&w, &x) in trace.tree_order.iter().zip(&trace.placed) {
        image[w] = x;
    }
    image
}

/// Greedy search for an induced copy of the out-tree `tree` in `f`, following
/// out-arcs of `g` (a spanning subdigraph of `f`) downward through the levels
/// of `alpha`, which must be an out-tree coloring of `g`.
///
/// Representatives are the least-index out-neighbour in `g` of each smaller
/// level, fixed before the search starts.
pub fn good_tree_search(
    f: &OrientedGraph,
    g: &OrientedGraph,
    alpha: &Coloring,
    tree: &RootedOrientedTree,
) -> Result<Outcome> {
    let n = f.vertex_count();
    if g.vertex_count() != n {
        return Err(Error::Precondition(format!(
            "hosts have {n} and {} vertices",
            g.vertex_count()
        )));
    }
    if n == 0 {
        return Err(Error::Precondition("empty host".into()));
    }
    if !g.is_subgraph_of(f) {
        return Err(Error::Precondition(
            "search digraph is not a subdigraph of the host".into(),
        ));
    }
    if tree.kind() != TreeKind::OutTree {
        return Err(Error::Precondition(
            "tree must be an out-tree from its root".into(),
        ));
    }
    if let Some(v) = check_outtree_coloring(g, alpha)? {
        return Err(Error::Precondition(format!(
            "not an out-tree coloring: vertex {} has no out-neighbour of color {}",
            v.vertex, v.color
        )));
    }

    let levels = alpha.levels();
    let k = alpha.num_colors();
    let reps: Vec<Vec<usize>> = (0..n)
        .map(|v| {
            let mut row = vec![usize::MAX; levels[v]];
            for &w in g.out_neighbors(v) {
                let t = levels[w];
                if t < levels[v] && row[t] == usize::MAX {
                    row[t] = w;
                }
            }
            row
        })
        .collect();
    let start = (0..n).find(|&v| levels[v] == k).expect("top level is used");
    let trace = grow(f, tree, tree.topo_order(), start, k, |vp, t, _| {
        Some(reps[vp][t]).filter(|&x| x != usize::MAX)
    });
    finish(f, tree, alpha, trace)
}

pub(crate) fn finish(
    host: &OrientedGraph,
    tree: &RootedOrientedTree,
    coloring: &Coloring,
    trace: SearchTrace,
) -> Result<Outcome> {
    if trace.stuck {
        return Ok(Outcome::Stuck { trace });
    }
    let image = image_of(&trace, tree.vertex_count());
    let embedding = Embedding::new(host, tree, image, Some(coloring))?;
    Ok(Outcome::Embedded { embedding, trace })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> (OrientedGraph, Coloring) {
        // a=0 -> b=1, a -> c=2, b -> c
        let d = OrientedGraph::from_arcs(3, [(0, 1), (0, 2), (1, 2)]).unwrap();
        (d, Coloring::new(vec![3, 2, 1]).unwrap())
    }

    #[test]
    fn single_vertex_takes_least_top_vertex() {
        let d = OrientedGraph::from_arcs(3, [(1, 0), (2, 0)]).unwrap();
        let c = Coloring::new(vec![1, 2, 2]).unwrap();
        let t = RootedOrientedTree::path(1).unwrap();
        let out = good_tree_search(&d, &d, &c, &t).unwrap();
        assert_eq!(out.embedding().unwrap().image, vec![1]);
    }

    #[test]
    fn transitive_triangle_two_path() {
        let (d, c) = triangle();
        let out = good_tree_search(&d, &d, &c, &RootedOrientedTree::path(2).unwrap()).unwrap();
        let e = out.embedding().unwrap();
        assert_eq!(e.image, vec![0, 1]);
        assert!(e.verdict.holds());
        assert_eq!(e.verdict.decreasing, Some(true));
    }

    #[test]
    fn transitive_triangle_blocks_three_path() {
        let (d, c) = triangle();
        let out = good_tree_search(&d, &d, &c, &RootedOrientedTree::path(3).unwrap()).unwrap();
        let trace = out.trace();
        assert!(trace.stuck);
        assert_eq!(trace.placed, vec![0, 1]);
        // c is the only level-1 candidate below b, and it is adjacent to a
        assert_eq!(
            trace.steps[1].blocked,
            vec![Blocked {
                level: 1,
                candidate: 2,
                blocker: 0
            }]
        );
    }

    #[test]
    fn rejects_bad_inputs() {
        let (d, c) = triangle();
        let in_tree = RootedOrientedTree::path(2).unwrap().reversed();
        assert!(matches!(
            good_tree_search(&d, &d, &c, &in_tree),
            Err(Error::Precondition(_))
        ));
        let wrong = Coloring::new(vec![1, 2, 3]).unwrap();
        assert!(good_tree_search(&d, &d, &wrong, &RootedOrientedTree::path(2).unwrap()).is_err());
        let bigger = OrientedGraph::from_arcs(3, [(0, 1)]).unwrap();
        assert!(good_tree_search(&bigger, &d, &c, &RootedOrientedTree::path(2).unwrap()).is_err());
    }

    #[test]
    fn bound_values() {
        assert_eq!(good_tree_bound(2, 3), 6);
        assert_eq!(good_tree_bound(2, 4), 10);
        assert_eq!(good_tree_bound(3, 3), 9);
        assert_eq!(good_tree_bound(2, 1), 1);
    }
}
