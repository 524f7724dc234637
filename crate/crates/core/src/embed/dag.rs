use super::good_tree::good_tree_search;
use super::Outcome;
use crate::coloring::{check_outtree_coloring, greedy_refinement, level_coloring};
use crate::error::{Error, Result};
use crate::graph::{Coloring, Embedding, OrientedGraph, RootedOrientedTree, TreeKind};

/// Induced copy of an out-tree or in-tree in a DAG.
///
/// Out-trees run [`good_tree_search`] on the DAG itself with `supplied` (which
/// must be an out-tree coloring of `d`) or, without one, the greedy refinement
/// of the level coloring. In-trees reverse every arc of the DAG and of the
/// tree, reverse the order of `supplied`, and search for the out-tree.
pub fn dag_tree_embedding(
    d: &OrientedGraph,
    tree: &RootedOrientedTree,
    supplied: Option<&Coloring>,
) -> Result<Outcome> {
    d.topological_order()?;
    match tree.kind() {
        TreeKind::OutTree => {
            let alpha = match supplied {
                Some(c) => {
                    if let Some(v) = check_outtree_coloring(d, c)? {
                        return Err(Error::Precondition(format!(
                            "supplied coloring is not an out-tree coloring: vertex {} has no \
                             out-neighbour of color {}",
                            v.vertex, v.color
                        )));
                    }
                    c.clone()
                }
                None => greedy_refinement(&d.underlying(), &level_coloring(d)?)?.alpha,
            };
            good_tree_search(d, d, &alpha, tree)
        }
        TreeKind::InTree => {
            let flipped = supplied.map(Coloring::reversed_order);
            let outcome = dag_tree_embedding(&d.reverse(), &tree.reversed(), flipped.as_ref())?;
            Ok(match outcome {
                Outcome::Embedded { embedding, trace } => {
                    let embedding = Embedding::new(d, tree, embedding.image, supplied)?;
                    Outcome::Embedded { embedding, trace }
                }
                stuck => stuck,
            })
        }
        TreeKind::General => Err(Error::Precondition(
            "DAG embedding handles out-trees and in-trees only".into(),
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{synth_outtree_colored, Constraint, SynthConfig};

    #[test]
    fn single_vertex() {
        let d = OrientedGraph::empty(1);
        let out = dag_tree_embedding(&d, &RootedOrientedTree::path(1).unwrap(), None).unwrap();
        assert_eq!(out.embedding().unwrap().image, vec![0]);
    }

    #[test]
    fn paths_both_ways() {
        let d = OrientedGraph::from_arcs(4, [(0, 1), (1, 2), (2, 3), (0, 2)]).unwrap();
        let out = RootedOrientedTree::path(2).unwrap();
        let e = dag_tree_embedding(&d, &out, None).unwrap();
        assert!(e.embedding().unwrap().verdict.holds());
        let e = dag_tree_embedding(&d, &out.reversed(), None).unwrap();
        let e = e.embedding().unwrap();
        assert!(e.verdict.holds());
        assert!(d.has_arc(e.image[1], e.image[0]));
    }

    #[test]
    fn rejects_cycles_and_bad_colorings() {
        let c = OrientedGraph::from_arcs(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        let t = RootedOrientedTree::path(2).unwrap();
        assert_eq!(dag_tree_embedding(&c, &t, None), Err(Error::DirectedCycle));
        let d = OrientedGraph::from_arcs(2, [(0, 1)]).unwrap();
        let bad = Coloring::new(vec![1, 2]).unwrap();
        assert!(matches!(
            dag_tree_embedding(&d, &t, Some(&bad)),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn two_sided_corpus_embeds_four_vertex_trees() {
        let mut cfg = SynthConfig::new(10, Constraint::BrFree(2), 11);
        cfg.two_sided = true;
        let inst = synth_outtree_colored(&cfg).unwrap();
        let cat = crate::generators::oriented_trees(4, 7).unwrap();
        for t in cat.out_trees().iter().chain(cat.in_trees().iter()) {
            let out = dag_tree_embedding(&inst.digraph, t, Some(&inst.alpha)).unwrap();
            assert!(out.embedding().unwrap().verdict.holds());
        }
    }
}
