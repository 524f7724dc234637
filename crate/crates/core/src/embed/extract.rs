use crate::error::{Error, Result};
use crate::graph::{
    k2r_witness, Coloring, Embedding, GraphView, RootedOrientedTree, UndirectedGraph,
};

/// Induced rainbow copy of `h` inside a rainbow (not necessarily induced) copy
/// of a complete `(rs)`-ary tree with `s` levels in a `K_{2,r}`-free graph.
///
/// Vertices of `h` are placed breadth-first, each on the first unused child of
/// its parent's image that has no other neighbour in the image so far.
pub fn extract_from_rainbow_ary_tree(
    g: &UndirectedGraph,
    ary: &RootedOrientedTree,
    ary_image: &[usize],
    coloring: &Coloring,
    h: &RootedOrientedTree,
    r: usize,
) -> Result<Embedding> {
    let levels = ary_levels(ary)?;
    let branching = ary.children(ary.root()).len();
    if levels > 1 && branching != r * levels {
        return Err(Error::Precondition(format!(
            "need a complete {}-ary tree, got branching {branching}",
            r * levels
        )));
    }
    if h.vertex_count() > levels {
        return Err(Error::Precondition(format!(
            "pattern has {} vertices but the tree only {levels} levels",
            h.vertex_count()
        )));
    }
    let verdict = crate::graph::verify_embedding(g, ary, ary_image, Some(coloring))?;
    if verdict.rainbow != Some(true) {
        return Err(Error::Precondition("tree image is not rainbow".into()));
    }
    if let Some(&(u, v)) = ary
        .arcs()
        .iter()
        .find(|&&(u, v)| !g.adjacent(ary_image[u], ary_image[v]))
    {
        return Err(Error::Precondition(format!(
            "tree edge {u} {v} is not an edge of the host"
        )));
    }
    if let Some(w) = k2r_witness(g, r)? {
        return Err(Error::Precondition(format!(
            "host contains K_{{2,{r}}} on pair {:?}",
            w.pair
        )));
    }

    let s = h.vertex_count();
    let mut at = vec![usize::MAX; s];
    let mut used = vec![false; ary.vertex_count()];
    at[h.root()] = ary.root();
    used[ary.root()] = true;
    let mut placed = vec![ary_image[ary.root()]];
    for &w in &h.topo_order()[1..] {
        let p = h.parent(w).unwrap();
        let parent_img = ary_image[at[p]];
        let pick = ary.children(at[p]).iter().copied().find(|&c| {
            !used[c]
                && placed
                    .iter()
                    .all(|&y| y == parent_img || !g.adjacent(ary_image[c], y))
        });
        let Some(c) = pick else {
            return Err(Error::HostContract(format!(
                "no free child of host vertex {parent_img} avoids the image; the host has a K_{{2,{r}}}"
            )));
        };
        at[w] = c;
        used[c] = true;
        placed.push(ary_image[c]);
    }
    let image = at.iter().map(|&a| ary_image[a]).collect();
    Embedding::new(g, h, image, Some(coloring))
}

/// Number of levels of a complete tree, checking completeness.
fn ary_levels(ary: &RootedOrientedTree) -> Result<usize> {
    let n = ary.vertex_count();
    let mut depth = vec![0usize; n];
    for &v in &ary.topo_order()[1..] {
        depth[v] = depth[ary.parent(v).unwrap()] + 1;
    }
    let levels = depth.iter().max().unwrap() + 1;
    let b = ary.children(ary.root()).len();
    for (v, &d) in depth.iter().enumerate() {
        let want = if d + 1 == levels { 0 } else { b };
        if ary.children(v).len() != want {
            return Err(Error::Precondition(format!(
                "tree is not complete: vertex {v} has {} children",
                ary.children(v).len()
            )));
        }
    }
    Ok(levels)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete_ary_tree, undirected_trees};

    fn host(b: usize, levels: usize) -> (UndirectedGraph, RootedOrientedTree, Coloring) {
        let t = complete_ary_tree(b, levels).unwrap();
        let g = t.to_digraph().underlying();
        let c = Coloring::new((1..=t.vertex_count() as u32).collect()).unwrap();
        (g, t, c)
    }

    #[test]
    fn every_small_tree_from_six_ary() {
        let (g, t, c) = host(6, 3);
        assert_eq!(g.vertex_count(), 43);
        let image: Vec<usize> = (0..43).collect();
        for s in 1..=3 {
            for h in undirected_trees(s).unwrap() {
                let e = extract_from_rainbow_ary_tree(&g, &t, &image, &c, &h, 2).unwrap();
                assert!(e.verdict.induced && e.verdict.rainbow == Some(true));
            }
        }
        let single = RootedOrientedTree::path(1).unwrap();
        let e = extract_from_rainbow_ary_tree(&g, &t, &image, &c, &single, 2).unwrap();
        assert_eq!(e.image, vec![0]);
    }

    #[test]
    fn preconditions() {
        let (g, t, c) = host(6, 3);
        let image: Vec<usize> = (0..43).collect();
        let big = RootedOrientedTree::path(4).unwrap();
        assert!(extract_from_rainbow_ary_tree(&g, &t, &image, &c, &big, 2).is_err());
        let flat = Coloring::new(vec![1; 43]).unwrap();
        let p = RootedOrientedTree::path(2).unwrap();
        assert!(extract_from_rainbow_ary_tree(&g, &t, &image, &flat, &p, 2).is_err());
        assert!(extract_from_rainbow_ary_tree(&g, &t, &image, &c, &p, 3).is_err());
    }
}
