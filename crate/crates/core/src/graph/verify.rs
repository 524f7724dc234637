use serde::Serialize;

use super::{Coloring, GraphView, RootedOrientedTree};
use crate::error::{Error, Result};

/// Properties of an image of a tree in a host. Flags that do not apply are `None`:
/// direction for undirected hosts, rainbow and decreasing without a coloring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub induced: bool,
    pub direction_exact: Option<bool>,
    pub rainbow: Option<bool>,
    pub decreasing: Option<bool>,
}

impl Verdict {
    /// Induced, direction-exact where applicable, and rainbow where applicable.
    /// Decreasingness is reported but not required.
    pub fn holds(&self) -> bool {
        self.induced && self.direction_exact != Some(false) && self.rainbow != Some(false)
    }
}

/// A tree-vertex to host-vertex map together with its verdict.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Embedding {
    pub image: Vec<usize>,
    pub verdict: Verdict,
}

impl Embedding {
    pub fn new<G: GraphView + ?Sized>(
        host: &G,
        tree: &RootedOrientedTree,
        image: Vec<usize>,
        coloring: Option<&Coloring>,
    ) -> Result<Self> {
        let verdict = verify_embedding(host, tree, &image, coloring)?;
        Ok(Embedding { image, verdict })
    }

    /// Recomputes the verdict and compares it with the stored one.
    pub fn revalidate<G: GraphView + ?Sized>(
        &self,
        host: &G,
        tree: &RootedOrientedTree,
        coloring: Option<&Coloring>,
    ) -> Result<bool> {
        Ok(verify_embedding(host, tree, &self.image, coloring)? == self.verdict)
    }
}

pub fn verify_embedding<G: GraphView + ?Sized>(
    host: &G,
    tree: &RootedOrientedTree,
    image: &[usize],
    coloring: Option<&Coloring>,
) -> Result<Verdict> {
    let s = tree.vertex_count();
    let n = host.vertex_count();
    if image.len() != s {
        return Err(Error::ImageLength {
            expected: s,
            actual: image.len(),
        });
    }
    let mut used = std::collections::HashSet::with_capacity(s);
    for &x in image {
        if x >= n {
            return Err(Error::VertexOutOfRange {
                vertex: x,
                count: n,
            });
        }
        if !used.insert(x) {
            return Err(Error::NonInjective(x));
        }
    }
    if let Some(c) = coloring {
        c.ensure_total(n)?;
    }

    let induced = (0..s)
        .all(|a| (a + 1..s).all(|b| host.adjacent(image[a], image[b]) == tree.adjacent(a, b)));
    let direction_exact = host.is_oriented().then(|| {
        tree.arcs()
            .iter()
            .all(|&(u, v)| host.arc(image[u], image[v]) == Some(true))
    });
    let rainbow = coloring.map(|c| {
        let colors: std::collections::HashSet<u32> = image.iter().map(|&x| c.color(x)).collect();
        colors.len() == s
    });
    let decreasing = coloring.map(|c| {
        (0..s).all(|v| match tree.parent(v) {
            Some(p) => c.level(image[p]) > c.level(image[v]),
            None => true,
        })
    });
    Ok(Verdict {
        induced,
        direction_exact,
        rainbow,
        decreasing,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{OrientedGraph, UndirectedGraph};

    #[test]
    fn triangle_has_no_induced_path() {
        let c3 = UndirectedGraph::from_edges(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        let t = RootedOrientedTree::path(3).unwrap();
        let v = verify_embedding(&c3, &t, &[0, 1, 2], None).unwrap();
        assert!(!v.induced);
        assert_eq!(v.direction_exact, None);
    }

    #[test]
    fn path_in_path() {
        let p3 = UndirectedGraph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        let t = RootedOrientedTree::path(3).unwrap();
        assert!(verify_embedding(&p3, &t, &[0, 1, 2], None).unwrap().induced);
    }

    #[test]
    fn directed_path_all_flags() {
        let d = OrientedGraph::from_arcs(3, [(0, 1), (1, 2)]).unwrap();
        let t = RootedOrientedTree::path(3).unwrap();
        let c = Coloring::new(vec![3, 2, 1]).unwrap();
        let v = verify_embedding(&d, &t, &[0, 1, 2], Some(&c)).unwrap();
        assert_eq!(
            v,
            Verdict {
                induced: true,
                direction_exact: Some(true),
                rainbow: Some(true),
                decreasing: Some(true),
            }
        );
        assert!(v.holds());
        let w = verify_embedding(&d, &t.reversed(), &[0, 1, 2], Some(&c)).unwrap();
        assert_eq!(w.direction_exact, Some(false));
    }

    #[test]
    fn bad_images() {
        let p3 = UndirectedGraph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        let t = RootedOrientedTree::path(2).unwrap();
        assert_eq!(
            verify_embedding(&p3, &t, &[1, 1], None),
            Err(Error::NonInjective(1))
        );
        assert!(matches!(
            verify_embedding(&p3, &t, &[1, 7], None),
            Err(Error::VertexOutOfRange { .. })
        ));
        assert!(matches!(
            verify_embedding(&p3, &t, &[1], None),
            Err(Error::ImageLength { .. })
        ));
    }
}
