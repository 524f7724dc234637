use super::{PeelKind, PeelLayers, Violation};
use crate::error::Result;
use crate::graph::{Coloring, GraphView, OrientedGraph};

/// Orients every edge from its higher-colored end to its lower-colored end.
pub fn natural_orientation<G: GraphView + ?Sized>(g: &G, c: &Coloring) -> Result<OrientedGraph> {
    c.ensure_proper(g)?;
    let n = g.vertex_count();
    let mut arcs = Vec::with_capacity(g.edge_count());
    for u in 0..n {
        for &v in g.neighbors(u) {
            if c.level(u) > c.level(v) {
                arcs.push((u, v));
            }
        }
    }
    OrientedGraph::from_arcs(n, arcs)
}

/// `None` when every vertex sees every smaller used color among its
/// out-neighbours; otherwise the first vertex and the smallest missing color.
pub fn check_outtree_coloring(d: &OrientedGraph, c: &Coloring) -> Result<Option<Violation>> {
    c.ensure_proper(d)?;
    for v in 0..d.vertex_count() {
        let level = c.level(v);
        let mut have = vec![false; level];
        for &u in d.out_neighbors(v) {
            let l = c.level(u);
            if l < level {
                have[l] = true;
            }
        }
        if let Some(l) = (1..level).find(|&l| !have[l]) {
            return Ok(Some(Violation {
                vertex: v,
                color: c.order()[l - 1],
            }));
        }
    }
    Ok(None)
}

/// Repeatedly strips the sinks of an acyclic digraph; layer `i` gets color `i`.
pub fn level_peel(d: &OrientedGraph) -> Result<(Coloring, PeelLayers)> {
    let order = d.topological_order()?;
    let n = d.vertex_count();
    let mut level = vec![0u32; n];
    for &u in order.iter().rev() {
        level[u] = 1 + d
            .out_neighbors(u)
            .iter()
            .map(|&w| level[w])
            .max()
            .unwrap_or(0);
    }
    let k = level.iter().copied().max().unwrap_or(0) as usize;
    let mut layers = vec![Vec::new(); k];
    for (v, &l) in level.iter().enumerate() {
        layers[l as usize - 1].push(v);
    }
    Ok((
        Coloring::new(level)?,
        PeelLayers {
            layers,
            kind: PeelKind::OutDegreePeel,
        },
    ))
}

pub fn level_coloring(d: &OrientedGraph) -> Result<Coloring> {
    level_peel(d).map(|(c, _)| c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::UndirectedGraph;
    use crate::Error;

    #[test]
    fn orientation_examples() {
        let k2 = UndirectedGraph::from_edges(2, [(0, 1)]).unwrap();
        let d = natural_orientation(&k2, &Coloring::new(vec![2, 1]).unwrap()).unwrap();
        assert!(d.has_arc(0, 1));
        let p = UndirectedGraph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        let d = natural_orientation(&p, &Coloring::new(vec![1, 2, 1]).unwrap()).unwrap();
        assert_eq!(d.arcs().collect::<Vec<_>>(), vec![(1, 0), (1, 2)]);
        let c5 = UndirectedGraph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let d = natural_orientation(&c5, &Coloring::new(vec![1, 2, 1, 2, 3]).unwrap()).unwrap();
        assert!(d.is_acyclic());
    }

    #[test]
    fn outtree_checker() {
        let single = OrientedGraph::empty(1);
        assert_eq!(
            check_outtree_coloring(&single, &Coloring::new(vec![1]).unwrap()).unwrap(),
            None
        );
        let arc = OrientedGraph::from_arcs(2, [(0, 1)]).unwrap();
        assert_eq!(
            check_outtree_coloring(&arc, &Coloring::new(vec![2, 1]).unwrap()).unwrap(),
            None
        );
        let d = OrientedGraph::from_arcs(3, [(0, 1)]).unwrap();
        assert_eq!(
            check_outtree_coloring(&d, &Coloring::new(vec![3, 1, 2]).unwrap()).unwrap(),
            Some(Violation {
                vertex: 0,
                color: 2
            })
        );
    }

    #[test]
    fn level_examples() {
        let arc = OrientedGraph::from_arcs(2, [(0, 1)]).unwrap();
        assert_eq!(level_coloring(&arc).unwrap().colors(), &[2, 1]);
        assert_eq!(
            level_coloring(&OrientedGraph::empty(3)).unwrap().colors(),
            &[1, 1, 1]
        );
        let tt = OrientedGraph::from_arcs(3, [(0, 1), (0, 2), (1, 2)]).unwrap();
        let (c, layers) = level_peel(&tt).unwrap();
        assert_eq!(c.colors(), &[3, 2, 1]);
        assert_eq!(layers.layers, vec![vec![2], vec![1], vec![0]]);
        let cyc = OrientedGraph::from_arcs(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(level_coloring(&cyc), Err(Error::DirectedCycle));
    }
}
