use super::{GraphView, Host, OrientedGraph};
use crate::error::{Error, Result};

/// Forbidden subgraph patterns: `K2r(r)` is K_{2,r}; `Br(r)` is the family of
/// orientations of K_{2,r} in which one vertex has out-degree r.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Pattern {
    K2r(usize),
    Br(usize),
}

/// `pair` plus `r` common vertices. For `Br` the pair is ordered: the first
/// vertex sends an arc to every vertex of `common`.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct Witness {
    pub pair: (usize, usize),
    pub common: Vec<usize>,
}

/// Lexicographically first witness of `pattern`, or `None` if the host is free of it.
pub fn forbidden_witness(host: Host<'_>, pattern: Pattern) -> Result<Option<Witness>> {
    match (pattern, host) {
        (Pattern::K2r(r), host) => k2r_witness(&host, r),
        (Pattern::Br(r), Host::Digraph(d)) => br_witness(d, r),
        (Pattern::Br(_), Host::Graph(_)) => Err(Error::InvalidParameter(
            "B_r pattern needs an oriented host".into(),
        )),
    }
}

fn check_r(r: usize) -> Result<()> {
    if r < 2 {
        return Err(Error::InvalidParameter(format!(
            "r must be at least 2, got {r}"
        )));
    }
    Ok(())
}

/// Smallest pair `a < b` with at least `r` common neighbours.
pub fn k2r_witness<G: GraphView + ?Sized>(g: &G, r: usize) -> Result<Option<Witness>> {
    check_r(r)?;
    let n = g.vertex_count();
    let mut count = vec![0usize; n];
    for a in 0..n {
        for &m in g.neighbors(a) {
            for &b in g.neighbors(m) {
                if b > a {
                    count[b] += 1;
                }
            }
        }
        let hit = (a + 1..n).find(|&b| count[b] >= r);
        for &m in g.neighbors(a) {
            for &b in g.neighbors(m) {
                count[b] = 0;
            }
        }
        if let Some(b) = hit {
            let common = common_sorted(g.neighbors(a), g.neighbors(b))
                .into_iter()
                .take(r)
                .collect();
            return Ok(Some(Witness {
                pair: (a, b),
                common,
            }));
        }
    }
    Ok(None)
}

/// Smallest ordered pair `(a, b)` with `r` vertices in `N+(a) ∩ N(b)`.
pub fn br_witness(d: &OrientedGraph, r: usize) -> Result<Option<Witness>> {
    check_r(r)?;
    let n = d.vertex_count();
    let mut count = vec![0usize; n];
    for a in 0..n {
        for &m in d.out_neighbors(a) {
            for &b in d.neighbors(m) {
                if b != a {
                    count[b] += 1;
                }
            }
        }
        let hit = (0..n).find(|&b| count[b] >= r);
        for &m in d.out_neighbors(a) {
            for &b in d.neighbors(m) {
                count[b] = 0;
            }
        }
        if let Some(b) = hit {
            let common = common_sorted(d.out_neighbors(a), d.neighbors(b))
                .into_iter()
                .take(r)
                .collect();
            return Ok(Some(Witness {
                pair: (a, b),
                common,
            }));
        }
    }
    Ok(None)
}

fn common_sorted(a: &[usize], b: &[usize]) -> Vec<usize> {
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::new();
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::UndirectedGraph;

    #[test]
    fn c4_is_k22() {
        let c4 = UndirectedGraph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let w = k2r_witness(&c4, 2).unwrap().unwrap();
        assert_eq!(w.pair, (0, 2));
        assert_eq!(w.common, vec![1, 3]);
    }

    #[test]
    fn single_arc_has_no_b2() {
        let d = OrientedGraph::from_arcs(2, [(0, 1)]).unwrap();
        assert_eq!(
            forbidden_witness((&d).into(), Pattern::Br(2)).unwrap(),
            None
        );
    }

    #[test]
    fn out_star_with_shared_neighbour_is_b2() {
        // 0 -> 1, 0 -> 2, 3 - 1, 3 - 2 (any direction)
        let d = OrientedGraph::from_arcs(4, [(0, 1), (0, 2), (1, 3), (3, 2)]).unwrap();
        let w = br_witness(&d, 2).unwrap().unwrap();
        assert_eq!(w.pair, (0, 3));
        assert_eq!(w.common, vec![1, 2]);
        // directed 4-cycle has no vertex with two out-arcs into the pair
        let c = OrientedGraph::from_arcs(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(br_witness(&c, 2).unwrap(), None);
    }

    #[test]
    fn invalid_r() {
        let g = UndirectedGraph::empty(3);
        assert!(k2r_witness(&g, 1).is_err());
        assert!(forbidden_witness((&g).into(), Pattern::Br(2)).is_err());
    }
}
