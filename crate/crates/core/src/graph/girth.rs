use std::collections::VecDeque;
use std::fmt;

use super::GraphView;

/// Length of a shortest cycle, or `Acyclic` for forests. Orders every finite
/// girth below `Acyclic`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Girth {
    Finite(usize),
    Acyclic,
}

impl Girth {
    pub fn at_least(self, g: usize) -> bool {
        match self {
            Girth::Finite(len) => len >= g,
            Girth::Acyclic => true,
        }
    }

    pub fn finite(self) -> Option<usize> {
        match self {
            Girth::Finite(len) => Some(len),
            Girth::Acyclic => None,
        }
    }
}

/// Serialized as the cycle length, or `null` when acyclic.
impl serde::Serialize for Girth {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.finite().serialize(s)
    }
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(len) => write!(f, "{len}"),
            Girth::Acyclic => f.write_str("acyclic"),
        }
    }
}

/// Girth of the underlying undirected graph, by a BFS from every vertex.
pub fn girth<G: GraphView + ?Sized>(g: &G) -> Girth {
    let n = g.vertex_count();
    let mut best = usize::MAX;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    for root in 0..n {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        dist[root] = 0;
        parent[root] = usize::MAX;
        queue.clear();
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            // nothing shorter can close beyond this depth
            if 2 * dist[u] + 1 >= best {
                break;
            }
            for &w in g.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    best = best.min(dist[u] + dist[w] + 1);
                }
            }
        }
    }
    if best == usize::MAX {
        Girth::Acyclic
    } else {
        Girth::Finite(best)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{OrientedGraph, UndirectedGraph};

    fn cycle(n: usize) -> UndirectedGraph {
        UndirectedGraph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn cycles() {
        assert_eq!(girth(&cycle(5)), Girth::Finite(5));
        assert_eq!(girth(&cycle(3)), Girth::Finite(3));
        assert_eq!(girth(&cycle(10)), Girth::Finite(10));
    }

    #[test]
    fn trees_are_acyclic() {
        let star = UndirectedGraph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(girth(&star), Girth::Acyclic);
        assert_eq!(girth(&UndirectedGraph::empty(3)), Girth::Acyclic);
        assert!(Girth::Acyclic > Girth::Finite(1000));
    }

    #[test]
    fn digraph_cycles_ignore_direction() {
        // transitive triangle: no directed cycle, girth still 3
        let d = OrientedGraph::from_arcs(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(girth(&d), Girth::Finite(3));
    }
}
