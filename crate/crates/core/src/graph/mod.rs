//! Graph and digraph representations.
//!
//! Vertices are dense `0..n` indices. Neighbour lists are kept sorted so that
//! adjacency tests are a binary search and iteration order is deterministic.

mod chromatic;
mod color;
mod girth;
mod tree;
mod verify;
mod witness;

pub use chromatic::{
    chromatic_number, exact_chromatic, greedy_clique, greedy_coloring, k_coloring, ChromaticMode,
    ChromaticResult,
};
pub use color::{is_proper, Coloring};
pub use girth::{girth, Girth};
pub use tree::{RootedOrientedTree, TreeKind};
pub use verify::{verify_embedding, Embedding, Verdict};
pub use witness::{br_witness, forbidden_witness, k2r_witness, Pattern, Witness};

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashSet};

use crate::error::{Error, Result};

/// Read-only view shared by undirected and oriented graphs.
pub trait GraphView {
    fn vertex_count(&self) -> usize;

    /// Neighbours in the underlying undirected graph, ascending.
    fn neighbors(&self, v: usize) -> &[usize];

    fn adjacent(&self, u: usize, v: usize) -> bool {
        self.neighbors(u).binary_search(&v).is_ok()
    }

    /// `Some(true)` iff `u -> v` is an arc. Undirected graphs return `None`.
    fn arc(&self, u: usize, v: usize) -> Option<bool>;

    fn is_oriented(&self) -> bool;

    fn edge_count(&self) -> usize {
        (0..self.vertex_count())
            .map(|v| self.neighbors(v).len())
            .sum::<usize>()
            / 2
    }

    fn degree(&self, v: usize) -> usize {
        self.neighbors(v).len()
    }
}

fn check_vertex(v: usize, n: usize) -> Result<()> {
    if v >= n {
        Err(Error::VertexOutOfRange {
            vertex: v,
            count: n,
        })
    } else {
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UndirectedGraph {
    adj: Vec<Vec<usize>>,
}

impl UndirectedGraph {
    pub fn empty(n: usize) -> Self {
        UndirectedGraph {
            adj: vec![Vec::new(); n],
        }
    }

    /// Builds a graph from an edge list. Self-loops, repeated edges (in either
    /// orientation) and out-of-range endpoints are errors.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            check_vertex(u, n)?;
            check_vertex(v, n)?;
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::DuplicateEdge(u.min(w[0]), u.max(w[0])));
            }
        }
        Ok(UndirectedGraph { adj })
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// Subgraph induced by `vertices`. The returned map sends new indices to old ones.
    pub fn induce(&self, vertices: &[usize]) -> Result<(UndirectedGraph, Vec<usize>)> {
        let (map, back) = relabel(self.adj.len(), vertices)?;
        let edges = self
            .edges()
            .filter_map(|(u, v)| Some((back[u]?, back[v]?)))
            .collect::<Vec<_>>();
        Ok((UndirectedGraph::from_edges(map.len(), edges)?, map))
    }

    /// Copy of the graph with vertex `v` renamed to `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<UndirectedGraph> {
        check_permutation(perm, self.adj.len())?;
        UndirectedGraph::from_edges(
            self.adj.len(),
            self.edges().map(|(u, v)| (perm[u], perm[v])),
        )
    }

    pub fn is_triangle_free(&self) -> bool {
        self.edges().all(|(u, v)| {
            let (a, b) = (&self.adj[u], &self.adj[v]);
            let (mut i, mut j) = (0, 0);
            while i < a.len() && j < b.len() {
                match a[i].cmp(&b[j]) {
                    std::cmp::Ordering::Less => i += 1,
                    std::cmp::Ordering::Greater => j += 1,
                    std::cmp::Ordering::Equal => return false,
                }
            }
            true
        })
    }
}

impl GraphView for UndirectedGraph {
    fn vertex_count(&self) -> usize {
        self.adj.len()
    }
    fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }
    fn arc(&self, _u: usize, _v: usize) -> Option<bool> {
        None
    }
    fn is_oriented(&self) -> bool {
        false
    }
}

/// A digraph without loops or 2-cycles.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OrientedGraph {
    out: Vec<Vec<usize>>,
    inn: Vec<Vec<usize>>,
    und: Vec<Vec<usize>>,
}

impl OrientedGraph {
    pub fn empty(n: usize) -> Self {
        OrientedGraph {
            out: vec![Vec::new(); n],
            inn: vec![Vec::new(); n],
            und: vec![Vec::new(); n],
        }
    }

    pub fn from_arcs<I>(n: usize, arcs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut out = vec![Vec::new(); n];
        let mut inn = vec![Vec::new(); n];
        for (u, v) in arcs {
            check_vertex(u, n)?;
            check_vertex(v, n)?;
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            out[u].push(v);
            inn[v].push(u);
        }
        for (u, list) in out.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::DuplicateEdge(u, w[0]));
            }
        }
        for list in inn.iter_mut() {
            list.sort_unstable();
        }
        let mut und = vec![Vec::new(); n];
        for u in 0..n {
            for &v in &out[u] {
                if out[v].binary_search(&u).is_ok() {
                    return Err(Error::TwoCycle(u.min(v), u.max(v)));
                }
                und[u].push(v);
                und[v].push(u);
            }
        }
        for list in und.iter_mut() {
            list.sort_unstable();
        }
        Ok(OrientedGraph { out, inn, und })
    }

    pub fn vertex_count(&self) -> usize {
        self.out.len()
    }

    pub fn out_neighbors(&self, v: usize) -> &[usize] {
        &self.out[v]
    }

    pub fn in_neighbors(&self, v: usize) -> &[usize] {
        &self.inn[v]
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out[v].len()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.inn[v].len()
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.out[u].binary_search(&v).is_ok()
    }

    /// Arcs in lexicographic `(tail, head)` order.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.out
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().map(move |&v| (u, v)))
    }

    pub fn arc_count(&self) -> usize {
        self.out.iter().map(Vec::len).sum()
    }

    pub fn underlying(&self) -> UndirectedGraph {
        UndirectedGraph {
            adj: self.und.clone(),
        }
    }

    pub fn reverse(&self) -> OrientedGraph {
        OrientedGraph {
            out: self.inn.clone(),
            inn: self.out.clone(),
            und: self.und.clone(),
        }
    }

    /// Subdigraph induced by `vertices`; the map sends new indices to old ones.
    pub fn induce(&self, vertices: &[usize]) -> Result<(OrientedGraph, Vec<usize>)> {
        let (map, back) = relabel(self.out.len(), vertices)?;
        let arcs = self
            .arcs()
            .filter_map(|(u, v)| Some((back[u]?, back[v]?)))
            .collect::<Vec<_>>();
        Ok((OrientedGraph::from_arcs(map.len(), arcs)?, map))
    }

    /// Spanning subdigraph keeping the arcs accepted by `keep`.
    pub fn filter_arcs(&self, mut keep: impl FnMut(usize, usize) -> bool) -> OrientedGraph {
        let arcs = self.arcs().filter(|&(u, v)| keep(u, v)).collect::<Vec<_>>();
        OrientedGraph::from_arcs(self.out.len(), arcs).expect("subset of a valid arc set")
    }

    pub fn permuted(&self, perm: &[usize]) -> Result<OrientedGraph> {
        check_permutation(perm, self.out.len())?;
        OrientedGraph::from_arcs(self.out.len(), self.arcs().map(|(u, v)| (perm[u], perm[v])))
    }

    /// True when every arc of `self` is an arc of `other` (same vertex set).
    pub fn is_subgraph_of(&self, other: &OrientedGraph) -> bool {
        self.out.len() == other.out.len() && self.arcs().all(|(u, v)| other.has_arc(u, v))
    }

    /// Kahn's algorithm, always emitting the smallest available vertex.
    pub fn topological_order(&self) -> Result<Vec<usize>> {
        let n = self.out.len();
        let mut indeg: Vec<usize> = self.inn.iter().map(Vec::len).collect();
        let mut heap: BinaryHeap<Reverse<usize>> =
            (0..n).filter(|&v| indeg[v] == 0).map(Reverse).collect();
        let mut order = Vec::with_capacity(n);
        while let Some(Reverse(u)) = heap.pop() {
            order.push(u);
            for &v in &self.out[u] {
                indeg[v] -= 1;
                if indeg[v] == 0 {
                    heap.push(Reverse(v));
                }
            }
        }
        if order.len() == n {
            Ok(order)
        } else {
            Err(Error::DirectedCycle)
        }
    }

    pub fn is_acyclic(&self) -> bool {
        self.topological_order().is_ok()
    }
}

impl GraphView for OrientedGraph {
    fn vertex_count(&self) -> usize {
        self.out.len()
    }
    fn neighbors(&self, v: usize) -> &[usize] {
        &self.und[v]
    }
    fn arc(&self, u: usize, v: usize) -> Option<bool> {
        Some(self.has_arc(u, v))
    }
    fn is_oriented(&self) -> bool {
        true
    }
}

/// Either kind of host, for operations that accept both.
#[derive(Clone, Copy, Debug)]
pub enum Host<'a> {
    Graph(&'a UndirectedGraph),
    Digraph(&'a OrientedGraph),
}

impl<'a> From<&'a UndirectedGraph> for Host<'a> {
    fn from(g: &'a UndirectedGraph) -> Self {
        Host::Graph(g)
    }
}

impl<'a> From<&'a OrientedGraph> for Host<'a> {
    fn from(d: &'a OrientedGraph) -> Self {
        Host::Digraph(d)
    }
}

impl GraphView for Host<'_> {
    fn vertex_count(&self) -> usize {
        match self {
            Host::Graph(g) => g.vertex_count(),
            Host::Digraph(d) => d.vertex_count(),
        }
    }
    fn neighbors(&self, v: usize) -> &[usize] {
        match self {
            Host::Graph(g) => g.neighbors(v),
            Host::Digraph(d) => d.neighbors(v),
        }
    }
    fn arc(&self, u: usize, v: usize) -> Option<bool> {
        match self {
            Host::Graph(_) => None,
            Host::Digraph(d) => Some(d.has_arc(u, v)),
        }
    }
    fn is_oriented(&self) -> bool {
        matches!(self, Host::Digraph(_))
    }
}

fn relabel(n: usize, vertices: &[usize]) -> Result<(Vec<usize>, Vec<Option<usize>>)> {
    let mut back = vec![None; n];
    let mut map = Vec::with_capacity(vertices.len());
    for &v in vertices {
        check_vertex(v, n)?;
        if back[v].is_some() {
            return Err(Error::InvalidParameter(format!(
                "vertex {v} listed twice in induced set"
            )));
        }
        back[v] = Some(map.len());
        map.push(v);
    }
    Ok((map, back))
}

fn check_permutation(perm: &[usize], n: usize) -> Result<()> {
    let seen: HashSet<usize> = perm.iter().copied().collect();
    if perm.len() != n || seen.len() != n || perm.iter().any(|&p| p >= n) {
        return Err(Error::InvalidParameter(format!(
            "not a permutation of 0..{n}"
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(
            UndirectedGraph::from_edges(2, [(0, 0)]),
            Err(Error::SelfLoop(0))
        );
        assert_eq!(
            UndirectedGraph::from_edges(3, [(0, 1), (1, 0)]),
            Err(Error::DuplicateEdge(0, 1))
        );
        assert!(matches!(
            UndirectedGraph::from_edges(2, [(0, 2)]),
            Err(Error::VertexOutOfRange { vertex: 2, .. })
        ));
        assert_eq!(
            OrientedGraph::from_arcs(2, [(0, 1), (1, 0)]),
            Err(Error::TwoCycle(0, 1))
        );
    }

    #[test]
    fn reverse_and_underlying() {
        let d = OrientedGraph::from_arcs(2, [(0, 1)]).unwrap();
        let r = d.reverse();
        assert!(r.has_arc(1, 0) && !r.has_arc(0, 1));
        let u = d.underlying();
        assert!(u.adjacent(0, 1) && u.adjacent(1, 0));
        assert_eq!(u.edge_count(), 1);
    }

    #[test]
    fn topological_order_is_forced_on_a_path() {
        let d = OrientedGraph::from_arcs(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(d.topological_order().unwrap(), vec![0, 1, 2]);
        let cyc = OrientedGraph::from_arcs(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(cyc.topological_order(), Err(Error::DirectedCycle));
    }

    #[test]
    fn induce_keeps_arcs_and_map() {
        let d = OrientedGraph::from_arcs(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let (sub, map) = d.induce(&[3, 0, 1]).unwrap();
        assert_eq!(map, vec![3, 0, 1]);
        assert!(sub.has_arc(0, 1) && sub.has_arc(1, 2));
        assert_eq!(sub.arc_count(), 2);
    }

    #[test]
    fn triangle_free_detection() {
        let c3 = UndirectedGraph::from_edges(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        let p3 = UndirectedGraph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        assert!(!c3.is_triangle_free());
        assert!(p3.is_triangle_free());
    }
}
