use std::collections::VecDeque;

use super::OrientedGraph;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TreeKind {
    /// Every arc points away from the root.
    OutTree,
    /// Every arc points toward the root.
    InTree,
    General,
}

/// An oriented tree with a distinguished root.
///
/// `topo_order` is breadth-first from the root and `dfs_order` is preorder,
/// both visiting children in ascending index order, so every parent precedes
/// its children in either order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RootedOrientedTree {
    arcs: Vec<(usize, usize)>,
    root: usize,
    parent: Vec<Option<usize>>,
    children: Vec<Vec<usize>>,
    out: Vec<Vec<usize>>,
    inn: Vec<Vec<usize>>,
    topo_order: Vec<usize>,
    dfs_order: Vec<usize>,
    kind: TreeKind,
}

impl RootedOrientedTree {
    pub fn new(n: usize, arcs: Vec<(usize, usize)>, root: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::NotATree("a tree needs at least one vertex".into()));
        }
        if root >= n {
            return Err(Error::NotATree(format!("root {root} is not a vertex")));
        }
        if arcs.len() + 1 != n {
            return Err(Error::NotATree(format!(
                "{} arcs on {n} vertices",
                arcs.len()
            )));
        }
        // rejects loops, duplicates and 2-cycles
        let d = OrientedGraph::from_arcs(n, arcs.iter().copied())?;
        let mut out = vec![Vec::new(); n];
        let mut inn = vec![Vec::new(); n];
        for v in 0..n {
            out[v] = d.out_neighbors(v).to_vec();
            inn[v] = d.in_neighbors(v).to_vec();
        }
        let neighbors = |v: usize| {
            let mut all: Vec<usize> = out[v].iter().chain(&inn[v]).copied().collect();
            all.sort_unstable();
            all
        };

        let mut parent = vec![None; n];
        let mut children = vec![Vec::new(); n];
        let mut seen = vec![false; n];
        let mut topo_order = Vec::with_capacity(n);
        let mut queue = VecDeque::from([root]);
        seen[root] = true;
        while let Some(u) = queue.pop_front() {
            topo_order.push(u);
            for w in neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = Some(u);
                    children[u].push(w);
                    queue.push_back(w);
                }
            }
        }
        if topo_order.len() != n {
            return Err(Error::NotATree("arc set is not connected".into()));
        }

        let mut dfs_order = Vec::with_capacity(n);
        let mut stack = vec![root];
        while let Some(u) = stack.pop() {
            dfs_order.push(u);
            stack.extend(children[u].iter().rev());
        }

        let away = (0..n)
            .filter_map(|v| parent[v].map(|p| (p, v)))
            .map(|(p, v)| d.has_arc(p, v))
            .collect::<Vec<_>>();
        let kind = if away.iter().all(|&a| a) {
            TreeKind::OutTree
        } else if away.iter().all(|&a| !a) {
            TreeKind::InTree
        } else {
            TreeKind::General
        };

        let mut arcs = arcs;
        arcs.sort_unstable();
        Ok(RootedOrientedTree {
            arcs,
            root,
            parent,
            children,
            out,
            inn,
            topo_order,
            dfs_order,
            kind,
        })
    }

    /// Directed path `0 -> 1 -> ... -> s-1`, rooted at 0.
    pub fn path(s: usize) -> Result<Self> {
        Self::new(s, (1..s).map(|v| (v - 1, v)).collect(), 0)
    }

    /// Root 0 with arcs to every other vertex.
    pub fn out_star(s: usize) -> Result<Self> {
        Self::new(s, (1..s).map(|v| (0, v)).collect(), 0)
    }

    /// Root 0 with arcs from every other vertex.
    pub fn in_star(s: usize) -> Result<Self> {
        Self::new(s, (1..s).map(|v| (v, 0)).collect(), 0)
    }

    pub fn vertex_count(&self) -> usize {
        self.parent.len()
    }

    /// Arcs in lexicographic order.
    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v]
    }

    pub fn children(&self, v: usize) -> &[usize] {
        &self.children[v]
    }

    pub fn topo_order(&self) -> &[usize] {
        &self.topo_order
    }

    pub fn dfs_order(&self) -> &[usize] {
        &self.dfs_order
    }

    pub fn kind(&self) -> TreeKind {
        self.kind
    }

    pub fn out_neighbors(&self, v: usize) -> &[usize] {
        &self.out[v]
    }

    pub fn in_neighbors(&self, v: usize) -> &[usize] {
        &self.inn[v]
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.out[u].binary_search(&v).is_ok()
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.has_arc(u, v) || self.has_arc(v, u)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.out[v].len() + self.inn[v].len()
    }

    /// For a non-root vertex, whether the arc to its parent points away from the parent.
    pub fn points_away_from_parent(&self, v: usize) -> Option<bool> {
        self.parent[v].map(|p| self.has_arc(p, v))
    }

    /// Vertices with in-degree 1 and out-degree 0, ascending.
    pub fn out_leaves(&self) -> Vec<usize> {
        (0..self.vertex_count())
            .filter(|&v| self.inn[v].len() == 1 && self.out[v].is_empty())
            .collect()
    }

    /// Vertices with out-degree 1 and in-degree 0, ascending.
    pub fn in_leaves(&self) -> Vec<usize> {
        (0..self.vertex_count())
            .filter(|&v| self.out[v].len() == 1 && self.inn[v].is_empty())
            .collect()
    }

    /// Every arc flipped; same root.
    pub fn reversed(&self) -> Self {
        let arcs = self.arcs.iter().map(|&(u, v)| (v, u)).collect();
        Self::new(self.vertex_count(), arcs, self.root).expect("reversal of a valid tree")
    }

    pub fn with_root(&self, root: usize) -> Result<Self> {
        Self::new(self.vertex_count(), self.arcs.clone(), root)
    }

    /// Same rooted shape with every edge oriented away from the root.
    pub fn as_out_tree(&self) -> Self {
        let arcs = (0..self.vertex_count())
            .filter_map(|v| self.parent[v].map(|p| (p, v)))
            .collect();
        Self::new(self.vertex_count(), arcs, self.root).expect("reorientation of a valid tree")
    }

    /// The tree with `removed` deleted, relabelled to `0..`; the map sends new
    /// indices to old ones. The root is kept when it survives, otherwise the
    /// smallest surviving vertex becomes the root.
    pub fn remove(&self, removed: &[usize]) -> Result<(Self, Vec<usize>)> {
        let n = self.vertex_count();
        let mut gone = vec![false; n];
        for &v in removed {
            if v >= n {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    count: n,
                });
            }
            gone[v] = true;
        }
        let map: Vec<usize> = (0..n).filter(|&v| !gone[v]).collect();
        let mut back = vec![usize::MAX; n];
        for (i, &v) in map.iter().enumerate() {
            back[v] = i;
        }
        let arcs = self
            .arcs
            .iter()
            .filter(|&&(u, v)| !gone[u] && !gone[v])
            .map(|&(u, v)| (back[u], back[v]))
            .collect();
        let root = if gone[self.root] { 0 } else { back[self.root] };
        Ok((Self::new(map.len(), arcs, root)?, map))
    }

    /// The tree as an oriented graph on the same vertex indices.
    pub fn to_digraph(&self) -> OrientedGraph {
        OrientedGraph::from_arcs(self.vertex_count(), self.arcs.iter().copied())
            .expect("tree arcs are a valid oriented graph")
    }
}
