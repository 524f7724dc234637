use std::collections::BTreeMap;

use rand::Rng;

use crate::error::{Error, Result};
use crate::graph::{RootedOrientedTree, TreeKind};
use crate::guards;

/// Largest size accepted by [`undirected_trees`].
pub const UNDIRECTED_TREE_GUARD: usize = 12;

/// All oriented trees on `size` vertices, one per isomorphism class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeCatalog {
    pub size: usize,
    trees: Vec<RootedOrientedTree>,
}

impl TreeCatalog {
    /// Each tree is rooted at its source if it is an out-tree, else at its
    /// sink if it is an in-tree, else at a center.
    pub fn trees(&self) -> &[RootedOrientedTree] {
        &self.trees
    }

    pub fn len(&self) -> usize {
        self.trees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.trees.is_empty()
    }

    /// Trees that are out-trees for some root, rooted there.
    pub fn out_trees(&self) -> Vec<RootedOrientedTree> {
        self.trees
            .iter()
            .filter_map(|t| rooted_as(t, TreeKind::OutTree))
            .collect()
    }

    /// Trees that are in-trees for some root, rooted there.
    pub fn in_trees(&self) -> Vec<RootedOrientedTree> {
        self.trees
            .iter()
            .filter_map(|t| rooted_as(t, TreeKind::InTree))
            .collect()
    }
}

fn rooted_as(t: &RootedOrientedTree, kind: TreeKind) -> Option<RootedOrientedTree> {
    let n = t.vertex_count();
    let root = match kind {
        TreeKind::OutTree => (0..n).find(|&v| t.in_neighbors(v).is_empty())?,
        TreeKind::InTree => (0..n).find(|&v| t.out_neighbors(v).is_empty())?,
        TreeKind::General => return Some(t.clone()),
    };
    let r = t.with_root(root).ok()?;
    (r.kind() == kind).then_some(r)
}

/// Tree centers: one or two vertices left after stripping leaves repeatedly.
fn centers(n: usize, adj: &[Vec<usize>]) -> Vec<usize> {
    if n <= 2 {
        return (0..n).collect();
    }
    let mut deg: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| deg[v] == 1).collect();
    let mut left = n;
    while left > 2 {
        left -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            for &w in &adj[v] {
                deg[w] -= 1;
                if deg[w] == 1 {
                    next.push(w);
                }
            }
        }
        layer = next;
    }
    let mut c = layer;
    c.sort_unstable();
    c
}

/// Canonical string of a tree (oriented or not) and the center it was read from.
fn canonical_code(n: usize, arcs: &[(usize, usize)], oriented: bool) -> (String, usize) {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in arcs {
        adj[u].push(v);
        adj[v].push(u);
    }
    fn encode(
        v: usize,
        from: usize,
        adj: &[Vec<usize>],
        arcs: &[(usize, usize)],
        oriented: bool,
    ) -> String {
        let mut parts: Vec<String> = adj[v]
            .iter()
            .filter(|&&w| w != from)
            .map(|&w| {
                let dir = if !oriented {
                    ""
                } else if arcs.contains(&(v, w)) {
                    ">"
                } else {
                    "<"
                };
                format!("{dir}{}", encode(w, v, adj, arcs, oriented))
            })
            .collect();
        parts.sort_unstable();
        format!("({})", parts.concat())
    }
    centers(n, &adj)
        .into_iter()
        .map(|c| (encode(c, usize::MAX, &adj, arcs, oriented), c))
        .min()
        .expect("a tree has a center")
}

/// Labels vertices in breadth-first order from `root`, children in input order.
fn relabel_from(n: usize, arcs: &[(usize, usize)], root: usize) -> Result<RootedOrientedTree> {
    let t = RootedOrientedTree::new(n, arcs.to_vec(), root)?;
    let mut pos = vec![0; n];
    for (i, &v) in t.topo_order().iter().enumerate() {
        pos[v] = i;
    }
    RootedOrientedTree::new(n, arcs.iter().map(|&(u, v)| (pos[u], pos[v])).collect(), 0)
}

/// Vertex count, arcs and root of each grown shape.
type Shape = (usize, Vec<(usize, usize)>, usize);

fn grow(s: usize, oriented: bool) -> Vec<Shape> {
    let mut current: BTreeMap<String, (Vec<(usize, usize)>, usize)> = BTreeMap::new();
    current.insert("()".into(), (Vec::new(), 0));
    for m in 1..s {
        let mut next = BTreeMap::new();
        for (arcs, _) in current.values() {
            for v in 0..m {
                let dirs: &[bool] = if oriented { &[true, false] } else { &[true] };
                for &away in dirs {
                    let mut grown = arcs.clone();
                    grown.push(if away { (v, m) } else { (m, v) });
                    let (code, center) = canonical_code(m + 1, &grown, oriented);
                    next.entry(code).or_insert((grown, center));
                }
            }
        }
        current = next;
    }
    current
        .into_values()
        .map(|(arcs, c)| (s, arcs, c))
        .collect()
}

/// Every oriented tree on `s` vertices up to isomorphism, in canonical-code order.
pub fn oriented_trees(s: usize, guard_s: usize) -> Result<TreeCatalog> {
    guards::check("oriented tree catalog", guard_s, s)?;
    if s == 0 {
        return Err(Error::InvalidParameter(
            "trees need at least one vertex".into(),
        ));
    }
    let mut trees = Vec::new();
    for (n, arcs, center) in grow(s, true) {
        let t = relabel_from(n, &arcs, center)?;
        let t = rooted_as(&t, TreeKind::OutTree)
            .or_else(|| rooted_as(&t, TreeKind::InTree))
            .unwrap_or(t);
        trees.push(relabel_from(n, t.arcs(), t.root())?);
    }
    Ok(TreeCatalog { size: s, trees })
}

/// Every unlabelled tree on `s` vertices, each oriented away from a center.
pub fn undirected_trees(s: usize) -> Result<Vec<RootedOrientedTree>> {
    guards::check("undirected tree catalog", UNDIRECTED_TREE_GUARD, s)?;
    if s == 0 {
        return Err(Error::InvalidParameter(
            "trees need at least one vertex".into(),
        ));
    }
    grow(s, false)
        .into_iter()
        .map(|(n, arcs, center)| relabel_from(n, &arcs, center).map(|t| t.as_out_tree()))
        .collect()
}

/// Random recursive tree on `s` vertices rooted at 0: vertex `v` hangs off a
/// uniformly chosen earlier vertex. Arcs point away from the root when
/// `out_tree`, otherwise each direction is a fair coin.
pub fn random_tree<R: Rng>(s: usize, out_tree: bool, rng: &mut R) -> Result<RootedOrientedTree> {
    let arcs = (1..s)
        .map(|v| {
            let p = rng.gen_range(0..v);
            if out_tree || rng.gen_bool(0.5) {
                (p, v)
            } else {
                (v, p)
            }
        })
        .collect();
    RootedOrientedTree::new(s, arcs, 0)
}

/// Complete `branching`-ary out-tree of the given depth in levels; vertex `v`
/// has children `branching * v + 1 ..= branching * v + branching`.
pub fn complete_ary_tree(branching: usize, levels: usize) -> Result<RootedOrientedTree> {
    if branching == 0 || levels == 0 {
        return Err(Error::InvalidParameter(
            "branching and levels must be positive".into(),
        ));
    }
    let internal: usize = (0..levels - 1).map(|l| branching.pow(l as u32)).sum();
    let n = internal + branching.pow(levels as u32 - 1);
    let arcs = (0..internal)
        .flat_map(|v| (1..=branching).map(move |i| (v, branching * v + i)))
        .collect();
    RootedOrientedTree::new(n, arcs, 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn random_trees_are_valid() {
        let mut rng = crate::generators::rng(5);
        for s in 1..10 {
            assert_eq!(
                random_tree(s, true, &mut rng).unwrap().kind(),
                TreeKind::OutTree
            );
            assert_eq!(random_tree(s, false, &mut rng).unwrap().vertex_count(), s);
        }
    }

    #[test]
    fn oriented_counts() {
        let counts: Vec<usize> = (1..=6)
            .map(|s| oriented_trees(s, 7).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 1, 3, 8, 27, 91]);
        assert!(oriented_trees(8, 7).is_err());
    }

    #[test]
    fn sublists() {
        let c3 = oriented_trees(3, 7).unwrap();
        assert_eq!(c3.out_trees().len(), 2);
        assert_eq!(c3.in_trees().len(), 2);
        let c4 = oriented_trees(4, 7).unwrap();
        assert_eq!(c4.out_trees().len(), 4);
        assert!(c4.out_trees().iter().all(|t| t.kind() == TreeKind::OutTree));
        assert!(c4.in_trees().iter().all(|t| t.kind() == TreeKind::InTree));
        let c2 = oriented_trees(2, 7).unwrap();
        assert_eq!((c2.out_trees().len(), c2.in_trees().len()), (1, 1));
    }

    #[test]
    fn undirected_counts() {
        let counts: Vec<usize> = (1..=8)
            .map(|s| undirected_trees(s).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 3, 6, 11, 23]);
    }

    #[test]
    fn ary_trees() {
        assert_eq!(complete_ary_tree(6, 3).unwrap().vertex_count(), 43);
        let t = complete_ary_tree(8, 4).unwrap();
        assert_eq!(t.vertex_count(), 585);
        assert_eq!(t.children(0).len(), 8);
        assert_eq!(t.kind(), TreeKind::OutTree);
    }
}
