//! Brute-force ground truth used to cross-check the constructive searches.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::generators::rng;
use crate::graph::{
    exact_chromatic, k_coloring, Coloring, GraphView, RootedOrientedTree, UndirectedGraph,
};
use crate::guards::{self, Guards};

/// A path as a vertex sequence, stored with the smaller endpoint first so that
/// a path and its reversal compare equal.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct CanonicalPath(Vec<usize>);

impl CanonicalPath {
    pub fn new(mut vertices: Vec<usize>) -> Self {
        if vertices.first() > vertices.last() {
            vertices.reverse();
        }
        CanonicalPath(vertices)
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

fn check_sizes<G: GraphView + ?Sized>(g: &G, s: usize, guards: &Guards) -> Result<()> {
    guards::check(
        "path enumeration host",
        guards.enumerate_n,
        g.vertex_count(),
    )?;
    guards::check("path enumeration length", guards.enumerate_s, s)
}

/// Depth-first extension of induced rainbow paths. `visit` returns `false` to
/// stop the whole search.
struct PathSearch<'a, G: ?Sized> {
    g: &'a G,
    c: &'a Coloring,
    path: Vec<usize>,
    on_path: Vec<bool>,
    used: std::collections::HashSet<u32>,
}

impl<'a, G: GraphView + ?Sized> PathSearch<'a, G> {
    fn new(g: &'a G, c: &'a Coloring) -> Self {
        PathSearch {
            g,
            c,
            path: Vec::new(),
            on_path: vec![false; g.vertex_count()],
            used: Default::default(),
        }
    }

    fn push(&mut self, v: usize) {
        self.path.push(v);
        self.on_path[v] = true;
        self.used.insert(self.c.color(v));
    }

    fn pop(&mut self) {
        let v = self.path.pop().unwrap();
        self.on_path[v] = false;
        self.used.remove(&self.c.color(v));
    }

    fn extendable(&self, w: usize) -> bool {
        let last = *self.path.last().unwrap();
        !self.on_path[w]
            && !self.used.contains(&self.c.color(w))
            && self.path[..self.path.len() - 1]
                .iter()
                .all(|&u| !self.g.adjacent(u, w))
            && w != last
    }

    /// Calls `visit` on every induced rainbow path of exactly `s` vertices
    /// (both directions) or, with `s == 0`, on every prefix.
    fn run(&mut self, s: usize, visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        for v in 0..self.g.vertex_count() {
            self.push(v);
            let go = self.grow(s, visit);
            self.pop();
            if !go {
                return false;
            }
        }
        true
    }

    fn grow(&mut self, s: usize, visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        if s == 0 || self.path.len() == s {
            if !visit(&self.path) {
                return false;
            }
            if s != 0 {
                return true;
            }
        }
        let last = *self.path.last().unwrap();
        for &w in self.g.neighbors(last) {
            if self.extendable(w) {
                self.push(w);
                let go = self.grow(s, visit);
                self.pop();
                if !go {
                    return false;
                }
            }
        }
        true
    }
}

/// Every induced path on `s` vertices whose colors are pairwise distinct.
pub fn enumerate_induced_rainbow_paths<G: GraphView + ?Sized>(
    g: &G,
    c: &Coloring,
    s: usize,
    guards: &Guards,
) -> Result<std::collections::BTreeSet<CanonicalPath>> {
    check_sizes(g, s, guards)?;
    c.ensure_proper(g)?;
    let mut out = std::collections::BTreeSet::new();
    if s == 0 {
        return Ok(out);
    }
    PathSearch::new(g, c).run(s, &mut |p| {
        out.insert(CanonicalPath::new(p.to_vec()));
        true
    });
    Ok(out)
}

pub fn has_induced_rainbow_path<G: GraphView + ?Sized>(
    g: &G,
    c: &Coloring,
    s: usize,
    guards: &Guards,
) -> Result<bool> {
    check_sizes(g, s, guards)?;
    c.ensure_proper(g)?;
    if s == 0 {
        return Ok(true);
    }
    let mut found = false;
    PathSearch::new(g, c).run(s, &mut |_| {
        found = true;
        false
    });
    Ok(found)
}

/// Number of vertices of a largest induced rainbow path (0 for the empty graph).
pub fn mu<G: GraphView + ?Sized>(g: &G, c: &Coloring, guards: &Guards) -> Result<usize> {
    check_sizes(g, 0, guards)?;
    c.ensure_proper(g)?;
    let mut best = 0;
    PathSearch::new(g, c).run(0, &mut |p| {
        best = best.max(p.len());
        true
    });
    Ok(best)
}

/// An injective map realizing `tree` as an induced subgraph of `host`, with
/// arc directions respected when the host is oriented.
pub fn contains_induced_copy<G: GraphView + ?Sized>(
    host: &G,
    tree: &RootedOrientedTree,
    guard_n: usize,
) -> Result<Option<Vec<usize>>> {
    let n = host.vertex_count();
    guards::check("induced copy host", guard_n, n)?;
    let order = tree.dfs_order();
    let mut image = vec![usize::MAX; tree.vertex_count()];
    let mut used = vec![false; n];
    if copy_from(host, tree, order, 0, &mut image, &mut used) {
        Ok(Some(image))
    } else {
        Ok(None)
    }
}

fn copy_from<G: GraphView + ?Sized>(
    host: &G,
    tree: &RootedOrientedTree,
    order: &[usize],
    j: usize,
    image: &mut [usize],
    used: &mut [bool],
) -> bool {
    if j == order.len() {
        return true;
    }
    let w = order[j];
    let cands: Vec<usize> = match tree.parent(w) {
        None => (0..host.vertex_count()).collect(),
        Some(p) => host.neighbors(image[p]).to_vec(),
    };
    for x in cands {
        if used[x] {
            continue;
        }
        if let Some(p) = tree.parent(w) {
            if host.is_oriented() && host.arc(image[p], x) != Some(tree.has_arc(p, w)) {
                continue;
            }
        }
        let clean = order[..j]
            .iter()
            .all(|&u| Some(u) == tree.parent(w) || !host.adjacent(image[u], x));
        if !clean {
            continue;
        }
        image[w] = x;
        used[x] = true;
        if copy_from(host, tree, order, j + 1, image, used) {
            return true;
        }
        used[x] = false;
        image[w] = usize::MAX;
    }
    false
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub graph_index: usize,
    pub colors: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AravindReport {
    pub graphs_scanned: usize,
    pub instances_checked: usize,
    pub skipped: Vec<(usize, String)>,
    pub counterexamples: Vec<Counterexample>,
}

/// For each triangle-free graph, samples optimal colorings and looks for an
/// induced rainbow path on as many vertices as the chromatic number.
pub fn aravind_scan(
    corpus: &[UndirectedGraph],
    colorings_per_graph: usize,
    seed: u64,
    guards: &Guards,
) -> Result<AravindReport> {
    enum Scan {
        Skipped(String),
        Done(usize, Vec<Vec<u32>>),
    }
    let results: Vec<Scan> = corpus
        .par_iter()
        .enumerate()
        .map(|(i, g)| {
            if !g.is_triangle_free() {
                return Ok(Scan::Skipped("contains a triangle".into()));
            }
            let chi = match exact_chromatic(g, guards.chromatic_n) {
                Ok(c) => c.num_colors(),
                Err(e @ Error::GuardExceeded { .. }) => return Ok(Scan::Skipped(e.to_string())),
                Err(e) => return Err(e),
            };
            let mut rng = rng(seed ^ (i as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15));
            let mut bad = Vec::new();
            for _ in 0..colorings_per_graph {
                let c = k_coloring(g, chi, Some(&mut rng)).expect("chi colors suffice");
                if !has_induced_rainbow_path(g, &c, chi, guards)? {
                    bad.push(c.colors().to_vec());
                }
            }
            Ok(Scan::Done(colorings_per_graph, bad))
        })
        .collect::<Result<_>>()?;

    let mut report = AravindReport {
        graphs_scanned: 0,
        instances_checked: 0,
        skipped: Vec::new(),
        counterexamples: Vec::new(),
    };
    for (i, r) in results.into_iter().enumerate() {
        match r {
            Scan::Skipped(why) => report.skipped.push((i, why)),
            Scan::Done(count, bad) => {
                report.graphs_scanned += 1;
                report.instances_checked += count;
                report
                    .counterexamples
                    .extend(bad.into_iter().map(|colors| Counterexample {
                        graph_index: i,
                        colors,
                    }));
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{named_graph, NamedGraph};
    use crate::graph::OrientedGraph;

    fn c5() -> (UndirectedGraph, Coloring) {
        (
            named_graph(NamedGraph::Cycle(5)).unwrap(),
            Coloring::new(vec![1, 2, 1, 2, 3]).unwrap(),
        )
    }

    #[test]
    fn canonical_form() {
        assert_eq!(
            CanonicalPath::new(vec![4, 2, 1]),
            CanonicalPath::new(vec![1, 2, 4])
        );
        assert_eq!(CanonicalPath::new(vec![3]).vertices(), &[3]);
    }

    #[test]
    fn c5_triples() {
        let (g, c) = c5();
        let paths = enumerate_induced_rainbow_paths(&g, &c, 3, &Guards::default()).unwrap();
        let want: Vec<Vec<usize>> = vec![vec![1, 0, 4], vec![2, 3, 4], vec![0, 4, 3]];
        let want: std::collections::BTreeSet<_> =
            want.into_iter().map(CanonicalPath::new).collect();
        assert_eq!(paths, want);
        assert_eq!(mu(&g, &c, &Guards::default()).unwrap(), 3);
        assert_eq!(
            enumerate_induced_rainbow_paths(&g, &c, 1, &Guards::default())
                .unwrap()
                .len(),
            5
        );
    }

    #[test]
    fn triangle_and_small_mu() {
        let k3 = named_graph(NamedGraph::Complete(3)).unwrap();
        let c = Coloring::new(vec![1, 2, 3]).unwrap();
        assert!(
            enumerate_induced_rainbow_paths(&k3, &c, 3, &Guards::default())
                .unwrap()
                .is_empty()
        );
        let k2 = named_graph(NamedGraph::Complete(2)).unwrap();
        assert_eq!(
            mu(&k2, &Coloring::new(vec![1, 2]).unwrap(), &Guards::default()).unwrap(),
            2
        );
        let e = UndirectedGraph::empty(3);
        assert_eq!(
            mu(
                &e,
                &Coloring::new(vec![1, 1, 1]).unwrap(),
                &Guards::default()
            )
            .unwrap(),
            1
        );
    }

    #[test]
    fn improper_coloring_is_rejected() {
        let (g, _) = c5();
        let bad = Coloring::new(vec![1, 1, 2, 1, 2]).unwrap();
        assert!(enumerate_induced_rainbow_paths(&g, &bad, 2, &Guards::default()).is_err());
    }

    #[test]
    fn induced_copies() {
        let k3 = named_graph(NamedGraph::Complete(3)).unwrap();
        let p3 = RootedOrientedTree::path(3).unwrap();
        assert_eq!(contains_induced_copy(&k3, &p3, 14).unwrap(), None);
        let d = OrientedGraph::from_arcs(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(
            contains_induced_copy(&d, &p3, 14).unwrap(),
            Some(vec![0, 1, 2])
        );
        // a reversed directed path is again a directed path
        assert_eq!(
            contains_induced_copy(&d, &p3.reversed(), 14).unwrap(),
            Some(vec![2, 1, 0])
        );
        let in_star = RootedOrientedTree::in_star(3).unwrap();
        assert_eq!(contains_induced_copy(&d, &in_star, 14).unwrap(), None);
        assert!(contains_induced_copy(&UndirectedGraph::empty(20), &p3, 14).is_err());
    }

    #[test]
    fn aravind_small() {
        let corpus = vec![
            named_graph(NamedGraph::Cycle(5)).unwrap(),
            named_graph(NamedGraph::Complete(3)).unwrap(),
            named_graph(NamedGraph::Grotzsch).unwrap(),
        ];
        let r = aravind_scan(&corpus, 20, 7, &Guards::default()).unwrap();
        assert_eq!(r.graphs_scanned, 2);
        assert_eq!(r.instances_checked, 40);
        assert_eq!(r.skipped.len(), 1);
        assert!(r.counterexamples.is_empty());
    }
}
