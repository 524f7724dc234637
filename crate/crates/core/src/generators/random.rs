use rand::seq::SliceRandom;
use rand::Rng;

use super::rng;
use crate::error::{Error, Result};
use crate::graph::{girth, greedy_coloring, Coloring, GraphView, OrientedGraph, UndirectedGraph};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFilter {
    None,
    TriangleFree,
    GirthAtLeast(usize),
}

impl GraphFilter {
    fn accepts(self, g: &UndirectedGraph) -> bool {
        match self {
            GraphFilter::None => true,
            GraphFilter::TriangleFree => g.is_triangle_free(),
            GraphFilter::GirthAtLeast(len) => girth(g).at_least(len),
        }
    }
}

fn check_probability(p: f64) -> Result<()> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!(
            "probability {p} outside [0, 1]"
        )))
    }
}

/// G(n, p) sample, redrawn until `filter` accepts it or `budget` draws are spent.
pub fn random_graph(
    n: usize,
    p: f64,
    seed: u64,
    filter: GraphFilter,
    budget: usize,
) -> Result<UndirectedGraph> {
    check_probability(p)?;
    let mut rng = rng(seed);
    for _ in 0..budget.max(1) {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        let g = UndirectedGraph::from_edges(n, edges)?;
        if filter.accepts(&g) {
            return Ok(g);
        }
    }
    Err(Error::BudgetExhausted(format!(
        "no G({n}, {p}) sample passed {filter:?} in {budget} draws"
    )))
}

/// Random maximal triangle-free graph: pairs are visited in random order and
/// kept whenever they close no triangle.
pub fn triangle_free_process(n: usize, seed: u64) -> UndirectedGraph {
    let mut rng = rng(seed);
    let mut pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    pairs.shuffle(&mut rng);
    let mut adj = vec![vec![false; n]; n];
    let mut edges = Vec::new();
    for (u, v) in pairs {
        if (0..n).any(|w| adj[u][w] && adj[v][w]) {
            continue;
        }
        adj[u][v] = true;
        adj[v][u] = true;
        edges.push((u, v));
    }
    UndirectedGraph::from_edges(n, edges).expect("distinct pairs")
}

/// Acyclic by construction: a random vertex order, and each forward pair
/// becomes an arc with probability `p`.
pub fn random_dag(n: usize, p: f64, seed: u64) -> Result<OrientedGraph> {
    check_probability(p)?;
    let mut rng = rng(seed);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut rng);
    let mut arcs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(p) {
                arcs.push((order[i], order[j]));
            }
        }
    }
    OrientedGraph::from_arcs(n, arcs)
}

/// First-fit coloring along a uniformly random vertex order.
pub fn random_greedy_coloring<G: GraphView + ?Sized, R: Rng>(g: &G, rng: &mut R) -> Coloring {
    let mut order: Vec<usize> = (0..g.vertex_count()).collect();
    order.shuffle(rng);
    greedy_coloring(g, &order).expect("order is a permutation")
}

/// The same colors under a uniformly random order.
pub fn random_color_order<R: Rng>(c: &Coloring, rng: &mut R) -> Coloring {
    let mut order = c.order().to_vec();
    order.shuffle(rng);
    c.reordered(order).expect("permutation of the used colors")
}
