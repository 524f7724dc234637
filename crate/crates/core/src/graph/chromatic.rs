//! Exact chromatic number by DSATUR branch-and-bound, plus greedy colorings.

use rand::seq::SliceRandom;
use rand::Rng;

use super::{Coloring, GraphView};
use crate::error::{Error, Result};
use crate::guards;

#[derive(Clone, Copy, Debug)]
pub enum ChromaticMode<'a> {
    Exact,
    /// First-fit along the given vertex order.
    Greedy(&'a [usize]),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChromaticResult {
    pub value: usize,
    pub coloring: Coloring,
    pub exact: bool,
}

pub fn chromatic_number<G: GraphView + ?Sized>(
    g: &G,
    mode: ChromaticMode<'_>,
    guard_n: usize,
) -> Result<ChromaticResult> {
    match mode {
        ChromaticMode::Exact => {
            let coloring = exact_chromatic(g, guard_n)?;
            Ok(ChromaticResult {
                value: coloring.num_colors(),
                coloring,
                exact: true,
            })
        }
        ChromaticMode::Greedy(order) => {
            let coloring = greedy_coloring(g, order)?;
            Ok(ChromaticResult {
                value: coloring.num_colors(),
                coloring,
                exact: false,
            })
        }
    }
}

/// First-fit coloring along `order`, which must be a permutation of the vertices.
pub fn greedy_coloring<G: GraphView + ?Sized>(g: &G, order: &[usize]) -> Result<Coloring> {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    if order.len() != n
        || order
            .iter()
            .any(|&v| v >= n || std::mem::replace(&mut seen[v], true))
    {
        return Err(Error::InvalidParameter(
            "greedy order must be a permutation of the vertices".into(),
        ));
    }
    let mut colors = vec![0u32; n];
    let mut mark = vec![usize::MAX; n + 2];
    for (step, &v) in order.iter().enumerate() {
        for &u in g.neighbors(v) {
            if colors[u] != 0 {
                mark[colors[u] as usize] = step;
            }
        }
        colors[v] = (1..).find(|&c| mark[c] != step).unwrap() as u32;
    }
    Coloring::new(colors)
}

/// A large clique found greedily from every start vertex.
pub fn greedy_clique<G: GraphView + ?Sized>(g: &G) -> Vec<usize> {
    let n = g.vertex_count();
    let mut best = Vec::new();
    for start in 0..n {
        let mut clique = vec![start];
        let mut cands: Vec<usize> = g.neighbors(start).to_vec();
        cands.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
        for v in cands {
            if clique.iter().all(|&c| g.adjacent(c, v)) {
                clique.push(v);
            }
        }
        if clique.len() > best.len() {
            best = clique;
        }
    }
    best
}

/// Optimal coloring (colors `1..=χ`).
pub fn exact_chromatic<G: GraphView + ?Sized>(g: &G, guard_n: usize) -> Result<Coloring> {
    let n = g.vertex_count();
    guards::check("exact chromatic number", guard_n, n)?;
    if n == 0 {
        return Coloring::new(Vec::new());
    }
    let lower = greedy_clique(g).len().max(1);
    let mut solver = Dsatur::new(g, n);
    let upper = solver
        .solve(n, &mut NoShuffle)
        .expect("n colors always suffice");
    let upper_k = upper.num_colors();
    for k in lower..upper_k {
        let mut solver = Dsatur::new(g, k);
        if let Some(c) = solver.solve(k, &mut NoShuffle) {
            return Ok(c);
        }
    }
    Ok(upper)
}

/// A proper coloring with at most `k` colors, or `None`. With `rng`, branching
/// order is randomized and the final color labels are shuffled; used to sample
/// diverse optimal colorings.
pub fn k_coloring<G: GraphView + ?Sized, R: Rng>(
    g: &G,
    k: usize,
    rng: Option<&mut R>,
) -> Option<Coloring> {
    if g.vertex_count() == 0 {
        return Coloring::new(Vec::new()).ok();
    }
    let mut solver = Dsatur::new(g, k);
    match rng {
        None => solver.solve(k, &mut NoShuffle),
        Some(rng) => {
            let mut shuffler = RngShuffle(rng);
            let c = solver.solve(k, &mut shuffler)?;
            let mut labels: Vec<u32> = (1..=k as u32).collect();
            labels.shuffle(shuffler.0);
            let colors = c.colors().iter().map(|&x| labels[x as usize - 1]).collect();
            Coloring::new(colors).ok()
        }
    }
}

trait Shuffle {
    fn shuffle(&mut self, items: &mut [usize]);
    fn pick(&mut self, n: usize) -> usize;
}

struct NoShuffle;

impl Shuffle for NoShuffle {
    fn shuffle(&mut self, _items: &mut [usize]) {}
    fn pick(&mut self, _n: usize) -> usize {
        0
    }
}

struct RngShuffle<'r, R: Rng>(&'r mut R);

impl<R: Rng> Shuffle for RngShuffle<'_, R> {
    fn shuffle(&mut self, items: &mut [usize]) {
        items.shuffle(self.0);
    }
    fn pick(&mut self, n: usize) -> usize {
        self.0.gen_range(0..n)
    }
}

struct Dsatur<'g, G: ?Sized> {
    g: &'g G,
    k: usize,
    color: Vec<usize>,
    /// `blocked[v][c]` = number of neighbours of `v` colored `c`.
    blocked: Vec<Vec<u32>>,
    saturation: Vec<usize>,
}

const UNCOLORED: usize = usize::MAX;

impl<'g, G: GraphView + ?Sized> Dsatur<'g, G> {
    fn new(g: &'g G, k: usize) -> Self {
        let n = g.vertex_count();
        Dsatur {
            g,
            k,
            color: vec![UNCOLORED; n],
            blocked: vec![vec![0; k]; n],
            saturation: vec![0; n],
        }
    }

    fn assign(&mut self, v: usize, c: usize) {
        self.color[v] = c;
        for &u in self.g.neighbors(v) {
            if self.blocked[u][c] == 0 {
                self.saturation[u] += 1;
            }
            self.blocked[u][c] += 1;
        }
    }

    fn unassign(&mut self, v: usize) {
        let c = self.color[v];
        self.color[v] = UNCOLORED;
        for &u in self.g.neighbors(v) {
            self.blocked[u][c] -= 1;
            if self.blocked[u][c] == 0 {
                self.saturation[u] -= 1;
            }
        }
    }

    fn solve<S: Shuffle>(&mut self, k: usize, shuffle: &mut S) -> Option<Coloring> {
        debug_assert_eq!(k, self.k);
        if k == 0 {
            return None;
        }
        // fixing a clique's colors only removes color-permutation symmetry
        let clique = greedy_clique(self.g);
        if clique.len() > k {
            return None;
        }
        for (c, &v) in clique.iter().enumerate() {
            if self.blocked[v][c] > 0 {
                return None;
            }
            self.assign(v, c);
        }
        let done = clique.len();
        if self.search(done, clique.len(), shuffle) {
            let colors = self.color.iter().map(|&c| c as u32 + 1).collect();
            Some(Coloring::new(colors).expect("positive colors"))
        } else {
            None
        }
    }

    fn pick_vertex<S: Shuffle>(&self, shuffle: &mut S) -> usize {
        let n = self.g.vertex_count();
        let mut best: Vec<usize> = Vec::new();
        let mut best_key = (0usize, 0usize);
        for v in 0..n {
            if self.color[v] != UNCOLORED {
                continue;
            }
            let free_deg = self
                .g
                .neighbors(v)
                .iter()
                .filter(|&&u| self.color[u] == UNCOLORED)
                .count();
            let key = (self.saturation[v], free_deg);
            if best.is_empty() || key > best_key {
                best.clear();
                best.push(v);
                best_key = key;
            } else if key == best_key {
                best.push(v);
            }
        }
        best[shuffle.pick(best.len())]
    }

    fn search<S: Shuffle>(&mut self, done: usize, used: usize, shuffle: &mut S) -> bool {
        let n = self.g.vertex_count();
        if done == n {
            return true;
        }
        let v = self.pick_vertex(shuffle);
        if self.saturation[v] >= self.k {
            return false;
        }
        let limit = (used + 1).min(self.k);
        let mut cands: Vec<usize> = (0..limit).filter(|&c| self.blocked[v][c] == 0).collect();
        shuffle.shuffle(&mut cands);
        for c in cands {
            self.assign(v, c);
            if self.search(done + 1, used.max(c + 1), shuffle) {
                return true;
            }
            self.unassign(v);
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{is_proper, UndirectedGraph};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn cycle(n: usize) -> UndirectedGraph {
        UndirectedGraph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn small_cases() {
        assert_eq!(exact_chromatic(&cycle(5), 40).unwrap().num_colors(), 3);
        assert_eq!(exact_chromatic(&cycle(6), 40).unwrap().num_colors(), 2);
        assert_eq!(
            exact_chromatic(&UndirectedGraph::empty(4), 40)
                .unwrap()
                .num_colors(),
            1
        );
        let k4 = UndirectedGraph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
            .unwrap();
        assert_eq!(exact_chromatic(&k4, 40).unwrap().num_colors(), 4);
    }

    #[test]
    fn guard_is_enforced() {
        assert!(matches!(
            exact_chromatic(&cycle(50), 40),
            Err(Error::GuardExceeded { .. })
        ));
    }

    #[test]
    fn greedy_mode_follows_order() {
        // path 0-1-2-3 colored in order 0,3,1,2 gives 3 colors
        let p = UndirectedGraph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let r = chromatic_number(&p, ChromaticMode::Greedy(&[0, 3, 1, 2]), 40).unwrap();
        assert_eq!(r.value, 3);
        assert!(!r.exact);
        assert!(is_proper(&p, &r.coloring).unwrap());
    }

    #[test]
    fn sampled_colorings_are_proper_and_optimal() {
        let g = cycle(7);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..20 {
            let c = k_coloring(&g, 3, Some(&mut rng)).unwrap();
            assert!(is_proper(&g, &c).unwrap());
            assert_eq!(c.num_colors(), 3);
        }
        assert!(k_coloring::<_, ChaCha8Rng>(&g, 2, None).is_none());
    }
}
