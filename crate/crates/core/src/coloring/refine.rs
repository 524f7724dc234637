use super::Violation;
use crate::error::Result;
use crate::graph::{Coloring, GraphView};

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct RefinementResult {
    /// Refined coloring with colors `1..=k` under the numeric order.
    pub alpha: Coloring,
    pub colors_before: usize,
    pub colors_after: usize,
}

/// Greedy refinement: color classes of `beta` are visited from the smallest
/// color up (ascending vertex index inside a class), and each vertex takes the
/// least positive color not already on a neighbour.
pub fn greedy_refinement<G: GraphView + ?Sized>(
    g: &G,
    beta: &Coloring,
) -> Result<RefinementResult> {
    beta.ensure_proper(g)?;
    let n = g.vertex_count();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (beta.level(v), v));

    let mut alpha = vec![0u32; n];
    let mut mark = vec![usize::MAX; n + 2];
    for (step, &v) in order.iter().enumerate() {
        for &u in g.neighbors(v) {
            if alpha[u] != 0 {
                mark[alpha[u] as usize] = step;
            }
        }
        alpha[v] = (1..).find(|&c| mark[c] != step).unwrap() as u32;
    }
    let alpha = Coloring::new(alpha)?;
    Ok(RefinementResult {
        colors_before: beta.num_colors(),
        colors_after: alpha.num_colors(),
        alpha,
    })
}

/// Checks that every vertex `v` has, for each `i < alpha(v)`, a neighbour `u`
/// with `alpha(u) = i` and `beta(u) < beta(v)`. Returns the first vertex and
/// missing color otherwise.
pub fn check_refinement_witnesses<G: GraphView + ?Sized>(
    g: &G,
    beta: &Coloring,
    alpha: &Coloring,
) -> Result<Option<Violation>> {
    beta.ensure_proper(g)?;
    alpha.ensure_proper(g)?;
    for v in 0..g.vertex_count() {
        let target = alpha.color(v);
        let mut have = vec![false; target as usize];
        for &u in g.neighbors(v) {
            let c = alpha.color(u);
            if c < target && beta.level(u) < beta.level(v) {
                have[c as usize] = true;
            }
        }
        if let Some(c) = (1..target).find(|&c| !have[c as usize]) {
            return Ok(Some(Violation {
                vertex: v,
                color: c,
            }));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::UndirectedGraph;
    use crate::Error;

    #[test]
    fn k2_is_fixed() {
        let k2 = UndirectedGraph::from_edges(2, [(0, 1)]).unwrap();
        let r = greedy_refinement(&k2, &Coloring::new(vec![1, 2]).unwrap()).unwrap();
        assert_eq!(r.alpha.colors(), &[1, 2]);
    }

    #[test]
    fn path_hand_trace() {
        let p = UndirectedGraph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        let beta = Coloring::new(vec![1, 2, 3]).unwrap();
        let r = greedy_refinement(&p, &beta).unwrap();
        assert_eq!(r.alpha.colors(), &[1, 2, 1]);
        assert_eq!((r.colors_before, r.colors_after), (3, 2));
        assert_eq!(
            check_refinement_witnesses(&p, &beta, &r.alpha).unwrap(),
            None
        );
    }

    #[test]
    fn order_matters() {
        // same path, order 3 < 2 < 1: vertex 2 first, then 1, then 0
        let p = UndirectedGraph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        let beta = Coloring::with_order(vec![1, 2, 3], vec![3, 2, 1]).unwrap();
        let r = greedy_refinement(&p, &beta).unwrap();
        assert_eq!(r.alpha.colors(), &[1, 2, 1]);
        let beta = Coloring::with_order(vec![1, 2, 3], vec![2, 1, 3]).unwrap();
        let r = greedy_refinement(&p, &beta).unwrap();
        assert_eq!(r.alpha.colors(), &[2, 1, 2]);
    }

    #[test]
    fn improper_beta_rejected() {
        let k2 = UndirectedGraph::from_edges(2, [(0, 1)]).unwrap();
        assert_eq!(
            greedy_refinement(&k2, &Coloring::new(vec![1, 1]).unwrap()),
            Err(Error::ImproperColoring(0, 1))
        );
    }

    #[test]
    fn witness_violation_detected() {
        let p = UndirectedGraph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        let beta = Coloring::new(vec![2, 1, 2]).unwrap();
        // vertex 1 has alpha 2 but all its neighbours have larger beta
        let alpha = Coloring::new(vec![1, 2, 1]).unwrap();
        assert_eq!(
            check_refinement_witnesses(&p, &beta, &alpha).unwrap(),
            Some(Violation {
                vertex: 1,
                color: 1
            })
        );
    }
}
