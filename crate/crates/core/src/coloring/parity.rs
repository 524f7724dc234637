use super::kernel::{dag_greedy, kernel_set, not_found, KernelKind, KernelMethod};
use super::{PeelKind, PeelLayers, Violation};
use crate::error::{Error, Result};
use crate::graph::{Coloring, OrientedGraph};

fn layer_kind(layer: usize) -> KernelKind {
    if layer % 2 == 1 {
        KernelKind::Antikernel
    } else {
        KernelKind::Kernel
    }
}

/// Peels an antikernel, then a kernel, alternately, until nothing is left;
/// vertex colors are layer indices. Acyclic inputs use the greedy method;
/// others fall back to exhaustive search on each residual digraph.
pub fn parity_coloring(d: &OrientedGraph, kernel_guard_n: usize) -> Result<(Coloring, PeelLayers)> {
    let n = d.vertex_count();
    let topo = match d.topological_order() {
        Ok(order) => Some(order),
        Err(Error::DirectedCycle) => None,
        Err(e) => return Err(e),
    };
    let mut alive = vec![true; n];
    let mut remaining = n;
    let mut layers = Vec::new();
    while remaining > 0 {
        let layer = layers.len() + 1;
        let kind = layer_kind(layer);
        let set = match &topo {
            Some(order) => dag_greedy(d, kind, order, |v| alive[v]),
            None => {
                let keep: Vec<usize> = (0..n).filter(|&v| alive[v]).collect();
                let (sub, map) = d.induce(&keep)?;
                let method = KernelMethod::Backtracking {
                    guard_n: kernel_guard_n,
                };
                kernel_set(&sub, kind, method)?
                    .ok_or_else(|| not_found(kind, layer))?
                    .into_iter()
                    .map(|v| map[v])
                    .collect()
            }
        };
        debug_assert!(!set.is_empty());
        for &v in &set {
            alive[v] = false;
        }
        remaining -= set.len();
        layers.push(set);
    }
    let layers = PeelLayers {
        layers,
        kind: PeelKind::KernelAlternation,
    };
    Ok((layers.to_coloring(n)?, layers))
}

/// `None` when every vertex has out-neighbours of each smaller even color and
/// in-neighbours of each smaller odd color (numeric color values).
pub fn check_parity_coloring(d: &OrientedGraph, c: &Coloring) -> Result<Option<Violation>> {
    c.ensure_proper(d)?;
    for u in 0..d.vertex_count() {
        let own = c.color(u) as usize;
        let mut have = vec![false; own];
        for &w in d.out_neighbors(u) {
            let x = c.color(w) as usize;
            if x < own && x.is_multiple_of(2) {
                have[x] = true;
            }
        }
        for &w in d.in_neighbors(u) {
            let x = c.color(w) as usize;
            if x < own && x % 2 == 1 {
                have[x] = true;
            }
        }
        if let Some(x) = (1..own).find(|&x| !have[x]) {
            return Ok(Some(Violation {
                vertex: u,
                color: x as u32,
            }));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::is_kernel;

    #[test]
    fn single_arc() {
        let d = OrientedGraph::from_arcs(2, [(0, 1)]).unwrap();
        let (c, _) = parity_coloring(&d, 30).unwrap();
        assert_eq!(c.colors(), &[1, 2]);
        assert_eq!(check_parity_coloring(&d, &c).unwrap(), None);
    }

    #[test]
    fn edgeless() {
        let (c, layers) = parity_coloring(&OrientedGraph::empty(4), 30).unwrap();
        assert_eq!(c.colors(), &[1, 1, 1, 1]);
        assert_eq!(layers.layers.len(), 1);
    }

    #[test]
    fn directed_path_layers_alternate() {
        let d = OrientedGraph::from_arcs(3, [(0, 1), (1, 2)]).unwrap();
        let (c, layers) = parity_coloring(&d, 30).unwrap();
        assert_eq!(check_parity_coloring(&d, &c).unwrap(), None);
        // antikernel {0, 2}, then kernel {1}
        assert_eq!(layers.layers, vec![vec![0, 2], vec![1]]);
    }

    #[test]
    fn checker_examples() {
        let d = OrientedGraph::from_arcs(2, [(0, 1)]).unwrap();
        assert_eq!(
            check_parity_coloring(&d, &Coloring::new(vec![1, 2]).unwrap()).unwrap(),
            None
        );
        assert_eq!(
            check_parity_coloring(&d, &Coloring::new(vec![2, 1]).unwrap()).unwrap(),
            Some(Violation {
                vertex: 0,
                color: 1
            })
        );
    }

    #[test]
    fn cyclic_input_uses_search() {
        // directed 4-cycle: kernels exist at every stage
        let d = OrientedGraph::from_arcs(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let (c, layers) = parity_coloring(&d, 30).unwrap();
        assert_eq!(check_parity_coloring(&d, &c).unwrap(), None);
        assert!(is_kernel(&d, &layers.layers[0], KernelKind::Antikernel));
        // directed triangle: no antikernel at the first layer
        let t = OrientedGraph::from_arcs(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        assert!(matches!(
            parity_coloring(&t, 30),
            Err(Error::KernelNotFound { layer: 1, .. })
        ));
    }
}
