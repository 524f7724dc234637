use std::collections::VecDeque;

use proptest::prelude::*;

use induced_trees::coloring::{
    check_outtree_coloring, check_parity_coloring, greedy_refinement, level_coloring,
    natural_orientation, parity_coloring,
};
use induced_trees::generators::{random_tree, rng};
use induced_trees::graph::{
    br_witness, exact_chromatic, girth, greedy_coloring, is_proper, k2r_witness, verify_embedding,
    Coloring, GraphView, OrientedGraph, UndirectedGraph,
};
use induced_trees::io::{
    parse_coloring, parse_digraph, parse_tree, parse_undirected, serialize_coloring,
    serialize_digraph, serialize_graph, serialize_tree,
};
use induced_trees::oracle::contains_induced_copy;

fn graph(max_n: usize) -> impl Strategy<Value = UndirectedGraph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            UndirectedGraph::from_edges(n, edges).unwrap()
        })
    })
}

/// An orientation of a random graph: each edge goes either way.
fn digraph(max_n: usize) -> impl Strategy<Value = OrientedGraph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(0u8..3, n * (n - 1) / 2).prop_map(move |cells| {
            let mut arcs = Vec::new();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    match cells[k] {
                        1 => arcs.push((u, v)),
                        2 => arcs.push((v, u)),
                        _ => {}
                    }
                    k += 1;
                }
            }
            OrientedGraph::from_arcs(n, arcs).unwrap()
        })
    })
}

/// Acyclic: arcs only from larger to smaller index.
fn dag(max_n: usize) -> impl Strategy<Value = OrientedGraph> {
    graph(max_n).prop_map(|g| {
        OrientedGraph::from_arcs(
            g.vertex_count(),
            g.edges().map(|(u, v)| (u.max(v), u.min(v))),
        )
        .unwrap()
    })
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

fn graph_and_perm(max_n: usize) -> impl Strategy<Value = (UndirectedGraph, Vec<usize>)> {
    graph(max_n).prop_flat_map(|g| {
        let n = g.vertex_count();
        (Just(g), permutation(n))
    })
}

/// A greedy coloring along a random order, with a random color order.
fn colored(max_n: usize) -> impl Strategy<Value = (UndirectedGraph, Coloring)> {
    graph_and_perm(max_n).prop_flat_map(|(g, order)| {
        let c = greedy_coloring(&g, &order).unwrap();
        let k = c.num_colors() as u32;
        (
            Just(g),
            Just(c),
            Just((1..=k).collect::<Vec<u32>>()).prop_shuffle(),
        )
            .prop_map(|(g, c, order)| {
                let c = c.reordered(order).unwrap();
                (g, c)
            })
    })
}

fn brute_chromatic(g: &UndirectedGraph) -> usize {
    let n = g.vertex_count();
    (1..=n.max(1))
        .find(|&k| {
            let mut colors = vec![0usize; n];
            loop {
                if g.edges().all(|(u, v)| colors[u] != colors[v]) {
                    return true;
                }
                let mut i = 0;
                while i < n && colors[i] == k - 1 {
                    colors[i] = 0;
                    i += 1;
                }
                if i == n {
                    return false;
                }
                colors[i] += 1;
            }
        })
        .unwrap_or(0)
}

/// Shortest cycle through each edge: distance between its ends without it, plus one.
fn brute_girth(g: &UndirectedGraph) -> Option<usize> {
    let n = g.vertex_count();
    let edges: Vec<(usize, usize)> = g.edges().collect();
    edges
        .iter()
        .filter_map(|&(a, b)| {
            let mut dist = vec![usize::MAX; n];
            dist[a] = 0;
            let mut queue = VecDeque::from([a]);
            while let Some(u) = queue.pop_front() {
                for &w in g.neighbors(u) {
                    if (u, w) == (a, b) || (u, w) == (b, a) || dist[w] != usize::MAX {
                        continue;
                    }
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
            (dist[b] != usize::MAX).then(|| dist[b] + 1)
        })
        .min()
}

fn brute_k2r(g: &UndirectedGraph, r: usize) -> bool {
    let n = g.vertex_count();
    (0..n).any(|a| {
        (a + 1..n).any(|b| {
            (0..n)
                .filter(|&m| g.adjacent(a, m) && g.adjacent(b, m))
                .count()
                >= r
        })
    })
}

fn brute_br(d: &OrientedGraph, r: usize) -> bool {
    let n = d.vertex_count();
    (0..n).any(|a| {
        (0..n).any(|b| {
            b != a
                && (0..n)
                    .filter(|&m| d.has_arc(a, m) && d.adjacent(b, m))
                    .count()
                    >= r
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn graph_text_round_trip(g in graph(12)) {
        prop_assert_eq!(parse_undirected(&serialize_graph(&g)).unwrap(), g);
    }

    #[test]
    fn digraph_text_round_trip(d in digraph(12)) {
        prop_assert_eq!(parse_digraph(&serialize_digraph(&d)).unwrap(), d);
    }

    #[test]
    fn coloring_text_round_trip((g, c) in colored(12)) {
        let back = parse_coloring(&serialize_coloring(&c), g.vertex_count()).unwrap();
        prop_assert_eq!(back.colors(), c.colors());
        prop_assert_eq!(back.order(), c.order());
    }

    #[test]
    fn tree_text_round_trip(s in 1usize..12, seed in any::<u64>(), out in any::<bool>()) {
        let t = random_tree(s, out, &mut rng(seed)).unwrap();
        prop_assert_eq!(parse_tree(&serialize_tree(&t)).unwrap(), t);
    }

    #[test]
    fn chromatic_matches_brute_force(g in graph(7)) {
        let c = exact_chromatic(&g, 40).unwrap();
        prop_assert!(is_proper(&g, &c).unwrap());
        prop_assert_eq!(c.num_colors(), brute_chromatic(&g));
    }

    #[test]
    fn girth_matches_edge_deletion(g in graph(10)) {
        prop_assert_eq!(girth(&g).finite(), brute_girth(&g));
    }

    #[test]
    fn witnesses_match_brute_force(g in graph(9), d in digraph(8), r in 2usize..4) {
        let w = k2r_witness(&g, r).unwrap();
        prop_assert_eq!(w.is_some(), brute_k2r(&g, r));
        if let Some(w) = w {
            let (a, b) = w.pair;
            prop_assert!(w.common.iter().all(|&m| g.adjacent(a, m) && g.adjacent(b, m)));
        }
        let w = br_witness(&d, r).unwrap();
        prop_assert_eq!(w.is_some(), brute_br(&d, r));
        if let Some(w) = w {
            let (a, b) = w.pair;
            prop_assert!(w.common.iter().all(|&m| d.has_arc(a, m) && d.adjacent(b, m)));
        }
    }

    #[test]
    fn invariants_survive_relabelling((g, perm) in graph_and_perm(9)) {
        let h = g.permuted(&perm).unwrap();
        prop_assert_eq!(h.edge_count(), g.edge_count());
        prop_assert_eq!(girth(&h), girth(&g));
        prop_assert_eq!(
            exact_chromatic(&h, 40).unwrap().num_colors(),
            exact_chromatic(&g, 40).unwrap().num_colors()
        );
        prop_assert_eq!(k2r_witness(&h, 2).unwrap().is_some(), k2r_witness(&g, 2).unwrap().is_some());
    }

    #[test]
    fn induced_copies_survive_relabelling((g, perm) in graph_and_perm(9), s in 1usize..5, seed in any::<u64>()) {
        let t = random_tree(s, true, &mut rng(seed)).unwrap();
        let h = g.permuted(&perm).unwrap();
        let found = contains_induced_copy(&g, &t, 14).unwrap();
        let moved = contains_induced_copy(&h, &t, 14).unwrap();
        prop_assert_eq!(found.is_some(), moved.is_some());
        if let Some(image) = moved {
            prop_assert!(verify_embedding(&h, &t, &image, None).unwrap().induced);
        }
    }

    #[test]
    fn refinement_properties((g, beta) in colored(14)) {
        let res = greedy_refinement(&g, &beta).unwrap();
        let alpha = &res.alpha;
        prop_assert!(is_proper(&g, alpha).unwrap());
        prop_assert!(res.colors_after <= res.colors_before);
        // every vertex sees every smaller color among its neighbours
        for v in 0..g.vertex_count() {
            for c in 1..alpha.color(v) {
                prop_assert!(g.neighbors(v).iter().any(|&u| alpha.color(u) == c));
            }
        }
        // refining again changes nothing
        let again = greedy_refinement(&g, alpha).unwrap().alpha;
        prop_assert_eq!(again.colors(), alpha.colors());
    }

    #[test]
    fn level_peel_recovers_refined_coloring((g, beta) in colored(14)) {
        let alpha = greedy_refinement(&g, &beta).unwrap().alpha;
        let d = natural_orientation(&g, &alpha).unwrap();
        prop_assert!(d.is_acyclic());
        prop_assert!(check_outtree_coloring(&d, &alpha).unwrap().is_none());
        let levels = level_coloring(&d).unwrap();
        prop_assert_eq!(levels.colors(), alpha.colors());
    }

    #[test]
    fn level_coloring_steps_down_by_one(d in dag(14)) {
        let c = level_coloring(&d).unwrap();
        prop_assert!(is_proper(&d, &c).unwrap());
        for v in 0..d.vertex_count() {
            let level = c.color(v);
            let outs: Vec<u32> = d.out_neighbors(v).iter().map(|&u| c.color(u)).collect();
            prop_assert!(outs.iter().all(|&x| x < level));
            prop_assert_eq!(level == 1, outs.is_empty());
            prop_assert!(level == 1 || outs.contains(&(level - 1)));
        }
    }

    #[test]
    fn parity_coloring_passes_checker(d in dag(14)) {
        let (c, _) = parity_coloring(&d, 30).unwrap();
        prop_assert!(is_proper(&d, &c).unwrap());
        prop_assert!(check_parity_coloring(&d, &c).unwrap().is_none());
    }

    #[test]
    fn reversal_round_trip(d in digraph(12), s in 1usize..8, seed in any::<u64>()) {
        prop_assert_eq!(d.reverse().reverse(), d);
        let t = random_tree(s, false, &mut rng(seed)).unwrap();
        prop_assert_eq!(t.reversed().reversed(), t);
    }
}
