use rand::seq::SliceRandom;
use rand::Rng;
use rayon::prelude::*;

use super::{timed, InstanceRecord, SuiteConfig, Timed};
use crate::coloring::{
    check_outtree_coloring, check_parity_coloring, check_refinement_witnesses, greedy_refinement,
    natural_orientation, parity_coloring,
};
use crate::embed::{
    bikernel_tree_embedding, br_tree_embedding, dag_tree_embedding, decreasing_tree_search,
    extract_from_rainbow_ary_tree, good_tree_bound, good_tree_search, parity_tree_search,
    peeled_set_diagnostic, planted_br_host, rainbow_paths_harness, st_plan, stuck_state_diagnostic,
    Orderings,
};
use crate::error::Result;
use crate::generators::{
    complete_ary_tree, named_graph, oriented_trees, random_color_order, random_dag, random_graph,
    random_greedy_coloring, random_tree, rng, synth_outtree_colored, triangle_free_process,
    undirected_trees, Constraint, GraphFilter, NamedGraph, SynthConfig,
};
use crate::graph::{
    br_witness, exact_chromatic, girth, is_proper, k2r_witness, Coloring, GraphView, OrientedGraph,
    RootedOrientedTree, UndirectedGraph,
};
use crate::oracle::{
    aravind_scan, contains_induced_copy, enumerate_induced_rainbow_paths, mu, CanonicalPath,
};

fn collect(items: Vec<Result<Vec<Timed>>>) -> Result<Vec<Timed>> {
    let mut out = Vec::new();
    for item in items {
        out.extend(item?);
    }
    Ok(out)
}

/// Random graphs with random greedy colorings under random color orders.
pub(super) fn refinement(cfg: &SuiteConfig) -> Result<Vec<Timed>> {
    (0..cfg.count as u64)
        .into_par_iter()
        .map(|i| {
            let seed = cfg.seed + i;
            timed(|| {
                let mut rng = rng(seed);
                let n = rng.gen_range(1..=60);
                let p = rng.gen_range(0.02..0.5);
                let g = random_graph(n, p, seed, GraphFilter::None, 1)?;
                let beta = random_color_order(&random_greedy_coloring(&g, &mut rng), &mut rng);
                let res = greedy_refinement(&g, &beta)?;
                let d = natural_orientation(&g, &res.alpha)?;
                let mut rec = InstanceRecord::new(format!("graph{i}"), seed);
                rec.count("n", n);
                rec.count("colors_before", res.colors_before);
                rec.count("colors_after", res.colors_after);
                rec.check("proper", is_proper(&g, &res.alpha)?);
                rec.check("non_increasing", res.colors_after <= res.colors_before);
                rec.check(
                    "witnesses",
                    check_refinement_witnesses(&g, &beta, &res.alpha)?.is_none(),
                );
                rec.check("acyclic", d.is_acyclic());
                rec.check(
                    "out_tree_colored",
                    check_outtree_coloring(&d, &res.alpha)?.is_none(),
                );
                Ok(rec)
            })
        })
        .collect()
}

/// Good-tree search on synthetic hosts free of the `r`-pattern with exactly
/// the guaranteed number of colors, over every out-tree on `s` vertices.
pub(super) fn lemma_main(cfg: &SuiteConfig) -> Result<Vec<Timed>> {
    let k = good_tree_bound(cfg.r, cfg.s);
    let trees = oriented_trees(cfg.s, cfg.guards.catalog_s)?.out_trees();
    let items = (0..cfg.seeds as u64)
        .into_par_iter()
        .map(|i| {
            let seed = cfg.seed + i;
            let inst =
                synth_outtree_colored(&SynthConfig::new(k, Constraint::BrFree(cfg.r), seed))?;
            let d = &inst.digraph;
            let free = br_witness(d, cfg.r)?.is_none();
            trees
                .iter()
                .enumerate()
                .map(|(j, t)| {
                    timed(|| {
                        let mut rec = InstanceRecord::new(format!("seed{i}/tree{j}"), seed);
                        rec.hypothesis("pattern_free", free);
                        rec.hypothesis("colors_at_bound", inst.alpha.num_colors() >= k);
                        rec.count("n", d.vertex_count());
                        let out = good_tree_search(d, d, &inst.alpha, t)?;
                        rec.check("embedded", out.is_embedded());
                        if let Some(e) = out.embedding() {
                            let ok = rec.embedding(d, t, e, Some(&inst.alpha))?;
                            rec.check("verified", ok);
                            rec.check("decreasing", e.verdict.decreasing == Some(true));
                        }
                        Ok(rec)
                    })
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect();
    collect(items)
}

/// Constructive searches against brute force on small hosts.
pub(super) fn oracle_agreement(cfg: &SuiteConfig) -> Result<Vec<Timed>> {
    let guards = cfg.guards;
    (0..cfg.count as u64)
        .into_par_iter()
        .map(|i| {
            let seed = cfg.seed + i;
            timed(|| {
                let mut rng = rng(seed);
                let n = rng.gen_range(3..=12);
                let p = rng.gen_range(0.15..0.6);
                let g = random_graph(n, p, seed, GraphFilter::None, 1)?;
                let beta = random_color_order(&random_greedy_coloring(&g, &mut rng), &mut rng);
                let s = rng.gen_range(1..=4usize);
                let mut rec = InstanceRecord::new(format!("case{i}"), seed);
                rec.count("n", n);

                let path = RootedOrientedTree::path(s)?;
                let all = enumerate_induced_rainbow_paths(&g, &beta, s, &guards)?;
                let run = decreasing_tree_search(&g, &beta, &path)?;
                if let Some(e) = run.outcome.embedding() {
                    rec.check(
                        "path_enumerated",
                        all.contains(&CanonicalPath::new(e.image.clone())),
                    );
                }

                let m = mu(&g, &beta, &guards)?;
                rec.count("mu", m);
                rec.check(
                    "mu_attained",
                    !enumerate_induced_rainbow_paths(&g, &beta, m, &guards)?.is_empty(),
                );
                if m < guards.enumerate_s {
                    rec.check(
                        "mu_maximal",
                        enumerate_induced_rainbow_paths(&g, &beta, m + 1, &guards)?.is_empty(),
                    );
                }
                if g.edge_count() > 0 {
                    rec.check("mu_edge", m >= 2);
                }

                let h = random_tree(s, true, &mut rng)?;
                let run = decreasing_tree_search(&g, &beta, &h)?;
                if let Some(e) = run.outcome.embedding() {
                    rec.check(
                        "decreasing_tree_contained",
                        contains_induced_copy(&g, &h, guards.contains_n)?.is_some(),
                    );
                    rec.check("decreasing_tree_verified", e.verdict.induced);
                }

                let d = random_dag(n, p, seed)?;
                let ts = rng.gen_range(1..=4usize);
                let t = random_tree(ts, true, &mut rng)?;
                let t = if rng.gen_bool(0.5) { t } else { t.reversed() };
                let found = contains_induced_copy(&d, &t, guards.contains_n)?;
                if let Some(e) = dag_tree_embedding(&d, &t, None)?.embedding() {
                    rec.check("dag_contained", found.is_some());
                    rec.check("dag_verified", e.verdict.holds());
                }
                if let Some(e) = br_tree_embedding(&d, &t, 2)?.embedding() {
                    rec.check("br_contained", found.is_some());
                    rec.check("br_verified", e.verdict.holds());
                }
                let any = random_tree(ts, false, &mut rng)?;
                let bk = bikernel_tree_embedding(&d, &any, guards.kernel_n)?;
                if let Some(e) = bk.outcome.embedding() {
                    let rooted = any.with_root(bk.root)?;
                    rec.check(
                        "parity_contained",
                        contains_induced_copy(&d, &rooted, guards.contains_n)?.is_some(),
                    );
                    rec.check("parity_verified", e.verdict.holds());
                }
                Ok(rec)
            })
        })
        .collect()
}

/// Rainbow 2-paths in the 5-cycle over every ordering of its colors.
pub(super) fn c5_rainbow(cfg: &SuiteConfig) -> Result<Vec<Timed>> {
    let g = named_graph(NamedGraph::Cycle(5))?;
    let exact = exact_chromatic(&g, cfg.guards.chromatic_n)?;
    let given = Coloring::new(vec![1, 2, 1, 2, 3])?;
    let s = cfg.s;
    let min_paths = (1..=s).product::<usize>() / 2;
    [("exact", exact), ("given", given)]
        .into_iter()
        .map(|(name, beta)| {
            timed(|| {
                let mut rec = InstanceRecord::new(name, cfg.seed);
                let chi = exact_chromatic(&g, cfg.guards.chromatic_n)?.num_colors();
                rec.hypothesis("chromatic_at_bound", chi >= good_tree_bound(cfg.r, s));
                rec.hypothesis("pattern_free", k2r_witness(&g, cfg.r)?.is_none());
                let res = rainbow_paths_harness(&g, &beta, s, Orderings::All, &cfg.guards)?;
                rec.count("runs", res.runs);
                rec.count("distinct", res.distinct());
                rec.check("all_verified", res.unverified == 0);
                rec.check("enough_paths", res.distinct() >= min_paths.max(1));
                Ok(rec)
            })
        })
        .collect()
}

/// Sampled optimal colorings of small triangle-free graphs.
pub(super) fn aravind(cfg: &SuiteConfig) -> Result<Vec<Timed>> {
    const PER_GRAPH: usize = 10;
    let graphs = cfg.count.div_ceil(PER_GRAPH).max(2);
    let mut corpus = vec![
        named_graph(NamedGraph::Cycle(5))?,
        named_graph(NamedGraph::Grotzsch)?,
    ];
    for j in 0..graphs as u64 - 2 {
        let seed = cfg.seed + j;
        let mut rng = rng(seed);
        let n = rng.gen_range(5..=12);
        let g = if j % 2 == 0 {
            triangle_free_process(n, seed)
        } else {
            random_graph(
                n,
                rng.gen_range(0.15..0.3),
                seed,
                GraphFilter::TriangleFree,
                1000,
            )?
        };
        corpus.push(g);
    }
    let report = timed(|| {
        let scan = aravind_scan(&corpus, PER_GRAPH, cfg.seed, &cfg.guards)?;
        let mut rec = InstanceRecord::new("scan", cfg.seed);
        rec.count("graphs", scan.graphs_scanned);
        rec.count("instances", scan.instances_checked);
        rec.count("skipped", scan.skipped.len());
        rec.count("counterexamples", scan.counterexamples.len());
        rec.check("enough_instances", scan.instances_checked >= cfg.count);
        rec.check("no_counterexample", scan.counterexamples.is_empty());
        if !scan.counterexamples.is_empty() {
            let listed: Vec<String> = scan
                .counterexamples
                .iter()
                .map(|c| {
                    format!(
                        "graph {} = {:?} coloring {:?}",
                        c.graph_index,
                        corpus[c.graph_index].edges().collect::<Vec<_>>(),
                        c.colors
                    )
                })
                .collect();
            rec.note = Some(listed.join("; "));
        }
        Ok(rec)
    })?;
    Ok(vec![report])
}

/// Out-trees and in-trees in synthetic pattern-free DAGs whose supplied
/// coloring works in both directions.
pub(super) fn dag(cfg: &SuiteConfig) -> Result<Vec<Timed>> {
    let k = good_tree_bound(cfg.r, cfg.s);
    let mut trees = Vec::new();
    for m in 1..=cfg.s {
        let cat = oriented_trees(m, cfg.guards.catalog_s)?;
        trees.extend(cat.out_trees());
        trees.extend(cat.in_trees().into_iter().filter(|t| t.vertex_count() > 1));
    }
    let items = (0..cfg.seeds as u64)
        .into_par_iter()
        .map(|i| {
            let seed = cfg.seed + i;
            let mut sc = SynthConfig::new(k, Constraint::BrFree(cfg.r), seed);
            sc.two_sided = true;
            let inst = synth_outtree_colored(&sc)?;
            let d = &inst.digraph;
            let free = br_witness(d, cfg.r)?.is_none();
            let free_rev = br_witness(&d.reverse(), cfg.r)?.is_none();
            let round_trip = d.reverse().reverse() == *d;
            trees
                .iter()
                .enumerate()
                .map(|(j, t)| {
                    timed(|| {
                        let mut rec = InstanceRecord::new(format!("seed{i}/tree{j}"), seed);
                        rec.hypothesis("pattern_free", free);
                        rec.hypothesis("reverse_pattern_free", free_rev);
                        rec.count("n", d.vertex_count());
                        rec.count("tree_size", t.vertex_count());
                        rec.check("round_trip", round_trip && t.reversed().reversed() == *t);
                        let out = dag_tree_embedding(d, t, Some(&inst.alpha))?;
                        rec.check("embedded", out.is_embedded());
                        if let Some(e) = out.embedding() {
                            let ok = rec.embedding(d, t, e, Some(&inst.alpha))?;
                            rec.check("verified", ok);
                        }
                        Ok(rec)
                    })
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect();
    collect(items)
}

/// Parity colorings of random DAGs and parity searches for random trees.
pub(super) fn parity(cfg: &SuiteConfig) -> Result<Vec<Timed>> {
    let guards = cfg.guards;
    (0..cfg.count as u64)
        .into_par_iter()
        .map(|i| {
            let seed = cfg.seed + i;
            timed(|| {
                let mut rng = rng(seed);
                let n = rng.gen_range(2..=300);
                let p = (rng.gen_range(1.0..6.0) / n as f64).min(1.0);
                let d = random_dag(n, p, seed)?;
                let mut rec = InstanceRecord::new(format!("dag{i}"), seed);
                rec.count("n", n);
                let (gamma, _) = parity_coloring(&d, guards.kernel_n)?;
                rec.count("colors", gamma.num_colors());
                rec.check(
                    "parity_coloring",
                    check_parity_coloring(&d, &gamma)?.is_none(),
                );
                let mut found = 0;
                for _ in 0..3 {
                    let t = random_tree(rng.gen_range(1..=cfg.s.max(1)), false, &mut rng)?;
                    if let Some(e) = parity_tree_search(&d, &gamma, &t)?.embedding() {
                        found += 1;
                        let ok = e.revalidate(&d, &t, Some(&gamma))? && e.verdict.holds();
                        rec.check(&format!("verified{found}"), ok);
                        if n <= guards.contains_n {
                            let c = contains_induced_copy(&d, &t, guards.contains_n)?.is_some();
                            rec.check(&format!("contained{found}"), c);
                        }
                    }
                }
                rec.count("successes", found);
                if d.arc_count() > 0 {
                    let arc = RootedOrientedTree::path(2)?;
                    let bk = bikernel_tree_embedding(&d, &arc, guards.kernel_n)?;
                    rec.check(
                        "single_arc",
                        bk.outcome.embedding().is_some_and(|e| e.verdict.holds()),
                    );
                }
                Ok(rec)
            })
        })
        .collect()
}

/// Planted hosts for the leaf-peeling embedding.
pub(super) fn br(cfg: &SuiteConfig) -> Result<Vec<Timed>> {
    let mut trees = Vec::new();
    for m in 1..=cfg.s {
        trees.extend(
            oriented_trees(m, cfg.guards.catalog_s)?
                .trees()
                .iter()
                .cloned(),
        );
    }
    let items = (0..cfg.seeds as u64)
        .into_par_iter()
        .map(|i| {
            let seed = cfg.seed + i;
            trees
                .iter()
                .enumerate()
                .map(|(j, t)| {
                    timed(|| {
                        let mut rec = InstanceRecord::new(format!("seed{i}/tree{j}"), seed);
                        let d = planted_br_host(t, cfg.r, seed)?;
                        rec.hypothesis("pattern_free", br_witness(&d, cfg.r)?.is_none());
                        rec.count("n", d.vertex_count());
                        rec.count("st", st_plan(t).st_value);
                        let out = br_tree_embedding(&d, t, cfg.r)?;
                        rec.check("embedded", out.is_embedded());
                        if let Some(e) = out.embedding() {
                            let ok = rec.embedding(&d, t, e, None)?;
                            rec.check("verified", ok);
                        }
                        let checks = peeled_set_diagnostic(&d, out.trace(), 25)?;
                        rec.count(
                            "peel_checks",
                            checks.iter().filter(|c| c.chromatic.is_some()).count(),
                        );
                        rec.check(
                            "peeled_sets",
                            checks.iter().all(|c| c.holds() != Some(false)),
                        );
                        Ok(rec)
                    })
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect();
    collect(items)
}

/// Adds random edges to `g` that keep it free of `K_{2,r}`.
fn sprinkle(g: &UndirectedGraph, r: usize, attempts: usize, seed: u64) -> Result<UndirectedGraph> {
    let mut rng = rng(seed);
    let n = g.vertex_count();
    let mut edges: Vec<(usize, usize)> = g.edges().collect();
    let mut current = g.clone();
    for _ in 0..attempts {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u == v || current.adjacent(u, v) {
            continue;
        }
        edges.push((u, v));
        let next = UndirectedGraph::from_edges(n, edges.iter().copied())?;
        if k2r_witness(&next, r)?.is_none() {
            current = next;
        } else {
            edges.pop();
        }
    }
    Ok(current)
}

/// Every tree on at most `s` vertices from a rainbow complete `(rs)`-ary tree.
pub(super) fn extraction(cfg: &SuiteConfig) -> Result<Vec<Timed>> {
    let (r, s) = (cfg.r, cfg.s);
    let ary = complete_ary_tree(r * s, s)?;
    let mut patterns = Vec::new();
    for m in 1..=s {
        for h in undirected_trees(m)? {
            for root in 0..m {
                patterns.push(h.with_root(root)?.as_out_tree());
            }
        }
    }
    let items = (0..cfg.seeds.max(1) as u64)
        .into_par_iter()
        .map(|i| {
            let seed = cfg.seed + i;
            let base = ary.to_digraph().underlying();
            // seed 0 keeps the bare tree
            let g = if i == 0 {
                base
            } else {
                sprinkle(&base, r, 200, seed)?
            };
            let mut labels: Vec<u32> = (1..=g.vertex_count() as u32).collect();
            labels.shuffle(&mut rng(seed));
            let coloring = Coloring::new(labels)?;
            let image: Vec<usize> = (0..g.vertex_count()).collect();
            patterns
                .iter()
                .enumerate()
                .map(|(j, h)| {
                    timed(|| {
                        let mut rec = InstanceRecord::new(format!("host{i}/pattern{j}"), seed);
                        rec.count("n", g.vertex_count());
                        rec.count("extra_edges", g.edge_count() - (g.vertex_count() - 1));
                        let e = extract_from_rainbow_ary_tree(&g, &ary, &image, &coloring, h, r)?;
                        let ok = rec.embedding(&g, h, &e, Some(&coloring))?;
                        rec.check("verified", ok && e.verdict.rainbow == Some(true));
                        Ok(rec)
                    })
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect();
    collect(items)
}

/// Synthetic, random and named instances against their declared properties.
pub(super) fn generators(cfg: &SuiteConfig) -> Result<Vec<Timed>> {
    let synth: Vec<(usize, Constraint, bool)> = vec![
        (6, Constraint::BrFree(2), false),
        (10, Constraint::BrFree(2), false),
        (9, Constraint::BrFree(3), false),
        (10, Constraint::BrFree(2), true),
        (5, Constraint::GirthAtLeast(5), false),
        (6, Constraint::GirthAtLeast(6), false),
    ];
    let jobs: Vec<(usize, u64)> = (0..synth.len())
        .flat_map(|c| (0..cfg.seeds as u64).map(move |i| (c, i)))
        .collect();
    let mut out: Vec<Timed> = jobs
        .into_par_iter()
        .map(|(c, i)| {
            let (k, constraint, two_sided) = synth[c];
            let seed = cfg.seed + i;
            timed(|| {
                let mut sc = SynthConfig::new(k, constraint, seed);
                sc.two_sided = two_sided;
                let inst = synth_outtree_colored(&sc)?;
                let d = &inst.digraph;
                let mut rec = InstanceRecord::new(format!("synth{c}/seed{i}"), seed);
                rec.count("n", d.vertex_count());
                rec.check("validates", inst.validate().is_ok());
                rec.check("colors", inst.alpha.num_colors() == k);
                rec.check(
                    "out_tree_colored",
                    check_outtree_coloring(d, &inst.alpha)?.is_none(),
                );
                match constraint {
                    Constraint::BrFree(r) => rec.check("pattern_free", br_witness(d, r)?.is_none()),
                    Constraint::GirthAtLeast(g) => rec.check("girth", girth(d).at_least(g)),
                    Constraint::None => {}
                }
                if two_sided {
                    let rev = check_outtree_coloring(&d.reverse(), &inst.alpha.reversed_order())?;
                    rec.check("two_sided", rev.is_none());
                }
                Ok(rec)
            })
        })
        .collect::<Result<_>>()?;

    for i in 0..cfg.seeds as u64 {
        let seed = cfg.seed + i;
        out.push(timed(|| {
            let mut rec = InstanceRecord::new(format!("random/seed{i}"), seed);
            let tf = random_graph(12, 0.3, seed, GraphFilter::TriangleFree, 200)?;
            rec.check(
                "triangle_free",
                tf.is_triangle_free() && girth(&tf).at_least(4),
            );
            let g5 = random_graph(12, 0.25, seed, GraphFilter::GirthAtLeast(5), 500)?;
            rec.check("girth5", girth(&g5).at_least(5));
            let proc = triangle_free_process(12, seed);
            rec.check("process_triangle_free", proc.is_triangle_free());
            let d = random_dag(30, 0.2, seed)?;
            rec.check("dag_acyclic", d.is_acyclic());
            Ok(rec)
        })?);
    }
    out.push(timed(|| {
        let mut rec = InstanceRecord::new("named", cfg.seed);
        let chi = |g: &UndirectedGraph| {
            exact_chromatic(g, cfg.guards.chromatic_n).map(|c| c.num_colors())
        };
        let petersen = named_graph(NamedGraph::Petersen)?;
        rec.check(
            "petersen",
            girth(&petersen).finite() == Some(5) && chi(&petersen)? == 3,
        );
        let grotzsch = named_graph(NamedGraph::Grotzsch)?;
        rec.check(
            "grotzsch",
            grotzsch.is_triangle_free() && chi(&grotzsch)? == 4,
        );
        let brinkmann = named_graph(NamedGraph::Brinkmann)?;
        rec.check(
            "brinkmann",
            girth(&brinkmann).finite() == Some(5) && chi(&brinkmann)? == 4,
        );
        Ok(rec)
    })?);
    Ok(out)
}

/// Stuck good-tree searches in hosts of large girth, fed to the diagnostic.
pub(super) fn girth_diagnostic(cfg: &SuiteConfig) -> Result<Vec<Timed>> {
    let g = cfg.girth;
    let k = g + 2;
    let items = (0..cfg.seeds as u64)
        .into_par_iter()
        .map(|i| {
            let seed = cfg.seed + i;
            let inst =
                synth_outtree_colored(&SynthConfig::new(k, Constraint::GirthAtLeast(g), seed))?;
            let d: &OrientedGraph = &inst.digraph;
            let mut rng = rng(seed);
            let trees: Vec<RootedOrientedTree> = std::iter::once(RootedOrientedTree::path(k + 1))
                .chain((0..3).map(|_| random_tree(k + 1, true, &mut rng)))
                .collect::<Result<_>>()?;
            trees
                .iter()
                .enumerate()
                .map(|(j, t)| {
                    timed(|| {
                        let mut rec = InstanceRecord::new(format!("seed{i}/tree{j}"), seed);
                        rec.hypothesis("girth", girth(d).at_least(g));
                        let out = good_tree_search(d, d, &inst.alpha, t)?;
                        let placed = out.trace().placed.len();
                        rec.count("placed", placed);
                        if out.is_embedded() || placed < g {
                            rec.note = Some("no stuck state to diagnose".into());
                            return Ok(rec);
                        }
                        let report = stuck_state_diagnostic(out.trace(), d, g)?;
                        rec.count("rejected", report.rejected);
                        rec.count("aux_edges", report.aux_edges);
                        rec.check("diagnostic", report.holds());
                        if !report.holds() {
                            rec.note = Some(report.violations.join("; "));
                        }
                        Ok(rec)
                    })
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect();
    collect(items)
}
