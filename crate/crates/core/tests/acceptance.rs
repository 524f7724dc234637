//! Acceptance run: one pass/fail line per criterion, non-zero exit on any failure.

use std::collections::{BTreeSet, HashMap};
use std::time::{Duration, Instant};

use induced_trees::embed::{planted_br_host, st_plan};
use induced_trees::experiment::{run_suite, ExperimentReport, InstanceRecord, Suite, SuiteConfig};
use induced_trees::generators::{oriented_trees, synth_outtree_colored, Constraint, SynthConfig};
use induced_trees::graph::{Coloring, OrientedGraph, RootedOrientedTree, TreeKind};

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        ok,
        detail: detail.into(),
    }
}

fn suite(suite: Suite, tweak: impl FnOnce(&mut SuiteConfig)) -> ExperimentReport {
    let mut cfg = SuiteConfig::new(suite);
    tweak(&mut cfg);
    run_suite(&cfg).unwrap_or_else(|e| panic!("{suite} failed to run: {e}"))
}

fn summary(r: &ExperimentReport) -> String {
    let mut s = format!("{}/{}", r.summary.successes, r.summary.records);
    if let Some(first) = r.summary.failed.first() {
        s.push_str(&format!(", first failure {first}"));
    }
    s
}

fn all_hypotheses(r: &ExperimentReport) -> bool {
    r.records.iter().all(|x| x.hypotheses.values().all(|&h| h))
}

fn success_records_revalidate(r: &ExperimentReport) -> bool {
    r.records
        .iter()
        .filter(|x| x.verdict.is_some())
        .all(|x| x.revalidated == Some(true))
}

/// Induced, direction-exact and (with a coloring) rainbow, computed from scratch.
fn independent_check(
    host: &OrientedGraph,
    tree: &RootedOrientedTree,
    image: &[usize],
    c: Option<&Coloring>,
) -> bool {
    let s = tree.vertex_count();
    if image.len() != s || image.iter().collect::<BTreeSet<_>>().len() != s {
        return false;
    }
    let arcs: BTreeSet<(usize, usize)> = host.arcs().collect();
    let tree_arcs: BTreeSet<(usize, usize)> = tree.arcs().iter().copied().collect();
    for a in 0..s {
        for b in 0..s {
            if a != b && arcs.contains(&(image[a], image[b])) != tree_arcs.contains(&(a, b)) {
                return false;
            }
        }
    }
    match c {
        Some(c) => {
            image
                .iter()
                .map(|&x| c.color(x))
                .collect::<BTreeSet<_>>()
                .len()
                == s
        }
        None => true,
    }
}

fn index_of(id: &str, key: &str) -> usize {
    id.split('/')
        .find_map(|part| part.strip_prefix(key))
        .and_then(|n| n.parse().ok())
        .unwrap_or_else(|| panic!("record id `{id}` lacks `{key}`"))
}

fn replayed(r: &ExperimentReport) -> impl Iterator<Item = (&InstanceRecord, &[usize])> {
    r.records
        .iter()
        .filter_map(|x| x.image.as_deref().map(|img| (x, img)))
}

fn criterion_1() -> Outcome {
    let r = suite(Suite::Refinement, |c| c.count = 200);
    outcome(r.passed() && r.summary.records == 200, summary(&r))
}

fn criterion_2() -> Outcome {
    // (r, s, colors from the bound formula, seeds, out-trees on s vertices)
    let runs = [(2, 3, 6, 50, 2), (2, 4, 10, 50, 4), (3, 3, 9, 25, 2)];
    let mut ok = true;
    let mut parts = Vec::new();
    for (r, s, k, seeds, trees) in runs {
        let report = suite(Suite::LemmaMain, |c| {
            c.r = r;
            c.s = s;
            c.seeds = seeds;
        });
        let catalog = oriented_trees(s, 7).unwrap().out_trees();
        let mut instances = HashMap::new();
        let mut replay_ok = catalog.len() == trees;
        for (rec, image) in replayed(&report) {
            let inst = instances.entry(rec.seed).or_insert_with(|| {
                synth_outtree_colored(&SynthConfig::new(k, Constraint::BrFree(r), rec.seed))
                    .unwrap()
            });
            let t = &catalog[index_of(&rec.id, "tree")];
            let decreasing = (0..s).all(|v| match t.parent(v) {
                Some(p) => inst.alpha.level(image[p]) > inst.alpha.level(image[v]),
                None => true,
            });
            replay_ok &= inst.alpha.num_colors() == k
                && independent_check(&inst.digraph, t, image, Some(&inst.alpha))
                && decreasing;
        }
        let runs_ok = report.passed()
            && report.summary.records == seeds * trees
            && all_hypotheses(&report)
            && success_records_revalidate(&report)
            && replay_ok;
        ok &= runs_ok;
        parts.push(format!("(r={r},s={s},k={k}) {}", summary(&report)));
    }
    outcome(ok, parts.join("; "))
}

fn criterion_3() -> Outcome {
    let r = suite(Suite::OracleAgreement, |c| c.count = 300);
    outcome(r.passed() && r.summary.records == 300, summary(&r))
}

fn criterion_4() -> Outcome {
    let r = suite(Suite::C5Rainbow, |c| c.s = 2);
    let paths: Vec<usize> = r.records.iter().map(|x| x.counts["distinct"]).collect();
    let ok = r.passed() && all_hypotheses(&r) && paths.iter().all(|&p| p >= 1);
    outcome(
        ok,
        format!("{}, distinct paths per coloring {paths:?}", summary(&r)),
    )
}

fn criterion_5() -> Outcome {
    let r = suite(Suite::Aravind, |c| c.count = 2000);
    let rec = &r.records[0];
    let checked = rec.counts["instances"];
    let found = rec.counts["counterexamples"];
    let mut detail = format!("{checked} pairs, {found} counterexamples");
    if let Some(note) = &rec.note {
        detail.push_str(&format!(": {note}"));
    }
    outcome(r.passed() && checked >= 2000 && found == 0, detail)
}

fn criterion_6() -> Outcome {
    let r = suite(Suite::Dag, |c| {
        c.s = 4;
        c.seeds = 20;
    });
    let mut trees = Vec::new();
    for m in 1..=4 {
        let cat = oriented_trees(m, 7).unwrap();
        trees.extend(cat.out_trees());
        trees.extend(cat.in_trees().into_iter().filter(|t| t.vertex_count() > 1));
    }
    let mut hosts = HashMap::new();
    let mut replay_ok = true;
    let mut in_trees = 0;
    for (rec, image) in replayed(&r) {
        let inst = hosts.entry(rec.seed).or_insert_with(|| {
            let mut sc = SynthConfig::new(10, Constraint::BrFree(2), rec.seed);
            sc.two_sided = true;
            synth_outtree_colored(&sc).unwrap()
        });
        let t = &trees[index_of(&rec.id, "tree")];
        if t.kind() == TreeKind::InTree && t.vertex_count() > 1 {
            in_trees += 1;
        }
        replay_ok &=
            inst.alpha.num_colors() == 10 && independent_check(&inst.digraph, t, image, None);
    }
    let ok = r.passed()
        && all_hypotheses(&r)
        && success_records_revalidate(&r)
        && replay_ok
        && in_trees > 0;
    outcome(
        ok,
        format!(
            "{} over {} trees, {in_trees} in-tree embeddings replayed",
            summary(&r),
            trees.len()
        ),
    )
}

fn criterion_7() -> Outcome {
    let r = suite(Suite::Parity, |c| c.count = 200);
    let max_n = r.records.iter().map(|x| x.counts["n"]).max().unwrap_or(0);
    let arcs = r
        .records
        .iter()
        .filter(|x| x.checks.contains_key("single_arc"))
        .count();
    outcome(
        r.passed() && max_n <= 300,
        format!("{}, single arc checked on {arcs} DAGs", summary(&r)),
    )
}

/// st by direct recursion over arc lists.
fn st_oracle(n: usize, arcs: &[(usize, usize)]) -> usize {
    let alive: BTreeSet<usize> = arcs.iter().flat_map(|&(u, v)| [u, v]).collect();
    if n <= 1 {
        return 0;
    }
    let count = |v: usize, out: bool| {
        arcs.iter()
            .filter(|&&(a, b)| if out { a == v } else { b == v })
            .count()
    };
    let out_leaves: Vec<usize> = alive
        .iter()
        .copied()
        .filter(|&v| count(v, false) == 1 && count(v, true) == 0)
        .collect();
    let in_leaves: Vec<usize> = alive
        .iter()
        .copied()
        .filter(|&v| count(v, true) == 1 && count(v, false) == 0)
        .collect();
    [out_leaves, in_leaves]
        .iter()
        .filter(|l| !l.is_empty())
        .map(|l| {
            let rest: Vec<(usize, usize)> = arcs
                .iter()
                .copied()
                .filter(|&(a, b)| !l.contains(&a) && !l.contains(&b))
                .collect();
            1 + st_oracle(n - l.len(), &rest)
        })
        .min()
        .expect("a tree with an arc has a leaf")
}

fn criterion_8() -> Outcome {
    let mut st_cases = 0;
    let mut st_ok = true;
    for s in 1..=6 {
        for t in oriented_trees(s, 7).unwrap().trees() {
            st_cases += 1;
            st_ok &= st_plan(t).st_value == st_oracle(t.vertex_count(), t.arcs());
        }
    }
    let r = suite(Suite::Br, |c| {
        c.r = 2;
        c.s = 4;
        c.seeds = 30;
    });
    let mut trees = Vec::new();
    for m in 1..=4 {
        trees.extend(oriented_trees(m, 7).unwrap().trees().iter().cloned());
    }
    let mut replay_ok = true;
    for (rec, image) in replayed(&r).step_by(7) {
        let t = &trees[index_of(&rec.id, "tree")];
        let d = planted_br_host(t, 2, rec.seed).unwrap();
        replay_ok &= independent_check(&d, t, image, None);
    }
    let diagnosed: usize = r.records.iter().map(|x| x.counts["peel_checks"]).sum();
    let ok = st_ok
        && r.passed()
        && all_hypotheses(&r)
        && success_records_revalidate(&r)
        && replay_ok
        && diagnosed > 0;
    outcome(
        ok,
        format!(
            "st oracle {st_cases} trees {}, embeddings {}, {diagnosed} peeled sets checked",
            if st_ok { "agree" } else { "DISAGREE" },
            summary(&r)
        ),
    )
}

fn criterion_9() -> Outcome {
    let mut ok = true;
    let mut parts = Vec::new();
    for (s, n) in [(3, 43), (4, 585)] {
        let r = suite(Suite::Extraction, |c| {
            c.r = 2;
            c.s = s;
        });
        let sized = r.records.iter().all(|x| x.counts["n"] == n);
        ok &= r.passed() && sized;
        parts.push(format!("{n}-vertex host {}", summary(&r)));
    }
    outcome(ok, parts.join("; "))
}

fn criterion_10() -> Outcome {
    let g = suite(Suite::Generators, |_| {});
    let girth = suite(Suite::Girth, |_| {});
    outcome(
        g.passed() && girth.passed() && all_hypotheses(&girth),
        format!(
            "generators {}, girth-host diagnostics {}",
            summary(&g),
            summary(&girth)
        ),
    )
}

fn main() {
    type Criterion = (&'static str, fn() -> Outcome, u64);
    let criteria: [Criterion; 10] = [
        ("refinement", criterion_1, 60),
        ("good-tree guarantee", criterion_2, 120),
        ("oracle agreement", criterion_3, 180),
        ("C5 rainbow path", criterion_4, 60),
        ("Aravind scan", criterion_5, 300),
        ("DAG out/in-trees", criterion_6, 120),
        ("parity coloring", criterion_7, 120),
        ("leaf-peeling embedding", criterion_8, 180),
        ("rainbow ary-tree extraction", criterion_9, 60),
        ("generator fidelity", criterion_10, 60),
    ];
    let start = Instant::now();
    let mut failures = 0;
    for (i, (name, run, limit)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let out = run();
        let elapsed = t.elapsed();
        let in_time = elapsed <= Duration::from_secs(*limit);
        let pass = out.ok && in_time;
        if !pass {
            failures += 1;
        }
        println!(
            "criterion {:>2} {:<28} {} ({}; {:.1}s of {}s)",
            i + 1,
            name,
            if pass { "PASS" } else { "FAIL" },
            out.detail,
            elapsed.as_secs_f64(),
            limit
        );
    }
    println!(
        "acceptance: {}/{} criteria passed in {:.1}s",
        10 - failures,
        10,
        start.elapsed().as_secs_f64()
    );
    if failures > 0 {
        std::process::exit(1);
    }
}
