use rand::seq::SliceRandom;
use rand::Rng;
use serde::Serialize;

use super::st::{st_plan, LeafSide, StPlan};
use super::Outcome;
use crate::error::{Error, Result};
use crate::generators::rng;
use crate::graph::{exact_chromatic, Embedding, GraphView, OrientedGraph, RootedOrientedTree};

/// Chromatic number beyond which every oriented graph free of the `r`-pattern
/// contains every oriented tree on `s` vertices with the given st-number.
pub fn br_chromatic_bound(r: usize, s: usize, st: usize) -> usize {
    let spread = (2 * s).saturating_sub(st + 3);
    r.saturating_sub(1) * spread * st + 2 * s + 1
}

/// Vertices removed at one level of the peeling.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PeelRecord {
    pub level: usize,
    pub side: LeafSide,
    pub tree_size: usize,
    /// Tree leaves handled at this level.
    pub leaves: Vec<usize>,
    pub threshold: usize,
    /// Host vertices whose degree on `side` was at most `threshold`.
    pub removed: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BrTrace {
    pub r: usize,
    pub plan: StPlan,
    pub peels: Vec<PeelRecord>,
    /// Level at which no attachment (or no core vertex) was found.
    pub stuck_level: Option<usize>,
    pub partial_image: Vec<Option<usize>>,
}

fn threshold(r: usize, tree_size: usize, leaves: usize) -> usize {
    (r - 1) * tree_size.saturating_sub(2) + leaves
}

/// Peels low-degree vertices level by level along the st-plan of `tree`, picks
/// a core vertex in what is left, and then attaches leaves back on the way out.
pub fn br_tree_embedding(
    d: &OrientedGraph,
    tree: &RootedOrientedTree,
    r: usize,
) -> Result<Outcome<BrTrace>> {
    if r < 2 {
        return Err(Error::InvalidParameter(format!(
            "r must be at least 2, got {r}"
        )));
    }
    let n = d.vertex_count();
    let s = tree.vertex_count();
    let plan = st_plan(tree);

    // removed_at[x] = level at which x left the host; alive at level l iff > l
    let mut removed_at = vec![usize::MAX; n];
    let mut peels = Vec::with_capacity(plan.peel_sequence.len());
    for (level, step) in plan.peel_sequence.iter().enumerate() {
        let theta = threshold(r, step.size_before, step.removed.len());
        let alive = |x: usize| removed_at[x] >= level;
        let removed: Vec<usize> = (0..n)
            .filter(|&x| alive(x))
            .filter(|&x| {
                let side = match step.side {
                    LeafSide::Out => d.out_neighbors(x),
                    LeafSide::In => d.in_neighbors(x),
                };
                side.iter().filter(|&&y| alive(y)).count() <= theta
            })
            .collect();
        for &x in &removed {
            removed_at[x] = level;
        }
        peels.push(PeelRecord {
            level,
            side: step.side,
            tree_size: step.size_before,
            leaves: step.removed.clone(),
            threshold: theta,
            removed,
        });
    }

    let depth = plan.peel_sequence.len();
    let mut image: Vec<Option<usize>> = vec![None; s];
    let mut trace = BrTrace {
        r,
        plan,
        peels,
        stuck_level: None,
        partial_image: Vec::new(),
    };
    let Some(core) = (0..n).find(|&x| removed_at[x] == usize::MAX) else {
        trace.stuck_level = Some(depth);
        trace.partial_image = image;
        return Ok(Outcome::Stuck { trace });
    };
    image[trace.plan.core_vertex(tree)] = Some(core);

    // tree_alive[v] = v is in the tree at the current level
    let mut tree_alive = vec![false; s];
    tree_alive[trace.plan.core_vertex(tree)] = true;
    for level in (0..depth).rev() {
        let step = &trace.plan.peel_sequence[level];
        for &leaf in &step.removed {
            tree_alive[leaf] = true;
        }
        for &leaf in &step.removed {
            let (anchor, cands) = match step.side {
                LeafSide::Out => {
                    let u = *tree
                        .in_neighbors(leaf)
                        .iter()
                        .find(|&&u| tree_alive[u])
                        .unwrap();
                    (u, d.out_neighbors(image[u].unwrap()))
                }
                LeafSide::In => {
                    let u = *tree
                        .out_neighbors(leaf)
                        .iter()
                        .find(|&&u| tree_alive[u])
                        .unwrap();
                    (u, d.in_neighbors(image[u].unwrap()))
                }
            };
            let anchor_img = image[anchor].unwrap();
            let placed: Vec<usize> = image.iter().flatten().copied().collect();
            let pick = cands.iter().copied().find(|&x| {
                removed_at[x] >= level
                    && !placed.contains(&x)
                    && placed.iter().all(|&y| y == anchor_img || !d.adjacent(x, y))
            });
            match pick {
                Some(x) => image[leaf] = Some(x),
                None => {
                    trace.stuck_level = Some(level);
                    trace.partial_image = image;
                    return Ok(Outcome::Stuck { trace });
                }
            }
        }
    }
    let image: Vec<usize> = image.into_iter().map(|x| x.unwrap()).collect();
    trace.partial_image = image.iter().map(|&x| Some(x)).collect();
    let embedding = Embedding::new(d, tree, image, None)?;
    Ok(Outcome::Embedded { embedding, trace })
}

/// Exact chromatic number of one peeled set against twice its threshold.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PeelCheck {
    pub level: usize,
    pub set_size: usize,
    pub bound: usize,
    /// `None` when the set is larger than the guard.
    pub chromatic: Option<usize>,
    /// Whether the degree argument covers this level (it needs a bound above 2).
    pub applies: bool,
}

impl PeelCheck {
    pub fn holds(&self) -> Option<bool> {
        self.chromatic.map(|c| c <= self.bound)
    }
}

pub fn peeled_set_diagnostic(
    d: &OrientedGraph,
    trace: &BrTrace,
    guard_n: usize,
) -> Result<Vec<PeelCheck>> {
    trace
        .peels
        .iter()
        .map(|p| {
            let bound = 2 * p.threshold;
            let chromatic = if p.removed.len() <= guard_n {
                let (sub, _) = d.induce(&p.removed)?;
                Some(exact_chromatic(&sub.underlying(), guard_n)?.num_colors())
            } else {
                None
            };
            Ok(PeelCheck {
                level: p.level,
                set_size: p.removed.len(),
                bound,
                chromatic,
                applies: bound > 2,
            })
        })
        .collect()
}

/// An oriented forest on which [`br_tree_embedding`] must succeed for `tree`:
/// starting from one vertex, each peel level (innermost first) gives every
/// existing vertex more than the level's threshold fresh private neighbours on
/// the level's side. Labels are shuffled by `seed`.
pub fn planted_br_host(tree: &RootedOrientedTree, r: usize, seed: u64) -> Result<OrientedGraph> {
    if r < 2 {
        return Err(Error::InvalidParameter(format!(
            "r must be at least 2, got {r}"
        )));
    }
    let plan = st_plan(tree);
    let mut rng = rng(seed);
    let mut count = 1usize;
    let mut arcs = Vec::new();
    for step in plan.peel_sequence.iter().rev() {
        let theta = threshold(r, step.size_before, step.removed.len());
        let existing = count;
        for x in 0..existing {
            for _ in 0..theta + 1 + rng.gen_range(0..=2) {
                let y = count;
                count += 1;
                arcs.push(match step.side {
                    LeafSide::Out => (x, y),
                    LeafSide::In => (y, x),
                });
            }
        }
    }
    let mut perm: Vec<usize> = (0..count).collect();
    perm.shuffle(&mut rng);
    OrientedGraph::from_arcs(count, arcs.into_iter().map(|(u, v)| (perm[u], perm[v])))
}
