use std::collections::VecDeque;

use rand::seq::SliceRandom;
use rand::Rng;
use serde::Serialize;

use super::rng;
use crate::coloring::check_outtree_coloring;
use crate::error::{Error, Result};
use crate::graph::{br_witness, girth, Coloring, OrientedGraph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Constraint {
    None,
    /// No orientation of K_{2,r} with an apex of out-degree r.
    BrFree(usize),
    GirthAtLeast(usize),
}

#[derive(Clone, Debug, PartialEq)]
pub struct SynthConfig {
    /// Number of colors.
    pub k: usize,
    /// Sizes of classes `1..=k`; `None` selects [`default_class_sizes`], or
    /// `5k` vertices per class for two-sided instances.
    pub class_sizes: Option<Vec<usize>>,
    pub constraint: Constraint,
    /// Probability of each additional high-to-low arc that keeps the constraint.
    pub extra_arc_prob: f64,
    pub seed: u64,
    /// Number of fresh attempts before giving up.
    pub retry_budget: usize,
    /// Also give every vertex an in-neighbour in each higher class, so that the
    /// reversed color order is an out-tree coloring of the reversed digraph.
    pub two_sided: bool,
}

impl SynthConfig {
    pub fn new(k: usize, constraint: Constraint, seed: u64) -> Self {
        SynthConfig {
            k,
            class_sizes: None,
            constraint,
            extra_arc_prob: 0.0,
            seed,
            retry_budget: 200,
            two_sided: false,
        }
    }
}

/// A digraph together with an out-tree coloring it was built around.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SynthInstance {
    pub digraph: OrientedGraph,
    pub alpha: Coloring,
    pub constraint: Constraint,
    pub seed: u64,
    pub two_sided: bool,
}

impl SynthInstance {
    /// Re-checks every promised property from scratch.
    pub fn validate(&self) -> Result<()> {
        let d = &self.digraph;
        self.alpha.ensure_proper(d)?;
        if let Some(v) = check_outtree_coloring(d, &self.alpha)? {
            return Err(Error::Precondition(format!(
                "vertex {} lacks an out-neighbour of color {}",
                v.vertex, v.color
            )));
        }
        if self.two_sided {
            if let Some(v) = check_outtree_coloring(&d.reverse(), &self.alpha.reversed_order())? {
                return Err(Error::Precondition(format!(
                    "vertex {} lacks an in-neighbour of color {}",
                    v.vertex, v.color
                )));
            }
        }
        if d.arcs()
            .any(|(u, v)| self.alpha.level(u) <= self.alpha.level(v))
        {
            return Err(Error::Precondition(
                "arc from a lower to a higher color".into(),
            ));
        }
        match self.constraint {
            Constraint::None => {}
            Constraint::BrFree(r) => {
                if let Some(w) = br_witness(d, r)? {
                    return Err(Error::Precondition(format!("B_{r} copy at {:?}", w.pair)));
                }
            }
            Constraint::GirthAtLeast(g) => {
                let found = girth(d);
                if !found.at_least(g) {
                    return Err(Error::Precondition(format!("girth {found} below {g}")));
                }
            }
        }
        Ok(())
    }
}

/// Class sizes growing geometrically toward color 1, since every higher
/// vertex needs a neighbour in each lower class.
pub fn default_class_sizes(k: usize, constraint: Constraint) -> Vec<usize> {
    let (top, ratio) = match constraint {
        Constraint::None => (1.0, 1.0),
        Constraint::BrFree(r) => (2.0, 1.25 + 0.1 * r as f64),
        Constraint::GirthAtLeast(g) => (2.0, 1.6 + 0.1 * g as f64),
    };
    (1..=k)
        .map(|c| (top * ratio.powi((k - c) as i32)).ceil() as usize)
        .collect()
}

/// Mutable digraph used while growing instances.
#[derive(Clone, Debug)]
pub struct DigraphBuilder {
    out: Vec<Vec<usize>>,
    inn: Vec<Vec<usize>>,
    adj: Vec<Vec<bool>>,
}

impl DigraphBuilder {
    pub fn new(n: usize) -> Self {
        DigraphBuilder {
            out: vec![Vec::new(); n],
            inn: vec![Vec::new(); n],
            adj: vec![vec![false; n]; n],
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.out.len()
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u][v]
    }

    pub fn out_neighbors(&self, v: usize) -> &[usize] {
        &self.out[v]
    }

    pub fn in_neighbors(&self, v: usize) -> &[usize] {
        &self.inn[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.out[v].iter().chain(&self.inn[v]).copied()
    }

    /// Panics if `u` and `v` are already adjacent.
    pub fn add_arc(&mut self, u: usize, v: usize) {
        assert!(
            u != v && !self.adj[u][v],
            "arc {u}->{v} would repeat an edge"
        );
        self.out[u].push(v);
        self.inn[v].push(u);
        self.adj[u][v] = true;
        self.adj[v][u] = true;
    }

    pub fn remove_arc(&mut self, u: usize, v: usize) {
        self.out[u].retain(|&w| w != v);
        self.inn[v].retain(|&w| w != u);
        self.adj[u][v] = false;
        self.adj[v][u] = false;
    }

    /// `|N+(a) ∩ N(b) \ {a, b}|`.
    pub fn out_common_count(&self, a: usize, b: usize) -> usize {
        self.out[a]
            .iter()
            .filter(|&&m| m != b && self.adj[m][b])
            .count()
    }

    /// Whether `v` is reachable from `u` in at most `depth` steps, ignoring directions.
    pub fn within_distance(&self, u: usize, v: usize, depth: usize) -> bool {
        if u == v {
            return true;
        }
        let mut dist = vec![usize::MAX; self.vertex_count()];
        dist[u] = 0;
        let mut queue = VecDeque::from([u]);
        while let Some(x) = queue.pop_front() {
            if dist[x] == depth {
                continue;
            }
            for y in self.neighbors(x) {
                if dist[y] == usize::MAX {
                    if y == v {
                        return true;
                    }
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        false
    }

    pub fn build(&self) -> OrientedGraph {
        let arcs = self
            .out
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().map(move |&v| (u, v)));
        OrientedGraph::from_arcs(self.vertex_count(), arcs).expect("builder keeps arcs valid")
    }
}

/// Whether some B_r copy uses the arc `tail -> head`, which must be present.
/// Only pairs whose common count the arc can change are inspected.
pub fn br_through_arc(b: &DigraphBuilder, tail: usize, head: usize, r: usize) -> bool {
    // arc as apex arc: apex tail, opposite vertex a neighbour of head
    if b.neighbors(head)
        .any(|x| x != tail && b.out_common_count(tail, x) >= r)
    {
        return true;
    }
    // arc as a far edge: apex an in-neighbour of one end, opposite vertex the other end
    b.in_neighbors(head)
        .iter()
        .any(|&a| a != tail && b.out_common_count(a, tail) >= r)
        || b.in_neighbors(tail)
            .iter()
            .any(|&a| b.out_common_count(a, head) >= r)
}

fn try_arc(b: &mut DigraphBuilder, tail: usize, head: usize, constraint: Constraint) -> bool {
    if b.adjacent(tail, head) {
        return false;
    }
    if let Constraint::GirthAtLeast(g) = constraint {
        if g >= 3 && b.within_distance(tail, head, g - 2) {
            return false;
        }
    }
    b.add_arc(tail, head);
    if let Constraint::BrFree(r) = constraint {
        if br_through_arc(b, tail, head, r) {
            b.remove_arc(tail, head);
            return false;
        }
    }
    true
}

/// Builds an oriented graph with color classes `C_1..C_k` in which every
/// vertex of `C_c` has an out-neighbour in each `C_i`, `i < c`, and all arcs
/// descend in color. Targets are drawn at random among the admissible ones,
/// preferring low in-degree; a dead end restarts the attempt.
pub fn synth_outtree_colored(cfg: &SynthConfig) -> Result<SynthInstance> {
    if cfg.k == 0 {
        return Err(Error::InvalidParameter("k must be at least 1".into()));
    }
    if !(0.0..=1.0).contains(&cfg.extra_arc_prob) {
        return Err(Error::InvalidParameter(
            "extra arc probability outside [0, 1]".into(),
        ));
    }
    match cfg.constraint {
        Constraint::BrFree(r) if r < 2 => {
            return Err(Error::InvalidParameter(format!(
                "r must be at least 2, got {r}"
            )))
        }
        _ => {}
    }
    let sizes = cfg.class_sizes.clone().unwrap_or_else(|| {
        if cfg.two_sided && cfg.constraint != Constraint::None {
            vec![5 * cfg.k; cfg.k]
        } else {
            default_class_sizes(cfg.k, cfg.constraint)
        }
    });
    if sizes.len() != cfg.k || sizes.contains(&0) {
        return Err(Error::InvalidParameter(format!(
            "need {} positive class sizes, got {:?}",
            cfg.k, sizes
        )));
    }
    let n: usize = sizes.iter().sum();
    let mut rng = rng(cfg.seed);
    for _ in 0..cfg.retry_budget.max(1) {
        if let Some(inst) = attempt(cfg, &sizes, n, &mut rng) {
            debug_assert!(inst.validate().is_ok());
            return Ok(inst);
        }
    }
    Err(Error::BudgetExhausted(format!(
        "no {:?} instance with class sizes {:?} after {} attempts",
        cfg.constraint, sizes, cfg.retry_budget
    )))
}

fn attempt<R: Rng>(
    cfg: &SynthConfig,
    sizes: &[usize],
    n: usize,
    rng: &mut R,
) -> Option<SynthInstance> {
    let mut labels: Vec<usize> = (0..n).collect();
    labels.shuffle(rng);
    let mut classes: Vec<Vec<usize>> = Vec::with_capacity(cfg.k);
    let mut next = 0;
    for &size in sizes {
        classes.push(labels[next..next + size].to_vec());
        next += size;
    }
    let mut color = vec![0u32; n];
    for (c, class) in classes.iter().enumerate() {
        for &v in class {
            color[v] = c as u32 + 1;
        }
    }

    let mut b = DigraphBuilder::new(n);
    for c in 1..cfg.k {
        let mut members = classes[c].clone();
        members.shuffle(rng);
        for v in members {
            let mut targets: Vec<usize> = (0..c).collect();
            targets.shuffle(rng);
            for i in targets {
                if b.out_neighbors(v)
                    .iter()
                    .any(|&w| color[w] as usize == i + 1)
                {
                    continue;
                }
                let mut cands = classes[i].clone();
                cands.shuffle(rng);
                cands.sort_by_key(|&u| b.in_neighbors(u).len());
                if !cands
                    .into_iter()
                    .any(|u| try_arc(&mut b, v, u, cfg.constraint))
                {
                    return None;
                }
            }
        }
    }
    if cfg.two_sided {
        for c in 0..cfg.k - 1 {
            let mut members = classes[c].clone();
            members.shuffle(rng);
            for u in members {
                let mut sources: Vec<usize> = (c + 1..cfg.k).collect();
                sources.shuffle(rng);
                for i in sources {
                    if b.in_neighbors(u)
                        .iter()
                        .any(|&w| color[w] as usize == i + 1)
                    {
                        continue;
                    }
                    let mut cands = classes[i].clone();
                    cands.shuffle(rng);
                    cands.sort_by_key(|&v| b.out_neighbors(v).len());
                    if !cands
                        .into_iter()
                        .any(|v| try_arc(&mut b, v, u, cfg.constraint))
                    {
                        return None;
                    }
                }
            }
        }
    }
    if cfg.extra_arc_prob > 0.0 {
        for hi in 1..cfg.k {
            for lo in 0..hi {
                for &v in &classes[hi] {
                    for &u in &classes[lo] {
                        if rng.gen_bool(cfg.extra_arc_prob) {
                            try_arc(&mut b, v, u, cfg.constraint);
                        }
                    }
                }
            }
        }
    }
    Some(SynthInstance {
        digraph: b.build(),
        alpha: Coloring::new(color).ok()?,
        constraint: cfg.constraint,
        seed: cfg.seed,
        two_sided: cfg.two_sided,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k1_is_edgeless() {
        let mut cfg = SynthConfig::new(1, Constraint::BrFree(2), 0);
        cfg.class_sizes = Some(vec![4]);
        let inst = synth_outtree_colored(&cfg).unwrap();
        assert_eq!(inst.digraph.arc_count(), 0);
        assert_eq!(inst.alpha.colors(), &[1, 1, 1, 1]);
    }

    #[test]
    fn br_free_instances_validate() {
        for seed in 0..10 {
            let inst =
                synth_outtree_colored(&SynthConfig::new(6, Constraint::BrFree(2), seed)).unwrap();
            inst.validate().unwrap();
            assert_eq!(inst.alpha.num_colors(), 6);
        }
    }

    #[test]
    fn girth_instances_validate() {
        for seed in 0..5 {
            let inst =
                synth_outtree_colored(&SynthConfig::new(3, Constraint::GirthAtLeast(5), seed))
                    .unwrap();
            inst.validate().unwrap();
            assert!(girth(&inst.digraph).at_least(5));
        }
    }

    #[test]
    fn two_sided_instances_validate() {
        let mut cfg = SynthConfig::new(6, Constraint::BrFree(2), 4);
        cfg.two_sided = true;
        let inst = synth_outtree_colored(&cfg).unwrap();
        inst.validate().unwrap();
        let rev = inst.digraph.reverse();
        assert_eq!(
            check_outtree_coloring(&rev, &inst.alpha.reversed_order()).unwrap(),
            None
        );
    }

    #[test]
    fn infeasible_is_reported() {
        // one vertex per class cannot avoid B_2 with five classes
        let mut cfg = SynthConfig::new(5, Constraint::BrFree(2), 1);
        cfg.class_sizes = Some(vec![1; 5]);
        cfg.retry_budget = 3;
        assert!(matches!(
            synth_outtree_colored(&cfg),
            Err(Error::BudgetExhausted(_))
        ));
    }

    #[test]
    fn incremental_check_matches_full_scan() {
        let mut cfg = SynthConfig::new(5, Constraint::None, 3);
        cfg.class_sizes = Some(vec![6, 5, 4, 3, 2]);
        cfg.extra_arc_prob = 0.3;
        let dense = synth_outtree_colored(&cfg).unwrap().digraph;
        let mut b = DigraphBuilder::new(dense.vertex_count());
        let mut hit = false;
        for (u, v) in dense.arcs() {
            b.add_arc(u, v);
            let claimed = br_through_arc(&b, u, v, 2);
            let after = br_witness(&b.build(), 2).unwrap().is_some();
            assert_eq!(claimed, after, "arc {u}->{v}");
            if after {
                hit = true;
                break;
            }
        }
        assert!(hit, "dense instance should contain B_2");
    }
}
