use std::collections::HashMap;

use serde::Serialize;

use crate::graph::RootedOrientedTree;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LeafSide {
    /// In-degree 1, out-degree 0.
    Out,
    /// Out-degree 1, in-degree 0.
    In,
}

/// One peel: every leaf of `side` in the current tree is removed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PeelStep {
    pub side: LeafSide,
    /// Removed vertices, as indices of the original tree.
    pub removed: Vec<usize>,
    /// Size of the tree before this peel.
    pub size_before: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StPlan {
    pub st_value: usize,
    /// Peels realizing the minimum, ending with a single vertex.
    pub peel_sequence: Vec<PeelStep>,
}

impl StPlan {
    /// The vertex left after every peel.
    pub fn core_vertex(&self, tree: &RootedOrientedTree) -> usize {
        let mut alive = vec![true; tree.vertex_count()];
        for step in &self.peel_sequence {
            for &v in &step.removed {
                alive[v] = false;
            }
        }
        alive.iter().position(|&a| a).expect("one vertex survives")
    }
}

/// Depth of the cheapest recursion that repeatedly strips all out-leaves or
/// all in-leaves, down to one vertex. A side with no leaves cannot be chosen;
/// on ties the out-leaf side wins.
pub fn st_plan(tree: &RootedOrientedTree) -> StPlan {
    let n = tree.vertex_count();
    let mut memo = HashMap::new();
    let all = vec![true; n];
    let st_value = solve(tree, &all, &mut memo);
    let mut peel_sequence = Vec::new();
    let mut alive = all;
    while alive.iter().filter(|&&a| a).count() > 1 {
        let (_, side) = memo[&alive];
        let side = side.expect("more than one vertex left");
        let removed = leaves(tree, &alive, side);
        let size_before = alive.iter().filter(|&&a| a).count();
        for &v in &removed {
            alive[v] = false;
        }
        peel_sequence.push(PeelStep {
            side,
            removed,
            size_before,
        });
    }
    StPlan {
        st_value,
        peel_sequence,
    }
}

fn leaves(tree: &RootedOrientedTree, alive: &[bool], side: LeafSide) -> Vec<usize> {
    (0..tree.vertex_count())
        .filter(|&v| alive[v])
        .filter(|&v| {
            let outs = tree.out_neighbors(v).iter().filter(|&&w| alive[w]).count();
            let ins = tree.in_neighbors(v).iter().filter(|&&w| alive[w]).count();
            match side {
                LeafSide::Out => ins == 1 && outs == 0,
                LeafSide::In => outs == 1 && ins == 0,
            }
        })
        .collect()
}

type Memo = HashMap<Vec<bool>, (usize, Option<LeafSide>)>;

fn solve(tree: &RootedOrientedTree, alive: &[bool], memo: &mut Memo) -> usize {
    if let Some(&(v, _)) = memo.get(alive) {
        return v;
    }
    if alive.iter().filter(|&&a| a).count() <= 1 {
        memo.insert(alive.to_vec(), (0, None));
        return 0;
    }
    let mut best: Option<(usize, LeafSide)> = None;
    for side in [LeafSide::Out, LeafSide::In] {
        let removed = leaves(tree, alive, side);
        if removed.is_empty() {
            continue;
        }
        let mut rest = alive.to_vec();
        for v in removed {
            rest[v] = false;
        }
        let value = 1 + solve(tree, &rest, memo);
        if best.is_none_or(|(b, _)| value < b) {
            best = Some((value, side));
        }
    }
    let (value, side) = best.expect("a tree on two or more vertices has a leaf");
    memo.insert(alive.to_vec(), (value, Some(side)));
    value
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_vertex_is_zero() {
        let p = st_plan(&RootedOrientedTree::path(1).unwrap());
        assert_eq!(p.st_value, 0);
        assert!(p.peel_sequence.is_empty());
    }

    #[test]
    fn stars() {
        for s in 2..6 {
            let p = st_plan(&RootedOrientedTree::out_star(s).unwrap());
            assert_eq!(p.st_value, 1);
            assert_eq!(p.peel_sequence[0].side, LeafSide::Out);
            assert_eq!(
                st_plan(&RootedOrientedTree::in_star(s).unwrap()).st_value,
                1
            );
        }
    }

    #[test]
    fn directed_paths() {
        for s in 1..7 {
            let t = RootedOrientedTree::path(s).unwrap();
            let p = st_plan(&t);
            assert_eq!(p.st_value, s - 1);
            assert_eq!(p.peel_sequence.len(), s - 1);
        }
        // 0 -> 1 -> 2: tie at every level, so the out-leaf 2 goes first
        let p = st_plan(&RootedOrientedTree::path(3).unwrap());
        assert_eq!(p.peel_sequence[0].removed, vec![2]);
        assert_eq!(p.core_vertex(&RootedOrientedTree::path(3).unwrap()), 0);
    }

    #[test]
    fn mixed_star_prefers_out_leaves() {
        // 1 <- 0 -> 2 with an in-leaf 3 -> 0
        let t = RootedOrientedTree::new(4, vec![(0, 1), (0, 2), (3, 0)], 0).unwrap();
        let p = st_plan(&t);
        assert_eq!(p.st_value, 2);
        assert_eq!(p.peel_sequence[0].removed, vec![1, 2]);
        assert_eq!(p.core_vertex(&t), 3);
    }
}
