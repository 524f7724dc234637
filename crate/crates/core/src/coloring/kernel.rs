use crate::error::{Error, Result};
use crate::graph::{GraphView, OrientedGraph};
use crate::guards;

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum KernelKind {
    /// Every vertex outside the set has an out-neighbour inside it.
    Kernel,
    /// Every vertex outside the set has an in-neighbour inside it.
    Antikernel,
}

impl KernelKind {
    fn dominators(self, d: &OrientedGraph, v: usize) -> &[usize] {
        match self {
            KernelKind::Kernel => d.out_neighbors(v),
            KernelKind::Antikernel => d.in_neighbors(v),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            KernelKind::Kernel => "kernel",
            KernelKind::Antikernel => "antikernel",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KernelMethod {
    /// Linear-time greedy for acyclic digraphs.
    DagGreedy,
    /// Exhaustive search, guarded by vertex count.
    Backtracking { guard_n: usize },
}

/// Definitional check: `set` is independent and dominates every other vertex
/// in the direction given by `kind`.
pub fn is_kernel(d: &OrientedGraph, set: &[usize], kind: KernelKind) -> bool {
    let n = d.vertex_count();
    let mut inside = vec![false; n];
    for &v in set {
        if v >= n || inside[v] {
            return false;
        }
        inside[v] = true;
    }
    (0..n).all(|v| {
        if inside[v] {
            d.out_neighbors(v).iter().all(|&w| !inside[w])
        } else {
            kind.dominators(d, v).iter().any(|&w| inside[w])
        }
    })
}

/// A kernel or antikernel as an ascending vertex list. `None` only when the
/// backtracking search proves that none exists.
pub fn kernel_set(
    d: &OrientedGraph,
    kind: KernelKind,
    method: KernelMethod,
) -> Result<Option<Vec<usize>>> {
    match method {
        KernelMethod::DagGreedy => {
            let order = d.topological_order()?;
            Ok(Some(dag_greedy(d, kind, &order, |_| true)))
        }
        KernelMethod::Backtracking { guard_n } => {
            guards::check("backtracking kernel search", guard_n, d.vertex_count())?;
            Ok(backtrack(d, kind))
        }
    }
}

/// Greedy on the vertices accepted by `alive`, using a topological order of
/// the whole digraph. Kernels scan sinks first, antikernels sources first.
pub(crate) fn dag_greedy(
    d: &OrientedGraph,
    kind: KernelKind,
    topo: &[usize],
    alive: impl Fn(usize) -> bool,
) -> Vec<usize> {
    let n = d.vertex_count();
    let mut inside = vec![false; n];
    let mut visit = |v: usize| {
        if alive(v) && !kind.dominators(d, v).iter().any(|&w| inside[w]) {
            inside[v] = true;
        }
    };
    match kind {
        KernelKind::Kernel => topo.iter().rev().for_each(|&v| visit(v)),
        KernelKind::Antikernel => topo.iter().for_each(|&v| visit(v)),
    }
    (0..n).filter(|&v| inside[v]).collect()
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum State {
    Unknown,
    In,
    Out,
}

fn backtrack(d: &OrientedGraph, kind: KernelKind) -> Option<Vec<usize>> {
    fn dead(d: &OrientedGraph, kind: KernelKind, state: &[State], v: usize) -> bool {
        state[v] == State::Out
            && kind
                .dominators(d, v)
                .iter()
                .all(|&w| state[w] == State::Out)
    }

    fn go(d: &OrientedGraph, kind: KernelKind, state: &mut Vec<State>, v: usize) -> bool {
        let n = d.vertex_count();
        if v == n {
            return true;
        }
        let forced_out = d.neighbors(v).iter().any(|&w| state[w] == State::In);
        let choices: &[State] = if forced_out {
            &[State::Out]
        } else {
            &[State::In, State::Out]
        };
        for &choice in choices {
            state[v] = choice;
            // vertices whose fate is now settled must be dominated
            let ok = !dead(d, kind, state, v)
                && d.neighbors(v).iter().all(|&w| !dead(d, kind, state, w));
            if ok && go(d, kind, state, v + 1) {
                return true;
            }
        }
        state[v] = State::Unknown;
        false
    }

    let mut state = vec![State::Unknown; d.vertex_count()];
    if go(d, kind, &mut state, 0) {
        Some(
            (0..d.vertex_count())
                .filter(|&v| state[v] == State::In)
                .collect(),
        )
    } else {
        None
    }
}

pub(crate) fn not_found(kind: KernelKind, layer: usize) -> Error {
    Error::KernelNotFound {
        kind: kind.name(),
        layer,
    }
}
