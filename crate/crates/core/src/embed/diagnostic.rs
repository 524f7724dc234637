use std::collections::BTreeSet;

use serde::Serialize;

use super::good_tree::SearchTrace;
use crate::error::{Error, Result};
use crate::graph::{girth, Girth, GraphView, OrientedGraph, UndirectedGraph};

/// Consistency checks on the state in which a good-tree search got stuck in
/// a host of girth at least `g`.
///
/// The auxiliary graph has the placed vertices as vertex set; its edges are
/// the tree edges plus, for every rejected candidate, an edge from the
/// intended parent to the first other placed neighbour of that candidate.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DiagnosticReport {
    pub top_level: usize,
    pub placed: usize,
    pub rejected: usize,
    pub aux_edges: usize,
    pub aux_girth: Girth,
    pub girth_floor: usize,
    pub edge_bound: f64,
    pub violations: Vec<String>,
}

impl DiagnosticReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn stuck_state_diagnostic(
    trace: &SearchTrace,
    f: &OrientedGraph,
    g: usize,
) -> Result<DiagnosticReport> {
    if g < 5 {
        return Err(Error::InvalidParameter(format!(
            "girth parameter must be at least 5, got {g}"
        )));
    }
    if !trace.stuck {
        return Err(Error::Precondition("trace is not a failure".into()));
    }
    let i = trace.placed.len();
    if i < g {
        return Err(Error::Precondition(format!(
            "only {i} vertices placed, girth parameter is {g}"
        )));
    }
    let mut violations = Vec::new();

    let rejected: BTreeSet<usize> = trace
        .steps
        .iter()
        .flat_map(|s| s.blocked.iter().map(|b| b.candidate))
        .collect();
    if trace.top_level != i + rejected.len() {
        violations.push(format!(
            "top level {} differs from placed {i} plus rejected {}",
            trace.top_level,
            rejected.len()
        ));
    }
    if trace.steps.first().is_some_and(|s| !s.blocked.is_empty()) {
        violations.push("second vertex had rejected candidates".into());
    }

    let mut tree_edges = BTreeSet::new();
    for (m, step) in trace.steps.iter().enumerate() {
        if step.accepted.is_some() {
            tree_edges.insert(edge(step.parent_position, m + 1));
        }
    }
    let mut extra = BTreeSet::new();
    for (m, step) in trace.steps.iter().enumerate() {
        // positions 0..=m were placed when this step ran
        for b in &step.blocked {
            let y = (0..=m)
                .find(|&q| q != step.parent_position && f.adjacent(b.candidate, trace.placed[q]));
            let Some(y) = y else {
                violations.push(format!(
                    "rejected candidate {} has no placed neighbour besides its parent",
                    b.candidate
                ));
                continue;
            };
            let e = edge(step.parent_position, y);
            if tree_edges.contains(&e) || !extra.insert(e) {
                violations.push(format!(
                    "auxiliary edge {:?} from candidate {} is repeated",
                    (trace.placed[e.0], trace.placed[e.1]),
                    b.candidate
                ));
            }
        }
    }
    let aux = UndirectedGraph::from_edges(i, tree_edges.iter().chain(&extra).copied())?;
    let aux_edges = aux.edge_count();
    let aux_girth = girth(&aux);
    let girth_floor = g.div_ceil(2);
    if !aux_girth.at_least(girth_floor) {
        violations.push(format!(
            "auxiliary graph has girth {aux_girth}, below {girth_floor}"
        ));
    }
    let exponent = 1.0 + 4.0 / (g as f64 - 4.0);
    let edge_bound = ((i as f64).powf(exponent) + i as f64) / 2.0;
    if (aux_edges as f64) >= edge_bound {
        violations.push(format!(
            "auxiliary graph has {aux_edges} edges, bound is {edge_bound:.3}"
        ));
    }
    Ok(DiagnosticReport {
        top_level: trace.top_level,
        placed: i,
        rejected: rejected.len(),
        aux_edges,
        aux_girth,
        girth_floor,
        edge_bound,
        violations,
    })
}

fn edge(a: usize, b: usize) -> (usize, usize) {
    (a.min(b), a.max(b))
}
