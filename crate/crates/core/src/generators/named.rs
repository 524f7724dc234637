use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::UndirectedGraph;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NamedGraph {
    Petersen,
    Grotzsch,
    Brinkmann,
    Cycle(usize),
    Path(usize),
    Complete(usize),
    Kneser(usize, usize),
}

impl FromStr for NamedGraph {
    type Err = Error;

    /// Accepts `petersen`, `grotzsch`, `brinkmann`, `cycle:N`, `path:N`,
    /// `complete:N` and `kneser:N:K`.
    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.trim().split(':').collect();
        let num = |i: usize| -> Result<usize> {
            parts
                .get(i)
                .and_then(|p| p.parse().ok())
                .ok_or_else(|| Error::InvalidParameter(format!("bad graph name `{s}`")))
        };
        let arity = |k: usize| -> Result<()> {
            if parts.len() == k {
                Ok(())
            } else {
                Err(Error::InvalidParameter(format!("bad graph name `{s}`")))
            }
        };
        let name = parts[0].to_ascii_lowercase();
        match name.as_str() {
            "petersen" => arity(1).map(|_| NamedGraph::Petersen),
            "grotzsch" | "grötzsch" => arity(1).map(|_| NamedGraph::Grotzsch),
            "brinkmann" => arity(1).map(|_| NamedGraph::Brinkmann),
            "cycle" => arity(2).and_then(|_| Ok(NamedGraph::Cycle(num(1)?))),
            "path" => arity(2).and_then(|_| Ok(NamedGraph::Path(num(1)?))),
            "complete" => arity(2).and_then(|_| Ok(NamedGraph::Complete(num(1)?))),
            "kneser" => arity(3).and_then(|_| Ok(NamedGraph::Kneser(num(1)?, num(2)?))),
            _ => Err(Error::InvalidParameter(format!("unknown graph `{s}`"))),
        }
    }
}

impl fmt::Display for NamedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NamedGraph::Petersen => f.write_str("petersen"),
            NamedGraph::Grotzsch => f.write_str("grotzsch"),
            NamedGraph::Brinkmann => f.write_str("brinkmann"),
            NamedGraph::Cycle(n) => write!(f, "cycle:{n}"),
            NamedGraph::Path(n) => write!(f, "path:{n}"),
            NamedGraph::Complete(n) => write!(f, "complete:{n}"),
            NamedGraph::Kneser(n, k) => write!(f, "kneser:{n}:{k}"),
        }
    }
}

const BRINKMANN_ADJ: [&[usize]; 18] = [
    &[2, 5, 7, 13],
    &[3, 6, 7, 8],
    &[4, 8, 9],
    &[5, 9, 10],
    &[6, 10, 11],
    &[11, 12],
    &[12, 13],
    &[15, 20],
    &[14, 16],
    &[15, 17],
    &[16, 18],
    &[17, 19],
    &[18, 20],
    &[14, 19],
    &[17, 18],
    &[18, 19],
    &[19, 20],
    &[20],
];

pub fn named_graph(name: NamedGraph) -> Result<UndirectedGraph> {
    match name {
        NamedGraph::Petersen => UndirectedGraph::from_edges(
            10,
            (0..5).flat_map(|i| [(i, (i + 1) % 5), (i, i + 5), (i + 5, 5 + (i + 2) % 5)]),
        ),
        NamedGraph::Grotzsch => {
            // outer 5-cycle 0..5, inner star 5..10, hub 10
            let mut edges = Vec::new();
            for i in 0..5 {
                edges.push((i, (i + 1) % 5));
                edges.push((5 + i, (i + 1) % 5));
                edges.push((5 + i, (i + 4) % 5));
                edges.push((10, 5 + i));
            }
            UndirectedGraph::from_edges(11, edges)
        }
        NamedGraph::Brinkmann => UndirectedGraph::from_edges(
            21,
            BRINKMANN_ADJ
                .iter()
                .enumerate()
                .flat_map(|(u, list)| list.iter().map(move |&v| (u, v))),
        ),
        NamedGraph::Cycle(n) => {
            if n < 3 {
                return Err(Error::InvalidParameter(format!(
                    "cycle needs n >= 3, got {n}"
                )));
            }
            UndirectedGraph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
        }
        NamedGraph::Path(n) => UndirectedGraph::from_edges(n, (1..n).map(|i| (i - 1, i))),
        NamedGraph::Complete(n) => {
            UndirectedGraph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
        }
        NamedGraph::Kneser(n, k) => kneser(n, k),
    }
}

fn kneser(n: usize, k: usize) -> Result<UndirectedGraph> {
    if k == 0 || n < 2 * k || n > 20 {
        return Err(Error::InvalidParameter(format!(
            "kneser needs 1 <= k, 2k <= n <= 20; got n={n}, k={k}"
        )));
    }
    let sets: Vec<u32> = (0u32..1 << n)
        .filter(|m| m.count_ones() as usize == k)
        .collect();
    let mut sets = sets;
    // lexicographic order of the sorted element lists
    sets.sort_by_key(|&m| (0..n).filter(|&i| m & (1 << i) != 0).collect::<Vec<_>>());
    let mut edges = Vec::new();
    for a in 0..sets.len() {
        for b in a + 1..sets.len() {
            if sets[a] & sets[b] == 0 {
                edges.push((a, b));
            }
        }
    }
    UndirectedGraph::from_edges(sets.len(), edges)
}

/// Iterated Mycielskian. Each level adds a shadow `n + v` for every vertex
/// `v`, adjacent to the neighbours of `v`, and a hub adjacent to all shadows.
pub fn mycielski(g: &UndirectedGraph, levels: usize) -> Result<UndirectedGraph> {
    if levels == 0 {
        return Err(Error::InvalidParameter("levels must be at least 1".into()));
    }
    let mut cur = g.clone();
    for _ in 0..levels {
        let n = cur.vertex_count();
        let mut edges: Vec<(usize, usize)> = cur.edges().collect();
        for (u, v) in cur.edges() {
            edges.push((n + u, v));
            edges.push((u, n + v));
        }
        edges.extend((0..n).map(|v| (n + v, 2 * n)));
        cur = UndirectedGraph::from_edges(2 * n + 1, edges)?;
    }
    Ok(cur)
}
