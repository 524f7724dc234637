use std::collections::{BTreeSet, HashMap};

use super::GraphView;
use crate::error::{Error, Result};

/// A total vertex coloring with positive integer colors and an explicit total
/// order on the colors that are actually used.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct Coloring {
    colors: Vec<u32>,
    order: Vec<u32>,
    #[serde(skip)]
    rank: HashMap<u32, usize>,
}

impl Coloring {
    /// Coloring ordered by the usual order on integers.
    pub fn new(colors: Vec<u32>) -> Result<Self> {
        let used: BTreeSet<u32> = colors.iter().copied().collect();
        Self::with_order(colors, used.into_iter().collect())
    }

    /// Coloring with an explicit order; `order` must list every used color once
    /// and nothing else.
    pub fn with_order(colors: Vec<u32>, order: Vec<u32>) -> Result<Self> {
        if let Some(v) = colors.iter().position(|&c| c == 0) {
            return Err(Error::ZeroColor(v));
        }
        let mut rank = HashMap::with_capacity(order.len());
        for (i, &c) in order.iter().enumerate() {
            if rank.insert(c, i).is_some() {
                return Err(Error::InvalidOrder(format!("color {c} listed twice")));
            }
        }
        let used: BTreeSet<u32> = colors.iter().copied().collect();
        if let Some(c) = used.iter().find(|c| !rank.contains_key(c)) {
            return Err(Error::InvalidOrder(format!("color {c} missing from order")));
        }
        if used.len() != order.len() {
            let extra = order.iter().find(|c| !used.contains(c)).unwrap();
            return Err(Error::InvalidOrder(format!("color {extra} is not used")));
        }
        Ok(Coloring {
            colors,
            order,
            rank,
        })
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn color(&self, v: usize) -> u32 {
        self.colors[v]
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    /// Used colors from smallest to largest under the order.
    pub fn order(&self) -> &[u32] {
        &self.order
    }

    pub fn num_colors(&self) -> usize {
        self.order.len()
    }

    /// Zero-based position of a used color in the order.
    pub fn rank(&self, color: u32) -> Option<usize> {
        self.rank.get(&color).copied()
    }

    /// Position of the color of `v` in the order, counted from 1.
    pub fn level(&self, v: usize) -> usize {
        self.rank[&self.colors[v]] + 1
    }

    /// Levels of all vertices; relabels the coloring to `1..=k` under its order.
    pub fn levels(&self) -> Vec<usize> {
        (0..self.colors.len()).map(|v| self.level(v)).collect()
    }

    /// `a < b` under the order.
    pub fn less(&self, a: u32, b: u32) -> bool {
        self.rank[&a] < self.rank[&b]
    }

    /// Same colors, opposite order.
    pub fn reversed_order(&self) -> Coloring {
        let mut order = self.order.clone();
        order.reverse();
        Coloring::with_order(self.colors.clone(), order).expect("permutation of a valid order")
    }

    /// Same colors under a different order.
    pub fn reordered(&self, order: Vec<u32>) -> Result<Coloring> {
        Coloring::with_order(self.colors.clone(), order)
    }

    pub(crate) fn ensure_total(&self, n: usize) -> Result<()> {
        if self.colors.len() != n {
            return Err(Error::PartialColoring {
                colored: self.colors.len(),
                count: n,
            });
        }
        Ok(())
    }

    /// Errors on partial colorings and on the first monochromatic edge.
    pub fn ensure_proper<G: GraphView + ?Sized>(&self, g: &G) -> Result<()> {
        self.ensure_total(g.vertex_count())?;
        for u in 0..g.vertex_count() {
            for &v in g.neighbors(u) {
                if v > u && self.colors[u] == self.colors[v] {
                    return Err(Error::ImproperColoring(u, v));
                }
            }
        }
        Ok(())
    }
}

/// True iff no edge is monochromatic. A coloring of the wrong length is an error.
pub fn is_proper<G: GraphView + ?Sized>(g: &G, c: &Coloring) -> Result<bool> {
    match c.ensure_proper(g) {
        Ok(()) => Ok(true),
        Err(Error::ImproperColoring(..)) => Ok(false),
        Err(e) => Err(e),
    }
}
