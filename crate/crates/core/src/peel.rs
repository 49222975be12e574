//! Proper 3-coloring of a 2-tree by reverse peeling, and the double
//! dominating set formed by its two smallest color classes.

use crate::bounds;
use crate::error::{Error, Result};
use crate::graph::{DominationResult, Graph, Method, VertexSet};
use crate::recognition::{recognize_two_tree, PeelSequence};

/// Total vertex coloring with colors `0..palette_size`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    pub palette_size: usize,
    pub color_of: Vec<usize>,
}

impl Coloring {
    pub fn color(&self, v: usize) -> usize {
        self.color_of[v]
    }

    pub fn class(&self, c: usize) -> VertexSet {
        VertexSet::from_vertices(
            self.color_of.len(),
            self.color_of.iter().enumerate().filter(|(_, &k)| k == c).map(|(v, _)| v),
        )
    }

    pub fn class_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.palette_size];
        for &c in &self.color_of {
            sizes[c] += 1;
        }
        sizes
    }

    pub fn is_proper(&self, g: &Graph) -> bool {
        g.edges().all(|(u, v)| self.color_of[u] != self.color_of[v])
    }

    /// Union of the two smallest classes, ties going to the lower color.
    pub fn two_smallest_classes(&self) -> VertexSet {
        let sizes = self.class_sizes();
        let mut order: Vec<usize> = (0..self.palette_size).collect();
        order.sort_by_key(|&c| (sizes[c], c));
        let keep = [order[0], order[1]];
        VertexSet::from_vertices(
            self.color_of.len(),
            self.color_of.iter().enumerate().filter(|(_, c)| keep.contains(c)).map(|(v, _)| v),
        )
    }
}

/// Colors the kernel `0, 1, 2` in ascending vertex order, then reinserts
/// peeled vertices in reverse, each taking the color its two neighbors
/// leave free.
pub fn peel_three_coloring(g: &Graph, peel: &PeelSequence) -> Result<Coloring> {
    peel.validate(g)?;
    let mut color_of = vec![usize::MAX; g.n()];
    for (c, &v) in peel.kernel.iter().enumerate() {
        color_of[v] = c;
    }
    for step in peel.steps.iter().rev() {
        let (l, r) = (color_of[step.left], color_of[step.right]);
        debug_assert!(l != r && l < 3 && r < 3);
        color_of[step.removed] = 3 - l - r;
    }
    Ok(Coloring { palette_size: 3, color_of })
}

/// Double dominating set of size at most `⌊2n/3⌋` for any 2-tree.
pub fn peel_double_domination(g: &Graph) -> Result<DominationResult> {
    let peel = recognize_two_tree(g)?;
    let coloring = peel_three_coloring(g, &peel)?;
    if !coloring.is_proper(g) {
        return Err(Error::InvariantViolation("peel coloring is not proper".into()));
    }
    let set = coloring.two_smallest_classes();
    DominationResult::verified(g, set, Method::Peel3Color, Some(bounds::two_thirds(g.n())))
}
