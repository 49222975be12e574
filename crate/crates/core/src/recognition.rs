//! Certified recognition of maximal outerplanar graphs and 2-trees.
//!
//! A maximal outerplanar graph on `n ≥ 3` vertices is a triangulated
//! polygon: a Hamiltonian outer cycle plus `n - 3` pairwise non-crossing
//! chords. Every triangle of such a graph is an inner face, an outer edge
//! lies in exactly one triangle and a chord in exactly two. Recognition
//! uses this to read the outer cycle off the triangle counts and then
//! checks the remaining edges for crossings.

use std::collections::BTreeSet;

use crate::error::{Error, MopRejection, Result, TwoTreeRejection};
use crate::graph::Graph;

/// Hamiltonian outer cycle plus chords of a maximal outerplane drawing.
///
/// The cycle starts at vertex 0 and continues toward the smaller-labeled of
/// its two cycle neighbors. Chords are stored as `(min, max)` pairs in
/// ascending order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OuterplaneEmbedding {
    cycle: Vec<usize>,
    chords: Vec<(usize, usize)>,
    position: Vec<usize>,
}

impl OuterplaneEmbedding {
    /// Validates and canonicalizes a cycle order plus chord list.
    pub fn from_parts(cycle: Vec<usize>, chords: Vec<(usize, usize)>) -> Result<Self> {
        let n = cycle.len();
        if n < 3 {
            return Err(MopRejection::TooFewVertices(n).into());
        }
        let mut position = vec![usize::MAX; n];
        for (i, &v) in cycle.iter().enumerate() {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if position[v] != usize::MAX {
                return Err(Error::EmbeddingMismatch(format!("vertex {v} repeats on the cycle")));
            }
            position[v] = i;
        }
        if chords.len() != n - 3 {
            return Err(MopRejection::EdgeCount { found: n + chords.len(), expected: 2 * n - 3 }.into());
        }
        let mut normalized: Vec<(usize, usize)> = Vec::with_capacity(chords.len());
        for &(u, v) in &chords {
            if u >= n || v >= n {
                return Err(Error::VertexOutOfRange { vertex: u.max(v), n });
            }
            let (pu, pv) = (position[u], position[v]);
            let gap = pu.abs_diff(pv);
            if gap == 0 || gap == 1 || gap == n - 1 {
                return Err(Error::EmbeddingMismatch(format!("{{{u},{v}}} is not a chord")));
            }
            normalized.push((u.min(v), u.max(v)));
        }
        normalized.sort_unstable();
        if let Some(w) = normalized.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge(w[0].0, w[0].1));
        }
        check_non_crossing(&normalized, &position)?;

        let emb = OuterplaneEmbedding { cycle, chords: normalized, position };
        Ok(emb.canonical())
    }

    fn canonical(self) -> Self {
        let n = self.cycle.len();
        let start = self.position[0];
        let next = self.cycle[(start + 1) % n];
        let prev = self.cycle[(start + n - 1) % n];
        let cycle: Vec<usize> = if next <= prev {
            (0..n).map(|i| self.cycle[(start + i) % n]).collect()
        } else {
            (0..n).map(|i| self.cycle[(start + n - i) % n]).collect()
        };
        let mut position = vec![0; n];
        for (i, &v) in cycle.iter().enumerate() {
            position[v] = i;
        }
        OuterplaneEmbedding { cycle, chords: self.chords, position }
    }

    pub fn n(&self) -> usize {
        self.cycle.len()
    }

    pub fn cycle(&self) -> &[usize] {
        &self.cycle
    }

    pub fn chords(&self) -> &[(usize, usize)] {
        &self.chords
    }

    pub fn position(&self, v: usize) -> usize {
        self.position[v]
    }

    /// Successor of `v` in cycle order.
    pub fn clockwise(&self, v: usize) -> usize {
        self.cycle[(self.position[v] + 1) % self.n()]
    }

    pub fn counter_clockwise(&self, v: usize) -> usize {
        let n = self.n();
        self.cycle[(self.position[v] + n - 1) % n]
    }

    pub fn is_cycle_edge(&self, u: usize, v: usize) -> bool {
        let n = self.n();
        u < n && v < n && {
            let gap = self.position[u].abs_diff(self.position[v]);
            gap == 1 || gap == n - 1
        }
    }

    /// Cycle edges as `(min, max)` pairs, in cycle order.
    pub fn cycle_edges(&self) -> Vec<(usize, usize)> {
        let n = self.n();
        (0..n)
            .map(|i| {
                let (u, v) = (self.cycle[i], self.cycle[(i + 1) % n]);
                (u.min(v), u.max(v))
            })
            .collect()
    }

    pub fn to_graph(&self) -> Graph {
        Graph::from_edges(self.n(), self.cycle_edges().into_iter().chain(self.chords.iter().copied()))
            .expect("validated embedding yields a simple graph")
    }

    /// Inner faces of the triangulation, as sorted triples.
    pub fn faces(&self) -> Vec<[usize; 3]> {
        self.to_graph().triangles()
    }

    pub fn check_matches(&self, g: &Graph) -> Result<()> {
        if g.n() != self.n() {
            return Err(Error::EmbeddingMismatch(format!(
                "embedding has {} vertices, graph has {}",
                self.n(),
                g.n()
            )));
        }
        if g.edge_count() != 2 * self.n() - 3 {
            return Err(Error::EmbeddingMismatch(format!(
                "graph has {} edges, embedding has {}",
                g.edge_count(),
                2 * self.n() - 3
            )));
        }
        if let Some((u, v)) = self
            .cycle_edges()
            .into_iter()
            .chain(self.chords.iter().copied())
            .find(|&(u, v)| !g.has_edge(u, v))
        {
            return Err(Error::EmbeddingMismatch(format!("edge {{{u},{v}}} missing from graph")));
        }
        Ok(())
    }
}

fn check_non_crossing(chords: &[(usize, usize)], position: &[usize]) -> Result<()> {
    let mut spans: Vec<(usize, usize, (usize, usize))> = chords
        .iter()
        .map(|&(u, v)| {
            let (a, b) = (position[u], position[v]);
            (a.min(b), a.max(b), (u, v))
        })
        .collect();
    spans.sort_unstable_by(|x, y| x.0.cmp(&y.0).then(y.1.cmp(&x.1)));
    let mut open: Vec<(usize, usize, (usize, usize))> = Vec::new();
    for span in spans {
        while open.last().is_some_and(|top| top.1 <= span.0) {
            open.pop();
        }
        if let Some(top) = open.last() {
            if top.1 < span.1 {
                let ((a, b), (c, d)) = (top.2, span.2);
                return Err(MopRejection::CrossingChords(a, b, c, d).into());
            }
        }
        open.push(span);
    }
    Ok(())
}

/// Certifies `g` as a maximal outerplanar graph.
pub fn recognize_mop(g: &Graph) -> Result<OuterplaneEmbedding> {
    let n = g.n();
    if n < 3 {
        return Err(MopRejection::TooFewVertices(n).into());
    }
    let expected = 2 * n - 3;
    if g.edge_count() != expected {
        return Err(MopRejection::EdgeCount { found: g.edge_count(), expected }.into());
    }

    let mut outer_adj = vec![Vec::with_capacity(2); n];
    let mut chords = Vec::with_capacity(n - 3);
    for (u, v) in g.edges() {
        if g.common_neighbors(u, v).len() == 1 {
            outer_adj[u].push(v);
            outer_adj[v].push(u);
        } else {
            chords.push((u, v));
        }
    }
    if outer_adj.iter().any(|a| a.len() != 2) {
        return Err(MopRejection::NoHamiltonianOuterCycle.into());
    }
    let mut cycle = Vec::with_capacity(n);
    let (mut prev, mut cur) = (usize::MAX, 0);
    loop {
        cycle.push(cur);
        let next = if outer_adj[cur][0] != prev { outer_adj[cur][0] } else { outer_adj[cur][1] };
        prev = cur;
        cur = next;
        if cur == 0 || cycle.len() > n {
            break;
        }
    }
    if cycle.len() != n {
        return Err(MopRejection::NoHamiltonianOuterCycle.into());
    }
    OuterplaneEmbedding::from_parts(cycle, chords)
}

/// One elimination step: `removed` had exactly the adjacent neighbors
/// `left < right` when it was deleted.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PeelStep {
    pub removed: usize,
    pub left: usize,
    pub right: usize,
}

/// Simplicial degree-2 elimination order certifying a 2-tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeelSequence {
    pub steps: Vec<PeelStep>,
    /// Remaining triangle, ascending.
    pub kernel: [usize; 3],
}

impl PeelSequence {
    /// Replays the sequence on `g` and checks every step.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let n = g.n();
        if n < 3 || self.steps.len() != n - 3 {
            return Err(Error::InvalidPeel(format!(
                "{} steps for a graph on {n} vertices",
                self.steps.len()
            )));
        }
        let mut alive = vec![true; n];
        for step in &self.steps {
            let v = step.removed;
            if v >= n || !alive[v] {
                return Err(Error::InvalidPeel(format!("vertex {v} is not present")));
            }
            let live: Vec<usize> = g.neighbors(v).iter().copied().filter(|&u| alive[u]).collect();
            if live != [step.left, step.right] {
                return Err(Error::InvalidPeel(format!(
                    "vertex {v} has live neighbors {live:?}, step claims [{}, {}]",
                    step.left, step.right
                )));
            }
            if !g.has_edge(step.left, step.right) {
                return Err(Error::InvalidPeel(format!("vertex {v} is not simplicial")));
            }
            alive[v] = false;
        }
        let rest: Vec<usize> = (0..n).filter(|&v| alive[v]).collect();
        if rest != self.kernel {
            return Err(Error::InvalidPeel(format!("kernel {:?} ≠ remaining {rest:?}", self.kernel)));
        }
        let [a, b, c] = self.kernel;
        if !(g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c)) {
            return Err(Error::InvalidPeel("kernel is not a triangle".into()));
        }
        Ok(())
    }
}

/// Certifies `g` as a 2-tree by greedily peeling the lowest-index
/// simplicial degree-2 vertex until three vertices remain.
pub fn recognize_two_tree(g: &Graph) -> Result<PeelSequence> {
    let n = g.n();
    if n < 3 {
        return Err(TwoTreeRejection::TooFewVertices(n).into());
    }
    let mut alive = vec![true; n];
    let mut degree = g.degrees();
    let mut candidates: BTreeSet<usize> = (0..n).filter(|&v| degree[v] == 2).collect();
    let mut steps = Vec::with_capacity(n - 3);
    let mut remaining = n;

    while remaining > 3 {
        let pick = candidates.iter().copied().find_map(|v| {
            let mut live = g.neighbors(v).iter().copied().filter(|&u| alive[u]);
            let (l, r) = (live.next()?, live.next()?);
            g.has_edge(l, r).then_some(PeelStep { removed: v, left: l, right: r })
        });
        let Some(step) = pick else {
            return Err(TwoTreeRejection::Stuck { remaining }.into());
        };
        candidates.remove(&step.removed);
        alive[step.removed] = false;
        remaining -= 1;
        for u in [step.left, step.right] {
            degree[u] -= 1;
            if degree[u] == 2 {
                candidates.insert(u);
            } else {
                candidates.remove(&u);
            }
        }
        steps.push(step);
    }

    let rest: Vec<usize> = (0..n).filter(|&v| alive[v]).collect();
    let kernel = [rest[0], rest[1], rest[2]];
    let [a, b, c] = kernel;
    if !(g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c)) {
        return Err(TwoTreeRejection::KernelNotTriangle.into());
    }
    Ok(PeelSequence { steps, kernel })
}

/// Inner faces none of whose edges lie on the outer cycle.
pub fn internal_triangles(emb: &OuterplaneEmbedding, g: &Graph) -> Result<Vec<[usize; 3]>> {
    emb.check_matches(g)?;
    Ok(g
        .triangles()
        .into_iter()
        .filter(|&[a, b, c]| {
            !(emb.is_cycle_edge(a, b) || emb.is_cycle_edge(b, c) || emb.is_cycle_edge(a, c))
        })
        .collect())
}

/// A MOP with no internal triangle. `K3` counts as striped.
pub fn is_striped(emb: &OuterplaneEmbedding, g: &Graph) -> Result<bool> {
    Ok(internal_triangles(emb, g)?.is_empty())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k3() -> Graph {
        Graph::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap()
    }

    fn mop4() -> Graph {
        Graph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).unwrap()
    }

    fn fan(n: usize) -> Graph {
        let apex = n - 1;
        Graph::from_edges(n, (0..apex - 1).map(|i| (i, i + 1)).chain((0..apex).map(|i| (i, apex)))).unwrap()
    }

    fn triforce() -> Graph {
        Graph::from_edges(6, (0..6).map(|i| (i, (i + 1) % 6)).chain([(0, 2), (2, 4), (0, 4)])).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn triangle_is_mop() {
        let emb = recognize_mop(&k3()).unwrap();
        assert_eq!(emb.cycle(), &[0, 1, 2]);
        assert!(emb.chords().is_empty());
        assert!(is_striped(&emb, &k3()).unwrap());
    }

    #[test]
    fn fan_embedding() {
        let g = fan(6);
        let emb = recognize_mop(&g).unwrap();
        assert_eq!(emb.cycle(), &[0, 1, 2, 3, 4, 5]);
        assert_eq!(emb.chords(), &[(1, 5), (2, 5), (3, 5)]);
        assert_eq!(emb.to_graph(), g);
        assert_eq!(internal_triangles(&emb, &g).unwrap(), Vec::<[usize; 3]>::new());
    }

    #[test]
    fn cycle_rejected_by_edge_count() {
        let err = recognize_mop(&cycle(6)).unwrap_err();
        assert!(matches!(err, Error::NotMop(MopRejection::EdgeCount { found: 6, expected: 9 })));
        assert_eq!(err.to_string(), "not MOP: edge count 6 ≠ 9");
    }

    #[test]
    fn k4_rejected_everywhere() {
        let k4 = Graph::new(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert!(recognize_mop(&k4).is_err());
        assert!(matches!(
            recognize_two_tree(&k4),
            Err(Error::NotTwoTree(TwoTreeRejection::Stuck { remaining: 4 }))
        ));
    }

    #[test]
    fn right_edge_count_but_not_outerplanar() {
        // K4 plus a pendant vertex: 7 = 2·5 − 3 edges.
        let g = Graph::new(5, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (3, 4)]).unwrap();
        assert!(matches!(recognize_mop(&g), Err(Error::NotMop(MopRejection::NoHamiltonianOuterCycle))));
    }

    #[test]
    fn triforce_has_one_internal_triangle() {
        let g = triforce();
        let emb = recognize_mop(&g).unwrap();
        assert_eq!(internal_triangles(&emb, &g).unwrap(), vec![[0, 2, 4]]);
        assert!(!is_striped(&emb, &g).unwrap());
        assert_eq!(g.degree_two_vertices().len(), 3);
    }

    #[test]
    fn canonical_direction_follows_smaller_neighbor() {
        // Cycle 0-3-1-2-0 with chord 0-1.
        let g = Graph::new(4, &[(0, 3), (3, 1), (1, 2), (2, 0), (0, 1)]).unwrap();
        let emb = recognize_mop(&g).unwrap();
        assert_eq!(emb.cycle(), &[0, 2, 1, 3]);
        assert_eq!(emb.clockwise(0), 2);
        assert_eq!(emb.counter_clockwise(0), 3);
    }

    #[test]
    fn crossing_chords_rejected() {
        let err = OuterplaneEmbedding::from_parts(vec![0, 1, 2, 3, 4, 5], vec![(0, 3), (1, 4), (2, 5)])
            .unwrap_err();
        assert!(matches!(err, Error::NotMop(MopRejection::CrossingChords(..))));
        let err = OuterplaneEmbedding::from_parts(vec![0, 1, 2, 3], vec![(0, 1)]).unwrap_err();
        assert!(matches!(err, Error::EmbeddingMismatch(_)));
    }

    #[test]
    fn nested_chords_sharing_endpoint_accepted() {
        let emb = OuterplaneEmbedding::from_parts(vec![0, 1, 2, 3, 4, 5], vec![(0, 2), (0, 3), (3, 5)]).unwrap();
        assert_eq!(emb.to_graph().edge_count(), 9);
        assert!(recognize_mop(&emb.to_graph()).is_ok());
    }

    #[test]
    fn embedding_mismatch_detected() {
        let emb = recognize_mop(&fan(6)).unwrap();
        assert!(matches!(internal_triangles(&emb, &triforce()), Err(Error::EmbeddingMismatch(_))));
        assert!(internal_triangles(&emb, &k3()).is_err());
    }

    #[test]
    fn two_tree_of_triangle() {
        let peel = recognize_two_tree(&k3()).unwrap();
        assert!(peel.steps.is_empty());
        assert_eq!(peel.kernel, [0, 1, 2]);
    }

    #[test]
    fn two_tree_of_four_vertex_mop() {
        let g = mop4();
        let peel = recognize_two_tree(&g).unwrap();
        assert_eq!(peel.steps, vec![PeelStep { removed: 1, left: 0, right: 2 }]);
        assert_eq!(peel.kernel, [0, 2, 3]);
        peel.validate(&g).unwrap();
    }

    #[test]
    fn non_outerplanar_two_tree() {
        // Three triangles glued on edge 0-1: a 2-tree containing K_{2,3}.
        let g = Graph::new(5, &[(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (0, 4), (1, 4)]).unwrap();
        assert!(recognize_mop(&g).is_err());
        let peel = recognize_two_tree(&g).unwrap();
        peel.validate(&g).unwrap();
    }

    #[test]
    fn kernel_must_be_triangle() {
        // A 4-cycle with a pendant triangle: peeling stalls or ends on a non-triangle.
        let g = cycle(4);
        assert!(matches!(recognize_two_tree(&g), Err(Error::NotTwoTree(TwoTreeRejection::Stuck { .. }))));
        let p3 = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(matches!(recognize_two_tree(&p3), Err(Error::NotTwoTree(TwoTreeRejection::KernelNotTriangle))));
    }

    #[test]
    fn tampered_peel_rejected() {
        let g = mop4();
        let mut peel = recognize_two_tree(&g).unwrap();
        peel.steps[0].removed = 0;
        assert!(matches!(peel.validate(&g), Err(Error::InvalidPeel(_))));
    }
}
