//! Rainbow 4-coloring of maximal outerplanar graphs and the two
//! degree-parameterized double dominating sets built on it.
//!
//! A coloring is *rainbow* when every 4-cycle carries four distinct colors.
//! In a MOP every 4-cycle is a pair of inner faces sharing a chord, so a
//! traversal of the inner dual tree that gives each new apex the one color
//! missing from the shared edge and the opposite apex yields such a coloring.

use std::collections::{HashMap, VecDeque};

use crate::bounds;
use crate::error::{Error, Result};
use crate::graph::{DominationResult, Graph, Method};
use crate::peel::Coloring;
use crate::recognition::{recognize_mop, OuterplaneEmbedding};

/// A degree-2 vertex `anchor` of the original graph, its chosen neighbor
/// `partner`, and the vertex `added` joined to both.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Attachment {
    pub added: usize,
    pub anchor: usize,
    pub partner: usize,
}

/// The MOP obtained by hanging one new degree-2 vertex off an outer edge at
/// every degree-2 vertex of the original.
#[derive(Debug, Clone)]
pub struct AugmentedGraph {
    pub graph: Graph,
    pub embedding: OuterplaneEmbedding,
    pub original_n: usize,
    pub attachments: Vec<Attachment>,
}

/// Attaches a new vertex to each degree-2 vertex `a` and its clockwise cycle
/// neighbor. New vertices are labeled `n, n+1, ...` in ascending order of `a`.
pub fn augment(g: &Graph, emb: &OuterplaneEmbedding) -> Result<AugmentedGraph> {
    let n = g.n();
    if n < 4 {
        return Err(Error::TooSmall { needed: 4, found: n });
    }
    emb.check_matches(g)?;

    let mut attachments = Vec::new();
    let mut after: HashMap<usize, usize> = HashMap::new();
    for (i, anchor) in g.degree_two_vertices().iter().enumerate() {
        let partner = emb.clockwise(anchor);
        let added = n + i;
        attachments.push(Attachment { added, anchor, partner });
        after.insert(anchor, added);
    }

    let mut cycle = Vec::with_capacity(n + attachments.len());
    for &v in emb.cycle() {
        cycle.push(v);
        if let Some(&u) = after.get(&v) {
            cycle.push(u);
        }
    }
    let chords: Vec<(usize, usize)> = emb
        .chords()
        .iter()
        .copied()
        .chain(attachments.iter().map(|a| (a.anchor, a.partner)))
        .collect();
    let embedding = OuterplaneEmbedding::from_parts(cycle, chords)?;
    let graph = embedding.to_graph();
    Ok(AugmentedGraph { graph, embedding, original_n: n, attachments })
}

/// 4-coloring in which every 4-cycle of the MOP is rainbow.
///
/// The lexicographically first face is the root and gets colors `0, 1, 2`
/// in ascending vertex order; faces are then visited breadth-first across
/// chords.
pub fn rainbow_four_coloring(g: &Graph, emb: &OuterplaneEmbedding) -> Result<Coloring> {
    emb.check_matches(g)?;
    let faces = g.triangles();
    if faces.len() != g.n() - 2 {
        return Err(Error::InvariantViolation(format!(
            "{} triangles in a MOP on {} vertices",
            faces.len(),
            g.n()
        )));
    }

    let mut by_edge: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
    for (f, &[a, b, c]) in faces.iter().enumerate() {
        for e in [(a, b), (a, c), (b, c)] {
            by_edge.entry(e).or_default().push(f);
        }
    }

    let mut color_of = vec![usize::MAX; g.n()];
    let mut visited = vec![false; faces.len()];
    for (c, &v) in faces[0].iter().enumerate() {
        color_of[v] = c;
    }
    visited[0] = true;
    let mut queue = VecDeque::from([0]);
    while let Some(f) = queue.pop_front() {
        let [a, b, c] = faces[f];
        for (u, v, x) in [(a, b, c), (a, c, b), (b, c, a)] {
            let Some(shared) = by_edge.get(&(u, v)) else { continue };
            for &h in shared {
                if visited[h] {
                    continue;
                }
                visited[h] = true;
                let w = faces[h].into_iter().find(|&z| z != u && z != v).expect("triangle apex");
                let used = [color_of[u], color_of[v], color_of[x]];
                color_of[w] = (0..4).find(|k| !used.contains(k)).expect("three used colors");
                queue.push_back(h);
            }
        }
    }
    if visited.iter().any(|&seen| !seen) {
        return Err(Error::InvariantViolation("inner dual is disconnected".into()));
    }
    Ok(Coloring { palette_size: 4, color_of })
}

/// Double dominating set of size at most `⌊(n+t)/2⌋`.
///
/// Colors the augmented graph, takes its two smallest color classes `D`,
/// then swaps each added vertex in `D` for a neighbor outside `D`
/// (the anchor when possible).
pub fn rainbow_double_domination(g: &Graph, emb: &OuterplaneEmbedding) -> Result<DominationResult> {
    let aug = augment(g, emb)?;
    let coloring = rainbow_four_coloring(&aug.graph, &aug.embedding)?;
    let n = g.n();
    let t = aug.attachments.len();
    let bound = bounds::half_n_plus_t(n, t);

    let chosen = coloring.two_smallest_classes();
    if chosen.len() > bound {
        return Err(Error::InvariantViolation(format!(
            "two smallest of four classes on {} vertices have size {}",
            n + t,
            chosen.len()
        )));
    }
    let mut repaired = chosen.restrict(n);
    for a in &aug.attachments {
        if !chosen.contains(a.added) {
            continue;
        }
        let swap = if !chosen.contains(a.anchor) {
            a.anchor
        } else if !chosen.contains(a.partner) {
            a.partner
        } else {
            return Err(Error::InvariantViolation(format!(
                "added vertex {} and both its neighbors were chosen",
                a.added
            )));
        };
        repaired.insert(swap);
    }
    DominationResult::verified(g, repaired, Method::Rainbow4Color, Some(bound))
}

/// All vertices of degree at least 3, of size exactly `n - t`.
pub fn degree_set_double_domination(g: &Graph) -> Result<DominationResult> {
    let n = g.n();
    if n < 4 {
        return Err(Error::TooSmall { needed: 4, found: n });
    }
    recognize_mop(g)?;
    let t = g.degree_two_vertices().len();
    DominationResult::verified(g, g.high_degree_vertices(), Method::DegreeAtLeast3, Some(bounds::n_minus_t(n, t)))
}

/// Runs both degree-parameterized constructions and keeps the smaller set
/// (the rainbow set on ties). The claimed bound is the piecewise
/// `⌊(n+t)/2⌋` if `t < n/3`, else `n - t`.
pub fn dispatch_bound(g: &Graph) -> Result<DominationResult> {
    dispatch_all(g).map(|(_, _, best)| best)
}

/// [`dispatch_bound`] together with the rainbow and degree results it
/// chose between.
pub fn dispatch_all(g: &Graph) -> Result<(DominationResult, DominationResult, DominationResult)> {
    let n = g.n();
    if n < 4 {
        return Err(Error::TooSmall { needed: 4, found: n });
    }
    let emb = recognize_mop(g)?;
    let rainbow = rainbow_double_domination(g, &emb)?;
    let degree = degree_set_double_domination(g)?;
    let t = g.degree_two_vertices().len();
    let best = if degree.size() < rainbow.size() { &degree } else { &rainbow };
    let dispatch = DominationResult::verified(g, best.set.clone(), Method::Dispatch, Some(bounds::piecewise(n, t)))?;
    Ok((rainbow, degree, dispatch))
}

/// Every 4-cycle of `g` as `[v0, v1, v2, v3]` in cycle order, each listed
/// once (smallest vertex first, `v1 < v3`). Brute force over paths.
pub fn four_cycles(g: &Graph) -> Vec<[usize; 4]> {
    let mut out = Vec::new();
    for a in 0..g.n() {
        for &b in g.neighbors(a) {
            if b <= a {
                continue;
            }
            for &c in g.neighbors(b) {
                if c <= a {
                    continue;
                }
                for &d in g.neighbors(c) {
                    if d > b && d != c && g.has_edge(d, a) {
                        out.push([a, b, c, d]);
                    }
                }
            }
        }
    }
    out
}

pub fn is_rainbow(coloring: &Coloring, g: &Graph) -> bool {
    four_cycles(g).iter().all(|q| {
        let mut seen = [false; 4];
        q.iter().all(|&v| {
            let c = coloring.color(v);
            c < 4 && !std::mem::replace(&mut seen[c], true)
        })
    })
}
