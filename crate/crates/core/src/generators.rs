//! Generators for fans, random triangulated polygons and the two extremal
//! families on which the double domination bounds are attained.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::recognition::{internal_triangles, recognize_mop};

/// How the `2k`-gon `H` underlying a family-U graph is triangulated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum InnerTriangulation {
    /// All chords from `a_1`.
    #[default]
    Fan,
    /// Seeded recursive random splitting.
    RandomBinary,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GenSpec {
    FamilyU { k: usize, inner: InnerTriangulation, seed: Option<u64> },
    FamilyA { q: usize },
    Fan { n: usize },
    RandomMop { n: usize, seed: u64 },
}

impl GenSpec {
    pub fn generate(&self) -> Result<Graph> {
        match *self {
            GenSpec::FamilyU { k, inner, seed } => generate_family_u(k, inner, seed),
            GenSpec::FamilyA { q } => generate_family_a(q),
            GenSpec::Fan { n } => generate_fan(n),
            GenSpec::RandomMop { n, seed } => generate_random_mop(n, seed),
        }
    }

    /// Short identifier used in reports, e.g. `A-q5` or `random-n8-s3`.
    pub fn id(&self) -> String {
        match *self {
            GenSpec::FamilyU { k, inner: InnerTriangulation::Fan, .. } => format!("U-k{k}"),
            GenSpec::FamilyU { k, inner: InnerTriangulation::RandomBinary, seed } => {
                format!("U-k{k}-s{}", seed.unwrap_or(0))
            }
            GenSpec::FamilyA { q } => format!("A-q{q}"),
            GenSpec::Fan { n } => format!("fan-n{n}"),
            GenSpec::RandomMop { n, seed } => format!("random-n{n}-s{seed}"),
        }
    }
}

fn polygon_edges(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).map(move |i| (i, (i + 1) % n))
}

/// Chords of a random triangulation of the polygon `0..n` in cycle order.
fn random_polygon_chords<R: Rng>(n: usize, rng: &mut R) -> Vec<(usize, usize)> {
    let mut chords = Vec::with_capacity(n.saturating_sub(3));
    let mut pending = vec![(0, n - 1)];
    while let Some((i, j)) = pending.pop() {
        if j - i < 2 {
            continue;
        }
        let k = rng.random_range(i + 1..j);
        if k - i >= 2 {
            chords.push((i, k));
        }
        if j - k >= 2 {
            chords.push((k, j));
        }
        pending.push((i, k));
        pending.push((k, j));
    }
    chords
}

/// Graph `G_H`: a triangulated `2k`-gon `a_1 … a_{2k}` (labels `0..2k`) with
/// a new vertex `u_i` (label `2k + i - 1`) joined to `a_{2i-1}` and `a_{2i}`.
pub fn generate_family_u(k: usize, inner: InnerTriangulation, seed: Option<u64>) -> Result<Graph> {
    if k < 2 {
        return Err(Error::InvalidParameters(format!("family U needs k ≥ 2, got {k}")));
    }
    let m = 2 * k;
    let chords: Vec<(usize, usize)> = match inner {
        InnerTriangulation::Fan => (2..m - 1).map(|j| (0, j)).collect(),
        InnerTriangulation::RandomBinary => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed.unwrap_or(0));
            random_polygon_chords(m, &mut rng)
        }
    };
    let ears = (0..k).flat_map(|i| [(m + i, 2 * i), (m + i, 2 * i + 1)]);
    let g = Graph::from_edges(3 * k, polygon_edges(m).chain(chords).chain(ears))?;
    self_check(&g, "family U")?;
    Ok(g)
}

/// Index of `a_i` (1-based) in the family-A labeling.
fn a(i: usize) -> usize {
    i - 1
}

/// Index of `b_i` (1-based), so that `a_1 … a_q b_q … b_1` is `0..2q`.
fn b(q: usize, i: usize) -> usize {
    2 * q - i
}

/// Striped MOP on `2q` vertices attaining `⌊n/2⌋ + 1`.
///
/// Outer cycle `a_1 … a_q b_q … b_1`, rungs `a_i b_i` for `2 ≤ i ≤ q-1`,
/// and in the square between rungs `i` and `i+1` the diagonal `a_i b_{i+1}`
/// when `i mod 4 ∈ {1, 2}`, else `a_{i+1} b_i`.
pub fn generate_family_a(q: usize) -> Result<Graph> {
    if q < 3 || q.is_multiple_of(2) {
        return Err(Error::InvalidParameters(format!("family A needs odd q ≥ 3, got {q}")));
    }
    let rungs = (2..q).map(|i| (a(i), b(q, i)));
    let diagonals = (1..q).map(|i| match i % 4 {
        1 | 2 => (a(i), b(q, i + 1)),
        _ => (a(i + 1), b(q, i)),
    });
    let g = Graph::from_edges(2 * q, polygon_edges(2 * q).chain(rungs).chain(diagonals))?;

    let emb = self_check(&g, "family A")?;
    if !internal_triangles(&emb, &g)?.is_empty() {
        return Err(Error::InvariantViolation(format!("family A q={q} is not striped")));
    }
    let deg2 = g.degree_two_vertices();
    if deg2.len() != 2 {
        return Err(Error::InvariantViolation(format!(
            "family A q={q} has degree-2 vertices {deg2}, expected exactly two"
        )));
    }
    Ok(g)
}

/// Path `0 – 1 – … – (n-2)` plus apex `n-1` joined to every path vertex.
pub fn generate_fan(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameters(format!("fan needs n ≥ 3, got {n}")));
    }
    let apex = n - 1;
    Graph::from_edges(n, (0..apex - 1).map(|i| (i, i + 1)).chain((0..apex).map(|i| (i, apex))))
}

/// Random triangulation of the `n`-gon by recursive splitting, with vertex
/// labels shuffled. Reproducible for a given `(n, seed)`.
pub fn generate_random_mop(n: usize, seed: u64) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameters(format!("random MOP needs n ≥ 3, got {n}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let chords = random_polygon_chords(n, &mut rng);
    let mut label: Vec<usize> = (0..n).collect();
    label.shuffle(&mut rng);
    let g = Graph::from_edges(n, polygon_edges(n).chain(chords).map(|(u, v)| (label[u], label[v])))?;
    self_check(&g, "random MOP")?;
    Ok(g)
}

fn self_check(g: &Graph, what: &str) -> Result<crate::recognition::OuterplaneEmbedding> {
    recognize_mop(g).map_err(|e| Error::InvariantViolation(format!("generated {what} is not a MOP: {e}")))
}
