//! Closed-form upper bounds on the double domination number.

use crate::graph::VertexSet;
use crate::recognition::OuterplaneEmbedding;

/// `⌊2n/3⌋`, the bound for every 2-tree on `n ≥ 3` vertices.
pub fn two_thirds(n: usize) -> usize {
    2 * n / 3
}

/// `⌊(n+t)/2⌋` for a MOP with `t` degree-2 vertices.
pub fn half_n_plus_t(n: usize, t: usize) -> usize {
    (n + t) / 2
}

/// `n - t`, the size of the degree-at-least-3 set.
pub fn n_minus_t(n: usize, t: usize) -> usize {
    n - t
}

/// Piecewise bound: `⌊(n+t)/2⌋` when `3t < n`, otherwise `n - t`.
///
/// Equals `min(⌊(n+t)/2⌋, n - t)` for all `n, t`.
pub fn piecewise(n: usize, t: usize) -> usize {
    if 3 * t < n {
        half_n_plus_t(n, t)
    } else {
        n_minus_t(n, t)
    }
}

/// `⌊n/2⌋ + 1`, the bound for MOPs without internal triangles.
pub fn striped(n: usize) -> usize {
    n / 2 + 1
}

/// `⌈2n/3⌉`, the double domination number of the cycle `C_n`.
pub fn cycle(n: usize) -> usize {
    (2 * n).div_ceil(3)
}

/// Optimal double dominating pattern of the outer cycle lifted onto the MOP:
/// every cycle position except those congruent to 2 mod 3.
pub fn outer_cycle_set(emb: &OuterplaneEmbedding) -> VertexSet {
    let n = emb.n();
    VertexSet::from_vertices(
        n,
        emb.cycle().iter().enumerate().filter(|(i, _)| i % 3 != 2).map(|(_, &v)| v),
    )
}
