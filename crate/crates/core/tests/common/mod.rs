#![allow(dead_code)]

use ddmop_core::generators::{
    generate_family_a, generate_family_u, generate_fan, generate_random_mop, GenSpec, InnerTriangulation,
};
use ddmop_core::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn cycle(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
}

/// Random MOPs with `n` cycling through `lo..=hi`.
pub fn random_mops(count: usize, lo: usize, hi: usize) -> Vec<(String, Graph)> {
    (0..count)
        .map(|i| {
            let n = lo + i % (hi - lo + 1);
            let seed = 1000 + i as u64;
            (GenSpec::RandomMop { n, seed }.id(), generate_random_mop(n, seed).unwrap())
        })
        .collect()
}

/// Fans, both families and random MOPs, all with at most `max_n` vertices.
pub fn mop_corpus(max_n: usize, random: usize) -> Vec<(String, Graph)> {
    let mut out = Vec::new();
    for n in 3..=max_n {
        out.push((format!("fan-n{n}"), generate_fan(n).unwrap()));
    }
    for k in 2..=max_n / 3 {
        out.push((format!("U-k{k}"), generate_family_u(k, InnerTriangulation::Fan, None).unwrap()));
        for seed in 0..3 {
            let g = generate_family_u(k, InnerTriangulation::RandomBinary, Some(seed)).unwrap();
            out.push((format!("U-k{k}-s{seed}"), g));
        }
    }
    for q in (3..=max_n / 2).step_by(2) {
        out.push((format!("A-q{q}"), generate_family_a(q).unwrap()));
    }
    out.extend(random_mops(random, 3, max_n));
    out
}

/// Random 2-tree: start from a triangle, repeatedly join a new vertex to
/// both ends of a random existing edge. Usually not outerplanar.
pub fn random_two_tree(n: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = vec![(0, 1), (1, 2), (0, 2)];
    for v in 3..n {
        let (a, b) = edges[rng.random_range(0..edges.len())];
        edges.push((a, v));
        edges.push((b, v));
    }
    Graph::new(n, &edges).unwrap()
}
