mod common;

use common::{cycle, mop_corpus, random_two_tree};
use ddmop_core::bounds;
use ddmop_core::exact::{brute_force_gamma_x2, exact_gamma_x2};
use ddmop_core::generators::generate_random_mop;
use ddmop_core::peel::{peel_double_domination, peel_three_coloring};
use ddmop_core::rainbow::{augment, dispatch_all, four_cycles, is_rainbow, rainbow_four_coloring};
use ddmop_core::recognition::{internal_triangles, recognize_mop, recognize_two_tree, OuterplaneEmbedding};
use ddmop_core::Graph;
use proptest::prelude::*;

#[test]
fn every_corpus_graph_is_a_mop_and_a_two_tree() {
    for (id, g) in mop_corpus(16, 120) {
        let emb = recognize_mop(&g).unwrap_or_else(|e| panic!("{id}: {e}"));
        assert_eq!(emb.to_graph(), g, "{id}");
        recognize_two_tree(&g).unwrap_or_else(|e| panic!("{id}: {e}"));
    }
}

#[test]
fn reconstruction_preserves_edge_partition() {
    for (id, g) in mop_corpus(14, 60) {
        let emb = recognize_mop(&g).unwrap();
        let again = recognize_mop(&emb.to_graph()).unwrap();
        assert_eq!(again.chords(), emb.chords(), "{id}");
        let mut a = emb.cycle_edges();
        let mut b = again.cycle_edges();
        a.sort();
        b.sort();
        assert_eq!(a, b, "{id}");
    }
}

#[test]
fn structural_propositions() {
    for (id, g) in mop_corpus(16, 150) {
        if g.n() < 4 {
            continue;
        }
        let emb = recognize_mop(&g).unwrap();
        let deg2 = g.degree_two_vertices();
        assert_eq!(deg2.len(), internal_triangles(&emb, &g).unwrap().len() + 2, "{id}");
        assert!(2 * deg2.len() <= g.n(), "{id}");
        for u in deg2.iter() {
            assert!(deg2.iter().all(|v| !g.has_edge(u, v)), "{id}");
        }
    }
}

#[test]
fn peel_on_non_outerplanar_two_trees() {
    let mut non_outerplanar = 0;
    for n in 3..=14 {
        for seed in 0..15 {
            let g = random_two_tree(n, seed);
            non_outerplanar += usize::from(recognize_mop(&g).is_err());
            let peel = recognize_two_tree(&g).unwrap();
            let coloring = peel_three_coloring(&g, &peel).unwrap();
            assert!(coloring.is_proper(&g));
            let r = peel_double_domination(&g).unwrap();
            assert!(g.is_double_dominating(&r.set).unwrap());
            assert!(r.size() <= bounds::two_thirds(n));
            assert_eq!(peel_double_domination(&g).unwrap(), r);
        }
    }
    assert!(non_outerplanar > 50);
}

#[test]
fn augmented_graph_invariants() {
    for (id, g) in mop_corpus(14, 60) {
        if g.n() < 4 {
            continue;
        }
        let emb = recognize_mop(&g).unwrap();
        let aug = augment(&g, &emb).unwrap();
        assert_eq!(aug.original_n, g.n());
        assert_eq!(aug.attachments.len(), g.degree_two_vertices().len(), "{id}");
        assert_eq!(aug.graph.prefix_subgraph(g.n()).unwrap(), g, "{id}");
        assert_eq!(recognize_mop(&aug.graph).unwrap(), aug.embedding, "{id}");
        for a in &aug.attachments {
            assert_eq!(aug.graph.degree(a.added), 2);
            assert!(g.has_edge(a.anchor, a.partner));
            assert!(aug.graph.has_edge(a.added, a.anchor) && aug.graph.has_edge(a.added, a.partner));
        }
    }
}

#[test]
fn rainbow_coloring_on_corpus() {
    for (id, g) in mop_corpus(12, 100) {
        let emb = recognize_mop(&g).unwrap();
        let c = rainbow_four_coloring(&g, &emb).unwrap();
        assert!(c.is_proper(&g), "{id}");
        assert!(is_rainbow(&c, &g), "{id}");
    }
}

#[test]
fn outer_cycle_lift_double_dominates() {
    for (id, g) in mop_corpus(16, 80) {
        let emb = recognize_mop(&g).unwrap();
        let s = bounds::outer_cycle_set(&emb);
        assert_eq!(s.len(), bounds::cycle(g.n()), "{id}");
        assert!(g.is_double_dominating(&s).unwrap(), "{id}");
        assert!(exact_gamma_x2(&g, None).unwrap().optimum <= s.len(), "{id}");
    }
}

#[test]
fn sandwich_and_oracle_agreement() {
    let mut corpus = mop_corpus(14, 80);
    corpus.extend((3..=14).map(|n| (format!("C{n}"), cycle(n))));
    for (id, g) in corpus {
        let exact = exact_gamma_x2(&g, None).unwrap();
        let brute = brute_force_gamma_x2(&g).unwrap();
        assert_eq!(exact.optimum, brute.optimum, "{id}");
        assert!(exact.optimum >= 2);
        assert!(g.is_double_dominating(&exact.witness).unwrap());
        if g.n() >= 4 && recognize_mop(&g).is_ok() {
            let (r, d, best) = dispatch_all(&g).unwrap();
            for h in [&r, &d, &best] {
                assert!(exact.optimum <= h.size(), "{id}");
                assert!(h.size() <= h.claimed_bound.unwrap(), "{id}");
            }
            assert_eq!(best.size(), r.size().min(d.size()));
        }
    }
}

#[test]
fn four_cycle_count_matches_chords_in_mops() {
    // In a MOP every 4-cycle is two faces sharing a chord.
    for (id, g) in mop_corpus(12, 40) {
        let emb = recognize_mop(&g).unwrap();
        assert_eq!(four_cycles(&g).len(), emb.chords().len(), "{id}");
    }
}

fn arb_mop() -> impl Strategy<Value = Graph> {
    (4usize..=16, any::<u64>()).prop_map(|(n, seed)| generate_random_mop(n, seed).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn heuristics_respect_bounds(g in arb_mop()) {
        let n = g.n();
        let t = g.degree_two_vertices().len();
        let peel = peel_double_domination(&g).unwrap();
        let (rainbow, degree, best) = dispatch_all(&g).unwrap();
        for r in [&peel, &rainbow, &degree, &best] {
            prop_assert!(g.is_double_dominating(&r.set).unwrap());
        }
        prop_assert!(peel.size() <= bounds::two_thirds(n));
        prop_assert!(rainbow.size() <= bounds::half_n_plus_t(n, t));
        prop_assert_eq!(degree.size(), n - t);
        prop_assert!(best.size() <= bounds::half_n_plus_t(n, t).min(n - t));
        prop_assert!(bounds::half_n_plus_t(n, t).min(n - t) <= bounds::two_thirds(n));
    }

    #[test]
    fn embedding_from_relabeled_cycle(g in arb_mop()) {
        let emb = recognize_mop(&g).unwrap();
        let rebuilt = OuterplaneEmbedding::from_parts(emb.cycle().iter().rev().copied().collect(), emb.chords().to_vec()).unwrap();
        prop_assert_eq!(rebuilt, emb);
    }
}
