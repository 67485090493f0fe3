//! Cross-module property tests: engines against oracles, algebraic
//! identities of the constructions, and fixed-point/idempotence laws.

use num_bigint::BigUint;
use proptest::prelude::*;

use hypercycle::constructions::{
    binomial, blow_up, greedy_high_girth, linear_cycle, random_uniform, tensor_product,
};
use hypercycle::counting::{
    berge_girth, count_linear_trees, hom_count, homomorphic_image_profile, labeled_copy_count,
};
use hypercycle::oracles::{brute_berge_girth, brute_copies, brute_hom, OracleBudget};
use hypercycle::sidorenko::{gap_estimate, hom_density, sidorenko_check, SidorenkoVerdict};
use hypercycle::supersat::{classify_types, codegree_cleanup, erdos_kleitman_partition};
use hypercycle::textio::{format_hypergraph, parse_hypergraph};
use hypercycle::{Hypergraph, PartitionedHypergraph, RngSeed};

fn small_graph(r: usize, n: usize, m: u64, seed: u64) -> Hypergraph {
    let max = binomial(n, r);
    let m = if BigUint::from(m) > max {
        use num_traits::ToPrimitive;
        max.to_u64().unwrap()
    } else {
        m
    };
    random_uniform(n, r, m, RngSeed(seed)).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn codegree_sums_are_binomial_multiples(n in 4usize..9, m in 0u64..15, seed in 0u64..500) {
        let h = small_graph(3, n, m, seed);
        for k in 1..3usize {
            let total: u64 = h.k_shadows(k).unwrap().iter().map(|s| s.codegree).sum();
            let choose = [0u64, 3, 3][k];
            prop_assert_eq!(total, choose * h.edge_count() as u64);
        }
    }

    #[test]
    fn peel_is_idempotent(n in 4usize..9, m in 0u64..15, seed in 0u64..500, d in 1usize..4) {
        let h = small_graph(3, n, m, seed);
        let (once, _) = h.peel_min_degree(d);
        let (twice, _) = once.peel_min_degree(d);
        prop_assert_eq!(&once, &twice);
        for v in 0..once.vertex_count() {
            prop_assert!(once.degree(v) >= d);
        }
    }

    #[test]
    fn induced_on_everything_is_identity(n in 4usize..9, m in 0u64..15, seed in 0u64..500) {
        let h = small_graph(3, n, m, seed);
        let all: Vec<usize> = (0..n).collect();
        let (same, relab) = h.induced_subgraph(&all);
        prop_assert_eq!(&same, &h);
        prop_assert_eq!(relab, all);
    }

    #[test]
    fn engines_match_oracles(
        pn in 3usize..6, pm in 1u64..4, pseed in 0u64..200,
        hn in 4usize..8, hm in 0u64..20, hseed in 0u64..200,
    ) {
        let f = small_graph(3, pn, pm, pseed);
        let h = small_graph(3, hn, hm, hseed);
        let budget = OracleBudget::default();
        prop_assert_eq!(hom_count(&f, &h).unwrap().value, brute_hom(&f, &h, budget).unwrap());
        prop_assert_eq!(
            labeled_copy_count(&f, &h).unwrap().value,
            brute_copies(&f, &h, budget).unwrap()
        );
        prop_assert_eq!(berge_girth(&h).girth, brute_berge_girth(&h, budget).unwrap());
    }

    #[test]
    fn labeled_at_most_hom_and_edge_equality(
        hn in 4usize..8, hm in 1u64..20, hseed in 0u64..200,
    ) {
        let h = small_graph(3, hn, hm, hseed);
        let f = small_graph(3, 3, 1, 7); // single random edge = K_3^3 shape
        let hom = hom_count(&f, &h).unwrap().value;
        let inj = labeled_copy_count(&f, &h).unwrap().value;
        prop_assert!(inj <= hom);
        // v(F) = r: every hom is injective on the one edge, hence injective
        prop_assert_eq!(inj, hom);
        prop_assert_eq!(hom_count(&f, &h).unwrap().value, BigUint::from(6 * h.edge_count()));
    }

    #[test]
    fn blow_up_counts_and_girth(
        n in 4usize..7, m in 1u64..8, seed in 0u64..200, t in 2usize..4,
    ) {
        let h = small_graph(3, n, m, seed);
        let b = blow_up(&h, t).unwrap();
        prop_assert_eq!(b.vertex_count(), h.vertex_count() * t);
        prop_assert_eq!(b.edge_count(), h.edge_count() * t.pow(3));
        if h.edge_count() >= 1 {
            prop_assert_eq!(berge_girth(&b).girth, Some(2));
        }
    }

    #[test]
    fn tensor_submultiplicative(
        n in 4usize..6, m in 1u64..6, seed in 0u64..100,
        pn in 3usize..5, pm in 1u64..3, pseed in 0u64..100,
    ) {
        let h = small_graph(3, n, m, seed);
        let g = small_graph(3, n, m, seed.wrapping_add(1));
        let f = small_graph(3, pn, pm, pseed);
        let hg = tensor_product(&h, &g).unwrap();
        prop_assert_eq!(hg.edge_count(), 6 * h.edge_count() * g.edge_count());
        let lhs = hom_count(&f, &hg).unwrap().value;
        let rhs = hom_count(&f, &h).unwrap().value * hom_count(&f, &g).unwrap().value;
        prop_assert!(lhs <= rhs);
    }

    #[test]
    fn profile_totals_match(
        pn in 3usize..6, pm in 1u64..3, pseed in 0u64..100,
        hn in 4usize..7, hm in 0u64..12, hseed in 0u64..100,
    ) {
        let f = small_graph(3, pn, pm, pseed);
        let h = small_graph(3, hn, hm, hseed);
        let profile = homomorphic_image_profile(&f, &h).unwrap();
        prop_assert_eq!(profile.total, hom_count(&f, &h).unwrap().value);
    }

    #[test]
    fn sidorenko_verdict_is_the_exact_inequality(
        hn in 4usize..8, hm in 1u64..20, hseed in 0u64..200,
    ) {
        let f = linear_cycle(3, 3).unwrap();
        let h = small_graph(3, hn, hm, hseed);
        let verdict = sidorenko_check(&f, &h).unwrap();
        // independent re-derivation of the integer comparison
        let hom = brute_hom(&f, &h, OracleBudget::default()).unwrap();
        let n = BigUint::from(h.vertex_count());
        let lhs = hom * n.pow(9);
        let rhs = BigUint::from(6 * h.edge_count()).pow(3) * n.pow(6);
        let expect = if lhs >= rhs { SidorenkoVerdict::Holds } else { SidorenkoVerdict::Violated };
        prop_assert_eq!(verdict, expect);
        if let Ok(gap) = gap_estimate(&f, &h) {
            if gap > 0.0 {
                prop_assert_eq!(verdict, SidorenkoVerdict::Violated);
            }
        }
    }

    #[test]
    fn density_report_round_trip(
        hn in 4usize..8, hm in 1u64..20, hseed in 0u64..200,
    ) {
        use num_traits::ToPrimitive;
        let f = small_graph(3, 4, 2, 11);
        let h = small_graph(3, hn, hm, hseed);
        let report = hom_density(&f, &h).unwrap();
        if let Some(hom) = report.hom.to_f64() {
            if hom > 0.0 && hom < 2f64.powi(53) {
                let back =
                    (report.log_tf + report.pattern_vertices as f64 * (hn as f64).ln()).exp();
                prop_assert!((back - hom).abs() / hom < 1e-9);
            }
        }
    }

    #[test]
    fn text_round_trip(n in 3usize..9, m in 0u64..20, seed in 0u64..500) {
        let h = small_graph(3, n, m, seed);
        let text = format_hypergraph(&h);
        let back = parse_hypergraph(&text).unwrap();
        prop_assert_eq!(&back, &h);
        prop_assert_eq!(format_hypergraph(&back), text);
    }

    #[test]
    fn greedy_girth_passes_oracle(
        n in 8usize..14, g_min in 3usize..6, seed in 0u64..100,
    ) {
        let h = greedy_high_girth(n, 3, g_min, 300, RngSeed(seed)).unwrap();
        // no Berge cycle shorter than g_min
        prop_assert_eq!(hypercycle::oracles::brute_girth_at_most(&h, g_min - 1), None);
    }

    #[test]
    fn cleanup_is_a_fixed_point(
        n in 6usize..9, m in 3u64..20, seed in 0u64..200,
    ) {
        let g = small_graph(3, n, m, seed);
        if g.edge_count() == 0 {
            return Ok(());
        }
        let p = erdos_kleitman_partition(&g, 16, RngSeed(seed)).unwrap();
        if p.base().edge_count() == 0 {
            return Ok(());
        }
        let out = codegree_cleanup(&p, p.base(), 0.75).unwrap();
        if out.result.base().edge_count() == 0 {
            return Ok(());
        }
        let (host_sub, _) = p.base().induced_subgraph(&out.old_of_new);
        let again = codegree_cleanup(&out.result, &host_sub, 0.75).unwrap();
        prop_assert!(again.rounds.is_empty());
        prop_assert_eq!(again.surviving_edges, out.result.base().edge_count());
    }

    #[test]
    fn classify_types_partitions_edges(
        n in 6usize..10, m in 2u64..25, seed in 0u64..200,
    ) {
        let g = small_graph(3, n, m, seed);
        if g.edge_count() == 0 {
            return Ok(());
        }
        let p = erdos_kleitman_partition(&g, 16, RngSeed(seed)).unwrap();
        if p.base().edge_count() == 0 {
            return Ok(());
        }
        let (ty, h0) = classify_types(&p).unwrap();
        prop_assert!(h0.base().edge_count() >= 1);
        prop_assert!(h0.base().edge_count() <= p.base().edge_count());
        // every H0 edge matches the winning type exactly
        for e in h0.base().edges() {
            for (&(i, j), &y) in &ty.y {
                let u = h0.edge_vertex_in_class(e, i);
                let v = h0.edge_vertex_in_class(e, j);
                let d = p.base().pair_codegree(u, v);
                prop_assert!(d >= 1u64 << (y - 1) && d < 1u64 << y);
            }
        }
    }
}

#[test]
fn text_round_trip_100_instances() {
    for seed in 0..100u64 {
        let n = 4 + (seed as usize % 6);
        let m = seed % 16;
        let h = small_graph(3, n, m, 4000 + seed);
        let back = parse_hypergraph(&format_hypergraph(&h)).unwrap();
        assert_eq!(back, h);
    }
}

#[test]
fn peeling_never_decreases_girth() {
    for seed in 0..40u64 {
        let h = small_graph(3, 8, 14, 5000 + seed);
        let before = berge_girth(&h).girth;
        for d in 1..3usize {
            let (peeled, _) = h.peel_min_degree(d);
            let after = berge_girth(&peeled).girth;
            match (before, after) {
                (Some(b), Some(a)) => assert!(a >= b),
                (Some(_), None) | (None, None) => {}
                (None, Some(_)) => panic!("peeling created a cycle"),
            }
        }
    }
}

#[test]
fn incidence_is_consistent() {
    for seed in 0..40u64 {
        let h = small_graph(3, 8, 14, 6000 + seed);
        let total: usize = (0..h.vertex_count()).map(|v| h.degree(v)).sum();
        assert_eq!(total, 3 * h.edge_count());
    }
}

#[test]
fn linear_tree_zero_edge_convention() {
    let h = Hypergraph::empty(3, 7).unwrap();
    assert_eq!(count_linear_trees(&h, 4).unwrap(), BigUint::from(7u32));
}

#[test]
fn pair_shadow_le_edges() {
    for seed in 0..40u64 {
        let g = small_graph(3, 7, 12, seed);
        if g.edge_count() == 0 {
            continue;
        }
        let p = erdos_kleitman_partition(&g, 16, RngSeed(seed)).unwrap();
        if p.base().edge_count() == 0 {
            continue;
        }
        for i in 0..3 {
            for j in (i + 1)..3 {
                let shadow = p.pair_shadow_graph(i, j).unwrap();
                assert!(shadow.edge_count() <= p.base().edge_count());
            }
        }
    }
}

#[test]
fn transversal_partition_keeps_labels() {
    let g = small_graph(3, 8, 14, 3);
    let p = erdos_kleitman_partition(&g, 16, RngSeed(0)).unwrap();
    for e in p.base().edges() {
        assert!(g.has_edge(e));
        let classes: Vec<usize> = e.iter().map(|&v| p.class_of(v)).collect();
        let mut sorted = classes.clone();
        sorted.sort_unstable();
        sorted.dedup();
        assert_eq!(sorted.len(), 3);
    }
    let _ = PartitionedHypergraph::new(p.base().clone(), p.classes().to_vec()).unwrap();
}
