mod common;

use proptest::prelude::*;
use qks_core::catalog::builtin;
use qks_core::context::{
    is_valid_witness, ks_check, ks_check_contexts, minimize_contextual, KsOptions,
};
use qks_core::formats::{parse_graph, parse_rays, write_graph, write_rays};
use qks_core::graph::{maximal_cliques, OrthoGraph};
use qks_core::ray::Ray;
use qks_core::report::{run, Command, Settings};

use common::arb_graph;

/// Restricts `witness` to `kept`, then fixes each all-zero recomputed clique
/// by setting its lowest-index vertex that has no 1-neighbour.
fn repaired_restriction(g: &OrthoGraph, witness: &[u8], kept: &[usize]) -> (OrthoGraph, Vec<u8>) {
    let h = g.induced_subgraph(kept).unwrap();
    let mut w: Vec<u8> = kept.iter().map(|&v| witness[v]).collect();
    for clique in maximal_cliques(&h) {
        if clique.iter().all(|&v| w[v] == 0) {
            if let Some(&v) = clique
                .iter()
                .find(|&&v| h.neighbors(v).iter().all(|u| w[u] == 0))
            {
                w[v] = 1;
            }
        }
    }
    (h, w)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn verdict_matches_brute_force(g in arb_graph(12)) {
        let verdict = ks_check(&g);
        let contexts = maximal_cliques(&g);
        prop_assert_eq!(verdict.contextual, common::contextual(&g, &contexts));
        prop_assert_eq!(verdict.contexts, contexts.len());
        match &verdict.witness {
            Some(w) => prop_assert!(!verdict.contextual && is_valid_witness(&g, &contexts, w)),
            None => prop_assert!(verdict.contextual),
        }
    }

    #[test]
    fn search_is_deterministic(g in arb_graph(12)) {
        prop_assert_eq!(ks_check(&g), ks_check(&g));
    }

    #[test]
    fn restriction_with_witness_repair(g in arb_graph(10), keep in proptest::collection::vec(any::<bool>(), 10)) {
        let verdict = ks_check(&g);
        prop_assume!(!verdict.contextual);
        let kept: Vec<usize> = (0..g.n()).filter(|&v| keep[v]).collect();
        prop_assume!(!kept.is_empty());
        let (h, w) = repaired_restriction(&g, verdict.witness.as_ref().unwrap(), &kept);
        let contexts = maximal_cliques(&h);
        if !is_valid_witness(&h, &contexts, &w) {
            // repair can fail because restriction does not preserve
            // non-contextuality; fall back to a fresh search
            let fresh = ks_check(&h);
            prop_assert_eq!(fresh.contextual, common::contextual(&h, &contexts));
        }
    }

    #[test]
    fn graph_text_round_trip(g in arb_graph(14)) {
        prop_assert_eq!(parse_graph(&write_graph(&g)).unwrap(), g);
    }

    #[test]
    fn ray_text_round_trip(rows in proptest::collection::vec(proptest::collection::vec(-5i64..=5, 4), 1..8)) {
        let rays: Vec<Ray> = rows.into_iter().filter(|r| r.iter().any(|&x| x != 0)).map(|r| Ray::from_integers(r).unwrap()).collect();
        prop_assume!(!rays.is_empty());
        let again = parse_rays(&write_rays(&rays)).unwrap();
        prop_assert_eq!(rays.len(), again.len());
        for (a, b) in rays.iter().zip(&again) {
            prop_assert!(a.same_ray(b, 1e-12));
            prop_assert_eq!(&a.exact_coords, &b.exact_coords);
        }
    }
}

#[test]
fn restriction_can_create_contextuality() {
    // the wheel W5 has a witness (hub = 1), its rim C5 has none
    let rim = (0..5).map(|i| (i, (i + 1) % 5));
    let w5 = OrthoGraph::from_edges(6, rim.chain((0..5).map(|i| (i, 5)))).unwrap();
    let verdict = ks_check(&w5);
    assert!(!verdict.contextual);
    let (h, w) = repaired_restriction(&w5, verdict.witness.as_ref().unwrap(), &[0, 1, 2, 3, 4]);
    assert!(!is_valid_witness(&h, &maximal_cliques(&h), &w));
    assert!(ks_check(&h).contextual);
}

#[test]
fn cycle_dichotomy() {
    for n in 3..=21 {
        let g = OrthoGraph::cycle(n);
        let edges: Vec<Vec<usize>> = g.edges().into_iter().map(|(u, v)| vec![u, v]).collect();
        let verdict = ks_check_contexts(&g, &edges, KsOptions::default()).unwrap();
        assert_eq!(verdict.contextual, n % 2 == 1, "C{n}");
        if n % 2 == 0 {
            let alternating: Vec<u8> = (0..n).map(|i| (i % 2) as u8).collect();
            assert!(is_valid_witness(&g, &edges, &alternating));
        }
        if n >= 4 {
            // for n >= 4 the maximal cliques are exactly the edges
            assert_eq!(ks_check(&g).contextual, n % 2 == 1, "C{n}");
        }
    }
}

#[test]
fn catalog_graphs_agree_with_brute_force() {
    for name in [
        "yu-oh-13",
        "clifton-8",
        "g11",
        "g9",
        "g11k",
        "g9k",
        "cycle-5",
        "cycle-8",
        "complete-4",
    ] {
        let g = builtin(name).unwrap().graph;
        assert!(g.n() <= 13, "{name}");
        let contexts = maximal_cliques(&g);
        assert_eq!(contexts, common::maximal_cliques(&g), "{name}");
        let verdict = ks_check(&g);
        assert_eq!(
            verdict.contextual,
            common::contextual(&g, &contexts),
            "{name}"
        );
        if let Some(w) = &verdict.witness {
            assert!(is_valid_witness(&g, &contexts, w), "{name}");
        }
    }
}

#[test]
fn minimizer_output_is_removal_minimal() {
    for name in ["g11", "g9", "yu-oh-13", "cycle-7"] {
        let g = builtin(name).unwrap().graph;
        let kept = minimize_contextual(&g).unwrap();
        let h = g.induced_subgraph(&kept).unwrap();
        assert!(ks_check(&h).contextual, "{name}");
        for i in 0..kept.len() {
            let mut fewer = kept.clone();
            fewer.remove(i);
            assert!(
                !ks_check(&g.induced_subgraph(&fewer).unwrap()).contextual,
                "{name} minus {}",
                kept[i]
            );
        }
    }
}

#[test]
fn reports_are_reproducible() {
    for cmd in [
        Command::Analyze { input: "g9".into() },
        Command::Rays { q: 6 },
    ] {
        let a = run(&cmd, &Settings::default()).unwrap().to_json();
        let b = run(&cmd, &Settings::default()).unwrap().to_json();
        assert_eq!(a, b);
    }
}
