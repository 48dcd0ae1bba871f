mod common;

use num_bigint::BigInt;
use proptest::prelude::*;
use qks_core::capacity::lovasz_theta;
use qks_core::graph::{
    automorphism_group, chromatic_number, clique_number, independence_number, is_automorphism,
    maximal_cliques, planarity, spectrum, strong_product, verify_subdivision, OrthoGraph,
    Planarity,
};

use common::arb_graph;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn cliques_match_brute_force(g in arb_graph(11)) {
        let ours = maximal_cliques(&g);
        prop_assert_eq!(&ours, &common::maximal_cliques(&g));
        let covered: usize = (0..g.n()).filter(|&v| ours.iter().any(|c| c.contains(&v))).count();
        prop_assert_eq!(covered, g.n());
        prop_assert_eq!(clique_number(&g), common::clique_number(&g));
    }

    #[test]
    fn coloring_is_proper_and_optimal(g in arb_graph(9)) {
        let c = chromatic_number(&g);
        prop_assert!(c.is_proper(&g));
        prop_assert_eq!(c.colors.iter().max().map_or(0, |&m| m + 1), c.chromatic_number);
        prop_assert_eq!(c.chromatic_number, common::chromatic_number(&g));
        prop_assert!(c.chromatic_number >= clique_number(&g));
    }

    #[test]
    fn independence_matches_brute_force(g in arb_graph(12)) {
        let (alpha, set) = independence_number(&g, None).unwrap();
        prop_assert_eq!(alpha, common::independence_number(&g));
        prop_assert_eq!(set.len(), alpha);
        prop_assert!(g.is_independent(&set));
    }

    #[test]
    fn automorphism_order_matches_permutation_count(g in arb_graph(7)) {
        let aut = automorphism_group(&g).unwrap();
        prop_assert_eq!(aut.order, common::automorphism_count(&g));
        prop_assert!(aut.generators.iter().all(|p| is_automorphism(&g, p)));
    }

    #[test]
    fn characteristic_polynomial_shape(g in arb_graph(12)) {
        let s = spectrum(&g);
        let n = g.n();
        prop_assert_eq!(s.char_poly.len(), n + 1);
        prop_assert_eq!(s.coefficient(n), BigInt::from(1));
        prop_assert_eq!(s.coefficient(n.saturating_sub(1)), if n >= 1 { BigInt::from(0) } else { BigInt::from(1) });
        if n >= 2 {
            prop_assert_eq!(s.coefficient(n - 2), -BigInt::from(g.edge_count()));
        }
        for &x in &s.eigenvalues {
            prop_assert!(s.scaled_residual(x) <= 1e-6, "residual at {}", x);
        }
        prop_assert!(s.eigenvalues.iter().sum::<f64>().abs() < 1e-9);
        prop_assert!(s.eigenvalues.windows(2).all(|w| w[0] >= w[1]));
    }

    #[test]
    fn planarity_verdicts_are_certified(g in arb_graph(9)) {
        match planarity(&g).unwrap() {
            Planarity::Planar => prop_assert!(g.n() < 3 || g.edge_count() <= 3 * g.n() - 6),
            Planarity::NonPlanar(obs) => prop_assert!(verify_subdivision(&g, &obs)),
        }
    }

    #[test]
    fn strong_product_degrees(g in arb_graph(6), h in arb_graph(6)) {
        let p = strong_product(&g, &h);
        let q = strong_product(&h, &g);
        let nh = h.n();
        let ng = g.n();
        for u in 0..ng {
            for v in 0..nh {
                let x = u * nh + v;
                prop_assert_eq!(p.degree(x), (g.degree(u) + 1) * (h.degree(v) + 1) - 1);
                for u2 in 0..ng {
                    for v2 in 0..nh {
                        // commutative up to swapping the coordinates
                        prop_assert_eq!(p.is_adjacent(x, u2 * nh + v2), q.is_adjacent(v * ng + u, v2 * ng + u2));
                    }
                }
            }
        }
    }

    #[test]
    fn lovasz_sandwich(g in arb_graph(8)) {
        let theta = lovasz_theta(&g).unwrap();
        let theta_bar = lovasz_theta(&g.complement()).unwrap();
        let (alpha, _) = independence_number(&g, None).unwrap();
        let chi = chromatic_number(&g).chromatic_number;
        let chi_bar = chromatic_number(&g.complement()).chromatic_number;
        prop_assert!(alpha as f64 <= theta + 1e-3 && theta <= chi_bar as f64 + 1e-3, "{} {} {}", alpha, theta, chi_bar);
        prop_assert!(clique_number(&g) as f64 <= theta_bar + 1e-3 && theta_bar <= chi as f64 + 1e-3);
        // theta(G) * theta(complement) >= n
        prop_assert!(theta * theta_bar >= g.n() as f64 - 1e-3);
    }
}

#[test]
fn induced_subgraph_keeps_adjacency() {
    let g = OrthoGraph::cycle(7);
    let h = g.induced_subgraph(&[0, 1, 2, 5]).unwrap();
    assert_eq!(h.edges(), vec![(0, 1), (1, 2)]);
    assert_eq!(g.induced_subgraph(&(0..7).collect::<Vec<_>>()).unwrap(), g);
}

#[test]
fn perfect_graphs_collapse() {
    // complete and bipartite graphs: alpha of the square is alpha squared and theta = alpha
    let bipartite = OrthoGraph::from_edges(5, [(0, 3), (0, 4), (1, 3), (2, 4)]).unwrap();
    for g in [OrthoGraph::complete(4), OrthoGraph::cycle(6), bipartite] {
        let (a1, _) = independence_number(&g, None).unwrap();
        let (a2, _) = independence_number(&strong_product(&g, &g), None).unwrap();
        assert_eq!(a2, a1 * a1);
        assert!((lovasz_theta(&g).unwrap() - a1 as f64).abs() <= 1e-3);
    }
}

#[test]
fn catalog_automorphisms_match_permutation_search() {
    for (name, order) in [
        ("g11", 12),
        ("g9", 4),
        ("g11k", 12),
        ("g9k", 2),
        ("clifton-8", 4),
        ("yu-oh-13", 24),
    ] {
        let g = qks_core::catalog::builtin(name).unwrap().graph;
        assert_eq!(common::automorphism_count(&g), order, "{name}");
        assert_eq!(automorphism_group(&g).unwrap().order, order, "{name}");
    }
}
