mod common;

use std::collections::BTreeSet;

use proptest::prelude::*;
use qks_core::lattice::{
    classify_lines, dedekind_psi, divisor_sigma, enumerate_isotropic_lines, is_square_free,
    nonzero_points, symplectic_product, PauliPoint,
};
use qks_core::scan::lines_partition_points;
use qks_core::states::{enumerate_rays, RayConfig};

use common::is_prime;

/// Lagrangian subgroups of Z_q x Z_q: order-q subgroups generated by at most
/// two points on which the symplectic form vanishes.
fn lagrangian_subgroups(q: u32) -> BTreeSet<Vec<(u32, u32)>> {
    let pts: Vec<(u32, u32)> = (0..q).flat_map(|b| (0..q).map(move |c| (b, c))).collect();
    let form = |(b1, c1): (u32, u32), (b2, c2): (u32, u32)| (b1 * c2 + q * q - c1 * b2) % q;
    let mut found = BTreeSet::new();
    for (i, &p) in pts.iter().enumerate() {
        for &r in &pts[i..] {
            if form(p, r) != 0 {
                continue;
            }
            let span: BTreeSet<(u32, u32)> = (0..q)
                .flat_map(|a| {
                    (0..q).map(move |k| ((a * p.0 + k * r.0) % q, (a * p.1 + k * r.1) % q))
                })
                .collect();
            if span.len() == q as usize {
                found.insert(span.into_iter().collect());
            }
        }
    }
    found
}

fn order(p: PauliPoint, q: u32) -> u32 {
    (1..=q)
        .find(|&k| (k * p.b).is_multiple_of(q) && (k * p.c).is_multiple_of(q))
        .unwrap()
}

fn euler_phi(q: u32) -> u32 {
    (1..=q)
        .filter(|&k| (1..=k).rev().find(|d| k % d == 0 && q.is_multiple_of(*d)) == Some(1))
        .count() as u32
}

proptest! {
    #[test]
    fn symplectic_form_is_alternating(q in 2u32..=24, b1 in 0i64..24, c1 in 0i64..24, b2 in 0i64..24, c2 in 0i64..24, b3 in 0i64..24, c3 in 0i64..24) {
        let (p1, p2, p3) = (PauliPoint::new(b1, c1, q), PauliPoint::new(b2, c2, q), PauliPoint::new(b3, c3, q));
        let w = |x, y| symplectic_product(x, y, q).unwrap();
        prop_assert_eq!((w(p1, p2) + w(p2, p1)) % q, 0);
        prop_assert_eq!(w(p1, p1), 0);
        prop_assert_eq!(w(p1.add(p2, q), p3), (w(p1, p3) + w(p2, p3)) % q);
    }
}

#[test]
fn line_count_is_sigma() {
    for q in 2..=16 {
        let lines = enumerate_isotropic_lines(q).unwrap();
        assert_eq!(lines.len() as u64, divisor_sigma(q), "q={q}");
        assert_eq!(lines.len(), lagrangian_subgroups(q).len(), "q={q}");
        for line in &lines {
            assert_eq!(line.points.len(), q as usize);
            assert!(line.points.contains(&PauliPoint::ORIGIN));
            assert!(line.is_pairwise_null() && line.is_additively_closed());
        }
    }
}

#[test]
fn lines_are_the_lagrangian_subgroups() {
    for q in [4, 6, 8, 9, 12] {
        let ours: BTreeSet<Vec<(u32, u32)>> = enumerate_isotropic_lines(q)
            .unwrap()
            .iter()
            .map(|l| l.points.iter().map(|p| (p.b, p.c)).collect())
            .collect();
        assert_eq!(ours, lagrangian_subgroups(q), "q={q}");
    }
}

#[test]
fn cyclic_lines_counted_by_psi() {
    for q in 2..=16 {
        let lines = enumerate_isotropic_lines(q).unwrap();
        let classes = classify_lines(&lines).unwrap();
        // each cyclic subgroup of order q has phi(q) generators
        let generators = nonzero_points(q)
            .into_iter()
            .filter(|&p| order(p, q) == q)
            .count() as u32;
        assert_eq!(classes.cyclic as u32, generators / euler_phi(q), "q={q}");
        assert_eq!(classes.cyclic as u64, dedekind_psi(q), "q={q}");
        assert_eq!(classes.cyclic + classes.outlier, lines.len());
    }
}

#[test]
fn lines_partition_points_exactly_for_primes() {
    for q in 2..=16 {
        let lines = enumerate_isotropic_lines(q).unwrap();
        let mut cover = vec![0usize; (q * q) as usize];
        for p in lines.iter().flat_map(|l| l.nonzero_points()) {
            cover[(p.b * q + p.c) as usize] += 1;
        }
        let partition = cover[1..].iter().all(|&k| k == 1);
        assert_eq!(partition, is_prime(q), "q={q}");
        assert_eq!(lines_partition_points(q), is_prime(q), "q={q}");
        if !is_square_free(q) {
            assert!(cover.iter().any(|&k| k >= 2), "q={q}");
        }
        let (lhs, rhs) = (u64::from(q - 1) * divisor_sigma(q), u64::from(q * q - 1));
        assert!(lhs >= rhs && (lhs == rhs) == is_prime(q), "q={q}");
    }
}

#[test]
fn composite_square_free_dimensions_still_overlap() {
    for q in [6, 10, 14, 15] {
        assert!(is_square_free(q));
        assert!(!lines_partition_points(q), "q={q}");
    }
}

#[test]
fn per_line_rays_form_orthonormal_bases() {
    for q in 2..=7 {
        let census = enumerate_rays(q, RayConfig::default()).unwrap();
        assert_eq!(
            census.rays.len() as u64,
            u64::from(q) * divisor_sigma(q),
            "q={q}"
        );
        for basis in &census.per_line {
            assert_eq!(basis.len(), q as usize);
            for (i, u) in basis.iter().enumerate() {
                for (j, v) in basis.iter().enumerate() {
                    let expected = if i == j { 1.0 } else { 0.0 };
                    assert!((u.inner(v).norm() - expected).abs() < 1e-10, "q={q}");
                }
            }
        }
    }
}

#[test]
fn census_is_seed_independent() {
    let a = enumerate_rays(6, RayConfig::default()).unwrap();
    let b = enumerate_rays(
        6,
        RayConfig {
            seed: 99,
            ..RayConfig::default()
        },
    )
    .unwrap();
    assert_eq!(a.rays.len(), b.rays.len());
    for (x, y) in a.rays.iter().zip(&b.rays) {
        assert!(x.same_ray(y, 1e-9));
    }
}
