use super::OrthoGraph;

/// Strong product G ⊠ H. Vertex `(u, v)` gets index `u * |H| + v` and label `u.v`.
pub fn strong_product(g: &OrthoGraph, h: &OrthoGraph) -> OrthoGraph {
    let (ng, nh) = (g.n(), h.n());
    let mut p = OrthoGraph::empty(ng * nh);
    let close_g = |a: usize, b: usize| a == b || g.is_adjacent(a, b);
    let close_h = |a: usize, b: usize| a == b || h.is_adjacent(a, b);
    for u in 0..ng {
        for v in 0..nh {
            let x = u * nh + v;
            for u2 in u..ng {
                if !close_g(u, u2) {
                    continue;
                }
                for v2 in 0..nh {
                    let y = u2 * nh + v2;
                    if y > x && close_h(v, v2) {
                        p.connect(x, y);
                    }
                }
            }
        }
    }
    let labels = (0..ng)
        .flat_map(|u| (0..nh).map(move |v| (u, v)))
        .map(|(u, v)| format!("{}.{}", g.labels()[u], h.labels()[v]))
        .collect();
    p.with_labels(labels).expect("label count matches")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_identity() {
        let g = OrthoGraph::cycle(5);
        let h = OrthoGraph::from_edges(3, [(0, 1)]).unwrap();
        let p = strong_product(&g, &h);
        assert_eq!(p.n(), 15);
        for u in 0..5 {
            for v in 0..3 {
                assert_eq!(
                    p.degree(u * 3 + v),
                    (g.degree(u) + 1) * (h.degree(v) + 1) - 1
                );
            }
        }
    }

    #[test]
    fn k2_squared_is_k4() {
        let p = strong_product(&OrthoGraph::complete(2), &OrthoGraph::complete(2));
        assert_eq!(p.edge_count(), 6);
    }
}
