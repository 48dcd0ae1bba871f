//! Brute-force oracles shared by the integration tests. Everything here is
//! written from the definitions and only meant for small inputs.
#![allow(dead_code)]

use proptest::prelude::*;
use qks_core::graph::OrthoGraph;

pub fn adjacency(g: &OrthoGraph) -> Vec<u32> {
    (0..g.n())
        .map(|u| {
            (0..g.n())
                .filter(|&v| g.is_adjacent(u, v))
                .fold(0, |m, v| m | 1 << v)
        })
        .collect()
}

fn is_clique_mask(adj: &[u32], mask: u32) -> bool {
    (0..adj.len())
        .filter(|&v| mask >> v & 1 == 1)
        .all(|v| mask & !(1 << v) & !adj[v] == 0)
}

/// Inclusion-maximal cliques by scanning every subset (n <= 16).
pub fn maximal_cliques(g: &OrthoGraph) -> Vec<Vec<usize>> {
    let adj = adjacency(g);
    let n = g.n();
    let mut out = Vec::new();
    for mask in 1u32..1 << n {
        if !is_clique_mask(&adj, mask) {
            continue;
        }
        let extendable = (0..n).any(|v| mask >> v & 1 == 0 && mask & !adj[v] == 0);
        if !extendable {
            out.push((0..n).filter(|&v| mask >> v & 1 == 1).collect());
        }
    }
    out.sort();
    out
}

/// True when no 0/1 assignment avoids adjacent 1s and all-0 contexts.
pub fn contextual(g: &OrthoGraph, contexts: &[Vec<usize>]) -> bool {
    let adj = adjacency(g);
    let masks: Vec<u32> = contexts
        .iter()
        .map(|c| c.iter().fold(0, |m, &v| m | 1 << v))
        .collect();
    !(0u32..1 << g.n()).any(|a| {
        (0..g.n()).all(|v| a >> v & 1 == 0 || a & adj[v] == 0) && masks.iter().all(|&m| a & m != 0)
    })
}

pub fn independence_number(g: &OrthoGraph) -> usize {
    let adj = adjacency(g);
    (0u32..1 << g.n())
        .filter(|&m| (0..g.n()).all(|v| m >> v & 1 == 0 || m & adj[v] == 0))
        .map(u32::count_ones)
        .max()
        .unwrap_or(0) as usize
}

pub fn clique_number(g: &OrthoGraph) -> usize {
    let adj = adjacency(g);
    (0u32..1 << g.n())
        .filter(|&m| is_clique_mask(&adj, m))
        .map(u32::count_ones)
        .max()
        .unwrap_or(0) as usize
}

/// Smallest k admitting a proper coloring, by trying all k-colorings in order.
pub fn chromatic_number(g: &OrthoGraph) -> usize {
    let n = g.n();
    if n == 0 {
        return 0;
    }
    fn fits(g: &OrthoGraph, k: usize, colors: &mut Vec<usize>) -> bool {
        let v = colors.len();
        if v == g.n() {
            return true;
        }
        for c in 0..k {
            if (0..v).all(|u| !g.is_adjacent(u, v) || colors[u] != c) {
                colors.push(c);
                if fits(g, k, colors) {
                    return true;
                }
                colors.pop();
            }
        }
        false
    }
    (1..=n).find(|&k| fits(g, k, &mut Vec::new())).unwrap()
}

/// |Aut(G)| by checking all n! permutations (n <= 8).
pub fn automorphism_count(g: &OrthoGraph) -> u64 {
    fn go(g: &OrthoGraph, perm: &mut Vec<usize>, used: &mut Vec<bool>) -> u64 {
        let k = perm.len();
        if k == g.n() {
            return 1;
        }
        let mut total = 0;
        for w in 0..g.n() {
            if used[w] || (0..k).any(|u| g.is_adjacent(u, k) != g.is_adjacent(perm[u], w)) {
                continue;
            }
            used[w] = true;
            perm.push(w);
            total += go(g, perm, used);
            perm.pop();
            used[w] = false;
        }
        total
    }
    go(g, &mut Vec::new(), &mut vec![false; g.n()])
}

pub fn is_prime(q: u32) -> bool {
    q >= 2
        && (2..q)
            .take_while(|d| d * d <= q)
            .all(|d| !q.is_multiple_of(d))
}

/// Random simple graph on 1..=max_n vertices, each edge present independently.
pub fn arb_graph(max_n: usize) -> impl Strategy<Value = OrthoGraph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            let edges = pairs.zip(bits).filter(|&(_, b)| b).map(|(e, _)| e);
            OrthoGraph::from_edges(n, edges).unwrap()
        })
    })
}
