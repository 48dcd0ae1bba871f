use serde::Serialize;

use super::OrthoGraph;
use crate::error::{Error, Result};

pub const AUTOMORPHISM_LIMIT: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AutomorphismGroup {
    pub order: u64,
    /// Each generator maps vertex `v` to `generator[v]`.
    pub generators: Vec<Vec<usize>>,
}

/// Order and a generating set of Aut(G), for `n <= 16`.
///
/// Walks the pointwise stabilizer chain of `0, 1, .., n-1`. At level `i` the
/// orbit of `i` under the stabilizer of `0..i` is grown from the generators
/// already known; each remaining candidate image is settled by a backtracking
/// search for an automorphism fixing the prefix. The group order is the
/// product of the orbit lengths.
pub fn automorphism_group(g: &OrthoGraph) -> Result<AutomorphismGroup> {
    let n = g.n();
    if n > AUTOMORPHISM_LIMIT {
        return Err(Error::TooLarge {
            n,
            limit: AUTOMORPHISM_LIMIT,
        });
    }
    let mut generators: Vec<Vec<usize>> = Vec::new();
    let mut order: u64 = 1;
    for level in (0..n).rev() {
        let mut orbit = orbit_of(level, &generators, n);
        for w in level + 1..n {
            if orbit[w] || g.degree(w) != g.degree(level) {
                continue;
            }
            if let Some(perm) = find_mapping(g, level, w) {
                generators.push(perm);
                orbit = orbit_of(level, &generators, n);
            }
        }
        order *= orbit.iter().filter(|&&b| b).count() as u64;
    }
    // deepest-level generators were found first; list them shallow-first
    generators.reverse();
    Ok(AutomorphismGroup { order, generators })
}

/// True when `perm` is a permutation of the vertices preserving adjacency.
pub fn is_automorphism(g: &OrthoGraph, perm: &[usize]) -> bool {
    let n = g.n();
    if perm.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &p in perm {
        if p >= n || seen[p] {
            return false;
        }
        seen[p] = true;
    }
    g.edges()
        .iter()
        .all(|&(u, v)| g.is_adjacent(perm[u], perm[v]))
}

fn orbit_of(point: usize, generators: &[Vec<usize>], n: usize) -> Vec<bool> {
    let mut orbit = vec![false; n];
    orbit[point] = true;
    let mut stack = vec![point];
    while let Some(p) = stack.pop() {
        for gen in generators {
            let q = gen[p];
            if !orbit[q] {
                orbit[q] = true;
                stack.push(q);
            }
        }
    }
    orbit
}

/// Automorphism fixing `0..level` pointwise and sending `level` to `target`.
fn find_mapping(g: &OrthoGraph, level: usize, target: usize) -> Option<Vec<usize>> {
    let n = g.n();
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    for v in 0..level {
        image[v] = v;
        used[v] = true;
    }
    image[level] = target;
    used[target] = true;
    if !consistent(g, &image, level) {
        return None;
    }
    extend(g, &mut image, &mut used, level + 1).then_some(image)
}

fn consistent(g: &OrthoGraph, image: &[usize], v: usize) -> bool {
    (0..v).all(|u| g.is_adjacent(u, v) == g.is_adjacent(image[u], image[v]))
}

fn extend(g: &OrthoGraph, image: &mut [usize], used: &mut [bool], v: usize) -> bool {
    if v == g.n() {
        return true;
    }
    for w in 0..g.n() {
        if used[w] || g.degree(w) != g.degree(v) {
            continue;
        }
        image[v] = w;
        if consistent(g, image, v) {
            used[w] = true;
            if extend(g, image, used, v + 1) {
                return true;
            }
            used[w] = false;
        }
    }
    image[v] = usize::MAX;
    false
}
