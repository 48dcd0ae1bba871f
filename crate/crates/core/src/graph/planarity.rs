//! Planarity by exhaustive Kuratowski subdivision search.
//!
//! A graph is non-planar exactly when it contains a subdivision of K5 or K3,3.
//! Every choice of branch vertices inside each biconnected block is tried and
//! the connecting paths are routed by backtracking, so a `Planar` verdict
//! means no subdivision exists. Intended for the small graphs (n <= 32) this
//! crate works with.

use serde::Serialize;

use super::{BitSet, OrthoGraph};
use crate::error::{Error, Result};

pub const PLANARITY_LIMIT: usize = 32;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum KuratowskiKind {
    K5,
    K33,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Obstruction {
    pub kind: KuratowskiKind,
    /// For K3,3 the first three are one side.
    pub branch_vertices: Vec<usize>,
    /// Every edge of the subdivision, `(u, v)` with `u < v`, sorted.
    pub edges: Vec<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Planarity {
    Planar,
    NonPlanar(Obstruction),
}

impl Planarity {
    pub fn is_planar(&self) -> bool {
        matches!(self, Planarity::Planar)
    }
}

pub fn planarity(g: &OrthoGraph) -> Result<Planarity> {
    if g.n() > PLANARITY_LIMIT {
        return Err(Error::TooLarge {
            n: g.n(),
            limit: PLANARITY_LIMIT,
        });
    }
    for block in biconnected_blocks(g) {
        if block.len() < 5 {
            continue;
        }
        if let Some(obs) = search_block(g, &block) {
            return Ok(Planarity::NonPlanar(obs));
        }
    }
    Ok(Planarity::Planar)
}

fn search_block(g: &OrthoGraph, block: &[usize]) -> Option<Obstruction> {
    let members = BitSet::from_indices(g.n(), block.iter().copied());
    let block_degree = |v: usize| g.neighbors(v).intersection_len(&members);

    let k5_candidates: Vec<usize> = block
        .iter()
        .copied()
        .filter(|&v| block_degree(v) >= 4)
        .collect();
    let mut found = None;
    for_each_combination(&k5_candidates, 5, &mut |branch| {
        let pairs: Vec<(usize, usize)> = (0..5)
            .flat_map(|i| (i + 1..5).map(move |j| (i, j)))
            .map(|(i, j)| (branch[i], branch[j]))
            .collect();
        if let Some(edges) = route_all(g, &members, branch, &pairs) {
            found = Some(Obstruction {
                kind: KuratowskiKind::K5,
                branch_vertices: branch.to_vec(),
                edges,
            });
            return true;
        }
        false
    });
    if found.is_some() {
        return found;
    }

    let k33_candidates: Vec<usize> = block
        .iter()
        .copied()
        .filter(|&v| block_degree(v) >= 3)
        .collect();
    for_each_combination(&k33_candidates, 6, &mut |six| {
        // the first vertex always sits on side A, so each split is seen once
        let rest = &six[1..];
        let mut hit = false;
        for_each_combination(rest, 2, &mut |pick| {
            let side_a = [six[0], pick[0], pick[1]];
            let side_b: Vec<usize> = rest.iter().copied().filter(|v| !pick.contains(v)).collect();
            let sides_ok = side_a.iter().all(|&a| {
                g.neighbors(a).intersection_len(&members)
                    - side_a.iter().filter(|&&x| g.is_adjacent(a, x)).count()
                    >= 3
            });
            if !sides_ok {
                return false;
            }
            let pairs: Vec<(usize, usize)> = side_a
                .iter()
                .flat_map(|&a| side_b.iter().map(move |&b| (a, b)))
                .collect();
            if let Some(edges) = route_all(g, &members, six, &pairs) {
                let mut branch = side_a.to_vec();
                branch.extend(&side_b);
                found = Some(Obstruction {
                    kind: KuratowskiKind::K33,
                    branch_vertices: branch,
                    edges,
                });
                hit = true;
                return true;
            }
            false
        });
        hit
    });
    found
}

/// Internally disjoint paths joining every pair, interiors avoiding branch vertices.
fn route_all(
    g: &OrthoGraph,
    members: &BitSet,
    branch: &[usize],
    pairs: &[(usize, usize)],
) -> Option<Vec<(usize, usize)>> {
    let branch_set = BitSet::from_indices(g.n(), branch.iter().copied());
    let mut free = members.difference(&branch_set);
    // direct edges can never hurt another pair, so route them first
    let mut ordered: Vec<(usize, usize)> = pairs.to_vec();
    ordered.sort_by_key(|&(a, b)| !g.is_adjacent(a, b));

    let mut paths: Vec<Vec<usize>> = Vec::with_capacity(pairs.len());
    if !route(g, &ordered, 0, &mut free, &mut paths) {
        return None;
    }
    let mut edges: Vec<(usize, usize)> = paths
        .iter()
        .flat_map(|p| p.windows(2).map(|w| (w[0].min(w[1]), w[0].max(w[1]))))
        .collect();
    edges.sort_unstable();
    edges.dedup();
    Some(edges)
}

fn route(
    g: &OrthoGraph,
    pairs: &[(usize, usize)],
    idx: usize,
    free: &mut BitSet,
    paths: &mut Vec<Vec<usize>>,
) -> bool {
    let Some(&(a, b)) = pairs.get(idx) else {
        return true;
    };
    if g.is_adjacent(a, b) {
        paths.push(vec![a, b]);
        if route(g, pairs, idx + 1, free, paths) {
            return true;
        }
        paths.pop();
        return false;
    }
    let mut path = vec![a];
    walk(g, pairs, idx, b, free, &mut path, paths)
}

fn walk(
    g: &OrthoGraph,
    pairs: &[(usize, usize)],
    idx: usize,
    target: usize,
    free: &mut BitSet,
    path: &mut Vec<usize>,
    paths: &mut Vec<Vec<usize>>,
) -> bool {
    let tip = *path.last().expect("path starts at a branch vertex");
    if path.len() > 1 && g.is_adjacent(tip, target) {
        path.push(target);
        paths.push(path.clone());
        if route(g, pairs, idx + 1, free, paths) {
            return true;
        }
        paths.pop();
        path.pop();
    }
    let next = g.neighbors(tip).intersection(free);
    for v in next.iter() {
        free.remove(v);
        path.push(v);
        if walk(g, pairs, idx, target, free, path, paths) {
            return true;
        }
        path.pop();
        free.insert(v);
    }
    false
}

/// Calls `f` on each k-subset of `items` in lexicographic order until it returns true.
fn for_each_combination(items: &[usize], k: usize, f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
    fn rec(
        items: &[usize],
        k: usize,
        start: usize,
        cur: &mut Vec<usize>,
        f: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        if cur.len() == k {
            return f(cur);
        }
        let need = k - cur.len();
        for i in start..items.len() {
            if items.len() - i < need {
                break;
            }
            cur.push(items[i]);
            if rec(items, k, i + 1, cur, f) {
                return true;
            }
            cur.pop();
        }
        false
    }
    if items.len() < k {
        return false;
    }
    rec(items, k, 0, &mut Vec::with_capacity(k), f)
}

/// Vertex sets of the biconnected blocks (bridges give 2-vertex blocks).
fn biconnected_blocks(g: &OrthoGraph) -> Vec<Vec<usize>> {
    struct Dfs<'a> {
        g: &'a OrthoGraph,
        disc: Vec<usize>,
        low: Vec<usize>,
        time: usize,
        stack: Vec<(usize, usize)>,
        blocks: Vec<Vec<usize>>,
    }
    impl Dfs<'_> {
        fn visit(&mut self, u: usize, parent: Option<usize>) {
            self.time += 1;
            self.disc[u] = self.time;
            self.low[u] = self.time;
            for v in self.g.neighbors(u).iter() {
                if self.disc[v] == 0 {
                    self.stack.push((u, v));
                    self.visit(v, Some(u));
                    self.low[u] = self.low[u].min(self.low[v]);
                    if self.low[v] >= self.disc[u] {
                        let mut block = Vec::new();
                        while let Some((a, b)) = self.stack.pop() {
                            block.push(a);
                            block.push(b);
                            if (a, b) == (u, v) {
                                break;
                            }
                        }
                        block.sort_unstable();
                        block.dedup();
                        self.blocks.push(block);
                    }
                } else if Some(v) != parent && self.disc[v] < self.disc[u] {
                    self.stack.push((u, v));
                    self.low[u] = self.low[u].min(self.disc[v]);
                }
            }
        }
    }
    let n = g.n();
    let mut dfs = Dfs {
        g,
        disc: vec![0; n],
        low: vec![0; n],
        time: 0,
        stack: Vec::new(),
        blocks: Vec::new(),
    };
    for v in 0..n {
        if dfs.disc[v] == 0 {
            dfs.visit(v, None);
        }
    }
    dfs.blocks.sort();
    dfs.blocks
}

/// Independent check that `obs` is a subdivision of its claimed Kuratowski graph
/// and that all of its edges belong to `g`.
pub fn verify_subdivision(g: &OrthoGraph, obs: &Obstruction) -> bool {
    let n = g.n();
    if obs
        .edges
        .iter()
        .any(|&(u, v)| u >= n || v >= n || !g.is_adjacent(u, v))
    {
        return false;
    }
    let mut h = OrthoGraph::empty(n);
    for &(u, v) in &obs.edges {
        h.connect(u, v);
    }
    let (branch_count, branch_degree) = match obs.kind {
        KuratowskiKind::K5 => (5, 4),
        KuratowskiKind::K33 => (6, 3),
    };
    let touched: Vec<usize> = (0..n).filter(|&v| h.degree(v) > 0).collect();
    let branch: Vec<usize> = touched
        .iter()
        .copied()
        .filter(|&v| h.degree(v) != 2)
        .collect();
    if branch.len() != branch_count || branch.iter().any(|&v| h.degree(v) != branch_degree) {
        return false;
    }
    let mut claimed = obs.branch_vertices.clone();
    claimed.sort_unstable();
    if claimed != branch {
        return false;
    }

    // Follow each path out of each branch vertex to its other end.
    let is_branch = |v: usize| branch.binary_search(&v).is_ok();
    let mut visited_interior = BitSet::new(n);
    let mut links = Vec::new();
    for &b in &branch {
        for first in h.neighbors(b).iter() {
            let (mut prev, mut cur) = (b, first);
            while !is_branch(cur) {
                visited_interior.insert(cur);
                let next = h
                    .neighbors(cur)
                    .iter()
                    .find(|&w| w != prev)
                    .expect("interior vertices have degree 2");
                prev = cur;
                cur = next;
            }
            if cur == b {
                return false;
            }
            if b < cur {
                links.push((b, cur));
            }
        }
    }
    // no stray cycles made only of degree-2 vertices
    if touched
        .iter()
        .any(|&v| !is_branch(v) && !visited_interior.contains(v))
    {
        return false;
    }
    links.sort_unstable();
    let before = links.len();
    links.dedup();
    if links.len() != before {
        return false;
    }
    match obs.kind {
        KuratowskiKind::K5 => links.len() == 10,
        KuratowskiKind::K33 => {
            if links.len() != 9 {
                return false;
            }
            let side_a = &obs.branch_vertices[..3];
            let side_b = &obs.branch_vertices[3..];
            side_a.iter().all(|&a| {
                side_b
                    .iter()
                    .all(|&b| links.contains(&(a.min(b), a.max(b))))
            })
        }
    }
}
