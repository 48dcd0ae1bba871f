use super::{BitSet, OrthoGraph};

/// All inclusion-maximal cliques (Bron–Kerbosch with Tomita pivoting).
///
/// Each clique is sorted ascending and the list is sorted lexicographically.
/// Isolated vertices come back as singletons.
pub fn maximal_cliques(g: &OrthoGraph) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if g.n() == 0 {
        return out;
    }
    let mut r = Vec::new();
    expand(
        g,
        &mut r,
        BitSet::full(g.n()),
        BitSet::new(g.n()),
        &mut |c| {
            out.push(c.to_vec());
            true
        },
    );
    normalize(out)
}

/// All cliques of maximum cardinality, sorted like [`maximal_cliques`].
pub fn maximum_cliques(g: &OrthoGraph) -> Vec<Vec<usize>> {
    let mut best: Vec<Vec<usize>> = Vec::new();
    let mut best_size = 0usize;
    if g.n() == 0 {
        return best;
    }
    let mut r = Vec::new();
    bounded(
        g,
        &mut r,
        BitSet::full(g.n()),
        BitSet::new(g.n()),
        &mut best_size,
        &mut best,
    );
    normalize(best)
}

/// ω(G).
pub fn clique_number(g: &OrthoGraph) -> usize {
    maximum_cliques(g).first().map_or(0, Vec::len)
}

fn normalize(mut cliques: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    for c in &mut cliques {
        c.sort_unstable();
    }
    cliques.sort();
    cliques
}

fn pivot(g: &OrthoGraph, p: &BitSet, x: &BitSet) -> Option<usize> {
    p.iter()
        .chain(x.iter())
        .max_by_key(|&u| (p.intersection_len(g.neighbors(u)), std::cmp::Reverse(u)))
}

/// Classic pivoted recursion; `emit` returns false to stop early.
fn expand(
    g: &OrthoGraph,
    r: &mut Vec<usize>,
    mut p: BitSet,
    mut x: BitSet,
    emit: &mut dyn FnMut(&[usize]) -> bool,
) -> bool {
    if p.is_empty() {
        if x.is_empty() {
            return emit(r);
        }
        return true;
    }
    let u = pivot(g, &p, &x).expect("P is non-empty");
    let candidates = p.difference(g.neighbors(u));
    for v in candidates.iter() {
        r.push(v);
        let keep_going = expand(
            g,
            r,
            p.intersection(g.neighbors(v)),
            x.intersection(g.neighbors(v)),
            emit,
        );
        r.pop();
        if !keep_going {
            return false;
        }
        p.remove(v);
        x.insert(v);
    }
    true
}

fn bounded(
    g: &OrthoGraph,
    r: &mut Vec<usize>,
    mut p: BitSet,
    mut x: BitSet,
    best_size: &mut usize,
    best: &mut Vec<Vec<usize>>,
) {
    if r.len() + p.len() < *best_size {
        return;
    }
    if p.is_empty() {
        if x.is_empty() {
            if r.len() > *best_size {
                *best_size = r.len();
                best.clear();
            }
            best.push(r.clone());
        }
        return;
    }
    let u = pivot(g, &p, &x).expect("P is non-empty");
    let candidates = p.difference(g.neighbors(u));
    for v in candidates.iter() {
        if r.len() + p.len() < *best_size {
            return;
        }
        r.push(v);
        bounded(
            g,
            r,
            p.intersection(g.neighbors(v)),
            x.intersection(g.neighbors(v)),
            best_size,
            best,
        );
        r.pop();
        p.remove(v);
        x.insert(v);
    }
}
