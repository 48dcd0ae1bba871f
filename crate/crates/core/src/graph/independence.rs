use super::{BitSet, OrthoGraph};

/// α(G) together with one maximum independent set (original vertex ids, ascending).
///
/// Returns `None` if the search visits more than `node_budget` nodes.
pub fn independence_number(
    g: &OrthoGraph,
    node_budget: Option<u64>,
) -> Option<(usize, Vec<usize>)> {
    let (size, mut set) = max_clique(&g.complement(), node_budget)?;
    set.sort_unstable();
    Some((size, set))
}

/// Branch and bound maximum clique with greedy-coloring bounds on bitsets.
///
/// Vertices are renumbered in a degeneracy order so that the coloring sweep
/// visits dense cores first; results are mapped back before returning.
pub(crate) fn max_clique(g: &OrthoGraph, node_budget: Option<u64>) -> Option<(usize, Vec<usize>)> {
    let n = g.n();
    if n == 0 {
        return Some((0, Vec::new()));
    }
    let order = degeneracy_order(g);
    let mut position = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    let adj: Vec<BitSet> = order
        .iter()
        .map(|&v| BitSet::from_indices(n, g.neighbors(v).iter().map(|w| position[w])))
        .collect();

    let mut search = Search {
        adj: &adj,
        best: Vec::new(),
        current: Vec::new(),
        nodes: 0,
        budget: node_budget,
    };
    search.best = greedy_clique(&adj, n);
    if !search.expand(BitSet::full(n)) {
        return None;
    }
    let clique = search.best.iter().map(|&i| order[i]).collect::<Vec<_>>();
    Some((clique.len(), clique))
}

struct Search<'a> {
    adj: &'a [BitSet],
    best: Vec<usize>,
    current: Vec<usize>,
    nodes: u64,
    budget: Option<u64>,
}

impl Search<'_> {
    fn expand(&mut self, mut p: BitSet) -> bool {
        self.nodes += 1;
        if self.budget.is_some_and(|b| self.nodes > b) {
            return false;
        }
        let (order, colors) = self.color_sort(&p);
        for i in (0..order.len()).rev() {
            if self.current.len() + colors[i] <= self.best.len() {
                return true;
            }
            let v = order[i];
            self.current.push(v);
            let next = p.intersection(&self.adj[v]);
            if next.is_empty() {
                if self.current.len() > self.best.len() {
                    self.best = self.current.clone();
                }
            } else if !self.expand(next) {
                return false;
            }
            self.current.pop();
            p.remove(v);
        }
        true
    }

    /// Greedy sequential coloring of `p`; vertices come back grouped by color.
    fn color_sort(&self, p: &BitSet) -> (Vec<usize>, Vec<usize>) {
        let mut order = Vec::with_capacity(p.len());
        let mut colors = Vec::with_capacity(p.len());
        let mut uncolored = p.clone();
        let mut color = 0;
        while !uncolored.is_empty() {
            color += 1;
            let mut q = uncolored.clone();
            while let Some(v) = q.first() {
                uncolored.remove(v);
                q.remove(v);
                q.difference_with(&self.adj[v]);
                order.push(v);
                colors.push(color);
            }
        }
        (order, colors)
    }
}

fn greedy_clique(adj: &[BitSet], n: usize) -> Vec<usize> {
    let mut clique = Vec::new();
    let mut cand = BitSet::full(n);
    while let Some(v) = cand
        .iter()
        .max_by_key(|&v| (cand.intersection_len(&adj[v]), std::cmp::Reverse(v)))
    {
        clique.push(v);
        cand.intersect_with(&adj[v]);
    }
    clique
}

/// Vertices ordered so that repeatedly-peeled minimum-degree vertices go last.
fn degeneracy_order(g: &OrthoGraph) -> Vec<usize> {
    let n = g.n();
    let mut alive = BitSet::full(n);
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut peeled = Vec::with_capacity(n);
    for _ in 0..n {
        let v = alive
            .iter()
            .min_by_key(|&v| (deg[v], v))
            .expect("alive is non-empty");
        alive.remove(v);
        for w in g.neighbors(v).iter() {
            if alive.contains(w) {
                deg[w] -= 1;
            }
        }
        peeled.push(v);
    }
    peeled.reverse();
    peeled
}
