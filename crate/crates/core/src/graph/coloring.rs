use serde::Serialize;

use super::independence::max_clique;
use super::OrthoGraph;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Coloring {
    pub chromatic_number: usize,
    /// Color of each vertex, `0..chromatic_number`.
    pub colors: Vec<usize>,
}

impl Coloring {
    pub fn is_proper(&self, g: &OrthoGraph) -> bool {
        g.edges()
            .iter()
            .all(|&(u, v)| self.colors[u] != self.colors[v])
    }
}

/// Exact chromatic number by DSATUR branch and bound.
///
/// A maximum clique is pre-colored to seed the lower bound; the search stops as
/// soon as a coloring meets that bound.
pub fn chromatic_number(g: &OrthoGraph) -> Coloring {
    let n = g.n();
    if n == 0 {
        return Coloring {
            chromatic_number: 0,
            colors: Vec::new(),
        };
    }
    let (omega, clique) = max_clique(g, None).expect("unbounded search");

    let mut state = Dsatur::new(g);
    let mut sorted_clique = clique.clone();
    sorted_clique.sort_unstable();
    for (c, &v) in sorted_clique.iter().enumerate() {
        state.assign(v, c);
    }

    let greedy = state.clone().greedy();
    let mut best = Best {
        k: greedy.iter().max().map_or(0, |&c| c + 1),
        colors: greedy,
        lower: omega,
    };
    if best.k > best.lower {
        state.branch(omega, &mut best);
    }
    Coloring {
        chromatic_number: best.k,
        colors: best.colors,
    }
}

struct Best {
    k: usize,
    colors: Vec<usize>,
    lower: usize,
}

#[derive(Clone)]
struct Dsatur<'a> {
    g: &'a OrthoGraph,
    color: Vec<Option<usize>>,
    /// `neighbor_colors[v][c]` = number of colored neighbors of v with color c.
    neighbor_colors: Vec<Vec<u32>>,
    saturation: Vec<usize>,
    uncolored: usize,
}

impl<'a> Dsatur<'a> {
    fn new(g: &'a OrthoGraph) -> Self {
        let n = g.n();
        Self {
            g,
            color: vec![None; n],
            neighbor_colors: vec![vec![0; n]; n],
            saturation: vec![0; n],
            uncolored: n,
        }
    }

    fn assign(&mut self, v: usize, c: usize) {
        self.color[v] = Some(c);
        self.uncolored -= 1;
        for w in self.g.neighbors(v).iter() {
            let slot = &mut self.neighbor_colors[w][c];
            if *slot == 0 {
                self.saturation[w] += 1;
            }
            *slot += 1;
        }
    }

    fn unassign(&mut self, v: usize) {
        let c = self.color[v].take().expect("vertex is colored");
        self.uncolored += 1;
        for w in self.g.neighbors(v).iter() {
            let slot = &mut self.neighbor_colors[w][c];
            *slot -= 1;
            if *slot == 0 {
                self.saturation[w] -= 1;
            }
        }
    }

    /// Max saturation, then max uncolored degree, then lowest index.
    fn select(&self) -> Option<usize> {
        (0..self.g.n())
            .filter(|&v| self.color[v].is_none())
            .max_by_key(|&v| {
                let free_degree = self
                    .g
                    .neighbors(v)
                    .iter()
                    .filter(|&w| self.color[w].is_none())
                    .count();
                (self.saturation[v], free_degree, std::cmp::Reverse(v))
            })
    }

    fn greedy(mut self) -> Vec<usize> {
        while let Some(v) = self.select() {
            let c = (0..)
                .find(|&c| self.neighbor_colors[v][c] == 0)
                .expect("some color is free");
            self.assign(v, c);
        }
        self.color
            .into_iter()
            .map(|c| c.expect("all colored"))
            .collect()
    }

    fn branch(&mut self, used: usize, best: &mut Best) -> bool {
        let Some(v) = self.select() else {
            best.k = used;
            best.colors = self.color.iter().map(|c| c.expect("all colored")).collect();
            return best.k == best.lower;
        };
        // colors 0..used plus one fresh color, as long as it beats the incumbent
        let limit = (used + 1).min(best.k - 1);
        for c in 0..limit {
            if used.max(c + 1) >= best.k {
                break;
            }
            if self.neighbor_colors[v][c] != 0 {
                continue;
            }
            self.assign(v, c);
            let done = self.branch(used.max(c + 1), best);
            self.unassign(v);
            if done {
                return true;
            }
        }
        false
    }
}
