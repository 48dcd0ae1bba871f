//! Kochen–Specker 0/1 assignments on orthogonality graphs.
//!
//! Contexts are the inclusion-maximal cliques. An assignment is admissible
//! when no edge carries two 1s and no context is all 0s; a graph with no
//! admissible assignment is contextual.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{maximal_cliques, OrthoGraph};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KSVerdict {
    pub contextual: bool,
    /// Present iff `contextual` is false.
    pub witness: Option<Vec<u8>>,
    pub explored_nodes: u64,
    pub contexts: usize,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct KsOptions {
    /// Abort with [`Error::BudgetExceeded`] after this many search nodes.
    pub node_budget: Option<u64>,
}

/// Checks both admissibility conditions directly against `contexts` and the edges.
pub fn is_valid_witness(g: &OrthoGraph, contexts: &[Vec<usize>], witness: &[u8]) -> bool {
    witness.len() == g.n()
        && witness.iter().all(|&x| x <= 1)
        && g.edges()
            .iter()
            .all(|&(u, v)| !(witness[u] == 1 && witness[v] == 1))
        && contexts.iter().all(|c| c.iter().any(|&v| witness[v] == 1))
}

pub fn ks_check(g: &OrthoGraph) -> KSVerdict {
    ks_check_with(g, KsOptions::default()).expect("no budget set")
}

/// Complete backtracking search with unit propagation.
///
/// Setting a vertex to 1 zeroes its neighbours; a context whose members are
/// all 0 but one forces that one to 1; an all-0 context is a conflict.
/// Branching picks the undecided vertex of largest degree (lowest index on
/// ties) and tries 1 before 0, so the first witness found is deterministic.
pub fn ks_check_with(g: &OrthoGraph, options: KsOptions) -> Result<KSVerdict> {
    ks_check_contexts(g, &maximal_cliques(g), options)
}

/// Same search with caller-supplied contexts (e.g. only the edges of a cycle,
/// or a printed relation list). Each context must be a clique of `g`.
pub fn ks_check_contexts(
    g: &OrthoGraph,
    contexts: &[Vec<usize>],
    options: KsOptions,
) -> Result<KSVerdict> {
    if let Some(c) = contexts
        .iter()
        .find(|c| c.is_empty() || c.iter().any(|&v| v >= g.n()) || !g.is_clique(c))
    {
        return Err(Error::InvalidArgument(format!(
            "context {c:?} is not a clique of the graph"
        )));
    }
    let mut membership = vec![Vec::new(); g.n()];
    for (i, c) in contexts.iter().enumerate() {
        for &v in c {
            membership[v].push(i);
        }
    }
    let mut search = Search {
        g,
        contexts,
        membership: &membership,
        nodes: 0,
        budget: options.node_budget,
    };
    let mut root = State {
        value: vec![UNSET; g.n()],
        zeros: vec![0; contexts.len()],
        ones: vec![0; contexts.len()],
    };
    let singletons: Vec<usize> = contexts
        .iter()
        .filter(|c| c.len() == 1)
        .map(|c| c[0])
        .collect();
    let mut witness = None;
    if singletons.iter().all(|&v| search.assign(&mut root, v, ONE)) {
        witness = search.solve(root)?;
    }
    Ok(KSVerdict {
        contextual: witness.is_none(),
        witness,
        explored_nodes: search.nodes,
        contexts: contexts.len(),
    })
}

const UNSET: u8 = 2;
const ZERO: u8 = 0;
const ONE: u8 = 1;

#[derive(Clone)]
struct State {
    value: Vec<u8>,
    zeros: Vec<u32>,
    ones: Vec<u32>,
}

struct Search<'a> {
    g: &'a OrthoGraph,
    contexts: &'a [Vec<usize>],
    membership: &'a [Vec<usize>],
    nodes: u64,
    budget: Option<u64>,
}

impl Search<'_> {
    fn solve(&mut self, state: State) -> Result<Option<Vec<u8>>> {
        self.nodes += 1;
        if let Some(b) = self.budget {
            if self.nodes > b {
                return Err(Error::BudgetExceeded(format!(
                    "KS search exceeded {b} nodes"
                )));
            }
        }
        let pick = (0..self.g.n())
            .filter(|&v| state.value[v] == UNSET)
            .max_by_key(|&v| (self.g.degree(v), std::cmp::Reverse(v)));
        let Some(v) = pick else {
            return Ok(Some(state.value));
        };
        for bit in [ONE, ZERO] {
            let mut next = state.clone();
            if self.assign(&mut next, v, bit) {
                if let Some(w) = self.solve(next)? {
                    return Ok(Some(w));
                }
            }
        }
        Ok(None)
    }

    /// Assigns and propagates; false on conflict.
    fn assign(&self, state: &mut State, v: usize, bit: u8) -> bool {
        let mut queue = vec![(v, bit)];
        while let Some((v, bit)) = queue.pop() {
            match state.value[v] {
                UNSET => {}
                current if current == bit => continue,
                _ => return false,
            }
            state.value[v] = bit;
            if bit == ONE {
                for &c in &self.membership[v] {
                    state.ones[c] += 1;
                }
                for w in self.g.neighbors(v).iter() {
                    match state.value[w] {
                        ONE => return false,
                        UNSET => queue.push((w, ZERO)),
                        _ => {}
                    }
                }
            } else {
                for &c in &self.membership[v] {
                    state.zeros[c] += 1;
                    let size = self.contexts[c].len() as u32;
                    if state.ones[c] > 0 {
                        continue;
                    }
                    if state.zeros[c] == size {
                        return false;
                    }
                    if state.zeros[c] + 1 == size {
                        if let Some(&last) =
                            self.contexts[c].iter().find(|&&u| state.value[u] == UNSET)
                        {
                            queue.push((last, ONE));
                        }
                    }
                }
            }
        }
        true
    }
}

/// Removal-minimal contextual vertex subset.
///
/// Vertices are tried for deletion in ascending index order, keeping a
/// deletion whenever the induced graph (contexts recomputed) stays
/// contextual. Passes repeat until none succeeds, so deleting any single
/// remaining vertex leaves a non-contextual graph.
pub fn minimize_contextual(g: &OrthoGraph) -> Result<Vec<usize>> {
    if !ks_check(g).contextual {
        return Err(Error::NotContextual);
    }
    let mut kept: Vec<usize> = (0..g.n()).collect();
    loop {
        let mut changed = false;
        let mut i = 0;
        while i < kept.len() {
            let mut trial = kept.clone();
            trial.remove(i);
            if ks_check(&g.induced_subgraph(&trial)?).contextual {
                kept = trial;
                changed = true;
            } else {
                i += 1;
            }
        }
        if !changed {
            return Ok(kept);
        }
    }
}
