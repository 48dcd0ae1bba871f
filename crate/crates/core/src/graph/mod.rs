//! Exact algorithms on small undirected graphs.
//!
//! Every routine here is exhaustive: the sizes involved (tens of vertices,
//! a few hundred for products and commutation graphs) make exact answers
//! affordable, and every downstream claim is an exact number.

mod automorphism;
mod bitset;
mod cliques;
mod coloring;
mod independence;
mod planarity;
mod product;
mod spectrum;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use automorphism::{
    automorphism_group, is_automorphism, AutomorphismGroup, AUTOMORPHISM_LIMIT,
};
pub use bitset::BitSet;
pub use cliques::{clique_number, maximal_cliques, maximum_cliques};
pub use coloring::{chromatic_number, Coloring};
pub use independence::independence_number;
pub use planarity::{planarity, verify_subdivision, KuratowskiKind, Obstruction, Planarity};
pub use product::strong_product;
pub use spectrum::{characteristic_polynomial, poly_product, spectrum, SpectrumReport};

/// Undirected simple graph with bitset adjacency rows.
///
/// Vertices are `0..n`; `labels` carries the display name of each vertex
/// (1-based ray numbers by default).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrthoGraph {
    n: usize,
    labels: Vec<String>,
    adj: Vec<BitSet>,
}

impl OrthoGraph {
    pub fn empty(n: usize) -> Self {
        Self {
            n,
            labels: (1..=n).map(|i| i.to_string()).collect(),
            adj: vec![BitSet::new(n); n],
        }
    }

    /// Builds a graph from 0-based edges. Self-loops and out-of-range
    /// endpoints are rejected; duplicate edges are merged.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Self::empty(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.connect(u, v);
            }
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = Self::empty(n);
        if n >= 3 {
            for u in 0..n {
                g.connect(u, (u + 1) % n);
            }
        } else if n == 2 {
            g.connect(0, 1);
        }
        g
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        for w in [u, v] {
            if w >= self.n {
                return Err(Error::UnknownVertex {
                    vertex: w,
                    n: self.n,
                });
            }
        }
        if u == v {
            return Err(Error::InvalidArgument(format!("self-loop at vertex {u}")));
        }
        self.connect(u, v);
        Ok(())
    }

    #[inline]
    pub(crate) fn connect(&mut self, u: usize, v: usize) {
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n {
            return Err(Error::InvalidArgument(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.n
            )));
        }
        self.labels = labels;
        Ok(self)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &BitSet {
        &self.adj[v]
    }

    #[inline]
    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(BitSet::len).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|u| {
                self.adj[u]
                    .iter()
                    .filter(move |&v| v > u)
                    .map(move |v| (u, v))
            })
            .collect()
    }

    pub fn complement(&self) -> Self {
        let mut g = Self::empty(self.n);
        g.labels = self.labels.clone();
        let all = BitSet::full(self.n);
        for v in 0..self.n {
            let mut row = all.difference(&self.adj[v]);
            row.remove(v);
            g.adj[v] = row;
        }
        g
    }

    /// Subgraph induced on `vertices` (kept in the given order, labels preserved).
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Self> {
        let mut seen = BitSet::new(self.n);
        for &v in vertices {
            if v >= self.n {
                return Err(Error::UnknownVertex {
                    vertex: v,
                    n: self.n,
                });
            }
            if seen.contains(v) {
                return Err(Error::InvalidArgument(format!("vertex {v} listed twice")));
            }
            seen.insert(v);
        }
        let mut g = Self::empty(vertices.len());
        g.labels = vertices.iter().map(|&v| self.labels[v].clone()).collect();
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.is_adjacent(u, v) {
                    g.connect(i, j);
                }
            }
        }
        Ok(g)
    }

    /// Subgraph induced on every vertex except `removed`.
    pub fn without_vertices(&self, removed: &[usize]) -> Result<Self> {
        let drop = BitSet::from_indices(self.n, removed.iter().copied().filter(|&v| v < self.n));
        if let Some(&v) = removed.iter().find(|&&v| v >= self.n) {
            return Err(Error::UnknownVertex {
                vertex: v,
                n: self.n,
            });
        }
        let keep: Vec<usize> = (0..self.n).filter(|v| !drop.contains(*v)).collect();
        self.induced_subgraph(&keep)
    }

    /// Degree → number of vertices with that degree.
    pub fn degree_histogram(&self) -> BTreeMap<usize, usize> {
        let mut h = BTreeMap::new();
        for v in 0..self.n {
            *h.entry(self.degree(v)).or_insert(0) += 1;
        }
        h
    }

    pub fn is_clique(&self, vertices: &[usize]) -> bool {
        vertices
            .iter()
            .enumerate()
            .all(|(i, &u)| vertices[i + 1..].iter().all(|&v| self.is_adjacent(u, v)))
    }

    pub fn is_independent(&self, vertices: &[usize]) -> bool {
        vertices.iter().enumerate().all(|(i, &u)| {
            vertices[i + 1..]
                .iter()
                .all(|&v| u != v && !self.is_adjacent(u, v))
        })
    }

    /// Adjacency as a row-major 0/1 matrix.
    pub fn adjacency_matrix(&self) -> Vec<Vec<u8>> {
        (0..self.n)
            .map(|u| {
                (0..self.n)
                    .map(|v| u8::from(self.is_adjacent(u, v)))
                    .collect()
            })
            .collect()
    }
}

/// Serializable summary of a graph's edge structure.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct EdgeList {
    pub vertices: usize,
    pub edges: Vec<(usize, usize)>,
}

impl From<&OrthoGraph> for EdgeList {
    fn from(g: &OrthoGraph) -> Self {
        Self {
            vertices: g.n(),
            edges: g.edges(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complement_of_cycle() {
        let c5 = OrthoGraph::cycle(5);
        let comp = c5.complement();
        assert_eq!(comp.edge_count(), 5);
        assert!(comp.is_adjacent(0, 2));
        assert!(!comp.is_adjacent(0, 1));
    }

    #[test]
    fn induced_on_all_vertices_is_identity() {
        let g = OrthoGraph::from_edges(5, [(0, 1), (1, 2), (3, 4), (0, 4)]).unwrap();
        let all: Vec<usize> = (0..5).collect();
        assert_eq!(g.induced_subgraph(&all).unwrap(), g);
    }

    #[test]
    fn induced_rejects_unknown_vertex() {
        let g = OrthoGraph::cycle(4);
        assert!(matches!(
            g.induced_subgraph(&[0, 7]),
            Err(Error::UnknownVertex { vertex: 7, n: 4 })
        ));
    }

    #[test]
    fn self_loop_rejected() {
        assert!(OrthoGraph::from_edges(3, [(1, 1)]).is_err());
        assert!(OrthoGraph::from_edges(3, [(1, 3)]).is_err());
    }

    #[test]
    fn degree_histogram_of_path() {
        let g = OrthoGraph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let h = g.degree_histogram();
        assert_eq!(h.get(&1), Some(&2));
        assert_eq!(h.get(&2), Some(&2));
    }
}
