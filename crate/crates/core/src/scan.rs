//! Dimension scan: the whole pipeline for each q in a range.
//!
//! A q is flagged contextual when its orthogonality graph, or the graph left
//! after deleting some union of whole degree classes, admits no KS
//! assignment. Both verdicts are reported. Deleting whole degree classes is
//! the reduction move used on the q=12 system; the full 48-ray graph itself
//! has an admissible assignment once its larger cliques count as contexts.

use serde::Serialize;

use crate::context::{ks_check_with, KsOptions};
use crate::error::{Error, Result};
use crate::graph::OrthoGraph;
use crate::lattice::{divisor_sigma, is_square_free};
use crate::states::{enumerate_rays, filter_real, orthogonality_graph, RayConfig};

/// Degree-class subsets are only enumerated up to this many classes.
pub const MAX_DEGREE_CLASSES: usize = 10;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RaySelection {
    #[default]
    Real,
    All,
}

#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct ScanOptions {
    pub selection: RaySelection,
    pub config: RayConfig,
    /// Node budget for each individual KS search.
    pub node_budget: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeReduction {
    /// Degrees whose vertices were deleted (empty for the full graph).
    pub removed_degrees: Vec<usize>,
    /// Surviving vertices of the original graph, ascending.
    pub kept: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ScanEntry {
    pub q: u32,
    pub square_free: bool,
    /// (q−1)·σ(q) = q²−1, i.e. the isotropic lines partition the nonzero points.
    pub lines_partition_points: bool,
    pub rays: Option<usize>,
    pub real: Option<usize>,
    pub vertices: Option<usize>,
    pub full_graph_contextual: Option<bool>,
    pub contextual: Option<bool>,
    pub reduction: Option<DegreeReduction>,
    pub error: Option<String>,
}

/// (q−1)·σ(q) = q²−1. This is σ(q) = q+1, which holds exactly for prime q.
pub fn lines_partition_points(q: u32) -> bool {
    let q64 = u64::from(q);
    (q64 - 1) * divisor_sigma(q) == q64 * q64 - 1
}

/// First contextual graph among the full graph and its degree-class
/// deletions, ordered by number of deleted vertices and then by the set of
/// deleted degrees (ascending). `None` when all of them admit an assignment.
pub fn degree_class_reduction(
    g: &OrthoGraph,
    options: KsOptions,
) -> Result<Option<DegreeReduction>> {
    let degrees: Vec<usize> = g.degree_histogram().into_keys().collect();
    if degrees.len() > MAX_DEGREE_CLASSES {
        return Err(Error::TooLarge {
            n: degrees.len(),
            limit: MAX_DEGREE_CLASSES,
        });
    }
    let class_of = |v: usize| {
        degrees
            .binary_search(&g.degree(v))
            .expect("degree is a key")
    };
    let mut masks: Vec<(usize, Vec<usize>, u32)> = (0u32..1 << degrees.len())
        .map(|mask| {
            let removed = (0..g.n()).filter(|&v| mask >> class_of(v) & 1 == 1).count();
            let ds = (0..degrees.len())
                .filter(|&k| mask >> k & 1 == 1)
                .map(|k| degrees[k])
                .collect();
            (removed, ds, mask)
        })
        .filter(|&(removed, _, _)| removed < g.n() || g.n() == 0)
        .collect();
    masks.sort();
    for (_, removed_degrees, mask) in masks {
        let kept: Vec<usize> = (0..g.n())
            .filter(|&v| mask >> class_of(v) & 1 == 0)
            .collect();
        let h = g.induced_subgraph(&kept)?;
        if ks_check_with(&h, options)?.contextual {
            return Ok(Some(DegreeReduction {
                removed_degrees,
                kept,
            }));
        }
    }
    Ok(None)
}

pub fn scan_dimensions(q_from: u32, q_to: u32, options: ScanOptions) -> Result<Vec<ScanEntry>> {
    if q_from < 2 || q_from > q_to {
        return Err(Error::InvalidArgument(format!(
            "scan range needs 2 <= q_from <= q_to, got {q_from}..{q_to}"
        )));
    }
    Ok((q_from..=q_to).map(|q| scan_one(q, options)).collect())
}

fn scan_one(q: u32, options: ScanOptions) -> ScanEntry {
    let mut entry = ScanEntry {
        q,
        square_free: is_square_free(q),
        lines_partition_points: lines_partition_points(q),
        rays: None,
        real: None,
        vertices: None,
        full_graph_contextual: None,
        contextual: None,
        reduction: None,
        error: None,
    };
    if let Err(e) = fill(&mut entry, options) {
        entry.error = Some(e.to_string());
    }
    entry
}

fn fill(entry: &mut ScanEntry, options: ScanOptions) -> Result<()> {
    let census = enumerate_rays(entry.q, options.config)?;
    let real = filter_real(&census.rays);
    entry.rays = Some(census.rays.len());
    entry.real = Some(real.len());
    let chosen = match options.selection {
        RaySelection::Real => real,
        RaySelection::All => census.rays,
    };
    let g = orthogonality_graph(&chosen, options.config.tol)?;
    entry.vertices = Some(g.n());
    let ks = KsOptions {
        node_budget: options.node_budget,
    };
    entry.full_graph_contextual = Some(ks_check_with(&g, ks)?.contextual);
    let reduction = degree_class_reduction(&g, ks)?;
    entry.contextual = Some(reduction.is_some());
    entry.reduction = reduction;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_identity_is_primality() {
        let holds: Vec<u32> = (2..=30).filter(|&q| lines_partition_points(q)).collect();
        assert_eq!(holds, [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
    }

    #[test]
    fn qubit_scan() {
        let s = scan_dimensions(2, 3, ScanOptions::default()).unwrap();
        assert_eq!(
            (s[0].rays, s[0].real, s[0].contextual),
            (Some(6), Some(4), Some(false))
        );
        assert_eq!(s[1].full_graph_contextual, Some(false));
        assert!(s.iter().all(|e| e.error.is_none()));
    }

    #[test]
    fn wheel_reduces_to_its_rim() {
        let rim = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, 5));
        let w5 = OrthoGraph::from_edges(6, rim.chain(spokes)).unwrap();
        let r = degree_class_reduction(&w5, KsOptions::default())
            .unwrap()
            .unwrap();
        assert_eq!(r.removed_degrees, [5]);
        assert_eq!(r.kept, [0, 1, 2, 3, 4]);
        let c5 = degree_class_reduction(&OrthoGraph::cycle(5), KsOptions::default())
            .unwrap()
            .unwrap();
        assert!(c5.removed_degrees.is_empty());
        assert_eq!(
            degree_class_reduction(&OrthoGraph::complete(3), KsOptions::default()).unwrap(),
            None
        );
    }

    #[test]
    fn bad_range() {
        assert!(scan_dimensions(1, 4, ScanOptions::default()).is_err());
        assert!(scan_dimensions(5, 4, ScanOptions::default()).is_err());
    }
}
