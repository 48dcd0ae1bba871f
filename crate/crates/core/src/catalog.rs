//! Built-in ray sets and graphs.
//!
//! Ray sets keep their published numbering (vertex i is ray i+1) and always
//! rebuild their orthogonality graph from coordinates. Printed relation
//! lists are kept alongside and compared against the rebuilt graph; any
//! difference becomes a warning and is never patched into the graph.

use std::collections::{BTreeSet, HashMap};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{maximal_cliques, OrthoGraph};
use crate::ray::Ray;
use crate::states::{enumerate_rays, filter_real, orthogonality_graph, RayConfig};

pub const BUILTIN_NAMES: &[&str] = &[
    "yu-oh-13",
    "clifton-8",
    "g11",
    "g9",
    "g11k",
    "g9k",
    "cycle-<n>",
    "complete-<n>",
    "q12-real-48",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum EntryKind {
    RaySet,
    Graph,
}

/// How a printed list relates to the graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ListKind {
    /// Exactly the maximal cliques.
    MaximalCliques,
    /// Cliques whose pairs cover every edge.
    Relations,
    /// An edge list that must be a subgraph of another entry.
    SubgraphOf(&'static str),
}

#[derive(Clone, Debug, Serialize)]
pub struct PrintedList {
    pub kind: ListKind,
    /// Groups of vertex labels as printed.
    pub groups: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CatalogEntry {
    pub name: String,
    pub kind: EntryKind,
    pub description: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rays: Option<Vec<Ray>>,
    #[serde(skip)]
    pub graph: OrthoGraph,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub printed: Option<PrintedList>,
    pub warnings: Vec<String>,
}

pub fn builtin(name: &str) -> Result<CatalogEntry> {
    builtin_with(name, RayConfig::default())
}

/// Looks up a catalog entry; `config` only matters for live pipeline entries.
pub fn builtin_with(name: &str, config: RayConfig) -> Result<CatalogEntry> {
    if let Some(n) = parse_family(name, "cycle-") {
        if n < 3 {
            return Err(Error::InvalidArgument(format!(
                "cycle needs n >= 3, got {n}"
            )));
        }
        return Ok(graph_entry(
            name,
            format!("cycle on {n} vertices"),
            OrthoGraph::cycle(n),
        ));
    }
    if let Some(n) = parse_family(name, "complete-") {
        if n < 1 {
            return Err(Error::InvalidArgument("complete graph needs n >= 1".into()));
        }
        return Ok(graph_entry(
            name,
            format!("complete graph on {n} vertices"),
            OrthoGraph::complete(n),
        ));
    }
    match name {
        "yu-oh-13" => ray_entry(
            name,
            "Yu-Oh 13-ray state-independent set in dimension 3",
            yu_oh_rays(),
            None,
            PrintedList {
                kind: ListKind::Relations,
                groups: groups(&[
                    &[1, 2, 3],
                    &[1, 4, 5],
                    &[4, 11],
                    &[4, 12],
                    &[5, 10],
                    &[5, 13],
                    &[2, 6, 7],
                    &[6, 10],
                    &[6, 12],
                    &[7, 11],
                    &[7, 13],
                    &[3, 8, 9],
                    &[8, 10],
                    &[8, 11],
                    &[9, 12],
                    &[9, 13],
                ]),
            },
        ),
        "clifton-8" => {
            // rays 2, 3, 6, 7, 8, 9, 10 and 13 of the Yu-Oh set, keeping their labels
            let keep = [2usize, 3, 6, 7, 8, 9, 10, 13];
            let all = yu_oh_rays();
            let rays = keep.iter().map(|&i| all[i - 1].clone()).collect();
            ray_entry(
                name,
                "Clifton 8-ray state-dependent set, labelled by its Yu-Oh ray numbers",
                rays,
                Some(keep.iter().map(ToString::to_string).collect()),
                PrintedList {
                    kind: ListKind::Relations,
                    groups: groups(&[
                        &[2, 3],
                        &[2, 6, 7],
                        &[6, 10],
                        &[7, 11],
                        &[7, 13],
                        &[3, 8, 9],
                        &[8, 10],
                        &[9, 13],
                    ]),
                },
            )
        }
        "g11" => ray_entry(
            name,
            "11-ray contextual set of the twelve-dimensional qudit",
            g11_rays(),
            None,
            PrintedList {
                kind: ListKind::MaximalCliques,
                groups: groups(&[
                    &[1, 2, 3, 4, 5, 6],
                    &[1, 3, 4, 7],
                    &[1, 3, 5, 6, 10],
                    &[1, 3, 7, 10],
                    &[1, 2, 4, 6, 11],
                    &[1, 4, 7, 11],
                    &[1, 7, 10, 11],
                    &[1, 6, 10, 11],
                    &[7, 8, 9, 10, 11],
                    &[5, 8, 9, 10],
                    &[2, 5, 8, 9],
                    &[2, 8, 9, 11],
                    &[2, 5, 6, 8],
                    &[2, 6, 8, 11],
                    &[5, 6, 8, 10],
                    &[6, 8, 10, 11],
                    &[2, 3, 4, 5, 9],
                    &[2, 4, 9, 11],
                    &[3, 4, 7, 9],
                    &[4, 7, 9, 11],
                    &[3, 7, 9, 10],
                    &[3, 5, 9, 10],
                ]),
            },
        ),
        "g9" => ray_entry(
            name,
            "9-ray contextual set of the twelve-dimensional qudit",
            g9_rays(),
            None,
            PrintedList {
                kind: ListKind::MaximalCliques,
                groups: groups(&[
                    &[1, 2, 5, 6, 8],
                    &[1, 5, 8, 9],
                    &[1, 2, 3],
                    &[1, 3, 9],
                    &[2, 5, 7, 8],
                    &[2, 3, 7],
                    &[3, 4, 7, 9],
                    &[5, 7, 8, 9],
                    &[4, 6],
                ]),
            },
        ),
        "g11k" => {
            let mut edges = Vec::new();
            for k in [[1, 2, 3, 5], [2, 3, 5, 6]] {
                for i in 0..4 {
                    for j in i + 1..4 {
                        edges.push([k[i], k[j]]);
                    }
                }
            }
            let path = [1, 11, 10, 9, 8, 7, 4, 6];
            edges.extend(path.windows(2).map(|w| [w[0], w[1]]));
            obstruction_entry(
                name,
                "Kuratowski obstruction kept inside g11",
                11,
                &edges,
                "g11",
            )
        }
        "g9k" => obstruction_entry(
            name,
            "Kuratowski obstruction kept inside g9",
            9,
            &[
                [1, 9],
                [9, 4],
                [4, 3],
                [3, 2],
                [2, 1],
                [1, 9],
                [9, 8],
                [8, 7],
                [7, 5],
                [5, 1],
                [5, 6],
                [6, 4],
                [4, 9],
                [9, 1],
                [5, 1],
                [2, 7],
            ],
            "g9",
        ),
        "q12-real-48" => {
            let census = enumerate_rays(12, config)?;
            let rays = filter_real(&census.rays);
            let graph = orthogonality_graph(&rays, config.tol)?;
            Ok(CatalogEntry {
                name: name.into(),
                kind: EntryKind::RaySet,
                description: "real joint eigenrays of the q=12 Pauli lines, computed live".into(),
                rays: Some(rays),
                graph,
                printed: None,
                warnings: Vec::new(),
            })
        }
        _ => Err(Error::UnknownCatalogEntry(name.into())),
    }
}

fn parse_family(name: &str, prefix: &str) -> Option<usize> {
    name.strip_prefix(prefix)?.parse().ok()
}

fn groups(g: &[&[usize]]) -> Vec<Vec<usize>> {
    g.iter().map(|x| x.to_vec()).collect()
}

fn graph_entry(name: &str, description: String, graph: OrthoGraph) -> CatalogEntry {
    CatalogEntry {
        name: name.into(),
        kind: EntryKind::Graph,
        description,
        rays: None,
        graph,
        printed: None,
        warnings: Vec::new(),
    }
}

fn ray_entry(
    name: &str,
    description: &str,
    rays: Vec<Ray>,
    labels: Option<Vec<String>>,
    printed: PrintedList,
) -> Result<CatalogEntry> {
    let mut graph = orthogonality_graph(&rays, crate::ray::DEFAULT_TOL)?;
    if let Some(labels) = labels {
        graph = graph.with_labels(labels)?;
    }
    let warnings = compare_printed(&graph, &printed)?;
    Ok(CatalogEntry {
        name: name.into(),
        kind: EntryKind::RaySet,
        description: description.into(),
        rays: Some(rays),
        graph,
        printed: Some(printed),
        warnings,
    })
}

fn obstruction_entry(
    name: &str,
    description: &str,
    n: usize,
    edges: &[[usize; 2]],
    parent: &'static str,
) -> Result<CatalogEntry> {
    let graph = OrthoGraph::from_edges(n, edges.iter().map(|e| (e[0] - 1, e[1] - 1)))?;
    let printed = PrintedList {
        kind: ListKind::SubgraphOf(parent),
        groups: edges.iter().map(|e| e.to_vec()).collect(),
    };
    let warnings = compare_printed(&graph, &printed)?;
    Ok(CatalogEntry {
        name: name.into(),
        kind: EntryKind::Graph,
        description: description.into(),
        rays: None,
        graph,
        printed: Some(printed),
        warnings,
    })
}

/// Differences between a graph and a printed list, one message each.
pub fn compare_printed(g: &OrthoGraph, printed: &PrintedList) -> Result<Vec<String>> {
    let index: HashMap<usize, usize> = g
        .labels()
        .iter()
        .enumerate()
        .filter_map(|(i, l)| l.parse().ok().map(|l| (l, i)))
        .collect();
    let mut warnings = Vec::new();
    let mut resolved: Vec<Vec<usize>> = Vec::new();
    for group in &printed.groups {
        match group
            .iter()
            .map(|l| index.get(l).copied())
            .collect::<Option<Vec<_>>>()
        {
            Some(vs) => resolved.push(vs),
            None => warnings.push(format!(
                "printed relation {} names a ray that is not in the set",
                fmt_group(group)
            )),
        }
    }
    let label_set = |vs: &[usize]| -> BTreeSet<usize> {
        vs.iter()
            .map(|&v| g.labels()[v].parse().unwrap_or(0))
            .collect()
    };
    match printed.kind {
        ListKind::MaximalCliques => {
            let rebuilt: BTreeSet<BTreeSet<usize>> =
                maximal_cliques(g).iter().map(|c| label_set(c)).collect();
            let listed: BTreeSet<BTreeSet<usize>> = resolved.iter().map(|c| label_set(c)).collect();
            for c in listed.difference(&rebuilt) {
                warnings.push(format!(
                    "printed clique {} is not a maximal clique of the rebuilt graph",
                    fmt_set(c)
                ));
            }
            for c in rebuilt.difference(&listed) {
                warnings.push(format!(
                    "maximal clique {} of the rebuilt graph is not in the printed list",
                    fmt_set(c)
                ));
            }
        }
        ListKind::Relations => {
            let mut covered = BTreeSet::new();
            for vs in &resolved {
                if !g.is_clique(vs) {
                    warnings.push(format!(
                        "printed relation {} is not mutually orthogonal",
                        fmt_set(&label_set(vs))
                    ));
                }
                for (i, &u) in vs.iter().enumerate() {
                    for &v in &vs[i + 1..] {
                        covered.insert((u.min(v), u.max(v)));
                    }
                }
            }
            for (u, v) in g.edges() {
                if !covered.contains(&(u, v)) {
                    warnings.push(format!(
                        "orthogonal pair ({},{}) is missing from the printed relations",
                        g.labels()[u],
                        g.labels()[v]
                    ));
                }
            }
        }
        ListKind::SubgraphOf(parent) => {
            let host = builtin(parent)?.graph;
            for vs in &resolved {
                if vs.iter().any(|&v| v >= host.n()) || !host.is_clique(vs) {
                    warnings.push(format!(
                        "edge {} is not an orthogonality of {parent}",
                        fmt_set(&label_set(vs))
                    ));
                }
            }
        }
    }
    Ok(warnings)
}

fn fmt_group(g: &[usize]) -> String {
    let parts: Vec<String> = g.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(","))
}

fn fmt_set(s: &BTreeSet<usize>) -> String {
    fmt_group(&s.iter().copied().collect::<Vec<_>>())
}

fn ints(rows: &[Vec<i64>]) -> Vec<Ray> {
    rows.iter()
        .map(|r| Ray::from_integers(r.clone()).expect("catalog rays are nonzero"))
        .collect()
}

/// e_i in dimension 12, 1-based.
fn e(i: usize) -> Vec<i64> {
    let mut v = vec![0; 12];
    v[i - 1] = 1;
    v
}

/// Concatenation of repeated blocks, e.g. `rep(&[(&[0, 1, 0, -1], 3)])`.
fn rep(blocks: &[(&[i64], usize)]) -> Vec<i64> {
    blocks.iter().flat_map(|&(b, k)| b.repeat(k)).collect()
}

fn yu_oh_rays() -> Vec<Ray> {
    ints(&[
        vec![1, 0, 0],
        vec![0, 1, 0],
        vec![0, 0, 1],
        vec![0, 1, 1],
        vec![0, 1, -1],
        vec![1, 0, 1],
        vec![1, 0, -1],
        vec![1, 1, 0],
        vec![1, -1, 0],
        vec![-1, 1, 1],
        vec![1, -1, 1],
        vec![1, 1, -1],
        vec![1, 1, 1],
    ])
}

fn g11_rays() -> Vec<Ray> {
    ints(&[
        e(3),
        e(4),
        e(5),
        e(7),
        e(8),
        e(12),
        rep(&[(&[0, 1, 0, -1], 3)]),
        rep(&[(&[1, 0, -1, 0], 3)]),
        rep(&[(&[0, 0, 1], 4)]),
        rep(&[(&[1, 0, 0], 4)]),
        vec![0, 1, 0, 0, -1, 0, 0, 1, 0, 0, -1, 0],
    ])
}

fn g9_rays() -> Vec<Ray> {
    ints(&[
        e(3),
        e(7),
        e(8),
        rep(&[(&[1, 0], 6)]),
        rep(&[(&[0, 1, 0], 4)]),
        rep(&[(&[0, 1, 0, -1], 3)]),
        rep(&[(&[0, 0, 1], 2), (&[0, 0, -1], 2)]),
        rep(&[(&[0, 1, 0, 0, -1, 0], 2)]),
        vec![1, 0, 0, -1, 0, 0, -1, 0, 0, 1, 0, 0],
    ])
}
