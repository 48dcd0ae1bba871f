//! Command execution and machine-readable reports.
//!
//! A [`Report`] is a list of named sections, each tagged with the ids of the
//! claims it checks (see [`CLAIMS`]). Serialization keeps struct field order,
//! so identical inputs, seed and version give byte-identical JSON. Timings
//! are only recorded on request.

use std::collections::BTreeMap;
use std::io::Write as _;
use std::path::Path;
use std::time::Instant;

use serde::Serialize;
use serde_json::{json, Value};

use crate::capacity::{capacity_bounds, lovasz_theta, SQUARE_LIMIT, THETA_LIMIT};
use crate::catalog::{builtin_with, CatalogEntry, EntryKind};
use crate::context::{ks_check_with, minimize_contextual, KsOptions};
use crate::error::{Error, Result};
use crate::formats::{parse_graph, parse_rays_with};
use crate::graph::{
    automorphism_group, chromatic_number, clique_number, independence_number, maximal_cliques,
    planarity, spectrum, verify_subdivision, OrthoGraph, Planarity,
};
use crate::lattice::{classify_lines, dedekind_psi, divisor_sigma};
use crate::ray::Ray;
use crate::scan::{scan_dimensions, RaySelection, ScanOptions};
use crate::states::{enumerate_rays, filter_real, orthogonality_graph, RayConfig};

/// Environment variable that overrides the default seed.
pub const SEED_ENV: &str = "QKS_SEED";

pub struct Claim {
    pub id: &'static str,
    pub statement: &'static str,
}

/// Every checkable statement a report section can refer to.
pub const CLAIMS: &[Claim] = &[
    Claim {
        id: "line-count",
        statement: "Z_q x Z_q has sigma(q) isotropic lines, each with q-1 nonzero points",
    },
    Claim {
        id: "line-classes",
        statement: "psi(q) of the lines are cyclic; the rest are outliers",
    },
    Claim {
        id: "ray-count",
        statement: "the isotropic lines carry q*sigma(q) distinct joint eigenrays",
    },
    Claim {
        id: "real-rays",
        statement: "for q=12, 48 of the eigenrays are real with entries in {-1,0,1}",
    },
    Claim {
        id: "degree-structure",
        statement: "the 48 real q=12 rays have 12 of degree 38, 24 of degree 34, 4 of degree 28 and 8 of degree 20",
    },
    Claim {
        id: "ks-verdict",
        statement: "no 0/1 assignment puts a 1 in every maximal clique without two adjacent 1s",
    },
    Claim {
        id: "minimal-set",
        statement: "no single ray can be removed while keeping the set contextual",
    },
    Claim {
        id: "graph-invariants",
        statement: "chromatic number, automorphism group order, degrees and spectrum of the orthogonality graph",
    },
    Claim {
        id: "planarity",
        statement: "non-planar graphs contain a K5 or K3,3 subdivision",
    },
    Claim {
        id: "capacity",
        statement: "alpha(G) <= max(alpha(G), sqrt(alpha(G x G))) <= Shannon capacity <= Lovasz theta",
    },
    Claim {
        id: "dimension-scan",
        statement: "among real eigenrays of small dimensions only q=12 is contextual, counting deletions of whole degree classes",
    },
    Claim {
        id: "partition-identity",
        statement: "(q-1)sigma(q) = q^2-1 when q has no square factor",
    },
];

#[derive(Clone, Debug, PartialEq)]
pub enum Command {
    Rays {
        q: u32,
    },
    Graph {
        input: String,
    },
    Context {
        input: String,
    },
    Minimize {
        input: String,
    },
    Capacity {
        input: String,
        k_max: u8,
    },
    Analyze {
        input: String,
    },
    Scan {
        from: u32,
        to: u32,
        selection: RaySelection,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Rays { .. } => "rays",
            Command::Graph { .. } => "graph",
            Command::Context { .. } => "context",
            Command::Minimize { .. } => "minimize",
            Command::Capacity { .. } => "capacity",
            Command::Analyze { .. } => "analyze",
            Command::Scan { .. } => "scan",
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Settings {
    pub config: RayConfig,
    /// Node budget for KS searches and for α of strong squares.
    pub budget: Option<u64>,
    pub timings: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct InputDescriptor {
    pub source: &'static str,
    pub name: String,
    pub kind: EntryKind,
    pub vertices: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct Section {
    pub name: &'static str,
    pub claims: Vec<&'static str>,
    pub data: Value,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub input: Option<InputDescriptor>,
    pub seed: u64,
    pub tol: f64,
    pub warnings: Vec<String>,
    pub sections: Vec<Section>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings_ms: Option<BTreeMap<&'static str, f64>>,
}

impl Report {
    pub fn section(&self, name: &str) -> Option<&Value> {
        self.sections
            .iter()
            .find(|s| s.name == name)
            .map(|s| &s.data)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report values are serializable");
        s.push('\n');
        s
    }

    /// Indented `key: value` rendering of the same content.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let v = serde_json::to_value(self).expect("report values are serializable");
        render_text(&v, 0, &mut out);
        out
    }
}

fn render_text(v: &Value, depth: usize, out: &mut String) {
    let pad = "  ".repeat(depth);
    match v {
        Value::Object(map) => {
            for (k, val) in map {
                if is_scalar_like(val) {
                    out.push_str(&format!("{pad}{k}: {}\n", inline(val)));
                } else {
                    out.push_str(&format!("{pad}{k}:\n"));
                    render_text(val, depth + 1, out);
                }
            }
        }
        Value::Array(items) => {
            for item in items {
                if is_scalar_like(item) {
                    out.push_str(&format!("{pad}- {}\n", inline(item)));
                } else {
                    out.push_str(&format!("{pad}-\n"));
                    render_text(item, depth + 1, out);
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", inline(other))),
    }
}

fn is_scalar_like(v: &Value) -> bool {
    match v {
        Value::Array(items) => items
            .iter()
            .all(|x| !x.is_object() && (!x.is_array() || is_scalar_like(x))),
        Value::Object(_) => false,
        _ => true,
    }
}

fn inline(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(items) => format!(
            "[{}]",
            items.iter().map(inline).collect::<Vec<_>>().join(", ")
        ),
        other => other.to_string(),
    }
}

/// Writes through a temporary file in the target directory, then renames.
pub fn write_atomic(path: &Path, contents: &str) -> Result<()> {
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(contents.as_bytes())?;
    tmp.as_file().sync_all()?;
    tmp.persist(path).map_err(|e| Error::Io(e.error))?;
    Ok(())
}

/// A resolved command input: a catalog entry or a ray/graph file.
pub struct LoadedInput {
    pub descriptor: InputDescriptor,
    pub graph: OrthoGraph,
    pub rays: Option<Vec<Ray>>,
    pub warnings: Vec<String>,
}

/// Catalog names take precedence; anything else is read as a file. Files
/// whose first content line starts with `vertices` are graphs, all others
/// ray lists.
pub fn load_input(input: &str, config: RayConfig) -> Result<LoadedInput> {
    match builtin_with(input, config) {
        Ok(entry) => return Ok(from_entry(entry)),
        Err(Error::UnknownCatalogEntry(_)) if Path::new(input).exists() => {}
        Err(e) => return Err(e),
    }
    let text = std::fs::read_to_string(input)?;
    let is_graph = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'))
        .is_some_and(|l| l.starts_with("vertices"));
    let (graph, rays, kind) = if is_graph {
        (parse_graph(&text)?, None, EntryKind::Graph)
    } else {
        let rays = parse_rays_with(&text, config.tol)?;
        (
            orthogonality_graph(&rays, config.tol)?,
            Some(rays),
            EntryKind::RaySet,
        )
    };
    Ok(LoadedInput {
        descriptor: InputDescriptor {
            source: "file",
            name: input.into(),
            kind,
            vertices: graph.n(),
        },
        graph,
        rays,
        warnings: Vec::new(),
    })
}

fn from_entry(e: CatalogEntry) -> LoadedInput {
    LoadedInput {
        descriptor: InputDescriptor {
            source: "builtin",
            name: e.name,
            kind: e.kind,
            vertices: e.graph.n(),
        },
        graph: e.graph,
        rays: e.rays,
        warnings: e.warnings,
    }
}

struct Timer {
    enabled: bool,
    laps: BTreeMap<&'static str, f64>,
}

impl Timer {
    fn time<T>(&mut self, name: &'static str, f: impl FnOnce() -> T) -> T {
        let start = Instant::now();
        let out = f();
        if self.enabled {
            self.laps.insert(name, start.elapsed().as_secs_f64() * 1e3);
        }
        out
    }
}

pub fn run(cmd: &Command, settings: &Settings) -> Result<Report> {
    let mut timer = Timer {
        enabled: settings.timings,
        laps: BTreeMap::new(),
    };
    let mut report = Report {
        tool: "qks",
        version: env!("CARGO_PKG_VERSION"),
        command: cmd.name(),
        input: None,
        seed: settings.config.seed,
        tol: settings.config.tol,
        warnings: Vec::new(),
        sections: Vec::new(),
        timings_ms: None,
    };
    let ks = KsOptions {
        node_budget: settings.budget,
    };
    match cmd {
        Command::Rays { q } => rays_sections(*q, settings, &mut timer, &mut report)?,
        Command::Scan {
            from,
            to,
            selection,
        } => {
            let opts = ScanOptions {
                selection: *selection,
                config: settings.config,
                node_budget: settings.budget,
            };
            let entries = timer.time("scan", || scan_dimensions(*from, *to, opts))?;
            let flagged: Vec<u32> = entries
                .iter()
                .filter(|e| e.contextual == Some(true))
                .map(|e| e.q)
                .collect();
            let full: Vec<u32> = entries
                .iter()
                .filter(|e| e.full_graph_contextual == Some(true))
                .map(|e| e.q)
                .collect();
            let failed: Vec<u32> = entries
                .iter()
                .filter(|e| e.error.is_some())
                .map(|e| e.q)
                .collect();
            push(
                &mut report,
                "scan",
                &["dimension-scan", "partition-identity"],
                json!({
                    "rays": selection,
                    "contextual": flagged,
                    "full_graph_contextual": full,
                    "failed": failed,
                    "entries": entries,
                }),
            );
        }
        Command::Graph { input }
        | Command::Context { input }
        | Command::Minimize { input }
        | Command::Capacity { input, .. }
        | Command::Analyze { input } => {
            let loaded = timer.time("load", || load_input(input, settings.config))?;
            report.warnings.clone_from(&loaded.warnings);
            report.input = Some(loaded.descriptor.clone());
            let g = &loaded.graph;
            match cmd {
                Command::Graph { .. } => {
                    let s = timer.time("graph", || graph_section(g));
                    push(&mut report, "graph", &["graph-invariants", "planarity"], s);
                }
                Command::Context { .. } => {
                    let s = timer.time("context", || context_section(g, ks))?;
                    push(&mut report, "context", &["ks-verdict"], s);
                }
                Command::Minimize { .. } => {
                    let s = timer.time("minimize", || minimize_section(g))?;
                    push(&mut report, "minimize", &["minimal-set", "ks-verdict"], s);
                }
                Command::Capacity { k_max, .. } => {
                    let s =
                        timer.time("capacity", || capacity_section(g, *k_max, settings.budget))?;
                    push(&mut report, "capacity", &["capacity"], s);
                }
                _ => {
                    let s = timer.time("graph", || graph_section(g));
                    push(&mut report, "graph", &["graph-invariants", "planarity"], s);
                    let s = timer.time("context", || context_section(g, ks))?;
                    push(&mut report, "context", &["ks-verdict"], s);
                    if g.n() <= THETA_LIMIT {
                        let k = if g.n() <= SQUARE_LIMIT { 2 } else { 1 };
                        let s =
                            timer.time("capacity", || capacity_section(g, k, settings.budget))?;
                        push(&mut report, "capacity", &["capacity"], s);
                    }
                }
            }
        }
    }
    if settings.timings {
        report.timings_ms = Some(timer.laps);
    }
    Ok(report)
}

fn push(report: &mut Report, name: &'static str, claims: &[&'static str], data: Value) {
    report.sections.push(Section {
        name,
        claims: claims.to_vec(),
        data,
    });
}

/// Numeric labels are emitted as numbers so lists read like the printed ones.
fn label(g: &OrthoGraph, v: usize) -> Value {
    let l = &g.labels()[v];
    l.parse::<u64>()
        .map_or_else(|_| Value::String(l.clone()), Value::from)
}

fn labels(g: &OrthoGraph, vs: &[usize]) -> Value {
    Value::Array(vs.iter().map(|&v| label(g, v)).collect())
}

fn histogram<K: ToString>(h: &BTreeMap<K, usize>) -> Value {
    Value::Object(
        h.iter()
            .map(|(k, v)| (k.to_string(), Value::from(*v)))
            .collect(),
    )
}

fn skipped(e: Error) -> Value {
    json!({ "skipped": e.to_string() })
}

fn graph_section(g: &OrthoGraph) -> Value {
    let cliques = maximal_cliques(g);
    let mut sizes = BTreeMap::new();
    for c in &cliques {
        *sizes.entry(c.len()).or_insert(0usize) += 1;
    }
    let (alpha, independent) =
        independence_number(g, None).expect("unbounded search always finishes");
    let coloring = chromatic_number(g);
    let automorphisms = match automorphism_group(g) {
        Ok(a) => json!({
            "order": a.order,
            "generators": a.generators.iter().map(|p| labels(g, p)).collect::<Vec<_>>(),
        }),
        Err(e) => skipped(e),
    };
    let planar = match planarity(g) {
        Ok(Planarity::Planar) => json!({ "planar": true }),
        Ok(Planarity::NonPlanar(obs)) => json!({
            "planar": false,
            "obstruction": format!("{:?}", obs.kind),
            "branch_vertices": labels(g, &obs.branch_vertices),
            "edges": obs.edges.iter().map(|&(u, v)| json!([label(g, u), label(g, v)])).collect::<Vec<_>>(),
            "verified": verify_subdivision(g, &obs),
        }),
        Err(e) => skipped(e),
    };
    let sp = spectrum(g);
    let eigen_sum: f64 = sp.eigenvalues.iter().sum();
    json!({
        "vertices": g.n(),
        "edges": g.edge_count(),
        "degree_histogram": histogram(&g.degree_histogram()),
        "maximal_cliques": {
            "count": cliques.len(),
            "size_histogram": histogram(&sizes),
            "cliques": cliques.iter().map(|c| labels(g, c)).collect::<Vec<_>>(),
        },
        "clique_number": clique_number(g),
        "independence_number": alpha,
        "independent_set": labels(g, &independent),
        "chromatic_number": coloring.chromatic_number,
        "coloring": coloring.colors,
        "automorphisms": automorphisms,
        "planarity": planar,
        "spectrum": {
            "characteristic_polynomial": sp.poly_string(),
            "coefficients": sp.char_poly.iter().map(ToString::to_string).collect::<Vec<_>>(),
            "eigenvalues": sp.eigenvalues,
            "eigenvalue_sum": eigen_sum,
        },
    })
}

fn context_section(g: &OrthoGraph, ks: KsOptions) -> Result<Value> {
    let v = ks_check_with(g, ks)?;
    let ones: Option<Vec<usize>> = v
        .witness
        .as_ref()
        .map(|w| (0..w.len()).filter(|&i| w[i] == 1).collect());
    Ok(json!({
        "contextual": v.contextual,
        "contexts": v.contexts,
        "explored_nodes": v.explored_nodes,
        "witness_ones": ones.map(|o| labels(g, &o)),
    }))
}

fn minimize_section(g: &OrthoGraph) -> Result<Value> {
    let kept = minimize_contextual(g)?;
    let sub = g.induced_subgraph(&kept)?;
    let mut sizes = BTreeMap::new();
    for c in maximal_cliques(&sub) {
        *sizes.entry(c.len()).or_insert(0usize) += 1;
    }
    Ok(json!({
        "input_vertices": g.n(),
        "kept": labels(g, &kept),
        "size": kept.len(),
        "degree_histogram": histogram(&sub.degree_histogram()),
        "clique_size_histogram": histogram(&sizes),
    }))
}

fn capacity_section(g: &OrthoGraph, k_max: u8, budget: Option<u64>) -> Result<Value> {
    let b = capacity_bounds(g, k_max, budget)?;
    let mut v = serde_json::to_value(&b).expect("serializable");
    // sandwich: clique number <= theta(complement) <= chromatic number
    v["theta_complement"] = Value::from(lovasz_theta(&g.complement())?);
    Ok(v)
}

fn rays_sections(
    q: u32,
    settings: &Settings,
    timer: &mut Timer,
    report: &mut Report,
) -> Result<()> {
    let census = timer.time("rays", || enumerate_rays(q, settings.config))?;
    let classes = classify_lines(&census.lines)?;
    push(
        report,
        "lines",
        &["line-count", "line-classes"],
        json!({
            "q": q,
            "count": census.lines.len(),
            "sigma": divisor_sigma(q),
            "nonzero_points_per_line": census.lines.iter().map(|l| l.nonzero_points().count()).collect::<Vec<_>>(),
            "cyclic": classes.cyclic,
            "outlier": classes.outlier,
            "psi": dedekind_psi(q),
            "lines": census.lines.iter().zip(&classes.cyclic_flags).map(|(l, &c)| json!({
                "cyclic": c,
                "points": l.nonzero_points().map(|p| p.to_string()).collect::<Vec<_>>(),
            })).collect::<Vec<_>>(),
        }),
    );

    let real = filter_real(&census.rays);
    let exact_unit = real.iter().all(|r| {
        r.exact_coords
            .as_ref()
            .is_some_and(|c| c.iter().all(|x| (-1..=1).contains(x)))
    });
    push(
        report,
        "census",
        &["ray-count", "real-rays"],
        json!({
            "rays": census.rays.len(),
            "expected": q as u64 * divisor_sigma(q),
            "real": real.len(),
            "real_entries_in_minus_one_zero_one": exact_unit,
            "real_rays": real.iter().map(|r| match &r.exact_coords {
                Some(c) => json!(c),
                None => json!(r.coords.iter().map(|z| z.re).collect::<Vec<_>>()),
            }).collect::<Vec<_>>(),
        }),
    );

    let g = orthogonality_graph(&real, settings.config.tol)?;
    let hist = g.degree_histogram();
    let join = |it: &mut dyn Iterator<Item = usize>| {
        it.map(|c| c.to_string()).collect::<Vec<_>>().join("+")
    };
    push(
        report,
        "degrees",
        &["degree-structure"],
        json!({
            "histogram": histogram(&hist),
            "counts_by_ascending_degree": join(&mut hist.values().copied()),
            "counts_by_descending_degree": join(&mut hist.values().rev().copied()),
        }),
    );
    Ok(())
}

/// Seed from the environment override, falling back to the built-in default.
pub fn default_seed() -> Result<u64> {
    match std::env::var(SEED_ENV) {
        Ok(s) => s.trim().parse().map_err(|_| {
            Error::InvalidArgument(format!("{SEED_ENV}={s:?} is not an unsigned integer"))
        }),
        Err(_) => Ok(crate::states::DEFAULT_SEED),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn claim_ids_are_unique_and_referenced_ids_exist() {
        let ids: std::collections::BTreeSet<_> = CLAIMS.iter().map(|c| c.id).collect();
        assert_eq!(ids.len(), CLAIMS.len());
        let r = run(
            &Command::Analyze {
                input: "cycle-5".into(),
            },
            &Settings::default(),
        )
        .unwrap();
        for s in &r.sections {
            assert!(s.claims.iter().all(|c| ids.contains(c)), "{}", s.name);
        }
    }

    #[test]
    fn context_report_for_g11() {
        let r = run(
            &Command::Context {
                input: "g11".into(),
            },
            &Settings::default(),
        )
        .unwrap();
        let c = r.section("context").unwrap();
        assert_eq!(c["contextual"], true);
        assert_eq!(c["contexts"], 22);
    }

    #[test]
    fn reports_are_deterministic_and_untimed_by_default() {
        let cmd = Command::Analyze {
            input: "clifton-8".into(),
        };
        let a = run(&cmd, &Settings::default()).unwrap().to_json();
        let b = run(&cmd, &Settings::default()).unwrap().to_json();
        assert_eq!(a, b);
        assert!(!a.contains("timings_ms"));
        let timed = Settings {
            timings: true,
            ..Settings::default()
        };
        assert!(run(&cmd, &timed).unwrap().timings_ms.is_some());
    }

    #[test]
    fn text_rendering_mentions_every_section() {
        let r = run(
            &Command::Analyze {
                input: "cycle-7".into(),
            },
            &Settings::default(),
        )
        .unwrap();
        let text = r.to_text();
        for s in ["graph", "context", "capacity", "chromatic_number: 3"] {
            assert!(text.contains(s), "{s}");
        }
    }

    #[test]
    fn unknown_input() {
        assert!(matches!(
            load_input("no-such-entry", RayConfig::default()),
            Err(Error::UnknownCatalogEntry(_))
        ));
    }

    #[test]
    fn atomic_write_replaces_file() {
        let dir = tempfile::tempdir().unwrap();
        let p = dir.path().join("r.json");
        write_atomic(&p, "one").unwrap();
        write_atomic(&p, "two").unwrap();
        assert_eq!(std::fs::read_to_string(&p).unwrap(), "two");
    }
}
