//! C ABI for qks-core.
//!
//! Graphs cross the boundary as opaque `QksGraph` handles. Every fallible
//! call returns a [`QksStatus`] and writes its result through an out
//! pointer; on failure the message is available from [`qks_last_error`]
//! until the next failing call on the same thread. Strings returned by the
//! library must be released with [`qks_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use qks_core::capacity::lovasz_theta;
use qks_core::catalog::builtin;
use qks_core::context::{ks_check_with, KsOptions};
use qks_core::formats::parse_graph;
use qks_core::graph::{
    automorphism_group, chromatic_number, independence_number, planarity, OrthoGraph,
};
use qks_core::report::{run, Command, Settings};
use qks_core::states::{enumerate_rays, filter_real, RayConfig, DEFAULT_SEED};
use qks_core::Error;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QksStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    Parse = 3,
    UnknownEntry = 4,
    TooLarge = 5,
    BudgetExceeded = 6,
    NotConverged = 7,
    AnalysisFailed = 8,
    Io = 9,
    Panic = 10,
}

/// Opaque graph handle.
pub struct QksGraph {
    inner: OrthoGraph,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("interior nuls removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> QksStatus {
    match e {
        Error::InvalidArgument(_) | Error::UnknownVertex { .. } => QksStatus::InvalidArgument,
        Error::Parse { .. } => QksStatus::Parse,
        Error::UnknownCatalogEntry(_) => QksStatus::UnknownEntry,
        Error::TooLarge { .. } => QksStatus::TooLarge,
        Error::BudgetExceeded(_) => QksStatus::BudgetExceeded,
        Error::NotConverged { .. } => QksStatus::NotConverged,
        Error::Io(_) => QksStatus::Io,
        _ => QksStatus::AnalysisFailed,
    }
}

struct Failure(QksStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(status_of(&e), e.to_string())
    }
}

fn null(what: &str) -> Failure {
    Failure(QksStatus::NullPointer, format!("{what} is null"))
}

/// Runs `f`, turning errors and panics into a status plus last-error message.
fn guard(f: impl FnOnce() -> Result<(), Failure>) -> QksStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => QksStatus::Ok,
        Ok(Err(Failure(status, msg))) => {
            set_error(msg);
            status
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            set_error(format!("internal panic: {msg}"));
            QksStatus::Panic
        }
    }
}

unsafe fn graph_ref<'a>(g: *const QksGraph) -> Result<&'a OrthoGraph, Failure> {
    g.as_ref().map(|h| &h.inner).ok_or_else(|| null("graph"))
}

unsafe fn out_mut<'a, T>(p: *mut T, what: &str) -> Result<&'a mut T, Failure> {
    p.as_mut().ok_or_else(|| null(what))
}

unsafe fn str_arg<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure(QksStatus::InvalidArgument, format!("{what} is not UTF-8")))
}

fn emit(graph: OrthoGraph, out: &mut *mut QksGraph) {
    *out = Box::into_raw(Box::new(QksGraph { inner: graph }));
}

/// Library version as a static nul-terminated string.
#[no_mangle]
pub extern "C" fn qks_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Message of the last failed call on this thread, or null. Owned by the
/// library; valid until the next failing call on this thread.
#[no_mangle]
pub extern "C" fn qks_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Builds a graph on `n` vertices from `edge_count` pairs stored flat in
/// `edges` (`u0 v0 u1 v1 ...`). `edges` may be null when `edge_count` is 0.
///
/// # Safety
/// `edges` must point to `2 * edge_count` readable values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qks_graph_new(
    n: usize,
    edges: *const u32,
    edge_count: usize,
    out: *mut *mut QksGraph,
) -> QksStatus {
    guard(|| {
        let out = out_mut(out, "out")?;
        let flat: &[u32] = match (edges.is_null(), edge_count) {
            (_, 0) => &[],
            (true, _) => return Err(null("edges")),
            (false, m) => std::slice::from_raw_parts(edges, 2 * m),
        };
        let pairs = flat.chunks_exact(2).map(|p| (p[0] as usize, p[1] as usize));
        emit(OrthoGraph::from_edges(n, pairs)?, out);
        Ok(())
    })
}

/// Looks up a catalog graph such as `"g11"` or `"cycle-7"`.
///
/// # Safety
/// `name` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qks_graph_builtin(
    name: *const c_char,
    out: *mut *mut QksGraph,
) -> QksStatus {
    guard(|| {
        let out = out_mut(out, "out")?;
        let entry = builtin(str_arg(name, "name")?)?;
        emit(entry.graph, out);
        Ok(())
    })
}

/// Parses the `vertices <n>` / `u v` edge-list text format.
///
/// # Safety
/// `text` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qks_graph_parse(
    text: *const c_char,
    out: *mut *mut QksGraph,
) -> QksStatus {
    guard(|| {
        let out = out_mut(out, "out")?;
        emit(parse_graph(str_arg(text, "text")?)?, out);
        Ok(())
    })
}

/// Releases a graph. Null is ignored.
///
/// # Safety
/// `g` must come from this library and not have been freed already.
#[no_mangle]
pub unsafe extern "C" fn qks_graph_free(g: *mut QksGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Vertex count, or 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn qks_graph_vertex_count(g: *const QksGraph) -> usize {
    g.as_ref().map_or(0, |h| h.inner.n())
}

/// Edge count, or 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn qks_graph_edge_count(g: *const QksGraph) -> usize {
    g.as_ref().map_or(0, |h| h.inner.edge_count())
}

/// Kochen-Specker check with maximal cliques as contexts. `budget` 0 means
/// unlimited. When the graph is not contextual and `witness` is non-null,
/// the 0/1 assignment is written to `witness[0..n]`.
///
/// # Safety
/// `g` must be a live handle, `contextual` writable, and `witness` null or
/// writable for `qks_graph_vertex_count(g)` bytes.
#[no_mangle]
pub unsafe extern "C" fn qks_ks_check(
    g: *const QksGraph,
    budget: u64,
    contextual: *mut bool,
    witness: *mut u8,
) -> QksStatus {
    guard(|| {
        let g = graph_ref(g)?;
        let contextual = out_mut(contextual, "contextual")?;
        let options = KsOptions {
            node_budget: (budget > 0).then_some(budget),
        };
        let verdict = ks_check_with(g, options)?;
        *contextual = verdict.contextual;
        if let (Some(w), false) = (verdict.witness, witness.is_null()) {
            ptr::copy_nonoverlapping(w.as_ptr(), witness, w.len());
        }
        Ok(())
    })
}

/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn qks_chromatic_number(g: *const QksGraph, out: *mut usize) -> QksStatus {
    guard(|| {
        let g = graph_ref(g)?;
        *out_mut(out, "out")? = chromatic_number(g).chromatic_number;
        Ok(())
    })
}

/// Independence number; `budget` 0 means unlimited.
///
/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn qks_independence_number(
    g: *const QksGraph,
    budget: u64,
    out: *mut usize,
) -> QksStatus {
    guard(|| {
        let g = graph_ref(g)?;
        let out = out_mut(out, "out")?;
        let (alpha, _) =
            independence_number(g, (budget > 0).then_some(budget)).ok_or_else(|| {
                Failure(
                    QksStatus::BudgetExceeded,
                    format!("independence search exceeded {budget} nodes"),
                )
            })?;
        *out = alpha;
        Ok(())
    })
}

/// Order of the automorphism group (graphs up to 16 vertices).
///
/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn qks_automorphism_order(g: *const QksGraph, out: *mut u64) -> QksStatus {
    guard(|| {
        let g = graph_ref(g)?;
        *out_mut(out, "out")? = automorphism_group(g)?.order;
        Ok(())
    })
}

/// Lovász number of the graph (up to 64 vertices).
///
/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn qks_lovasz_theta(g: *const QksGraph, out: *mut f64) -> QksStatus {
    guard(|| {
        let g = graph_ref(g)?;
        *out_mut(out, "out")? = lovasz_theta(g)?;
        Ok(())
    })
}

/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn qks_is_planar(g: *const QksGraph, out: *mut bool) -> QksStatus {
    guard(|| {
        let g = graph_ref(g)?;
        *out_mut(out, "out")? = planarity(g)?.is_planar();
        Ok(())
    })
}

/// Distinct and real eigenray counts for dimension `q`. `seed` 0 selects the
/// built-in default.
///
/// # Safety
/// `rays` and `real` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qks_ray_counts(
    q: u32,
    seed: u64,
    rays: *mut usize,
    real: *mut usize,
) -> QksStatus {
    guard(|| {
        let rays = out_mut(rays, "rays")?;
        let real = out_mut(real, "real")?;
        if q < 2 {
            return Err(Failure(
                QksStatus::InvalidArgument,
                format!("q must be at least 2, got {q}"),
            ));
        }
        let config = RayConfig {
            seed: if seed == 0 { DEFAULT_SEED } else { seed },
            ..RayConfig::default()
        };
        let census = enumerate_rays(q, config)?;
        *rays = census.rays.len();
        *real = filter_real(&census.rays).len();
        Ok(())
    })
}

/// Full `analyze` report for a catalog name or file path, as JSON. Release
/// the string with [`qks_string_free`].
///
/// # Safety
/// `input` must be a nul-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn qks_analyze_json(
    input: *const c_char,
    out: *mut *mut c_char,
) -> QksStatus {
    guard(|| {
        let out = out_mut(out, "out")?;
        let command = Command::Analyze {
            input: str_arg(input, "input")?.to_string(),
        };
        let json = run(&command, &Settings::default())?.to_json();
        *out = CString::new(json).expect("JSON has no nuls").into_raw();
        Ok(())
    })
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed already.
#[no_mangle]
pub unsafe extern "C" fn qks_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
