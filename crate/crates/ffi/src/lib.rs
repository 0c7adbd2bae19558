//! C interface to `triad-core`.
//!
//! Graphs cross the boundary as opaque `TriadGraph` handles. Every fallible
//! call returns a `TriadStatus`; on failure a message is kept per thread and
//! can be read with `triad_last_error_message`. Strings returned through
//! `char **` out-parameters are owned by the caller and released with
//! `triad_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use triad_core::coloring::{analyze, check_certificate, GrundyCertificate};
use triad_core::constructions::{
    basic_bipartite, extended_graph, g_star, is_realizable, l_graph, min_order, realize,
    reduced_graph,
};
use triad_core::{are_isomorphic, canonical_form, parse_graph6, write_graph6};
use triad_core::{Error, Graph, LVariant, Triple, VertexSet};

/// Result of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TriadStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    Capacity = 3,
    Parse = 4,
    Domain = 5,
    Utf8 = 6,
    Panic = 7,
}

/// Graph families accepted by `triad_construct`.
///
/// Parameters `a` and `b`:
/// - `BASIC_BIPARTITE`: a = k
/// - `G_STAR`: a = g, b = h
/// - `REDUCED`: a = t
/// - `EXTENDED`: a = ell
/// - `L1`, `L2`: a = h
/// - `COMPLETE`: a = order
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TriadFamily {
    BasicBipartite = 0,
    GStar = 1,
    Reduced = 2,
    Extended = 3,
    L1 = 4,
    L2 = 5,
    Complete = 6,
}

impl TriadFamily {
    fn from_code(code: u32) -> Option<Self> {
        use TriadFamily::*;
        [BasicBipartite, GStar, Reduced, Extended, L1, L2, Complete]
            .into_iter()
            .find(|f| *f as u32 == code)
    }
}

/// The invariant chain of one graph.
#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct TriadInvariants {
    pub n: usize,
    pub m: usize,
    pub omega: usize,
    pub chi: usize,
    pub gamma: usize,
    pub psi: usize,
}

/// Opaque graph handle.
pub struct TriadGraph(Graph);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

fn status_of(e: &Error) -> TriadStatus {
    match e {
        Error::InvalidArgument(_) => TriadStatus::InvalidArgument,
        Error::Capacity { .. } => TriadStatus::Capacity,
        Error::Parse { .. } => TriadStatus::Parse,
        Error::Domain(_) => TriadStatus::Domain,
    }
}

struct Fail(TriadStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

fn null(what: &str) -> Fail {
    Fail(TriadStatus::NullPointer, format!("{what} is null"))
}

/// Runs `body`, mapping errors and panics to a status.
fn guard(body: impl FnOnce() -> Result<(), Fail>) -> TriadStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => TriadStatus::Ok,
        Ok(Err(Fail(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            TriadStatus::Panic
        }
    }
}

unsafe fn graph_ref<'a>(g: *const TriadGraph, what: &str) -> Result<&'a Graph, Fail> {
    g.as_ref().map(|h| &h.0).ok_or_else(|| null(what))
}

unsafe fn out_ref<'a, T>(p: *mut T, what: &str) -> Result<&'a mut T, Fail> {
    p.as_mut().ok_or_else(|| null(what))
}

unsafe fn read_str<'a>(s: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if s.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|e| Fail(TriadStatus::Utf8, format!("{what}: {e}")))
}

fn give_string(s: String) -> *mut c_char {
    CString::new(s)
        .map(CString::into_raw)
        .unwrap_or(ptr::null_mut())
}

fn give_graph(g: Graph) -> *mut TriadGraph {
    Box::into_raw(Box::new(TriadGraph(g)))
}

unsafe fn read_set(items: *const usize, len: usize, what: &str) -> Result<VertexSet, Fail> {
    if len == 0 {
        return Ok(VertexSet::EMPTY);
    }
    if items.is_null() {
        return Err(null(what));
    }
    let mut s = VertexSet::EMPTY;
    for &v in std::slice::from_raw_parts(items, len) {
        if v >= 64 {
            return Err(Fail(
                TriadStatus::InvalidArgument,
                format!("{what}: vertex {v} out of range"),
            ));
        }
        s.insert(v);
    }
    Ok(s)
}

/// Message for the last failed call on this thread, or NULL. The pointer
/// stays valid until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn triad_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Releases a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn triad_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Releases a graph handle. NULL is ignored.
///
/// # Safety
/// `g` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn triad_graph_free(g: *mut TriadGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Parses a graph6 string.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn triad_graph_from_graph6(
    text: *const c_char,
    out: *mut *mut TriadGraph,
) -> TriadStatus {
    guard(|| {
        let out = out_ref(out, "out")?;
        let g = parse_graph6(read_str(text, "text")?)?;
        *out = give_graph(g);
        Ok(())
    })
}

/// Builds a graph from `edge_count` pairs stored flat in `edges`.
///
/// # Safety
/// `edges` must hold `2 * edge_count` values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn triad_graph_from_edges(
    n: usize,
    edges: *const usize,
    edge_count: usize,
    out: *mut *mut TriadGraph,
) -> TriadStatus {
    guard(|| {
        let out = out_ref(out, "out")?;
        let pairs: Vec<(usize, usize)> = if edge_count == 0 {
            Vec::new()
        } else if edges.is_null() {
            return Err(null("edges"));
        } else {
            std::slice::from_raw_parts(edges, 2 * edge_count)
                .chunks_exact(2)
                .map(|p| (p[0], p[1]))
                .collect()
        };
        *out = give_graph(Graph::from_edges(n, &pairs)?);
        Ok(())
    })
}

/// Writes the graph6 encoding of `g`.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn triad_graph_to_graph6(
    g: *const TriadGraph,
    out: *mut *mut c_char,
) -> TriadStatus {
    guard(|| {
        let g = graph_ref(g, "graph")?;
        *out_ref(out, "out")? = give_string(write_graph6(g));
        Ok(())
    })
}

/// Vertex count of `g`, or 0 for NULL.
///
/// # Safety
/// `g` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn triad_graph_order(g: *const TriadGraph) -> usize {
    g.as_ref().map_or(0, |h| h.0.n())
}

/// Edge count of `g`, or 0 for NULL.
///
/// # Safety
/// `g` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn triad_graph_size(g: *const TriadGraph) -> usize {
    g.as_ref().map_or(0, |h| h.0.m())
}

/// Whether `u` and `v` are adjacent. Out-of-range vertices give false.
///
/// # Safety
/// `g` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn triad_graph_has_edge(g: *const TriadGraph, u: usize, v: usize) -> bool {
    match g.as_ref() {
        Some(h) if u < h.0.n() && v < h.0.n() => h.0.has_edge(u, v),
        _ => false,
    }
}

/// Name of vertex `v` (the construction label when present).
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn triad_graph_label(
    g: *const TriadGraph,
    v: usize,
    out: *mut *mut c_char,
) -> TriadStatus {
    guard(|| {
        let g = graph_ref(g, "graph")?;
        let out = out_ref(out, "out")?;
        if v >= g.n() {
            return Err(Fail(
                TriadStatus::InvalidArgument,
                format!("vertex {v} out of range"),
            ));
        }
        *out = give_string(g.label(v));
        Ok(())
    })
}

/// Computes ω, χ, Γ and ψ.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn triad_analyze(
    g: *const TriadGraph,
    out: *mut TriadInvariants,
) -> TriadStatus {
    guard(|| {
        let g = graph_ref(g, "graph")?;
        let out = out_ref(out, "out")?;
        let r = analyze(g)?;
        *out = TriadInvariants {
            n: r.n,
            m: r.m,
            omega: r.omega,
            chi: r.chi,
            gamma: r.gamma,
            psi: r.psi,
        };
        Ok(())
    })
}

/// Full invariant report with witnesses, as JSON.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn triad_analyze_json(
    g: *const TriadGraph,
    out: *mut *mut c_char,
) -> TriadStatus {
    guard(|| {
        let g = graph_ref(g, "graph")?;
        let out = out_ref(out, "out")?;
        let r = analyze(g)?;
        let json =
            serde_json::to_string(&r).map_err(|e| Fail(TriadStatus::Panic, e.to_string()))?;
        *out = give_string(json);
        Ok(())
    })
}

/// Builds a member of one of the named families. `family` is a
/// `TriadFamily` value; anything else is an invalid argument.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn triad_construct(
    family: u32,
    a: usize,
    b: usize,
    out: *mut *mut TriadGraph,
) -> TriadStatus {
    guard(|| {
        let out = out_ref(out, "out")?;
        let family = TriadFamily::from_code(family).ok_or_else(|| {
            Fail(
                TriadStatus::InvalidArgument,
                format!("unknown family {family}"),
            )
        })?;
        let g = match family {
            TriadFamily::BasicBipartite => basic_bipartite(a)?,
            TriadFamily::GStar => g_star(a, b)?,
            TriadFamily::Reduced => reduced_graph(a)?,
            TriadFamily::Extended => extended_graph(a)?,
            TriadFamily::L1 => l_graph(a, LVariant::L1)?,
            TriadFamily::L2 => l_graph(a, LVariant::L2)?,
            TriadFamily::Complete => Graph::complete(a)?,
        };
        *out = give_graph(g);
        Ok(())
    })
}

/// Whether some graph has χ = f, Γ = g and ψ = h.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn triad_is_realizable(
    f: usize,
    g: usize,
    h: usize,
    out: *mut bool,
) -> TriadStatus {
    guard(|| {
        let out = out_ref(out, "out")?;
        *out = is_realizable(Triple::new(f, g, h)?);
        Ok(())
    })
}

/// Least order of a graph with χ = f, Γ = g and ψ = h. Fails with
/// `TRIAD_STATUS_DOMAIN` when the triple is not realizable.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn triad_min_order(
    f: usize,
    g: usize,
    h: usize,
    out: *mut usize,
) -> TriadStatus {
    guard(|| {
        let out = out_ref(out, "out")?;
        *out = min_order(Triple::new(f, g, h)?)?;
        Ok(())
    })
}

/// A graph of least order with χ = f, Γ = g and ψ = h.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn triad_realize(
    f: usize,
    g: usize,
    h: usize,
    out: *mut *mut TriadGraph,
) -> TriadStatus {
    guard(|| {
        let out = out_ref(out, "out")?;
        *out = give_graph(realize(Triple::new(f, g, h)?)?);
        Ok(())
    })
}

/// Canonical form of `g` as lowercase hex.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn triad_canonical_hex(
    g: *const TriadGraph,
    out: *mut *mut c_char,
) -> TriadStatus {
    guard(|| {
        let g = graph_ref(g, "graph")?;
        let out = out_ref(out, "out")?;
        *out = give_string(canonical_form(g)?.to_hex());
        Ok(())
    })
}

/// # Safety
/// `a` and `b` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn triad_are_isomorphic(
    a: *const TriadGraph,
    b: *const TriadGraph,
    out: *mut bool,
) -> TriadStatus {
    guard(|| {
        let a = graph_ref(a, "a")?;
        let b = graph_ref(b, "b")?;
        *out_ref(out, "out")? = are_isomorphic(a, b)?;
        Ok(())
    })
}

/// Checks a Grundy lower-bound certificate: `h_set` induces a subgraph with
/// Γ ≥ k and the stable set `s_set`, disjoint from it, dominates it.
///
/// On return `*valid` tells whether it holds. If it does and `implied` is not
/// NULL, `*implied` is set to k + 1. If it does not and `reason` is not NULL,
/// `*reason` receives an owned explanation; otherwise `*reason` is NULL.
///
/// # Safety
/// The vertex arrays must hold the stated number of entries; `g` must be a
/// live handle and `valid` writable.
#[no_mangle]
pub unsafe extern "C" fn triad_check_certificate(
    g: *const TriadGraph,
    h_set: *const usize,
    h_len: usize,
    s_set: *const usize,
    s_len: usize,
    k: usize,
    valid: *mut bool,
    implied: *mut usize,
    reason: *mut *mut c_char,
) -> TriadStatus {
    guard(|| {
        let g = graph_ref(g, "graph")?;
        let valid = out_ref(valid, "valid")?;
        let cert = GrundyCertificate {
            h_set: read_set(h_set, h_len, "h_set")?,
            s_set: read_set(s_set, s_len, "s_set")?,
            k,
        };
        let check = check_certificate(g, &cert)?;
        *valid = check.valid;
        if let (Some(b), Some(p)) = (check.implied_lower_bound, implied.as_mut()) {
            *p = b;
        }
        if let Some(r) = reason.as_mut() {
            *r = check.reason.map_or(ptr::null_mut(), give_string);
        }
        Ok(())
    })
}
