//! C ABI over `aec-core`.
//!
//! Graphs and colorings are opaque heap handles owned by the caller and
//! released with the matching `*_free`. Every fallible call returns an
//! [`AecStatus`]; on failure a message is kept per thread and can be read
//! with [`aec_last_error`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use aec_core::color::PartialEdgeColoring;
use aec_core::driver::{color_connected_6, color_graph_7};
use aec_core::error::Error;
use aec_core::graph::{parse_edge_list, Graph, VertexId};
use aec_core::oracle;

/// Result of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AecStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    /// The input breaks a precondition: degree above 4, not connected,
    /// too many edges for six colors.
    Precondition = 3,
    Parse = 4,
    /// The coloring is not total, proper and acyclic.
    NotAcyclic = 5,
    Infeasible = 6,
    TooLarge = 7,
    Internal = 8,
}

pub struct AecGraph {
    graph: Graph,
}

/// A coloring together with a copy of the graph it colors.
pub struct AecColoring {
    graph: Graph,
    coloring: PartialEdgeColoring,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = msg);
}

fn status_of(e: &Error) -> AecStatus {
    match e {
        Error::DegreeViolation(_)
        | Error::Disconnected
        | Error::PreconditionViolated(_)
        | Error::InfeasibleSpec(_) => AecStatus::Precondition,
        Error::DuplicateEdge(..)
        | Error::SelfLoop(_)
        | Error::UnknownEdge(_)
        | Error::UnknownVertex(_) => AecStatus::InvalidArgument,
        Error::Parse { .. } | Error::Replay { .. } => AecStatus::Parse,
        Error::Infeasible(_) => AecStatus::Infeasible,
        Error::TooLarge { .. } => AecStatus::TooLarge,
        _ => AecStatus::Internal,
    }
}

fn fail(e: Error) -> AecStatus {
    set_error(e.to_string());
    status_of(&e)
}

/// Runs `f`, turning a panic into `Internal`.
fn guard(f: impl FnOnce() -> AecStatus) -> AecStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(_) => {
            set_error("panic inside aec");
            AecStatus::Internal
        }
    }
}

macro_rules! deref {
    ($p:expr) => {
        match unsafe { $p.as_ref() } {
            Some(r) => r,
            None => {
                set_error(concat!(stringify!($p), " is null"));
                return AecStatus::NullPointer;
            }
        }
    };
}

macro_rules! deref_mut {
    ($p:expr) => {
        match unsafe { $p.as_mut() } {
            Some(r) => r,
            None => {
                set_error(concat!(stringify!($p), " is null"));
                return AecStatus::NullPointer;
            }
        }
    };
}

/// Message for the last failed call on this thread. Valid until the next
/// failing call on the same thread; never null.
#[no_mangle]
pub extern "C" fn aec_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// A graph with `n` isolated vertices `0..n`.
#[no_mangle]
pub extern "C" fn aec_graph_new(n: u32) -> *mut AecGraph {
    Box::into_raw(Box::new(AecGraph {
        graph: Graph::with_vertices(n as usize),
    }))
}

/// Parses the edge-list text format (`n m` header, then `u v` lines).
///
/// # Safety
/// `text` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn aec_graph_parse(
    text: *const c_char,
    out: *mut *mut AecGraph,
) -> AecStatus {
    guard(|| {
        let out = deref_mut!(out);
        if text.is_null() {
            set_error("text is null");
            return AecStatus::NullPointer;
        }
        let Ok(text) = CStr::from_ptr(text).to_str() else {
            set_error("text is not UTF-8");
            return AecStatus::Parse;
        };
        match parse_edge_list(text) {
            Ok(graph) => {
                *out = Box::into_raw(Box::new(AecGraph { graph }));
                AecStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

/// # Safety
/// `g` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn aec_graph_free(g: *mut AecGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// # Safety
/// `g` must be a live graph handle.
#[no_mangle]
pub unsafe extern "C" fn aec_graph_add_edge(g: *mut AecGraph, u: u32, v: u32) -> AecStatus {
    guard(|| {
        let g = deref_mut!(g);
        match g.graph.add_edge(VertexId(u), VertexId(v)) {
            Ok(_) => AecStatus::Ok,
            Err(e) => fail(e),
        }
    })
}

/// # Safety
/// `g` must be a live graph handle or null.
#[no_mangle]
pub unsafe extern "C" fn aec_graph_vertex_count(g: *const AecGraph) -> u32 {
    g.as_ref().map_or(0, |g| g.graph.vertex_count() as u32)
}

/// # Safety
/// `g` must be a live graph handle or null.
#[no_mangle]
pub unsafe extern "C" fn aec_graph_edge_count(g: *const AecGraph) -> u32 {
    g.as_ref().map_or(0, |g| g.graph.edge_count() as u32)
}

/// Colors `g` acyclically. With `palette == 6` the graph must be connected
/// with at most `2n - 1` edges; `palette == 7` takes any graph.
///
/// # Safety
/// `g` must be a live graph handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn aec_color(
    g: *const AecGraph,
    palette: u8,
    out: *mut *mut AecColoring,
) -> AecStatus {
    guard(|| {
        let g = deref!(g);
        let out = deref_mut!(out);
        let res = match palette {
            6 => color_connected_6(&g.graph),
            7 => color_graph_7(&g.graph),
            _ => {
                set_error(format!("palette must be 6 or 7, got {palette}"));
                return AecStatus::InvalidArgument;
            }
        };
        match res {
            Ok(coloring) => {
                *out = Box::into_raw(Box::new(AecColoring {
                    graph: g.graph.clone(),
                    coloring,
                }));
                AecStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

/// # Safety
/// `c` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn aec_coloring_free(c: *mut AecColoring) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

/// Color of edge `uv`, 1-based.
///
/// # Safety
/// `c` must be a live coloring handle and `color` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn aec_coloring_get(
    c: *const AecColoring,
    u: u32,
    v: u32,
    color: *mut u8,
) -> AecStatus {
    guard(|| {
        let c = deref!(c);
        let color = deref_mut!(color);
        let Some(e) = c.graph.edge_between(VertexId(u), VertexId(v)) else {
            set_error(format!("no edge {u}-{v}"));
            return AecStatus::InvalidArgument;
        };
        match c.coloring.get(e) {
            Some(k) => {
                *color = k.get();
                AecStatus::Ok
            }
            None => fail(Error::Uncolored(e)),
        }
    })
}

/// Number of distinct colors used, 0 for a null handle.
///
/// # Safety
/// `c` must be a live coloring handle or null.
#[no_mangle]
pub unsafe extern "C" fn aec_coloring_colors_used(c: *const AecColoring) -> u32 {
    c.as_ref()
        .map_or(0, |c| c.coloring.colors_used(&c.graph).len() as u32)
}

/// `Ok` if the coloring is total, proper and has no bichromatic cycle.
///
/// # Safety
/// `c` must be a live coloring handle.
#[no_mangle]
pub unsafe extern "C" fn aec_coloring_verify(c: *const AecColoring) -> AecStatus {
    guard(|| {
        let c = deref!(c);
        if !c.coloring.is_total(&c.graph) {
            set_error("coloring is not total");
            return AecStatus::NotAcyclic;
        }
        match c.coloring.verify_acyclic(&c.graph) {
            Ok(()) => AecStatus::Ok,
            Err(v) => {
                set_error(v.to_string());
                AecStatus::NotAcyclic
            }
        }
    })
}

/// Exact acyclic chromatic index of a small graph (at most
/// `oracle::DEFAULT_EDGE_LIMIT` edges), trying up to `kmax` colors.
/// `nodes` may be null.
///
/// # Safety
/// `g` must be a live graph handle and `index` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn aec_exact_index(
    g: *const AecGraph,
    kmax: u8,
    index: *mut u8,
    nodes: *mut u64,
) -> AecStatus {
    guard(|| {
        let g = deref!(g);
        let index = deref_mut!(index);
        match oracle::exact_index(&g.graph, kmax) {
            Ok(r) => {
                *index = r.exact_index;
                if let Some(n) = nodes.as_mut() {
                    *n = r.nodes_explored;
                }
                AecStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

/// Library version, static storage.
#[no_mangle]
pub extern "C" fn aec_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::ptr;

    #[test]
    fn status_mapping() {
        assert_eq!(status_of(&Error::Disconnected), AecStatus::Precondition);
        assert_eq!(status_of(&Error::Infeasible(3)), AecStatus::Infeasible);
        assert_eq!(
            status_of(&Error::Internal {
                tag: "t",
                detail: String::new()
            }),
            AecStatus::Internal
        );
    }

    #[test]
    fn null_handles() {
        let mut out = ptr::null_mut();
        assert_eq!(
            unsafe { aec_color(ptr::null(), 6, &mut out) },
            AecStatus::NullPointer
        );
        assert!(out.is_null());
        let msg = unsafe { CStr::from_ptr(aec_last_error()) };
        assert!(msg.to_str().unwrap().contains("null"));
        unsafe { aec_graph_free(ptr::null_mut()) };
        assert_eq!(unsafe { aec_graph_edge_count(ptr::null()) }, 0);
    }
}
