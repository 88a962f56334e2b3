//! C ABI over `cyclic_cutwidth`.
//!
//! Graphs and numberings cross the boundary as opaque handles created by
//! the `ccw_*_new`/constructor functions and released with the matching
//! `_free`. Every fallible call returns a `CcwStatus`; on failure a
//! message is kept per thread and can be copied out with
//! `ccw_last_error_message`. Vertex ids and positions are 0-based.

use std::cell::RefCell;
use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use cyclic_cutwidth::bounds::{ct_value, cwl_closed_form};
use cyclic_cutwidth::isoperimetric::theta_recursive;
use cyclic_cutwidth::metrics::all_metrics;
use cyclic_cutwidth::search::{exhaustive_ccw, exhaustive_lcw};
use cyclic_cutwidth::split::theorem_lower_bound;
use cyclic_cutwidth::{build_hypercube, gray_numbering, lex_numbering, Error, Graph, Host, Numbering};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CcwStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    OutOfRange = 3,
    Guard = 4,
    Mismatch = 5,
    Panic = 6,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CcwHost {
    Linear = 0,
    Cyclic = 1,
}

/// Opaque graph handle.
pub struct CcwGraph(Graph);

/// Opaque numbering handle.
pub struct CcwNumbering(Numbering);

/// Scalar metrics of one numbering, read on the path and on the cycle.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct CcwMetrics {
    pub lbw: usize,
    pub lwl: usize,
    pub lcw: usize,
    pub cbw: usize,
    pub cwl: usize,
    pub ccw: usize,
    pub ccw_lower: usize,
    /// False when the routing budget ran out before ccw was proven.
    pub exact: bool,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let msg = CString::new(msg.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn status_of(e: &Error) -> CcwStatus {
    match e {
        Error::Dimension { .. } | Error::OutOfRange(_) => CcwStatus::OutOfRange,
        Error::InvalidGraph(_) | Error::InvalidNumbering(_) | Error::Parse { .. } => CcwStatus::InvalidArgument,
        Error::HostMismatch { .. } | Error::SizeMismatch { .. } | Error::RoutingMismatch { .. } => {
            CcwStatus::Mismatch
        }
        Error::Guard(_) => CcwStatus::Guard,
    }
}

fn guarded(f: impl FnOnce() -> Result<(), CcwStatus>) -> CcwStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => CcwStatus::Ok,
        Ok(Err(status)) => status,
        Err(_) => {
            set_error("internal panic".into());
            CcwStatus::Panic
        }
    }
}

fn lib<T>(r: cyclic_cutwidth::Result<T>) -> Result<T, CcwStatus> {
    r.map_err(|e| {
        set_error(e.to_string());
        status_of(&e)
    })
}

fn non_null<T>(p: *const T, what: &str) -> Result<(), CcwStatus> {
    if p.is_null() {
        set_error(format!("{what} is null"));
        return Err(CcwStatus::NullPointer);
    }
    Ok(())
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), CcwStatus> {
    non_null(out, "output pointer")?;
    out.write(value);
    Ok(())
}

/// Copies the calling thread's last error message into `buf` (always
/// NUL-terminated when `len > 0`) and returns the full message length
/// excluding the terminator; 0 when no error is recorded.
///
/// # Safety
/// `buf` must be null or point to `len` writable bytes.
#[no_mangle]
pub unsafe extern "C" fn ccw_last_error_message(buf: *mut c_char, len: usize) -> usize {
    LAST_ERROR.with(|e| {
        let e = e.borrow();
        let Some(msg) = e.as_ref() else { return 0 };
        let bytes = msg.as_bytes();
        if !buf.is_null() && len > 0 {
            let n = bytes.len().min(len - 1);
            ptr::copy_nonoverlapping(bytes.as_ptr().cast::<c_char>(), buf, n);
            *buf.add(n) = 0;
        }
        bytes.len()
    })
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn ccw_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// # Safety
/// `out` must be a valid pointer to write a handle into.
#[no_mangle]
pub unsafe extern "C" fn ccw_graph_hypercube(n: u32, out: *mut *mut CcwGraph) -> CcwStatus {
    guarded(|| {
        non_null(out, "out")?;
        let g = lib(build_hypercube(n))?;
        write_out(out, Box::into_raw(Box::new(CcwGraph(g))))
    })
}

/// Builds a graph on `m` vertices from `edge_count` pairs stored flat in
/// `edges` (`u0, v0, u1, v1, ...`).
///
/// # Safety
/// `edges` must point to `2 * edge_count` readable values (or may be null
/// when `edge_count` is 0); `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ccw_graph_from_edges(
    m: usize,
    edges: *const usize,
    edge_count: usize,
    out: *mut *mut CcwGraph,
) -> CcwStatus {
    guarded(|| {
        non_null(out, "out")?;
        let flat: &[usize] = if edge_count == 0 {
            &[]
        } else {
            non_null(edges, "edges")?;
            std::slice::from_raw_parts(edges, 2 * edge_count)
        };
        let g = lib(Graph::new(m, flat.chunks_exact(2).map(|p| (p[0], p[1]))))?;
        write_out(out, Box::into_raw(Box::new(CcwGraph(g))))
    })
}

/// # Safety
/// `graph` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ccw_graph_free(graph: *mut CcwGraph) {
    if !graph.is_null() {
        drop(Box::from_raw(graph));
    }
}

/// # Safety
/// `graph` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn ccw_graph_vertex_count(graph: *const CcwGraph) -> usize {
    graph.as_ref().map_or(0, |g| g.0.vertex_count())
}

/// # Safety
/// `graph` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn ccw_graph_edge_count(graph: *const CcwGraph) -> usize {
    graph.as_ref().map_or(0, |g| g.0.edge_count())
}

fn numbering_out(out: *mut *mut CcwNumbering, eta: Numbering) -> Result<(), CcwStatus> {
    unsafe { write_out(out, Box::into_raw(Box::new(CcwNumbering(eta)))) }
}

/// Cyclic reflected Gray layout of Qₙ.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ccw_numbering_gray(n: u32, out: *mut *mut CcwNumbering) -> CcwStatus {
    guarded(|| {
        non_null(out, "out")?;
        numbering_out(out, lib(gray_numbering(n))?)
    })
}

/// Linear lexicographic layout of Qₙ.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ccw_numbering_lex(n: u32, out: *mut *mut CcwNumbering) -> CcwStatus {
    guarded(|| {
        non_null(out, "out")?;
        numbering_out(out, lib(lex_numbering(n))?)
    })
}

/// Numbering placing `placement[p]` at position `p`.
///
/// # Safety
/// `placement` must point to `m` readable values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ccw_numbering_from_placement(
    host: CcwHost,
    placement: *const usize,
    m: usize,
    out: *mut *mut CcwNumbering,
) -> CcwStatus {
    guarded(|| {
        non_null(out, "out")?;
        non_null(placement, "placement")?;
        let host = match host {
            CcwHost::Linear => Host::Linear,
            CcwHost::Cyclic => Host::Cyclic,
        };
        let p = std::slice::from_raw_parts(placement, m).to_vec();
        numbering_out(out, lib(Numbering::new(host, p))?)
    })
}

/// Copies the vertex order into `buf` (up to `len` entries) and returns
/// the numbering length.
///
/// # Safety
/// `numbering` must be a live handle; `buf` must be null or hold `len`
/// writable values.
#[no_mangle]
pub unsafe extern "C" fn ccw_numbering_placement(numbering: *const CcwNumbering, buf: *mut usize, len: usize) -> usize {
    let Some(eta) = numbering.as_ref() else { return 0 };
    let p = eta.0.placement();
    if !buf.is_null() {
        ptr::copy_nonoverlapping(p.as_ptr(), buf, p.len().min(len));
    }
    p.len()
}

/// # Safety
/// `numbering` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ccw_numbering_free(numbering: *mut CcwNumbering) {
    if !numbering.is_null() {
        drop(Box::from_raw(numbering));
    }
}

/// All scalar metrics; `budget` caps the routing search for ccw.
///
/// # Safety
/// Handles must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ccw_metrics(
    graph: *const CcwGraph,
    numbering: *const CcwNumbering,
    budget: u64,
    out: *mut CcwMetrics,
) -> CcwStatus {
    guarded(|| {
        non_null(graph, "graph")?;
        non_null(numbering, "numbering")?;
        non_null(out, "out")?;
        let r = lib(all_metrics(&(*graph).0, &(*numbering).0, budget))?;
        write_out(
            out,
            CcwMetrics {
                lbw: r.lbw,
                lwl: r.lwl,
                lcw: r.lcw,
                cbw: r.cbw,
                cwl: r.cwl,
                ccw: r.ccw,
                ccw_lower: r.ccw_lower,
                exact: r.exact,
            },
        )
    })
}

/// Exact minimum cyclic (`host` = cyclic) or linear cutwidth over all
/// numberings of a graph with at most 8 vertices. `witness` may be null.
///
/// # Safety
/// `graph` must be live; `optimum` writable; `witness` null or writable.
#[no_mangle]
pub unsafe extern "C" fn ccw_exhaustive(
    graph: *const CcwGraph,
    host: CcwHost,
    optimum: *mut usize,
    witness: *mut *mut CcwNumbering,
) -> CcwStatus {
    guarded(|| {
        non_null(graph, "graph")?;
        non_null(optimum, "optimum")?;
        let g = &(*graph).0;
        let r = lib(match host {
            CcwHost::Cyclic => exhaustive_ccw(g),
            CcwHost::Linear => exhaustive_lcw(g),
        })?;
        write_out(optimum, r.optimum)?;
        if !witness.is_null() {
            numbering_out(witness, r.witness)?;
        }
        Ok(())
    })
}

/// Fewest edges leaving an ℓ-vertex subset of Qₙ.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ccw_theta(n: u32, l: u64, out: *mut u64) -> CcwStatus {
    guarded(|| write_out(out, lib(theta_recursive(n, l))?))
}

/// ⌊5·2ⁿ⁻²/3⌋.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ccw_ct_value(n: u32, out: *mut u64) -> CcwStatus {
    guarded(|| write_out(out, lib(ct_value(n))?))
}

/// Cyclic wirelength of the Gray layout of Qₙ.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ccw_cwl_closed_form(n: u32, out: *mut u64) -> CcwStatus {
    guarded(|| write_out(out, lib(cwl_closed_form(n))?))
}

/// Cut lower bound for layouts of Qₙ that contain the easy facet split.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ccw_theorem_lower_bound(n: u32, out: *mut u64) -> CcwStatus {
    guarded(|| write_out(out, lib(theorem_lower_bound(n))?))
}
