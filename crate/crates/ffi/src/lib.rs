//! C ABI over `divgraph`.
//!
//! Every fallible function returns a [`DgStatus`] and writes results through
//! out-pointers. On failure a message is kept per thread and can be read
//! with [`dg_last_error_message`]. Handles are opaque and must be released
//! with the matching `*_free` function; strings returned by the library must
//! be released with [`dg_string_free`]. Panics never cross the boundary.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use divgraph::analysis::certificate;
use divgraph::io::parse_group_json;
use divgraph::{all_subgroups, catalog_str, divisions, DivisionGraph, Group, GroupError, Limits};

/// Result codes.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DgStatus {
    Ok = 0,
    /// A null pointer or non-UTF-8 string was passed.
    InvalidArgument = 1,
    /// The group input was rejected.
    InvalidGroup = 2,
    /// An order, lattice or subgroup cap was exceeded.
    CapExceeded = 3,
    /// The canonical-labeling search budget was exhausted.
    BudgetExceeded = 4,
    /// An internal invariant failed.
    Internal = 5,
    /// A panic was caught.
    Panic = 6,
}

/// Opaque group handle.
pub struct DgGroup {
    group: Group,
}

/// Opaque division graph handle.
pub struct DgDivisionGraph {
    graph: DivisionGraph,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).ok());
}

struct Fail(DgStatus, String);

impl From<GroupError> for Fail {
    fn from(e: GroupError) -> Self {
        let status = match e {
            GroupError::OrderCapExceeded { .. } => DgStatus::CapExceeded,
            _ => DgStatus::InvalidGroup,
        };
        Fail(status, e.to_string())
    }
}

impl From<divgraph::LatticeError> for Fail {
    fn from(e: divgraph::LatticeError) -> Self {
        Fail(DgStatus::CapExceeded, e.to_string())
    }
}

impl From<divgraph::AnalysisError> for Fail {
    fn from(e: divgraph::AnalysisError) -> Self {
        let status = match e {
            divgraph::AnalysisError::CanonicalizationBudgetExceeded { .. } => DgStatus::BudgetExceeded,
            divgraph::AnalysisError::Lattice(_) => DgStatus::CapExceeded,
            divgraph::AnalysisError::MalformedGraph(_) => DgStatus::Internal,
        };
        Fail(status, e.to_string())
    }
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> DgStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            DgStatus::Ok
        }
        Ok(Err(Fail(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("panic inside divgraph");
            DgStatus::Panic
        }
    }
}

fn null_arg(what: &str) -> Fail {
    Fail(DgStatus::InvalidArgument, format!("{what} is null"))
}

unsafe fn read_str<'a>(s: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if s.is_null() {
        return Err(null_arg(what));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| Fail(DgStatus::InvalidArgument, format!("{what} is not UTF-8")))
}

unsafe fn deref<'a, T>(p: *const T, what: &str) -> Result<&'a T, Fail> {
    p.as_ref().ok_or_else(|| null_arg(what))
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null_arg("output pointer"));
    }
    out.write(value);
    Ok(())
}

fn c_string(s: String) -> Result<*mut c_char, Fail> {
    CString::new(s)
        .map(CString::into_raw)
        .map_err(|_| Fail(DgStatus::Internal, "output contains a NUL byte".into()))
}

/// Message of the last failed call on this thread, or null. The pointer
/// stays valid until the next call into the library on this thread.
#[no_mangle]
pub extern "C" fn dg_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Builds a group from a catalog descriptor such as `"symmetric:4"`.
///
/// # Safety
/// `descriptor` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dg_group_from_catalog(descriptor: *const c_char, out: *mut *mut DgGroup) -> DgStatus {
    guard(|| {
        let d = read_str(descriptor, "descriptor")?;
        let group = catalog_str(d, &Limits::default())?;
        write_out(out, Box::into_raw(Box::new(DgGroup { group })))
    })
}

/// Builds a group from the JSON group format (table or generators).
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dg_group_from_json(json: *const c_char, out: *mut *mut DgGroup) -> DgStatus {
    guard(|| {
        let text = read_str(json, "json")?;
        let group = parse_group_json(text, &Limits::default())?;
        write_out(out, Box::into_raw(Box::new(DgGroup { group })))
    })
}

/// # Safety
/// `group` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn dg_group_free(group: *mut DgGroup) {
    if !group.is_null() {
        drop(Box::from_raw(group));
    }
}

/// # Safety
/// `group` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dg_group_order(group: *const DgGroup, out: *mut usize) -> DgStatus {
    guard(|| write_out(out, deref(group, "group")?.group.order()))
}

/// # Safety
/// `group` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dg_group_division_count(group: *const DgGroup, out: *mut usize) -> DgStatus {
    guard(|| write_out(out, divisions(&deref(group, "group")?.group).len()))
}

/// # Safety
/// `group` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dg_division_graph_new(group: *const DgGroup, out: *mut *mut DgDivisionGraph) -> DgStatus {
    guard(|| {
        let g = &deref(group, "group")?.group;
        let l = all_subgroups(g, &Limits::default())?;
        let graph = divgraph::divgraph::division_graph_with_lattice(g, &l);
        write_out(out, Box::into_raw(Box::new(DgDivisionGraph { graph })))
    })
}

/// # Safety
/// `graph` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn dg_division_graph_free(graph: *mut DgDivisionGraph) {
    if !graph.is_null() {
        drop(Box::from_raw(graph));
    }
}

/// # Safety
/// `graph` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dg_division_graph_component_count(graph: *const DgDivisionGraph, out: *mut usize) -> DgStatus {
    guard(|| write_out(out, deref(graph, "graph")?.graph.components.len()))
}

/// JSON rendering; release with [`dg_string_free`].
///
/// # Safety
/// `graph` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dg_division_graph_to_json(graph: *const DgDivisionGraph, out: *mut *mut c_char) -> DgStatus {
    guard(|| write_out(out, c_string(deref(graph, "graph")?.graph.to_json())?))
}

/// Graphviz rendering; release with [`dg_string_free`].
///
/// # Safety
/// `graph` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dg_division_graph_to_dot(graph: *const DgDivisionGraph, out: *mut *mut c_char) -> DgStatus {
    guard(|| write_out(out, c_string(deref(graph, "graph")?.graph.to_dot())?))
}

/// SHA-256 of the canonical certificate, as lowercase hex; release with
/// [`dg_string_free`].
///
/// # Safety
/// `graph` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dg_division_graph_fingerprint(
    graph: *const DgDivisionGraph,
    budget: usize,
    out: *mut *mut c_char,
) -> DgStatus {
    guard(|| {
        let cert = certificate(&deref(graph, "graph")?.graph, budget)?;
        write_out(out, c_string(cert.fingerprint())?)
    })
}

/// Writes 1 to `same` if the division graphs are equivalent, else 0.
///
/// # Safety
/// `a` and `b` must be live handles; `same` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dg_compare(a: *const DgGroup, b: *const DgGroup, budget: usize, same: *mut i32) -> DgStatus {
    guard(|| {
        let limits = Limits { search_budget: budget, ..Limits::default() };
        let r = divgraph::analysis::compare(&deref(a, "a")?.group, &deref(b, "b")?.group, &limits)?;
        write_out(same, (r == divgraph::analysis::Comparison::Same) as i32)
    })
}

/// # Safety
/// `s` must be null or a string returned by this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn dg_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
