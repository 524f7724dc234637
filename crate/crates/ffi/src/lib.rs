//! C interface to `induced-trees`.
//!
//! Objects cross the boundary as opaque handles created by `it_*_parse` and
//! released by the matching `it_*_free`. Every fallible call returns an
//! [`ItStatus`]; on failure `it_last_error_message` describes the error for
//! the calling thread. Strings returned by the library are released with
//! `it_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use induced_trees::coloring::greedy_refinement;
use induced_trees::embed::{
    bikernel_tree_embedding, br_tree_embedding, dag_tree_embedding, decreasing_tree_search,
};
use induced_trees::graph::{
    girth, is_proper, verify_embedding, Coloring, Embedding, RootedOrientedTree,
};
use induced_trees::guards::Guards;
use induced_trees::io::{parse_coloring, parse_graph, parse_tree, serialize_coloring, ParsedGraph};
use induced_trees::oracle::contains_induced_copy;
use induced_trees::Error;

/// Result of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ItStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    InvalidInput = 4,
    GuardExceeded = 5,
    Precondition = 6,
    BufferTooSmall = 7,
    SearchFailed = 8,
    Panic = 9,
}

/// Which embedding procedure `it_find_tree` runs.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ItVariant {
    /// Out- or in-tree in an acyclic digraph.
    Dag = 0,
    /// Any oriented tree in an acyclic digraph via kernel layers.
    Parity = 1,
    /// Any oriented tree by leaf peeling.
    Br = 2,
}

/// Properties of a tree image; the optional flags are `-1` when they do not
/// apply, else `0` or `1`.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ItVerdict {
    pub induced: bool,
    pub direction_exact: i8,
    pub rainbow: i8,
    pub decreasing: i8,
}

/// An undirected or oriented graph.
pub struct ItGraph(ParsedGraph);

/// A vertex coloring with its color order.
pub struct ItColoring(Coloring);

/// A rooted oriented tree.
pub struct ItTree(RootedOrientedTree);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let msg = CString::new(msg.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn status_of(e: &Error) -> ItStatus {
    match e {
        Error::Parse { .. } | Error::Io(_) => ItStatus::Parse,
        Error::GuardExceeded { .. } => ItStatus::GuardExceeded,
        Error::Precondition(_) => ItStatus::Precondition,
        Error::KernelNotFound { .. } | Error::BudgetExhausted(_) | Error::HostContract(_) => {
            ItStatus::SearchFailed
        }
        _ => ItStatus::InvalidInput,
    }
}

/// Runs `f`, recording any error or panic for `it_last_error_message`.
fn guarded(f: impl FnOnce() -> Result<(), (ItStatus, String)>) -> ItStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => ItStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            ItStatus::Panic
        }
    }
}

fn lib<T>(r: induced_trees::Result<T>) -> Result<T, (ItStatus, String)> {
    r.map_err(|e| (status_of(&e), e.to_string()))
}

fn null() -> (ItStatus, String) {
    (ItStatus::NullPointer, "null pointer argument".into())
}

unsafe fn text<'a>(s: *const c_char) -> Result<&'a str, (ItStatus, String)> {
    if s.is_null() {
        return Err(null());
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| (ItStatus::InvalidUtf8, "input is not valid UTF-8".into()))
}

unsafe fn obj<'a, T>(p: *const T) -> Result<&'a T, (ItStatus, String)> {
    p.as_ref().ok_or_else(null)
}

unsafe fn out<'a, T>(p: *mut T) -> Result<&'a mut T, (ItStatus, String)> {
    p.as_mut().ok_or_else(null)
}

/// Message for the last failed call on this thread, or null. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn it_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn it_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses `graph N` or `digraph N` followed by one edge per line.
///
/// # Safety
/// `input` must be a nul-terminated string and `graph` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn it_graph_parse(
    input: *const c_char,
    graph: *mut *mut ItGraph,
) -> ItStatus {
    guarded(|| {
        let g = lib(parse_graph(text(input)?))?;
        *out(graph)? = Box::into_raw(Box::new(ItGraph(g)));
        Ok(())
    })
}

/// # Safety
/// `graph` must be null or a handle from `it_graph_parse`, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn it_graph_free(graph: *mut ItGraph) {
    if !graph.is_null() {
        drop(Box::from_raw(graph));
    }
}

/// # Safety
/// `graph` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn it_graph_vertex_count(graph: *const ItGraph) -> usize {
    graph.as_ref().map_or(0, |g| g.0.vertex_count())
}

/// # Safety
/// `graph` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn it_graph_is_oriented(graph: *const ItGraph) -> bool {
    graph
        .as_ref()
        .is_some_and(|g| matches!(g.0, ParsedGraph::Digraph(_)))
}

/// Shortest cycle length of the underlying graph; 0 when acyclic.
///
/// # Safety
/// `graph` must be a live handle and `girth_out` writable.
#[no_mangle]
pub unsafe extern "C" fn it_graph_girth(graph: *const ItGraph, girth_out: *mut usize) -> ItStatus {
    guarded(|| {
        let g = obj(graph)?;
        *out(girth_out)? = girth(g.0.view()).finite().unwrap_or(0);
        Ok(())
    })
}

/// Parses `vertex color` lines, with an optional `order c1 c2 ...` line, for
/// a graph on `vertex_count` vertices.
///
/// # Safety
/// `input` must be a nul-terminated string and `coloring` writable.
#[no_mangle]
pub unsafe extern "C" fn it_coloring_parse(
    input: *const c_char,
    vertex_count: usize,
    coloring: *mut *mut ItColoring,
) -> ItStatus {
    guarded(|| {
        let c = lib(parse_coloring(text(input)?, vertex_count))?;
        *out(coloring)? = Box::into_raw(Box::new(ItColoring(c)));
        Ok(())
    })
}

/// # Safety
/// `coloring` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn it_coloring_free(coloring: *mut ItColoring) {
    if !coloring.is_null() {
        drop(Box::from_raw(coloring));
    }
}

/// # Safety
/// `coloring` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn it_coloring_num_colors(coloring: *const ItColoring) -> usize {
    coloring.as_ref().map_or(0, |c| c.0.num_colors())
}

/// Color of `vertex`, or 0 when out of range.
///
/// # Safety
/// `coloring` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn it_coloring_color(coloring: *const ItColoring, vertex: usize) -> u32 {
    coloring
        .as_ref()
        .filter(|c| vertex < c.0.len())
        .map_or(0, |c| c.0.color(vertex))
}

/// The coloring in the text format of `it_coloring_parse`; free with `it_string_free`.
///
/// # Safety
/// `coloring` must be a live handle and `text_out` writable.
#[no_mangle]
pub unsafe extern "C" fn it_coloring_to_string(
    coloring: *const ItColoring,
    text_out: *mut *mut c_char,
) -> ItStatus {
    guarded(|| {
        let c = obj(coloring)?;
        let s = CString::new(serialize_coloring(&c.0)).expect("serialized text has no nul");
        *out(text_out)? = s.into_raw();
        Ok(())
    })
}

/// # Safety
/// `graph` and `coloring` must be live handles and `proper` writable.
#[no_mangle]
pub unsafe extern "C" fn it_is_proper(
    graph: *const ItGraph,
    coloring: *const ItColoring,
    proper: *mut bool,
) -> ItStatus {
    guarded(|| {
        let (g, c) = (obj(graph)?, obj(coloring)?);
        *out(proper)? = lib(is_proper(g.0.view(), &c.0))?;
        Ok(())
    })
}

/// Greedy refinement of a proper coloring under its color order.
///
/// # Safety
/// `graph` and `coloring` must be live handles and `refined` writable.
#[no_mangle]
pub unsafe extern "C" fn it_refine(
    graph: *const ItGraph,
    coloring: *const ItColoring,
    refined: *mut *mut ItColoring,
) -> ItStatus {
    guarded(|| {
        let (g, c) = (obj(graph)?, obj(coloring)?);
        let res = lib(greedy_refinement(g.0.view(), &c.0))?;
        *out(refined)? = Box::into_raw(Box::new(ItColoring(res.alpha)));
        Ok(())
    })
}

/// Parses `tree N root R` followed by one arc per line.
///
/// # Safety
/// `input` must be a nul-terminated string and `tree` writable.
#[no_mangle]
pub unsafe extern "C" fn it_tree_parse(input: *const c_char, tree: *mut *mut ItTree) -> ItStatus {
    guarded(|| {
        let t = lib(parse_tree(text(input)?))?;
        *out(tree)? = Box::into_raw(Box::new(ItTree(t)));
        Ok(())
    })
}

/// # Safety
/// `tree` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn it_tree_free(tree: *mut ItTree) {
    if !tree.is_null() {
        drop(Box::from_raw(tree));
    }
}

/// # Safety
/// `tree` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn it_tree_vertex_count(tree: *const ItTree) -> usize {
    tree.as_ref().map_or(0, |t| t.0.vertex_count())
}

fn copy_image(
    image: Option<&[usize]>,
    image_out: *mut usize,
    capacity: usize,
    found: *mut bool,
) -> Result<(), (ItStatus, String)> {
    let found = unsafe { out(found)? };
    *found = false;
    if let Some(image) = image {
        if capacity < image.len() {
            return Err((
                ItStatus::BufferTooSmall,
                format!(
                    "image needs {} entries, buffer holds {capacity}",
                    image.len()
                ),
            ));
        }
        if image_out.is_null() {
            return Err(null());
        }
        unsafe { ptr::copy_nonoverlapping(image.as_ptr(), image_out, image.len()) };
        *found = true;
    }
    Ok(())
}

fn digraph(g: &ItGraph) -> Result<&induced_trees::graph::OrientedGraph, (ItStatus, String)> {
    match &g.0 {
        ParsedGraph::Digraph(d) => Ok(d),
        ParsedGraph::Graph(_) => Err((ItStatus::InvalidInput, "expected a digraph".into())),
    }
}

/// Runs an embedding procedure. On success `*found` says whether an image
/// was produced; if so it is written to `image_out`, one host vertex per tree
/// vertex. `coloring` may be null; only the `Dag` variant uses it. `r` is used
/// by the `Br` variant.
///
/// # Safety
/// Handles must be live (or null where allowed), `image_out` must hold
/// `capacity` entries, and `found` must be writable.
#[no_mangle]
pub unsafe extern "C" fn it_find_tree(
    variant: ItVariant,
    graph: *const ItGraph,
    tree: *const ItTree,
    coloring: *const ItColoring,
    r: usize,
    image_out: *mut usize,
    capacity: usize,
    found: *mut bool,
) -> ItStatus {
    guarded(|| {
        let (g, t) = (obj(graph)?, obj(tree)?);
        let d = digraph(g)?;
        let c = coloring.as_ref().map(|c| &c.0);
        let e: Option<Embedding> = match variant {
            ItVariant::Dag => lib(dag_tree_embedding(d, &t.0, c))?.embedding().cloned(),
            ItVariant::Parity => lib(bikernel_tree_embedding(
                d,
                &t.0,
                Guards::from_env().kernel_n,
            ))?
            .outcome
            .embedding()
            .cloned(),
            ItVariant::Br => lib(br_tree_embedding(d, &t.0, r))?.embedding().cloned(),
        };
        copy_image(
            e.as_ref().map(|e| e.image.as_slice()),
            image_out,
            capacity,
            found,
        )
    })
}

/// One run of the decreasing search for an induced rainbow path on `s`
/// vertices under the coloring's order.
///
/// # Safety
/// Handles must be live, `image_out` must hold `capacity` entries, and
/// `found` must be writable.
#[no_mangle]
pub unsafe extern "C" fn it_find_rainbow_path(
    graph: *const ItGraph,
    coloring: *const ItColoring,
    s: usize,
    image_out: *mut usize,
    capacity: usize,
    found: *mut bool,
) -> ItStatus {
    guarded(|| {
        let (g, c) = (obj(graph)?, obj(coloring)?);
        let ParsedGraph::Graph(g) = &g.0 else {
            return Err((
                ItStatus::InvalidInput,
                "expected an undirected graph".into(),
            ));
        };
        let path = lib(RootedOrientedTree::path(s))?;
        let run = lib(decreasing_tree_search(g, &c.0, &path))?;
        let e = run.outcome.embedding();
        copy_image(e.map(|e| e.image.as_slice()), image_out, capacity, found)
    })
}

/// Brute-force search for an induced copy of `tree`.
///
/// # Safety
/// Handles must be live, `image_out` must hold `capacity` entries, and
/// `found` must be writable.
#[no_mangle]
pub unsafe extern "C" fn it_contains_induced_copy(
    graph: *const ItGraph,
    tree: *const ItTree,
    image_out: *mut usize,
    capacity: usize,
    found: *mut bool,
) -> ItStatus {
    guarded(|| {
        let (g, t) = (obj(graph)?, obj(tree)?);
        let image = lib(contains_induced_copy(
            g.0.view(),
            &t.0,
            Guards::from_env().contains_n,
        ))?;
        copy_image(image.as_deref(), image_out, capacity, found)
    })
}

/// Checks an image of `tree` in `graph`. `coloring` may be null.
///
/// # Safety
/// Handles must be live (or null where allowed), `image` must hold `len`
/// entries, and `verdict` must be writable.
#[no_mangle]
pub unsafe extern "C" fn it_verify_embedding(
    graph: *const ItGraph,
    tree: *const ItTree,
    image: *const usize,
    len: usize,
    coloring: *const ItColoring,
    verdict: *mut ItVerdict,
) -> ItStatus {
    guarded(|| {
        let (g, t) = (obj(graph)?, obj(tree)?);
        if image.is_null() && len > 0 {
            return Err(null());
        }
        let image = if len == 0 {
            &[][..]
        } else {
            std::slice::from_raw_parts(image, len)
        };
        let c = coloring.as_ref().map(|c| &c.0);
        let v = lib(verify_embedding(g.0.view(), &t.0, image, c))?;
        let flag = |f: Option<bool>| f.map_or(-1, i8::from);
        *out(verdict)? = ItVerdict {
            induced: v.induced,
            direction_exact: flag(v.direction_exact),
            rainbow: flag(v.rainbow),
            decreasing: flag(v.decreasing),
        };
        Ok(())
    })
}
