//! C ABI for the fibcube library.
//!
//! Conventions: constructors write an owned handle through an `out`
//! pointer and return [`FcStatus`]; every handle has a matching `_free`
//! that accepts NULL; strings returned as `char*` are freed with
//! [`fc_string_free`]; on any non-OK status a human-readable message is
//! retrievable with [`fc_last_error`]. Handles are not thread-safe to
//! mutate concurrently but may be shared for reads.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::ptr;

use fibcube::avoidance::AvoidanceGraph;
use fibcube::codes::{
    example_gamma7_code, hamming_code, run_avoiding_code, run_avoiding_stream, VasilevStream,
};
use fibcube::search::{min_s, search_perfect_codes, SearchOutcome};
use fibcube::{Code, Error, VerificationReport, VerifyStatus};

/// Status code returned by every fallible entry point.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FcStatus {
    Ok = 0,
    NullPointer,
    InvalidUtf8,
    ParseError,
    DimensionMismatch,
    OutOfRange,
    CapacityExceeded,
    NotInDomain,
    BufferTooSmall,
    IndexOutOfBounds,
}

/// Verification verdict, mirroring the library's report status.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FcVerifyStatus {
    PerfectCode = 0,
    NotCode,
    NotDominated,
    MultiplyDominated,
}

/// Opaque: a set of equal-length binary words.
pub struct FcCode(Code);

/// Opaque: a forbidden-run subgraph of the hypercube.
pub struct FcGraph(AvoidanceGraph);

/// Opaque: result of a perfect-code verification sweep.
pub struct FcReport(VerificationReport);

/// Opaque: result of an exhaustive perfect-code search.
pub struct FcSearch(SearchOutcome);

/// Opaque: streaming construction too large to materialize.
pub struct FcStream(VasilevStream);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_last_error(msg: &str) {
    let msg = CString::new(msg.replace('\0', "?")).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = msg);
}

/// Explicit reference through a caller-guaranteed-valid handle.
unsafe fn deref<'a, T>(ptr: *const T) -> &'a T {
    &*ptr
}

unsafe fn deref_mut<'a, T>(ptr: *mut T) -> &'a mut T {
    &mut *ptr
}

fn fail(status: FcStatus, msg: &str) -> FcStatus {
    set_last_error(msg);
    status
}

fn status_of(err: &Error) -> FcStatus {
    match err {
        Error::EmptyWord
        | Error::WordTooLong(_)
        | Error::InvalidChar { .. }
        | Error::AtLine { .. }
        | Error::RaggedWord { .. }
        | Error::EmptyCode => FcStatus::ParseError,
        Error::LengthMismatch { .. } | Error::ConcatOverflow { .. } => {
            FcStatus::DimensionMismatch
        }
        Error::LengthOutOfRange(_)
        | Error::StrayBits { .. }
        | Error::ParamRange { .. }
        | Error::InvalidBase { .. } => FcStatus::OutOfRange,
        Error::Capacity { .. } => FcStatus::CapacityExceeded,
        Error::NoZeroWindow { .. } | Error::NotAVertex { .. } => FcStatus::NotInDomain,
    }
}

fn fail_with(err: Error) -> FcStatus {
    let status = status_of(&err);
    set_last_error(&err.to_string());
    status
}

unsafe fn write_handle<T>(out: *mut *mut T, value: T) -> FcStatus {
    if out.is_null() {
        return fail(FcStatus::NullPointer, "out pointer is NULL");
    }
    *out = Box::into_raw(Box::new(value));
    FcStatus::Ok
}

unsafe fn utf8_arg<'a>(ptr: *const c_char) -> Result<&'a str, FcStatus> {
    if ptr.is_null() {
        return Err(fail(FcStatus::NullPointer, "string argument is NULL"));
    }
    CStr::from_ptr(ptr)
        .to_str()
        .map_err(|_| fail(FcStatus::InvalidUtf8, "string argument is not UTF-8"))
}

/// Copy the text into a caller buffer of `cap` bytes, NUL-terminated.
unsafe fn write_text(text: &str, buf: *mut c_char, cap: usize) -> FcStatus {
    if buf.is_null() {
        return fail(FcStatus::NullPointer, "buffer is NULL");
    }
    if cap < text.len() + 1 {
        return fail(
            FcStatus::BufferTooSmall,
            &format!("need {} bytes, got {cap}", text.len() + 1),
        );
    }
    ptr::copy_nonoverlapping(text.as_ptr(), buf.cast::<u8>(), text.len());
    *buf.add(text.len()) = 0;
    FcStatus::Ok
}

/// Copy the most recent error message into `buf` (NUL-terminated,
/// truncated to fit) and return the full length including the NUL.
/// Passing NULL just queries the required size.
///
/// # Safety
/// `buf`, when non-NULL, must point to at least `cap` writable bytes.
#[no_mangle]
pub unsafe extern "C" fn fc_last_error(buf: *mut c_char, cap: usize) -> usize {
    LAST_ERROR.with(|slot| {
        let msg = slot.borrow();
        let bytes = msg.as_bytes();
        if !buf.is_null() && cap > 0 {
            let n = bytes.len().min(cap - 1);
            ptr::copy_nonoverlapping(bytes.as_ptr(), buf.cast::<u8>(), n);
            *buf.add(n) = 0;
        }
        bytes.len() + 1
    })
}

/// Free a string returned by this library.
///
/// # Safety
/// `s` must have been returned by a `fibcube` function and not freed yet.
#[no_mangle]
pub unsafe extern "C" fn fc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Build the run-suppressing perfect code of length 2^p - 1 (p in
/// 2..=4 materialized; use the stream for p = 5).
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fc_code_theorem2(p: u32, out: *mut *mut FcCode) -> FcStatus {
    match run_avoiding_code(p, None) {
        Ok(code) => write_handle(out, FcCode(code)),
        Err(e) => fail_with(e),
    }
}

/// Build the Hamming code of length 2^p - 1 (p in 1..=4).
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fc_code_hamming(p: u32, out: *mut *mut FcCode) -> FcStatus {
    match hamming_code(p) {
        Ok(code) => write_handle(out, FcCode(code)),
        Err(e) => fail_with(e),
    }
}

/// Build the worked 16-word code of length 7 avoiding 11111.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fc_code_gamma7_example(out: *mut *mut FcCode) -> FcStatus {
    write_handle(out, FcCode(example_gamma7_code()))
}

/// Parse code-file text: one word per line, '#' lines ignored.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fc_code_parse(text: *const c_char, out: *mut *mut FcCode) -> FcStatus {
    let text = match utf8_arg(text) {
        Ok(t) => t,
        Err(status) => return status,
    };
    match Code::parse(text) {
        Ok(code) => write_handle(out, FcCode(code)),
        Err(e) => fail_with(e),
    }
}

/// Render a code in the code-file format; free with `fc_string_free`.
///
/// # Safety
/// `code` must be a live handle; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fc_code_render(code: *const FcCode, out: *mut *mut c_char) -> FcStatus {
    if code.is_null() || out.is_null() {
        return fail(FcStatus::NullPointer, "code or out is NULL");
    }
    match CString::new(deref(code).0.render_lines()) {
        Ok(s) => {
            *out = s.into_raw();
            FcStatus::Ok
        }
        Err(_) => fail(FcStatus::ParseError, "rendered text contained NUL"),
    }
}

/// # Safety
/// `code` must be NULL or a live handle, freed at most once.
#[no_mangle]
pub unsafe extern "C" fn fc_code_free(code: *mut FcCode) {
    if !code.is_null() {
        drop(Box::from_raw(code));
    }
}

/// Word length n, or 0 for NULL.
///
/// # Safety
/// `code` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn fc_code_word_len(code: *const FcCode) -> u32 {
    if code.is_null() {
        return 0;
    }
    deref(code).0.n()
}

/// Number of codewords, or 0 for NULL.
///
/// # Safety
/// `code` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn fc_code_size(code: *const FcCode) -> usize {
    if code.is_null() {
        return 0;
    }
    deref(code).0.len()
}

/// Longest 1-run over all codewords, or 0 for NULL.
///
/// # Safety
/// `code` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn fc_code_max_run(code: *const FcCode) -> u32 {
    if code.is_null() {
        return 0;
    }
    deref(code).0.max_run_ones()
}

/// Render codeword `idx` (ascending mask order) into `buf`; needs
/// n + 1 bytes.
///
/// # Safety
/// `code` must be a live handle; `buf` must hold `cap` writable bytes.
#[no_mangle]
pub unsafe extern "C" fn fc_code_word_at(
    code: *const FcCode,
    idx: usize,
    buf: *mut c_char,
    cap: usize,
) -> FcStatus {
    if code.is_null() {
        return fail(FcStatus::NullPointer, "code is NULL");
    }
    let words = deref(code).0.words();
    match words.get(idx) {
        None => fail(
            FcStatus::IndexOutOfBounds,
            &format!("index {idx} out of 0..{}", words.len()),
        ),
        Some(w) => write_text(&w.to_string(), buf, cap),
    }
}

/// XOR every codeword with the given word.
///
/// # Safety
/// `code` must be a live handle; `word` a NUL-terminated string; `out`
/// a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fc_code_translate(
    code: *const FcCode,
    word: *const c_char,
    out: *mut *mut FcCode,
) -> FcStatus {
    if code.is_null() {
        return fail(FcStatus::NullPointer, "code is NULL");
    }
    let text = match utf8_arg(word) {
        Ok(t) => t,
        Err(status) => return status,
    };
    let t = match text.parse() {
        Ok(w) => w,
        Err(e) => return fail_with(e),
    };
    match deref(code).0.translate(t) {
        Ok(moved) => write_handle(out, FcCode(moved)),
        Err(e) => fail_with(e),
    }
}

/// Full domination sweep in the hypercube (n <= 25).
///
/// # Safety
/// `code` must be a live handle; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fc_code_verify_qn(
    code: *const FcCode,
    out: *mut *mut FcReport,
) -> FcStatus {
    if code.is_null() {
        return fail(FcStatus::NullPointer, "code is NULL");
    }
    match deref(code).0.verify_perfect_qn() {
        Ok(report) => write_handle(out, FcReport(report)),
        Err(e) => fail_with(e),
    }
}

/// Graph over length-n words with no run of s ones.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fc_graph_ones_run(n: u32, s: u64, out: *mut *mut FcGraph) -> FcStatus {
    match AvoidanceGraph::ones_run(n, s) {
        Ok(graph) => write_handle(out, FcGraph(graph)),
        Err(e) => fail_with(e),
    }
}

/// Number of vertices, or 0 for NULL.
///
/// # Safety
/// `graph` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn fc_graph_vertex_count(graph: *const FcGraph) -> u64 {
    if graph.is_null() {
        return 0;
    }
    deref(graph).0.vertex_count()
}

/// # Safety
/// `graph` must be NULL or a live handle, freed at most once.
#[no_mangle]
pub unsafe extern "C" fn fc_graph_free(graph: *mut FcGraph) {
    if !graph.is_null() {
        drop(Box::from_raw(graph));
    }
}

/// Domination sweep inside the graph (n <= 25).
///
/// # Safety
/// `code` and `graph` must be live handles; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fc_code_verify_gamma(
    code: *const FcCode,
    graph: *const FcGraph,
    out: *mut *mut FcReport,
) -> FcStatus {
    if code.is_null() || graph.is_null() {
        return fail(FcStatus::NullPointer, "code or graph is NULL");
    }
    match deref(graph).0.verify_perfect(&deref(code).0) {
        Ok(report) => write_handle(out, FcReport(report)),
        Err(e) => fail_with(e),
    }
}

/// # Safety
/// `report` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn fc_report_status(report: *const FcReport) -> FcVerifyStatus {
    if report.is_null() {
        return FcVerifyStatus::NotCode;
    }
    match deref(report).0.status {
        VerifyStatus::PerfectCode => FcVerifyStatus::PerfectCode,
        VerifyStatus::NotCode => FcVerifyStatus::NotCode,
        VerifyStatus::NotDominated => FcVerifyStatus::NotDominated,
        VerifyStatus::MultiplyDominated => FcVerifyStatus::MultiplyDominated,
    }
}

/// # Safety
/// `report` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn fc_report_is_perfect(report: *const FcReport) -> bool {
    !report.is_null() && deref(report).0.is_perfect()
}

/// # Safety
/// `report` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn fc_report_code_size(report: *const FcReport) -> usize {
    if report.is_null() {
        return 0;
    }
    deref(report).0.code_size
}

/// # Safety
/// `report` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn fc_report_max_run(report: *const FcReport) -> u32 {
    if report.is_null() {
        return 0;
    }
    deref(report).0.max_run
}

/// Flat key-value rendering; free with `fc_string_free`.
///
/// # Safety
/// `report` must be a live handle; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fc_report_render(
    report: *const FcReport,
    out: *mut *mut c_char,
) -> FcStatus {
    if report.is_null() || out.is_null() {
        return fail(FcStatus::NullPointer, "report or out is NULL");
    }
    match CString::new(deref(report).0.render_kv()) {
        Ok(s) => {
            *out = s.into_raw();
            FcStatus::Ok
        }
        Err(_) => fail(FcStatus::ParseError, "rendered text contained NUL"),
    }
}

/// # Safety
/// `report` must be NULL or a live handle, freed at most once.
#[no_mangle]
pub unsafe extern "C" fn fc_report_free(report: *mut FcReport) {
    if !report.is_null() {
        drop(Box::from_raw(report));
    }
}

/// Vertex count of the run-avoidance graph by the counting recurrence.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fc_vertex_count(n: u32, s: u32, out: *mut u64) -> FcStatus {
    if out.is_null() {
        return fail(FcStatus::NullPointer, "out pointer is NULL");
    }
    match fibcube::avoidance::vertex_count(n, s) {
        Ok(count) => {
            *out = count;
            FcStatus::Ok
        }
        Err(e) => fail_with(e),
    }
}

/// Exhaustively search for perfect codes in the (n, s) instance;
/// `limit` = 0 enumerates everything.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fc_search(
    n: u32,
    s: u32,
    limit: usize,
    out: *mut *mut FcSearch,
) -> FcStatus {
    let limit = if limit == 0 { None } else { Some(limit) };
    match search_perfect_codes(n, s, limit) {
        Ok(outcome) => write_handle(out, FcSearch(outcome)),
        Err(e) => fail_with(e),
    }
}

/// # Safety
/// `search` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn fc_search_exists(search: *const FcSearch) -> bool {
    !search.is_null() && deref(search).0.exists
}

/// # Safety
/// `search` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn fc_search_exhausted(search: *const FcSearch) -> bool {
    !search.is_null() && deref(search).0.exhausted
}

/// # Safety
/// `search` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn fc_search_solution_count(search: *const FcSearch) -> u64 {
    if search.is_null() {
        return 0;
    }
    deref(search).0.solution_count
}

/// # Safety
/// `search` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn fc_search_nodes_expanded(search: *const FcSearch) -> u64 {
    if search.is_null() {
        return 0;
    }
    deref(search).0.nodes_expanded
}

/// Copy solution `idx` out as a new code handle.
///
/// # Safety
/// `search` must be a live handle; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fc_search_solution_at(
    search: *const FcSearch,
    idx: usize,
    out: *mut *mut FcCode,
) -> FcStatus {
    if search.is_null() {
        return fail(FcStatus::NullPointer, "search is NULL");
    }
    match deref(search).0.solutions.get(idx) {
        None => fail(
            FcStatus::IndexOutOfBounds,
            &format!("index {idx} out of 0..{}", deref(search).0.solutions.len()),
        ),
        Some(code) => write_handle(out, FcCode(code.clone())),
    }
}

/// # Safety
/// `search` must be NULL or a live handle, freed at most once.
#[no_mangle]
pub unsafe extern "C" fn fc_search_free(search: *mut FcSearch) {
    if !search.is_null() {
        drop(Box::from_raw(search));
    }
}

/// Smallest s in 2..=s_max admitting a perfect code at length n.
/// `*found` is false when none does (then `*s_out` is untouched).
///
/// # Safety
/// `found` and `s_out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn fc_min_s(
    n: u32,
    s_max: u32,
    found: *mut bool,
    s_out: *mut u32,
) -> FcStatus {
    if found.is_null() || s_out.is_null() {
        return fail(FcStatus::NullPointer, "found or s_out is NULL");
    }
    match min_s(n, s_max) {
        Ok(Some(s)) => {
            *found = true;
            *s_out = s;
            FcStatus::Ok
        }
        Ok(None) => {
            *found = false;
            FcStatus::Ok
        }
        Err(e) => fail_with(e),
    }
}

/// Streaming run-suppressing construction (p in 2..=5); words come out
/// in ascending mask order.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fc_theorem2_stream_new(p: u32, out: *mut *mut FcStream) -> FcStatus {
    match run_avoiding_stream(p, None) {
        Ok(stream) => write_handle(out, FcStream(stream)),
        Err(e) => fail_with(e),
    }
}

/// Total number of words the stream yields.
///
/// # Safety
/// `stream` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn fc_stream_expected_len(stream: *const FcStream) -> u64 {
    if stream.is_null() {
        return 0;
    }
    deref(stream).0.expected_len()
}

/// Output word length (needs a buffer of that many bytes plus one).
///
/// # Safety
/// `stream` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn fc_stream_word_len(stream: *const FcStream) -> u32 {
    if stream.is_null() {
        return 0;
    }
    deref(stream).0.word_len()
}

/// Write the next word into `buf`. Returns 1 on success, 0 when the
/// stream is exhausted, -1 on error (NULL or undersized buffer).
///
/// # Safety
/// `stream` must be a live handle; `buf` must hold `cap` writable bytes.
#[no_mangle]
pub unsafe extern "C" fn fc_stream_next(
    stream: *mut FcStream,
    buf: *mut c_char,
    cap: usize,
) -> i32 {
    if stream.is_null() {
        fail(FcStatus::NullPointer, "stream is NULL");
        return -1;
    }
    match deref_mut(stream).0.next() {
        None => 0,
        Some(word) => {
            if write_text(&word.to_string(), buf, cap) == FcStatus::Ok {
                1
            } else {
                -1
            }
        }
    }
}

/// # Safety
/// `stream` must be NULL or a live handle, freed at most once.
#[no_mangle]
pub unsafe extern "C" fn fc_stream_free(stream: *mut FcStream) {
    if !stream.is_null() {
        drop(Box::from_raw(stream));
    }
}
