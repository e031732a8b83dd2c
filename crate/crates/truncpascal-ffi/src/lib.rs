//! C ABI over the `truncpascal` crate.
//!
//! Conventions, mirrored in the generated `include/truncpascal.h`:
//!
//! * Handles (`TpSelection`, `TpMatrix`, `TpIncidence`) are opaque. They are
//!   created by `tp_*` constructors, borrowed by `const` pointer, and released
//!   by the matching `tp_*_free`, which tolerates null.
//! * Fallible functions return a [`TpStatus`] and write their results through
//!   `out` pointers. Out parameters are written only when the return value is
//!   `Ok`; on any other status they are left untouched.
//! * Strings returned through `char **` out parameters are NUL-terminated,
//!   heap-allocated copies owned by the caller, to be released with
//!   [`tp_string_free`]. Strings returned as `const char *` are static.
//! * After a non-`Ok` status, [`tp_last_error_message`] returns a detailed
//!   message for the failure (thread-local, cleared by the next success).
//! * No function panics for any input these checks accept; if an internal
//!   invariant is ever violated the process aborts instead of unwinding
//!   across the C boundary.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::ptr;
use std::str::FromStr;

use truncpascal::incidence::MAX_WIDTH;
use truncpascal::selection::dominates;
use truncpascal::{birkhoff, harness, pascal};
use truncpascal::{Error, ExactMatrix, HarnessConfig, IncidenceMatrix, Selection};

/// Result code shared by every fallible function in this interface.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TpStatus {
    /// The call succeeded and all out parameters were written.
    Ok = 0,
    /// A required pointer argument was null.
    NullArgument = 1,
    /// A `char *` argument was not valid UTF-8.
    InvalidUtf8 = 2,
    /// Selection entries must be strictly increasing.
    NotIncreasing = 3,
    /// A selection entry, derivative order, or degree exceeds the ambient
    /// bound `n`.
    EntryOutOfRange = 4,
    /// Two lengths that must agree (selection sizes, matrix widths) differ.
    LengthMismatch = 5,
    /// The operation needs a square matrix but was handed a rectangular one.
    NotSquare = 6,
    /// A two-row 0/1 matrix would exceed the packed 64-column limit.
    WidthTooLarge = 7,
    /// A 2xN 0/1 matrix does not carry exactly N ones.
    NotIncidence = 8,
    /// A text argument did not parse.
    ParseError = 9,
    /// A row, column, or entry index is out of range for the handle.
    IndexOutOfRange = 10,
}

/// Opaque handle to a strictly increasing list of naturals (a selection of
/// derivative orders or degrees).
pub struct TpSelection(Selection);

/// Opaque handle to an exact rational matrix.
pub struct TpMatrix(ExactMatrix);

/// Opaque handle to a two-row 0/1 incidence matrix (width N, exactly N ones).
pub struct TpIncidence(IncidenceMatrix);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn ok() -> TpStatus {
    LAST_ERROR.with(|slot| slot.borrow_mut().take());
    TpStatus::Ok
}

fn fail_with(status: TpStatus, message: String) -> TpStatus {
    let stored = CString::new(message)
        .unwrap_or_else(|_| CString::new("error message contained a NUL byte").unwrap());
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(stored));
    status
}

fn fail(err: &Error) -> TpStatus {
    let status = match err {
        Error::NotIncreasing { .. } => TpStatus::NotIncreasing,
        Error::EntryOutOfRange { .. } => TpStatus::EntryOutOfRange,
        Error::LengthMismatch { .. } => TpStatus::LengthMismatch,
        Error::NotSquare { .. } => TpStatus::NotSquare,
        Error::WidthTooLarge { .. } => TpStatus::WidthTooLarge,
        Error::NotIncidence { .. } => TpStatus::NotIncidence,
        Error::Parse(_) => TpStatus::ParseError,
    };
    fail_with(status, err.to_string())
}

fn null_argument(name: &str) -> TpStatus {
    fail_with(TpStatus::NullArgument, format!("argument `{name}` is null"))
}

/// Borrows a handle, reporting which argument was null on failure.
unsafe fn borrow<'a, T>(ptr: *const T, name: &str) -> Result<&'a T, TpStatus> {
    if ptr.is_null() {
        Err(null_argument(name))
    } else {
        Ok(&*ptr)
    }
}

/// Reads a NUL-terminated UTF-8 string argument.
unsafe fn borrow_str<'a>(ptr: *const c_char, name: &str) -> Result<&'a str, TpStatus> {
    if ptr.is_null() {
        return Err(null_argument(name));
    }
    CStr::from_ptr(ptr).to_str().map_err(|_| {
        fail_with(
            TpStatus::InvalidUtf8,
            format!("argument `{name}` is not valid UTF-8"),
        )
    })
}

fn checked_out<T>(out: *mut T, name: &str) -> Result<*mut T, TpStatus> {
    if out.is_null() {
        Err(null_argument(name))
    } else {
        Ok(out)
    }
}

/// Moves a freshly built handle to the caller.
unsafe fn give<H>(handle: H, out: *mut *mut H) -> TpStatus {
    *out = Box::into_raw(Box::new(handle));
    ok()
}

/// Moves an owned string to the caller (NUL-terminated, freed by
/// `tp_string_free`).
unsafe fn give_string(text: String, out: *mut *mut c_char) -> TpStatus {
    match CString::new(text) {
        Ok(c) => {
            *out = c.into_raw();
            ok()
        }
        Err(_) => fail_with(
            TpStatus::ParseError,
            "result string contained a NUL byte".to_string(),
        ),
    }
}

fn width_guard(n: usize) -> Result<(), TpStatus> {
    let width = n + 1;
    if width > MAX_WIDTH {
        Err(fail(&Error::WidthTooLarge {
            width,
            max: MAX_WIDTH,
        }))
    } else {
        Ok(())
    }
}

// --- status and string utilities -------------------------------------------

/// Static name of a status code ("ok", "null_argument", ...). Never null;
/// do not free.
#[no_mangle]
pub extern "C" fn tp_status_name(status: TpStatus) -> *const c_char {
    let name: &[u8] = match status {
        TpStatus::Ok => b"ok\0",
        TpStatus::NullArgument => b"null_argument\0",
        TpStatus::InvalidUtf8 => b"invalid_utf8\0",
        TpStatus::NotIncreasing => b"not_increasing\0",
        TpStatus::EntryOutOfRange => b"entry_out_of_range\0",
        TpStatus::LengthMismatch => b"length_mismatch\0",
        TpStatus::NotSquare => b"not_square\0",
        TpStatus::WidthTooLarge => b"width_too_large\0",
        TpStatus::NotIncidence => b"not_incidence\0",
        TpStatus::ParseError => b"parse_error\0",
        TpStatus::IndexOutOfRange => b"index_out_of_range\0",
    };
    name.as_ptr() as *const c_char
}

/// Detailed message for the most recent failure on this thread, as a fresh
/// string owned by the caller (free with `tp_string_free`), or null if the
/// last call on this thread succeeded.
#[no_mangle]
pub extern "C" fn tp_last_error_message() -> *mut c_char {
    LAST_ERROR.with(|slot| {
        slot.borrow()
            .as_ref()
            .map_or(ptr::null_mut(), |c| c.clone().into_raw())
    })
}

/// Releases a string returned through a `char **` out parameter or by
/// `tp_last_error_message`. Null is a no-op.
///
/// # Safety
/// `s` must be null or a string obtained from this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn tp_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

// --- selections ------------------------------------------------------------

/// Parses a selection from comma-separated naturals ("0,2,5"; empty string
/// for the empty selection). On success stores a new handle in `*out`.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tp_selection_parse(
    text: *const c_char,
    out: *mut *mut TpSelection,
) -> TpStatus {
    let (text, out) = match (borrow_str(text, "text"), checked_out(out, "out")) {
        (Ok(t), Ok(o)) => (t, o),
        (Err(s), _) | (_, Err(s)) => return s,
    };
    match Selection::from_str(text) {
        Ok(sel) => give(TpSelection(sel), out),
        Err(e) => fail(&e),
    }
}

/// Builds a selection from an array of `len` strictly increasing naturals.
/// `entries` may be null only when `len` is 0.
///
/// # Safety
/// `entries` must point to at least `len` readable values (or be null when
/// `len` is 0); `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tp_selection_from_entries(
    entries: *const usize,
    len: usize,
    out: *mut *mut TpSelection,
) -> TpStatus {
    let out = match checked_out(out, "out") {
        Ok(o) => o,
        Err(s) => return s,
    };
    let values = if len == 0 {
        Vec::new()
    } else if entries.is_null() {
        return null_argument("entries");
    } else {
        std::slice::from_raw_parts(entries, len).to_vec()
    };
    match Selection::new(values) {
        Ok(sel) => give(TpSelection(sel), out),
        Err(e) => fail(&e),
    }
}

/// Releases a selection handle. Null is a no-op.
///
/// # Safety
/// `s` must be null or an unfreed handle from this library.
#[no_mangle]
pub unsafe extern "C" fn tp_selection_free(s: *mut TpSelection) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}

/// Number of entries in the selection; 0 for a null handle.
///
/// # Safety
/// `s` must be null or a valid handle.
#[no_mangle]
pub unsafe extern "C" fn tp_selection_len(s: *const TpSelection) -> usize {
    if s.is_null() {
        0
    } else {
        (*s).0.len()
    }
}

/// Stores entry `index` (0-based) of the selection in `*out`.
///
/// # Safety
/// `s` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn tp_selection_entry(
    s: *const TpSelection,
    index: usize,
    out: *mut usize,
) -> TpStatus {
    let (sel, out) = match (borrow(s, "s"), checked_out(out, "out")) {
        (Ok(sel), Ok(o)) => (sel, o),
        (Err(st), _) | (_, Err(st)) => return st,
    };
    match sel.0.entries().get(index) {
        Some(&entry) => {
            *out = entry;
            ok()
        }
        None => fail_with(
            TpStatus::IndexOutOfRange,
            format!(
                "entry index {index} out of range for a selection of {} entries",
                sel.0.len()
            ),
        ),
    }
}

/// Renders the selection as comma-separated naturals (owned by the caller).
///
/// # Safety
/// `s` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn tp_selection_to_string(
    s: *const TpSelection,
    out: *mut *mut c_char,
) -> TpStatus {
    let (sel, out) = match (borrow(s, "s"), checked_out(out, "out")) {
        (Ok(sel), Ok(o)) => (sel, o),
        (Err(st), _) | (_, Err(st)) => return st,
    };
    give_string(sel.0.to_string(), out)
}

/// Stores the complement of `s` inside `{0, ..., n}` in `*out`. Fails with
/// `EntryOutOfRange` if some entry of `s` exceeds `n`.
///
/// # Safety
/// `s` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn tp_selection_complement(
    s: *const TpSelection,
    n: usize,
    out: *mut *mut TpSelection,
) -> TpStatus {
    let (sel, out) = match (borrow(s, "s"), checked_out(out, "out")) {
        (Ok(sel), Ok(o)) => (sel, o),
        (Err(st), _) | (_, Err(st)) => return st,
    };
    match sel.0.complement(n) {
        Ok(c) => give(TpSelection(c), out),
        Err(e) => fail(&e),
    }
}

/// Stores in `*out` whether `r` dominates `x` entrywise (`r_i <= x_i` for
/// every position). The selections must have equal length.
///
/// # Safety
/// `r`, `x`, and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn tp_selection_dominates(
    r: *const TpSelection,
    x: *const TpSelection,
    out: *mut bool,
) -> TpStatus {
    let (r, x, out) = match (borrow(r, "r"), borrow(x, "x"), checked_out(out, "out")) {
        (Ok(r), Ok(x), Ok(o)) => (r, x, o),
        (Err(st), _, _) | (_, Err(st), _) | (_, _, Err(st)) => return st,
    };
    match dominates(&r.0, &x.0) {
        Ok(d) => {
            *out = d;
            ok()
        }
        Err(e) => fail(&e),
    }
}

// --- matrices --------------------------------------------------------------

/// Builds the truncated Pascal matrix with rows indexed by `r` and columns
/// by `x`: entry (i, j) is `C(x_j, r_i)`, zero whenever `r_i > x_j`.
///
/// # Safety
/// `r`, `x`, and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn tp_pascal_matrix(
    r: *const TpSelection,
    x: *const TpSelection,
    out: *mut *mut TpMatrix,
) -> TpStatus {
    let (r, x, out) = match (borrow(r, "r"), borrow(x, "x"), checked_out(out, "out")) {
        (Ok(r), Ok(x), Ok(o)) => (r, x, o),
        (Err(st), _, _) | (_, Err(st), _) | (_, _, Err(st)) => return st,
    };
    give(TpMatrix(pascal::truncated(&r.0, &x.0)), out)
}

/// Builds the full (n+1)x(n+1) collocation matrix that pairs the order-`r`
/// derivative functionals at node 1 with the order-`x-complement`
/// evaluation-style functionals at node 0, against the monomial basis of
/// degree at most `n`. Its determinant equals that of the truncated Pascal
/// matrix for `(r, x)`. Requires `r` and `x` of equal length with entries
/// at most `n`.
///
/// # Safety
/// `r`, `x`, and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn tp_extended_matrix(
    r: *const TpSelection,
    x: *const TpSelection,
    n: usize,
    out: *mut *mut TpMatrix,
) -> TpStatus {
    let (r, x, out) = match (borrow(r, "r"), borrow(x, "x"), checked_out(out, "out")) {
        (Ok(r), Ok(x), Ok(o)) => (r, x, o),
        (Err(st), _, _) | (_, Err(st), _) | (_, _, Err(st)) => return st,
    };
    match birkhoff::extended_system(&r.0, &x.0, n) {
        Ok(m) => give(TpMatrix(m), out),
        Err(e) => fail(&e),
    }
}

/// Releases a matrix handle. Null is a no-op.
///
/// # Safety
/// `m` must be null or an unfreed handle from this library.
#[no_mangle]
pub unsafe extern "C" fn tp_matrix_free(m: *mut TpMatrix) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

/// Number of rows; 0 for a null handle.
///
/// # Safety
/// `m` must be null or a valid handle.
#[no_mangle]
pub unsafe extern "C" fn tp_matrix_rows(m: *const TpMatrix) -> usize {
    if m.is_null() {
        0
    } else {
        (*m).0.n_rows()
    }
}

/// Number of columns; 0 for a null handle.
///
/// # Safety
/// `m` must be null or a valid handle.
#[no_mangle]
pub unsafe extern "C" fn tp_matrix_cols(m: *const TpMatrix) -> usize {
    if m.is_null() {
        0
    } else {
        (*m).0.n_cols()
    }
}

/// Renders entry (`row`, `col`) as an exact decimal or `p/q` string owned
/// by the caller.
///
/// # Safety
/// `m` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn tp_matrix_entry_string(
    m: *const TpMatrix,
    row: usize,
    col: usize,
    out: *mut *mut c_char,
) -> TpStatus {
    let (m, out) = match (borrow(m, "m"), checked_out(out, "out")) {
        (Ok(m), Ok(o)) => (m, o),
        (Err(st), _) | (_, Err(st)) => return st,
    };
    if row >= m.0.n_rows() || col >= m.0.n_cols() {
        return fail_with(
            TpStatus::IndexOutOfRange,
            format!(
                "entry ({row}, {col}) out of range for a {}x{} matrix",
                m.0.n_rows(),
                m.0.n_cols()
            ),
        );
    }
    give_string(m.0.entry(row, col).to_string(), out)
}

/// Renders the exact determinant as a string owned by the caller. Fails
/// with `NotSquare` on rectangular matrices.
///
/// # Safety
/// `m` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn tp_matrix_det_string(
    m: *const TpMatrix,
    out: *mut *mut c_char,
) -> TpStatus {
    let (m, out) = match (borrow(m, "m"), checked_out(out, "out")) {
        (Ok(m), Ok(o)) => (m, o),
        (Err(st), _) | (_, Err(st)) => return st,
    };
    match m.0.det() {
        Ok(d) => give_string(d.to_string(), out),
        Err(e) => fail(&e),
    }
}

/// Stores in `*out` whether the (square) matrix has nonzero determinant.
///
/// # Safety
/// `m` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn tp_matrix_is_invertible(
    m: *const TpMatrix,
    out: *mut bool,
) -> TpStatus {
    let (m, out) = match (borrow(m, "m"), checked_out(out, "out")) {
        (Ok(m), Ok(o)) => (m, o),
        (Err(st), _) | (_, Err(st)) => return st,
    };
    match m.0.is_invertible() {
        Ok(inv) => {
            *out = inv;
            ok()
        }
        Err(e) => fail(&e),
    }
}

/// Looks for the smallest `k` such that rows `k..` by columns `..=k` of the
/// square matrix are entirely zero — a block that forces singularity. On
/// success sets `*out_found`, and `*out_index` to `k` when found
/// (`*out_index` is untouched otherwise).
///
/// # Safety
/// `m`, `out_found`, and `out_index` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn tp_matrix_zero_block_witness(
    m: *const TpMatrix,
    out_found: *mut bool,
    out_index: *mut usize,
) -> TpStatus {
    let (m, out_found, out_index) = match (
        borrow(m, "m"),
        checked_out(out_found, "out_found"),
        checked_out(out_index, "out_index"),
    ) {
        (Ok(m), Ok(f), Ok(i)) => (m, f, i),
        (Err(st), _, _) | (_, Err(st), _) | (_, _, Err(st)) => return st,
    };
    match m.0.zero_block_witness() {
        Ok(Some(k)) => {
            *out_found = true;
            *out_index = k;
            ok()
        }
        Ok(None) => {
            *out_found = false;
            ok()
        }
        Err(e) => fail(&e),
    }
}

// --- incidence matrices ----------------------------------------------------

/// Parses a two-row 0/1 incidence matrix from "row0/row1" bit strings
/// ("1010/1010"). Both rows must have the same width N and carry N ones in
/// total.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tp_incidence_parse(
    text: *const c_char,
    out: *mut *mut TpIncidence,
) -> TpStatus {
    let (text, out) = match (borrow_str(text, "text"), checked_out(out, "out")) {
        (Ok(t), Ok(o)) => (t, o),
        (Err(st), _) | (_, Err(st)) => return st,
    };
    match IncidenceMatrix::from_str(text) {
        Ok(e) => give(TpIncidence(e), out),
        Err(e) => fail(&e),
    }
}

/// Builds the width-(n+1) incidence matrix whose row 0 marks the complement
/// of `x` in `{0, ..., n}` and whose row 1 marks `r`.
///
/// # Safety
/// `r`, `x`, and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn tp_incidence_from_selection(
    r: *const TpSelection,
    x: *const TpSelection,
    n: usize,
    out: *mut *mut TpIncidence,
) -> TpStatus {
    let (r, x, out) = match (borrow(r, "r"), borrow(x, "x"), checked_out(out, "out")) {
        (Ok(r), Ok(x), Ok(o)) => (r, x, o),
        (Err(st), _, _) | (_, Err(st), _) | (_, _, Err(st)) => return st,
    };
    match IncidenceMatrix::from_selection(&r.0, &x.0, n) {
        Ok(e) => give(TpIncidence(e), out),
        Err(e) => fail(&e),
    }
}

/// Builds the width-`width` identity incidence matrix (row 0 all zeros,
/// row 1 all ones).
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tp_incidence_identity(
    width: usize,
    out: *mut *mut TpIncidence,
) -> TpStatus {
    let out = match checked_out(out, "out") {
        Ok(o) => o,
        Err(st) => return st,
    };
    match IncidenceMatrix::identity(width) {
        Ok(e) => give(TpIncidence(e), out),
        Err(e) => fail(&e),
    }
}

/// Releases an incidence handle. Null is a no-op.
///
/// # Safety
/// `e` must be null or an unfreed handle from this library.
#[no_mangle]
pub unsafe extern "C" fn tp_incidence_free(e: *mut TpIncidence) {
    if !e.is_null() {
        drop(Box::from_raw(e));
    }
}

/// Width (number of columns); 0 for a null handle.
///
/// # Safety
/// `e` must be null or a valid handle.
#[no_mangle]
pub unsafe extern "C" fn tp_incidence_width(e: *const TpIncidence) -> usize {
    if e.is_null() {
        0
    } else {
        (*e).0.width()
    }
}

/// Whether the incidence matrix satisfies the Pólya condition: every prefix
/// of columns `0..=j` holds strictly more than `j` ones. False for a null
/// handle.
///
/// # Safety
/// `e` must be null or a valid handle.
#[no_mangle]
pub unsafe extern "C" fn tp_incidence_is_polya(e: *const TpIncidence) -> bool {
    if e.is_null() {
        false
    } else {
        (*e).0.is_polya()
    }
}

/// Stores entry (`row`, `col`) of the 0/1 matrix in `*out` (`row` is 0 or 1).
///
/// # Safety
/// `e` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn tp_incidence_get(
    e: *const TpIncidence,
    row: usize,
    col: usize,
    out: *mut bool,
) -> TpStatus {
    let (e, out) = match (borrow(e, "e"), checked_out(out, "out")) {
        (Ok(e), Ok(o)) => (e, o),
        (Err(st), _) | (_, Err(st)) => return st,
    };
    if row >= 2 || col >= e.0.width() {
        return fail_with(
            TpStatus::IndexOutOfRange,
            format!(
                "entry ({row}, {col}) out of range for a 2x{} matrix",
                e.0.width()
            ),
        );
    }
    *out = e.0.get(row, col);
    ok()
}

/// Renders the incidence matrix as "row0/row1" bit strings owned by the
/// caller.
///
/// # Safety
/// `e` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn tp_incidence_to_string(
    e: *const TpIncidence,
    out: *mut *mut c_char,
) -> TpStatus {
    let (e, out) = match (borrow(e, "e"), checked_out(out, "out")) {
        (Ok(e), Ok(o)) => (e, o),
        (Err(st), _) | (_, Err(st)) => return st,
    };
    give_string(e.0.to_string(), out)
}

/// Combines two equal-width incidence matrices columnwise: row 0 by OR,
/// row 1 by AND. Fails with `NotIncidence` when the result does not carry
/// exactly width-many ones, and `LengthMismatch` when the widths differ.
///
/// # Safety
/// `e1`, `e2`, and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn tp_incidence_sum_dot(
    e1: *const TpIncidence,
    e2: *const TpIncidence,
    out: *mut *mut TpIncidence,
) -> TpStatus {
    let (e1, e2, out) = match (borrow(e1, "e1"), borrow(e2, "e2"), checked_out(out, "out")) {
        (Ok(a), Ok(b), Ok(o)) => (a, b, o),
        (Err(st), _, _) | (_, Err(st), _) | (_, _, Err(st)) => return st,
    };
    let combined = match e1.0.as_bool().sum_dot(e2.0.as_bool()) {
        Ok(c) => c,
        Err(e) => return fail(&e),
    };
    match IncidenceMatrix::new(combined) {
        Ok(e) => give(TpIncidence(e), out),
        Err(e) => fail(&e),
    }
}

/// Splits the incidence matrix into the standard two-part factorization:
/// the first factor exchanges the lowest row-0 one for the lowest row-1
/// zero, the second clears the remaining row-0 ones from the top. Their
/// columnwise OR/AND combination reassembles the input. A matrix with empty
/// row 0 splits into two identities.
///
/// # Safety
/// `e`, `out_first`, and `out_second` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn tp_incidence_decompose(
    e: *const TpIncidence,
    out_first: *mut *mut TpIncidence,
    out_second: *mut *mut TpIncidence,
) -> TpStatus {
    let (e, out_first, out_second) = match (
        borrow(e, "e"),
        checked_out(out_first, "out_first"),
        checked_out(out_second, "out_second"),
    ) {
        (Ok(e), Ok(a), Ok(b)) => (e, a, b),
        (Err(st), _, _) | (_, Err(st), _) | (_, _, Err(st)) => return st,
    };
    let (e1, e2) = e.0.decompose();
    *out_first = Box::into_raw(Box::new(TpIncidence(e1)));
    *out_second = Box::into_raw(Box::new(TpIncidence(e2)));
    ok()
}

// --- exhaustive verification sweeps ----------------------------------------

fn report_out(
    report: harness::EquivalenceReport,
    out_checked: *mut usize,
    out_disagreements: *mut usize,
) -> TpStatus {
    unsafe {
        *out_checked = report.pairs_checked;
        *out_disagreements = report.disagreements;
    }
    ok()
}

/// Checks, for every pair of equal-size nonempty selections inside
/// `{0, ..., n}`, that four invertibility routes for the truncated Pascal
/// matrix agree: nonzero determinant, entrywise dominance, nonzero diagonal,
/// and the Pólya condition of the associated incidence matrix. Writes the
/// number of pairs checked and the number of disagreements (0 when the
/// equivalence holds).
///
/// # Safety
/// `out_checked` and `out_disagreements` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn tp_verify_main(
    n: usize,
    out_checked: *mut usize,
    out_disagreements: *mut usize,
) -> TpStatus {
    let (out_checked, out_disagreements) = match (
        checked_out(out_checked, "out_checked"),
        checked_out(out_disagreements, "out_disagreements"),
    ) {
        (Ok(c), Ok(d)) => (c, d),
        (Err(st), _) | (_, Err(st)) => return st,
    };
    if let Err(st) = width_guard(n) {
        return st;
    }
    let report = harness::verify_main_theorem(n, &HarnessConfig::default());
    report_out(report, out_checked, out_disagreements)
}

/// Checks, for every width-(n+1) incidence matrix, that the Pólya condition
/// is equivalent to invertibility of the corresponding two-node collocation
/// system at nodes 0 and 1. Writes the number of matrices checked and the
/// number of disagreements.
///
/// # Safety
/// `out_checked` and `out_disagreements` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn tp_verify_polya(
    n: usize,
    out_checked: *mut usize,
    out_disagreements: *mut usize,
) -> TpStatus {
    let (out_checked, out_disagreements) = match (
        checked_out(out_checked, "out_checked"),
        checked_out(out_disagreements, "out_disagreements"),
    ) {
        (Ok(c), Ok(d)) => (c, d),
        (Err(st), _) | (_, Err(st)) => return st,
    };
    if let Err(st) = width_guard(n) {
        return st;
    }
    let report = harness::verify_polya_theorem(n, &HarnessConfig::default());
    report_out(report, out_checked, out_disagreements)
}

/// Checks, for every width-(n+1) incidence matrix, that the two-part
/// factorization reassembles the input, yields genuine incidence parts,
/// hands the Pólya property down to the parts, and splits the row counts
/// additively. Writes the number of matrices checked and the number of
/// disagreements.
///
/// # Safety
/// `out_checked` and `out_disagreements` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn tp_verify_decompose(
    n: usize,
    out_checked: *mut usize,
    out_disagreements: *mut usize,
) -> TpStatus {
    let (out_checked, out_disagreements) = match (
        checked_out(out_checked, "out_checked"),
        checked_out(out_disagreements, "out_disagreements"),
    ) {
        (Ok(c), Ok(d)) => (c, d),
        (Err(st), _) | (_, Err(st)) => return st,
    };
    if let Err(st) = width_guard(n) {
        return st;
    }
    let report = harness::verify_decomposition(n, &HarnessConfig::default());
    report_out(report, out_checked, out_disagreements)
}
