//! C interface to `circdet`.
//!
//! Every fallible call returns a [`CircdetStatus`]; the message for the most
//! recent failure on the calling thread is available from
//! [`circdet_last_error_message`]. Big coefficients cross the boundary as
//! decimal strings written into caller buffers.

use std::cell::RefCell;
use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::slice;

use circdet::coeff::{coefficient, zero_by_corollary6};
use circdet::expansion::{expand, ExpansionPolynomial, Strategy};
use circdet::symmetry::count_solutions_f;
use circdet::{Error, IndexSet};
use num_bigint::BigInt;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CircdetStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    OutOfRange = 3,
    /// The output buffer cannot hold the result; the required length was still reported.
    BufferTooSmall = 4,
    /// The value does not fit the requested integer type.
    Overflow = 5,
    Internal = 6,
    Panic = 7,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CircdetStrategy {
    Direct = 0,
    Reduced = 1,
}

/// Opaque handle to a computed expansion.
pub struct CircdetExpansion {
    poly: ExpansionPolynomial,
    // nonzero terms sorted by exponent vector
    terms: Vec<(Vec<usize>, String)>,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).ok());
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

fn fail(status: CircdetStatus, msg: impl Into<String>) -> CircdetStatus {
    set_error(msg);
    status
}

fn status_of(e: &Error) -> CircdetStatus {
    match e {
        Error::InvalidIndexSet(_) | Error::Shape(_) | Error::NonPositive(_) => CircdetStatus::InvalidArgument,
        Error::OutOfRange(_) => CircdetStatus::OutOfRange,
        _ => CircdetStatus::Internal,
    }
}

fn from_error(e: Error) -> CircdetStatus {
    fail(status_of(&e), e.to_string())
}

fn guarded(f: impl FnOnce() -> CircdetStatus) -> CircdetStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(p) => {
            let msg = p
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| p.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            fail(CircdetStatus::Panic, msg)
        }
    }
}

/// Copies `s` plus a NUL into `buf`. `written` always receives `s.len()`.
unsafe fn copy_out(s: &str, buf: *mut c_char, buf_len: usize, written: *mut usize) -> bool {
    if !written.is_null() {
        *written = s.len();
    }
    if buf.is_null() || buf_len < s.len() + 1 {
        return false;
    }
    ptr::copy_nonoverlapping(s.as_ptr(), buf as *mut u8, s.len());
    *buf.add(s.len()) = 0;
    true
}

unsafe fn write_str(s: &str, buf: *mut c_char, buf_len: usize, written: *mut usize) -> CircdetStatus {
    if copy_out(s, buf, buf_len, written) {
        CircdetStatus::Ok
    } else {
        fail(
            CircdetStatus::BufferTooSmall,
            format!("need {} bytes, have {buf_len}", s.len() + 1),
        )
    }
}

unsafe fn index_set(n: usize, indices: *const usize, len: usize) -> Result<IndexSet, CircdetStatus> {
    if indices.is_null() && len > 0 {
        return Err(fail(CircdetStatus::NullPointer, "indices is null"));
    }
    let v = if len == 0 { Vec::new() } else { slice::from_raw_parts(indices, len).to_vec() };
    IndexSet::new(n, v).map_err(from_error)
}

fn to_i64(v: &BigInt) -> Result<i64, CircdetStatus> {
    i64::try_from(v).map_err(|_| fail(CircdetStatus::Overflow, format!("{v} does not fit in 64 bits")))
}

/// Coefficient of the monomial with the given `n` indices, each in `[0, n)`, as a decimal string.
///
/// # Safety
/// `indices` points to `len` values. `buf` is null or writable for `buf_len` bytes.
/// `written` is null or writable.
#[no_mangle]
pub unsafe extern "C" fn circdet_coefficient(
    n: usize,
    indices: *const usize,
    len: usize,
    buf: *mut c_char,
    buf_len: usize,
    written: *mut usize,
) -> CircdetStatus {
    guarded(|| {
        let a = match index_set(n, indices, len) {
            Ok(a) => a,
            Err(s) => return s,
        };
        match coefficient(&a) {
            Ok(v) => write_str(&v.to_string(), buf, buf_len, written),
            Err(e) => from_error(e),
        }
    })
}

/// Same as [`circdet_coefficient`] but into an `i64`; `Overflow` if it does not fit.
///
/// # Safety
/// `indices` points to `len` values and `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn circdet_coefficient_i64(
    n: usize,
    indices: *const usize,
    len: usize,
    out: *mut i64,
) -> CircdetStatus {
    guarded(|| {
        if out.is_null() {
            return fail(CircdetStatus::NullPointer, "out is null");
        }
        let a = match index_set(n, indices, len) {
            Ok(a) => a,
            Err(s) => return s,
        };
        match coefficient(&a).map_err(from_error).and_then(|v| to_i64(&v)) {
            Ok(v) => {
                *out = v;
                CircdetStatus::Ok
            }
            Err(s) => s,
        }
    })
}

/// Whether the coefficient vanishes by the three-large-index criterion, up to symmetry.
/// A false result does not mean the coefficient is nonzero.
///
/// # Safety
/// `indices` points to `len` values and `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn circdet_is_structural_zero(
    n: usize,
    indices: *const usize,
    len: usize,
    out: *mut bool,
) -> CircdetStatus {
    guarded(|| {
        if out.is_null() {
            return fail(CircdetStatus::NullPointer, "out is null");
        }
        match index_set(n, indices, len) {
            Ok(a) => {
                *out = zero_by_corollary6(&a);
                CircdetStatus::Ok
            }
            Err(s) => s,
        }
    })
}

/// Number of admissible exponent vectors for dimension `n`.
///
/// # Safety
/// `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn circdet_count_solutions(n: usize, out: *mut u64) -> CircdetStatus {
    guarded(|| {
        if out.is_null() {
            return fail(CircdetStatus::NullPointer, "out is null");
        }
        match count_solutions_f(n) {
            Ok(v) => match u64::try_from(&v) {
                Ok(v) => {
                    *out = v;
                    CircdetStatus::Ok
                }
                Err(_) => fail(CircdetStatus::Overflow, format!("{v} does not fit in 64 bits")),
            },
            Err(e) => from_error(e),
        }
    })
}

/// Expands the `n x n` determinant. Free the handle with [`circdet_expansion_free`].
///
/// # Safety
/// `out` is writable. `strategy` must be a valid `CircdetStrategy`.
#[no_mangle]
pub unsafe extern "C" fn circdet_expansion_new(
    n: usize,
    strategy: CircdetStrategy,
    out: *mut *mut CircdetExpansion,
) -> CircdetStatus {
    guarded(|| {
        if out.is_null() {
            return fail(CircdetStatus::NullPointer, "out is null");
        }
        *out = ptr::null_mut();
        let strategy = match strategy {
            CircdetStrategy::Direct => Strategy::Direct,
            CircdetStrategy::Reduced => Strategy::Reduced,
        };
        match expand(n, strategy) {
            Ok(poly) => {
                let terms = poly
                    .sorted_terms(false)
                    .into_iter()
                    .map(|(m, c)| (m.counts().to_vec(), c.to_string()))
                    .collect();
                *out = Box::into_raw(Box::new(CircdetExpansion { poly, terms }));
                CircdetStatus::Ok
            }
            Err(e) => from_error(e),
        }
    })
}

/// # Safety
/// `h` is null or a handle from [`circdet_expansion_new`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn circdet_expansion_free(h: *mut CircdetExpansion) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// Dimension of the expansion, 0 for a null handle.
///
/// # Safety
/// `h` is null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn circdet_expansion_n(h: *const CircdetExpansion) -> usize {
    h.as_ref().map_or(0, |h| h.poly.n())
}

/// Number of nonzero terms, 0 for a null handle.
///
/// # Safety
/// `h` is null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn circdet_expansion_term_count(h: *const CircdetExpansion) -> usize {
    h.as_ref().map_or(0, |h| h.terms.len())
}

/// Term `i` in lexicographic order of exponent vectors. `m_out` receives the `n` exponents
/// and `buf` the coefficient as a decimal string.
///
/// # Safety
/// `h` is a live handle, `m_out` is writable for `m_len` values, `buf` is null or
/// writable for `buf_len` bytes, `written` is null or writable.
#[no_mangle]
pub unsafe extern "C" fn circdet_expansion_term(
    h: *const CircdetExpansion,
    i: usize,
    m_out: *mut usize,
    m_len: usize,
    buf: *mut c_char,
    buf_len: usize,
    written: *mut usize,
) -> CircdetStatus {
    guarded(|| {
        let Some(h) = h.as_ref() else {
            return fail(CircdetStatus::NullPointer, "handle is null");
        };
        let Some((m, c)) = h.terms.get(i) else {
            return fail(CircdetStatus::OutOfRange, format!("term {i} of {}", h.terms.len()));
        };
        if m_out.is_null() {
            return fail(CircdetStatus::NullPointer, "m_out is null");
        }
        if m_len < m.len() {
            return fail(CircdetStatus::BufferTooSmall, format!("need {} exponents, have {m_len}", m.len()));
        }
        ptr::copy_nonoverlapping(m.as_ptr(), m_out, m.len());
        write_str(c, buf, buf_len, written)
    })
}

/// Determinant at integer arguments `x[0..n]`, as a decimal string.
///
/// # Safety
/// `h` is a live handle, `x` points to `len` values, `buf`/`written` as for
/// [`circdet_coefficient`].
#[no_mangle]
pub unsafe extern "C" fn circdet_expansion_evaluate(
    h: *const CircdetExpansion,
    x: *const i64,
    len: usize,
    buf: *mut c_char,
    buf_len: usize,
    written: *mut usize,
) -> CircdetStatus {
    guarded(|| {
        let Some(h) = h.as_ref() else {
            return fail(CircdetStatus::NullPointer, "handle is null");
        };
        if x.is_null() && len > 0 {
            return fail(CircdetStatus::NullPointer, "x is null");
        }
        let xs = if len == 0 { &[][..] } else { slice::from_raw_parts(x, len) };
        match h.poly.evaluate(xs) {
            Ok(v) => write_str(&v.to_string(), buf, buf_len, written),
            Err(e) => from_error(e),
        }
    })
}

/// JSON document of the nonzero terms. Free with [`circdet_string_free`]. Null on failure.
///
/// # Safety
/// `h` is null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn circdet_expansion_to_json(h: *const CircdetExpansion) -> *mut c_char {
    clear_error();
    let Some(h) = h.as_ref() else {
        set_error("handle is null");
        return ptr::null_mut();
    };
    match catch_unwind(AssertUnwindSafe(|| h.poly.to_json(false))) {
        Ok(s) => CString::new(s).map_or(ptr::null_mut(), CString::into_raw),
        Err(_) => {
            set_error("panic while serializing");
            ptr::null_mut()
        }
    }
}

/// # Safety
/// `s` is null or a string returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn circdet_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Copies the calling thread's last error message into `buf`. Returns `Ok` with an empty
/// string when there is none.
///
/// # Safety
/// `buf` is null or writable for `buf_len` bytes, `written` is null or writable.
#[no_mangle]
pub unsafe extern "C" fn circdet_last_error_message(
    buf: *mut c_char,
    buf_len: usize,
    written: *mut usize,
) -> CircdetStatus {
    let msg = LAST_ERROR.with(|e| e.borrow().as_ref().map(|c| c.to_string_lossy().into_owned()));
    // the stored message must survive a too-small buffer
    if copy_out(msg.as_deref().unwrap_or(""), buf, buf_len, written) {
        CircdetStatus::Ok
    } else {
        CircdetStatus::BufferTooSmall
    }
}

/// Library version, static storage.
#[no_mangle]
pub extern "C" fn circdet_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}
