//! C ABI for `tightcount`.
//!
//! Reports are opaque heap handles created by [`tc_analyze`] and released
//! with [`tc_report_free`]. Every fallible call returns a [`TcStatus`]; the
//! numeric values of the first four match the CLI exit codes. After a
//! non-`OK` status, [`tc_last_error`] describes the failure on the calling
//! thread. Strings returned by this library must be released with
//! [`tc_string_free`].

use std::cell::RefCell;
use std::ffi::{CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use libc::c_char;
use tightcount::report::{to_json, to_text};
use tightcount::{analyze, neg_cf_expand, CountReport, Error, Options, Rational, SeifertTriple};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TcStatus {
    Ok = 0,
    Malformed = 1,
    OutOfScope = 2,
    EnumerationCap = 3,
    NullPointer = 4,
    /// The requested count was not computed (run with `verify`).
    NotComputed = 5,
    /// The value does not fit the output integer type; use the JSON form.
    Overflow = 6,
    Internal = 7,
}

/// Opaque classification report.
pub struct TcReport(CountReport);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).expect("interior nuls removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn fail(status: TcStatus, msg: impl Into<String>) -> TcStatus {
    set_last_error(msg);
    status
}

fn status_of(e: &Error) -> TcStatus {
    match e.exit_code() {
        2 => TcStatus::OutOfScope,
        3 => TcStatus::EnumerationCap,
        _ => TcStatus::Malformed,
    }
}

fn guarded(f: impl FnOnce() -> TcStatus) -> TcStatus {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| fail(TcStatus::Internal, "internal panic"))
}

/// # Safety
/// `s` must be null or a valid NUL-terminated string.
unsafe fn read_rational(s: *const c_char, which: &str) -> Result<Rational, TcStatus> {
    if s.is_null() {
        return Err(fail(TcStatus::NullPointer, format!("{which} is null")));
    }
    let text = CStr::from_ptr(s)
        .to_str()
        .map_err(|_| fail(TcStatus::Malformed, format!("{which} is not UTF-8")))?;
    text.parse().map_err(|e: Error| fail(status_of(&e), e.to_string()))
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s).map_or(ptr::null_mut(), CString::into_raw)
}

/// Message for the most recent failure on this thread, or null. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn tc_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |m| m.as_ptr()))
}

/// Enumeration limit used when `max_enum` is 0.
#[no_mangle]
pub extern "C" fn tc_default_max_enum() -> u64 {
    tightcount::DEFAULT_MAX_ENUM
}

/// Classifies `M(r1, r2, r3)`. Each coefficient is `p` or `p/q`.
///
/// With `verify` both enumerations run; with `list_chern` the distinct Chern
/// vectors are kept (visible in the JSON form). `max_enum = 0` selects the
/// default limit. On success `*out` receives a report owned by the caller.
///
/// # Safety
/// `r1`, `r2`, `r3` must be valid NUL-terminated strings; `out` must be a
/// valid pointer to writable storage for one pointer.
#[no_mangle]
pub unsafe extern "C" fn tc_analyze(
    r1: *const c_char,
    r2: *const c_char,
    r3: *const c_char,
    verify: bool,
    list_chern: bool,
    max_enum: u64,
    out: *mut *mut TcReport,
) -> TcStatus {
    guarded(|| {
        if out.is_null() {
            return fail(TcStatus::NullPointer, "out is null");
        }
        *out = ptr::null_mut();
        let coeffs = (read_rational(r1, "r1"), read_rational(r2, "r2"), read_rational(r3, "r3"));
        let (r1, r2, r3) = match coeffs {
            (Ok(a), Ok(b), Ok(c)) => (a, b, c),
            (Err(s), _, _) | (_, Err(s), _) | (_, _, Err(s)) => return s,
        };
        let triple = match SeifertTriple::new(r1, r2, r3) {
            Ok(t) => t,
            Err(e) => return fail(status_of(&e), e.to_string()),
        };
        let max_enum = if max_enum == 0 { tightcount::DEFAULT_MAX_ENUM } else { max_enum };
        match analyze(&triple, &Options { verify, list_chern, max_enum }) {
            Ok(report) => {
                *out = Box::into_raw(Box::new(TcReport(report)));
                TcStatus::Ok
            }
            Err(e) => fail(status_of(&e), e.to_string()),
        }
    })
}

/// # Safety
/// `report` must be null or a pointer returned by [`tc_analyze`] that has
/// not been freed.
#[no_mangle]
pub unsafe extern "C" fn tc_report_free(report: *mut TcReport) {
    if !report.is_null() {
        drop(Box::from_raw(report));
    }
}

unsafe fn with_report<T>(
    report: *const TcReport,
    out: *mut T,
    get: impl FnOnce(&CountReport) -> Result<T, TcStatus>,
) -> TcStatus {
    guarded(|| {
        if report.is_null() || out.is_null() {
            return fail(TcStatus::NullPointer, "null report or output pointer");
        }
        match get(&(*report).0) {
            Ok(v) => {
                *out = v;
                TcStatus::Ok
            }
            Err(s) => s,
        }
    })
}

fn to_u64(n: &num_bigint::BigUint, what: &str) -> Result<u64, TcStatus> {
    u64::try_from(n).map_err(|_| fail(TcStatus::Overflow, format!("{what} = {n} exceeds 64 bits")))
}

/// # Safety
/// `report` must be a live report handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tc_report_e0(report: *const TcReport, out: *mut i64) -> TcStatus {
    with_report(report, out, |r| {
        i64::try_from(r.e0()).map_err(|_| fail(TcStatus::Overflow, format!("e0 = {} exceeds 64 bits", r.e0())))
    })
}

/// # Safety
/// `report` must be a live report handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tc_report_t_formula(report: *const TcReport, out: *mut u64) -> TcStatus {
    with_report(report, out, |r| to_u64(&r.t_formula, "T"))
}

/// # Safety
/// `report` must be a live report handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tc_report_upper_count(report: *const TcReport, out: *mut u64) -> TcStatus {
    with_report(report, out, |r| match &r.upper_count {
        Some(n) => to_u64(n, "upper_count"),
        None => Err(fail(TcStatus::NotComputed, "upper_count needs verify")),
    })
}

/// # Safety
/// `report` must be a live report handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tc_report_lower_count(report: *const TcReport, out: *mut u64) -> TcStatus {
    with_report(report, out, |r| match &r.lower_count {
        Some(n) => to_u64(n, "lower_count"),
        None => Err(fail(TcStatus::NotComputed, "lower_count needs verify")),
    })
}

/// # Safety
/// `report` must be a live report handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tc_report_agree(report: *const TcReport, out: *mut bool) -> TcStatus {
    with_report(report, out, |r| r.agree.ok_or_else(|| fail(TcStatus::NotComputed, "agree needs verify")))
}

/// Single-line JSON rendering; release with [`tc_string_free`]. Null on a
/// null handle.
///
/// # Safety
/// `report` must be null or a live report handle.
#[no_mangle]
pub unsafe extern "C" fn tc_report_json(report: *const TcReport) -> *mut c_char {
    if report.is_null() {
        set_last_error("report is null");
        return ptr::null_mut();
    }
    into_c_string(to_json(&(*report).0))
}

/// Labeled text table; release with [`tc_string_free`].
///
/// # Safety
/// `report` must be null or a live report handle.
#[no_mangle]
pub unsafe extern "C" fn tc_report_text(report: *const TcReport) -> *mut c_char {
    if report.is_null() {
        set_last_error("report is null");
        return ptr::null_mut();
    }
    into_c_string(to_text(&(*report).0))
}

/// Negative continued fraction of `x < 0` as a JSON array, e.g. `[-2,-2,-3]`.
///
/// # Safety
/// `x` must be a valid NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tc_neg_cf_expand(x: *const c_char, out: *mut *mut c_char) -> TcStatus {
    guarded(|| {
        if out.is_null() {
            return fail(TcStatus::NullPointer, "out is null");
        }
        *out = ptr::null_mut();
        let x = match read_rational(x, "x") {
            Ok(x) => x,
            Err(s) => return s,
        };
        match neg_cf_expand(&x) {
            Ok(cf) => {
                let items: Vec<String> = cf.coeffs().iter().map(ToString::to_string).collect();
                *out = into_c_string(format!("[{}]", items.join(",")));
                TcStatus::Ok
            }
            Err(e) => fail(status_of(&e), e.to_string()),
        }
    })
}

/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn tc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
