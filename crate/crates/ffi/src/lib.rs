//! C ABI for the calculator.
//!
//! Conventions:
//! * every fallible call returns a [`ModsingStatus`] code and writes its
//!   result through an out-pointer, which is touched only on `Ok`;
//! * report handles are opaque and must be released with
//!   [`modsing_report_free`];
//! * all returned strings are NUL-terminated UTF-8 allocated by this
//!   library and must be released with [`modsing_string_free`];
//! * rationals cross the boundary as strings `p/q` in lowest terms.

use modsing::classify;
use modsing::cyclic;
use modsing::determinantal::{self, DetPairSpec};
use modsing::picard;
use modsing::rational::render;
use modsing::Error;
use std::ffi::{c_char, CString};

/// Status code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModsingStatus {
    Ok = 0,
    /// A required pointer argument was NULL.
    NullArgument = 1,
    /// An argument was out of range or otherwise malformed.
    InvalidArgument = 2,
    /// The input is well-formed but rejected (excluded pair, enumeration
    /// budget, unsupported case).
    DomainError = 3,
}

fn status_of(err: &Error) -> ModsingStatus {
    if err.exit_code() == 1 {
        ModsingStatus::DomainError
    } else {
        ModsingStatus::InvalidArgument
    }
}

/// Opaque classification report.
pub struct ModsingReport {
    inner: classify::Report,
}

fn export_string(value: String, out: *mut *mut c_char) -> ModsingStatus {
    // interior NULs cannot occur in our renderings
    let cstring = match CString::new(value) {
        Ok(s) => s,
        Err(_) => return ModsingStatus::InvalidArgument,
    };
    unsafe { *out = cstring.into_raw() };
    ModsingStatus::Ok
}

/// Builds the classification report for `(n, d, e)`. On success writes a
/// heap-allocated handle to `out`.
#[no_mangle]
pub extern "C" fn modsing_report_new(
    n: u32,
    d: u32,
    e: u32,
    out: *mut *mut ModsingReport,
) -> ModsingStatus {
    if out.is_null() {
        return ModsingStatus::NullArgument;
    }
    match classify::full_report(n, d, e) {
        Ok(inner) => {
            let handle = Box::new(ModsingReport { inner });
            unsafe { *out = Box::into_raw(handle) };
            ModsingStatus::Ok
        }
        Err(err) => status_of(&err),
    }
}

/// Releases a report handle. NULL is accepted and ignored.
///
/// # Safety
/// `report` must be NULL or a pointer obtained from [`modsing_report_new`]
/// that has not been freed yet.
#[no_mangle]
pub unsafe extern "C" fn modsing_report_free(report: *mut ModsingReport) {
    if !report.is_null() {
        drop(Box::from_raw(report));
    }
}

/// Serializes a report as JSON.
///
/// # Safety
/// `report` must be a live pointer from [`modsing_report_new`].
#[no_mangle]
pub unsafe extern "C" fn modsing_report_to_json(
    report: *const ModsingReport,
    out: *mut *mut c_char,
) -> ModsingStatus {
    if report.is_null() || out.is_null() {
        return ModsingStatus::NullArgument;
    }
    let json = serde_json::to_string_pretty(&(*report).inner)
        .expect("reports always serialize");
    export_string(json, out)
}

/// Reads the expected dimension field of a report.
///
/// # Safety
/// `report` must be a live pointer from [`modsing_report_new`].
#[no_mangle]
pub unsafe extern "C" fn modsing_report_expected_dim(
    report: *const ModsingReport,
    out: *mut i64,
) -> ModsingStatus {
    if report.is_null() || out.is_null() {
        return ModsingStatus::NullArgument;
    }
    *out = (*report).inner.kbm_x.expected_dim;
    ModsingStatus::Ok
}

/// Reads the conjecture-conditional general-type flag of a report.
///
/// # Safety
/// `report` must be a live pointer from [`modsing_report_new`].
#[no_mangle]
pub unsafe extern "C" fn modsing_report_general_type_conditional(
    report: *const ModsingReport,
    out: *mut bool,
) -> ModsingStatus {
    if report.is_null() || out.is_null() {
        return ModsingStatus::NullArgument;
    }
    *out = (*report).inner.general_type_conditional;
    ModsingStatus::Ok
}

/// Invariant of the tangent space at a degree-`e` cover of a line in `P^n`
/// with cyclic stabilizer of order `r`, as a rational string.
#[no_mangle]
pub extern "C" fn modsing_rsbt_invariant(
    n: u32,
    e: u32,
    r: u32,
    out: *mut *mut c_char,
) -> ModsingStatus {
    if out.is_null() {
        return ModsingStatus::NullArgument;
    }
    match cyclic::tangent_rep_multiple_cover(n, e, r) {
        Ok(assembly) => export_string(render(&assembly.invariant()), out),
        Err(err) => status_of(&err),
    }
}

/// Classifies the determinantal pair `(g, f, q, k)` from tower level
/// `base_r`. Writes the class tag (e.g. `canonical`) and the minimal log
/// discrepancy (`undefined` when the pair is not log canonical).
#[no_mangle]
pub extern "C" fn modsing_pair_classify(
    g: u32,
    f: u32,
    q: u32,
    k: u32,
    base_r: u32,
    out_class: *mut *mut c_char,
    out_mld: *mut *mut c_char,
) -> ModsingStatus {
    if out_class.is_null() || out_mld.is_null() {
        return ModsingStatus::NullArgument;
    }
    let pair = match DetPairSpec::new(g, f, q, k, base_r) {
        Ok(pair) => pair,
        Err(err) => return status_of(&err),
    };
    let class = determinantal::classify_pair(&pair);
    let mld = class
        .mld
        .as_ref()
        .map(render)
        .unwrap_or_else(|| "undefined".to_string());
    let status = export_string(class.tag.to_string(), out_class);
    if status != ModsingStatus::Ok {
        return status;
    }
    export_string(mld, out_mld)
}

/// Canonical divisor class of the space of degree-`e` rational curves on a
/// general degree-`d` hypersurface in `P^n`, rendered in the basis order
/// `H`, `L_p`, `D[i,j]`.
#[no_mangle]
pub extern "C" fn modsing_canonical_class(
    n: u32,
    d: u32,
    e: u32,
    out: *mut *mut c_char,
) -> ModsingStatus {
    if out.is_null() {
        return ModsingStatus::NullArgument;
    }
    match picard::canonical_hypersurface(n, d, e) {
        Ok(class) => export_string(class.render(), out),
        Err(err) => status_of(&err),
    }
}

/// Codimension of the rank-at-most-`k` stratum of `g x f` matrices.
#[no_mangle]
pub extern "C" fn modsing_stratum_codim(
    g: u32,
    f: u32,
    k: u32,
    out: *mut u64,
) -> ModsingStatus {
    if out.is_null() {
        return ModsingStatus::NullArgument;
    }
    match determinantal::stratum_codim(g, f, k) {
        Ok(value) => {
            unsafe { *out = value };
            ModsingStatus::Ok
        }
        Err(err) => status_of(&err),
    }
}

/// Releases a string returned by this library. NULL is accepted.
///
/// # Safety
/// `s` must be NULL or a pointer returned by one of the string-producing
/// functions of this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn modsing_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Library version as a static string; do not free.
#[no_mangle]
pub extern "C" fn modsing_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}
