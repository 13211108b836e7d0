//! C ABI over the `delannoy` crate.
//!
//! Every handle is opaque and owned by the caller once returned; release it
//! with the matching `*_free`. Strings returned through `out` parameters are
//! NUL-terminated, heap-allocated, and released with [`dln_string_free`].
//! Functions never unwind across the boundary: a panic is reported as
//! [`DlnStatus::Panic`]. On any non-`Ok` status, [`dln_last_error`] holds a
//! message for the calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, c_int, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use delannoy::families::{delannoy_poly, large_schroder_poly, little_schroder_poly};
use delannoy::verify::catalog::{run_claim, ClaimId, RangeRequest};
use delannoy::verify::certificate::CertificateSpec;
use delannoy::{Error, IntPoly, SequenceKind, SequenceTable, VerificationReport};
use num_bigint::BigInt;

/// Result code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DlnStatus {
    Ok = 0,
    /// A parameter violates a claim's hypothesis or is out of range.
    InvalidArgument = 1,
    UnknownClaim = 2,
    NullPointer = 3,
    /// A string argument is not valid UTF-8.
    InvalidUtf8 = 4,
    /// A certificate spec could not be parsed or validated.
    InvalidSpec = 5,
    /// An internal consistency check failed during computation.
    Internal = 6,
    Panic = 7,
}

/// Integer sequence selector for [`dln_table_new`].
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DlnSequence {
    Delannoy = 0,
    LittleSchroder = 1,
    LargeSchroder = 2,
}

/// Polynomial family selector for [`dln_poly_new`].
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DlnPolyFamily {
    Delannoy = 0,
    LittleSchroder = 1,
    LargeSchroder = 2,
}

/// Range overrides for [`dln_verify`]; `0` in any field means unset.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default)]
pub struct DlnRange {
    pub n_max: u64,
    pub n: u64,
    pub p_min: u64,
    pub p_max: u64,
    pub p: u64,
    pub j_max: u64,
}

impl From<&DlnRange> for RangeRequest {
    fn from(r: &DlnRange) -> Self {
        let opt = |v: u64| (v != 0).then_some(v);
        RangeRequest {
            n_max: opt(r.n_max),
            n: opt(r.n),
            p_min: opt(r.p_min),
            p_max: opt(r.p_max),
            p: opt(r.p),
            j_max: opt(r.j_max),
        }
    }
}

/// Values `0..=n_max` of one integer sequence.
pub struct DlnTable(SequenceTable);

/// A polynomial with integer coefficients.
pub struct DlnPoly(IntPoly);

/// Outcome of one claim.
pub struct DlnReport(VerificationReport);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', "\\0");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).ok());
}

fn clear_last_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

struct Failure(DlnStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match &e {
            Error::UnknownClaim(_) => DlnStatus::UnknownClaim,
            Error::CertificateSpec(_) => DlnStatus::InvalidSpec,
            e if e.is_usage() => DlnStatus::InvalidArgument,
            _ => DlnStatus::Internal,
        };
        Failure(status, e.to_string())
    }
}

fn null(what: &str) -> Failure {
    Failure(DlnStatus::NullPointer, format!("{what} is null"))
}

/// Runs `body` behind the panic boundary and records the outcome.
fn guard(body: impl FnOnce() -> Result<(), Failure>) -> DlnStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => {
            clear_last_error();
            DlnStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_last_error(msg);
            status
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".to_string());
            set_last_error(format!("panic: {msg}"));
            DlnStatus::Panic
        }
    }
}

unsafe fn read_str<'a>(s: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if s.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(s).to_str().map_err(|_| Failure(DlnStatus::InvalidUtf8, format!("{what} is not valid UTF-8")))
}

unsafe fn write_out<T>(out: *mut *mut T, value: T) {
    *out = Box::into_raw(Box::new(value));
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    let c = CString::new(s).map_err(|e| Failure(DlnStatus::Internal, e.to_string()))?;
    *out = c.into_raw();
    Ok(())
}

/// Library version, a static string owned by the library.
#[no_mangle]
pub extern "C" fn dln_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Message of the last failed call on this thread, or null. Valid until
/// the next call into the library from the same thread.
#[no_mangle]
pub extern "C" fn dln_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Releases a string returned by this library. Null is a no-op.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn dln_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Builds the table of values `0..=n_max`.
///
/// # Safety
/// `out` must be a valid pointer to writable storage.
#[no_mangle]
pub unsafe extern "C" fn dln_table_new(kind: DlnSequence, n_max: u64, out: *mut *mut DlnTable) -> DlnStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let kind = match kind {
            DlnSequence::Delannoy => SequenceKind::Delannoy,
            DlnSequence::LittleSchroder => SequenceKind::LittleSchroder,
            DlnSequence::LargeSchroder => SequenceKind::LargeSchroder,
        };
        write_out(out, DlnTable(SequenceTable::build(kind, n_max)?));
        Ok(())
    })
}

/// Number of entries (`n_max + 1`), or 0 for null.
///
/// # Safety
/// `table` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn dln_table_len(table: *const DlnTable) -> u64 {
    table.as_ref().map_or(0, |t| t.0.values().len() as u64)
}

/// Decimal value at `index`.
///
/// # Safety
/// `table` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dln_table_value(table: *const DlnTable, index: u64, out: *mut *mut c_char) -> DlnStatus {
    guard(|| {
        let table = table.as_ref().ok_or_else(|| null("table"))?;
        if out.is_null() {
            return Err(null("out"));
        }
        let v = table.0.get(index).ok_or_else(|| {
            Failure(DlnStatus::InvalidArgument, format!("index {index} exceeds table maximum {}", table.0.max_index()))
        })?;
        write_string(out, v.to_string())
    })
}

/// # Safety
/// `table` must be null or a live handle, not used afterwards.
#[no_mangle]
pub unsafe extern "C" fn dln_table_free(table: *mut DlnTable) {
    if !table.is_null() {
        drop(Box::from_raw(table));
    }
}

/// The `n`-th member of a polynomial family (`n >= 1` for the Schröder
/// families).
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dln_poly_new(family: DlnPolyFamily, n: u64, out: *mut *mut DlnPoly) -> DlnStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let p = match family {
            DlnPolyFamily::Delannoy => delannoy_poly(n),
            DlnPolyFamily::LittleSchroder => little_schroder_poly(n)?,
            DlnPolyFamily::LargeSchroder => large_schroder_poly(n)?,
        };
        write_out(out, DlnPoly(p));
        Ok(())
    })
}

/// Degree, or -1 for the zero polynomial or a null handle.
///
/// # Safety
/// `poly` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn dln_poly_degree(poly: *const DlnPoly) -> i64 {
    poly.as_ref().and_then(|p| p.0.degree()).map_or(-1, |d| d as i64)
}

/// Ascending coefficients as a comma-separated list, e.g. `1,5,5`.
///
/// # Safety
/// `poly` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dln_poly_coefficients(poly: *const DlnPoly, out: *mut *mut c_char) -> DlnStatus {
    guard(|| {
        let poly = poly.as_ref().ok_or_else(|| null("poly"))?;
        if out.is_null() {
            return Err(null("out"));
        }
        write_string(out, poly.0.to_string())
    })
}

/// Value at integer `x`, in decimal.
///
/// # Safety
/// `poly` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dln_poly_eval(poly: *const DlnPoly, x: i64, out: *mut *mut c_char) -> DlnStatus {
    guard(|| {
        let poly = poly.as_ref().ok_or_else(|| null("poly"))?;
        if out.is_null() {
            return Err(null("out"));
        }
        write_string(out, poly.0.eval(&BigInt::from(x)).to_string())
    })
}

/// # Safety
/// `poly` must be null or a live handle, not used afterwards.
#[no_mangle]
pub unsafe extern "C" fn dln_poly_free(poly: *mut DlnPoly) {
    if !poly.is_null() {
        drop(Box::from_raw(poly));
    }
}

/// Runs the claim named by `claim` (e.g. `thm1.2`, `cert-f2`). `range` may
/// be null for the claim's default range. `Ok` means a report was produced;
/// whether the claim held is [`dln_report_passed`].
///
/// # Safety
/// `claim` must be a NUL-terminated string; `range` null or valid; `out`
/// writable.
#[no_mangle]
pub unsafe extern "C" fn dln_verify(
    claim: *const c_char,
    range: *const DlnRange,
    out: *mut *mut DlnReport,
) -> DlnStatus {
    guard(|| {
        let id: ClaimId = read_str(claim, "claim")?.parse()?;
        if out.is_null() {
            return Err(null("out"));
        }
        let req = range.as_ref().map(RangeRequest::from).unwrap_or_default();
        write_out(out, DlnReport(run_claim(id, &req, None)?));
        Ok(())
    })
}

/// Checks a certificate given as a JSON spec, over the certificate's
/// default range unless `range` overrides it.
///
/// # Safety
/// As for [`dln_verify`], with `spec_json` a NUL-terminated string.
#[no_mangle]
pub unsafe extern "C" fn dln_verify_certificate(
    spec_json: *const c_char,
    range: *const DlnRange,
    out: *mut *mut DlnReport,
) -> DlnStatus {
    guard(|| {
        let spec = CertificateSpec::from_json(read_str(spec_json, "spec_json")?)?;
        if out.is_null() {
            return Err(null("out"));
        }
        let req = range.as_ref().map(RangeRequest::from).unwrap_or_default();
        write_out(out, DlnReport(run_claim(ClaimId::Cert(spec.id), &req, Some(&spec))?));
        Ok(())
    })
}

/// 1 if the claim held, 0 if it failed, -1 for null.
///
/// # Safety
/// `report` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn dln_report_passed(report: *const DlnReport) -> c_int {
    report.as_ref().map_or(-1, |r| c_int::from(r.0.passed()))
}

/// Number of instances checked, or 0 for null.
///
/// # Safety
/// `report` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn dln_report_instances_checked(report: *const DlnReport) -> u64 {
    report.as_ref().map_or(0, |r| r.0.instances_checked)
}

/// The report as a JSON object. With `deterministic` nonzero, the elapsed
/// time is written as 0.
///
/// # Safety
/// `report` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dln_report_json(
    report: *const DlnReport,
    deterministic: c_int,
    out: *mut *mut c_char,
) -> DlnStatus {
    guard(|| {
        let report = report.as_ref().ok_or_else(|| null("report"))?;
        if out.is_null() {
            return Err(null("out"));
        }
        let mut r = report.0.clone();
        if deterministic != 0 {
            r.elapsed_ms = 0;
        }
        let json = serde_json::to_string(&r).map_err(|e| Failure(DlnStatus::Internal, e.to_string()))?;
        write_string(out, json)
    })
}

/// # Safety
/// `report` must be null or a live handle, not used afterwards.
#[no_mangle]
pub unsafe extern "C" fn dln_report_free(report: *mut DlnReport) {
    if !report.is_null() {
        drop(Box::from_raw(report));
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    unsafe fn take(s: *mut c_char) -> String {
        let owned = CStr::from_ptr(s).to_str().unwrap().to_owned();
        dln_string_free(s);
        owned
    }

    #[test]
    fn status_codes_are_stable() {
        assert_eq!(DlnStatus::Ok as i32, 0);
        assert_eq!(DlnStatus::Panic as i32, 7);
    }

    #[test]
    fn guard_catches_panics() {
        let status = guard(|| panic!("boom"));
        assert_eq!(status, DlnStatus::Panic);
        let msg = unsafe { CStr::from_ptr(dln_last_error()) }.to_str().unwrap();
        assert!(msg.contains("boom"));
        assert_eq!(guard(|| Ok(())), DlnStatus::Ok);
        assert!(dln_last_error().is_null());
    }

    #[test]
    fn range_zero_means_unset() {
        let req = RangeRequest::from(&DlnRange { n_max: 5, ..Default::default() });
        assert_eq!(req, RangeRequest { n_max: Some(5), ..Default::default() });
    }

    #[test]
    fn table_value_round_trip() {
        unsafe {
            let mut t = ptr::null_mut();
            assert_eq!(dln_table_new(DlnSequence::Delannoy, 4, &mut t), DlnStatus::Ok);
            let mut s = ptr::null_mut();
            assert_eq!(dln_table_value(t, 4, &mut s), DlnStatus::Ok);
            assert_eq!(take(s), "321");
            dln_table_free(t);
        }
    }
}
