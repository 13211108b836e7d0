use std::ffi::{CStr, CString};
use std::path::Path;
use std::process::Command;
use std::ptr;

use delannoy_ffi::*;

unsafe fn take(s: *mut std::ffi::c_char) -> String {
    let owned = CStr::from_ptr(s).to_str().unwrap().to_owned();
    dln_string_free(s);
    owned
}

unsafe fn last_error() -> String {
    CStr::from_ptr(dln_last_error()).to_str().unwrap().to_owned()
}

#[test]
fn version_matches_crate() {
    let v = unsafe { CStr::from_ptr(dln_version()) }.to_str().unwrap();
    assert_eq!(v, env!("CARGO_PKG_VERSION"));
}

#[test]
fn tables() {
    unsafe {
        let mut t = ptr::null_mut();
        assert_eq!(dln_table_new(DlnSequence::LittleSchroder, 5, &mut t), DlnStatus::Ok);
        assert_eq!(dln_table_len(t), 6);
        let values: Vec<String> = (0..6)
            .map(|i| {
                let mut s = ptr::null_mut();
                assert_eq!(dln_table_value(t, i, &mut s), DlnStatus::Ok);
                take(s)
            })
            .collect();
        assert_eq!(values, ["1", "1", "3", "11", "45", "197"]);
        let mut s = ptr::null_mut();
        assert_eq!(dln_table_value(t, 6, &mut s), DlnStatus::InvalidArgument);
        assert!(s.is_null());
        assert!(last_error().contains("index 6"));
        dln_table_free(t);
        assert_eq!(dln_table_len(ptr::null()), 0);
    }
}

#[test]
fn polynomials() {
    unsafe {
        let mut p = ptr::null_mut();
        assert_eq!(dln_poly_new(DlnPolyFamily::LittleSchroder, 3, &mut p), DlnStatus::Ok);
        assert_eq!(dln_poly_degree(p), 2);
        let mut s = ptr::null_mut();
        assert_eq!(dln_poly_coefficients(p, &mut s), DlnStatus::Ok);
        assert_eq!(take(s), "1,5,5");
        assert_eq!(dln_poly_eval(p, 1, &mut s), DlnStatus::Ok);
        assert_eq!(take(s), "11");
        dln_poly_free(p);

        assert_eq!(dln_poly_new(DlnPolyFamily::LittleSchroder, 0, &mut p), DlnStatus::InvalidArgument);
        assert_eq!(dln_poly_degree(ptr::null()), -1);
    }
}

#[test]
fn verify_claims() {
    unsafe {
        let claim = CString::new("thm1.2").unwrap();
        let range = DlnRange { p_max: 7, ..Default::default() };
        let mut r = ptr::null_mut();
        assert_eq!(dln_verify(claim.as_ptr(), &range, &mut r), DlnStatus::Ok);
        assert_eq!(dln_report_passed(r), 1);
        assert_eq!(dln_report_instances_checked(r), 2);
        let mut s = ptr::null_mut();
        assert_eq!(dln_report_json(r, 1, &mut s), DlnStatus::Ok);
        let json: serde_json::Value = serde_json::from_str(&take(s)).unwrap();
        assert_eq!(json["claim_id"], "thm1.2");
        assert_eq!(json["status"], "pass");
        assert_eq!(json["elapsed_ms"], 0);
        dln_report_free(r);
    }
}

#[test]
fn verify_errors() {
    unsafe {
        let mut r = ptr::null_mut();
        let bogus = CString::new("thm9.9").unwrap();
        assert_eq!(dln_verify(bogus.as_ptr(), ptr::null(), &mut r), DlnStatus::UnknownClaim);
        assert!(last_error().contains("thm9.9"));

        let claim = CString::new("thm1.3").unwrap();
        let odd = DlnRange { n: 3, ..Default::default() };
        assert_eq!(dln_verify(claim.as_ptr(), &odd, &mut r), DlnStatus::InvalidArgument);
        assert!(r.is_null());

        assert_eq!(dln_verify(ptr::null(), ptr::null(), &mut r), DlnStatus::NullPointer);
        assert_eq!(dln_verify(claim.as_ptr(), ptr::null(), ptr::null_mut()), DlnStatus::NullPointer);

        let bad_utf8 = [0xffu8, 0];
        assert_eq!(dln_verify(bad_utf8.as_ptr().cast(), ptr::null(), &mut r), DlnStatus::InvalidUtf8);
    }
}

#[test]
fn corrupted_certificate_fails_with_counterexample() {
    let fixture = Path::new(env!("CARGO_MANIFEST_DIR")).join("../core/tests/fixtures/cert_f2_corrupted.json");
    let spec = CString::new(std::fs::read_to_string(fixture).unwrap()).unwrap();
    unsafe {
        let mut r = ptr::null_mut();
        let range = DlnRange { n_max: 10, ..Default::default() };
        assert_eq!(dln_verify_certificate(spec.as_ptr(), &range, &mut r), DlnStatus::Ok);
        assert_eq!(dln_report_passed(r), 0);
        let mut s = ptr::null_mut();
        assert_eq!(dln_report_json(r, 1, &mut s), DlnStatus::Ok);
        let json: serde_json::Value = serde_json::from_str(&take(s)).unwrap();
        assert_eq!(json["counterexample"]["params"]["n"], 1);
        assert_eq!(json["counterexample"]["params"]["k"], 1);
        dln_report_free(r);

        let junk = CString::new("{\"id\": 1}").unwrap();
        assert_eq!(dln_verify_certificate(junk.as_ptr(), ptr::null(), &mut r), DlnStatus::InvalidSpec);
    }
}

/// The generated header must be valid C and C++.
#[test]
fn header_compiles() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR"));
    let header = dir.join("include/delannoy.h");
    assert!(header.exists(), "build script did not write {}", header.display());
    for (compiler, lang) in [("cc", "c"), ("c++", "c++")] {
        let status =
            Command::new(compiler).args(["-fsyntax-only", "-Wall", "-Werror", "-x", lang]).arg(&header).status();
        match status {
            Ok(s) => assert!(s.success(), "{compiler} rejected the header"),
            Err(e) => panic!("cannot run {compiler}: {e}"),
        }
    }
}
