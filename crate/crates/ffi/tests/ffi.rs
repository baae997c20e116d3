//! Exercises the C ABI through the same entry points a foreign binding
//! would use.

use modsing_ffi::*;
use std::ffi::{c_char, CStr};
use std::ptr;

unsafe fn take_string(ptr: *mut c_char) -> String {
    assert!(!ptr.is_null());
    let value = CStr::from_ptr(ptr).to_str().expect("utf-8").to_string();
    modsing_string_free(ptr);
    value
}

#[test]
fn report_roundtrip() {
    unsafe {
        let mut report: *mut ModsingReport = ptr::null_mut();
        assert_eq!(modsing_report_new(13, 6, 2, &mut report), ModsingStatus::Ok);
        assert!(!report.is_null());

        let mut json: *mut c_char = ptr::null_mut();
        assert_eq!(modsing_report_to_json(report, &mut json), ModsingStatus::Ok);
        let json = take_string(json);
        let value: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(value["canonical_class"], "9*H");
        assert_eq!(value["bigness"]["sufficient_test"], true);

        let mut dim = 0i64;
        assert_eq!(
            modsing_report_expected_dim(report, &mut dim),
            ModsingStatus::Ok
        );
        assert_eq!(dim, 26);

        let mut flag = false;
        assert_eq!(
            modsing_report_general_type_conditional(report, &mut flag),
            ModsingStatus::Ok
        );
        assert!(flag);

        modsing_report_free(report);
    }
}

#[test]
fn status_codes() {
    // n = 1 is out of range for reports
    let mut report: *mut ModsingReport = ptr::null_mut();
    assert_eq!(
        modsing_report_new(1, 1, 2, &mut report),
        ModsingStatus::InvalidArgument
    );
    assert!(report.is_null());

    assert_eq!(
        modsing_report_new(4, 1, 2, ptr::null_mut()),
        ModsingStatus::NullArgument
    );

    // excluded basis pair is a domain rejection
    let mut class: *mut c_char = ptr::null_mut();
    assert_eq!(
        modsing_canonical_class(2, 1, 2, &mut class),
        ModsingStatus::DomainError
    );

    // stabilizer order must divide the degree
    let mut alpha: *mut c_char = ptr::null_mut();
    assert_eq!(
        modsing_rsbt_invariant(3, 4, 3, &mut alpha),
        ModsingStatus::InvalidArgument
    );
}

#[test]
fn scalar_calls() {
    unsafe {
        let mut alpha: *mut c_char = ptr::null_mut();
        assert_eq!(
            modsing_rsbt_invariant(3, 2, 2, &mut alpha),
            ModsingStatus::Ok
        );
        assert_eq!(take_string(alpha), "1");

        let mut alpha: *mut c_char = ptr::null_mut();
        assert_eq!(
            modsing_rsbt_invariant(1, 5, 5, &mut alpha),
            ModsingStatus::Ok
        );
        assert_eq!(take_string(alpha), "3");

        let mut class: *mut c_char = ptr::null_mut();
        let mut mld: *mut c_char = ptr::null_mut();
        assert_eq!(
            modsing_pair_classify(1, 2, 1, 0, 0, &mut class, &mut mld),
            ModsingStatus::Ok
        );
        assert_eq!(take_string(class), "canonical");
        assert_eq!(take_string(mld), "1");

        let mut rendered: *mut c_char = ptr::null_mut();
        assert_eq!(
            modsing_canonical_class(4, 1, 2, &mut rendered),
            ModsingStatus::Ok
        );
        assert_eq!(take_string(rendered), "-3*H + -1*D[1,0]");

        let mut codim = 0u64;
        assert_eq!(modsing_stratum_codim(3, 3, 1, &mut codim), ModsingStatus::Ok);
        assert_eq!(codim, 4);

        let version = modsing_version();
        assert!(!version.is_null());
        assert_eq!(
            CStr::from_ptr(version).to_str().unwrap(),
            env!("CARGO_PKG_VERSION")
        );
    }
}
