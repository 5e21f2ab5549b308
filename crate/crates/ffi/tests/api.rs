use std::ffi::{CStr, CString};
use std::ptr;

use acso_ffi::*;

const CP2: &str = include_str!("../../core/corpus/cp2.json");
const S4: &str = include_str!("../../core/corpus/s4.json");

fn take(s: *mut std::ffi::c_char) -> String {
    assert!(!s.is_null());
    let out = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_string();
    unsafe { acso_string_free(s) };
    out
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(acso_last_error_message()) }
        .to_str()
        .unwrap()
        .to_string()
}

fn check(text: &str, bound: i64) -> (i32, String) {
    let json = CString::new(text).unwrap();
    let mut space = ptr::null_mut();
    assert_eq!(
        unsafe { acso_space_from_json(json.as_ptr(), &mut space) },
        AcsoStatus::Ok
    );
    let mut report = ptr::null_mut();
    assert_eq!(
        unsafe { acso_check(space, bound, &mut report) },
        AcsoStatus::Ok
    );
    let code = unsafe { acso_report_exit_code(report) };
    let mut s = ptr::null_mut();
    assert_eq!(
        unsafe { acso_report_to_json(report, &mut s) },
        AcsoStatus::Ok
    );
    let json = take(s);
    unsafe {
        acso_report_free(report);
        acso_space_free(space);
    }
    (code, json)
}

#[test]
fn check_round_trip() {
    let (code, json) = check(CP2, -1);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["conclusion"], "Admits");
    assert_eq!(v["bound"], 21);
    assert_eq!(v["vanishing_candidates"].as_array().unwrap().len(), 2);
    let (code, _) = check(S4, 3);
    assert_eq!(code, 2);
}

#[test]
fn load_from_path_and_text_report() {
    let path = CString::new(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/../core/corpus/s6.json"
    ))
    .unwrap();
    let mut space = ptr::null_mut();
    assert_eq!(
        unsafe { acso_space_load(path.as_ptr(), &mut space) },
        AcsoStatus::Ok
    );
    let mut report = ptr::null_mut();
    assert_eq!(
        unsafe { acso_check(space, -1, &mut report) },
        AcsoStatus::Ok
    );
    let mut s = ptr::null_mut();
    assert_eq!(
        unsafe { acso_report_to_text(report, &mut s) },
        AcsoStatus::Ok
    );
    assert!(take(s).ends_with("conclusion: admits\n"));
    unsafe {
        acso_report_free(report);
        acso_space_free(space);
    }
}

#[test]
fn errors_set_status_and_message() {
    let mut space = ptr::null_mut();
    let bad = CString::new("{ not json").unwrap();
    assert_eq!(
        unsafe { acso_space_from_json(bad.as_ptr(), &mut space) },
        AcsoStatus::Parse
    );
    assert!(space.is_null());
    assert!(!last_error().is_empty());

    let missing = CString::new("/nonexistent/space.json").unwrap();
    assert_eq!(
        unsafe { acso_space_load(missing.as_ptr(), &mut space) },
        AcsoStatus::Io
    );

    let broken = CString::new(CP2.replace(
        "\"p1\": { \"alpha^2\": \"3\" }",
        "\"p1\": { \"alpha^2\": \"2\" }",
    ))
    .unwrap();
    let status = unsafe { acso_space_from_json(broken.as_ptr(), &mut space) };
    assert_eq!(status, AcsoStatus::InvalidBundle, "{}", last_error());

    assert_eq!(
        unsafe { acso_space_from_json(ptr::null(), &mut space) },
        AcsoStatus::NullPointer
    );
    assert_eq!(
        unsafe { acso_check(ptr::null(), 1, ptr::null_mut()) },
        AcsoStatus::NullPointer
    );
    let mut report = ptr::null_mut();
    assert_eq!(
        unsafe { acso_check(ptr::null(), 1, &mut report) },
        AcsoStatus::NullPointer
    );
    assert_eq!(unsafe { acso_report_exit_code(ptr::null()) }, -1);

    let mut s = ptr::null_mut();
    assert_eq!(
        unsafe { acso_homotopy_group(3, 9, &mut s) },
        AcsoStatus::OutOfRange
    );
    assert!(s.is_null());
    assert_eq!(
        unsafe { acso_obstruction_denominator(1, &mut s) },
        AcsoStatus::Ok
    );
    assert_eq!(take(s), "1");
    assert!(last_error().is_empty());
}

#[test]
fn tables() {
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { acso_homotopy_group(5, 9, &mut s) }, AcsoStatus::Ok);
    assert_eq!(take(s), "Z/24");
    assert_eq!(
        unsafe { acso_obstruction_denominator(3, &mut s) },
        AcsoStatus::Ok
    );
    assert_eq!(take(s), "360");
    unsafe {
        acso_string_free(ptr::null_mut());
        acso_space_free(ptr::null_mut());
        acso_report_free(ptr::null_mut());
    }
}
