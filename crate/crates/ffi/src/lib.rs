//! C interface to `acso`.
//!
//! Spaces and reports are opaque handles created by the library and released
//! with their `_free` function. Every fallible call returns an [`AcsoStatus`];
//! on failure a message is available from [`acso_last_error_message`] until the
//! next call on the same thread. Strings returned through out-parameters are
//! NUL-terminated UTF-8 and must be released with [`acso_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::Path;
use std::ptr;

use acso::cli::{
    check_loaded, parse_space_file, parse_space_str, CliError, LoadedSpace, ReportDocument,
};
use acso::obstruct::{homotopy_group, obstruction_denominator, ObstructError};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AcsoStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Io = 3,
    Parse = 4,
    InvalidBundle = 5,
    Computation = 6,
    OutOfRange = 7,
    InvalidArgument = 8,
    Panic = 9,
}

/// A parsed and validated space file.
pub struct AcsoSpace {
    inner: LoadedSpace,
}

/// The outcome of [`acso_check`].
pub struct AcsoReport {
    inner: ReportDocument,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &CliError) -> AcsoStatus {
    match e {
        CliError::Io(_) => AcsoStatus::Io,
        CliError::Parse(_) => AcsoStatus::Parse,
        CliError::Field { .. } => AcsoStatus::InvalidBundle,
        CliError::Usage(_) => AcsoStatus::InvalidArgument,
        CliError::InFile { inner, .. } => status_of(inner),
        CliError::Bundle(o) => obstruct_status(o),
    }
}

fn obstruct_status(e: &ObstructError) -> AcsoStatus {
    match e {
        ObstructError::InvalidBundle(_)
        | ObstructError::Validation { .. }
        | ObstructError::InvalidCandidate(_) => AcsoStatus::InvalidBundle,
        ObstructError::OutOfRange(_) => AcsoStatus::OutOfRange,
        _ => AcsoStatus::Computation,
    }
}

/// Runs `f`, recording any error or panic.
fn guard(f: impl FnOnce() -> Result<(), (AcsoStatus, String)>) -> AcsoStatus {
    set_error("");
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => AcsoStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            AcsoStatus::Panic
        }
    }
}

fn cli_err(e: CliError) -> (AcsoStatus, String) {
    (status_of(&e), e.to_string())
}

fn obstruct_err(e: ObstructError) -> (AcsoStatus, String) {
    (obstruct_status(&e), e.to_string())
}

unsafe fn read_str<'a>(s: *const c_char, what: &str) -> Result<&'a str, (AcsoStatus, String)> {
    if s.is_null() {
        return Err((AcsoStatus::NullPointer, format!("{what} is null")));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| (AcsoStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

fn check_out<T>(out: *mut T) -> Result<(), (AcsoStatus, String)> {
    if out.is_null() {
        Err((AcsoStatus::NullPointer, "output pointer is null".into()))
    } else {
        Ok(())
    }
}

unsafe fn write_string(out: *mut *mut c_char, s: String) {
    *out = CString::new(s).unwrap_or_default().into_raw();
}

/// Loads a space file from `path`.
///
/// # Safety
/// `path` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn acso_space_load(
    path: *const c_char,
    out: *mut *mut AcsoSpace,
) -> AcsoStatus {
    guard(|| {
        check_out(out)?;
        *out = ptr::null_mut();
        let path = read_str(path, "path")?;
        let inner = parse_space_file(Path::new(path)).map_err(cli_err)?;
        *out = Box::into_raw(Box::new(AcsoSpace { inner }));
        Ok(())
    })
}

/// Parses a space file held in memory.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn acso_space_from_json(
    json: *const c_char,
    out: *mut *mut AcsoSpace,
) -> AcsoStatus {
    guard(|| {
        check_out(out)?;
        *out = ptr::null_mut();
        let text = read_str(json, "json")?;
        let inner = parse_space_str(text).map_err(cli_err)?;
        *out = Box::into_raw(Box::new(AcsoSpace { inner }));
        Ok(())
    })
}

/// # Safety
/// `space` must come from this library and not be freed twice. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn acso_space_free(space: *mut AcsoSpace) {
    if !space.is_null() {
        drop(Box::from_raw(space));
    }
}

/// Runs every obstruction check. A negative `bound` uses the file's
/// expectation bound, or the default.
///
/// # Safety
/// `space` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn acso_check(
    space: *const AcsoSpace,
    bound: i64,
    out: *mut *mut AcsoReport,
) -> AcsoStatus {
    guard(|| {
        check_out(out)?;
        *out = ptr::null_mut();
        let space = space
            .as_ref()
            .ok_or((AcsoStatus::NullPointer, "space is null".to_string()))?;
        let bound = u64::try_from(bound).ok();
        let inner = check_loaded(&space.inner, bound).map_err(cli_err)?;
        *out = Box::into_raw(Box::new(AcsoReport { inner }));
        Ok(())
    })
}

/// 0 admits or nothing detected, 2 obstructed, 3 inconclusive; -1 for null.
///
/// # Safety
/// `report` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn acso_report_exit_code(report: *const AcsoReport) -> i32 {
    report.as_ref().map_or(-1, |r| r.inner.exit_code)
}

/// The report as JSON, as printed by `acso check --format json`.
///
/// # Safety
/// `report` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn acso_report_to_json(
    report: *const AcsoReport,
    out: *mut *mut c_char,
) -> AcsoStatus {
    guard(|| {
        check_out(out)?;
        *out = ptr::null_mut();
        let report = report
            .as_ref()
            .ok_or((AcsoStatus::NullPointer, "report is null".to_string()))?;
        write_string(out, report.inner.to_json());
        Ok(())
    })
}

/// The human-readable table.
///
/// # Safety
/// `report` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn acso_report_to_text(
    report: *const AcsoReport,
    out: *mut *mut c_char,
) -> AcsoStatus {
    guard(|| {
        check_out(out)?;
        *out = ptr::null_mut();
        let report = report
            .as_ref()
            .ok_or((AcsoStatus::NullPointer, "report is null".to_string()))?;
        write_string(out, report.inner.to_text());
        Ok(())
    })
}

/// # Safety
/// `report` must come from this library and not be freed twice. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn acso_report_free(report: *mut AcsoReport) {
    if !report.is_null() {
        drop(Box::from_raw(report));
    }
}

/// # Safety
/// `s` must be a string returned by this library, or null.
#[no_mangle]
pub unsafe extern "C" fn acso_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// pi_q(SO(2n)/U(n)) written like `Z + Z/2`, for 1 <= q <= 2n - 1.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn acso_homotopy_group(n: u64, q: u64, out: *mut *mut c_char) -> AcsoStatus {
    guard(|| {
        check_out(out)?;
        *out = ptr::null_mut();
        let g = homotopy_group(n, q).map_err(obstruct_err)?;
        write_string(out, g.to_string());
        Ok(())
    })
}

/// The denominator in W_{4k+3} = l * o, in decimal.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn acso_obstruction_denominator(k: u64, out: *mut *mut c_char) -> AcsoStatus {
    guard(|| {
        check_out(out)?;
        *out = ptr::null_mut();
        let ell = obstruction_denominator(k).map_err(obstruct_err)?;
        write_string(out, ell.to_string());
        Ok(())
    })
}

/// Message for the last failed call on this thread; empty after a success.
/// The pointer stays valid until the next call into the library.
#[no_mangle]
pub extern "C" fn acso_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}
