//! C interface to `stripconcave`.
//!
//! Data crosses the boundary as JSON strings in the same format as the command
//! line tool. Parsed objects live behind opaque handles that the caller releases
//! with the matching `sc_*_free`. Strings returned through `char **` belong to the
//! caller and are released with `sc_string_free`. Every function returns an
//! [`ScStatus`]; on failure `sc_last_error` describes the most recent error on the
//! calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use stripconcave::config::ConvexConfig;
use stripconcave::flow::{gamma, gamma_inv, zigzag_swap_flow};
use stripconcave::json as js;
use stripconcave::polytope::{facets, kostka};
use stripconcave::{check_general, mu_general_build, shift_mu, validate_array, BoundarySpec, Error, Flow, StripConcaveArray};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    Config = 4,
    Length = 5,
    Precondition = 6,
    NonInteger = 7,
    Infeasible = 8,
    Inadmissible = 9,
    Internal = 10,
    Panic = 11,
}

/// Boundary data together with the configuration it lives on.
pub struct ScSpec {
    spec: BoundarySpec,
    config: ConvexConfig,
}

pub struct ScArray(StripConcaveArray);

pub struct ScFlow(Flow);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> ScStatus {
    match e {
        Error::Config(_) => ScStatus::Config,
        Error::Precondition(_) => ScStatus::Precondition,
        Error::Length { .. } => ScStatus::Length,
        Error::NonInteger(_) => ScStatus::NonInteger,
        Error::Infeasible(_) => ScStatus::Infeasible,
        Error::Inadmissible { .. } => ScStatus::Inadmissible,
        Error::Parse(_) => ScStatus::Parse,
        Error::Internal(_) => ScStatus::Internal,
    }
}

struct Fail(ScStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

type Outcome = Result<(), Fail>;

fn guard(f: impl FnOnce() -> Outcome) -> ScStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            ScStatus::Ok
        }
        Ok(Err(Fail(status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("panic inside stripconcave");
            ScStatus::Panic
        }
    }
}

fn null(what: &str) -> Fail {
    Fail(ScStatus::NullPointer, format!("{what} is null"))
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p).to_str().map_err(|_| Fail(ScStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn parse(p: *const c_char, what: &str) -> Result<serde_json::Value, Fail> {
    serde_json::from_str(text(p, what)?).map_err(|e| Fail(ScStatus::Parse, format!("{what}: {e}")))
}

unsafe fn handle<'a, T>(p: *const T, what: &str) -> Result<&'a T, Fail> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn put<T>(out: *mut T, value: T, what: &str) -> Outcome {
    if out.is_null() {
        return Err(null(what));
    }
    out.write(value);
    Ok(())
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Outcome {
    let c = CString::new(s).map_err(|_| Fail(ScStatus::Internal, "output contains a NUL byte".into()))?;
    put(out, c.into_raw(), "output pointer")
}

unsafe fn put_boxed<T>(out: *mut *mut T, value: T) -> Outcome {
    put(out, Box::into_raw(Box::new(value)), "output pointer")
}

unsafe fn free<T>(p: *mut T) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Message for the most recent failure on this thread; empty after a success.
/// The pointer stays valid until the next call into the library on this thread.
#[no_mangle]
pub extern "C" fn sc_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Static name of a status code.
#[no_mangle]
pub extern "C" fn sc_status_name(status: ScStatus) -> *const c_char {
    let s: &'static CStr = match status {
        ScStatus::Ok => c"ok",
        ScStatus::NullPointer => c"null pointer",
        ScStatus::InvalidUtf8 => c"invalid UTF-8",
        ScStatus::Parse => c"parse error",
        ScStatus::Config => c"malformed configuration",
        ScStatus::Length => c"length mismatch",
        ScStatus::Precondition => c"precondition violated",
        ScStatus::NonInteger => c"non-integer data",
        ScStatus::Infeasible => c"infeasible",
        ScStatus::Inadmissible => c"inadmissible flow",
        ScStatus::Internal => c"internal error",
        ScStatus::Panic => c"panic",
    };
    s.as_ptr()
}

/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn sc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses boundary data. `config_json` may be null, in which case a `config` key in
/// `spec_json` is used, or else the configuration is inferred from the tuple lengths.
///
/// # Safety
/// `spec_json` and a non-null `config_json` must be NUL-terminated strings; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sc_spec_from_json(
    spec_json: *const c_char,
    config_json: *const c_char,
    out: *mut *mut ScSpec,
) -> ScStatus {
    guard(|| {
        let v = parse(spec_json, "spec")?;
        let spec = js::spec_from_json(&v)?;
        let config = if !config_json.is_null() {
            js::config_from_json(&parse(config_json, "config")?)?
        } else if let Some(c) = v.get("config") {
            js::config_from_json(c)?
        } else {
            spec.infer_config()?
        };
        config.check()?;
        spec.check_dims(&config)?;
        put_boxed(out, ScSpec { spec, config })
    })
}

/// # Safety
/// `spec` must be null or a live handle from `sc_spec_from_json`.
#[no_mangle]
pub unsafe extern "C" fn sc_spec_free(spec: *mut ScSpec) {
    free(spec)
}

/// Writes 1 to `feasible` if some array has this boundary, else 0. When `certificate`
/// is non-null it receives the JSON verdict, including the failing inequality.
///
/// # Safety
/// `spec` must be a live handle; `feasible` must be writable; `certificate` may be null.
#[no_mangle]
pub unsafe extern "C" fn sc_check(spec: *const ScSpec, feasible: *mut i32, certificate: *mut *mut c_char) -> ScStatus {
    guard(|| {
        let s = handle(spec, "spec")?;
        let verdict = check_general(&s.config, &s.spec)?;
        put(feasible, i32::from(verdict.feasible), "feasible")?;
        if !certificate.is_null() {
            put_string(certificate, js::to_string(&js::verdict_to_json(&verdict)))?;
        }
        Ok(())
    })
}

/// Builds an array with the given boundary; `SC_STATUS_INFEASIBLE` when none exists.
///
/// # Safety
/// `spec` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sc_build(spec: *const ScSpec, out: *mut *mut ScArray) -> ScStatus {
    guard(|| {
        let s = handle(spec, "spec")?;
        put_boxed(out, ScArray(mu_general_build(&s.config, &s.spec)?))
    })
}

/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sc_array_from_json(json: *const c_char, out: *mut *mut ScArray) -> ScStatus {
    guard(|| put_boxed(out, ScArray(js::array_from_json(&parse(json, "array")?)?)))
}

/// # Safety
/// `array` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sc_array_to_json(array: *const ScArray, out: *mut *mut c_char) -> ScStatus {
    guard(|| put_string(out, js::to_string(&js::array_to_json(&handle(array, "array")?.0))))
}

/// Writes the boundary data of `array` as JSON.
///
/// # Safety
/// `array` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sc_array_boundary(array: *const ScArray, out: *mut *mut c_char) -> ScStatus {
    guard(|| put_string(out, js::to_string(&js::spec_to_json(&handle(array, "array")?.0.boundary()))))
}

/// Writes 1 to `valid` if every rhombus inequality holds and the corner entry is 0.
///
/// # Safety
/// `array` must be a live handle; `valid` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sc_array_is_valid(array: *const ScArray, valid: *mut i32) -> ScStatus {
    guard(|| put(valid, i32::from(validate_array(&handle(array, "array")?.0)?), "valid"))
}

/// # Safety
/// `array` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn sc_array_free(array: *mut ScArray) {
    free(array)
}

/// Flow of a trapezoid or parallelogram array.
///
/// # Safety
/// `array` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sc_array_to_flow(array: *const ScArray, out: *mut *mut ScFlow) -> ScStatus {
    guard(|| put_boxed(out, ScFlow(gamma(&handle(array, "array")?.0)?)))
}

/// Array with zero left column whose flow is `flow`; `λ` is read off the flow.
///
/// # Safety
/// `flow` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sc_flow_to_array(flow: *const ScFlow, out: *mut *mut ScArray) -> ScStatus {
    guard(|| {
        let g = &handle(flow, "flow")?.0;
        put_boxed(out, ScArray(gamma_inv(g, &g.lambda())?))
    })
}

/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sc_flow_from_json(json: *const c_char, out: *mut *mut ScFlow) -> ScStatus {
    guard(|| put_boxed(out, ScFlow(js::flow_from_json(&parse(json, "flow")?)?)))
}

/// # Safety
/// `flow` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sc_flow_to_json(flow: *const ScFlow, out: *mut *mut c_char) -> ScStatus {
    guard(|| put_string(out, js::to_string(&js::flow_to_json(&handle(flow, "flow")?.0))))
}

/// Zigzag swap at `layer`, which exchanges `ν_layer` and `ν_{layer+1}`.
///
/// # Safety
/// `flow` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sc_flow_swap(flow: *const ScFlow, layer: usize, out: *mut *mut ScFlow) -> ScStatus {
    guard(|| put_boxed(out, ScFlow(zigzag_swap_flow(&handle(flow, "flow")?.0, layer)?)))
}

/// # Safety
/// `flow` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn sc_flow_free(flow: *mut ScFlow) {
    free(flow)
}

/// Number of integer arrays with the given trapezoid boundary, as a decimal string.
///
/// # Safety
/// `spec` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sc_kostka(spec: *const ScSpec, out: *mut *mut c_char) -> ScStatus {
    guard(|| {
        let s = handle(spec, "spec")?;
        if !s.config.is_trapezoid() {
            return Err(Fail(ScStatus::Precondition, "counting needs a trapezoid configuration".into()));
        }
        let flat = shift_mu(&s.spec);
        let count = kostka(&flat.lambda, &flat.lambda_bar, &flat.nu)?;
        put_string(out, count.to_string())
    })
}

/// Number of facets of the boundary cone of the `(n, m)` trapezoid.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sc_facet_count(n: usize, m: usize, out: *mut usize) -> ScStatus {
    guard(|| {
        if n == 0 {
            return Err(Fail(ScStatus::Config, "n must be positive".into()));
        }
        put(out, facets(n, m).len(), "out")
    })
}
