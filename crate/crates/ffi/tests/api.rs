use std::ffi::{c_char, CStr, CString};
use std::ptr;

use stripconcave_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

unsafe fn take(s: *mut c_char) -> String {
    let out = CStr::from_ptr(s).to_str().unwrap().to_owned();
    sc_string_free(s);
    out
}

unsafe fn last_error() -> String {
    CStr::from_ptr(sc_last_error()).to_str().unwrap().to_owned()
}

const TRAPEZOID: &str = r#"{"lambda":[6,4,3,1,1],"lambda_bar":[5,2],"mu":[1,-7,-2],"nu":[4,-5,1]}"#;

#[test]
fn build_and_round_trip() {
    unsafe {
        let mut spec = ptr::null_mut();
        assert_eq!(sc_spec_from_json(c(TRAPEZOID).as_ptr(), ptr::null(), &mut spec), ScStatus::Ok);
        let mut feasible = -1;
        assert_eq!(sc_check(spec, &mut feasible, ptr::null_mut()), ScStatus::Ok);
        assert_eq!(feasible, 1);
        let mut x = ptr::null_mut();
        assert_eq!(sc_build(spec, &mut x), ScStatus::Ok);
        let mut boundary = ptr::null_mut();
        assert_eq!(sc_array_boundary(x, &mut boundary), ScStatus::Ok);
        assert_eq!(take(boundary), TRAPEZOID);

        let mut g = ptr::null_mut();
        assert_eq!(sc_array_to_flow(x, &mut g), ScStatus::Ok);
        let mut y = ptr::null_mut();
        assert_eq!(sc_flow_to_array(g, &mut y), ScStatus::Ok);
        let mut g2 = ptr::null_mut();
        assert_eq!(sc_array_to_flow(y, &mut g2), ScStatus::Ok);
        let (mut a, mut b) = (ptr::null_mut(), ptr::null_mut());
        assert_eq!(sc_flow_to_json(g, &mut a), ScStatus::Ok);
        assert_eq!(sc_flow_to_json(g2, &mut b), ScStatus::Ok);
        assert_eq!(take(a), take(b));

        let mut json = ptr::null_mut();
        assert_eq!(sc_array_to_json(y, &mut json), ScStatus::Ok);
        let mut z = ptr::null_mut();
        assert_eq!(sc_array_from_json(json, &mut z), ScStatus::Ok);
        sc_string_free(json);
        let mut valid = 0;
        assert_eq!(sc_array_is_valid(z, &mut valid), ScStatus::Ok);
        assert_eq!(valid, 1);

        for h in [x, y, z] {
            sc_array_free(h);
        }
        sc_flow_free(g);
        sc_flow_free(g2);
        sc_spec_free(spec);
    }
}

#[test]
fn infeasible_specs_report_certificates() {
    unsafe {
        let bad = c(r#"{"lambda":[6,4,3,1,1],"lambda_bar":[5,2],"mu":[0,0,0],"nu":[8,0,0]}"#);
        let mut spec = ptr::null_mut();
        assert_eq!(sc_spec_from_json(bad.as_ptr(), ptr::null(), &mut spec), ScStatus::Ok);
        let mut feasible = -1;
        let mut cert = ptr::null_mut();
        assert_eq!(sc_check(spec, &mut feasible, &mut cert), ScStatus::Ok);
        assert_eq!(feasible, 0);
        assert!(take(cert).contains("\"feasible\":false"));
        let mut x = ptr::null_mut();
        assert_eq!(sc_build(spec, &mut x), ScStatus::Infeasible);
        assert!(x.is_null());
        assert!(!last_error().is_empty());
        sc_spec_free(spec);
    }
}

#[test]
fn explicit_configuration() {
    unsafe {
        let spec = c(r#"{"lambda":[3,0],"lambda_bar":[2,1],"mu":[2,-2,5],"nu":[1,0,4]}"#);
        let config = c(r#"{"n":3,"a":[0,0,0,1],"b":[2,3,3,3]}"#);
        let mut h = ptr::null_mut();
        let odd = c(r#"{"lambda":[3],"lambda_bar":[2,1],"mu":[2,-2,5],"nu":[1,0,4]}"#);
        assert_eq!(sc_spec_from_json(odd.as_ptr(), ptr::null(), &mut h), ScStatus::Precondition);
        assert_eq!(sc_spec_from_json(odd.as_ptr(), config.as_ptr(), &mut h), ScStatus::Length);
        assert_eq!(sc_spec_from_json(spec.as_ptr(), config.as_ptr(), &mut h), ScStatus::Ok);
        let mut x = ptr::null_mut();
        assert_eq!(sc_build(h, &mut x), ScStatus::Ok);
        let mut out = ptr::null_mut();
        assert_eq!(sc_kostka(h, &mut out), ScStatus::Precondition);
        sc_array_free(x);
        sc_spec_free(h);
    }
}

#[test]
fn counting() {
    unsafe {
        let mut h = ptr::null_mut();
        let spec = c(r#"{"lambda":[2,1,0],"lambda_bar":[],"mu":[1,1,1],"nu":[2,2,2]}"#);
        assert_eq!(sc_spec_from_json(spec.as_ptr(), ptr::null(), &mut h), ScStatus::Ok);
        let mut out = ptr::null_mut();
        assert_eq!(sc_kostka(h, &mut out), ScStatus::Ok);
        assert_eq!(take(out), "2");
        sc_spec_free(h);
        let mut n = 0;
        assert_eq!(sc_facet_count(3, 2, &mut n), ScStatus::Ok);
        assert_eq!(n, 6 * 4 + 3 + 8 - 2);
        assert_eq!(sc_facet_count(0, 2, &mut n), ScStatus::Config);
    }
}

#[test]
fn bad_input_is_reported() {
    unsafe {
        let mut h = ptr::null_mut();
        assert_eq!(sc_spec_from_json(ptr::null(), ptr::null(), &mut h), ScStatus::NullPointer);
        assert_eq!(sc_spec_from_json(c("[1,").as_ptr(), ptr::null(), &mut h), ScStatus::Parse);
        let bytes = [0xffu8, 0];
        assert_eq!(sc_spec_from_json(bytes.as_ptr().cast(), ptr::null(), &mut h), ScStatus::InvalidUtf8);
        assert_eq!(sc_spec_from_json(c(TRAPEZOID).as_ptr(), ptr::null(), ptr::null_mut()), ScStatus::NullPointer);
        let mut feasible = 0;
        assert_eq!(sc_check(ptr::null(), &mut feasible, ptr::null_mut()), ScStatus::NullPointer);
        let flow = c(r#"{"n":1,"m":0,"e0":[[1]],"e1":[[0]]}"#);
        let mut g = ptr::null_mut();
        assert_eq!(sc_flow_from_json(flow.as_ptr(), &mut g), ScStatus::Ok);
        let mut x = ptr::null_mut();
        assert_eq!(sc_flow_to_array(g, &mut x), ScStatus::Inadmissible);
        sc_flow_free(g);
        let name = CStr::from_ptr(sc_status_name(ScStatus::Panic)).to_str().unwrap();
        assert_eq!(name, "panic");
        sc_spec_free(ptr::null_mut());
        sc_array_free(ptr::null_mut());
        sc_flow_free(ptr::null_mut());
        sc_string_free(ptr::null_mut());
    }
}
