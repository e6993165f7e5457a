use std::ffi::{c_char, CStr, CString};
use std::ptr;

use seifert_ffi::*;

fn parse(text: &str) -> *mut SeifertLink {
    let c = CString::new(text).unwrap();
    let mut out = ptr::null_mut();
    let status = unsafe { seifert_link_parse(c.as_ptr(), &mut out) };
    assert_eq!(status, SeifertStatus::Ok, "{text}");
    out
}

fn take(s: *mut c_char) -> String {
    let out = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_string();
    unsafe { seifert_string_free(s) };
    out
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(seifert_last_error()) }.to_str().unwrap().to_string()
}

#[test]
fn parse_and_query() {
    let l = parse("T(3,4)");
    unsafe {
        let mut s = ptr::null_mut();
        assert_eq!(seifert_link_to_string(l, &mut s), SeifertStatus::Ok);
        assert_eq!(take(s), "L(3,4;1,1)");

        let mut genus = 0;
        assert_eq!(seifert_link_genus(l, &mut genus), SeifertStatus::Ok);
        assert_eq!(genus, 3);

        let mut components = 0;
        assert_eq!(seifert_link_components(l, &mut components), SeifertStatus::Ok);
        assert_eq!(components, 1);

        let mut det = ptr::null_mut();
        assert_eq!(seifert_link_determinant(l, &mut det), SeifertStatus::Ok);
        assert_eq!(take(det), "3");

        let (mut num, mut den) = (0, 0);
        assert_eq!(seifert_b_bar_chi(l, 2, &mut num, &mut den), SeifertStatus::Ok);
        assert_eq!((num, den), (1, 12));

        let mut finite = false;
        assert_eq!(seifert_pi1_finite(l, 2, &mut finite), SeifertStatus::Ok);
        assert!(finite);

        let mut star = true;
        assert_eq!(seifert_canonical_star(l, 2, &mut star), SeifertStatus::Ok);
        assert!(!star);
        assert_eq!(seifert_canonical_star(l, 3, &mut star), SeifertStatus::Ok);
        assert!(star);

        seifert_link_free(l);
    }
}

#[test]
fn json_reports() {
    let l = parse("L(2,5;1,1;-)");
    unsafe {
        let mut s = ptr::null_mut();
        assert_eq!(seifert_classify_json(l, &mut s), SeifertStatus::Ok);
        assert!(take(s).contains("\"normalized\":\"L(2,5;1,1;-)\""));

        let weights = [1i64, 4];
        assert_eq!(seifert_cover_json(l, 5, weights.as_ptr(), 2, &mut s), SeifertStatus::Ok);
        assert!(take(s).contains("\"sigma\":{\"den\":50,\"num\":43}"));

        assert_eq!(seifert_cover_json(l, 5, ptr::null(), 0, &mut s), SeifertStatus::Ok);
        assert!(take(s).contains("\"canonical\":true"));

        let name = CString::new("euclidean").unwrap();
        assert_eq!(seifert_table_json(name.as_ptr(), &mut s), SeifertStatus::Ok);
        assert!(take(s).contains("S^2(2,3,6)"));

        seifert_link_free(l);
    }
}

#[test]
fn error_codes() {
    unsafe {
        let mut out = ptr::null_mut();
        let bad = CString::new("L(2,3;1)").unwrap();
        assert_eq!(seifert_link_parse(bad.as_ptr(), &mut out), SeifertStatus::Syntax);
        assert!(last_error().contains("byte 7"));
        assert!(out.is_null());

        let not_coprime = CString::new("L(2,4;1,1)").unwrap();
        assert_eq!(seifert_link_parse(not_coprime.as_ptr(), &mut out), SeifertStatus::InvalidLink);

        assert_eq!(seifert_link_parse(ptr::null(), &mut out), SeifertStatus::NullPointer);

        let invalid_utf8 = [0xffu8 as c_char, 0];
        assert_eq!(seifert_link_parse(invalid_utf8.as_ptr(), &mut out), SeifertStatus::InvalidUtf8);

        let composite = parse("#2 H+");
        let mut star = false;
        assert_eq!(seifert_canonical_star(composite, 3, &mut star), SeifertStatus::NotPrime);
        assert_eq!(seifert_link_genus(ptr::null(), &mut 0), SeifertStatus::NullPointer);
        seifert_link_free(composite);

        let l = parse("T(2,3)");
        assert_eq!(seifert_canonical_star(l, 1, &mut star), SeifertStatus::InvalidArgument);
        let weights = [1i64, 2];
        let mut s = ptr::null_mut();
        assert_eq!(seifert_cover_json(l, 3, weights.as_ptr(), 2, &mut s), SeifertStatus::InvalidArgument);
        assert!(s.is_null());
        seifert_link_free(l);

        let name = CString::new("nope").unwrap();
        assert_eq!(seifert_table_json(name.as_ptr(), &mut s), SeifertStatus::UnknownTable);

        let l = parse("T(2,3)");
        assert_eq!(seifert_link_genus(l, &mut 0), SeifertStatus::Ok);
        assert_eq!(last_error(), "");
        seifert_link_free(l);
        seifert_link_free(ptr::null_mut());
        seifert_string_free(ptr::null_mut());
    }
}

#[test]
fn header_declares_the_interface() {
    let header = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/seifert_ffi.h")).unwrap();
    for name in [
        "SeifertStatus_Ok = 0",
        "typedef struct SeifertLink SeifertLink",
        "seifert_link_parse",
        "seifert_link_free",
        "seifert_string_free",
        "seifert_last_error",
        "seifert_cover_json",
        "seifert_table_json",
    ] {
        assert!(header.contains(name), "{name}");
    }
}
