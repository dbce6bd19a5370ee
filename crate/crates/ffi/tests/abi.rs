use std::ffi::{c_char, CStr, CString};
use std::path::Path;
use std::process::Command;
use std::ptr;

use g2d5_ffi::*;

fn cs(s: &str) -> CString {
    CString::new(s).unwrap()
}

unsafe fn take(s: *mut c_char) -> String {
    assert!(!s.is_null());
    let out = CStr::from_ptr(s).to_str().unwrap().to_owned();
    g2d5_string_free(s);
    out
}

unsafe fn last_error() -> String {
    CStr::from_ptr(g2d5_last_error()).to_str().unwrap().to_owned()
}

#[test]
fn cover_lifecycle() {
    unsafe {
        let mut cover = ptr::null_mut();
        assert_eq!(g2d5_cover_new(cs("1/1").as_ptr(), cs("2").as_ptr(), &mut cover), G2d5Status::Ok);
        let mut case = G2d5Case::I;
        assert_eq!(g2d5_cover_case(cover, &mut case), G2d5Status::Ok);
        assert_eq!(case, G2d5Case::NonDegenerate);
        let mut s = ptr::null_mut();
        assert_eq!(g2d5_cover_json(cover, &mut s), G2d5Status::Ok);
        let v: serde_json::Value = serde_json::from_str(&take(s)).unwrap();
        assert_eq!(v["case"], "NonDegenerate");
        assert_eq!(v["a"], "1");

        let mut curve = ptr::null_mut();
        assert_eq!(g2d5_curve_from_cover(cover, 0, &mut curve), G2d5Status::Ok);
        let mut s = ptr::null_mut();
        assert_eq!(g2d5_curve_invariants(curve, &mut s), G2d5Status::Ok);
        let v: serde_json::Value = serde_json::from_str(&take(s)).unwrap();
        for k in ["J2", "J4", "J6", "J10", "i1", "i2", "i3"] {
            assert!(v.get(k).is_some(), "{k} missing in {v}");
        }
        g2d5_curve_free(curve);
        assert_eq!(g2d5_curve_from_cover(cover, 2, &mut curve), G2d5Status::InvalidInput);
        assert!(curve.is_null());
        g2d5_cover_free(cover);
    }
}

#[test]
fn domain_errors_carry_codes_and_messages() {
    unsafe {
        let mut cover = ptr::null_mut();
        let st = g2d5_cover_new(cs("0").as_ptr(), cs("1").as_ptr(), &mut cover);
        assert_eq!(st, G2d5Status::ExcludedParameter);
        assert!(cover.is_null());
        assert!(last_error().starts_with("excluded-parameter"));
        let name = CStr::from_ptr(g2d5_status_name(st)).to_str().unwrap();
        assert_eq!(name, "excluded-parameter");

        let st = g2d5_cover_new(cs("1/0").as_ptr(), cs("1").as_ptr(), &mut cover);
        assert_eq!(st, G2d5Status::ParseError);
        assert_eq!(g2d5_cover_new(ptr::null(), cs("1").as_ptr(), &mut cover), G2d5Status::NullPointer);
        assert_eq!(g2d5_cover_new(cs("1").as_ptr(), cs("1").as_ptr(), ptr::null_mut()), G2d5Status::NullPointer);
        let bad = [0xffu8, 0];
        assert_eq!(
            g2d5_cover_new(bad.as_ptr() as *const c_char, cs("1").as_ptr(), &mut cover),
            G2d5Status::InvalidUtf8
        );
        // success clears the message
        assert_eq!(g2d5_cover_new(cs("1").as_ptr(), cs("2").as_ptr(), &mut cover), G2d5Status::Ok);
        assert_eq!(last_error(), "");
        g2d5_cover_free(cover);
        g2d5_cover_free(ptr::null_mut());
        g2d5_string_free(ptr::null_mut());
    }
}

#[test]
fn curve_from_coefficients() {
    unsafe {
        // y² = x⁵ − 1
        let owned: Vec<CString> = ["-1", "0", "0", "0", "0", "1"].iter().map(|s| cs(s)).collect();
        let ptrs: Vec<*const c_char> = owned.iter().map(|c| c.as_ptr()).collect();
        let mut curve = ptr::null_mut();
        assert_eq!(g2d5_curve_from_coeffs(ptrs.as_ptr(), ptrs.len(), &mut curve), G2d5Status::Ok);
        let mut s = ptr::null_mut();
        assert_eq!(g2d5_curve_json(curve, &mut s), G2d5Status::Ok);
        let v: serde_json::Value = serde_json::from_str(&take(s)).unwrap();
        assert_eq!(v["degree"], 5);
        // J2 = 0 for x⁵ − 1: absolute invariants are omitted
        assert_eq!(g2d5_curve_invariants(curve, &mut s), G2d5Status::Ok);
        let v: serde_json::Value = serde_json::from_str(&take(s)).unwrap();
        assert!(v.get("i1").is_none());
        let mut order = 0usize;
        assert_eq!(g2d5_curve_reduced_aut_order(curve, 128, 1e-20, &mut order), G2d5Status::Ok);
        assert_eq!(order, 5);
        g2d5_curve_free(curve);

        // a square factor
        let owned: Vec<CString> = ["0", "0", "1", "0", "0", "1"].iter().map(|s| cs(s)).collect();
        let ptrs: Vec<*const c_char> = owned.iter().map(|c| c.as_ptr()).collect();
        assert_eq!(g2d5_curve_from_coeffs(ptrs.as_ptr(), ptrs.len(), &mut curve), G2d5Status::SingularModel);
    }
}

#[test]
fn locus_round_trip() {
    unsafe {
        let mut s = ptr::null_mut();
        assert_eq!(g2d5_locus_formulas(G2d5Case::Ii, cs("9").as_ptr(), &mut s), G2d5Status::Ok);
        let v: serde_json::Value = serde_json::from_str(&take(s)).unwrap();
        let i = |k: &str| cs(v[k].as_str().unwrap());
        let (i1, i2, i3) = (i("i1"), i("i2"), i("i3"));
        assert_eq!(
            g2d5_recover_parameter(G2d5Case::Ii, i1.as_ptr(), i2.as_ptr(), i3.as_ptr(), &mut s),
            G2d5Status::Ok
        );
        assert_eq!(take(s), "9");
        assert_eq!(
            g2d5_recover_parameter(G2d5Case::Ii, i1.as_ptr(), i1.as_ptr(), i3.as_ptr(), &mut s),
            G2d5Status::NotOnLocus
        );
        assert!(s.is_null());
        assert_eq!(g2d5_locus_formulas(G2d5Case::Iii, cs("9").as_ptr(), &mut s), G2d5Status::InvalidInput);
    }
}

#[test]
fn nielsen() {
    unsafe {
        let mut n = 0u64;
        assert_eq!(g2d5_nielsen_count(cs("S5").as_ptr(), cs("2^2,2^2,4,2").as_ptr(), &mut n), G2d5Status::Ok);
        assert_eq!(n, 8);
        assert_eq!(g2d5_nielsen_count(cs("S7").as_ptr(), cs("2,2").as_ptr(), &mut n), G2d5Status::InvalidInput);
    }
}

#[test]
fn header_compiles_as_c() {
    let header = Path::new(env!("CARGO_MANIFEST_DIR")).join("include/g2d5.h");
    let text = std::fs::read_to_string(&header).unwrap();
    for f in ["g2d5_cover_new", "g2d5_curve_invariants", "g2d5_nielsen_count", "G2D5_STATUS_PANIC"] {
        assert!(text.contains(f), "{f} missing from header");
    }
    let Ok(out) = Command::new("cc")
        .args(["-fsyntax-only", "-Wall", "-Werror", "-x", "c"])
        .arg(&header)
        .output()
    else {
        eprintln!("no C compiler; syntax check skipped");
        return;
    };
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
}
