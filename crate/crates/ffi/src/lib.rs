//! C ABI over `g2d5`.
//!
//! Objects are opaque handles created by `*_new` functions and released by
//! the matching `*_free`. Every fallible call returns a [`G2d5Status`]; the
//! message of the last failure on the calling thread is available from
//! [`g2d5_last_error`]. Rationals cross the boundary as `"p/q"` strings and
//! structured results as JSON strings released with [`g2d5_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use g2d5::cover::{build_cover, f4_roots, CoverData, CoverParams, RamificationCase};
use g2d5::curve::{curve_from_cover, Genus2Curve};
use g2d5::igusa::{igusa_from_curve, reduced_aut_group_numeric};
use g2d5::loci::{nielsen_count, recover_parameter, y1_formulas, y2_formulas, CycleType, Group};
use g2d5::{Error, Rational};

/// Return codes. Values 1 to 14 mirror the library's domain errors.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum G2d5Status {
    Ok = 0,
    InvalidInput = 1,
    ExcludedParameter = 2,
    DegenerateQuadratic = 3,
    InvalidRoot = 4,
    ConstructionFailure = 5,
    SingularModel = 6,
    DegenerateSubcover = 7,
    J2Zero = 8,
    Precision = 9,
    NotOnLocus = 10,
    Ambiguous = 11,
    IdentityViolation = 12,
    ContextMismatch = 13,
    ParseError = 14,
    NullPointer = 100,
    InvalidUtf8 = 101,
    Panic = 102,
}

impl G2d5Status {
    fn of(e: &Error) -> Self {
        use G2d5Status::*;
        const TABLE: [G2d5Status; 14] = [
            InvalidInput,
            ExcludedParameter,
            DegenerateQuadratic,
            InvalidRoot,
            ConstructionFailure,
            SingularModel,
            DegenerateSubcover,
            J2Zero,
            Precision,
            NotOnLocus,
            Ambiguous,
            IdentityViolation,
            ContextMismatch,
            ParseError,
        ];
        TABLE[(e.code() - 1) as usize]
    }
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum G2d5Case {
    NonDegenerate = 0,
    I = 1,
    Ii = 2,
    Iii = 3,
}

impl From<RamificationCase> for G2d5Case {
    fn from(c: RamificationCase) -> Self {
        match c {
            RamificationCase::NonDegenerate => G2d5Case::NonDegenerate,
            RamificationCase::I => G2d5Case::I,
            RamificationCase::II => G2d5Case::Ii,
            RamificationCase::III => G2d5Case::Iii,
        }
    }
}

impl From<G2d5Case> for RamificationCase {
    fn from(c: G2d5Case) -> Self {
        match c {
            G2d5Case::NonDegenerate => RamificationCase::NonDegenerate,
            G2d5Case::I => RamificationCase::I,
            G2d5Case::Ii => RamificationCase::II,
            G2d5Case::Iii => RamificationCase::III,
        }
    }
}

/// A degree-5 cover built from admissible `(a, b)`.
pub struct G2d5Cover(CoverData);

/// A genus-2 curve `y² = f(x)`.
pub struct G2d5Curve(Genus2Curve);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

struct Fail(G2d5Status, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(G2d5Status::of(&e), format!("{}: {e}", e.name()))
    }
}

type FfiResult<T> = Result<T, Fail>;

fn guard(f: impl FnOnce() -> FfiResult<()>) -> G2d5Status {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error(String::new());
            G2d5Status::Ok
        }
        Ok(Err(Fail(code, msg))) => {
            set_error(msg);
            code
        }
        Err(_) => {
            set_error("panic inside g2d5".into());
            G2d5Status::Panic
        }
    }
}

unsafe fn text<'a>(p: *const c_char) -> FfiResult<&'a str> {
    if p.is_null() {
        return Err(Fail(G2d5Status::NullPointer, "null string argument".into()));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Fail(G2d5Status::InvalidUtf8, "argument is not UTF-8".into()))
}

unsafe fn rational(p: *const c_char) -> FfiResult<Rational> {
    Ok(text(p)?.parse::<Rational>()?)
}

unsafe fn out_ref<'a, T>(p: *mut T) -> FfiResult<&'a mut T> {
    p.as_mut()
        .ok_or_else(|| Fail(G2d5Status::NullPointer, "null output pointer".into()))
}

unsafe fn handle<'a, T>(p: *const T) -> FfiResult<&'a T> {
    p.as_ref()
        .ok_or_else(|| Fail(G2d5Status::NullPointer, "null handle".into()))
}

fn owned_string(s: String) -> *mut c_char {
    CString::new(s).expect("JSON has no interior nul").into_raw()
}

fn json(v: serde_json::Value) -> FfiResult<*mut c_char> {
    let s = serde_json::to_string(&v).map_err(|e| Fail(G2d5Status::InvalidInput, e.to_string()))?;
    Ok(owned_string(s))
}

/// Message of the last failed call on this thread; empty after a success.
/// The pointer stays valid until the next call into the library.
#[no_mangle]
pub extern "C" fn g2d5_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Stable kebab-case name of a status code. Static storage.
#[no_mangle]
pub extern "C" fn g2d5_status_name(status: G2d5Status) -> *const c_char {
    let s: &'static CStr = match status {
        G2d5Status::Ok => c"ok",
        G2d5Status::InvalidInput => c"invalid-input",
        G2d5Status::ExcludedParameter => c"excluded-parameter",
        G2d5Status::DegenerateQuadratic => c"degenerate-quadratic",
        G2d5Status::InvalidRoot => c"invalid-root",
        G2d5Status::ConstructionFailure => c"construction-failure",
        G2d5Status::SingularModel => c"singular-model",
        G2d5Status::DegenerateSubcover => c"degenerate-subcover",
        G2d5Status::J2Zero => c"j2-zero",
        G2d5Status::Precision => c"precision",
        G2d5Status::NotOnLocus => c"not-on-locus",
        G2d5Status::Ambiguous => c"ambiguous",
        G2d5Status::IdentityViolation => c"identity-violation",
        G2d5Status::ContextMismatch => c"context-mismatch",
        G2d5Status::ParseError => c"parse-error",
        G2d5Status::NullPointer => c"null-pointer",
        G2d5Status::InvalidUtf8 => c"invalid-utf8",
        G2d5Status::Panic => c"panic",
    };
    s.as_ptr()
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn g2d5_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Builds the cover at `(a, b)`.
///
/// # Safety
/// `a` and `b` must be nul-terminated strings; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn g2d5_cover_new(
    a: *const c_char,
    b: *const c_char,
    out: *mut *mut G2d5Cover,
) -> G2d5Status {
    guard(|| {
        let out = out_ref(out)?;
        *out = ptr::null_mut();
        let params = CoverParams::new(rational(a)?, rational(b)?)?;
        *out = Box::into_raw(Box::new(G2d5Cover(build_cover(&params)?)));
        Ok(())
    })
}

/// # Safety
/// `cover` must come from [`g2d5_cover_new`] and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn g2d5_cover_free(cover: *mut G2d5Cover) {
    if !cover.is_null() {
        drop(Box::from_raw(cover));
    }
}

/// # Safety
/// `cover` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn g2d5_cover_case(cover: *const G2d5Cover, out: *mut G2d5Case) -> G2d5Status {
    guard(|| {
        *out_ref(out)? = handle(cover)?.0.case.into();
        Ok(())
    })
}

/// `{a, b, F1..F4, phi_num, phi_den, case}` as JSON.
///
/// # Safety
/// `cover` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn g2d5_cover_json(cover: *const G2d5Cover, out: *mut *mut c_char) -> G2d5Status {
    guard(|| {
        let out = out_ref(out)?;
        *out = json(handle(cover)?.0.to_json())?;
        Ok(())
    })
}

/// The curve at root `index` (0 or 1) of `F4`.
///
/// # Safety
/// `cover` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn g2d5_curve_from_cover(
    cover: *const G2d5Cover,
    index: u32,
    out: *mut *mut G2d5Curve,
) -> G2d5Status {
    guard(|| {
        let out = out_ref(out)?;
        *out = ptr::null_mut();
        let params = &handle(cover)?.0.params;
        let roots = f4_roots(params)?;
        let root = roots
            .get(index as usize)
            .ok_or_else(|| Fail(G2d5Status::InvalidInput, format!("root index {index} is not 0 or 1")))?;
        *out = Box::into_raw(Box::new(G2d5Curve(curve_from_cover(params, &root.z)?)));
        Ok(())
    })
}

/// `y² = Σ coeffs[i] xⁱ` from `n` rational strings, `n` in 6..=7.
///
/// # Safety
/// `coeffs` must point to `n` nul-terminated strings; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn g2d5_curve_from_coeffs(
    coeffs: *const *const c_char,
    n: usize,
    out: *mut *mut G2d5Curve,
) -> G2d5Status {
    guard(|| {
        let out = out_ref(out)?;
        *out = ptr::null_mut();
        if coeffs.is_null() {
            return Err(Fail(G2d5Status::NullPointer, "null coefficient array".into()));
        }
        let cs = std::slice::from_raw_parts(coeffs, n)
            .iter()
            .map(|&p| rational(p))
            .collect::<FfiResult<Vec<_>>>()?;
        *out = Box::into_raw(Box::new(G2d5Curve(Genus2Curve::from_rationals(&cs)?)));
        Ok(())
    })
}

/// # Safety
/// `curve` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn g2d5_curve_free(curve: *mut G2d5Curve) {
    if !curve.is_null() {
        drop(Box::from_raw(curve));
    }
}

/// `{degree, coeffs, field}` as JSON.
///
/// # Safety
/// `curve` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn g2d5_curve_json(curve: *const G2d5Curve, out: *mut *mut c_char) -> G2d5Status {
    guard(|| {
        let out = out_ref(out)?;
        *out = json(serde_json::to_value(&handle(curve)?.0).expect("serializes"))?;
        Ok(())
    })
}

/// `{J2, J4, J6, J10, i1, i2, i3}` as JSON; the `i` keys are absent when J2 = 0.
///
/// # Safety
/// `curve` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn g2d5_curve_invariants(curve: *const G2d5Curve, out: *mut *mut c_char) -> G2d5Status {
    guard(|| {
        let out = out_ref(out)?;
        let ig = igusa_from_curve(&handle(curve)?.0);
        let mut v = serde_json::to_value(&ig).expect("serializes");
        match ig.absolute() {
            Ok(abs) => {
                let a = serde_json::to_value(abs).expect("serializes");
                for (k, x) in a.as_object().expect("object") {
                    v[k] = x.clone();
                }
            }
            Err(Error::J2Zero) => {}
            Err(e) => return Err(e.into()),
        }
        *out = json(v)?;
        Ok(())
    })
}

/// Order of the reduced automorphism group found numerically, within `tol`.
///
/// # Safety
/// `curve` must be a live handle; `order` must be writable.
#[no_mangle]
pub unsafe extern "C" fn g2d5_curve_reduced_aut_order(
    curve: *const G2d5Curve,
    precision_bits: usize,
    tol: f64,
    order: *mut usize,
) -> G2d5Status {
    guard(|| {
        let order = out_ref(order)?;
        *order = reduced_aut_group_numeric(&handle(curve)?.0, precision_bits, tol)?.order;
        Ok(())
    })
}

/// `(i1, i2, i3)` on the case I or II locus at `T`, as JSON.
///
/// # Safety
/// `t` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn g2d5_locus_formulas(case: G2d5Case, t: *const c_char, out: *mut *mut c_char) -> G2d5Status {
    guard(|| {
        let out = out_ref(out)?;
        let t = rational(t)?;
        let f = match case.into() {
            RamificationCase::I => y1_formulas(&t)?,
            RamificationCase::II => y2_formulas(&t)?,
            c => return Err(Error::InvalidInput(format!("no T-formulas for case {c}")).into()),
        };
        *out = json(serde_json::to_value(f).expect("serializes"))?;
        Ok(())
    })
}

/// Recovers `T` from rational absolute invariants on the case I or II locus.
///
/// # Safety
/// `i1`, `i2`, `i3` must be nul-terminated strings; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn g2d5_recover_parameter(
    case: G2d5Case,
    i1: *const c_char,
    i2: *const c_char,
    i3: *const c_char,
    out: *mut *mut c_char,
) -> G2d5Status {
    guard(|| {
        let out = out_ref(out)?;
        *out = ptr::null_mut();
        let i = [rational(i1)?, rational(i2)?, rational(i3)?];
        let p = recover_parameter(&i, case.into())?;
        *out = owned_string(p.t.to_string());
        Ok(())
    })
}

/// Nielsen class count for `group` ("S5" or "A5") and comma-separated
/// cycle `types`.
///
/// # Safety
/// `group` and `types` must be nul-terminated strings; `classes` writable.
#[no_mangle]
pub unsafe extern "C" fn g2d5_nielsen_count(
    group: *const c_char,
    types: *const c_char,
    classes: *mut u64,
) -> G2d5Status {
    guard(|| {
        let classes = out_ref(classes)?;
        let g: Group = text(group)?.parse()?;
        let types: Vec<CycleType> = text(types)?
            .split(',')
            .map(|t| t.trim().parse())
            .collect::<Result<_, _>>()?;
        *classes = nielsen_count(g, &types)?.classes;
        Ok(())
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn status_table_matches_error_codes() {
        let errors = [
            Error::InvalidInput(String::new()),
            Error::excluded("a"),
            Error::DegenerateQuadratic,
            Error::InvalidRoot(String::new()),
            Error::ConstructionFailure(String::new()),
            Error::SingularModel,
            Error::DegenerateSubcover(String::new()),
            Error::J2Zero,
            Error::Precision(String::new()),
            Error::NotOnLocus(String::new()),
            Error::Ambiguous(2),
            Error::IdentityViolation { check: String::new(), residual: String::new() },
            Error::ContextMismatch(String::new(), String::new()),
            Error::Parse(String::new()),
        ];
        for e in errors {
            let s = G2d5Status::of(&e);
            assert_eq!(s as i32, e.code());
            let name = unsafe { CStr::from_ptr(g2d5_status_name(s)) };
            assert_eq!(name.to_str().unwrap(), e.name());
        }
    }
}
