//! C interface to `seifert-core`.
//!
//! Links are passed around as opaque `SeifertLink` handles created by
//! [`seifert_link_parse`] and released with [`seifert_link_free`]. Every fallible
//! call returns a [`SeifertStatus`]; on failure a description is available from
//! [`seifert_last_error`] until the next call on the same thread. Strings returned
//! through `char **` out-parameters are owned by the caller and must be released
//! with [`seifert_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use seifert_core::cli::{report, tables};
use seifert_core::cover::{self, Verdict};
use seifert_core::{alexander, orbifold, Error};

/// Status codes returned by every fallible function.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeifertStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Syntax = 3,
    InvalidLink = 4,
    NotPrime = 5,
    InvalidArgument = 6,
    UnknownTable = 7,
    Internal = 99,
}

/// Opaque handle to a normalized Seifert link.
pub struct SeifertLink(seifert_core::SeifertLink);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> SeifertStatus {
    match e {
        Error::Syntax { .. } | Error::UnknownAlias(_) => SeifertStatus::Syntax,
        Error::UnknotInput | Error::NotCoprime { .. } | Error::InvalidParameters(_) => SeifertStatus::InvalidLink,
        Error::NotPrime | Error::NotCore => SeifertStatus::NotPrime,
        Error::UnknownTable(_) => SeifertStatus::UnknownTable,
        Error::ZeroPolynomial | Error::NotDivisible => SeifertStatus::Internal,
        _ => SeifertStatus::InvalidArgument,
    }
}

/// Runs `f`, translating errors and panics into status codes.
fn guard(f: impl FnOnce() -> Result<(), (SeifertStatus, String)>) -> SeifertStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            SeifertStatus::Ok
        }
        Ok(Err((status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("internal error");
            SeifertStatus::Internal
        }
    }
}

fn lib(e: Error) -> (SeifertStatus, String) {
    (status_of(&e), e.to_string())
}

fn null(what: &str) -> (SeifertStatus, String) {
    (SeifertStatus::NullPointer, format!("`{what}` is null"))
}

unsafe fn read_str<'a>(s: *const c_char, what: &str) -> Result<&'a str, (SeifertStatus, String)> {
    if s.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| (SeifertStatus::InvalidUtf8, format!("`{what}` is not valid UTF-8")))
}

unsafe fn read_link<'a>(link: *const SeifertLink) -> Result<&'a seifert_core::SeifertLink, (SeifertStatus, String)> {
    link.as_ref().map(|l| &l.0).ok_or_else(|| null("link"))
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), (SeifertStatus, String)> {
    if out.is_null() {
        return Err(null("out"));
    }
    let c = CString::new(s).map_err(|_| (SeifertStatus::Internal, "string contains NUL".to_string()))?;
    *out = c.into_raw();
    Ok(())
}

unsafe fn write<T>(out: *mut T, v: T) -> Result<(), (SeifertStatus, String)> {
    if out.is_null() {
        return Err(null("out"));
    }
    *out = v;
    Ok(())
}

/// Message describing the most recent failure on this thread, or an empty string.
/// The pointer stays valid until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn seifert_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Parses and normalizes a link expression such as `L(2,3;1,1;-)` or `T(3,4)`.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn seifert_link_parse(text: *const c_char, out: *mut *mut SeifertLink) -> SeifertStatus {
    guard(|| {
        let text = read_str(text, "text")?;
        let link = seifert_core::cli::parse_and_normalize(text).map_err(lib)?;
        write(out, Box::into_raw(Box::new(SeifertLink(link))))
    })
}

/// Releases a handle from [`seifert_link_parse`]. Null is ignored.
///
/// # Safety
/// `link` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn seifert_link_free(link: *mut SeifertLink) {
    if !link.is_null() {
        drop(Box::from_raw(link));
    }
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must be null or a string returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn seifert_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Normal form of the link, e.g. `L(2,3;1,1;-)`.
///
/// # Safety
/// `link` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn seifert_link_to_string(link: *const SeifertLink, out: *mut *mut c_char) -> SeifertStatus {
    guard(|| write_string(out, read_link(link)?.to_string()))
}

/// Number of components.
///
/// # Safety
/// `link` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn seifert_link_components(link: *const SeifertLink, out: *mut usize) -> SeifertStatus {
    guard(|| write(out, read_link(link)?.components()))
}

/// Seifert genus.
///
/// # Safety
/// `link` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn seifert_link_genus(link: *const SeifertLink, out: *mut i64) -> SeifertStatus {
    guard(|| write(out, alexander::genus(read_link(link)?)))
}

/// Determinant `|Δ(-1)|` as a decimal string.
///
/// # Safety
/// `link` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn seifert_link_determinant(link: *const SeifertLink, out: *mut *mut c_char) -> SeifertStatus {
    guard(|| write_string(out, alexander::determinant(read_link(link)?).to_string()))
}

/// Full classification report as JSON.
///
/// # Safety
/// `link` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn seifert_classify_json(link: *const SeifertLink, out: *mut *mut c_char) -> SeifertStatus {
    guard(|| {
        let l = read_link(link)?;
        let r = report::classify_report(&l.to_string(), l);
        write_string(out, report::to_json(&r).to_string())
    })
}

/// Euler characteristic of the orbifold `B̄_n` as a reduced fraction.
///
/// # Safety
/// `link` must be a live handle; `num` and `den` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn seifert_b_bar_chi(
    link: *const SeifertLink,
    n: i64,
    num: *mut i64,
    den: *mut i64,
) -> SeifertStatus {
    guard(|| {
        let chi = orbifold::b_bar(read_link(link)?, n).map_err(lib)?.chi();
        write(num, *chi.numer())?;
        write(den, *chi.denom())
    })
}

/// Whether the `n`-fold canonical cyclic branched cover has finite fundamental group.
///
/// # Safety
/// `link` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn seifert_pi1_finite(link: *const SeifertLink, n: i64, out: *mut bool) -> SeifertStatus {
    guard(|| write(out, orbifold::pi1_sigma_n_finite(read_link(link)?, n).map_err(lib)?))
}

/// Whether the `n`-fold canonical cover is left-orderable, admits a co-orientable
/// taut foliation and is not an L-space.
///
/// # Safety
/// `link` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn seifert_canonical_star(link: *const SeifertLink, n: i64, out: *mut bool) -> SeifertStatus {
    guard(|| {
        let s = cover::canonical_star_status(read_link(link)?, n).map_err(lib)?;
        write(out, s.verdict == Verdict::Star)
    })
}

/// Cover report as JSON. Pass a null `weights` for the canonical cover; otherwise
/// `weights` points to `weight_count` branching weights, one per component.
///
/// # Safety
/// `link` must be a live handle, `out` a valid pointer, and `weights` either null
/// or readable for `weight_count` elements.
#[no_mangle]
pub unsafe extern "C" fn seifert_cover_json(
    link: *const SeifertLink,
    n: i64,
    weights: *const i64,
    weight_count: usize,
    out: *mut *mut c_char,
) -> SeifertStatus {
    guard(|| {
        let l = read_link(link)?;
        let weights = (!weights.is_null()).then(|| std::slice::from_raw_parts(weights, weight_count).to_vec());
        let r = report::cover_report(&l.to_string(), l, n, weights).map_err(lib)?;
        write_string(out, report::to_json(&r).to_string())
    })
}

/// One of the reference tables as JSON.
///
/// # Safety
/// `name` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn seifert_table_json(name: *const c_char, out: *mut *mut c_char) -> SeifertStatus {
    guard(|| {
        let t = tables::table(read_str(name, "name")?).map_err(lib)?;
        write_string(out, report::to_json(&t).to_string())
    })
}
