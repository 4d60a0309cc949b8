//! C ABI over `bc1-jacobi`.
//!
//! Objects cross the boundary as opaque handles (`Bc1Family`, `Bc1Laurent`) that the
//! caller releases with the matching `*_free` function. Rational coefficients are
//! returned as `"p/q"` strings owned by the caller (release with `bc1_string_free`).
//! Every fallible function returns a `Bc1Status`; on failure a message is available
//! from `bc1_last_error_message` on the same thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use bc1_jacobi::classical::monic_from_m;
use bc1_jacobi::nonsym::{cherednik_apply, NonsymFamily};
use bc1_jacobi::rational::{fmt_rational, rat};
use bc1_jacobi::record::{Family, PolyRecord};
use bc1_jacobi::suite::{run_suite, Suite, SuiteConfig};
use bc1_jacobi::transport::gamma;
use bc1_jacobi::vector::build_m;
use bc1_jacobi::{Error, InnerProductEngine, LaurentPoly, Multiplicity};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Bc1Status {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    InvalidMultiplicity = 3,
    NotInvariant = 4,
    NonDivisible = 5,
    Degenerate = 6,
    Domain = 7,
    Mode = 8,
    DecompositionMismatch = 9,
    /// A verification ran and at least one identity failed.
    IdentityFailed = 10,
    Panic = 11,
}

impl From<&Error> for Bc1Status {
    fn from(e: &Error) -> Self {
        match e {
            Error::NonDivisible(_) => Bc1Status::NonDivisible,
            Error::NotInvariant => Bc1Status::NotInvariant,
            Error::Mode(_) => Bc1Status::Mode,
            Error::InvalidMultiplicity(_) => Bc1Status::InvalidMultiplicity,
            Error::DegenerateGram(_) => Bc1Status::Degenerate,
            Error::ParameterOutOfRange(_) => Bc1Status::InvalidArgument,
            Error::DecompositionMismatch(_) => Bc1Status::DecompositionMismatch,
            Error::Domain(_) => Bc1Status::Domain,
        }
    }
}

/// Gram–Schmidt cache of `E(n, k)` for one multiplicity.
pub struct Bc1Family {
    inner: NonsymFamily,
}

/// A Laurent polynomial in `z` with rational coefficients.
pub struct Bc1Laurent {
    inner: LaurentPoly,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

struct Failure(Bc1Status, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(Bc1Status::from(&e), e.to_string())
    }
}

fn null() -> Failure {
    Failure(Bc1Status::NullPointer, "null pointer argument".into())
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> Bc1Status {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            Bc1Status::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("panic inside bc1-jacobi");
            Bc1Status::Panic
        }
    }
}

fn to_c_string(s: String) -> *mut c_char {
    CString::new(s).map(CString::into_raw).unwrap_or(ptr::null_mut())
}

unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, Failure> {
    if s.is_null() {
        return Err(null());
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| Failure(Bc1Status::InvalidArgument, "string is not UTF-8".into()))
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null());
    }
    out.write(value);
    Ok(())
}

/// Message for the last failed call on this thread; empty after a successful call.
/// The pointer stays valid until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn bc1_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn bc1_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// # Safety
/// `s` must be null or a string returned by this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn bc1_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Creates the `E(n, k)` family for nonnegative integer `k = (k1, k2)`.
///
/// # Safety
/// `out` must be a valid pointer to writable storage for one handle.
#[no_mangle]
pub unsafe extern "C" fn bc1_family_new(k1: i64, k2: i64, out: *mut *mut Bc1Family) -> Bc1Status {
    guard(|| {
        let family = NonsymFamily::new(&Multiplicity::exact(k1, k2)?)?;
        write_out(out, Box::into_raw(Box::new(Bc1Family { inner: family })))
    })
}

/// # Safety
/// `family` must be null or a handle from `bc1_family_new` that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn bc1_family_free(family: *mut Bc1Family) {
    if !family.is_null() {
        drop(Box::from_raw(family));
    }
}

/// `E(n, k)` as a new polynomial handle.
///
/// # Safety
/// `family` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bc1_family_e(family: *mut Bc1Family, n: i64, out: *mut *mut Bc1Laurent) -> Bc1Status {
    guard(|| {
        let family = family.as_mut().ok_or_else(null)?;
        let e = family.inner.e(n)?.clone();
        write_out(out, Box::into_raw(Box::new(Bc1Laurent { inner: e })))
    })
}

/// Checks `D_k E(n,k) = λ_n E(n,k)`; `holds` receives the verdict.
///
/// # Safety
/// `family` must be a live handle and `holds` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bc1_family_eigen_check(family: *mut Bc1Family, n: i64, holds: *mut bool) -> Bc1Status {
    guard(|| {
        let family = family.as_mut().ok_or_else(null)?;
        let v = family.inner.eigen_check(n)?;
        write_out(holds, v.holds())
    })
}

/// A new zero polynomial.
#[no_mangle]
pub extern "C" fn bc1_laurent_new() -> *mut Bc1Laurent {
    Box::into_raw(Box::new(Bc1Laurent { inner: LaurentPoly::zero() }))
}

/// # Safety
/// `p` must be null or a live polynomial handle.
#[no_mangle]
pub unsafe extern "C" fn bc1_laurent_free(p: *mut Bc1Laurent) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Adds `(num/den) z^exp`.
///
/// # Safety
/// `p` must be a live polynomial handle.
#[no_mangle]
pub unsafe extern "C" fn bc1_laurent_add_term(p: *mut Bc1Laurent, exp: i64, num: i64, den: i64) -> Bc1Status {
    guard(|| {
        let p = p.as_mut().ok_or_else(null)?;
        if den == 0 {
            return Err(Failure(Bc1Status::InvalidArgument, "zero denominator".into()));
        }
        p.inner.add_term(exp, rat(num, den));
        Ok(())
    })
}

/// Number of nonzero terms.
///
/// # Safety
/// `p` must be null or a live polynomial handle.
#[no_mangle]
pub unsafe extern "C" fn bc1_laurent_len(p: *const Bc1Laurent) -> usize {
    p.as_ref().map_or(0, |p| p.inner.len())
}

/// Term `index` in increasing exponent order: its exponent and its coefficient as a
/// `"p/q"` string owned by the caller.
///
/// # Safety
/// `p` must be a live handle; `exp` and `coeff` valid pointers.
#[no_mangle]
pub unsafe extern "C" fn bc1_laurent_term(
    p: *const Bc1Laurent,
    index: usize,
    exp: *mut i64,
    coeff: *mut *mut c_char,
) -> Bc1Status {
    guard(|| {
        let p = p.as_ref().ok_or_else(null)?;
        let (e, c) = p
            .inner
            .terms()
            .nth(index)
            .ok_or_else(|| Failure(Bc1Status::InvalidArgument, format!("term index {index} out of range")))?;
        write_out(exp, e)?;
        write_out(coeff, to_c_string(fmt_rational(c)))
    })
}

/// Human-readable form, e.g. `3/5*z + 2/5 + z^-1`. Caller frees.
///
/// # Safety
/// `p` must be null or a live polynomial handle.
#[no_mangle]
pub unsafe extern "C" fn bc1_laurent_to_string(p: *const Bc1Laurent) -> *mut c_char {
    p.as_ref().map_or(ptr::null_mut(), |p| to_c_string(p.inner.to_string()))
}

/// Value at a real point.
///
/// # Safety
/// `p` must be null or a live polynomial handle.
#[no_mangle]
pub unsafe extern "C" fn bc1_laurent_eval(p: *const Bc1Laurent, z: f64) -> f64 {
    p.as_ref().map_or(f64::NAN, |p| p.inner.eval_f64(z))
}

/// `D_k p` for integer `k`.
///
/// # Safety
/// `p` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bc1_cherednik_apply(
    k1: i64,
    k2: i64,
    p: *const Bc1Laurent,
    out: *mut *mut Bc1Laurent,
) -> Bc1Status {
    guard(|| {
        let p = p.as_ref().ok_or_else(null)?;
        let image = cherednik_apply(&Multiplicity::exact(k1, k2)?, &p.inner)?;
        write_out(out, Box::into_raw(Box::new(Bc1Laurent { inner: image })))
    })
}

/// Exact pairing `(p, q)_k` as a `"p/q"` string owned by the caller.
///
/// # Safety
/// `p`, `q` must be live handles and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bc1_ct_pair(
    k1: i64,
    k2: i64,
    p: *const Bc1Laurent,
    q: *const Bc1Laurent,
    out: *mut *mut c_char,
) -> Bc1Status {
    guard(|| {
        let (p, q) = (p.as_ref().ok_or_else(null)?, q.as_ref().ok_or_else(null)?);
        let engine = InnerProductEngine::new(&Multiplicity::exact(k1, k2)?)?;
        let v = engine.ct_pair(&p.inner, &q.inner)?;
        write_out(out, to_c_string(fmt_rational(&v)))
    })
}

/// Coefficient record as JSON for `family` in `E`, `P` (index `n`) or `M`, `monic`
/// (index `N >= 0`). Caller frees the string.
///
/// # Safety
/// `family` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bc1_compute_json(
    family: *const c_char,
    k1: i64,
    k2: i64,
    index: i64,
    out: *mut *mut c_char,
) -> Bc1Status {
    guard(|| {
        let tag = read_str(family)?;
        let k = Multiplicity::exact(k1, k2)?;
        let mut fam = NonsymFamily::new(&k)?;
        let matrix_index = || {
            u64::try_from(index).map_err(|_| Failure(Bc1Status::InvalidArgument, "N must be nonnegative".into()))
        };
        let rec = match tag {
            "E" => PolyRecord::new(Family::E, Some(&k)).param("n", index).with_laurent(fam.e(index)?),
            "P" => PolyRecord::new(Family::P, Some(&k)).param("n", index).with_vec_laurent(&gamma(fam.e(index)?)),
            "M" => {
                let n = matrix_index()?;
                PolyRecord::new(Family::M, Some(&k)).param("N", n).with_polymat(&build_m(&mut fam, n)?)
            }
            "monic" => {
                let n = matrix_index()?;
                PolyRecord::new(Family::Monic, Some(&k)).param("N", n).with_polymat(&monic_from_m(&mut fam, n)?)
            }
            other => return Err(Failure(Bc1Status::InvalidArgument, format!("unknown family {other:?}"))),
        };
        write_out(out, to_c_string(rec.to_json()))
    })
}

/// Runs a verification suite (`eigen`, `ortho`, `matrix`, `shift`, `transmute`,
/// `spherical` or `all`) with default parameters at `k = (k1, k2)`. Returns
/// `IdentityFailed` when any check fails; `passed` and `total` receive the counts.
///
/// # Safety
/// `suite` must be a NUL-terminated string; `passed` and `total` valid pointers.
#[no_mangle]
pub unsafe extern "C" fn bc1_verify(
    suite: *const c_char,
    k1: i64,
    k2: i64,
    passed: *mut usize,
    total: *mut usize,
) -> Bc1Status {
    guard(|| {
        let suite: Suite = read_str(suite)?.parse()?;
        let cfg = SuiteConfig { k: Multiplicity::exact(k1, k2)?, ..SuiteConfig::default() };
        let report = run_suite(suite, &cfg);
        let failed = report.failures().count();
        write_out(passed, report.entries.len() - failed)?;
        write_out(total, report.entries.len())?;
        if failed > 0 {
            let first = report.failures().next().map(|e| e.to_string()).unwrap_or_default();
            return Err(Failure(Bc1Status::IdentityFailed, first));
        }
        Ok(())
    })
}
