//! C ABI for the cyclorth library.
//!
//! All objects cross the boundary as opaque pointers; every fallible call
//! returns a [`CyStatus`] and writes its result through an out-pointer.
//! Pointers returned by `cy_*_new`/`cy_*_open`/compute functions must be
//! released with the matching `cy_*_free`.

use std::ffi::{c_char, CStr};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use cyclorth::cyclo::{self, Algorithm, CycloCache};
use cyclorth::numtheory;
use cyclorth::polyring::IntPoly;
use cyclorth::structure;
use cyclorth::Error;

/// Status codes returned by every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CyStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullPointer = 1,
    /// Argument outside the domain (n = 0, bad enum value, bad UTF-8 path).
    InvalidArgument = 2,
    /// d does not divide n.
    NotADivisor = 3,
    /// Internal arithmetic failure (inexact division, cache corruption, IO).
    ArithmeticError = 4,
    /// A panic was caught at the boundary.
    Panic = 5,
}

/// Algorithm selector for `cy_phi`.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CyAlgorithm {
    Auto = 0,
    Cascade = 1,
    Mobius = 2,
    Radical = 3,
}

impl From<CyAlgorithm> for Algorithm {
    fn from(a: CyAlgorithm) -> Algorithm {
        match a {
            CyAlgorithm::Auto => Algorithm::Auto,
            CyAlgorithm::Cascade => Algorithm::Cascade,
            CyAlgorithm::Mobius => Algorithm::Mobius,
            CyAlgorithm::Radical => Algorithm::Radical,
        }
    }
}

/// Opaque handle to a polynomial with integer coefficients.
pub struct CyPoly(IntPoly);

/// Opaque handle to a Phi cache (in-memory, optionally file-backed).
pub struct CyCache(CycloCache);

fn status_of(e: &Error) -> CyStatus {
    match e {
        Error::NonPositive | Error::InvalidArgument(_) => CyStatus::InvalidArgument,
        Error::NotADivisor { .. } => CyStatus::NotADivisor,
        _ => CyStatus::ArithmeticError,
    }
}

fn guarded<F: FnOnce() -> CyStatus>(f: F) -> CyStatus {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or(CyStatus::Panic)
}

/// Version string of the underlying library, static NUL-terminated ASCII.
#[no_mangle]
pub extern "C" fn cy_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// Create an in-memory cache.
#[no_mangle]
pub extern "C" fn cy_cache_new() -> *mut CyCache {
    Box::into_raw(Box::new(CyCache(CycloCache::new())))
}

/// Open a file-backed cache at `path` (created on first save).
///
/// # Safety
/// `path` must be a valid NUL-terminated string; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn cy_cache_open(path: *const c_char, out: *mut *mut CyCache) -> CyStatus {
    if path.is_null() || out.is_null() {
        return CyStatus::NullPointer;
    }
    guarded(|| {
        let Ok(path) = CStr::from_ptr(path).to_str() else {
            return CyStatus::InvalidArgument;
        };
        match CycloCache::with_file(path) {
            Ok(cache) => {
                *out = Box::into_raw(Box::new(CyCache(cache)));
                CyStatus::Ok
            }
            Err(e) => status_of(&e),
        }
    })
}

/// Persist a file-backed cache. No-op for in-memory caches.
///
/// # Safety
/// `cache` must come from `cy_cache_new`/`cy_cache_open`.
#[no_mangle]
pub unsafe extern "C" fn cy_cache_save(cache: *const CyCache) -> CyStatus {
    if cache.is_null() {
        return CyStatus::NullPointer;
    }
    guarded(|| match (*cache).0.save() {
        Ok(()) => CyStatus::Ok,
        Err(e) => status_of(&e),
    })
}

/// Release a cache handle.
///
/// # Safety
/// `cache` must come from `cy_cache_new`/`cy_cache_open`; not used after.
#[no_mangle]
pub unsafe extern "C" fn cy_cache_free(cache: *mut CyCache) {
    if !cache.is_null() {
        drop(Box::from_raw(cache));
    }
}

unsafe fn poly_out(
    out: *mut *mut CyPoly,
    result: cyclorth::Result<IntPoly>,
) -> CyStatus {
    match result {
        Ok(p) => {
            *out = Box::into_raw(Box::new(CyPoly(p)));
            CyStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Compute the n-th cyclotomic polynomial.
///
/// # Safety
/// `cache` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn cy_phi(
    cache: *const CyCache,
    n: u64,
    algorithm: CyAlgorithm,
    out: *mut *mut CyPoly,
) -> CyStatus {
    if cache.is_null() || out.is_null() {
        return CyStatus::NullPointer;
    }
    guarded(|| poly_out(out, cyclo::phi(n, algorithm.into(), &(*cache).0)))
}

/// Compute the n-th inverse cyclotomic polynomial.
///
/// # Safety
/// `cache` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn cy_psi(cache: *const CyCache, n: u64, out: *mut *mut CyPoly) -> CyStatus {
    if cache.is_null() || out.is_null() {
        return CyStatus::NullPointer;
    }
    guarded(|| poly_out(out, cyclo::psi(n, &(*cache).0)))
}

/// Compute the cofactor (X^n - 1)/Phi_d for d | n.
///
/// # Safety
/// `cache` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn cy_psi_nd(
    cache: *const CyCache,
    n: u64,
    d: u64,
    out: *mut *mut CyPoly,
) -> CyStatus {
    if cache.is_null() || out.is_null() {
        return CyStatus::NullPointer;
    }
    guarded(|| poly_out(out, cyclo::psi_nd(n, d, &(*cache).0)))
}

/// Release a polynomial handle.
///
/// # Safety
/// `poly` must come from a `cy_*` compute call; not used after.
#[no_mangle]
pub unsafe extern "C" fn cy_poly_free(poly: *mut CyPoly) {
    if !poly.is_null() {
        drop(Box::from_raw(poly));
    }
}

/// Degree of the polynomial, or -1 for the zero polynomial.
///
/// # Safety
/// `poly` must be a valid handle.
#[no_mangle]
pub unsafe extern "C" fn cy_poly_degree(poly: *const CyPoly) -> i64 {
    if poly.is_null() {
        return -1;
    }
    (*poly).0.degree().map(|d| d as i64).unwrap_or(-1)
}

/// Number of stored coefficients (degree + 1, or 0 for zero).
///
/// # Safety
/// `poly` must be a valid handle.
#[no_mangle]
pub unsafe extern "C" fn cy_poly_coeff_count(poly: *const CyPoly) -> u64 {
    if poly.is_null() {
        return 0;
    }
    (*poly).0.coeffs().len() as u64
}

/// Write the coefficient of X^k as a NUL-terminated decimal string into
/// `buf`. Returns the required buffer size including the NUL, or 0 on a
/// null handle. If the buffer is too small nothing is written.
///
/// # Safety
/// `buf` must point to at least `buf_len` writable bytes (or be null when
/// `buf_len` is 0, to query the size).
#[no_mangle]
pub unsafe extern "C" fn cy_poly_coeff_decimal(
    poly: *const CyPoly,
    k: u64,
    buf: *mut c_char,
    buf_len: u64,
) -> u64 {
    if poly.is_null() {
        return 0;
    }
    let s = (*poly).0.coeff(k as usize).to_string();
    let needed = s.len() as u64 + 1;
    if !buf.is_null() && buf_len >= needed {
        ptr::copy_nonoverlapping(s.as_ptr() as *const c_char, buf, s.len());
        *buf.add(s.len()) = 0;
    }
    needed
}

/// Exhaustively verify the shifted-cofactor orthogonality relation for n.
/// `out_pass` receives whether every inner product vanished, `out_checks`
/// the number of inner products examined.
///
/// # Safety
/// All pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn cy_verify_theorem(
    cache: *const CyCache,
    n: u64,
    out_pass: *mut bool,
    out_checks: *mut u64,
) -> CyStatus {
    if cache.is_null() || out_pass.is_null() || out_checks.is_null() {
        return CyStatus::NullPointer;
    }
    guarded(|| match structure::verify_theorem(n, &(*cache).0) {
        Ok(cert) => {
            *out_pass = cert.pass;
            *out_checks = cert.checks_performed;
            CyStatus::Ok
        }
        Err(e) => status_of(&e),
    })
}

/// Check the component-orthogonality lemma for one divisor pair d1 != d2.
///
/// # Safety
/// All pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn cy_verify_lemma(
    cache: *const CyCache,
    n: u64,
    d1: u64,
    d2: u64,
    out_pass: *mut bool,
) -> CyStatus {
    if cache.is_null() || out_pass.is_null() {
        return CyStatus::NullPointer;
    }
    guarded(|| match structure::verify_lemma(n, d1, d2, &(*cache).0) {
        Ok(ok) => {
            *out_pass = ok;
            CyStatus::Ok
        }
        Err(e) => status_of(&e),
    })
}

/// Euler totient, written through `out`.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cy_totient(n: u64, out: *mut u64) -> CyStatus {
    if out.is_null() {
        return CyStatus::NullPointer;
    }
    match numtheory::totient(n) {
        Ok(t) => {
            *out = t;
            CyStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}
