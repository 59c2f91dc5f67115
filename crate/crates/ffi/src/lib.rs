//! C ABI over `corz`.
//!
//! Conventions:
//!
//! - Every fallible function returns a [`CorzStatus`] and writes its result
//!   through an out-pointer. On failure the out-pointer is left untouched and
//!   [`corz_last_error`] describes the problem.
//! - Partitions and abaci are opaque handles, released with
//!   [`corz_partition_free`] and [`corz_abacus_free`].
//! - Arbitrary-precision results are NUL-terminated decimal strings owned by
//!   the caller and released with [`corz_string_free`].
//! - Panics never cross the boundary; they surface as `CORZ_STATUS_PANIC`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use corz::abacus::{self, Abacus};
use corz::census;
use corz::characters::{self, CharQuery};
use corz::numtheory;
use corz::partition;
use corz::{Error, Partition};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CorzStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    InvalidPartition = 3,
    SizeMismatch = 4,
    NotACore = 5,
    InvalidAbacus = 6,
    InvalidModulus = 7,
    CapExceeded = 8,
    Internal = 9,
    Panic = 10,
}

/// An integer partition.
pub struct CorzPartition(Partition);

/// A canonical abacus of an ℓ-core.
pub struct CorzAbacus(Abacus);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).expect("NULs removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

struct Failure(CorzStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match &e {
            Error::InvalidPartition(_) => CorzStatus::InvalidPartition,
            Error::SizeMismatch { .. } => CorzStatus::SizeMismatch,
            Error::NotACore { .. } => CorzStatus::NotACore,
            Error::NonCanonicalAbacus { .. } | Error::InvalidAbacus(_) => CorzStatus::InvalidAbacus,
            Error::InvalidModulus { .. } | Error::DeltaNotIntegral { .. } => {
                CorzStatus::InvalidModulus
            }
            Error::CapExceeded { .. } => CorzStatus::CapExceeded,
            Error::SwapPrecondition { .. } | Error::BelowThreshold { .. } | Error::InvalidConfig(_) => {
                CorzStatus::InvalidArgument
            }
            _ => CorzStatus::Internal,
        };
        Failure(status, e.to_string())
    }
}

fn invalid(msg: impl Into<String>) -> Failure {
    Failure(CorzStatus::InvalidArgument, msg.into())
}

/// Runs `f`, stores any error message, and maps the outcome to a status.
fn guard(f: impl FnOnce() -> Result<(), Failure>) -> CorzStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => CorzStatus::Ok,
        Ok(Err(Failure(status, msg))) => {
            set_error(msg);
            status
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".into());
            set_error(format!("panic: {msg}"));
            CorzStatus::Panic
        }
    }
}

unsafe fn write<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure(CorzStatus::NullPointer, "null output pointer".into()));
    }
    out.write(value);
    Ok(())
}

unsafe fn deref<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    p.as_ref()
        .ok_or_else(|| Failure(CorzStatus::NullPointer, format!("null {what}")))
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    let c = CString::new(s).map_err(|_| Failure(CorzStatus::Internal, "NUL in output".into()))?;
    write(out, c.into_raw())
}

fn modulus(ell: usize, min: usize) -> Result<(), Failure> {
    if ell < min {
        return Err(Failure(
            CorzStatus::InvalidModulus,
            format!("modulus {ell} is below {min}"),
        ));
    }
    Ok(())
}

/// Message for the most recent failure on this thread, or NULL. Valid until
/// the next failing call on the same thread; do not free.
#[no_mangle]
pub extern "C" fn corz_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Releases a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn corz_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Builds a partition from `len` weakly decreasing positive parts.
///
/// # Safety
/// `parts` must point to `len` readable values (or be NULL when `len` is 0).
#[no_mangle]
pub unsafe extern "C" fn corz_partition_new(
    parts: *const usize,
    len: usize,
    out: *mut *mut CorzPartition,
) -> CorzStatus {
    guard(|| {
        let parts = if len == 0 {
            Vec::new()
        } else {
            deref(parts, "parts")?;
            std::slice::from_raw_parts(parts, len).to_vec()
        };
        let lam = Partition::new(parts)?;
        write(out, Box::into_raw(Box::new(CorzPartition(lam))))
    })
}

/// Parses `"5,4,1"`, `"(5,4,1)"`, `"5 4 1"` or `"()"`.
///
/// # Safety
/// `text` must be a NUL-terminated string.
#[no_mangle]
pub unsafe extern "C" fn corz_partition_parse(
    text: *const c_char,
    out: *mut *mut CorzPartition,
) -> CorzStatus {
    guard(|| {
        deref(text, "text")?;
        let s = CStr::from_ptr(text)
            .to_str()
            .map_err(|e| invalid(format!("text is not UTF-8: {e}")))?;
        let lam: Partition = s.parse()?;
        write(out, Box::into_raw(Box::new(CorzPartition(lam))))
    })
}

/// # Safety
/// `p` must come from this library and not have been freed. NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn corz_partition_free(p: *mut CorzPartition) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// `|λ|`, or 0 for NULL.
///
/// # Safety
/// `p` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn corz_partition_size(p: *const CorzPartition) -> usize {
    p.as_ref().map_or(0, |p| p.0.size())
}

/// Number of parts, or 0 for NULL.
///
/// # Safety
/// `p` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn corz_partition_len(p: *const CorzPartition) -> usize {
    p.as_ref().map_or(0, |p| p.0.len())
}

/// Copies up to `cap` parts into `buf`; returns the total number of parts.
///
/// # Safety
/// `p` must be a live handle and `buf` must have room for `cap` values.
#[no_mangle]
pub unsafe extern "C" fn corz_partition_parts(
    p: *const CorzPartition,
    buf: *mut usize,
    cap: usize,
) -> usize {
    let Some(p) = p.as_ref() else { return 0 };
    let parts = p.0.parts();
    if !buf.is_null() {
        let n = parts.len().min(cap);
        ptr::copy_nonoverlapping(parts.as_ptr(), buf, n);
    }
    parts.len()
}

/// Renders `(5,4,1)`; free the result with [`corz_string_free`].
///
/// # Safety
/// `p` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn corz_partition_to_string(
    p: *const CorzPartition,
    out: *mut *mut c_char,
) -> CorzStatus {
    guard(|| write_string(out, deref(p, "partition")?.0.to_string()))
}

/// Conjugate partition as a new handle.
///
/// # Safety
/// `p` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn corz_partition_conjugate(
    p: *const CorzPartition,
    out: *mut *mut CorzPartition,
) -> CorzStatus {
    guard(|| {
        let conj = deref(p, "partition")?.0.conjugate();
        write(out, Box::into_raw(Box::new(CorzPartition(conj))))
    })
}

/// Whether no hook length of `p` is divisible by `ell` (`ell >= 2`).
///
/// # Safety
/// `p` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn corz_is_core(p: *const CorzPartition, ell: usize, out: *mut bool) -> CorzStatus {
    guard(|| {
        let p = deref(p, "partition")?;
        modulus(ell, 2)?;
        write(out, p.0.is_core(ell))
    })
}

/// Whether no part of `p` is divisible by `a` (`a >= 2`).
///
/// # Safety
/// `p` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn corz_is_regular(p: *const CorzPartition, a: usize, out: *mut bool) -> CorzStatus {
    guard(|| {
        let p = deref(p, "partition")?;
        modulus(a, 2)?;
        write(out, p.0.is_regular(a))
    })
}

/// p(n) in decimal.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn corz_count_p(n: usize, out: *mut *mut c_char) -> CorzStatus {
    guard(|| write_string(out, partition::count_p(n).to_string()))
}

/// Partitions of `n` with no part divisible by `a`, in decimal.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn corz_count_p_regular(n: usize, a: usize, out: *mut *mut c_char) -> CorzStatus {
    guard(|| {
        modulus(a, 2)?;
        write_string(out, partition::count_p_regular(n, a).to_string())
    })
}

/// Number of `t`-cores of `n`, in decimal.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn corz_count_cores(n: usize, t: usize, out: *mut *mut c_char) -> CorzStatus {
    guard(|| {
        modulus(t, 1)?;
        write_string(out, abacus::count_cores(n, t).to_string())
    })
}

/// Character value `χ_λ(μ)` in decimal (may be negative).
///
/// # Safety
/// `lam` and `mu` must be live handles.
#[no_mangle]
pub unsafe extern "C" fn corz_mn_character(
    lam: *const CorzPartition,
    mu: *const CorzPartition,
    out: *mut *mut c_char,
) -> CorzStatus {
    guard(|| {
        let q = CharQuery::new(deref(lam, "lambda")?.0.clone(), deref(mu, "mu")?.0.clone())?;
        write_string(out, characters::mn_character(&q).to_string())
    })
}

/// True when a part of `μ` is missing from the hook lengths of `λ`, which
/// forces `χ_λ(μ) = 0`.
///
/// # Safety
/// `lam` and `mu` must be live handles.
#[no_mangle]
pub unsafe extern "C" fn corz_quick_vanish(
    lam: *const CorzPartition,
    mu: *const CorzPartition,
    out: *mut bool,
) -> CorzStatus {
    guard(|| {
        let q = CharQuery::new(deref(lam, "lambda")?.0.clone(), deref(mu, "mu")?.0.clone())?;
        write(out, characters::quick_vanish(&q))
    })
}

/// Canonical abacus of an `ell`-core.
///
/// # Safety
/// `p` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn corz_to_abacus(
    p: *const CorzPartition,
    ell: usize,
    out: *mut *mut CorzAbacus,
) -> CorzStatus {
    guard(|| {
        let ab = abacus::to_abacus(&deref(p, "partition")?.0, ell)?;
        write(out, Box::into_raw(Box::new(CorzAbacus(ab))))
    })
}

/// Abacus from `ell` rod heights. Rod 0 must be empty for
/// [`corz_from_abacus`] to accept it.
///
/// # Safety
/// `cols` must point to `ell` readable values.
#[no_mangle]
pub unsafe extern "C" fn corz_abacus_new(
    ell: usize,
    cols: *const usize,
    out: *mut *mut CorzAbacus,
) -> CorzStatus {
    guard(|| {
        deref(cols, "columns")?;
        let cols = std::slice::from_raw_parts(cols, ell).to_vec();
        let ab = Abacus::new(ell, cols)?;
        write(out, Box::into_raw(Box::new(CorzAbacus(ab))))
    })
}

/// # Safety
/// `ab` must come from this library and not have been freed. NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn corz_abacus_free(ab: *mut CorzAbacus) {
    if !ab.is_null() {
        drop(Box::from_raw(ab));
    }
}

/// Number of rods, or 0 for NULL.
///
/// # Safety
/// `ab` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn corz_abacus_ell(ab: *const CorzAbacus) -> usize {
    ab.as_ref().map_or(0, |a| a.0.ell())
}

/// Copies up to `cap` rod heights into `buf`; returns the number of rods.
///
/// # Safety
/// `ab` must be a live handle and `buf` must have room for `cap` values.
#[no_mangle]
pub unsafe extern "C" fn corz_abacus_cols(ab: *const CorzAbacus, buf: *mut usize, cap: usize) -> usize {
    let Some(ab) = ab.as_ref() else { return 0 };
    let cols = ab.0.cols();
    if !buf.is_null() {
        ptr::copy_nonoverlapping(cols.as_ptr(), buf, cols.len().min(cap));
    }
    cols.len()
}

/// Size of the core an abacus represents.
///
/// # Safety
/// `ab` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn corz_abacus_size(ab: *const CorzAbacus, out: *mut usize) -> CorzStatus {
    guard(|| write(out, abacus::abacus_size(&deref(ab, "abacus")?.0)))
}

/// The core represented by a canonical abacus.
///
/// # Safety
/// `ab` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn corz_from_abacus(
    ab: *const CorzAbacus,
    out: *mut *mut CorzPartition,
) -> CorzStatus {
    guard(|| {
        let lam = abacus::from_abacus(&deref(ab, "abacus")?.0)?;
        write(out, Box::into_raw(Box::new(CorzPartition(lam))))
    })
}

/// `1/α_ℓ` in decimal, for primes `ell >= 5`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn corz_inv_alpha(ell: usize, out: *mut *mut c_char) -> CorzStatus {
    guard(|| write_string(out, numtheory::inv_alpha(ell)?.to_string()))
}

/// `N_ℓ`, above which every ℓ-core has a part divisible by ℓ (prime `ell`).
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn corz_n_ell(ell: usize, out: *mut u64) -> CorzStatus {
    guard(|| {
        numtheory::require_prime(ell, 2)?;
        write(out, abacus::n_ell(ell))
    })
}

/// `(ℓ² - 1)/24` for primes `ell >= 5`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn corz_delta_ell(ell: usize, out: *mut usize) -> CorzStatus {
    guard(|| write(out, numtheory::delta_ell(ell)?))
}

/// `(p(n) - p_ℓ(n)) · c_ℓ(n)` in decimal.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn corz_z_lower_bound(n: usize, ell: usize, out: *mut *mut c_char) -> CorzStatus {
    guard(|| {
        modulus(ell, 2)?;
        write_string(out, census::z_lower_bound(n, ell).to_string())
    })
}

/// Exact count of vanishing `χ_λ(μ)` with `λ` an ℓ-core of `n`; refuses
/// `n > cap`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn corz_z_exact(
    n: usize,
    ell: usize,
    cap: usize,
    out: *mut *mut c_char,
) -> CorzStatus {
    guard(|| {
        modulus(ell, 2)?;
        write_string(out, census::z_exact(n, ell, cap)?.to_string())
    })
}
