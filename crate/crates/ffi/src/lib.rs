//! C ABI for `padic-solve`.
//!
//! Instances are opaque handles created by [`padic_instance_new`] and
//! released with [`padic_instance_free`]. Every fallible call returns a
//! [`PadicStatus`]; on failure a message is available from
//! [`padic_last_error`] on the same thread until the next call.

#![allow(clippy::missing_safety_doc)]

use std::cell::RefCell;
use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use padic_solve::counting::{self, ProblemInstance, SupportedCase};
use padic_solve::oracle;
use padic_solve::Error;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PadicStatus {
    Ok = 0,
    NullPointer = 1,
    Domain = 2,
    Unsupported = 3,
    Hypothesis = 4,
    Consistency = 5,
    ResourceLimit = 6,
    Panic = 7,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PadicCase {
    PNotDividesK = 0,
    KEqualsPN1 = 1,
}

/// Opaque handle to a validated instance of `g^(x^n) = x^k (mod p^e)`.
pub struct PadicInstance(ProblemInstance);

#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct PadicCountReport {
    /// Solution pairs modulo p.
    pub n_mod_p: u64,
    pub d: u64,
    /// Solutions in `[0, m*p^e)`.
    pub total: u64,
    /// 1 or 0 when k = p; -1 otherwise.
    pub wieferich: i32,
    pub case_tag: PadicCase,
}

/// Sorted solutions in `[0, window)`. Free with [`padic_solutions_free`].
#[repr(C)]
#[derive(Debug)]
pub struct PadicSolutions {
    pub data: *mut u64,
    pub len: usize,
    pub window: u64,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(err: &Error) -> PadicStatus {
    match err {
        Error::Domain(_) => PadicStatus::Domain,
        Error::Unsupported(_) => PadicStatus::Unsupported,
        Error::Hypothesis(_) => PadicStatus::Hypothesis,
        Error::Consistency(_) => PadicStatus::Consistency,
        Error::ResourceLimit { .. } => PadicStatus::ResourceLimit,
    }
}

fn guard(f: impl FnOnce() -> Result<(), Error>) -> PadicStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => PadicStatus::Ok,
        Ok(Err(err)) => {
            set_error(err.to_string());
            status_of(&err)
        }
        Err(_) => {
            set_error("panic inside padic-solve".into());
            PadicStatus::Panic
        }
    }
}

fn null(what: &str) -> PadicStatus {
    set_error(format!("{what} is NULL"));
    PadicStatus::NullPointer
}

/// Validates `(g, n, k, p, e)` and stores a new handle in `*out`.
#[no_mangle]
pub unsafe extern "C" fn padic_instance_new(
    g: u64,
    n: u64,
    k: u64,
    p: u64,
    e: u32,
    out: *mut *mut PadicInstance,
) -> PadicStatus {
    if out.is_null() {
        return null("out");
    }
    guard(|| {
        let inst = ProblemInstance::new(g, n, k, p, e)?;
        *out = Box::into_raw(Box::new(PadicInstance(inst)));
        Ok(())
    })
}

/// Releases a handle. NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn padic_instance_free(inst: *mut PadicInstance) {
    if !inst.is_null() {
        drop(Box::from_raw(inst));
    }
}

/// Multiplicative order of g modulo p.
#[no_mangle]
pub unsafe extern "C" fn padic_instance_order(inst: *const PadicInstance) -> u64 {
    inst.as_ref().map_or(0, |i| i.0.m())
}

/// Window size `m*p^e`.
#[no_mangle]
pub unsafe extern "C" fn padic_instance_window(inst: *const PadicInstance) -> u64 {
    inst.as_ref().map_or(0, |i| i.0.window())
}

#[no_mangle]
pub unsafe extern "C" fn padic_count(
    inst: *const PadicInstance,
    out: *mut PadicCountReport,
) -> PadicStatus {
    let (Some(inst), false) = (inst.as_ref(), out.is_null()) else {
        return null("instance or out");
    };
    guard(|| {
        let r = counting::count_solutions(&inst.0)?;
        *out = PadicCountReport {
            n_mod_p: r.n_mod_p,
            d: r.d,
            total: r.total,
            wieferich: r.wieferich.map_or(-1, i32::from),
            case_tag: match r.case {
                SupportedCase::PNotDividesK => PadicCase::PNotDividesK,
                SupportedCase::KEqualsPN1 => PadicCase::KEqualsPN1,
            },
        };
        Ok(())
    })
}

unsafe fn write_solutions(out: *mut PadicSolutions, solutions: Vec<u64>, window: u64) {
    let boxed = solutions.into_boxed_slice();
    let len = boxed.len();
    let data = Box::into_raw(boxed) as *mut u64;
    *out = PadicSolutions { data, len, window };
}

/// Enumerates all solutions by lifting (or level search when k = p).
#[no_mangle]
pub unsafe extern "C" fn padic_enumerate(
    inst: *const PadicInstance,
    out: *mut PadicSolutions,
) -> PadicStatus {
    let (Some(inst), false) = (inst.as_ref(), out.is_null()) else {
        return null("instance or out");
    };
    guard(|| {
        let set = counting::enumerate(&inst.0)?;
        write_solutions(out, set.solutions, set.window);
        Ok(())
    })
}

/// Exhaustive scan of the window; `ceiling = 0` selects the default.
/// Unsupported cases are scanned too.
#[no_mangle]
pub unsafe extern "C" fn padic_oracle(
    inst: *const PadicInstance,
    ceiling: u64,
    out: *mut PadicSolutions,
) -> PadicStatus {
    let (Some(inst), false) = (inst.as_ref(), out.is_null()) else {
        return null("instance or out");
    };
    let ceiling = if ceiling == 0 {
        oracle::DEFAULT_SCAN_CEILING
    } else {
        ceiling
    };
    guard(|| {
        let scan = oracle::brute_force(&inst.0, ceiling)?;
        write_solutions(out, scan.solutions, inst.0.window());
        Ok(())
    })
}

/// Frees the buffer inside `solutions` and zeroes it.
#[no_mangle]
pub unsafe extern "C" fn padic_solutions_free(solutions: *mut PadicSolutions) {
    let Some(s) = solutions.as_mut() else { return };
    if !s.data.is_null() {
        drop(Box::from_raw(ptr::slice_from_raw_parts_mut(s.data, s.len)));
    }
    s.data = ptr::null_mut();
    s.len = 0;
}

#[no_mangle]
pub unsafe extern "C" fn padic_is_wieferich_base(g: u64, p: u64, out: *mut bool) -> PadicStatus {
    if out.is_null() {
        return null("out");
    }
    guard(|| {
        *out = counting::is_wieferich_base(g, p)?;
        Ok(())
    })
}

/// Message for the last failed call on this thread, or NULL.
#[no_mangle]
pub extern "C" fn padic_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}
