//! C ABI for the latroid library.
//!
//! Objects cross the boundary as opaque handles that the caller frees with
//! the matching `*_free` function. Every fallible call returns a
//! [`LatStatus`]; on failure a message is available from
//! [`lat_last_error`] on the same thread. Panics are caught and reported as
//! [`LatStatus::Panic`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use latroid::cli::{execute, Command};
use latroid::code_latroids::{chain_support_latroid, code_gen_weights_dbar_all, code_gen_weights_dr_all};
use latroid::codes::Code;
use latroid::config::ProblemConfig;
use latroid::enumerators::{enumerator_from_tutte, homogeneous_enumerator, refined_enumerator};
use latroid::latroid::{crypto_roundtrip, Latroid};
use latroid::ring::Pir;
use latroid::supports::SupportFn;
use latroid::Error;

/// Result of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LatStatus {
    Ok = 0,
    /// A check ran and failed (axiom violated, identity does not hold).
    ValidationFailed = 1,
    InputError = 2,
    CapExceeded = 3,
    NullPointer = 4,
    Panic = 5,
}

/// A linear code over a finite principal ideal ring.
pub struct LatCode {
    code: Code,
}

/// A latroid on an explicit finite lattice.
pub struct LatLatroid {
    latroid: Latroid,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> LatStatus {
    match e.exit_code() {
        1 => LatStatus::ValidationFailed,
        3 => LatStatus::CapExceeded,
        _ => LatStatus::InputError,
    }
}

struct Fail(LatStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Fail {
        Fail(status_of(&e), e.to_string())
    }
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> LatStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => LatStatus::Ok,
        Ok(Err(Fail(s, msg))) => {
            set_error(msg);
            s
        }
        Err(p) => {
            let msg = p
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| p.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            set_error(format!("panic: {msg}"));
            LatStatus::Panic
        }
    }
}

fn null(what: &str) -> Fail {
    Fail(LatStatus::NullPointer, format!("{what} is null"))
}

unsafe fn borrow<'a, T>(p: *const T, what: &str) -> Result<&'a T, Fail> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Fail(LatStatus::InputError, format!("{what} is not UTF-8")))
}

unsafe fn put<T>(out: *mut T, v: T, what: &str) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null(what));
    }
    out.write(v);
    Ok(())
}

fn owned_string(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " ")).expect("nul bytes removed").into_raw()
}

/// Message of the last failed call on this thread, or null. The pointer is
/// valid until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn lat_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn lat_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Frees a string returned by this library.
///
/// # Safety
/// `s` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn lat_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Builds the code spanned by `num_gens` rows of `n` integers (row-major in
/// `gens`) over the ring named by `ring`, e.g. `"Z_4"` or `"Z_6"`.
///
/// # Safety
/// `ring` must be a C string, `gens` must hold `num_gens * n` values and
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lat_code_new(
    ring: *const c_char,
    n: usize,
    gens: *const i64,
    num_gens: usize,
    out: *mut *mut LatCode,
) -> LatStatus {
    guard(|| {
        let ring: Pir = text(ring, "ring")?.parse()?;
        let flat: &[i64] = if num_gens == 0 || n == 0 {
            &[]
        } else if gens.is_null() {
            return Err(null("gens"));
        } else {
            std::slice::from_raw_parts(gens, num_gens * n)
        };
        let rows: Vec<Vec<i64>> = flat.chunks(n.max(1)).map(<[i64]>::to_vec).collect();
        let code = Code::from_rows(&ring, n, &rows)?;
        put(out, Box::into_raw(Box::new(LatCode { code })), "out")
    })
}

/// Builds the code described by a config text (`ring`, `n`, `gen` lines).
///
/// # Safety
/// `config` must be a C string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn lat_code_from_config(config: *const c_char, out: *mut *mut LatCode) -> LatStatus {
    guard(|| {
        let cfg = ProblemConfig::parse(text(config, "config")?)?;
        let code = cfg.code()?;
        put(out, Box::into_raw(Box::new(LatCode { code })), "out")
    })
}

/// # Safety
/// `code` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn lat_code_free(code: *mut LatCode) {
    if !code.is_null() {
        drop(Box::from_raw(code));
    }
}

/// Number of codewords.
///
/// # Safety
/// `code` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn lat_code_size(code: *const LatCode, out: *mut u64) -> LatStatus {
    guard(|| put(out, borrow(code, "code")?.code.size() as u64, "out"))
}

fn copy_weights(w: &[u32], buf: *mut u32, cap: usize, len: *mut usize) -> Result<(), Fail> {
    unsafe { put(len, w.len(), "len")? };
    if w.len() > cap {
        return Err(Fail(
            LatStatus::InputError,
            format!("buffer holds {cap} values, {} needed", w.len()),
        ));
    }
    if !w.is_empty() {
        if buf.is_null() {
            return Err(null("buf"));
        }
        unsafe { ptr::copy_nonoverlapping(w.as_ptr(), buf, w.len()) };
    }
    Ok(())
}

/// Generalized weights `d̄_1, ..., d̄_lambda` for the chain support. The
/// count is always stored in `len`; the call fails when it exceeds `cap`.
///
/// # Safety
/// `code` must be a live handle, `buf` must hold `cap` values and `len`
/// must be writable.
#[no_mangle]
pub unsafe extern "C" fn lat_code_dbar(code: *const LatCode, buf: *mut u32, cap: usize, len: *mut usize) -> LatStatus {
    guard(|| {
        let c = &borrow(code, "code")?.code;
        let w = code_gen_weights_dbar_all(c, &SupportFn::chain(c.ring(), c.n()))?;
        copy_weights(&w, buf, cap, len)
    })
}

/// Generalized weights `d_1, ..., d_mu` for the chain support.
///
/// # Safety
/// As for [`lat_code_dbar`].
#[no_mangle]
pub unsafe extern "C" fn lat_code_dr(code: *const LatCode, buf: *mut u32, cap: usize, len: *mut usize) -> LatStatus {
    guard(|| {
        let c = &borrow(code, "code")?.code;
        let w = code_gen_weights_dr_all(c, &SupportFn::chain(c.ring(), c.n()))?;
        copy_weights(&w, buf, cap, len)
    })
}

/// Homogeneous weight enumerator for the chain support, as text. Free the
/// result with [`lat_string_free`].
///
/// # Safety
/// `code` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn lat_code_enumerator(code: *const LatCode, out: *mut *mut c_char) -> LatStatus {
    guard(|| {
        let c = &borrow(code, "code")?.code;
        let w = homogeneous_enumerator(c, &SupportFn::chain(c.ring(), c.n()))?;
        put(out, owned_string(w.to_string()), "out")
    })
}

/// Checks that the enumerator recovered from the Tutte-Whitney polynomial
/// equals the refined enumerator; `ValidationFailed` otherwise.
///
/// # Safety
/// `code` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn lat_code_tutte_identity(code: *const LatCode) -> LatStatus {
    guard(|| {
        let c = &borrow(code, "code")?.code;
        let refined = refined_enumerator(c, &SupportFn::chain(c.ring(), c.n()))?;
        if enumerator_from_tutte(c)? != refined {
            return Err(Fail(LatStatus::ValidationFailed, "the identity does not hold".into()));
        }
        Ok(())
    })
}

/// The chain support latroid of a code.
///
/// # Safety
/// `code` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn lat_code_chain_latroid(code: *const LatCode, out: *mut *mut LatLatroid) -> LatStatus {
    guard(|| {
        let latroid = chain_support_latroid(&borrow(code, "code")?.code)?;
        put(out, Box::into_raw(Box::new(LatLatroid { latroid })), "out")
    })
}

/// # Safety
/// `lt` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn lat_latroid_free(lt: *mut LatLatroid) {
    if !lt.is_null() {
        drop(Box::from_raw(lt));
    }
}

/// Number of lattice elements.
///
/// # Safety
/// `lt` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn lat_latroid_size(lt: *const LatLatroid, out: *mut usize) -> LatStatus {
    guard(|| put(out, borrow(lt, "latroid")?.latroid.size(), "out"))
}

/// Rank of element `index`, summed over its coordinates; fails for
/// non-integral ranks.
///
/// # Safety
/// `lt` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn lat_latroid_rank(lt: *const LatLatroid, index: usize, out: *mut i64) -> LatStatus {
    guard(|| {
        let lt = &borrow(lt, "latroid")?.latroid;
        if index >= lt.size() {
            return Err(Error::OutOfRange(format!("element {index} of {}", lt.size())).into());
        }
        let r = lt.rho(index).total();
        if !r.is_integer() {
            return Err(Fail(LatStatus::InputError, format!("rank {r} is not an integer")));
        }
        put(out, r.to_integer(), "out")
    })
}

/// Checks L1-L5; `ValidationFailed` with the failing rule otherwise.
///
/// # Safety
/// `lt` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn lat_latroid_validate(lt: *const LatLatroid) -> LatStatus {
    guard(|| {
        let r = borrow(lt, "latroid")?.latroid.validate();
        if r.is_ok() {
            Ok(())
        } else {
            Err(Fail(LatStatus::ValidationFailed, r.to_string()))
        }
    })
}

/// Rank to independents, bases and circuits and back.
///
/// # Safety
/// `lt` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn lat_latroid_crypto_roundtrip(lt: *const LatLatroid) -> LatStatus {
    guard(|| {
        let r = crypto_roundtrip(&borrow(lt, "latroid")?.latroid)?;
        if r.is_ok() {
            Ok(())
        } else {
            Err(Fail(LatStatus::ValidationFailed, format!("{r:?}")))
        }
    })
}

/// Runs a command of the command line front-end on a config text and stores
/// the JSON report in `out` (free with [`lat_string_free`]). A report whose
/// checks failed is still stored and gives `ValidationFailed`.
///
/// # Safety
/// `config` and `command` must be C strings and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn lat_run_command(
    config: *const c_char,
    command: *const c_char,
    seed: u64,
    cap: u64,
    out: *mut *mut c_char,
) -> LatStatus {
    guard(|| {
        let cfg = ProblemConfig::parse(text(config, "config")?)?;
        let cmd: Command = text(command, "command")?.parse()?;
        if out.is_null() {
            return Err(null("out"));
        }
        let outcome = execute(cmd, &cfg, seed, cap)?;
        put(out, owned_string(outcome.report.to_string()), "out")?;
        if outcome.status != 0 {
            return Err(Fail(LatStatus::ValidationFailed, format!("{} reported a failed check", cmd.name())));
        }
        Ok(())
    })
}
