//! C ABI over `octoclif`.
//!
//! Every function returns an [`OcStatus`]; on failure a message is stored
//! per thread and can be read with [`oc_last_error_message`]. Objects are
//! opaque handles created by `*_new` / `*_from_*` functions and released with
//! the matching `*_free`. Strings returned to the caller are released with
//! [`oc_string_free`]. Panics never cross the boundary: they are caught and
//! reported as [`OcStatus::Panic`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use octoclif::cayley_dickson::CdElement;
use octoclif::catalog::{self, AnyMap};
use octoclif::clifford::{Multivector, Paravector};
use octoclif::conformal::Algebra;
use octoclif::moebius::MapConfig;
use octoclif::octonion::Octonion;
use octoclif::sampling::{random_directions, sample_points, SampleBox, SamplingSpec};
use octoclif::tolerance::NumericPolicy;
use octoclif::Error;

/// Result code of every exported function.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OcStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    DimensionMismatch = 3,
    Singular = 4,
    Pole = 5,
    Config = 6,
    NotFound = 7,
    Internal = 8,
    Panic = 9,
}

/// Opaque multivector in `Cl_n`.
pub struct OcMultivector(Multivector);

/// Opaque map under test (catalog or config-built).
pub struct OcMap(AnyMap);

struct Failure {
    status: OcStatus,
    message: String,
}

impl Failure {
    fn new(status: OcStatus, message: impl Into<String>) -> Self {
        Self { status, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match &e {
            Error::DimensionMismatch { .. } | Error::LevelMismatch { .. } => OcStatus::DimensionMismatch,
            Error::Singular { .. } | Error::SingularDerivative { .. } => OcStatus::Singular,
            Error::Pole { .. } => OcStatus::Pole,
            Error::Config(_) => OcStatus::Config,
            Error::InvalidInput(_) | Error::InvalidMatrix(_) | Error::MapContract(_) => OcStatus::InvalidArgument,
            Error::Io(_) => OcStatus::Internal,
        };
        Failure::new(status, e.to_string())
    }
}

type FfiResult<T = ()> = Result<T, Failure>;

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(message: &str) {
    let c = CString::new(message.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(c));
}

/// Runs `body`, converting errors and panics into a status code.
fn guard(body: impl FnOnce() -> FfiResult) -> OcStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => OcStatus::Ok,
        Ok(Err(f)) => {
            set_last_error(&f.message);
            f.status
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".into());
            set_last_error(&format!("panic: {msg}"));
            OcStatus::Panic
        }
    }
}

unsafe fn input<'a>(p: *const f64, len: usize, what: &str) -> FfiResult<&'a [f64]> {
    if p.is_null() {
        return Err(Failure::new(OcStatus::NullPointer, format!("{what} is null")));
    }
    Ok(std::slice::from_raw_parts(p, len))
}

unsafe fn output<'a>(p: *mut f64, len: usize, what: &str) -> FfiResult<&'a mut [f64]> {
    if p.is_null() {
        return Err(Failure::new(OcStatus::NullPointer, format!("{what} is null")));
    }
    Ok(std::slice::from_raw_parts_mut(p, len))
}

unsafe fn handle<'a, T>(p: *const T, what: &str) -> FfiResult<&'a T> {
    p.as_ref().ok_or_else(|| Failure::new(OcStatus::NullPointer, format!("{what} is null")))
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> FfiResult<&'a str> {
    if p.is_null() {
        return Err(Failure::new(OcStatus::NullPointer, format!("{what} is null")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure::new(OcStatus::InvalidArgument, format!("{what} is not valid UTF-8")))
}

fn store<T>(out: *mut *mut T, value: T) -> FfiResult {
    if out.is_null() {
        return Err(Failure::new(OcStatus::NullPointer, "output handle pointer is null"));
    }
    unsafe { *out = Box::into_raw(Box::new(value)) };
    Ok(())
}

/// Message of the last failing call on this thread, or null if none.
/// The pointer stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn oc_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn oc_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed already.
#[no_mangle]
pub unsafe extern "C" fn oc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

// ------------------------------------------------------------ octonions

/// `out = a b` for octonions given as 8 coefficients `(1, e1, ..., e7)`.
///
/// # Safety
/// `a`, `b` and `out` must each point to 8 doubles.
#[no_mangle]
pub unsafe extern "C" fn oc_octonion_mul(a: *const f64, b: *const f64, out: *mut f64) -> OcStatus {
    guard(|| {
        let x = Octonion::from_slice(input(a, 8, "a")?)?;
        let y = Octonion::from_slice(input(b, 8, "b")?)?;
        output(out, 8, "out")?.copy_from_slice(&(x * y).0);
        Ok(())
    })
}

/// `out = a^-1`. Fails with `OC_STATUS_SINGULAR` when `a` is zero.
///
/// # Safety
/// `a` and `out` must each point to 8 doubles.
#[no_mangle]
pub unsafe extern "C" fn oc_octonion_inverse(a: *const f64, out: *mut f64) -> OcStatus {
    guard(|| {
        let x = Octonion::from_slice(input(a, 8, "a")?)?;
        let inv = x.inverse(1e-300)?;
        output(out, 8, "out")?.copy_from_slice(&inv.0);
        Ok(())
    })
}

/// Product in the Cayley-Dickson algebra of the given doubling level
/// (`len` must equal `2^level`).
///
/// # Safety
/// `a`, `b` and `out` must each point to `len` doubles.
#[no_mangle]
pub unsafe extern "C" fn oc_cayley_dickson_mul(
    level: u32,
    a: *const f64,
    b: *const f64,
    out: *mut f64,
    len: usize,
) -> OcStatus {
    guard(|| {
        let x = CdElement::new(level, input(a, len, "a")?.to_vec())?;
        let y = CdElement::new(level, input(b, len, "b")?.to_vec())?;
        output(out, len, "out")?.copy_from_slice(x.mul(&y)?.coeffs());
        Ok(())
    })
}

// ------------------------------------------------------------ multivectors

/// Creates a multivector of `Cl_n` from `len = 2^n` blade coefficients,
/// indexed by generator bitmask.
///
/// # Safety
/// `coeffs` must point to `len` doubles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn oc_multivector_new(
    n: usize,
    coeffs: *const f64,
    len: usize,
    out: *mut *mut OcMultivector,
) -> OcStatus {
    guard(|| {
        let m = Multivector::new(n, input(coeffs, len, "coeffs")?.to_vec())?;
        store(out, OcMultivector(m))
    })
}

/// Releases a multivector. Null is ignored.
///
/// # Safety
/// `mv` must come from this library and not have been freed already.
#[no_mangle]
pub unsafe extern "C" fn oc_multivector_free(mv: *mut OcMultivector) {
    if !mv.is_null() {
        drop(Box::from_raw(mv));
    }
}

/// Number of coefficients (`2^n`).
///
/// # Safety
/// `mv` must be a live handle; `out_len` must be writable.
#[no_mangle]
pub unsafe extern "C" fn oc_multivector_len(mv: *const OcMultivector, out_len: *mut usize) -> OcStatus {
    guard(|| {
        let m = handle(mv, "multivector")?;
        let slot = out_len.as_mut().ok_or_else(|| Failure::new(OcStatus::NullPointer, "out_len is null"))?;
        *slot = m.0.coeffs().len();
        Ok(())
    })
}

/// Copies the coefficients into `out` (`len` must equal `2^n`).
///
/// # Safety
/// `mv` must be a live handle; `out` must point to `len` doubles.
#[no_mangle]
pub unsafe extern "C" fn oc_multivector_coeffs(mv: *const OcMultivector, out: *mut f64, len: usize) -> OcStatus {
    guard(|| {
        let m = handle(mv, "multivector")?;
        let c = m.0.coeffs();
        if len != c.len() {
            return Err(Error::DimensionMismatch { left: c.len(), right: len }.into());
        }
        output(out, len, "out")?.copy_from_slice(c);
        Ok(())
    })
}

/// Geometric product `a b` as a new handle.
///
/// # Safety
/// `a` and `b` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn oc_multivector_product(
    a: *const OcMultivector,
    b: *const OcMultivector,
    out: *mut *mut OcMultivector,
) -> OcStatus {
    guard(|| {
        let p = handle(a, "a")?.0.geometric_product(&handle(b, "b")?.0)?;
        store(out, OcMultivector(p))
    })
}

/// Clifford conjugate as a new handle.
///
/// # Safety
/// `a` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn oc_multivector_conjugate(a: *const OcMultivector, out: *mut *mut OcMultivector) -> OcStatus {
    guard(|| store(out, OcMultivector(handle(a, "a")?.0.conjugate())))
}

/// Reversion as a new handle.
///
/// # Safety
/// `a` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn oc_multivector_reversion(a: *const OcMultivector, out: *mut *mut OcMultivector) -> OcStatus {
    guard(|| store(out, OcMultivector(handle(a, "a")?.0.reversion())))
}

// ------------------------------------------------------------ maps

/// Builds a catalog map. `n` is the generator count for Clifford maps
/// (0 selects the default); it is ignored for octonion maps.
///
/// # Safety
/// `name` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn oc_map_from_catalog(name: *const c_char, n: usize, out: *mut *mut OcMap) -> OcStatus {
    guard(|| {
        let name = text(name, "name")?;
        if catalog::find(name).is_none() {
            return Err(Failure::new(OcStatus::NotFound, format!("unknown catalog map '{name}'")));
        }
        let map = catalog::build(name, (n > 0).then_some(n))?;
        store(out, OcMap(map))
    })
}

/// Builds a map from a JSON description (one object or an array). With an
/// array, `name` selects the entry; `name` may be null for a single map.
///
/// # Safety
/// `json` must be a NUL-terminated string, `name` null or NUL-terminated;
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn oc_map_from_config(json: *const c_char, name: *const c_char, out: *mut *mut OcMap) -> OcStatus {
    guard(|| {
        let configs = MapConfig::parse_all(text(json, "json")?)?;
        let cfg = if name.is_null() {
            match configs.as_slice() {
                [one] => one,
                _ => return Err(Failure::new(OcStatus::InvalidArgument, "config holds several maps; pass a name")),
            }
        } else {
            let name = text(name, "name")?;
            configs
                .iter()
                .find(|c| c.name == name)
                .ok_or_else(|| Failure::new(OcStatus::NotFound, format!("no map named '{name}'")))?
        };
        let map = AnyMap::from_spec(cfg.name.clone(), cfg.build()?)?;
        store(out, OcMap(map))
    })
}

/// Releases a map. Null is ignored.
///
/// # Safety
/// `map` must come from this library and not have been freed already.
#[no_mangle]
pub unsafe extern "C" fn oc_map_free(map: *mut OcMap) {
    if !map.is_null() {
        drop(Box::from_raw(map));
    }
}

/// Number of real coordinates of a domain point (8 for octonion maps,
/// `n + 1` for paravector maps).
///
/// # Safety
/// `map` must be a live handle; `out_dim` must be writable.
#[no_mangle]
pub unsafe extern "C" fn oc_map_dim(map: *const OcMap, out_dim: *mut usize) -> OcStatus {
    guard(|| {
        let m = handle(map, "map")?;
        let slot = out_dim.as_mut().ok_or_else(|| Failure::new(OcStatus::NullPointer, "out_dim is null"))?;
        *slot = m.0.dim();
        Ok(())
    })
}

/// Evaluates the map at `z` (`len` = dimension); writes `len` coordinates.
///
/// # Safety
/// `map` must be a live handle; `z` and `out` must point to `len` doubles.
#[no_mangle]
pub unsafe extern "C" fn oc_map_eval(map: *const OcMap, z: *const f64, len: usize, out: *mut f64) -> OcStatus {
    guard(|| {
        let m = handle(map, "map")?;
        if len != m.0.dim() {
            return Err(Error::DimensionMismatch { left: m.0.dim(), right: len }.into());
        }
        let z = input(z, len, "z")?;
        let value = match &m.0 {
            AnyMap::Octonion(f) => f.algebra.coefficients(&f.eval(z)?),
            AnyMap::Clifford(f) => Paravector::project(&f.eval(z)?).into_coeffs(),
        };
        output(out, len, "out")?.copy_from_slice(&value);
        Ok(())
    })
}

/// Runs the conformality analysis on `samples` points of the default box
/// and returns the JSON report in `*out_json` (free with `oc_string_free`).
/// `directions` random directions are used for the differential identity.
///
/// # Safety
/// `map` must be a live handle; `out_json` must be writable.
#[no_mangle]
pub unsafe extern "C" fn oc_map_analyze(
    map: *const OcMap,
    samples: usize,
    seed: u64,
    directions: usize,
    out_json: *mut *mut c_char,
) -> OcStatus {
    guard(|| {
        let m = handle(map, "map")?;
        if out_json.is_null() {
            return Err(Failure::new(OcStatus::NullPointer, "out_json is null"));
        }
        if samples == 0 {
            return Err(Failure::new(OcStatus::InvalidArgument, "samples must be positive"));
        }
        let dim = m.0.dim();
        let sample_box = SampleBox::default_for(dim);
        let points = sample_points(&sample_box, samples, seed);
        let dirs = random_directions(dim, directions, seed);
        let mut report = m.0.analyze(&points, &dirs, &NumericPolicy::default());
        report.sampling = Some(SamplingSpec { lo: sample_box.lo, hi: sample_box.hi, samples, seed, directions });
        let json = CString::new(report.to_json()).map_err(|e| Failure::new(OcStatus::Internal, e.to_string()))?;
        *out_json = json.into_raw();
        Ok(())
    })
}
