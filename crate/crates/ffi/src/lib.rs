//! C interface to the `hypertoric` library.
//!
//! Every function returns an [`HtStatus`]. On failure a message is kept per
//! thread and can be read with [`ht_last_error`]. Strings handed out by the
//! library must be released with [`ht_string_free`], arrangements with
//! [`ht_arrangement_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use hypertoric::arrangement::{is_smooth, torus_data};
use hypertoric::quotient::{core, verify_covering};
use hypertoric::render::render_svg;
use hypertoric::stability::{hk_semistable_numeric, toric_semistable_numeric};
use hypertoric::{io, Arrangement, Error, Guard, SmoothArrangement, SupportPattern};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HtStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    InvalidInput = 3,
    NotSmooth = 4,
    EmptyCore = 5,
    GuardExceeded = 6,
    Unsupported = 7,
    Panic = 8,
}

/// Opaque handle to a parsed arrangement.
pub struct HtArrangement {
    arrangement: Arrangement,
    smooth: Option<SmoothArrangement>,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn fail(status: HtStatus, msg: impl Into<String>) -> HtStatus {
    set_error(msg.into());
    status
}

impl From<Error> for HtStatus {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::NotSmooth { .. } => HtStatus::NotSmooth,
            Error::EmptyCore => HtStatus::EmptyCore,
            Error::GuardExceeded { .. } => HtStatus::GuardExceeded,
            Error::RenderDimension(_) => HtStatus::Unsupported,
            _ => HtStatus::InvalidInput,
        };
        fail(status, e.to_string())
    }
}

fn run(f: impl FnOnce() -> Result<(), HtStatus>) -> HtStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => HtStatus::Ok,
        Ok(Err(s)) => s,
        Err(_) => fail(HtStatus::Panic, "internal panic"),
    }
}

unsafe fn handle<'a>(h: *const HtArrangement) -> Result<&'a HtArrangement, HtStatus> {
    h.as_ref().ok_or_else(|| fail(HtStatus::NullPointer, "null arrangement"))
}

unsafe fn text<'a>(s: *const c_char) -> Result<&'a str, HtStatus> {
    if s.is_null() {
        return Err(fail(HtStatus::NullPointer, "null string"));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| fail(HtStatus::InvalidUtf8, "string is not UTF-8"))
}

unsafe fn write<T>(out: *mut T, v: T) -> Result<(), HtStatus> {
    if out.is_null() {
        return Err(fail(HtStatus::NullPointer, "null output pointer"));
    }
    out.write(v);
    Ok(())
}

fn smooth(h: &HtArrangement) -> Result<&SmoothArrangement, HtStatus> {
    h.smooth
        .as_ref()
        .ok_or_else(|| fail(HtStatus::NotSmooth, "arrangement is not smooth"))
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s).expect("library output has no nul bytes").into_raw()
}

/// Parses an arrangement file from a NUL-terminated JSON string.
///
/// # Safety
/// `json` must be a valid C string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn ht_arrangement_from_json(json: *const c_char, out: *mut *mut HtArrangement) -> HtStatus {
    run(|| {
        let arrangement = io::parse(text(json)?.as_bytes())?;
        let smooth = is_smooth(&arrangement)
            .then(|| SmoothArrangement::new(arrangement.clone()))
            .transpose()?;
        let boxed = Box::new(HtArrangement { arrangement, smooth });
        write(out, Box::into_raw(boxed))
    })
}

/// # Safety
/// `h` must come from [`ht_arrangement_from_json`] and not be freed yet, or be null.
#[no_mangle]
pub unsafe extern "C" fn ht_arrangement_free(h: *mut HtArrangement) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// Ambient dimension `n` and number of hyperplanes `d`.
///
/// # Safety
/// `h` must be a live handle; `n` and `d` writable pointers.
#[no_mangle]
pub unsafe extern "C" fn ht_arrangement_dims(h: *const HtArrangement, n: *mut usize, d: *mut usize) -> HtStatus {
    run(|| {
        let a = &handle(h)?.arrangement;
        write(n, a.dim())?;
        write(d, a.len())
    })
}

/// # Safety
/// `h` must be a live handle; `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn ht_arrangement_is_smooth(h: *const HtArrangement, out: *mut bool) -> HtStatus {
    run(|| write(out, handle(h)?.smooth.is_some()))
}

/// Number of compact core components.
///
/// # Safety
/// `h` must be a live handle; `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn ht_core_count(h: *const HtArrangement, out: *mut usize) -> HtStatus {
    run(|| write(out, core(smooth(handle(h)?)?, Guard::Default)?.len()))
}

/// Hyperkähler semi-stability of a pattern over `z`, `w`, `0`, `*`.
///
/// # Safety
/// `h` must be a live handle, `pattern` a valid C string, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ht_hk_semistable(h: *const HtArrangement, pattern: *const c_char, out: *mut bool) -> HtStatus {
    run(|| {
        let a = &handle(h)?.arrangement;
        let p: SupportPattern = text(pattern)?.parse()?;
        write(out, hk_semistable_numeric(&torus_data(a)?, &p)?.semistable)
    })
}

/// Toric semi-stability of the point whose nonzero coordinates are the
/// 0-based indices in `support[0..len]`.
///
/// # Safety
/// `h` must be a live handle, `support` readable for `len` entries (or null
/// when `len` is 0), `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ht_toric_semistable(
    h: *const HtArrangement,
    support: *const usize,
    len: usize,
    out: *mut bool,
) -> HtStatus {
    run(|| {
        let a = &handle(h)?.arrangement;
        let idx = if len == 0 {
            &[][..]
        } else if support.is_null() {
            return Err(fail(HtStatus::NullPointer, "null support"));
        } else {
            std::slice::from_raw_parts(support, len)
        };
        write(out, toric_semistable_numeric(&torus_data(a)?, idx)?.semistable)
    })
}

/// Whether the compact charts cover the quotient. Fails with
/// `HT_STATUS_EMPTY_CORE` when there is no compact chart.
///
/// # Safety
/// `h` must be a live handle; `covered` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn ht_verify_covering(h: *const HtArrangement, covered: *mut bool) -> HtStatus {
    run(|| write(covered, verify_covering(smooth(handle(h)?)?, Guard::Default)?.covered))
}

/// The full JSON report. Release with [`ht_string_free`].
///
/// # Safety
/// `h` must be a live handle; `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn ht_report_json(h: *const HtArrangement, out: *mut *mut c_char) -> HtStatus {
    run(|| {
        let r = io::report(&handle(h)?.arrangement, Guard::Default, &[])?;
        write(out, into_c_string(r.to_json()))
    })
}

/// SVG picture for `n <= 2`. Release with [`ht_string_free`].
///
/// # Safety
/// `h` must be a live handle; `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn ht_render_svg(h: *const HtArrangement, out: *mut *mut c_char) -> HtStatus {
    run(|| write(out, into_c_string(render_svg(&handle(h)?.arrangement)?)))
}

/// # Safety
/// `s` must come from this library and not be freed yet, or be null.
#[no_mangle]
pub unsafe extern "C" fn ht_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message of the last failed call on this thread, or null. Valid until the
/// next call into the library from the same thread.
#[no_mangle]
pub extern "C" fn ht_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}
