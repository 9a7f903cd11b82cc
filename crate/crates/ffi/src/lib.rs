//! C interface to the `nochka` command layer.
//!
//! Scenes are opaque handles created from JSON text. Every command writes its
//! JSON report to `*out_json` (free it with `nochka_string_free`) and returns a
//! status whose values 0..=3 match the command-line exit codes.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use nochka::cli::{self, CommandOutput, Mode, Overrides};
use nochka::scene::Scene;

/// Opaque scene handle.
pub struct NochkaScene {
    scene: Scene,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NochkaStatus {
    Ok = 0,
    Violation = 1,
    Hypothesis = 2,
    Input = 3,
    NullPointer = 4,
    Panic = 5,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NochkaMode {
    Exact = 0,
    Numeric = 1,
    Both = 2,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let c = CString::new(msg.into().replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

fn status_of(code: i32) -> NochkaStatus {
    match code {
        0 => NochkaStatus::Ok,
        1 => NochkaStatus::Violation,
        2 => NochkaStatus::Hypothesis,
        _ => NochkaStatus::Input,
    }
}

fn guarded(f: impl FnOnce() -> NochkaStatus) -> NochkaStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".into());
            set_error(format!("panic: {msg}"));
            NochkaStatus::Panic
        }
    }
}

/// Runs a command on a scene handle and hands the report to the caller.
unsafe fn run_command(
    scene: *const NochkaScene,
    out_json: *mut *mut c_char,
    command: impl FnOnce(&Scene) -> CommandOutput,
) -> NochkaStatus {
    guarded(|| {
        if scene.is_null() || out_json.is_null() {
            set_error("null pointer argument");
            return NochkaStatus::NullPointer;
        }
        *out_json = ptr::null_mut();
        let output = command(&(*scene).scene);
        if let Some(err) = output.json.get("error") {
            set_error(err["message"].as_str().unwrap_or("error"));
        }
        let text = CString::new(output.json_string()).expect("JSON has no interior nul");
        *out_json = text.into_raw();
        status_of(output.code)
    })
}

/// Parses a scene. On success `*out` owns a handle to release with `nochka_scene_free`.
///
/// # Safety
/// `json` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn nochka_scene_from_json(
    json: *const c_char,
    out: *mut *mut NochkaScene,
) -> NochkaStatus {
    guarded(|| {
        if json.is_null() || out.is_null() {
            set_error("null pointer argument");
            return NochkaStatus::NullPointer;
        }
        *out = ptr::null_mut();
        let text = match CStr::from_ptr(json).to_str() {
            Ok(t) => t,
            Err(e) => {
                set_error(format!("scene is not UTF-8: {e}"));
                return NochkaStatus::Input;
            }
        };
        match Scene::from_json(text) {
            Ok(scene) => {
                *out = Box::into_raw(Box::new(NochkaScene { scene }));
                NochkaStatus::Ok
            }
            Err(e) => {
                set_error(e.to_string());
                status_of(cli::exit_code_for(&e))
            }
        }
    })
}

/// # Safety
/// `scene` must come from `nochka_scene_from_json` and not be freed twice. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn nochka_scene_free(scene: *mut NochkaScene) {
    if !scene.is_null() {
        drop(Box::from_raw(scene));
    }
}

/// # Safety
/// `scene` must be a live handle and `out_json` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn nochka_check_position(
    scene: *const NochkaScene,
    out_json: *mut *mut c_char,
) -> NochkaStatus {
    run_command(scene, out_json, cli::cmd_check_position)
}

/// # Safety
/// `scene` must be a live handle and `out_json` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn nochka_weights(
    scene: *const NochkaScene,
    out_json: *mut *mut c_char,
) -> NochkaStatus {
    run_command(scene, out_json, cli::cmd_weights)
}

/// Numeric mode uses the default radii and slack constants unless the scene sets radii.
///
/// # Safety
/// `scene` must be a live handle and `out_json` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn nochka_verify(
    scene: *const NochkaScene,
    mode: NochkaMode,
    out_json: *mut *mut c_char,
) -> NochkaStatus {
    let mode = match mode {
        NochkaMode::Exact => Mode::Exact,
        NochkaMode::Numeric => Mode::Numeric,
        NochkaMode::Both => Mode::Both,
    };
    run_command(scene, out_json, |s| {
        cli::cmd_verify(s, mode, &Overrides::default())
    })
}

/// # Safety
/// `scene` must be a live handle and `out_json` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn nochka_ramification(
    scene: *const NochkaScene,
    out_json: *mut *mut c_char,
) -> NochkaStatus {
    run_command(scene, out_json, cli::cmd_ramification)
}

/// # Safety
/// `scene` must be a live handle and `out_json` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn nochka_unicity_threshold(
    scene: *const NochkaScene,
    out_json: *mut *mut c_char,
) -> NochkaStatus {
    run_command(scene, out_json, cli::cmd_unicity_threshold)
}

/// Releases a string returned through `out_json`. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn nochka_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message of the last failed call on this thread, or null. Valid until the next call.
#[no_mangle]
pub extern "C" fn nochka_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn nochka_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}
