use std::ffi::{c_char, CStr, CString};
use std::path::{Path, PathBuf};
use std::process::Command;
use std::ptr;

use bc1_jacobi_ffi::*;

unsafe fn take_string(s: *mut c_char) -> String {
    assert!(!s.is_null());
    let out = CStr::from_ptr(s).to_str().unwrap().to_string();
    bc1_string_free(s);
    out
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(bc1_last_error_message()) }.to_str().unwrap().to_string()
}

#[test]
fn family_e_matches_known_coefficients() {
    unsafe {
        let mut fam = ptr::null_mut();
        assert_eq!(bc1_family_new(1, 1, &mut fam), Bc1Status::Ok);
        let mut e = ptr::null_mut();
        assert_eq!(bc1_family_e(fam, -1, &mut e), Bc1Status::Ok);
        assert_eq!(bc1_laurent_len(e), 3);
        let mut terms = Vec::new();
        for i in 0..3 {
            let (mut exp, mut coeff) = (0i64, ptr::null_mut());
            assert_eq!(bc1_laurent_term(e, i, &mut exp, &mut coeff), Bc1Status::Ok);
            terms.push((exp, take_string(coeff)));
        }
        assert_eq!(terms, vec![(-1, "1".into()), (0, "2/5".into()), (1, "3/5".into())]);
        let mut holds = false;
        assert_eq!(bc1_family_eigen_check(fam, -1, &mut holds), Bc1Status::Ok);
        assert!(holds);
        assert!((bc1_laurent_eval(e, 1.0) - 2.0).abs() < 1e-15);
        bc1_laurent_free(e);
        bc1_family_free(fam);
    }
}

#[test]
fn laurent_building_and_operators() {
    unsafe {
        let p = bc1_laurent_new();
        assert_eq!(bc1_laurent_add_term(p, 1, 1, 1), Bc1Status::Ok);
        let mut image = ptr::null_mut();
        assert_eq!(bc1_cherednik_apply(0, 0, p, &mut image), Bc1Status::Ok);
        assert_eq!(take_string(bc1_laurent_to_string(image)), take_string(bc1_laurent_to_string(p)));
        let one = bc1_laurent_new();
        assert_eq!(bc1_laurent_add_term(one, 0, 1, 1), Bc1Status::Ok);
        let mut pair = ptr::null_mut();
        assert_eq!(bc1_ct_pair(1, 1, one, one, &mut pair), Bc1Status::Ok);
        assert!(!take_string(pair).is_empty());
        assert_eq!(bc1_ct_pair(1, 1, p, one, &mut pair), Bc1Status::Ok);
        assert_eq!(take_string(pair), "-1/4");
        assert_eq!(bc1_laurent_add_term(p, 0, 1, 4), Bc1Status::Ok);
        assert_eq!(bc1_ct_pair(1, 1, p, one, &mut pair), Bc1Status::Ok);
        assert_eq!(take_string(pair), "0");
        bc1_laurent_free(image);
        bc1_laurent_free(one);
        bc1_laurent_free(p);
    }
}

#[test]
fn errors_are_reported() {
    unsafe {
        let mut fam = ptr::null_mut();
        assert_eq!(bc1_family_new(-1, 1, &mut fam), Bc1Status::InvalidMultiplicity);
        assert!(fam.is_null());
        assert!(!last_error().is_empty());
        assert_eq!(bc1_family_new(1, 1, ptr::null_mut()), Bc1Status::NullPointer);
        let p = bc1_laurent_new();
        assert_eq!(bc1_laurent_add_term(p, 0, 1, 0), Bc1Status::InvalidArgument);
        let (mut exp, mut coeff) = (0, ptr::null_mut());
        assert_eq!(bc1_laurent_term(p, 0, &mut exp, &mut coeff), Bc1Status::InvalidArgument);
        bc1_laurent_free(p);
        let fam_tag = CString::new("Q").unwrap();
        let mut out = ptr::null_mut();
        assert_eq!(bc1_compute_json(fam_tag.as_ptr(), 1, 1, 0, &mut out), Bc1Status::InvalidArgument);
        let mut fam = ptr::null_mut();
        assert_eq!(bc1_family_new(1, 1, &mut fam), Bc1Status::Ok);
        assert!(last_error().is_empty());
        bc1_family_free(fam);
        bc1_family_free(ptr::null_mut());
        bc1_laurent_free(ptr::null_mut());
        bc1_string_free(ptr::null_mut());
    }
}

#[test]
fn compute_json_and_verify() {
    unsafe {
        let tag = CString::new("M").unwrap();
        let mut out = ptr::null_mut();
        assert_eq!(bc1_compute_json(tag.as_ptr(), 1, 1, 0, &mut out), Bc1Status::Ok);
        let json: serde_json::Value = serde_json::from_str(&take_string(out)).unwrap();
        assert_eq!(json["family"], "M");
        assert_eq!(json["coeffs"].as_array().unwrap().len(), 3);

        let suite = CString::new("eigen").unwrap();
        let (mut passed, mut total) = (0usize, 0usize);
        assert_eq!(bc1_verify(suite.as_ptr(), 2, 1, &mut passed, &mut total), Bc1Status::Ok);
        assert!(total > 0);
        assert_eq!(passed, total);

        let bad = CString::new("nope").unwrap();
        assert_ne!(bc1_verify(bad.as_ptr(), 1, 1, &mut passed, &mut total), Bc1Status::Ok);
        let version = CStr::from_ptr(bc1_version()).to_str().unwrap();
        assert_eq!(version, env!("CARGO_PKG_VERSION"));
    }
}

fn header() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("include/bc1_jacobi.h")
}

#[test]
fn header_declares_every_entry_point() {
    let text = std::fs::read_to_string(header()).unwrap();
    for name in [
        "bc1_last_error_message",
        "bc1_version",
        "bc1_string_free",
        "bc1_family_new",
        "bc1_family_free",
        "bc1_family_e",
        "bc1_family_eigen_check",
        "bc1_laurent_new",
        "bc1_laurent_free",
        "bc1_laurent_add_term",
        "bc1_laurent_len",
        "bc1_laurent_term",
        "bc1_laurent_to_string",
        "bc1_laurent_eval",
        "bc1_cherednik_apply",
        "bc1_ct_pair",
        "bc1_compute_json",
        "bc1_verify",
        "typedef struct Bc1Family Bc1Family",
        "typedef struct Bc1Laurent Bc1Laurent",
        "BC1_STATUS_OK = 0",
        "BC1_STATUS_IDENTITY_FAILED = 10",
    ] {
        assert!(text.contains(name), "header lacks {name}");
    }
}

const C_SMOKE: &str = r#"
#include <stdio.h>
#include <string.h>
#include "bc1_jacobi.h"

int main(void) {
    Bc1Family *fam = NULL;
    Bc1Laurent *e = NULL;
    if (bc1_family_new(1, 1, &fam) != BC1_STATUS_OK) return 1;
    if (bc1_family_e(fam, 1, &e) != BC1_STATUS_OK) return 2;
    char *s = bc1_laurent_to_string(e);
    printf("%s\n", s);
    bc1_string_free(s);
    bc1_laurent_free(e);
    bc1_family_free(fam);
    if (bc1_family_new(-1, 0, &fam) != BC1_STATUS_INVALID_MULTIPLICITY) return 3;
    if (strlen(bc1_last_error_message()) == 0) return 4;
    return 0;
}
"#;

fn compiler() -> Option<String> {
    ["cc", "gcc", "clang"]
        .into_iter()
        .find(|c| Command::new(c).arg("--version").output().is_ok_and(|o| o.status.success()))
        .map(str::to_string)
}

fn shared_library() -> Option<PathBuf> {
    let exe = std::env::current_exe().ok()?;
    let profile = exe.parent()?.parent()?;
    let lib = profile.join("libbc1_jacobi_ffi.so");
    lib.exists().then_some(lib)
}

#[test]
fn c_program_compiles_and_runs() {
    let Some(cc) = compiler() else {
        eprintln!("no C compiler found; skipping");
        return;
    };
    let dir = std::env::temp_dir().join(format!("bc1-ffi-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let src = dir.join("smoke.c");
    std::fs::write(&src, C_SMOKE).unwrap();
    let include = header().parent().unwrap().to_path_buf();

    let syntax = Command::new(&cc)
        .args(["-std=c99", "-Wall", "-Werror", "-fsyntax-only", "-I"])
        .arg(&include)
        .arg(&src)
        .output()
        .unwrap();
    assert!(syntax.status.success(), "{}", String::from_utf8_lossy(&syntax.stderr));

    if let Some(lib) = shared_library() {
        let libdir = lib.parent().unwrap();
        let bin = dir.join("smoke");
        let link = Command::new(&cc)
            .arg("-I")
            .arg(&include)
            .arg(&src)
            .arg("-L")
            .arg(libdir)
            .arg("-lbc1_jacobi_ffi")
            .arg("-o")
            .arg(&bin)
            .output()
            .unwrap();
        assert!(link.status.success(), "{}", String::from_utf8_lossy(&link.stderr));
        let run = Command::new(&bin).env("LD_LIBRARY_PATH", libdir).output().unwrap();
        assert!(run.status.success(), "exit {:?}", run.status.code());
        assert_eq!(String::from_utf8_lossy(&run.stdout).trim(), "z + 1/4");
    } else {
        eprintln!("shared library not built; link step skipped");
    }
    std::fs::remove_dir_all(dir).unwrap();
}
