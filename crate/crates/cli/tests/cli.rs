//! End-to-end runs of the batch driver against the shipped example files.

use std::path::PathBuf;
use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_intt"))
}

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

#[test]
fn norm_reduces_the_connection_corner() {
    let out = bin()
        .args(["norm", data("sq_right_left.trm").to_str().unwrap()])
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.lines().next().unwrap().trim() == "left", "{}", stdout);
}

#[test]
fn check_accepts_a_constructor_and_elaborates_holes() {
    let out = bin()
        .args(["check", data("left_is_I.trm").to_str().unwrap()])
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let out = bin()
        .args(["check", data("ill_typed.trm").to_str().unwrap()])
        .output()
        .unwrap();
    // the holes cannot be filled from an interval variable: a parse-class
    // diagnostic on stderr and exit 3
    assert_eq!(out.status.code(), Some(3), "{}", String::from_utf8_lossy(&out.stdout));
    assert!(!out.stderr.is_empty());
}

#[test]
fn check_reports_mismatch_with_exit_one() {
    let out = bin()
        .args(["check", data("mismatch.trm").to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.contains("\"verdict\":\"no\""), "{}", stdout);
}

#[test]
fn morph_verifies_the_connection_map() {
    let out = bin()
        .args(["morph", data("sq_to_coe1.mor").to_str().unwrap()])
        .output()
        .unwrap();
    assert!(
        out.status.success(),
        "{}\n{}",
        String::from_utf8_lossy(&out.stdout),
        String::from_utf8_lossy(&out.stderr)
    );
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.lines().count() >= 4, "{}", stdout);
}

#[test]
fn model_validates_and_reports() {
    let out = bin()
        .args(["model", data("two_points.mod").to_str().unwrap()])
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stdout));
}

#[test]
fn homotopy_bundle_checks() {
    let out = bin()
        .args(["homotopy", data("refl_bundle.wit").to_str().unwrap()])
        .output()
        .unwrap();
    assert!(
        out.status.success(),
        "{}\n{}",
        String::from_utf8_lossy(&out.stdout),
        String::from_utf8_lossy(&out.stderr)
    );
}

#[test]
fn reports_are_byte_stable() {
    let run = || {
        bin()
            .args(["morph", data("sq_to_coe1.mor").to_str().unwrap()])
            .output()
            .unwrap()
            .stdout
    };
    assert_eq!(run(), run());
}

#[test]
fn usage_errors_exit_three() {
    let out = bin().args(["frobnicate"]).output().unwrap();
    assert_eq!(out.status.code(), Some(3));
    let out = bin().output().unwrap();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn weq_certificate_checks() {
    let out = bin()
        .args(["weq", data("weq_cert.wit").to_str().unwrap()])
        .output()
        .unwrap();
    assert!(
        out.status.success(),
        "{}\n{}",
        String::from_utf8_lossy(&out.stdout),
        String::from_utf8_lossy(&out.stderr)
    );
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.contains("supplied query set"), "{}", stdout);
}
