//! Builds a small C program against the generated header and the static
//! library, then runs it.

use std::path::{Path, PathBuf};
use std::process::Command;

const PROGRAM: &str = r#"
#include <stdio.h>
#include <string.h>
#include "corz.h"

static int check(int ok, const char *what) {
    if (!ok) {
        fprintf(stderr, "failed: %s (%s)\n", what, corz_last_error() ? corz_last_error() : "");
    }
    return ok ? 0 : 1;
}

int main(void) {
    int bad = 0;
    char *s = NULL;

    bad += check(corz_count_p(100, &s) == CORZ_STATUS_OK && strcmp(s, "190569292") == 0, "p(100)");
    corz_string_free(s);

    bad += check(corz_inv_alpha(11, &s) == CORZ_STATUS_OK && strcmp(s, "1275") == 0, "inv alpha");
    corz_string_free(s);

    size_t parts[] = {5, 4, 1};
    CorzPartition *lam = NULL;
    bad += check(corz_partition_new(parts, 3, &lam) == CORZ_STATUS_OK, "partition");
    bool core = false;
    bad += check(corz_is_core(lam, 11, &core) == CORZ_STATUS_OK && core, "is core");

    CorzAbacus *ab = NULL;
    bad += check(corz_to_abacus(lam, 7, &ab) == CORZ_STATUS_NOT_A_CORE, "not a 7-core");
    bad += check(corz_last_error() != NULL, "error message");

    CorzPartition *mu = NULL;
    bad += check(corz_partition_parse("(7,3)", &mu) == CORZ_STATUS_OK, "parse");
    bad += check(corz_mn_character(lam, mu, &s) == CORZ_STATUS_OK, "character");
    corz_string_free(s);

    corz_partition_free(lam);
    corz_partition_free(mu);
    return bad;
}
"#;

fn target_dir() -> PathBuf {
    // <target>/<profile>/deps/<this test>
    let exe = std::env::current_exe().unwrap();
    exe.parent().unwrap().parent().unwrap().to_path_buf()
}

fn have_cc() -> bool {
    Command::new("cc").arg("--version").output().is_ok()
}

#[test]
fn header_declares_the_api() {
    let header = Path::new(env!("CARGO_MANIFEST_DIR")).join("include/corz.h");
    let text = std::fs::read_to_string(header).unwrap();
    for name in [
        "typedef struct CorzPartition CorzPartition;",
        "typedef struct CorzAbacus CorzAbacus;",
        "CORZ_STATUS_NOT_A_CORE",
        "corz_string_free",
        "corz_last_error",
        "corz_count_cores",
        "corz_mn_character",
        "corz_z_exact",
    ] {
        assert!(text.contains(name), "missing {name}");
    }
}

#[test]
fn c_program_links_and_runs() {
    if !have_cc() {
        eprintln!("no C compiler on PATH; skipping");
        return;
    }
    let lib = target_dir().join("libcorz_ffi.a");
    assert!(lib.exists(), "static library not built at {}", lib.display());

    let work = tempfile_dir();
    let src = work.join("smoke.c");
    let bin = work.join("smoke");
    std::fs::write(&src, PROGRAM).unwrap();
    let include = Path::new(env!("CARGO_MANIFEST_DIR")).join("include");
    let status = Command::new("cc")
        .args(["-std=c99", "-Wall", "-Werror", "-o"])
        .arg(&bin)
        .arg(&src)
        .arg("-I")
        .arg(&include)
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm"])
        .status()
        .unwrap();
    assert!(status.success(), "C build failed");
    let run = Command::new(&bin).output().unwrap();
    assert!(run.status.success(), "{}", String::from_utf8_lossy(&run.stderr));
}

fn tempfile_dir() -> PathBuf {
    let dir = std::env::temp_dir().join(format!("corz-ffi-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}
