use std::process::{Command, Output};

fn corz(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_corz"))
        .args(args)
        .env_remove("CORZ_CACHE_DIR")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn count_values() {
    let cases: [(&[&str], &str); 8] = [
        (&["count", "p", "--n", "100"], "190569292"),
        (&["count", "p-regular", "--n", "6", "--ell", "5"], "10"),
        (&["count", "cores", "--n", "441", "--ell", "5"], ""),
        (&["count", "sigma", "--n", "6", "--ell", "5"], ""),
        (&["count", "delta", "--ell", "13"], "7"),
        (&["count", "inv-alpha", "--ell", "11"], "1275"),
        (&["count", "n-ell", "--ell", "3"], "16"),
        (&["count", "cores", "--n", "3", "--ell", "3"], "0"),
    ];
    for (args, want) in cases {
        let out = corz(args);
        assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
        if !want.is_empty() {
            assert_eq!(stdout(&out).trim(), want, "{args:?}");
        }
    }
    let cores = corz(&["count", "cores", "--n", "5", "--ell", "5"]);
    let sigma = corz(&["count", "sigma", "--n", "6", "--ell", "5"]);
    assert_eq!(stdout(&cores), stdout(&sigma));
}

#[test]
fn count_errors_exit_with_two() {
    for args in [
        &["count", "p"][..],
        &["count", "delta", "--ell", "3"],
        &["count", "inv-alpha", "--ell", "9"],
    ] {
        let out = corz(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(String::from_utf8_lossy(&out.stderr).starts_with("corz: "));
    }
}

#[test]
fn census_to_stdout() {
    let out = corz(&["census", "--ell", "3,5", "--n-min", "1", "--n-max", "6"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert!(lines[0].starts_with("n,ell,p_n"));
    assert_eq!(lines.len(), 1 + 12);
    assert!(lines[1].starts_with("1,3,1,"));
}

#[test]
fn census_json_and_cache_env() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("c");
    let out = Command::new(env!("CARGO_BIN_EXE_corz"))
        .args(["census", "--ell", "3", "--n-max", "5", "--format", "json"])
        .env("CORZ_CACHE_DIR", &cache)
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 5);
    assert_eq!(v[3]["p_n"], "5");
    assert!(cache.join("z-l3-n5.cache").exists());
}

#[test]
fn verify_reports_json() {
    let out = corz(&["verify", "constants"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["suite"], "constants");
    assert_eq!(v["passed"], true);

    let bad = corz(&["verify", "nope"]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("closed-forms"));
}

#[test]
fn asymptotics_table() {
    let out = corz(&["asymptotics", "--n-min", "50", "--n-max", "100", "--step", "50"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 3);
    assert!(lines[1].starts_with("50,204226,"));
}
