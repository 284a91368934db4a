use std::process::{Command, Output};

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lierealize"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn heisenberg_spec() -> String {
    format!("sc:{}/fixtures/heisenberg.sc:2", env!("CARGO_MANIFEST_DIR"))
}

#[test]
fn basis_two_letters() {
    let o = bin(&["basis", "xy", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("words: 5\n"));
    assert!(out.contains("dimensions: 2/1/2\n"));
}

#[test]
fn basis_json() {
    let o = bin(&["--format", "json", "basis", "a,b,c", "2"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["dimensions"], serde_json::json!([3, 3]));
    assert_eq!(v["words"][3]["bracketing"], "[a,b]");
}

#[test]
fn bch_prints_canonical_form() {
    let o = bin(&["bch", "free:xy:2", "x", "y"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "x + y + 1/2*[x,y]\n");
    assert_eq!(stdout(&bin(&["bch", "--table", "1"])), "x + y\n");
}

#[test]
fn bch_output_parses_back() {
    let first = stdout(&bin(&["bch", "free:xy:3", "x + [x,y]", "-1*y"]));
    let again = stdout(&bin(&["bch", "free:xy:3", first.trim(), "0"]));
    assert_eq!(first, again);
}

#[test]
fn bch_on_heisenberg_and_abelian() {
    assert_eq!(stdout(&bin(&["bch", &heisenberg_spec(), "x", "y"])), "x + y + 1/2*z\n");
    assert_eq!(stdout(&bin(&["bch", "abelian:2", "e1", "e1 + e2"])), "2*e1 + e2\n");
}

#[test]
fn bch_json_mirrors_text() {
    let o = bin(&["--format", "json", "bch", "free:xy:2", "x", "y"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["product"], "x + y + 1/2*[x,y]");
    assert_eq!(v["algebra"], "free:xy:2");
}

#[test]
fn cap_flag_overrides_algebra_cap() {
    let o = bin(&["--cap", "3", "bch", "free:xy:2", "x", "y"]);
    assert_eq!(stdout(&o), "x + y + 1/2*[x,y] + 1/12*[x,[x,y]] + 1/12*[[x,y],y]\n");
}

#[test]
fn bernoulli_subcommand() {
    assert_eq!(
        stdout(&bin(&["bernoulli", "free:xy:3", "x", "y"])),
        "y - 1/2*[x,y] + 1/12*[x,[x,y]]\n"
    );
    let numbers = stdout(&bin(&["bernoulli", "--numbers", "4"]));
    assert_eq!(numbers, "B_0 = 1\nB_1 = -1/2\nB_2 = 1/6\nB_3 = 0\nB_4 = -1/30\n");
}

#[test]
fn iso_check_exit_codes() {
    let ok = bin(&["iso-check", "abelian:3", "--dims", "3", "--samples", "10", "--seed", "7"]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(stdout(&ok).ends_with("result: PASS\n"));
    let bad = bin(&["iso-check", "abelian:3", "--dims", "3", "--samples", "10", "--corrupt", "psi"]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(stdout(&bad).ends_with("result: FAIL\n"));
}

#[test]
fn iso_check_json() {
    let o = bin(&["--format", "json", "iso-check", &heisenberg_spec(), "--dims", "2", "--samples", "5"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["failures"], serde_json::json!([]));
    assert_eq!(v["n_max"], 2);
}

#[test]
fn simplicial_check_exit_codes() {
    let ok = bin(&["simplicial-check", "free:xy:3", "--dims", "3", "--samples", "5"]);
    assert_eq!(ok.status.code(), Some(0), "{}", stdout(&ok));
    let bad = bin(&["simplicial-check", "free:xy:3", "--dims", "3", "--samples", "5", "--corrupt", "face"]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(stdout(&bad).contains("VIOLATION"));
}

#[test]
fn output_is_deterministic() {
    let args = ["iso-check", "free:xy:3", "--dims", "3", "--samples", "5", "--seed", "9"];
    assert_eq!(bin(&args).stdout, bin(&args).stdout);
    let json = ["--format", "json", "simplicial-check", "abelian:2", "--dims", "2", "--samples", "3"];
    assert_eq!(bin(&json).stdout, bin(&json).stdout);
}

#[test]
fn invalid_input_exits_two_without_output() {
    for args in [
        &["basis", "", "3"][..],
        &["basis", "xx", "3"],
        &["bch", "free:xy:2", "x", "[x,"],
        &["bch", "free:xy:2", "x", "q"],
        &["bch", "lie:3", "x", "y"],
        &["iso-check", "sc:/nonexistent.sc:2"],
        &["iso-check", "abelian:3", "--dims", "0"],
        &["frobnicate"],
        &["--format", "yaml", "basis", "xy", "2"],
    ] {
        let o = bin(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(o.stdout.is_empty(), "{args:?}");
        assert!(!o.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn non_nilpotent_structure_constants_are_rejected() {
    let dir = std::env::temp_dir().join(format!("lierealize-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("sl2.sc");
    std::fs::write(&path, "generators: e, f, h\n[e,f] = h\n[h,e] = 2*e\n[h,f] = -2*f\n").unwrap();
    let o = bin(&["bch", &format!("sc:{}:4", path.display()), "e", "f"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(o.stdout.is_empty());
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn library_entry_point_matches_binary() {
    let args = ["lierealize", "bch", "free:xy:3", "x", "y"];
    let out = lierealize::cli::run(args);
    assert_eq!(out.code, 0);
    assert_eq!(out.stdout.as_bytes(), bin(&args[1..]).stdout.as_slice());
}
