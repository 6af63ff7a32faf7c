use std::io::Write;
use std::process::{Command, Output, Stdio};

fn lcd(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_lcd"))
        .args(args)
        .env_remove("LCD_TABLE_CACHE")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn lcd");
    if let Some(text) = stdin {
        child
            .stdin
            .take()
            .unwrap()
            .write_all(text.as_bytes())
            .unwrap();
    }
    drop(child.stdin.take());
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn check_reports_hull_dimension() {
    let o = lcd(&["check", "-"], Some("11\n"));
    assert!(o.status.success());
    assert_eq!(stdout(&o), "not LCD, hull dimension 1\n");

    let o = lcd(&["check", "-"], Some("11111\n"));
    assert_eq!(stdout(&o), "LCD\n");
}

#[test]
fn check_reads_files_and_json() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.txt");
    std::fs::write(&path, "# example\n100\n010\n001\n").unwrap();
    let o = lcd(&["--json", "check", path.to_str().unwrap()], None);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["lcd"], true);
    assert_eq!(v["hull_dimension"], 0);
}

#[test]
fn mindist_prints_parameters() {
    let o = lcd(&["mindist", "-"], Some("111100\n001111\n"));
    assert_eq!(stdout(&o), "[6,2,4]\n");
    let o = lcd(
        &["mindist", "--at-least", "5", "-"],
        Some("111100\n001111\n"),
    );
    assert_eq!(stdout(&o), "d < 5\n");
}

#[test]
fn construct_writes_sidecar() {
    let dir = tempfile::tempdir().unwrap();
    let sidecar = dir.path().join("code.json");
    let o = lcd(
        &[
            "construct",
            "--n",
            "7",
            "--k",
            "2",
            "--sidecar",
            sidecar.to_str().unwrap(),
        ],
        None,
    );
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().count(), 2);
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&sidecar).unwrap()).unwrap();
    assert_eq!(v["params"], serde_json::json!([7, 2, 4]));
    assert_eq!(v["lcd"], true);
    assert_eq!(v["source"], "dim2:6m+1");
}

#[test]
fn construct_codimension() {
    let o = lcd(&["construct", "--n", "8", "--codim", "2"], None);
    assert!(o.status.success());
    let rows: Vec<String> = stdout(&o).lines().map(str::to_string).collect();
    assert_eq!(rows.len(), 6);
    assert!(rows.iter().all(|r| r.ends_with("11")));
}

#[test]
fn prseq_and_attainability() {
    let o = lcd(&["prseq", "-"], Some("01\n10\n"));
    assert_eq!(stdout(&o), "1]01\n");
    let o = lcd(&["prseq", "--attainable", "0]010"], None);
    assert_eq!(stdout(&o), "not attainable\n");
    let o = lcd(&["prseq", "--attainable", "1]0101"], None);
    assert_eq!(stdout(&o), "attainable\n");
}

#[test]
fn subcode_certificate() {
    let o = lcd(&["--json", "subcode", "-"], Some("101\n010\n001\n"));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(
        v,
        serde_json::json!({"removed": [1], "sub_gen": ["010", "001"]})
    );
}

#[test]
fn search_commands() {
    let o = lcd(&["search-lcd", "--n", "9", "--k", "4"], None);
    assert!(stdout(&o).starts_with("LCD[9,4] = 4\n"));

    let o = lcd(
        &[
            "--json",
            "search-lcd",
            "--n",
            "9",
            "--k",
            "4",
            "--partition",
            "1/3",
            "--no-prune",
        ],
        None,
    );
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["k"], 4);
    assert!(v["strategy"].as_str().unwrap().contains("reduce"));

    let o = lcd(
        &["search-lcd", "--n", "9", "--k", "4", "--exact-d", "5"],
        None,
    );
    assert_eq!(stdout(&o), "no LCD [9,4,5] code\n");

    let o = lcd(&["search-lck", "--n", "8", "--d", "3"], None);
    assert!(stdout(&o).starts_with("LCK[8,3] = 4\n"));

    let o = lcd(&["oracle", "--n", "6", "--k", "3"], None);
    assert_eq!(stdout(&o), "LCD[6,3] = 2\n");
}

#[test]
fn search_budget_needs_force() {
    let o = lcd(
        &["search-lcd", "--n", "20", "--k", "10", "--no-reduce"],
        None,
    );
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("--force"));
}

#[test]
fn table_output_is_deterministic() {
    let args = ["table", "--kind", "lcd", "--max-n", "7", "--format", "json"];
    let a = lcd(&args, None);
    let b = lcd(
        &[
            "--threads",
            "1",
            "table",
            "--kind",
            "lcd",
            "--max-n",
            "7",
            "--format",
            "json",
        ],
        None,
    );
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);

    let o = lcd(
        &[
            "table", "--kind", "lcd", "--max-n", "3", "--format", "markdown",
        ],
        None,
    );
    assert_eq!(
        stdout(&o),
        "| n/k | 1 | 2 | 3 |\n|---|---|---|---|\n| 1 | 1 |  |  |\n| 2 | 1 | 1 |  |\n| 3 | 3 | 2 | 1 |\n"
    );
}

#[test]
fn table_uses_cache_directory() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().to_str().unwrap();
    let first = lcd(
        &[
            "--cache", cache, "table", "--kind", "lck", "--max-n", "5", "--format", "csv",
        ],
        None,
    );
    assert!(first.status.success());
    assert!(std::fs::read_dir(dir.path()).unwrap().count() >= 30);
    let second = lcd(
        &[
            "--cache", cache, "table", "--kind", "lck", "--max-n", "5", "--format", "csv",
        ],
        None,
    );
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn verify_conjecture_small() {
    let o = lcd(&["verify-conjecture", "--max-n", "7"], None);
    assert!(o.status.success());
    assert!(stdout(&o).contains("holds"));
}

#[test]
fn exit_codes() {
    assert_eq!(lcd(&["no-such-command"], None).status.code(), Some(2));
    assert_eq!(
        lcd(&["--threads", "0", "oracle", "--n", "2", "--k", "1"], None)
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        lcd(&["search-lcd", "--n", "x", "--k", "1"], None)
            .status
            .code(),
        Some(2)
    );
    assert_eq!(lcd(&["check", "-"], Some("1a\n")).status.code(), Some(1));
    assert_eq!(
        lcd(&["table", "--kind", "lcd", "--max-n", "13"], None)
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        lcd(&["prseq", "-"], Some("10\n00\n01\n")).status.code(),
        Some(1)
    );
    let o = lcd(&["--version"], None);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("lcd "));
}
