use std::io::Write;
use std::process::{Command, Output, Stdio};

fn dmatch(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_dmatch"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn generate_spanner_and_analyze_it() {
    let g = dmatch(&["generate", "spanner"], "");
    assert_eq!(g.status.code(), Some(0));
    let line = stdout(&g);
    assert_eq!(line.lines().count(), 1);

    let a = dmatch(&["analyze", "--json"], &line);
    assert_eq!(a.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(stdout(&a).trim()).unwrap();
    assert_eq!(v["n"], 10);
    assert_eq!(v["params"]["nu"], 5);
    assert_eq!(v["params"]["lambda"], 8);
    assert_eq!(v["params"]["mu"], 4);
    assert_eq!(v["params"]["ratio"], "4/5");
    assert_eq!(v["skeletonK"], 1);
    assert!(v.get("elapsedMicros").is_none());
}

#[test]
fn generate_counts() {
    let count = |n: &str| {
        stdout(&dmatch(&["generate", "all-connected", n], ""))
            .lines()
            .count()
    };
    assert_eq!(count("2"), 1);
    assert_eq!(count("4"), 6);
    let refused = dmatch(&["generate", "all-connected", "9"], "");
    assert_eq!(refused.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&refused.stderr).contains("n <= 8"));
}

#[test]
fn verify_exit_status_follows_failures() {
    let ok = dmatch(
        &[
            "verify",
            "--checks",
            "pec-identities,lemma-4.2,lemma-4.3",
            "--all-connected",
            "5",
        ],
        "",
    );
    assert_eq!(ok.status.code(), Some(0));
    let summary = String::from_utf8_lossy(&ok.stderr);
    assert!(summary.contains("pec-identities"));

    let failing = dmatch(&["verify", "--checks", "lemma-6.1", "--json"], "D@{\n");
    assert_eq!(failing.status.code(), Some(1));
    assert!(stdout(&failing).contains(r#""lemma-6.1":"fail""#));
}

#[test]
fn usage_and_input_errors_exit_2() {
    assert_eq!(
        dmatch(&["verify", "--checks", "lemma-9"], "A_\n")
            .status
            .code(),
        Some(2)
    );
    assert_eq!(dmatch(&["frobnicate"], "").status.code(), Some(2));
    assert_eq!(
        dmatch(&["analyze", "--input", "/nonexistent/graphs.g6"], "")
            .status
            .code(),
        Some(2)
    );

    let bad = dmatch(&["analyze", "--json"], "A_\nC~x\nBw\n");
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("line 2"));
    assert_eq!(stdout(&bad), "");

    let kept = dmatch(&["analyze", "--json", "--keep-going"], "A_\nC~x\nBw\n");
    assert_eq!(kept.status.code(), Some(2));
    assert_eq!(stdout(&kept).lines().count(), 2);
    assert!(String::from_utf8_lossy(&kept.stderr).contains("line 2"));
}

#[test]
fn conjecture_always_exits_0() {
    let o = dmatch(&["conjecture"], "C]\n");
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["applicable"], false);
    assert!(String::from_utf8_lossy(&o.stderr).contains("applicable"));

    let spanner = stdout(&dmatch(&["generate", "spanner"], ""));
    let o = dmatch(&["conjecture", "--json"], &spanner);
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["applicable"], true);
    assert_eq!(v["holds"], true);
}

#[test]
fn jobs_do_not_change_output() {
    let args = ["verify", "--json", "--random", "8,0.4,60,11"];
    let one = dmatch(&[&args[..], &["--jobs", "1"]].concat(), "");
    let four = dmatch(&[&args[..], &["--jobs", "4"]].concat(), "");
    assert_eq!(one.stdout, four.stdout);
    assert_eq!(stdout(&one).lines().count(), 60);
}

#[test]
fn budgets_turn_into_skips() {
    let o = dmatch(
        &["verify", "--json", "--max-edges", "3", "--checks", "all"],
        "C~\n",
    );
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert!(v["skipped"].as_str().unwrap().starts_with("budget"));
    assert_eq!(v["verdicts"]["thm-5.3"], "skip");
}

#[test]
fn strict_viii_is_accepted() {
    let spanner = stdout(&dmatch(&["generate", "spanner"], ""));
    let o = dmatch(
        &["verify", "--json", "--strict-viii", "--checks", "thm-5.3"],
        &spanner,
    );
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
}
