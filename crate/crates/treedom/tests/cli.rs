use std::io::Write;
use std::process::{Command, Stdio};

use treedom::cli::report_text;
use treedom::random::random_tree;
use treedom::run;
use treedom_core::format::to_edge_list;
use treedom_core::generators::double_star;
use treedom_core::solvers::InvariantReport;

struct Output {
    code: i32,
    stdout: String,
    stderr: String,
}

fn treedom(args: &[&str], stdin: &str) -> Output {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("treedom").chain(args.iter().copied());
    let code = run(argv, &mut stdin.as_bytes(), &mut out, &mut err);
    Output {
        code,
        stdout: String::from_utf8(out).unwrap(),
        stderr: String::from_utf8(err).unwrap(),
    }
}

#[test]
fn certify_double_star() {
    let input = to_edge_list(&double_star(3, 2).unwrap());
    let out = treedom(&["certify", "-"], &input);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert!(out.stdout.starts_with("base=P4\n"));
    assert_eq!(out.stdout.matches("O1 attach=").count(), 3);
}

#[test]
fn certify_non_member() {
    let out = treedom(&["certify", "-"], "0 1\n1 2\n2 3\n3 4\n4 5\n");
    assert_eq!((out.code, out.stdout.as_str()), (1, "NOT_MEMBER\n"));
}

#[test]
fn compute_p2_reports_undefined() {
    let out = treedom(&["compute", "-"], "0 1\n");
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("tcoi: undefined\n"), "{}", out.stdout);
    let json = treedom(&["compute", "-", "--output", "json"], "0 1\n");
    let v: serde_json::Value = serde_json::from_str(&json.stdout).unwrap();
    assert!(v["tcoi"].is_null());
    assert_eq!(v["gamma_t"], 2);
}

#[test]
fn check_results_and_exit_codes() {
    let p6 = "0 1\n1 2\n2 3\n3 4\n4 5\n";
    assert_eq!(treedom(&["check", "tl", "-"], p6).code, 0);
    let out = treedom(&["check", "tbeta", "-"], p6);
    assert_eq!((out.code, out.stdout.as_str()), (1, "false\n"));
    let star = treedom(&["check", "structural", "-"], "0 1\n0 2\n0 3\n");
    assert_eq!((star.code, star.stdout.as_str()), (1, "undefined\n"));
}

#[test]
fn usage_and_parse_errors() {
    assert_eq!(treedom(&["bogus"], "").code, 2);
    assert_eq!(treedom(&["compute"], "").code, 2);
    assert_eq!(treedom(&["compute", "-"], "0 1\n1 2\n2 0\n").code, 2);
    assert_eq!(treedom(&["compute", "/nonexistent/tree.txt"], "").code, 2);
    assert_eq!(treedom(&["generate", "qr", "--r", "1"], "").code, 2);
    assert_eq!(treedom(&["generate", "random", "--n", "5"], "").code, 2);
    assert_eq!(treedom(&["--help"], "").code, 0);
}

#[test]
fn generate_formats() {
    let g6 = treedom(&["generate", "path", "--n", "4", "--output", "graph6"], "");
    assert_eq!(g6.stdout, "Ch\n");
    let star = treedom(&["generate", "star", "--n", "4", "--output", "graph6"], "");
    assert_eq!(star.stdout, "Cs\n");
    let spider = treedom(&["generate", "spider", "--legs", "1,2,3"], "");
    assert_eq!(spider.code, 0);
    let out = treedom(&["compute", "-"], &spider.stdout);
    assert!(out.stdout.starts_with("n: 7\n"));
    let f = treedom(&["generate", "familyf", "--base", "-", "--u", "0", "--v", "1"], "0 1\n");
    let out = treedom(&["compute", "-"], &f.stdout);
    assert!(out.stdout.starts_with("n: 15\n"), "{}", out.stdout);
}

#[test]
fn qr_pipeline_through_binary() {
    let bin = env!("CARGO_BIN_EXE_treedom");
    let gen = Command::new(bin).args(["generate", "qr", "--r", "5"]).output().unwrap();
    assert!(gen.status.success());
    let mut child = Command::new(bin)
        .args(["compute", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(&gen.stdout).unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    assert!(String::from_utf8(out.stdout).unwrap().starts_with("n: 13\n"));
}

#[test]
fn json_matches_text_on_random_trees() {
    for seed in 0..100u64 {
        let n = 1 + (seed as usize * 7) % 30;
        let input = to_edge_list(&random_tree(n, seed).unwrap());
        let text = treedom(&["compute", "-"], &input);
        let json = treedom(&["compute", "-", "--output", "json"], &input);
        assert_eq!((text.code, json.code), (0, 0));
        let report: InvariantReport = serde_json::from_str(&json.stdout).unwrap();
        assert_eq!(report_text(&report), text.stdout, "seed {seed}");
        assert_eq!(report.n, n);
    }
}

#[test]
fn census_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.csv");
    let b = dir.path().join("b.csv");
    let ra = treedom(&["census", "--max-n", "8", "--out", a.to_str().unwrap()], "");
    let rb = treedom(
        &["census", "--max-n", "8", "--out", b.to_str().unwrap(), "--threads", "2"],
        "",
    );
    assert_eq!((ra.code, rb.code), (0, 0), "{}", ra.stderr);
    let ca = std::fs::read(&a).unwrap();
    assert_eq!(ca, std::fs::read(&b).unwrap());
    assert_eq!(ra.stdout, rb.stdout);
    let report: serde_json::Value = serde_json::from_str(&ra.stdout).unwrap();
    assert!(report["first_counterexample"].is_null());
    let failing = treedom(&["census", "--max-n", "9", "--out", a.to_str().unwrap()], "");
    assert_eq!(failing.code, 1);
    let report: serde_json::Value = serde_json::from_str(&failing.stdout).unwrap();
    assert_eq!(report["first_counterexample"]["graph6"], "HhDC?C@");
    let rows = String::from_utf8(ca).unwrap().lines().count() - 1;
    assert_eq!(rows, 1 + 2 + 3 + 6 + 11 + 23);
}

#[test]
fn verify_small_orders_hold() {
    let out = treedom(&["verify", "--max-n", "8"], "");
    assert_eq!(out.code, 0);
    assert!(out.stdout.ends_with("all theorems hold\n"), "{}", out.stdout);
}

#[test]
fn verify_to_twelve_reports_the_upper_counterexample() {
    let out = treedom(&["verify", "--max-n", "12"], "");
    assert_eq!(out.code, 1, "{}", out.stdout);
    assert!(
        out.stdout
            .contains("upper_characterization: checked 975, violations 69"),
        "{}",
        out.stdout
    );
    assert!(out.stdout.contains("private_support: checked 975, violations 0"));
    assert!(out.stdout.contains("VIOLATION: upper_characterization fails on n = 9"));
}
