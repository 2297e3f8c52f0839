use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn bench(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_burgers-bench"))
        .args(args)
        .output()
        .expect("binary runs")
}

#[test]
fn csv_to_stdout() {
    let out = bench(&["--case", "1", "--np", "17"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next(),
        Some("time,x,numeric,exact,abs_err,rel_err,ifdm,bem")
    );
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 15);
    assert!(rows[0].starts_with("0.05,0.1,"));
    assert!(rows[0].ends_with(",0.17832,0.17759"));
}

#[test]
fn markdown_table() {
    let out = bench(&[
        "--case", "2", "--re", "10", "--np", "9,33", "--format", "md",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("| IFDM | 0.5 | 0.11328 |"));
    assert!(text.contains("| This solver (N_p=9) |"));
    assert!(text.contains("| BEM | 1.65e-3 | 2.99e-3 | 4.00e-3 |"));
}

#[test]
fn files_are_deterministic() {
    let a = tempfile::tempdir().unwrap();
    let b = tempfile::tempdir().unwrap();
    for dir in [a.path(), b.path()] {
        let out = bench(&[
            "--case",
            "2",
            "--np",
            "17",
            "--profiles",
            "--out",
            dir.to_str().unwrap(),
        ]);
        assert_eq!(
            out.status.code(),
            Some(0),
            "{}",
            String::from_utf8_lossy(&out.stderr)
        );
    }
    let names = |d: &Path| {
        let mut v: Vec<String> = fs::read_dir(d)
            .unwrap()
            .map(|e| e.unwrap().file_name().into_string().unwrap())
            .collect();
        v.sort();
        v
    };
    assert_eq!(names(a.path()), names(b.path()));
    assert_eq!(names(a.path()).len(), 4);
    for name in names(a.path()) {
        assert_eq!(
            fs::read(a.path().join(&name)).unwrap(),
            fs::read(b.path().join(&name)).unwrap()
        );
    }
    let profile = fs::read_to_string(a.path().join("case2_re1_np17_t0.1_profile.csv")).unwrap();
    assert_eq!(profile.lines().count(), 402);
}

#[test]
fn truncated_profiles_and_operator_dump() {
    let dir = tempfile::tempdir().unwrap();
    let out = bench(&[
        "--case",
        "1",
        "--np",
        "9",
        "--times",
        "0.1",
        "--truncate-level",
        "2",
        "--dump-operators",
        "--profile-points",
        "11",
        "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let full = fs::read_to_string(dir.path().join("case1_re1_np9_t0.1_profile.csv")).unwrap();
    let coarse =
        fs::read_to_string(dir.path().join("case1_re1_np9_t0.1_trunc2_profile.csv")).unwrap();
    assert_eq!(full.lines().count(), 12);
    assert_ne!(full, coarse);
    let od = fs::read_to_string(dir.path().join("operators_np9/od.csv")).unwrap();
    assert_eq!(od.lines().count(), 9);
    assert_eq!(od.lines().next().unwrap().split(',').count(), 9);
}

#[test]
fn case_three_weak_diffusion_reports_properties() {
    let out = bench(&["--case", "3", "--np", "17", "--diffusion", "weak"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(
        text.starts_with("time,antisymmetry,centre,neumann_left,neumann_right,excess_variation\n")
    );
    assert_eq!(text.lines().count(), 4);
}

#[test]
fn divergence_exit_code() {
    // The projected second derivative leaves the steady Neumann shock
    // undamped at mesh scale, and the run blows up before t = 1.
    let out = bench(&["--case", "3", "--np", "17"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("diverged"));
}

#[test]
fn io_exit_code() {
    let dir = tempfile::tempdir().unwrap();
    let blocker = dir.path().join("file");
    fs::write(&blocker, "x").unwrap();
    let out = bench(&[
        "--case",
        "1",
        "--np",
        "5",
        "--out",
        blocker.join("sub").to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn usage_errors() {
    assert_eq!(bench(&["--case", "4"]).status.code(), Some(1));
    assert_eq!(bench(&["--case", "1", "--np", "12"]).status.code(), Some(1));
    assert_eq!(bench(&["--case", "1", "--profiles"]).status.code(), Some(1));
    assert_eq!(bench(&["--help"]).status.code(), Some(0));
}
