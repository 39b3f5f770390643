use std::io::Write;
use std::process::Command;

use bircones::{OutputDocument, Payload, Subject};

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("bircones").chain(args.iter().copied());
    let code = bircones::run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn document(args: &[&str]) -> OutputDocument {
    let (code, out, err) = run(args);
    assert_eq!(code, 0, "stderr: {err}");
    serde_json::from_str(&out).unwrap()
}

fn binary() -> Command {
    Command::new(env!("CARGO_BIN_EXE_bircones"))
}

fn strings(rows: &[&[&str]]) -> Vec<Vec<String>> {
    rows.iter().map(|r| r.iter().map(|s| s.to_string()).collect()).collect()
}

#[test]
fn tl2_nef_rays() {
    let doc = document(&["tl", "cones", "--n", "2", "--which", "nef"]);
    assert_eq!(doc.schema_version, "1");
    assert_eq!((doc.n, doc.subject), (Some(2), Subject::Tl));
    let Payload::Cones { cones } = doc.payload else {
        panic!("expected cones");
    };
    assert_eq!(cones.len(), 1);
    assert_eq!(cones[0].basis, ["H", "D0+", "D0-"]);
    assert_eq!(
        cones[0].rays,
        strings(&[
            &["1", "-1", "-1"],
            &["1", "-1", "0"],
            &["1", "0", "-1"],
            &["1", "0", "0"]
        ])
    );
}

#[test]
fn tl3_curve_cone_counts() {
    let doc = document(&["tl", "cones", "--n", "3", "--which", "all"]);
    let Payload::Cones { cones } = doc.payload else {
        panic!("expected cones");
    };
    let counts: Vec<(String, usize)> = cones.iter().map(|c| (c.name.clone(), c.rays.len())).collect();
    let expected = [("eff", 6), ("nef", 8), ("mov", 16), ("ne", 7), ("mov1", 9)];
    assert_eq!(counts, expected.map(|(a, b)| (a.to_string(), b)));
    let mov1 = cones.iter().find(|c| c.name == "mov1").unwrap();
    assert_eq!(mov1.basis, ["l", "e0+", "e1+", "e0-", "e1-"]);
    assert!(mov1.rays.contains(&strings(&[&["1", "0", "0", "0", "0"]])[0]));
}

#[test]
fn conics2_anticanonical() {
    let doc = document(&["conics", "canonical", "--n", "2"]);
    let Payload::Classes { classes, checks } = doc.payload else {
        panic!("expected classes");
    };
    let k = classes.iter().find(|c| c.name == "-K").unwrap();
    assert_eq!(k.coords, ["1", "5/2", "3/4"]);
    let r = classes.iter().find(|c| c.name == "-K|Bl").unwrap();
    assert_eq!(r.coords, ["5", "-4", "-4"]);
    assert!(checks.values().all(|&v| v));
}

#[test]
fn classification_flags() {
    for (n, fano, weak) in [(5, true, true), (6, false, true), (7, false, false)] {
        let doc = document(&["conics", "classify", "--n", &n.to_string()]);
        let Payload::Classification(c) = doc.payload else {
            panic!("expected classification");
        };
        assert_eq!((c.is_fano, c.is_weak_fano), (fano, weak), "n = {n}");
    }
    let doc = document(&["tl", "classify", "--n", "2"]);
    let Payload::Classification(c) = doc.payload else {
        panic!("expected classification");
    };
    assert!(c.is_fano);
    assert_eq!(c.cox_generator_count, Some(7));
}

#[test]
fn tl_cox_generator_count() {
    let doc = document(&["tl", "cox", "--n", "3"]);
    let Payload::Cox {
        generator_count,
        columns,
        column_labels,
        ..
    } = doc.payload
    else {
        panic!("expected cox data");
    };
    assert_eq!(generator_count, 18);
    assert_eq!(columns.len(), 18);
    assert_eq!(column_labels.len(), 18);
}

#[test]
fn gkz_tl3_chambers() {
    let doc = document(&["gkz", "chambers", "--n", "3"]);
    let Payload::Chambers { walls, chambers, .. } = doc.payload else {
        panic!("expected chambers");
    };
    assert_eq!((walls, chambers), (36, 2770));
}

#[test]
fn gkz_config_file() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    write!(file, "[[1,0],[1,1],[0,1],[-1,2]]").unwrap();
    let path = file.path().to_str().unwrap().to_string();
    let path = path.as_str();
    let doc = document(&["gkz", "chambers", "--config-file", path]);
    assert_eq!(doc.n, None);
    let Payload::Chambers { walls, chambers, .. } = doc.payload else {
        panic!("expected chambers");
    };
    assert_eq!((walls, chambers), (4, 3));

    write!(file, "not json").unwrap();
    let (code, _, err) = run(&["gkz", "chambers", "--config-file", path]);
    assert_eq!(code, 2);
    assert!(err.contains("config file"));
}

#[test]
fn dims_tables() {
    let doc = document(&["dims", "rk", "--n", "4"]);
    let Payload::Table { rows, .. } = doc.payload else {
        panic!("expected table");
    };
    assert_eq!(
        rows,
        strings(&[&["4", "1", "10"], &["4", "2", "20"], &["4", "3", "10"]])
    );
}

#[test]
fn csv_headers() {
    let (code, out, _) = run(&["--format", "csv", "tl", "cones", "--n", "2", "--which", "eff"]);
    assert_eq!(code, 0);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("cone,H,D0+,D0-"));
    assert_eq!(lines.count(), 4);

    let (_, out, _) = run(&["gkz", "chambers", "--n", "2", "--format", "csv"]);
    assert!(out.starts_with("field,value\nwalls,8\nchambers,8\n"));
}

#[test]
fn json_round_trip_and_determinism() {
    for args in [
        &["tl", "cones", "--n", "3"][..],
        &["tl", "canonical", "--n", "4"],
        &["conics", "cones", "--n", "3"],
        &["to", "classify", "--n", "4"],
        &["dims", "osc", "--n", "5"],
        &["dims", "kontsevich", "--n", "3", "--d", "2", "--k", "1"],
    ] {
        let (code, first, _) = run(args);
        assert_eq!(code, 0, "{args:?}");
        let (_, second, _) = run(args);
        assert_eq!(first, second, "{args:?}");
        let doc: OutputDocument = serde_json::from_str(&first).unwrap();
        assert_eq!(doc.to_json(), first, "{args:?}");
    }
}

#[test]
fn usage_errors_exit_2() {
    let (code, out, err) = run(&["tl", "cones", "--bogus"]);
    assert_eq!(code, 2);
    assert!(out.is_empty());
    assert!(err.contains("Usage"));

    let (code, _, _) = run(&["gkz", "chambers"]);
    assert_eq!(code, 2);
    let (code, _, err) = run(&["tl", "canonical", "--n", "1"]);
    assert_eq!(code, 2);
    assert!(err.starts_with("error:"));
}

#[test]
fn help_goes_to_stdout() {
    let (code, out, err) = run(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("selftest"));
    assert!(err.is_empty());
}

#[test]
fn resource_bounds_exit_3() {
    let (code, out, err) = run(&["gkz", "chambers", "--n", "4"]);
    assert_eq!(code, 3);
    assert!(out.is_empty());
    assert!(err.contains("resource bound"));
    let (code, _, _) = run(&["tl", "cones", "--n", "7", "--which", "mov"]);
    assert_eq!(code, 3);
}

#[test]
fn binary_exit_codes() {
    let ok = binary().args(["conics", "canonical", "--n", "3"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    let bad = binary().args(["frobnicate"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
    assert!(!bad.stderr.is_empty());
    let bound = binary().args(["gkz", "chambers", "--n", "5"]).output().unwrap();
    assert_eq!(bound.status.code(), Some(3));
}

#[test]
fn thread_count_does_not_change_output() {
    let args = ["gkz", "chambers", "--n", "3"];
    let one = binary().env(bircones::THREADS_VAR, "1").args(args).output().unwrap();
    let two = binary().env(bircones::THREADS_VAR, "2").args(args).output().unwrap();
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, two.stdout);
    let zero = binary().env(bircones::THREADS_VAR, "0").args(args).output().unwrap();
    assert_eq!(zero.status.code(), Some(2));
}

#[test]
fn selftest_quick_passes() {
    let (code, out, _) = run(&["selftest", "--quick"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.lines().last().unwrap().ends_with(", 0 failed"));
    assert!(!out.contains("FAIL"));
}

#[test]
fn selftest_detects_corrupted_table() {
    let (code, out, _) = run(&["selftest", "--quick", "--corrupt-table"]);
    assert_eq!(code, 1);
    assert!(out.lines().any(|l| l.starts_with("FAIL duality nef")));
}
