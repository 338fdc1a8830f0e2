use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn morse(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_morse"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    fs::write(&p, text).unwrap();
    p
}

const SPHERE: &str = "# boundary of a tetrahedron\ndim 2\n1 2 3\n1 2 4\n1 3 4\n2 3 4\n";

#[test]
fn single_vertex_gives_one_critical_line() {
    let dir = TempDir::new().unwrap();
    write(&dir, "point.txt", "7\n");
    let o = morse(&["max", "point.txt"], dir.path());
    assert!(o.status.success(), "{}", stderr(&o));
    let text = stdout(&o);
    let items: Vec<&str> = text
        .lines()
        .filter(|l| l.trim_start().starts_with("\"C "))
        .collect();
    assert_eq!(items, vec!["    \"C 7\""]);
}

#[test]
fn oracle_betti_of_the_sphere() {
    let dir = TempDir::new().unwrap();
    write(&dir, "sphere.txt", SPHERE);
    let o = morse(&["betti", "sphere.txt", "--oracle"], dir.path());
    assert_eq!(stdout(&o), "1 0 1\n");
    let o = morse(&["betti", "sphere.txt"], dir.path());
    assert_eq!(stdout(&o), "1 0 1\n");
}

#[test]
fn max_then_validate_pipeline() {
    let dir = TempDir::new().unwrap();
    write(&dir, "sphere.txt", SPHERE);
    write(&dir, "values.txt", "1 4\n2 3\n3 2\n4 1\n");
    for (cmd, audit) in [("max", "max"), ("min", "min")] {
        let o = morse(
            &[
                cmd,
                "sphere.txt",
                "--values",
                "values.txt",
                "--out",
                "seq.json",
            ],
            dir.path(),
        );
        assert!(o.status.success(), "{}", stderr(&o));
        assert!(stdout(&o).is_empty());
        let o = morse(
            &[
                "validate",
                "sphere.txt",
                "seq.json",
                "--values",
                "values.txt",
                "--audit",
                audit,
            ],
            dir.path(),
        );
        assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
        assert_eq!(stdout(&o), "valid\n");
        let o = morse(
            &["betti", "sphere.txt", "--from-sequence", "seq.json"],
            dir.path(),
        );
        assert_eq!(stdout(&o), "1 0 1\n");
    }
}

#[test]
fn invalid_sequences_exit_one() {
    let dir = TempDir::new().unwrap();
    write(&dir, "edge.txt", "1 2\n");
    write(
        &dir,
        "bad.json",
        "{\n  \"base\": [],\n  \"items\": [\n    \"C 1 2\"\n  ],\n  \"summary\": {\n    \"critical_vector\": [\n      0,\n      1\n    ],\n    \"items\": 1\n  }\n}\n",
    );
    let o = morse(&["validate", "edge.txt", "bad.json"], dir.path());
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("invalid"));
}

#[test]
fn premature_critical_fails_audit() {
    let dir = TempDir::new().unwrap();
    write(&dir, "edge.txt", "1 2\n");
    write(
        &dir,
        "seq.json",
        "{\n  \"base\": [],\n  \"items\": [\n    \"C 1\",\n    \"C 2\",\n    \"C 1 2\"\n  ],\n  \"summary\": {\n    \"critical_vector\": [\n      2,\n      1\n    ],\n    \"items\": 3\n  }\n}\n",
    );
    let o = morse(&["validate", "edge.txt", "seq.json"], dir.path());
    assert_eq!(o.status.code(), Some(0));
    let o = morse(
        &["validate", "edge.txt", "seq.json", "--audit", "max"],
        dir.path(),
    );
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn exit_codes_for_bad_input() {
    let dir = TempDir::new().unwrap();
    write(&dir, "bad.txt", "1 2\n1 q\n");
    let o = morse(&["max", "bad.txt"], dir.path());
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 2"));

    write(&dir, "heavy.txt", "1 : 5\n2 : 0\n1 2 : 1\n");
    let o = morse(&["max", "heavy.txt", "--weights"], dir.path());
    assert_eq!(o.status.code(), Some(3));
    assert!(
        stderr(&o).contains("F({1}) = 5 > F({1,2}) = 1"),
        "{}",
        stderr(&o)
    );

    write(&dir, "edge.txt", "1 2\n");
    let o = morse(&["max", "edge.txt", "--weights"], dir.path());
    assert_eq!(o.status.code(), Some(2));

    write(&dir, "short.txt", "1 0\n");
    let o = morse(&["max", "edge.txt", "--values", "short.txt"], dir.path());
    assert_eq!(o.status.code(), Some(2));

    let o = morse(&["max", "missing.txt"], dir.path());
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn lowerstar_refuses_ties_and_names_the_fallback() {
    let dir = TempDir::new().unwrap();
    write(&dir, "edge.txt", "1 2\n");
    write(&dir, "tied.txt", "1 0\n2 0\n");
    let o = morse(
        &["lowerstar", "edge.txt", "--values", "tied.txt"],
        dir.path(),
    );
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("`max`"));
    let o = morse(&["max", "edge.txt", "--values", "tied.txt"], dir.path());
    assert!(o.status.success());
}

#[test]
fn lowerstar_output_does_not_depend_on_jobs() {
    let dir = TempDir::new().unwrap();
    let k = morse_core::fixtures::grid(12);
    write(&dir, "grid.txt", &morse_core::io::write_complex(&k, None));
    let values: String = k
        .vertex_ids()
        .iter()
        .map(|v| format!("{v} {}\n", (v * 37) % 145))
        .collect();
    write(&dir, "values.txt", &values);
    let outputs: Vec<String> = ["1", "2", "8"]
        .iter()
        .map(|j| {
            let o = morse(
                &[
                    "lowerstar",
                    "grid.txt",
                    "--values",
                    "values.txt",
                    "--jobs",
                    j,
                ],
                dir.path(),
            );
            assert!(o.status.success(), "{}", stderr(&o));
            stdout(&o)
        })
        .collect();
    assert_eq!(outputs[0], outputs[1]);
    assert_eq!(outputs[0], outputs[2]);
}

#[test]
fn stats_reports_counts_and_euler() {
    let dir = TempDir::new().unwrap();
    write(&dir, "sphere.txt", SPHERE);
    let o = morse(&["stats", "sphere.txt"], dir.path());
    assert_eq!(stdout(&o), "simplexes: 4 6 4\ncritical: 1 0 1\neuler: 2\n");
}

#[test]
fn weighted_files_drive_the_stack() {
    let dir = TempDir::new().unwrap();
    write(&dir, "edge.txt", "1 : 0\n2 : 1\n1 2 : 2\n");
    let o = morse(&["stats", "edge.txt", "--weights"], dir.path());
    assert_eq!(stdout(&o), "simplexes: 2 1\ncritical: 2 1\neuler: 1\n");
    let o = morse(&["stats", "edge.txt"], dir.path());
    assert_eq!(stdout(&o), "simplexes: 2 1\ncritical: 1 0\neuler: 1\n");
}
