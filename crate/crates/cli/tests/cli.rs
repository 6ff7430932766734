use std::path::PathBuf;
use std::process::{Command, Output};

use primaltop::TheoremId;
use primaltop_cli::report::{Body, Report, Value};
use primaltop_cli::SCHEMA_VERSION;

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join(format!("../core/fixtures/{name}.json"))
}

fn primaltop(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_primaltop"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn report(out: &Output) -> Report {
    let text = String::from_utf8(out.stdout.clone()).unwrap();
    let report = Report::from_json(&text).unwrap_or_else(|e| panic!("bad report ({e}):\n{text}"));
    assert_eq!(report.schema_version, SCHEMA_VERSION);
    assert_eq!(report.to_json().trim_end(), text.trim_end());
    report
}

fn write_doc(dir: &tempfile::TempDir, body: &str) -> PathBuf {
    let path = dir.path().join("space.json");
    std::fs::write(&path, body).unwrap();
    path
}

fn compute_family(fixture_name: &str, operator: &str) -> Vec<String> {
    let out = primaltop(&[
        "compute",
        "--input",
        fixture(fixture_name).to_str().unwrap(),
        "--operator",
        operator,
    ]);
    assert_eq!(out.status.code(), Some(0));
    match report(&out).body {
        Body::Compute {
            value: Value::Family { members },
            ..
        } => members,
        other => panic!("unexpected body {other:?}"),
    }
}

#[test]
fn validate_accepts_every_fixture() {
    for name in ["ex-a", "ex-b", "ex-c", "ex-d", "ex-e", "ex-f"] {
        let out = primaltop(&["validate", "--input", fixture(name).to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0), "{name}");
        let r = report(&out);
        assert!(r.ok);
        let Body::Validate { axioms, .. } = r.body else {
            panic!()
        };
        assert_eq!(axioms.len(), 7);
        assert!(axioms.iter().all(|a| a.holds));
    }
}

#[test]
fn validate_names_the_broken_axiom() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_doc(
        &dir,
        r#"{"universe":["a","b","c"],"topology":[[],["a"],["b"],["a","b","c"]],"primal":[]}"#,
    );
    let out = primaltop(&["validate", "--input", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let r = report(&out);
    assert!(!r.ok);
    let Body::Validate { axioms, .. } = r.body else {
        panic!()
    };
    let broken: Vec<_> = axioms.iter().filter(|a| !a.holds).collect();
    assert_eq!(broken.len(), 1);
    assert_eq!(broken[0].axiom, "closed-under-union");
    let detail = broken[0].detail.as_deref().unwrap();
    assert!(detail.starts_with("not-closed-under-union"), "{detail}");
    assert!(detail.contains("{a}") && detail.contains("{b}"));

    let path = write_doc(
        &dir,
        r#"{"universe":["a","b"],"topology":[[],["a","b"]],"primal":[["a","b"]]}"#,
    );
    let out = primaltop(&["validate", "--input", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("contains-universe"));
}

#[test]
fn malformed_documents_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    for body in [
        "{ not json",
        r#"{"universe":["a"],"topology":[[]],"primal":[],"extra":1}"#,
        r#"{"universe":["a"],"topology":[[],["z"]],"primal":[]}"#,
    ] {
        let path = write_doc(&dir, body);
        let out = primaltop(&["validate", "--input", path.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(1), "{body}");
        assert!(out.stdout.is_empty());
        assert!(!out.stderr.is_empty());
    }
    let out = primaltop(&["validate", "--input", "/nonexistent/space.json"]);
    assert_eq!(out.status.code(), Some(1));
    let out = primaltop(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn compute_diamond_r_on_ex_a() {
    let a = fixture("ex-a");
    let out = primaltop(&[
        "compute",
        "--input",
        a.to_str().unwrap(),
        "--operator",
        "diamond-r",
        "--set",
        "{b,c}",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let Body::Compute { value, .. } = report(&out).body else {
        panic!()
    };
    assert_eq!(
        value,
        Value::Set {
            input: "{b,c}".into(),
            output: "{}".into()
        }
    );
}

#[test]
fn compute_families_on_ex_d() {
    assert_eq!(
        compute_family("ex-d", "tau-r"),
        ["{}", "{c}", "{a,c}", "{b,c}", "{a,b,c}"]
    );
    assert_eq!(compute_family("ex-d", "tau-delta"), ["{}", "{a,b,c}"]);
    assert_eq!(compute_family("ex-d", "tau-diamond").len(), 8);
    assert_eq!(compute_family("ex-d", "ro"), ["{}", "{a,b,c}"]);
}

#[test]
fn compute_full_table_and_bad_sets() {
    let b = fixture("ex-b");
    let out = primaltop(&[
        "compute",
        "--input",
        b.to_str().unwrap(),
        "--operator",
        "diamond-r",
    ]);
    let Body::Compute {
        value: Value::Table { rows },
        ..
    } = report(&out).body
    else {
        panic!()
    };
    assert_eq!(rows.len(), 8);
    let a_row = rows.iter().find(|r| r.input == "{a}").unwrap();
    assert_eq!(a_row.output, "{a,b,c}");

    let out = primaltop(&[
        "compute",
        "--input",
        b.to_str().unwrap(),
        "--operator",
        "diamond",
        "--set",
        "{q}",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let out = primaltop(&[
        "compute",
        "--input",
        b.to_str().unwrap(),
        "--operator",
        "tau-r",
        "--set",
        "{a}",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let out = primaltop(&[
        "compute",
        "--input",
        b.to_str().unwrap(),
        "--operator",
        "sideways",
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn check_all_on_ex_c() {
    let c = fixture("ex-c");
    let out = primaltop(&["check", "--input", c.to_str().unwrap(), "--theorems", "all"]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert!(r.ok);
    let Body::Check { results, .. } = r.body else {
        panic!()
    };
    assert_eq!(results.len(), TheoremId::ALL.len());
    let strict = results
        .iter()
        .find(|r| r.id == TheoremId::ConvT36h)
        .unwrap();
    assert!(strict.witnesses.iter().any(|w| w.subsets == ["{b}", "{c}"]));
}

#[test]
fn check_text_on_ex_e() {
    let e = fixture("ex-e");
    let out = primaltop(&[
        "check",
        "--input",
        e.to_str().unwrap(),
        "--theorems",
        "TEXT,T3.6c",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let Body::Check { results, .. } = report(&out).body else {
        panic!()
    };
    assert!(results[0]
        .observations
        .iter()
        .any(|o| o == "τ^⋄_R = 2^X: true"));
    assert!(results.iter().all(|r| !r.is_breach()));

    let out = primaltop(&["check", "--input", e.to_str().unwrap(), "--theorems", "T99"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn sweeps() {
    let out = primaltop(&[
        "sweep",
        "--n",
        "1",
        "--strategy",
        "exhaustive",
        "--theorems",
        "all",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let Body::Sweep { results, .. } = report(&out).body else {
        panic!()
    };
    assert!(results.iter().all(|r| r.spaces_checked == 2));

    let args = [
        "sweep",
        "--n",
        "4",
        "--strategy",
        "sampled",
        "--samples",
        "1000",
        "--seed",
        "7",
        "--theorems",
        "TBASE",
    ];
    let out = primaltop(&args);
    assert_eq!(out.status.code(), Some(0));
    let Body::Sweep {
        seed,
        samples,
        results,
        ..
    } = report(&out).body
    else {
        panic!()
    };
    assert_eq!(seed, Some(7));
    assert_eq!(samples, Some(1000));
    assert_eq!(results[0].spaces_checked, 1000);
    assert_eq!(primaltop(&args).stdout, out.stdout);

    assert_eq!(primaltop(&["sweep", "--n", "4"]).status.code(), Some(1));
    assert_eq!(
        primaltop(&["sweep", "--n", "2", "--strategy", "sampled"])
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn full_sweep_at_three_points() {
    let out = primaltop(&["sweep", "--n", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert!(r.ok);
    let Body::Sweep { results, .. } = r.body else {
        panic!()
    };
    assert!(results.iter().all(|r| r.spaces_checked == 232));
}

#[test]
fn enumerate_counts() {
    let out = primaltop(&["enumerate", "--n", "3"]);
    assert_eq!(
        report(&out).body,
        Body::Enumerate {
            n: 3,
            topologies: 29,
            primals: 8
        }
    );
}

#[test]
fn table_format() {
    let a = fixture("ex-a");
    let out = primaltop(&[
        "--format",
        "table",
        "compute",
        "--input",
        a.to_str().unwrap(),
        "--operator",
        "diamond-r",
        "--set",
        "b,c",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        String::from_utf8_lossy(&out.stdout),
        "diamond-r [EX-A]\n{b,c} -> {}\n"
    );
}
