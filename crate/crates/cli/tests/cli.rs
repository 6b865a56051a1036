use std::io::Write;
use std::process::Command;

use matroidlab::{is_unique_exchange, is_unique_expansion, GroundSet, Matroid, SetFamily};
use matroidlab_cli::{run, MatroidDocument, Output};
use matroidlab_harness::enumerate_matroids;
use tempfile::NamedTempFile;

fn file(contents: &str) -> NamedTempFile {
    let mut f = NamedTempFile::new().unwrap();
    f.write_all(contents.as_bytes()).unwrap();
    f
}

fn cli(args: &[&str]) -> Output {
    cli_with_cap(args, None)
}

fn cli_with_cap(args: &[&str], cap: Option<&str>) -> Output {
    run(
        std::iter::once("matroidlab").chain(args.iter().copied()),
        cap,
    )
}

fn on_file(command: &str, contents: &str, extra: &[&str]) -> Output {
    let f = file(contents);
    let path = f.path().to_str().unwrap();
    let mut args = vec![command, path];
    args.extend_from_slice(extra);
    cli(&args)
}

const TWO_BASES: &str = r#"{"ground_set":["1","2","3"],"bases":[["1","2"],["1","3"]]}"#;
const STAR: &str = r#"{"ground_set":["1","2","3","4"],"bases":[["1","2"],["1","3"],["1","4"]]}"#;

#[test]
fn analyze_reports_verdicts() {
    let out = on_file("analyze", TWO_BASES, &[]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    for line in [
        "rank: 2",
        "F(M): {{1},{2,3}}",
        "unique expansion: yes",
        "unique exchange: yes",
        "union minimal: yes",
    ] {
        assert!(
            out.stdout.contains(line),
            "missing {line:?} in\n{}",
            out.stdout
        );
    }
}

#[test]
fn analyze_reports_witnesses() {
    let triangle = r#"{"ground_set":["1","2","3"],"bases":[["1","2"],["1","3"],["2","3"]]}"#;
    let out = on_file("analyze", triangle, &[]);
    assert!(out
        .stdout
        .contains("unique expansion: no (A={1} B={2,3} e1=2 e2=3)"));
    assert!(out
        .stdout
        .contains("union minimal: no (subfamily {{1,2},{1,3}})"));
}

#[test]
fn analyze_json_agrees_with_classifiers() {
    for m in enumerate_matroids(4, None).unwrap() {
        let doc = MatroidDocument::from_matroid(&m).to_json(true);
        let out = on_file("analyze", &doc, &["--json"]);
        assert_eq!(out.code, 0);
        let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(v["rank"], m.rank());
        assert_eq!(v["unique_exchange"]["holds"], is_unique_exchange(&m).holds);
        match is_unique_expansion(&m) {
            Ok(c) => assert_eq!(v["unique_expansion"]["holds"], c.holds),
            Err(_) => assert!(v["unique_expansion"].is_null()),
        }
    }
}

#[test]
fn search_cap_skips_minimality_with_notice() {
    let f = file(STAR);
    let path = f.path().to_str().unwrap();
    let out = cli_with_cap(&["analyze", path], Some("2"));
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("union minimal: n/a"));
    assert!(out.stdout.contains("3 bases exceed the search cap of 2"));
    let bad = cli_with_cap(&["analyze", path], Some("many"));
    assert_eq!(bad.code, 2);
}

#[test]
fn parse_errors_exit_two() {
    for doc in [
        "not json",
        r#"{"ground_set":["1"]}"#,
        r#"{"ground_set":["1"],"bases":[[]],"independents":[[]]}"#,
        r#"{"ground_set":["1"],"bases":[["2"]]}"#,
        r#"{"ground_set":["1","1"],"bases":[["1"]]}"#,
        r#"{"ground_set":["1","2"],"bases":[["1"],["1"]]}"#,
        r#"{"ground_set":["1"],"bases":[[]],"extra":1}"#,
    ] {
        assert_eq!(on_file("analyze", doc, &[]).code, 2, "{doc}");
    }
    assert_eq!(cli(&["analyze", "/nonexistent/matroid.json"]).code, 2);
}

#[test]
fn axiom_errors_exit_one_with_witness() {
    let out = on_file(
        "analyze",
        r#"{"ground_set":["1","2"],"bases":[["1","2"],["1"]]}"#,
        &[],
    );
    assert_eq!(out.code, 1);
    assert!(out.stderr.contains("UnequalCardinality"));
    let out = on_file(
        "analyze",
        r#"{"ground_set":["a","b","c","d"],"bases":[["a","b"],["c","d"]]}"#,
        &[],
    );
    assert_eq!(out.code, 1);
    assert!(out.stderr.contains("ExchangeFailure"));
    let out = on_file(
        "dual",
        r#"{"ground_set":["1","2"],"independents":[["1"]]}"#,
        &[],
    );
    assert_eq!(out.code, 1);
    assert!(out.stderr.contains("MissingEmptySet"));
}

#[test]
fn integer_labels_and_rank_zero() {
    let out = on_file(
        "analyze",
        r#"{"ground_set":[1,2,3],"bases":[[1,2],[1,3]]}"#,
        &[],
    );
    assert!(out.stdout.contains("rank: 2"));
    let zero = r#"{"ground_set":["1"],"bases":[[]]}"#;
    assert!(on_file("analyze", zero, &[]).stdout.contains("rank: 0"));
    let forming = on_file("forming", zero, &[]);
    assert_eq!(forming.code, 0);
    assert!(forming.stdout.contains("undefined"));
}

#[test]
fn dual_emits_canonical_complements() {
    let out = on_file("dual", STAR, &["--json"]);
    assert_eq!(out.code, 0);
    assert_eq!(
        out.stdout.trim(),
        r#"{"ground_set":["1","2","3","4"],"bases":[["2","3"],["2","4"],["3","4"]]}"#
    );
}

#[test]
fn independents_documents_emit_bases() {
    let doc =
        r#"{"ground_set":["1","2","3"],"independents":[[],["1"],["2"],["3"],["1","2"],["1","3"]]}"#;
    let dual = on_file("dual", doc, &["--json"]);
    let back = on_file("dual", &dual.stdout, &["--json"]);
    assert_eq!(
        back.stdout.trim(),
        r#"{"ground_set":["1","2","3"],"bases":[["1","2"],["1","3"]]}"#
    );
}

#[test]
fn parse_emit_parse_round_trips() {
    for n in 1..=4 {
        for m in enumerate_matroids(n, None).unwrap() {
            for compact in [true, false] {
                let text = MatroidDocument::from_matroid(&m).to_json(compact);
                let again = MatroidDocument::parse(&text).unwrap().to_matroid().unwrap();
                assert_eq!(again, m);
            }
        }
    }
    let shuffled = r#"{"ground_set":["x","y","z"],"bases":[["z","x"],["y","x"]]}"#;
    let m = MatroidDocument::parse(shuffled)
        .unwrap()
        .to_matroid()
        .unwrap();
    let emitted = MatroidDocument::from_matroid(&m).to_json(true);
    assert_eq!(
        emitted,
        r#"{"ground_set":["x","y","z"],"bases":[["x","y"],["x","z"]]}"#
    );
    let g = GroundSet::new(["x", "y", "z"]).unwrap();
    let expected =
        Matroid::from_bases(SetFamily::from_labels(&g, [["x", "y"], ["x", "z"]]).unwrap()).unwrap();
    assert_eq!(m, expected);
}

#[test]
fn forming_lists_relative_families() {
    let out = on_file("forming", TWO_BASES, &["--json"]);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["forming_family"], serde_json::json!([["1"], ["2", "3"]]));
    assert_eq!(
        v["secondary_bases"],
        serde_json::json!([["1"], ["2"], ["3"]])
    );
    assert_eq!(v["relative"].as_array().unwrap().len(), 2);
}

#[test]
fn make_upm() {
    let out = cli(&[
        "make-upm", "--ground", "a,b,c", "--block", "a", "--block", "b,c",
    ]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    let m = MatroidDocument::parse(&out.stdout)
        .unwrap()
        .to_matroid()
        .unwrap();
    assert_eq!(m.bases().label_lists(), [["a", "b"], ["a", "c"]]);
    let overlap = cli(&[
        "make-upm", "--ground", "a,b,c", "--block", "a,b", "--block", "b,c",
    ]);
    assert_eq!(overlap.code, 1);
    let unknown = cli(&["make-upm", "--ground", "a,b", "--block", "z"]);
    assert_eq!(unknown.code, 2);
}

#[test]
fn make_pm_caps_follow_block_order() {
    let out = cli(&[
        "make-pm", "--ground", "a,b,c,d", "--block", "c,d", "--block", "a,b", "--cap", "2",
        "--cap", "1",
    ]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    let m = MatroidDocument::parse(&out.stdout)
        .unwrap()
        .to_matroid()
        .unwrap();
    assert_eq!(m.bases().label_lists(), [["a", "c", "d"], ["b", "c", "d"]]);
}

#[test]
fn make_pm_rejects_bad_caps() {
    let negative = cli(&[
        "make-pm", "--ground", "a,b", "--block", "a,b", "--cap", "-1",
    ]);
    assert_eq!(negative.code, 1);
    assert!(negative.stderr.contains("CapOutOfRange"));
    let large = cli(&["make-pm", "--ground", "a,b", "--block", "a,b", "--cap", "3"]);
    assert_eq!(large.code, 1);
    let missing = cli(&[
        "make-pm", "--ground", "a,b", "--block", "a", "--block", "b", "--cap", "1",
    ]);
    assert_eq!(missing.code, 1);
}

#[test]
fn enumerate_outputs() {
    let counts = cli(&["enumerate", "--n", "4", "--count-only"]);
    assert!(counts.stdout.ends_with("total: 68\n"));
    let listed = cli(&["enumerate", "--n", "3", "--rank", "1"]);
    assert_eq!(listed.stdout.lines().count(), 7);
    for line in listed.stdout.lines() {
        MatroidDocument::parse(line).unwrap().to_matroid().unwrap();
    }
    assert_eq!(cli(&["enumerate", "--n", "7"]).code, 2);
}

#[test]
fn verify_sweep() {
    let out = cli(&["verify", "--n", "4"]);
    assert_eq!(out.code, 0);
    assert!(out
        .stdout
        .contains("|E|=4: 68 matroids, 17 isomorphism classes"));
    assert!(out.stdout.contains("result: all 29 checks passed"));
    let json = cli(&[
        "verify",
        "--n",
        "3",
        "--json",
        "--checks",
        "dual_involution,reverse_exchange",
    ]);
    let v: serde_json::Value = serde_json::from_str(&json.stdout).unwrap();
    assert_eq!(v["checks"].as_array().unwrap().len(), 2);
    assert_eq!(cli(&["verify", "--n", "3", "--checks", "nope"]).code, 2);
    assert_eq!(cli(&["verify", "--n", "0"]).code, 2);
}

#[test]
fn output_is_deterministic() {
    let a = on_file("analyze", STAR, &["--json"]);
    let b = on_file("analyze", STAR, &["--json"]);
    assert_eq!(a, b);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_matroidlab");
    let good = file(TWO_BASES);
    let status = Command::new(bin)
        .arg("analyze")
        .arg(good.path())
        .output()
        .unwrap()
        .status;
    assert_eq!(status.code(), Some(0));
    let bad = file(r#"{"ground_set":["1","2"],"bases":[["1","2"],["1"]]}"#);
    let status = Command::new(bin)
        .arg("analyze")
        .arg(bad.path())
        .output()
        .unwrap()
        .status;
    assert_eq!(status.code(), Some(1));
    let status = Command::new(bin).arg("frobnicate").output().unwrap().status;
    assert_eq!(status.code(), Some(2));
    let status = Command::new(bin)
        .args(["analyze"])
        .arg(good.path())
        .env("MATROIDLAB_SEARCH_CAP", "-3")
        .output()
        .unwrap()
        .status;
    assert_eq!(status.code(), Some(2));
}
