use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("golden")
}

fn bchcert(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bchcert"))
        .args(args)
        .env_remove("BCH_FIELD_CAP")
        .output()
        .expect("binary runs")
}

fn with_cap(cap: u64, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bchcert"))
        .args(args)
        .env("BCH_FIELD_CAP", cap.to_string())
        .output()
        .expect("binary runs")
}

fn json_of(out: &Output) -> Value {
    let text = String::from_utf8_lossy(&out.stdout);
    serde_json::from_str(text.trim()).unwrap_or_else(|e| panic!("{e}: {text}"))
}

fn ok_json(args: &[&str]) -> Value {
    let mut full = args.to_vec();
    full.push("--json");
    let out = bchcert(&full);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stdout));
    json_of(&out)
}

#[test]
fn info_reports() {
    let v = ok_json(&["info", "--q", "3", "--n", "26", "--delta", "5"]);
    assert_eq!(v["k"], 17);
    assert_eq!(v["bose_distance"], 5);
    assert_eq!(v["k_closed_form"], 17);
    let v = ok_json(&["info", "--q", "2", "--n", "15", "--delta", "5"]);
    assert_eq!((v["k"].as_u64(), v["bose_distance"].as_u64()), (Some(7), Some(5)));
    let v = ok_json(&["info", "--q", "3", "--n", "26", "--delta", "26"]);
    assert_eq!(v["k"], 1);
    assert!(v["degenerate"].is_string());
    assert!(v["k_closed_form"].is_null());

    let text = String::from_utf8(bchcert(&["info", "--q", "4", "--n", "63", "--delta", "6"]).stdout).unwrap();
    assert!(text.contains("k = 51"), "{text}");
}

#[test]
fn certify_families() {
    let v = ok_json(&["certify", "qt", "--q", "4", "--t", "2", "--m", "4"]);
    assert_eq!((v["code"]["n"].as_u64(), v["code"]["k"].as_u64()), (Some(255), Some(207)));
    assert_eq!(v["weight"], 17);
    let support: Vec<u64> = v["codeword_support"]
        .as_array()
        .unwrap()
        .iter()
        .map(|p| p[0].as_u64().unwrap())
        .collect();
    assert_eq!(
        support,
        vec![0, 9, 18, 31, 33, 36, 62, 66, 72, 124, 132, 143, 144, 199, 227, 241, 248]
    );

    let v = ok_json(&["certify", "nonprimitive", "--p", "3", "--e", "2", "--lambda", "8"]);
    assert_eq!((v["code"]["n"].as_u64(), v["code"]["k"].as_u64()), (Some(91), Some(82)));
    assert_eq!(v["weight"], 4);

    let v = ok_json(&["certify", "small-delta", "--q", "5", "--m", "1", "--delta", "3"]);
    assert_eq!((v["code"]["n"].as_u64(), v["weight"].as_u64()), (Some(4), Some(3)));

    let v = ok_json(&["certify", "search", "--q", "2", "--n", "15", "--delta", "5"]);
    assert_eq!(v["weight"], 5);

    let v = ok_json(&["certify", "lifted", "--q", "3", "--delta", "5", "--h", "3", "--m", "6"]);
    assert_eq!((v["code"]["n"].as_u64(), v["code"]["k"].as_u64()), (Some(728), Some(710)));
}

#[test]
fn exhausted_search_is_a_validation_failure() {
    let out = bchcert(&["certify", "search", "--q", "3", "--n", "13", "--delta", "3", "--json"]);
    assert_eq!(out.status.code(), Some(2));
    let v = json_of(&out);
    assert_eq!(v["error"], "NoCertificate");
    assert_eq!(v["details"]["examined"], 66);
}

#[test]
fn certificate_files_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cert.json");
    let p = path.to_str().unwrap();
    let made = ok_json(&["certify", "qt", "--q", "3", "--t", "1", "--m", "3", "--out", p]);
    let v = ok_json(&["verify", p]);
    assert_eq!(v["valid"], true);
    assert_eq!(v["weight"], 4);

    let mut bad = made.clone();
    bad["codeword_support"][0][1] = Value::Null;
    std::fs::write(&path, bad.to_string()).unwrap();
    let out = bchcert(&["verify", p, "--json"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json_of(&out)["error"], "RecordMismatch");

    let mut bad = made;
    bad["locator_exponents"][0] = Value::from(1);
    std::fs::write(&path, bad.to_string()).unwrap();
    assert_eq!(bchcert(&["verify", p]).status.code(), Some(2));

    std::fs::write(&path, "{not json").unwrap();
    assert_eq!(bchcert(&["verify", p]).status.code(), Some(2));
}

#[test]
fn oracle_reports() {
    let v = ok_json(&["oracle", "--q", "3", "--n", "13", "--delta", "4"]);
    assert_eq!(v["d"], 4);
    assert_eq!(v["method"], "full-enumeration");
    assert_eq!(v["witness_support"].as_array().unwrap().len(), 4);
    assert_eq!(v["enumerated"], 2187);

    let v = ok_json(&["oracle", "--q", "3", "--n", "26", "--delta", "5", "--w-max", "5"]);
    assert_eq!(v["d"], 5);
    assert_eq!(v["method"], "support-enumeration");
    let v = ok_json(&["oracle", "--q", "3", "--n", "13", "--delta", "4", "--w-max", "3"]);
    assert!(v["d"].is_null());
    assert_eq!(v["d_lower_bound"], 4);

    let out = bchcert(&["oracle", "--q", "3", "--n", "80", "--delta", "5", "--json"]);
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(json_of(&out)["error"], "TooLarge");
}

#[test]
fn bound_reports() {
    let v = ok_json(&["bound", "--n", "26", "--k", "17", "--d", "5", "--q", "3"]);
    assert_eq!(v["class"], "almost-distance-optimal");
    assert_eq!(v["max_d_allowed"], 6);
    let v = ok_json(&["bound", "--n", "15", "--k", "9", "--d", "7", "--q", "4"]);
    assert_eq!(v["max_d_allowed"], 6);
    assert_eq!(v["class"], "infeasible");
    let v = ok_json(&["bound", "--n", "15", "--k", "11", "--d", "3", "--q", "2"]);
    assert_eq!(v["class"], "sphere-packing-optimal");
}

#[test]
fn exit_codes_for_bad_input() {
    assert_eq!(bchcert(&["bound", "--n", "15"]).status.code(), Some(4));
    assert_eq!(bchcert(&["frobnicate"]).status.code(), Some(4));
    assert_eq!(bchcert(&["bound", "--n", "5", "--k", "6", "--d", "1", "--q", "2"]).status.code(), Some(4));
    let out = bchcert(&["info", "--q", "6", "--n", "5", "--delta", "2", "--json"]);
    assert_eq!(out.status.code(), Some(4));
    assert_eq!(json_of(&out)["error"], "NotPrimePower");
    let out = bchcert(&["certify", "qt", "--q", "4", "--t", "2", "--m", "5"]);
    assert_eq!(out.status.code(), Some(4));
    assert_eq!(json_of(&out)["error"], "BadModulus");
    assert_eq!(bchcert(&["verify", "/nonexistent/cert.json"]).status.code(), Some(4));
    assert_eq!(bchcert(&["--help"]).status.code(), Some(0));
}

#[test]
fn field_cap_is_a_resource_error() {
    let out = with_cap(1000, &["info", "--q", "5", "--n", "3124", "--delta", "6", "--json"]);
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(json_of(&out)["error"], "FieldTooLarge");

    let out = with_cap(1000, &["table", "nonprimitive", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let rows = json_of(&out)["rows"].as_array().unwrap().clone();
    let status: Vec<&str> = rows.iter().map(|r| r["status"].as_str().unwrap()).collect();
    assert_eq!(status, ["ok", "skipped: cap", "skipped: cap", "ok", "ok", "ok"]);
    assert!(rows[1]["d"].is_null());
}

#[test]
fn tables_match_golden_files() {
    let dir = golden_dir();
    let dir = dir.to_str().unwrap();
    for family in ["ternary", "quaternary", "small-delta", "qt", "nonprimitive"] {
        let v = ok_json(&["table", family, "--seed-dir", dir]);
        assert_eq!(v["golden"], "matched", "{family}");
        for row in v["rows"].as_array().unwrap() {
            assert_eq!(row["status"], "ok");
            if let Some(delta) = row["params"].get("delta") {
                assert_eq!(&row["d"], delta);
            }
            if !row["oracle_d"].is_null() {
                assert_eq!(row["oracle_d"], row["d"]);
            }
        }
    }
}

#[test]
fn golden_rows_hold_the_stored_parameters() {
    let text = std::fs::read_to_string(golden_dir().join("ternary.jsonl")).unwrap();
    let codes: Vec<(u64, u64, u64)> = text
        .lines()
        .map(|l| {
            let v: Value = serde_json::from_str(l).unwrap();
            (v["n"].as_u64().unwrap(), v["k"].as_u64().unwrap(), v["d"].as_u64().unwrap())
        })
        .collect();
    assert_eq!(
        codes,
        [
            (26, 17, 5),
            (80, 68, 5),
            (728, 710, 5),
            (26, 14, 7),
            (80, 64, 7),
            (728, 704, 7),
            (26, 11, 8),
            (728, 698, 8)
        ]
    );
    let text = std::fs::read_to_string(golden_dir().join("nonprimitive.jsonl")).unwrap();
    let n: Vec<u64> = text
        .lines()
        .map(|l| serde_json::from_str::<Value>(l).unwrap()["n"].as_u64().unwrap())
        .collect();
    assert_eq!(n, [13, 781, 1562, 91, 182, 364]);
}

#[test]
fn table_output_is_byte_stable() {
    let a = bchcert(&["table", "qt", "--json"]).stdout;
    let b = bchcert(&["table", "qt", "--json"]).stdout;
    assert_eq!(a, b);
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    assert_eq!(bchcert(&["table", "qt", "--seed-dir", d, "--update"]).status.code(), Some(0));
    let fresh = std::fs::read_to_string(dir.path().join("qt-family.jsonl")).unwrap();
    let golden = std::fs::read_to_string(golden_dir().join("qt-family.jsonl")).unwrap();
    assert_eq!(fresh, golden);
}

#[test]
fn golden_drift_is_reported_per_cell() {
    let dir = tempfile::tempdir().unwrap();
    let golden = std::fs::read_to_string(golden_dir().join("small-delta.jsonl")).unwrap();
    let tampered = golden.replacen("\"k\":6", "\"k\":5", 1);
    assert_ne!(tampered, golden);
    std::fs::write(dir.path().join("small-delta.jsonl"), tampered).unwrap();
    let out = bchcert(&["table", "small-delta", "--seed-dir", dir.path().to_str().unwrap(), "--json"]);
    assert_eq!(out.status.code(), Some(2));
    let v = json_of(&out);
    assert_eq!(v["error"], "RowMismatch");
    assert_eq!(v["details"], serde_json::json!(["row 1: k: golden 5, fresh 6"]));
}

#[test]
fn human_table_is_aligned() {
    let out = bchcert(&["table", "small-delta"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert!(lines[0].starts_with("code"));
    assert!(lines[1].starts_with("[8,6,2]_3"));
    let col = lines[0].find("d_best").unwrap();
    assert!(lines[1..5].iter().all(|l| l[col..].starts_with(|c: char| c.is_ascii_digit() || c == '/')));
}
