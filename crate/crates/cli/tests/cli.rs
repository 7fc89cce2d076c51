use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ecc-spectra"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> Value {
    serde_json::from_str(&stdout(args)).unwrap()
}

#[test]
fn path_complement_spectrum() {
    let v = json(&["spectrum", "--family", "path", "--n", "4", "--of", "complement"]);
    let values: Vec<f64> = v["values"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_f64().unwrap())
        .collect();
    for (x, y) in values.iter().zip([4.0, 1.0, -1.0, -4.0]) {
        assert!((x - y).abs() < 1e-9);
    }
    assert_eq!(v["tree"]["diameter"], 3);
    assert_eq!(v["matrix"], "eccentricity");
}

#[test]
fn scalar_formula_prints_bare_number() {
    let out = stdout(&["formula", "energy-t3", "--n", "7", "--a", "0", "--b", "3"]);
    assert_eq!(out, "13.4164078650\n");
    let out = stdout(&["formula", "energy-t3", "--n", "7", "--precision", "3"]);
    assert_eq!(out, "13.416\n");
}

#[test]
fn energy_agrees_with_formula() {
    let v = json(&["energy", "--family", "dnd", "--n", "8", "--d", "4", "--a", "0"]);
    let closed: f64 = stdout(&["formula", "energy-t4", "--n", "8"]).trim().parse().unwrap();
    assert!((v["energy"].as_f64().unwrap() - closed).abs() < 1e-9);
    assert!(v.get("values").is_none());
}

#[test]
fn tree_input_forms_agree() {
    let a = json(&["spectrum", "--family", "pruefer", "--seq", "1,2,3"]);
    let b = json(&["spectrum", "--family", "path", "--n", "5"]);
    assert_eq!(a["tree"]["code"], b["tree"]["code"]);
    assert_eq!(a["values"], b["values"]);

    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("spider.txt");
    std::fs::write(&file, "# spider\n0 1\n1 2\n0 3\n3 4\n0 5\n").unwrap();
    let c = json(&["spectrum", "--family", "edges", "--edges-file", file.to_str().unwrap()]);
    let d = json(&["spectrum", "--family", "spider", "--legs", "2,2,1"]);
    assert_eq!(c["tree"]["code"], d["tree"]["code"]);
    assert_eq!(c["energy"], d["energy"]);
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["verify", "--id", "SPEC_SYM", "--n", "4", "--n-max", "8"]).status.code(), Some(0));
    // usage and parameter errors
    for args in [
        &["verify", "--all", "--n-max", "11"][..],
        &["verify", "--all", "--n", "4", "--n-max", "13", "--allow-large"],
        &["verify", "--id", "NOPE"],
        &["verify"],
        &["spectrum", "--family", "star", "--n", "6"],
        &["spectrum", "--family", "dnd", "--n", "6"],
        &["spectrum", "--family", "path", "--n", "4", "--precision", "0"],
        &["formula", "spec-t4", "--n", "3"],
        &["formula", "cubic"],
        &["extremal", "--stat", "bogus", "--n", "5"],
        &["enumerate", "--n", "0"],
        &["spectrum", "--family", "edges", "--edges-file", "/nonexistent/file"],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn output_is_byte_identical_across_runs() {
    let args = ["verify", "--all", "--n", "4", "--n-max", "8"];
    let one = run(&args);
    let four = Command::new(env!("CARGO_BIN_EXE_ecc-spectra"))
        .args(args)
        .env("ECC_SPECTRA_JOBS", "4")
        .output()
        .unwrap();
    assert!(one.status.success());
    assert_eq!(one.stdout, four.stdout);
    assert_eq!(one.stdout, run(&args).stdout);
}

#[test]
fn verify_json_shape() {
    let v = json(&["verify", "--id", "xi1-min", "--id", "APPENDIX_TABLE", "--n", "5", "--n-max", "7"]);
    assert_eq!(v["all_asserted_hold"], true);
    let reports = v["reports"].as_array().unwrap();
    assert_eq!(reports.len(), 2);
    assert_eq!(reports[0]["id"], "XI1_MIN");
    assert_eq!(reports[0]["n_range"], serde_json::json!([5, 7]));
    assert!(reports[0].get("wall_time_s").is_none());
    assert_eq!(reports[1]["table"].as_array().unwrap().len(), 7);

    let v = json(&["verify", "--id", "SPEC_SYM", "--n", "4", "--n-max", "5", "--timings"]);
    assert!(v["reports"][0]["wall_time_s"].is_f64());
}

#[test]
fn enumerate_round_trips() {
    let codes = stdout(&["enumerate", "--n", "8", "--format", "codes"]);
    let codes: Vec<&str> = codes.lines().collect();
    assert_eq!(codes.len(), 23);

    let edges = stdout(&["enumerate", "--n", "8"]);
    let trees = ecc_spectra::parse_edge_list_records(&edges).unwrap();
    let back: Vec<String> = trees
        .iter()
        .map(|t| ecc_spectra::CanonicalCode::of(t).to_string())
        .collect();
    assert_eq!(back, codes);

    let seqs = stdout(&["enumerate", "--n", "8", "--format", "pruefer", "--connected-complement"]);
    let back: Vec<String> = seqs
        .lines()
        .map(|l| {
            let seq = ecc_spectra::parse_pruefer(l).unwrap();
            ecc_spectra::CanonicalCode::of(&ecc_spectra::tree_from_pruefer(&seq).unwrap()).to_string()
        })
        .collect();
    assert_eq!(back.len(), 22);
    assert!(back.iter().all(|c| codes.contains(&c.as_str())));
}

#[test]
fn extremal_csv() {
    let out = stdout(&["extremal", "--stat", "energy-complement", "--n", "7", "--csv"]);
    let mut rows = csv::Reader::from_reader(out.as_bytes());
    let header = rows.headers().unwrap().clone();
    assert_eq!(header.iter().collect::<Vec<_>>(), ["n", "canonical_code", "statistic", "value", "rank"]);
    let rows: Vec<csv::StringRecord> = rows.records().map(Result::unwrap).collect();
    assert_eq!(rows.len(), 10);
    assert_eq!(&rows[0][2], "energy-complement");
    assert_eq!(&rows[0][4], "1");
    let first: f64 = rows[0][3].parse().unwrap();
    let path: f64 = stdout(&["formula", "path-complement-energy", "--n", "7"]).trim().parse().unwrap();
    assert!((first - path).abs() < 1e-9);
    let values: Vec<f64> = rows.iter().map(|r| r[3].parse().unwrap()).collect();
    assert!(values.windows(2).all(|w| w[0] >= w[1]));
}

#[test]
fn out_file_matches_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("table.json");
    let direct = stdout(&["table-check"]);
    let quiet = stdout(&["table-check", "--out", file.to_str().unwrap()]);
    assert!(quiet.is_empty());
    assert_eq!(std::fs::read_to_string(&file).unwrap(), direct);
}

#[test]
fn closed_form_spectrum_and_bounds() {
    let v = json(&["formula", "spec-t4", "--n", "9"]);
    assert_eq!(v["values"].as_array().unwrap().len(), 9);
    let b = json(&["formula", "adjacency-bounds", "--n", "8", "--s", "2"]);
    assert_eq!(b.as_array().unwrap().len(), 5);
    let c = json(&["formula", "cubic", "--s", "1"]);
    assert_eq!(c["n"], 6);
    assert!(c["resolved_root"].as_f64().unwrap() > 0.0);
}
