use vogel_g4::cli::{run, Output, RunConfig};
use clap::Parser;

fn cli(args: &[&str]) -> Output {
    let cfg = RunConfig::try_parse_from(std::iter::once("vogel-g4").chain(args.iter().copied())).unwrap();
    run(&cfg).unwrap()
}

fn validate(schema: &str, text: &str) {
    let path = format!("{}/schemas/{schema}.schema.json", env!("CARGO_MANIFEST_DIR"));
    let schema: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    let compiled = jsonschema::JSONSchema::compile(&schema).unwrap();
    let doc: serde_json::Value = serde_json::from_str(text).unwrap();
    let msgs: Vec<String> = match compiled.validate(&doc) {
        Ok(()) => vec![],
        Err(errors) => errors.map(|e| format!("{e} at {}", e.instance_path)).collect(),
    };
    assert!(msgs.is_empty(), "schema violations: {msgs:?}");
}

#[test]
fn dim_examples() {
    assert_eq!(cli(&["dim", "Y2", "--algebra", "sl3"]).text, "27\n");
    assert_eq!(cli(&["dim", "X4", "--point", "-1/3,1/3,1/2"]).text, "-70\n");
    assert_eq!(cli(&["dim", "g", "--algebra", "e8"]).text, "248\n");
}

#[test]
fn dim_falls_back_to_the_line_with_a_notice() {
    let out = cli(&["dim", "D'''''", "--algebra", "sl2"]);
    assert_eq!(out.notices.len(), 1);
    validate("dim", &cli(&["dim", "D'''''", "--algebra", "sl2", "--format", "json"]).text);
}

#[test]
fn point_and_algebra_are_exclusive() {
    assert!(RunConfig::try_parse_from(["vogel-g4", "dim", "g", "--algebra", "sl3", "--point", "1,1,1"]).is_err());
    assert!(RunConfig::try_parse_from(["vogel-g4", "dim", "g"]).is_err());
}

#[test]
fn table_examples() {
    let t: serde_json::Value = serde_json::from_str(&cli(&["table", "1111", "--algebra", "g2", "--format", "json"]).text).unwrap();
    assert_eq!(t["entries"].as_array().unwrap().len(), 13);
    assert_eq!(t["sum"], "1001");
    assert_eq!(t["total"], "1001");

    let out = cli(&["table", "sym2", "--point", "1/6,1/6,1/6", "--format", "json"]);
    validate("table", &out.text);
    let t: serde_json::Value = serde_json::from_str(&out.text).unwrap();
    let labels: Vec<&str> = t["entries"].as_array().unwrap().iter().map(|e| e["label"].as_str().unwrap()).collect();
    assert_eq!(labels, ["1", "Y2", "Y2'", "Y2''"]);

    let t: serde_json::Value = serde_json::from_str(&cli(&["table", "22", "--algebra", "sl2", "--format", "json"]).text).unwrap();
    assert_eq!(t["total"], "6");
    assert_eq!(t["sum"], "6");
}

#[test]
fn verify_exit_codes() {
    let ok = cli(&["verify", "--algebras", "sl2,sl3,g2", "--modules", "all"]);
    assert_eq!(ok.exit, 0, "{}", ok.text);
    let bad = cli(&["verify", "--algebras", "sl3", "--provenance", "as-printed"]);
    assert_eq!(bad.exit, 1);
    assert!(bad.text.contains("MISMATCH"));
}

#[test]
fn f4_needs_the_stretch_budget() {
    let cfg = RunConfig::try_parse_from(["vogel-g4", "verify", "--algebras", "f4"]).unwrap();
    let err = run(&cfg).unwrap_err().to_string();
    assert!(err.contains("--budget stretch"), "{err}");
    let cfg = RunConfig::try_parse_from(["vogel-g4", "verify", "--algebras", "e6", "--budget", "stretch"]).unwrap();
    assert!(run(&cfg).is_err());
}

#[test]
fn json_outputs_match_the_schemas() {
    validate("dim", &cli(&["dim", "Y2", "--algebra", "sl3", "--format", "json"]).text);
    validate("table", &cli(&["table", "31", "--algebra", "so8", "--format", "json"]).text);
    validate("verify", &cli(&["verify", "--algebras", "sl3", "--modules", "sym2,22", "--format", "json"]).text);
    validate("spectrum", &cli(&["spectrum", "--algebra", "g2", "--module", "211", "--format", "json"]).text);
    validate("moments", &cli(&["moments", "--algebra", "sl2", "--module", "sym2", "--format", "json"]).text);
    validate("relations", &cli(&["relations", "--algebra", "f4", "--format", "json"]).text);
    validate("algebra_dump", &cli(&["dump-algebra", "--algebra", "g2", "--format", "json"]).text);
    validate("scan", &cli(&["scan", "--algebras", "sl3", "--modules", "sym2", "--provenance", "as-printed", "--format", "json"]).text);
}

#[test]
fn output_is_deterministic() {
    let a = cli(&["verify", "--algebras", "so5", "--modules", "211", "--format", "json"]).text;
    let b = cli(&["verify", "--algebras", "so5", "--modules", "211", "--format", "json"]).text;
    assert_eq!(a, b);
}

#[test]
fn csv_outputs() {
    let m = cli(&["moments", "--algebra", "sl2", "--module", "sym2", "--kmax", "1", "--format", "csv"]).text;
    assert_eq!(m, "k,trace\n0,6\n1,3/2\n");
    let d = cli(&["dim", "Y2", "--algebra", "sl3", "--provenance", "as-printed", "--format", "csv"]).text;
    assert_eq!(d, "label,provenance,value\nY2,as-printed,27/2\n");
}

#[test]
fn relations_fail_off_the_exceptional_points() {
    let cfg = RunConfig::try_parse_from(["vogel-g4", "relations", "--algebra", "sl3"]).unwrap();
    assert!(run(&cfg).unwrap_err().to_string().contains("exceptional"));
}
