use std::path::{Path, PathBuf};
use std::process::Command;

use aglab::cli::{parse_table, serialize_table};
use aglab::fixtures;
use serde_json::Value;

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(format!("{name}.tbl"))
}

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn aglab_env(args: &[&str], env: &[(&str, &str)]) -> Run {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_aglab"));
    cmd.args(args).env_remove("AGLAB_MAX_ORDER");
    for (k, v) in env {
        cmd.env(k, v);
    }
    let out = cmd.output().unwrap();
    Run {
        code: out.status.code().unwrap(),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn aglab(args: &[&str]) -> Run {
    aglab_env(args, &[])
}

fn schema() -> Value {
    let text = std::fs::read_to_string(
        Path::new(env!("CARGO_MANIFEST_DIR")).join("schema/aglab.schema.json"),
    )
    .unwrap();
    serde_json::from_str(&text).unwrap()
}

/// Validates `value` against the subset of JSON Schema the checked-in
/// document uses: `$ref` (local), `type`, `const`, `enum`, `required`,
/// `properties`, `additionalProperties`, `items`, `minimum`, `maximum`,
/// `anyOf` and `allOf`.
fn validate(root: &Value, schema: &Value, value: &Value, path: &str) -> Result<(), String> {
    let obj = schema.as_object().ok_or_else(|| format!("{path}: schema is not an object"))?;
    if let Some(r) = obj.get("$ref") {
        let name = r.as_str().unwrap().strip_prefix("#/$defs/").unwrap();
        return validate(root, &root["$defs"][name], value, path);
    }
    if let Some(t) = obj.get("type") {
        let types: Vec<&str> = match t {
            Value::String(s) => vec![s.as_str()],
            Value::Array(a) => a.iter().map(|v| v.as_str().unwrap()).collect(),
            _ => unreachable!(),
        };
        let ok = types.iter().any(|t| match *t {
            "object" => value.is_object(),
            "array" => value.is_array(),
            "string" => value.is_string(),
            "boolean" => value.is_boolean(),
            "integer" => value.is_u64() || value.is_i64(),
            "null" => value.is_null(),
            other => panic!("unsupported type {other}"),
        });
        if !ok {
            return Err(format!("{path}: expected {types:?}, got {value}"));
        }
    }
    if let Some(c) = obj.get("const") {
        if c != value {
            return Err(format!("{path}: expected {c}, got {value}"));
        }
    }
    if let Some(e) = obj.get("enum") {
        if !e.as_array().unwrap().contains(value) {
            return Err(format!("{path}: {value} not in {e}"));
        }
    }
    if let Some(min) = obj.get("minimum") {
        if value.as_f64().unwrap() < min.as_f64().unwrap() {
            return Err(format!("{path}: {value} < {min}"));
        }
    }
    if let Some(max) = obj.get("maximum") {
        if value.as_f64().unwrap() > max.as_f64().unwrap() {
            return Err(format!("{path}: {value} > {max}"));
        }
    }
    if let Some(all) = obj.get("allOf") {
        for s in all.as_array().unwrap() {
            validate(root, s, value, path)?;
        }
    }
    if let Some(any) = obj.get("anyOf") {
        if !any.as_array().unwrap().iter().any(|s| validate(root, s, value, path).is_ok()) {
            return Err(format!("{path}: {value} matches no alternative"));
        }
    }
    if let Some(map) = value.as_object() {
        if let Some(req) = obj.get("required") {
            for k in req.as_array().unwrap() {
                if !map.contains_key(k.as_str().unwrap()) {
                    return Err(format!("{path}: missing {k}"));
                }
            }
        }
        let props = obj.get("properties").and_then(Value::as_object);
        for (k, v) in map {
            let sub = format!("{path}.{k}");
            match props.and_then(|p| p.get(k)) {
                Some(s) => validate(root, s, v, &sub)?,
                None => match obj.get("additionalProperties") {
                    Some(Value::Bool(false)) => return Err(format!("{sub}: not allowed")),
                    Some(s @ Value::Object(_)) => validate(root, s, v, &sub)?,
                    _ => {}
                },
            }
        }
    }
    if let (Some(items), Some(arr)) = (obj.get("items"), value.as_array()) {
        for (i, v) in arr.iter().enumerate() {
            validate(root, items, v, &format!("{path}[{i}]"))?;
        }
    }
    Ok(())
}

fn assert_valid(def: &str, stdout: &str) {
    let root = schema();
    let value: Value = serde_json::from_str(stdout).unwrap();
    if let Err(e) = validate(&root, &root["$defs"][def], &value, "$") {
        panic!("{def}: {e}\n{stdout}");
    }
}

#[test]
fn validator_rejects_bad_documents() {
    let root = schema();
    let bad = serde_json::json!({ "schema": 2, "roundtrip": true });
    assert!(validate(&root, &root["$defs"]["roundtrip"], &bad, "$").is_err());
    let bad = serde_json::json!({ "schema": 1, "roundtrip": true, "extra": 0 });
    assert!(validate(&root, &root["$defs"]["roundtrip"], &bad, "$").is_err());
    let bad = serde_json::json!({ "schema": 1 });
    assert!(validate(&root, &root["$defs"]["roundtrip"], &bad, "$").is_err());
}

#[test]
fn every_command_emits_valid_json() {
    let ex2 = fixture("ex2");
    let ex2 = ex2.to_str().unwrap();
    let sub4 = fixture("sub4");
    let sub4 = sub4.to_str().unwrap();
    let add4 = fixture("add4");
    let add4 = add4.to_str().unwrap();
    let lz2 = fixture("lz2");
    let lz2 = lz2.to_str().unwrap();
    let infl3 = fixture("infl3");
    let infl3 = infl3.to_str().unwrap();
    let cases: Vec<(&str, Vec<&str>)> = vec![
        ("check", vec!["check", ex2, "--law", "invertive"]),
        ("check", vec!["check", lz2, "--law", "invertive"]),
        ("classify", vec!["classify", ex2]),
        ("classify", vec!["classify", lz2]),
        ("inverses", vec!["inverses", ex2]),
        ("derive", vec!["derive", ex2]),
        ("decompose", vec!["decompose", ex2, "--derived"]),
        ("decompose", vec!["decompose", add4]),
        ("canon", vec!["canon", ex2]),
        ("iso", vec!["iso", add4, sub4]),
        ("autos", vec!["autos", add4]),
        ("construct", vec!["construct", add4, "--auto", "0,3,2,1"]),
        ("extract", vec!["extract", ex2]),
        ("roundtrip", vec!["roundtrip", ex2]),
        ("aggroup", vec!["aggroup", sub4]),
        ("ideals", vec!["ideals", ex2]),
        ("ideals", vec!["ideals", lz2]),
        ("inflate", vec!["inflate", add4, "--sizes", "1,2,1,1"]),
        ("deflate", vec!["deflate", infl3]),
        ("deflate", vec!["deflate", lz2]),
        ("census", vec!["census", "--order", "3", "--class", "cia"]),
        ("negative", vec!["derive", lz2]),
        ("negative", vec!["extract", lz2]),
    ];
    for (def, mut args) in cases {
        args.push("--json");
        let r = aglab(&args);
        assert!(r.code <= 1, "{args:?}: exit {} {}", r.code, r.stderr);
        assert_valid(def, &r.stdout);
    }
}

#[test]
fn spec_examples() {
    let r = aglab(&["classify", fixture("ex2").to_str().unwrap(), "--json"]);
    assert_eq!(r.code, 0);
    let v: Value = serde_json::from_str(&r.stdout).unwrap();
    assert_eq!(v["class3"], "all-three");
    assert_eq!(v["schema"], 1);

    let r = aglab(&["roundtrip", fixture("lz2").to_str().unwrap()]);
    assert_eq!(r.code, 1);

    let r = aglab(&["census", "--order", "2", "--class", "cia", "--json"]);
    assert_eq!(r.code, 0);
    let v: Value = serde_json::from_str(&r.stdout).unwrap();
    assert_eq!(v["count"], 2);
}

#[test]
fn exit_codes() {
    let ex2 = fixture("ex2");
    let ex2 = ex2.to_str().unwrap();
    assert_eq!(aglab(&["check", ex2, "--law", "medial"]).code, 0);
    assert_eq!(aglab(&["check", ex2, "--law", "assoc"]).code, 1);
    assert_eq!(aglab(&["check", ex2, "--law", "distributive"]).code, 2);
    assert_eq!(aglab(&["classify", "/nonexistent.tbl"]).code, 2);
    assert_eq!(aglab(&["frobnicate"]).code, 2);
    assert_eq!(aglab(&["census", "--order", "5", "--class", "cia"]).code, 2);
    assert_eq!(aglab(&["construct", fixture("add5").to_str().unwrap(), "--auto", "1,2,3,4,0"]).code, 2);
    assert_eq!(aglab(&["construct", fixture("add5").to_str().unwrap(), "--auto", "0,1"]).code, 2);
    assert_eq!(aglab(&["aggroup", fixture("sub5").to_str().unwrap()]).code, 0);
    assert_eq!(aglab(&["aggroup", ex2]).code, 1);
    assert_eq!(aglab(&["iso", ex2, fixture("sub5").to_str().unwrap()]).code, 1);
    assert_eq!(aglab(&["--help"]).code, 0);

    let dir = std::env::temp_dir().join(format!("aglab-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.tbl");
    std::fs::write(&bad, "2\na b\na b\nb c\n").unwrap();
    let r = aglab(&["classify", bad.to_str().unwrap()]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("line 4"), "{}", r.stderr);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn order_guard_from_environment() {
    let ex2 = fixture("ex2");
    let ex2 = ex2.to_str().unwrap();
    assert_eq!(aglab_env(&["classify", ex2], &[("AGLAB_MAX_ORDER", "4")]).code, 2);
    assert_eq!(aglab_env(&["classify", ex2], &[("AGLAB_MAX_ORDER", "5")]).code, 0);
    assert_eq!(aglab_env(&["classify", ex2], &[("AGLAB_MAX_ORDER", "99")]).code, 0);
    assert_eq!(aglab_env(&["classify", ex2], &[("AGLAB_MAX_ORDER", "lots")]).code, 2);
}

#[test]
fn table_outputs_parse_back() {
    let r = aglab(&["construct", fixture("add5").to_str().unwrap(), "--auto", "0,4,3,2,1"]);
    assert_eq!(r.code, 0);
    assert_eq!(parse_table(&r.stdout).unwrap(), fixtures::sub(5));

    let r = aglab(&["inflate", fixture("sl2").to_str().unwrap(), "--sizes", "1,2"]);
    assert_eq!(parse_table(&r.stdout).unwrap(), fixtures::infl3());

    let r = aglab(&["derive", fixture("sub5").to_str().unwrap()]);
    assert_eq!(parse_table(&r.stdout).unwrap(), fixtures::add(5));

    let r = aglab(&["extract", fixture("sub5").to_str().unwrap()]);
    assert_eq!(parse_table(&r.stdout).unwrap(), fixtures::add(5));
}

#[test]
fn automorphisms_by_label() {
    let r = aglab(&["autos", fixture("add5").to_str().unwrap(), "--involutive", "--efixed", "--json"]);
    let v: Value = serde_json::from_str(&r.stdout).unwrap();
    assert_eq!(v["count"], 2);
    let ex2 = fixture("ex2");
    let ex2 = ex2.to_str().unwrap();
    let r = aglab(&["extract", ex2, "--json"]);
    let v: Value = serde_json::from_str(&r.stdout).unwrap();
    let perm: Vec<usize> = serde_json::from_value(v["automorphism"]["perm"].clone()).unwrap();
    let labels = ["a", "b", "c", "d", "e"];
    let images: Vec<&str> = perm.iter().map(|&i| labels[i]).collect();

    let dir = std::env::temp_dir().join(format!("aglab-autos-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let sga = dir.join("sga.tbl");
    let extracted = aglab(&["extract", ex2]).stdout;
    std::fs::write(&sga, &extracted).unwrap();
    let r = aglab(&["construct", sga.to_str().unwrap(), "--auto", &images.join(",")]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert_eq!(parse_table(&r.stdout).unwrap(), fixtures::ex2());
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn census_emits_tables() {
    let dir = std::env::temp_dir().join(format!("aglab-census-{}", std::process::id()));
    let r = aglab(&[
        "census", "--order", "3", "--class", "sga", "--jobs", "2", "--emit-tables",
        dir.to_str().unwrap(),
    ]);
    assert_eq!(r.code, 0);
    let mut files: Vec<_> = std::fs::read_dir(&dir).unwrap().map(|e| e.unwrap().path()).collect();
    files.sort();
    assert_eq!(files.len(), 5);
    for f in &files {
        let g = parse_table(&std::fs::read_to_string(f).unwrap()).unwrap();
        assert!(aglab::derived::clifford_decompose(&g).is_ok());
    }
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn census_output_is_identical_across_worker_counts() {
    let outputs: Vec<String> = ["1", "2", "8"]
        .iter()
        .map(|j| aglab(&["census", "--order", "4", "--class", "cia", "--jobs", j, "--json"]).stdout)
        .collect();
    assert_eq!(outputs[0], outputs[1]);
    assert_eq!(outputs[1], outputs[2]);
}

#[test]
fn fixtures_round_trip_through_the_text_format() {
    for name in fixtures::names() {
        let text = fixtures::source(name).unwrap();
        let g = parse_table(text).unwrap();
        let normal = serialize_table(&g);
        assert_eq!(parse_table(&normal).unwrap(), g);
        assert_eq!(serialize_table(&parse_table(&normal).unwrap()), normal);
    }
}
