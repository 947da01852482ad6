use std::process::Command;

fn delsub(args: &[&str], workers: Option<&str>) -> (i32, String) {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_delsub"));
    cmd.args(args);
    match workers {
        Some(w) => cmd.env("DELSUB_WORKERS", w),
        None => cmd.env_remove("DELSUB_WORKERS"),
    };
    let out = cmd.output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap())
}

fn json(s: &str) -> serde_json::Value {
    assert_eq!(s.trim_end().lines().count(), 1, "single-line output: {s}");
    serde_json::from_str(s).unwrap()
}

#[test]
fn construct_reports_params_and_stats() {
    let (code, out) = delsub(&["construct", "--n", "12"], None);
    assert_eq!(code, 0);
    let v = json(&out);
    for key in ["n", "c0", "c1", "c2", "size", "redundancy"] {
        assert!(v.get(key).is_some(), "{key}");
    }
    assert_eq!(v["size"], 5);
}

#[test]
fn decode_schema() {
    let (code, out) = delsub(
        &["decode", "--n", "16", "--c0", "1", "--c1", "8", "--c2", "439", "--word", "110111100101110"],
        None,
    );
    assert_eq!(code, 0);
    let v = json(&out);
    assert_eq!(v["count"], 1);
    assert_eq!(v["candidates"][0]["word"], "1101101000101110");
    assert!(v["candidates"][0]["d"].is_u64());
    assert!(v["candidates"][0].get("e").is_some());
}

#[test]
fn decode_wrong_length_is_usage_error() {
    let (code, out) = delsub(&["decode", "--n", "16", "--params", "1,8,439", "--word", "1101"], None);
    assert_eq!(code, 2);
    assert!(out.is_empty());
}

#[test]
fn examples_replay() {
    let (code, out) = delsub(&["examples", "--format", "text"], None);
    assert_eq!(code, 0);
    assert!(out.contains("u=(0,0,-1,-1,-1,-1,0,0,0,0,1,0,1,1,0,0)"));
}

#[test]
fn verify_output_is_worker_independent() {
    let args = ["verify", "--n", "16"];
    let (code, base) = delsub(&args, None);
    assert_eq!(code, 0);
    assert_eq!(json(&base)["passed"], true);
    for w in ["2", "3", "8"] {
        assert_eq!(delsub(&args, Some(w)).1, base);
    }
    assert_eq!(delsub(&["verify", "--n", "16", "--workers", "5"], Some("2")).1, base);
}

#[test]
fn table_and_ball() {
    let (code, out) = delsub(&["table", "--n", "8,12"], Some("2"));
    assert_eq!(code, 0);
    assert_eq!(json(&out).as_array().unwrap().len(), 2);
    let (code, out) = delsub(&["ball", "--n", "2", "--word", "10"], None);
    assert_eq!(code, 0);
    assert_eq!(json(&out)["ball"], serde_json::json!(["0", "1"]));
}

#[test]
fn smoke_is_seeded() {
    let args = ["verify", "--n", "40", "--smoke", "200", "--seed", "7"];
    let (code, a) = delsub(&args, None);
    assert_eq!(code, 0);
    assert_eq!(json(&a)["mode"], "smoke");
    assert_eq!(delsub(&args, Some("4")).1, a);
}
