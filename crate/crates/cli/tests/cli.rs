use std::path::PathBuf;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nestdim"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn golden(name: &str) -> String {
    let p = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/tests/golden").join(name);
    std::fs::read_to_string(p).unwrap()
}

#[test]
fn dim_of_the_spin_representation() {
    let o = run(&["dim", "B3G2", "--lambda", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "8\n");
}

#[test]
fn dim_accepts_keys_and_parameters() {
    let a = run(&["dim", "cglc", "l=4", "--lambda", "1,0"]);
    let b = run(&["dim", "cglc(l=4)", "--lambda", "1,0"]);
    assert_eq!(stdout(&a), "36\n");
    assert_eq!(stdout(&a), stdout(&b));
}

#[test]
fn dim_json_carries_all_paths() {
    let o = run(&["dim", "E6D5", "--lambda", "0,1,0", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["restricted_product"], "78");
    assert_eq!(v["oracle"], "78");
    assert_eq!(v["matches"], true);
    let fast = run(&["dim", "E6D5", "--lambda", "0,1,0", "--format", "json", "--fast"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&fast)).unwrap();
    assert_eq!(v["matches"], false);
    assert!(v.get("oracle").is_none());
}

#[test]
fn verify_eiv_succeeds() {
    let o = run(&["verify", "EIV", "--max-total", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("EIV: 10 weights"));
}

#[test]
fn parallel_sweeps_are_deterministic() {
    let a = run(&["table", "D4G2", "--max-total", "3", "--format", "csv"]);
    let b = run(&["table", "D4G2", "--max-total", "3", "--format", "csv", "--parallel"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(stdout(&a), stdout(&b));
    let lines: Vec<String> = stdout(&a).lines().map(String::from).collect();
    assert_eq!(lines[0], "pair,k,restricted,oracle,match");
    assert_eq!(lines.len(), 1 + 20);
    assert!(lines.iter().skip(1).all(|l| l.ends_with(",true")));
}

#[test]
fn bad_input_exits_with_two() {
    for args in [
        vec!["describe", "NOPE"],
        vec!["describe", "BI", "l=3", "r=5"],
        vec!["describe", "BI", "l"],
        vec!["dim", "B4B3", "--lambda", "1"],
        vec!["dim", "B4B3", "--lambda", "-1,0"],
        vec!["dim", "FII"],
        vec!["frobnicate"],
    ] {
        let o = run(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn describe_matches_golden_text() {
    for (args, file) in [
        (vec!["describe", "FII"], "FII.txt"),
        (vec!["describe", "CII-rk1", "l=4"], "CII-rk1_l_4.txt"),
        (vec!["describe", "slpq(p=2,q=5)"], "slpq_p_2_q_5.txt"),
    ] {
        let o = run(&args);
        assert_eq!(o.status.code(), Some(0));
        assert_eq!(stdout(&o), golden(file), "{args:?}");
    }
}

#[test]
fn describe_json_round_trips() {
    let dir = std::env::temp_dir().join(format!("nestdim-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    for pair in ["FII", "E6D5", "G2A2", "cglc(l=3)"] {
        let json = stdout(&run(&["describe", pair, "--format", "json"]));
        let path = dir.join("d.json");
        std::fs::write(&path, &json).unwrap();
        let p = path.to_str().unwrap();
        assert_eq!(stdout(&run(&["describe", "--from-json", p, "--format", "json"])), json);
        assert_eq!(
            stdout(&run(&["describe", "--from-json", p])),
            stdout(&run(&["describe", pair]))
        );
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert!(v["rows"][0]["delta_pairing"].is_string());
    }
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn list_names_every_family() {
    let o = run(&["list", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let ids: Vec<&str> = v.as_array().unwrap().iter().map(|f| f["id"].as_str().unwrap()).collect();
    assert_eq!(ids.len(), 34);
    for id in ["FII", "E6D5", "cglc", "DI-split", "G"] {
        assert!(ids.contains(&id));
    }
}
