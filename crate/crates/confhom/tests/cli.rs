use std::process::{Command, Output};

fn confhom(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_confhom"))
        .args(args)
        .env_remove("CONFHOM_THREADS")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn betti_of_the_disc_over_q() {
    let o = confhom(&["betti", "--g", "0", "--coeff", "q", "--max-n", "4"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("g,p,coeff,n,i,dim,torsion"));
    for line in lines {
        let f: Vec<&str> = line.split(',').collect();
        let (n, i, dim): (u32, u32, u64) = (f[3].parse().unwrap(), f[4].parse().unwrap(), f[5].parse().unwrap());
        let expected = (i == 0 || (i == 1 && n >= 2)) as u64;
        assert_eq!(dim, expected, "{line}");
    }
}

#[test]
fn integral_torus_example() {
    let o = confhom(&["betti", "--g", "1", "--coeff", "z", "--max-n", "2"]);
    assert!(o.status.success());
    assert!(stdout(&o).lines().any(|l| l == "1,,z,2,1,2,2"));
}

#[test]
fn both_pipelines_agree() {
    let o = confhom(&[
        "betti",
        "--g",
        "1",
        "--p",
        "3",
        "--pipeline",
        "both",
        "--max-n",
        "6",
        "--format",
        "json",
    ]);
    assert!(o.status.success());
    let v = json(&o);
    assert_eq!(v["discrepancies"], serde_json::json!([]));
    assert_eq!(v["bounds"]["max_n"], 6);
    assert_eq!(v["version"], 1);
}

#[test]
fn output_is_independent_of_threads() {
    let args = [
        "betti",
        "--g",
        "2",
        "--p",
        "5",
        "--pipeline",
        "both",
        "--max-n",
        "6",
        "--format",
        "json",
    ];
    let one = confhom(&[&["--threads", "1"], &args[..]].concat());
    let four = confhom(&[&["--threads", "4"], &args[..]].concat());
    assert_eq!(one.stdout, four.stdout);
    let e1 = confhom(&[
        "--threads",
        "1",
        "ext",
        "--u",
        "4",
        "--p",
        "3",
        "--weight",
        "16",
        "--bar",
        "6",
        "--pipeline",
        "both",
    ]);
    let e4 = confhom(&[
        "--threads",
        "4",
        "ext",
        "--u",
        "4",
        "--p",
        "3",
        "--weight",
        "16",
        "--bar",
        "6",
        "--pipeline",
        "both",
    ]);
    assert!(e1.status.success());
    assert_eq!(e1.stdout, e4.stdout);
}

#[test]
fn nui_examples() {
    let v = json(&confhom(&["nui", "--u", "2", "--p", "3"]));
    let stages = v["result"]["stages"].as_array().unwrap();
    assert_eq!(stages.len(), 2);
    assert_eq!(stages[0]["bars"], serde_json::json!([[-2, 1]]));
    assert_eq!(stages[1]["bars"], serde_json::json!([[0, 1]]));
    assert_eq!(v["result"]["identity"], true);

    let v = json(&confhom(&["nui", "--u", "0", "--p", "3"]));
    assert_eq!(v["result"]["stages"][0]["bars"], serde_json::json!([[0, 1]]));
    assert_eq!(v["result"]["stages"].as_array().unwrap().len(), 1);

    let v = json(&confhom(&["nui", "--u", "8", "--p", "3"]));
    assert_eq!(v["result"]["h"], 2);
    assert!(v["result"]["stages"]
        .as_array()
        .unwrap()
        .iter()
        .all(|s| s["i"].as_u64().unwrap() <= 2));

    let v = json(&confhom(&["barcode", "--u", "2", "--p", "3", "--i", "5"]));
    assert_eq!(v["result"]["bars"], serde_json::json!([]));
}

#[test]
fn mcg_catalog() {
    let o = confhom(&["mcg", "--g", "1", "--p", "3", "--catalog", "id,Da^3,Da", "--max-n", "6"]);
    assert!(o.status.success());
    let v = json(&o);
    let c = v["result"]["candidates"].as_array().unwrap();
    assert_eq!(c[0]["xi_zero"], true);
    assert_eq!(c[0]["chain_trivial"], true);
    assert_eq!(c[1]["xi_mod_p_zero"], true);
    assert_eq!(c[1]["chain_trivial"], true);
    assert_eq!(c[2]["xi_zero"], false);
}

#[test]
fn mcg_parse_errors_name_the_line() {
    let dir = std::env::temp_dir().join(format!("confhom-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bad.txt");
    std::fs::write(&path, "ok: g1 -> g1\nbad: g1 -> g9\n").unwrap();
    let o = confhom(&["mcg", "--g", "1", "--p", "3", "--candidates", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(confhom(&["verify", "nightly"]).status.code(), Some(2));
    assert_eq!(
        confhom(&["betti", "--g", "1", "--p", "4", "--max-n", "2"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        confhom(&[
            "betti",
            "--g",
            "1",
            "--coeff",
            "z",
            "--pipeline",
            "structured",
            "--max-n",
            "2"
        ])
        .status
        .code(),
        Some(2)
    );
    assert_eq!(
        confhom(&["betti", "--g", "3", "--p", "3", "--max-n", "20", "--max-cells", "1000"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(confhom(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn bad_thread_variable_is_a_usage_error() {
    let o = Command::new(env!("CARGO_BIN_EXE_confhom"))
        .args(["nui", "--u", "1", "--p", "3"])
        .env("CONFHOM_THREADS", "many")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}
