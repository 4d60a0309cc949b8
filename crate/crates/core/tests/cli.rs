use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bc1-jacobi")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn coeffs(o: &Output) -> Vec<(i64, String, String)> {
    let v: serde_json::Value = serde_json::from_str(&stdout(o)).unwrap();
    v[0]["coeffs"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| {
            (
                c["key"].as_i64().unwrap(),
                c["num"].as_str().unwrap().to_string(),
                c["den"].as_str().unwrap().to_string(),
            )
        })
        .collect()
}

fn s(a: &str, b: &str) -> (String, String) {
    (a.to_string(), b.to_string())
}

#[test]
fn compute_e_minus_one() {
    let o = run(&["compute", "--family", "E", "--k1", "1", "--k2", "1", "--n", "-1"]);
    assert_eq!(o.status.code(), Some(0));
    let c: Vec<_> = coeffs(&o).into_iter().map(|(k, n, d)| (k, (n, d))).collect();
    assert_eq!(c, vec![(-1, s("1", "1")), (0, s("2", "5")), (1, s("3", "5"))]);
}

#[test]
fn compute_free_case() {
    let o = run(&["compute", "--family", "E", "--k1", "0", "--k2", "0", "--n", "4"]);
    assert_eq!(coeffs(&o), vec![(4, "1".to_string(), "1".to_string())]);
}

#[test]
fn compute_matrix_csv() {
    let o = run(&["compute", "--family", "M", "--k1", "1", "--k2", "1", "--N", "0", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "family,k1,k2,scale,params,row,col,key,num,den\n\
         M,1,1,1,N=0,0,0,0,1,1\n\
         M,1,1,1,N=0,0,1,0,1,4\n\
         M,1,1,1,N=0,1,1,0,1,1\n"
    );
}

#[test]
fn compute_is_deterministic() {
    let args = ["compute", "--family", "P", "--k1", "2", "--k2", "1", "--range", "4"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}

#[test]
fn compute_writes_file() {
    let dir = std::env::temp_dir().join(format!("bc1-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("m.json");
    let o = run(&["compute", "--family", "monic", "--N", "2", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.contains("\"family\": \"monic\""));
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn verify_examples_pass() {
    for args in [
        &["verify", "--suite", "eigen", "--k1", "2", "--k2", "3", "--range", "8"][..],
        &["verify", "--suite", "spherical", "--m", "4", "--degree", "8"],
        &["verify", "--suite", "shift", "--alpha", "3/2", "--beta", "1/2", "--N", "12"],
        &["verify", "--suite", "transmute"],
    ] {
        let o = run(args);
        assert_eq!(o.status.code(), Some(0), "{args:?}\n{}", stdout(&o));
        assert!(!stdout(&o).contains("FAILS"));
    }
}

#[test]
fn crosscheck_examples() {
    let o = run(&["crosscheck", "--k1", "1", "--k2", "1", "--degree", "12"]);
    assert_eq!(o.status.code(), Some(0));
    let o = run(&["crosscheck", "--k1", "2", "--k2", "1", "--degree", "10"]);
    assert_eq!(o.status.code(), Some(0));
    let o = run(&["crosscheck", "--k1", "2", "--k2", "1", "--degree", "10", "--tol", "0"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["compute", "--family", "E", "--k1", "1/2", "--n", "1"][..],
        &["compute", "--family", "E", "--n", "1", "--scale", "3"],
        &["compute", "--family", "E"],
        &["verify", "--suite", "nope"],
        &["crosscheck", "--k1", "1/2"],
        &["frobnicate"],
    ] {
        assert_eq!(run(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn float_mode_accepts_rational_k() {
    let o = run(&["compute", "--family", "E", "--k1", "1/2", "--k2", "1", "--mode", "float", "--n", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(coeffs(&o)[0], (0, "1".to_string(), "7".to_string()));
}
