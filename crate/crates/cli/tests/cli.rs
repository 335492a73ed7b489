use std::path::PathBuf;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_parallelotope")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("parallelotope-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&["tables", "3"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "nonsense"]).status.code(), Some(2));
    assert_eq!(run(&["show"]).status.code(), Some(2));
    assert_eq!(run(&["tables", "1", "--in", "/nonexistent/atlas.json"]).status.code(), Some(2));
}

#[test]
fn zonotopal_enumeration() {
    let o = run(&["enumerate", "zonotopal"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let records = v["records"].as_array().unwrap();
    assert_eq!(records.len(), 17);
    assert_eq!(records[0]["graph_label"], "K5");
    assert_eq!(records[0]["m"], 10);
}

#[test]
fn verify_exit_codes() {
    let sdn = run(&["verify", "sdn"]);
    assert_eq!(sdn.status.code(), Some(0));
    assert!(stdout(&sdn).lines().all(|l| l.starts_with("PASS")));
    let unext = run(&["verify", "unext", "--format", "json"]);
    assert_eq!(unext.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(&stdout(&unext)).unwrap();
    let failed: Vec<&str> =
        v["checks"].as_array().unwrap().iter().filter(|c| c["passed"] == false).map(|c| c["name"].as_str().unwrap()).collect();
    assert_eq!(failed, ["parity-determines-class"]);
}

#[test]
fn atlas_file_round_trip() {
    let path = scratch("atlas.json");
    let p = path.to_str().unwrap();
    let o = run(&["--jobs", "1", "enumerate", "all", "--out", p]);
    assert!(o.status.success());
    let text = std::fs::read_to_string(&path).unwrap();

    let copy = scratch("copy.json");
    assert!(run(&["export", "--in", p, "--out", copy.to_str().unwrap()]).status.success());
    assert_eq!(std::fs::read_to_string(&copy).unwrap(), text);

    let t1 = stdout(&run(&["tables", "1", "--in", p]));
    assert_eq!(t1.lines().next(), Some("N_D\tm\tG"));
    assert_eq!(t1.lines().count(), 18);
    let t2 = stdout(&run(&["tables", "2", "--in", p]));
    assert!(t2.contains("St\t3\t34-,13+,14+\tC3\t2\talpha\n"));
    assert_eq!(t2.lines().count(), 36);

    let show: serde_json::Value = serde_json::from_str(&stdout(&run(&["show", "--id", "51", "--in", p]))).unwrap();
    assert_eq!(show["record"]["kind"], "cell24");
    assert_eq!(show["polytope"]["fvector"], serde_json::json!([24, 96, 96, 24]));
    assert_eq!(run(&["show", "--id", "52", "--in", p]).status.code(), Some(2));

    let classify = run(&["classify", "--in", p]);
    assert!(classify.status.success());
    assert!(stdout(&classify).starts_with("52 records"));
}
