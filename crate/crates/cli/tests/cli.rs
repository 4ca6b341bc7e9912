use std::process::{Command, Output};

use qdonald::invariants::InvariantTable;
use qdonald::series::SeriesRecord;
use qdonald::QSeries;

fn qdonald(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qdonald")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn invariants_json_has_leading_entry() {
    let o = qdonald(&["invariants", "--nf", "0", "--max-weight", "6", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["nf"], 0);
    let first = &v["rows"][0];
    assert_eq!((first["m"].as_u64(), first["n"].as_u64()), (Some(0), Some(0)));
    assert_eq!(first["value"], "-1");
    assert_eq!(first["h_combo"][0][0], "H1");
    assert_eq!(first["h_combo"][0][1], "-1/4");
    assert_eq!(v["rows"].as_array().unwrap().len(), 16);
}

#[test]
fn invariants_json_round_trips() {
    let o = qdonald(&["invariants", "--nf", "3", "--max-weight", "3", "--format", "json"]);
    let t: InvariantTable = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(t.get(1, 1).unwrap().value, "201/256");
    let again = serde_json::to_string_pretty(&t).unwrap() + "\n";
    assert_eq!(again, stdout(&o));
}

#[test]
fn criterion_suite_passes() {
    let o = qdonald(&["verify", "--suite", "criterion", "--max", "6"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let text = stdout(&o);
    assert!(text.contains("PASS Goettsche = D^0 at p^3 S^6"));
    assert!(!text.contains("FAIL"));
}

#[test]
fn qplus_text() {
    let o = qdonald(&["series", "--name", "Qplus", "--order", "5"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("q^(-1/8) * (1 + 28*q^(1/2) + 39*q + 196*q^(3/2) + 161*q^2"));
}

#[test]
fn series_json_round_trips() {
    let o = qdonald(&["series", "--name", "E2", "--order", "6", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let rec: SeriesRecord = serde_json::from_value(v["series"].clone()).unwrap();
    let s = QSeries::try_from(&rec).unwrap();
    assert_eq!(s.to_string(), v["text"].as_str().unwrap());
    assert_eq!(s.coeff_w(1).unwrap(), qdonald::int(-24));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["series", "--name", "nonsense"][..],
        &["invariants", "--nf", "1"],
        &["series", "--name", "E2", "--order", "0"],
        &["verify", "--suite", "everything"],
        &["frobnicate"],
    ] {
        let o = qdonald(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(o.stdout.is_empty(), "{args:?}");
    }
}

#[test]
fn computation_errors_exit_one() {
    let o = qdonald(&["series", "--name", "Ft:1"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("must be even"));
}

#[test]
fn output_is_deterministic() {
    let args = ["invariants", "--nf", "2", "--max-weight", "4", "--format", "csv"];
    let a = qdonald(&args);
    let b = Command::new(env!("CARGO_BIN_EXE_qdonald")).args(args).env("QDONALD_THREADS", "1").output().unwrap();
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    assert!(text.starts_with("m,n,monomial,value,h_combo\n0,0,1,-3,H2:-1/4;H0:27/4\n"));
}

#[test]
fn bad_thread_count_is_a_usage_error() {
    let o =
        Command::new(env!("CARGO_BIN_EXE_qdonald")).args(["hurwitz"]).env("QDONALD_THREADS", "zero").output().unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join(format!("qdonald-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("h.csv");
    let o = qdonald(&["hurwitz", "--max", "4", "--format", "csv", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), "n,value\n0,-1/12\n1,0\n2,0\n3,1/3\n4,1/2\n");
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn goettsche_matches_invariants() {
    let g: serde_json::Value =
        serde_json::from_slice(&qdonald(&["goettsche", "--max-weight", "4", "--format", "json"]).stdout).unwrap();
    let d: InvariantTable =
        serde_json::from_slice(&qdonald(&["invariants", "--nf", "0", "--max-weight", "4", "--format", "json"]).stdout)
            .unwrap();
    for row in g.as_array().unwrap() {
        let (m, n) = (row["m"].as_u64().unwrap(), row["n"].as_u64().unwrap());
        assert_eq!(row["value"].as_str().unwrap(), d.get(m, n).unwrap().value);
    }
}

#[test]
fn swcheck_and_nf4_run() {
    let o = qdonald(&["swcheck", "--nf", "2", "--order", "20"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).ends_with("0 failed\n"));
    let o = qdonald(&["nf4", "--order", "3"]);
    assert_eq!(stdout(&o), "q^(1/2) * (3 + 66*q + 639*q^2 + O(q^(5/2)))\n");
}

#[test]
fn insufficient_precision_suggests_order() {
    let o = qdonald(&["verify", "--suite", "swcurves", "--order", "1"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("try a larger --order"));
}
