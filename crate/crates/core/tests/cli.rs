// Copyright contributors to the qldpc-arch project
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

use std::path::Path;
use std::process::{Command, Output};

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qldpc-arch"))
        .args(args)
        .env_remove("QLDPC_ARCH_THREADS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn codes_prints_five_rows() {
    let o = bin(&["codes"]);
    assert!(o.status.success());
    let s = stdout(&o);
    let lines: Vec<&str> = s.lines().collect();
    assert_eq!(lines.len(), 6);
    assert!(lines[0].starts_with("m,n,k,d_claimed,d_verified_or_bound"));
    assert!(lines[1].starts_with("4,30,8,4,4,true"));
    assert!(lines[5].ends_with(",1620"));
}

#[test]
fn fh_example_in_json() {
    let o = bin(&["estimate-fh", "--L", "16", "--regime", "1e-3", "--t-override", "8e6", "--tc", "1e-6"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["physical_qubits"], 62154);
}

#[test]
fn clean_hadamard_file() {
    let dir = tempfile::tempdir().unwrap();
    let h = write(dir.path(), "H.txt", "01\n10\n");
    let o = bin(&["clean", "--n", "1", "--matrix", &h, "--w", "1"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["residual"], serde_json::json!(["10", "01"]));
    assert_eq!(v["residual_trivial_on_prefix"], true);
    assert!(v["rotations"].as_array().unwrap().len() <= 4);
}

#[test]
fn compile_reports_counts() {
    let dir = tempfile::tempdir().unwrap();
    let c = write(dir.path(), "c.txt", "QUBITS 2\nCLIFFORD H 0\nT 0\nCLIFFORD CX 0 1\nMEASURE XZ adaptive\nT 1\n");
    let o = bin(&["compile", &c]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["t_count"], 2);
    assert_eq!(v["measurement_count"], 1);
    assert_eq!(v["adaptive_count"], 1);
    assert_eq!(v["steps"].as_array().unwrap().len(), 2 + 2 + 1);
    assert_eq!(v["steps"][0]["axis"], "XI");
}

#[test]
fn output_file_is_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.csv");
    let b = dir.path().join("b.csv");
    for p in [&a, &b] {
        let o = bin(&["estimate-fh", "--table", "--t-override", "8e6", "-o", p.to_str().unwrap()]);
        assert!(o.status.success());
    }
    let (x, y) = (std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    assert_eq!(x, y);
    let text = String::from_utf8(x).unwrap();
    // 13 even L, two regimes, two cycle times.
    assert_eq!(text.lines().count(), 1 + 52);
    let header = text.lines().next().unwrap();
    assert!(header.starts_with("t_c,l,"), "{header}");
    assert!(header.contains("total_runtime_human"));
}

#[test]
fn config_overrides_and_errors() {
    let dir = tempfile::tempdir().unwrap();
    let good = write(dir.path(), "good.toml", "[hardware]\nregime = \"1e-4\"\n[fh]\nt_override = 8e6\n");
    let o = bin(&["--config", &good, "estimate-fh", "--L", "16"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["physical_qubits"], 21564);
    // Flag beats config.
    let o = bin(&["--config", &good, "estimate-fh", "--L", "16", "--regime", "1e-3"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["physical_qubits"], 62154);

    let bad = write(dir.path(), "bad.toml", "[hardware]\ncycle_time = 1e-6\n");
    let o = bin(&["--config", &bad, "codes"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("cycle_time"));

    let o = bin(&["--config", "/nonexistent/x.toml", "codes"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("/nonexistent/x.toml"));
}

#[test]
fn exit_codes() {
    assert_eq!(bin(&["nonsense"]).status.code(), Some(1));
    assert_eq!(bin(&["estimate-fh", "--L", "15", "--t-override", "1e6"]).status.code(), Some(1));
    let args = ["estimate-rsa", "--qubit-cap", "20000"];
    assert_eq!(bin(&args).status.code(), Some(0));
    let mut strict = vec!["--fail-on-infeasible"];
    strict.extend(args);
    assert_eq!(bin(&strict).status.code(), Some(2));
    assert_eq!(bin(&["--help"]).status.code(), Some(0));
}

#[test]
fn rsa_explicit_point_as_csv() {
    let o = bin(&[
        "estimate-rsa",
        "--s",
        "3",
        "--f",
        "40",
        "--l",
        "22",
        "--w3",
        "3",
        "--w4",
        "3",
        "--rho",
        "1",
        "--format",
        "csv",
    ]);
    assert!(o.status.success());
    let s = stdout(&o);
    let mut rdr = csv::Reader::from_reader(s.as_bytes());
    let headers = rdr.headers().unwrap().clone();
    let row = rdr.records().next().unwrap().unwrap();
    let get = |k: &str| row.get(headers.iter().position(|h| h == k).unwrap()).unwrap().to_string();
    assert_eq!(get("physical_qubits"), "135804");
    assert!(!get("total_runtime_human").is_empty());
}

#[test]
fn worker_count_does_not_change_output() {
    let run = |threads: &str| {
        Command::new(env!("CARGO_BIN_EXE_qldpc-arch"))
            .args(["estimate-rsa", "--runtime-cap", "week", "--tc", "1e-5"])
            .env("QLDPC_ARCH_THREADS", threads)
            .output()
            .unwrap()
    };
    let (a, b) = (run("1"), run("4"));
    assert!(a.status.success() && b.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(run("many").status.code(), Some(1));
}
