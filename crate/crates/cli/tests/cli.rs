use std::fs;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn dunkl(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dunkl"))
        .args(args)
        .output()
        .expect("binary should run")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("stdout should be JSON")
}

const KERNEL: [&str; 11] = [
    "kernel", "--k1", "0.5", "--k2", "0.5", "--x", "1", "--y", "0.3", "--method", "direct",
];

#[test]
fn kernel_point_is_positive() {
    let o = dunkl(&KERNEL);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    for key in ["k1", "k2", "x", "y", "method", "value", "est_error"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    assert!(v["value"]["re"].as_f64().unwrap() > 0.0);
    assert_eq!(v["method"], "direct");
}

#[test]
fn direct_and_mourou_agree_within_estimates() {
    let d = json(&dunkl(&KERNEL));
    let mut args = KERNEL;
    args[10] = "mourou";
    let m = json(&dunkl(&args));
    let (dv, mv) = (
        d["value"]["re"].as_f64().unwrap(),
        m["value"]["re"].as_f64().unwrap(),
    );
    let est = d["est_error"].as_f64().unwrap() + m["est_error"].as_f64().unwrap();
    assert!((dv - mv).abs() <= est, "{dv} vs {mv}, est {est}");
}

#[test]
fn bad_point_exits_2_with_message() {
    let o = dunkl(&[
        "kernel", "--k1", "0.5", "--k2", "0.5", "--x", "1", "--y", "2",
    ]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("require |y| < |x|"));
}

#[test]
fn argument_errors_exit_2() {
    assert_eq!(code(&dunkl(&["kernel", "--k1", "0.5"])), 2);
    assert_eq!(code(&dunkl(&["no-such-command"])), 2);
    assert_eq!(
        code(&dunkl(&[
            "apply-v",
            "--k1",
            "1",
            "--k2",
            "1",
            "--function",
            "nope",
            "--x",
            "1"
        ])),
        2
    );
    assert_eq!(
        code(&dunkl(&[
            "apply-vt",
            "--k1",
            "1",
            "--k2",
            "1",
            "--function",
            "one",
            "--y",
            "0"
        ])),
        2
    );
    assert_eq!(code(&dunkl(&["verify", "--suite", "nope"])), 2);
    assert_eq!(
        code(&dunkl(&["verify", "--suite", "limits", "--tol", "-1"])),
        2
    );
    assert_eq!(code(&dunkl(&["scan", "--x-range", "2:1:3"])), 2);
    assert_eq!(code(&dunkl(&["scan", "--k1-range", "-1:1:2"])), 2);
    assert_eq!(code(&dunkl(&["--help"])), 0);
}

#[test]
fn non_convergence_exits_3() {
    // a single Gauss–Jacobi node cannot meet the default error bound
    let o = dunkl(&[
        "kernel",
        "--k1",
        "0.5",
        "--k2",
        "0.5",
        "--x",
        "2.4",
        "--y",
        "-2",
        "--jacobi-nodes",
        "1",
    ]);
    assert_eq!(code(&o), 3, "{}", String::from_utf8_lossy(&o.stderr));
}

#[test]
fn eigen_suite_passes_and_unmeetable_tolerance_fails() {
    let o = dunkl(&["verify", "--suite", "eigen"]);
    assert_eq!(code(&o), 0);
    let rows = json(&o);
    let rows = rows.as_array().unwrap();
    assert_eq!(rows.len(), 162);
    for key in ["check", "point", "lhs", "rhs", "gap", "tol", "pass"] {
        assert!(rows[0].get(key).is_some(), "missing {key}");
    }
    assert_eq!(
        code(&dunkl(&["verify", "--suite", "eigen", "--tol", "1e-30"])),
        1
    );
}

#[test]
fn positivity_suite_reports_min() {
    let o = dunkl(&["verify", "--suite", "positivity"]);
    assert_eq!(code(&o), 0);
    let rows = json(&o);
    let last = rows.as_array().unwrap().last().unwrap().clone();
    assert_eq!(last["check"], "positive-min");
    assert!(last["lhs"]["re"].as_f64().unwrap() > 0.0);
}

#[test]
fn default_scan_is_positive_with_summary() {
    let o = dunkl(&["scan"]);
    assert_eq!(code(&o), 0);
    let text = String::from_utf8(o.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "k1,k2,x,y,value");
    assert_eq!(lines.len(), 1 + 9 * 6 * 9 + 1);
    assert!(lines.last().unwrap().starts_with("# min_value="));
    assert!(lines.last().unwrap().contains("all_positive=true"));
    assert!(!text.contains('\r'));
    // x > 0 with y → −x
    let corner = lines
        .iter()
        .find(|l| l.starts_with("0.3,0.3,0.6,-0.59994,"))
        .unwrap();
    assert!(corner.rsplit(',').next().unwrap().parse::<f64>().unwrap() > 0.0);
}

#[test]
fn single_scan_cell_matches_kernel_command() {
    let o = dunkl(&[
        "scan",
        "--k1-range",
        "0.5:0.5:1",
        "--k2-range",
        "0.5:0.5:1",
        "--x-range",
        "1:1:1",
        "--y-frac-range",
        "0.3:0.3:1",
    ]);
    assert_eq!(code(&o), 0);
    let text = String::from_utf8(o.stdout).unwrap();
    let cell = text.lines().nth(1).unwrap();
    let value = cell.rsplit(',').next().unwrap();
    let k = json(&dunkl(&KERNEL));
    assert_eq!(value, k["value"]["re"].to_string());
}

#[test]
fn output_is_deterministic_and_out_flag_writes_file() {
    let dir = TempDir::new().unwrap();
    let a = dir.path().join("a.csv");
    let b = dir.path().join("b.csv");
    for p in [&a, &b] {
        let o = dunkl(&[
            "verify",
            "--suite",
            "limits",
            "--format",
            "csv",
            "--out",
            p.to_str().unwrap(),
        ]);
        assert_eq!(code(&o), 0);
        assert!(o.stdout.is_empty());
    }
    let (ta, tb) = (fs::read(&a).unwrap(), fs::read(&b).unwrap());
    assert_eq!(ta, tb);
    assert!(String::from_utf8(ta)
        .unwrap()
        .starts_with("check,point,lhs_re,lhs_im,rhs_re,rhs_im,gap,tol,pass\n"));
    assert_eq!(dunkl(&KERNEL).stdout, dunkl(&KERNEL).stdout);
}

#[test]
fn complex_multiplicity_and_operators() {
    let o = dunkl(&[
        "kernel", "--k1", "0.6", "--k1-im", "0.8", "--k2", "1.1", "--k2-im", "-0.4", "--x", "1",
        "--y", "0.3",
    ]);
    assert_eq!(code(&o), 0);
    assert_ne!(json(&o)["value"]["im"].as_f64().unwrap(), 0.0);

    let v = json(&dunkl(&[
        "apply-v",
        "--k1",
        "0.5",
        "--k2",
        "0.5",
        "--function",
        "plane:1.5",
        "--x",
        "1",
    ]));
    let g = json(&dunkl(&[
        "opdam", "--k1", "0.5", "--k2", "0.5", "--lambda", "1.5", "--x", "1",
    ]));
    for part in ["re", "im"] {
        let (a, b) = (
            v["value"][part].as_f64().unwrap(),
            g["value"][part].as_f64().unwrap(),
        );
        assert!((a - b).abs() < 1e-6, "{part}: {a} vs {b}");
    }
    let t = json(&dunkl(&[
        "apply-vt",
        "--k1",
        "0.7",
        "--k2",
        "0.4",
        "--function",
        "bump:2",
        "--y",
        "2.5",
    ]));
    assert_eq!(t["value"]["re"].as_f64().unwrap(), 0.0);
}
