use std::process::{Command, Output};

use poschart::catalog;
use poschart::json::{ChartOut, ErrorOut, FanOut, NefOut};
use poschart::scattering::ScatteringResult;
use serde_json::Value;

fn poschart(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_poschart")).args(args).output().expect("binary runs")
}

fn ok_json(args: &[&str]) -> Value {
    let out = poschart(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn failure(args: &[&str]) -> (i32, ErrorOut) {
    let out = poschart(args);
    assert!(out.stdout.is_empty(), "{args:?} wrote to stdout");
    let err: ErrorOut = serde_json::from_slice(&out.stderr).expect("stderr is error JSON");
    (out.status.code().expect("exit code"), err)
}

#[test]
fn pentagon_chart_output() {
    let c: ChartOut = serde_json::from_value(ok_json(&["chart", "--catalog", "pentagon"])).unwrap();
    let e = catalog::get("pentagon").unwrap();
    let chart = e.chart(None).unwrap();
    assert_eq!(c.m, chart.m.as_ref().unwrap().value);
    assert_eq!(c.ideal, chart.ideal.as_ref().unwrap().value);
    assert_eq!(c.dim, 2);
    assert_eq!(c.num_rays, 5);
    assert_eq!(c.sections.len(), 3);
}

#[test]
fn perm3_nef_cone() {
    let n: NefOut = serde_json::from_value(ok_json(&["nef", "--catalog", "perm3"])).unwrap();
    assert_eq!((n.dim, n.ray_count, n.rays.len()), (11, 37, 37));
}

#[test]
fn fan_output_reports_torsion() {
    let f: FanOut = serde_json::from_value(ok_json(&["fan", "--catalog", "diamond"])).unwrap();
    assert_eq!(f.class_group.torsion, vec![2]);
    assert!(f.simplicial && !f.smooth);
    let f: FanOut = serde_json::from_value(ok_json(&["fan", "--catalog", "hexagon"])).unwrap();
    assert!(f.smooth);
    assert_eq!(f.maximal_cones.len(), 6);
    assert!(f.class_group.torsion.is_empty());
}

#[test]
fn pentagon_scattering_count_and_determinism() {
    let args = ["scattering", "--catalog", "pentagon", "--x", "3/1,5/2,1/1,7/3,2/1"];
    let a = poschart(&args);
    let b = poschart(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let r: ScatteringResult = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(r.count, 2);
    assert_eq!(r.batch_counts, [2, 2]);
    let mut threaded = args.to_vec();
    threaded.extend(["--jobs", "3"]);
    assert_eq!(poschart(&threaded).stdout, a.stdout);
    let mut single = args.to_vec();
    single.extend(["--jobs", "1"]);
    assert_eq!(poschart(&single).stdout, a.stdout);
}

#[test]
fn every_output_is_deterministic() {
    for args in [
        vec!["chart", "--catalog", "hexagon", "--chart", "chart2"],
        vec!["verify", "--catalog", "pentagon", "--seed", "5"],
        vec!["moment", "--catalog", "p1xp1_e"],
        vec!["degree", "--catalog", "hexagon"],
        vec!["catalog", "--catalog", "pezzotope"],
    ] {
        assert_eq!(poschart(&args).stdout, poschart(&args).stdout, "{args:?}");
    }
}

#[test]
fn verify_passes_on_every_catalog_chart() {
    for e in catalog::all() {
        if e.expected_error.is_some() {
            continue;
        }
        for c in &e.charts {
            let v = ok_json(&["verify", "--catalog", e.name, "--chart", c.label]);
            assert_eq!(v["ok"], Value::Bool(true), "{} {}", e.name, c.label);
        }
    }
}

#[test]
fn assumption_violations_exit_3() {
    for (name, kind) in [("p121", "NotSmoothFan"), ("diamond", "Torsion")] {
        let (code, err) = failure(&["chart", "--catalog", name]);
        assert_eq!(code, 3);
        assert_eq!(err.error, kind);
        assert!(err.clause.is_some());
    }
}

#[test]
fn resource_limit_exits_4() {
    let (code, err) = failure(&["saturate", "--catalog", "perm3"]);
    assert_eq!(code, 4);
    assert_eq!(err.error, "ResourceLimit");
    let (code, _) = failure(&["degree", "--catalog", "hexagon", "--budget", "2"]);
    assert_eq!(code, 4);
}

#[test]
fn input_errors_exit_2() {
    let (code, err) = failure(&["frobnicate"]);
    assert_eq!((code, err.error.as_str()), (2, "Usage"));
    let (code, err) = failure(&["chart", "--catalog", "nonagon"]);
    assert_eq!((code, err.error.as_str()), (2, "UnknownEntry"));
    assert!(err.message.contains("pentagon"));
    let (code, _) = failure(&["moment", "--catalog", "pentagon", "--t", "1,2,3"]);
    assert_eq!(code, 2);
    let (code, _) = failure(&["moment", "--catalog", "pentagon", "--t", "1/0,1"]);
    assert_eq!(code, 2);
    let (code, err) = failure(&["moment", "--catalog", "pentagon", "--t", "-1,1"]);
    assert_eq!((code, err.error.as_str()), (2, "PoleAt"));
    let (code, _) = failure(&["chart", "--input", "/nonexistent/poly.json"]);
    assert_eq!(code, 2);
    let (code, _) = failure(&["chart"]);
    assert_eq!(code, 2);
}

#[test]
fn schema_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"{"vertices": [[0, 0]], "colour": "red"}"#).unwrap();
    let (code, err) = failure(&["chart", "--input", bad.to_str().unwrap()]);
    assert_eq!((code, err.error.as_str()), (2, "Schema"));
    std::fs::write(&bad, "not json").unwrap();
    let (code, _) = failure(&["chart", "--sections", bad.to_str().unwrap()]);
    assert_eq!(code, 2);
}

#[test]
fn file_inputs_and_output_flag() {
    let dir = tempfile::tempdir().unwrap();
    let poly = dir.path().join("pentagon.json");
    std::fs::write(&poly, r#"{"vertices": [[0,0],[0,2],[2,2],[2,1],[1,0]]}"#).unwrap();
    let from_polytope: ChartOut = serde_json::from_value(ok_json(&["chart", "--input", poly.to_str().unwrap()])).unwrap();
    assert_eq!(from_polytope.num_rays, 5);

    let facets = dir.path().join("square.json");
    std::fs::write(&facets, r#"{"facets": {"normals": [[1,0],[0,1],[-1,0],[0,-1]], "offsets": [0, 0, "1", 1]}}"#).unwrap();
    let fan: FanOut = serde_json::from_value(ok_json(&["fan", "--input", facets.to_str().unwrap()])).unwrap();
    assert_eq!(fan.f.len(), 2);
    assert_eq!(fan.f[0].len(), 4);

    let sections = dir.path().join("sections.json");
    std::fs::write(
        &sections,
        r#"{"sections": ["1 + t1", "1 + t2", "1 + t2 + t1*t2"], "ray_order": [[1,0,-1,-1,0],[0,1,1,0,-1]]}"#,
    )
    .unwrap();
    let out = dir.path().join("out.json");
    let status = poschart(&["chart", "--sections", sections.to_str().unwrap(), "--output", out.to_str().unwrap()]);
    assert_eq!(status.status.code(), Some(0));
    assert!(status.stdout.is_empty());
    let written: ChartOut = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    let catalog_chart: ChartOut = serde_json::from_value(ok_json(&["chart", "--catalog", "pentagon"])).unwrap();
    assert_eq!(written, catalog_chart);
}

#[test]
fn moment_and_ideal_commands() {
    let v = ok_json(&["moment", "--catalog", "pentagon", "--t", "1,1"]);
    assert_eq!(v["x"], serde_json::json!(["5/6", "7/6", "4/3", "7/6", "5/6"]));
    assert_eq!(v["plane_check"], Value::Bool(true));
    assert_eq!(v["routes_agree"], Value::Bool(true));
    let v = ok_json(&["moment", "--catalog", "pentagon", "--t", "2/3,1/5", "--s", "1,2,3"]);
    assert_eq!(v["s"], serde_json::json!(["1", "2", "3"]));
    let v = ok_json(&["ideal", "--catalog", "simplex3"]);
    assert_eq!(v["ideal"], serde_json::json!(["y4 + y3 + y2 + y1 - 1"]));
    let v = ok_json(&["saturate", "--catalog", "pentagon"]);
    assert_eq!(v["equal_to_input"], Value::Bool(true));
    let v = ok_json(&["degree", "--catalog", "hexagon", "--chart", "chart2"]);
    assert_eq!((v["dim"].as_u64(), v["degree"].as_u64()), (Some(2), Some(7)));
}

#[test]
fn catalog_listing() {
    let v = ok_json(&["catalog"]);
    let names: Vec<&str> = v["entries"].as_array().unwrap().iter().map(|e| e["name"].as_str().unwrap()).collect();
    assert_eq!(names, catalog::names());
    let e = ok_json(&["catalog", "--catalog", "pentagon"]);
    assert_eq!(e["charts"][0]["scattering_count"]["value"], 2);
    assert_eq!(e["charts"][0]["scattering_count"]["source"], "reference");
}

#[test]
fn help_exits_0() {
    assert_eq!(poschart(&["--help"]).status.code(), Some(0));
    assert_eq!(poschart(&["scattering", "--help"]).status.code(), Some(0));
}

#[test]
fn library_entry_point_matches_binary() {
    assert_eq!(poschart::cli::run(["poschart", "chart", "--catalog", "p121"]), 3);
    assert_eq!(poschart::cli::run(["poschart", "bogus"]), 2);
}
