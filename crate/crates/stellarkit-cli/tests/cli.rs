//! End-to-end checks of the binary: verb wiring, formats, exit codes, and
//! round trips through the file formats.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_stellarkit"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout_json(output: &Output) -> serde_json::Value {
    assert!(
        output.status.success(),
        "command failed: {}",
        String::from_utf8_lossy(&output.stderr)
    );
    serde_json::from_slice(&output.stdout).expect("stdout is JSON")
}

fn temp_dir() -> PathBuf {
    let dir = std::env::temp_dir().join(format!("stellarkit-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

fn write_triangle() -> PathBuf {
    let path = temp_dir().join("triangle.cplx");
    std::fs::write(&path, "m 3\n1 2\n1 3\n2 3\n").unwrap();
    path
}

#[test]
fn complex_info_reports_the_triangle() {
    let path = write_triangle();
    let output = run(&["complex", "info", "--in", path.to_str().unwrap()]);
    let json = stdout_json(&output);
    assert_eq!(json["m"], 3);
    assert_eq!(json["dim"], 1);
    assert_eq!(json["pure"], true);
    assert_eq!(json["f_vector"], serde_json::json!([1, 3, 3]));
    assert_eq!(json["h_polynomial"], serde_json::json!([1, 1, 1]));
}

#[test]
fn unproject_emits_the_pinned_text() {
    let path = write_triangle();
    let output = run(&[
        "unproject",
        "--in",
        path.to_str().unwrap(),
        "--sigma",
        "1,2",
        "--format",
        "text",
    ]);
    assert!(output.status.success());
    assert_eq!(
        String::from_utf8_lossy(&output.stdout).trim(),
        "x4*z - x1*x2, x4*x3"
    );
}

#[test]
fn betti_methods_agree_on_the_pentagon() {
    let dir = temp_dir();
    let pentagon = dir.join("pentagon.cplx");
    let built = run(&[
        "complex",
        "stacked",
        "--d",
        "2",
        "--m",
        "5",
        "--out",
        pentagon.to_str().unwrap(),
    ]);
    assert!(built.status.success());

    let km = stdout_json(&run(&["betti", "--method", "km", "--d", "2", "--m", "5"]));
    let closed = stdout_json(&run(&["betti", "--method", "closed", "--d", "2", "--m", "5"]));
    let oracle = stdout_json(&run(&[
        "betti",
        "--method",
        "hochster",
        "--in",
        pentagon.to_str().unwrap(),
    ]));
    assert_eq!(km, closed);
    assert_eq!(km, oracle);
    assert_eq!(
        km["entries"],
        serde_json::json!([[0, 0, 1], [1, 2, 5], [2, 3, 5], [3, 5, 1]])
    );
}

#[test]
fn complex_round_trip_through_files() {
    let dir = temp_dir();
    let path = write_triangle();
    let square = dir.join("square.cplx");
    let output = run(&[
        "complex",
        "stellar",
        "--in",
        path.to_str().unwrap(),
        "--sigma",
        "1,2",
        "--out",
        square.to_str().unwrap(),
    ]);
    assert!(output.status.success());
    let info = stdout_json(&run(&["complex", "info", "--in", square.to_str().unwrap()]));
    assert_eq!(info["f_vector"], serde_json::json!([1, 4, 4]));

    // the written file is canonical: re-emitting it is a fixed point
    let text = std::fs::read_to_string(&square).unwrap();
    assert_eq!(text, "m 4\n1 3\n1 4\n2 3\n2 4\n");
}

#[test]
fn fan_build_output_feeds_fan_check() {
    let dir = temp_dir();
    let path = write_triangle();
    let fan = dir.join("fan.json");
    let build = run(&[
        "fan",
        "build",
        "--in",
        path.to_str().unwrap(),
        "--sigma",
        "1,2",
        "--out",
        fan.to_str().unwrap(),
    ]);
    assert!(build.status.success());
    let check = stdout_json(&run(&["fan", "check", "--in", fan.to_str().unwrap()]));
    assert_eq!(check["ok"], true);
    assert_eq!(check["violation"], serde_json::Value::Null);
}

#[test]
fn gorenstein_classifier_and_witness() {
    let path = write_triangle();
    let json = stdout_json(&run(&["gorenstein", "--in", path.to_str().unwrap()]));
    assert_eq!(json["gorenstein"], true);

    let dir = temp_dir();
    let bad = dir.join("path.cplx");
    std::fs::write(&bad, "m 3\n1 2\n1 3\n").unwrap();
    let json = stdout_json(&run(&["gorenstein", "--in", bad.to_str().unwrap(), "--p", "3"]));
    assert_eq!(json["gorenstein"], false);
    assert_eq!(json["witness"]["face"], serde_json::json!([]));
}

#[test]
fn ideal_verbs() {
    let path = write_triangle();
    let sr = stdout_json(&run(&["ideal", "sr", "--in", path.to_str().unwrap()]));
    assert_eq!(sr["gens"], serde_json::json!([[1, 2, 3]]));

    let colon = stdout_json(&run(&[
        "ideal",
        "colon",
        "--in",
        path.to_str().unwrap(),
        "--sigma",
        "1,2",
    ]));
    assert_eq!(colon["gens"], serde_json::json!([[3]]));

    let ann = stdout_json(&run(&[
        "ideal",
        "annihilator",
        "--in",
        path.to_str().unwrap(),
        "--gen",
        "3",
    ]));
    assert_eq!(ann["gens"], serde_json::json!([[1, 2]]));
}

#[test]
fn exit_codes() {
    let path = write_triangle();
    // domain error: not a face
    let output = run(&[
        "complex",
        "link",
        "--in",
        path.to_str().unwrap(),
        "--sigma",
        "7",
    ]);
    assert_eq!(output.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&output.stderr).contains("NotAFace"));

    // usage error: missing required pieces
    let output = run(&["betti", "--method", "km"]);
    assert_eq!(output.status.code(), Some(2));

    // usage error from clap itself
    let output = run(&["no-such-verb"]);
    assert_eq!(output.status.code(), Some(2));

    // missing file is an I/O failure, reported as exit 1
    let output = run(&["complex", "info", "--in", "/nonexistent/x.cplx"]);
    assert_eq!(output.status.code(), Some(1));
}

#[test]
fn verify_suite_runs_and_reports() {
    let output = run(&["verify", "km-nonminimal"]);
    assert!(output.status.success());
    let json = stdout_json(&output);
    assert_eq!(json[0]["passed"], true);
    assert!(String::from_utf8_lossy(&output.stderr).contains("PASS"));

    let output = run(&["verify", "unknown-suite"]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn link_reports_the_vertex_map() {
    let dir = temp_dir();
    let oct = dir.join("octahedron.cplx");
    std::fs::write(
        &oct,
        "m 6\n1 2 3\n1 2 6\n1 3 5\n1 5 6\n2 3 4\n2 4 6\n3 4 5\n4 5 6\n",
    )
    .unwrap();
    let json = stdout_json(&run(&[
        "complex",
        "link",
        "--in",
        oct.to_str().unwrap(),
        "--sigma",
        "1",
    ]));
    assert_eq!(json["m"], 4);
    assert_eq!(json["original_ids"], serde_json::json!([2, 3, 5, 6]));
}
