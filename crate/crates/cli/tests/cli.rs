use blaschke_cli::run;
use serde_json::Value;

fn invoke(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("blaschke").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn json_of(args: &[&str]) -> Value {
    let (code, out, err) = invoke(args);
    assert_eq!(code, 0, "{err}");
    serde_json::from_str(&out).unwrap()
}

fn close(v: &Value, x: f64, eps: f64) -> bool {
    (v.as_f64().unwrap() - x).abs() < eps
}

#[test]
fn chords_for_one_half() {
    let v = json_of(&["chords", "--a", "0.5,0"]);
    let chords = v["result"]["chords"].as_array().unwrap();
    assert_eq!(chords.len(), 2);
    assert!(close(&v["result"]["ratio"], 1.618034, 1e-6));
    for c in chords {
        assert!(close(&c["ratio"], 1.618034, 1e-6));
        assert!(close(
            &c["theta"].as_f64().unwrap().abs().into(),
            1.136498,
            1e-6
        ));
    }
}

#[test]
fn chords_below_threshold() {
    let v = json_of(&["chords", "--a", "0.1,0"]);
    assert_eq!(v["result"]["chords"].as_array().unwrap().len(), 0);
    assert_eq!(v["result"]["count"], "none");
    assert!(close(&v["result"]["threshold"], 0.236068, 1e-6));
}

#[test]
fn golden_ellipse_values() {
    let v = json_of(&["golden-ellipse"]);
    assert!(close(&v["result"]["c"], 0.485868, 1e-6));
    assert!(close(&v["result"]["axis_ratio"], 1.618034, 1e-6));
    assert_eq!(v["result"]["poncelet"]["passed"], true);
}

#[test]
fn every_report_carries_tolerances() {
    let cases: &[&[&str]] = &[
        &["chords", "--a", "0.5,0"],
        &["triangle"],
        &["rectangle", "--rotate", "-0.4"],
        &["golden-ellipse", "--samples", "10"],
        &["steiner", "--vertices", "@0", "@144", "@216"],
        &["inscribe", "--quad", "@10", "@100", "@190", "@280"],
        &[
            "degree4",
            "--foci",
            "0.3,0.1",
            "-0.2,0.25",
            "--samples",
            "10",
        ],
        &[
            "identify", "--z", "@0", "@120", "@240", "--w", "@60", "@180", "@300",
        ],
        &[
            "verify",
            "--zeros",
            "-0.3,0.2",
            "0.4,-0.1",
            "--samples",
            "10",
        ],
    ];
    for args in cases {
        let v = json_of(
            &args
                .iter()
                .chain(&["--eps-geom", "2e-9"])
                .copied()
                .collect::<Vec<_>>(),
        );
        assert_eq!(v["tolerances"]["eps_geom"], 2e-9, "{args:?}");
        assert_eq!(v["tolerances"]["eps_root"], 1e-12);
        assert_eq!(v["tolerances"]["max_iter"], 200);
        assert!(v["result"].is_object());
    }
}

#[test]
fn text_format_lists_keys() {
    let (code, out, _) = invoke(&["triangle", "--format", "text"]);
    assert_eq!(code, 0);
    assert!(out.contains("tolerances.eps_count = "));
    assert!(out
        .lines()
        .any(|l| l.starts_with("result.ratio = 1.618033988749")));
}

#[test]
fn rectangle_inscribe_default_seed() {
    let quad: Vec<String> = blaschke_core::golden::golden_rectangle(0.0)
        .vertices
        .iter()
        .map(|z| format!("{},{}", z.re, z.im))
        .collect();
    let mut args = vec!["inscribe", "--quad"];
    args.extend(quad.iter().map(String::as_str));
    let v = json_of(&args);
    let a = &v["result"]["focus_a"];
    let b = &v["result"]["focus_b"];
    let m = 5f64.powf(-0.25);
    assert!(close(&a["re"].as_f64().unwrap().abs().into(), m, 1e-8));
    assert!((a["re"].as_f64().unwrap() + b["re"].as_f64().unwrap()).abs() < 1e-10);
    for d in v["result"]["side_defects"].as_array().unwrap() {
        assert!(d.as_f64().unwrap() < 1e-8);
    }
}

#[test]
fn verify_exit_status_follows_defect() {
    let (code, out, _) = invoke(&["verify", "--zeros", "0.3,0", "-0.2,0.4", "--samples", "20"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["result"]["poncelet"]["passed"], true);

    // the right foci with a slightly wrong focal distance sum
    let s = (1.0 - 0.3 * (-0.2f64)).hypot(0.3 * 0.4) + 1e-3;
    let s = format!("{s}");
    let bad = [
        "verify",
        "--zeros",
        "0.3,0",
        "-0.2,0.4",
        "--ellipse-foci",
        "0.3,0",
        "-0.2,0.4",
        "--dist-sum",
        &s,
    ];
    let (code, out, _) = invoke(&bad);
    assert_eq!(code, 1);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["result"]["poncelet"]["passed"], false);
    let defect = v["result"]["poncelet"]["max_defect"].as_f64().unwrap();
    assert!(defect > 1e-4 && defect < 1e-2);

    // a looser tolerance accepts the same defect
    let (code, _, _) = invoke(&[&bad[..], &["--eps-geom", "1e-2"]].concat());
    assert_eq!(code, 0);
}

#[test]
fn verify_degree_four_needs_an_ellipse() {
    let (code, _, err) = invoke(&["verify", "--zeros", "0.3,0", "-0.2,0.4", "0.1,0.1"]);
    assert_eq!(code, 2);
    assert!(err.contains("INVALID_ARGUMENT"));
}

#[test]
fn numeric_errors_exit_one_with_code() {
    let (code, out, err) = invoke(&["chords", "--a", "1.5,0"]);
    assert_eq!(code, 1);
    assert!(out.is_empty());
    let v: Value = serde_json::from_str(&err).unwrap();
    assert_eq!(v["error"]["code"], "OUTSIDE_DISC");
    assert!(v["tolerances"].is_object());

    let (code, _, err) = invoke(&["identify", "--z", "@0", "@10", "--w", "@20", "@30"]);
    assert_eq!(code, 1);
    assert!(err.contains("NOT_INTERSPERSED"));
}

#[test]
fn argument_errors_exit_two() {
    for args in [
        &["chords", "--a", "x"][..],
        &["chords"],
        &["steiner", "--vertices", "@0", "@90"],
        &["render", "--figure", "7"],
        &["frobnicate"],
        &["triangle", "--eps-geom", "0"],
        &[
            "identify", "--z", "@0", "@180", "--w", "@90", "@200", "@300",
        ],
    ] {
        let (code, _, err) = invoke(args);
        assert_eq!(code, 2, "{args:?}: {err}");
    }
}

#[test]
fn help_exits_zero() {
    let (code, out, _) = invoke(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("chords"));
}

#[test]
fn point_syntax() {
    let z = blaschke_cli::parse_point("@90").unwrap();
    assert!(z.re.abs() < 1e-15 && (z.im - 1.0).abs() < 1e-15);
    let z = blaschke_cli::parse_point("-0.25, 1e-3").unwrap();
    assert_eq!((z.re, z.im), (-0.25, 1e-3));
    assert!(blaschke_cli::parse_point("1;2").is_err());
    assert!(blaschke_cli::parse_point("nan,0").is_err());
}

#[test]
fn render_to_file_and_stdout_agree() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("fig4.svg");
    let p = path.to_str().unwrap();
    let v = json_of(&["render", "--figure", "4", "--out", p]);
    assert_eq!(v["result"]["census"]["ellipses"], 1);
    assert_eq!(v["result"]["census"]["dashed_polygons"], 1);
    let (code, svg, _) = invoke(&["render", "--figure", "4"]);
    assert_eq!(code, 0);
    assert_eq!(std::fs::read_to_string(&path).unwrap(), svg);
}
