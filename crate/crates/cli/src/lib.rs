//! Command-line front end for `blaschke-core`.
//!
//! Every subcommand prints one JSON document on stdout (or `key = value`
//! lines with `--format text`) that always carries the tolerances in force.
//! Exit status is 0 on success, 1 for numeric failures and failed
//! verifications, 2 for bad arguments.

use std::f64::consts::PI;
use std::io::Write;
use std::path::PathBuf;

use blaschke_core::golden::{
    golden_chords, golden_rectangle, golden_triangle, ChordCount, GoldenConstants,
};
use blaschke_core::poncelet::quadrilateral::{composition_parameters, focus_cubic, normalize_quad};
use blaschke_core::poncelet::{
    blaschke3_ellipse, degree4_ellipse, degree4_product_from_foci, golden_blaschke_ellipse,
    inscribed_ellipse_foci, steiner_foci, verify_poncelet, PonceletReport,
};
use blaschke_core::render::{census, figure_scene, FIGURE_COUNT};
use blaschke_core::{
    construct_identifying_product, render_svg, BlaschkeProduct, ComplexPoint, Ellipse, Error,
    TolerancePolicy, ALPHA,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde::Serialize;
use serde_json::{json, Value};

const ORIGIN_EPS: f64 = 1e-12;

#[derive(Debug, Parser)]
#[command(
    name = "blaschke",
    version,
    about = "Golden-ratio constructions with Blaschke products"
)]
struct Cli {
    #[command(flatten)]
    config: CliConfig,
    #[command(subcommand)]
    command: Command,
}

/// Flags shared by every subcommand.
#[derive(Debug, Clone, Args)]
pub struct CliConfig {
    /// Root-finder convergence tolerance.
    #[arg(long, global = true, default_value_t = 1e-12)]
    pub eps_root: f64,
    /// Tolerance for geometric assertions.
    #[arg(long, global = true, default_value_t = 1e-9)]
    pub eps_geom: f64,
    /// Band around the golden threshold reported as a single diameter chord.
    #[arg(long, global = true, default_value_t = 1e-9)]
    pub eps_count: f64,
    #[arg(long, global = true, default_value_t = 200)]
    pub max_iter: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Number of unimodular values sampled by sweeps.
    #[arg(long, global = true, default_value_t = 100)]
    pub samples: usize,
}

impl CliConfig {
    pub fn tolerance(&self) -> TolerancePolicy {
        TolerancePolicy {
            eps_root: self.eps_root,
            eps_geom: self.eps_geom,
            eps_count: self.eps_count,
            max_iter: self.max_iter,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Chords through `a` divided by `a` in the golden ratio.
    Chords {
        #[arg(long, value_parser = parse_point)]
        a: ComplexPoint,
    },
    /// Golden triangle inscribed in the unit circle.
    Triangle {
        #[arg(long, default_value_t = 0.0, value_parser = parse_real)]
        rotate: f64,
    },
    /// Golden rectangle inscribed in the unit circle.
    Rectangle {
        #[arg(long, default_value_t = 0.0, value_parser = parse_real)]
        rotate: f64,
    },
    /// The golden Blaschke ellipse and its degree-3 product.
    GoldenEllipse,
    /// Steiner inellipse foci of a triangle inscribed in the circle.
    Steiner {
        #[arg(long, num_args = 3, required = true, value_parser = parse_point)]
        vertices: Vec<ComplexPoint>,
    },
    /// Foci of an ellipse inscribed in a cyclic quadrilateral.
    Inscribe {
        #[arg(long, num_args = 4, required = true, value_parser = parse_point)]
        quad: Vec<ComplexPoint>,
        /// Starting focus; defaults to half the vertex mean, or a point on
        /// the long axis for rectangles.
        #[arg(long, value_parser = parse_point)]
        seed: Option<ComplexPoint>,
    },
    /// Degree-4 Poncelet ellipse and product from a pair of foci.
    Degree4 {
        #[arg(long, num_args = 2, required = true, value_parser = parse_point)]
        foci: Vec<ComplexPoint>,
    },
    /// Canonical product identifying two interspersed tuples.
    Identify {
        #[arg(long, num_args = 2.., required = true, value_parser = parse_point)]
        z: Vec<ComplexPoint>,
        #[arg(long, num_args = 2.., required = true, value_parser = parse_point)]
        w: Vec<ComplexPoint>,
    },
    /// Tangency of preimage polygons of a canonical product to an ellipse.
    Verify {
        /// Zeros of the product; the origin is added when absent.
        #[arg(long, num_args = 1.., required = true, value_parser = parse_point)]
        zeros: Vec<ComplexPoint>,
        #[arg(long, num_args = 2, value_parser = parse_point, requires = "dist_sum")]
        ellipse_foci: Option<Vec<ComplexPoint>>,
        #[arg(long, requires = "ellipse_foci", value_parser = parse_real)]
        dist_sum: Option<f64>,
    },
    /// SVG for one of the stock figures.
    Render {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=FIGURE_COUNT as i64))]
        figure: u8,
        /// Output file; the SVG goes to stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = 800)]
        width: u32,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Chords { .. } => "chords",
            Command::Triangle { .. } => "triangle",
            Command::Rectangle { .. } => "rectangle",
            Command::GoldenEllipse => "golden-ellipse",
            Command::Steiner { .. } => "steiner",
            Command::Inscribe { .. } => "inscribe",
            Command::Degree4 { .. } => "degree4",
            Command::Identify { .. } => "identify",
            Command::Verify { .. } => "verify",
            Command::Render { .. } => "render",
        }
    }
}

fn parse_real(s: &str) -> Result<f64, String> {
    let x: f64 = s
        .trim()
        .parse()
        .map_err(|_| format!("expected a number, got `{s}`"))?;
    if x.is_finite() {
        Ok(x)
    } else {
        Err(format!("non-finite number `{s}`"))
    }
}

/// Shields negative values such as `-0.3,0.2` from being read as flags by
/// prefixing a space, which the value parsers trim again.
fn shield_negative_values(arg: std::ffi::OsString) -> std::ffi::OsString {
    match arg.to_str() {
        Some(s)
            if s.len() > 1
                && s.starts_with('-')
                && s[1..].starts_with(|c: char| c.is_ascii_digit() || c == '.') =>
        {
            format!(" {s}").into()
        }
        _ => arg,
    }
}

/// Parses `RE,IM` or `@DEG` (the unit point at `DEG` degrees).
pub fn parse_point(s: &str) -> Result<ComplexPoint, String> {
    let s = s.trim();
    let z = if let Some(deg) = s.strip_prefix('@') {
        let d: f64 = deg
            .trim()
            .parse()
            .map_err(|_| format!("bad angle in `{s}`"))?;
        Complex64::from_polar(1.0, d * PI / 180.0)
    } else {
        let (re, im) = s
            .split_once(',')
            .ok_or_else(|| format!("expected RE,IM or @DEG, got `{s}`"))?;
        let re: f64 = re
            .trim()
            .parse()
            .map_err(|_| format!("bad real part in `{s}`"))?;
        let im: f64 = im
            .trim()
            .parse()
            .map_err(|_| format!("bad imaginary part in `{s}`"))?;
        Complex64::new(re, im)
    };
    if z.re.is_finite() && z.im.is_finite() {
        Ok(z)
    } else {
        Err(format!("non-finite point `{s}`"))
    }
}

#[derive(Serialize)]
struct Tolerances {
    eps_root: f64,
    eps_geom: f64,
    eps_count: f64,
    max_iter: usize,
}

#[derive(Serialize)]
struct Envelope<'a> {
    command: &'a str,
    tolerances: Tolerances,
    #[serde(skip_serializing_if = "Option::is_none")]
    result: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<Value>,
}

enum Failure {
    Usage(String),
    Numeric(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Numeric(e)
    }
}

/// What a subcommand produced.
enum Outcome {
    Report { result: Value, ok: bool },
    Raw(String),
}

fn report(result: Value) -> Outcome {
    Outcome::Report { result, ok: true }
}

/// Runs the CLI on `args` (including the program name) and returns the exit
/// status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args.into_iter().map(|a| shield_negative_values(a.into())))
    {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if code == 0 { out } else { err };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    let tol = cli.config.tolerance();
    let name = cli.command.name();
    let envelope = |result, error| Envelope {
        command: name,
        tolerances: Tolerances {
            eps_root: tol.eps_root,
            eps_geom: tol.eps_geom,
            eps_count: tol.eps_count,
            max_iter: tol.max_iter,
        },
        result,
        error,
    };

    let outcome = tol
        .validate()
        .map_err(|e| Failure::Usage(e.to_string()))
        .and_then(|_| {
            if cli.config.samples == 0 {
                return Err(Failure::Usage("--samples must be at least 1".into()));
            }
            dispatch(&cli.command, &cli.config, &tol)
        });

    match outcome {
        Ok(Outcome::Raw(text)) => {
            let _ = out.write_all(text.as_bytes());
            0
        }
        Ok(Outcome::Report { result, ok }) => {
            let doc = envelope(Some(result), None);
            let _ = emit(out, &doc, cli.config.format);
            if ok {
                0
            } else {
                1
            }
        }
        Err(Failure::Usage(msg)) => {
            let doc = envelope(
                None,
                Some(json!({ "code": "INVALID_ARGUMENT", "message": msg })),
            );
            let _ = emit(err, &doc, cli.config.format);
            2
        }
        Err(Failure::Numeric(e)) => {
            let doc = envelope(
                None,
                Some(json!({ "code": e.code(), "message": e.to_string() })),
            );
            let _ = emit(err, &doc, cli.config.format);
            1
        }
    }
}

fn emit(sink: &mut dyn Write, doc: &Envelope, format: Format) -> std::io::Result<()> {
    let value = serde_json::to_value(doc).expect("envelope serialises");
    match format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut *sink, &value)?;
            writeln!(sink)
        }
        Format::Text => {
            let mut lines = Vec::new();
            flatten("", &value, &mut lines);
            for l in lines {
                writeln!(sink, "{l}")?;
            }
            Ok(())
        }
    }
}

fn flatten(prefix: &str, v: &Value, lines: &mut Vec<String>) {
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                let key = if prefix.is_empty() {
                    k.clone()
                } else {
                    format!("{prefix}.{k}")
                };
                flatten(&key, x, lines);
            }
        }
        Value::Array(items) => {
            if items.is_empty() {
                lines.push(format!("{prefix} = []"));
            }
            for (i, x) in items.iter().enumerate() {
                flatten(&format!("{prefix}[{i}]"), x, lines);
            }
        }
        Value::String(s) => lines.push(format!("{prefix} = {s}")),
        other => lines.push(format!("{prefix} = {other}")),
    }
}

fn pt(z: ComplexPoint) -> Value {
    json!({ "re": z.re, "im": z.im })
}

fn pts(zs: &[ComplexPoint]) -> Value {
    Value::Array(zs.iter().copied().map(pt).collect())
}

fn ellipse_json(e: &Ellipse) -> Value {
    json!({
        "focus1": pt(e.focus1()),
        "focus2": pt(e.focus2()),
        "dist_sum": e.dist_sum(),
        "center": pt(e.center()),
        "semi_major": e.semi_major(),
        "semi_minor": e.semi_minor(),
        "axis_ratio": e.axis_ratio(),
        "rotation": e.rotation(),
    })
}

fn product_json(b: &BlaschkeProduct) -> Value {
    json!({
        "degree": b.degree(),
        "prefactor": pt(b.prefactor()),
        "zeros": pts(b.zeros()),
    })
}

fn poncelet_json(r: &PonceletReport, tol: &TolerancePolicy) -> Value {
    json!({
        "max_defect": r.max_defect,
        "worst_lambda": pt(r.worst_lambda),
        "samples": r.samples,
        "chords_checked": r.chords_checked,
        "passed": r.passed(tol),
    })
}

fn side_defects(e: &Ellipse, poly: &[ComplexPoint]) -> Result<Vec<f64>, Error> {
    let n = poly.len();
    (0..n)
        .map(|k| e.line_defect(poly[k], poly[(k + 1) % n]).map(f64::abs))
        .collect()
}

fn dispatch(cmd: &Command, cfg: &CliConfig, tol: &TolerancePolicy) -> Result<Outcome, Failure> {
    match cmd {
        Command::Chords { a } => {
            let found = golden_chords(*a, tol)?;
            let count = match found.count {
                ChordCount::None => "none",
                ChordCount::Diameter => "diameter",
                ChordCount::Two => "two",
            };
            let chords: Vec<Value> = found
                .chords
                .iter()
                .map(|c| {
                    json!({
                        "z1": pt(c.z1),
                        "z2": pt(c.z2),
                        "theta": c.theta,
                        "short_len": c.short_len,
                        "long_len": c.long_len,
                        "ratio": c.long_len / c.short_len,
                    })
                })
                .collect();
            Ok(report(json!({
                "a": pt(*a),
                "modulus": a.norm(),
                "ratio": ALPHA,
                "threshold": GoldenConstants::get().chord_threshold,
                "diameter_ratio": found.diameter_ratio,
                "count": count,
                "chords": chords,
            })))
        }
        Command::Triangle { rotate } => {
            let t = golden_triangle(*rotate);
            Ok(report(json!({
                "rotation": rotate,
                "vertices": pts(&t.vertices),
                "apex": t.apex,
                "base_len": t.base_len(),
                "lateral_len": t.lateral_len(),
                "ratio": t.ratio(),
            })))
        }
        Command::Rectangle { rotate } => {
            let r = golden_rectangle(*rotate);
            Ok(report(json!({
                "rotation": rotate,
                "vertices": pts(&r.vertices),
                "x": r.x,
                "y": r.y,
                "side_ratio": r.side_ratio(),
            })))
        }
        Command::GoldenEllipse => {
            let (e, b) = golden_blaschke_ellipse();
            let rep = verify_poncelet(&b, &e, cfg.samples, tol)?;
            Ok(report(json!({
                "c": e.focus1().re,
                "axis_ratio": e.axis_ratio(),
                "ellipse": ellipse_json(&e),
                "product": product_json(&b),
                "poncelet": poncelet_json(&rep, tol),
            })))
        }
        Command::Steiner { vertices } => {
            let t = [vertices[0], vertices[1], vertices[2]];
            let (f1, f2) = steiner_foci(&t, tol)?;
            let e = Ellipse::new(f1, f2, (Complex64::new(1.0, 0.0) - f1.conj() * f2).norm())?;
            Ok(report(json!({
                "vertices": pts(&t),
                "foci": pts(&[f1, f2]),
                "ellipse": ellipse_json(&e),
                "side_defects": side_defects(&e, &t)?,
            })))
        }
        Command::Inscribe { quad, seed } => {
            let q = [quad[0], quad[1], quad[2], quad[3]];
            let seed = match seed {
                Some(s) => *s,
                None => default_inscribe_seed(&q, tol)?,
            };
            let sol = inscribed_ellipse_foci(&q, seed, tol)?;
            let e = degree4_ellipse(sol.focus_a, sol.focus_b)?;
            let ordered = normalize_quad(&q, tol)?;
            Ok(report(json!({
                "quad": pts(&ordered),
                "seed": pt(seed),
                "focus_a": pt(sol.focus_a),
                "focus_b": pt(sol.focus_b),
                "residual": sol.residual,
                "cubic_residual": focus_cubic(&ordered, sol.focus_a).norm(),
                "ellipse": ellipse_json(&e),
                "side_defects": side_defects(&e, &ordered)?,
            })))
        }
        Command::Degree4 { foci } => {
            let (a, b) = (foci[0], foci[1]);
            let e = degree4_ellipse(a, b)?;
            let prod = degree4_product_from_foci(a, b)?;
            let (p, beta) = composition_parameters(a, b);
            let rep = verify_poncelet(&prod, &e, cfg.samples, tol)?;
            Ok(report(json!({
                "foci": pts(&[a, b]),
                "ellipse": ellipse_json(&e),
                "composition": { "p": pt(p), "beta": pt(beta) },
                "product": product_json(&prod),
                "poncelet": poncelet_json(&rep, tol),
            })))
        }
        Command::Identify { z, w } => {
            if z.len() != w.len() {
                return Err(Failure::Usage(format!(
                    "--z and --w need the same number of points, got {} and {}",
                    z.len(),
                    w.len()
                )));
            }
            let b = construct_identifying_product(z, w, tol)?;
            let residual = blaschke_core::blaschke::identification_residual(&b, z, w)?;
            let ellipse = if b.degree() == 3 {
                let f = b.free_zeros();
                let e = blaschke3_ellipse(f[0], f[1])?;
                let rep = verify_poncelet(&b, &e, cfg.samples, tol)?;
                json!({ "ellipse": ellipse_json(&e), "poncelet": poncelet_json(&rep, tol) })
            } else {
                Value::Null
            };
            let lz = b.evaluate(z[0])?;
            let lw = b.evaluate(w[0])?;
            Ok(report(json!({
                "degree": b.degree(),
                "product": product_json(&b),
                "residual": residual,
                "value_on_z": pt(lz),
                "value_on_w": pt(lw),
                "poncelet_curve": ellipse,
            })))
        }
        Command::Verify {
            zeros,
            ellipse_foci,
            dist_sum,
        } => {
            let mut all = zeros.clone();
            if !all.iter().any(|z| z.norm() <= ORIGIN_EPS) {
                all.insert(0, Complex64::new(0.0, 0.0));
            }
            let b = BlaschkeProduct::new(Complex64::new(1.0, 0.0), all)?;
            let e = match (ellipse_foci, dist_sum) {
                (Some(f), Some(s)) => Ellipse::new(f[0], f[1], *s)?,
                _ if b.degree() == 3 => {
                    let f = b.free_zeros();
                    blaschke3_ellipse(f[0], f[1])?
                }
                _ => {
                    return Err(Failure::Usage(format!(
                        "degree {} needs --ellipse-foci and --dist-sum",
                        b.degree()
                    )))
                }
            };
            let rep = verify_poncelet(&b, &e, cfg.samples, tol)?;
            Ok(Outcome::Report {
                result: json!({
                    "product": product_json(&b),
                    "ellipse": ellipse_json(&e),
                    "poncelet": poncelet_json(&rep, tol),
                }),
                ok: rep.passed(tol),
            })
        }
        Command::Render { figure, out, width } => {
            let scene = figure_scene(*figure, tol)?;
            let svg = render_svg(&scene, *width)?;
            match out {
                None => Ok(Outcome::Raw(svg)),
                Some(path) => {
                    std::fs::write(path, &svg).map_err(|e| {
                        Failure::Usage(format!("cannot write {}: {e}", path.display()))
                    })?;
                    let c = census(&svg);
                    Ok(report(json!({
                        "figure": figure,
                        "out": path.display().to_string(),
                        "width": width,
                        "bytes": svg.len(),
                        "census": {
                            "circles": c.circles,
                            "ellipses": c.ellipses,
                            "polygons": c.polygons,
                            "dashed_polygons": c.dashed_polygons,
                            "lines": c.lines,
                            "dashed_lines": c.dashed_lines,
                        },
                    })))
                }
            }
        }
    }
}

/// Half the vertex mean, or for a rectangle `0.8 sqrt(x^2 - y^2)` along its
/// long axis, where `x >= y` are the half side lengths.
pub fn default_inscribe_seed(
    quad: &[ComplexPoint; 4],
    tol: &TolerancePolicy,
) -> Result<ComplexPoint, Error> {
    let q = normalize_quad(quad, tol)?;
    let is_rectangle = (q[0] + q[2]).norm() <= tol.eps_geom && (q[1] + q[3]).norm() <= tol.eps_geom;
    if is_rectangle {
        let (s01, s12) = ((q[1] - q[0]).norm(), (q[2] - q[1]).norm());
        let (long, dir) = if s01 >= s12 {
            (s01, (q[1] - q[0]) / s01)
        } else {
            (s12, (q[2] - q[1]) / s12)
        };
        let short = s01.min(s12);
        let (x, y) = (long / 2.0, short / 2.0);
        return Ok(dir * (0.8 * (x * x - y * y).sqrt()));
    }
    Ok(q.iter().sum::<ComplexPoint>() / 8.0)
}
