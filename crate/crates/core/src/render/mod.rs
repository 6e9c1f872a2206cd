//! Deterministic SVG output for unit-disc scenes.
//!
//! Plane coordinates in `[-1.1, 1.1]^2` map onto a square canvas with the
//! y axis flipped. Every number is printed with six decimals so identical
//! scenes give identical bytes.

mod figures;

use std::fmt::Write as _;

pub use figures::{figure_scene, FAMILY_SAMPLES, FIGURE_COUNT};

use crate::blaschke::BlaschkeProduct;
use crate::error::{Error, Result};
use crate::numerics::{ComplexPoint, TolerancePolicy};
use crate::poncelet::{preimage_polygon_sides, Chord, Ellipse};

pub const VIEW_HALF: f64 = 1.1;
pub const MIN_WIDTH: u32 = 64;

const DASH: &str = "6 4";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LineStyle {
    Solid,
    Dashed,
}

#[derive(Debug, Clone, PartialEq)]
pub enum SceneElement {
    UnitCircle,
    Point {
        at: ComplexPoint,
        label: String,
    },
    Chord {
        chord: Chord,
        style: LineStyle,
    },
    Ellipse {
        ellipse: Ellipse,
        style: LineStyle,
    },
    Polygon {
        vertices: Vec<ComplexPoint>,
        style: LineStyle,
    },
    /// All preimage-polygon sides for `sample_count` equally spaced values on
    /// the circle.
    ChordFamily {
        product: BlaschkeProduct,
        sample_count: usize,
        style: LineStyle,
    },
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct SceneDescription {
    pub elements: Vec<SceneElement>,
}

impl SceneDescription {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, element: SceneElement) -> Self {
        self.elements.push(element);
        self
    }

    pub fn push(&mut self, element: SceneElement) {
        self.elements.push(element);
    }
}

/// Maps plane coordinates to canvas pixels.
#[derive(Debug, Clone, Copy)]
pub struct Viewport {
    width: f64,
}

impl Viewport {
    pub fn new(width_px: u32) -> Self {
        Self {
            width: width_px as f64,
        }
    }

    pub fn to_canvas(&self, z: ComplexPoint) -> (f64, f64) {
        (
            (z.re + VIEW_HALF) / (2.0 * VIEW_HALF) * self.width,
            (VIEW_HALF - z.im) / (2.0 * VIEW_HALF) * self.width,
        )
    }

    pub fn to_plane(&self, x: f64, y: f64) -> ComplexPoint {
        ComplexPoint::new(
            x / self.width * 2.0 * VIEW_HALF - VIEW_HALF,
            VIEW_HALF - y / self.width * 2.0 * VIEW_HALF,
        )
    }

    pub fn scale(&self, len: f64) -> f64 {
        len / (2.0 * VIEW_HALF) * self.width
    }
}

fn num(x: f64) -> String {
    let s = format!("{x:.6}");
    if s == "-0.000000" {
        "0.000000".to_string()
    } else {
        s
    }
}

fn check_inside(z: ComplexPoint) -> Result<()> {
    let ok = |v: f64| v.is_finite() && v.abs() <= VIEW_HALF;
    if ok(z.re) && ok(z.im) {
        Ok(())
    } else {
        Err(Error::ViewportOverflow(z.re, z.im))
    }
}

fn stroke(style: LineStyle, color: &str, width: &str) -> String {
    match style {
        LineStyle::Solid => format!(r#"fill="none" stroke="{color}" stroke-width="{width}""#),
        LineStyle::Dashed => format!(
            r#"fill="none" stroke="{color}" stroke-width="{width}" stroke-dasharray="{DASH}""#
        ),
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}

/// Renders `scene` as an SVG 1.1 document `width_px` pixels square.
pub fn render_svg(scene: &SceneDescription, width_px: u32) -> Result<String> {
    if width_px < MIN_WIDTH {
        return Err(Error::InvalidArgument(format!(
            "width must be at least {MIN_WIDTH} px"
        )));
    }
    let vp = Viewport::new(width_px);
    let tol = TolerancePolicy::default();
    let mut out = String::new();
    let w = width_px;
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{w}" viewBox="0 0 {w} {w}">"#
    );

    let line = |out: &mut String, p: ComplexPoint, q: ComplexPoint, attrs: &str| -> Result<()> {
        check_inside(p)?;
        check_inside(q)?;
        let (x1, y1) = vp.to_canvas(p);
        let (x2, y2) = vp.to_canvas(q);
        let _ = writeln!(
            out,
            r#"  <line x1="{}" y1="{}" x2="{}" y2="{}" {attrs}/>"#,
            num(x1),
            num(y1),
            num(x2),
            num(y2)
        );
        Ok(())
    };

    for element in &scene.elements {
        match element {
            SceneElement::UnitCircle => {
                let (cx, cy) = vp.to_canvas(ComplexPoint::new(0.0, 0.0));
                let _ = writeln!(
                    out,
                    r#"  <circle cx="{}" cy="{}" r="{}" {}/>"#,
                    num(cx),
                    num(cy),
                    num(vp.scale(1.0)),
                    stroke(LineStyle::Solid, "black", "1.5")
                );
            }
            SceneElement::Point { at, label } => {
                check_inside(*at)?;
                let (x, y) = vp.to_canvas(*at);
                let r = 4.0;
                let _ = writeln!(
                    out,
                    r#"  <path d="M {} {} L {} {} M {} {} L {} {}" stroke="black" stroke-width="1"/>"#,
                    num(x - r),
                    num(y),
                    num(x + r),
                    num(y),
                    num(x),
                    num(y - r),
                    num(x),
                    num(y + r)
                );
                if !label.is_empty() {
                    let _ = writeln!(
                        out,
                        r#"  <text x="{}" y="{}" font-family="serif" font-size="14">{}</text>"#,
                        num(x + 6.0),
                        num(y - 6.0),
                        escape(label)
                    );
                }
            }
            SceneElement::Chord { chord, style } => {
                line(
                    &mut out,
                    chord.p,
                    chord.q,
                    &stroke(*style, "#1f4e9c", "1.2"),
                )?;
            }
            SceneElement::Ellipse { ellipse, style } => {
                let (lo, hi) = ellipse.bounding_box();
                check_inside(lo)?;
                check_inside(hi)?;
                let (cx, cy) = vp.to_canvas(ellipse.center());
                let deg = -ellipse.rotation().to_degrees();
                let _ = writeln!(
                    out,
                    r#"  <ellipse cx="{}" cy="{}" rx="{}" ry="{}" transform="rotate({} {} {})" {}/>"#,
                    num(cx),
                    num(cy),
                    num(vp.scale(ellipse.semi_major())),
                    num(vp.scale(ellipse.semi_minor())),
                    num(deg),
                    num(cx),
                    num(cy),
                    stroke(*style, "#b22222", "1.5")
                );
            }
            SceneElement::Polygon { vertices, style } => {
                let mut pts = Vec::with_capacity(vertices.len());
                for &v in vertices {
                    check_inside(v)?;
                    let (x, y) = vp.to_canvas(v);
                    pts.push(format!("{},{}", num(x), num(y)));
                }
                let _ = writeln!(
                    out,
                    r#"  <polygon points="{}" {}/>"#,
                    pts.join(" "),
                    stroke(*style, "#c07000", "1.5")
                );
            }
            SceneElement::ChordFamily {
                product,
                sample_count,
                style,
            } => {
                let attrs = stroke(*style, "#7a7a7a", "0.5");
                for k in 0..*sample_count {
                    let t = std::f64::consts::TAU * k as f64 / *sample_count as f64;
                    let lambda = ComplexPoint::from_polar(1.0, t);
                    for (p, q) in preimage_polygon_sides(product, lambda, &tol)? {
                        line(&mut out, p, q, &attrs)?;
                    }
                }
            }
        }
    }
    out.push_str("</svg>\n");
    Ok(out)
}

/// Counts of the SVG element kinds in a rendered document.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ElementCensus {
    pub circles: usize,
    pub ellipses: usize,
    pub polygons: usize,
    pub dashed_polygons: usize,
    pub lines: usize,
    pub dashed_lines: usize,
}

pub fn census(svg: &str) -> ElementCensus {
    let mut c = ElementCensus::default();
    for line in svg.lines().map(str::trim) {
        let dashed = line.contains("stroke-dasharray");
        if line.starts_with("<circle") {
            c.circles += 1;
        } else if line.starts_with("<ellipse") {
            c.ellipses += 1;
        } else if line.starts_with("<polygon") {
            c.polygons += 1;
            c.dashed_polygons += dashed as usize;
        } else if line.starts_with("<line") {
            c.lines += 1;
            c.dashed_lines += dashed as usize;
        }
    }
    c
}
