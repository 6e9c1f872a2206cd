use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, PI};

use num_complex::Complex64;

use super::{LineStyle, SceneDescription, SceneElement};
use crate::blaschke::construct_identifying_product;
use crate::error::{Error, Result};
use crate::golden::{golden_chords, golden_rectangle, golden_triangle, regular_polygon};
use crate::numerics::TolerancePolicy;
use crate::poncelet::{blaschke3_ellipse, degree4_ellipse, steiner_foci, Chord};

pub const FIGURE_COUNT: u8 = 6;

pub const FAMILY_SAMPLES: usize = 24;

/// Scene for stock figure `n` (1 to 6).
///
/// 1. golden chords through `a = 1/2`;
/// 2. Steiner ellipse of a golden triangle;
/// 3. Blaschke ellipse of the product identifying two golden triangles;
/// 4. inscribed ellipse of a golden rectangle;
/// 5. and 6. chord families of the products identifying two regular
///    pentagons and two regular decagons.
pub fn figure_scene(n: u8, tol: &TolerancePolicy) -> Result<SceneDescription> {
    let dashed = |vertices: Vec<Complex64>| SceneElement::Polygon {
        vertices,
        style: LineStyle::Dashed,
    };
    let mut scene = SceneDescription::new().with(SceneElement::UnitCircle);
    match n {
        1 => {
            let a = Complex64::new(0.5, 0.0);
            scene.push(SceneElement::Point {
                at: a,
                label: "a".into(),
            });
            for ch in golden_chords(a, tol)?.chords {
                scene.push(SceneElement::Chord {
                    chord: Chord::new(ch.z1, ch.z2, tol)?,
                    style: LineStyle::Dashed,
                });
            }
        }
        2 => {
            let t = golden_triangle(0.0).vertices;
            let (f1, f2) = steiner_foci(&t, tol)?;
            scene.push(dashed(t.to_vec()));
            scene.push(SceneElement::Ellipse {
                ellipse: blaschke3_ellipse(f1, f2)?,
                style: LineStyle::Solid,
            });
        }
        3 => {
            let z = golden_triangle(0.0).vertices;
            let w = golden_triangle(FRAC_PI_3).vertices;
            let b = construct_identifying_product(&z, &w, tol)?;
            let free = b.free_zeros();
            scene.push(dashed(z.to_vec()));
            scene.push(dashed(w.to_vec()));
            scene.push(SceneElement::Ellipse {
                ellipse: blaschke3_ellipse(free[0], free[1])?,
                style: LineStyle::Solid,
            });
        }
        4 => {
            let r = golden_rectangle(0.0);
            let c = (r.x * r.x - r.y * r.y).sqrt();
            let focus = Complex64::new(c, 0.0);
            scene.push(dashed(r.vertices.to_vec()));
            scene.push(SceneElement::Ellipse {
                ellipse: degree4_ellipse(focus, -focus)?,
                style: LineStyle::Solid,
            });
        }
        5 | 6 => {
            let sides = if n == 5 { 5 } else { 10 };
            let z = regular_polygon(sides, FRAC_PI_2);
            let w = regular_polygon(sides, FRAC_PI_2 + PI / sides as f64);
            let b = construct_identifying_product(&z, &w, tol)?;
            scene.push(SceneElement::ChordFamily {
                product: b,
                sample_count: FAMILY_SAMPLES,
                style: LineStyle::Solid,
            });
            scene.push(dashed(z));
            scene.push(dashed(w));
        }
        _ => {
            return Err(Error::InvalidArgument(format!(
                "figure must be 1..={FIGURE_COUNT}, got {n}"
            )))
        }
    }
    Ok(scene)
}
