//! Golden-ratio constants and golden constructions inscribed in the unit
//! circle: golden chords through the zero of a degree-2 product, golden
//! triangles, golden rectangles and regular polygons.

use std::f64::consts::TAU;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::numerics::{ensure_finite, polar_unit, ComplexPoint, TolerancePolicy};

/// `(1 + sqrt 5) / 2`.
pub const ALPHA: f64 = 1.618_033_988_749_895;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GoldenConstants {
    pub alpha: f64,
    pub alpha_sq: f64,
    pub inv_alpha: f64,
    /// Smallest `|a|` admitting a golden chord, `sqrt 5 - 2`.
    pub chord_threshold: f64,
}

impl GoldenConstants {
    pub fn get() -> Self {
        let alpha = (1.0 + 5f64.sqrt()) / 2.0;
        Self {
            alpha,
            alpha_sq: alpha + 1.0,
            inv_alpha: alpha - 1.0,
            chord_threshold: 5f64.sqrt() - 2.0,
        }
    }
}

/// A chord `[z1, z2]` of the unit circle through `a`, split by `a` into a
/// short part `|z1 - a|` and a long part `|z2 - a|`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChordSolution {
    /// Near endpoint.
    pub z1: ComplexPoint,
    /// Far endpoint.
    pub z2: ComplexPoint,
    /// Signed angle from the ray `[0, a]` to the direction `a -> z1`.
    pub theta: f64,
    pub short_len: f64,
    pub long_len: f64,
}

impl ChordSolution {
    /// Residual of `(z2 - a)^2 = alpha^2 (z1 - a)^2`, the collapsed form of
    /// the golden-division quadratic.
    pub fn quadratic_residual(&self, a: ComplexPoint) -> f64 {
        let d2 = self.z2 - a;
        let d1 = self.z1 - a;
        (d2 * d2 - ALPHA * ALPHA * d1 * d1).norm()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChordCount {
    /// `(1+|a|)/(1-|a|) < alpha`: no chord.
    None,
    /// Boundary case: the only golden chord is the diameter through `a`.
    Diameter,
    Two,
}

#[derive(Debug, Clone, PartialEq)]
pub struct GoldenChords {
    /// `(1+|a|)/(1-|a|)`, the largest split ratio of any chord through `a`.
    pub diameter_ratio: f64,
    pub count: ChordCount,
    pub chords: Vec<ChordSolution>,
}

/// `true` when `c` splits the segment `[p, q]` in the golden ratio.
pub fn divides_in_golden_ratio(
    p: ComplexPoint,
    q: ComplexPoint,
    c: ComplexPoint,
    tol: &TolerancePolicy,
) -> Result<bool> {
    for z in [p, q, c] {
        ensure_finite(z, "segment point")?;
    }
    let d = q - p;
    let len = d.norm();
    if len == 0.0 {
        return Err(Error::NotOnSegment);
    }
    let rel = (c - p) / d;
    if rel.im.abs() * len > tol.eps_geom || rel.re <= 0.0 || rel.re >= 1.0 {
        return Err(Error::NotOnSegment);
    }
    let a = (c - p).norm();
    let b = (c - q).norm();
    let ratio = a.max(b) / a.min(b);
    Ok((ratio - ALPHA).abs() <= tol.eps_geom)
}

/// Chords of the unit circle through `a` that `a` divides in the golden
/// ratio.
///
/// For a chord at angle `theta` to the ray `[0, a]` the power of the point
/// gives `short * long = 1 - |a|^2`, and `long - short = 2|a| cos theta`.
/// Imposing `long = alpha * short` yields `short = sqrt((1-|a|^2)/alpha)` and
/// `cos theta = short (alpha - 1) / (2|a|)`. Two mirror-image chords exist
/// above the threshold `|a| = sqrt 5 - 2`; at the threshold they merge into
/// the diameter.
pub fn golden_chords(a: ComplexPoint, tol: &TolerancePolicy) -> Result<GoldenChords> {
    tol.validate()?;
    ensure_finite(a, "chord center")?;
    let m = a.norm();
    if m == 0.0 {
        return Err(Error::ZeroCenter);
    }
    if m >= 1.0 {
        return Err(Error::OutsideDisc {
            what: "chord center",
            modulus: m,
        });
    }
    let ratio = (1.0 + m) / (1.0 - m);
    let dir = a / m;

    if ratio < ALPHA - tol.eps_count {
        return Ok(GoldenChords {
            diameter_ratio: ratio,
            count: ChordCount::None,
            chords: Vec::new(),
        });
    }
    if (ratio - ALPHA).abs() <= tol.eps_count {
        return Ok(GoldenChords {
            diameter_ratio: ratio,
            count: ChordCount::Diameter,
            chords: vec![ChordSolution {
                z1: dir,
                z2: -dir,
                theta: 0.0,
                short_len: 1.0 - m,
                long_len: 1.0 + m,
            }],
        });
    }

    let short = ((1.0 - m * m) / ALPHA).sqrt();
    let cos_theta = (short * (ALPHA - 1.0) / (2.0 * m)).clamp(-1.0, 1.0);
    let theta = cos_theta.acos();
    let chords = [theta, -theta]
        .into_iter()
        .map(|t| chord_through(a, dir * polar_unit(t), t))
        .collect();
    Ok(GoldenChords {
        diameter_ratio: ratio,
        count: ChordCount::Two,
        chords,
    })
}

/// Intersects the line `a + s u` (`|u| = 1`) with the unit circle.
fn chord_through(a: ComplexPoint, u: ComplexPoint, theta: f64) -> ChordSolution {
    // s^2 + 2 s Re(conj(u) a) + |a|^2 - 1 = 0
    let half_b = (u.conj() * a).re;
    let disc = (half_b * half_b + 1.0 - a.norm_sqr()).sqrt();
    let s_near = -half_b + disc;
    let s_far = -half_b - disc;
    let z1 = a + u * s_near;
    let z2 = a + u * s_far;
    ChordSolution {
        z1,
        z2,
        theta,
        short_len: (z1 - a).norm(),
        long_len: (z2 - a).norm(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GoldenTriangle {
    pub vertices: [ComplexPoint; 3],
    pub apex: usize,
}

impl GoldenTriangle {
    pub fn base_len(&self) -> f64 {
        let (b, c) = self.base();
        (b - c).norm()
    }

    pub fn lateral_len(&self) -> f64 {
        let (b, _) = self.base();
        (self.vertices[self.apex] - b).norm()
    }

    pub fn ratio(&self) -> f64 {
        self.lateral_len() / self.base_len()
    }

    fn base(&self) -> (ComplexPoint, ComplexPoint) {
        let v = &self.vertices;
        (v[(self.apex + 1) % 3], v[(self.apex + 2) % 3])
    }
}

/// Isosceles triangle with apex `e^{i rotation}` and base vertices
/// `e^{i rotation} (-x +- i y)`, `x = alpha / 2`.
pub fn golden_triangle(rotation: f64) -> GoldenTriangle {
    let x = ALPHA / 2.0;
    let y = (1.0 - x * x).sqrt();
    let r = polar_unit(rotation);
    GoldenTriangle {
        vertices: [r, r * Complex64::new(-x, y), r * Complex64::new(-x, -y)],
        apex: 0,
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GoldenRectangle {
    /// Counterclockwise, starting from `e^{i rotation} (x + i y)`.
    pub vertices: [ComplexPoint; 4],
    /// Half of the long side.
    pub x: f64,
    /// Half of the short side.
    pub y: f64,
}

impl GoldenRectangle {
    pub fn side_ratio(&self) -> f64 {
        let long = (self.vertices[1] - self.vertices[0]).norm();
        let short = (self.vertices[2] - self.vertices[1]).norm();
        long / short
    }
}

pub fn golden_rectangle(rotation: f64) -> GoldenRectangle {
    let y = 1.0 / (ALPHA + 2.0).sqrt();
    let x = ALPHA * y;
    let r = polar_unit(rotation);
    GoldenRectangle {
        vertices: [
            r * Complex64::new(x, y),
            r * Complex64::new(-x, y),
            r * Complex64::new(-x, -y),
            r * Complex64::new(x, -y),
        ],
        x,
        y,
    }
}

/// Vertices `e^{i (rotation + 2 pi k / n)}`.
pub fn regular_polygon(n: usize, rotation: f64) -> Vec<ComplexPoint> {
    (0..n)
        .map(|k| polar_unit(rotation + TAU * k as f64 / n as f64))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::blaschke::BlaschkeProduct;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn tol() -> TolerancePolicy {
        TolerancePolicy::default()
    }

    #[test]
    fn constants() {
        let g = GoldenConstants::get();
        assert!((g.alpha * g.alpha - g.alpha - 1.0).abs() < 1e-15);
        assert!((g.chord_threshold - (g.alpha - 1.0) / (g.alpha + 1.0)).abs() < 1e-15);
        assert!((g.alpha - ALPHA).abs() < 1e-15);
        assert!((g.inv_alpha * g.alpha - 1.0).abs() < 1e-15);
        assert!((g.alpha_sq - g.alpha * g.alpha).abs() < 1e-15);
    }

    #[test]
    fn division_examples() {
        let t = tol();
        let zero = c(0.0, 0.0);
        let one = c(1.0, 0.0);
        assert!(divides_in_golden_ratio(zero, one, c(1.0 / ALPHA, 0.0), &t).unwrap());
        assert!(!divides_in_golden_ratio(zero, one, c(0.5, 0.0), &t).unwrap());
        assert!(divides_in_golden_ratio(-one, one, c(2.0 / ALPHA - 1.0, 0.0), &t).unwrap());
        assert_eq!(
            divides_in_golden_ratio(zero, one, c(0.5, 0.1), &t),
            Err(Error::NotOnSegment)
        );
        assert_eq!(
            divides_in_golden_ratio(zero, one, c(1.5, 0.0), &t),
            Err(Error::NotOnSegment)
        );
    }

    #[test]
    fn chords_below_threshold() {
        let out = golden_chords(c(0.1, 0.0), &tol()).unwrap();
        assert_eq!(out.count, ChordCount::None);
        assert!(out.chords.is_empty());
        assert!((out.diameter_ratio - 1.1 / 0.9).abs() < 1e-15);
    }

    #[test]
    fn chords_at_threshold_are_the_diameter() {
        let a = c(5f64.sqrt() - 2.0, 0.0);
        let out = golden_chords(a, &tol()).unwrap();
        assert_eq!(out.count, ChordCount::Diameter);
        let ch = out.chords[0];
        assert!((ch.z1 - c(1.0, 0.0)).norm() < 1e-15);
        assert!((ch.z2 - c(-1.0, 0.0)).norm() < 1e-15);
        assert!((ch.short_len - 0.763932).abs() < 1e-6);
        assert!((ch.long_len - 1.236068).abs() < 1e-6);
    }

    #[test]
    fn chords_for_one_half() {
        let a = c(0.5, 0.0);
        let out = golden_chords(a, &tol()).unwrap();
        assert_eq!(out.count, ChordCount::Two);
        let [first, second] = [out.chords[0], out.chords[1]];
        assert!(first.theta > 0.0 && second.theta < 0.0);
        // closed form and brute-force sweep agree on these to 1e-6
        assert!((first.theta - 1.136498).abs() < 1e-6);
        assert!((first.short_len - 0.680827).abs() < 1e-6);
        assert!((first.long_len - 1.101601).abs() < 1e-6);
        assert!((first.z1 - c(0.786475, 0.617623)).norm() < 1e-6);
        assert!((first.z2 - c(0.036475, -0.999335)).norm() < 1e-6);
        assert!((second.z1 - first.z1.conj()).norm() < 1e-15);

        let b = BlaschkeProduct::canonical(&[a]).unwrap();
        for ch in &out.chords {
            assert!((ch.z1.norm() - 1.0).abs() < 1e-12 && (ch.z2.norm() - 1.0).abs() < 1e-12);
            assert!((ch.long_len / ch.short_len - ALPHA).abs() < 1e-12);
            assert!((ch.short_len * ch.long_len - 0.75).abs() < 1e-12);
            assert!(ch.quadratic_residual(a) < 1e-12);
            assert!(divides_in_golden_ratio(ch.z1, ch.z2, a, &tol()).unwrap());
            let gap = b.evaluate(ch.z1).unwrap() - b.evaluate(ch.z2).unwrap();
            assert!(gap.norm() < 1e-12);
        }
    }

    #[test]
    fn zero_center_is_an_error() {
        assert_eq!(golden_chords(c(0.0, 0.0), &tol()), Err(Error::ZeroCenter));
        assert!(matches!(
            golden_chords(c(1.2, 0.0), &tol()),
            Err(Error::OutsideDisc { .. })
        ));
    }

    #[test]
    fn triangle_at_rotation_zero() {
        let t = golden_triangle(0.0);
        assert!((t.vertices[1] - c(-0.809017, 0.587785)).norm() < 1e-6);
        assert!((t.vertices[2] - c(-0.809017, -0.587785)).norm() < 1e-6);
        assert!((-t.vertices[1].re - ALPHA / 2.0).abs() < 1e-15);
        assert!((t.lateral_len() - 1.902113).abs() < 1e-6);
        assert!((t.base_len() - 1.175571).abs() < 1e-6);
        assert!((t.ratio() - ALPHA).abs() < 1e-12);
        // the defining quadratic 2 x^2 alpha^2 + x + (1 - 2 alpha^2) = 0
        let x = ALPHA / 2.0;
        let a2 = ALPHA * ALPHA;
        assert!((2.0 * x * x * a2 + x + 1.0 - 2.0 * a2).abs() < 1e-14);
    }

    #[test]
    fn rectangle_at_rotation_zero() {
        let r = golden_rectangle(0.0);
        assert!((r.x - 0.850651).abs() < 1e-6);
        assert!((r.y - 0.525731).abs() < 1e-6);
        assert!((r.side_ratio() - ALPHA).abs() < 1e-12);
        assert!((r.x * r.x + r.y * r.y - 1.0).abs() < 1e-15);
    }

    #[test]
    fn rotated_shapes_keep_ratios() {
        for k in 0..16 {
            let phi = 0.37 * k as f64 - 2.5;
            let t = golden_triangle(phi);
            assert!((t.ratio() - ALPHA).abs() < 1e-12);
            assert!(t.vertices.iter().all(|v| (v.norm() - 1.0).abs() < 1e-12));
            let r = golden_rectangle(phi);
            assert!((r.side_ratio() - ALPHA).abs() < 1e-12);
            assert!(r.vertices.iter().all(|v| (v.norm() - 1.0).abs() < 1e-12));
        }
    }
}
