//! Ellipses as Poncelet curves of canonical Blaschke products.
//!
//! A canonical product of degree 3 with zeros `0, a1, a2` has as Poncelet
//! curve the ellipse `|z - a1| + |z - a2| = |1 - conj(a1) a2|`: for every
//! unimodular `lambda` the triangle of circle preimages of `lambda` is
//! circumscribed about it. Degree-4 products built from two degree-2 factors
//! carry ellipses as well; see [`quadrilateral`].

mod ellipse;
pub mod quadrilateral;

use std::f64::consts::TAU;

use num_complex::Complex64;

pub use ellipse::{is_tangent, Chord, Ellipse};
pub use quadrilateral::{
    degree4_ellipse, degree4_product_from_foci, inscribed_ellipse_foci, rectangle_self_test,
    InscribedEllipseSolution, RectangleSelfTest,
};

use crate::blaschke::BlaschkeProduct;
use crate::error::{Error, Result};
use crate::numerics::{ensure_finite, ensure_unimodular, ComplexPoint, TolerancePolicy};

const FOCUS_EPS: f64 = 1e-12;

/// Ellipse `|z - a1| + |z - a2| = |1 - conj(a1) a2|` of the canonical product
/// with zeros `0, a1, a2`.
pub fn blaschke3_ellipse(a1: ComplexPoint, a2: ComplexPoint) -> Result<Ellipse> {
    ensure_finite(a1, "focus")?;
    ensure_finite(a2, "focus")?;
    for z in [a1, a2] {
        if z.norm() >= 1.0 {
            return Err(Error::OutsideDisc {
                what: "focus",
                modulus: z.norm(),
            });
        }
    }
    if a1.norm() <= FOCUS_EPS || a2.norm() <= FOCUS_EPS || (a1 - a2).norm() <= FOCUS_EPS {
        return Err(Error::ZeroOrCoincidentFoci);
    }
    let s = (Complex64::new(1.0, 0.0) - a1.conj() * a2).norm();
    Ellipse::new(a1, a2, s)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PonceletReport {
    /// Largest `| |reflected focus - focus2| - dist_sum |` over all chords.
    pub max_defect: f64,
    /// The `lambda` attaining it.
    pub worst_lambda: ComplexPoint,
    pub samples: usize,
    pub chords_checked: usize,
}

impl PonceletReport {
    pub fn passed(&self, tol: &TolerancePolicy) -> bool {
        self.max_defect <= tol.eps_geom
    }
}

/// Consecutive sides of the preimage polygon of `lambda`.
pub fn preimage_polygon_sides(
    b: &BlaschkeProduct,
    lambda: ComplexPoint,
    tol: &TolerancePolicy,
) -> Result<Vec<(ComplexPoint, ComplexPoint)>> {
    let pre = b.preimages_on_circle(lambda, tol)?;
    let n = pre.len();
    Ok((0..n).map(|k| (pre[k], pre[(k + 1) % n])).collect())
}

/// Samples `sample_count` equally spaced `lambda` and measures how far each
/// side of every preimage polygon is from tangency with `e`.
///
/// For degree 3 the consecutive sides are all three pairs.
pub fn verify_poncelet(
    b: &BlaschkeProduct,
    e: &Ellipse,
    sample_count: usize,
    tol: &TolerancePolicy,
) -> Result<PonceletReport> {
    tol.validate()?;
    if !b.is_canonical() {
        return Err(Error::NotCanonical);
    }
    if b.degree() < 3 {
        return Err(Error::InvalidArgument(format!(
            "Poncelet verification needs degree >= 3, got {}",
            b.degree()
        )));
    }
    if sample_count == 0 {
        return Err(Error::InvalidArgument(
            "sample_count must be at least 1".into(),
        ));
    }
    let mut report = PonceletReport {
        max_defect: 0.0,
        worst_lambda: Complex64::new(1.0, 0.0),
        samples: sample_count,
        chords_checked: 0,
    };
    for k in 0..sample_count {
        let lambda = Complex64::from_polar(1.0, TAU * k as f64 / sample_count as f64);
        for (p, q) in preimage_polygon_sides(b, lambda, tol)? {
            let d = e.line_defect(p, q)?.abs();
            report.chords_checked += 1;
            if d > report.max_defect || d.is_nan() {
                report.max_defect = d;
                report.worst_lambda = lambda;
            }
        }
    }
    Ok(report)
}

/// Foci `g +- sqrt(g^2 - e2/3)` of the Steiner inellipse, where `g` is the
/// centroid and `e2` the second elementary symmetric function of the
/// vertices. These are the roots of the derivative of `prod (z - z_k)`.
///
/// The radicand equals `sum_{j<k} (z_j - z_k)^2 / 18`; it is treated as zero
/// when it is within rounding of zero, so equilateral input gives exactly
/// coincident foci instead of a `sqrt(eps)` split.
pub fn steiner_foci(
    t: &[ComplexPoint; 3],
    tol: &TolerancePolicy,
) -> Result<(ComplexPoint, ComplexPoint)> {
    for &z in t {
        ensure_unimodular(z, tol.eps_geom)?;
    }
    let [z1, z2, z3] = *t;
    let area2 = ((z2 - z1).conj() * (z3 - z1)).im;
    if area2.abs() <= tol.eps_geom {
        return Err(Error::DegenerateTriangle);
    }
    let g = (z1 + z2 + z3) / 3.0;
    let diffs = [z1 - z2, z2 - z3, z3 - z1];
    let radicand: ComplexPoint = diffs.iter().map(|d| d * d).sum::<ComplexPoint>() / 18.0;
    let scale: f64 = diffs.iter().map(|d| d.norm_sqr()).sum::<f64>() / 18.0;
    let r = if radicand.norm() <= 64.0 * f64::EPSILON * scale {
        Complex64::new(0.0, 0.0)
    } else {
        radicand.sqrt()
    };
    Ok((g + r, g - r))
}

/// The golden Blaschke ellipse and its product.
///
/// With foci `+-c` and semi-axes `a = alpha b`, the Blaschke condition
/// `2a = 1 + c^2` has the single positive root
/// `c = (sqrt(2 (1 + sqrt 5)) - sqrt(2 (sqrt 5 - 1))) / 2`.
pub fn golden_blaschke_ellipse() -> (Ellipse, BlaschkeProduct) {
    let s5 = 5f64.sqrt();
    let c = 0.5 * ((2.0 * (1.0 + s5)).sqrt() - (2.0 * (s5 - 1.0)).sqrt());
    let focus = Complex64::new(c, 0.0);
    let ellipse = Ellipse::new_unchecked(focus, -focus, 1.0 + c * c);
    let product = BlaschkeProduct::canonical(&[focus, -focus]).expect("zeros inside the disc");
    (ellipse, product)
}

/// Rotates the ellipse and every zero of `b` by `e^{i phi}`.
pub fn rotate_blaschke_ellipse(
    e: &Ellipse,
    b: &BlaschkeProduct,
    phi: f64,
) -> (Ellipse, BlaschkeProduct) {
    let r = Complex64::from_polar(1.0, phi.rem_euclid(TAU));
    let zeros = b.zeros().iter().map(|&z| z * r).collect();
    let rotated = BlaschkeProduct::new(b.prefactor(), zeros).expect("rotation preserves moduli");
    (e.rotated(phi.rem_euclid(TAU)), rotated)
}
