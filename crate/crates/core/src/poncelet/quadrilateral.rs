//! Ellipses inscribed in a cyclic quadrilateral and the degree-4 products
//! whose Poncelet curves they are.
//!
//! For a quadrilateral `z1..z4` on the unit circle the foci `a`, `b` of an
//! inscribed ellipse satisfy a cubic equation in `a` and `conj(a)` together
//! with a relation that is bilinear in `a` and `b`. The cubic is a single
//! real condition on `a` in disguise, so its zero set is a curve: the
//! one-parameter family of inscribed ellipses.

use num_complex::Complex64;

use super::Ellipse;
use crate::blaschke::BlaschkeProduct;
use crate::error::{Error, Result};
use crate::golden::golden_rectangle;
use crate::numerics::{
    damped_gauss_newton, ensure_finite, ensure_unimodular, quadratic_roots, reversed_conjugate,
    unit_arg, ComplexPoint, ComplexPolynomial, GaussNewtonOptions, TolerancePolicy,
};

/// Foci of one member of the inscribed-ellipse family.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InscribedEllipseSolution {
    pub focus_a: ComplexPoint,
    pub focus_b: ComplexPoint,
    /// `|cubic(focus_a)|`.
    pub residual: f64,
}

/// Vertices relabelled so that `0 <= arg z1 < arg z2 < arg z3 < arg z4 < 2 pi`.
///
/// Accepts any counterclockwise cyclic order.
pub fn normalize_quad(
    quad: &[ComplexPoint; 4],
    tol: &TolerancePolicy,
) -> Result<[ComplexPoint; 4]> {
    for &z in quad {
        ensure_unimodular(z, tol.eps_geom)?;
    }
    let start = (0..4)
        .min_by(|&i, &j| unit_arg(quad[i]).total_cmp(&unit_arg(quad[j])))
        .expect("four vertices");
    let out = [0, 1, 2, 3].map(|k| quad[(start + k) % 4]);
    for w in out.windows(2) {
        if unit_arg(w[1]) - unit_arg(w[0]) <= tol.eps_geom {
            return Err(Error::QuadOrder);
        }
    }
    Ok(out)
}

/// Left-hand side of the cubic focus equation at `a`.
pub fn focus_cubic(quad: &[ComplexPoint; 4], a: ComplexPoint) -> ComplexPoint {
    let [z1, z2, z3, z4] = *quad;
    let ab = a.conj();
    let p = z1 * z2 * z3 * z4;
    let alt = z4 - z3 + z2 - z1;
    let cross = z2 * z4 - z1 * z3;

    let quad_coef = (((z1 - z2) * z3 - z1 * z2) * z4 + z1 * z2 * z3) * ab + cross;
    let lin_coef = p * alt * ab * ab - (z3 + z1) * (z4 + z2) * cross * ab + z2 * z4 * (z4 + z2)
        - z1 * z3 * (z1 + z3);
    let const_term = p * cross * ab * ab
        - ((z2 * z2 * z3 + z1 * z2 * z2) * z4 * z4
            - z1 * z1 * z3 * z3 * z4
            - z1 * z1 * z2 * z3 * z3)
            * ab
        + cross * (z2 * z4 + z1 * z3);

    quad_coef * a * a - lin_coef * a + const_term
}

fn bilinear_coefficients(quad: &[ComplexPoint; 4]) -> (ComplexPoint, ComplexPoint, ComplexPoint) {
    let [z1, z2, z3, z4] = *quad;
    let alt = z4 - z3 + z2 - z1;
    let cross = z2 * z4 - z1 * z3;
    let constant = ((z2 - z1) * z3 + z1 * z2) * z4 - z1 * z2 * z3;
    (alt, cross, constant)
}

/// `alt ab - cross (a + b) + constant`, zero for a valid focus pair.
pub fn bilinear_residual(
    quad: &[ComplexPoint; 4],
    a: ComplexPoint,
    b: ComplexPoint,
) -> ComplexPoint {
    let (alt, cross, constant) = bilinear_coefficients(quad);
    alt * a * b - cross * (a + b) + constant
}

/// Second focus determined by the first through the bilinear relation.
pub fn bilinear_partner(quad: &[ComplexPoint; 4], a: ComplexPoint) -> Result<ComplexPoint> {
    let (alt, cross, constant) = bilinear_coefficients(quad);
    let den = alt * a - cross;
    if den.norm() < 1e-14 {
        return Err(Error::NonConvergence(
            "bilinear relation does not determine the second focus".into(),
        ));
    }
    Ok((cross * a - constant) / den)
}

/// One inscribed ellipse of the quadrilateral, found by damped Gauss-Newton
/// on the cubic starting from `seed`.
///
/// The solve lands on the member of the family nearest the seed. Seeds on a
/// symmetry line with no family member nearby can fail to converge or leave
/// the disc.
pub fn inscribed_ellipse_foci(
    quad: &[ComplexPoint; 4],
    seed: ComplexPoint,
    tol: &TolerancePolicy,
) -> Result<InscribedEllipseSolution> {
    tol.validate()?;
    ensure_finite(seed, "seed")?;
    let q = normalize_quad(quad, tol)?;
    for i in 0..4 {
        for j in (i + 1)..4 {
            if (q[i] - q[j]).norm() <= tol.eps_geom {
                return Err(Error::QuadOrder);
            }
        }
    }

    let residual = |x: &[f64]| {
        let v = focus_cubic(&q, Complex64::new(x[0], x[1]));
        vec![v.re, v.im]
    };
    let opts = GaussNewtonOptions {
        max_iter: tol.max_iter,
        target: 1e-15,
        ..GaussNewtonOptions::default()
    };
    let out = damped_gauss_newton(residual, &[seed.re, seed.im], |_| {}, &opts);
    let a = Complex64::new(out.x[0], out.x[1]);
    let res = focus_cubic(&q, a).norm();
    if !res.is_finite() || res > tol.eps_geom {
        return Err(Error::NonConvergence(format!(
            "focus cubic residual {res:e} after {} iterations",
            out.iterations
        )));
    }
    let b = bilinear_partner(&q, a)?;
    if a.norm() >= 1.0 || b.norm() >= 1.0 {
        return Err(Error::FociOutsideDisc(a.norm(), b.norm()));
    }
    Ok(InscribedEllipseSolution {
        focus_a: a,
        focus_b: b,
        residual: res,
    })
}

/// Diagnostics of the golden-rectangle reduction of the focus system.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RectangleSelfTest {
    /// `|a + b|` for the partner of `a = (x^2 - y^2)^{1/2}`.
    pub antisymmetry_defect: f64,
    /// `|cubic(a)|` at that focus.
    pub cubic_residual: f64,
    /// Largest side-tangency defect of the resulting ellipse.
    pub tangency_defect: f64,
}

impl RectangleSelfTest {
    pub fn passed(&self, tol: &TolerancePolicy) -> bool {
        self.antisymmetry_defect <= tol.eps_geom
            && self.cubic_residual <= tol.eps_geom
            && self.tangency_defect <= tol.eps_geom
    }
}

/// Checks the focus system on the axis-aligned golden rectangle, where the
/// bilinear relation reduces to `b = -a` and the axis-aligned inscribed
/// ellipse has foci `+-sqrt(x^2 - y^2)`.
pub fn rectangle_self_test() -> Result<RectangleSelfTest> {
    let rect = golden_rectangle(0.0);
    let c = (rect.x * rect.x - rect.y * rect.y).sqrt();
    let a = Complex64::new(c, 0.0);
    let b = bilinear_partner(&rect.vertices, a)?;
    let e = degree4_ellipse(a, b)?;
    let mut tangency = 0.0f64;
    for k in 0..4 {
        let d = e.line_defect(rect.vertices[k], rect.vertices[(k + 1) % 4])?;
        tangency = tangency.max(d.abs());
    }
    Ok(RectangleSelfTest {
        antisymmetry_defect: (a + b).norm(),
        cubic_residual: focus_cubic(&rect.vertices, a).norm(),
        tangency_defect: tangency,
    })
}

/// Ellipse with foci `a`, `b` and string length
/// `|1 - conj(a) b| sqrt((|a|^2 + |b|^2 - 2) / (|a|^2 |b|^2 - 1))`.
pub fn degree4_ellipse(a: ComplexPoint, b: ComplexPoint) -> Result<Ellipse> {
    ensure_finite(a, "focus")?;
    ensure_finite(b, "focus")?;
    for (z, what) in [(a, "focus a"), (b, "focus b")] {
        if z.norm() >= 1.0 {
            return Err(Error::OutsideDisc {
                what,
                modulus: z.norm(),
            });
        }
    }
    let (a2, b2) = (a.norm_sqr(), b.norm_sqr());
    let radicand = (a2 + b2 - 2.0) / (a2 * b2 - 1.0);
    if !(radicand.is_finite() && radicand > 0.0) {
        return Err(Error::DegenerateRadicand(radicand));
    }
    let s = (Complex64::new(1.0, 0.0) - a.conj() * b).norm() * radicand.sqrt();
    Ellipse::new(a, b, s)
}

/// Parameters of the composition form: `p = -ab` and
/// `beta = (a + b - ab (conj a + conj b)) / (1 - |ab|^2)`.
pub fn composition_parameters(a: ComplexPoint, b: ComplexPoint) -> (ComplexPoint, ComplexPoint) {
    let ab = a * b;
    let p = -ab;
    let beta = (a + b - ab * (a.conj() + b.conj())) / (1.0 - ab.norm_sqr());
    (p, beta)
}

/// Numerator `z^2 + (conj(beta) p - beta) z - p` of the quadratic factor.
pub fn composition_factor(p: ComplexPoint, beta: ComplexPoint) -> ComplexPolynomial {
    ComplexPolynomial::new(vec![-p, beta.conj() * p - beta, Complex64::new(1.0, 0.0)])
}

/// Denominator `1 - (conj(beta) - conj(p) beta) z - conj(p) z^2` of the
/// quadratic factor.
pub fn composition_denominator(p: ComplexPoint, beta: ComplexPoint) -> ComplexPolynomial {
    reversed_conjugate(&composition_factor(p, beta), 2).expect("degree 2 factor")
}

/// The degree-4 canonical product
/// `z (z - beta)/(1 - conj(beta) z) N(z)/N*(z)` whose Poncelet curve is the
/// ellipse of [`degree4_ellipse`] on the same foci. `N*` is the reversed
/// conjugate of `N`, so the quadratic factor is a Blaschke factor on the two
/// roots of `N`.
pub fn degree4_product_from_foci(a: ComplexPoint, b: ComplexPoint) -> Result<BlaschkeProduct> {
    ensure_finite(a, "focus")?;
    ensure_finite(b, "focus")?;
    for (z, what) in [(a, "focus a"), (b, "focus b")] {
        if z.norm() >= 1.0 {
            return Err(Error::OutsideDisc {
                what,
                modulus: z.norm(),
            });
        }
    }
    let (p, beta) = composition_parameters(a, b);
    let num = composition_factor(p, beta);
    let c = num.coeffs();
    let [r1, r2] = quadratic_roots(c[2], c[1], c[0])?;
    for z in [beta, r1, r2] {
        if z.norm() >= 1.0 {
            return Err(Error::FactorZeroOutsideDisc(z.norm()));
        }
    }
    BlaschkeProduct::canonical(&[beta, r1, r2])
}
