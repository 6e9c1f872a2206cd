//! Finite Blaschke products on the unit disc.
//!
//! A product of degree `n` is `beta * prod (z - a_i) / (1 - conj(a_i) z)` with
//! `|beta| = 1` and every zero strictly inside the disc. Products with
//! `beta = 1` and a zero at the origin are called canonical; they are the
//! ones carrying a Poncelet curve.

use std::f64::consts::TAU;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::numerics::{
    damped_gauss_newton, ensure_finite, ensure_unimodular, poly_roots, poly_roots_clustered,
    unit_arg, ComplexPoint, ComplexPolynomial, GaussNewtonOptions, TolerancePolicy,
};

const CANONICAL_EPS: f64 = 1e-12;
const IDENTIFY_RESTARTS: u64 = 8;
const IDENTIFY_SEED: u64 = 0x01DE_71F7;
const RETRACT_MODULUS: f64 = 0.95;

#[derive(Debug, Clone, PartialEq)]
pub struct BlaschkeProduct {
    prefactor: ComplexPoint,
    zeros: Vec<ComplexPoint>,
}

impl BlaschkeProduct {
    pub fn new(prefactor: ComplexPoint, zeros: Vec<ComplexPoint>) -> Result<Self> {
        ensure_finite(prefactor, "prefactor")?;
        let eps = TolerancePolicy::default().eps_geom;
        if (prefactor.norm() - 1.0).abs() > eps {
            return Err(Error::PrefactorNotUnimodular(prefactor.norm()));
        }
        for &a in &zeros {
            ensure_finite(a, "zero")?;
            if a.norm() >= 1.0 {
                return Err(Error::OutsideDisc {
                    what: "zero",
                    modulus: a.norm(),
                });
            }
        }
        Ok(Self { prefactor, zeros })
    }

    /// Canonical product `z * prod (z - a_j)/(1 - conj(a_j) z)` over the given
    /// additional zeros.
    pub fn canonical(extra_zeros: &[ComplexPoint]) -> Result<Self> {
        let mut zeros = Vec::with_capacity(extra_zeros.len() + 1);
        zeros.push(Complex64::new(0.0, 0.0));
        zeros.extend_from_slice(extra_zeros);
        Self::new(Complex64::new(1.0, 0.0), zeros)
    }

    pub fn prefactor(&self) -> ComplexPoint {
        self.prefactor
    }

    pub fn zeros(&self) -> &[ComplexPoint] {
        &self.zeros
    }

    pub fn degree(&self) -> usize {
        self.zeros.len()
    }

    pub fn is_canonical(&self) -> bool {
        (self.prefactor - Complex64::new(1.0, 0.0)).norm() <= CANONICAL_EPS
            && self.zeros.iter().any(|z| z.norm() <= CANONICAL_EPS)
    }

    /// Zeros other than one origin zero. Only meaningful for canonical
    /// products.
    pub fn free_zeros(&self) -> Vec<ComplexPoint> {
        let mut out = self.zeros.clone();
        if let Some(i) = out.iter().position(|z| z.norm() <= CANONICAL_EPS) {
            out.remove(i);
        }
        out
    }

    pub fn evaluate(&self, z: ComplexPoint) -> Result<ComplexPoint> {
        self.evaluate_with(z, &TolerancePolicy::default())
    }

    pub fn evaluate_with(&self, z: ComplexPoint, tol: &TolerancePolicy) -> Result<ComplexPoint> {
        ensure_finite(z, "evaluation point")?;
        let mut value = self.prefactor;
        for &a in &self.zeros {
            let den = Complex64::new(1.0, 0.0) - a.conj() * z;
            if den.norm() < tol.eps_geom {
                return Err(Error::PoleProximity {
                    distance: den.norm(),
                });
            }
            value *= (z - a) / den;
        }
        Ok(value)
    }

    /// `beta * prod (z - a_i)`.
    pub fn numerator(&self) -> ComplexPolynomial {
        ComplexPolynomial::from_roots(&self.zeros).scale(self.prefactor)
    }

    /// `prod (1 - conj(a_i) z)`.
    pub fn denominator(&self) -> ComplexPolynomial {
        self.zeros.iter().fold(
            ComplexPolynomial::constant(Complex64::new(1.0, 0.0)),
            |acc, &a| {
                acc.mul(&ComplexPolynomial::new(vec![
                    Complex64::new(1.0, 0.0),
                    -a.conj(),
                ]))
            },
        )
    }

    /// Derivative of `arg B(e^{it})` with respect to `t`; positive everywhere
    /// on the circle.
    pub fn angular_derivative(&self, t: f64) -> f64 {
        let z = Complex64::from_polar(1.0, t);
        self.zeros
            .iter()
            .map(|&a| (1.0 - a.norm_sqr()) / (z - a).norm_sqr())
            .sum()
    }

    /// The `n` points of the unit circle mapped to `lambda`, sorted by
    /// principal argument.
    ///
    /// Solved as the roots of `N(z) - lambda D(z)`, then refined by Newton's
    /// method on the circle angle.
    pub fn preimages_on_circle(
        &self,
        lambda: ComplexPoint,
        tol: &TolerancePolicy,
    ) -> Result<Vec<ComplexPoint>> {
        tol.validate()?;
        ensure_unimodular(lambda, tol.eps_geom)?;
        if self.zeros.is_empty() {
            return Err(Error::InvalidArgument(
                "constant product has no preimages".into(),
            ));
        }
        let resolvent = self.numerator().sub(&self.denominator().scale(lambda));
        let clusters = poly_roots_clustered(&resolvent, tol)?;
        if clusters.iter().any(|c| c.multiplicity > 1) || clusters.len() != self.degree() {
            return Err(Error::CoincidentPreimages);
        }

        let target = lambda / lambda.norm();
        let mut out = Vec::with_capacity(clusters.len());
        for root in clusters {
            let mut t = root.value.arg();
            for _ in 0..4 {
                let w = self.evaluate_with(Complex64::from_polar(1.0, t), tol)?;
                let gap = (w * target.conj()).arg();
                if gap == 0.0 {
                    break;
                }
                t -= gap / self.angular_derivative(t);
            }
            let z = Complex64::from_polar(1.0, t);
            let miss = (self.evaluate_with(z, tol)? - lambda).norm();
            if miss > tol.eps_geom {
                return Err(Error::NonConvergence(format!(
                    "preimage misses lambda by {miss:e}"
                )));
            }
            out.push(z);
        }
        out.sort_by(|a, b| {
            crate::numerics::principal_arg(*a).total_cmp(&crate::numerics::principal_arg(*b))
        });
        for w in out.windows(2) {
            if (w[0] - w[1]).norm() <= 10.0 * tol.eps_root {
                return Err(Error::CoincidentPreimages);
            }
        }
        Ok(out)
    }
}

/// `true` when the two tuples strictly alternate in argument order around the
/// circle.
pub fn is_interspersed(
    zs: &[ComplexPoint],
    ws: &[ComplexPoint],
    tol: &TolerancePolicy,
) -> Result<bool> {
    if zs.len() != ws.len() || zs.len() < 2 {
        return Err(Error::SizeMismatch(zs.len(), ws.len()));
    }
    for &p in zs.iter().chain(ws) {
        ensure_unimodular(p, tol.eps_geom)?;
    }
    let mut tagged: Vec<(f64, bool)> = zs
        .iter()
        .map(|&z| (unit_arg(z), true))
        .chain(ws.iter().map(|&w| (unit_arg(w), false)))
        .collect();
    tagged.sort_by(|a, b| a.0.total_cmp(&b.0));
    let m = tagged.len();
    for i in 0..m {
        let (t0, tag0) = tagged[i];
        let (t1, tag1) = tagged[(i + 1) % m];
        if tag0 == tag1 {
            return Ok(false);
        }
        let gap = if i + 1 == m { t1 + TAU - t0 } else { t1 - t0 };
        if gap <= tol.eps_geom {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Largest pairwise gap `|B(z_j) - B(z_k)|` within each tuple.
pub fn identification_residual(
    b: &BlaschkeProduct,
    zs: &[ComplexPoint],
    ws: &[ComplexPoint],
) -> Result<f64> {
    let mut worst = 0.0f64;
    for tuple in [zs, ws] {
        let values = tuple
            .iter()
            .map(|&z| b.evaluate(z))
            .collect::<Result<Vec<_>>>()?;
        for i in 0..values.len() {
            for j in (i + 1)..values.len() {
                worst = worst.max((values[i] - values[j]).norm());
            }
        }
    }
    Ok(worst)
}

/// Canonical product of degree `n = |Z|` that is constant on `Z` and constant
/// on `W`.
///
/// The unknowns are the coefficients of the monic polynomial `q` whose roots
/// are the `n - 1` free zeros. On the circle `B(z) = z^{2-n} q(z)^2 / |q(z)|^2`,
/// so the wrapped argument gaps `arg(B(z_{j+1}) / B(z_j))` are smooth in the
/// coefficients even where zeros coalesce (regular polygons give `z^n`).
/// Up to eight restarts are tried from small starting zeros near the scaled
/// centroid of the inputs; roots that leave the disc are pulled back radially.
pub fn construct_identifying_product(
    zs: &[ComplexPoint],
    ws: &[ComplexPoint],
    tol: &TolerancePolicy,
) -> Result<BlaschkeProduct> {
    tol.validate()?;
    if !is_interspersed(zs, ws, tol)? {
        return Err(Error::NotInterspersed);
    }
    let n = zs.len();
    let free = n - 1;
    let centroid: ComplexPoint =
        zs.iter().chain(ws).copied().sum::<ComplexPoint>() / (2 * n) as f64;
    let start = centroid * 0.3;

    let residual = |x: &[f64]| -> Vec<f64> {
        let q = monic_from_coords(x);
        let mut r = Vec::with_capacity(2 * free);
        for tuple in [zs, ws] {
            let values: Vec<ComplexPoint> = tuple
                .iter()
                .map(|&z| {
                    let v = q.eval(z);
                    z.powi(2 - n as i32) * v * v
                })
                .collect();
            for pair in values.windows(2) {
                r.push((pair[1] * pair[0].conj()).arg());
            }
        }
        r
    };
    let retract = |x: &mut [f64]| {
        let Ok(roots) = poly_roots(&monic_from_coords(x), tol) else {
            return;
        };
        if roots.iter().all(|r| r.norm() < 1.0 - 1e-12) {
            return;
        }
        let pulled: Vec<ComplexPoint> = roots
            .iter()
            .map(|&r| {
                if r.norm() >= 1.0 - 1e-12 {
                    r * (RETRACT_MODULUS / r.norm())
                } else {
                    r
                }
            })
            .collect();
        x.copy_from_slice(&coords_from_roots(&pulled));
    };
    let opts = GaussNewtonOptions {
        max_iter: tol.max_iter,
        target: 1e-14,
        ..GaussNewtonOptions::default()
    };

    let mut best = f64::INFINITY;
    for restart in 0..IDENTIFY_RESTARTS {
        let mut rng = ChaCha8Rng::seed_from_u64(IDENTIFY_SEED + restart);
        let seeds: Vec<ComplexPoint> = (0..free)
            .map(|_| start + Complex64::from_polar(0.05, rng.gen_range(0.0..TAU)))
            .collect();
        let out = damped_gauss_newton(residual, &coords_from_roots(&seeds), retract, &opts);
        let zeros = if free == 0 {
            Vec::new()
        } else {
            match poly_roots(&monic_from_coords(&out.x), tol) {
                Ok(z) => z,
                Err(_) => continue,
            }
        };
        if zeros.iter().any(|z| z.norm() >= 1.0 - 1e-12) {
            continue;
        }
        let candidate = BlaschkeProduct::canonical(&zeros)?;
        let gap = identification_residual(&candidate, zs, ws)?;
        if gap <= tol.eps_geom {
            return Ok(candidate);
        }
        best = best.min(gap);
    }
    Err(Error::NonConvergence(format!(
        "identification residual {best:e} after {IDENTIFY_RESTARTS} restarts"
    )))
}

/// `z^m + x_{m-1} z^{m-1} + ... + x_0` from interleaved real and imaginary parts.
fn monic_from_coords(x: &[f64]) -> ComplexPolynomial {
    let mut c: Vec<ComplexPoint> = x.chunks(2).map(|p| Complex64::new(p[0], p[1])).collect();
    c.push(Complex64::new(1.0, 0.0));
    ComplexPolynomial::new(c)
}

fn coords_from_roots(roots: &[ComplexPoint]) -> Vec<f64> {
    let q = ComplexPolynomial::from_roots(roots);
    q.coeffs()[..roots.len()]
        .iter()
        .flat_map(|c| [c.re, c.im])
        .collect()
}
