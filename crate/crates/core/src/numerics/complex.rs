use std::f64::consts::{PI, TAU};

use num_complex::Complex64;

use crate::error::{Error, Result};

/// A point of the complex plane.
pub type ComplexPoint = Complex64;

pub fn ensure_finite(z: ComplexPoint, what: &'static str) -> Result<()> {
    if z.re.is_finite() && z.im.is_finite() {
        Ok(())
    } else {
        Err(Error::NonFinite(what))
    }
}

/// Checks `| |z| - 1 | <= eps`.
pub fn ensure_unimodular(z: ComplexPoint, eps: f64) -> Result<()> {
    ensure_finite(z, "circle point")?;
    let m = z.norm();
    if (m - 1.0).abs() <= eps {
        Ok(())
    } else {
        Err(Error::NotUnimodular(m))
    }
}

/// `e^{i phi}`.
#[inline]
pub fn polar_unit(phi: f64) -> ComplexPoint {
    Complex64::from_polar(1.0, phi)
}

/// Principal argument in `(-pi, pi]`.
#[inline]
pub fn principal_arg(z: ComplexPoint) -> f64 {
    let t = z.arg();
    // atan2 returns -pi for (-x, -0.0) and -0.0 for (x, -0.0)
    if t == -PI {
        PI
    } else {
        t + 0.0
    }
}

/// Argument mapped into `[0, 2pi)`.
#[inline]
pub fn unit_arg(z: ComplexPoint) -> f64 {
    let t = z.arg();
    if t < 0.0 {
        let u = t + TAU;
        if u >= TAU {
            0.0
        } else {
            u
        }
    } else {
        t
    }
}

/// Wraps an angle into `(-pi, pi]`.
pub fn wrap_angle(t: f64) -> f64 {
    let mut u = t.rem_euclid(TAU);
    if u > PI {
        u -= TAU;
    }
    u
}
