use std::f64::consts::{FRAC_PI_2, PI};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::numerics::{ensure_finite, ensure_unimodular, ComplexPoint, TolerancePolicy};

/// Ellipse in string form: the points whose distances to the two foci sum to
/// `dist_sum`. Coincident foci give a circle of diameter `dist_sum`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Ellipse {
    focus1: ComplexPoint,
    focus2: ComplexPoint,
    dist_sum: f64,
}

impl Ellipse {
    pub fn new(focus1: ComplexPoint, focus2: ComplexPoint, dist_sum: f64) -> Result<Self> {
        ensure_finite(focus1, "focus")?;
        ensure_finite(focus2, "focus")?;
        let focal = (focus1 - focus2).norm();
        if !dist_sum.is_finite() || dist_sum <= focal || dist_sum <= 0.0 {
            return Err(Error::DegenerateEllipse { dist_sum, focal });
        }
        Ok(Self {
            focus1,
            focus2,
            dist_sum,
        })
    }

    pub(crate) fn new_unchecked(focus1: ComplexPoint, focus2: ComplexPoint, dist_sum: f64) -> Self {
        Self {
            focus1,
            focus2,
            dist_sum,
        }
    }

    pub fn focus1(&self) -> ComplexPoint {
        self.focus1
    }

    pub fn focus2(&self) -> ComplexPoint {
        self.focus2
    }

    pub fn dist_sum(&self) -> f64 {
        self.dist_sum
    }

    pub fn center(&self) -> ComplexPoint {
        (self.focus1 + self.focus2) * 0.5
    }

    pub fn semi_major(&self) -> f64 {
        self.dist_sum / 2.0
    }

    pub fn semi_minor(&self) -> f64 {
        let half_focal = (self.focus1 - self.focus2).norm() / 2.0;
        (self.semi_major().powi(2) - half_focal * half_focal).sqrt()
    }

    pub fn axis_ratio(&self) -> f64 {
        self.semi_major() / self.semi_minor()
    }

    /// Angle of the major axis in `(-pi/2, pi/2]` (zero for a circle).
    pub fn rotation(&self) -> f64 {
        let d = self.focus2 - self.focus1;
        if d.norm() == 0.0 {
            return 0.0;
        }
        let t = d.arg();
        if t > FRAC_PI_2 {
            t - PI
        } else if t <= -FRAC_PI_2 {
            t + PI
        } else {
            t
        }
    }

    /// Signed tangency defect of the line through `p` and `q`.
    ///
    /// Reflecting `focus1` across a line lands at distance `dist_sum` from
    /// `focus2` exactly when the line is tangent; closer means the line cuts
    /// the ellipse, farther means it misses.
    pub fn line_defect(&self, p: ComplexPoint, q: ComplexPoint) -> Result<f64> {
        let d = q - p;
        let len = d.norm();
        if len == 0.0 || !len.is_finite() {
            return Err(Error::DegenerateChord);
        }
        let u = d / len;
        let reflected = p + u * u * (self.focus1 - p).conj();
        Ok((reflected - self.focus2).norm() - self.dist_sum)
    }

    /// Image under `z -> e^{i phi} z`.
    pub fn rotated(&self, phi: f64) -> Self {
        let r = Complex64::from_polar(1.0, phi);
        Self::new_unchecked(self.focus1 * r, self.focus2 * r, self.dist_sum)
    }

    /// Axis-aligned bounding box `(min, max)` as complex corners.
    pub fn bounding_box(&self) -> (ComplexPoint, ComplexPoint) {
        let a = self.semi_major();
        let b = self.semi_minor();
        let t = self.rotation();
        let (s, c) = t.sin_cos();
        let hx = ((a * c).powi(2) + (b * s).powi(2)).sqrt();
        let hy = ((a * s).powi(2) + (b * c).powi(2)).sqrt();
        let m = self.center();
        (
            Complex64::new(m.re - hx, m.im - hy),
            Complex64::new(m.re + hx, m.im + hy),
        )
    }
}

/// A chord of the unit circle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Chord {
    pub p: ComplexPoint,
    pub q: ComplexPoint,
}

impl Chord {
    pub fn new(p: ComplexPoint, q: ComplexPoint, tol: &TolerancePolicy) -> Result<Self> {
        ensure_unimodular(p, tol.eps_geom)?;
        ensure_unimodular(q, tol.eps_geom)?;
        if (p - q).norm() < tol.eps_geom {
            return Err(Error::DegenerateChord);
        }
        Ok(Self { p, q })
    }
}

pub fn is_tangent(chord: &Chord, e: &Ellipse, tol: &TolerancePolicy) -> Result<bool> {
    if (chord.p - chord.q).norm() < tol.eps_geom {
        return Err(Error::DegenerateChord);
    }
    Ok(e.line_defect(chord.p, chord.q)?.abs() <= tol.eps_geom)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn derived_axes() {
        let e = Ellipse::new(c(-0.3, 0.0), c(0.3, 0.0), 1.0).unwrap();
        assert_eq!(e.semi_major(), 0.5);
        assert!((e.semi_minor() - 0.4).abs() < 1e-15);
        assert!((e.axis_ratio() - 1.25).abs() < 1e-15);
        assert_eq!(e.center(), c(0.0, 0.0));
    }

    #[test]
    fn degenerate_is_rejected() {
        assert!(matches!(
            Ellipse::new(c(-0.5, 0.0), c(0.5, 0.0), 1.0),
            Err(Error::DegenerateEllipse { .. })
        ));
        // coincident foci are a circle
        let circle = Ellipse::new(c(0.1, 0.1), c(0.1, 0.1), 0.6).unwrap();
        assert!((circle.semi_minor() - 0.3).abs() < 1e-15);
    }

    #[test]
    fn tangency_of_axis_aligned_lines() {
        let e = Ellipse::new(c(-0.3, 0.0), c(0.3, 0.0), 1.0).unwrap();
        // y = 0.4 touches the minor vertex, y = 0.2 cuts, y = 0.6 misses
        assert!(e.line_defect(c(-1.0, 0.4), c(1.0, 0.4)).unwrap().abs() < 1e-15);
        assert!(e.line_defect(c(-1.0, 0.2), c(1.0, 0.2)).unwrap() < 0.0);
        assert!(e.line_defect(c(-1.0, 0.6), c(1.0, 0.6)).unwrap() > 0.0);
        // x = 0.5 touches the major vertex
        assert!(e.line_defect(c(0.5, -1.0), c(0.5, 1.0)).unwrap().abs() < 1e-15);
    }

    #[test]
    fn chord_validation() {
        let t = TolerancePolicy::default();
        assert!(Chord::new(c(1.0, 0.0), c(0.0, 1.0), &t).is_ok());
        assert_eq!(
            Chord::new(c(1.0, 0.0), c(1.0, 0.0), &t),
            Err(Error::DegenerateChord)
        );
        assert!(matches!(
            Chord::new(c(0.5, 0.0), c(0.0, 1.0), &t),
            Err(Error::NotUnimodular(_))
        ));
    }

    #[test]
    fn bounding_box_of_rotated_ellipse() {
        let e = Ellipse::new(c(-0.3, 0.0), c(0.3, 0.0), 1.0)
            .unwrap()
            .rotated(std::f64::consts::FRAC_PI_2);
        let (lo, hi) = e.bounding_box();
        assert!((lo - c(-0.4, -0.5)).norm() < 1e-12);
        assert!((hi - c(0.4, 0.5)).norm() < 1e-12);
    }
}
