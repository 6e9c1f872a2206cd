//! Complex arithmetic helpers, dense complex polynomials, a simultaneous
//! iteration root finder and small real solvers.

mod complex;
mod least_squares;
mod poly;
mod roots;
mod solve1d;
mod tolerance;

pub use complex::{
    ensure_finite, ensure_unimodular, polar_unit, principal_arg, unit_arg, wrap_angle, ComplexPoint,
};
pub use least_squares::{damped_gauss_newton, GaussNewtonOptions, GaussNewtonOutcome};
pub use poly::{reversed_conjugate, ComplexPolynomial};
pub use roots::{poly_roots, poly_roots_clustered, quadratic_roots, Root};
pub use solve1d::solve_real_1d;
pub use tolerance::TolerancePolicy;
