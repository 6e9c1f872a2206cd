use super::TolerancePolicy;
use crate::error::{Error, Result};

/// Root of a continuous real function on a sign-changing bracket.
///
/// Illinois-modified false position with a bisection fallback whenever the
/// bracket fails to halve over two consecutive steps. Returns once
/// `|f(x)| <= eps_geom` and the bracket is narrower than `eps_geom`, or
/// when `f(x)` is exactly zero.
pub fn solve_real_1d<F>(f: F, bracket: (f64, f64), tol: &TolerancePolicy) -> Result<f64>
where
    F: Fn(f64) -> f64,
{
    tol.validate()?;
    let (mut lo, mut hi) = if bracket.0 <= bracket.1 {
        bracket
    } else {
        (bracket.1, bracket.0)
    };
    if !(lo.is_finite() && hi.is_finite()) {
        return Err(Error::NonFinite("bracket"));
    }
    let mut flo = f(lo);
    let mut fhi = f(hi);
    if !(flo.is_finite() && fhi.is_finite()) {
        return Err(Error::NonFinite("function value at bracket end"));
    }
    if flo == 0.0 {
        return Ok(lo);
    }
    if fhi == 0.0 {
        return Ok(hi);
    }
    if flo.signum() == fhi.signum() {
        return Err(Error::BracketInvalid { lo, hi });
    }

    let mut side = 0i8;
    let mut stalls = 0u8;
    let mut best = if flo.abs() < fhi.abs() {
        (lo, flo)
    } else {
        (hi, fhi)
    };
    // false position needs a few more steps than bisection in the worst case
    let budget = tol.max_iter.max(200) * 2;
    for _ in 0..budget {
        let width = hi - lo;
        if best.1.abs() <= tol.eps_geom && width <= tol.eps_geom {
            return Ok(best.0);
        }
        if width <= 4.0 * f64::EPSILON * lo.abs().max(hi.abs()).max(f64::MIN_POSITIVE) {
            break;
        }

        let mut x = if stalls >= 2 {
            stalls = 0;
            0.5 * (lo + hi)
        } else {
            (lo * fhi - hi * flo) / (fhi - flo)
        };
        if !(x > lo && x < hi) {
            x = 0.5 * (lo + hi);
        }
        let fx = f(x);
        if !fx.is_finite() {
            return Err(Error::NonFinite("function value"));
        }
        if fx.abs() < best.1.abs() {
            best = (x, fx);
        }
        if fx == 0.0 {
            return Ok(x);
        }
        if fx.signum() == flo.signum() {
            lo = x;
            flo = fx;
            if side == -1 {
                fhi *= 0.5;
            }
            side = -1;
        } else {
            hi = x;
            fhi = fx;
            if side == 1 {
                flo *= 0.5;
            }
            side = 1;
        }
        if hi - lo > 0.5 * width {
            stalls += 1;
        } else {
            stalls = 0;
        }
    }
    if best.1.abs() <= tol.eps_geom {
        Ok(best.0)
    } else {
        Err(Error::NonConvergence(format!(
            "bracket collapsed with |f| = {:e}",
            best.1.abs()
        )))
    }
}
