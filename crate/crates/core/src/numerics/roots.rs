use std::cmp::Ordering;
use std::f64::consts::TAU;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{principal_arg, ComplexPoint, ComplexPolynomial, TolerancePolicy};
use crate::error::{Error, Result};

const RESTARTS: u64 = 3;
const PHASE_SEED: u64 = 0xB1A5_C4E0;

/// A root together with the number of computed roots merged into it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Root {
    pub value: ComplexPoint,
    pub multiplicity: usize,
}

/// All roots of `p` with multiplicity, sorted by principal argument and then
/// modulus.
///
/// Uses Aberth-Ehrlich iteration seeded on the Cauchy-bound circle with a
/// random phase, followed by a Newton polish. Computed roots closer than
/// `10 * eps_root` are merged and repeated here; see
/// [`poly_roots_clustered`] for the grouped form.
pub fn poly_roots(p: &ComplexPolynomial, tol: &TolerancePolicy) -> Result<Vec<ComplexPoint>> {
    Ok(poly_roots_clustered(p, tol)?
        .into_iter()
        .flat_map(|r| std::iter::repeat_n(r.value, r.multiplicity))
        .collect())
}

pub fn poly_roots_clustered(p: &ComplexPolynomial, tol: &TolerancePolicy) -> Result<Vec<Root>> {
    tol.validate()?;
    if p.coeffs()
        .iter()
        .any(|c| !(c.re.is_finite() && c.im.is_finite()))
    {
        return Err(Error::NonFinite("polynomial coefficient"));
    }
    if p.degree() == 0 {
        return Err(Error::DegreeZero);
    }

    // exact zeros at the origin
    let zero = Complex64::new(0.0, 0.0);
    let origin = p.coeffs().iter().take_while(|&&c| c == zero).count();
    let reduced = ComplexPolynomial::new(p.coeffs()[origin..].to_vec());

    let mut roots = vec![zero; origin];
    match reduced.degree() {
        0 => {}
        1 => roots.push(-reduced.coeffs()[0] / reduced.coeffs()[1]),
        _ => roots.extend(aberth_with_restarts(&reduced, tol)?),
    }

    let mut clusters = cluster(&roots, 10.0 * tol.eps_root);
    clusters.sort_by(|a, b| compare_by_arg(a.value, b.value));
    Ok(clusters)
}

/// Roots of `a2 z^2 + a1 z + a0` via the cancellation-free quadratic formula.
pub fn quadratic_roots(
    a2: ComplexPoint,
    a1: ComplexPoint,
    a0: ComplexPoint,
) -> Result<[ComplexPoint; 2]> {
    if a2.norm() == 0.0 {
        return Err(Error::DegreeZero);
    }
    let disc = (a1 * a1 - 4.0 * a2 * a0).sqrt();
    let plus = a1 + disc;
    let minus = a1 - disc;
    let q = if plus.norm() >= minus.norm() {
        plus
    } else {
        minus
    } * -0.5;
    if q.norm() == 0.0 {
        return Ok([q, q]);
    }
    Ok([q / a2, a0 / q])
}

fn compare_by_arg(a: ComplexPoint, b: ComplexPoint) -> Ordering {
    principal_arg(a)
        .total_cmp(&principal_arg(b))
        .then(a.norm().total_cmp(&b.norm()))
}

fn aberth_with_restarts(p: &ComplexPolynomial, tol: &TolerancePolicy) -> Result<Vec<ComplexPoint>> {
    let lead = p.leading().norm();
    let cauchy = 1.0
        + p.coeffs()[..p.degree()]
            .iter()
            .map(|c| c.norm())
            .fold(0.0, f64::max)
            / lead;
    let mut worst = f64::NAN;
    for attempt in 0..=RESTARTS {
        let mut rng = ChaCha8Rng::seed_from_u64(PHASE_SEED + attempt);
        let phase: f64 = rng.gen_range(0.0..TAU);
        let roots = aberth(p, cauchy, phase, tol);
        match residual_excess(p, &roots, tol.eps_root) {
            None => return Ok(roots),
            Some(excess) => worst = excess,
        }
    }
    Err(Error::NonConvergence(format!(
        "root finder exhausted {} restarts (residual {worst:e} over bound)",
        RESTARTS
    )))
}

fn aberth(
    p: &ComplexPolynomial,
    radius: f64,
    phase: f64,
    tol: &TolerancePolicy,
) -> Vec<ComplexPoint> {
    let n = p.degree();
    let mut z: Vec<ComplexPoint> = (0..n)
        .map(|k| Complex64::from_polar(radius, phase + TAU * k as f64 / n as f64))
        .collect();

    for _ in 0..tol.max_iter {
        let mut max_step = 0.0f64;
        for i in 0..n {
            let (v, dv) = p.eval_with_derivative(z[i]);
            if v.norm() == 0.0 {
                continue;
            }
            let repulsion: ComplexPoint = (0..n)
                .filter(|&j| j != i)
                .map(|j| (z[i] - z[j]).inv())
                .filter(|w| w.re.is_finite() && w.im.is_finite())
                .sum();
            let newton = if dv.norm() == 0.0 { v } else { v / dv };
            let step = newton / (Complex64::new(1.0, 0.0) - newton * repulsion);
            if !(step.re.is_finite() && step.im.is_finite()) {
                continue;
            }
            z[i] -= step;
            max_step = max_step.max(step.norm() / z[i].norm().max(1.0));
        }
        if max_step <= tol.eps_root {
            break;
        }
    }

    for r in z.iter_mut() {
        polish(p, r);
    }
    z
}

fn polish(p: &ComplexPolynomial, r: &mut ComplexPoint) {
    let mut best = p.eval(*r).norm();
    for _ in 0..3 {
        let (v, dv) = p.eval_with_derivative(*r);
        if dv.norm() == 0.0 || v.norm() == 0.0 {
            return;
        }
        let candidate = *r - v / dv;
        let res = p.eval(candidate).norm();
        if res < best {
            best = res;
            *r = candidate;
        } else {
            return;
        }
    }
}

/// `None` when every root meets `|p(r)| <= eps * max|c| * max(1, |r|)^n`.
fn residual_excess(p: &ComplexPolynomial, roots: &[ComplexPoint], eps: f64) -> Option<f64> {
    let scale = p.max_coeff_norm();
    let n = p.degree() as i32;
    let mut worst: Option<f64> = None;
    for &r in roots {
        if !(r.re.is_finite() && r.im.is_finite()) {
            return Some(f64::INFINITY);
        }
        let bound = eps * scale * r.norm().max(1.0).powi(n);
        let res = p.eval(r).norm();
        if res > bound {
            let ratio = res / bound;
            worst = Some(worst.map_or(ratio, |w: f64| w.max(ratio)));
        }
    }
    worst
}

fn cluster(roots: &[ComplexPoint], radius: f64) -> Vec<Root> {
    let n = roots.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut i: usize) -> usize {
        while parent[i] != i {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        i
    }
    for i in 0..n {
        for j in (i + 1)..n {
            if (roots[i] - roots[j]).norm() < radius {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                if a != b {
                    parent[b] = a;
                }
            }
        }
    }
    let mut groups: Vec<(usize, ComplexPoint, usize)> = Vec::new();
    for (i, &r) in roots.iter().enumerate() {
        let root = find(&mut parent, i);
        match groups.iter_mut().find(|g| g.0 == root) {
            Some(g) => {
                g.1 += r;
                g.2 += 1;
            }
            None => groups.push((root, r, 1)),
        }
    }
    groups
        .into_iter()
        .map(|(_, sum, count)| Root {
            value: sum / count as f64,
            multiplicity: count,
        })
        .collect()
}
