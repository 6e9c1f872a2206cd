use std::f64::consts::{FRAC_PI_3, PI, TAU};

use blaschke_core::blaschke::identification_residual;
use blaschke_core::golden::{golden_triangle, regular_polygon};
use blaschke_core::{
    construct_identifying_product, is_interspersed, BlaschkeProduct, ComplexPoint, TolerancePolicy,
};
use num_complex::Complex64;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_zeros(rng: &mut ChaCha8Rng, n: usize, max_modulus: f64) -> Vec<ComplexPoint> {
    (0..n)
        .map(|_| Complex64::from_polar(rng.gen_range(0.0..max_modulus), rng.gen_range(0.0..TAU)))
        .collect()
}

/// Two n-tuples alternating around the circle with jittered spacing.
fn random_interspersed(
    rng: &mut ChaCha8Rng,
    n: usize,
    jitter: f64,
) -> (Vec<ComplexPoint>, Vec<ComplexPoint>) {
    let slot = PI / n as f64;
    let start = rng.gen_range(0.0..TAU);
    let mut zs = Vec::new();
    let mut ws = Vec::new();
    for k in 0..2 * n {
        let t = start + slot * (k as f64 + rng.gen_range(-jitter..jitter));
        let p = Complex64::from_polar(1.0, t);
        if k % 2 == 0 {
            zs.push(p);
        } else {
            ws.push(p);
        }
    }
    (zs, ws)
}

#[test]
fn preimages_round_trip_for_random_products() {
    let tol = TolerancePolicy::default();
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for degree in 1..=6 {
        for _ in 0..5 {
            let b = BlaschkeProduct::canonical(&random_zeros(&mut rng, degree - 1, 0.9)).unwrap();
            for k in 0..32 {
                let lambda = Complex64::from_polar(1.0, TAU * k as f64 / 32.0 + 0.01);
                let pre = b.preimages_on_circle(lambda, &tol).unwrap();
                assert_eq!(pre.len(), degree);
                for z in pre {
                    assert!((z.norm() - 1.0).abs() < 1e-12);
                    assert!((b.evaluate(z).unwrap() - lambda).norm() < 1e-8);
                }
            }
        }
    }
}

#[test]
fn preimages_of_a_noncanonical_product() {
    let tol = TolerancePolicy::default();
    let b = BlaschkeProduct::new(
        Complex64::from_polar(1.0, 0.4),
        vec![Complex64::new(0.2, 0.5), Complex64::new(-0.6, 0.1)],
    )
    .unwrap();
    let lambda = Complex64::from_polar(1.0, 2.0);
    for z in b.preimages_on_circle(lambda, &tol).unwrap() {
        assert!((b.evaluate(z).unwrap() - lambda).norm() < 1e-10);
    }
}

#[test]
fn chord_through_one_half_shares_values() {
    let tol = TolerancePolicy::default();
    let b = BlaschkeProduct::canonical(&[Complex64::new(0.5, 0.0)]).unwrap();
    let z1 = Complex64::new(0.786475, 0.617623);
    let z1 = z1 / z1.norm();
    let lambda = b.evaluate(z1).unwrap();
    let pre = b.preimages_on_circle(lambda, &tol).unwrap();
    assert!(pre.iter().any(|z| (z - z1).norm() < 1e-12));
    assert!(pre
        .iter()
        .any(|z| (z - Complex64::new(0.036475, -0.999335)).norm() < 1e-5));
}

#[test]
fn identify_golden_triangles() {
    let tol = TolerancePolicy::default();
    let z = golden_triangle(0.0).vertices;
    let w = golden_triangle(FRAC_PI_3).vertices;
    let b = construct_identifying_product(&z, &w, &tol).unwrap();
    assert!(b.is_canonical());
    assert_eq!(b.degree(), 3);
    assert!(identification_residual(&b, &z, &w).unwrap() < 1e-8);
    assert!(b.free_zeros().iter().all(|a| a.norm() < 1.0 - 1e-12));
}

#[test]
fn identify_regular_pentagons_and_decagons() {
    let tol = TolerancePolicy::default();
    for n in [5, 10] {
        let z = regular_polygon(n, 0.0);
        let w = regular_polygon(n, PI / n as f64);
        let b = construct_identifying_product(&z, &w, &tol).unwrap();
        assert_eq!(b.degree(), n);
        assert!(identification_residual(&b, &z, &w).unwrap() < 1e-8);
    }
}

#[test]
fn identify_random_interspersed_tuples() {
    let tol = TolerancePolicy::default();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for n in [3, 4, 5, 6] {
        for _ in 0..4 {
            let (z, w) = random_interspersed(&mut rng, n, 0.35);
            assert!(is_interspersed(&z, &w, &tol).unwrap());
            let b = construct_identifying_product(&z, &w, &tol).unwrap();
            assert!(b.is_canonical());
            assert!(identification_residual(&b, &z, &w).unwrap() < 1e-8);
            assert!(b.free_zeros().iter().all(|a| a.norm() < 1.0 - 1e-12));
        }
    }
}

#[test]
fn identify_perturbed_decagons() {
    let tol = TolerancePolicy::default();
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let (z, w) = random_interspersed(&mut rng, 10, 0.2);
    let b = construct_identifying_product(&z, &w, &tol).unwrap();
    assert!(identification_residual(&b, &z, &w).unwrap() < 1e-8);
}

proptest! {
    #[test]
    fn circle_maps_to_circle(
        raw in prop::collection::vec((0.0f64..0.95, 0.0f64..TAU), 0..6),
        phase in 0.0f64..TAU,
    ) {
        let zeros: Vec<_> = raw.iter().map(|&(r, t)| Complex64::from_polar(r, t)).collect();
        let b = BlaschkeProduct::new(Complex64::from_polar(1.0, phase), zeros).unwrap();
        for k in 0..64 {
            let z = Complex64::from_polar(1.0, TAU * k as f64 / 64.0);
            prop_assert!((b.evaluate(z).unwrap().norm() - 1.0).abs() < 1e-9);
        }
    }

    #[test]
    fn interspersion_is_symmetric(
        n in 2usize..6,
        offset in 0.05f64..0.95,
        start in 0.0f64..TAU,
    ) {
        let tol = TolerancePolicy::default();
        let z = regular_polygon(n, start);
        let w = regular_polygon(n, start + offset * TAU / n as f64);
        prop_assert!(is_interspersed(&z, &w, &tol).unwrap());
        prop_assert!(is_interspersed(&w, &z, &tol).unwrap());
    }
}
