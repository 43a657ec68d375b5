//! Values recomputed here from first principles, independent of the
//! library's own formulas.

use num_bigint::BigInt;
use num_complex::Complex64;
use unitequi::planar::{cantor_capacity, gamma_matrix, GameMatrix2, PlanarSet};
use unitequi::polycore::{discriminant, resultant, roots, IntPoly};
use unitequi::robinson::{j14_endpoints, solve_tau, sss_trace};

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Green's function of `[a, b]` with pole at infinity via the inverse
/// Joukowski map, choosing the branch outside the unit disk.
fn interval_green(a: f64, b: f64, z: Complex64) -> f64 {
    let u = (2.0 * z - a - b) / (b - a);
    let s = (u * u - 1.0).sqrt();
    (u + s).norm().max((u - s).norm()).ln()
}

/// Brute-force max-min over a fine grid.
fn grid_value(g: &GameMatrix2) -> f64 {
    (0..=200_000)
        .map(|i| {
            let s = i as f64 / 200_000.0;
            let r1 = g.g11 * s + g.g12 * (1.0 - s);
            let r2 = g.g21 * s + g.g22 * (1.0 - s);
            r1.min(r2)
        })
        .fold(f64::NEG_INFINITY, f64::max)
}

#[test]
fn interval_gamma_from_joukowski() {
    let (a, b) = (0.7, 3.9);
    let k = PlanarSet::interval(a, b).unwrap();
    let g = gamma_matrix(&k).unwrap();
    let robin_inf = -((b - a) / 4.0).ln();
    let robin_zero = -((1.0 / a - 1.0 / b) / 4.0).ln();
    let cross = interval_green(a, b, c(0.0, 0.0));
    assert!((g.g11 - robin_zero).abs() < 1e-12, "{g:?}");
    assert!((g.g22 - robin_inf).abs() < 1e-12, "{g:?}");
    assert!((g.g12 - cross).abs() < 1e-12 && (g.g21 - cross).abs() < 1e-12);
    for z in [c(5.0, 1.0), c(-2.0, 0.3), c(2.0, 1e-3)] {
        assert!((k.green_inf(z).unwrap() - interval_green(a, b, z)).abs() < 1e-12);
    }
    let cap = cantor_capacity(&k).unwrap();
    assert!((cap - (-grid_value(&g)).exp()).abs() < 1e-8);
}

#[test]
fn circle_gamma_from_geometry() {
    // |z - 3| = 1: the inverted set is the circle with center 3/8, radius 1/8.
    let k = PlanarSet::circle(c(3.0, 0.0), 1.0).unwrap();
    let g = gamma_matrix(&k).unwrap();
    assert!(g.g22.abs() < 1e-14);
    assert!((g.g11 - 8f64.ln()).abs() < 1e-12);
    assert!((g.g12 - 3f64.ln()).abs() < 1e-12);
    let inv = k.invert().unwrap();
    let z = c(0.3, 0.2);
    let direct = ((z - c(3.0 / 8.0, 0.0)).norm() * 8.0).ln();
    assert!((inv.green_inf(z).unwrap() - direct).abs() < 1e-12);
}

#[test]
fn robinson_quarter_matches_published_numbers() {
    let j = solve_tau(0.25).unwrap();
    let (w, a, b) = j14_endpoints();
    assert!((w - 1.03499).abs() < 5e-5);
    assert!((a - 0.08160).abs() < 1e-4 && (b - 4.36641).abs() < 1e-4);
    assert!((j.a - a).abs() < 1e-10 && (j.b - b).abs() < 1e-10);
    // w^25 = w^9 + 1 by direct substitution.
    assert!((w.powi(25) - w.powi(9) - 1.0).abs() < 1e-9);
    let g = gamma_matrix(&j.as_set()).unwrap();
    let s = g.equalizing_vector().unwrap();
    assert!((s.s1 - 0.2).abs() < 1e-8);
    assert!((sss_trace(&j, &s) - 1.898).abs() < 1e-3);
}

#[test]
fn self_reciprocal_interval_has_capacity_one() {
    let r = 2f64.sqrt();
    let k = PlanarSet::interval(3.0 - 2.0 * r, 3.0 + 2.0 * r).unwrap();
    assert!((cantor_capacity(&k).unwrap() - 1.0).abs() < 1e-10);
}

#[test]
fn resultant_against_root_products() {
    let p = IntPoly::from_i64(&[3, -1, 0, 2]);
    let q = IntPoly::from_i64(&[-5, 4, 1]);
    let rp = roots(&p.to_complex().unwrap()).unwrap();
    let prod: Complex64 = rp
        .iter()
        .map(|&x| c(-5.0, 0.0) + 4.0 * x + x * x)
        .product::<Complex64>()
        * 2f64.powi(2);
    let exact = resultant(&p, &q).unwrap();
    let exact_f: f64 = exact.to_string().parse().unwrap();
    assert!((prod.re - exact_f).abs() < 1e-8 * exact_f.abs().max(1.0), "{prod} vs {exact}");
    assert!(prod.im.abs() < 1e-8 * exact_f.abs().max(1.0));
}

#[test]
fn cyclotomic_discriminants() {
    for d in 2..9usize {
        let mut cs = vec![0i64; d + 1];
        cs[0] = -1;
        cs[d] = 1;
        let disc = discriminant(&IntPoly::from_i64(&cs)).unwrap();
        let sign = if ((d - 1) * (d - 2) / 2) % 2 == 0 { 1 } else { -1 };
        // Disc(z^d - 1) = (-1)^{(d-1)(d-2)/2} d^d
        let expected = BigInt::from(sign) * BigInt::from(d).pow(d as u32);
        assert_eq!(disc, expected, "d = {d}");
    }
}

#[test]
fn structured_zeros_match_generic_root_finder() {
    use unitequi::experiments::{unit_poly, unit_zeros, UnitSequenceSpec};
    for base in ["circle", "interval4"] {
        let spec = UnitSequenceSpec::from_json(&format!(
            r#"{{"numerator":[-1,1,1],"pole_order":1,"base":"{base}"}}"#
        ))
        .unwrap();
        let p = unit_poly(&spec, 5).unwrap();
        if base == "circle" {
            // (z^2 + z - 1)^5 - z^5 expanded by hand through the binomial theorem.
            let q = IntPoly::from_i64(&[-1, 1, 1]).pow(5);
            let z5 = IntPoly::monomial(BigInt::from(1), 5);
            assert_eq!(p, &q - &z5);
        }
        let mut generic = roots(&p.to_complex().unwrap()).unwrap();
        for z in unit_zeros(&spec, 5).unwrap() {
            let (i, d) = generic
                .iter()
                .enumerate()
                .map(|(i, r)| (i, (z - r).norm()))
                .fold((0, f64::INFINITY), |a, b| if b.1 < a.1 { b } else { a });
            assert!(d < 1e-8, "{base}: {z} off by {d}");
            generic.remove(i);
        }
        assert!(generic.is_empty());
    }
}
