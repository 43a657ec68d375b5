use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use proptest::prelude::*;
use unitequi::homspace::{
    c2, lift, pushforward_pi, res_hommap, robin_fk, zeros_by_direction, DiscreteMeasure2D, HomMap,
    RobinFunctionK,
};
use unitequi::planar::{height, GameMatrix2, PlanarSet};
use unitequi::polycore::{bezout, resultant, roots, IntMatrix2, IntPoly};
use unitequi::robinson::solve_tau;

fn to_f64(x: &BigInt) -> f64 {
    x.to_string().parse().unwrap()
}

fn int_poly(max_deg: usize) -> impl Strategy<Value = IntPoly> {
    (1..=max_deg).prop_flat_map(|d| {
        (prop::collection::vec(-9i64..=9, d), prop_oneof![-9i64..=-1, 1i64..=9]).prop_map(
            |(mut cs, lead)| {
                cs.push(lead);
                IntPoly::from_i64(&cs)
            },
        )
    })
}

fn planar_set() -> impl Strategy<Value = PlanarSet> {
    prop_oneof![
        (0.05f64..3.0, 0.1f64..4.0).prop_map(|(a, w)| PlanarSet::interval(a, a + w).unwrap()),
        (-4.0f64..-0.05, 0.1f64..3.0).prop_map(|(b, w)| PlanarSet::interval(b - w, b).unwrap()),
        (-3.0f64..3.0, -3.0f64..3.0, 0.1f64..2.0)
            .prop_filter("0 on the circle", |(x, y, r)| ((x * x + y * y).sqrt() - r).abs() > 0.05)
            .prop_map(|(x, y, r)| PlanarSet::circle(Complex64::new(x, y), r).unwrap()),
    ]
}

fn hom_map() -> impl Strategy<Value = HomMap> {
    (2usize..=5).prop_flat_map(|d| {
        (
            prop::collection::vec(-9i64..=9, d + 1),
            prop::collection::vec(-9i64..=9, d + 1),
            -5i64..=5,
            -5i64..=5,
        )
            .prop_filter("nonzero forms", |(h1, h2, a1, a2)| {
                h1.iter().any(|&c| c != 0) && h2.iter().any(|&c| c != 0) && (*a1 != 0 || *a2 != 0)
            })
            .prop_map(move |(h1, h2, a1, a2)| HomMap::from_i64(d, &h1, &h2, a1, a2).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn bezout_postcondition(a in -10_000i64..10_000, b in -10_000i64..10_000) {
        prop_assume!(a != 0 || b != 0);
        let (g, x, y) = bezout(&BigInt::from(a), &BigInt::from(b)).unwrap();
        prop_assert_eq!(&x * a + &y * b, g.clone());
        prop_assert_eq!(g, BigInt::from(a.gcd(&b)));
    }

    #[test]
    fn vieta(p in int_poly(8)) {
        prop_assume!(!p.constant_term().is_zero());
        let d = p.degree().unwrap();
        let rts = roots(&p.to_complex().unwrap()).unwrap();
        prop_assert_eq!(rts.len(), d);
        let lead = to_f64(p.lead().unwrap());
        let sum: Complex64 = rts.iter().sum();
        let prod: Complex64 = rts.iter().product();
        let sign = if d % 2 == 0 { 1.0 } else { -1.0 };
        let scale = rts.iter().map(|z| z.norm().max(1.0)).product::<f64>();
        prop_assert!((sum + to_f64(&p.coeff(d - 1)) / lead).norm() < 1e-7 * scale);
        prop_assert!((prod - sign * to_f64(&p.constant_term()) / lead).norm() < 1e-7 * scale);
    }

    #[test]
    fn resultant_is_root_product(p in int_poly(5), q in int_poly(5)) {
        let dq = q.degree().unwrap() as i32;
        let rts = roots(&p.to_complex().unwrap()).unwrap();
        let qc = q.to_complex().unwrap();
        let prod: Complex64 =
            rts.iter().map(|&x| qc.eval(x)).product::<Complex64>() * to_f64(p.lead().unwrap()).powi(dq);
        let exact = to_f64(&resultant(&p, &q).unwrap());
        let scale = rts.iter().map(|&x| qc.abs_scale(x)).product::<f64>()
            * to_f64(&p.lead().unwrap().abs()).powi(dq);
        prop_assert!((prod.re - exact).abs() <= 1e-7 * scale.max(1.0), "{} vs {}", prod, exact);
    }

    #[test]
    fn composition_law(f in hom_map(), m in prop::array::uniform4(-4i64..=4)) {
        let phi = IntMatrix2([
            [BigInt::from(m[0]), BigInt::from(m[1])],
            [BigInt::from(m[2]), BigInt::from(m[3])],
        ]);
        let det = phi.det();
        let lhs = res_hommap(&f.compose_linear(&phi));
        let rhs = det.pow(f.degree() as u32) * res_hommap(&f);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn game_value_matches_grid(g in prop::array::uniform4(-5.0f64..5.0), sym in any::<bool>()) {
        let mut g = g;
        if sym {
            g[2] = g[1];
        }
        let gm = GameMatrix2::new(g[0], g[1], g[2], g[3]);
        let grid = (0..=20_000)
            .map(|i| {
                let s = i as f64 / 20_000.0;
                (g[0] * s + g[1] * (1.0 - s)).min(g[2] * s + g[3] * (1.0 - s))
            })
            .fold(f64::NEG_INFINITY, f64::max);
        prop_assert!((gm.value() - grid).abs() < 1e-3);
        if g[1] == g[2] {
            prop_assert!((gm.value() - gm.value_minmax()).abs() < 1e-12);
        }
        if let Some(s) = gm.equalizing_vector() {
            let (r1, r2) = gm.payoffs(&s);
            prop_assert!((r1 - r2).abs() < 1e-9 * (1.0 + r1.abs()));
        }
    }

    #[test]
    fn green_nonnegative_and_harmonic(k in planar_set(), x in -6.0f64..6.0, y in 0.5f64..6.0) {
        let z = Complex64::new(x, y);
        let g = k.green_inf(z).unwrap();
        prop_assert!(g >= 0.0);
        // Mean value over a circle avoiding the set.
        let r = 0.2;
        let n = 64;
        let near = (0..n).any(|i| {
            let w = z + Complex64::from_polar(r * 1.5, i as f64 * std::f64::consts::TAU / n as f64);
            k.green_inf(w).unwrap() < 1e-6
        });
        prop_assume!(!near);
        let mean = (0..n)
            .map(|i| k.green_inf(z + Complex64::from_polar(r, i as f64 * std::f64::consts::TAU / n as f64)).unwrap())
            .sum::<f64>()
            / n as f64;
        prop_assert!((mean - g).abs() < 1e-9, "{} vs {}", mean, g);
    }

    #[test]
    fn height_inversion_symmetry(k in planar_set(), p in int_poly(6)) {
        prop_assume!(!p.constant_term().is_zero());
        let rev = IntPoly::new(p.coeffs().iter().rev().cloned().collect());
        let h = height(&k, &p).unwrap().total;
        let h_inv = height(&k.invert().unwrap(), &rev).unwrap().total;
        prop_assert!((h - h_inv).abs() < 1e-8 * (1.0 + h.abs()), "{} vs {}", h, h_inv);
    }

    #[test]
    fn robin_sub_mean_value(
        tau in 0.1f64..5.0,
        z in prop::array::uniform4(-2.0f64..2.0),
        w in prop::array::uniform4(-1.0f64..1.0),
    ) {
        let j = solve_tau(tau).unwrap();
        let rf = RobinFunctionK::new(j.as_set()).unwrap();
        let p = c2(Complex64::new(z[0], z[1]), Complex64::new(z[2], z[3]));
        let v = c2(Complex64::new(w[0], w[1]), Complex64::new(w[2], w[3]));
        let centre = robin_fk(&rf, &p).unwrap();
        prop_assume!(centre.is_finite());
        let n = 256;
        let mean = (0..n)
            .map(|i| {
                let e = Complex64::from_polar(1.0, i as f64 * std::f64::consts::TAU / n as f64);
                robin_fk(&rf, &[p[0] + e * v[0], p[1] + e * v[1]]).unwrap()
            })
            .sum::<f64>()
            / n as f64;
        prop_assert!(centre <= mean + 1e-6, "{} > {}", centre, mean);
    }

    #[test]
    fn lift_pushes_forward_to_roots(p in int_poly(6), frac in 0.0f64..=1.0) {
        prop_assume!(!p.constant_term().is_zero());
        let d = p.degree().unwrap();
        prop_assume!(d >= 2);
        let m = ((d as f64) * frac).round() as usize;
        let rts = roots(&p.to_complex().unwrap()).unwrap();
        let simple = rts.iter().enumerate().all(|(i, a)| rts[i + 1..].iter().all(|b| (a - b).norm() > 1e-3));
        prop_assume!(simple);
        let f = lift(&p, m).unwrap();
        let classes = zeros_by_direction(&f).unwrap();
        let mu = DiscreteMeasure2D::selection(&classes).unwrap();
        let proj = pushforward_pi(&mu);
        prop_assert!(proj.mass_at_infinity < 1e-12);
        let mut left = rts.clone();
        for z in &proj.points {
            let (i, dist) = left
                .iter()
                .enumerate()
                .map(|(i, r)| (i, (z - r).norm()))
                .fold((0, f64::INFINITY), |a, b| if b.1 < a.1 { b } else { a });
            prop_assert!(dist < 1e-8 * (1.0 + left[i].norm()));
            left.remove(i);
        }
        prop_assert!(left.is_empty());
        let res = res_hommap(&f).abs();
        let closed = (p.lead().unwrap().pow((d - m) as u32) * p.constant_term().pow(m as u32)).abs();
        prop_assert_eq!(res, closed);
    }
}
