use std::f64::consts::TAU;

use num_complex::Complex64;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use super::hommap::{norm2, normal_form, res_hommap, wedge, HomMap, Reduction, C2};
use crate::error::{Error, Result};
use crate::polycore::{discriminant_formal, ln_abs, roots_int};

/// Zeros of `F` grouped by direction: class `k` holds the `d` zeros
/// `c xi_k`, `c^d = 1`, on one complex line through the origin.
pub fn zeros_by_direction(f: &HomMap) -> Result<Vec<Vec<C2>>> {
    if res_hommap(f).is_zero() {
        return Err(Error::ZeroResultant);
    }
    let nf = normal_form(f)?;
    let p = nf.map.dehom1();
    let finite = if p.degree().unwrap() == 0 {
        Vec::new()
    } else {
        roots_int(&p)?
    };
    let mut classes = canonical_zeros(&nf.map, &finite)?;
    if !nf.scale.is_one() {
        let s = nf.scale.to_f64().unwrap().powf(1.0 / f.degree() as f64);
        for z in classes.iter_mut().flatten() {
            z[0] *= s;
            z[1] *= s;
        }
    }
    Ok(classes)
}

/// All `d^2` zeros of `F`, ordered class by class.
pub fn zeros_hommap(f: &HomMap) -> Result<Vec<C2>> {
    Ok(zeros_by_direction(f)?.into_iter().flatten().collect())
}

/// Zeros of a map of shape `(F1, F2 - 1)` from caller-supplied roots of
/// `F1(x, 1)`; the missing `d - roots.len()` directions lie at `(1, 0)`.
/// Lets structured callers avoid expanding and solving `F1` numerically.
pub fn canonical_zeros(f: &HomMap, finite_roots: &[Complex64]) -> Result<Vec<Vec<C2>>> {
    if !f.is_canonical() {
        return Err(Error::Domain("expected constants (0, -1)".into()));
    }
    let d = f.degree();
    if finite_roots.len() > d {
        return Err(Error::Domain(format!("{} roots for degree {d}", finite_roots.len())));
    }
    let h2: Vec<Complex64> = f
        .h2()
        .iter()
        .map(|c| c.to_f64().map(|v| Complex64::new(v, 0.0)))
        .collect::<Option<_>>()
        .ok_or_else(|| Error::IllConditioned("F2 coefficient overflows f64".into()))?;
    let one = Complex64::one();
    let zero = Complex64::zero();
    let mut directions: Vec<C2> = finite_roots.iter().map(|&r| [r, one]).collect();
    directions.resize(d, [one, zero]);
    let unity: Vec<Complex64> = (0..d)
        .map(|k| Complex64::from_polar(1.0, TAU * k as f64 / d as f64))
        .collect();
    directions
        .into_iter()
        .map(|v| {
            // F2(v) for v = (x, 1) or (1, 0)
            let t = if v[1] == zero {
                h2[d]
            } else {
                h2.iter().rev().fold(zero, |acc, &c| acc * v[0] + c)
            };
            if t == zero {
                return Err(Error::ZeroResultant);
            }
            let lambda = Complex64::from_polar(t.norm().powf(-1.0 / d as f64), -t.arg() / d as f64);
            Ok(unity
                .iter()
                .map(|&c| [c * lambda * v[0], c * lambda * v[1]])
                .collect())
        })
        .collect()
}

/// Proportionality test used throughout: `|z ^ w| < 1e-12 |z| |w|`.
pub fn proportional(z: &C2, w: &C2) -> bool {
    wedge(z, w).norm() < 1e-12 * norm2(z) * norm2(w)
}

/// Picks `d` pairwise non-proportional zeros: sort by norm, then by the
/// phases of the coordinates, and take greedily.
pub fn select_generic(zeros: &[C2], d: usize) -> Result<Vec<C2>> {
    let mut sorted = zeros.to_vec();
    sorted.sort_by(|z, w| {
        let key = |p: &C2| (norm2(p), p[0].arg(), p[1].arg());
        key(z).partial_cmp(&key(w)).unwrap_or(std::cmp::Ordering::Equal)
    });
    let mut chosen: Vec<C2> = Vec::with_capacity(d);
    for z in sorted {
        if chosen.iter().all(|w| !proportional(&z, w)) {
            chosen.push(z);
            if chosen.len() == d {
                return Ok(chosen);
            }
        }
    }
    Err(Error::NonGeneric(d))
}

/// `sum_{i != k} log|xi_i ^ xi_k|` over a selection.
pub fn log_wedge_product(sel: &[C2]) -> f64 {
    let mut total = 0.0;
    for (i, z) in sel.iter().enumerate() {
        for w in &sel[i + 1..] {
            total += 2.0 * wedge(z, w).norm().ln();
        }
    }
    total
}

/// Both sides of `prod_{i!=k} |xi_i ^ xi_k| = |Res F|^{(2-2d)/d} |Disc p|`,
/// `p = F1(x, 1)` as a binary form, in logarithms.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IdentityReport {
    pub log_lhs: f64,
    pub log_rhs: f64,
    /// `|lhs / rhs - 1|`
    pub rel_diff: f64,
}

/// Checks the identity for a map of shape `(F1, F2 - 1)`; the left side
/// comes from numerical zeros, the right from exact integers.
pub fn lemma41_check(f: &HomMap) -> Result<IdentityReport> {
    if !f.is_canonical() {
        return Err(Error::Domain("the identity needs constants (0, -1)".into()));
    }
    let d = f.degree();
    let res = res_hommap(f);
    if res.is_zero() {
        return Err(Error::ZeroResultant);
    }
    let disc = discriminant_formal(&f.dehom1(), d)?;
    if disc.is_zero() {
        return Err(Error::NonGeneric(d));
    }
    let sel = select_generic(&zeros_hommap(f)?, d)?;
    let log_lhs = log_wedge_product(&sel);
    let log_rhs = (2.0 - 2.0 * d as f64) / d as f64 * ln_abs(&res) + ln_abs(&disc);
    Ok(IdentityReport {
        log_lhs,
        log_rhs,
        rel_diff: (log_lhs - log_rhs).exp_m1().abs(),
    })
}

/// Outcome of `prod_{i!=k} |xi_i ^ xi_k| >= |Res F|^{(2-2d)/d}`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct InequalityReport {
    pub branch: Reduction,
    pub log_lhs: f64,
    pub log_rhs: f64,
    /// `lhs / rhs - 1`; nonnegative when the inequality holds exactly.
    pub slack: f64,
    pub holds: bool,
}

pub const INEQUALITY_SLACK: f64 = 1e-9;

/// Checks the inequality for an integer map with arbitrary constants.
pub fn lemma42_check(f: &HomMap) -> Result<InequalityReport> {
    let d = f.degree();
    let res = res_hommap(f);
    if res.is_zero() {
        return Err(Error::ZeroResultant);
    }
    let nf = normal_form(f)?;
    if discriminant_formal(&nf.map.dehom1(), d)?.is_zero() {
        return Err(Error::NonGeneric(d));
    }
    let sel = select_generic(&zeros_hommap(f)?, d)?;
    let log_lhs = log_wedge_product(&sel);
    let log_rhs = (2.0 - 2.0 * d as f64) / d as f64 * ln_abs(&res);
    let slack = (log_lhs - log_rhs).exp_m1();
    Ok(InequalityReport {
        branch: nf.branch,
        log_lhs,
        log_rhs,
        slack,
        holds: slack >= -INEQUALITY_SLACK,
    })
}

/// True when `F` has `d` pairwise non-proportional zeros, decided exactly.
pub fn is_generic(f: &HomMap) -> Result<bool> {
    if res_hommap(f).is_zero() {
        return Ok(false);
    }
    let nf = normal_form(f)?;
    Ok(!discriminant_formal(&nf.map.dehom1(), f.degree())?.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homspace::lift;
    use crate::polycore::IntPoly;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn contains(zs: &[C2], p: C2) -> bool {
        zs.iter().any(|z| (z[0] - p[0]).norm() + (z[1] - p[1]).norm() < 1e-12)
    }

    #[test]
    fn worked_example() {
        let f = HomMap::from_i64(2, &[-1, 0, 1], &[0, 1, 0], 0, -1).unwrap();
        let zs = zeros_hommap(&f).unwrap();
        assert_eq!(zs.len(), 4);
        for p in [
            [c(1.0, 0.0), c(1.0, 0.0)],
            [c(-1.0, 0.0), c(-1.0, 0.0)],
            [c(0.0, -1.0), c(0.0, 1.0)],
            [c(0.0, 1.0), c(0.0, -1.0)],
        ] {
            assert!(contains(&zs, p), "{p:?}");
        }
        let r = lemma41_check(&f).unwrap();
        assert!((r.log_lhs - 4f64.ln()).abs() < 1e-12);
        assert!((r.log_rhs - 4f64.ln()).abs() < 1e-12);
    }

    #[test]
    fn second_example_and_residuals() {
        let f = HomMap::from_i64(2, &[-1, 0, 1], &[1, 0, 1], 0, -2).unwrap();
        let zs = zeros_hommap(&f).unwrap();
        for p in [(1.0, 1.0), (1.0, -1.0), (-1.0, 1.0), (-1.0, -1.0)] {
            assert!(contains(&zs, [c(p.0, 0.0), c(p.1, 0.0)]));
        }
        let fc = f.to_complex().unwrap();
        for z in &zs {
            let v = fc.eval(z);
            assert!(v[0].norm().max(v[1].norm()) < 1e-8 * f.coefficient_scale());
        }
    }

    #[test]
    fn zeros_invariant_under_shift() {
        let f = HomMap::from_i64(3, &[1, -2, 0, 3], &[2, 1, 1, 0], 3, 5).unwrap();
        let zs = zeros_hommap(&f).unwrap();
        assert_eq!(zs.len(), 9);
        let fc = f.to_complex().unwrap();
        for z in &zs {
            let v = fc.eval(z);
            assert!(v[0].norm().max(v[1].norm()) < 1e-8 * f.coefficient_scale(), "{v:?}");
        }
        let r = lemma42_check(&f).unwrap();
        assert!(r.holds && r.branch == Reduction::Unimodular);
    }

    #[test]
    fn root_at_infinity_direction() {
        // F1 = z1 z2, F2 = z1^2 + z2^2: F1(x,1) has degree 1 < 2
        let f = HomMap::from_i64(2, &[0, 1, 0], &[1, 0, 1], 0, -1).unwrap();
        let zs = zeros_hommap(&f).unwrap();
        assert!(contains(&zs, [c(1.0, 0.0), c(0.0, 0.0)]));
        assert!(contains(&zs, [c(0.0, 0.0), c(1.0, 0.0)]));
        let r = lemma41_check(&f).unwrap();
        assert!(r.rel_diff < 1e-12, "{r:?}");
    }

    #[test]
    fn scaled_branch() {
        let f = HomMap::from_i64(2, &[-1, 0, 1], &[0, 1, 0], 0, -4).unwrap();
        let zs = zeros_hommap(&f).unwrap();
        assert!(contains(&zs, [c(2.0, 0.0), c(2.0, 0.0)]));
        let r = lemma42_check(&f).unwrap();
        assert_eq!(r.branch, Reduction::Scaled);
        assert!(r.holds);
    }

    #[test]
    fn lift_of_cyclotomic() {
        let p = IntPoly::from_i64(&[-1, 0, 0, 0, 0, 1]);
        let f = lift(&p, 2).unwrap();
        let r = lemma42_check(&f).unwrap();
        assert!(r.holds);
        // |Res| = 1, so the product equals |Disc(z^5 - 1)| = 5^5
        assert!((r.log_lhs - 5.0 * 5f64.ln()).abs() < 1e-9);
        assert!(lemma41_check(&HomMap::from_i64(2, &[1, 2, 1], &[0, 1, 0], 0, -1).unwrap()).is_err());
    }
}
