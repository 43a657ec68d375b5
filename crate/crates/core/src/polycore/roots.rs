//! Simultaneous root extraction (Aberth–Ehrlich) with Newton polishing.

use std::f64::consts::TAU;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{Signed, ToPrimitive, Zero};

use super::{ComplexPoly, IntPoly};
use crate::error::{Error, Result};

/// Iteration cap per attempt.
pub const MAX_ITERATIONS: usize = 200;

/// Accepted relative backward error per root.
pub const RESIDUAL_TOLERANCE: f64 = 1e-10;

/// All `deg p` roots of `p`, repeated according to numerical multiplicity.
///
/// Exact zero roots (vanishing low-order coefficients) are split off first.
/// The remaining factor is solved by Aberth–Ehrlich iteration seeded on the
/// Cauchy-radius circle; if that attempt stalls the seeds are perturbed and
/// the solve is retried once before failing with [`Error::NoConvergence`].
pub fn roots(p: &ComplexPoly) -> Result<Vec<Complex64>> {
    let d = p.degree();
    if d == 0 {
        return Err(Error::DegreeTooSmall { min: 1, got: 0 });
    }
    let zeros_at_origin = p.coeffs().iter().take_while(|c| c.is_zero()).count();
    let mut out = vec![Complex64::zero(); zeros_at_origin];
    let rest = ComplexPoly::new(p.coeffs()[zeros_at_origin..].to_vec())?;
    let lead = rest.lead();
    let monic = ComplexPoly::new(rest.coeffs().iter().map(|c| c / lead).collect())?;
    match monic.degree() {
        0 => {}
        1 => out.push(-monic.coeffs()[0]),
        _ => out.extend(solve(&monic)?),
    }
    Ok(out)
}

fn solve(p: &ComplexPoly) -> Result<Vec<Complex64>> {
    let d = p.degree();
    let radius = cauchy_radius(p);
    let attempts = [(radius, 0.4), (radius * 1.1, 1.3)];
    for &(r, phase) in &attempts {
        let mut z: Vec<Complex64> = (0..d)
            .map(|k| Complex64::from_polar(r, phase + TAU * k as f64 / d as f64))
            .collect();
        aberth(p, &mut z);
        for zi in z.iter_mut() {
            polish(p, zi);
        }
        if z.iter().all(|&zi| p.backward_error(zi) < RESIDUAL_TOLERANCE) {
            return Ok(z);
        }
    }
    Err(Error::NoConvergence {
        degree: d,
        iterations: MAX_ITERATIONS,
    })
}

/// Unique positive root of `|a_d| x^d = sum_{i<d} |a_i| x^i`: every root of
/// `p` lies in the closed disk of this radius.
fn cauchy_radius(p: &ComplexPoly) -> f64 {
    let c = p.coeffs();
    let d = p.degree();
    let lead = c[d].norm();
    let f = |x: f64| {
        let lower: f64 = c[..d]
            .iter()
            .enumerate()
            .map(|(i, a)| a.norm() * x.powi(i as i32))
            .sum();
        lead * x.powi(d as i32) - lower
    };
    let mut hi = 1.0;
    while f(hi) < 0.0 {
        hi *= 2.0;
    }
    let mut lo = 0.0;
    for _ in 0..60 {
        let mid = 0.5 * (lo + hi);
        if f(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    if hi > 0.0 {
        hi
    } else {
        1.0
    }
}

fn aberth(p: &ComplexPoly, z: &mut [Complex64]) {
    let d = z.len();
    let mut done = vec![false; d];
    for _ in 0..MAX_ITERATIONS {
        let mut all_done = true;
        for i in 0..d {
            if done[i] {
                continue;
            }
            let (v, dv) = p.eval_with_derivative(z[i]);
            if v.is_zero() {
                done[i] = true;
                continue;
            }
            let newton = v / dv;
            let repulsion: Complex64 = (0..d)
                .filter(|&j| j != i)
                .map(|j| {
                    let diff = z[i] - z[j];
                    if diff.is_zero() {
                        Complex64::zero()
                    } else {
                        diff.inv()
                    }
                })
                .sum();
            let step = newton / (Complex64::new(1.0, 0.0) - newton * repulsion);
            if step.re.is_finite() && step.im.is_finite() {
                z[i] -= step;
            }
            let small_step = step.norm() <= 4.0 * f64::EPSILON * z[i].norm().max(f64::MIN_POSITIVE);
            if small_step || p.backward_error(z[i]) <= 4.0 * f64::EPSILON {
                done[i] = true;
            } else {
                all_done = false;
            }
        }
        if all_done {
            break;
        }
    }
}

fn polish(p: &ComplexPoly, z: &mut Complex64) {
    let mut best = p.backward_error(*z);
    for _ in 0..3 {
        let (v, dv) = p.eval_with_derivative(*z);
        if dv.is_zero() {
            return;
        }
        let candidate = *z - v / dv;
        let err = p.backward_error(candidate);
        if err < best {
            best = err;
            *z = candidate;
        } else {
            return;
        }
    }
}

/// Roots of an integer polynomial. Starts from [`roots`] on the rounded
/// coefficients and refines with Aberth sweeps whose evaluations of `p` and
/// `p'` are carried out in fixed point wide enough to be exact to well below
/// double precision, so heavy cancellation among large coefficients does not
/// limit the accuracy.
pub fn roots_int(p: &IntPoly) -> Result<Vec<Complex64>> {
    let d = p.degree().ok_or(Error::ZeroPolynomial)?;
    if d == 0 {
        return Err(Error::DegreeTooSmall { min: 1, got: 0 });
    }
    let zeros_at_origin = p.coeffs().iter().take_while(|c| c.is_zero()).count();
    let rest = IntPoly::new(p.coeffs()[zeros_at_origin..].to_vec());
    let mut out = vec![Complex64::zero(); zeros_at_origin];
    if rest.degree() == Some(0) {
        return Ok(out);
    }
    let complex = rest.to_complex()?;
    let mut z = match roots(&complex) {
        Ok(z) => z,
        Err(_) => {
            let r = cauchy_radius(&complex);
            let n = complex.degree();
            (0..n)
                .map(|k| Complex64::from_polar(r, 0.4 + TAU * k as f64 / n as f64))
                .collect()
        }
    };
    aberth_exact(&rest, &mut z)?;
    out.extend(z);
    Ok(out)
}

fn to_fixed(x: f64, bits: u32) -> BigInt {
    if x == 0.0 {
        return BigInt::zero();
    }
    let raw = x.to_bits();
    let exp = ((raw >> 52) & 0x7ff) as i64;
    let frac = raw & ((1u64 << 52) - 1);
    let (mant, e) = if exp == 0 {
        (frac, -1074)
    } else {
        (frac | (1u64 << 52), exp - 1075)
    };
    let shift = e + bits as i64;
    let v = BigInt::from(mant);
    let v = if shift >= 0 { v << shift as usize } else { v >> (-shift) as usize };
    if x < 0.0 {
        -v
    } else {
        v
    }
}

fn from_fixed(v: &BigInt, bits: u32) -> f64 {
    let len = v.bits() as i64;
    let drop = (len - 64).max(0);
    let head = (v.abs() >> drop as usize).to_f64().unwrap_or(f64::INFINITY);
    let signed = if v.is_negative() { -head } else { head };
    signed * 2f64.powf((drop - bits as i64) as f64)
}

type Fixed = (BigInt, BigInt);

fn fixed_mul(a: &Fixed, b: &Fixed, bits: u32) -> Fixed {
    (
        (&a.0 * &b.0 - &a.1 * &b.1) >> bits as usize,
        (&a.0 * &b.1 + &a.1 * &b.0) >> bits as usize,
    )
}

/// `p(z)` and `p'(z)` by fixed-point Horner.
fn eval_exact(p: &IntPoly, z: Complex64) -> (Complex64, Complex64) {
    let d = p.coeffs().len() - 1;
    let grow = (d as f64 * z.norm().max(1.0).log2()).ceil() as u32;
    let bits = 128 + grow;
    let zf = (to_fixed(z.re, bits), to_fixed(z.im, bits));
    let c = p.coeffs();
    let mut v: Fixed = (&c[d] << bits as usize, BigInt::zero());
    let mut dv: Fixed = (BigInt::zero(), BigInt::zero());
    for ci in c[..d].iter().rev() {
        let t = fixed_mul(&dv, &zf, bits);
        dv = (t.0 + &v.0, t.1 + &v.1);
        let t = fixed_mul(&v, &zf, bits);
        v = (t.0 + (ci << bits as usize), t.1);
    }
    let back = |f: &Fixed| Complex64::new(from_fixed(&f.0, bits), from_fixed(&f.1, bits));
    (back(&v), back(&dv))
}

fn aberth_exact(p: &IntPoly, z: &mut [Complex64]) -> Result<()> {
    let d = z.len();
    let mut done = vec![false; d];
    for _ in 0..MAX_ITERATIONS {
        for i in 0..d {
            if done[i] {
                continue;
            }
            let (v, dv) = eval_exact(p, z[i]);
            if v.is_zero() {
                done[i] = true;
                continue;
            }
            let newton = v / dv;
            let repulsion: Complex64 = (0..d)
                .filter(|&j| j != i && z[i] != z[j])
                .map(|j| (z[i] - z[j]).inv())
                .sum();
            let step = newton / (Complex64::new(1.0, 0.0) - newton * repulsion);
            if !(step.re.is_finite() && step.im.is_finite()) {
                done[i] = true;
                continue;
            }
            z[i] -= step;
            if step.norm() <= 4.0 * f64::EPSILON * z[i].norm().max(f64::MIN_POSITIVE) {
                done[i] = true;
            }
        }
        if done.iter().all(|&x| x) {
            return Ok(());
        }
    }
    // Clustered roots converge only linearly; accept them if the rounded
    // polynomial is satisfied to the usual backward error.
    let complex = p.to_complex()?;
    if z.iter().all(|&zi| complex.backward_error(zi) < RESIDUAL_TOLERANCE) {
        return Ok(());
    }
    Err(Error::NoConvergence {
        degree: d,
        iterations: MAX_ITERATIONS,
    })
}
