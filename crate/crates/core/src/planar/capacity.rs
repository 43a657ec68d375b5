use num_complex::Complex64;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use super::{GameMatrix2, MonicRationalMap, PlanarSet, ProbVector2};
use crate::error::{Error, Result};
use crate::polycore::{ln_abs, roots_int, IntPoly};

/// The matrix of Robin constants and cross Green values of `K` with respect
/// to 0 and infinity:
/// `[[lim g(z,0)+log|z|, g(0,inf)], [g(inf,0), lim g(z,inf)-log|z|]]`.
pub fn gamma_matrix(k: &PlanarSet) -> Result<GameMatrix2> {
    if k.contains_zero() {
        return Err(Error::ZeroInSet);
    }
    let origin = Complex64::zero();
    let inv = k.invert()?;
    Ok(GameMatrix2::new(
        k.robin_zero()?,
        k.green_inf(origin)?,
        inv.green_inf(origin)?,
        k.robin_inf()?,
    ))
}

/// Row payoffs of a preimage set `r^{-1}(E)` at `s = (j/n, (n-j)/n)`,
/// obtained from the pull-back identity
/// `j g_K(z,0) + (n-j) g_K(z,inf) = g_E(r(z), inf)` by letting `z` tend to
/// 0 and to infinity.
pub fn preimage_payoffs(k: &PlanarSet) -> Result<(ProbVector2, f64, f64)> {
    let PlanarSet::RationalPreimage { map, base } = k else {
        return Err(Error::Domain("expected a preimage set".into()));
    };
    let n = map.degree() as f64;
    let j = map.pole_order() as f64;
    let rho = base.robin_inf()?;
    let at_zero = map.numerator_at_zero().to_f64().unwrap().abs().ln();
    let s = ProbVector2 {
        s1: j / n,
        s2: (n - j) / n,
    };
    Ok((s, (rho + at_zero) / n, rho / n))
}

/// `gamma_{0,inf}(K)`, the value of [`gamma_matrix`]. For preimage sets the
/// value is the common payoff of [`preimage_payoffs`].
pub fn robin_constant(k: &PlanarSet) -> Result<f64> {
    match k {
        PlanarSet::RationalPreimage { .. } => {
            let (_, row1, row2) = preimage_payoffs(k)?;
            if (row1 - row2).abs() > 1e-12 {
                return Err(Error::Domain("preimage payoffs do not equalize".into()));
            }
            Ok(row1)
        }
        _ => Ok(gamma_matrix(k)?.value()),
    }
}

/// `cap_{0,inf}(K) = exp(-val Gamma(K))`.
pub fn cantor_capacity(k: &PlanarSet) -> Result<f64> {
    Ok((-robin_constant(k)?).exp())
}

/// `g_E(r(z), inf)`, which equals `j g_K(z,0) + (n-j) g_K(z,inf)` for
/// `K = r^{-1}(E)`.
pub fn pullback_green(r: &MonicRationalMap, base: &PlanarSet, z: Complex64) -> Result<f64> {
    if z.is_zero() {
        return Err(Error::Domain("pull-back Green's function evaluated at the pole 0".into()));
    }
    base.green_inf(r.eval(z))
}

/// Height of an integer polynomial relative to a set.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct HeightReport {
    /// `log|a_0 a_d|`
    pub log_const_lead: f64,
    pub green_sum: f64,
    pub total: f64,
    /// Set for preimage sets, where each zero contributes
    /// `(j/n) g(x,0) + ((n-j)/n) g(x,inf)` instead of `g(x,0) + g(x,inf)`.
    pub weighted: bool,
}

/// `h_K(p)`, with zeros from the numerical root finder.
pub fn height(k: &PlanarSet, p: &IntPoly) -> Result<HeightReport> {
    if p.degree().ok_or(Error::ZeroPolynomial)? == 0 {
        return Err(Error::DegreeTooSmall { min: 1, got: 0 });
    }
    if p.constant_term().is_zero() {
        return Err(Error::Domain("height needs p(0) != 0".into()));
    }
    let zeros = roots_int(p)?;
    height_with_zeros(k, p, &zeros)
}

/// `h_K(p)` from a caller-supplied list of the zeros of `p`.
pub fn height_with_zeros(k: &PlanarSet, p: &IntPoly, zeros: &[Complex64]) -> Result<HeightReport> {
    let d = p.degree().ok_or(Error::ZeroPolynomial)?;
    let a0 = p.constant_term();
    if a0.is_zero() {
        return Err(Error::Domain("height needs p(0) != 0".into()));
    }
    if zeros.len() != d {
        return Err(Error::Domain(format!("expected {d} zeros, got {}", zeros.len())));
    }
    let log_const_lead = ln_abs(&a0) + ln_abs(p.lead().unwrap());
    let (green_sum, weighted) = match k {
        PlanarSet::RationalPreimage { map, base } => {
            let n = map.degree() as f64;
            let mut sum = 0.0;
            for &x in zeros {
                sum += pullback_green(map, base, x)? / n;
            }
            (sum, true)
        }
        _ => {
            let mut sum = 0.0;
            for &x in zeros {
                sum += k.green_zero(x)? + k.green_inf(x)?;
            }
            (sum, false)
        }
    };
    Ok(HeightReport {
        log_const_lead,
        green_sum,
        total: (log_const_lead + green_sum) / d as f64,
        weighted,
    })
}
