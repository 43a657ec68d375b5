//! Robinson's intervals `J_tau = [a(tau), b(tau)]`, each of capacity one
//! with respect to 0 and infinity, and the first moment of their limiting
//! zero measure.

use std::f64::consts::PI;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::planar::{PlanarSet, ProbVector2};
use crate::quadrature::integrate_tanh_sinh_gaps;

pub const TAU_MIN: f64 = 1e-3;
pub const TAU_MAX: f64 = 1e3;

/// `[a, b]` solving `log((b-a)/4) = tau M` and `log((b-a)/(4ab)) = M/tau`
/// with `M = log((sqrt b + sqrt a)/(sqrt b - sqrt a))`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct RobinsonInterval {
    pub tau: f64,
    pub a: f64,
    pub b: f64,
    /// `M = g(0, infinity)`.
    pub m: f64,
}

impl RobinsonInterval {
    pub fn cross_green(&self) -> f64 {
        cross_green(self.a, self.b)
    }

    /// Residuals of the two defining equations.
    pub fn residuals(&self) -> (f64, f64) {
        let m = self.cross_green();
        let len = self.b - self.a;
        (
            (len / 4.0).ln() - self.tau * m,
            (len / (4.0 * self.a * self.b)).ln() - m / self.tau,
        )
    }

    pub fn as_set(&self) -> PlanarSet {
        PlanarSet::Interval {
            a: self.a,
            b: self.b,
        }
    }
}

fn cross_green(a: f64, b: f64) -> f64 {
    let (ra, rb) = (a.sqrt(), b.sqrt());
    ((rb + ra) / (rb - ra)).ln()
}

/// Endpoints for a given `M`: `b - a = 4 e^{tau M}` and
/// `ab = e^{M (tau - 1/tau)}` give a quadratic for `a`.
fn endpoints(tau: f64, m: f64) -> (f64, f64) {
    let len = 4.0 * (tau * m).exp();
    let prod = (m * (tau - 1.0 / tau)).exp();
    let a = 2.0 * prod / (len + (len * len + 4.0 * prod).sqrt());
    (a, a + len)
}

/// Solves for `J_tau` by bisection on `M > 0`.
pub fn solve_tau(tau: f64) -> Result<RobinsonInterval> {
    if !(TAU_MIN..=TAU_MAX).contains(&tau) {
        return Err(Error::Domain(format!(
            "tau = {tau} outside the supported range [{TAU_MIN}, {TAU_MAX}]"
        )));
    }
    let f = |m: f64| {
        let (a, b) = endpoints(tau, m);
        cross_green(a, b) - m
    };
    let mut lo = 0.0;
    let mut hi = 1.0;
    while f(hi) > 0.0 {
        hi *= 2.0;
        if hi > 1e3 {
            return Err(Error::Bracket(format!("no sign change of the M equation for tau = {tau}")));
        }
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if f(mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let m = 0.5 * (lo + hi);
    let (a, b) = endpoints(tau, m);
    Ok(RobinsonInterval { tau, a, b, m })
}

/// The real root `w > 1` of `w^25 - w^9 - 1` and the endpoints of `J_{1/4}`,
/// `sqrt a = w^5 - w^-3` and `sqrt b = w^5 + w^-3`.
pub fn j14_endpoints() -> (f64, f64, f64) {
    let f = |w: f64| w.powi(25) - w.powi(9) - 1.0;
    let (mut lo, mut hi) = (1.0, 2.0);
    while hi - lo > 1e-15 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if f(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let w = 0.5 * (lo + hi);
    let ra = w.powi(5) - w.powi(-3);
    let rb = w.powi(5) + w.powi(-3);
    (w, ra * ra, rb * rb)
}

/// `int t dnu(t)` for `nu = s1 nu^0 + s2 nu^inf` on the interval:
/// `s1 sqrt(ab) + s2 (a+b)/2`.
pub fn sss_trace(j: &RobinsonInterval, s: &ProbVector2) -> f64 {
    s.s1 * (j.a * j.b).sqrt() + s.s2 * 0.5 * (j.a + j.b)
}

/// The same moment by tanh-sinh quadrature of the two densities.
pub fn sss_trace_quadrature(j: &RobinsonInterval, s: &ProbVector2) -> f64 {
    let (a, b) = (j.a, j.b);
    let g = (a * b).sqrt();
    integrate_tanh_sinh_gaps(
        |t, da, db| {
            let arcsine = 1.0 / (PI * (da * db).sqrt());
            t * (s.s1 * g / t + s.s2) * arcsine
        },
        a,
        b,
        7,
    )
}
