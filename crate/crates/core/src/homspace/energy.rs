use std::f64::consts::{PI, TAU};

use num_complex::Complex64;
use serde::Serialize;

use super::hommap::{norm2, wedge, C2};
use super::zeros::proportional;
use crate::error::{Error, Result};
use crate::quadrature::{gauss_legendre, integrate_tanh_sinh_gaps};

/// A finitely supported probability measure on `C^2`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DiscreteMeasure2D {
    pub points: Vec<C2>,
    pub weights: Vec<f64>,
}

impl DiscreteMeasure2D {
    pub fn new(points: Vec<C2>, weights: Vec<f64>) -> Result<Self> {
        if points.len() != weights.len() || points.is_empty() {
            return Err(Error::Domain("points and weights must be nonempty and of equal length".into()));
        }
        if weights.iter().any(|w| !(*w >= 0.0)) {
            return Err(Error::Domain("weights must be nonnegative".into()));
        }
        let total: f64 = weights.iter().sum();
        if (total - 1.0).abs() > 1e-12 {
            return Err(Error::Domain(format!("total mass {total} is not 1")));
        }
        Ok(DiscreteMeasure2D { points, weights })
    }

    pub fn uniform(points: Vec<C2>) -> Result<Self> {
        let w = 1.0 / points.len() as f64;
        let weights = vec![w; points.len()];
        Self::new(points, weights)
    }

    /// One zero from each direction class, weight `1/d` each; classes come
    /// from [`super::zeros_by_direction`].
    pub fn selection(classes: &[Vec<C2>]) -> Result<Self> {
        Self::uniform(classes.iter().filter_map(|c| c.first().copied()).collect())
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// Neumaier-compensated sum.
#[derive(Default)]
struct Sum {
    s: f64,
    c: f64,
}

impl Sum {
    fn add(&mut self, x: f64) {
        let t = self.s + x;
        if self.s.abs() >= x.abs() {
            self.c += (self.s - t) + x;
        } else {
            self.c += (x - t) + self.s;
        }
        self.s = t;
    }

    fn value(&self) -> f64 {
        self.s + self.c
    }
}

/// `sum_{i != k} w_i w_k log(1 / |xi_i ^ xi_k|)`. Any pair of proportional
/// points makes the energy `+inf`.
pub fn discrete_hom_energy(mu: &DiscreteMeasure2D) -> f64 {
    let mut sum = Sum::default();
    let pts = &mu.points;
    for i in 0..pts.len() {
        for k in i + 1..pts.len() {
            if proportional(&pts[i], &pts[k]) {
                return f64::INFINITY;
            }
            let w = wedge(&pts[i], &pts[k]).norm();
            sum.add(-2.0 * mu.weights[i] * mu.weights[k] * w.ln());
        }
    }
    sum.value()
}

/// Circled sets whose equilibrium measure is known in closed form.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum EnergyTarget {
    /// `{|z1| <= r1, |z2| <= r2}`, measure: product of circle measures.
    Polydisk { r1: f64, r2: f64 },
    /// `{|z| <= r}`, measure: normalized surface measure on the sphere.
    Ball { r: f64 },
}

const TS_LEVEL: u32 = 6;
const GL_NODES: usize = 48;

/// Homogeneous energy of the equilibrium measure by quadrature.
///
/// Both measures are invariant under a transitive group acting on their
/// support and preserving `|z ^ w|`, so the potential is constant there and
/// the energy is the potential at one support point. That potential is a
/// two-dimensional tensor-product integral whose logarithmic singularity
/// is placed on the boundary of the integration box.
pub fn quad_hom_energy(target: EnergyTarget) -> Result<f64> {
    match target {
        EnergyTarget::Polydisk { r1, r2 } => {
            if !(r1 > 0.0 && r2 > 0.0) {
                return Err(Error::Domain("polydisk radii must be positive".into()));
            }
            let z = [Complex64::from_polar(r1, 0.7), Complex64::from_polar(r2, -1.9)];
            Ok(polydisk_potential(r1, r2, &z))
        }
        EnergyTarget::Ball { r } => {
            if !(r > 0.0) {
                return Err(Error::Domain("ball radius must be positive".into()));
            }
            let s = PI / 5.0;
            let z = [Complex64::new(r * s.cos(), 0.0), Complex64::from_polar(r * s.sin(), 0.4)];
            Ok(ball_potential(r, &z))
        }
    }
}

/// `int log(1/|z ^ w|) dmu(w)` for `w = (r1 e^{ia}, r2 e^{ib})`, `a`, `b`
/// uniform. For fixed `a` the wedge vanishes at one angle `b0`; the inner
/// integral runs over `[b0, b0 + 2pi]` and uses
/// `|z ^ w| = |z1| r2 |e^{ib} - e^{ib0}| = 2 |z1| r2 sin(delta / 2)` with
/// `delta` the distance to the nearer endpoint.
fn polydisk_potential(r1: f64, r2: f64, z: &C2) -> f64 {
    let (x, wx) = gauss_legendre(GL_NODES);
    let mut total = 0.0;
    for (&xa, &wa) in x.iter().zip(&wx) {
        let a = PI * (xa + 1.0);
        let w1 = Complex64::from_polar(r1, a);
        // z1 w2 = z2 w1 when arg w2 = arg(z2 w1 / z1)
        let b0 = (z[1] * w1 / z[0]).arg();
        let inner = integrate_tanh_sinh_gaps(
            |_, da, db| -(2.0 * z[0].norm() * r2 * (0.5 * da.min(db)).sin()).ln(),
            b0,
            b0 + TAU,
            TS_LEVEL,
        ) / TAU;
        total += wa * PI * inner / TAU;
    }
    total
}

/// Potential of the sphere measure at `z`, `|z| = r`. With
/// `w = r (cos t e^{ia}, sin t e^{ib})` the normalized measure is
/// `sin 2t dt da db / (2 pi)^2` on `[0, pi/2] x [0, 2pi)^2`; only the phase
/// difference matters, leaving a 2D integral over `(t, phase)`. Writing
/// `z = r (cos s, sin s e^{ip0})`,
/// `|z ^ w|^2 = r^4 (sin^2(t - s) + sin 2s sin 2t sin^2(phi / 2))`
/// with `phi` the phase offset from the singular direction.
fn ball_potential(r: f64, z: &C2) -> f64 {
    let s = (z[0].norm() / r).clamp(0.0, 1.0).acos();
    let r4 = r.powi(4);
    let phase_integral = |t: f64, dt: f64| {
        let a = dt.sin().powi(2);
        let b = (2.0 * s).sin() * (2.0 * t).sin();
        integrate_tanh_sinh_gaps(
            |_, da, db| -0.5 * (r4 * (a + b * (0.5 * da.min(db)).sin().powi(2))).ln(),
            0.0,
            TAU,
            TS_LEVEL,
        ) / TAU
    };
    let below = integrate_tanh_sinh_gaps(
        |t, _, db| (2.0 * t).sin() * phase_integral(t, db),
        0.0,
        s,
        TS_LEVEL,
    );
    let above = integrate_tanh_sinh_gaps(
        |t, da, _| (2.0 * t).sin() * phase_integral(t, da),
        s,
        PI / 2.0,
        TS_LEVEL,
    );
    below + above
}

/// The measure pushed to the Riemann sphere by `(z1, z2) -> z1 / z2`; mass
/// landing at infinity is recorded separately.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Projected {
    pub points: Vec<Complex64>,
    pub weights: Vec<f64>,
    pub mass_at_infinity: f64,
}

pub fn pushforward_pi(mu: &DiscreteMeasure2D) -> Projected {
    let mut out = Projected {
        points: Vec::new(),
        weights: Vec::new(),
        mass_at_infinity: 0.0,
    };
    for (z, &w) in mu.points.iter().zip(&mu.weights) {
        if z[1] == Complex64::new(0.0, 0.0) {
            out.mass_at_infinity += w;
        } else {
            out.points.push(z[0] / z[1]);
            out.weights.push(w);
        }
    }
    out
}

/// Largest norm among the support points.
pub fn support_radius(mu: &DiscreteMeasure2D) -> f64 {
    mu.points.iter().map(norm2).fold(0.0, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn small_energies() {
        let mu = DiscreteMeasure2D::uniform(vec![[c(1.0, 0.0), c(0.0, 0.0)], [c(0.0, 0.0), c(1.0, 0.0)]]).unwrap();
        assert_eq!(discrete_hom_energy(&mu), 0.0);
        let p = [c(0.3, 0.1), c(-1.0, 2.0)];
        let rep = DiscreteMeasure2D::uniform(vec![p, [c(1.0, 0.0), c(1.0, 0.0)], p]).unwrap();
        assert_eq!(discrete_hom_energy(&rep), f64::INFINITY);
    }

    #[test]
    fn quadrature_capacities() {
        let v = quad_hom_energy(EnergyTarget::Polydisk { r1: 1.0, r2: 1.0 }).unwrap();
        assert!(v.abs() < 1e-4, "{v}");
        let v = quad_hom_energy(EnergyTarget::Polydisk { r1: 2.0, r2: 0.7 }).unwrap();
        assert!((v + (1.4f64).ln()).abs() < 1e-4, "{v}");
        let v = quad_hom_energy(EnergyTarget::Ball { r: 1.5 }).unwrap();
        assert!((v - (-2.0 * 1.5f64.ln() + 0.5)).abs() < 1e-3, "{v}");
    }

    #[test]
    fn projection() {
        let a = c(0.5, 0.2);
        let b = c(1.0, -1.0);
        let orbit: Vec<C2> = (0..4)
            .map(|k| {
                let u = Complex64::from_polar(1.0, k as f64);
                [u * a, u * b]
            })
            .chain(std::iter::once([c(1.0, 0.0), c(0.0, 0.0)]))
            .collect();
        let pr = pushforward_pi(&DiscreteMeasure2D::uniform(orbit).unwrap());
        assert!((pr.mass_at_infinity - 0.2).abs() < 1e-15);
        for z in pr.points {
            assert!((z - a / b).norm() < 1e-14);
        }
    }
}
