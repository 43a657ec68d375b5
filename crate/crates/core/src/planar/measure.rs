use std::f64::consts::PI;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{PlanarSet, ProbVector2};
use crate::error::{Error, Result};

/// A finitely supported probability measure on the plane.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DiscreteMeasure1D {
    pub points: Vec<Complex64>,
    pub weights: Vec<f64>,
}

impl DiscreteMeasure1D {
    pub fn new(points: Vec<Complex64>, weights: Vec<f64>) -> Result<Self> {
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
        Ok(DiscreteMeasure1D { points, weights })
    }

    pub fn uniform(points: Vec<Complex64>) -> Result<Self> {
        let w = 1.0 / points.len() as f64;
        let weights = vec![w; points.len()];
        Self::new(points, weights)
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn total_mass(&self) -> f64 {
        self.weights.iter().sum()
    }

    /// `int f dnu`.
    pub fn integrate<F: Fn(Complex64) -> f64>(&self, f: F) -> f64 {
        self.points
            .iter()
            .zip(&self.weights)
            .map(|(&z, &w)| w * f(z))
            .sum()
    }

    pub fn mean(&self) -> Complex64 {
        self.points
            .iter()
            .zip(&self.weights)
            .map(|(&z, &w)| z * w)
            .sum()
    }
}

/// Selects the harmonic measure with respect to 0 or the equilibrium measure.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Pole {
    Zero,
    Inf,
}

/// Density on `(a, b)` of the harmonic measure of `[a, b]` with respect to
/// 0 (`Pole::Zero`, needs `a > 0`) or infinity (`Pole::Inf`, the arcsine law).
pub fn nu_density(k: &PlanarSet, which: Pole, t: f64) -> Result<f64> {
    let PlanarSet::Interval { a, b } = *k else {
        return Err(Error::Domain("densities are available for intervals only".into()));
    };
    if !(a < t && t < b) {
        return Err(Error::Domain(format!("{t} is not inside ({a}, {b})")));
    }
    let arcsine = 1.0 / (PI * ((t - a) * (b - t)).sqrt());
    match which {
        Pole::Inf => Ok(arcsine),
        Pole::Zero if a > 0.0 => Ok((a * b).sqrt() / t * arcsine),
        Pole::Zero => Err(Error::ZeroInSet),
    }
}

/// Draws `count` points from the equilibrium measure of the base of
/// `K = r^{-1}(E)` and returns all their preimages, each of weight
/// `1 / (n count)`. The result samples `(j/n) nu^0 + ((n-j)/n) nu^inf`.
pub fn sample_nu_k(k: &PlanarSet, s: &ProbVector2, count: usize, seed: u64) -> Result<DiscreteMeasure1D> {
    let PlanarSet::RationalPreimage { map, base } = k else {
        return Err(Error::Domain("sampling needs a preimage set".into()));
    };
    if count == 0 {
        return Err(Error::Domain("sample count must be positive".into()));
    }
    let n = map.degree();
    let j = map.pole_order();
    if (s.s1 - j as f64 / n as f64).abs() > 1e-12 {
        return Err(Error::Domain(format!(
            "sampling supports s = ({j}/{n}, {}/{n}) only",
            n - j
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points = Vec::with_capacity(n * count);
    for _ in 0..count {
        let theta: f64 = rng.gen::<f64>() * 2.0 * PI;
        let w = match **base {
            PlanarSet::Circle { center, radius } => center + Complex64::from_polar(radius, theta),
            PlanarSet::Interval { a, b } => {
                Complex64::new(0.5 * (a + b) + 0.5 * (b - a) * theta.cos(), 0.0)
            }
            PlanarSet::RationalPreimage { .. } => unreachable!("validated at construction"),
        };
        points.extend(map.preimages(w)?);
    }
    let weight = 1.0 / points.len() as f64;
    let weights = vec![weight; points.len()];
    DiscreteMeasure1D::new(points, weights)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::planar::pullback_green;
    use crate::quadrature::integrate_tanh_sinh_gaps;

    #[test]
    fn densities_normalize() {
        let k = PlanarSet::interval(0.5, 3.0).unwrap();
        let (a, b) = (0.5, 3.0);
        for which in [Pole::Zero, Pole::Inf] {
            let mass = integrate_tanh_sinh_gaps(
                |t, da, db| {
                    let base = 1.0 / (PI * (da * db).sqrt());
                    match which {
                        Pole::Inf => base,
                        Pole::Zero => (a * b).sqrt() / t * base,
                    }
                },
                a,
                b,
                7,
            );
            assert!((mass - 1.0).abs() < 1e-10, "{mass}");
        }
        assert!(nu_density(&k, Pole::Inf, 3.0).is_err());
        let z = PlanarSet::interval(-1.0, 1.0).unwrap();
        assert_eq!(nu_density(&z, Pole::Zero, 0.5), Err(Error::ZeroInSet));
    }

    #[test]
    fn samples_lie_on_preimage() {
        let s = r#"{"type":"preimage","numerator":[-1,1,1],"pole_order":1,"base":{"type":"circle","center":[0,0],"radius":1}}"#;
        let k = PlanarSet::from_json(s).unwrap();
        let PlanarSet::RationalPreimage { map, base } = &k else { unreachable!() };
        let nu = sample_nu_k(&k, &ProbVector2 { s1: 0.5, s2: 0.5 }, 200, 3).unwrap();
        assert_eq!(nu.len(), 400);
        assert!((nu.total_mass() - 1.0).abs() < 1e-12);
        for &z in &nu.points {
            assert!(pullback_green(map, base, z).unwrap() < 1e-8);
        }
        assert!(sample_nu_k(&k, &ProbVector2 { s1: 0.2, s2: 0.8 }, 10, 3).is_err());
    }
}
