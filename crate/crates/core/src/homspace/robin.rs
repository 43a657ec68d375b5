use num_complex::Complex64;
use num_traits::Zero;

use super::energy::EnergyTarget;
use super::hommap::{norm2, res_hommap, HomMap, C2};
use super::zeros::zeros_hommap;
use crate::error::{Error, Result};
use crate::planar::{gamma_matrix, preimage_payoffs, pullback_green, PlanarSet, ProbVector2};
use crate::polycore::ln_abs;

/// The logarithmically homogeneous function on `C^2` built from a planar set
/// `K` and a probability vector `s` with equal payoffs against `Gamma(K)`:
/// `s1 g_K(z1/z2, 0) + s2 g_K(z1/z2, inf) + s1 log|z1| + s2 log|z2|`.
#[derive(Clone, Debug, PartialEq)]
pub struct RobinFunctionK {
    set: PlanarSet,
    s: ProbVector2,
    gamma: f64,
}

impl RobinFunctionK {
    /// Uses the equalizing vector of `Gamma(K)`; for preimage sets
    /// `r^{-1}(E)` the vector `(j/n, (n-j)/n)`.
    pub fn new(set: PlanarSet) -> Result<Self> {
        match &set {
            PlanarSet::RationalPreimage { .. } => {
                let (s, row1, row2) = preimage_payoffs(&set)?;
                if (row1 - row2).abs() > 1e-8 {
                    return Err(Error::NoEqualizingVector);
                }
                Ok(RobinFunctionK { set, s, gamma: row1 })
            }
            _ => {
                let g = gamma_matrix(&set)?;
                let s = g.equalizing_vector().ok_or(Error::NoEqualizingVector)?;
                let gamma = g.value();
                Ok(RobinFunctionK { set, s, gamma })
            }
        }
    }

    /// With a caller-chosen vector, checked against the two payoff equations.
    pub fn with_vector(set: PlanarSet, s: ProbVector2) -> Result<Self> {
        let base = Self::new(set)?;
        let (row1, row2) = match &base.set {
            PlanarSet::RationalPreimage { .. } => {
                let (t, r1, r2) = preimage_payoffs(&base.set)?;
                if (t.s1 - s.s1).abs() > 1e-8 {
                    return Err(Error::Domain("vector does not equalize the payoffs".into()));
                }
                (r1, r2)
            }
            _ => gamma_matrix(&base.set)?.payoffs(&s),
        };
        if (row1 - base.gamma).abs() > 1e-8 || (row2 - base.gamma).abs() > 1e-8 {
            return Err(Error::Domain("vector does not equalize the payoffs".into()));
        }
        Ok(RobinFunctionK { s, ..base })
    }

    pub fn set(&self) -> &PlanarSet {
        &self.set
    }

    pub fn vector(&self) -> ProbVector2 {
        self.s
    }

    /// `gamma_{0,inf}(K)`.
    pub fn gamma(&self) -> f64 {
        self.gamma
    }
}

/// `f_K(z)`; `-inf` at the origin.
pub fn robin_fk(rf: &RobinFunctionK, z: &C2) -> Result<f64> {
    let [z1, z2] = *z;
    match (z1.is_zero(), z2.is_zero()) {
        (true, true) => Ok(f64::NEG_INFINITY),
        (true, false) => Ok(rf.gamma + z2.norm().ln()),
        (false, true) => Ok(rf.gamma + z1.norm().ln()),
        (false, false) => {
            let x = z1 / z2;
            let s = rf.s;
            let green = match &rf.set {
                PlanarSet::RationalPreimage { map, base } => {
                    pullback_green(map, base, x)? / map.degree() as f64
                }
                k => s.s1 * k.green_zero(x)? + s.s2 * k.green_inf(x)?,
            };
            Ok(green + s.s1 * z1.norm().ln() + s.s2 * z2.norm().ln())
        }
    }
}

/// Compact circled pseudoconvex sets with an explicit Robin function.
#[derive(Clone, Debug, PartialEq)]
pub enum CircledSet {
    Polydisk { r1: f64, r2: f64 },
    Ball { r: f64 },
    /// `{f_K <= 0}`.
    Lifted(RobinFunctionK),
}

impl CircledSet {
    /// `rho(z) = inf{-log t : t z in Sigma}`.
    pub fn robin(&self, z: &C2) -> Result<f64> {
        match self {
            CircledSet::Polydisk { r1, r2 } => {
                Ok((z[0].norm() / r1).ln().max((z[1].norm() / r2).ln()))
            }
            CircledSet::Ball { r } => Ok((norm2(z) / r).ln()),
            CircledSet::Lifted(rf) => robin_fk(rf, z),
        }
    }
}

impl From<EnergyTarget> for CircledSet {
    fn from(t: EnergyTarget) -> Self {
        match t {
            EnergyTarget::Polydisk { r1, r2 } => CircledSet::Polydisk { r1, r2 },
            EnergyTarget::Ball { r } => CircledSet::Ball { r },
        }
    }
}

/// `(log|Res F| + sum_xi rho+(xi)) / d^2` over all `d^2` zeros.
pub fn hom_height(f: &HomMap, sigma: &CircledSet) -> Result<f64> {
    let zeros = zeros_hommap(f)?;
    hom_height_with_zeros(f, sigma, &zeros)
}

/// [`hom_height`] with caller-supplied zeros.
pub fn hom_height_with_zeros(f: &HomMap, sigma: &CircledSet, zeros: &[C2]) -> Result<f64> {
    let res = res_hommap(f);
    if res.is_zero() {
        return Err(Error::ZeroResultant);
    }
    let d = f.degree();
    if zeros.len() != d * d {
        return Err(Error::Domain(format!("expected {} zeros, got {}", d * d, zeros.len())));
    }
    let mut sum = 0.0;
    for z in zeros {
        sum += sigma.robin(z)?.max(0.0);
    }
    Ok((ln_abs(&res) + sum) / (d * d) as f64)
}

/// Shorthand for a point of `C^2` from two complex numbers.
pub fn c2(z1: Complex64, z2: Complex64) -> C2 {
    [z1, z2]
}
