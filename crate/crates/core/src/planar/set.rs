use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Signed, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::polycore::{roots, ComplexPoly, IntPoly};

/// `r(z) = N(z) / z^j` with `N` monic of degree `n`, `N(0) = +-1` and
/// `1 <= j < n`.
#[derive(Clone, Debug, PartialEq)]
pub struct MonicRationalMap {
    numerator: IntPoly,
    pole_order: usize,
    complex: Vec<Complex64>,
}

impl MonicRationalMap {
    pub fn new(numerator: IntPoly, pole_order: usize) -> Result<Self> {
        let n = numerator.degree().ok_or(Error::ZeroPolynomial)?;
        if !numerator.is_monic() {
            return Err(Error::Domain("numerator must be monic".into()));
        }
        if !numerator.constant_term().abs().is_one() {
            return Err(Error::Domain("numerator(0) must be +1 or -1".into()));
        }
        if pole_order < 1 || pole_order >= n {
            return Err(Error::Domain(format!(
                "pole order {pole_order} must satisfy 1 <= j < {n}"
            )));
        }
        let complex = numerator
            .coeffs()
            .iter()
            .map(|c| {
                c.to_f64()
                    .filter(|v| v.is_finite())
                    .map(|v| Complex64::new(v, 0.0))
                    .ok_or_else(|| Error::IllConditioned("numerator coefficient overflows f64".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(MonicRationalMap {
            numerator,
            pole_order,
            complex,
        })
    }

    pub fn numerator(&self) -> &IntPoly {
        &self.numerator
    }

    /// `n`, the degree of the numerator.
    pub fn degree(&self) -> usize {
        self.numerator.degree().unwrap()
    }

    /// `j`, the order of the pole at 0.
    pub fn pole_order(&self) -> usize {
        self.pole_order
    }

    /// `N(0)`, either 1 or -1.
    pub fn numerator_at_zero(&self) -> BigInt {
        self.numerator.constant_term()
    }

    pub fn eval_numerator(&self, z: Complex64) -> Complex64 {
        self.complex
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c)
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.eval_numerator(z) / z.powu(self.pole_order as u32)
    }

    /// All `n` solutions of `r(z) = w`, that is the roots of `N(z) - w z^j`.
    pub fn preimages(&self, w: Complex64) -> Result<Vec<Complex64>> {
        let mut c = self.complex.clone();
        c[self.pole_order] -= w;
        roots(&ComplexPoly::new(c)?)
    }
}

/// A compact set in the plane.
///
/// `Circle` denotes the circle itself (not the closed disk); its Green's
/// function with pole at infinity is `log+(|z - c| / R)`.
#[derive(Clone, Debug, PartialEq)]
pub enum PlanarSet {
    Interval { a: f64, b: f64 },
    Circle { center: Complex64, radius: f64 },
    RationalPreimage { map: MonicRationalMap, base: Box<PlanarSet> },
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase", deny_unknown_fields)]
enum Descriptor {
    Interval {
        a: f64,
        b: f64,
    },
    Circle {
        center: [f64; 2],
        radius: f64,
    },
    Preimage {
        numerator: Vec<i64>,
        pole_order: usize,
        base: Box<Descriptor>,
    },
}

impl PlanarSet {
    pub fn interval(a: f64, b: f64) -> Result<Self> {
        if !(a.is_finite() && b.is_finite() && a < b) {
            return Err(Error::Domain(format!("interval needs a < b, got [{a}, {b}]")));
        }
        Ok(PlanarSet::Interval { a, b })
    }

    pub fn circle(center: Complex64, radius: f64) -> Result<Self> {
        if !(radius > 0.0 && radius.is_finite() && center.re.is_finite() && center.im.is_finite()) {
            return Err(Error::Domain(format!("circle radius must be positive, got {radius}")));
        }
        Ok(PlanarSet::Circle { center, radius })
    }

    /// `r^{-1}(base)`; the base must be an interval or circle of capacity 1.
    pub fn preimage(map: MonicRationalMap, base: PlanarSet) -> Result<Self> {
        if matches!(base, PlanarSet::RationalPreimage { .. }) {
            return Err(Error::Domain("preimage base must be an interval or a circle".into()));
        }
        let rho = base.robin_inf()?;
        if rho.abs() > 1e-12 {
            return Err(Error::Domain(format!(
                "preimage base must have capacity 1 (Robin constant {rho})"
            )));
        }
        Ok(PlanarSet::RationalPreimage {
            map,
            base: Box::new(base),
        })
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let d: Descriptor =
            serde_json::from_str(text).map_err(|e| Error::Parse(format!("set descriptor: {e}")))?;
        Self::from_descriptor(d)
    }

    fn from_descriptor(d: Descriptor) -> Result<Self> {
        match d {
            Descriptor::Interval { a, b } => Self::interval(a, b),
            Descriptor::Circle { center, radius } => {
                Self::circle(Complex64::new(center[0], center[1]), radius)
            }
            Descriptor::Preimage {
                numerator,
                pole_order,
                base,
            } => {
                let map = MonicRationalMap::new(IntPoly::from_i64(&numerator), pole_order)?;
                Self::preimage(map, Self::from_descriptor(*base)?)
            }
        }
    }

    fn descriptor(&self) -> Descriptor {
        match self {
            PlanarSet::Interval { a, b } => Descriptor::Interval { a: *a, b: *b },
            PlanarSet::Circle { center, radius } => Descriptor::Circle {
                center: [center.re, center.im],
                radius: *radius,
            },
            PlanarSet::RationalPreimage { map, base } => Descriptor::Preimage {
                numerator: map
                    .numerator()
                    .coeffs()
                    .iter()
                    .map(|c| c.to_i64().unwrap_or(i64::MAX))
                    .collect(),
                pole_order: map.pole_order(),
                base: Box::new(base.descriptor()),
            },
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.descriptor()).expect("descriptor serializes")
    }

    /// True when 0 lies on the set (for preimages, when it is a pole).
    pub fn contains_zero(&self) -> bool {
        match self {
            PlanarSet::Interval { a, b } => *a <= 0.0 && 0.0 <= *b,
            PlanarSet::Circle { center, radius } => center.norm() == *radius,
            PlanarSet::RationalPreimage { .. } => false,
        }
    }

    /// The image `1/K` under `z -> 1/z`.
    pub fn invert(&self) -> Result<PlanarSet> {
        if self.contains_zero() {
            return Err(Error::ZeroInSet);
        }
        match self {
            PlanarSet::Interval { a, b } => Self::interval(1.0 / b, 1.0 / a),
            PlanarSet::Circle { center, radius } => {
                let den = center.norm_sqr() - radius * radius;
                Self::circle(center.conj() / den, radius / den.abs())
            }
            PlanarSet::RationalPreimage { .. } => Err(Error::Domain(
                "inversion of a preimage set is not supported".into(),
            )),
        }
    }

    fn preimage_unsupported(&self) -> Error {
        Error::Domain(
            "separate Green's functions of a preimage set are not available; use pullback_green"
                .into(),
        )
    }

    /// `g_K(z, infinity)`.
    pub fn green_inf(&self, z: Complex64) -> Result<f64> {
        if !(z.re.is_finite() && z.im.is_finite()) {
            return Err(Error::Domain("Green's function evaluated at infinity".into()));
        }
        match self {
            PlanarSet::Interval { a, b } => Ok(interval_green(*a, *b, z)),
            PlanarSet::Circle { center, radius } => Ok(((z - center).norm() / radius).ln().max(0.0)),
            PlanarSet::RationalPreimage { .. } => Err(self.preimage_unsupported()),
        }
    }

    /// `g_K(z, 0) = g_{1/K}(1/z, infinity)`.
    pub fn green_zero(&self, z: Complex64) -> Result<f64> {
        if z == Complex64::new(0.0, 0.0) {
            return Err(Error::Domain("Green's function with pole 0 evaluated at 0".into()));
        }
        if let PlanarSet::RationalPreimage { .. } = self {
            return Err(self.preimage_unsupported());
        }
        self.invert()?.green_inf(z.inv())
    }

    /// `lim [g_K(z, infinity) - log|z|] = -log cap(K)`.
    pub fn robin_inf(&self) -> Result<f64> {
        match self {
            PlanarSet::Interval { a, b } => Ok(-((b - a) / 4.0).ln()),
            PlanarSet::Circle { radius, .. } => Ok(-radius.ln()),
            PlanarSet::RationalPreimage { .. } => Err(self.preimage_unsupported()),
        }
    }

    /// `lim [g_K(z, 0) + log|z|]`.
    pub fn robin_zero(&self) -> Result<f64> {
        match self {
            PlanarSet::Interval { a, b } if !self.contains_zero() => {
                Ok(-((b - a) / (4.0 * a * b)).ln())
            }
            PlanarSet::RationalPreimage { .. } => Err(self.preimage_unsupported()),
            _ => self.invert()?.robin_inf(),
        }
    }
}

/// Green's function of `[a, b]` with pole at infinity: the log-modulus of
/// the exterior conformal map. The two branches of the square root give
/// reciprocal values, so the larger modulus is taken.
fn interval_green(a: f64, b: f64, z: Complex64) -> f64 {
    let u = 2.0 * z - a - b;
    let s = ((z - a) * (z - b)).sqrt();
    let len = b - a;
    let w1 = (u + 2.0 * s).norm() / len;
    let w2 = (u - 2.0 * s).norm() / len;
    w1.max(w2).ln().max(0.0)
}
