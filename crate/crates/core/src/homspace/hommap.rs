use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::polycore::{bezout, resultant_dd, unimodular_shift, IntMatrix2, IntPoly};

/// A point of `C^2`.
pub type C2 = [Complex64; 2];

/// `z1 w2 - z2 w1`.
pub fn wedge(z: &C2, w: &C2) -> Complex64 {
    z[0] * w[1] - z[1] * w[0]
}

/// Euclidean norm on `C^2`.
pub fn norm2(z: &C2) -> f64 {
    z[0].norm().hypot(z[1].norm())
}

/// `F = (F1 + a1, F2 + a2)` with `F1`, `F2` homogeneous of degree `d`.
/// Entry `i` of `h1` (resp. `h2`) is the coefficient of `z1^i z2^(d-i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomMap {
    d: usize,
    h1: Vec<BigInt>,
    h2: Vec<BigInt>,
    a1: BigInt,
    a2: BigInt,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct HomMapJson {
    d: usize,
    h1: Vec<i64>,
    h2: Vec<i64>,
    a1: i64,
    a2: i64,
}

impl HomMap {
    pub fn new(d: usize, h1: Vec<BigInt>, h2: Vec<BigInt>, a1: BigInt, a2: BigInt) -> Result<Self> {
        if d < 2 {
            return Err(Error::DegreeTooSmall { min: 2, got: d });
        }
        if h1.len() != d + 1 || h2.len() != d + 1 {
            return Err(Error::Domain(format!(
                "homogeneous parts of degree {d} need {} coefficients",
                d + 1
            )));
        }
        if h1.iter().all(Zero::is_zero) && h2.iter().all(Zero::is_zero) {
            return Err(Error::ZeroPolynomial);
        }
        Ok(HomMap { d, h1, h2, a1, a2 })
    }

    pub fn from_i64(d: usize, h1: &[i64], h2: &[i64], a1: i64, a2: i64) -> Result<Self> {
        let big = |v: &[i64]| v.iter().map(|&c| BigInt::from(c)).collect();
        Self::new(d, big(h1), big(h2), a1.into(), a2.into())
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let j: HomMapJson =
            serde_json::from_str(text).map_err(|e| Error::Parse(format!("map descriptor: {e}")))?;
        Self::from_i64(j.d, &j.h1, &j.h2, j.a1, j.a2)
    }

    pub fn to_json(&self) -> Result<String> {
        let small = |v: &[BigInt]| {
            v.iter()
                .map(|c| c.to_i64().ok_or_else(|| Error::IllConditioned("coefficient exceeds i64".into())))
                .collect::<Result<Vec<_>>>()
        };
        let j = HomMapJson {
            d: self.d,
            h1: small(&self.h1)?,
            h2: small(&self.h2)?,
            a1: small(std::slice::from_ref(&self.a1))?[0],
            a2: small(std::slice::from_ref(&self.a2))?[0],
        };
        Ok(serde_json::to_string(&j).expect("map serializes"))
    }

    pub fn degree(&self) -> usize {
        self.d
    }

    pub fn h1(&self) -> &[BigInt] {
        &self.h1
    }

    pub fn h2(&self) -> &[BigInt] {
        &self.h2
    }

    pub fn constants(&self) -> (&BigInt, &BigInt) {
        (&self.a1, &self.a2)
    }

    /// `F1(x, 1)`.
    pub fn dehom1(&self) -> IntPoly {
        IntPoly::new(self.h1.clone())
    }

    /// `F2(x, 1)`.
    pub fn dehom2(&self) -> IntPoly {
        IntPoly::new(self.h2.clone())
    }

    /// True for the shape `(F1, F2 - 1)`.
    pub fn is_canonical(&self) -> bool {
        self.a1.is_zero() && (-&self.a2).is_one()
    }

    /// `Phi o F` for a linear map `Phi`.
    pub fn compose_linear(&self, phi: &IntMatrix2) -> HomMap {
        let m = &phi.0;
        let mix = |r: usize| -> Vec<BigInt> {
            self.h1
                .iter()
                .zip(&self.h2)
                .map(|(c1, c2)| &m[r][0] * c1 + &m[r][1] * c2)
                .collect()
        };
        let (a1, a2) = phi.apply((&self.a1, &self.a2));
        HomMap {
            d: self.d,
            h1: mix(0),
            h2: mix(1),
            a1,
            a2,
        }
    }

    /// Complex shadow of the map.
    pub fn to_complex(&self) -> Result<ComplexHomMap> {
        let conv = |c: &BigInt| {
            c.to_f64()
                .filter(|v| v.is_finite())
                .map(|v| Complex64::new(v, 0.0))
                .ok_or_else(|| Error::IllConditioned("coefficient overflows f64".into()))
        };
        Ok(ComplexHomMap {
            d: self.d,
            h1: self.h1.iter().map(conv).collect::<Result<_>>()?,
            h2: self.h2.iter().map(conv).collect::<Result<_>>()?,
            a1: conv(&self.a1)?,
            a2: conv(&self.a2)?,
        })
    }

    /// Largest coefficient modulus, constants included.
    pub fn coefficient_scale(&self) -> f64 {
        self.h1
            .iter()
            .chain(&self.h2)
            .chain([&self.a1, &self.a2])
            .map(|c| c.abs().to_f64().unwrap_or(f64::INFINITY))
            .fold(0.0, f64::max)
    }
}

/// A homogeneous-plus-constant map with complex coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexHomMap {
    pub d: usize,
    pub h1: Vec<Complex64>,
    pub h2: Vec<Complex64>,
    pub a1: Complex64,
    pub a2: Complex64,
}

fn eval_form(h: &[Complex64], z: &C2) -> Complex64 {
    let mut acc = Complex64::zero();
    let mut p2 = Complex64::one();
    for &c in h.iter().rev() {
        acc = acc * z[0] + c * p2;
        p2 *= z[1];
    }
    acc
}

impl ComplexHomMap {
    /// `(F1(z), F2(z))` without constants.
    pub fn eval_forms(&self, z: &C2) -> C2 {
        [eval_form(&self.h1, z), eval_form(&self.h2, z)]
    }

    pub fn eval(&self, z: &C2) -> C2 {
        let [f1, f2] = self.eval_forms(z);
        [f1 + self.a1, f2 + self.a2]
    }
}

/// `Res(F) = res_{d,d}(F1(x,1), F2(x,1))`; zero when the parts share a factor.
pub fn res_hommap(f: &HomMap) -> BigInt {
    let (p, q) = (f.dehom1(), f.dehom2());
    if p.is_zero() || q.is_zero() {
        return BigInt::zero();
    }
    if let Some(r) = monomial_resultant(&p, &q, f.d) {
        return r;
    }
    resultant_dd(&p, &q, f.d).expect("degrees bounded by construction")
}

/// `res_{d,d}(p, c x^k)` in closed form:
/// `lead(p)^(d-k) c^d (-1)^(dk) p(0)^k` when `deg p = d`, and
/// `(-1)^d c^d p(0)^d` when `k = d`. `None` if `q` is not a monomial.
fn monomial_resultant(p: &IntPoly, q: &IntPoly, d: usize) -> Option<BigInt> {
    let k = q.degree()?;
    if q.coeffs()[..k].iter().any(|c| !c.is_zero()) {
        return None;
    }
    let c = q.lead()?;
    let dp = p.degree()?;
    let p0 = p.constant_term();
    let sign = |e: usize, v: BigInt| if e % 2 == 1 { -v } else { v };
    if dp == d {
        let v = p.lead()?.pow((d - k) as u32) * c.pow(d as u32) * p0.pow(k as u32);
        Some(sign(d * k, v))
    } else if k == d {
        Some(sign(d, c.pow(d as u32) * p0.pow(d as u32)))
    } else {
        Some(BigInt::zero())
    }
}

/// Which reduction brought the constants to `(0, -1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Reduction {
    /// Already `(0, -1)`.
    Canonical,
    /// Coprime constants moved by a unimodular linear map.
    Unimodular,
    /// Constants with gcd `g > 1`, divided out first.
    Scaled,
}

/// `F` rewritten as `(G1, G2 - 1)`: the zeros of `F` are the zeros of `map`
/// multiplied by the positive `d`-th root of `scale`.
#[derive(Clone, Debug, PartialEq)]
pub struct NormalForm {
    pub map: HomMap,
    pub scale: BigInt,
    pub branch: Reduction,
}

pub fn normal_form(f: &HomMap) -> Result<NormalForm> {
    let (g, _, _) = bezout(&f.a1, &f.a2)?;
    let mut map = f.clone();
    map.a1 = &f.a1 / &g;
    map.a2 = &f.a2 / &g;
    let mut branch = if g.is_one() {
        Reduction::Canonical
    } else {
        Reduction::Scaled
    };
    if !map.is_canonical() {
        let phi = unimodular_shift(&map.a1, &map.a2)?;
        map = map.compose_linear(&phi);
        if branch == Reduction::Canonical {
            branch = Reduction::Unimodular;
        }
    }
    debug_assert!(map.is_canonical());
    Ok(NormalForm {
        map,
        scale: g,
        branch,
    })
}

/// `(z2^d p(z1/z2), z1^m z2^(d-m) - 1)` for `d = deg p`.
pub fn lift(p: &IntPoly, m: usize) -> Result<HomMap> {
    let d = p.degree().ok_or(Error::ZeroPolynomial)?;
    if m > d {
        return Err(Error::Domain(format!("lift index m = {m} exceeds the degree {d}")));
    }
    if p.constant_term().is_zero() {
        return Err(Error::Domain("lift needs p(0) != 0".into()));
    }
    let mut h2 = vec![BigInt::zero(); d + 1];
    h2[m] = BigInt::one();
    HomMap::new(d, p.coeffs().to_vec(), h2, BigInt::zero(), -BigInt::one())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn wedge_examples() {
        let one = c(1.0, 0.0);
        let zero = c(0.0, 0.0);
        assert_eq!(wedge(&[one, zero], &[zero, one]), one);
        let z = [c(0.3, -1.0), c(2.0, 0.5)];
        assert_eq!(wedge(&z, &z), zero);
        assert_eq!(wedge(&[one, one], &[c(0.0, -1.0), c(0.0, 1.0)]), c(0.0, 2.0));
    }

    #[test]
    fn resultant_of_maps() {
        let f = HomMap::from_i64(2, &[-1, 0, 1], &[0, 1, 0], 0, -1).unwrap();
        assert_eq!(res_hommap(&f), BigInt::from(-1));
        let same = HomMap::from_i64(2, &[1, 2, 3], &[1, 2, 3], 0, -1).unwrap();
        assert!(res_hommap(&same).is_zero());
        assert_eq!(lift(&IntPoly::from_i64(&[-1, 0, 1]), 1).unwrap(), f);
        assert!(lift(&IntPoly::from_i64(&[-1, 0, 1]), 3).is_err());
        assert!(lift(&IntPoly::from_i64(&[0, 1, 1]), 1).is_err());
    }

    #[test]
    fn monomial_fast_path_matches_sylvester() {
        let polys: [&[i64]; 4] = [&[3, -2, 0, 5], &[-1, 4, 2], &[0, 0, 7], &[2, 0, 0, -3]];
        for h1 in polys {
            let p = IntPoly::from_i64(h1);
            for k in 0..=3 {
                for c in [1i64, -2] {
                    let q = IntPoly::monomial(BigInt::from(c), k);
                    let fast = monomial_resultant(&p, &q, 3).unwrap();
                    assert_eq!(fast, crate::polycore::sylvester_resultant(&p, 3, &q, 3), "{h1:?} {k} {c}");
                }
            }
        }
    }

    #[test]
    fn normal_form_branches() {
        let f = HomMap::from_i64(2, &[1, 0, 1], &[2, 1, 0], 3, 5).unwrap();
        let nf = normal_form(&f).unwrap();
        assert_eq!(nf.branch, Reduction::Unimodular);
        assert!(nf.map.is_canonical());
        let g = HomMap::from_i64(2, &[1, 0, 1], &[2, 1, 0], 4, 6).unwrap();
        let nf = normal_form(&g).unwrap();
        assert_eq!((nf.branch, nf.scale), (Reduction::Scaled, BigInt::from(2)));
        assert!(nf.map.is_canonical());
        assert!(normal_form(&HomMap::from_i64(2, &[1, 0, 1], &[2, 1, 0], 0, 0).unwrap()).is_err());
    }

    #[test]
    fn json_round_trip() {
        let s = r#"{"d":2,"h1":[-1,0,1],"h2":[0,1,0],"a1":0,"a2":-1}"#;
        let f = HomMap::from_json(s).unwrap();
        assert_eq!(HomMap::from_json(&f.to_json().unwrap()).unwrap(), f);
        assert!(HomMap::from_json(r#"{"d":1,"h1":[1,0],"h2":[0,1],"a1":0,"a2":-1}"#).is_err());
        assert!(HomMap::from_json("{").unwrap_err().is_parse());
    }

    #[test]
    fn complex_eval() {
        let f = HomMap::from_i64(2, &[-1, 0, 1], &[0, 1, 0], 0, -1).unwrap().to_complex().unwrap();
        for z in [[c(1.0, 0.0), c(1.0, 0.0)], [c(0.0, -1.0), c(0.0, 1.0)]] {
            let v = f.eval(&z);
            assert!(v[0].norm() < 1e-15 && v[1].norm() < 1e-15);
        }
    }
}
