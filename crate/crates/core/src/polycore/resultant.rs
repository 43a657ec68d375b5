//! Exact resultants and discriminants over the integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::IntPoly;
use crate::error::{Error, Result};

/// Formal degree up to which the Sylvester determinant is used; larger
/// inputs go through the subresultant remainder sequence.
pub const BAREISS_MAX_DEGREE: usize = 64;

/// `res_{d,d}(p, q)`: the resultant of `p` and `q` regarded as polynomials
/// of formal degree `d` (missing leading coefficients are zero).
///
/// With `deg p = d` and roots `x_i`, `y_j` this equals
/// `lead(p)^d lead(q)^d prod (x_i - y_j)`.
pub fn resultant_dd(p: &IntPoly, q: &IntPoly, d: usize) -> Result<BigInt> {
    let (Some(dp), Some(dq)) = (p.degree(), q.degree()) else {
        return Err(Error::ZeroPolynomial);
    };
    if d == 0 {
        return Err(Error::DegreeTooSmall { min: 1, got: 0 });
    }
    if dp.max(dq) > d {
        return Err(Error::DegreeExceedsBound {
            degree: dp.max(dq),
            bound: d,
        });
    }
    if d <= BAREISS_MAX_DEGREE {
        return Ok(sylvester_resultant(p, d, q, d));
    }
    Ok(padded_from_exact(p, q, d))
}

/// Resultant of `p` and `q` at their exact degrees.
pub fn resultant(p: &IntPoly, q: &IntPoly) -> Result<BigInt> {
    let (Some(dp), Some(dq)) = (p.degree(), q.degree()) else {
        return Err(Error::ZeroPolynomial);
    };
    if dp.max(dq) <= BAREISS_MAX_DEGREE {
        Ok(sylvester_resultant(p, dp, q, dq))
    } else {
        Ok(subresultant_prs(p, q))
    }
}

/// `res_{d,d}` recovered from an exact-degree resultant by accounting for
/// the padding with the Poisson product formula.
fn padded_from_exact(p: &IntPoly, q: &IntPoly, d: usize) -> BigInt {
    let dp = p.degree().unwrap();
    let dq = q.degree().unwrap();
    if dp == d {
        p.lead().unwrap().pow((d - dq) as u32) * subresultant_prs(p, q)
    } else if dq == d {
        // res_{d,d}(p, q) = (-1)^{d d} res_{d,d}(q, p)
        let r = q.lead().unwrap().pow((d - dp) as u32) * subresultant_prs(q, p);
        if d % 2 == 1 {
            -r
        } else {
            r
        }
    } else {
        BigInt::zero()
    }
}

/// Determinant of the Sylvester matrix of `p` (formal degree `m`) and `q`
/// (formal degree `n`), rows in descending coefficient order.
pub fn sylvester_resultant(p: &IntPoly, m: usize, q: &IntPoly, n: usize) -> BigInt {
    let size = m + n;
    if size == 0 {
        return BigInt::one();
    }
    let mut rows = vec![vec![BigInt::zero(); size]; size];
    for (r, row) in rows.iter_mut().enumerate().take(n) {
        for k in 0..=m {
            row[r + k] = p.coeff(m - k);
        }
    }
    for r in 0..m {
        for k in 0..=n {
            rows[n + r][r + k] = q.coeff(n - k);
        }
    }
    bareiss_determinant(rows)
}

/// Fraction-free Gaussian elimination.
pub fn bareiss_determinant(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    negate = !negate;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

fn content(p: &IntPoly) -> BigInt {
    p.coeffs()
        .iter()
        .fold(BigInt::zero(), |g, c| g.gcd(c))
}

fn exact_div(p: &IntPoly, c: &BigInt) -> IntPoly {
    IntPoly::new(p.coeffs().iter().map(|a| a / c).collect())
}

/// Pseudo-remainder: `lead(b)^(deg a - deg b + 1) a = b q + r`.
fn pseudo_remainder(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let db = b.degree().unwrap();
    let lb = b.lead().unwrap().clone();
    let mut r = a.clone();
    let mut steps = a.degree().unwrap() + 1 - db;
    while let Some(dr) = r.degree() {
        if dr < db {
            break;
        }
        let lr = r.lead().unwrap().clone();
        r = &r.scale(&lb) - &b.scale(&lr).shift(dr - db);
        steps -= 1;
    }
    if steps > 0 {
        r = r.scale(&lb.pow(steps as u32));
    }
    r
}

/// Collins–Brown subresultant remainder sequence for the exact-degree
/// resultant.
pub fn subresultant_prs(a: &IntPoly, b: &IntPoly) -> BigInt {
    let (Some(da), Some(db)) = (a.degree(), b.degree()) else {
        return BigInt::zero();
    };
    if db == 0 {
        return b.coeff(0).pow(da as u32);
    }
    if da == 0 {
        return a.coeff(0).pow(db as u32);
    }
    let ca = content(a);
    let cb = content(b);
    let mut a = exact_div(a, &ca);
    let mut b = exact_div(b, &cb);
    let t = ca.pow(db as u32) * cb.pow(da as u32);
    let mut sign = BigInt::one();
    if da < db {
        std::mem::swap(&mut a, &mut b);
        if da % 2 == 1 && db % 2 == 1 {
            sign = -sign;
        }
    }
    let mut g = BigInt::one();
    let mut h = BigInt::one();
    loop {
        let deg_a = a.degree().unwrap();
        let deg_b = b.degree().unwrap();
        let delta = deg_a - deg_b;
        if deg_a % 2 == 1 && deg_b % 2 == 1 {
            sign = -sign;
        }
        let r = pseudo_remainder(&a, &b);
        if r.is_zero() {
            return BigInt::zero();
        }
        a = b;
        let divisor = &g * h.pow(delta as u32);
        b = exact_div(&r, &divisor);
        g = a.lead().unwrap().clone();
        h = if delta == 0 {
            h
        } else {
            g.pow(delta as u32) / h.pow(delta as u32 - 1)
        };
        let deg_b = b.degree().unwrap();
        if deg_b == 0 {
            let deg_a = a.degree().unwrap() as u32;
            let hh = b.lead().unwrap().pow(deg_a) / h.pow(deg_a - 1);
            return sign * t * hh;
        }
    }
}

/// `Disc(p) = (-1)^{d(d-1)/2} res(p, p') / lead(p)`.
pub fn discriminant(p: &IntPoly) -> Result<BigInt> {
    let d = p.degree().ok_or(Error::ZeroPolynomial)?;
    if d == 0 {
        return Err(Error::DegreeTooSmall { min: 1, got: 0 });
    }
    let r = resultant(p, &p.derivative())?;
    let disc = r / p.lead().unwrap();
    Ok(if (d * (d - 1) / 2) % 2 == 1 { -disc } else { disc })
}

/// Discriminant of the binary form `z2^d p(z1/z2)` of degree `d`.
///
/// Agrees with [`discriminant`] when `deg p = d`; a single root at infinity
/// contributes the factor `lead(p)^2`, two or more force zero.
pub fn discriminant_formal(p: &IntPoly, d: usize) -> Result<BigInt> {
    let dp = p.degree().ok_or(Error::ZeroPolynomial)?;
    if dp > d {
        return Err(Error::DegreeExceedsBound { degree: dp, bound: d });
    }
    match d - dp {
        0 => discriminant(p),
        1 if dp == 0 => Ok(BigInt::one()),
        1 => Ok(p.lead().unwrap().pow(2) * discriminant(p)?),
        _ => Ok(BigInt::zero()),
    }
}

/// Natural logarithm of `|x|`, valid far outside the `f64` range.
pub fn ln_abs(x: &BigInt) -> f64 {
    use num_traits::ToPrimitive;
    if x.is_zero() {
        return f64::NEG_INFINITY;
    }
    let x = x.abs();
    let bits = x.bits();
    if bits <= 1000 {
        return x.to_f64().unwrap().ln();
    }
    let shift = bits - 64;
    let top: BigInt = &x >> shift;
    top.to_f64().unwrap().ln() + shift as f64 * std::f64::consts::LN_2
}
