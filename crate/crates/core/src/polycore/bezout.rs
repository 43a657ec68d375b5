use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Extended Euclid: `(g, x, y)` with `g = gcd(a1, a2) > 0` and
/// `a1 x + a2 y = g`.
pub fn bezout(a1: &BigInt, a2: &BigInt) -> Result<(BigInt, BigInt, BigInt)> {
    if a1.is_zero() && a2.is_zero() {
        return Err(Error::BothZero);
    }
    let (mut old_r, mut r) = (a1.clone(), a2.clone());
    let (mut old_s, mut s) = (BigInt::one(), BigInt::zero());
    let (mut old_t, mut t) = (BigInt::zero(), BigInt::one());
    while !r.is_zero() {
        let q = old_r.div_floor(&r);
        let next_r = &old_r - &q * &r;
        old_r = std::mem::replace(&mut r, next_r);
        let next_s = &old_s - &q * &s;
        old_s = std::mem::replace(&mut s, next_s);
        let next_t = &old_t - &q * &t;
        old_t = std::mem::replace(&mut t, next_t);
    }
    if old_r.is_negative() {
        Ok((-old_r, -old_s, -old_t))
    } else {
        Ok((old_r, old_s, old_t))
    }
}

/// 2x2 integer matrix acting on column vectors, `[[a, b], [c, d]]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix2(pub [[BigInt; 2]; 2]);

impl IntMatrix2 {
    pub fn det(&self) -> BigInt {
        let m = &self.0;
        &m[0][0] * &m[1][1] - &m[0][1] * &m[1][0]
    }

    pub fn apply(&self, v: (&BigInt, &BigInt)) -> (BigInt, BigInt) {
        let m = &self.0;
        (
            &m[0][0] * v.0 + &m[0][1] * v.1,
            &m[1][0] * v.0 + &m[1][1] * v.1,
        )
    }
}

/// The unimodular `Phi(z1, z2) = (-a2 z1 + a1 z2, -x z1 - y z2)` built from
/// a Bezout pair `a1 x + a2 y = 1`; it sends `(-a1, -a2)` to `(0, 1)`.
pub fn unimodular_shift(a1: &BigInt, a2: &BigInt) -> Result<IntMatrix2> {
    let (g, x, y) = bezout(a1, a2)?;
    if !g.is_one() {
        return Err(Error::NotCoprime(g));
    }
    Ok(IntMatrix2([[-a2.clone(), a1.clone()], [-x, -y]]))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn bezout_examples() {
        assert_eq!(bezout(&b(3), &b(5)).unwrap(), (b(1), b(2), b(-1)));
        assert_eq!(bezout(&b(0), &b(-7)).unwrap(), (b(7), b(0), b(-1)));
        assert_eq!(bezout(&b(6), &b(4)).unwrap(), (b(2), b(1), b(-1)));
        assert_eq!(bezout(&b(0), &b(0)), Err(Error::BothZero));
        let (g, x, y) = bezout(&b(-12), &b(18)).unwrap();
        assert_eq!(g, b(6));
        assert_eq!(b(-12) * x + b(18) * y, g);
    }

    #[test]
    fn shift_examples() {
        let phi = unimodular_shift(&b(3), &b(5)).unwrap();
        assert_eq!(phi, IntMatrix2([[b(-5), b(3)], [b(-2), b(1)]]));
        assert_eq!(phi.apply((&b(-3), &b(-5))), (b(0), b(1)));
        let id = unimodular_shift(&b(0), &b(-1)).unwrap();
        assert_eq!(id.apply((&b(0), &b(1))), (b(0), b(1)));
        assert_eq!(id.det().abs(), b(1));
        assert_eq!(unimodular_shift(&b(4), &b(6)), Err(Error::NotCoprime(b(2))));
    }
}
