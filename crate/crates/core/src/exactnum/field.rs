//! Exact scalars over a prime field F_p or the rationals.
//!
//! Every arithmetic operation goes through a [`Field`] context so that a
//! single `Scalar` value type serves both fields. Prime-field values are
//! stored reduced into `[0, p)`; rationals are kept in lowest terms with a
//! positive denominator (guaranteed by `BigRational`).

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;

use crate::error::{Error, Result};

/// The active coefficient field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Field {
    /// Prime field F_p for a prime `p`.
    Prime(u64),
    /// The rational numbers.
    Rational,
}

/// An element of the active field.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Scalar {
    Fp(u64),
    Q(BigRational),
}

impl Field {
    pub fn fp(p: u64) -> Field {
        assert!(is_prime(p), "modulus {p} is not prime");
        Field::Prime(p)
    }

    pub fn zero(&self) -> Scalar {
        match self {
            Field::Prime(_) => Scalar::Fp(0),
            Field::Rational => Scalar::Q(BigRational::zero()),
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            Field::Prime(_) => Scalar::Fp(1),
            Field::Rational => Scalar::Q(BigRational::one()),
        }
    }

    /// Embed a signed integer.
    pub fn from_i64(&self, v: i64) -> Scalar {
        match self {
            Field::Prime(p) => {
                let m = v.rem_euclid(*p as i64) as u64;
                Scalar::Fp(m)
            }
            Field::Rational => Scalar::Q(BigRational::from_integer(BigInt::from(v))),
        }
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (Field::Prime(p), Scalar::Fp(x), Scalar::Fp(y)) => Scalar::Fp((x + y) % p),
            (Field::Rational, Scalar::Q(x), Scalar::Q(y)) => Scalar::Q(x + y),
            _ => panic!("scalar does not belong to the active field"),
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.add(a, &self.neg(b))
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match (self, a) {
            (Field::Prime(p), Scalar::Fp(x)) => Scalar::Fp(if *x == 0 { 0 } else { p - x }),
            (Field::Rational, Scalar::Q(x)) => Scalar::Q(-x),
            _ => panic!("scalar does not belong to the active field"),
        }
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (Field::Prime(p), Scalar::Fp(x), Scalar::Fp(y)) => {
                Scalar::Fp(((*x as u128 * *y as u128) % *p as u128) as u64)
            }
            (Field::Rational, Scalar::Q(x), Scalar::Q(y)) => Scalar::Q(x * y),
            _ => panic!("scalar does not belong to the active field"),
        }
    }

    pub fn inv(&self, a: &Scalar) -> Result<Scalar> {
        if self.is_zero(a) {
            return Err(Error::Domain("division by zero".into()));
        }
        Ok(match (self, a) {
            (Field::Prime(p), Scalar::Fp(x)) => Scalar::Fp(mod_inverse(*x, *p)),
            (Field::Rational, Scalar::Q(x)) => Scalar::Q(x.recip()),
            _ => panic!("scalar does not belong to the active field"),
        })
    }

    pub fn div(&self, a: &Scalar, b: &Scalar) -> Result<Scalar> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    pub fn is_zero(&self, a: &Scalar) -> bool {
        match a {
            Scalar::Fp(x) => *x == 0,
            Scalar::Q(x) => x.is_zero(),
        }
    }

    pub fn is_one(&self, a: &Scalar) -> bool {
        match a {
            Scalar::Fp(x) => *x == 1,
            Scalar::Q(x) => x.is_one(),
        }
    }

    /// Characteristic (0 for the rationals).
    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Prime(p) => *p,
            Field::Rational => 0,
        }
    }

    /// All nonzero elements, for exhaustive small-field sweeps. Only
    /// available over small prime fields.
    pub fn nonzero_elements(&self) -> Option<Vec<Scalar>> {
        match self {
            Field::Prime(p) if *p <= 16 => Some((1..*p).map(Scalar::Fp).collect()),
            _ => None,
        }
    }

    /// All elements of a small prime field, zero first.
    pub fn elements(&self) -> Option<Vec<Scalar>> {
        match self {
            Field::Prime(p) if *p <= 16 => Some((0..*p).map(Scalar::Fp).collect()),
            _ => None,
        }
    }

    /// A pseudo-random scalar. Over Q this draws a small integer so that
    /// repeated products stay desk-sized.
    pub fn random(&self, rng: &mut impl rand::Rng) -> Scalar {
        match self {
            Field::Prime(p) => Scalar::Fp(rng.gen_range(0..*p)),
            Field::Rational => self.from_i64(rng.gen_range(-5..=5)),
        }
    }

    /// Parse a scalar from its serialized form: a decimal integer in `[0,p)`
    /// for prime fields, `num`, `-num` or `num/den` for the rationals.
    pub fn parse_scalar(&self, s: &str) -> Result<Scalar> {
        let s = s.trim();
        match self {
            Field::Prime(p) => {
                let v: i64 = s
                    .parse()
                    .map_err(|_| Error::Domain(format!("invalid F_{p} scalar {s:?}")))?;
                Ok(self.from_i64(v))
            }
            Field::Rational => {
                let (num, den) = match s.split_once('/') {
                    Some((n, d)) => (n, d),
                    None => (s, "1"),
                };
                let n: BigInt = num
                    .trim()
                    .parse()
                    .map_err(|_| Error::Domain(format!("invalid rational {s:?}")))?;
                let d: BigInt = den
                    .trim()
                    .parse()
                    .map_err(|_| Error::Domain(format!("invalid rational {s:?}")))?;
                if d.is_zero() {
                    return Err(Error::Domain(format!("zero denominator in {s:?}")));
                }
                Ok(Scalar::Q(BigRational::new(n, d)))
            }
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Fp(x) => write!(f, "{x}"),
            Scalar::Q(x) => {
                if x.denom().is_one() {
                    write!(f, "{}", x.numer())
                } else {
                    write!(f, "{}/{}", x.numer(), x.denom())
                }
            }
        }
    }
}

impl Scalar {
    /// Signed integer value if this scalar is an integer small enough.
    pub fn as_i64(&self) -> Option<i64> {
        match self {
            Scalar::Fp(x) => i64::try_from(*x).ok(),
            Scalar::Q(x) => {
                if x.denom().is_one() {
                    i64::try_from(x.numer().clone()).ok()
                } else {
                    None
                }
            }
        }
    }
}

pub(crate) fn mod_inverse(a: u64, p: u64) -> u64 {
    // Extended Euclid; p is prime and a != 0 mod p.
    let (mut t, mut new_t) = (0i128, 1i128);
    let (mut r, mut new_r) = (p as i128, (a % p) as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    assert_eq!(r, 1, "element not invertible");
    t.rem_euclid(p as i128) as u64
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for d in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31] {
        if n == d {
            return true;
        }
        if n.is_multiple_of(d) {
            return false;
        }
    }
    // Deterministic Miller-Rabin for 64-bit inputs.
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a % n, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = ((x as u128 * x as u128) % n as u128) as u64;
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = ((acc as u128 * base as u128) % m as u128) as u64;
        }
        base = ((base as u128 * base as u128) % m as u128) as u64;
        exp >>= 1;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_axioms_hold_exactly() {
        for field in [Field::fp(7), Field::Rational] {
            for a in -6..=6i64 {
                let x = field.from_i64(a);
                assert!(field.is_zero(&field.add(&x, &field.neg(&x))));
                if !field.is_zero(&x) {
                    assert!(field.is_one(&field.mul(&x, &field.inv(&x).unwrap())));
                }
            }
        }
    }

    #[test]
    fn rationals_stay_reduced() {
        let f = Field::Rational;
        let half = f.parse_scalar("2/4").unwrap();
        assert_eq!(half.to_string(), "1/2");
        let neg = f.parse_scalar("3/-6").unwrap();
        assert_eq!(neg.to_string(), "-1/2");
    }

    #[test]
    fn prime_check() {
        assert!(is_prime(2) && is_prime(3) && is_prime(2147483647));
        assert!(!is_prime(1) && !is_prime(2147483649));
    }

    #[test]
    fn parse_fp_scalar_reduces() {
        let f = Field::fp(5);
        assert_eq!(f.parse_scalar("-1").unwrap(), Scalar::Fp(4));
        assert_eq!(f.parse_scalar("7").unwrap(), Scalar::Fp(2));
    }
}
