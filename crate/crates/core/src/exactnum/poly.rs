//! Univariate polynomials over the active field, with exact factorization.
//!
//! Over F_p factorization runs square-free / distinct-degree / equal-degree
//! (Cantor-Zassenhaus) splitting. Over Q it extracts rational roots and
//! splits quartics via the resolvent cubic; anything of higher degree that
//! survives root stripping is reported as unsupported.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::fmt;

use super::field::{Field, Scalar};
use crate::error::{Error, Result};

/// Polynomial with ascending-degree coefficients; no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Poly {
    coeffs: Vec<Scalar>,
}

impl Poly {
    pub fn new(field: &Field, mut coeffs: Vec<Scalar>) -> Poly {
        while coeffs.last().is_some_and(|c| field.is_zero(c)) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Poly {
        Poly { coeffs: Vec::new() }
    }

    pub fn one(field: &Field) -> Poly {
        Poly {
            coeffs: vec![field.one()],
        }
    }

    pub fn x(field: &Field) -> Poly {
        Poly {
            coeffs: vec![field.zero(), field.one()],
        }
    }

    /// x - r
    pub fn linear_root(field: &Field, r: &Scalar) -> Poly {
        Poly::new(field, vec![field.neg(r), field.one()])
    }

    pub fn from_i64(field: &Field, coeffs: &[i64]) -> Poly {
        Poly::new(field, coeffs.iter().map(|&c| field.from_i64(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of the zero polynomial is reported as 0 alongside `is_zero`.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeff(&self, field: &Field, i: usize) -> Scalar {
        self.coeffs.get(i).cloned().unwrap_or_else(|| field.zero())
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&Scalar> {
        self.coeffs.last()
    }

    pub fn is_monic(&self, field: &Field) -> bool {
        self.leading().is_some_and(|c| field.is_one(c))
    }

    pub fn monic(&self, field: &Field) -> Poly {
        match self.leading() {
            None => Poly::zero(),
            Some(l) => {
                let inv = field.inv(l).expect("leading coefficient nonzero");
                Poly::new(
                    field,
                    self.coeffs.iter().map(|c| field.mul(c, &inv)).collect(),
                )
            }
        }
    }

    pub fn add(&self, field: &Field, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new(
            field,
            (0..n)
                .map(|i| field.add(&self.coeff(field, i), &other.coeff(field, i)))
                .collect(),
        )
    }

    pub fn sub(&self, field: &Field, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new(
            field,
            (0..n)
                .map(|i| field.sub(&self.coeff(field, i), &other.coeff(field, i)))
                .collect(),
        )
    }

    pub fn mul(&self, field: &Field, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if field.is_zero(a) {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                let t = field.mul(a, b);
                out[i + j] = field.add(&out[i + j], &t);
            }
        }
        Poly::new(field, out)
    }

    pub fn scale(&self, field: &Field, s: &Scalar) -> Poly {
        Poly::new(field, self.coeffs.iter().map(|c| field.mul(c, s)).collect())
    }

    /// Euclidean division: returns (quotient, remainder).
    pub fn divmod(&self, field: &Field, d: &Poly) -> (Poly, Poly) {
        assert!(!d.is_zero(), "division by the zero polynomial");
        let mut rem = self.coeffs.clone();
        let dd = d.degree();
        let lead_inv = field.inv(d.leading().unwrap()).unwrap();
        if rem.len() <= dd {
            return (Poly::zero(), Poly::new(field, rem));
        }
        let mut quot = vec![field.zero(); rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            if field.is_zero(&rem[i]) {
                continue;
            }
            let q = field.mul(&rem[i], &lead_inv);
            quot[i - dd] = q.clone();
            for (j, dc) in d.coeffs.iter().enumerate() {
                let t = field.mul(&q, dc);
                rem[i - dd + j] = field.sub(&rem[i - dd + j], &t);
            }
        }
        (Poly::new(field, quot), Poly::new(field, rem))
    }

    pub fn rem(&self, field: &Field, d: &Poly) -> Poly {
        self.divmod(field, d).1
    }

    pub fn gcd(&self, field: &Field, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(field, &b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            a.monic(field)
        }
    }

    pub fn derivative(&self, field: &Field) -> Poly {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        Poly::new(
            field,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| field.mul(c, &field.from_i64(i as i64)))
                .collect(),
        )
    }

    pub fn eval(&self, field: &Field, x: &Scalar) -> Scalar {
        let mut acc = field.zero();
        for c in self.coeffs.iter().rev() {
            acc = field.add(&field.mul(&acc, x), c);
        }
        acc
    }

    /// self^e mod m.
    pub fn pow_mod(&self, field: &Field, mut e: u64, m: &Poly) -> Poly {
        let mut base = self.rem(field, m);
        let mut acc = Poly::one(field);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(field, &base).rem(field, m);
            }
            base = base.mul(field, &base).rem(field, m);
            e >>= 1;
        }
        acc
    }

    /// Evaluate at a matrix argument.
    pub fn eval_mat(&self, field: &Field, m: &super::matrix::Mat) -> super::matrix::Mat {
        use super::matrix::Mat;
        let n = m.rows;
        let mut acc = Mat::zero(field, n, n);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(field, m);
            for i in 0..n {
                acc[(i, i)] = field.add(&acc[(i, i)], c);
            }
        }
        acc
    }

    /// For a monic linear polynomial x - c, the displayed root c.
    pub fn eigenvalue_display(&self) -> Option<String> {
        if self.degree() != 1 {
            return None;
        }
        match &self.coeffs[0] {
            // Prime-field scalars do not carry the modulus, so negation is
            // left to readers; keep the polynomial form there.
            Scalar::Fp(_) => None,
            Scalar::Q(c0) => Some({
                let root = -c0;
                if root.denom().is_one() {
                    format!("{}", root.numer())
                } else {
                    format!("{}/{}", root.numer(), root.denom())
                }
            }),
        }
    }

    /// Irreducibility test over a small prime field, by distinct-degree sieve.
    pub fn is_irreducible(&self, field: &Field) -> Result<bool> {
        if self.is_zero() || self.degree() == 0 {
            return Ok(false);
        }
        if self.degree() == 1 {
            return Ok(true);
        }
        Ok(factor(field, self)?.len() == 1 && factor(field, self)?[0].1 == 1)
    }
}

impl fmt::Display for Poly {
    /// Canonical readable form, descending degree: "x^2+2x+3", "x-1".
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            let is_zero = match c {
                Scalar::Fp(v) => *v == 0,
                Scalar::Q(v) => v.is_zero(),
            };
            if is_zero {
                continue;
            }
            let (neg, mag) = match c {
                Scalar::Fp(v) => (false, format!("{v}")),
                Scalar::Q(v) => (v.is_negative(), {
                    let a = v.abs();
                    if a.denom().is_one() {
                        format!("{}", a.numer())
                    } else {
                        format!("{}/{}", a.numer(), a.denom())
                    }
                }),
            };
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, "-")?;
            } else {
                write!(f, "+")?;
            }
            let unit_mag = mag == "1";
            match i {
                0 => write!(f, "{mag}")?,
                1 => {
                    if unit_mag {
                        write!(f, "x")?
                    } else {
                        write!(f, "{mag}x")?
                    }
                }
                _ => {
                    if unit_mag {
                        write!(f, "x^{i}")?
                    } else {
                        write!(f, "{mag}x^{i}")?
                    }
                }
            }
        }
        Ok(())
    }
}

/// Factor a nonzero polynomial into monic irreducibles with multiplicities.
/// The factors are returned sorted for deterministic output.
pub fn factor(field: &Field, f: &Poly) -> Result<Vec<(Poly, usize)>> {
    if f.is_zero() {
        return Err(Error::Domain("cannot factor the zero polynomial".into()));
    }
    let monic = f.monic(field);
    if monic.degree() == 0 {
        return Ok(Vec::new());
    }
    let mut out = match field {
        Field::Prime(_) => factor_fp(field, &monic)?,
        Field::Rational => factor_q(field, &monic)?,
    };
    out.sort();
    Ok(out)
}

// ---- prime field factorization -------------------------------------------

fn factor_fp(field: &Field, f: &Poly) -> Result<Vec<(Poly, usize)>> {
    let mut result: Vec<(Poly, usize)> = Vec::new();
    for (g, mult) in squarefree_decomposition(field, f) {
        for (h, d) in distinct_degree(field, &g) {
            for irr in equal_degree_split(field, &h, d) {
                push_factor(&mut result, irr, mult);
            }
        }
    }
    Ok(result)
}

fn push_factor(result: &mut Vec<(Poly, usize)>, f: Poly, mult: usize) {
    if let Some(entry) = result.iter_mut().find(|(g, _)| *g == f) {
        entry.1 += mult;
    } else {
        result.push((f, mult));
    }
}

/// Yun-style square-free decomposition over F_p, handling the p-th power
/// collapse f = g(x^p) = g(x)^p (Frobenius fixes prime-field coefficients).
fn squarefree_decomposition(field: &Field, f: &Poly) -> Vec<(Poly, usize)> {
    let p = field.characteristic();
    let mut out: Vec<(Poly, usize)> = Vec::new();
    let mut stack = vec![(f.monic(field), 1usize)];
    while let Some((g, mult)) = stack.pop() {
        if g.degree() == 0 {
            continue;
        }
        let dg = g.derivative(field);
        if dg.is_zero() {
            // g = h(x^p) = h(x)^p over F_p.
            let mut coeffs = Vec::new();
            for i in (0..g.coeffs().len()).step_by(p as usize) {
                coeffs.push(g.coeff(field, i));
            }
            stack.push((Poly::new(field, coeffs), mult * p as usize));
            continue;
        }
        let mut c = g.gcd(field, &dg);
        let mut w = g.divmod(field, &c).0; // square-free part contribution
        let mut i = 1;
        while w.degree() > 0 {
            let y = w.gcd(field, &c);
            let fac = w.divmod(field, &y).0;
            if fac.degree() > 0 {
                out.push((fac.monic(field), mult * i));
            }
            w = y.clone();
            c = c.divmod(field, &y).0;
            i += 1;
        }
        if c.degree() > 0 {
            stack.push((c, mult));
        }
    }
    out
}

/// Distinct-degree splitting of a square-free monic polynomial: returns
/// (product of irreducibles of degree d, d) pairs.
fn distinct_degree(field: &Field, f: &Poly) -> Vec<(Poly, usize)> {
    let p = field.characteristic();
    let mut out = Vec::new();
    let mut rest = f.monic(field);
    let x = Poly::x(field);
    let mut xq = x.clone(); // x^(p^d) mod rest, maintained incrementally
    let mut d = 0;
    while rest.degree() >= 1 {
        d += 1;
        if rest.degree() < 2 * d {
            // whatever remains is irreducible of degree = rest.degree()
            out.push((rest.clone(), rest.degree()));
            break;
        }
        xq = xq.pow_mod(field, p, &rest);
        let g = rest.gcd(field, &xq.sub(field, &x));
        if g.degree() > 0 {
            out.push((g.clone(), d));
            rest = rest.divmod(field, &g).0;
            xq = xq.rem(field, &rest);
        }
    }
    out
}

/// Cantor-Zassenhaus equal-degree splitting: factor a square-free monic
/// product of degree-d irreducibles into the irreducibles.
fn equal_degree_split(field: &Field, f: &Poly, d: usize) -> Vec<Poly> {
    if f.degree() == d {
        return vec![f.monic(field)];
    }
    let p = field.characteristic();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed ^ f.degree() as u64);
    loop {
        let deg_r = 2 * d - 1;
        let r = Poly::new(
            field,
            (0..=deg_r).map(|_| field.random(&mut rng)).collect(),
        );
        if r.degree() == 0 || r.is_zero() {
            continue;
        }
        let g0 = f.gcd(field, &r);
        if g0.degree() > 0 && g0.degree() < f.degree() {
            let rest = f.divmod(field, &g0).0;
            let mut out = equal_degree_split(field, &g0, d);
            out.extend(equal_degree_split(field, &rest, d));
            return out;
        }
        let h = if p == 2 {
            // trace map: r + r^2 + r^4 + ... + r^(2^(kd-1)) mod f
            let total_bits = d as u64 * poly_factor_count_bits(f, d);
            let mut tr = r.rem(field, f);
            let mut term = r.rem(field, f);
            for _ in 1..total_bits {
                term = term.mul(field, &term).rem(field, f);
                tr = tr.add(field, &term);
            }
            tr
        } else {
            // r^((p^d - 1)/2) - 1 mod f
            let e = (pow_u128(p, d as u32) - 1) / 2;
            let mut acc = Poly::one(field);
            let mut base = r.rem(field, f);
            let mut ee = e;
            while ee > 0 {
                if ee & 1 == 1 {
                    acc = acc.mul(field, &base).rem(field, f);
                }
                base = base.mul(field, &base).rem(field, f);
                ee >>= 1;
            }
            acc.sub(field, &Poly::one(field))
        };
        let g = f.gcd(field, &h);
        if g.degree() > 0 && g.degree() < f.degree() {
            let rest = f.divmod(field, &g).0;
            let mut out = equal_degree_split(field, &g, d);
            out.extend(equal_degree_split(field, &rest, d));
            return out;
        }
    }
}

fn poly_factor_count_bits(f: &Poly, d: usize) -> u64 {
    (f.degree() / d) as u64
}

fn pow_u128(base: u64, exp: u32) -> u128 {
    (base as u128).pow(exp)
}

// ---- rational factorization ------------------------------------------------

fn factor_q(field: &Field, f: &Poly) -> Result<Vec<(Poly, usize)>> {
    let mut result: Vec<(Poly, usize)> = Vec::new();
    // Square-free decomposition first, so powers of low-degree irreducibles
    // (band characteristic polynomials are f^l) stay in reach.
    for (g, mult) in squarefree_decomposition(field, &f.monic(field)) {
        let mut rest = g;
        loop {
            if rest.degree() == 0 {
                break;
            }
            match rational_root(field, &rest) {
                Some(r) => {
                    let lin = Poly::linear_root(field, &r);
                    rest = rest.divmod(field, &lin).0;
                    push_factor(&mut result, lin, mult);
                }
                None => break,
            }
        }
        match rest.degree() {
            0 => {}
            2 | 3 => push_factor(&mut result, rest, mult), // no roots => irreducible
            4 => {
                for q in split_quartic(field, &rest)? {
                    push_factor(&mut result, q, mult);
                }
            }
            d => {
                return Err(Error::NonSplitField(format!(
                    "degree-{d} factor {rest} has no rational roots"
                )))
            }
        }
    }
    Ok(result)
}

fn big(scalar: &Scalar) -> BigRational {
    match scalar {
        Scalar::Q(v) => v.clone(),
        Scalar::Fp(_) => unreachable!("rational factorization over F_p"),
    }
}

/// A rational root of a monic rational polynomial, if any.
/// Clears denominators and applies the rational root theorem.
fn rational_root(field: &Field, f: &Poly) -> Option<Scalar> {
    // Clear denominators: g = c*f has integer coefficients.
    let mut den_lcm = BigInt::one();
    for c in f.coeffs() {
        let d = big(c).denom().clone();
        den_lcm = num::integer::lcm(den_lcm, d);
    }
    let ints: Vec<BigInt> = f
        .coeffs()
        .iter()
        .map(|c| {
            let v = big(c) * BigRational::from_integer(den_lcm.clone());
            v.numer().clone()
        })
        .collect();
    let a0 = ints.first()?.clone();
    let an = ints.last()?.clone();
    if a0.is_zero() {
        return Some(field.from_i64(0));
    }
    let p_divs = divisors(&a0.abs());
    let q_divs = divisors(&an.abs());
    for p in &p_divs {
        for q in &q_divs {
            for sign in [1i64, -1] {
                let cand = Scalar::Q(BigRational::new(p * BigInt::from(sign), q.clone()));
                if field.is_zero(&f.eval(field, &cand)) {
                    return Some(cand);
                }
            }
        }
    }
    None
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    // Trial division; desk-scale constant terms only.
    let mut out = Vec::new();
    let mut d = BigInt::one();
    loop {
        if &(&d * &d) > n {
            break;
        }
        if (n % &d).is_zero() {
            out.push(d.clone());
            out.push(n / &d);
        }
        d += 1;
    }
    out.sort();
    out.dedup();
    out
}

/// Split a monic rational quartic with no rational roots into two monic
/// quadratics if possible, via the resolvent cubic; otherwise irreducible.
fn split_quartic(field: &Field, f: &Poly) -> Result<Vec<Poly>> {
    let a3 = big(&f.coeff(field, 3));
    let a2 = big(&f.coeff(field, 2));
    let a1 = big(&f.coeff(field, 1));
    let a0 = big(&f.coeff(field, 0));
    let four = BigRational::from_integer(BigInt::from(4));
    let shift = &a3 / &four; // x = y - a3/4 gives depressed quartic
    // Depressed quartic y^4 + p y^2 + q y + r.
    let p = &a2 - BigRational::from_integer(BigInt::from(6)) * &shift * &shift;
    let q = &a1 - BigRational::from_integer(BigInt::from(2)) * &a2 * &shift
        + BigRational::from_integer(BigInt::from(8)) * &shift * &shift * &shift;
    let r = &a0 - &a1 * &shift + &a2 * &shift * &shift
        - BigRational::from_integer(BigInt::from(3)) * &shift * &shift * &shift * &shift;

    let qs = |v: &BigRational| Scalar::Q(v.clone());
    let to_poly = |c0: &BigRational, c1: &BigRational| {
        // y^2 + c1 y + c0 expressed back in x = y - shift... handled by caller.
        Poly::new(field, vec![qs(c0), qs(c1), field.one()])
    };

    // Factorization (y^2 + s y + t)(y^2 - s y + u) requires z = s^2 to be a
    // root of z^3 + 2p z^2 + (p^2 - 4r) z - q^2.
    let resolvent = Poly::new(
        field,
        vec![
            qs(&(-(&q * &q))),
            qs(&(&p * &p - &four * &r)),
            qs(&(BigRational::from_integer(BigInt::from(2)) * &p)),
            field.one(),
        ],
    );
    let mut split_y: Option<(Poly, Poly)> = None;
    // Try all rational roots z >= 0 with rational square root s.
    let mut res = resolvent.clone();
    let mut roots = Vec::new();
    while let Some(root) = rational_root(field, &res) {
        roots.push(big(&root));
        res = res.divmod(field, &Poly::linear_root(field, &root)).0;
        if res.degree() == 0 {
            break;
        }
    }
    for z in roots {
        if z.is_negative() {
            continue;
        }
        let Some(s) = rational_sqrt(&z) else { continue };
        if s.is_zero() {
            // biquadratic: y^4 + p y^2 + r = (y^2 + t)(y^2 + u)
            // with t+u = p, t*u = r: discriminant p^2 - 4r must be a square.
            let disc = &p * &p - &four * &r;
            if disc.is_negative() {
                continue;
            }
            let Some(sd) = rational_sqrt(&disc) else {
                continue;
            };
            let two = BigRational::from_integer(BigInt::from(2));
            let t = (&p + &sd) / &two;
            let u = (&p - &sd) / &two;
            split_y = Some((
                to_poly(&t, &BigRational::zero()),
                to_poly(&u, &BigRational::zero()),
            ));
            break;
        }
        // t + u = p + s^2, u - t = q/s
        let two = BigRational::from_integer(BigInt::from(2));
        let sum = &p + &z;
        let diff = &q / &s;
        let u = (&sum + &diff) / &two;
        let t = (&sum - &diff) / &two;
        split_y = Some((to_poly(&t, &s), to_poly(&u, &(-&s))));
        break;
    }
    match split_y {
        None => Ok(vec![f.clone()]),
        Some((g, h)) => {
            // Substitute y = x + shift back into both quadratics.
            let sub = |quad: &Poly| -> Poly {
                let xplus = Poly::new(field, vec![qs(&shift), field.one()]);
                let mut acc = Poly::zero();
                for (i, c) in quad.coeffs().iter().enumerate() {
                    let mut term = Poly::new(field, vec![c.clone()]);
                    for _ in 0..i {
                        term = term.mul(field, &xplus);
                    }
                    acc = acc.add(field, &term);
                }
                acc
            };
            let (g, h) = (sub(&g), sub(&h));
            debug_assert_eq!(g.mul(field, &h), *f);
            Ok(vec![g, h])
        }
    }
}

fn rational_sqrt(v: &BigRational) -> Option<BigRational> {
    if v.is_negative() {
        return None;
    }
    let ns = v.numer().sqrt();
    let ds = v.denom().sqrt();
    if &(&ns * &ns) == v.numer() && &(&ds * &ds) == v.denom() {
        Some(BigRational::new(ns, ds))
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn expand(field: &Field, factors: &[(Poly, usize)]) -> Poly {
        let mut acc = Poly::one(field);
        for (f, m) in factors {
            for _ in 0..*m {
                acc = acc.mul(field, f);
            }
        }
        acc
    }

    #[test]
    fn difference_of_squares_over_q() {
        let f = Field::Rational;
        let p = Poly::from_i64(&f, &[-1, 0, 1]); // x^2 - 1
        let fs = factor(&f, &p).unwrap();
        assert_eq!(fs.len(), 2);
        assert!(fs.iter().all(|(_, m)| *m == 1));
        assert_eq!(expand(&f, &fs), p);
    }

    #[test]
    fn frobenius_square_over_f2() {
        let f = Field::fp(2);
        let p = Poly::from_i64(&f, &[1, 0, 1]); // x^2 + 1 = (x+1)^2
        let fs = factor(&f, &p).unwrap();
        assert_eq!(fs, vec![(Poly::from_i64(&f, &[1, 1]), 2)]);
    }

    #[test]
    fn cube_minus_x_over_f3() {
        let f = Field::fp(3);
        let p = Poly::from_i64(&f, &[0, -1, 0, 1]); // x^3 - x
        let fs = factor(&f, &p).unwrap();
        // Oracle: brute-force root enumeration over F_3 finds roots 0, 1, 2.
        let mut roots = Vec::new();
        for c in 0..3 {
            if f.is_zero(&p.eval(&f, &Scalar::Fp(c))) {
                roots.push(c);
            }
        }
        assert_eq!(roots, vec![0, 1, 2]);
        assert_eq!(fs.len(), 3);
        assert_eq!(expand(&f, &fs), p);
    }

    #[test]
    fn quartic_splits_into_quadratics() {
        let f = Field::Rational;
        // (x^2+1)(x^2+x+1) = x^4 + x^3 + 2x^2 + x + 1
        let p = Poly::from_i64(&f, &[1, 1, 2, 1, 1]);
        let fs = factor(&f, &p).unwrap();
        assert_eq!(fs.len(), 2);
        assert_eq!(expand(&f, &fs), p);
    }

    #[test]
    fn irreducible_quartic_stays_whole() {
        let f = Field::Rational;
        let p = Poly::from_i64(&f, &[2, 0, 0, 0, 1]); // x^4 + 2, Eisenstein
        let fs = factor(&f, &p).unwrap();
        assert_eq!(fs, vec![(p, 1)]);
    }

    #[test]
    fn quintic_without_roots_is_unsupported() {
        let f = Field::Rational;
        let p = Poly::from_i64(&f, &[3, 0, 0, 0, 0, 1]).mul(&f, &Poly::from_i64(&f, &[1, 1]));
        // (x^5+3)(x+1): the root strips, the quintic errors.
        assert!(matches!(factor(&f, &p), Err(Error::NonSplitField(_))));
    }

    #[test]
    fn display_formatting() {
        let f = Field::Rational;
        assert_eq!(Poly::from_i64(&f, &[-1, 1]).to_string(), "x-1");
        assert_eq!(Poly::from_i64(&f, &[1, 0, 1]).to_string(), "x^2+1");
        assert_eq!(Poly::from_i64(&f, &[0, -2]).to_string(), "-2x");
    }
}
