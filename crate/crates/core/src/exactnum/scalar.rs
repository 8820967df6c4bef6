//! Exact scalars: Gaussian rationals with adjoined square roots.
//!
//! A [`Scalar`] is a finite sum `Σ (re_m + i·im_m)·√m` over square-free
//! positive radicands `m`, with radicand 1 carrying the rational part.
//! Every operation recanonicalizes, so equality is structural.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num::{BigInt, BigRational, One, Zero};
use serde_json::{Map as JsonMap, Value};

use crate::error::{Error, Result};

/// Exact rational number used for all coefficients.
pub type Rat = BigRational;

/// Convenience constructor for small rationals.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// `n/d` as an exact rational. Panics on `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// A Gaussian-rational coefficient `re + i·im`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Gaussian {
    pub re: Rat,
    pub im: Rat,
}

impl Gaussian {
    pub fn new(re: Rat, im: Rat) -> Self {
        Gaussian { re, im }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Gaussian::new(self.re.clone(), -self.im.clone())
    }

    fn mul(&self, other: &Gaussian) -> Gaussian {
        Gaussian::new(
            &self.re * &other.re - &self.im * &other.im,
            &self.re * &other.im + &self.im * &other.re,
        )
    }

    fn inv(&self) -> Option<Gaussian> {
        let norm = &self.re * &self.re + &self.im * &self.im;
        if norm.is_zero() {
            return None;
        }
        Some(Gaussian::new(&self.re / &norm, -(&self.im / &norm)))
    }
}

/// Largest square divisor split: returns `(g, m)` with `n = g²·m`, `m` square-free.
fn extract_square(n: u64) -> (u64, u64) {
    let mut g = 1u64;
    let mut m = n;
    let mut p = 2u64;
    while p * p <= m {
        while m % (p * p) == 0 {
            m /= p * p;
            g *= p;
        }
        p += 1;
    }
    (g, m)
}

/// Exact element of the field `Q(i, √2, √3, √5, …)`.
///
/// Terms are kept sorted by radicand with no zero coefficients, so derived
/// equality and hashing agree with mathematical equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Scalar {
    terms: Vec<(u64, Gaussian)>,
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Scalar::from_rat(Rat::one())
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::from_rat(rat(n))
    }

    pub fn from_rat(r: Rat) -> Self {
        Scalar::from_gaussian(1, Gaussian::new(r, Rat::zero()))
    }

    pub fn ratio(n: i64, d: i64) -> Self {
        Scalar::from_rat(ratio(n, d))
    }

    /// The imaginary unit of the coefficient field.
    pub fn i() -> Self {
        Scalar::from_gaussian(1, Gaussian::new(Rat::zero(), Rat::one()))
    }

    /// `√n` for a positive integer `n`, with the square part extracted.
    pub fn sqrt(n: u64) -> Self {
        assert!(n > 0, "radicand must be positive");
        let (g, m) = extract_square(n);
        Scalar::from_gaussian(m, Gaussian::new(rat(g as i64), Rat::zero()))
    }

    /// A single term `c·√m`; `m` is reduced to square-free form.
    pub fn from_gaussian(m: u64, c: Gaussian) -> Self {
        assert!(m > 0, "radicand must be positive");
        if c.is_zero() {
            return Scalar::zero();
        }
        let (g, m) = extract_square(m);
        let g = Gaussian::new(rat(g as i64), Rat::zero()).mul(&c);
        Scalar {
            terms: vec![(m, g)],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self == &Scalar::one()
    }

    pub fn terms(&self) -> &[(u64, Gaussian)] {
        &self.terms
    }

    /// The rational part, if the value lies in `Q`.
    pub fn as_rat(&self) -> Option<Rat> {
        match self.terms.len() {
            0 => Some(Rat::zero()),
            1 => {
                let (m, c) = &self.terms[0];
                if *m == 1 && c.im.is_zero() {
                    Some(c.re.clone())
                } else {
                    None
                }
            }
            _ => None,
        }
    }

    pub fn is_rational(&self) -> bool {
        self.as_rat().is_some()
    }

    /// Complex conjugation of the coefficient field (fixes the radicals).
    pub fn conj(&self) -> Self {
        Scalar {
            terms: self.terms.iter().map(|(m, c)| (*m, c.conj())).collect(),
        }
    }

    fn add_term(acc: &mut BTreeMap<u64, Gaussian>, m: u64, c: Gaussian) {
        let entry = acc.entry(m).or_default();
        entry.re += c.re;
        entry.im += c.im;
    }

    fn from_map(map: BTreeMap<u64, Gaussian>) -> Self {
        Scalar {
            terms: map.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn scale(&self, r: &Rat) -> Self {
        if r.is_zero() {
            return Scalar::zero();
        }
        Scalar {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (*m, Gaussian::new(&c.re * r, &c.im * r)))
                .collect(),
        }
    }

    /// Multiplicative inverse. Fails on zero.
    ///
    /// Single radical terms invert directly; general elements solve a linear
    /// system over the finite subfield generated by the radicands present.
    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.terms.len() == 1 {
            let (m, c) = &self.terms[0];
            // 1/(c√m) = conj-style: (1/(c·m))·√m
            let ci = c.inv().expect("nonzero term");
            let ci = Gaussian::new(&ci.re / rat(*m as i64), &ci.im / rat(*m as i64));
            return Ok(Scalar::from_gaussian(*m, ci));
        }
        // Radicand group closure: all square-free products of pairs, iterated.
        let mut basis: Vec<u64> = vec![1];
        for (m, _) in &self.terms {
            if !basis.contains(m) {
                basis.push(*m);
            }
        }
        loop {
            let mut added = false;
            let snapshot = basis.clone();
            for a in &snapshot {
                for b in &snapshot {
                    let (_, m) = extract_square(a * b);
                    if !basis.contains(&m) {
                        basis.push(m);
                        added = true;
                    }
                }
            }
            if !added {
                break;
            }
        }
        basis.sort_unstable();
        let idx = |m: u64| basis.binary_search(&m).expect("closed basis");
        let k = basis.len();
        // Column s of M holds the coordinates of self·√(basis[s]).
        let mut mat = vec![vec![Gaussian::default(); k]; k];
        for (s, bs) in basis.iter().enumerate() {
            for (m, c) in &self.terms {
                let prod = m * bs;
                let (g, rad) = extract_square(prod);
                let gg = Gaussian::new(rat(g as i64), Rat::zero()).mul(c);
                let r = idx(rad);
                mat[r][s].re += gg.re;
                mat[r][s].im += gg.im;
            }
        }
        // Solve M x = e_{idx(1)} by Gaussian elimination over Q(i).
        let target = idx(1);
        let mut rhs = vec![Gaussian::default(); k];
        rhs[target] = Gaussian::new(Rat::one(), Rat::zero());
        for col in 0..k {
            let pivot_row = (col..k).find(|&r| !mat[r][col].is_zero());
            let pivot_row = match pivot_row {
                Some(r) => r,
                None => return Err(Error::DivisionByZero),
            };
            mat.swap(col, pivot_row);
            rhs.swap(col, pivot_row);
            let pinv = mat[col][col].inv().expect("pivot nonzero");
            for c2 in col..k {
                mat[col][c2] = mat[col][c2].mul(&pinv);
            }
            rhs[col] = rhs[col].mul(&pinv);
            for r in 0..k {
                if r != col && !mat[r][col].is_zero() {
                    let f = mat[r][col].clone();
                    for c2 in col..k {
                        let d = mat[col][c2].mul(&f);
                        mat[r][c2].re -= d.re;
                        mat[r][c2].im -= d.im;
                    }
                    let d = rhs[col].mul(&f);
                    rhs[r].re -= d.re;
                    rhs[r].im -= d.im;
                }
            }
        }
        let mut out = BTreeMap::new();
        for (s, c) in rhs.into_iter().enumerate() {
            if !c.is_zero() {
                Scalar::add_term(&mut out, basis[s], c);
            }
        }
        Ok(Scalar::from_map(out))
    }

    pub fn div(&self, other: &Scalar) -> Result<Scalar> {
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, mut e: u32) -> Scalar {
        let mut acc = Scalar::one();
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Exact comparison for rational-valued scalars; `None` when either side
    /// has radical or imaginary content.
    pub fn partial_cmp_rational(&self, other: &Scalar) -> Option<Ordering> {
        let a = self.as_rat()?;
        let b = other.as_rat()?;
        Some(a.cmp(&b))
    }

    /// JSON form: `{"<radicand>": [re_num, re_den, im_num, im_den], …}`
    /// with radicands as sorted string keys and integer components rendered
    /// as decimal strings so the round trip is bit-exact at any magnitude.
    pub fn to_json(&self) -> Value {
        let mut map = JsonMap::new();
        for (m, c) in &self.terms {
            let quad = vec![
                Value::String(c.re.numer().to_string()),
                Value::String(c.re.denom().to_string()),
                Value::String(c.im.numer().to_string()),
                Value::String(c.im.denom().to_string()),
            ];
            map.insert(m.to_string(), Value::Array(quad));
        }
        Value::Object(map)
    }

    pub fn from_json(v: &Value) -> Result<Scalar> {
        let obj = v
            .as_object()
            .ok_or_else(|| Error::Parse("scalar: expected object".into()))?;
        let mut acc = BTreeMap::new();
        for (k, quad) in obj {
            let m: u64 = k
                .parse()
                .map_err(|_| Error::Parse(format!("scalar: bad radicand {k}")))?;
            let arr = quad
                .as_array()
                .filter(|a| a.len() == 4)
                .ok_or_else(|| Error::Parse("scalar: expected 4-array".into()))?;
            let part = |i: usize| -> Result<BigInt> {
                arr[i]
                    .as_str()
                    .and_then(|s| s.parse().ok())
                    .ok_or_else(|| Error::Parse("scalar: bad integer".into()))
            };
            let re = Rat::new(part(0)?, part(1)?);
            let im = Rat::new(part(2)?, part(3)?);
            Scalar::add_term(&mut acc, m, Gaussian::new(re, im));
        }
        Ok(Scalar::from_map(acc))
    }

    /// Parses `p`, `p/q`, with optional `i` factor and `sqrt{n}`: used only
    /// by the CLI for `--a`-style arguments (e.g. `15/16`, `-3/2`).
    pub fn parse_rational(s: &str) -> Result<Scalar> {
        let s = s.trim();
        let r: Rat = s
            .parse()
            .map_err(|_| Error::Parse(format!("not a rational: {s}")))?;
        Ok(Scalar::from_rat(r))
    }
}

/// Rendering shared by Display and Debug: `1/2 + 3/4*i + (1+i)*sqrt2`.
fn fmt_scalar(s: &Scalar, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if s.terms.is_empty() {
        return write!(f, "0");
    }
    let mut first = true;
    for (m, c) in &s.terms {
        if !first {
            write!(f, " + ")?;
        }
        first = false;
        let coeff = match (c.re.is_zero(), c.im.is_zero()) {
            (false, true) => format!("{}", c.re),
            (true, false) => format!("{}*i", c.im),
            _ => format!("({}+{}*i)", c.re, c.im),
        };
        if *m == 1 {
            write!(f, "{coeff}")?;
        } else {
            write!(f, "{coeff}*sqrt{m}")?;
        }
    }
    Ok(())
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_scalar(self, f)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_scalar(self, f)
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, other: &Scalar) -> Scalar {
        let mut acc = BTreeMap::new();
        for (m, c) in self.terms.iter().chain(other.terms.iter()) {
            Scalar::add_term(&mut acc, *m, c.clone());
        }
        Scalar::from_map(acc)
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, other: &Scalar) -> Scalar {
        self + &(-other)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (*m, Gaussian::new(-c.re.clone(), -c.im.clone())))
                .collect(),
        }
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, other: &Scalar) -> Scalar {
        let mut acc = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let (g, m) = extract_square(m1 * m2);
                let mut c = c1.mul(c2);
                if g != 1 {
                    let gr = rat(g as i64);
                    c = Gaussian::new(&c.re * &gr, &c.im * &gr);
                }
                Scalar::add_term(&mut acc, m, c);
            }
        }
        Scalar::from_map(acc)
    }
}

macro_rules! forward_owned {
    ($trait:ident, $method:ident) => {
        impl $trait for Scalar {
            type Output = Scalar;
            fn $method(self, other: Scalar) -> Scalar {
                (&self).$method(&other)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, other: &Scalar) {
        *self = &*self + other;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, other: &Scalar) {
        *self = &*self - other;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, other: &Scalar) {
        *self = &*self * other;
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl From<Rat> for Scalar {
    fn from(r: Rat) -> Self {
        Scalar::from_rat(r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sq(n: u64) -> Scalar {
        Scalar::sqrt(n)
    }

    #[test]
    fn radical_products_stay_square_free() {
        assert_eq!(&sq(2) * &sq(2), Scalar::from_int(2));
        assert_eq!(&sq(2) * &sq(3), sq(6));
        assert_eq!(&sq(6) * &sq(10), &Scalar::from_int(2) * &sq(15));
        assert_eq!(sq(12), &Scalar::from_int(2) * &sq(3));
    }

    #[test]
    fn gaussian_norm() {
        let one_plus_i = &Scalar::one() + &Scalar::i();
        let one_minus_i = &Scalar::one() - &Scalar::i();
        assert_eq!(&one_plus_i * &one_minus_i, Scalar::from_int(2));
    }

    #[test]
    fn inverses() {
        // inv(√2) = √2/2
        assert_eq!(sq(2).inv().unwrap(), sq(2).scale(&ratio(1, 2)));
        // inv(i) = -i
        assert_eq!(Scalar::i().inv().unwrap(), -Scalar::i());
        // Hand oracle: (1+√2)(−1+√2) = 2−1 = 1, so inv(1+√2) = −1+√2.
        let a = &Scalar::one() + &sq(2);
        let b = &(-Scalar::one()) + &sq(2);
        assert_eq!(&a * &b, Scalar::one());
        assert_eq!(a.inv().unwrap(), b);
        assert!(Scalar::zero().inv().is_err());
    }

    #[test]
    fn multi_radical_inverse() {
        let x = &(&Scalar::one() + &sq(2)) + &(&sq(3) + &Scalar::i());
        let xi = x.inv().unwrap();
        assert_eq!(&x * &xi, Scalar::one());
    }

    #[test]
    fn json_round_trip() {
        let x = &(&Scalar::ratio(-3, 7) + &sq(2).scale(&ratio(1, 2)))
            + &Scalar::i().scale(&ratio(22, 3));
        let j = x.to_json();
        assert_eq!(Scalar::from_json(&j).unwrap(), x);
    }
}
