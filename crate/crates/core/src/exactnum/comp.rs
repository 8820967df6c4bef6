//! The four real composition algebras R, C, H, O used as matrix entries.
//!
//! Elements live over the ordered unit basis `(1, i, j, k, l, il, jl, kl)`.
//! The multiplication table is produced by Cayley–Dickson doubling starting
//! from R, which pins every sign once; the frozen table is kept under test
//! against a golden file.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::OnceLock;

use num::Zero;
use serde::{Deserialize, Serialize};

use super::scalar::{Rat, Scalar};

/// Division-algebra tag; the value constrains which basis slots may be used.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash, Serialize, Deserialize)]
pub enum Division {
    R,
    C,
    H,
    O,
}

impl Division {
    pub fn unit_count(self) -> usize {
        match self {
            Division::R => 1,
            Division::C => 2,
            Division::H => 4,
            Division::O => 8,
        }
    }

    pub fn join(self, other: Division) -> Division {
        self.max(other)
    }
}

pub const UNIT_NAMES: [&str; 8] = ["1", "i", "j", "k", "l", "il", "jl", "kl"];

/// `(index, sign)` of the product of two basis units.
pub type UnitProduct = (usize, i8);

/// Multiplication table over the 8 octonion units; smaller algebras embed.
pub fn octonion_table() -> &'static [[UnitProduct; 8]; 8] {
    static TABLE: OnceLock<[[UnitProduct; 8]; 8]> = OnceLock::new();
    TABLE.get_or_init(|| {
        // R: 1×1 table.
        let mut t: Vec<Vec<UnitProduct>> = vec![vec![(0, 1)]];
        for _ in 0..3 {
            t = double_table(&t);
        }
        let mut out = [[(0usize, 0i8); 8]; 8];
        for (r, row) in t.iter().enumerate() {
            for (c, &p) in row.iter().enumerate() {
                out[r][c] = p;
            }
        }
        out
    })
}

/// Cayley–Dickson doubling on unit tables:
/// `(a,b)(c,d) = (ac − d̄b, da + bc̄)`.
fn double_table(table: &[Vec<UnitProduct>]) -> Vec<Vec<UnitProduct>> {
    let n = table.len();
    let conj = |i: usize| -> i8 {
        if i == 0 {
            1
        } else {
            -1
        }
    };
    let mut out = vec![vec![(0usize, 0i8); 2 * n]; 2 * n];
    for x in 0..2 * n {
        for y in 0..2 * n {
            let (a, bhi) = (x % n, x / n);
            let (c, dhi) = (y % n, y / n);
            let (idx, sign) = match (bhi, dhi) {
                // (a,0)(c,0) = (ac, 0)
                (0, 0) => table[a][c],
                // (a,0)(0,d) = (0, da)
                (0, 1) => {
                    let (i, s) = table[c][a];
                    (i + n, s)
                }
                // (0,b)(c,0) = (0, b c̄)
                (1, 0) => {
                    let (i, s) = table[a][c];
                    (i + n, s * conj(c))
                }
                // (0,b)(0,d) = (−d̄ b, 0)
                (1, 1) => {
                    let (i, s) = table[c][a];
                    (i, -s * conj(c))
                }
                _ => unreachable!(),
            };
            out[x][y] = (idx, sign);
        }
    }
    out
}

/// An element of a tagged composition algebra with exact rational coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CompElement {
    pub tag: Division,
    pub coeffs: [Rat; 8],
}

impl CompElement {
    pub fn zero(tag: Division) -> Self {
        CompElement {
            tag,
            coeffs: Default::default(),
        }
    }

    pub fn one(tag: Division) -> Self {
        let mut c = CompElement::zero(tag);
        c.coeffs[0] = Rat::one();
        c
    }

    /// The basis unit at `slot` (0 = 1, 1 = i, …, 7 = kl).
    pub fn unit(tag: Division, slot: usize) -> Self {
        assert!(slot < tag.unit_count(), "slot outside tag");
        let mut c = CompElement::zero(tag);
        c.coeffs[slot] = Rat::one();
        c
    }

    pub fn from_rat(tag: Division, r: Rat) -> Self {
        let mut c = CompElement::zero(tag);
        c.coeffs[0] = r;
        c
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Conjugation negates every non-unit slot.
    pub fn conj(&self) -> Self {
        let mut out = self.clone();
        for slot in 1..8 {
            out.coeffs[slot] = -out.coeffs[slot].clone();
        }
        out
    }

    pub fn real_part(&self) -> Rat {
        self.coeffs[0].clone()
    }

    /// `N(x) = x·conj(x)`, a nonnegative rational.
    pub fn norm(&self) -> Rat {
        self.coeffs.iter().map(|c| c * c).sum()
    }

    fn check_tag(&self) {
        for slot in self.tag.unit_count()..8 {
            debug_assert!(self.coeffs[slot].is_zero(), "coefficient outside tag");
        }
    }
}

use num::One;

impl Add for &CompElement {
    type Output = CompElement;
    fn add(self, other: &CompElement) -> CompElement {
        let mut out = CompElement::zero(self.tag.join(other.tag));
        for s in 0..8 {
            out.coeffs[s] = &self.coeffs[s] + &other.coeffs[s];
        }
        out
    }
}

impl Sub for &CompElement {
    type Output = CompElement;
    fn sub(self, other: &CompElement) -> CompElement {
        self + &(-other)
    }
}

impl Neg for &CompElement {
    type Output = CompElement;
    fn neg(self) -> CompElement {
        let mut out = self.clone();
        for s in 0..8 {
            out.coeffs[s] = -out.coeffs[s].clone();
        }
        out
    }
}

impl Mul for &CompElement {
    type Output = CompElement;
    fn mul(self, other: &CompElement) -> CompElement {
        self.check_tag();
        other.check_tag();
        let table = octonion_table();
        let mut out = CompElement::zero(self.tag.join(other.tag));
        for (s1, c1) in self.coeffs.iter().enumerate() {
            if c1.is_zero() {
                continue;
            }
            for (s2, c2) in other.coeffs.iter().enumerate() {
                if c2.is_zero() {
                    continue;
                }
                let (slot, sign) = table[s1][s2];
                let prod = c1 * c2;
                if sign > 0 {
                    out.coeffs[slot] += prod;
                } else {
                    out.coeffs[slot] -= prod;
                }
            }
        }
        out
    }
}

impl fmt::Display for CompElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (s, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{}*{}", c, UNIT_NAMES[s])?;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Entry of a Hermitian matrix over a composition algebra: 8 exact [`Scalar`]
/// coefficients over the unit basis. Radical coefficients (√2, …) appear when
/// the orthonormal-basis normalizations are multiplied out.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct CompScalar {
    pub coeffs: [Scalar; 8],
}

impl CompScalar {
    pub fn zero() -> Self {
        CompScalar::default()
    }

    pub fn unit_scaled(slot: usize, s: Scalar) -> Self {
        let mut c = CompScalar::zero();
        c.coeffs[slot] = s;
        c
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn conj(&self) -> Self {
        let mut out = self.clone();
        for slot in 1..8 {
            out.coeffs[slot] = -&out.coeffs[slot];
        }
        out
    }

    pub fn add(&self, other: &CompScalar) -> CompScalar {
        let mut out = CompScalar::zero();
        for s in 0..8 {
            out.coeffs[s] = &self.coeffs[s] + &other.coeffs[s];
        }
        out
    }

    pub fn mul(&self, other: &CompScalar) -> CompScalar {
        let table = octonion_table();
        let mut out = CompScalar::zero();
        for (s1, c1) in self.coeffs.iter().enumerate() {
            if c1.is_zero() {
                continue;
            }
            for (s2, c2) in other.coeffs.iter().enumerate() {
                if c2.is_zero() {
                    continue;
                }
                let (slot, sign) = table[s1][s2];
                let prod = c1 * c2;
                if sign > 0 {
                    out.coeffs[slot] += &prod;
                } else {
                    out.coeffs[slot] -= &prod;
                }
            }
        }
        out
    }

    pub fn scale(&self, s: &Scalar) -> CompScalar {
        let mut out = self.clone();
        for slot in 0..8 {
            out.coeffs[slot] = &out.coeffs[slot] * s;
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::scalar::rat;

    fn u(tag: Division, s: usize) -> CompElement {
        CompElement::unit(tag, s)
    }

    #[test]
    fn quaternion_units() {
        let i = u(Division::H, 1);
        let j = u(Division::H, 2);
        let k = u(Division::H, 3);
        assert_eq!(&i * &j, k);
        assert_eq!(&j * &i, -&k);
        assert_eq!(&i * &i, -&CompElement::one(Division::H));
    }

    #[test]
    fn octonion_units() {
        let l = u(Division::O, 4);
        assert_eq!(&l * &l, -&CompElement::one(Division::O));
        let i = u(Division::O, 1);
        assert_eq!(&i * &l, u(Division::O, 5)); // il
        assert_eq!(u(Division::O, 1).conj(), -&u(Division::O, 1));
    }

    #[test]
    fn associativity_fails_on_octonion_witness() {
        let i = u(Division::O, 1);
        let j = u(Division::O, 2);
        let l = u(Division::O, 4);
        let left = &(&i * &j) * &l;
        let right = &i * &(&j * &l);
        assert_ne!(left, right);
    }

    #[test]
    fn norm_is_multiplicative_on_units() {
        for tag in [Division::R, Division::C, Division::H, Division::O] {
            let mut x = CompElement::zero(tag);
            for s in 0..tag.unit_count() {
                x.coeffs[s] = rat(s as i64 + 1);
            }
            let mut y = CompElement::zero(tag);
            for s in 0..tag.unit_count() {
                y.coeffs[s] = rat(2 - s as i64);
            }
            let xy = &x * &y;
            assert_eq!(xy.norm(), x.norm() * y.norm());
        }
    }
}
