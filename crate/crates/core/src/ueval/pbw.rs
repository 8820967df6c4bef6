//! Normal-ordered calculus in the universal enveloping algebra of a
//! structure-constant Lie algebra equipped with a triangular split.
//!
//! Monomials are nondecreasing index sequences over the ordered basis
//! (negative root vectors, Cartan, positive root vectors); out-of-order
//! adjacent pairs `x_b x_a` rewrite to `x_a x_b + [x_b, x_a]` until normal.
//! The rewrite terminates because each step either lowers the filtration
//! degree or removes an inversion, and the result is independent of the
//! rewrite order.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::cartan::CartanBasis;
use crate::error::{Error, Result};
use crate::exactnum::{Rat, Scalar};
use crate::linalg::Matrix;
use crate::tkk::{LieAlgebra, LieElement};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PbwTag {
    Negative,
    /// Cartan generator with its weight functional.
    Cartan(Vec<Rat>),
    Positive,
}

/// A Lie algebra with an ordered PBW basis and the bracket tensor expressed
/// in that basis.
pub struct PbwAlgebra {
    pub lie: Arc<LieAlgebra>,
    pub labels: Vec<String>,
    pub tags: Vec<PbwTag>,
    /// Weight-coordinate length for highest-weight evaluation.
    pub coord_len: usize,
    to_pbw: Matrix,
    brackets: Vec<Vec<(usize, Scalar)>>,
}

impl fmt::Debug for PbwAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PbwAlgebra({}, dim={})", self.lie.name, self.tags.len())
    }
}

impl PbwAlgebra {
    /// Triangular split read off a verified Cartan basis: negative root
    /// vectors sorted by root, independent coroots in functional order,
    /// positive root vectors sorted by root. The change of basis is
    /// validated by an exact round trip.
    pub fn from_cartan(cb: &CartanBasis) -> Result<Arc<PbwAlgebra>> {
        let lie = cb.lie.clone();
        let dim = lie.dim;
        let mut order: Vec<(String, LieElement, PbwTag)> = Vec::new();

        let mut negatives: Vec<usize> = (0..cb.system.roots.len())
            .filter(|&i| !cb.system.roots[i].positive)
            .collect();
        negatives.sort_by_key(|&i| cb.system.roots[i].key());
        for i in negatives {
            order.push((
                format!("E({})", cb.system.roots[i].key()),
                cb.vectors[i].clone(),
                PbwTag::Negative,
            ));
        }
        let mut cartan: Vec<(Vec<Rat>, LieElement)> = cb.h_basis.clone();
        cartan.sort_by(|a, b| {
            a.0.iter()
                .map(|r| r.to_string())
                .collect::<Vec<_>>()
                .cmp(&b.0.iter().map(|r| r.to_string()).collect())
        });
        for (f, h) in cartan {
            order.push((
                format!(
                    "H[{}]",
                    f.iter()
                        .map(|r| r.to_string())
                        .collect::<Vec<_>>()
                        .join(",")
                ),
                h,
                PbwTag::Cartan(f),
            ));
        }
        let mut positives: Vec<usize> = (0..cb.system.roots.len())
            .filter(|&i| cb.system.roots[i].positive)
            .collect();
        positives.sort_by_key(|&i| cb.system.roots[i].key());
        for i in positives {
            order.push((
                format!("E({})", cb.system.roots[i].key()),
                cb.vectors[i].clone(),
                PbwTag::Positive,
            ));
        }

        if order.len() != dim {
            return Err(Error::DimensionMismatch(format!(
                "PBW basis has {} elements for a {}-dimensional algebra",
                order.len(),
                dim
            )));
        }

        let basis_matrix = Matrix::from_fn(dim, dim, |r, c| order[c].1.coeffs[r].clone());
        let to_pbw = basis_matrix
            .inverse()
            .ok_or_else(|| Error::Consistency("PBW basis is singular".into()))?;
        // Round-trip validation of the conversion matrix.
        if to_pbw.matmul(&basis_matrix) != Matrix::identity(dim) {
            return Err(Error::Consistency(
                "PBW conversion round trip failed".into(),
            ));
        }

        let mut brackets = vec![Vec::new(); dim * dim];
        for a in 0..dim {
            for b in 0..dim {
                if a == b {
                    continue;
                }
                let br = lie.bracket(&order[a].1, &order[b].1);
                let coords = to_pbw.apply(&br.coeffs);
                brackets[a * dim + b] = coords
                    .into_iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .collect();
            }
        }

        Ok(Arc::new(PbwAlgebra {
            lie,
            labels: order.iter().map(|(l, _, _)| l.clone()).collect(),
            tags: order.into_iter().map(|(_, _, t)| t).collect(),
            coord_len: cb.system.coord_len,
            to_pbw,
            brackets,
        }))
    }

    pub fn dim(&self) -> usize {
        self.tags.len()
    }

    pub fn bracket_row(&self, a: usize, b: usize) -> &[(usize, Scalar)] {
        &self.brackets[a * self.dim() + b]
    }

    /// Degree-one element from algebra coordinates.
    pub fn from_lie(self: &Arc<Self>, x: &LieElement) -> PbwElement {
        let coords = self.to_pbw.apply(&x.coeffs);
        let mut terms = BTreeMap::new();
        for (i, c) in coords.into_iter().enumerate() {
            if !c.is_zero() {
                terms.insert(vec![i as u16], c);
            }
        }
        PbwElement {
            alg: Arc::clone(self),
            terms,
        }
    }

    pub fn zero(self: &Arc<Self>) -> PbwElement {
        PbwElement {
            alg: Arc::clone(self),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(self: &Arc<Self>, c: Scalar) -> PbwElement {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Vec::new(), c);
        }
        PbwElement {
            alg: Arc::clone(self),
            terms,
        }
    }
}

/// Normal-ordered element of the enveloping algebra.
#[derive(Clone)]
pub struct PbwElement {
    pub alg: Arc<PbwAlgebra>,
    /// Map from nondecreasing index words to coefficients; no zeros stored.
    pub terms: BTreeMap<Vec<u16>, Scalar>,
}

impl PartialEq for PbwElement {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}
impl Eq for PbwElement {}

impl fmt::Debug for PbwElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (mono, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})")?;
            for &i in mono {
                write!(f, "·{}", self.alg.labels[i as usize])?;
            }
        }
        Ok(())
    }
}

impl PbwElement {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.terms.keys().map(|m| m.len()).max().unwrap_or(0)
    }

    pub fn add(&self, other: &PbwElement) -> PbwElement {
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            let entry = terms.entry(m.clone()).or_insert_with(Scalar::zero);
            *entry += c;
            if entry.is_zero() {
                terms.remove(m);
            }
        }
        PbwElement {
            alg: Arc::clone(&self.alg),
            terms,
        }
    }

    pub fn sub(&self, other: &PbwElement) -> PbwElement {
        self.add(&other.scale(&-Scalar::one()))
    }

    pub fn scale(&self, s: &Scalar) -> PbwElement {
        if s.is_zero() {
            return self.alg.zero();
        }
        PbwElement {
            alg: Arc::clone(&self.alg),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * s)).collect(),
        }
    }

    /// Product in the enveloping algebra, normal-ordered.
    pub fn mul(&self, other: &PbwElement) -> PbwElement {
        let mut acc: BTreeMap<Vec<u16>, Scalar> = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let mut word = Vec::with_capacity(m1.len() + m2.len());
                word.extend_from_slice(m1);
                word.extend_from_slice(m2);
                normalize_into(&self.alg, word, c1 * c2, &mut acc);
            }
        }
        acc.retain(|_, c| !c.is_zero());
        PbwElement {
            alg: Arc::clone(&self.alg),
            terms: acc,
        }
    }

    pub fn commutator(&self, other: &PbwElement) -> PbwElement {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn anticommutator(&self, other: &PbwElement) -> PbwElement {
        self.mul(other).add(&other.mul(self))
    }

    pub fn square(&self) -> PbwElement {
        self.mul(self)
    }
}

/// Rewrite a word to normal order, accumulating into `acc`. Leftmost-descent
/// strategy; the engine's confluence is covered by randomized-order tests.
fn normalize_into(
    alg: &Arc<PbwAlgebra>,
    word: Vec<u16>,
    coeff: Scalar,
    acc: &mut BTreeMap<Vec<u16>, Scalar>,
) {
    let mut stack: Vec<(Vec<u16>, Scalar)> = vec![(word, coeff)];
    while let Some((w, c)) = stack.pop() {
        match first_descent(&w) {
            None => {
                let entry = acc.entry(w).or_insert_with(Scalar::zero);
                *entry += &c;
            }
            Some(i) => {
                // w[i] > w[i+1]: swap plus bracket insertion.
                let mut swapped = w.clone();
                swapped.swap(i, i + 1);
                let (a, b) = (w[i] as usize, w[i + 1] as usize);
                for (g, s) in alg.bracket_row(a, b) {
                    let mut shorter = Vec::with_capacity(w.len() - 1);
                    shorter.extend_from_slice(&w[..i]);
                    shorter.push(*g as u16);
                    shorter.extend_from_slice(&w[i + 2..]);
                    stack.push((shorter, &c * s));
                }
                stack.push((swapped, c));
            }
        }
    }
}

fn first_descent(w: &[u16]) -> Option<usize> {
    (0..w.len().saturating_sub(1)).find(|&i| w[i] > w[i + 1])
}

/// Alternate rewrite strategy (rightmost descent) used by the confluence
/// property tests.
pub fn normalize_rightmost(
    alg: &Arc<PbwAlgebra>,
    word: Vec<u16>,
    coeff: Scalar,
) -> BTreeMap<Vec<u16>, Scalar> {
    let mut acc = BTreeMap::new();
    let mut stack: Vec<(Vec<u16>, Scalar)> = vec![(word, coeff)];
    while let Some((w, c)) = stack.pop() {
        let descent = (0..w.len().saturating_sub(1))
            .rev()
            .find(|&i| w[i] > w[i + 1]);
        match descent {
            None => {
                let entry = acc.entry(w).or_insert_with(Scalar::zero);
                *entry += &c;
            }
            Some(i) => {
                let mut swapped = w.clone();
                swapped.swap(i, i + 1);
                let (a, b) = (w[i] as usize, w[i + 1] as usize);
                for (g, s) in alg.bracket_row(a, b) {
                    let mut shorter = Vec::with_capacity(w.len() - 1);
                    shorter.extend_from_slice(&w[..i]);
                    shorter.push(*g as u16);
                    shorter.extend_from_slice(&w[i + 2..]);
                    stack.push((shorter, &c * s));
                }
                stack.push((swapped, c));
            }
        }
    }
    acc.retain(|_, c| !c.is_zero());
    acc
}

/// Normal form of an arbitrary formal word in PBW basis indices.
pub fn normal_form(alg: &Arc<PbwAlgebra>, word: &[u16]) -> PbwElement {
    let mut acc = BTreeMap::new();
    normalize_into(alg, word.to_vec(), Scalar::one(), &mut acc);
    acc.retain(|_, c| !c.is_zero());
    PbwElement {
        alg: Arc::clone(alg),
        terms: acc,
    }
}

/// Outcome of letting an element act on a highest weight vector.
pub struct HwEvalResult {
    /// Value contributed by the pure-Cartan monomials at the given weight.
    pub scalar_part: Scalar,
    /// Pure-Cartan sub-element (evaluates to `scalar_part`).
    pub cartan_part: PbwElement,
    /// Monomials containing negative factors and no positive ones; reported,
    /// never evaluated.
    pub residual: PbwElement,
    /// Monomials containing a positive factor (annihilate the vector).
    pub positive_part: PbwElement,
}

/// Split a normal-ordered element against a highest weight vector: positive
/// factors annihilate, Cartan factors act by `λ`, negatives accumulate in
/// the residual.
pub fn hw_eval(p: &PbwElement, lambda: &[Rat]) -> Result<HwEvalResult> {
    if lambda.len() != p.alg.coord_len {
        return Err(Error::DimensionMismatch(format!(
            "weight length {} vs coordinate length {}",
            lambda.len(),
            p.alg.coord_len
        )));
    }
    let mut scalar_part = Scalar::zero();
    let mut cartan = p.alg.zero();
    let mut residual = p.alg.zero();
    let mut positive = p.alg.zero();
    for (mono, coeff) in &p.terms {
        let mut has_pos = false;
        let mut has_neg = false;
        for &i in mono {
            match &p.alg.tags[i as usize] {
                PbwTag::Positive => has_pos = true,
                PbwTag::Negative => has_neg = true,
                PbwTag::Cartan(_) => {}
            }
        }
        if has_pos {
            positive.terms.insert(mono.clone(), coeff.clone());
        } else if has_neg {
            residual.terms.insert(mono.clone(), coeff.clone());
        } else {
            cartan.terms.insert(mono.clone(), coeff.clone());
            let mut value = coeff.clone();
            for &i in mono {
                if let PbwTag::Cartan(f) = &p.alg.tags[i as usize] {
                    let ev: Rat = f.iter().zip(lambda.iter()).map(|(a, b)| a * b).sum();
                    value *= &Scalar::from_rat(ev);
                }
            }
            scalar_part += &value;
        }
    }
    Ok(HwEvalResult {
        scalar_part,
        cartan_part: cartan,
        residual,
        positive_part: positive,
    })
}
