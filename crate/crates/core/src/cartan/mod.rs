//! Root systems and explicit Cartan bases for the conformal algebras, the
//! orthogonal realization of the spin-factor case, and the weight pairing.
//!
//! Root vectors and coroots are materialized as structure-constant algebra
//! elements and verified exactly: `[H_α, E_β] = β(H_α)·E_β` for every pair,
//! and `[E_α, E_{−α}] ∝ H_α` with the proportionality constants recorded as
//! data. Vectors the source layout leaves implicit are completed by
//! bracketing materialized ones; each completed vector keeps its derivation
//! word.

mod e7;
mod hermitian;
mod phi;
mod roots;
mod so2m;

pub use phi::{phi_iso, PhiIso};
pub use roots::root_system;
pub use so2m::{so2m_algebra, so2m_cartan_basis, So2mAlgebra};

use std::collections::BTreeMap;
use std::sync::Arc;

use num::Zero;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exactnum::{Rat, Scalar};
use crate::jordan::{build_jordan, JordanKind};
use crate::linalg::EchelonBasis;
use crate::report::Report;
use crate::tkk::{build_tkk, LieAlgebra, LieElement, TkkAlgebra};

/// A root in Bourbaki-style coordinates with its compactness and sign flags.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Root {
    pub coords: Vec<Rat>,
    pub compact: bool,
    pub positive: bool,
}

impl Root {
    pub fn new(coords: Vec<Rat>, compact: bool, positive: bool) -> Self {
        Root {
            coords,
            compact,
            positive,
        }
    }

    pub fn neg(&self) -> Root {
        Root {
            coords: self.coords.iter().map(|c| -c).collect(),
            compact: self.compact,
            positive: !self.positive,
        }
    }

    /// Stable text key: coordinates joined by commas.
    pub fn key(&self) -> String {
        self.coords
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }

    pub fn norm_sq(&self) -> Rat {
        self.coords.iter().map(|c| c * c).sum()
    }

    pub fn dot(&self, other: &[Rat]) -> Rat {
        self.coords
            .iter()
            .zip(other.iter())
            .map(|(a, b)| a * b)
            .sum()
    }
}

/// Full signed root list of one of the five conformal algebras.
#[derive(Clone, Debug)]
pub struct RootSystem {
    pub coord_len: usize,
    pub roots: Vec<Root>,
}

impl RootSystem {
    pub fn positives(&self) -> impl Iterator<Item = &Root> {
        self.roots.iter().filter(|r| r.positive)
    }

    pub fn noncompact_positive_count(&self) -> usize {
        self.positives().filter(|r| !r.compact).count()
    }

    pub fn find(&self, coords: &[Rat]) -> Option<usize> {
        self.roots.iter().position(|r| r.coords == coords)
    }
}

/// `λ(H_α) = 2(λ,α)/(α,α)` under the Euclidean coordinate pairing.
pub fn eval_weight(lambda: &[Rat], alpha: &Root) -> Result<Rat> {
    if lambda.len() != alpha.coords.len() {
        return Err(Error::DimensionMismatch(format!(
            "weight length {} vs root length {}",
            lambda.len(),
            alpha.coords.len()
        )));
    }
    let num: Rat = alpha.dot(lambda);
    Ok(Rat::from_integer(2.into()) * num / alpha.norm_sq())
}

/// Triangular-decomposition data for one algebra: every root materialized as
/// an element, coroots for all roots, and exact coordinate duals.
pub struct CartanBasis {
    pub lie: Arc<LieAlgebra>,
    pub system: RootSystem,
    /// Root vectors, aligned with `system.roots`.
    pub vectors: Vec<LieElement>,
    /// Coroots aligned with `system.roots`; `H_{−α} = −H_α` always.
    pub coroots: Vec<LieElement>,
    /// Derivation word for vectors completed by bracketing.
    pub derived: Vec<Option<String>>,
    /// Independent coroots spanning the Cartan subalgebra, with their weight
    /// functionals `α^∨`.
    pub h_basis: Vec<(Vec<Rat>, LieElement)>,
    /// Coordinate duals `T_s` (projected onto the root span): `[T_s, E_β] =
    /// β_s·E_β`.
    pub duals: Vec<LieElement>,
    /// Free-form findings recorded during construction (e.g. which reading
    /// of an ambiguous displayed line was used).
    pub notes: Vec<String>,
}

impl CartanBasis {
    pub fn rank(&self) -> usize {
        self.h_basis.len()
    }

    pub fn root_vector(&self, coords: &[Rat]) -> Option<&LieElement> {
        self.system.find(coords).map(|i| &self.vectors[i])
    }

    pub fn coroot(&self, coords: &[Rat]) -> Option<&LieElement> {
        self.system.find(coords).map(|i| &self.coroots[i])
    }

    /// `[H_α, E_β] = β(H_α)·E_β` for every positive-root coroot against every
    /// root vector, plus dual and commutation checks. Exact, parallel over
    /// pairs, deterministic report.
    pub fn verify(&self) -> Report {
        let mut rep = Report::new();
        let n_roots = self.system.roots.len();

        let pairs: Vec<(usize, usize)> = (0..n_roots)
            .filter(|&a| self.system.roots[a].positive)
            .flat_map(|a| (0..n_roots).map(move |b| (a, b)))
            .collect();
        let mut failures: Vec<(usize, usize)> = pairs
            .par_iter()
            .filter(|&&(a, b)| {
                let alpha = &self.system.roots[a];
                let beta = &self.system.roots[b];
                let ev = eval_weight(&beta.coords, alpha).expect("same length");
                let lhs = self.lie.bracket(&self.coroots[a], &self.vectors[b]);
                let rhs = self.vectors[b].scale(&Scalar::from_rat(ev));
                lhs != rhs
            })
            .cloned()
            .collect();
        failures.sort();
        if let Some((a, b)) = failures.first() {
            rep.fail(
                format!("eigenvalue relations ({} pairs)", pairs.len()),
                format!(
                    "[H({}), E({})]",
                    self.system.roots[*a].key(),
                    self.system.roots[*b].key()
                ),
            );
        } else {
            rep.pass(format!("eigenvalue relations ({} pairs)", pairs.len()));
        }

        // Coordinate duals: [T_s, E_β] = β_s E_β.
        let mut ok = true;
        let mut witness = String::new();
        'dual: for (s, t) in self.duals.iter().enumerate() {
            for (b, beta) in self.system.roots.iter().enumerate() {
                let lhs = self.lie.bracket(t, &self.vectors[b]);
                let rhs = self.vectors[b].scale(&Scalar::from_rat(beta.coords[s].clone()));
                if lhs != rhs {
                    ok = false;
                    witness = format!("[T{}, E({})]", s + 1, beta.key());
                    break 'dual;
                }
            }
        }
        rep.check("coordinate duals", ok, witness);

        // The Cartan subalgebra is abelian.
        let mut ok = true;
        let mut witness = String::new();
        'cart: for (_, h1) in &self.h_basis {
            for (_, h2) in &self.h_basis {
                if !self.lie.bracket(h1, h2).is_zero() {
                    ok = false;
                    witness = "noncommuting coroots".into();
                    break 'cart;
                }
            }
        }
        rep.check("cartan commutes", ok, witness);

        // Coroots of opposite roots are opposite.
        let mut ok = true;
        let mut witness = String::new();
        for (a, alpha) in self.system.roots.iter().enumerate() {
            let neg = alpha.neg();
            let b = self
                .system
                .find(&neg.coords)
                .expect("closed under negation");
            if self.coroots[a] != self.coroots[b].neg() {
                ok = false;
                witness = alpha.key();
                break;
            }
        }
        rep.check("coroot antisymmetry", ok, witness);

        rep
    }

    /// `[E_α, E_{−α}] = c·H_α` for every positive root; returns the exact
    /// constants keyed by root. Non-proportional pairs are reported.
    pub fn pairing_constants(&self) -> Result<BTreeMap<String, Scalar>> {
        let mut out = BTreeMap::new();
        for (a, alpha) in self.system.roots.iter().enumerate() {
            if !alpha.positive {
                continue;
            }
            let b = self
                .system
                .find(&alpha.neg().coords)
                .expect("closed under negation");
            let lhs = self.lie.bracket(&self.vectors[a], &self.vectors[b]);
            let h = &self.coroots[a];
            let c = proportionality(&lhs, h).ok_or_else(|| {
                Error::Consistency(format!("[E, E-] not proportional to H at {}", alpha.key()))
            })?;
            out.insert(alpha.key(), c);
        }
        Ok(out)
    }
}

/// `x = c·y` solved exactly; `None` when not proportional (0 = c·y gives 0).
pub fn proportionality(x: &LieElement, y: &LieElement) -> Option<Scalar> {
    let pivot = y.coeffs.iter().position(|s| !s.is_zero())?;
    let c = x.coeffs[pivot].div(&y.coeffs[pivot]).ok()?;
    if &y.scale(&c) == x {
        Some(c)
    } else {
        None
    }
}

/// Builder collecting displayed root vectors and coroots before assembling a
/// verified [`CartanBasis`].
pub(crate) struct CartanBuilder {
    pub lie: Arc<LieAlgebra>,
    pub system: RootSystem,
    vectors: Vec<Option<LieElement>>,
    coroots: Vec<Option<LieElement>>,
    derived: Vec<Option<String>>,
}

impl CartanBuilder {
    pub fn new(lie: Arc<LieAlgebra>, system: RootSystem) -> Self {
        let n = system.roots.len();
        CartanBuilder {
            lie,
            system,
            vectors: vec![None; n],
            coroots: vec![None; n],
            derived: vec![None; n],
        }
    }

    fn index_of(&self, coords: &[Rat]) -> usize {
        self.system
            .find(coords)
            .unwrap_or_else(|| panic!("not a root: {coords:?}"))
    }

    pub fn set_vector(&mut self, coords: &[Rat], e: LieElement) {
        let i = self.index_of(coords);
        assert!(
            self.vectors[i].is_none(),
            "duplicate root vector {coords:?}"
        );
        self.vectors[i] = Some(e);
    }

    pub fn set_derived_vector(&mut self, coords: &[Rat], e: LieElement, word: String) {
        let i = self.index_of(coords);
        assert!(
            self.vectors[i].is_none(),
            "duplicate root vector {coords:?}"
        );
        self.vectors[i] = Some(e);
        self.derived[i] = Some(word);
    }

    pub fn set_coroot(&mut self, coords: &[Rat], h: LieElement) {
        let i = self.index_of(coords);
        assert!(self.coroots[i].is_none(), "duplicate coroot {coords:?}");
        self.coroots[i] = Some(h);
    }

    pub fn vector(&self, coords: &[Rat]) -> Option<&LieElement> {
        self.system
            .find(coords)
            .and_then(|i| self.vectors[i].as_ref())
    }

    /// Coroot for the given root, falling back to `−H_{−α}`.
    pub fn coroot_of(&self, coords: &[Rat]) -> Option<LieElement> {
        let i = self.system.find(coords)?;
        if let Some(h) = &self.coroots[i] {
            return Some(h.clone());
        }
        let neg = self.system.roots[i].neg();
        let j = self.system.find(&neg.coords)?;
        self.coroots[j].as_ref().map(|h| h.neg())
    }

    pub fn missing_vectors(&self) -> Vec<usize> {
        (0..self.system.roots.len())
            .filter(|&i| self.vectors[i].is_none())
            .collect()
    }

    /// Derive missing root vectors as brackets `[E_α, E_β]` of materialized
    /// ones with `α + β` the target root, scanning in sorted root order.
    pub fn complete_by_bracketing(&mut self) -> Result<()> {
        loop {
            let missing = self.missing_vectors();
            if missing.is_empty() {
                return Ok(());
            }
            let mut progressed = false;
            for gi in missing {
                let gamma = self.system.roots[gi].clone();
                let mut found = None;
                'search: for (ai, alpha) in self.system.roots.iter().enumerate() {
                    let ea = match &self.vectors[ai] {
                        Some(e) => e,
                        None => continue,
                    };
                    let beta_coords: Vec<Rat> = gamma
                        .coords
                        .iter()
                        .zip(alpha.coords.iter())
                        .map(|(g, a)| g - a)
                        .collect();
                    if let Some(bi) = self.system.find(&beta_coords) {
                        if let Some(eb) = &self.vectors[bi] {
                            let v = self.lie.bracket(ea, eb);
                            if !v.is_zero() {
                                let word = format!(
                                    "[E({}), E({})]",
                                    alpha.key(),
                                    self.system.roots[bi].key()
                                );
                                found = Some((v, word));
                                break 'search;
                            }
                        }
                    }
                }
                if let Some((v, word)) = found {
                    self.vectors[gi] = Some(v);
                    self.derived[gi] = Some(word);
                    progressed = true;
                }
            }
            if !progressed {
                return Err(Error::Consistency(format!(
                    "cannot complete root vectors; {} remain",
                    self.missing_vectors().len()
                )));
            }
        }
    }

    /// Fill coroots of negated roots (`H_{−α} = −H_α`) and check no root is
    /// left without one.
    fn close_coroots(&mut self) -> Result<()> {
        let n = self.system.roots.len();
        for i in 0..n {
            if self.coroots[i].is_some() {
                continue;
            }
            let neg = self.system.roots[i].neg();
            let j = self.index_of(&neg.coords);
            if let Some(h) = &self.coroots[j] {
                self.coroots[i] = Some(h.neg());
            }
        }
        if let Some(i) = (0..n).find(|&i| self.coroots[i].is_none()) {
            return Err(Error::Consistency(format!(
                "no coroot for root {}",
                self.system.roots[i].key()
            )));
        }
        Ok(())
    }

    /// Enforce the pairing convention `[E_α, E_{−α}] = sign(α)·H_α` by
    /// rescaling `E_{−α}` — used for completed vectors whose scale is free.
    pub fn normalize_pair(&mut self, coords: &[Rat], target_sign: i64) -> Result<()> {
        let a = self.index_of(coords);
        let b = self.index_of(&self.system.roots[a].neg().coords);
        let (ea, eb) = match (&self.vectors[a], &self.vectors[b]) {
            (Some(x), Some(y)) => (x.clone(), y.clone()),
            _ => return Err(Error::Consistency("pair not materialized".into())),
        };
        let h = self.coroots[a]
            .clone()
            .ok_or_else(|| Error::Consistency("missing coroot".into()))?;
        let br = self.lie.bracket(&ea, &eb);
        let c = proportionality(&br, &h).ok_or_else(|| {
            Error::Consistency(format!(
                "[E, E-] not proportional to coroot at {}",
                self.system.roots[a].key()
            ))
        })?;
        if c.is_zero() {
            return Err(Error::Consistency(format!(
                "degenerate pairing at {} (bracket zero: {})",
                self.system.roots[a].key(),
                br.is_zero()
            )));
        }
        let factor = Scalar::from_int(target_sign).div(&c)?;
        self.vectors[b] = Some(eb.scale(&factor));
        Ok(())
    }

    pub fn finish(mut self) -> Result<CartanBasis> {
        self.close_coroots()?;
        let n = self.system.roots.len();
        if let Some(i) = (0..n).find(|&i| self.vectors[i].is_none()) {
            return Err(Error::Consistency(format!(
                "no root vector for {}",
                self.system.roots[i].key()
            )));
        }
        let vectors: Vec<LieElement> = self.vectors.into_iter().map(Option::unwrap).collect();
        let coroots: Vec<LieElement> = self.coroots.into_iter().map(Option::unwrap).collect();

        // Independent coroots with their functionals, in sorted root order.
        let mut order: Vec<usize> = (0..n).filter(|&i| self.system.roots[i].positive).collect();
        order.sort_by_key(|&i| self.system.roots[i].key());
        let mut ech = EchelonBasis::new(self.lie.dim, false);
        let mut h_basis = Vec::new();
        for i in order {
            let h = &coroots[i];
            if let crate::linalg::Inserted::Independent(_) = ech.insert(&h.coeffs) {
                let alpha = &self.system.roots[i];
                let norm = alpha.norm_sq();
                let functional: Vec<Rat> = alpha
                    .coords
                    .iter()
                    .map(|c| Rat::from_integer(2.into()) * c / norm.clone())
                    .collect();
                h_basis.push((functional, h.clone()));
            }
        }

        let duals = solve_duals(&h_basis, self.system.coord_len)?;

        Ok(CartanBasis {
            lie: self.lie,
            system: self.system,
            vectors,
            coroots,
            derived: self.derived,
            h_basis,
            duals,
            notes: Vec::new(),
        })
    }
}

/// Solve for coordinate duals `T_s = Σ c_k H_k` with the Gram system of the
/// coroot functionals: yields the projection of `e_s` onto the root span.
fn solve_duals(h_basis: &[(Vec<Rat>, LieElement)], coord_len: usize) -> Result<Vec<LieElement>> {
    let r = h_basis.len();
    if r == 0 {
        return Err(Error::Consistency("empty cartan".into()));
    }
    let dot = |a: &[Rat], b: &[Rat]| -> Rat { a.iter().zip(b).map(|(x, y)| x * y).sum() };
    // Gram matrix of the functionals.
    let mut gram = vec![vec![Rat::zero(); r]; r];
    for k in 0..r {
        for l in 0..r {
            gram[k][l] = dot(&h_basis[k].0, &h_basis[l].0);
        }
    }
    let mut duals = Vec::with_capacity(coord_len);
    for s in 0..coord_len {
        let rhs: Vec<Rat> = (0..r).map(|k| h_basis[k].0[s].clone()).collect();
        let coeffs = rat_solve(&gram, &rhs)?;
        let mut t = h_basis[0].1.alg.zero_element();
        for (k, c) in coeffs.iter().enumerate() {
            t = t.add(&h_basis[k].1.scale(&Scalar::from_rat(c.clone())));
        }
        duals.push(t);
    }
    Ok(duals)
}

/// Exact solve of a square rational system by Gaussian elimination.
fn rat_solve(a: &[Vec<Rat>], b: &[Rat]) -> Result<Vec<Rat>> {
    let n = b.len();
    let mut m: Vec<Vec<Rat>> = a.iter().map(|row| row.clone()).collect();
    let mut rhs = b.to_vec();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !m[r][col].is_zero())
            .ok_or_else(|| Error::Consistency("singular gram matrix".into()))?;
        m.swap(col, pivot);
        rhs.swap(col, pivot);
        let p = m[col][col].clone();
        for c in col..n {
            m[col][c] = &m[col][c] / &p;
        }
        rhs[col] = &rhs[col] / &p;
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in col..n {
                    let d = &m[col][c] * &f;
                    m[r][c] = &m[r][c] - &d;
                }
                let d = &rhs[col] * &f;
                rhs[r] = &rhs[r] - &d;
            }
        }
    }
    Ok(rhs)
}

/// Cartan basis for the conformal algebra of any of the five kinds. Spin
/// factors are served by the orthogonal realization (see [`phi_iso`]).
pub fn cartan_basis(kind: JordanKind, n: usize) -> Result<CartanBasis> {
    match kind {
        JordanKind::SpinFactor => so2m_cartan_basis(n),
        _ => {
            let jordan = build_jordan(kind, n)?;
            let tkk = build_tkk(&jordan)?;
            cartan_basis_tkk(&tkk)
        }
    }
}

/// Cartan basis over an already-built conformal algebra.
pub fn cartan_basis_tkk(tkk: &TkkAlgebra) -> Result<CartanBasis> {
    match tkk.jordan.kind {
        JordanKind::HermR => hermitian::sp_basis(tkk),
        JordanKind::HermC => hermitian::su_basis(tkk),
        JordanKind::HermH => hermitian::so_star_basis(tkk),
        JordanKind::HermO3 => e7::e7_basis(tkk),
        JordanKind::SpinFactor => Err(Error::Unsupported(
            "spin factors use the orthogonal realization".into(),
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::ratio;

    #[test]
    fn eval_weight_examples() {
        // sp(n,R): λ = (−1/2,…,−1/2), α = 2e_1 → −1/2
        let lambda = vec![ratio(-1, 2), ratio(-1, 2), ratio(-1, 2)];
        let alpha = Root::new(vec![ratio(2, 1), ratio(0, 1), ratio(0, 1)], false, true);
        assert_eq!(eval_weight(&lambda, &alpha).unwrap(), ratio(-1, 2));

        // zero weight pairs to zero
        let zero = vec![ratio(0, 1); 3];
        assert_eq!(eval_weight(&zero, &alpha).unwrap(), ratio(0, 1));

        // e7-style coordinates: λ = (0,0,0,0,0,−4,2,−2), α = e_8 − e_7 → −4
        let mut lam = vec![ratio(0, 1); 8];
        lam[5] = ratio(-4, 1);
        lam[6] = ratio(2, 1);
        lam[7] = ratio(-2, 1);
        let mut a = vec![ratio(0, 1); 8];
        a[6] = ratio(-1, 1);
        a[7] = ratio(1, 1);
        let alpha = Root::new(a, false, true);
        assert_eq!(eval_weight(&lam, &alpha).unwrap(), ratio(-4, 1));

        // length mismatch errors
        assert!(eval_weight(&lambda, &Root::new(vec![ratio(1, 1)], true, true)).is_err());
    }
}

#[cfg(test)]
mod basis_tests {
    use super::*;
    use crate::exactnum::Scalar;

    #[test]
    fn sp3_displayed_basis_verifies() {
        let cb = cartan_basis(JordanKind::HermR, 3).unwrap();
        let rep = cb.verify();
        assert!(rep.all_passed(), "{:?}", rep.first_failure());
        let consts = cb.pairing_constants().unwrap();
        assert_eq!(consts.len(), 9);
        // [H_{2e_1}, E_{2e_1}] = 2 E_{2e_1}
        let mut alpha = vec![crate::exactnum::rat(0); 3];
        alpha[0] = crate::exactnum::rat(2);
        let h = cb.coroot(&alpha).unwrap();
        let e = cb.root_vector(&alpha).unwrap();
        assert_eq!(cb.lie.bracket(h, e), e.scale(&Scalar::from_int(2)));
    }

    #[test]
    fn su22_and_sostar8_verify() {
        for (kind, n) in [(JordanKind::HermC, 2), (JordanKind::HermH, 2)] {
            let cb = cartan_basis(kind, n).unwrap();
            let rep = cb.verify();
            assert!(rep.all_passed(), "{kind:?}: {:?}", rep.first_failure());
        }
    }

    #[test]
    fn pairing_constants_are_stable() {
        let a = cartan_basis(JordanKind::HermR, 3).unwrap();
        let b = cartan_basis(JordanKind::HermR, 3).unwrap();
        assert_eq!(
            a.pairing_constants().unwrap(),
            b.pairing_constants().unwrap()
        );
    }
}
