//! `so(2, m+1)` built abstractly on generators `M_{μν}` with the metric
//! `η = diag(1, 1, −1, …, −1)` over the index set `{−1, 0, 1, …, m+1}`, and
//! a Cartan basis derived by exact simultaneous eigenspace computation.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactnum::{Rat, Scalar};
use crate::jordan::JordanKind;
use crate::linalg::Matrix;
use crate::tkk::{LieAlgebra, LieElement, LieLabel};

use super::{roots::root_system, CartanBasis, CartanBuilder};

pub struct So2mAlgebra {
    pub m: usize,
    pub lie: Arc<LieAlgebra>,
    index: BTreeMap<(i64, i64), usize>,
}

impl So2mAlgebra {
    /// `M_ab` for any `a ≠ b` in `{−1, …, m+1}`, with `M_ba = −M_ab`.
    pub fn m_element(&self, a: i64, b: i64) -> LieElement {
        assert_ne!(a, b);
        let (key, sign) = if a < b { ((a, b), 1) } else { ((b, a), -1) };
        let idx = *self.index.get(&key).expect("index in range");
        self.lie.basis_element(idx).scale(&Scalar::from_int(sign))
    }

    pub fn dim(&self) -> usize {
        self.lie.dim
    }
}

fn eta(mu: i64) -> i64 {
    if mu == -1 || mu == 0 {
        1
    } else {
        -1
    }
}

/// Structure constants straight from the defining commutation relation:
/// `[M_ab, M_cd] = −i(η_bc M_ad − η_ac M_bd − η_bd M_ac + η_ad M_bc)`.
pub fn so2m_algebra(m: usize) -> Result<So2mAlgebra> {
    if m < 2 {
        return Err(Error::Unsupported(
            "orthogonal realization needs m >= 2".into(),
        ));
    }
    let indices: Vec<i64> = (-1..=(m as i64 + 1)).collect();
    let mut pairs = Vec::new();
    let mut index = BTreeMap::new();
    for (p, &a) in indices.iter().enumerate() {
        for &b in &indices[p + 1..] {
            index.insert((a, b), pairs.len());
            pairs.push((a, b));
        }
    }
    let dim = pairs.len();

    // Accumulate ±M_xy into a sparse row, normalizing index order.
    let add = |row: &mut BTreeMap<usize, Scalar>, x: i64, y: i64, coeff: Scalar| {
        if x == y {
            return;
        }
        let (key, sign) = if x < y { ((x, y), 1) } else { ((y, x), -1) };
        let idx = index[&key];
        let c = coeff.scale(&crate::exactnum::rat(sign));
        let entry = row.entry(idx).or_insert_with(Scalar::zero);
        *entry += &c;
    };

    let minus_i = -Scalar::i();
    let mut brackets = vec![Vec::new(); dim * dim];
    for (p, &(a, b)) in pairs.iter().enumerate() {
        for (q, &(c, d)) in pairs.iter().enumerate() {
            let mut row = BTreeMap::new();
            if b == c {
                add(&mut row, a, d, minus_i.scale(&crate::exactnum::rat(eta(b))));
            }
            if a == c {
                add(
                    &mut row,
                    b,
                    d,
                    minus_i.scale(&crate::exactnum::rat(-eta(a))),
                );
            }
            if b == d {
                add(
                    &mut row,
                    a,
                    c,
                    minus_i.scale(&crate::exactnum::rat(-eta(b))),
                );
            }
            if a == d {
                add(&mut row, b, c, minus_i.scale(&crate::exactnum::rat(eta(a))));
            }
            brackets[p * dim + q] = row.into_iter().filter(|(_, s)| !s.is_zero()).collect();
        }
    }

    let labels: Vec<LieLabel> = pairs
        .iter()
        .map(|(a, b)| LieLabel::Named(format!("M({a},{b})")))
        .collect();
    let names: Vec<String> = pairs.iter().map(|(a, b)| format!("M({a},{b})")).collect();
    let lie = LieAlgebra::new(format!("so(2,{})", m + 1), labels, names, brackets);
    Ok(So2mAlgebra { m, lie, index })
}

/// Cartan basis for the orthogonal realization: the Cartan elements are the
/// plane rotations `M_{−1,0}, M_{1,2}, M_{3,4}, …`; every root vector is the
/// exact joint eigenvector of their adjoint action, normalized so that
/// `[E_α, E_{−α}] = H_α`.
pub fn so2m_cartan_basis(m: usize) -> Result<CartanBasis> {
    let so = so2m_algebra(m)?;
    let sys = root_system(JordanKind::SpinFactor, m)?;
    let rank = sys.coord_len;
    let dim = so.dim();

    let mut cartan = Vec::with_capacity(rank);
    cartan.push(so.m_element(-1, 0));
    for t in 1..rank {
        cartan.push(so.m_element(2 * t as i64 - 1, 2 * t as i64));
    }

    // Adjoint matrices of the Cartan elements.
    let ad: Vec<Matrix> = cartan
        .iter()
        .map(|h| {
            let mut mat = Matrix::zero(dim, dim);
            for b in 0..dim {
                let img = so.lie.bracket(h, &so.lie.basis_element(b));
                for (r, c) in img.coeffs.iter().enumerate() {
                    if !c.is_zero() {
                        mat[(r, b)] = c.clone();
                    }
                }
            }
            mat
        })
        .collect();

    let mut builder = CartanBuilder::new(so.lie.clone(), sys.clone());
    for root in &sys.roots {
        // Stack (ad_s − α_s·I) and take the joint kernel.
        let mut stacked = Matrix::zero(rank * dim, dim);
        for (s, m_ad) in ad.iter().enumerate() {
            let alpha_s = Scalar::from_rat(root.coords[s].clone());
            for r in 0..dim {
                for c in 0..dim {
                    let mut v = m_ad[(r, c)].clone();
                    if r == c {
                        v -= &alpha_s;
                    }
                    stacked[(s * dim + r, c)] = v;
                }
            }
        }
        let kernel = stacked.nullspace();
        if kernel.len() != 1 {
            return Err(Error::Consistency(format!(
                "root space for {} has dimension {}",
                root.key(),
                kernel.len()
            )));
        }
        let e = so.lie.element(kernel.into_iter().next().unwrap());
        builder.set_derived_vector(&root.coords, e, "joint eigenvector".into());
    }

    // Coroots through the coordinate duals (the Cartan elements themselves).
    for root in sys.roots.iter().filter(|r| r.positive) {
        let norm = root.norm_sq();
        let mut h = so.lie.zero_element();
        for (s, c) in root.coords.iter().enumerate() {
            let f = Rat::from_integer(2.into()) * c / norm.clone();
            h = h.add(&cartan[s].scale(&Scalar::from_rat(f)));
        }
        builder.set_coroot(&root.coords, h);
    }

    for root in sys.roots.clone().iter().filter(|r| r.positive) {
        builder.normalize_pair(&root.coords, 1)?;
    }

    builder.finish()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defining_relation_instances() {
        let so = so2m_algebra(2).unwrap();
        // [M_{-1,0}, M_{0,3}] = −i η_00 M_{-1,3}
        let lhs = so.lie.bracket(&so.m_element(-1, 0), &so.m_element(0, 3));
        assert_eq!(lhs, so.m_element(-1, 3).scale(&-Scalar::i()));
        // commuting planes
        let lhs = so.lie.bracket(&so.m_element(-1, 0), &so.m_element(1, 2));
        assert!(lhs.is_zero());
    }

    #[test]
    fn so2m_jacobi_and_dims() {
        for m in [2usize, 3] {
            let so = so2m_algebra(m).unwrap();
            assert_eq!(so.dim(), (m + 3) * (m + 2) / 2);
            let rep = so.lie.verify_jacobi();
            assert!(rep.all_passed(), "m={m}: {:?}", rep.first_failure());
        }
    }

    #[test]
    fn derived_cartan_basis_verifies() {
        for m in [2usize, 3] {
            let cb = so2m_cartan_basis(m).unwrap();
            let rep = cb.verify();
            assert!(rep.all_passed(), "m={m}: {:?}", rep.first_failure());
            let consts = cb.pairing_constants().unwrap();
            assert!(consts.values().all(|c| c == &Scalar::one()));
        }
    }
}
