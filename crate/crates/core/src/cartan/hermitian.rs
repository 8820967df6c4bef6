//! Cartan bases for the three matrix-algebra cases, materialized from the
//! displayed generator formulas over the conformal algebra.

use num::Zero;

use crate::error::Result;
use crate::exactnum::{rat, Rat, Scalar};
use crate::jordan::JordanElement;
use crate::tkk::{LieElement, TkkAlgebra};

use super::{roots::root_system, CartanBasis, CartanBuilder};

struct Ctx<'a> {
    tkk: &'a TkkAlgebra,
    len: usize,
}

impl<'a> Ctx<'a> {
    fn root(&self, entries: &[(usize, i64)]) -> Vec<Rat> {
        let mut v = vec![Rat::zero(); self.len];
        for (idx, val) in entries {
            v[*idx] = rat(*val);
        }
        v
    }

    fn diag(&self, p: usize) -> JordanElement {
        self.tkk.jordan.diag(p)
    }

    /// Oriented off-diagonal vector: `e_ab^μ = −e_ba^μ` for the skew
    /// families (μ ≥ 2) and symmetric for μ = 1.
    fn off(&self, a: usize, b: usize, mu: usize) -> JordanElement {
        if a < b {
            self.tkk.jordan.off(a, b, mu)
        } else if mu == 1 {
            self.tkk.jordan.off(b, a, mu)
        } else {
            self.tkk.jordan.off(b, a, mu).scale(&-Scalar::one())
        }
    }

    fn l(&self, u: &JordanElement) -> LieElement {
        self.tkk.l_element(u).expect("str element")
    }

    fn h(&self, u: &JordanElement) -> LieElement {
        self.tkk.h_element(u).expect("str element")
    }

    fn ep_em(&self, u: &JordanElement) -> (LieElement, LieElement) {
        let (ep, em, _) = self.tkk.epm_h(u).expect("str element");
        (ep, em)
    }

    fn ll(&self, u: &JordanElement, v: &JordanElement) -> LieElement {
        self.tkk.lie.bracket(&self.l(u), &self.l(v))
    }
}

fn inv_sqrt2() -> Scalar {
    Scalar::sqrt(2).scale(&crate::exactnum::ratio(1, 2))
}

fn inv_two_sqrt2() -> Scalar {
    Scalar::sqrt(2).scale(&crate::exactnum::ratio(1, 4))
}

/// `sp(n,R)`, rank n. Diagonal idempotents carry the long roots; the
/// off-diagonal frame vectors carry `e_i ± e_j`.
pub(super) fn sp_basis(tkk: &TkkAlgebra) -> Result<CartanBasis> {
    let n = tkk.jordan.n;
    let sys = root_system(tkk.jordan.kind, n)?;
    let ctx = Ctx { tkk, len: n };
    let mut b = CartanBuilder::new(tkk.lie.clone(), sys);

    let mut h_diag = Vec::new();
    for i in 1..=n {
        let eii = ctx.diag(i);
        let (ep, em, h) = tkk.epm_h(&eii)?;
        b.set_coroot(&ctx.root(&[(i - 1, 2)]), h.clone());
        b.set_vector(&ctx.root(&[(i - 1, 2)]), ep);
        b.set_vector(&ctx.root(&[(i - 1, -2)]), em);
        h_diag.push(h);
    }

    for i in 1..=n {
        for j in (i + 1)..=n {
            let (ci, cj) = (i - 1, j - 1);
            b.set_coroot(&ctx.root(&[(ci, 1), (cj, -1)]), h_diag[ci].sub(&h_diag[cj]));
            b.set_coroot(&ctx.root(&[(ci, 1), (cj, 1)]), h_diag[ci].add(&h_diag[cj]));

            let eij = ctx.off(i, j, 1);
            let (ep, em) = ctx.ep_em(&eij);
            let sqrt2 = Scalar::sqrt(2);
            b.set_vector(&ctx.root(&[(ci, 1), (cj, 1)]), ep.scale(&sqrt2));
            b.set_vector(&ctx.root(&[(ci, -1), (cj, -1)]), em.scale(&sqrt2));

            // E_{±(e_i−e_j)} = (h_{e_ij} ± 4[L_{e_ij}, L_{e_jj}])/√2
            let h_off = ctx.h(&eij);
            let k = ctx.ll(&eij, &ctx.diag(j)).scale(&Scalar::from_int(4));
            b.set_vector(
                &ctx.root(&[(ci, 1), (cj, -1)]),
                h_off.add(&k).scale(&inv_sqrt2()),
            );
            b.set_vector(
                &ctx.root(&[(ci, -1), (cj, 1)]),
                h_off.sub(&k).scale(&inv_sqrt2()),
            );
        }
    }

    b.finish()
}

/// `su(n,n)`, coordinates of length 2n. The second frame family `e_ij^α`
/// (imaginary unit) splits every block pair into holomorphic combinations.
pub(super) fn su_basis(tkk: &TkkAlgebra) -> Result<CartanBasis> {
    let n = tkk.jordan.n;
    let len = 2 * n;
    let sys = root_system(tkk.jordan.kind, n)?;
    let ctx = Ctx { tkk, len };
    let mut b = CartanBuilder::new(tkk.lie.clone(), sys);
    let i_s = Scalar::i();

    for i in 1..=n {
        let eii = ctx.diag(i);
        let (ep, em, h) = tkk.epm_h(&eii)?;
        b.set_coroot(&ctx.root(&[(i - 1, 1), (n + i - 1, -1)]), h);
        b.set_vector(&ctx.root(&[(i - 1, 1), (n + i - 1, -1)]), ep);
        b.set_vector(&ctx.root(&[(i - 1, -1), (n + i - 1, 1)]), em);
    }

    for i in 1..=n {
        for j in (i + 1)..=n {
            let u = ctx.off(i, j, 1);
            let w = ctx.off(i, j, 2);
            let k = ctx.ll(&u, &w); // [L_u, L_w]
            let half = Scalar::ratio(1, 2);

            // H over the four block placements: coordinates i+a, j+b with
            // signs η_a, η_b. The verified reading of the h-subscript is
            // η_a·e_ii − η_b·e_jj.
            for (a, eta_a) in [(0usize, 1i64), (n, -1)] {
                for (bb, eta_b) in [(0usize, 1i64), (n, -1)] {
                    let combo = ctx
                        .diag(i)
                        .scale(&Scalar::from_int(eta_a))
                        .sub(&ctx.diag(j).scale(&Scalar::from_int(eta_b)));
                    let h = ctx
                        .h(&combo)
                        .sub(&k.scale(&i_s.scale(&rat(4))))
                        .scale(&half);
                    b.set_coroot(&ctx.root(&[(i - 1 + a, 1), (j - 1 + bb, -1)]), h);
                }
            }

            let upw = u.add(&w.scale(&i_s)); // e_ij + i e_ij^α
            let umw = u.sub(&w.scale(&i_s));
            let (ci, cj) = (i - 1, j - 1);
            let four = Scalar::from_int(4);
            let ejj = ctx.diag(j);

            let h_p = ctx.h(&upw);
            let h_m = ctx.h(&umw);
            let k_p = ctx.ll(&upw, &ejj).scale(&four);
            let k_m = ctx.ll(&umw, &ejj).scale(&four);
            let s = inv_two_sqrt2();
            b.set_vector(&ctx.root(&[(ci, 1), (cj, -1)]), h_p.add(&k_p).scale(&s));
            b.set_vector(&ctx.root(&[(ci, -1), (cj, 1)]), h_m.sub(&k_m).scale(&s));
            b.set_vector(
                &ctx.root(&[(n + ci, 1), (n + cj, -1)]),
                h_p.sub(&k_p).scale(&s),
            );
            b.set_vector(
                &ctx.root(&[(n + ci, -1), (n + cj, 1)]),
                h_m.add(&k_m).scale(&s),
            );

            let (ep_p, em_p) = ctx.ep_em(&upw);
            let (ep_m, em_m) = ctx.ep_em(&umw);
            let s = inv_sqrt2();
            b.set_vector(&ctx.root(&[(ci, 1), (n + cj, -1)]), ep_p.scale(&s));
            b.set_vector(&ctx.root(&[(ci, -1), (n + cj, 1)]), em_m.scale(&s));
            b.set_vector(&ctx.root(&[(cj, 1), (n + ci, -1)]), ep_m.scale(&s));
            b.set_vector(&ctx.root(&[(cj, -1), (n + ci, 1)]), em_p.scale(&s));
        }
    }

    b.finish()
}

/// `so*(4n)`, coordinates of length 2n, quaternionic frame families
/// `1, i, j, k` (μ = 1..4). Lines whose pair index the layout leaves
/// implicit are bound to the smallest index distinct from `i`.
pub(super) fn so_star_basis(tkk: &TkkAlgebra) -> Result<CartanBasis> {
    let n = tkk.jordan.n;
    let len = 2 * n;
    let sys = root_system(tkk.jordan.kind, n)?;
    let ctx = Ctx { tkk, len };
    let mut b = CartanBuilder::new(tkk.lie.clone(), sys);
    let i_s = Scalar::i();
    let half = Scalar::ratio(1, 2);
    let four = Scalar::from_int(4);

    for i in 1..=n {
        let eii = ctx.diag(i);
        let (ep, em, h) = tkk.epm_h(&eii)?;
        b.set_coroot(&ctx.root(&[(i - 1, 1), (n + i - 1, 1)]), h);
        b.set_vector(&ctx.root(&[(i - 1, 1), (n + i - 1, 1)]), ep);
        b.set_vector(&ctx.root(&[(i - 1, -1), (n + i - 1, -1)]), em);
    }

    for i in 1..=n {
        for j in (i + 1)..=n {
            let (ci, cj) = (i - 1, j - 1);
            let u1 = ctx.off(i, j, 1);
            let u2 = ctx.off(i, j, 2);
            let u3 = ctx.off(i, j, 3);
            let u4 = ctx.off(i, j, 4);
            let ejj = ctx.diag(j);
            let h_diff = ctx.diag(i).sub(&ctx.diag(j));
            let h_sum = ctx.diag(i).add(&ctx.diag(j));
            let k14 = ctx.ll(&u1, &u4);
            let k23 = ctx.ll(&u2, &u3);

            // The (1,k)-unit families (same-block compact, cross-block
            // noncompact) follow the displayed η-to-block mapping; the
            // (i,j)-unit families land in the opposite block — the reading
            // pinned uniquely by exact bracket consistency at n ≥ 3.
            for (shift, eta) in [(0usize, 1i64), (n, -1)] {
                let i_eta = i_s.scale(&rat(eta));
                let opp = n - shift;

                // e_{n̄+i} − e_{n̄+j} (compact, same block)
                let h = ctx
                    .h(&h_diff)
                    .add(&k14.scale(&i_s.scale(&rat(4 * eta))))
                    .scale(&half);
                b.set_coroot(&ctx.root(&[(ci + shift, 1), (cj + shift, -1)]), h);
                let combo_m = u1.sub(&u4.scale(&i_eta));
                let combo_p = u1.add(&u4.scale(&i_eta));
                let s = inv_two_sqrt2();
                b.set_vector(
                    &ctx.root(&[(ci + shift, 1), (cj + shift, -1)]),
                    ctx.h(&combo_m)
                        .add(&ctx.ll(&combo_m, &ejj).scale(&four))
                        .scale(&s),
                );
                b.set_vector(
                    &ctx.root(&[(ci + shift, -1), (cj + shift, 1)]),
                    ctx.h(&combo_p)
                        .sub(&ctx.ll(&combo_p, &ejj).scale(&four))
                        .scale(&s),
                );

                // cross-block compact, opposite-block labels
                let h = ctx
                    .h(&h_diff)
                    .sub(&k23.scale(&i_s.scale(&rat(4 * eta))))
                    .scale(&half);
                let (ti, tj) = (ci + opp, n + cj - opp);
                b.set_coroot(&ctx.root(&[(ti, 1), (tj, -1)]), h);
                let combo_p = u2.add(&u3.scale(&i_eta));
                let combo_m = u2.sub(&u3.scale(&i_eta));
                b.set_vector(
                    &ctx.root(&[(ti, 1), (tj, -1)]),
                    ctx.h(&combo_p)
                        .add(&ctx.ll(&combo_p, &ejj).scale(&four))
                        .scale(&s),
                );
                b.set_vector(
                    &ctx.root(&[(ti, -1), (tj, 1)]),
                    ctx.h(&combo_m)
                        .sub(&ctx.ll(&combo_m, &ejj).scale(&four))
                        .scale(&s),
                );

                // same-block noncompact, opposite-block labels
                let h = ctx
                    .h(&h_sum)
                    .sub(&k23.scale(&i_s.scale(&rat(4 * eta))))
                    .scale(&half);
                b.set_coroot(&ctx.root(&[(ci + opp, 1), (cj + opp, 1)]), h);
                let combo_p = u2.add(&u3.scale(&i_eta));
                let combo_m = u2.sub(&u3.scale(&i_eta));
                let (ep, _) = ctx.ep_em(&combo_p);
                let (_, em) = ctx.ep_em(&combo_m);
                let s2 = inv_sqrt2();
                b.set_vector(&ctx.root(&[(ci + opp, 1), (cj + opp, 1)]), ep.scale(&s2));
                b.set_vector(&ctx.root(&[(ci + opp, -1), (cj + opp, -1)]), em.scale(&s2));

                // e_{n̄+i} + e_{n+j−n̄} (noncompact, cross block) — this
                // family follows the displayed block mapping.
                let (si, sj) = (ci + shift, n + cj - shift);
                let h = ctx
                    .h(&h_sum)
                    .add(&k14.scale(&i_s.scale(&rat(4 * eta))))
                    .scale(&half);
                b.set_coroot(&ctx.root(&[(si, 1), (sj, 1)]), h);
                let combo_m = u1.sub(&u4.scale(&i_eta));
                let combo_p = u1.add(&u4.scale(&i_eta));
                let (ep, _) = ctx.ep_em(&combo_m);
                let (_, em) = ctx.ep_em(&combo_p);
                b.set_vector(&ctx.root(&[(si, 1), (sj, 1)]), ep.scale(&s2));
                b.set_vector(&ctx.root(&[(si, -1), (sj, -1)]), em.scale(&s2));
            }
        }
    }

    // The remaining roots e_i − e_{n+i}: the displayed lines leave their
    // auxiliary frame pair unbound and no binding verifies uniformly, so the
    // coroots come from root additivity over displayed families and the
    // vectors from bracketing; the displayed readings are checked afterwards
    // and flagged in the notes.
    for i in 1..=n {
        let j = if i == 1 { 2 } else { 1 };
        // e_i − e_{n+i} = (e_i − e_j) + (e_j − e_{n+i})
        let first = ctx.root(&[(i - 1, 1), (j - 1, -1)]);
        let second = ctx.root(&[(j - 1, 1), (n + i - 1, -1)]);
        let h1 = b.coroot_of(&first).expect("block coroot");
        let h2 = b.coroot_of(&second).expect("cross coroot");
        b.set_coroot(&ctx.root(&[(i - 1, 1), (n + i - 1, -1)]), h1.add(&h2));
    }
    b.complete_by_bracketing()?;
    for i in 1..=n {
        b.normalize_pair(&ctx.root(&[(i - 1, 1), (n + i - 1, -1)]), 1)?;
    }

    // Check the displayed short-root lines against the derived elements.
    let mut notes = Vec::new();
    for i in 1..=n {
        let j_star = if i == 1 { 2 } else { 1 };
        let derived = b
            .coroot_of(&ctx.root(&[(i - 1, 1), (n + i - 1, -1)]))
            .expect("derived short coroot");
        let mut matched = None;
        for (p, q, label) in [(i, j_star, "(i,j)"), (j_star, i, "(j,i)")] {
            let w1 = ctx.off(p, q, 1);
            let w2 = ctx.off(p, q, 2);
            let w3 = ctx.off(p, q, 3);
            let w4 = ctx.off(p, q, 4);
            let cand = ctx
                .ll(&w1, &w4)
                .sub(&ctx.ll(&w2, &w3))
                .scale(&i_s.scale(&rat(2)));
            if cand == derived {
                matched = Some(format!("binding {label}"));
                break;
            }
            if cand == derived.neg() {
                matched = Some(format!("negated binding {label}"));
                break;
            }
        }
        notes.push(match matched {
            Some(reading) => format!("short coroot line i={i}: matches {reading}"),
            None => {
                format!("short coroot line i={i}: no pair binding reproduces the derived coroot")
            }
        });
    }

    let mut basis = b.finish()?;
    basis.notes = notes;
    Ok(basis)
}
