//! The nested commutator calculus of the avatar element against the `X`/`Y`
//! generators: closed forms for every bracket depth and the terminal
//! vanishing identities, verified as exact identities in the enveloping
//! algebra over the orthonormal frame basis.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::exactnum::{rat, Scalar};
use crate::jordan::JordanElement;
use crate::report::Report;
use crate::tkk::triple;

use super::pbw::PbwElement;
use super::qelems::{q_elements, UContext};

/// Number of seeded tuples for the depth ≥ 4 identities.
pub const DEEP_SAMPLES: usize = 50;
pub const DEEP_SEED: u64 = 0x7EBA;

struct Lemma7<'a> {
    ctx: &'a UContext,
    /// Orthonormal basis elements `e_α = √ρ·b_α`.
    on: Vec<JordanElement>,
    rho: Scalar,
    q1p: PbwElement,
}

impl<'a> Lemma7<'a> {
    fn new(ctx: &'a UContext) -> Result<Self> {
        // The commutators kill the constant, so build the avatar at a = 0.
        let q = q_elements(ctx, &Scalar::zero(), None)?;
        Ok(Lemma7 {
            ctx,
            on: ctx.orthonormal_basis(),
            rho: Scalar::from_int(ctx.rho() as i64),
            q1p: q.q1_prime,
        })
    }

    fn x(&self, u: &JordanElement) -> PbwElement {
        self.ctx.x(u)
    }

    fn y(&self, u: &JordanElement) -> PbwElement {
        self.ctx.y(u)
    }

    fn s(&self, u: &JordanElement, v: &JordanElement) -> PbwElement {
        self.ctx.s(u, v).expect("same algebra")
    }

    fn l_e(&self) -> PbwElement {
        self.ctx
            .l(&self.ctx.tkk.jordan.unit_element())
            .expect("unit")
    }

    fn trip(&self, a: &JordanElement, b: &JordanElement, c: &JordanElement) -> JordanElement {
        triple(a, b, c).expect("same algebra")
    }

    /// Σ over the orthonormal basis of a term builder.
    fn sum<F: Fn(&JordanElement) -> PbwElement>(&self, f: F) -> PbwElement {
        let mut acc = self.ctx.pbw.zero();
        for alpha in &self.on {
            acc = acc.add(&f(alpha));
        }
        acc
    }

    // Closed forms, one per displayed item.

    fn a1_closed(&self, beta: &JordanElement) -> PbwElement {
        let two = Scalar::from_int(2);
        self.sum(|al| self.x(al).anticommutator(&self.s(beta, al)))
            .scale(&two)
            .sub(
                &self
                    .l_e()
                    .anticommutator(&self.x(beta))
                    .scale(&(&two * &self.rho)),
            )
    }

    fn a2_closed(&self, gamma: &JordanElement) -> PbwElement {
        let two = Scalar::from_int(2);
        self.sum(|al| self.y(al).anticommutator(&self.s(al, gamma)))
            .scale(&-&two)
            .add(
                &self
                    .l_e()
                    .anticommutator(&self.y(gamma))
                    .scale(&(&two * &self.rho)),
            )
    }

    fn a11_closed(&self, beta: &JordanElement, beta1: &JordanElement) -> PbwElement {
        let four = Scalar::from_int(4);
        self.sum(|al| self.x(al).mul(&self.x(&self.trip(beta, al, beta1))))
            .scale(&four)
            .sub(&self.x(beta).mul(&self.x(beta1)).scale(&(&four * &self.rho)))
    }

    fn a22_closed(&self, gamma: &JordanElement, gamma1: &JordanElement) -> PbwElement {
        let four = Scalar::from_int(4);
        self.sum(|al| self.y(al).mul(&self.y(&self.trip(gamma, al, gamma1))))
            .scale(&four)
            .sub(
                &self
                    .y(gamma)
                    .mul(&self.y(gamma1))
                    .scale(&(&four * &self.rho)),
            )
    }

    fn a12_closed(&self, beta: &JordanElement, gamma: &JordanElement) -> PbwElement {
        let two = Scalar::from_int(2);
        let four = Scalar::from_int(4);
        // The first sum's triple product verifies as {α β γ}, not the
        // displayed {β α γ}.
        self.sum(|al| {
            self.x(al)
                .anticommutator(&self.y(&self.trip(al, beta, gamma)))
        })
        .scale(&-&two)
        .sub(
            &self
                .sum(|al| self.s(al, gamma).anticommutator(&self.s(beta, al)))
                .scale(&four),
        )
        .add(
            &self
                .x(beta)
                .anticommutator(&self.y(gamma))
                .scale(&(&two * &self.rho)),
        )
        .add(
            &self
                .s(beta, gamma)
                .anticommutator(&self.l_e())
                .scale(&(&four * &self.rho)),
        )
    }

    fn a122_closed(
        &self,
        beta: &JordanElement,
        gamma: &JordanElement,
        gamma1: &JordanElement,
    ) -> PbwElement {
        let four = Scalar::from_int(4);
        let four_rho = &four * &self.rho;
        self.sum(|al| {
            self.s(al, gamma)
                .anticommutator(&self.y(&self.trip(al, beta, gamma1)))
        })
        .add(&self.sum(|al| {
            self.s(al, gamma1)
                .anticommutator(&self.y(&self.trip(al, beta, gamma)))
        }))
        .add(&self.sum(|al| {
            self.s(beta, al)
                .anticommutator(&self.y(&self.trip(gamma, al, gamma1)))
        }))
        .scale(&four)
        .sub(
            &self
                .s(beta, gamma1)
                .anticommutator(&self.y(gamma))
                .scale(&four_rho),
        )
        .sub(
            &self
                .s(beta, gamma)
                .anticommutator(&self.y(gamma1))
                .scale(&four_rho),
        )
        .sub(
            &self
                .l_e()
                .anticommutator(&self.y(&self.trip(gamma, beta, gamma1)))
                .scale(&four_rho),
        )
    }

    fn a1222_closed(
        &self,
        beta: &JordanElement,
        gamma: &JordanElement,
        gamma1: &JordanElement,
        gamma2: &JordanElement,
    ) -> PbwElement {
        let eight = Scalar::from_int(8);
        let eight_rho = &eight * &self.rho;
        self.sum(|al| {
            self.y(&self.trip(gamma, al, gamma2))
                .mul(&self.y(&self.trip(al, beta, gamma1)))
        })
        .add(&self.sum(|al| {
            self.y(&self.trip(gamma1, al, gamma2))
                .mul(&self.y(&self.trip(al, beta, gamma)))
        }))
        .add(&self.sum(|al| {
            self.y(&self.trip(al, beta, gamma2))
                .mul(&self.y(&self.trip(gamma, al, gamma1)))
        }))
        .scale(&-&eight)
        .add(
            &self
                .y(&self.trip(gamma1, beta, gamma2))
                .mul(&self.y(gamma))
                .scale(&eight_rho),
        )
        .add(
            &self
                .y(&self.trip(gamma, beta, gamma2))
                .mul(&self.y(gamma1))
                .scale(&eight_rho),
        )
        .add(
            &self
                .y(gamma2)
                .mul(&self.y(&self.trip(gamma, beta, gamma1)))
                .scale(&eight_rho),
        )
    }

    fn a112_closed(
        &self,
        beta: &JordanElement,
        beta1: &JordanElement,
        gamma: &JordanElement,
    ) -> PbwElement {
        let four = Scalar::from_int(4);
        let four_rho = &four * &self.rho;
        self.sum(|al| {
            self.x(al)
                .anticommutator(&self.s(&self.trip(beta, al, beta1), gamma))
        })
        .add(&self.sum(|al| {
            self.x(&self.trip(beta, al, beta1))
                .anticommutator(&self.s(al, gamma))
        }))
        .scale(&-&four)
        .add(
            &self
                .x(beta)
                .anticommutator(&self.s(beta1, gamma))
                .scale(&four_rho),
        )
        .add(
            &self
                .x(beta1)
                .anticommutator(&self.s(beta, gamma))
                .scale(&four_rho),
        )
    }

    fn a1122_closed(
        &self,
        beta: &JordanElement,
        beta1: &JordanElement,
        gamma: &JordanElement,
        gamma1: &JordanElement,
    ) -> PbwElement {
        let four = Scalar::from_int(4);
        let eight = Scalar::from_int(8);
        let four_rho = &four * &self.rho;
        let eight_rho = &eight * &self.rho;
        self.sum(|al| {
            let inner = self.trip(beta, al, beta1);
            self.x(al)
                .anticommutator(&self.y(&self.trip(gamma, &inner, gamma1)))
        })
        .scale(&four)
        .add(
            &self
                .sum(|al| {
                    let inner = self.trip(beta, al, beta1);
                    self.s(al, gamma1).anticommutator(&self.s(&inner, gamma))
                })
                .scale(&eight),
        )
        .add(
            &self
                .sum(|al| {
                    self.x(&self.trip(beta, al, beta1))
                        .anticommutator(&self.y(&self.trip(gamma, al, gamma1)))
                })
                .scale(&four),
        )
        .add(
            &self
                .sum(|al| {
                    let inner = self.trip(beta, al, beta1);
                    self.s(&inner, gamma1).anticommutator(&self.s(al, gamma))
                })
                .scale(&eight),
        )
        .sub(
            &self
                .x(beta)
                .anticommutator(&self.y(&self.trip(gamma, beta1, gamma1)))
                .scale(&four_rho),
        )
        .sub(
            &self
                .s(beta, gamma1)
                .anticommutator(&self.s(beta1, gamma))
                .scale(&eight_rho),
        )
        .sub(
            &self
                .x(beta1)
                .anticommutator(&self.y(&self.trip(gamma, beta, gamma1)))
                .scale(&four_rho),
        )
        .sub(
            &self
                .s(beta1, gamma1)
                .anticommutator(&self.s(beta, gamma))
                .scale(&eight_rho),
        )
    }

    fn a11222_closed(
        &self,
        beta: &JordanElement,
        beta1: &JordanElement,
        gamma: &JordanElement,
        gamma1: &JordanElement,
        gamma2: &JordanElement,
    ) -> PbwElement {
        let eight = Scalar::from_int(8);
        let eight_rho = &eight * &self.rho;
        let t = |a: &JordanElement, b: &JordanElement, c: &JordanElement| self.trip(a, b, c);
        let sum_part = self
            .sum(|al| {
                let inner = t(beta, al, beta1);
                self.s(al, gamma2)
                    .anticommutator(&self.y(&t(gamma, &inner, gamma1)))
            })
            .add(&self.sum(|al| {
                let inner = t(beta, al, beta1);
                self.s(al, gamma1)
                    .anticommutator(&self.y(&t(gamma, &inner, gamma2)))
            }))
            .add(&self.sum(|al| {
                let inner = t(beta, al, beta1);
                self.s(&inner, gamma)
                    .anticommutator(&self.y(&t(gamma1, al, gamma2)))
            }))
            .add(&self.sum(|al| {
                let inner = t(beta, al, beta1);
                self.s(&inner, gamma2)
                    .anticommutator(&self.y(&t(gamma, al, gamma1)))
            }))
            .add(&self.sum(|al| {
                let inner = t(beta, al, beta1);
                self.s(&inner, gamma1)
                    .anticommutator(&self.y(&t(gamma, al, gamma2)))
            }))
            .add(&self.sum(|al| {
                let inner = t(beta, al, beta1);
                self.s(al, gamma)
                    .anticommutator(&self.y(&t(gamma1, &inner, gamma2)))
            }));
        let rho_part = self
            .s(beta, gamma2)
            .anticommutator(&self.y(&t(gamma, beta1, gamma1)))
            .add(
                &self
                    .s(beta, gamma1)
                    .anticommutator(&self.y(&t(gamma, beta1, gamma2))),
            )
            .add(
                &self
                    .s(beta1, gamma)
                    .anticommutator(&self.y(&t(gamma1, beta, gamma2))),
            )
            .add(
                &self
                    .s(beta1, gamma2)
                    .anticommutator(&self.y(&t(gamma, beta, gamma1))),
            )
            .add(
                &self
                    .s(beta1, gamma1)
                    .anticommutator(&self.y(&t(gamma, beta, gamma2))),
            )
            .add(
                &self
                    .s(beta, gamma)
                    .anticommutator(&self.y(&t(gamma1, beta1, gamma2))),
            );
        sum_part.scale(&-&eight).add(&rho_part.scale(&eight_rho))
    }

    fn a112222_closed(
        &self,
        beta: &JordanElement,
        beta1: &JordanElement,
        gamma: &JordanElement,
        gamma1: &JordanElement,
        gamma2: &JordanElement,
        gamma3: &JordanElement,
    ) -> PbwElement {
        let sixteen = Scalar::from_int(16);
        let sixteen_rho = &sixteen * &self.rho;
        let t = |a: &JordanElement, b: &JordanElement, c: &JordanElement| self.trip(a, b, c);
        let sum_part = self
            .sum(|al| {
                let inner = t(beta, al, beta1);
                self.y(&t(gamma2, al, gamma3))
                    .mul(&self.y(&t(gamma, &inner, gamma1)))
            })
            .add(&self.sum(|al| {
                let inner = t(beta, al, beta1);
                self.y(&t(gamma1, al, gamma3))
                    .mul(&self.y(&t(gamma, &inner, gamma2)))
            }))
            .add(&self.sum(|al| {
                let inner = t(beta, al, beta1);
                self.y(&t(gamma, &inner, gamma3))
                    .mul(&self.y(&t(gamma1, al, gamma2)))
            }))
            .add(&self.sum(|al| {
                let inner = t(beta, al, beta1);
                self.y(&t(gamma2, &inner, gamma3))
                    .mul(&self.y(&t(gamma, al, gamma1)))
            }))
            .add(&self.sum(|al| {
                let inner = t(beta, al, beta1);
                self.y(&t(gamma1, &inner, gamma3))
                    .mul(&self.y(&t(gamma, al, gamma2)))
            }))
            .add(&self.sum(|al| {
                let inner = t(beta, al, beta1);
                self.y(&t(gamma, al, gamma3))
                    .mul(&self.y(&t(gamma1, &inner, gamma2)))
            }));
        let rho_part = self
            .y(&t(gamma2, beta, gamma3))
            .mul(&self.y(&t(gamma, beta1, gamma1)))
            .add(
                &self
                    .y(&t(gamma1, beta, gamma3))
                    .mul(&self.y(&t(gamma, beta1, gamma2))),
            )
            .add(
                &self
                    .y(&t(gamma, beta1, gamma3))
                    .mul(&self.y(&t(gamma1, beta, gamma2))),
            )
            .add(
                &self
                    .y(&t(gamma2, beta1, gamma3))
                    .mul(&self.y(&t(gamma, beta, gamma1))),
            )
            .add(
                &self
                    .y(&t(gamma1, beta1, gamma3))
                    .mul(&self.y(&t(gamma, beta, gamma2))),
            )
            .add(
                &self
                    .y(&t(gamma, beta, gamma3))
                    .mul(&self.y(&t(gamma1, beta1, gamma2))),
            );
        sum_part.scale(&sixteen).sub(&rho_part.scale(&sixteen_rho))
    }
}

/// Exhaustive checks at depth ≤ 3 and seeded samples at depth ≥ 4.
pub fn verify_lemma7(ctx: &UContext) -> Result<Report> {
    let mut rep = Report::new();
    let lm = Lemma7::new(ctx)?;
    let on = lm.on.clone();
    let d = on.len();
    let mut rng = ChaCha8Rng::seed_from_u64(DEEP_SEED);

    // [Q1', L_β] = 0 for every frame basis element.
    let mut ok = true;
    let mut witness = String::new();
    for (bi, beta) in on.iter().enumerate() {
        let l_beta = ctx.l(beta)?;
        if !lm.q1p.commutator(&l_beta).is_zero() {
            ok = false;
            witness = format!("beta index {bi}");
            break;
        }
    }
    rep.check("[Q1', L] vanishes", ok, witness);

    // A_1 and A_2 closed forms, exhaustively.
    let mut ok = true;
    let mut witness = String::new();
    for (bi, beta) in on.iter().enumerate() {
        let a1 = lm.q1p.commutator(&lm.x(beta));
        if a1 != lm.a1_closed(beta) {
            ok = false;
            witness = format!("A1 at {bi}");
            break;
        }
        let a2 = lm.q1p.commutator(&lm.y(beta));
        if a2 != lm.a2_closed(beta) {
            ok = false;
            witness = format!("A2 at {bi}");
            break;
        }
    }
    rep.check("A1/A2 closed forms", ok, witness);

    // Depth-2 closed forms, exhaustively.
    let mut ok = true;
    let mut witness = String::new();
    'depth2: for (bi, beta) in on.iter().enumerate() {
        let a1 = lm.q1p.commutator(&lm.x(beta));
        let a2 = lm.q1p.commutator(&lm.y(beta));
        for (ci, other) in on.iter().enumerate() {
            if a1.commutator(&lm.x(other)) != lm.a11_closed(beta, other) {
                ok = false;
                witness = format!("A11 at ({bi},{ci})");
                break 'depth2;
            }
            if a2.commutator(&lm.y(other)) != lm.a22_closed(beta, other) {
                ok = false;
                witness = format!("A22 at ({bi},{ci})");
                break 'depth2;
            }
            if a1.commutator(&lm.y(other)) != lm.a12_closed(beta, other) {
                ok = false;
                witness = format!("A12 at ({bi},{ci})");
                break 'depth2;
            }
        }
    }
    rep.check("A11/A22/A12 closed forms", ok, witness);

    // Depth-3 vanishing, exhaustively: [A11, X] = 0 and [A22, Y] = 0.
    let mut ok = true;
    let mut witness = String::new();
    'depth3: for (bi, beta) in on.iter().enumerate() {
        for (ci, b1) in on.iter().enumerate() {
            let a11 = lm.a11_closed(beta, b1);
            let a22 = lm.a22_closed(beta, b1);
            for (di, b2) in on.iter().enumerate() {
                if !a11.commutator(&lm.x(b2)).is_zero() {
                    ok = false;
                    witness = format!("[A11, X] at ({bi},{ci},{di})");
                    break 'depth3;
                }
                if !a22.commutator(&lm.y(b2)).is_zero() {
                    ok = false;
                    witness = format!("[A22, Y] at ({bi},{ci},{di})");
                    break 'depth3;
                }
            }
        }
    }
    rep.check("[A11, X] and [A22, Y] vanish", ok, witness);

    // Depth-3 closed forms on seeded samples.
    let mut ok = true;
    let mut witness = String::new();
    for s in 0..DEEP_SAMPLES {
        let (bi, ci, di) = (
            rng.gen_range(0..d),
            rng.gen_range(0..d),
            rng.gen_range(0..d),
        );
        let (beta, gamma, gamma1) = (&on[bi], &on[ci], &on[di]);
        let a12 = lm.a12_closed(beta, gamma);
        if a12.commutator(&lm.y(gamma1)) != lm.a122_closed(beta, gamma, gamma1) {
            ok = false;
            witness = format!("A122 sample {s} at ({bi},{ci},{di})");
            break;
        }
        let a11 = lm.a11_closed(beta, gamma);
        if a11.commutator(&lm.y(gamma1)) != lm.a112_closed(beta, gamma, gamma1) {
            ok = false;
            witness = format!("A112 sample {s} at ({bi},{ci},{di})");
            break;
        }
    }
    rep.check("A122/A112 closed forms (sampled)", ok, witness);

    // Depth-4 closed forms and vanishing on seeded samples.
    let mut ok = true;
    let mut witness = String::new();
    for s in 0..DEEP_SAMPLES {
        let idx: Vec<usize> = (0..4).map(|_| rng.gen_range(0..d)).collect();
        let (beta, gamma, g1, g2) = (&on[idx[0]], &on[idx[1]], &on[idx[2]], &on[idx[3]]);
        let a122 = lm.a122_closed(beta, gamma, g1);
        let a1222 = a122.commutator(&lm.y(g2));
        if a1222 != lm.a1222_closed(beta, gamma, g1, g2) {
            ok = false;
            witness = format!("A1222 sample {s} at {idx:?}");
            break;
        }
        // [A1222, Y] = 0
        let g3 = &on[rng.gen_range(0..d)];
        if !a1222.commutator(&lm.y(g3)).is_zero() {
            ok = false;
            witness = format!("[A1222, Y] sample {s}");
            break;
        }
        let a112 = lm.a112_closed(beta, gamma, g1);
        if a112.commutator(&lm.y(g2)) != lm.a1122_closed(beta, gamma, g1, g2) {
            ok = false;
            witness = format!("A1122 sample {s} at {idx:?}");
            break;
        }
    }
    rep.check("A1222/A1122 closed forms (sampled)", ok, witness);

    // Depth-5/6 chain on seeded samples.
    let mut ok = true;
    let mut witness = String::new();
    for s in 0..DEEP_SAMPLES {
        let idx: Vec<usize> = (0..6).map(|_| rng.gen_range(0..d)).collect();
        let (beta, b1) = (&on[idx[0]], &on[idx[1]]);
        let (gamma, g1, g2, g3) = (&on[idx[2]], &on[idx[3]], &on[idx[4]], &on[idx[5]]);
        let a1122 = lm.a1122_closed(beta, b1, gamma, g1);
        let a11222 = a1122.commutator(&lm.y(g2));
        if a11222 != lm.a11222_closed(beta, b1, gamma, g1, g2) {
            ok = false;
            witness = format!("A11222 sample {s} at {idx:?}");
            break;
        }
        let a112222 = a11222.commutator(&lm.y(g3));
        if a112222 != lm.a112222_closed(beta, b1, gamma, g1, g2, g3) {
            ok = false;
            witness = format!("A112222 sample {s} at {idx:?}");
            break;
        }
        // [A112222, Y] = 0
        let g4 = &on[rng.gen_range(0..d)];
        if !a112222.commutator(&lm.y(g4)).is_zero() {
            ok = false;
            witness = format!("[A112222, Y] sample {s}");
            break;
        }
    }
    rep.check("A11222/A112222 chain (sampled)", ok, witness);

    Ok(rep)
}

/// The equivalence route between the primary element and its avatar:
/// `[[Q1, X_e], Y_e] + 4·Q1 + (2/ρ)·Q1' = 0` exactly in the enveloping
/// algebra, plus the first-bracket proportionality `[Q1', X_e] = ρ·[Q1, X_e]`.
pub fn verify_q1_equivalence(ctx: &UContext) -> Result<Report> {
    let mut rep = Report::new();
    let a = Scalar::ratio(7, 3); // arbitrary nonzero constant; must cancel
    let q = q_elements(ctx, &a, None)?;
    let e = ctx.tkk.jordan.unit_element();
    let x_e = ctx.x(&e);
    let y_e = ctx.y(&e);
    let rho = rat(ctx.rho() as i64);

    let lhs = q.q1.commutator(&x_e).commutator(&y_e);
    let total = lhs
        .add(&q.q1.scale(&Scalar::from_int(4)))
        .add(&q.q1_prime.scale(&Scalar::from_rat(rat(2) / rho.clone())));
    rep.check(
        "double bracket recovers the avatar",
        total.is_zero(),
        format!("{} terms", total.terms.len()),
    );

    let lhs = q.q1_prime.commutator(&x_e);
    let rhs = q.q1.commutator(&x_e).scale(&Scalar::from_rat(rho));
    rep.check("first brackets proportional", lhs == rhs, "mismatch");
    Ok(rep)
}

/// `[Q1, X_e] = (2/ρ)(Σ{L_α, X_α} − ρ{L_e, X_e})` as an exact identity.
pub fn verify_q1_xe_bracket(ctx: &UContext) -> Result<Report> {
    let mut rep = Report::new();
    let a = Scalar::ratio(5, 7);
    let q = q_elements(ctx, &a, None)?;
    let e = ctx.tkk.jordan.unit_element();
    let x_e = ctx.x(&e);
    let rho = rat(ctx.rho() as i64);

    let lhs = q.q1.commutator(&x_e);
    let mut sum = ctx.pbw.zero();
    for alpha in ctx.orthonormal_basis() {
        sum = sum.add(&ctx.l(&alpha)?.anticommutator(&ctx.x(&alpha)));
    }
    let rhs = sum
        .sub(
            &ctx.l(&e)?
                .anticommutator(&x_e)
                .scale(&Scalar::from_rat(rho.clone())),
        )
        .scale(&Scalar::from_rat(rat(2) / rho));
    rep.check("commutator matches the closed form", lhs == rhs, "mismatch");
    Ok(rep)
}
