//! The quadratic elements of the enveloping algebra: the primary relation
//! element, its equivalent avatar, and the secondary relation elements.
//!
//! Orthonormal-basis sums are folded through the exact identity
//! `Σ_orthonormal T(e_α)² = ρ·Σ_frame T(b)²` for quadratic `T`, which keeps
//! every coefficient in the Gaussian rationals.

use std::sync::Arc;

use crate::cartan::{cartan_basis_tkk, CartanBasis};
use crate::error::Result;
use crate::exactnum::{rat, Scalar};
use crate::jordan::{build_jordan, jmul, jordan_frame, JordanElement, JordanKind};
use crate::tkk::{build_tkk, TkkAlgebra};

use super::pbw::{PbwAlgebra, PbwElement};

/// Everything needed to compute in `U(co(J))` with a triangular split.
pub struct UContext {
    pub tkk: TkkAlgebra,
    pub cartan: CartanBasis,
    pub pbw: Arc<PbwAlgebra>,
}

pub fn build_context(kind: JordanKind, n: usize) -> Result<UContext> {
    if kind == JordanKind::SpinFactor {
        // The spin-factor triangular split lives on the orthogonal
        // realization; its quadratic-element calculus goes through the
        // isomorphism instead (see the acceptance checks).
        return Err(crate::error::Error::Unsupported(
            "enveloping-algebra contexts are built for the matrix kinds".into(),
        ));
    }
    let jordan = build_jordan(kind, n)?;
    let tkk = build_tkk(&jordan)?;
    let cartan = cartan_basis_tkk(&tkk)?;
    let pbw = PbwAlgebra::from_cartan(&cartan)?;
    Ok(UContext { tkk, cartan, pbw })
}

impl UContext {
    pub fn x(&self, u: &JordanElement) -> PbwElement {
        self.pbw.from_lie(&self.tkk.x_element(u))
    }

    pub fn y(&self, u: &JordanElement) -> PbwElement {
        self.pbw.from_lie(&self.tkk.y_element(u))
    }

    pub fn l(&self, u: &JordanElement) -> Result<PbwElement> {
        Ok(self.pbw.from_lie(&self.tkk.l_element(u)?))
    }

    pub fn s(&self, u: &JordanElement, v: &JordanElement) -> Result<PbwElement> {
        Ok(self.pbw.from_lie(&self.tkk.s_element(u, v)?))
    }

    pub fn rho(&self) -> usize {
        self.tkk.jordan.rank_degree().expect("built algebra").0
    }

    /// Frame-aligned orthogonal basis with `<b|b> = 1/ρ`; scaling by `√ρ`
    /// gives the orthonormal basis.
    pub fn orthogonal_basis(&self) -> Vec<JordanElement> {
        let alg = &self.tkk.jordan;
        match alg.kind {
            JordanKind::SpinFactor => {
                let f = jordan_frame(alg);
                let mut out = f.diag;
                out.extend(f.off.into_iter().map(|(_, _, _, e)| e));
                out
            }
            _ => (0..alg.dim).map(|i| alg.basis_element(i)).collect(),
        }
    }

    /// Orthonormal basis `{√ρ·b}`.
    pub fn orthonormal_basis(&self) -> Vec<JordanElement> {
        let sq = Scalar::sqrt(self.rho() as u64);
        self.orthogonal_basis()
            .into_iter()
            .map(|b| b.scale(&sq))
            .collect()
    }
}

pub struct QElements {
    pub q1: PbwElement,
    pub q1_prime: PbwElement,
    pub q2: PbwElement,
    pub q3: Option<PbwElement>,
    pub q4: Option<PbwElement>,
}

/// Build the quadratic elements at constant `a`; `u` is required for the
/// third and fourth relations.
pub fn q_elements(ctx: &UContext, a: &Scalar, u: Option<&JordanElement>) -> Result<QElements> {
    let alg = &ctx.tkk.jordan;
    let e = alg.unit_element();
    let rho = rat(ctx.rho() as i64);
    let basis = ctx.orthogonal_basis();

    let l_e = ctx.l(&e)?;
    let x_e = ctx.x(&e);
    let y_e = ctx.y(&e);
    let half = Scalar::ratio(1, 2);
    let two = Scalar::from_int(2);

    // Q1 = (2/ρ)·Σ_orthonormal L² − L_e² − ½{X_e, Y_e} + a
    //    = 2·Σ_frame L_b² − L_e² − ½{X_e, Y_e} + a
    let mut sum_l2 = ctx.pbw.zero();
    for b in &basis {
        sum_l2 = sum_l2.add(&ctx.l(b)?.square());
    }
    let q1 = sum_l2
        .scale(&two)
        .sub(&l_e.square())
        .sub(&x_e.anticommutator(&y_e).scale(&half))
        .add(&ctx.pbw.constant(a.clone()));

    // Q1' = Σ_orthonormal {X, Y} − 2ρ(L_e² + a) = ρ·Σ_frame {X_b, Y_b} − 2ρ(L_e² + a)
    let mut sum_xy = ctx.pbw.zero();
    for b in &basis {
        sum_xy = sum_xy.add(&ctx.x(b).anticommutator(&ctx.y(b)));
    }
    let q1_prime = sum_xy.scale(&Scalar::from_rat(rho.clone())).sub(
        &l_e.square()
            .add(&ctx.pbw.constant(a.clone()))
            .scale(&Scalar::from_rat(&rho * rat(2))),
    );

    // Q2 = Σ_orthonormal X² − ρX_e² = ρ(Σ_frame X_b² − X_e²)
    let mut sum_x2 = ctx.pbw.zero();
    for b in &basis {
        sum_x2 = sum_x2.add(&ctx.x(b).square());
    }
    let q2 = sum_x2
        .sub(&x_e.square())
        .scale(&Scalar::from_rat(rho.clone()));

    let q3 = match u {
        Some(u) => {
            // Q3 = Σ_orthonormal {X_α, X_{α·u}} − ρ{X_e, X_u}
            //    = ρ(Σ_frame {X_b, X_{b·u}} − {X_e, X_u})
            let mut sum = ctx.pbw.zero();
            for b in &basis {
                let bu = jmul(b, u)?;
                sum = sum.add(&ctx.x(b).anticommutator(&ctx.x(&bu)));
            }
            Some(
                sum.sub(&x_e.anticommutator(&ctx.x(u)))
                    .scale(&Scalar::from_rat(rho.clone())),
            )
        }
        None => None,
    };

    let q4 = match u {
        Some(u) => {
            // Q4 = (2/ρ)Σ{L_α, L_{α·u² − u(u·α)}} + (4/ρ)Σ[L_u, L_α]²
            //      + {X_u, Y_u} − ½{X_{u²}, Y_e} − ½{X_e, Y_{u²}}
            let u2 = jmul(u, u)?;
            let l_u = ctx.l(u)?;
            let mut first = ctx.pbw.zero();
            let mut second = ctx.pbw.zero();
            for b in &basis {
                let w = jmul(b, &u2)?.sub(&jmul(u, &jmul(u, b)?)?);
                first = first.add(&ctx.l(b)?.anticommutator(&ctx.l(&w)?));
                let comm = l_u.commutator(&ctx.l(b)?);
                second = second.add(&comm.square());
            }
            let q4 = first
                .scale(&two)
                .add(&second.scale(&Scalar::from_int(4)))
                .add(&ctx.x(u).anticommutator(&ctx.y(u)))
                .sub(&ctx.x(&u2).anticommutator(&y_e).scale(&half))
                .sub(&x_e.anticommutator(&ctx.y(&u2)).scale(&half));
            Some(q4)
        }
        None => None,
    };

    Ok(QElements {
        q1,
        q1_prime,
        q2,
        q3,
        q4,
    })
}
