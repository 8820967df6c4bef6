//! The isomorphism `φ: co(Γ(m)) → so(2, m+1)`, assembled from the displayed
//! generator images and verified exactly as a bijective bracket-preserving
//! map.

use crate::error::{Error, Result};
use crate::exactnum::{ratio, Scalar};
use crate::jordan::{build_jordan, BasisVector, JordanElement, JordanKind};
use crate::linalg::Matrix;
use crate::report::Report;
use crate::tkk::{build_tkk, LieElement, TkkAlgebra};

use super::so2m::{so2m_algebra, So2mAlgebra};

pub struct PhiIso {
    pub tkk: TkkAlgebra,
    pub so2m: So2mAlgebra,
    /// Columns are the images of the conformal-algebra basis.
    pub matrix: Matrix,
    inverse: Matrix,
}

impl PhiIso {
    pub fn apply(&self, x: &LieElement) -> LieElement {
        self.so2m.lie.element(self.matrix.apply(&x.coeffs))
    }

    pub fn apply_inverse(&self, y: &LieElement) -> LieElement {
        self.tkk.lie.element(self.inverse.apply(&y.coeffs))
    }

    /// Image of `L_{(λ, u)}`: `−i(−λ·M_{−1,m+1} + Σ u_t·M_{0,t})`.
    pub fn phi_l(&self, u: &JordanElement) -> LieElement {
        let m = self.so2m.m as i64;
        let minus_i = -Scalar::i();
        let mut out = self
            .so2m
            .m_element(-1, m + 1)
            .scale(&minus_i.scale(&ratio(-1, 1)))
            .scale(&u.coeffs[0].clone());
        for t in 1..u.coeffs.len() {
            if u.coeffs[t].is_zero() {
                continue;
            }
            out = out.add(
                &self
                    .so2m
                    .m_element(0, t as i64)
                    .scale(&minus_i)
                    .scale(&u.coeffs[t]),
            );
        }
        out
    }

    /// Bijectivity plus bracket preservation on every basis pair, and exact
    /// reproduction of the six displayed frame images.
    pub fn verify(&self) -> Report {
        let mut rep = Report::new();
        let dim = self.tkk.lie.dim;

        rep.check(
            "dimension match",
            dim == self.so2m.dim(),
            format!("{} vs {}", dim, self.so2m.dim()),
        );

        // φ bijective (exact inverse was computed during construction).
        rep.check(
            "bijective",
            self.matrix.matmul(&self.inverse) == Matrix::identity(dim),
            "inverse round trip",
        );

        let mut ok = true;
        let mut witness = String::new();
        'outer: for a in 0..dim {
            for b in (a + 1)..dim {
                let ea = self.tkk.lie.basis_element(a);
                let eb = self.tkk.lie.basis_element(b);
                let lhs = self.apply(&self.tkk.lie.bracket(&ea, &eb));
                let rhs = self.so2m.lie.bracket(&self.apply(&ea), &self.apply(&eb));
                if lhs != rhs {
                    ok = false;
                    witness = format!(
                        "({}, {})",
                        self.tkk.lie.label_names[a], self.tkk.lie.label_names[b]
                    );
                    break 'outer;
                }
            }
        }
        rep.check(format!("homomorphism ({dim}x{dim} pairs)"), ok, witness);

        rep.merge(self.verify_displayed_images());
        rep
    }

    /// The six displayed images of the frame generators.
    fn verify_displayed_images(&self) -> Report {
        let mut rep = Report::new();
        let m = self.so2m.m as i64;
        let jordan = &self.tkk.jordan;
        let frame = crate::jordan::jordan_frame(jordan);
        let half_i = Scalar::i().scale(&ratio(-1, 2));

        let sum4 =
            |a: &LieElement, b: &LieElement, c: &LieElement, d: &LieElement| a.add(b).add(c).add(d);

        let m01 = self.so2m.m_element(-1, 0);
        let m11 = self.so2m.m_element(-1, 1);
        let m0m = self.so2m.m_element(0, m + 1);
        let m1m = self.so2m.m_element(1, m + 1);

        let e11 = &frame.diag[0];
        let e22 = &frame.diag[1];
        let expect = [
            (
                "X(e11)",
                self.apply(&self.tkk.x_element(e11)),
                sum4(&m01, &m11, &m0m, &m1m).scale(&half_i),
            ),
            (
                "X(e22)",
                self.apply(&self.tkk.x_element(e22)),
                sum4(&m01, &m11.neg(), &m0m, &m1m.neg()).scale(&half_i),
            ),
            (
                "Y(e11)",
                self.apply(&self.tkk.y_element(e11)),
                sum4(&m01, &m11.neg(), &m0m.neg(), &m1m).scale(&half_i),
            ),
            (
                "Y(e22)",
                self.apply(&self.tkk.y_element(e22)),
                sum4(&m01, &m11, &m0m.neg(), &m1m.neg()).scale(&half_i),
            ),
        ];
        for (label, got, want) in expect {
            rep.check(format!("displayed image {label}"), got == want, label);
        }

        // X/Y of the off-diagonal frame vectors, for every μ.
        let inv_sqrt2_i = Scalar::i().scale(&ratio(-1, 1)) * Scalar::sqrt(2).scale(&ratio(1, 2));
        let mut ok = true;
        let mut witness = String::new();
        for (_, _, mu, e12mu) in &frame.off {
            let t = (*mu as i64) + 1;
            let want_x = self
                .so2m
                .m_element(-1, t)
                .add(&self.so2m.m_element(t, m + 1))
                .scale(&inv_sqrt2_i);
            let want_y = self
                .so2m
                .m_element(-1, t)
                .neg()
                .add(&self.so2m.m_element(t, m + 1))
                .scale(&inv_sqrt2_i);
            if self.apply(&self.tkk.x_element(e12mu)) != want_x
                || self.apply(&self.tkk.y_element(e12mu)) != want_y
            {
                ok = false;
                witness = format!("e12^{mu}");
                break;
            }
        }
        rep.check("displayed images X/Y(e12^mu)", ok, witness);
        rep
    }
}

/// Build `φ` from the displayed images of `X_e`, `Y_e`, `L_u` and the
/// bracket-derived images of the remaining generators.
pub fn phi_iso(m: usize) -> Result<PhiIso> {
    let jordan = build_jordan(JordanKind::SpinFactor, m)?;
    let tkk = build_tkk(&jordan)?;
    let so2m = so2m_algebra(m)?;
    if tkk.lie.dim != so2m.dim() {
        return Err(Error::DimensionMismatch(format!(
            "co(spin({m})) has dim {}, so(2,{}) has dim {}",
            tkk.lie.dim,
            m + 1,
            so2m.dim()
        )));
    }
    let dim = tkk.lie.dim;
    let d = jordan.dim;
    let minus_i = -Scalar::i();
    let mi = m as i64;

    let phi_x_e = so2m
        .m_element(-1, 0)
        .add(&so2m.m_element(0, mi + 1))
        .scale(&minus_i);
    let phi_y_e = so2m
        .m_element(-1, 0)
        .sub(&so2m.m_element(0, mi + 1))
        .scale(&minus_i);

    // φ(L_b) straight from the displayed formula.
    let phi_l = |b: usize| -> LieElement {
        match jordan.basis[b] {
            BasisVector::SpinUnit => so2m.m_element(-1, mi + 1).scale(&Scalar::i()),
            BasisVector::SpinVec(t) => so2m.m_element(0, t as i64).scale(&minus_i),
            _ => unreachable!(),
        }
    };

    // X_b = [L_b, X_e] and Y_b = −[L_b, Y_e]; the same identities are
    // verified on the conformal side before being used.
    let e = jordan.unit_element();
    let x_e = tkk.x_element(&e);
    let y_e = tkk.y_element(&e);
    let mut phi_x = Vec::with_capacity(d);
    let mut phi_y = Vec::with_capacity(d);
    for bidx in 0..d {
        let bel = jordan.basis_element(bidx);
        let l_b = tkk.l_element(&bel)?;
        if tkk.lie.bracket(&l_b, &x_e) != tkk.x_element(&bel) {
            return Err(Error::Consistency("X_b != [L_b, X_e]".into()));
        }
        if tkk.lie.bracket(&l_b, &y_e) != tkk.y_element(&bel).neg() {
            return Err(Error::Consistency("Y_b != -[L_b, Y_e]".into()));
        }
        phi_x.push(so2m.lie.bracket(&phi_l(bidx), &phi_x_e));
        phi_y.push(so2m.lie.bracket(&phi_l(bidx), &phi_y_e).neg());
    }

    // φ on the str block through provenance: S = Σ c·S_{αβ} and
    // φ(S_{αβ}) = −½[φ(X_α), φ(Y_β)].
    let mut columns: Vec<LieElement> = Vec::with_capacity(dim);
    columns.extend(phi_x.iter().cloned());
    let half = Scalar::ratio(1, 2);
    for k in 0..tkk.str_dim() {
        let mut img = so2m.lie.zero_element();
        for (cand, coeff) in &tkk.str_alg.provenance[k] {
            let alpha = cand / d;
            let beta = cand % d;
            let br = so2m
                .lie
                .bracket(&phi_x[alpha], &phi_y[beta])
                .scale(&-half.clone());
            img = img.add(&br.scale(coeff));
        }
        columns.push(img);
    }
    columns.extend(phi_y.iter().cloned());

    let matrix = Matrix::from_fn(dim, dim, |r, c| columns[c].coeffs[r].clone());
    let inverse = matrix
        .inverse()
        .ok_or_else(|| Error::Consistency("phi is singular".into()))?;

    Ok(PhiIso {
        tkk,
        so2m,
        matrix,
        inverse,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn phi_is_an_isomorphism_small() {
        let phi = phi_iso(2).unwrap();
        let rep = phi.verify();
        assert!(rep.all_passed(), "{:?}", rep.first_failure());
    }

    #[test]
    fn phi_l_images() {
        let phi = phi_iso(3).unwrap();
        let e = phi.tkk.jordan.unit_element();
        let img = phi.apply(&phi.tkk.l_element(&e).unwrap());
        assert_eq!(img, phi.phi_l(&e));
    }
}
