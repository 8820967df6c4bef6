//! Normal-form calculus in the enveloping algebra of the conformal algebra:
//! the quadratic elements, the nested commutator identities, and
//! highest-weight-vector evaluation.

mod lemma7;
mod pbw;
mod qelems;

pub use lemma7::{verify_lemma7, verify_q1_equivalence, verify_q1_xe_bracket, DEEP_SAMPLES};
pub use pbw::{
    hw_eval, normal_form, normalize_rightmost, HwEvalResult, PbwAlgebra, PbwElement, PbwTag,
};
pub use qelems::{build_context, q_elements, QElements, UContext};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{ratio, Rat, Scalar};
    use crate::jordan::JordanKind;
    use rand::Rng;
    use rand_chacha::rand_core::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn degree_one_brackets_match_tensor() {
        // normal_form(xy) − normal_form(yx) = [x, y] for random basis pairs.
        let ctx = build_context(JordanKind::HermR, 2).unwrap();
        let pbw = &ctx.pbw;
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..100 {
            let a = rng.gen_range(0..pbw.dim()) as u16;
            let b = rng.gen_range(0..pbw.dim()) as u16;
            let xy = normal_form(pbw, &[a, b]);
            let yx = normal_form(pbw, &[b, a]);
            let mut bracket = pbw.zero();
            for (g, s) in pbw.bracket_row(a as usize, b as usize) {
                bracket =
                    bracket.add(&pbw.constant(s.clone()).mul(&normal_form(pbw, &[*g as u16])));
            }
            assert_eq!(xy.sub(&yx), bracket);
        }
    }

    #[test]
    fn ordered_monomials_are_fixed_points() {
        let ctx = build_context(JordanKind::HermR, 2).unwrap();
        let pbw = &ctx.pbw;
        let word = vec![0u16, 1, 1, 5];
        let nf = normal_form(pbw, &word);
        assert_eq!(nf.terms.len(), 1);
        assert!(nf.terms.contains_key(&word));
        // idempotence: renormalizing a normal form is the identity
        let twice: Vec<_> = nf
            .terms
            .iter()
            .map(|(m, c)| normal_form(pbw, m).scale(c))
            .collect();
        let mut acc = pbw.zero();
        for t in twice {
            acc = acc.add(&t);
        }
        assert_eq!(acc, nf);
    }

    #[test]
    fn normal_ordering_never_raises_degree() {
        let ctx = build_context(JordanKind::HermR, 2).unwrap();
        let pbw = &ctx.pbw;
        let mut rng = ChaCha8Rng::seed_from_u64(41);
        for _ in 0..50 {
            let len = rng.gen_range(1..=4);
            let word: Vec<u16> = (0..len)
                .map(|_| rng.gen_range(0..pbw.dim()) as u16)
                .collect();
            assert!(normal_form(pbw, &word).degree() <= len);
        }
    }

    #[test]
    fn confluence_on_random_words() {
        // Two rewrite orders agree on 100 seeded random degree ≤ 4 words.
        let ctx = build_context(JordanKind::HermR, 2).unwrap();
        let pbw = &ctx.pbw;
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..100 {
            let len = rng.gen_range(1..=4);
            let word: Vec<u16> = (0..len)
                .map(|_| rng.gen_range(0..pbw.dim()) as u16)
                .collect();
            let left = normal_form(pbw, &word);
            let right = normalize_rightmost(pbw, word, Scalar::one());
            assert_eq!(left.terms, right);
        }
    }

    #[test]
    fn x_y_bracket_in_normal_form() {
        // X_e·Y_e − Y_e·X_e = −2·(coordinates of S_ee = L_e).
        let ctx = build_context(JordanKind::HermR, 2).unwrap();
        let e = ctx.tkk.jordan.unit_element();
        let x = ctx.x(&e);
        let y = ctx.y(&e);
        let l = ctx.l(&e).unwrap();
        assert_eq!(x.commutator(&y), l.scale(&Scalar::from_int(-2)));
    }

    #[test]
    fn hw_eval_splits_and_reassembles() {
        let ctx = build_context(JordanKind::HermR, 2).unwrap();
        let a = Scalar::ratio(1, 1);
        let q = q_elements(&ctx, &a, None).unwrap();
        let lambda = vec![ratio(-1, 2), ratio(-1, 2)];
        let res = hw_eval(&q.q1, &lambda).unwrap();
        let reassembled = res.cartan_part.add(&res.residual).add(&res.positive_part);
        assert_eq!(reassembled, q.q1);
        // linearity in P
        let res2 = hw_eval(&q.q1.scale(&Scalar::from_int(3)), &lambda).unwrap();
        assert_eq!(
            res2.scalar_part,
            res.scalar_part.scale(&crate::exactnum::rat(3))
        );
    }

    #[test]
    fn positive_products_annihilate() {
        let ctx = build_context(JordanKind::HermR, 2).unwrap();
        let pbw = &ctx.pbw;
        // product of two positive-tagged generators has zero scalar part
        let pos: Vec<usize> = (0..pbw.dim())
            .filter(|&i| matches!(pbw.tags[i], PbwTag::Positive))
            .collect();
        let word = vec![pos[0] as u16, pos[1] as u16];
        let p = normal_form(pbw, &word);
        let lambda = vec![ratio(-1, 2), ratio(-3, 2)];
        let res = hw_eval(&p, &lambda).unwrap();
        assert!(res.scalar_part.is_zero());
        // H_α acts by λ(H_α)
        let cart: Vec<usize> = (0..pbw.dim())
            .filter(|&i| matches!(pbw.tags[i], PbwTag::Cartan(_)))
            .collect();
        let h = normal_form(pbw, &[cart[0] as u16]);
        let res = hw_eval(&h, &lambda).unwrap();
        if let PbwTag::Cartan(f) = &pbw.tags[cart[0]] {
            let expect: Rat = f.iter().zip(lambda.iter()).map(|(a, b)| a * b).sum();
            assert_eq!(res.scalar_part, Scalar::from_rat(expect));
        }
    }

    #[test]
    fn sp3_primary_relation_vanishes_at_both_weights() {
        // a = 15/16 from the quadratic equation at λ = −(1/2, 1/2, 1/2):
        // (Σλ)² + (n+1)Σλ + 4a = 9/4 − 6 + 4a = 0.
        let ctx = build_context(JordanKind::HermR, 3).unwrap();
        let a = Scalar::ratio(15, 16);
        let q = q_elements(&ctx, &a, None).unwrap();
        for lam_n in [ratio(-1, 2), ratio(-3, 2)] {
            let lambda = vec![ratio(-1, 2), ratio(-1, 2), lam_n.clone()];
            let res = hw_eval(&q.q1, &lambda).unwrap();
            assert!(res.scalar_part.is_zero(), "lambda_n = {lam_n}");
        }
        // zero weight forces a = 0: at a = 15/16 the scalar part is exactly a.
        let zero = vec![ratio(0, 1); 3];
        let res = hw_eval(&q.q1, &zero).unwrap();
        assert_eq!(res.scalar_part, a);
    }

    #[test]
    fn q1_equivalence_and_xe_bracket() {
        let ctx = build_context(JordanKind::HermR, 2).unwrap();
        let rep = verify_q1_equivalence(&ctx).unwrap();
        assert!(rep.all_passed(), "{:?}", rep.first_failure());
        let rep = verify_q1_xe_bracket(&ctx).unwrap();
        assert!(rep.all_passed(), "{:?}", rep.first_failure());
    }

    #[test]
    fn lemma7_smallest_case() {
        let ctx = build_context(JordanKind::HermC, 2).unwrap();
        let rep = verify_lemma7(&ctx).unwrap();
        assert!(rep.all_passed(), "{:?}", rep.first_failure());
    }
}
