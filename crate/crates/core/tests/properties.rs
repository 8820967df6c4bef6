//! Randomized exact-arithmetic properties of the scalar field and the
//! composition algebras.

use proptest::prelude::*;

use tkklab_core::exactnum::{ratio, CompElement, Division, Gaussian, Rat, Scalar};

fn rat_strategy() -> impl Strategy<Value = Rat> {
    (-9i64..=9, prop::sample::select(vec![1i64, 2, 3])).prop_map(|(n, d)| ratio(n, d))
}

/// Scalars over the radicands {1, 2, 3, 5} with Gaussian coefficients.
fn scalar_strategy() -> impl Strategy<Value = Scalar> {
    prop::collection::vec((rat_strategy(), rat_strategy()), 4).prop_map(|coeffs| {
        let mut acc = Scalar::zero();
        for (m, (re, im)) in [1u64, 2, 3, 5].iter().zip(coeffs) {
            acc += &Scalar::from_gaussian(*m, Gaussian::new(re, im));
        }
        acc
    })
}

fn comp_strategy(tag: Division) -> impl Strategy<Value = CompElement> {
    prop::collection::vec(rat_strategy(), 8).prop_map(move |coeffs| {
        let mut c = CompElement::zero(tag);
        for (slot, v) in coeffs.into_iter().enumerate().take(tag.unit_count()) {
            c.coeffs[slot] = v;
        }
        c
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn scalar_field_axioms(a in scalar_strategy(), b in scalar_strategy(), c in scalar_strategy()) {
        // commutativity and associativity
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        // distributivity
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        // inverses
        if !a.is_zero() {
            prop_assert_eq!(&a * &a.inv().unwrap(), Scalar::one());
        }
    }

    #[test]
    fn composition_norm_is_multiplicative(
        x in comp_strategy(Division::O),
        y in comp_strategy(Division::O),
    ) {
        let xy = &x * &y;
        prop_assert_eq!(xy.norm(), x.norm() * y.norm());
    }

    #[test]
    fn norm_multiplicative_every_tag(seed in rat_strategy()) {
        for tag in [Division::R, Division::C, Division::H, Division::O] {
            let mut x = CompElement::zero(tag);
            let mut y = CompElement::zero(tag);
            for s in 0..tag.unit_count() {
                x.coeffs[s] = &seed + ratio(s as i64, 1);
                y.coeffs[s] = &seed - ratio(2 * s as i64, 3);
            }
            let xy = &x * &y;
            prop_assert_eq!(xy.norm(), x.norm() * y.norm());
        }
    }

    #[test]
    fn octonion_alternativity(
        x in comp_strategy(Division::O),
        y in comp_strategy(Division::O),
    ) {
        // x(xy) = (xx)y and (yx)x = y(xx)
        prop_assert_eq!(&x * &(&x * &y), &(&x * &x) * &y);
        prop_assert_eq!(&(&y * &x) * &x, &y * &(&x * &x));
    }

    #[test]
    fn scalar_json_round_trip(a in scalar_strategy()) {
        let json = a.to_json();
        prop_assert_eq!(Scalar::from_json(&json).unwrap(), a);
    }
}

#[test]
fn associativity_fails_on_octonion_witness() {
    let i = CompElement::unit(Division::O, 1);
    let j = CompElement::unit(Division::O, 2);
    let l = CompElement::unit(Division::O, 4);
    assert_ne!(&(&i * &j) * &l, &i * &(&j * &l));
}

#[test]
fn octonion_table_matches_golden() {
    let table = tkklab_core::exactnum::octonion_table();
    let rows: Vec<Vec<serde_json::Value>> = table
        .iter()
        .map(|row| {
            row.iter()
                .map(|(idx, sign)| serde_json::json!([idx, sign]))
                .collect()
        })
        .collect();
    let got = format!("{}\n", serde_json::json!(rows));
    let path = format!(
        "{}/tests/golden/octonion_table.json",
        env!("CARGO_MANIFEST_DIR")
    );
    let want = std::fs::read_to_string(path).expect("golden table");
    assert_eq!(got, want);
}
