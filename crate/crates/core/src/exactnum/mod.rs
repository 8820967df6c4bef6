//! Exact coefficient arithmetic: the scalar field `Q(i, √m)` and the
//! composition algebras whose units fill Hermitian matrix entries.

pub mod comp;
pub mod scalar;

pub use comp::{octonion_table, CompElement, CompScalar, Division, UNIT_NAMES};
pub use scalar::{rat, ratio, Gaussian, Rat, Scalar};

use rand::Rng;

/// Seeded random rational with numerator in `[-9, 9]` and denominator in
/// `{1, 2, 3}`; the sampling scheme used by every randomized exact check.
pub fn random_rat<R: Rng>(rng: &mut R) -> Rat {
    let n = rng.gen_range(-9i64..=9);
    let d = *[1i64, 2, 3].get(rng.gen_range(0..3)).unwrap();
    ratio(n, d)
}

/// Random rational-valued scalar (radicand 1 only).
pub fn random_rational_scalar<R: Rng>(rng: &mut R) -> Scalar {
    Scalar::from_rat(random_rat(rng))
}

/// Random scalar over the radicands `{1, 2, 3, 5}` with optional imaginary
/// parts; used by the field-axiom suites.
pub fn random_scalar<R: Rng>(rng: &mut R) -> Scalar {
    let mut acc = Scalar::zero();
    for m in [1u64, 2, 3, 5] {
        if rng.gen_bool(0.5) {
            let g = Gaussian::new(random_rat(rng), random_rat(rng));
            acc += &Scalar::from_gaussian(m, g);
        }
    }
    acc
}
