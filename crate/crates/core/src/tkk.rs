//! The structure algebra `str(J) = span{S_uv}` and the conformal algebra
//! `co(J) = J ⊕ str(J) ⊕ J*` as structure-constant Lie algebras, with the
//! `X/Y/S/L/E±/h` generator calculus and exact bracket verification.
//!
//! The coefficient field is the complexified scalar field throughout, so the
//! `i`-laden generator formulas downstream need no separate realification.

use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;
use serde_json::{Map as JsonMap, Value};

use crate::error::{Error, Result};
use crate::exactnum::Scalar;
use crate::jordan::{jmul, lmul_op, JordanAlgebra, JordanElement, JordanKind};
use crate::linalg::{EchelonBasis, Matrix};
use crate::report::Report;

/// Structured label of a basis vector in a structure-constant Lie algebra.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum LieLabel {
    /// `X_u` for a Jordan basis vector.
    X(usize),
    /// Structure-algebra basis element.
    S(usize),
    /// `Y_v` for a Jordan basis vector.
    Y(usize),
    /// Abstract generator (used by the orthogonal realizations).
    Named(String),
}

/// A Lie algebra given by its basis and exact structure constants.
pub struct LieAlgebra {
    pub name: String,
    pub dim: usize,
    pub labels: Vec<LieLabel>,
    pub label_names: Vec<String>,
    /// Sparse rows: entry `α·dim + β` holds `[e_α, e_β]`.
    brackets: Vec<Vec<(usize, Scalar)>>,
}

impl fmt::Debug for LieAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LieAlgebra({}, dim={})", self.name, self.dim)
    }
}

impl LieAlgebra {
    pub fn new(
        name: String,
        labels: Vec<LieLabel>,
        label_names: Vec<String>,
        brackets: Vec<Vec<(usize, Scalar)>>,
    ) -> Arc<Self> {
        let dim = labels.len();
        assert_eq!(brackets.len(), dim * dim);
        Arc::new(LieAlgebra {
            name,
            dim,
            labels,
            label_names,
            brackets,
        })
    }

    pub fn bracket_basis(&self, a: usize, b: usize) -> &[(usize, Scalar)] {
        &self.brackets[a * self.dim + b]
    }

    pub fn element(self: &Arc<Self>, coeffs: Vec<Scalar>) -> LieElement {
        assert_eq!(coeffs.len(), self.dim);
        LieElement {
            alg: Arc::clone(self),
            coeffs,
        }
    }

    pub fn zero_element(self: &Arc<Self>) -> LieElement {
        self.element(vec![Scalar::zero(); self.dim])
    }

    pub fn basis_element(self: &Arc<Self>, idx: usize) -> LieElement {
        let mut coeffs = vec![Scalar::zero(); self.dim];
        coeffs[idx] = Scalar::one();
        self.element(coeffs)
    }

    /// `[x, y]` through the structure-constant tensor.
    pub fn bracket(self: &Arc<Self>, x: &LieElement, y: &LieElement) -> LieElement {
        let mut out = vec![Scalar::zero(); self.dim];
        for (a, ca) in x.coeffs.iter().enumerate() {
            if ca.is_zero() {
                continue;
            }
            for (b, cb) in y.coeffs.iter().enumerate() {
                if cb.is_zero() {
                    continue;
                }
                let f = ca * cb;
                for (g, s) in self.bracket_basis(a, b) {
                    let d = s * &f;
                    out[*g] += &d;
                }
            }
        }
        self.element(out)
    }

    pub fn verify_antisymmetry(&self) -> Report {
        let mut rep = Report::new();
        let mut ok = true;
        let mut witness = String::new();
        'outer: for a in 0..self.dim {
            for b in 0..=a {
                let ab = self.bracket_basis(a, b);
                let ba = self.bracket_basis(b, a);
                let mut neg: Vec<(usize, Scalar)> = ba.iter().map(|(g, s)| (*g, -s)).collect();
                neg.sort_by_key(|(g, _)| *g);
                let mut ab_sorted = ab.to_vec();
                ab_sorted.sort_by_key(|(g, _)| *g);
                if ab_sorted != neg {
                    ok = false;
                    witness = format!(
                        "[{}, {}] != -[{}, {}]",
                        self.label_names[a],
                        self.label_names[b],
                        self.label_names[b],
                        self.label_names[a]
                    );
                    break 'outer;
                }
            }
        }
        rep.check("bracket antisymmetry", ok, witness);
        rep
    }

    /// Jacobi over all basis triples `a < b < c`, in parallel, with a
    /// deterministic (sorted) witness. Together with exact antisymmetry the
    /// restriction to distinct ordered triples is exhaustive.
    pub fn verify_jacobi(&self) -> Report {
        let mut rep = Report::new();
        let anti = self.verify_antisymmetry();
        let anti_ok = anti.all_passed();
        rep.merge(anti);

        let dim = self.dim;
        let triples: Vec<(usize, usize, usize)> = (0..dim)
            .flat_map(|a| ((a + 1)..dim).flat_map(move |b| ((b + 1)..dim).map(move |c| (a, b, c))))
            .collect();
        let mut failures: Vec<(usize, usize, usize)> = triples
            .par_iter()
            .filter(|&&(a, b, c)| !self.jacobi_holds(a, b, c))
            .cloned()
            .collect();
        failures.sort();
        let count = triples.len();
        if failures.is_empty() && anti_ok {
            rep.pass(format!("jacobi identity ({count} triples)"));
        } else if let Some((a, b, c)) = failures.first() {
            rep.fail(
                format!(
                    "jacobi identity ({count} triples, {} failed)",
                    failures.len()
                ),
                format!(
                    "({}, {}, {})",
                    self.label_names[*a], self.label_names[*b], self.label_names[*c]
                ),
            );
        }
        rep
    }

    fn jacobi_holds(&self, a: usize, b: usize, c: usize) -> bool {
        let mut acc = vec![Scalar::zero(); self.dim];
        let mut add_term = |x: usize, y: usize, z: usize| {
            for (g, s) in self.bracket_basis(x, y) {
                for (h, t) in self.bracket_basis(*g, z) {
                    let d = s * t;
                    acc[*h] += &d;
                }
            }
        };
        add_term(a, b, c);
        add_term(b, c, a);
        add_term(c, a, b);
        acc.iter().all(|s| s.is_zero())
    }

    /// `{basis: [...], brackets: {"a,b": {"g": scalar}}}` with `a < b` rows
    /// only (antisymmetry supplies the rest); all keys sorted.
    pub fn structure_json(&self) -> Value {
        let mut brackets = JsonMap::new();
        for a in 0..self.dim {
            for b in (a + 1)..self.dim {
                let row = self.bracket_basis(a, b);
                if row.is_empty() {
                    continue;
                }
                let mut inner = JsonMap::new();
                for (g, s) in row {
                    inner.insert(g.to_string(), s.to_json());
                }
                brackets.insert(format!("{a},{b}"), Value::Object(inner));
            }
        }
        let mut obj = JsonMap::new();
        obj.insert(
            "basis".into(),
            Value::Array(
                self.label_names
                    .iter()
                    .map(|l| Value::String(l.clone()))
                    .collect(),
            ),
        );
        obj.insert("brackets".into(), Value::Object(brackets));
        Value::Object(obj)
    }
}

#[derive(Clone)]
pub struct LieElement {
    pub alg: Arc<LieAlgebra>,
    pub coeffs: Vec<Scalar>,
}

impl PartialEq for LieElement {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs
    }
}
impl Eq for LieElement {}

impl fmt::Debug for LieElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({})·{}", c, self.alg.label_names[i])?;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl LieElement {
    pub fn add(&self, other: &LieElement) -> LieElement {
        let mut coeffs = self.coeffs.clone();
        for (c, o) in coeffs.iter_mut().zip(other.coeffs.iter()) {
            *c += o;
        }
        LieElement {
            alg: Arc::clone(&self.alg),
            coeffs,
        }
    }

    pub fn sub(&self, other: &LieElement) -> LieElement {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> LieElement {
        self.scale(&-Scalar::one())
    }

    pub fn scale(&self, s: &Scalar) -> LieElement {
        LieElement {
            alg: Arc::clone(&self.alg),
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }
}

/// `S_uv = [L_u, L_v] + L_uv` as a matrix on `J`.
pub fn s_op(u: &JordanElement, v: &JordanElement) -> Result<Matrix> {
    let lu = lmul_op(u);
    let lv = lmul_op(v);
    let luv = lmul_op(&jmul(u, v)?);
    Ok(lu.commutator(&lv).add(&luv))
}

/// Jordan triple product `{u v z} = S_uv(z)`.
pub fn triple(u: &JordanElement, v: &JordanElement, z: &JordanElement) -> Result<JordanElement> {
    let m = s_op(u, v)?;
    Ok(u.alg.element(m.apply(&z.coeffs)))
}

/// Closed-form dimension of `der(J) = span{[L_x, L_y]}`.
pub fn der_dim_formula(kind: JordanKind, n: usize) -> usize {
    match kind {
        JordanKind::SpinFactor => n * (n - 1) / 2,
        JordanKind::HermR => n * (n - 1) / 2,
        JordanKind::HermC => n * n - 1,
        JordanKind::HermH => n * (2 * n + 1),
        JordanKind::HermO3 => 52,
    }
}

/// Closed-form dimension of `str(J)`.
pub fn str_dim_formula(kind: JordanKind, n: usize) -> usize {
    match kind {
        JordanKind::SpinFactor => n * (n + 1) / 2 + 1,
        JordanKind::HermR => n * n,
        JordanKind::HermC => 2 * n * n - 1,
        JordanKind::HermH => 4 * n * n,
        JordanKind::HermO3 => 79,
    }
}

/// Closed-form dimension of `co(J) = 2·dim(J) + dim str(J)`.
pub fn co_dim_formula(kind: JordanKind, n: usize) -> usize {
    let d = kind.degree(n);
    let rho = if kind == JordanKind::SpinFactor { 2 } else { n };
    let dim_j = rho + d * rho * (rho - 1) / 2;
    2 * dim_j + str_dim_formula(kind, n)
}

/// The structure algebra with canonical echelon coordinates and the
/// provenance of every basis operator over the scanned `S_{b_α b_β}`.
pub struct StrAlgebra {
    pub jordan: Arc<JordanAlgebra>,
    /// Echelon basis operators, as matrices on `J`.
    pub ops: Vec<Matrix>,
    /// provenance[k] = combination over candidate pairs (α, β) with
    /// candidate index `α·D + β`.
    pub provenance: Vec<Vec<(usize, Scalar)>>,
    echelon: EchelonBasis,
    /// Coordinates of `S_{b_α b_β}` for every ordered pair.
    pair_coords: Vec<Vec<Scalar>>,
}

impl StrAlgebra {
    pub fn dim(&self) -> usize {
        self.ops.len()
    }

    /// Coordinates of an operator in the echelon basis; errors when the
    /// operator lies outside `str(J)`.
    pub fn coords(&self, op: &Matrix) -> Result<Vec<Scalar>> {
        self.echelon.coordinates(&op.flatten())
    }

    pub fn pair_coords(&self, alpha: usize, beta: usize) -> &[Scalar] {
        &self.pair_coords[alpha * self.jordan.dim + beta]
    }

    /// Reassemble the operator for str coordinates.
    pub fn op_of_coords(&self, coords: &[Scalar]) -> Matrix {
        let d = self.jordan.dim;
        let mut m = Matrix::zero(d, d);
        for (k, c) in coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            m = m.add(&self.ops[k].scale(c));
        }
        m
    }
}

/// Greedy echelon scan over the candidates `S_{b_α b_β}` in lexicographic
/// pair order; the resulting pivots define the canonical str coordinates.
pub fn build_str(jordan: &Arc<JordanAlgebra>) -> Result<StrAlgebra> {
    let d = jordan.dim;
    let mut echelon = EchelonBasis::new(d * d, true);
    let mut all_ops: Vec<Matrix> = Vec::with_capacity(d * d);
    for a in 0..d {
        for b in 0..d {
            let s = s_op(&jordan.basis_element(a), &jordan.basis_element(b))?;
            all_ops.push(s);
        }
    }
    for s in &all_ops {
        echelon.insert(&s.flatten());
    }
    // Canonical basis operators are the echelon rows themselves.
    let ops: Vec<Matrix> = echelon
        .rows()
        .iter()
        .map(|row| {
            let mut m = Matrix::zero(d, d);
            for (i, s) in row.iter().enumerate() {
                if !s.is_zero() {
                    m[(i / d, i % d)] = s.clone();
                }
            }
            m
        })
        .collect();
    let provenance: Vec<Vec<(usize, Scalar)>> = (0..ops.len())
        .map(|k| echelon.provenance(k).to_vec())
        .collect();

    let expected = str_dim_formula(jordan.kind, jordan.n);
    if ops.len() != expected {
        return Err(Error::DimensionMismatch(format!(
            "str({}, n={}) has rank {}, expected {}",
            jordan.kind.name(),
            jordan.n,
            ops.len(),
            expected
        )));
    }

    let mut pair_coords = Vec::with_capacity(d * d);
    for s in &all_ops {
        pair_coords.push(echelon.coordinates(&s.flatten())?);
    }

    Ok(StrAlgebra {
        jordan: Arc::clone(jordan),
        ops,
        provenance,
        echelon,
        pair_coords,
    })
}

/// `der(J) = span{[L_x, L_y]}` dimension, by the same echelon scan.
pub fn der_dim(jordan: &Arc<JordanAlgebra>) -> usize {
    let d = jordan.dim;
    let mut echelon = EchelonBasis::new(d * d, false);
    for a in 0..d {
        for b in (a + 1)..d {
            let la = lmul_op(&jordan.basis_element(a));
            let lb = lmul_op(&jordan.basis_element(b));
            echelon.insert(&la.commutator(&lb).flatten());
        }
    }
    echelon.rank()
}

/// The conformal algebra with its generator calculus.
pub struct TkkAlgebra {
    pub jordan: Arc<JordanAlgebra>,
    pub str_alg: StrAlgebra,
    pub lie: Arc<LieAlgebra>,
}

impl TkkAlgebra {
    pub fn dim(&self) -> usize {
        self.lie.dim
    }

    pub fn str_dim(&self) -> usize {
        self.str_alg.dim()
    }

    fn d(&self) -> usize {
        self.jordan.dim
    }

    /// `X_u`.
    pub fn x_element(&self, u: &JordanElement) -> LieElement {
        let mut coeffs = vec![Scalar::zero(); self.lie.dim];
        coeffs[..self.d()].clone_from_slice(&u.coeffs);
        self.lie.element(coeffs)
    }

    /// `Y_v`.
    pub fn y_element(&self, v: &JordanElement) -> LieElement {
        let mut coeffs = vec![Scalar::zero(); self.lie.dim];
        let start = self.d() + self.str_dim();
        coeffs[start..start + self.d()].clone_from_slice(&v.coeffs);
        self.lie.element(coeffs)
    }

    /// Element of the str block for given echelon coordinates.
    pub fn str_element(&self, coords: &[Scalar]) -> LieElement {
        let mut coeffs = vec![Scalar::zero(); self.lie.dim];
        coeffs[self.d()..self.d() + self.str_dim()].clone_from_slice(coords);
        self.lie.element(coeffs)
    }

    /// `S_uv` as an element of `co(J)`.
    pub fn s_element(&self, u: &JordanElement, v: &JordanElement) -> Result<LieElement> {
        let coords = self.str_alg.coords(&s_op(u, v)?)?;
        Ok(self.str_element(&coords))
    }

    /// `L_u = S_{ue}` inside str coordinates.
    pub fn l_element(&self, u: &JordanElement) -> Result<LieElement> {
        let coords = self.str_alg.coords(&lmul_op(u))?;
        Ok(self.str_element(&coords))
    }

    /// `E_u^± = iL_u ∓ (X_u − Y_u)/2` and `h_u = −i(X_u + Y_u)`.
    pub fn epm_h(&self, u: &JordanElement) -> Result<(LieElement, LieElement, LieElement)> {
        let i = Scalar::i();
        let half = Scalar::ratio(1, 2);
        let l = self.l_element(u)?.scale(&i);
        let x = self.x_element(u);
        let y = self.y_element(u);
        let xmy = x.sub(&y).scale(&half);
        let e_plus = l.sub(&xmy);
        let e_minus = l.add(&xmy);
        let h = x.add(&y).scale(&-Scalar::i());
        Ok((e_plus, e_minus, h))
    }

    pub fn h_element(&self, u: &JordanElement) -> Result<LieElement> {
        Ok(self.epm_h(u)?.2)
    }
}

/// Assemble `co(J)` with basis `{X_b} ∪ {str basis} ∪ {Y_b}` and the TKK
/// brackets. Jacobi is the caller's verification gate, not assumed here.
pub fn build_tkk(jordan: &Arc<JordanAlgebra>) -> Result<TkkAlgebra> {
    let str_alg = build_str(jordan)?;
    let d = jordan.dim;
    let m = str_alg.dim();
    let dim = 2 * d + m;

    let mut labels = Vec::with_capacity(dim);
    let mut names = Vec::with_capacity(dim);
    for b in 0..d {
        labels.push(LieLabel::X(b));
        names.push(format!("X({})", jordan.basis[b].label()));
    }
    for k in 0..m {
        labels.push(LieLabel::S(k));
        names.push(format!("S{k}"));
    }
    for b in 0..d {
        labels.push(LieLabel::Y(b));
        names.push(format!("Y({})", jordan.basis[b].label()));
    }

    let x_idx = |b: usize| b;
    let s_idx = |k: usize| d + k;
    let y_idx = |b: usize| d + m + b;

    let mut brackets = vec![Vec::new(); dim * dim];
    let set = |brackets: &mut Vec<Vec<(usize, Scalar)>>,
               a: usize,
               b: usize,
               row: Vec<(usize, Scalar)>| {
        brackets[b * dim + a] = row.iter().map(|(g, s)| (*g, -s)).collect();
        brackets[a * dim + b] = row;
    };

    // [X_a, Y_b] = −2 S_{ab}
    for a in 0..d {
        for b in 0..d {
            let coords = str_alg.pair_coords(a, b);
            let row: Vec<(usize, Scalar)> = coords
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| (s_idx(k), c.scale(&crate::exactnum::rat(-2))))
                .collect();
            set(&mut brackets, x_idx(a), y_idx(b), row);
        }
    }

    // [S_k, X_b] = X_{S_k(e_b)} and [S_k, Y_b] = −Y_{S'_k(e_b)} with
    // S'_T = 2 L_{T(e)} − T.
    let unit = jordan.unit_element();
    for k in 0..m {
        let op = &str_alg.ops[k];
        let te = jordan.element(op.apply(&unit.coeffs));
        let op_prime = lmul_op(&te).scale(&Scalar::from_int(2)).sub(op);
        for b in 0..d {
            let image = op.apply(&jordan.basis_element(b).coeffs);
            let row: Vec<(usize, Scalar)> = image
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(g, c)| (x_idx(g), c.clone()))
                .collect();
            set(&mut brackets, s_idx(k), x_idx(b), row);

            let image = op_prime.apply(&jordan.basis_element(b).coeffs);
            let row: Vec<(usize, Scalar)> = image
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(g, c)| (y_idx(g), -c))
                .collect();
            set(&mut brackets, s_idx(k), y_idx(b), row);
        }
    }

    // [S_k, S_l] as operator commutators, back in echelon coordinates.
    for k in 0..m {
        for l in (k + 1)..m {
            let comm = str_alg.ops[k].commutator(&str_alg.ops[l]);
            let coords = str_alg.coords(&comm)?;
            let row: Vec<(usize, Scalar)> = coords
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(g, c)| (s_idx(g), c))
                .collect();
            set(&mut brackets, s_idx(k), s_idx(l), row);
        }
    }

    let expected = co_dim_formula(jordan.kind, jordan.n);
    if dim != expected {
        return Err(Error::DimensionMismatch(format!(
            "co({}, n={}) has dim {dim}, expected {expected}",
            jordan.kind.name(),
            jordan.n
        )));
    }

    let lie = LieAlgebra::new(
        format!("co({}({}))", jordan.kind.name(), jordan.n),
        labels,
        names,
        brackets,
    );

    Ok(TkkAlgebra {
        jordan: Arc::clone(jordan),
        str_alg,
        lie,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jordan::{build_jordan, jordan_frame, random_element};
    use rand_chacha::rand_core::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn str_dimensions_match_closed_forms() {
        let cases = [
            (JordanKind::SpinFactor, 3, 7), // n(n+1)/2 + 1
            (JordanKind::HermR, 3, 9),      // sl(3,R) ⊕ R
            (JordanKind::HermC, 2, 7),      // sl(2,C) ⊕ R
            (JordanKind::HermH, 2, 16),     // su*(4) ⊕ R
        ];
        for (kind, n, want) in cases {
            let alg = build_jordan(kind, n).unwrap();
            let s = build_str(&alg).unwrap();
            assert_eq!(s.dim(), want, "{kind:?}");
        }
    }

    #[test]
    fn s_operator_identities() {
        let alg = build_jordan(JordanKind::HermR, 3).unwrap();
        let e = alg.unit_element();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..5 {
            let u = random_element(&alg, &mut rng);
            // S_ue = L_u
            assert_eq!(s_op(&u, &e).unwrap(), lmul_op(&u));
        }
        assert_eq!(s_op(&e, &e).unwrap(), Matrix::identity(alg.dim));

        // [S_uv, S_zw] = S_{{uvz}w} − S_{z{vuw}}
        for _ in 0..3 {
            let u = random_element(&alg, &mut rng);
            let v = random_element(&alg, &mut rng);
            let z = random_element(&alg, &mut rng);
            let w = random_element(&alg, &mut rng);
            let lhs = s_op(&u, &v).unwrap().commutator(&s_op(&z, &w).unwrap());
            let uvz = triple(&u, &v, &z).unwrap();
            let vuw = triple(&v, &u, &w).unwrap();
            let rhs = s_op(&uvz, &w).unwrap().sub(&s_op(&z, &vuw).unwrap());
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn tkk_dimensions() {
        let cases = [
            (JordanKind::HermR, 3, 21),      // sp(3,R)
            (JordanKind::SpinFactor, 3, 15), // so(2,4)
            (JordanKind::HermC, 2, 15),      // su(2,2)
        ];
        for (kind, n, want) in cases {
            let alg = build_jordan(kind, n).unwrap();
            let tkk = build_tkk(&alg).unwrap();
            assert_eq!(tkk.dim(), want, "{kind:?}");
        }
    }

    #[test]
    fn jacobi_small_cases() {
        for (kind, n) in [(JordanKind::SpinFactor, 2), (JordanKind::HermR, 2)] {
            let alg = build_jordan(kind, n).unwrap();
            let tkk = build_tkk(&alg).unwrap();
            let rep = tkk.lie.verify_jacobi();
            assert!(rep.all_passed(), "{kind:?}: {:?}", rep.first_failure());
        }
    }

    #[test]
    fn sign_flip_breaks_jacobi() {
        let alg = build_jordan(JordanKind::HermR, 2).unwrap();
        let tkk = build_tkk(&alg).unwrap();
        let lie = &tkk.lie;
        let mut brackets = Vec::with_capacity(lie.dim * lie.dim);
        for a in 0..lie.dim {
            for b in 0..lie.dim {
                brackets.push(lie.bracket_basis(a, b).to_vec());
            }
        }
        // Negate one bracket pair consistently (keeps antisymmetry).
        let (a, b) = (0, lie.dim - 1);
        for (x, y) in [(a, b), (b, a)] {
            for (_, s) in brackets[x * lie.dim + y].iter_mut() {
                *s = -&*s;
            }
        }
        let broken = LieAlgebra::new(
            "broken".into(),
            lie.labels.clone(),
            lie.label_names.clone(),
            brackets,
        );
        let rep = broken.verify_jacobi();
        assert!(!rep.all_passed());
        assert!(rep.first_failure().unwrap().witness.is_some());
    }

    #[test]
    fn generator_lemma_brackets() {
        // [h_u, E_v^±] = ±2 E_{uv}^± and friends, on random pairs.
        let alg = build_jordan(JordanKind::HermC, 2).unwrap();
        let tkk = build_tkk(&alg).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..4 {
            let u = random_element(&alg, &mut rng);
            let v = random_element(&alg, &mut rng);
            let (ep_u, em_u, h_u) = tkk.epm_h(&u).unwrap();
            let (ep_v, em_v, _) = tkk.epm_h(&v).unwrap();
            let uv = jmul(&u, &v).unwrap();
            let (ep_uv, em_uv, h_uv) = tkk.epm_h(&uv).unwrap();
            let two = Scalar::from_int(2);

            assert_eq!(tkk.lie.bracket(&h_u, &ep_v), ep_uv.scale(&two));
            assert_eq!(tkk.lie.bracket(&h_u, &em_v), em_uv.scale(&-two.clone()));
            assert!(tkk.lie.bracket(&ep_u, &ep_v).is_zero());
            assert!(tkk.lie.bracket(&em_u, &em_v).is_zero());

            // [E_u^+, E_v^-] = −h_uv − 2[L_u, L_v]
            let lu = tkk.l_element(&u).unwrap();
            let lv = tkk.l_element(&v).unwrap();
            let rhs = h_uv.neg().sub(&tkk.lie.bracket(&lu, &lv).scale(&two));
            assert_eq!(tkk.lie.bracket(&ep_u, &em_v), rhs);

            // [h_u, h_v] = 4[L_u, L_v]
            let (_, _, h_v) = tkk.epm_h(&v).unwrap();
            assert_eq!(
                tkk.lie.bracket(&h_u, &h_v),
                tkk.lie.bracket(&lu, &lv).scale(&Scalar::from_int(4))
            );
        }

        // [E_e^+, E_e^-] = −h_e
        let e = alg.unit_element();
        let (ep, em, h) = tkk.epm_h(&e).unwrap();
        assert_eq!(tkk.lie.bracket(&ep, &em), h.neg());
    }

    #[test]
    fn frame_x_y_brackets() {
        // [X_e, Y_e] = −2 S_ee = −2 L_e, and S_ue = L_u on frame vectors.
        let alg = build_jordan(JordanKind::HermR, 3).unwrap();
        let tkk = build_tkk(&alg).unwrap();
        let e = alg.unit_element();
        let x = tkk.x_element(&e);
        let y = tkk.y_element(&e);
        let l = tkk.l_element(&e).unwrap();
        assert_eq!(tkk.lie.bracket(&x, &y), l.scale(&Scalar::from_int(-2)));
        let f = jordan_frame(&alg);
        for d in &f.diag {
            let lu = tkk.l_element(d).unwrap();
            assert_eq!(tkk.s_element(d, &e).unwrap(), lu);
        }
    }
}
