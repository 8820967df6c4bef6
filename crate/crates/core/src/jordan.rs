//! The five simple Euclidean Jordan algebras as exact product tensors, with
//! their metric structure, Jordan frames, and operator calculus.
//!
//! Elements are coefficient vectors over a fixed ordered basis: diagonal
//! idempotents `e_11..e_ρρ` first, then off-diagonal `e_ab^μ` sorted by
//! `(a, b, μ)`; spin factors use the scalar slot followed by vector slots.
//! Hermitian product tensors are computed once from matrix arithmetic over
//! the tagged composition algebra at build time.

use std::fmt;
use std::sync::Arc;

use num::Signed;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Map as JsonMap, Value};

use crate::error::{Error, Result};
use crate::exactnum::{random_rat, rat, ratio, CompScalar, Division, Rat, Scalar, UNIT_NAMES};
use crate::linalg::Matrix;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum JordanKind {
    SpinFactor,
    HermR,
    HermC,
    HermH,
    HermO3,
}

impl JordanKind {
    pub fn name(self) -> &'static str {
        match self {
            JordanKind::SpinFactor => "spin",
            JordanKind::HermR => "hermR",
            JordanKind::HermC => "hermC",
            JordanKind::HermH => "hermH",
            JordanKind::HermO3 => "hermO3",
        }
    }

    pub fn parse(s: &str) -> Result<JordanKind> {
        match s {
            "spin" | "gamma" => Ok(JordanKind::SpinFactor),
            "hermR" | "hermr" | "sp" => Ok(JordanKind::HermR),
            "hermC" | "hermc" | "su" => Ok(JordanKind::HermC),
            "hermH" | "hermh" | "sostar" => Ok(JordanKind::HermH),
            "hermO3" | "hermo3" | "e7" => Ok(JordanKind::HermO3),
            other => Err(Error::Unsupported(format!("unknown kind: {other}"))),
        }
    }

    pub fn division(self) -> Option<Division> {
        match self {
            JordanKind::SpinFactor => None,
            JordanKind::HermR => Some(Division::R),
            JordanKind::HermC => Some(Division::C),
            JordanKind::HermH => Some(Division::H),
            JordanKind::HermO3 => Some(Division::O),
        }
    }

    pub fn degree(self, n: usize) -> usize {
        match self {
            JordanKind::SpinFactor => n - 1,
            JordanKind::HermR => 1,
            JordanKind::HermC => 2,
            JordanKind::HermH => 4,
            JordanKind::HermO3 => 8,
        }
    }
}

/// One basis vector of a Jordan algebra.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum BasisVector {
    /// Scalar slot of a spin factor (this is the unit).
    SpinUnit,
    /// Vector slot `t` (1-based) of a spin factor.
    SpinVec(usize),
    /// Diagonal idempotent `e_pp` (1-based).
    Diag(usize),
    /// Off-diagonal `e_ab^μ` with `a < b`, `1 ≤ μ ≤ d`.
    Off(usize, usize, usize),
}

impl BasisVector {
    pub fn label(&self) -> String {
        match self {
            BasisVector::SpinUnit => "b0".to_string(),
            BasisVector::SpinVec(t) => format!("b{t}"),
            BasisVector::Diag(p) => format!("e{p}{p}"),
            BasisVector::Off(a, b, mu) => format!("e{a}{b}^{}", UNIT_NAMES[mu - 1]),
        }
    }
}

pub struct JordanAlgebra {
    pub kind: JordanKind,
    pub n: usize,
    pub dim: usize,
    pub basis: Vec<BasisVector>,
    /// Sparse rows of the product tensor: entry `α·D + β` holds `e_α·e_β`.
    product: Vec<Vec<(usize, Scalar)>>,
    pub unit: Vec<Scalar>,
}

impl fmt::Debug for JordanAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "JordanAlgebra({}, n={}, D={})",
            self.kind.name(),
            self.n,
            self.dim
        )
    }
}

#[derive(Clone)]
pub struct JordanElement {
    pub alg: Arc<JordanAlgebra>,
    pub coeffs: Vec<Scalar>,
}

impl fmt::Debug for JordanElement {
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
            write!(f, "({})·{}", c, self.alg.basis[i].label())?;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl PartialEq for JordanElement {
    fn eq(&self, other: &Self) -> bool {
        self.alg.id() == other.alg.id() && self.coeffs == other.coeffs
    }
}
impl Eq for JordanElement {}

/// Jordan frame plus the off-diagonal families that complete the basis.
pub struct JordanFrame {
    pub diag: Vec<JordanElement>,
    pub off: Vec<(usize, usize, usize, JordanElement)>,
}

/// Hermitian matrix over a composition algebra with exact scalar coefficients.
struct HermMatrix {
    n: usize,
    entries: Vec<CompScalar>,
}

impl HermMatrix {
    fn zero(n: usize) -> Self {
        HermMatrix {
            n,
            entries: vec![CompScalar::zero(); n * n],
        }
    }

    fn at(&self, r: usize, c: usize) -> &CompScalar {
        &self.entries[r * self.n + c]
    }

    fn at_mut(&mut self, r: usize, c: usize) -> &mut CompScalar {
        &mut self.entries[r * self.n + c]
    }

    /// Left-to-right matrix product; parenthesization is irrelevant here
    /// because only the symmetrized product is consumed downstream.
    fn matmul(&self, other: &HermMatrix) -> HermMatrix {
        let n = self.n;
        let mut out = HermMatrix::zero(n);
        for r in 0..n {
            for k in 0..n {
                let a = self.at(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..n {
                    let b = other.at(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let p = a.mul(b);
                    *out.at_mut(r, c) = out.at(r, c).add(&p);
                }
            }
        }
        out
    }

    fn add(&self, other: &HermMatrix) -> HermMatrix {
        let mut out = HermMatrix::zero(self.n);
        for i in 0..self.n * self.n {
            out.entries[i] = self.entries[i].add(&other.entries[i]);
        }
        out
    }

    fn scale(&self, s: &Scalar) -> HermMatrix {
        let mut out = HermMatrix::zero(self.n);
        for i in 0..self.n * self.n {
            out.entries[i] = self.entries[i].scale(s);
        }
        out
    }
}

fn herm_basis_matrix(n: usize, v: &BasisVector) -> HermMatrix {
    let mut m = HermMatrix::zero(n);
    let inv_sqrt2 = Scalar::sqrt(2).scale(&ratio(1, 2));
    match v {
        BasisVector::Diag(p) => {
            *m.at_mut(p - 1, p - 1) = CompScalar::unit_scaled(0, Scalar::one());
        }
        BasisVector::Off(a, b, mu) => {
            let slot = mu - 1;
            if *mu == 1 {
                // (E_ab + E_ba)/√2
                *m.at_mut(a - 1, b - 1) = CompScalar::unit_scaled(0, inv_sqrt2.clone());
                *m.at_mut(b - 1, a - 1) = CompScalar::unit_scaled(0, inv_sqrt2);
            } else {
                // a_μ (E_ab − E_ba)/√2
                *m.at_mut(a - 1, b - 1) = CompScalar::unit_scaled(slot, inv_sqrt2.clone());
                *m.at_mut(b - 1, a - 1) = CompScalar::unit_scaled(slot, -&inv_sqrt2);
            }
        }
        _ => unreachable!("spin basis has no matrix form"),
    }
    m
}

/// Expand a Hermitian matrix over the `O_J` coordinate basis.
fn herm_decompose(n: usize, basis: &[BasisVector], m: &HermMatrix) -> Result<Vec<Scalar>> {
    let sqrt2 = Scalar::sqrt(2);
    let mut coeffs = Vec::with_capacity(basis.len());
    for v in basis {
        let c = match v {
            BasisVector::Diag(p) => {
                let e = m.at(p - 1, p - 1);
                for slot in 1..8 {
                    if !e.coeffs[slot].is_zero() {
                        return Err(Error::Consistency(format!(
                            "non-real diagonal entry at {p}"
                        )));
                    }
                }
                e.coeffs[0].clone()
            }
            BasisVector::Off(a, b, mu) => &m.at(a - 1, b - 1).coeffs[mu - 1] * &sqrt2,
            _ => unreachable!(),
        };
        coeffs.push(c);
    }
    // The expansion must reproduce the matrix exactly.
    let mut rebuilt = HermMatrix::zero(n);
    for (v, c) in basis.iter().zip(coeffs.iter()) {
        if c.is_zero() {
            continue;
        }
        rebuilt = rebuilt.add(&herm_basis_matrix(n, v).scale(c));
    }
    for i in 0..n * n {
        if rebuilt.entries[i] != m.entries[i] {
            return Err(Error::Consistency(
                "matrix outside the Hermitian span".into(),
            ));
        }
    }
    Ok(coeffs)
}

pub fn build_jordan(kind: JordanKind, n: usize) -> Result<Arc<JordanAlgebra>> {
    match kind {
        JordanKind::SpinFactor if n < 2 => {
            return Err(Error::Unsupported("spin factor needs n >= 2".into()))
        }
        JordanKind::HermR if n < 1 => return Err(Error::Unsupported("hermR needs n >= 1".into())),
        JordanKind::HermC | JordanKind::HermH if n < 2 => {
            return Err(Error::Unsupported(format!("{} needs n >= 2", kind.name())))
        }
        JordanKind::HermO3 if n != 3 => {
            return Err(Error::Unsupported(
                "hermO3 is defined for n = 3 only".into(),
            ))
        }
        _ => {}
    }

    let mut basis = Vec::new();
    match kind {
        JordanKind::SpinFactor => {
            basis.push(BasisVector::SpinUnit);
            for t in 1..=n {
                basis.push(BasisVector::SpinVec(t));
            }
        }
        _ => {
            let d = kind.degree(n);
            for p in 1..=n {
                basis.push(BasisVector::Diag(p));
            }
            for a in 1..=n {
                for b in a + 1..=n {
                    for mu in 1..=d {
                        basis.push(BasisVector::Off(a, b, mu));
                    }
                }
            }
        }
    }
    let dim = basis.len();

    let mut product = vec![Vec::new(); dim * dim];
    let sparse = |v: Vec<Scalar>| -> Vec<(usize, Scalar)> {
        v.into_iter()
            .enumerate()
            .filter(|(_, s)| !s.is_zero())
            .collect()
    };

    match kind {
        JordanKind::SpinFactor => {
            // (λ, u)(μ, v) = (λμ + u·v, λv + μu)
            for (i, bi) in basis.iter().enumerate() {
                for (j, bj) in basis.iter().enumerate() {
                    let mut out = vec![Scalar::zero(); dim];
                    match (bi, bj) {
                        (BasisVector::SpinUnit, BasisVector::SpinUnit) => out[0] = Scalar::one(),
                        (BasisVector::SpinUnit, BasisVector::SpinVec(t))
                        | (BasisVector::SpinVec(t), BasisVector::SpinUnit) => {
                            out[*t] = Scalar::one()
                        }
                        (BasisVector::SpinVec(s), BasisVector::SpinVec(t)) => {
                            if s == t {
                                out[0] = Scalar::one();
                            }
                        }
                        _ => unreachable!(),
                    }
                    product[i * dim + j] = sparse(out);
                }
            }
        }
        _ => {
            let mats: Vec<HermMatrix> = basis.iter().map(|v| herm_basis_matrix(n, v)).collect();
            let half = Scalar::ratio(1, 2);
            for i in 0..dim {
                for j in 0..=i {
                    let sym = mats[i]
                        .matmul(&mats[j])
                        .add(&mats[j].matmul(&mats[i]))
                        .scale(&half);
                    let coeffs = herm_decompose(n, &basis, &sym)?;
                    let row = sparse(coeffs);
                    product[i * dim + j] = row.clone();
                    product[j * dim + i] = row;
                }
            }
        }
    }

    let mut unit = vec![Scalar::zero(); dim];
    match kind {
        JordanKind::SpinFactor => unit[0] = Scalar::one(),
        _ => {
            for p in 0..n {
                unit[p] = Scalar::one();
            }
        }
    }

    let alg = Arc::new(JordanAlgebra {
        kind,
        n,
        dim,
        basis,
        product,
        unit,
    });
    // D = ρ + dρ(ρ−1)/2 must hold by construction.
    let (rho, d) = alg.rank_degree()?;
    if alg.dim != rho + d * rho * (rho - 1) / 2 {
        return Err(Error::Consistency(format!(
            "dimension {} does not match rank/degree ({rho}, {d})",
            alg.dim
        )));
    }
    Ok(alg)
}

impl JordanAlgebra {
    /// Structural identity used for mismatch checks.
    pub fn id(&self) -> (JordanKind, usize) {
        (self.kind, self.n)
    }

    pub fn element(self: &Arc<Self>, coeffs: Vec<Scalar>) -> JordanElement {
        assert_eq!(coeffs.len(), self.dim);
        JordanElement {
            alg: Arc::clone(self),
            coeffs,
        }
    }

    pub fn zero_element(self: &Arc<Self>) -> JordanElement {
        self.element(vec![Scalar::zero(); self.dim])
    }

    pub fn basis_element(self: &Arc<Self>, idx: usize) -> JordanElement {
        let mut coeffs = vec![Scalar::zero(); self.dim];
        coeffs[idx] = Scalar::one();
        self.element(coeffs)
    }

    pub fn unit_element(self: &Arc<Self>) -> JordanElement {
        self.element(self.unit.clone())
    }

    pub fn basis_index(&self, v: &BasisVector) -> Option<usize> {
        self.basis.iter().position(|b| b == v)
    }

    /// `e_pp` (1-based).
    pub fn diag(self: &Arc<Self>, p: usize) -> JordanElement {
        let idx = self
            .basis_index(&match self.kind {
                JordanKind::SpinFactor => panic!("use jordan_frame for spin factors"),
                _ => BasisVector::Diag(p),
            })
            .expect("diagonal index");
        self.basis_element(idx)
    }

    /// `e_ab^μ` (1-based, a < b).
    pub fn off(self: &Arc<Self>, a: usize, b: usize, mu: usize) -> JordanElement {
        let idx = self
            .basis_index(&BasisVector::Off(a, b, mu))
            .expect("off-diagonal index");
        self.basis_element(idx)
    }

    pub fn product_row(&self, alpha: usize, beta: usize) -> &[(usize, Scalar)] {
        &self.product[alpha * self.dim + beta]
    }

    /// ρ = tr(e) and the degree d solved from `D = ρ + dρ(ρ−1)/2`.
    pub fn rank_degree(&self) -> Result<(usize, usize)> {
        let rho = match self.kind {
            JordanKind::SpinFactor => 2usize,
            _ => self.n,
        };
        if rho <= 1 {
            // Degenerate rank-one case; reported by Table convention.
            return Ok((rho, 1));
        }
        let num = 2 * (self.dim - rho);
        let den = rho * (rho - 1);
        if den == 0 || num % den != 0 {
            return Err(Error::Consistency("degree is not integral".into()));
        }
        let d = num / den;
        if d == 0 {
            return Err(Error::Consistency("degree must be positive".into()));
        }
        Ok((rho, d))
    }

    /// `jordan info` payload: kind, n, D, rho, d, basis labels.
    pub fn info_json(&self) -> Value {
        let (rho, d) = self.rank_degree().expect("built algebra");
        json!({
            "kind": self.kind.name(),
            "n": self.n,
            "D": self.dim,
            "rho": rho,
            "d": d,
            "basis": self.basis.iter().map(|b| b.label()).collect::<Vec<_>>(),
        })
    }

    /// Product tensor as JSON for cross-checking by other implementations.
    pub fn tensor_json(&self) -> Value {
        let mut map = JsonMap::new();
        for a in 0..self.dim {
            for b in 0..self.dim {
                let row = self.product_row(a, b);
                if row.is_empty() {
                    continue;
                }
                let mut inner = JsonMap::new();
                for (g, s) in row {
                    inner.insert(g.to_string(), s.to_json());
                }
                map.insert(format!("{a},{b}"), Value::Object(inner));
            }
        }
        Value::Object(map)
    }
}

impl JordanElement {
    fn same_algebra(&self, other: &JordanElement) -> Result<()> {
        if self.alg.id() != other.alg.id() {
            return Err(Error::AlgebraMismatch(format!(
                "{:?} vs {:?}",
                self.alg.id(),
                other.alg.id()
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &JordanElement) -> JordanElement {
        let mut coeffs = self.coeffs.clone();
        for (c, o) in coeffs.iter_mut().zip(other.coeffs.iter()) {
            *c += o;
        }
        JordanElement {
            alg: Arc::clone(&self.alg),
            coeffs,
        }
    }

    pub fn sub(&self, other: &JordanElement) -> JordanElement {
        let mut coeffs = self.coeffs.clone();
        for (c, o) in coeffs.iter_mut().zip(other.coeffs.iter()) {
            *c -= o;
        }
        JordanElement {
            alg: Arc::clone(&self.alg),
            coeffs,
        }
    }

    pub fn scale(&self, s: &Scalar) -> JordanElement {
        JordanElement {
            alg: Arc::clone(&self.alg),
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }
}

/// Bilinear commutative product through the precomputed tensor.
pub fn jmul(u: &JordanElement, v: &JordanElement) -> Result<JordanElement> {
    u.same_algebra(v)?;
    let alg = &u.alg;
    let mut out = vec![Scalar::zero(); alg.dim];
    for (a, ca) in u.coeffs.iter().enumerate() {
        if ca.is_zero() {
            continue;
        }
        for (b, cb) in v.coeffs.iter().enumerate() {
            if cb.is_zero() {
                continue;
            }
            let f = ca * cb;
            for (g, s) in alg.product_row(a, b) {
                let d = s * &f;
                out[*g] += &d;
            }
        }
    }
    Ok(alg.element(out))
}

/// Matrix of left multiplication `v ↦ uv`.
pub fn lmul_op(u: &JordanElement) -> Matrix {
    let alg = &u.alg;
    let mut m = Matrix::zero(alg.dim, alg.dim);
    for (a, ca) in u.coeffs.iter().enumerate() {
        if ca.is_zero() {
            continue;
        }
        for b in 0..alg.dim {
            for (g, s) in alg.product_row(a, b) {
                let d = s * ca;
                m[(*g, b)] += &d;
            }
        }
    }
    m
}

/// Quadratic representation `P(x) = 2L_x² − L_{x²}`.
pub fn quad_rep(x: &JordanElement) -> Result<Matrix> {
    let lx = lmul_op(x);
    let lx2 = lmul_op(&jmul(x, x)?);
    Ok(lx.matmul(&lx).scale(&Scalar::from_int(2)).sub(&lx2))
}

/// Trace per kind: `2λ` for spin factors, matrix trace otherwise.
pub fn trace_of(u: &JordanElement) -> Scalar {
    match u.alg.kind {
        JordanKind::SpinFactor => u.coeffs[0].scale(&rat(2)),
        _ => {
            let mut t = Scalar::zero();
            for (i, b) in u.alg.basis.iter().enumerate() {
                if matches!(b, BasisVector::Diag(_)) {
                    t += &u.coeffs[i];
                }
            }
            t
        }
    }
}

/// `τ(u, v) = Tr(L_{uv})`.
pub fn tau(u: &JordanElement, v: &JordanElement) -> Result<Scalar> {
    let w = jmul(u, v)?;
    let alg = &u.alg;
    let mut t = Scalar::zero();
    for (a, ca) in w.coeffs.iter().enumerate() {
        if ca.is_zero() {
            continue;
        }
        for b in 0..alg.dim {
            for (g, s) in alg.product_row(a, b) {
                if *g == b {
                    let d = s * ca;
                    t += &d;
                }
            }
        }
    }
    Ok(t)
}

/// `<u|v> = τ(u,v)/dim(J)`; also equals `(1/ρ)·tr(uv)`.
pub fn inner(u: &JordanElement, v: &JordanElement) -> Result<Scalar> {
    let t = tau(u, v)?;
    Ok(t.scale(&Rat::new(1.into(), (u.alg.dim as i64).into())))
}

/// The canonical frame read off the built-in basis.
pub fn jordan_frame(alg: &Arc<JordanAlgebra>) -> JordanFrame {
    match alg.kind {
        JordanKind::SpinFactor => {
            let half = Scalar::ratio(1, 2);
            let mut e11 = vec![Scalar::zero(); alg.dim];
            e11[0] = half.clone();
            e11[1] = half.clone();
            let mut e22 = vec![Scalar::zero(); alg.dim];
            e22[0] = half.clone();
            e22[1] = -&half;
            let inv_sqrt2 = Scalar::sqrt(2).scale(&ratio(1, 2));
            let mut off = Vec::new();
            for mu in 1..alg.dim - 1 {
                let mut v = vec![Scalar::zero(); alg.dim];
                v[mu + 1] = inv_sqrt2.clone();
                off.push((1, 2, mu, alg.element(v)));
            }
            JordanFrame {
                diag: vec![alg.element(e11), alg.element(e22)],
                off,
            }
        }
        _ => {
            let mut diag = Vec::new();
            let mut off = Vec::new();
            for (i, b) in alg.basis.iter().enumerate() {
                match b {
                    BasisVector::Diag(_) => diag.push(alg.basis_element(i)),
                    BasisVector::Off(a, bb, mu) => off.push((*a, *bb, *mu, alg.basis_element(i))),
                    _ => unreachable!(),
                }
            }
            JordanFrame { diag, off }
        }
    }
}

/// Verify the six frame properties; failures carry a witness.
pub fn verify_frame(alg: &Arc<JordanAlgebra>, frame: &JordanFrame) -> crate::Report {
    let mut rep = crate::Report::new();
    let (rho, _) = alg.rank_degree().expect("built algebra");
    let inv_rho = Scalar::from_rat(Rat::new(1.into(), (rho as i64).into()));

    // 1. every frame vector has squared length 1/ρ.
    let mut all = frame
        .diag
        .iter()
        .map(|e| ("diag".into(), e))
        .collect::<Vec<(String, _)>>();
    for (a, b, mu, e) in &frame.off {
        all.push((format!("e{a}{b}^{mu}"), e));
    }
    let mut ok = true;
    let mut witness = String::new();
    for (label, e) in &all {
        let ip = inner(e, e).expect("same algebra");
        if ip != inv_rho {
            ok = false;
            witness = format!("{label}: <v|v> = {ip}");
            break;
        }
    }
    rep.check("unit length 1/sqrt(rho)", ok, witness);

    // 2. idempotency and pairwise orthogonality of the diagonal family.
    let mut ok = true;
    let mut witness = String::new();
    'outer: for (i, ei) in frame.diag.iter().enumerate() {
        for (j, ej) in frame.diag.iter().enumerate() {
            let p = jmul(ei, ej).expect("same algebra");
            let expect = if i == j {
                ei.clone()
            } else {
                ei.alg.zero_element()
            };
            if p != expect {
                ok = false;
                witness = format!("e{}{} · e{}{}", i + 1, i + 1, j + 1, j + 1);
                break 'outer;
            }
        }
    }
    rep.check("idempotents orthogonal", ok, witness);

    // 3. Σ e_ii = e.
    let mut sum = alg.zero_element();
    for e in &frame.diag {
        sum = sum.add(e);
    }
    rep.check(
        "sum of idempotents is the unit",
        sum == alg.unit_element(),
        format!("{sum:?}"),
    );

    // 4. (e_jk^μ)² = (e_jj + e_kk)/2.
    let mut ok = true;
    let mut witness = String::new();
    for (a, b, mu, e) in &frame.off {
        let sq = jmul(e, e).expect("same algebra");
        let want = frame.diag[a - 1]
            .add(&frame.diag[b - 1])
            .scale(&Scalar::ratio(1, 2));
        if sq != want {
            ok = false;
            witness = format!("(e{a}{b}^{mu})^2 = {sq:?}");
            break;
        }
    }
    rep.check("off-diagonal squares", ok, witness);

    // 5. e_ii e_ij^μ = e_jj e_ij^μ = e_ij^μ/2 and e_ii e_jk^μ = 0 otherwise.
    let mut ok = true;
    let mut witness = String::new();
    'outer5: for (a, b, mu, e) in &frame.off {
        for (i, d) in frame.diag.iter().enumerate() {
            let p = jmul(d, e).expect("same algebra");
            let want = if i + 1 == *a || i + 1 == *b {
                e.scale(&Scalar::ratio(1, 2))
            } else {
                alg.zero_element()
            };
            if p != want {
                ok = false;
                witness = format!("e{}{} · e{a}{b}^{mu}", i + 1, i + 1);
                break 'outer5;
            }
        }
    }
    rep.check("half-action rule", ok, witness);

    // 6. tr e_ii = 1, tr e_ij^μ = 0.
    let mut ok = true;
    let mut witness = String::new();
    for (i, d) in frame.diag.iter().enumerate() {
        if trace_of(d) != Scalar::one() {
            ok = false;
            witness = format!("tr e{}{}", i + 1, i + 1);
        }
    }
    for (a, b, mu, e) in &frame.off {
        if !trace_of(e).is_zero() {
            ok = false;
            witness = format!("tr e{a}{b}^{mu}");
        }
    }
    rep.check("traces", ok, witness);

    rep
}

/// Seeded random element with numerators in [−9, 9], denominators in {1,2,3}.
pub fn random_element<R: Rng>(alg: &Arc<JordanAlgebra>, rng: &mut R) -> JordanElement {
    let coeffs = (0..alg.dim)
        .map(|_| Scalar::from_rat(random_rat(rng)))
        .collect();
    alg.element(coeffs)
}

/// Commutativity, the Jordan identity, operator commutation, and positive
/// definiteness of the trace form, on seeded pseudorandom elements.
pub fn verify_jordan_axioms(alg: &Arc<JordanAlgebra>, samples: usize, seed: u64) -> crate::Report {
    let mut rep = crate::Report::new();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    // Product tensor symmetric in (α, β).
    let mut ok = true;
    let mut witness = String::new();
    'sym: for a in 0..alg.dim {
        for b in 0..a {
            if alg.product_row(a, b) != alg.product_row(b, a) {
                ok = false;
                witness = format!("tensor asymmetry at ({a},{b})");
                break 'sym;
            }
        }
    }
    rep.check("commutativity", ok, witness);

    // Unit acts as identity on every basis vector.
    let e = alg.unit_element();
    let mut ok = true;
    let mut witness = String::new();
    for i in 0..alg.dim {
        let b = alg.basis_element(i);
        if jmul(&e, &b).expect("same algebra") != b {
            ok = false;
            witness = alg.basis[i].label();
            break;
        }
    }
    rep.check("unit element", ok, witness);

    // Jordan identity x(x²y) = x²(xy) and [L_x, L_{x²}] = 0.
    let mut ok = true;
    let mut witness = String::new();
    for s in 0..samples {
        let x = random_element(alg, &mut rng);
        let y = random_element(alg, &mut rng);
        let x2 = jmul(&x, &x).expect("same algebra");
        let lhs = jmul(&x, &jmul(&x2, &y).expect("same")).expect("same");
        let rhs = jmul(&x2, &jmul(&x, &y).expect("same")).expect("same");
        if lhs != rhs {
            ok = false;
            witness = format!("sample {s}: x = {x:?}, y = {y:?}");
            break;
        }
        let comm = lmul_op(&x).commutator(&lmul_op(&x2));
        if !comm.is_zero() {
            ok = false;
            witness = format!("sample {s}: [L_x, L_x2] != 0");
            break;
        }
    }
    rep.check("jordan identity", ok, witness);

    // Euclidean property: Gram matrix of τ on the basis is symmetric
    // positive definite (all elimination pivots positive).
    let gram = Matrix::from_fn(alg.dim, alg.dim, |r, c| {
        tau(&alg.basis_element(r), &alg.basis_element(c)).expect("same algebra")
    });
    rep.check(
        "trace form positive definite",
        gram_is_spd(&gram),
        "gram pivots",
    );

    rep
}

/// Symmetric positive definiteness via positivity of elimination pivots,
/// which is equivalent to all leading principal minors being positive.
fn gram_is_spd(gram: &Matrix) -> bool {
    let n = gram.rows;
    let mut a = gram.clone();
    for r in 0..n {
        for c in 0..n {
            if a[(r, c)] != a[(c, r)] {
                return false;
            }
        }
    }
    for col in 0..n {
        let pivot = a[(col, col)].clone();
        let pr = match pivot.as_rat() {
            Some(r) => r,
            None => return false,
        };
        if !pr.is_positive() {
            return false;
        }
        let pinv = pivot.inv().expect("positive pivot");
        for r in col + 1..n {
            if a[(r, col)].is_zero() {
                continue;
            }
            let f = &a[(r, col)] * &pinv;
            for c in col..n {
                let d = &a[(col, c)] * &f;
                a[(r, c)] -= &d;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimensions_match_rank_and_degree() {
        // (kind, n, D, rho, d)
        let cases = [
            (JordanKind::SpinFactor, 3, 4, 2, 2),
            (JordanKind::HermR, 3, 6, 3, 1),
            (JordanKind::HermC, 3, 9, 3, 2),
            (JordanKind::HermH, 3, 15, 3, 4),
            (JordanKind::HermO3, 3, 27, 3, 8),
        ];
        for (kind, n, dim, rho, d) in cases {
            let alg = build_jordan(kind, n).unwrap();
            assert_eq!(alg.dim, dim, "{kind:?}");
            assert_eq!(alg.rank_degree().unwrap(), (rho, d), "{kind:?}");
        }
        assert!(build_jordan(JordanKind::HermO3, 4).is_err());

        // rank, degree, and the dimension formula across 2 ≤ n ≤ 4
        for kind in [
            JordanKind::SpinFactor,
            JordanKind::HermR,
            JordanKind::HermC,
            JordanKind::HermH,
        ] {
            for n in 2..=4usize {
                let alg = build_jordan(kind, n).unwrap();
                let (rho, d) = alg.rank_degree().unwrap();
                let expected = match kind {
                    JordanKind::SpinFactor => (2, n - 1),
                    JordanKind::HermR => (n, 1),
                    JordanKind::HermC => (n, 2),
                    JordanKind::HermH => (n, 4),
                    JordanKind::HermO3 => unreachable!(),
                };
                assert_eq!((rho, d), expected, "{kind:?}({n})");
                assert_eq!(alg.dim, rho + d * rho * (rho - 1) / 2, "{kind:?}({n})");
            }
        }
    }

    #[test]
    fn frame_products() {
        let alg = build_jordan(JordanKind::SpinFactor, 3).unwrap();
        let f = jordan_frame(&alg);
        // e_11·e_22 = 0 in Γ(3)
        assert!(jmul(&f.diag[0], &f.diag[1]).unwrap().is_zero());

        let alg = build_jordan(JordanKind::HermR, 3).unwrap();
        let e12 = alg.off(1, 2, 1);
        let sq = jmul(&e12, &e12).unwrap();
        let want = alg.diag(1).add(&alg.diag(2)).scale(&Scalar::ratio(1, 2));
        assert_eq!(sq, want);
    }

    #[test]
    fn spin_left_multiplication_spectrum() {
        // L_{e_11} acts with eigenvalues 1, 0, 1/2 on (e_11, e_22, e_12).
        let alg = build_jordan(JordanKind::SpinFactor, 2).unwrap();
        let f = jordan_frame(&alg);
        let e11 = &f.diag[0];
        assert_eq!(jmul(e11, e11).unwrap(), *e11);
        assert!(jmul(e11, &f.diag[1]).unwrap().is_zero());
        let (_, _, _, e12) = &f.off[0];
        assert_eq!(jmul(e11, e12).unwrap(), e12.scale(&Scalar::ratio(1, 2)));
    }

    #[test]
    fn traces_and_inner_products() {
        let alg = build_jordan(JordanKind::HermC, 4).unwrap();
        assert_eq!(trace_of(&alg.unit_element()), Scalar::from_int(4));

        // τ(e, e) = Tr(L_e) = D (direct matrix trace oracle).
        let alg = build_jordan(JordanKind::SpinFactor, 3).unwrap();
        let e = alg.unit_element();
        assert_eq!(lmul_op(&e).trace(), Scalar::from_int(alg.dim as i64));
        assert_eq!(tau(&e, &e).unwrap(), Scalar::from_int(alg.dim as i64));

        // inner(e_11, e_11) = 1/ρ in every kind.
        for (kind, n) in [
            (JordanKind::SpinFactor, 4),
            (JordanKind::HermR, 3),
            (JordanKind::HermC, 3),
            (JordanKind::HermH, 2),
            (JordanKind::HermO3, 3),
        ] {
            let alg = build_jordan(kind, n).unwrap();
            let (rho, _) = alg.rank_degree().unwrap();
            let f = jordan_frame(&alg);
            assert_eq!(
                inner(&f.diag[0], &f.diag[0]).unwrap(),
                Scalar::from_rat(Rat::new(1.into(), (rho as i64).into())),
                "{kind:?}"
            );
        }
    }

    #[test]
    fn unit_and_quadratic_representation() {
        let alg = build_jordan(JordanKind::HermR, 3).unwrap();
        let e = alg.unit_element();
        assert_eq!(lmul_op(&e), Matrix::identity(alg.dim));
        assert_eq!(quad_rep(&e).unwrap(), Matrix::identity(alg.dim));
        // P(e_11) fixes the line through e_11
        let e11 = alg.diag(1);
        let p = quad_rep(&e11).unwrap();
        assert_eq!(alg.element(p.apply(&e11.coeffs)), e11);
    }

    #[test]
    fn metric_identities_on_random_elements() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for (kind, n) in [
            (JordanKind::SpinFactor, 3),
            (JordanKind::HermR, 3),
            (JordanKind::HermC, 2),
            (JordanKind::HermH, 2),
            (JordanKind::HermO3, 3),
        ] {
            let alg = build_jordan(kind, n).unwrap();
            let (rho, _) = alg.rank_degree().unwrap();
            for _ in 0..5 {
                let u = random_element(&alg, &mut rng);
                let v = random_element(&alg, &mut rng);
                // <u|v> = (1/ρ) tr(uv)
                let lhs = inner(&u, &v).unwrap();
                let rhs = trace_of(&jmul(&u, &v).unwrap())
                    .scale(&Rat::new(1.into(), (rho as i64).into()));
                assert_eq!(lhs, rhs, "{kind:?}");
                // tr(u) = (ρ/D) Tr(L_u)
                let lhs = trace_of(&u);
                let rhs = lmul_op(&u)
                    .trace()
                    .scale(&Rat::new((rho as i64).into(), (alg.dim as i64).into()));
                assert_eq!(lhs, rhs, "{kind:?}");
            }
        }
    }

    #[test]
    fn frames_and_axioms_pass() {
        for (kind, n) in [
            (JordanKind::SpinFactor, 4),
            (JordanKind::HermR, 3),
            (JordanKind::HermC, 3),
            (JordanKind::HermH, 2),
            (JordanKind::HermO3, 3),
        ] {
            let alg = build_jordan(kind, n).unwrap();
            let frame = jordan_frame(&alg);
            let rep = verify_frame(&alg, &frame);
            assert!(rep.all_passed(), "{kind:?}: {:?}", rep.first_failure());
            let rep = verify_jordan_axioms(&alg, 10, 42);
            assert!(rep.all_passed(), "{kind:?}: {:?}", rep.first_failure());
        }
    }

    #[test]
    fn corrupted_tensor_is_detected() {
        let alg = build_jordan(JordanKind::HermR, 3).unwrap();
        let mut corrupted = JordanAlgebra {
            kind: alg.kind,
            n: alg.n,
            dim: alg.dim,
            basis: alg.basis.clone(),
            product: alg.product.clone(),
            unit: alg.unit.clone(),
        };
        // Flip one structure constant.
        let row = &mut corrupted.product[1 * corrupted.dim + 2];
        if row.is_empty() {
            row.push((0, Scalar::one()));
        } else {
            row[0].1 = -&row[0].1;
        }
        let corrupted = Arc::new(corrupted);
        let rep = verify_jordan_axioms(&corrupted, 10, 42);
        assert!(!rep.all_passed());
        assert!(rep.first_failure().is_some());
    }
}
