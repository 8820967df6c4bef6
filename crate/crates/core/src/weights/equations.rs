//! Per-case highest-weight equation systems: exact polynomials in the weight
//! coordinates and the free constant, plus the unitarity inequality chains.
//!
//! Variable layout: indices `0..len` are the weight coordinates, index `len`
//! is the constant `a`.

use num::{Signed, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{rat, ratio, Rat, Scalar};
use crate::jordan::JordanKind;

use super::poly::Poly;

/// Which quadratic element an equation's scalar evaluation comes from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QSource {
    Q1,
    Q2,
    /// Third relation with `u = √ρ·e_ii`.
    Q3Diag(usize),
    /// Fourth relation with `u = √ρ·e_ii`.
    Q4Diag(usize),
    /// Fourth relation with `u = e_ii + e_jj`.
    Q4Pair(usize, usize),
    /// Fourth relation with `u = √ρ·e_ij` (first off-diagonal family).
    Q4Off(usize, usize),
    /// Not a direct evaluation (derived or conventional constraint).
    Derived,
}

pub struct Equation {
    pub id: String,
    pub poly: Poly,
    pub source: QSource,
    /// Frozen exact ratio `hw_scalar / poly` connecting the two evaluation
    /// paths; `None` for derived equations and for the displays that arise
    /// as combinations modulo the rest of the system.
    pub hw_factor: Option<Scalar>,
}

impl Equation {
    pub fn uses_a(&self) -> bool {
        self.poly.uses_var(self.poly.nvars - 1)
    }

    pub fn eval(&self, lambda: &[Rat], a: &Rat) -> Rat {
        let mut vals = lambda.to_vec();
        vals.push(a.clone());
        self.poly.eval(&vals)
    }
}

pub struct EquationSystem {
    pub kind: JordanKind,
    pub n: usize,
    pub coord_len: usize,
    pub equations: Vec<Equation>,
    /// `λ_i ≤ λ_j` (0-based).
    pub chain: Vec<(usize, usize)>,
    /// `|λ_i| ≤ λ_j`.
    pub abs_le: Vec<(usize, usize)>,
    /// `λ_i ≤ −λ_j`.
    pub le_neg: Vec<(usize, usize)>,
    /// `λ_i ≤ −|λ_j|`.
    pub le_neg_abs: Vec<(usize, usize)>,
    /// Sign constraints.
    pub nonpositive: Vec<usize>,
    pub nonnegative: Vec<usize>,
    /// Coordinate conventions `λ_i + λ_j = 0`.
    pub negation_pairs: Vec<(usize, usize)>,
}

impl EquationSystem {
    /// Check the inequality constraints on a full weight.
    pub fn chain_holds(&self, lambda: &[Rat]) -> bool {
        self.prefix_admissible(lambda)
    }

    /// Check every constraint whose coordinates are available in a prefix;
    /// used for pruning during enumeration.
    pub fn prefix_admissible(&self, prefix: &[Rat]) -> bool {
        let len = prefix.len();
        for &(i, j) in &self.chain {
            if i < len && j < len && prefix[i] > prefix[j] {
                return false;
            }
        }
        for &(i, j) in &self.abs_le {
            if i < len && j < len && prefix[i].abs() > prefix[j] {
                return false;
            }
        }
        for &(i, j) in &self.le_neg {
            if i < len && j < len && prefix[i] > -prefix[j].clone() {
                return false;
            }
        }
        for &(i, j) in &self.le_neg_abs {
            if i < len && j < len && prefix[i] > -prefix[j].abs() {
                return false;
            }
        }
        for &i in &self.nonpositive {
            if i < len && prefix[i].is_positive() {
                return false;
            }
        }
        for &i in &self.nonnegative {
            if i < len && prefix[i].is_negative() {
                return false;
            }
        }
        for &(i, j) in &self.negation_pairs {
            if i < len && j < len && !(&prefix[i] + &prefix[j]).is_zero() {
                return false;
            }
        }
        true
    }
}

fn base_system(kind: JordanKind, n: usize, coord_len: usize) -> EquationSystem {
    EquationSystem {
        kind,
        n,
        coord_len,
        equations: Vec::new(),
        chain: Vec::new(),
        abs_le: Vec::new(),
        le_neg: Vec::new(),
        le_neg_abs: Vec::new(),
        nonpositive: Vec::new(),
        nonnegative: Vec::new(),
        negation_pairs: Vec::new(),
    }
}

fn v(nv: usize, i: usize) -> Poly {
    Poly::var(nv, i)
}

fn c(nv: usize, x: i64) -> Poly {
    Poly::int(nv, x)
}

/// `sp(n,R)`: coordinates λ_1..λ_n.
fn sp_system(n: usize) -> EquationSystem {
    let nv = n + 1;
    let a = v(nv, n);
    let sum: Poly = (0..n).fold(Poly::zero(nv), |acc, i| &acc + &v(nv, i));

    let mut equations = Vec::new();
    // (Σλ)² + (n+1)(Σλ) + 4a = 0
    equations.push(Equation {
        id: "q1".into(),
        poly: &(&sum.square() + &sum.scale(&rat(n as i64 + 1))) + &a.scale(&rat(4)),
        source: QSource::Q1,
        hw_factor: Some(Scalar::ratio(1, 4)),
    });
    // (Σλ)² − Σλ² + Σ_{i<j} λ_j = 0
    let sum_sq: Poly = (0..n).fold(Poly::zero(nv), |acc, i| &acc + &v(nv, i).square());
    let tail: Poly = (0..n).fold(Poly::zero(nv), |acc, j| {
        &acc + &v(nv, j).scale(&rat(j as i64))
    });
    equations.push(Equation {
        id: "q2".into(),
        poly: &(&sum.square() - &sum_sq) + &tail,
        source: QSource::Q2,
        hw_factor: Some(Scalar::ratio(n as i64, 4)),
    });
    // (i−1)λ_i + Σ_{j>i}λ_j + 2λ_i·Σ_{p≠i}λ_p = 0, u = √ρ e_ii
    for i in 0..n {
        let after: Poly = ((i + 1)..n).fold(Poly::zero(nv), |acc, j| &acc + &v(nv, j));
        let others = &sum - &v(nv, i);
        let poly =
            &(&v(nv, i).scale(&rat(i as i64)) + &after) + &(&v(nv, i) * &others).scale(&rat(2));
        equations.push(Equation {
            id: format!("q3_diag_{}", i + 1),
            poly,
            source: QSource::Q3Diag(i + 1),
            hw_factor: Some(Scalar::sqrt(n as u64).scale(&ratio(n as i64, 4))),
        });
    }
    // (2λ_1 + 2λ_n + 1)Σλ + (3+n)λ_n − 3λ_1 = 0, u = √ρ e_1n
    let factor = &(&v(nv, 0).scale(&rat(2)) + &v(nv, n - 1).scale(&rat(2))) + &c(nv, 1);
    equations.push(Equation {
        id: "q4_corner".into(),
        poly: &(&(&factor * &sum) + &v(nv, n - 1).scale(&rat(n as i64 + 3)))
            - &v(nv, 0).scale(&rat(3)),
        source: QSource::Q4Off(1, n),
        hw_factor: Some(Scalar::ratio(n as i64, 8)),
    });

    let mut system = base_system(JordanKind::HermR, n, n);
    system.equations = equations;
    system.chain = (1..n).map(|i| (i, i - 1)).collect();
    system.nonpositive = vec![0];
    system
}

/// The diagonal relation body shared by the block cases.
struct BlockParts {
    nv: usize,
    n: usize,
}

impl BlockParts {
    /// δ_i = λ_i ∓ λ_{n+i} (minus for the complex case, plus for the
    /// quaternionic case).
    fn delta(&self, i: usize, plus: bool) -> Poly {
        let x = v(self.nv, i);
        let y = v(self.nv, self.n + i);
        if plus {
            &x + &y
        } else {
            &x - &y
        }
    }

    fn delta_sum(&self, plus: bool) -> Poly {
        (0..self.n).fold(Poly::zero(self.nv), |acc, i| &acc + &self.delta(i, plus))
    }
}

/// `su(n,n)`: coordinates λ_1..λ_2n.
fn su_system(n: usize) -> EquationSystem {
    let len = 2 * n;
    let nv = len + 1;
    let a = v(nv, len);
    let bp = BlockParts { nv, n };
    let dsum = bp.delta_sum(false);

    let mut equations = Vec::new();
    // (Σδ)² + 2n·Σδ + 4a = 0
    equations.push(Equation {
        id: "q1".into(),
        poly: &(&dsum.square() + &dsum.scale(&rat(2 * n as i64))) + &a.scale(&rat(4)),
        source: QSource::Q1,
        hw_factor: Some(Scalar::ratio(1, 4)),
    });
    // Σδ² − (Σδ)² − 2Σ_{i<j}(λ_j − λ_{n+i}) = 0
    let dsq: Poly = (0..n).fold(Poly::zero(nv), |acc, i| &acc + &bp.delta(i, false).square());
    let mut cross = Poly::zero(nv);
    for i in 0..n {
        for j in (i + 1)..n {
            cross = &cross + &(&v(nv, j) - &v(nv, n + i));
        }
    }
    equations.push(Equation {
        id: "q2".into(),
        poly: &(&dsq - &dsum.square()) - &cross.scale(&rat(2)),
        source: QSource::Q2,
        hw_factor: Some(Scalar::ratio(-(n as i64), 4)),
    });
    // A-type: Σ all coordinates = 0
    let total: Poly = (0..len).fold(Poly::zero(nv), |acc, i| &acc + &v(nv, i));
    equations.push(Equation {
        id: "trace_zero".into(),
        poly: total,
        source: QSource::Derived,
        hw_factor: None,
    });
    // diagonal relation bodies
    let body = |i: usize| -> Poly {
        let di = bp.delta(i, false);
        let sum_first: Poly = (0..n).fold(Poly::zero(nv), |acc, j| &acc + &v(nv, j));
        let prefix: Poly =
            (0..i).fold(Poly::zero(nv), |acc, k| &acc + &(&v(nv, k) + &v(nv, n + k)));
        let lin = &(&-&dsum + &c(nv, 2)) - &c(nv, i as i64 + 1);
        &(&(&di.square() + &(&lin * &di))
            + &v(nv, n + i).scale(&rat(n as i64 - 2 * (i as i64 + 1) + 2)))
            - &(&sum_first - &prefix)
    };
    for i in 0..n {
        equations.push(Equation {
            id: format!("q3_diag_{}", i + 1),
            poly: body(i),
            source: QSource::Q3Diag(i + 1),
            hw_factor: Some(Scalar::sqrt(n as u64).scale(&ratio(-(n as i64), 2))),
        });
    }
    for i in 0..n {
        for j in (i + 1)..n {
            let pair = &(&body(i) + &body(j))
                + &(&(&bp.delta(i, false) * &bp.delta(j, false)).scale(&rat(2))
                    + &(&v(nv, j) - &v(nv, n + i)).scale(&rat(2)));
            equations.push(Equation {
                id: format!("q4_pair_{}_{}", i + 1, j + 1),
                poly: pair,
                source: QSource::Q4Pair(i + 1, j + 1),
                hw_factor: Some(Scalar::ratio(-1, 2)),
            });
            // product rule: δ_i δ_j + (λ_j − λ_{n+i}) = 0
            equations.push(Equation {
                id: format!("product_rule_{}_{}", i + 1, j + 1),
                poly: &(&bp.delta(i, false) * &bp.delta(j, false)) + &(&v(nv, j) - &v(nv, n + i)),
                source: QSource::Derived,
                hw_factor: None,
            });
        }
    }

    // chain: λ_n ≤ … ≤ λ_1 ≤ λ_2n ≤ … ≤ λ_{n+1}
    let mut chain = Vec::new();
    for i in (1..n).rev() {
        chain.push((i, i - 1));
    }
    chain.push((0, 2 * n - 1));
    for i in ((n + 1)..(2 * n)).rev() {
        chain.push((i, i - 1));
    }

    let mut system = base_system(JordanKind::HermC, n, len);
    system.equations = equations;
    system.chain = chain;
    system
}

/// `so*(4n)`: coordinates λ_1..λ_2n.
fn so_star_system(n: usize) -> EquationSystem {
    let len = 2 * n;
    let nv = len + 1;
    let a = v(nv, len);
    let bp = BlockParts { nv, n };
    let ssum = bp.delta_sum(true);

    let mut equations = Vec::new();
    // (Σσ)² + (4n−2)Σσ + 4a = 0
    equations.push(Equation {
        id: "q1".into(),
        poly: &(&ssum.square() + &ssum.scale(&rat(4 * n as i64 - 2))) + &a.scale(&rat(4)),
        source: QSource::Q1,
        hw_factor: Some(Scalar::ratio(1, 4)),
    });
    // Σσ² − (Σσ)² − 2Σ_{i<j}(λ_j + λ_{n+i} + 2λ_{n+j}) = 0
    let ssq: Poly = (0..n).fold(Poly::zero(nv), |acc, i| &acc + &bp.delta(i, true).square());
    let mut cross = Poly::zero(nv);
    for i in 0..n {
        for j in (i + 1)..n {
            cross = &cross + &(&(&v(nv, j) + &v(nv, n + i)) + &v(nv, n + j).scale(&rat(2)));
        }
    }
    equations.push(Equation {
        id: "q2".into(),
        poly: &(&ssq - &ssum.square()) - &cross.scale(&rat(2)),
        source: QSource::Q2,
        hw_factor: Some(Scalar::ratio(-(n as i64), 4)),
    });
    let body = |i: usize| -> Poly {
        let si = bp.delta(i, true);
        let lin = &(&-&ssum + &c(nv, 2)) - &c(nv, i as i64 + 1);
        let sum_second: Poly = (0..n).fold(Poly::zero(nv), |acc, l| &acc + &v(nv, n + l));
        let prefix: Poly = (0..i).fold(Poly::zero(nv), |acc, k| &acc + &bp.delta(k, true));
        &(&(&(&si.square() + &(&lin * &si)) - &v(nv, n + i).scale(&rat(n as i64 - 2)))
            - &(&sum_second + &ssum))
            + &prefix
    };
    for i in 0..n {
        equations.push(Equation {
            id: format!("q3_diag_{}", i + 1),
            poly: body(i),
            source: QSource::Q3Diag(i + 1),
            hw_factor: Some(Scalar::sqrt(n as u64).scale(&ratio(-(n as i64), 2))),
        });
    }
    for i in 0..n {
        for j in (i + 1)..n {
            let extra = &(&v(nv, j) + &v(nv, n + i)) + &v(nv, n + j).scale(&rat(2));
            let pair = &(&body(i) + &body(j))
                + &(&(&bp.delta(i, true) * &bp.delta(j, true)).scale(&rat(2))
                    + &extra.scale(&rat(2)));
            equations.push(Equation {
                id: format!("q4_pair_{}_{}", i + 1, j + 1),
                poly: pair,
                source: QSource::Q4Pair(i + 1, j + 1),
                hw_factor: Some(Scalar::ratio(-1, 2)),
            });
            equations.push(Equation {
                id: format!("product_rule_{}_{}", i + 1, j + 1),
                poly: &(&bp.delta(i, true) * &bp.delta(j, true)) + &extra,
                source: QSource::Derived,
                hw_factor: None,
            });
        }
    }
    // off-diagonal fourth relation, u = √ρ e_12:
    // (λ_1+λ_2+λ_{n+1}+λ_{n+2})(n+1+Σσ) + 2Σ(λ_i+2λ_{n+i})
    //   − (λ_1−λ_2−λ_{n+1}+λ_{n+2})² − (n+1)λ_1 − (n−3)λ_2 − 5λ_{n+1} − λ_{n+2} = 0
    if n >= 2 {
        let grp = &(&v(nv, 0) + &v(nv, 1)) + &(&v(nv, n) + &v(nv, n + 1));
        let skew = &(&v(nv, 0) - &v(nv, 1)) - &(&v(nv, n) - &v(nv, n + 1));
        let lin_sum: Poly = (0..n).fold(Poly::zero(nv), |acc, i| {
            &acc + &(&v(nv, i) + &v(nv, n + i).scale(&rat(2)))
        });
        let poly = &(&(&(&grp * &(&ssum + &c(nv, n as i64 + 1))) + &lin_sum.scale(&rat(2)))
            - &skew.square())
            - &(&(&v(nv, 0).scale(&rat(n as i64 + 1)) + &v(nv, 1).scale(&rat(n as i64 - 3)))
                + &(&v(nv, n).scale(&rat(5)) + &v(nv, n + 1)));
        equations.push(Equation {
            id: "q4_offdiag_12".into(),
            poly,
            source: QSource::Q4Off(1, 2),
            // arises as a combination modulo the rest of the system
            hw_factor: None,
        });
    }

    // chain: λ_2n ≤ … ≤ λ_{n+1} ≤ λ_n ≤ … ≤ λ_2 ≤ −|λ_1|
    let mut chain = Vec::new();
    for i in ((n + 1)..(2 * n)).rev() {
        chain.push((i, i - 1));
    }
    chain.push((n, n - 1));
    for i in (2..n).rev() {
        chain.push((i, i - 1));
    }

    let mut system = base_system(JordanKind::HermH, n, len);
    system.equations = equations;
    system.chain = chain;
    // λ_2 ≤ −|λ_1|
    system.le_neg_abs = vec![(1, 0)];
    system
}

/// `e7(−25)`: coordinates λ_1..λ_8 with the convention λ_7 + λ_8 = 0.
fn e7_system() -> EquationSystem {
    let len = 8;
    let nv = len + 1;
    let a = v(nv, len);
    // key combination: 2λ_6 + λ_8 − λ_7
    let key = &(&v(nv, 5).scale(&rat(2)) + &v(nv, 7)) - &v(nv, 6);

    let mut equations = Vec::new();
    equations.push(Equation {
        id: "q1".into(),
        poly: &(&key.square() + &key.scale(&rat(18))) + &a.scale(&rat(4)),
        source: QSource::Q1,
        hw_factor: Some(Scalar::ratio(1, 4)),
    });
    // key² − (λ_6−λ_3)² − (λ_6+λ_3)² − (λ_8−λ_7)² + 24λ_6 − 4λ_3 − 2λ_4 − 2λ_5 = 0
    let d63 = &v(nv, 5) - &v(nv, 2);
    let s63 = &v(nv, 5) + &v(nv, 2);
    let d87 = &v(nv, 7) - &v(nv, 6);
    let lin = &(&v(nv, 5).scale(&rat(24)) - &v(nv, 2).scale(&rat(4)))
        - &(&v(nv, 3).scale(&rat(2)) + &v(nv, 4).scale(&rat(2)));
    equations.push(Equation {
        id: "q2".into(),
        poly: &(&(&(&key.square() - &d63.square()) - &s63.square()) - &d87.square()) + &lin,
        source: QSource::Q2,
        hw_factor: Some(Scalar::ratio(-3, 4)),
    });
    // λ_6(4 − 2λ_7) = 0, u = √ρ e_33
    equations.push(Equation {
        id: "q3_diag_3".into(),
        poly: &v(nv, 5) * &(&c(nv, 4) - &v(nv, 6).scale(&rat(2))),
        source: QSource::Q3Diag(3),
        hw_factor: None,
    });
    // λ_7(4 + λ_6) = 0, u = √ρ e_33
    equations.push(Equation {
        id: "q4_diag_3".into(),
        poly: &v(nv, 6) * &(&c(nv, 4) + &v(nv, 5)),
        source: QSource::Q4Diag(3),
        hw_factor: None,
    });
    // coordinate convention: λ_7 + λ_8 = 0
    equations.push(Equation {
        id: "coordinate_convention".into(),
        poly: &v(nv, 6) + &v(nv, 7),
        source: QSource::Derived,
        hw_factor: None,
    });

    // chain: −λ_6 ≥ λ_5 ≥ λ_4 ≥ λ_3 ≥ λ_2 ≥ |λ_1| ≥ 0, λ_8 ≤ 0 ≤ λ_7.
    let mut system = base_system(JordanKind::HermO3, 3, len);
    system.equations = equations;
    system.chain = vec![(3, 4), (2, 3), (1, 2)];
    system.abs_le = vec![(0, 1)];
    system.le_neg = vec![(4, 5)];
    system.nonpositive = vec![5, 7];
    system.nonnegative = vec![1, 2, 3, 4, 6];
    system.negation_pairs = vec![(6, 7)];
    system
}

/// The per-case equation system; spin factors have no displayed system and
/// are out of the solver's scope.
pub fn equations_for(kind: JordanKind, n: usize) -> Result<EquationSystem> {
    match kind {
        JordanKind::HermR if n >= 2 => Ok(sp_system(n)),
        JordanKind::HermC if n >= 2 => Ok(su_system(n)),
        JordanKind::HermH if n >= 2 => Ok(so_star_system(n)),
        JordanKind::HermO3 if n == 3 => Ok(e7_system()),
        JordanKind::SpinFactor => Err(Error::Unsupported(
            "no displayed equation system for spin factors".into(),
        )),
        _ => Err(Error::Unsupported(format!(
            "equations undefined for {}({n})",
            kind.name()
        ))),
    }
}
