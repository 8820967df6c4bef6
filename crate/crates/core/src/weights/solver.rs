//! Bounded exhaustive search for weights satisfying the full equation
//! system for some nonzero constant, with family classification against the
//! closed-form weight lists.

use num::Zero;
use rayon::prelude::*;

use crate::error::Result;
use crate::exactnum::{Rat, Scalar};
use crate::jordan::JordanKind;

use super::equations::EquationSystem;
use super::{a_of, family_weights, Weight};

#[derive(Clone, Debug)]
pub struct Solution {
    pub lambda: Weight,
    pub a: Rat,
    /// Family parameter when the tuple matches a closed-form family.
    pub family: Option<(String, Rat)>,
}

/// Candidate entry values `p/q` with `|p| ≤ bound` and `q` ranging over the
/// case's lattice denominators.
fn entry_values(kind: JordanKind, n: usize, bound: i64) -> Vec<Rat> {
    let denoms: Vec<i64> = match kind {
        JordanKind::HermR => vec![2],
        JordanKind::HermC => vec![2 * n as i64],
        JordanKind::HermH => vec![1],
        JordanKind::HermO3 => vec![1, 2],
        JordanKind::SpinFactor => vec![2],
    };
    let mut out = Vec::new();
    for q in denoms {
        for p in -bound..=bound {
            let v = Rat::new(p.into(), q.into());
            if !out.contains(&v) {
                out.push(v);
            }
        }
    }
    out.sort();
    out
}

/// Solve `a` from the first equation that uses it; `None` when every
/// a-equation is degenerate or two of them disagree.
fn solve_a(system: &EquationSystem, lambda: &[Rat]) -> Option<Rat> {
    let mut found: Option<Rat> = None;
    for eq in &system.equations {
        if !eq.uses_a() {
            continue;
        }
        // Equations are affine in a with coefficient 4 (by construction).
        let at_zero = eq.eval(lambda, &Rat::zero());
        let at_one = eq.eval(lambda, &Rat::from_integer(1.into()));
        let slope = &at_one - &at_zero;
        if slope.is_zero() {
            return None;
        }
        let a = -at_zero / slope;
        match &found {
            None => found = Some(a),
            Some(prev) if *prev != a => return None,
            _ => {}
        }
    }
    found
}

fn satisfies(system: &EquationSystem, lambda: &[Rat], a: &Rat) -> bool {
    system
        .equations
        .iter()
        .all(|eq| eq.eval(lambda, a).is_zero())
}

/// Exhaustive bounded search. The search space partitions by the leading
/// coordinate; candidates verify independently and merge in sorted order.
pub fn solve_weights(system: &EquationSystem, k_max: i64, bound: i64) -> Result<Vec<Solution>> {
    let values = entry_values(system.kind, system.n, bound);
    let len = system.coord_len;

    // Depth-first enumeration with chain pruning at every prefix.
    fn extend(
        system: &EquationSystem,
        values: &[Rat],
        prefix: &mut Vec<Rat>,
        len: usize,
        out: &mut Vec<Weight>,
    ) {
        if prefix.len() == len {
            out.push(prefix.clone());
            return;
        }
        for val in values {
            prefix.push(val.clone());
            if system.prefix_admissible(prefix) {
                extend(system, values, prefix, len, out);
            }
            prefix.pop();
        }
    }

    let mut candidates = Vec::new();
    // Partition by the first coordinate for parallel verification.
    let firsts: Vec<Rat> = values.clone();
    let partitioned: Vec<Vec<Weight>> = firsts
        .par_iter()
        .map(|first| {
            let mut out = Vec::new();
            let mut prefix = vec![first.clone()];
            if system.prefix_admissible(&prefix) {
                extend(system, &values, &mut prefix, len, &mut out);
            }
            out
        })
        .collect();
    for p in partitioned {
        candidates.extend(p);
    }

    let mut solutions: Vec<Solution> = candidates
        .par_iter()
        .filter_map(|lambda| {
            let a = solve_a(system, lambda)?;
            if a.is_zero() {
                return None;
            }
            if !satisfies(system, lambda, &a) {
                return None;
            }
            Some(Solution {
                lambda: lambda.clone(),
                a,
                family: None,
            })
        })
        .collect();
    solutions.sort_by(|x, y| x.lambda.cmp(&y.lambda));

    // Classify against the closed-form families with k ≤ k_max.
    let families = family_weights(system.kind, system.n, k_max)?;
    for sol in &mut solutions {
        for (name, k, w) in &families {
            if &sol.lambda == w {
                sol.family = Some((name.clone(), k.clone()));
                // The solved constant must agree with the closed form.
                let expected = a_of(system.kind, system.n, k)?;
                if Scalar::from_rat(sol.a.clone()) != Scalar::from_rat(expected) {
                    sol.family = Some((format!("{name} (constant mismatch)"), k.clone()));
                }
                break;
            }
        }
    }
    Ok(solutions)
}
