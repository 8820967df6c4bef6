//! Per-case signed root lists with compactness and positivity flags.
use num::Zero;

use crate::error::{Error, Result};
use crate::exactnum::{rat, ratio, Rat};
use crate::jordan::JordanKind;

use super::{Root, RootSystem};

fn unit(len: usize, idx: usize, sign: i64) -> Vec<Rat> {
    let mut v = vec![Rat::zero(); len];
    v[idx] = rat(sign);
    v
}

fn two_unit(len: usize, i: usize, si: i64, j: usize, sj: i64) -> Vec<Rat> {
    let mut v = vec![Rat::zero(); len];
    v[i] = rat(si);
    v[j] = rat(sj);
    v
}

fn with_negatives(mut roots: Vec<Root>) -> Vec<Root> {
    let negs: Vec<Root> = roots.iter().map(|r| r.neg()).collect();
    roots.extend(negs);
    roots
}

/// `sp(n,R)`: positives are `e_i−e_j` (compact), `e_i+e_j`, `2e_i`
/// (noncompact), coordinates of length n.
fn sp_roots(n: usize) -> RootSystem {
    let mut pos = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            pos.push(Root::new(two_unit(n, i, 1, j, -1), true, true));
            pos.push(Root::new(two_unit(n, i, 1, j, 1), false, true));
        }
    }
    for i in 0..n {
        pos.push(Root::new(unit(n, i, 2), false, true));
    }
    RootSystem {
        coord_len: n,
        roots: with_negatives(pos),
    }
}

/// `su(n,n)`: roots `e_s−e_t` (s≠t ≤ 2n), positive iff `s<t`, noncompact iff
/// the indices straddle the two blocks.
fn su_roots(n: usize) -> RootSystem {
    let len = 2 * n;
    let mut roots = Vec::new();
    for s in 0..len {
        for t in 0..len {
            if s == t {
                continue;
            }
            let compact = (s < n) == (t < n);
            roots.push(Root::new(two_unit(len, s, 1, t, -1), compact, s < t));
        }
    }
    RootSystem {
        coord_len: len,
        roots,
    }
}

/// `so*(4n)`: compact `±(e_s−e_t)`, noncompact `±(e_s+e_t)`, `s<t ≤ 2n`.
fn so_star_roots(n: usize) -> RootSystem {
    let len = 2 * n;
    let mut pos = Vec::new();
    for s in 0..len {
        for t in (s + 1)..len {
            pos.push(Root::new(two_unit(len, s, 1, t, -1), true, true));
            pos.push(Root::new(two_unit(len, s, 1, t, 1), false, true));
        }
    }
    RootSystem {
        coord_len: len,
        roots: with_negatives(pos),
    }
}

/// `e7(−25)` in 8 coordinates. Compact positives: `±e_i+e_j` (i<j≤5) and the
/// even-signature half-sums `(e_8−e_7−e_6+Σ(−1)^{n(i)}e_i)/2`; noncompact
/// positives: `±e_i+e_6` (i≤5), `e_8−e_7`, and the odd-signature half-sums
/// `(e_8−e_7+e_6+Σ(−1)^{n(i)}e_i)/2`.
fn e7_roots() -> RootSystem {
    let len = 8;
    let mut pos = Vec::new();
    for i in 0..5 {
        for j in (i + 1)..5 {
            pos.push(Root::new(two_unit(len, i, 1, j, 1), true, true));
            pos.push(Root::new(two_unit(len, i, -1, j, 1), true, true));
        }
    }
    for i in 0..5 {
        pos.push(Root::new(two_unit(len, i, 1, 5, 1), false, true));
        pos.push(Root::new(two_unit(len, i, -1, 5, 1), false, true));
    }
    pos.push(Root::new(two_unit(len, 6, -1, 7, 1), false, true));
    for mask in 0..32u32 {
        let parity = mask.count_ones() % 2;
        let mut coords = vec![Rat::zero(); len];
        coords[7] = ratio(1, 2);
        coords[6] = ratio(-1, 2);
        for (i, c) in coords.iter_mut().enumerate().take(5) {
            *c = if mask & (1 << i) != 0 {
                ratio(-1, 2)
            } else {
                ratio(1, 2)
            };
        }
        if parity == 0 {
            coords[5] = ratio(-1, 2);
            pos.push(Root::new(coords, true, true));
        } else {
            coords[5] = ratio(1, 2);
            pos.push(Root::new(coords, false, true));
        }
    }
    RootSystem {
        coord_len: len,
        roots: with_negatives(pos),
    }
}

/// `so(2, m+1)` for the spin factor `Γ(m)`: type B when `m` is even, type D
/// when `m` is odd; the first coordinate carries the noncompact direction.
fn so2m_roots(m: usize) -> RootSystem {
    let rank = (m + 3) / 2;
    let b_type = (m + 3) % 2 == 1;
    let mut pos = Vec::new();
    for s in 0..rank {
        for t in (s + 1)..rank {
            let noncompact = s == 0;
            pos.push(Root::new(two_unit(rank, s, 1, t, -1), !noncompact, true));
            pos.push(Root::new(two_unit(rank, s, 1, t, 1), !noncompact, true));
        }
    }
    if b_type {
        for s in 0..rank {
            pos.push(Root::new(unit(rank, s, 1), s != 0, true));
        }
    }
    RootSystem {
        coord_len: rank,
        roots: with_negatives(pos),
    }
}

/// Full signed root list with the per-case compact/noncompact and positivity
/// conventions. For spin factors these are the roots of `so(2, n+1)`.
pub fn root_system(kind: JordanKind, n: usize) -> Result<RootSystem> {
    let sys = match kind {
        JordanKind::SpinFactor => {
            if n < 2 {
                return Err(Error::Unsupported("spin factor needs n >= 2".into()));
            }
            so2m_roots(n)
        }
        JordanKind::HermR => {
            if n < 2 {
                return Err(Error::Unsupported("hermR root system needs n >= 2".into()));
            }
            sp_roots(n)
        }
        JordanKind::HermC => {
            if n < 2 {
                return Err(Error::Unsupported("hermC needs n >= 2".into()));
            }
            su_roots(n)
        }
        JordanKind::HermH => {
            if n < 2 {
                return Err(Error::Unsupported("hermH needs n >= 2".into()));
            }
            so_star_roots(n)
        }
        JordanKind::HermO3 => {
            if n != 3 {
                return Err(Error::Unsupported("hermO3 takes n = 3".into()));
            }
            e7_roots()
        }
    };
    Ok(sys)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::ratio;
    use num::Signed;

    #[test]
    fn sp3_counts() {
        let sys = root_system(JordanKind::HermR, 3).unwrap();
        assert_eq!(sys.roots.len(), 18);
        let long: Vec<&Root> = sys
            .roots
            .iter()
            .filter(|r| r.coords.iter().any(|c| c.abs() == ratio(2, 1)))
            .collect();
        assert_eq!(long.len(), 6);
        assert!(long.iter().all(|r| !r.compact));
        assert_eq!(sys.noncompact_positive_count(), 6); // D = dim HermR(3)
    }

    #[test]
    fn su22_noncompact_positives() {
        let sys = root_system(JordanKind::HermC, 2).unwrap();
        let mut nc: Vec<String> = sys
            .positives()
            .filter(|r| !r.compact)
            .map(|r| r.key())
            .collect();
        nc.sort();
        // exactly e_i − e_j with i ≤ n < j
        assert_eq!(
            nc,
            vec!["0,1,-1,0", "0,1,0,-1", "1,0,-1,0", "1,0,0,-1"]
        );
        assert_eq!(sys.roots.len(), 12);
    }

    #[test]
    fn e7_counts_by_enumeration() {
        // Independent enumeration oracle: 2·(20 + 16) compact, 2·(10+1+16)
        // noncompact.
        let sys = root_system(JordanKind::HermO3, 3).unwrap();
        assert_eq!(sys.roots.len(), 126);
        let noncompact = sys.roots.iter().filter(|r| !r.compact).count();
        assert_eq!(noncompact, 54);
        assert_eq!(sys.noncompact_positive_count(), 27); // = dim HermO3
                                                         // All roots have squared length 2 and are distinct.
        for r in &sys.roots {
            assert_eq!(r.norm_sq(), ratio(2, 1));
        }
        let keys: std::collections::BTreeSet<String> = sys.roots.iter().map(|r| r.key()).collect();
        assert_eq!(keys.len(), 126);
    }

    #[test]
    fn noncompact_positive_count_equals_jordan_dim() {
        for (kind, n, dim) in [
            (JordanKind::SpinFactor, 3, 4),
            (JordanKind::SpinFactor, 4, 5),
            (JordanKind::HermR, 3, 6),
            (JordanKind::HermC, 3, 9),
            (JordanKind::HermH, 3, 15),
            (JordanKind::HermO3, 3, 27),
        ] {
            let sys = root_system(kind, n).unwrap();
            assert_eq!(sys.noncompact_positive_count(), dim, "{kind:?}({n})");
        }
    }
}
