//! Exact dense linear algebra over the scalar field: matrices, echelon
//! span tracking with provenance, inversion, and nullspaces. Everything is
//! deterministic — pivots are chosen by scan order, never by magnitude.

use crate::error::{Error, Result};
use crate::exactnum::Scalar;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            m[(i, i)] = Scalar::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> Scalar) -> Self {
        let mut m = Matrix::zero(rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                m[(r, c)] = f(r, c);
            }
        }
        m
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|s| s.is_zero())
    }

    pub fn trace(&self) -> Scalar {
        assert_eq!(self.rows, self.cols);
        let mut t = Scalar::zero();
        for i in 0..self.rows {
            t += &self[(i, i)];
        }
        t
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(other.data.iter()) {
            *a += b;
        }
        out
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(other.data.iter()) {
            *a -= b;
        }
        out
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        let mut out = self.clone();
        for a in out.data.iter_mut() {
            *a *= s;
        }
        out
    }

    pub fn matmul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows);
        let mut out = Matrix::zero(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(r, k)];
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = &other[(k, c)];
                    if b.is_zero() {
                        continue;
                    }
                    let p = a * b;
                    out[(r, c)] += &p;
                }
            }
        }
        out
    }

    pub fn commutator(&self, other: &Matrix) -> Matrix {
        self.matmul(other).sub(&other.matmul(self))
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len());
        let mut out = vec![Scalar::zero(); self.rows];
        for c in 0..self.cols {
            if v[c].is_zero() {
                continue;
            }
            for r in 0..self.rows {
                let a = &self[(r, c)];
                if a.is_zero() {
                    continue;
                }
                let p = a * &v[c];
                out[r] += &p;
            }
        }
        out
    }

    pub fn flatten(&self) -> Vec<Scalar> {
        self.data.clone()
    }

    /// Exact inverse by Gauss–Jordan elimination; `None` when singular.
    pub fn inverse(&self) -> Option<Matrix> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Matrix::identity(n);
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a[(r, col)].is_zero())?;
            if pivot != col {
                for c in 0..n {
                    let tmp = a[(pivot, c)].clone();
                    a[(pivot, c)] = a[(col, c)].clone();
                    a[(col, c)] = tmp;
                    let tmp = inv[(pivot, c)].clone();
                    inv[(pivot, c)] = inv[(col, c)].clone();
                    inv[(col, c)] = tmp;
                }
            }
            let pinv = a[(col, col)].inv().ok()?;
            for c in 0..n {
                a[(col, c)] *= &pinv;
                inv[(col, c)] *= &pinv;
            }
            for r in 0..n {
                if r == col || a[(r, col)].is_zero() {
                    continue;
                }
                let f = a[(r, col)].clone();
                for c in 0..n {
                    let d = &a[(col, c)] * &f;
                    a[(r, c)] -= &d;
                    let d = &inv[(col, c)] * &f;
                    inv[(r, c)] -= &d;
                }
            }
        }
        Some(inv)
    }

    /// Basis of the right nullspace.
    pub fn nullspace(&self) -> Vec<Vec<Scalar>> {
        let mut a = self.clone();
        let n = self.cols;
        let mut pivot_cols = Vec::new();
        let mut row = 0;
        for col in 0..n {
            let pivot = (row..self.rows).find(|&r| !a[(r, col)].is_zero());
            let pivot = match pivot {
                Some(p) => p,
                None => continue,
            };
            if pivot != row {
                for c in 0..n {
                    let tmp = a[(pivot, c)].clone();
                    a[(pivot, c)] = a[(row, c)].clone();
                    a[(row, c)] = tmp;
                }
            }
            let pinv = a[(row, col)].inv().expect("nonzero pivot");
            for c in 0..n {
                a[(row, c)] *= &pinv;
            }
            for r in 0..self.rows {
                if r == row || a[(r, col)].is_zero() {
                    continue;
                }
                let f = a[(r, col)].clone();
                for c in 0..n {
                    let d = &a[(row, c)] * &f;
                    a[(r, c)] -= &d;
                }
            }
            pivot_cols.push(col);
            row += 1;
            if row == self.rows {
                break;
            }
        }
        let mut basis = Vec::new();
        for free in 0..n {
            if pivot_cols.contains(&free) {
                continue;
            }
            let mut v = vec![Scalar::zero(); n];
            v[free] = Scalar::one();
            for (r, &pc) in pivot_cols.iter().enumerate() {
                v[pc] = -&a[(r, free)];
            }
            basis.push(v);
        }
        basis
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Scalar;
    fn index(&self, (r, c): (usize, usize)) -> &Scalar {
        &self.data[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Scalar {
        &mut self.data[r * self.cols + c]
    }
}

/// Incrementally built echelon span with optional provenance tracking:
/// every basis row remembers the linear combination of inserted candidates
/// it came from.
pub struct EchelonBasis {
    pub cols: usize,
    rows: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
    /// provenance[r] = coefficients over candidate indices.
    provenance: Vec<Vec<(usize, Scalar)>>,
    track_provenance: bool,
    inserted: usize,
}

pub enum Inserted {
    /// Candidate was independent; stored at this basis index.
    Independent(usize),
    /// Candidate reduced to zero: coordinates over the existing basis.
    Dependent(Vec<Scalar>),
}

impl EchelonBasis {
    pub fn new(cols: usize, track_provenance: bool) -> Self {
        EchelonBasis {
            cols,
            rows: Vec::new(),
            pivots: Vec::new(),
            provenance: Vec::new(),
            track_provenance,
            inserted: 0,
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<Scalar>] {
        &self.rows
    }

    pub fn provenance(&self, row: usize) -> &[(usize, Scalar)] {
        &self.provenance[row]
    }

    /// Reduce `v` against the basis; returns `(coords, remainder)`.
    pub fn reduce(&self, v: &[Scalar]) -> (Vec<Scalar>, Vec<Scalar>) {
        assert_eq!(v.len(), self.cols);
        let mut rem = v.to_vec();
        let mut coords = vec![Scalar::zero(); self.rows.len()];
        for (r, row) in self.rows.iter().enumerate() {
            let p = self.pivots[r];
            if rem[p].is_zero() {
                continue;
            }
            // Pivot entries are normalized to one.
            let f = rem[p].clone();
            for c in 0..self.cols {
                if row[c].is_zero() {
                    continue;
                }
                let d = &row[c] * &f;
                rem[c] -= &d;
            }
            coords[r] = f;
        }
        (coords, rem)
    }

    /// Candidate index assigned in insertion order (for provenance).
    pub fn insert(&mut self, v: &[Scalar]) -> Inserted {
        let cand = self.inserted;
        self.inserted += 1;
        let (coords, mut rem) = self.reduce(v);
        let pivot = rem.iter().position(|s| !s.is_zero());
        let pivot = match pivot {
            Some(p) => p,
            None => return Inserted::Dependent(coords),
        };
        let pinv = rem[pivot].inv().expect("nonzero pivot");
        for c in 0..self.cols {
            rem[c] *= &pinv;
        }
        if self.track_provenance {
            // rem = pinv·(candidate − Σ coords_r · rows_r)
            let mut prov: Vec<(usize, Scalar)> = vec![(cand, pinv.clone())];
            for (r, f) in coords.iter().enumerate() {
                if f.is_zero() {
                    continue;
                }
                let factor = -&(&pinv * f);
                for (c2, s) in &self.provenance[r] {
                    prov.push((*c2, &factor * s));
                }
            }
            prov.sort_by_key(|(c, _)| *c);
            let mut merged: Vec<(usize, Scalar)> = Vec::new();
            for (c, s) in prov {
                match merged.last_mut() {
                    Some((lc, ls)) if *lc == c => *ls += &s,
                    _ => merged.push((c, s)),
                }
            }
            merged.retain(|(_, s)| !s.is_zero());
            self.provenance.push(merged);
        } else {
            self.provenance.push(Vec::new());
        }
        self.rows.push(rem);
        self.pivots.push(pivot);
        Inserted::Independent(self.rows.len() - 1)
    }

    /// Coordinates of `v` in the basis; error when `v` lies outside the span.
    pub fn coordinates(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        let (coords, rem) = self.reduce(v);
        if rem.iter().any(|s| !s.is_zero()) {
            return Err(Error::Consistency("vector outside the tracked span".into()));
        }
        Ok(coords)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::Scalar;

    fn s(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    #[test]
    fn inverse_round_trip() {
        let m = Matrix::from_fn(3, 3, |r, c| match (r, c) {
            (0, 0) => s(2),
            (0, 1) => Scalar::sqrt(2),
            (1, 1) => s(1),
            (1, 2) => Scalar::i(),
            (2, 0) => s(1),
            (2, 2) => s(3),
            _ => s(0),
        });
        let inv = m.inverse().expect("invertible");
        assert_eq!(m.matmul(&inv), Matrix::identity(3));
    }

    #[test]
    fn echelon_provenance_reconstructs_rows() {
        let cands = vec![
            vec![s(1), s(2), s(0)],
            vec![s(2), s(4), s(0)], // dependent
            vec![s(0), s(1), s(1)],
        ];
        let mut ech = EchelonBasis::new(3, true);
        for c in &cands {
            ech.insert(c);
        }
        assert_eq!(ech.rank(), 2);
        for r in 0..ech.rank() {
            let mut rebuilt = vec![Scalar::zero(); 3];
            for (ci, f) in ech.provenance(r) {
                for (k, val) in cands[*ci].iter().enumerate() {
                    let d = f * val;
                    rebuilt[k] += &d;
                }
            }
            assert_eq!(&rebuilt, &ech.rows()[r]);
        }
    }

    #[test]
    fn nullspace_of_rank_one() {
        let m = Matrix::from_fn(2, 3, |r, c| if r == 0 { s(c as i64 + 1) } else { s(0) });
        let ns = m.nullspace();
        assert_eq!(ns.len(), 2);
        for v in ns {
            assert!(m.apply(&v).iter().all(|x| x.is_zero()));
        }
    }
}
