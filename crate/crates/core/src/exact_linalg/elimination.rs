//! Rank, determinants, solving and null spaces over the rationals.

use itertools::Itertools;

use super::rational::{lcm_denominators, Rational};
use super::vector::{RationalMatrix, RationalVector};
use crate::error::{Error, Result};

/// Scales each row to integers so elimination stays fraction-free.
fn integer_scaled(rows: &[RationalVector]) -> Vec<Vec<Rational>> {
    rows.iter()
        .map(|r| {
            if r.is_integral() {
                return r.coords().to_vec();
            }
            let l = Rational::from_bigint(lcm_denominators(r.coords()));
            r.iter().map(|x| x * &l).collect()
        })
        .collect()
}

/// Bareiss elimination in place. Returns the rank and, for square input, the
/// sign-corrected last pivot (the determinant of the integer-scaled matrix).
fn bareiss(m: &mut [Vec<Rational>], n_cols: usize) -> (usize, Rational) {
    let n_rows = m.len();
    let mut prev = Rational::one();
    let mut sign = 1i32;
    let mut rank = 0usize;
    for col in 0..n_cols {
        if rank == n_rows {
            break;
        }
        let Some(p) = (rank..n_rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        if p != rank {
            m.swap(p, rank);
            sign = -sign;
        }
        let (head, tail) = m.split_at_mut(rank + 1);
        let pivot_row = &head[rank];
        let pivot = pivot_row[col].clone();
        for row in tail.iter_mut() {
            let factor = row[col].clone();
            for j in (col + 1)..n_cols {
                let v = &(&pivot * &row[j]) - &(&factor * &pivot_row[j]);
                row[j] = if prev.is_one() { v } else { &v / &prev };
            }
            row[col] = Rational::zero();
        }
        prev = pivot;
        rank += 1;
    }
    let det = if sign < 0 { -prev } else { prev };
    (rank, det)
}

/// Exact rank over the rationals.
pub fn rank(m: &RationalMatrix) -> usize {
    rank_of(m.rows())
}

/// Rank of a list of vectors of equal dimension.
pub fn rank_of(rows: &[RationalVector]) -> usize {
    let Some(first) = rows.first() else { return 0 };
    let n_cols = first.dim();
    let mut a = integer_scaled(rows);
    bareiss(&mut a, n_cols).0
}

/// Affine dimension of a point set (`-1` is reported as `None` for the empty set).
pub fn affine_rank(points: &[&RationalVector]) -> Option<usize> {
    let (first, rest) = points.split_first()?;
    let diffs: Vec<RationalVector> = rest.iter().map(|p| *p - *first).collect();
    Some(rank_of(&diffs))
}

/// Determinant of a square matrix.
pub fn determinant(m: &RationalMatrix) -> Rational {
    assert_eq!(m.n_rows(), m.n_cols(), "determinant of a non-square matrix");
    let n = m.n_rows();
    if n == 0 {
        return Rational::one();
    }
    let mut scale = Rational::one();
    let mut a: Vec<Vec<Rational>> = Vec::with_capacity(n);
    for r in m.rows() {
        if r.is_integral() {
            a.push(r.coords().to_vec());
        } else {
            let l = Rational::from_bigint(lcm_denominators(r.coords()));
            scale = &scale * &l;
            a.push(r.iter().map(|x| x * &l).collect());
        }
    }
    let (rk, det) = bareiss(&mut a, n);
    if rk < n {
        Rational::zero()
    } else {
        &det / &scale
    }
}

/// Reduced row echelon form; returns the reduced rows (zero rows dropped) and pivot columns.
pub fn rref(rows: &[RationalVector]) -> (Vec<RationalVector>, Vec<usize>) {
    let Some(first) = rows.first() else { return (Vec::new(), Vec::new()) };
    let n_cols = first.dim();
    let mut m: Vec<Vec<Rational>> = rows.iter().map(|r| r.coords().to_vec()).collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n_cols {
        if r == m.len() {
            break;
        }
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(p, r);
        let inv = m[r][c].recip();
        if !inv.is_one() {
            for x in m[r].iter_mut() {
                *x = &*x * &inv;
            }
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *x = &*x - &(&f * p);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    m.truncate(r);
    (m.into_iter().map(RationalVector::new).collect(), pivots)
}

/// Solves `A x = b`. Returns `None` when inconsistent; free variables are set to zero.
pub fn solve_linear(a: &RationalMatrix, b: &RationalVector) -> Result<Option<RationalVector>> {
    if a.n_rows() != b.dim() {
        return Err(Error::DimensionMismatch { expected: a.n_rows(), got: b.dim() });
    }
    let n = a.n_cols();
    let aug: Vec<RationalVector> = a
        .rows()
        .iter()
        .zip(b.iter())
        .map(|(r, bi)| {
            let mut c = r.coords().to_vec();
            c.push(bi.clone());
            RationalVector::new(c)
        })
        .collect();
    let (red, pivots) = rref(&aug);
    if pivots.last() == Some(&n) {
        return Ok(None);
    }
    let mut x = RationalVector::zeros(n);
    for (row, &p) in red.iter().zip(&pivots) {
        x[p] = row[n].clone();
    }
    Ok(Some(x))
}

/// Basis of `{x : M x = 0}`, one vector per free column, as canonical integer directions.
pub fn nullspace(rows: &[RationalVector], n_cols: usize) -> Vec<RationalVector> {
    let (red, pivots) = rref(rows);
    let mut basis = Vec::new();
    for free in (0..n_cols).filter(|c| !pivots.contains(c)) {
        let mut v = RationalVector::zeros(n_cols);
        v[free] = Rational::one();
        for (row, &p) in red.iter().zip(&pivots) {
            v[p] = -&row[free];
        }
        basis.push(v.canonical_direction());
    }
    basis
}

/// Basis of the orthogonal complement of the span of `vectors` in `dim` dimensions.
/// Empty when the vectors span everything.
pub fn orthogonal_complement(vectors: &[RationalVector], dim: usize) -> Vec<RationalVector> {
    nullspace(vectors, dim)
}

/// Values of all `r x r` minors, `r = rank(M)`, over every choice of `r` rows and `r`
/// columns, in lexicographic order of (row subset, column subset).
pub fn maximal_minor_values(m: &RationalMatrix) -> Vec<Rational> {
    let r = rank(m);
    if r == 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    for rows in (0..m.n_rows()).combinations(r) {
        let sub = m.select_rows(&rows);
        for cols in (0..m.n_cols()).combinations(r) {
            out.push(determinant(&sub.select_cols(&cols)));
        }
    }
    out
}

/// Incrementally maintained reduced row echelon system `[A | b]`, used for
/// enumerating intersection points of hyperplanes.
#[derive(Clone, Debug)]
pub(crate) struct IncrementalSystem {
    dim: usize,
    rows: Vec<(usize, Vec<Rational>)>,
}

pub(crate) enum Added {
    Independent,
    /// The new equation is implied by the current ones.
    Redundant,
    /// The new equation contradicts the current ones.
    Inconsistent,
}

impl IncrementalSystem {
    pub fn new(dim: usize) -> Self {
        Self { dim, rows: Vec::with_capacity(dim) }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn add(&mut self, normal: &RationalVector, rhs: &Rational) -> Added {
        let mut r: Vec<Rational> = normal.coords().to_vec();
        r.push(rhs.clone());
        for (p, row) in &self.rows {
            if r[*p].is_zero() {
                continue;
            }
            let f = r[*p].clone();
            for (x, y) in r.iter_mut().zip(row) {
                if !y.is_zero() {
                    *x = &*x - &(&f * y);
                }
            }
        }
        let Some(pc) = (0..self.dim).find(|&c| !r[c].is_zero()) else {
            return if r[self.dim].is_zero() { Added::Redundant } else { Added::Inconsistent };
        };
        let inv = r[pc].recip();
        if !inv.is_one() {
            for x in r.iter_mut() {
                *x = &*x * &inv;
            }
        }
        for (_, row) in self.rows.iter_mut() {
            if row[pc].is_zero() {
                continue;
            }
            let f = row[pc].clone();
            for (x, y) in row.iter_mut().zip(&r) {
                if !y.is_zero() {
                    *x = &*x - &(&f * y);
                }
            }
        }
        self.rows.push((pc, r));
        Added::Independent
    }

    /// The unique solution, once the system has full rank.
    pub fn solution(&self) -> Option<RationalVector> {
        if self.rows.len() != self.dim {
            return None;
        }
        let mut x = RationalVector::zeros(self.dim);
        for (p, row) in &self.rows {
            x[*p] = row[self.dim].clone();
        }
        Some(x)
    }
}
