use std::fmt;
use std::ops::{Add, Index, IndexMut, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::rational::{lcm_denominators, Rational};

/// A point or direction with exact rational coordinates.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize, Default)]
#[serde(transparent)]
pub struct RationalVector {
    coords: Vec<Rational>,
}

impl RationalVector {
    pub fn new(coords: Vec<Rational>) -> Self {
        Self { coords }
    }

    pub fn zeros(dim: usize) -> Self {
        Self { coords: vec![Rational::zero(); dim] }
    }

    pub fn unit(dim: usize, i: usize) -> Self {
        let mut v = Self::zeros(dim);
        v.coords[i] = Rational::one();
        v
    }

    pub fn from_ints(v: &[i64]) -> Self {
        Self { coords: v.iter().map(|&x| Rational::from_int(x)).collect() }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<Rational> {
        self.coords
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Rational> {
        self.coords.iter()
    }

    pub fn dot(&self, other: &Self) -> Rational {
        debug_assert_eq!(self.dim(), other.dim());
        let mut acc = Rational::zero();
        for (a, b) in self.coords.iter().zip(&other.coords) {
            if !a.is_zero() && !b.is_zero() {
                acc += a * b;
            }
        }
        acc
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Self { coords: self.coords.iter().map(|x| x * s).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Rational::is_zero)
    }

    pub fn is_integral(&self) -> bool {
        self.coords.iter().all(Rational::is_integer)
    }

    pub fn norm_squared(&self) -> Rational {
        self.dot(self)
    }

    /// `2c - self`: reflection through the point `c`.
    pub fn reflect_through(&self, c: &Self) -> Self {
        Self {
            coords: self
                .coords
                .iter()
                .zip(&c.coords)
                .map(|(x, ci)| ci + ci - x)
                .collect(),
        }
    }

    /// The primitive integer vector on the same ray.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let l = lcm_denominators(&self.coords);
        let ints: Vec<BigInt> = self
            .coords
            .iter()
            .map(|x| x.numer() * (&l / x.denom()))
            .collect();
        let mut g = BigInt::zero();
        for x in &ints {
            g = g.gcd(x);
        }
        Self { coords: ints.into_iter().map(|x| Rational::from_bigint(x / &g)).collect() }
    }

    /// Primitive integer representative of the line, first nonzero entry positive.
    pub fn canonical_direction(&self) -> Self {
        let p = self.primitive();
        match p.coords.iter().find(|x| !x.is_zero()) {
            Some(x) if x.is_negative() => -p,
            _ => p,
        }
    }

    /// `Some(t)` with `self = t * other`, if the two are parallel and `other != 0`.
    pub fn ratio_to(&self, other: &Self) -> Option<Rational> {
        let k = other.coords.iter().position(|x| !x.is_zero())?;
        let t = &self.coords[k] / &other.coords[k];
        if self.coords.iter().zip(&other.coords).all(|(a, b)| *a == b * &t) {
            Some(t)
        } else {
            None
        }
    }

    pub fn is_parallel_to(&self, other: &Self) -> bool {
        !self.is_zero() && self.ratio_to(other).is_some()
    }

    /// Integer coordinates as `i64`, when all coordinates are small integers.
    pub fn to_i64(&self) -> Option<Vec<i64>> {
        self.coords
            .iter()
            .map(|x| match x.as_small() {
                Some((n, 1)) => Some(n),
                _ => None,
            })
            .collect()
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.coords.iter().map(|x| x.to_string()).collect()
    }
}

impl Index<usize> for RationalVector {
    type Output = Rational;
    fn index(&self, i: usize) -> &Rational {
        &self.coords[i]
    }
}

impl IndexMut<usize> for RationalVector {
    fn index_mut(&mut self, i: usize) -> &mut Rational {
        &mut self.coords[i]
    }
}

impl From<Vec<Rational>> for RationalVector {
    fn from(coords: Vec<Rational>) -> Self {
        Self { coords }
    }
}

impl Add for &RationalVector {
    type Output = RationalVector;
    fn add(self, rhs: &RationalVector) -> RationalVector {
        RationalVector { coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a + b).collect() }
    }
}

impl Sub for &RationalVector {
    type Output = RationalVector;
    fn sub(self, rhs: &RationalVector) -> RationalVector {
        RationalVector { coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a - b).collect() }
    }
}

impl Neg for RationalVector {
    type Output = RationalVector;
    fn neg(self) -> RationalVector {
        RationalVector { coords: self.coords.iter().map(|a| -a).collect() }
    }
}

impl Neg for &RationalVector {
    type Output = RationalVector;
    fn neg(self) -> RationalVector {
        RationalVector { coords: self.coords.iter().map(|a| -a).collect() }
    }
}

impl fmt::Debug for RationalVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for RationalVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Row-major matrix of rationals.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct RationalMatrix {
    rows: Vec<RationalVector>,
    n_cols: usize,
}

impl RationalMatrix {
    /// Panics if the rows disagree in length.
    pub fn from_rows(rows: Vec<RationalVector>, n_cols: usize) -> Self {
        assert!(rows.iter().all(|r| r.dim() == n_cols), "ragged matrix");
        Self { rows, n_cols }
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        let n_cols = rows.first().map_or(0, |r| r.len());
        Self::from_rows(rows.iter().map(|r| RationalVector::from_ints(r)).collect(), n_cols)
    }

    pub fn identity(n: usize) -> Self {
        Self::from_rows((0..n).map(|i| RationalVector::unit(n, i)).collect(), n)
    }

    pub fn n_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn n_cols(&self) -> usize {
        self.n_cols
    }

    pub fn rows(&self) -> &[RationalVector] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &RationalVector {
        &self.rows[i]
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.rows[i][j]
    }

    pub fn transpose(&self) -> Self {
        let rows = (0..self.n_cols)
            .map(|j| RationalVector::new(self.rows.iter().map(|r| r[j].clone()).collect()))
            .collect();
        Self { rows, n_cols: self.rows.len() }
    }

    pub fn mul_vec(&self, v: &RationalVector) -> RationalVector {
        RationalVector::new(self.rows.iter().map(|r| r.dot(v)).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n_cols, other.n_rows());
        let t = other.transpose();
        let rows = self
            .rows
            .iter()
            .map(|r| RationalVector::new(t.rows.iter().map(|c| r.dot(c)).collect()))
            .collect();
        Self { rows, n_cols: other.n_cols }
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Self { rows: self.rows.iter().map(|r| r.scale(s)).collect(), n_cols: self.n_cols }
    }

    pub fn select_rows(&self, idx: &[usize]) -> Self {
        Self { rows: idx.iter().map(|&i| self.rows[i].clone()).collect(), n_cols: self.n_cols }
    }

    pub fn select_cols(&self, idx: &[usize]) -> Self {
        let rows = self
            .rows
            .iter()
            .map(|r| RationalVector::new(idx.iter().map(|&j| r[j].clone()).collect()))
            .collect();
        Self { rows, n_cols: idx.len() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_direction_is_primitive_and_positive() {
        let v = RationalVector::new(vec![Rational::zero(), Rational::new(-3, 2), Rational::new(9, 4)]);
        assert_eq!(v.canonical_direction(), RationalVector::from_ints(&[0, 2, -3]));
        assert_eq!(RationalVector::from_ints(&[0, 0]).canonical_direction(), RationalVector::from_ints(&[0, 0]));
    }

    #[test]
    fn ratio_and_parallel() {
        let a = RationalVector::from_ints(&[2, -4, 0]);
        let b = RationalVector::from_ints(&[-1, 2, 0]);
        assert_eq!(a.ratio_to(&b), Some(Rational::from_int(-2)));
        assert!(!a.is_parallel_to(&RationalVector::from_ints(&[1, 2, 0])));
    }
}
