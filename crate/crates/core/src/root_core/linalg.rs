//! Exact vectors and matrices over ℚ.
//!
//! Elimination is fraction-free: each row is scaled to integers and then
//! reduced with Bareiss' update, so every intermediate entry is a minor of
//! the scaled matrix and the divisions are exact.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::{Add, Neg, Sub};

use super::rational::{format_rational, rat, serde_rational_vec, Rational};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RationalVector(#[serde(with = "serde_rational_vec")] Vec<Rational>);

impl RationalVector {
    pub fn new(coords: Vec<Rational>) -> Self {
        Self(coords)
    }

    pub fn zeros(len: usize) -> Self {
        Self(vec![Rational::zero(); len])
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Self(coords.iter().map(|&c| rat(c)).collect())
    }

    pub fn unit(len: usize, i: usize) -> Self {
        let mut v = Self::zeros(len);
        v.0[i] = Rational::one();
        v
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<Rational> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self(self.0.iter().map(|x| x * c).collect())
    }

    /// Standard dot product; see [`RationalMatrix::bilinear`] for other forms.
    pub fn dot(&self, other: &Self) -> Rational {
        assert_eq!(self.len(), other.len(), "dimension mismatch");
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    /// Integer coordinates, if every entry is an integer that fits in `i64`.
    pub fn to_ints(&self) -> Option<Vec<i64>> {
        use num_traits::ToPrimitive;
        self.0.iter().map(|q| if q.is_integer() { q.numer().to_i64() } else { None }).collect()
    }
}

impl fmt::Debug for RationalVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(format_rational).collect();
        write!(f, "({})", parts.join(", "))
    }
}

impl Add for &RationalVector {
    type Output = RationalVector;
    fn add(self, rhs: Self) -> RationalVector {
        assert_eq!(self.len(), rhs.len(), "dimension mismatch");
        RationalVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &RationalVector {
    type Output = RationalVector;
    fn sub(self, rhs: Self) -> RationalVector {
        assert_eq!(self.len(), rhs.len(), "dimension mismatch");
        RationalVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &RationalVector {
    type Output = RationalVector;
    fn neg(self) -> RationalVector {
        RationalVector(self.0.iter().map(|a| -a).collect())
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::InvalidArgument("ragged matrix rows".into()));
        }
        let nrows = rows.len();
        Ok(Self { rows: nrows, cols, data: rows.into_iter().flatten().collect() })
    }

    pub fn from_int_rows(rows: &[Vec<i64>]) -> Result<Self> {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect())
    }

    /// Matrix whose columns are the given vectors (all of length `dim`).
    pub fn from_columns(dim: usize, columns: &[RationalVector]) -> Self {
        let mut m = Self::zeros(dim, columns.len());
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), dim, "dimension mismatch");
            for (i, x) in c.coords().iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rational) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> RationalVector {
        RationalVector::new((0..self.rows).map(|r| self.get(r, c).clone()).collect())
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        let v = out.get(i, j) + a * b;
                        out.set(i, j, v);
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &RationalVector) -> RationalVector {
        assert_eq!(self.cols, v.len(), "dimension mismatch");
        RationalVector::new(
            (0..self.rows).map(|r| self.row(r).iter().zip(v.coords()).map(|(a, b)| a * b).sum()).collect(),
        )
    }

    /// `xᵀ M y`.
    pub fn bilinear(&self, x: &RationalVector, y: &RationalVector) -> Rational {
        x.dot(&self.mul_vec(y))
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "dimension mismatch");
        Self { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect() }
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut m = Self::zeros(rows.len(), cols.len());
        for (i, &r) in rows.iter().enumerate() {
            for (j, &c) in cols.iter().enumerate() {
                m.set(i, j, self.get(r, c).clone());
            }
        }
        m
    }

    pub fn rank(&self) -> usize {
        Echelon::of(self).pivots.len()
    }

    /// Indices of a maximal linearly independent set of columns (greedy, left to right).
    pub fn pivot_columns(&self) -> Vec<usize> {
        Echelon::of(self).pivots
    }

    pub fn determinant(&self) -> Result<Rational> {
        if self.rows != self.cols {
            return Err(Error::InvalidArgument(format!(
                "determinant of a non-square {}x{} matrix",
                self.rows, self.cols
            )));
        }
        if self.rows == 0 {
            return Ok(Rational::one());
        }
        let e = Echelon::of(self);
        if e.pivots.len() < self.rows {
            return Ok(Rational::zero());
        }
        let last = &e.rows[self.rows - 1][self.cols - 1];
        let det = Rational::new(last.clone() * e.sign, e.scale.clone());
        Ok(det)
    }

    /// Exact basis of the null space `{x : M x = 0}`, one vector per free
    /// column, each scaled to a primitive integer vector.
    pub fn kernel_basis(&self) -> Vec<RationalVector> {
        let e = Echelon::of(self);
        let free: Vec<usize> = (0..self.cols).filter(|c| !e.pivots.contains(c)).collect();
        let mut basis = Vec::with_capacity(free.len());
        for &f in &free {
            let mut x = vec![Rational::zero(); self.cols];
            x[f] = Rational::one();
            for (k, &p) in e.pivots.iter().enumerate().rev() {
                let row = &e.rows[k];
                let mut acc = Rational::zero();
                for j in p + 1..self.cols {
                    if !row[j].is_zero() && !x[j].is_zero() {
                        acc += Rational::from_integer(row[j].clone()) * &x[j];
                    }
                }
                x[p] = -acc / Rational::from_integer(row[p].clone());
            }
            basis.push(primitive(RationalVector::new(x)));
        }
        basis
    }
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for r in 0..self.rows {
            let parts: Vec<String> = self.row(r).iter().map(format_rational).collect();
            writeln!(f, "  [{}]", parts.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Scales a nonzero vector to coprime integer entries whose first nonzero
/// entry is positive.
pub fn primitive(v: RationalVector) -> RationalVector {
    let coords = v.into_coords();
    let mut lcm = BigInt::one();
    for q in &coords {
        lcm = lcm.lcm(q.denom());
    }
    let ints: Vec<BigInt> = coords.iter().map(|q| (q * Rational::from_integer(lcm.clone())).to_integer()).collect();
    let mut g = BigInt::zero();
    for x in &ints {
        g = g.gcd(x);
    }
    if g.is_zero() {
        return RationalVector::new(coords);
    }
    if ints.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative()) {
        g = -g;
    }
    RationalVector::new(ints.into_iter().map(|x| Rational::from_integer(x / &g)).collect())
}

/// Rank of a list of vectors of equal length.
pub fn rank_of(vectors: &[RationalVector]) -> usize {
    match vectors.first() {
        None => 0,
        Some(v) => RationalMatrix::from_columns(v.len(), vectors).rank(),
    }
}

/// Maximal independent subset of `vectors`, chosen greedily in order.
pub fn independent_subset(vectors: &[RationalVector]) -> Vec<usize> {
    match vectors.first() {
        None => Vec::new(),
        Some(v) => RationalMatrix::from_columns(v.len(), vectors).pivot_columns(),
    }
}

/// Whether `v` lies in the span of `basis` (rank does not grow when appended).
pub fn in_span(basis: &[RationalVector], v: &RationalVector) -> bool {
    if v.is_zero() {
        return true;
    }
    if basis.is_empty() {
        return false;
    }
    let mut all = basis.to_vec();
    all.push(v.clone());
    rank_of(&all) == rank_of(basis)
}

/// Row echelon form of a row-scaled integer copy of a rational matrix.
struct Echelon {
    rows: Vec<Vec<BigInt>>,
    pivots: Vec<usize>,
    /// ±1 from row swaps.
    sign: BigInt,
    /// Product of the per-row scale factors applied to clear denominators.
    scale: BigInt,
}

impl Echelon {
    fn of(m: &RationalMatrix) -> Self {
        let mut scale = BigInt::one();
        let mut rows: Vec<Vec<BigInt>> = (0..m.rows)
            .map(|r| {
                let row = m.row(r);
                let mut l = BigInt::one();
                for q in row {
                    l = l.lcm(q.denom());
                }
                scale *= &l;
                row.iter().map(|q| (q * Rational::from_integer(l.clone())).to_integer()).collect()
            })
            .collect();
        let mut sign = BigInt::one();
        let mut pivots = Vec::new();
        let mut prev = BigInt::one();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !rows[i][c].is_zero()) else {
                continue;
            };
            if p != r {
                rows.swap(p, r);
                sign = -sign;
            }
            let (top, bottom) = rows.split_at_mut(r + 1);
            let pivot_row = &top[r];
            for row in bottom.iter_mut() {
                for j in c + 1..m.cols {
                    let num = &pivot_row[c] * &row[j] - &row[c] * &pivot_row[j];
                    debug_assert!((&num % &prev).is_zero(), "Bareiss division must be exact");
                    row[j] = num / &prev;
                }
                row[c] = BigInt::zero();
            }
            // Rows above the pivot are left untouched; entries left of c are zero.
            prev = rows[r][c].clone();
            pivots.push(c);
            r += 1;
        }
        Self { rows, pivots, sign, scale }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_core::rational::frac;

    fn m(rows: &[Vec<i64>]) -> RationalMatrix {
        RationalMatrix::from_int_rows(rows).unwrap()
    }

    #[test]
    fn kernel_of_zero_and_identity() {
        assert_eq!(RationalMatrix::zeros(3, 3).kernel_basis().len(), 3);
        assert!(RationalMatrix::identity(4).kernel_basis().is_empty());
    }

    #[test]
    fn kernel_vectors_are_annihilated() {
        let a = m(&[vec![1, 2, 3, 4], vec![2, 4, 6, 8], vec![0, 1, -1, 2]]);
        let k = a.kernel_basis();
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(a.mul_vec(v).is_zero());
        }
        assert_eq!(rank_of(&k), 2);
    }

    #[test]
    fn reversal_permutation_minus_identity() {
        // w = [4321] acting on Q^4 by e_i -> e_{w(i)}
        let w = [4usize, 3, 2, 1];
        let mut a = RationalMatrix::zeros(4, 4);
        for (i, &wi) in w.iter().enumerate() {
            a.set(wi - 1, i, rat(1));
        }
        let a = a.sub(&RationalMatrix::identity(4));
        assert_eq!(a.rank(), 2);
        assert_eq!(a.kernel_basis().len(), 2);
    }

    #[test]
    fn determinants() {
        assert_eq!(m(&[vec![2, 0], vec![0, 3]]).determinant().unwrap(), rat(6));
        assert_eq!(m(&[vec![0, 1], vec![1, 0]]).determinant().unwrap(), rat(-1));
        assert_eq!(m(&[vec![1, 2], vec![2, 4]]).determinant().unwrap(), rat(0));
        let q = RationalMatrix::from_rows(vec![vec![frac(1, 2), frac(1, 3)], vec![frac(1, 4), frac(1, 5)]]).unwrap();
        assert_eq!(q.determinant().unwrap(), frac(1, 10) - frac(1, 12));
        let big = m(&[vec![2, -1, 0, 3], vec![1, 4, 2, -2], vec![0, 5, 1, 1], vec![3, 0, -1, 2]]);
        assert_eq!(big.determinant().unwrap(), rat(cofactor_det(&big)));
        assert!(m(&[vec![1, 2, 3]]).determinant().is_err());
    }

    fn cofactor_det(a: &RationalMatrix) -> i64 {
        let n = a.rows();
        if n == 1 {
            return a.get(0, 0).to_integer().try_into().unwrap();
        }
        let mut acc = 0;
        for j in 0..n {
            let rows: Vec<usize> = (1..n).collect();
            let cols: Vec<usize> = (0..n).filter(|&c| c != j).collect();
            let sign = if j % 2 == 0 { 1 } else { -1 };
            let x: i64 = a.get(0, j).to_integer().try_into().unwrap();
            acc += sign * x * cofactor_det(&a.submatrix(&rows, &cols));
        }
        acc
    }

    #[test]
    fn span_membership() {
        let b = vec![RationalVector::from_ints(&[1, -1, 0]), RationalVector::from_ints(&[0, 1, -1])];
        assert!(in_span(&b, &RationalVector::from_ints(&[1, 0, -1])));
        assert!(!in_span(&b, &RationalVector::from_ints(&[1, 0, 0])));
        assert!(in_span(&[], &RationalVector::zeros(3)));
        assert_eq!(independent_subset(&[b[0].clone(), b[0].scale(&rat(2)), b[1].clone()]), vec![0, 2]);
    }

    #[test]
    fn primitive_scaling() {
        let v = RationalVector::new(vec![frac(-1, 2), frac(1, 3), rat(0)]);
        assert_eq!(primitive(v), RationalVector::from_ints(&[3, -2, 0]));
    }
}
