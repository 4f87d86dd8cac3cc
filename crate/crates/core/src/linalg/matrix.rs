use std::fmt;
use std::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::ring::{Integers, Ring};

/// Dense row-major matrix. Arithmetic goes through a [`Ring`].
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

pub type IntMatrix = Matrix<BigInt>;

impl<T: Clone> Matrix<T> {
    pub fn from_vec(rows: usize, cols: usize, data: Vec<T>) -> Self {
        assert_eq!(data.len(), rows * cols, "matrix data length mismatch");
        Matrix { rows, cols, data }
    }

    pub fn filled(rows: usize, cols: usize, value: T) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![value; rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(rows: usize, columns: &[Vec<T>]) -> Self
    where
        T: Default,
    {
        let mut m = Matrix::filled(rows, columns.len(), T::default());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for (i, x) in col.iter().enumerate() {
                m[(i, j)] = x.clone();
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

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn entries(&self) -> impl Iterator<Item = &T> {
        self.data.iter()
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self[(i, j)].clone());
            }
        }
        Matrix {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    pub fn map<U, F: FnMut(&T) -> U>(&self, f: F) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        let data = rows
            .iter()
            .flat_map(|&i| cols.iter().map(move |&j| self[(i, j)].clone()))
            .collect();
        Matrix {
            rows: rows.len(),
            cols: cols.len(),
            data,
        }
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hcat(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows);
        let mut data = Vec::with_capacity(self.data.len() + other.data.len());
        for i in 0..self.rows {
            data.extend_from_slice(self.row(i));
            data.extend_from_slice(other.row(i));
        }
        Matrix {
            rows: self.rows,
            cols: self.cols + other.cols,
            data,
        }
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl<T: fmt::Display> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for i in 0..self.rows {
            write!(f, "  [")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.data[i * self.cols + j])?;
            }
            writeln!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl IntMatrix {
    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Self {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
    }

    pub fn int_identity(n: usize) -> Self {
        let mut m = Matrix::filled(n, n, BigInt::zero());
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn is_zero_matrix(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    /// Exact integer determinant (fraction-free Bareiss elimination).
    pub fn determinant(&self) -> BigInt {
        assert!(self.is_square());
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[(k, k)].is_zero() {
                match (k + 1..n).find(|&i| !a[(i, k)].is_zero()) {
                    Some(i) => {
                        a.swap_rows(i, k);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[(i, j)] * &a[(k, k)] - &a[(i, k)] * &a[(k, j)];
                    a[(i, j)] = v / &prev;
                }
            }
            prev = a[(k, k)].clone();
        }
        sign * &a[(n - 1, n - 1)]
    }
}

/// Ring-parametrized matrix arithmetic.
pub trait MatrixOps: Ring {
    fn zeros(&self, rows: usize, cols: usize) -> Matrix<Self::Elem> {
        Matrix::filled(rows, cols, self.zero())
    }

    fn identity(&self, n: usize) -> Matrix<Self::Elem> {
        let mut m = self.zeros(n, n);
        for i in 0..n {
            m[(i, i)] = self.one();
        }
        m
    }

    fn lift(&self, m: &IntMatrix) -> Matrix<Self::Elem> {
        m.map(|x| self.from_int(x))
    }

    fn mat_mul(&self, a: &Matrix<Self::Elem>, b: &Matrix<Self::Elem>) -> Matrix<Self::Elem> {
        assert_eq!(a.cols(), b.rows(), "dimension mismatch in product");
        let mut out = self.zeros(a.rows(), b.cols());
        for i in 0..a.rows() {
            for k in 0..a.cols() {
                let aik = &a[(i, k)];
                if self.is_zero(aik) {
                    continue;
                }
                for j in 0..b.cols() {
                    let t = self.mul(aik, &b[(k, j)]);
                    out[(i, j)] = self.add(&out[(i, j)], &t);
                }
            }
        }
        out
    }

    fn mat_vec(&self, a: &Matrix<Self::Elem>, v: &[Self::Elem]) -> Vec<Self::Elem> {
        assert_eq!(a.cols(), v.len());
        (0..a.rows())
            .map(|i| {
                let mut acc = self.zero();
                for (x, y) in a.row(i).iter().zip(v) {
                    if !self.is_zero(x) && !self.is_zero(y) {
                        acc = self.add(&acc, &self.mul(x, y));
                    }
                }
                acc
            })
            .collect()
    }

    fn mat_add(&self, a: &Matrix<Self::Elem>, b: &Matrix<Self::Elem>) -> Matrix<Self::Elem> {
        assert_eq!((a.rows(), a.cols()), (b.rows(), b.cols()));
        let data = a
            .entries()
            .zip(b.entries())
            .map(|(x, y)| self.add(x, y))
            .collect();
        Matrix::from_vec(a.rows(), a.cols(), data)
    }

    fn mat_sub(&self, a: &Matrix<Self::Elem>, b: &Matrix<Self::Elem>) -> Matrix<Self::Elem> {
        assert_eq!((a.rows(), a.cols()), (b.rows(), b.cols()));
        let data = a
            .entries()
            .zip(b.entries())
            .map(|(x, y)| self.sub(x, y))
            .collect();
        Matrix::from_vec(a.rows(), a.cols(), data)
    }

    fn mat_scale(&self, s: &Self::Elem, a: &Matrix<Self::Elem>) -> Matrix<Self::Elem> {
        a.map(|x| self.mul(s, x))
    }

    /// `ab - ba`
    fn commutator(&self, a: &Matrix<Self::Elem>, b: &Matrix<Self::Elem>) -> Matrix<Self::Elem> {
        self.mat_sub(&self.mat_mul(a, b), &self.mat_mul(b, a))
    }

    fn trace(&self, a: &Matrix<Self::Elem>) -> Self::Elem {
        assert!(a.is_square());
        (0..a.rows()).fold(self.zero(), |acc, i| self.add(&acc, &a[(i, i)]))
    }

    fn is_zero_mat(&self, a: &Matrix<Self::Elem>) -> bool {
        a.entries().all(|x| self.is_zero(x))
    }

    /// Row-reduces in place using unit pivots only and returns the pivot
    /// columns. Over a field this is ordinary Gauss–Jordan elimination; over a
    /// local ring every non-pivot column is dependent modulo the maximal ideal.
    fn row_reduce(&self, a: &mut Matrix<Self::Elem>) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..a.cols() {
            if r == a.rows() {
                break;
            }
            let Some(piv) = (r..a.rows()).find(|&i| self.is_unit(&a[(i, c)])) else {
                continue;
            };
            a.swap_rows(r, piv);
            let inv = self.inv(&a[(r, c)]).unwrap();
            for j in 0..a.cols() {
                a[(r, j)] = self.mul(&a[(r, j)], &inv);
            }
            for i in 0..a.rows() {
                if i == r || self.is_zero(&a[(i, c)]) {
                    continue;
                }
                let f = a[(i, c)].clone();
                for j in 0..a.cols() {
                    let t = self.mul(&f, &a[(r, j)]);
                    a[(i, j)] = self.sub(&a[(i, j)], &t);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    /// Rank over a field.
    fn rank(&self, a: &Matrix<Self::Elem>) -> usize {
        let mut m = a.clone();
        self.row_reduce(&mut m).len()
    }

    /// Basis of the right kernel over a field.
    fn kernel(&self, a: &Matrix<Self::Elem>) -> Vec<Vec<Self::Elem>> {
        let mut m = a.clone();
        let pivots = self.row_reduce(&mut m);
        let free: Vec<usize> = (0..a.cols()).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![self.zero(); a.cols()];
                v[f] = self.one();
                for (r, &pc) in pivots.iter().enumerate() {
                    v[pc] = self.neg(&m[(r, f)]);
                }
                v
            })
            .collect()
    }

    /// Inverse of a square matrix whose determinant is a unit.
    fn inverse(&self, a: &Matrix<Self::Elem>) -> Option<Matrix<Self::Elem>> {
        assert!(a.is_square());
        let n = a.rows();
        let mut aug = a.hcat(&self.identity(n));
        let pivots = self.row_reduce(&mut aug);
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let cols: Vec<usize> = (n..2 * n).collect();
        let rows: Vec<usize> = (0..n).collect();
        Some(aug.submatrix(&rows, &cols))
    }

    /// Solves `a x = b` for square `a` with unit determinant.
    fn solve(&self, a: &Matrix<Self::Elem>, b: &[Self::Elem]) -> Option<Vec<Self::Elem>> {
        let inv = self.inverse(a)?;
        Some(self.mat_vec(&inv, b))
    }
}

impl<R: Ring> MatrixOps for R {}

/// Identity matrix over the integers.
pub fn int_identity(n: usize) -> IntMatrix {
    Integers.identity(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::ring::{PrimeField, Rationals};
    use num_rational::BigRational;

    #[test]
    fn bareiss_determinant() {
        let m = IntMatrix::from_i64_rows(&[vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]]);
        assert_eq!(m.determinant(), BigInt::from(4));
        let s = IntMatrix::from_i64_rows(&[vec![0, 1], vec![1, 0]]);
        assert_eq!(s.determinant(), BigInt::from(-1));
        let z = IntMatrix::from_i64_rows(&[vec![1, 2], vec![2, 4]]);
        assert_eq!(z.determinant(), BigInt::zero());
    }

    #[test]
    fn rank_over_prime_fields() {
        let id = IntMatrix::int_identity(3);
        assert_eq!(PrimeField::new(5).rank(&PrimeField::new(5).lift(&id)), 3);
        let m = IntMatrix::from_i64_rows(&[vec![1, 2], vec![3, 6]]);
        assert_eq!(PrimeField::new(7).rank(&PrimeField::new(7).lift(&m)), 1);
        let m = IntMatrix::from_i64_rows(&[vec![3, 0], vec![0, 1]]);
        assert_eq!(PrimeField::new(3).rank(&PrimeField::new(3).lift(&m)), 1);
    }

    #[test]
    fn kernel_and_inverse_over_q() {
        let q = Rationals;
        let m = q.lift(&IntMatrix::from_i64_rows(&[vec![1, 2, 3], vec![2, 4, 6]]));
        let k = q.kernel(&m);
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(q.mat_vec(&m, v).iter().all(|x| x.is_zero()));
        }
        let a = q.lift(&IntMatrix::from_i64_rows(&[vec![2, 1], vec![1, 1]]));
        let inv = q.inverse(&a).unwrap();
        assert_eq!(q.mat_mul(&a, &inv), q.identity(2));
        let b = vec![
            BigRational::from_integer(3.into()),
            BigRational::from_integer(2.into()),
        ];
        let x = q.solve(&a, &b).unwrap();
        assert_eq!(q.mat_vec(&a, &x), b);
    }
}
