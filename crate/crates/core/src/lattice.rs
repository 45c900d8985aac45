//! Exact integer linear algebra: dense integer matrices, Smith and Hermite
//! normal forms, integer kernels and integer solving.
//!
//! Matrices hold `i64`; normal forms are computed in arbitrary precision and
//! narrowed afterwards. The release profile keeps overflow checks on, so an
//! overflowing computation panics instead of returning a wrong answer.

use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::reduce::{self, Big};

/// Dense row-major integer matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<i64>,
}

impl IntegerMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<i64>) -> Result<Self, Error> {
        if entries.len() != rows * cols {
            return Err(Error::Shape(format!(
                "expected {} entries for a {rows}x{cols} matrix, got {}",
                rows * cols,
                entries.len()
            )));
        }
        Ok(Self {
            rows,
            cols,
            entries,
        })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = 1;
        }
        m
    }

    /// Builds a matrix from equal-length rows. `cols` is needed when `rows`
    /// is empty.
    pub fn from_rows(rows: &[Vec<i64>], cols: usize) -> Result<Self, Error> {
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for (i, r) in rows.iter().enumerate() {
            if r.len() != cols {
                return Err(Error::Shape(format!(
                    "row {i} has length {}, expected {cols}",
                    r.len()
                )));
            }
            entries.extend_from_slice(r);
        }
        Ok(Self {
            rows: rows.len(),
            cols,
            entries,
        })
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

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)];
            }
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&x| x == 0)
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> Result<i64, Error> {
        if !self.is_square() {
            return Err(Error::Shape(format!(
                "determinant of a non-square {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(1);
        }
        let mut a = to_big(self);
        let mut negate = false;
        let mut prev = BigInt::from(1);
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(i) => {
                        a.swap(i, k);
                        negate = !negate;
                    }
                    None => return Ok(0),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    a[i][j] = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                }
            }
            prev = a[k][k].clone();
        }
        let det = if negate {
            -&a[n - 1][n - 1]
        } else {
            a[n - 1][n - 1].clone()
        };
        i64::try_from(&det).map_err(|_| Error::Overflow("determinant".into()))
    }

    pub fn is_unimodular(&self) -> bool {
        matches!(self.determinant(), Ok(1) | Ok(-1))
    }
}

impl std::ops::Index<(usize, usize)> for IntegerMatrix {
    type Output = i64;

    fn index(&self, (i, j): (usize, usize)) -> &i64 {
        debug_assert!(i < self.rows && j < self.cols);
        &self.entries[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntegerMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut i64 {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.entries[i * self.cols + j]
    }
}

impl Mul for &IntegerMatrix {
    type Output = IntegerMatrix;

    fn mul(self, rhs: &IntegerMatrix) -> IntegerMatrix {
        assert_eq!(
            self.cols, rhs.rows,
            "matrix product of {}x{} and {}x{}",
            self.rows, self.cols, rhs.rows, rhs.cols
        );
        let mut out = IntegerMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == 0 {
                    continue;
                }
                for j in 0..rhs.cols {
                    out[(i, j)] += a * rhs[(k, j)];
                }
            }
        }
        out
    }
}

impl fmt::Display for IntegerMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for (j, x) in self.row(i).iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// `u * m * v == d`, with the inverses of both transforms carried along.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithNormalForm {
    pub u: IntegerMatrix,
    pub u_inv: IntegerMatrix,
    pub d: IntegerMatrix,
    pub v: IntegerMatrix,
    pub v_inv: IntegerMatrix,
}

impl SmithNormalForm {
    /// Nonzero diagonal entries, each dividing the next.
    pub fn divisors(&self) -> Vec<i64> {
        (0..self.d.rows().min(self.d.cols()))
            .map(|i| self.d[(i, i)])
            .take_while(|&x| x != 0)
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.divisors().len()
    }
}

fn to_big(m: &IntegerMatrix) -> Big {
    m.to_rows()
        .into_iter()
        .map(|r| r.into_iter().map(BigInt::from).collect())
        .collect()
}

fn narrow(a: &Big, rows: usize, cols: usize) -> Option<IntegerMatrix> {
    let entries = a
        .iter()
        .flat_map(|r| r.iter().map(i64::try_from))
        .collect::<Result<Vec<i64>, _>>()
        .ok()?;
    IntegerMatrix::new(rows, cols, entries).ok()
}

fn narrow_smith(s: &reduce::Smith, rows: usize, cols: usize) -> Option<SmithNormalForm> {
    Some(SmithNormalForm {
        u: narrow(&s.u, rows, rows)?,
        u_inv: narrow(&s.u_inv, rows, rows)?,
        d: narrow(&s.d, rows, cols)?,
        v: narrow(&s.v, cols, cols)?,
        v_inv: narrow(&s.v_inv, cols, cols)?,
    })
}

/// Smith normal form with small transforms, via lattice-reduced Hermite forms.
///
/// Transforms are computed in arbitrary precision. If they do not fit `i64`
/// the transposed problem is solved instead, which yields a different pair
/// of transforms for the same diagonal.
///
/// # Panics
///
/// If neither pair of transforms fits in `i64`.
pub fn smith_normal_form(m: &IntegerMatrix) -> SmithNormalForm {
    let (rows, cols) = (m.rows(), m.cols());
    let a = to_big(m);
    if let Some(s) = narrow_smith(&reduce::smith(&a, rows, cols), rows, cols) {
        return s;
    }
    let t = reduce::smith(&reduce::transpose(&a, rows, cols), cols, rows);
    let flipped = reduce::Smith {
        u: reduce::transpose(&t.v, rows, rows),
        u_inv: reduce::transpose(&t.v_inv, rows, rows),
        d: reduce::transpose(&t.d, cols, rows),
        v: reduce::transpose(&t.u, cols, cols),
        v_inv: reduce::transpose(&t.u_inv, cols, cols),
    };
    narrow_smith(&flipped, rows, cols).expect("Smith transforms exceed the i64 range")
}

/// Nonzero rows of the row-style Hermite normal form of the given rows: a
/// canonical basis of their integer span. Pivots are positive and entries
/// above each pivot lie in `[0, pivot)`.
pub fn hermite_basis(rows: &[Vec<i64>], cols: usize) -> Vec<Vec<i64>> {
    let a: Big = rows
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    reduce::hermite(&a, rows.len(), cols)
        .h
        .into_iter()
        .filter(|r| r.iter().any(|x| !x.is_zero()))
        .map(|r| {
            r.iter()
                .map(|x| i64::try_from(x).expect("Hermite entries exceed the i64 range"))
                .collect()
        })
        .collect()
}

/// Basis (Hermite-reduced) of the integer left kernel `{ x : x·m = 0 }`.
pub fn left_kernel(m: &IntegerMatrix) -> Vec<Vec<i64>> {
    let snf = smith_normal_form(m);
    let rank = snf.rank();
    let kernel: Vec<Vec<i64>> = (rank..m.rows()).map(|i| snf.u.row(i).to_vec()).collect();
    hermite_basis(&kernel, m.rows())
}

/// Integer coefficients `c` with `c·m = y`, if any exist.
pub fn solve_left(m: &IntegerMatrix, y: &[i64]) -> Option<Vec<i64>> {
    assert_eq!(y.len(), m.cols(), "right-hand side length");
    let snf = smith_normal_form(m);
    let divisors = snf.divisors();
    // w·d = y·v, then c = w·u.
    let yv: Vec<i128> = (0..m.cols())
        .map(|j| {
            (0..m.cols())
                .map(|k| y[k] as i128 * snf.v[(k, j)] as i128)
                .sum()
        })
        .collect();
    let mut w = vec![0i128; m.rows()];
    for (j, &t) in yv.iter().enumerate() {
        match divisors.get(j) {
            Some(&dj) => {
                let dj = dj as i128;
                if t % dj != 0 {
                    return None;
                }
                w[j] = t / dj;
            }
            None if t != 0 => return None,
            None => {}
        }
    }
    (0..m.rows())
        .map(|j| {
            let c: i128 = (0..m.rows()).map(|i| w[i] * snf.u[(i, j)] as i128).sum();
            i64::try_from(c).ok()
        })
        .collect()
}

pub fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Rank over the rationals of the span of `rows`.
pub fn rank(rows: &[Vec<i64>], cols: usize) -> usize {
    hermite_basis(rows, cols).len()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> IntegerMatrix {
        let cols = rows.first().map_or(0, |r| r.len());
        IntegerMatrix::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>(), cols)
            .unwrap()
    }

    fn check_contract(a: &IntegerMatrix) -> SmithNormalForm {
        let s = smith_normal_form(a);
        assert_eq!(&(&s.u * a) * &s.v, s.d);
        assert_eq!(&s.u * &s.u_inv, IntegerMatrix::identity(a.rows()));
        assert_eq!(&s.v * &s.v_inv, IntegerMatrix::identity(a.cols()));
        s
    }

    #[test]
    fn snf_identity() {
        let s = check_contract(&IntegerMatrix::identity(2));
        assert_eq!(s.d, IntegerMatrix::identity(2));
    }

    #[test]
    fn snf_diag_2_3_becomes_1_6() {
        let s = check_contract(&m(&[&[2, 0], &[0, 3]]));
        assert_eq!(s.d, m(&[&[1, 0], &[0, 6]]));
    }

    #[test]
    fn snf_zero_matrix() {
        let z = IntegerMatrix::zeros(2, 3);
        let s = check_contract(&z);
        assert!(s.d.is_zero());
        assert_eq!(s.rank(), 0);
    }

    #[test]
    fn snf_empty_shapes() {
        check_contract(&IntegerMatrix::zeros(0, 3));
        check_contract(&IntegerMatrix::zeros(3, 0));
    }

    #[test]
    fn snf_row_vector() {
        let s = check_contract(&m(&[&[2, 0]]));
        assert_eq!(s.divisors(), vec![2]);
        let s = check_contract(&m(&[&[4, 6]]));
        assert_eq!(s.divisors(), vec![2]);
    }

    #[test]
    fn hermite_is_canonical() {
        let a = hermite_basis(&[vec![2, 4], vec![1, 3]], 2);
        let b = hermite_basis(&[vec![1, 3], vec![1, 1], vec![3, 7]], 2);
        assert_eq!(a, vec![vec![1, 1], vec![0, 2]]);
        assert_eq!(b, vec![vec![1, 1], vec![0, 2]]);
    }

    #[test]
    fn left_kernel_of_dependent_rows() {
        let k = left_kernel(&m(&[&[1, 2], &[2, 4], &[0, 1]]));
        assert_eq!(k, vec![vec![2, -1, 0]]);
    }

    #[test]
    fn solve_left_finds_integer_combination() {
        let a = m(&[&[1, 1], &[0, 2]]);
        assert_eq!(solve_left(&a, &[3, 7]), Some(vec![3, 2]));
        assert_eq!(solve_left(&a, &[0, 1]), None);
    }

    #[test]
    fn determinant_small() {
        assert_eq!(m(&[&[2, 1], &[7, 4]]).determinant().unwrap(), 1);
        assert_eq!(
            m(&[&[0, 1, 2], &[1, 0, 3], &[4, -3, 8]])
                .determinant()
                .unwrap(),
            -2
        );
        assert_eq!(IntegerMatrix::zeros(0, 0).determinant().unwrap(), 1);
    }
}
