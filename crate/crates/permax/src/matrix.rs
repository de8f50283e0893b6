//! Dense square matrices with dual scalar precision, stochasticity and rank
//! predicates, and normalizations.

use crate::error::{Error, Result};
use crate::scalar::{best_rational, rat_to_f64, Mode, Scalar};
use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, One, Signed, Zero};
use std::ops::{Index, IndexMut};

/// Stochasticity tolerance for float-mode row/column sum checks.
pub const TOL_STOCH: f64 = 1e-9;
/// Relative singular-value cutoff for float-mode numerical rank.
pub const TOL_RANK: f64 = 1e-9;

/// Row-major rectangular storage, generic over the scalar type.
#[derive(Clone, Debug, PartialEq)]
pub struct Dense<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T> Dense<T> {
    pub fn from_vec(rows: usize, cols: usize, data: Vec<T>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::EmptyMatrix);
        }
        if data.len() != rows * cols {
            return Err(Error::BadEntryCount {
                expected: rows * cols,
                got: data.len(),
            });
        }
        Ok(Dense { rows, cols, data })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Dense { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn data(&self) -> &[T] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn map<U>(&self, f: impl FnMut(&T) -> U) -> Dense<U> {
        Dense {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }
}

impl<T: Clone> Dense<T> {
    pub fn transpose(&self) -> Dense<T> {
        Dense::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }
}

impl<T> Index<(usize, usize)> for Dense<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.cols + j]
    }
}

impl<T> IndexMut<(usize, usize)> for Dense<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.data[i * self.cols + j]
    }
}

impl<T> Dense<T>
where
    T: Clone + Zero + std::ops::Mul<Output = T>,
{
    pub fn matmul(&self, other: &Dense<T>) -> Result<Dense<T>> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                left: self.cols,
                right: other.rows,
            });
        }
        Ok(Dense::from_fn(self.rows, other.cols, |i, j| {
            let mut acc = T::zero();
            for l in 0..self.cols {
                acc = acc + self[(i, l)].clone() * other[(l, j)].clone();
            }
            acc
        }))
    }
}

/// An `n x n` matrix in one of the two scalar modes.
///
/// Exact mode is the source of truth for every conjecture verdict; float mode
/// exists for the search loop.
#[derive(Clone, Debug, PartialEq)]
pub enum Matrix {
    Exact(Dense<BigRational>),
    Float(Dense<f64>),
}

impl Matrix {
    pub fn new_exact(n: usize, entries: Vec<BigRational>) -> Result<Matrix> {
        Ok(Matrix::Exact(Dense::from_vec(n, n, entries)?))
    }

    pub fn new_float(n: usize, entries: Vec<f64>) -> Result<Matrix> {
        let d = Dense::from_vec(n, n, entries)?;
        for i in 0..n {
            for j in 0..n {
                if !d[(i, j)].is_finite() {
                    return Err(Error::NonFinite { row: i, col: j });
                }
            }
        }
        Ok(Matrix::Float(d))
    }

    /// Exact matrix from integer rows, mostly for tests and examples.
    pub fn from_int_rows(rows: &[&[i64]]) -> Result<Matrix> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * n);
        for r in rows {
            if r.len() != n {
                return Err(Error::BadEntryCount {
                    expected: n * n,
                    got: r.len() * n,
                });
            }
            entries.extend(
                r.iter()
                    .map(|&v| BigRational::from_integer(BigInt::from(v))),
            );
        }
        Matrix::new_exact(n, entries)
    }

    pub fn identity(n: usize) -> Matrix {
        Matrix::Exact(Dense::from_fn(n, n, |i, j| {
            if i == j {
                BigRational::one()
            } else {
                BigRational::zero()
            }
        }))
    }

    pub fn n(&self) -> usize {
        match self {
            Matrix::Exact(d) => d.rows(),
            Matrix::Float(d) => d.rows(),
        }
    }

    pub fn mode(&self) -> Mode {
        match self {
            Matrix::Exact(_) => Mode::Exact,
            Matrix::Float(_) => Mode::Float,
        }
    }

    pub fn get(&self, i: usize, j: usize) -> Scalar {
        match self {
            Matrix::Exact(d) => Scalar::Exact(d[(i, j)].clone()),
            Matrix::Float(d) => Scalar::Float(d[(i, j)]),
        }
    }

    pub fn as_exact(&self) -> Result<&Dense<BigRational>> {
        match self {
            Matrix::Exact(d) => Ok(d),
            Matrix::Float(_) => Err(Error::NotExactMode),
        }
    }

    pub fn to_float(&self) -> Matrix {
        match self {
            Matrix::Exact(d) => Matrix::Float(d.map(rat_to_f64)),
            Matrix::Float(_) => self.clone(),
        }
    }

    /// Round each entry to the nearest fraction with denominator at most
    /// `max_den`, clamping negatives to zero. No re-normalization: rank and
    /// stochasticity are re-tested on the result.
    pub fn rationalize(&self, max_den: u64) -> Matrix {
        match self {
            Matrix::Exact(_) => self.clone(),
            Matrix::Float(d) => Matrix::Exact(d.map(|&x| {
                let r = best_rational(x, max_den).expect("finite by construction");
                if r.is_negative() {
                    BigRational::zero()
                } else {
                    r
                }
            })),
        }
    }

    pub fn transpose(&self) -> Matrix {
        match self {
            Matrix::Exact(d) => Matrix::Exact(d.transpose()),
            Matrix::Float(d) => Matrix::Float(d.transpose()),
        }
    }

    pub fn matmul(&self, other: &Matrix) -> Result<Matrix> {
        if self.n() != other.n() {
            return Err(Error::DimensionMismatch {
                left: self.n(),
                right: other.n(),
            });
        }
        match (self, other) {
            (Matrix::Exact(a), Matrix::Exact(b)) => Ok(Matrix::Exact(a.matmul(b)?)),
            (Matrix::Float(a), Matrix::Float(b)) => Ok(Matrix::Float(a.matmul(b)?)),
            _ => Err(Error::NotExactMode),
        }
    }

    /// Entrywise scaling by an exact rational (exact mode only).
    pub fn scale_exact(&self, factor: &BigRational) -> Result<Matrix> {
        let d = self.as_exact()?;
        Ok(Matrix::Exact(d.map(|e| e * factor)))
    }

    pub fn row_sums(&self) -> Vec<Scalar> {
        match self {
            Matrix::Exact(d) => (0..d.rows())
                .map(|i| Scalar::Exact(d.row(i).iter().sum()))
                .collect(),
            Matrix::Float(d) => (0..d.rows())
                .map(|i| Scalar::Float(d.row(i).iter().sum()))
                .collect(),
        }
    }

    pub fn col_sums(&self) -> Vec<Scalar> {
        self.transpose().row_sums()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.check_nonnegative().is_ok()
    }

    pub fn check_nonnegative(&self) -> Result<()> {
        let n = self.n();
        for i in 0..n {
            for j in 0..n {
                let neg = match self {
                    Matrix::Exact(d) => d[(i, j)].is_negative(),
                    Matrix::Float(d) => d[(i, j)] < 0.0,
                };
                if neg {
                    return Err(Error::NotNonnegative { row: i, col: j });
                }
            }
        }
        Ok(())
    }

    /// Nonnegative with every row summing to 1: exactly in exact mode, within
    /// `tol` in float mode.
    pub fn is_row_stochastic(&self, tol: f64) -> bool {
        if !self.is_nonnegative() {
            return false;
        }
        match self {
            Matrix::Exact(_) => self
                .row_sums()
                .iter()
                .all(|s| *s.as_exact().unwrap() == BigRational::one()),
            Matrix::Float(_) => self
                .row_sums()
                .iter()
                .all(|s| (s.to_f64() - 1.0).abs() <= tol),
        }
    }

    pub fn is_col_stochastic(&self, tol: f64) -> bool {
        self.transpose().is_row_stochastic(tol)
    }

    pub fn is_doubly_stochastic(&self, tol: f64) -> bool {
        self.is_row_stochastic(tol) && self.is_col_stochastic(tol)
    }

    /// Row normalization: divide each row by its sum. Defined only when all
    /// row sums are strictly positive.
    pub fn normalize_rows(&self) -> Result<Matrix> {
        match self {
            Matrix::Exact(d) => {
                let mut out = d.clone();
                for i in 0..d.rows() {
                    let sum: BigRational = d.row(i).iter().sum();
                    if !sum.is_positive() {
                        return Err(Error::ZeroRowSum(i));
                    }
                    for j in 0..d.cols() {
                        out[(i, j)] = &d[(i, j)] / &sum;
                    }
                }
                Ok(Matrix::Exact(out))
            }
            Matrix::Float(d) => {
                let mut out = d.clone();
                for i in 0..d.rows() {
                    let sum: f64 = d.row(i).iter().sum();
                    if sum <= 0.0 {
                        return Err(Error::ZeroRowSum(i));
                    }
                    for j in 0..d.cols() {
                        out[(i, j)] = d[(i, j)] / sum;
                    }
                }
                Ok(Matrix::Float(out))
            }
        }
    }

    /// Column normalization, the transpose dual of [`Matrix::normalize_rows`].
    pub fn normalize_cols(&self) -> Result<Matrix> {
        match self.transpose().normalize_rows() {
            Ok(m) => Ok(m.transpose()),
            Err(Error::ZeroRowSum(j)) => Err(Error::ZeroColSum(j)),
            Err(e) => Err(e),
        }
    }

    pub fn has_zero_row(&self) -> bool {
        let n = self.n();
        (0..n).any(|i| (0..n).all(|j| self.get(i, j).is_zero()))
    }

    pub fn has_zero_col(&self) -> bool {
        self.transpose().has_zero_row()
    }

    pub fn rank_with_tol(&self, tol_rank: f64) -> usize {
        match self {
            Matrix::Exact(d) => rank_exact(d),
            Matrix::Float(d) => rank_float(d, tol_rank),
        }
    }

    /// Exact rank in exact mode; numerical rank at [`TOL_RANK`] in float mode.
    pub fn rank(&self) -> usize {
        self.rank_with_tol(TOL_RANK)
    }
}

/// Exact rank by fraction-free (Bareiss) elimination: row denominators are
/// cleared first, then all pivoting stays in big integers with exact
/// divisions.
fn rank_exact(d: &Dense<BigRational>) -> usize {
    let (nr, nc) = (d.rows(), d.cols());
    let mut m: Vec<Vec<BigInt>> = (0..nr)
        .map(|i| {
            let lcm = d
                .row(i)
                .iter()
                .fold(BigInt::one(), |acc, e| acc.lcm(e.denom()));
            d.row(i)
                .iter()
                .map(|e| e.numer() * (&lcm / e.denom()))
                .collect()
        })
        .collect();

    let mut rank = 0;
    let mut prev = BigInt::one();
    for col in 0..nc {
        let Some(pivot) = (rank..nr).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        for i in rank + 1..nr {
            for j in col + 1..nc {
                let t = &m[i][j] * &m[rank][col] - &m[i][col] * &m[rank][j];
                debug_assert!((&t % &prev).is_zero(), "Bareiss division must be exact");
                m[i][j] = t / &prev;
            }
            m[i][col] = BigInt::zero();
        }
        prev = m[rank][col].clone();
        rank += 1;
        if rank == nr {
            break;
        }
    }
    rank
}

/// Numerical rank: singular values above `tol * sigma_max`.
fn rank_float(d: &Dense<f64>, tol: f64) -> usize {
    let m = nalgebra::DMatrix::from_fn(d.rows(), d.cols(), |i, j| d[(i, j)]);
    let sv = m.singular_values();
    let max = sv.iter().cloned().fold(0.0f64, f64::max);
    if max <= 0.0 {
        return 0;
    }
    sv.iter().filter(|&&s| s > tol * max).count()
}
