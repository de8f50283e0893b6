//! Permanent computation: Ryser's inclusion-exclusion with Gray-code subset
//! updates, a brute-force oracle, and the closed form for composition
//! matrices.

use crate::comp::CompositionVector;
use crate::error::{Error, Result};
use crate::matrix::{Dense, Matrix};
use crate::scalar::{factorial, Scalar};
use itertools::Itertools;
use num::rational::BigRational;
use num::{BigInt, One, Zero};

/// Largest n accepted by [`permanent_ryser`] in exact mode.
pub const MAX_N_EXACT: usize = 14;
/// Largest n accepted by [`permanent_ryser`] in float mode.
pub const MAX_N_FLOAT: usize = 20;
/// Largest n accepted by [`permanent_naive`].
pub const MAX_N_NAIVE: usize = 9;

/// per(A) by Ryser's formula, O(2^n * n). One Gray-code traversal for both
/// scalar modes; exactness comes from the scalar type alone.
pub fn permanent_ryser(a: &Matrix) -> Result<Scalar> {
    let n = a.n();
    match a {
        Matrix::Exact(d) => {
            if n > MAX_N_EXACT {
                return Err(Error::DimensionTooLarge {
                    n,
                    max: MAX_N_EXACT,
                    op: "exact Ryser permanent",
                });
            }
            Ok(Scalar::Exact(ryser(d)))
        }
        Matrix::Float(d) => {
            if n > MAX_N_FLOAT {
                return Err(Error::DimensionTooLarge {
                    n,
                    max: MAX_N_FLOAT,
                    op: "float Ryser permanent",
                });
            }
            Ok(Scalar::Float(ryser(d)))
        }
    }
}

/// per(A) = sum over S != {} of (-1)^(n-|S|) prod_i sum_{j in S} a_ij.
/// The column subset walks a binary Gray code so each step updates the row
/// sums by a single column.
fn ryser<T>(a: &Dense<T>) -> T
where
    T: Clone + Zero + One + PartialEq,
    for<'x> &'x T: std::ops::Add<&'x T, Output = T>
        + std::ops::Sub<&'x T, Output = T>
        + std::ops::Mul<&'x T, Output = T>,
{
    let n = a.rows();
    let mut row_sums = vec![T::zero(); n];
    let mut total = T::zero();
    for k in 1u64..(1u64 << n) {
        let j = k.trailing_zeros() as usize;
        let gray = k ^ (k >> 1);
        let added = gray & (1 << j) != 0;
        for (i, w) in row_sums.iter_mut().enumerate() {
            *w = if added {
                &*w + &a[(i, j)]
            } else {
                &*w - &a[(i, j)]
            };
        }
        let mut prod = T::one();
        for w in &row_sums {
            prod = &prod * w;
        }
        if (n as u32 - gray.count_ones()).is_multiple_of(2) {
            total = &total + &prod;
        } else {
            total = &total - &prod;
        }
    }
    total
}

/// per(A) summed over all n! diagonals. The independent oracle for
/// [`permanent_ryser`].
pub fn permanent_naive(a: &Matrix) -> Result<Scalar> {
    let n = a.n();
    if n > MAX_N_NAIVE {
        return Err(Error::DimensionTooLarge {
            n,
            max: MAX_N_NAIVE,
            op: "naive permanent",
        });
    }
    match a {
        Matrix::Exact(d) => Ok(Scalar::Exact(naive(d))),
        Matrix::Float(d) => Ok(Scalar::Float(naive(d))),
    }
}

fn naive<T>(a: &Dense<T>) -> T
where
    T: Clone + Zero + One,
    for<'x> &'x T: std::ops::Add<&'x T, Output = T> + std::ops::Mul<&'x T, Output = T>,
{
    let n = a.rows();
    let mut total = T::zero();
    for perm in (0..n).permutations(n) {
        let mut prod = T::one();
        for (i, &j) in perm.iter().enumerate() {
            prod = &prod * &a[(i, j)];
        }
        total = &total + &prod;
    }
    total
}

/// Closed-form permanent of the composition matrix J_rvec: the product over
/// parts m of m!/m^m.
pub fn permanent_block(rvec: &CompositionVector) -> BigRational {
    rvec.parts()
        .iter()
        .map(|&m| BigRational::new(factorial(m), BigInt::from(m).pow(m as u32)))
        .fold(BigRational::one(), |acc, f| acc * f)
}
