//! Integer compositions and the block-diagonal matrices built from them.

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::perm::PermutationRep;
use num::rational::BigRational;
use num::BigInt;
use num::Zero;

/// A positive integer composition of n, stored in canonical nondecreasing
/// order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompositionVector {
    parts: Vec<usize>,
}

impl CompositionVector {
    pub fn new(mut parts: Vec<usize>) -> Result<CompositionVector> {
        if parts.is_empty() {
            return Err(Error::InvalidComposition("no parts".into()));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidComposition("parts must be positive".into()));
        }
        parts.sort_unstable();
        Ok(CompositionVector { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Sum of parts.
    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts.
    pub fn s(&self) -> usize {
        self.parts.len()
    }
}

impl std::fmt::Display for CompositionVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// The balanced composition of n into k parts: with n = r*k + s, 0 <= s < k,
/// the part r repeated k-s times followed by r+1 repeated s times.
pub fn composition_for(n: usize, k: usize) -> Result<CompositionVector> {
    if k < 1 || k > n {
        return Err(Error::InvalidRank { n, k });
    }
    let r = n / k;
    let s = n % k;
    let mut parts = vec![r; k - s];
    parts.extend(std::iter::repeat_n(r + 1, s));
    CompositionVector::new(parts)
}

/// The (r, s) decomposition n = r*k + s with 0 <= s < k.
pub fn rk_split(n: usize, k: usize) -> Result<(usize, usize)> {
    if k < 1 || k > n {
        return Err(Error::InvalidRank { n, k });
    }
    Ok((n / k, n % k))
}

/// Block-diagonal direct sum of J_m blocks (all entries 1/m), one block per
/// part. Doubly stochastic, exact mode, rank equal to the number of parts.
pub fn composition_matrix(rvec: &CompositionVector) -> Matrix {
    let n = rvec.n();
    let mut entries = vec![BigRational::zero(); n * n];
    let mut off = 0;
    for &m in rvec.parts() {
        let cell = BigRational::new(BigInt::from(1), BigInt::from(m));
        for i in off..off + m {
            for j in off..off + m {
                entries[i * n + j] = cell.clone();
            }
        }
        off += m;
    }
    Matrix::new_exact(n, entries).expect("n >= 1")
}

/// The conjectured permanent maximizer P * J_rvec * Q.
pub fn conjugate_extremal(
    rvec: &CompositionVector,
    p: &PermutationRep,
    q: &PermutationRep,
) -> Result<Matrix> {
    let n = rvec.n();
    if p.n() != n || q.n() != n {
        return Err(Error::DimensionMismatch {
            left: n,
            right: if p.n() != n { p.n() } else { q.n() },
        });
    }
    p.matrix()
        .matmul(&composition_matrix(rvec))?
        .matmul(&q.matrix())
}

/// The conjectured diagonal-product maximizer P^t * J_rvec * P * pi(sigma).
pub fn symmetric_extremal(
    rvec: &CompositionVector,
    p: &PermutationRep,
    sigma: &PermutationRep,
) -> Result<Matrix> {
    let n = rvec.n();
    if p.n() != n || sigma.n() != n {
        return Err(Error::DimensionMismatch {
            left: n,
            right: if p.n() != n { p.n() } else { sigma.n() },
        });
    }
    p.matrix()
        .transpose()
        .matmul(&composition_matrix(rvec))?
        .matmul(&p.matrix())?
        .matmul(&sigma.matrix())
}
