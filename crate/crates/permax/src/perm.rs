//! Permutations of {1..n} and their 0/1 matrix representation.

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use num::rational::BigRational;
use num::{One, Zero};
use rand::Rng;
use std::fmt;
use std::str::FromStr;

/// A permutation sigma in one-line notation together with its matrix image:
/// the 0/1 matrix with a 1 at (i, sigma(i)).
///
/// Images are stored 0-based; all user-facing text is 1-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermutationRep {
    images: Vec<usize>,
}

impl PermutationRep {
    pub fn identity(n: usize) -> PermutationRep {
        PermutationRep {
            images: (0..n).collect(),
        }
    }

    /// From 0-based images; validates bijectivity.
    pub fn from_images(images: Vec<usize>) -> Result<PermutationRep> {
        let n = images.len();
        if n == 0 {
            return Err(Error::InvalidPermutation("empty permutation".into()));
        }
        let mut seen = vec![false; n];
        for &v in &images {
            if v >= n || seen[v] {
                return Err(Error::InvalidPermutation(format!(
                    "images must be a bijection on 1..={n}"
                )));
            }
            seen[v] = true;
        }
        Ok(PermutationRep { images })
    }

    pub fn random(n: usize, rng: &mut impl Rng) -> PermutationRep {
        let mut images: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            let j = rng.random_range(0..=i);
            images.swap(i, j);
        }
        PermutationRep { images }
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    /// sigma(i), 0-based.
    pub fn image(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn inverse(&self) -> PermutationRep {
        let mut inv = vec![0; self.n()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v] = i;
        }
        PermutationRep { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// The matrix image: exact 0/1 matrix with a single 1 per row and column.
    pub fn matrix(&self) -> Matrix {
        let n = self.n();
        let mut entries = vec![BigRational::zero(); n * n];
        for (i, &j) in self.images.iter().enumerate() {
            entries[i * n + j] = BigRational::one();
        }
        Matrix::new_exact(n, entries).expect("n >= 1")
    }

    /// Recover sigma from a 0/1 permutation matrix by locating the unique 1
    /// per row.
    pub fn from_matrix(m: &Matrix) -> Result<PermutationRep> {
        let n = m.n();
        let mut images = Vec::with_capacity(n);
        for i in 0..n {
            let mut hit = None;
            for j in 0..n {
                let e = m.get(i, j);
                if e.is_zero() {
                    continue;
                }
                let is_one = match &e {
                    crate::scalar::Scalar::Exact(r) => r.is_one(),
                    crate::scalar::Scalar::Float(x) => *x == 1.0,
                };
                if !is_one || hit.is_some() {
                    return Err(Error::InvalidPermutation(format!(
                        "row {} is not a unit row",
                        i + 1
                    )));
                }
                hit = Some(j);
            }
            images.push(
                hit.ok_or_else(|| Error::InvalidPermutation(format!("row {} has no 1", i + 1)))?,
            );
        }
        PermutationRep::from_images(images)
    }
}

/// One-line notation with 1-based images, e.g. "2,1,3".
impl fmt::Display for PermutationRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.images.iter().map(|v| (v + 1).to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for PermutationRep {
    type Err = Error;

    fn from_str(s: &str) -> Result<PermutationRep> {
        let images: Vec<usize> = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidPermutation(format!("bad image '{t}'")))
            })
            .collect::<Result<_>>()?;
        if images.contains(&0) {
            return Err(Error::InvalidPermutation("images are 1-based".into()));
        }
        PermutationRep::from_images(images.into_iter().map(|v| v - 1).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn matrix_image_and_round_trip() {
        let sigma = PermutationRep::from_images(vec![1, 0, 2]).unwrap();
        let m = sigma.matrix();
        assert_eq!(m.get(0, 1).to_f64(), 1.0);
        assert_eq!(m.get(1, 0).to_f64(), 1.0);
        assert_eq!(m.get(2, 2).to_f64(), 1.0);
        assert!(m.is_doubly_stochastic(0.0));
        assert_eq!(PermutationRep::from_matrix(&m).unwrap(), sigma);
    }

    #[test]
    fn round_trip_random() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..50 {
            let sigma = PermutationRep::random(7, &mut rng);
            assert_eq!(PermutationRep::from_matrix(&sigma.matrix()).unwrap(), sigma);
            let inv = sigma.inverse();
            assert_eq!(sigma.matrix().transpose(), inv.matrix());
        }
    }

    #[test]
    fn one_line_text_round_trip() {
        let sigma: PermutationRep = "2,1,3".parse().unwrap();
        assert_eq!(sigma.images(), &[1, 0, 2]);
        assert_eq!(sigma.to_string(), "2,1,3");
        assert!("2,2,3".parse::<PermutationRep>().is_err());
        assert!("0,1".parse::<PermutationRep>().is_err());
        assert!("".parse::<PermutationRep>().is_err());
    }

    #[test]
    fn rejects_non_permutation_matrix() {
        let m = Matrix::from_int_rows(&[&[1, 1], &[0, 0]]).unwrap();
        assert!(PermutationRep::from_matrix(&m).is_err());
    }
}
