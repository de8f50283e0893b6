//! Diagonal products: product along one permutation, and the maximum over
//! all permutations via a max-weight assignment on log entries.

use crate::error::{Error, Result};
use crate::matrix::{Dense, Matrix};
use crate::perm::PermutationRep;
use crate::scalar::Scalar;
use itertools::Itertools;
use num::rational::BigRational;
use num::{One, Zero};

/// Largest n accepted by [`max_diagonal_naive`].
pub const MAX_N_NAIVE: usize = 9;

/// Log-value gap under which the float assignment result is distrusted and
/// the exact brute force takes over (exact mode, n <= 9 only).
const TIE_GAP: f64 = 1e-12;

/// prod_i a(i, sigma(i)).
pub fn diagonal_product(a: &Matrix, sigma: &PermutationRep) -> Result<Scalar> {
    if a.n() != sigma.n() {
        return Err(Error::DimensionMismatch {
            left: a.n(),
            right: sigma.n(),
        });
    }
    Ok(match a {
        Matrix::Exact(d) => Scalar::Exact(
            (0..d.rows())
                .map(|i| d[(i, sigma.image(i))].clone())
                .fold(BigRational::one(), |acc, e| acc * e),
        ),
        Matrix::Float(d) => Scalar::Float((0..d.rows()).map(|i| d[(i, sigma.image(i))]).product()),
    })
}

/// Maximum diagonal product over all permutations, with an attaining
/// permutation.
///
/// Solved as a max-weight perfect assignment on log entries; zero entries are
/// excluded arcs, not finite sentinels. If every diagonal hits a zero the
/// result is (0, identity). In exact mode the winning permutation's product
/// is re-evaluated exactly; when n <= 9 and the best two assignment
/// log-values are within 1e-12 the exact brute force decides instead.
pub fn max_diagonal_product(a: &Matrix) -> Result<(Scalar, PermutationRep)> {
    let n = a.n();
    let logs = log_weights(a);

    let Some(assign) = solve_min_assignment(n, &neg(&logs)) else {
        let zero = match a {
            Matrix::Exact(_) => Scalar::Exact(BigRational::zero()),
            Matrix::Float(_) => Scalar::Float(0.0),
        };
        return Ok((zero, PermutationRep::identity(n)));
    };
    let sigma = PermutationRep::from_images(assign).expect("solver returns a bijection");

    if matches!(a, Matrix::Exact(_)) && n <= MAX_N_NAIVE {
        let best_log = log_value(&logs, &sigma);
        if let Some(second_log) = second_best_log(n, &logs, &sigma) {
            if best_log - second_log < TIE_GAP {
                return max_diagonal_naive(a);
            }
        }
    }

    let value = diagonal_product(a, &sigma)?;
    Ok((value, sigma))
}

/// Brute force over all n! permutations, ties broken by the lexicographically
/// smallest one-line sigma. The oracle for the assignment solver.
pub fn max_diagonal_naive(a: &Matrix) -> Result<(Scalar, PermutationRep)> {
    let n = a.n();
    if n > MAX_N_NAIVE {
        return Err(Error::DimensionTooLarge {
            n,
            max: MAX_N_NAIVE,
            op: "naive max diagonal",
        });
    }
    Ok(match a {
        Matrix::Exact(d) => {
            let (v, s) = naive_max(d);
            (Scalar::Exact(v), s)
        }
        Matrix::Float(d) => {
            let (v, s) = naive_max(d);
            (Scalar::Float(v), s)
        }
    })
}

fn naive_max<T>(a: &Dense<T>) -> (T, PermutationRep)
where
    T: Clone + One + PartialOrd,
    for<'x> &'x T: std::ops::Mul<&'x T, Output = T>,
{
    let n = a.rows();
    let mut best: Option<(T, Vec<usize>)> = None;
    // lexicographic enumeration + strict improvement = lex-smallest argmax
    for perm in (0..n).permutations(n) {
        let mut prod = T::one();
        for (i, &j) in perm.iter().enumerate() {
            prod = &prod * &a[(i, j)];
        }
        match &best {
            Some((b, _)) if prod <= *b => {}
            _ => best = Some((prod, perm)),
        }
    }
    let (v, images) = best.expect("n >= 1");
    (v, PermutationRep::from_images(images).expect("bijection"))
}

/// ln(a_ij) for positive entries, None for excluded arcs (entries <= 0).
fn log_weights(a: &Matrix) -> Vec<Vec<Option<f64>>> {
    let n = a.n();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let x = a.get(i, j).to_f64();
                    (x > 0.0).then(|| x.ln())
                })
                .collect()
        })
        .collect()
}

fn neg(w: &[Vec<Option<f64>>]) -> Vec<Vec<Option<f64>>> {
    w.iter()
        .map(|row| row.iter().map(|c| c.map(|x| -x)).collect())
        .collect()
}

fn log_value(logs: &[Vec<Option<f64>>], sigma: &PermutationRep) -> f64 {
    (0..sigma.n())
        .map(|i| logs[i][sigma.image(i)].expect("arcs on a found assignment are admissible"))
        .sum()
}

/// Best assignment log-value among those differing from `sigma` in at least
/// one arc: re-solve once per forced-out arc of `sigma`.
fn second_best_log(n: usize, logs: &[Vec<Option<f64>>], sigma: &PermutationRep) -> Option<f64> {
    let mut best: Option<f64> = None;
    for banned_row in 0..n {
        let banned_col = sigma.image(banned_row);
        let cost: Vec<Vec<Option<f64>>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if i == banned_row && j == banned_col {
                            None
                        } else {
                            logs[i][j].map(|x| -x)
                        }
                    })
                    .collect()
            })
            .collect();
        if let Some(assign) = solve_min_assignment(n, &cost) {
            let alt = PermutationRep::from_images(assign).expect("bijection");
            let v = log_value(logs, &alt);
            if best.is_none_or(|b| v > b) {
                best = Some(v);
            }
        }
    }
    best
}

/// Min-cost perfect assignment by shortest augmenting paths with row/column
/// potentials. `None` cost entries are excluded arcs; returns `None` when no
/// perfect matching over admissible arcs exists.
pub(crate) fn solve_min_assignment(n: usize, cost: &[Vec<Option<f64>>]) -> Option<Vec<usize>> {
    let mut u = vec![0.0f64; n];
    let mut v = vec![0.0f64; n];
    let mut row_of_col: Vec<Option<usize>> = vec![None; n];
    let mut col_of_row: Vec<Option<usize>> = vec![None; n];

    for start in 0..n {
        let mut dist = vec![f64::INFINITY; n];
        let mut pred = vec![start; n];
        let mut scanned = vec![false; n];
        let mut min_dist = 0.0f64;
        let mut i = start;
        let sink;
        loop {
            for j in 0..n {
                if scanned[j] {
                    continue;
                }
                if let Some(c) = cost[i][j] {
                    let nd = min_dist + c - u[i] - v[j];
                    if nd < dist[j] {
                        dist[j] = nd;
                        pred[j] = i;
                    }
                }
            }
            let mut next: Option<usize> = None;
            for j in 0..n {
                if !scanned[j] && next.is_none_or(|b| dist[j] < dist[b]) {
                    next = Some(j);
                }
            }
            let j = next?;
            if dist[j].is_infinite() {
                return None; // no augmenting path avoids the excluded arcs
            }
            min_dist = dist[j];
            scanned[j] = true;
            match row_of_col[j] {
                None => {
                    sink = j;
                    break;
                }
                Some(r) => i = r,
            }
        }

        u[start] += min_dist;
        for j in 0..n {
            if scanned[j] && j != sink {
                if let Some(r) = row_of_col[j] {
                    u[r] += min_dist - dist[j];
                }
                v[j] -= min_dist - dist[j];
            }
        }

        let mut j = sink;
        loop {
            let r = pred[j];
            row_of_col[j] = Some(r);
            let prev = col_of_row[r].replace(j);
            match prev {
                Some(pj) => j = pj,
                None => break,
            }
        }
    }
    Some(
        col_of_row
            .into_iter()
            .map(|c| c.expect("perfect"))
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::comp::{composition_matrix, CompositionVector};
    use crate::matrix::TOL_STOCH;
    use crate::permanent::permanent_ryser;
    use crate::scalar::brat;
    use rand::{Rng, SeedableRng};

    fn random_rational_matrix(n: usize, rng: &mut impl Rng) -> Matrix {
        let entries = (0..n * n)
            .map(|_| brat(rng.random_range(0..=9), rng.random_range(1..=9)))
            .collect();
        Matrix::new_exact(n, entries).unwrap()
    }

    #[test]
    fn diagonal_product_examples() {
        let id3 = Matrix::identity(3);
        let sigma = PermutationRep::identity(3);
        assert_eq!(
            diagonal_product(&id3, &sigma).unwrap().as_exact().unwrap(),
            &brat(1, 1)
        );

        let j3 = composition_matrix(&CompositionVector::new(vec![3]).unwrap());
        for images in [vec![0, 1, 2], vec![2, 0, 1]] {
            let s = PermutationRep::from_images(images).unwrap();
            assert_eq!(
                diagonal_product(&j3, &s).unwrap().as_exact().unwrap(),
                &brat(1, 27)
            );
        }

        let a = Matrix::from_int_rows(&[&[1, 2], &[3, 4]]).unwrap();
        let t = PermutationRep::from_images(vec![1, 0]).unwrap();
        assert_eq!(
            diagonal_product(&a, &t).unwrap().as_exact().unwrap(),
            &brat(6, 1)
        );

        assert!(diagonal_product(&a, &sigma).is_err());
    }

    #[test]
    fn max_diagonal_2x2() {
        let a = Matrix::from_int_rows(&[&[1, 2], &[3, 4]]).unwrap();
        let (v, s) = max_diagonal_product(&a).unwrap();
        assert_eq!(v.as_exact().unwrap(), &brat(6, 1));
        assert_eq!(s.images(), &[1, 0]);
        let (nv, ns) = max_diagonal_naive(&a).unwrap();
        assert_eq!(nv.as_exact().unwrap(), &brat(6, 1));
        assert_eq!(ns.images(), &[1, 0]);
    }

    #[test]
    fn max_diagonal_block_matrix() {
        // J_(1,2): admissible diagonals give 1/4; identity is lex-smallest
        let j12 = composition_matrix(&CompositionVector::new(vec![1, 2]).unwrap());
        let (v, s) = max_diagonal_product(&j12).unwrap();
        assert_eq!(v.as_exact().unwrap(), &brat(1, 4));
        assert!(s.is_identity());

        // J_(2,2): best diagonals stay inside the blocks, value 1/16
        let j22 = composition_matrix(&CompositionVector::new(vec![2, 2]).unwrap());
        let (v, s) = max_diagonal_naive(&j22).unwrap();
        assert_eq!(v.as_exact().unwrap(), &brat(1, 16));
        assert_eq!(
            diagonal_product(&j22, &s).unwrap().as_exact().unwrap(),
            &brat(1, 16)
        );
        assert!(s.is_identity()); // lex tie-break
    }

    #[test]
    fn permutation_matrix_unique_diagonal() {
        let sigma = PermutationRep::from_images(vec![2, 0, 1]).unwrap();
        let (v, s) = max_diagonal_product(&sigma.matrix()).unwrap();
        assert_eq!(v.as_exact().unwrap(), &brat(1, 1));
        assert_eq!(s, sigma);
    }

    #[test]
    fn zero_column_kills_every_diagonal() {
        let a = Matrix::from_int_rows(&[&[0, 1], &[0, 1]]).unwrap();
        let (v, s) = max_diagonal_product(&a).unwrap();
        assert!(v.is_zero());
        assert!(s.is_identity());
        let (nv, _) = max_diagonal_naive(&a).unwrap();
        assert!(nv.is_zero());
    }

    #[test]
    fn solver_matches_oracle_value_on_random_matrices() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(31);
        for _ in 0..80 {
            let n = rng.random_range(1..=6);
            let a = random_rational_matrix(n, &mut rng);
            let (v, s) = max_diagonal_product(&a).unwrap();
            let (nv, _) = max_diagonal_naive(&a).unwrap();
            assert_eq!(v, nv);
            // the attained sigma evaluates to the reported value
            assert_eq!(diagonal_product(&a, &s).unwrap(), v);
        }
    }

    #[test]
    fn max_diagonal_bounded_by_permanent() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(32);
        for _ in 0..30 {
            let n = rng.random_range(1..=6);
            let a = random_rational_matrix(n, &mut rng);
            let (v, _) = max_diagonal_product(&a).unwrap();
            let per = permanent_ryser(&a).unwrap();
            assert!(v.as_exact().unwrap() <= per.as_exact().unwrap());
        }
    }

    #[test]
    fn row_stochastic_max_diagonal_at_most_one() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(33);
        for _ in 0..30 {
            let n = rng.random_range(1..=6);
            let mut a = random_rational_matrix(n, &mut rng);
            // force positive rows, then normalize
            if let Matrix::Exact(d) = &mut a {
                for i in 0..n {
                    d[(i, 0)] = &d[(i, 0)] + &brat(1, 7);
                }
            }
            let a = a.normalize_rows().unwrap();
            assert!(a.is_row_stochastic(TOL_STOCH));
            let (v, _) = max_diagonal_product(&a).unwrap();
            let one = brat(1, 1);
            assert!(v.as_exact().unwrap() <= &one);
            if v.as_exact().unwrap() == &one {
                assert!(PermutationRep::from_matrix(&a).is_ok());
            }
        }
        // equality case: permutation matrices reach exactly 1
        let p = PermutationRep::from_images(vec![1, 2, 0]).unwrap();
        let (v, _) = max_diagonal_product(&p.matrix()).unwrap();
        assert_eq!(v.as_exact().unwrap(), &brat(1, 1));
    }

    #[test]
    fn diagonal_shift_identity() {
        // prod_i a(i, sigma(i)) equals the main diagonal of A * pi(sigma)^t
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(34);
        for _ in 0..20 {
            let n = rng.random_range(1..=6);
            let a = random_rational_matrix(n, &mut rng);
            let sigma = PermutationRep::random(n, &mut rng);
            let shifted = a.matmul(&sigma.matrix().transpose()).unwrap();
            assert_eq!(
                diagonal_product(&a, &sigma).unwrap(),
                diagonal_product(&shifted, &PermutationRep::identity(n)).unwrap()
            );
        }
    }

    #[test]
    fn float_mode_solver() {
        let a = Matrix::new_float(3, vec![0.2, 0.8, 0.0, 0.5, 0.25, 0.25, 1.0, 0.0, 0.0]).unwrap();
        let (v, s) = max_diagonal_product(&a).unwrap();
        // best: a02? excluded (0). rows: 0->1 (0.8), 1->2 (0.25), 2->0 (1.0) = 0.2
        assert!((v.to_f64() - 0.2).abs() < 1e-12);
        assert_eq!(s.images(), &[1, 2, 0]);
    }
}
