//! The conjectured bounds f(n,k) and g(n,k), their nonnegative-formulation
//! scaling, and the structural equality-case deciders.

use crate::comp::{composition_for, rk_split, CompositionVector};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::perm::PermutationRep;
use crate::scalar::{factorial, Scalar};
use num::rational::BigRational;
use num::{BigInt, One, Signed, Zero};
use std::collections::BTreeMap;

/// Which objective a bound applies to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundKind {
    Permanent,
    Diagonal,
}

impl BoundKind {
    pub fn as_str(self) -> &'static str {
        match self {
            BoundKind::Permanent => "permanent",
            BoundKind::Diagonal => "diagonal",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Formulation {
    Stochastic,
    Nonnegative,
}

/// A fully resolved bound: the stochastic-side value together with the
/// row/column-sum scale of the nonnegative formulation (1 on the stochastic
/// side).
#[derive(Clone, Debug)]
pub struct BoundReport {
    pub n: usize,
    pub k: usize,
    pub r: usize,
    pub s: usize,
    pub composition: CompositionVector,
    pub kind: BoundKind,
    pub stochastic_bound: BigRational,
    pub formulation: Formulation,
    pub scale: Scalar,
}

impl BoundReport {
    /// scale * stochastic bound, in the scale's own mode.
    pub fn total(&self) -> Scalar {
        match &self.scale {
            Scalar::Exact(s) => Scalar::Exact(s * &self.stochastic_bound),
            Scalar::Float(s) => {
                Scalar::Float(s * crate::scalar::rat_to_f64(&self.stochastic_bound))
            }
        }
    }
}

/// f(n,k) = (r!/r^r)^(k-s) * ((r+1)!/(r+1)^(r+1))^s, the conjectured maximum
/// of the permanent over stochastic matrices of rank at most k.
pub fn bound_permanent_stochastic(n: usize, k: usize) -> Result<BoundReport> {
    bound_stochastic(n, k, BoundKind::Permanent)
}

/// g(n,k) = (1/r^r)^(k-s) * (1/(r+1)^(r+1))^s, the conjectured maximum of any
/// diagonal product over stochastic matrices of rank at most k.
pub fn bound_diagonal_stochastic(n: usize, k: usize) -> Result<BoundReport> {
    bound_stochastic(n, k, BoundKind::Diagonal)
}

pub fn bound_stochastic(n: usize, k: usize, kind: BoundKind) -> Result<BoundReport> {
    let (r, s) = rk_split(n, k)?;
    let composition = composition_for(n, k)?;
    let stochastic_bound = composition
        .parts()
        .iter()
        .map(|&m| {
            let denom = BigInt::from(m).pow(m as u32);
            match kind {
                BoundKind::Permanent => BigRational::new(factorial(m), denom),
                BoundKind::Diagonal => BigRational::new(BigInt::one(), denom),
            }
        })
        .fold(BigRational::one(), |acc, f| acc * f);
    Ok(BoundReport {
        n,
        k,
        r,
        s,
        composition,
        kind,
        stochastic_bound,
        formulation: Formulation::Stochastic,
        scale: Scalar::Exact(BigRational::one()),
    })
}

/// Nonnegative-formulation bound: min(prod of row sums, prod of column sums)
/// times the stochastic bound.
pub fn bound_nonnegative(a: &Matrix, k: usize, kind: BoundKind) -> Result<BoundReport> {
    a.check_nonnegative()?;
    let mut report = bound_stochastic(a.n(), k, kind)?;
    report.formulation = Formulation::Nonnegative;
    report.scale = match a {
        Matrix::Exact(_) => {
            let rp: BigRational = a
                .row_sums()
                .iter()
                .map(|s| s.as_exact().unwrap().clone())
                .product();
            let cp: BigRational = a
                .col_sums()
                .iter()
                .map(|s| s.as_exact().unwrap().clone())
                .product();
            Scalar::Exact(rp.min(cp))
        }
        Matrix::Float(_) => {
            let rp: f64 = a.row_sums().iter().map(|s| s.to_f64()).product();
            let cp: f64 = a.col_sums().iter().map(|s| s.to_f64()).product();
            Scalar::Float(rp.min(cp))
        }
    };
    Ok(report)
}

/// Witness pair for the P * J * Q form.
#[derive(Clone, Debug)]
pub struct PjqWitness {
    pub p: PermutationRep,
    pub q: PermutationRep,
}

/// Witness for the P^t * J * P form (after shifting by sigma).
#[derive(Clone, Debug)]
pub struct ConjWitness {
    pub p: PermutationRep,
}

#[derive(Clone, Debug)]
pub enum FormWitness {
    Pjq(PjqWitness),
    Conjugate(ConjWitness),
}

/// Which of the paper-style equality cases holds.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EqualityCase {
    /// Case 1: a zero row or a zero column.
    ZeroLine,
    /// Case 2: row-sum product strictly smaller, row normalization extremal.
    RowForm,
    /// Case 3: column-sum product strictly smaller, column normalization extremal.
    ColForm,
    /// Case 4: equal positive products, both normalizations extremal.
    BothForms,
    /// No case holds.
    None,
}

impl EqualityCase {
    pub fn as_str(self) -> &'static str {
        match self {
            EqualityCase::ZeroLine => "zero-line",
            EqualityCase::RowForm => "row-form",
            EqualityCase::ColForm => "col-form",
            EqualityCase::BothForms => "both-forms",
            EqualityCase::None => "none",
        }
    }
}

#[derive(Clone, Debug)]
pub struct EqualityVerdict {
    pub holds: bool,
    pub case: EqualityCase,
    pub row_witness: Option<FormWitness>,
    pub col_witness: Option<FormWitness>,
}

impl EqualityVerdict {
    fn no() -> EqualityVerdict {
        EqualityVerdict {
            holds: false,
            case: EqualityCase::None,
            row_witness: None,
            col_witness: None,
        }
    }
}

/// Row support classes of an exact matrix whose rows are unit multiples of
/// indicator vectors: every row must have exactly m nonzero entries, all
/// equal to 1/m. Returns (support -> rows) grouping, or None if some row
/// fails the entry test.
fn row_classes(a: &Matrix) -> Option<BTreeMap<Vec<usize>, Vec<usize>>> {
    let d = a.as_exact().ok()?;
    let n = d.rows();
    let mut classes: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
    for i in 0..n {
        let support: Vec<usize> = (0..n).filter(|&j| !d[(i, j)].is_zero()).collect();
        if support.is_empty() {
            return None;
        }
        let expect = BigRational::new(BigInt::one(), BigInt::from(support.len()));
        if support.iter().any(|&j| d[(i, j)] != expect) {
            return None;
        }
        classes.entry(support).or_default().push(i);
    }
    Some(classes)
}

/// Sorted class-size multiset equality against the composition parts.
fn sizes_match(classes: &BTreeMap<Vec<usize>, Vec<usize>>, rvec: &CompositionVector) -> bool {
    let mut sizes: Vec<usize> = classes.keys().map(|s| s.len()).collect();
    sizes.sort_unstable();
    sizes == rvec.parts()
}

/// Decides whether A = P * J_rvec * Q for some permutation matrices P, Q, by
/// structure: rows split into classes of identical support; a class with
/// support size m holds exactly m rows and supports of distinct classes are
/// disjoint; the class sizes match the parts of rvec. Exact mode only.
pub fn is_pjq_form(a: &Matrix, rvec: &CompositionVector) -> Result<Option<PjqWitness>> {
    let d = a.as_exact()?;
    let n = d.rows();
    if n != rvec.n() {
        return Err(Error::DimensionMismatch {
            left: n,
            right: rvec.n(),
        });
    }
    let Some(classes) = row_classes(a) else {
        return Ok(None);
    };

    // each class with support size m contains exactly m rows
    if classes.iter().any(|(sup, rows)| sup.len() != rows.len()) {
        return Ok(None);
    }
    // disjoint supports: with sizes summing to n this is exact coverage
    let mut seen = vec![0usize; n];
    for sup in classes.keys() {
        for &j in sup {
            seen[j] += 1;
        }
    }
    if seen.iter().any(|&c| c != 1) {
        return Ok(None);
    }
    if !sizes_match(&classes, rvec) {
        return Ok(None);
    }

    // canonical class order: by size, then by support; blocks of J_rvec are
    // laid out in nondecreasing part order, so sizes line up
    let mut ordered: Vec<(&Vec<usize>, &Vec<usize>)> = classes.iter().collect();
    ordered.sort_by_key(|(sup, _)| (sup.len(), (*sup).clone()));

    let mut p_images = vec![0usize; n];
    let mut q_inv = vec![0usize; n];
    let mut off = 0;
    for (sup, rows) in ordered {
        for (t, &row) in rows.iter().enumerate() {
            p_images[row] = off + t;
        }
        for (t, &col) in sup.iter().enumerate() {
            q_inv[col] = off + t;
        }
        off += sup.len();
    }
    let p = PermutationRep::from_images(p_images)?;
    let q = PermutationRep::from_images(q_inv)?.inverse();
    debug_assert_eq!(
        &crate::comp::conjugate_extremal(rvec, &p, &q).unwrap(),
        a,
        "witness must reconstruct the input"
    );
    Ok(Some(PjqWitness { p, q }))
}

/// Decides whether A = P^t * J_rvec * P * pi(sigma) for some permutation
/// matrix P: shift columns by sigma, then test whether the result is the
/// block matrix of an equivalence relation with class sizes rvec. Exact mode
/// only.
pub fn is_conjugate_form(
    a: &Matrix,
    rvec: &CompositionVector,
    sigma: &PermutationRep,
) -> Result<Option<ConjWitness>> {
    let d = a.as_exact()?;
    let n = d.rows();
    if n != rvec.n() || n != sigma.n() {
        return Err(Error::DimensionMismatch {
            left: n,
            right: if n != rvec.n() { rvec.n() } else { sigma.n() },
        });
    }
    // B = A * pi(sigma)^t, i.e. B[i][j] = A[i][sigma(j)]
    let b = a.matmul(&sigma.matrix().transpose())?;
    let bd = b.as_exact()?;

    let Some(classes) = row_classes(&b) else {
        return Ok(None);
    };
    // equivalence structure: i belongs to its own support, supports agree on
    // all members, symmetry follows
    for (sup, rows) in &classes {
        let members: &Vec<usize> = sup;
        let mut rows_sorted = rows.clone();
        rows_sorted.sort_unstable();
        if &rows_sorted != members {
            return Ok(None);
        }
    }
    if !sizes_match(&classes, rvec) {
        return Ok(None);
    }
    debug_assert_eq!(bd, &b.transpose().as_exact().unwrap().clone());

    let mut ordered: Vec<&Vec<usize>> = classes.keys().collect();
    ordered.sort_by_key(|sup| (sup.len(), (*sup).clone()));
    let mut pos = vec![0usize; n]; // element -> position inside J
    let mut off = 0;
    for sup in ordered {
        for (t, &el) in sup.iter().enumerate() {
            pos[el] = off + t;
        }
        off += sup.len();
    }
    // B = P^t J P requires pos = p^{-1}
    let p = PermutationRep::from_images(pos)?.inverse();
    debug_assert_eq!(
        &crate::comp::symmetric_extremal(rvec, &p, sigma).unwrap(),
        a,
        "witness must reconstruct the input"
    );
    Ok(Some(ConjWitness { p }))
}

/// The four-case equality decision of the nonnegative formulation, applied
/// literally: (1) zero line, (2) row product strictly smaller and the row
/// normalization extremal, (3) the column-side mirror, (4) equal positive
/// products and both normalizations extremal.
pub fn equality_case_nonnegative(
    a: &Matrix,
    k: usize,
    kind: BoundKind,
    sigma: Option<&PermutationRep>,
) -> Result<EqualityVerdict> {
    let _ = a.as_exact()?;
    a.check_nonnegative()?;
    if kind == BoundKind::Diagonal && sigma.is_none() {
        return Err(Error::MissingSigma);
    }
    let rvec = composition_for(a.n(), k)?;

    if a.has_zero_row() || a.has_zero_col() {
        return Ok(EqualityVerdict {
            holds: true,
            case: EqualityCase::ZeroLine,
            row_witness: None,
            col_witness: None,
        });
    }

    let rp: BigRational = a
        .row_sums()
        .iter()
        .map(|s| s.as_exact().unwrap().clone())
        .product();
    let cp: BigRational = a
        .col_sums()
        .iter()
        .map(|s| s.as_exact().unwrap().clone())
        .product();
    debug_assert!(rp.is_positive() && cp.is_positive());

    let check = |m: &Matrix| -> Result<Option<FormWitness>> {
        Ok(match kind {
            BoundKind::Permanent => is_pjq_form(m, &rvec)?.map(FormWitness::Pjq),
            BoundKind::Diagonal => {
                is_conjugate_form(m, &rvec, sigma.unwrap())?.map(FormWitness::Conjugate)
            }
        })
    };

    match rp.cmp(&cp) {
        std::cmp::Ordering::Less => {
            let w = check(&a.normalize_rows()?)?;
            Ok(match w {
                Some(w) => EqualityVerdict {
                    holds: true,
                    case: EqualityCase::RowForm,
                    row_witness: Some(w),
                    col_witness: None,
                },
                None => EqualityVerdict::no(),
            })
        }
        std::cmp::Ordering::Greater => {
            let w = check(&a.normalize_cols()?)?;
            Ok(match w {
                Some(w) => EqualityVerdict {
                    holds: true,
                    case: EqualityCase::ColForm,
                    row_witness: None,
                    col_witness: Some(w),
                },
                None => EqualityVerdict::no(),
            })
        }
        std::cmp::Ordering::Equal => {
            let rw = check(&a.normalize_rows()?)?;
            let cw = check(&a.normalize_cols()?)?;
            Ok(match (rw, cw) {
                (Some(rw), Some(cw)) => EqualityVerdict {
                    holds: true,
                    case: EqualityCase::BothForms,
                    row_witness: Some(rw),
                    col_witness: Some(cw),
                },
                _ => EqualityVerdict::no(),
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::comp::{composition_matrix, conjugate_extremal, symmetric_extremal};
    use crate::diagonal::max_diagonal_naive;
    use crate::permanent::{permanent_block, permanent_naive};
    use crate::scalar::brat;
    use rand::SeedableRng;

    #[test]
    fn permanent_bound_examples() {
        for n in 1..=12 {
            assert_eq!(
                bound_permanent_stochastic(n, n).unwrap().stochastic_bound,
                brat(1, 1)
            );
        }
        for n in 2..=12 {
            assert_eq!(
                bound_permanent_stochastic(n, n - 1)
                    .unwrap()
                    .stochastic_bound,
                brat(1, 2)
            );
        }
        assert_eq!(
            bound_permanent_stochastic(4, 2).unwrap().stochastic_bound,
            brat(1, 4)
        );
        // composition (2,2,3): (2!/4)^2 * (3!/27) = 1/18
        assert_eq!(
            bound_permanent_stochastic(7, 3).unwrap().stochastic_bound,
            brat(1, 18)
        );
        assert!(bound_permanent_stochastic(3, 5).is_err());
    }

    #[test]
    fn diagonal_bound_examples() {
        for n in 2..=12 {
            assert_eq!(
                bound_diagonal_stochastic(n, n - 1)
                    .unwrap()
                    .stochastic_bound,
                brat(1, 4)
            );
        }
        assert_eq!(
            bound_diagonal_stochastic(5, 5).unwrap().stochastic_bound,
            brat(1, 1)
        );
        assert_eq!(
            bound_diagonal_stochastic(3, 1).unwrap().stochastic_bound,
            brat(1, 27)
        );
    }

    #[test]
    fn bound_matches_block_permanent() {
        for n in 1..=12 {
            for k in 1..=n {
                let report = bound_permanent_stochastic(n, k).unwrap();
                assert_eq!(
                    report.stochastic_bound,
                    permanent_block(&composition_for(n, k).unwrap())
                );
                assert_eq!(report.r * k + report.s, n);
                assert!(report.s < k);
            }
        }
    }

    #[test]
    fn diagonal_bound_matches_block_maximum() {
        for n in 1..=8 {
            for k in 1..=n {
                let g = bound_diagonal_stochastic(n, k).unwrap().stochastic_bound;
                let m = composition_matrix(&composition_for(n, k).unwrap());
                let (v, _) = max_diagonal_naive(&m).unwrap();
                assert_eq!(v.as_exact().unwrap(), &g, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn permanent_equals_diagonal_bound_times_factorials() {
        for n in 1..=12 {
            for k in 1..=n {
                let f = bound_permanent_stochastic(n, k).unwrap().stochastic_bound;
                let g = bound_diagonal_stochastic(n, k).unwrap().stochastic_bound;
                let fact: BigRational = composition_for(n, k)
                    .unwrap()
                    .parts()
                    .iter()
                    .map(|&m| BigRational::from_integer(factorial(m)))
                    .product();
                assert_eq!(f, g * fact);
            }
        }
    }

    #[test]
    fn nonnegative_bound_examples() {
        // zero row forces bound 0
        let z = Matrix::from_int_rows(&[&[0, 0], &[1, 2]]).unwrap();
        let b = bound_nonnegative(&z, 1, BoundKind::Permanent).unwrap();
        assert!(b.total().is_zero());

        // 2 * J_(1,2): all sums 2, scale 8, f(3,2) = 1/2, total 4
        let j12 = composition_matrix(&CompositionVector::new(vec![1, 2]).unwrap());
        let a = j12.scale_exact(&brat(2, 1)).unwrap();
        let b = bound_nonnegative(&a, 2, BoundKind::Permanent).unwrap();
        assert_eq!(b.scale.as_exact().unwrap(), &brat(8, 1));
        assert_eq!(b.total().as_exact().unwrap(), &brat(4, 1));

        let id = Matrix::identity(3);
        let b = bound_nonnegative(&id, 3, BoundKind::Permanent).unwrap();
        assert_eq!(b.total().as_exact().unwrap(), &brat(1, 1));

        let neg = Matrix::from_int_rows(&[&[1, -1], &[0, 1]]).unwrap();
        assert!(bound_nonnegative(&neg, 1, BoundKind::Permanent).is_err());
    }

    #[test]
    fn pjq_form_accepts_and_witnesses() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(41);
        for n in 2..=7usize {
            for k in 1..=n {
                let rvec = composition_for(n, k).unwrap();
                let p = PermutationRep::random(n, &mut rng);
                let q = PermutationRep::random(n, &mut rng);
                let a = conjugate_extremal(&rvec, &p, &q).unwrap();
                let w = is_pjq_form(&a, &rvec).unwrap().expect("extremal matrix");
                assert_eq!(conjugate_extremal(&rvec, &w.p, &w.q).unwrap(), a);
            }
        }
    }

    #[test]
    fn pjq_form_rejects_wrong_entries() {
        let bad =
            Matrix::new_exact(2, vec![brat(1, 2), brat(1, 2), brat(3, 5), brat(2, 5)]).unwrap();
        let rvec = CompositionVector::new(vec![2]).unwrap();
        assert!(is_pjq_form(&bad, &rvec).unwrap().is_none());

        // identity is P * I * Q
        let rvec1 = CompositionVector::new(vec![1, 1, 1]).unwrap();
        assert!(is_pjq_form(&Matrix::identity(3), &rvec1).unwrap().is_some());

        // wrong composition for the structure
        let j12 = composition_matrix(&CompositionVector::new(vec![1, 2]).unwrap());
        assert!(is_pjq_form(&j12, &rvec1).unwrap().is_none());

        // float mode is refused
        assert!(matches!(
            is_pjq_form(&j12.to_float(), &rvec1),
            Err(Error::NotExactMode)
        ));
    }

    #[test]
    fn conjugate_form_examples() {
        let rvec = CompositionVector::new(vec![1, 2]).unwrap();
        let j12 = composition_matrix(&rvec);
        let id = PermutationRep::identity(3);
        assert!(is_conjugate_form(&j12, &rvec, &id).unwrap().is_some());

        // columns shifted by sigma, tested against the same sigma
        let sigma = PermutationRep::from_images(vec![2, 0, 1]).unwrap();
        let shifted = j12.matmul(&sigma.matrix()).unwrap();
        let w = is_conjugate_form(&shifted, &rvec, &sigma)
            .unwrap()
            .expect("right-shifted extremal");
        assert_eq!(symmetric_extremal(&rvec, &w.p, &sigma).unwrap(), shifted);

        // asymmetric B fails: P J Q with mismatched P, Q on n=4
        let rvec4 = CompositionVector::new(vec![2, 2]).unwrap();
        let p = PermutationRep::from_images(vec![1, 2, 3, 0]).unwrap();
        let q = PermutationRep::identity(4);
        let a = conjugate_extremal(&rvec4, &p, &q).unwrap();
        let b = a
            .matmul(&PermutationRep::identity(4).matrix().transpose())
            .unwrap();
        let bd = b.as_exact().unwrap();
        let asymmetric = (0..4).any(|i| (0..4).any(|j| bd[(i, j)] != bd[(j, i)]));
        assert!(asymmetric);
        assert!(is_conjugate_form(&a, &rvec4, &PermutationRep::identity(4))
            .unwrap()
            .is_none());
    }

    #[test]
    fn equality_case_zero_line() {
        let z = Matrix::from_int_rows(&[&[0, 0], &[1, 2]]).unwrap();
        let v = equality_case_nonnegative(&z, 1, BoundKind::Permanent, None).unwrap();
        assert!(v.holds);
        assert_eq!(v.case, EqualityCase::ZeroLine);
    }

    #[test]
    fn equality_case_row_form_scaled_blocks() {
        // D * J_(1,2) with distinct positive diagonal: prod r < prod c by AM-GM
        let j12 = composition_matrix(&CompositionVector::new(vec![1, 2]).unwrap());
        let d = Matrix::new_exact(
            3,
            vec![
                brat(2, 1),
                brat(0, 1),
                brat(0, 1),
                brat(0, 1),
                brat(3, 1),
                brat(0, 1),
                brat(0, 1),
                brat(0, 1),
                brat(5, 1),
            ],
        )
        .unwrap();
        let a = d.matmul(&j12).unwrap();
        let v = equality_case_nonnegative(&a, 2, BoundKind::Permanent, None).unwrap();
        assert!(v.holds);
        assert_eq!(v.case, EqualityCase::RowForm);

        // attainment: per(A) = min(prod r, prod c) * f(3,2)
        let per = permanent_naive(&a).unwrap();
        let bound = bound_nonnegative(&a, 2, BoundKind::Permanent).unwrap();
        assert_eq!(per, bound.total());

        // transpose flips to the column case
        let v = equality_case_nonnegative(&a.transpose(), 2, BoundKind::Permanent, None).unwrap();
        assert!(v.holds);
        assert_eq!(v.case, EqualityCase::ColForm);
    }

    #[test]
    fn equality_case_both_forms_doubly_stochastic() {
        let rvec = CompositionVector::new(vec![2, 2]).unwrap();
        let p = PermutationRep::from_images(vec![2, 0, 3, 1]).unwrap();
        let q = PermutationRep::from_images(vec![1, 3, 0, 2]).unwrap();
        let a = conjugate_extremal(&rvec, &p, &q).unwrap();
        let v = equality_case_nonnegative(&a, 2, BoundKind::Permanent, None).unwrap();
        assert!(v.holds);
        assert_eq!(v.case, EqualityCase::BothForms);
    }

    #[test]
    fn equality_case_none_for_low_rank_flat() {
        // J_3 with k=2: per = 2/9 < 1/2, so no equality case may hold
        let j3 = composition_matrix(&CompositionVector::new(vec![3]).unwrap());
        let v = equality_case_nonnegative(&j3, 2, BoundKind::Permanent, None).unwrap();
        assert!(!v.holds);
        assert_eq!(v.case, EqualityCase::None);
    }

    #[test]
    fn equality_case_diagonal_kind() {
        let rvec = CompositionVector::new(vec![1, 2]).unwrap();
        let sigma = PermutationRep::from_images(vec![1, 0, 2]).unwrap();
        let p = PermutationRep::from_images(vec![2, 1, 0]).unwrap();
        let a = symmetric_extremal(&rvec, &p, &sigma).unwrap();
        let v = equality_case_nonnegative(&a, 2, BoundKind::Diagonal, Some(&sigma)).unwrap();
        assert!(v.holds, "doubly stochastic extremal must satisfy case 4");
        assert_eq!(v.case, EqualityCase::BothForms);

        assert!(matches!(
            equality_case_nonnegative(&a, 2, BoundKind::Diagonal, None),
            Err(Error::MissingSigma)
        ));
    }

    #[test]
    fn equality_requires_exact_mode() {
        let j3 = composition_matrix(&CompositionVector::new(vec![3]).unwrap()).to_float();
        assert!(matches!(
            equality_case_nonnegative(&j3, 1, BoundKind::Permanent, None),
            Err(Error::NotExactMode)
        ));
    }
}
