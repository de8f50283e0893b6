//! Walk through the four equality cases of the nonnegative-formulation
//! bound: zero line, row form, column form, both forms.
//!
//! Run with: cargo run --example equality_cases

use permax::{
    bound_nonnegative, composition_for, conjugate_extremal, equality_case_nonnegative, io,
    permanent_ryser, BoundKind, EqualityCase, Matrix, PermutationRep,
};
use rand::SeedableRng;

fn classify(label: &str, a: &Matrix, k: usize) {
    let v = equality_case_nonnegative(a, k, BoundKind::Permanent, None).unwrap();
    let per = permanent_ryser(a).unwrap();
    let total = bound_nonnegative(a, k, BoundKind::Permanent)
        .unwrap()
        .total();
    println!("{label}:");
    print!("{}", io::format_matrix(a));
    println!(
        "  case: {:?} ({})   per = {per}   bound = {total}   attained: {}\n",
        v.case,
        v.case.as_str(),
        per == total
    );
}

fn main() {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
    let (n, k) = (4, 2);
    let rvec = composition_for(n, k).unwrap();
    let p = PermutationRep::random(n, &mut rng);
    let q = PermutationRep::random(n, &mut rng);
    let extremal = conjugate_extremal(&rvec, &p, &q).unwrap();

    // case 1: a zero row forces the bound to 0
    let zero_row =
        Matrix::from_int_rows(&[&[0, 0, 0, 0], &[1, 2, 0, 1], &[0, 1, 1, 1], &[2, 0, 0, 3]])
            .unwrap();
    classify("case 1, zero line", &zero_row, k);

    // case 2: scale the rows of an extremal matrix by distinct factors;
    // the row-sum product drops below the column-sum product
    let d = Matrix::from_int_rows(&[&[2, 0, 0, 0], &[0, 3, 0, 0], &[0, 0, 5, 0], &[0, 0, 0, 7]])
        .unwrap();
    let row_scaled = d.matmul(&extremal).unwrap();
    classify("case 2, row form", &row_scaled, k);

    // case 3: the transpose flips it to the column side
    classify("case 3, col form", &row_scaled.transpose(), k);

    // case 4: the doubly stochastic extremal attains with both normalizations
    classify("case 4, both forms", &extremal, k);

    // and a matrix attaining no case at all
    let j4 = permax::composition_matrix(&composition_for(4, 1).unwrap());
    let v = equality_case_nonnegative(&j4, 2, BoundKind::Permanent, None).unwrap();
    assert_eq!(v.case, EqualityCase::None);
    println!(
        "flat J_4 against k=2: case {:?} (per 4!/256 = 3/32 < 1/4)",
        v.case
    );
}
