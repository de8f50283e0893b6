//! Permanent computation in both scalar modes: Ryser against the brute-force
//! oracle, and the scaling identity tying the stochastic and nonnegative
//! formulations together.
//!
//! Run with: cargo run --example permanents

use num::rational::BigRational;
use permax::{brat, io, permanent_naive, permanent_ryser, Matrix};

fn main() {
    // a small integer matrix: per = 1*4 + 2*3 = 10
    let a = Matrix::from_int_rows(&[&[1, 2], &[3, 4]]).unwrap();
    println!("A =\n{}", io::format_matrix(&a));
    println!("per(A) via Ryser: {}", permanent_ryser(&a).unwrap());
    println!("per(A) via brute force: {}\n", permanent_naive(&a).unwrap());

    // exact rational input
    let text = "3\n1/2 1/4 1/4\n1/3 1/3 1/3\n0 1/2 1/2\n";
    let b = io::parse_matrix(text).unwrap();
    let per = permanent_ryser(&b).unwrap();
    println!("B =\n{text}");
    println!("per(B) exact: {per}");
    println!(
        "per(B) float: {}\n",
        permanent_ryser(&b.to_float()).unwrap()
    );

    // scaling identity: per(A) = (prod of row sums) * per(row-normalized A)
    let c = Matrix::from_int_rows(&[&[2, 1, 1], &[1, 3, 2], &[5, 1, 4]]).unwrap();
    let per_c = permanent_ryser(&c).unwrap().as_exact().unwrap().clone();
    let row_prod: BigRational = c
        .row_sums()
        .iter()
        .map(|s| s.as_exact().unwrap().clone())
        .product();
    let per_norm = permanent_ryser(&c.normalize_rows().unwrap())
        .unwrap()
        .as_exact()
        .unwrap()
        .clone();
    println!("C row sums product: {row_prod}");
    println!("per(C) = {per_c}");
    println!("(prod r_i) * per(normalized C) = {}", &row_prod * &per_norm);
    assert_eq!(per_c, row_prod * per_norm);
    println!("scaling identity holds exactly");

    // the identity behind the k = n case: permutation matrices reach 1
    let id = Matrix::identity(8);
    assert_eq!(
        permanent_ryser(&id).unwrap().as_exact().unwrap(),
        &brat(1, 1)
    );
    println!("per(I_8) = 1");
}
