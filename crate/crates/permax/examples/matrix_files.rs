//! The matrix text format: first line n, then n rows of entries. Rational
//! entries ("p/q") force exact mode, decimal entries force float mode, plain
//! integers fit either; mixing rationals and decimals is an error.
//!
//! Run with: cargo run --example matrix_files

use permax::{io, max_diagonal_product, permanent_ryser, Mode};

fn main() {
    let exact_text = "3\n1 0 0\n0 1/2 1/2\n0 1/2 1/2\n";
    let a = io::parse_matrix(exact_text).unwrap();
    println!("exact file:\n{exact_text}");
    println!(
        "mode: {:?}, per = {}",
        a.mode(),
        permanent_ryser(&a).unwrap()
    );
    let (v, sigma) = max_diagonal_product(&a).unwrap();
    println!("max diagonal product = {v} at sigma = {sigma}\n");

    let float_text = "2\n0.25 0.75\n0.6 0.4\n";
    let b = io::parse_matrix(float_text).unwrap();
    assert_eq!(b.mode(), Mode::Float);
    println!("float file:\n{float_text}");
    println!("per = {}\n", permanent_ryser(&b).unwrap());

    // write-then-read reproduces entries exactly in both modes
    let round = io::parse_matrix(&io::format_matrix(&b)).unwrap();
    assert_eq!(round, b);
    println!(
        "float round trip is bit-exact; written form:\n{}",
        io::format_matrix(&b)
    );

    // rationalization brings float matrices into exact mode for the
    // equality and certification machinery
    let r = b.rationalize(1_000_000);
    println!("rationalized:\n{}", io::format_matrix(&r));

    // mixed files are rejected with a line number
    let mixed = "2\n1/2 0.5\n0 1\n";
    let err = io::parse_matrix(mixed).unwrap_err();
    println!("mixed file rejected: {err}");
}
