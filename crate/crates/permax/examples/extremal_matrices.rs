//! Build the conjectured maximizers and verify exact attainment:
//! per(P J Q) = f(n,k) and the sigma-diagonal of P^t J P pi(sigma) = g(n,k).
//!
//! Run with: cargo run --example extremal_matrices

use permax::{
    bound_diagonal_stochastic, bound_permanent_stochastic, composition_for, composition_matrix,
    conjugate_extremal, diagonal_product, format_rational, io, permanent_ryser, symmetric_extremal,
    PermutationRep,
};
use rand::SeedableRng;

fn main() {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(2024);

    let (n, k) = (6, 3);
    let rvec = composition_for(n, k).unwrap();
    println!("n={n}, k={k}: balanced composition {rvec}\n");

    let j = composition_matrix(&rvec);
    println!("composition matrix J (rank {}):", j.rank());
    print!("{}", io::format_matrix(&j));

    let p = PermutationRep::random(n, &mut rng);
    let q = PermutationRep::random(n, &mut rng);
    let a = conjugate_extremal(&rvec, &p, &q).unwrap();
    println!("\nP J Q with P = {p}, Q = {q}:");
    print!("{}", io::format_matrix(&a));

    let per = permanent_ryser(&a).unwrap();
    let f = bound_permanent_stochastic(n, k).unwrap().stochastic_bound;
    println!(
        "\nper(P J Q) = {}   f({n},{k}) = {}   attained exactly: {}",
        per,
        format_rational(&f),
        per.as_exact().unwrap() == &f
    );

    let sigma = PermutationRep::random(n, &mut rng);
    let b = symmetric_extremal(&rvec, &p, &sigma).unwrap();
    let d = diagonal_product(&b, &sigma).unwrap();
    let g = bound_diagonal_stochastic(n, k).unwrap().stochastic_bound;
    println!(
        "sigma-diagonal of P^t J P pi(sigma) with sigma = {sigma}: {}   g({n},{k}) = {}   attained exactly: {}",
        d,
        format_rational(&g),
        d.as_exact().unwrap() == &g
    );

    // rank stays k under any permutation conjugation
    println!("\nrank(P J Q) = {} (k = {k})", a.rank());
}
