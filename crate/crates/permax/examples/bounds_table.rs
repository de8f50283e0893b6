//! Print the conjectured maxima f(n,k) (permanent) and g(n,k) (diagonal
//! product) for stochastic matrices of rank at most k, n up to 10.
//!
//! Run with: cargo run --example bounds_table

use permax::{bound_diagonal_stochastic, bound_permanent_stochastic, format_rational};

fn main() {
    println!("f(n,k): conjectured max permanent over rank-<=k stochastic matrices");
    println!("g(n,k): conjectured max diagonal product over the same set\n");

    for n in 1..=10usize {
        for k in 1..=n {
            let f = bound_permanent_stochastic(n, k).unwrap();
            let g = bound_diagonal_stochastic(n, k).unwrap();
            println!(
                "n={n:2} k={k:2}  composition {:<14} f = {:>12} ~ {:<12.6e}  g = {:>14} ~ {:.6e}",
                f.composition.to_string(),
                format_rational(&f.stochastic_bound),
                permax::scalar::rat_to_f64(&f.stochastic_bound),
                format_rational(&g.stochastic_bound),
                permax::scalar::rat_to_f64(&g.stochastic_bound),
            );
        }
        println!();
    }

    // the two singular-matrix specializations: k = n-1 gives 1/2 and 1/4
    for n in [3usize, 6, 9, 12] {
        let f = bound_permanent_stochastic(n, n - 1).unwrap();
        let g = bound_diagonal_stochastic(n, n - 1).unwrap();
        println!(
            "singular case n={n:2}: f = {}  g = {}",
            format_rational(&f.stochastic_bound),
            format_rational(&g.stochastic_bound)
        );
    }
}
