//! Exact re-certification of float candidates: rationalize entries by
//! continued fractions, repair the rank through the stochastic factors when
//! rounding bumped it, and compare objective and bound in exact arithmetic.
//!
//! Run with: cargo run --example certify_float_candidate

use permax::{
    bound_stochastic, certify_candidate, composition_for, composition_matrix, io, local_search,
    BoundKind, FactorPair, Objective, SearchConfig, Verdict,
};
use rand::SeedableRng;

fn main() {
    // an extremal matrix stored as floats certifies to an exact MATCHES
    let j = composition_matrix(&composition_for(4, 2).unwrap()).to_float();
    let bound = bound_stochastic(4, 2, BoundKind::Permanent).unwrap();
    let o = certify_candidate(&j, 2, Objective::Permanent, &bound, None, 1_000_000).unwrap();
    let c = o.certificate.as_ref().unwrap();
    println!("extremal J_(2,2) as floats:");
    println!(
        "  verdict {}   exact value {} vs exact bound {} (rank {})",
        o.verdict.as_str(),
        c.value,
        c.bound_total,
        c.exact_rank
    );
    assert_eq!(o.verdict, Verdict::Matches);

    // a generic search product rationalizes to full rank; the factor pair
    // repairs it
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(99);
    let fp = FactorPair::random(5, 2, &mut rng).unwrap();
    let a = fp.product();
    println!("\ngeneric rank-2 factor product (float):");
    print!("{}", io::format_matrix(&a));
    println!(
        "  direct rationalization rank: {}",
        a.rationalize(1_000_000).rank()
    );

    let bound = bound_stochastic(5, 2, BoundKind::Permanent).unwrap();
    let o = certify_candidate(&a, 2, Objective::Permanent, &bound, Some(&fp), 1_000_000).unwrap();
    let c = o.certificate.as_ref().unwrap();
    println!(
        "  after factor repair: verdict {}  exact rank {}  exact value {}",
        o.verdict.as_str(),
        c.exact_rank,
        c.value
    );
    println!("  note: {}", c.note);

    // end-to-end: search a cell, then certify its best point
    let config = SearchConfig::new(4, 2, Objective::MaxDiag, 31);
    let found = local_search(&config).unwrap();
    let bound = bound_stochastic(4, 2, BoundKind::Diagonal).unwrap();
    let certified = certify_candidate(
        &found.best,
        2,
        Objective::MaxDiag,
        &bound,
        found.factors.as_ref(),
        1_000_000,
    )
    .unwrap();
    println!(
        "\nsearch best for (n=4, k=2, maxdiag): float {} -> certified {} with exact value {}",
        found.value,
        certified.verdict.as_str(),
        certified.certificate.as_ref().unwrap().value
    );
}
