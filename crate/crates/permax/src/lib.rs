//! Exact verification and counterexample search for the maxima of the
//! permanent and of diagonal products over rank-bounded stochastic and
//! nonnegative matrices.
//!
//! The crate has three layers:
//!
//! - core linear algebra in dual precision ([`matrix`], [`scalar`],
//!   [`perm`], [`comp`]): exact big-rational arithmetic is the source of
//!   truth, doubles only drive the search loop;
//! - the objective functions and their bounds ([`permanent`], [`diagonal`],
//!   [`bounds`]): Ryser's formula with a brute-force oracle, maximum
//!   diagonal products via assignment, the closed-form bounds f(n,k) and
//!   g(n,k), and the structural equality-case deciders;
//! - the violation hunt ([`search`]): seeded hill climbing over stochastic
//!   factor pairs, with exact re-certification of any candidate that beats a
//!   bound in float arithmetic.
//!
//! See the `examples/` directory for one runnable walkthrough per
//! capability, and the `permax` binary for a thin command-line front end.

pub mod bounds;
pub mod cli;
pub mod comp;
pub mod diagonal;
pub mod error;
pub mod io;
pub mod matrix;
pub mod perm;
pub mod permanent;
pub mod report;
pub mod scalar;
pub mod search;

pub use bounds::{
    bound_diagonal_stochastic, bound_nonnegative, bound_permanent_stochastic, bound_stochastic,
    equality_case_nonnegative, is_conjugate_form, is_pjq_form, BoundKind, BoundReport, ConjWitness,
    EqualityCase, EqualityVerdict, FormWitness, Formulation, PjqWitness,
};
pub use comp::{
    composition_for, composition_matrix, conjugate_extremal, symmetric_extremal, CompositionVector,
};
pub use diagonal::{diagonal_product, max_diagonal_naive, max_diagonal_product};
pub use error::{Error, Result};
pub use matrix::{Dense, Matrix, TOL_RANK, TOL_STOCH};
pub use perm::PermutationRep;
pub use permanent::{permanent_block, permanent_naive, permanent_ryser};
pub use scalar::{best_rational, brat, format_rational, Mode, Scalar, DEFAULT_MAX_DENOM};
pub use search::{
    certify_candidate, local_search, resolve_candidate, sweep, Certificate, FactorPair, Objective,
    RestartTrace, SearchConfig, SearchOutcome, SweepTemplate, Verdict, MATCH_TOL, SCOPE_NOTE,
};
