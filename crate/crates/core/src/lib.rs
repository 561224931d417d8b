//! Exact arithmetic for the mu-permanent of a square matrix: the polynomial
//! obtained by weighting each permutation-product term by `mu` raised to the
//! permutation's inversion count. Specializing `mu` recovers the determinant
//! (`mu = -1`), the diagonal product (`mu = 0`), and the permanent (`mu = 1`).
//!
//! The crate provides:
//! - exact Gaussian-rational scalars and polynomial types ([`algebra`]),
//! - permutations, matrices, support graphs, and seeded generators
//!   ([`matrices`]),
//! - expansion-based evaluation: naive sum, Laplace recursion, and the
//!   multivariable `q`-determinant ([`expansion`]),
//! - fast evaluators for structured supports: stars, tridiagonals, and
//!   validly labeled trees ([`structured`]),
//! - permutation-indexed Schur power matrices and spectral helpers
//!   ([`schur`]),
//! - certified checkers for spectral/monotonicity claims plus randomized
//!   search campaigns ([`conjectures`]),
//! - JSON (de)serialization for every value the CLI exchanges ([`io`]).

pub mod algebra;
pub mod conjectures;
pub mod error;
pub mod expansion;
pub mod io;
pub mod matrices;
pub mod schur;
pub mod structured;

pub use algebra::{Bound, GaussianRational, MultiQPoly, MuPoly, Rational, SturmChain};
pub use error::{Error, Result};
pub use expansion::{
    mu_permanent_laplace, mu_permanent_naive, multivariable_qdet, Axis, DEFAULT_NAIVE_CAP,
};
pub use matrices::{Permutation, Seed, SquareMatrix, SupportGraph};
pub use schur::{
    averaging_identity, check_gamma_psd, gamma_mu, pi_mu, schur_power, FloatSymMatrix,
    PermIndexedMatrix,
};
pub use structured::{
    mu_permanent_auto, mu_permanent_star, mu_permanent_tree, mu_permanent_tridiagonal,
    relabel_tree, specialize, validate_labeling, LabelingReport,
};
pub use conjectures::{
    campaign_trial_matrix, check_epsilon, check_fischer, check_lieb, check_monotone, check_soules,
    epsilon_threshold, replay_witness, restricted_sum, run_campaign, uniform_grid, CampaignConfig,
    Claim, EpsilonThreshold, Status, Verdict, Witness,
};
pub use io::{
    matrix_from_json, matrix_to_json, poly_to_json, qdet_to_json, read_graph_file, read_json_file,
    read_matrix_file, verdict_from_json, verdict_to_json, write_json_file,
};
