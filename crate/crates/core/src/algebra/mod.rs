//! Exact scalar and polynomial arithmetic: Gaussian rationals, univariate
//! polynomials in `mu`, multivariate polynomials in `q1..q_{n-1}`, and real
//! root counting via Sturm chains.

pub mod multi_poly;
pub mod poly;
pub mod rational;
pub mod roots;

pub use multi_poly::MultiQPoly;
pub use poly::MuPoly;
pub use rational::{parse_rational, rat, rat_int, rational_to_string, GaussianRational, Rational};
pub use roots::{
    count_real_roots, find_negative_point, is_nonnegative_on, is_strictly_positive_on,
    largest_sign_change_root, sign_change_roots_versus, Bound, RootInterval, SturmChain,
};
