//! Shared fixtures for the benchmark targets.

use muperm_core::matrices::gen::{gen_pd, gen_rational_matrix, gen_tree_pd, Seed, TreeShape};
use muperm_core::{relabel_tree, validate_labeling, SquareMatrix, SupportGraph};

/// Dense rational matrix with entries drawn from the default generator.
pub fn dense(n: usize) -> SquareMatrix {
    gen_rational_matrix(n, Seed(1))
}

/// Symmetric positive definite matrix.
pub fn definite(n: usize) -> SquareMatrix {
    gen_pd(n, Seed(2))
}

/// Tridiagonal positive definite matrix.
pub fn banded(n: usize) -> SquareMatrix {
    gen_tree_pd(n, Seed(3), TreeShape::Path).unwrap()
}

/// Star-supported positive definite matrix.
pub fn star(n: usize) -> SquareMatrix {
    gen_tree_pd(n, Seed(4), TreeShape::Star).unwrap()
}

/// Random tree-supported positive definite matrix, relabeled so the additive
/// matching formula applies.
pub fn tree(n: usize) -> SquareMatrix {
    let a = gen_tree_pd(n, Seed(5), TreeShape::Random).unwrap();
    let g = SupportGraph::from_matrix(&a);
    if validate_labeling(&g).is_valid() {
        a
    } else {
        a.relabel(&relabel_tree(&g).unwrap())
    }
}
