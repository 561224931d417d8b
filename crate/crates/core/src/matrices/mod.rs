//! Matrices, permutations, support graphs, and seeded generators.

pub mod gen;
pub mod graph;
pub mod matrix;
pub mod permutation;

pub use gen::{
    gen_gaussian_int_matrix, gen_hermitian_pd, gen_int_matrix, gen_pd, gen_permutation,
    gen_rational_matrix, gen_tree, gen_tree_pd, GeneratorKind, Seed, TreeShape,
};
pub use graph::SupportGraph;
pub use matrix::SquareMatrix;
pub use permutation::{all_permutations, LexPermutations, Permutation, LEX_RANK_CAP};
