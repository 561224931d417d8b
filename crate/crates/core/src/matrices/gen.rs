//! Deterministic random generators for test matrices and graphs.
//!
//! Every generator takes a [`Seed`] and is a pure function of it (ChaCha8
//! keyed by the seed), so any matrix found by a randomized campaign can be
//! regenerated exactly from `(kind, n, seed)`.

use num_traits::Signed;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::rational::{rat, GaussianRational};
use crate::error::{Error, Result};
use crate::matrices::graph::SupportGraph;
use crate::matrices::matrix::SquareMatrix;

/// RNG seed newtype so call sites cannot confuse seeds with sizes or counts.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Seed(pub u64);

impl From<u64> for Seed {
    fn from(v: u64) -> Self {
        Seed(v)
    }
}

impl Seed {
    /// Derived stream for trial `k`, distinct from bumping the seed itself.
    pub fn stream(self, k: u64) -> Seed {
        Seed(self.0.wrapping_add(k.wrapping_mul(0x9E37_79B9_7F4A_7C15)))
    }
}

fn rng(seed: Seed) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed.0)
}

/// Shape of a generated tree support.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TreeShape {
    /// Uniform over labeled trees via a random Pruefer sequence.
    Random,
    /// All edges incident to vertex 0.
    Star,
    /// Edges between consecutive vertices (tridiagonal support).
    Path,
}

/// Matrix with integer entries drawn uniformly from `[lo, hi]`.
pub fn gen_int_matrix(n: usize, seed: Seed, lo: i64, hi: i64) -> SquareMatrix {
    let mut r = rng(seed);
    let data = (0..n * n)
        .map(|_| GaussianRational::from_int(r.gen_range(lo..=hi)))
        .collect();
    SquareMatrix::new(n, data).unwrap()
}

/// Matrix with small random rational entries `p/q`, `p in [-9, 9]`,
/// `q in [1, 9]`.
pub fn gen_rational_matrix(n: usize, seed: Seed) -> SquareMatrix {
    let mut r = rng(seed);
    let data = (0..n * n)
        .map(|_| {
            GaussianRational::from_rational(rat(r.gen_range(-9..=9), r.gen_range(1..=9)))
        })
        .collect();
    SquareMatrix::new(n, data).unwrap()
}

/// Matrix with small Gaussian-integer entries, real and imaginary parts in
/// `[lo, hi]`.
pub fn gen_gaussian_int_matrix(n: usize, seed: Seed, lo: i64, hi: i64) -> SquareMatrix {
    let mut r = rng(seed);
    let data = (0..n * n)
        .map(|_| {
            GaussianRational::from_parts(r.gen_range(lo..=hi), 1, r.gen_range(lo..=hi), 1)
        })
        .collect();
    SquareMatrix::new(n, data).unwrap()
}

fn try_nondiagonal(
    n: usize,
    seed: Seed,
    make: impl Fn(Seed) -> SquareMatrix,
) -> SquareMatrix {
    if n < 2 {
        return make(seed);
    }
    for attempt in 0..64 {
        let m = make(seed.stream(attempt));
        if !m.is_diagonal() {
            return m;
        }
    }
    // with entry ranges this wide a diagonal product 64 times in a row is
    // practically impossible; fall back to the raw draw
    make(seed)
}

/// Random symmetric positive definite matrix with integer entries:
/// `B B^T + n I` for `B` with entries in `[-3, 3]`.
pub fn gen_pd(n: usize, seed: Seed) -> SquareMatrix {
    try_nondiagonal(n, seed, |s| {
        let b = gen_int_matrix(n, s, -3, 3);
        let shift = SquareMatrix::from_rows(
            (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| {
                            if i == j {
                                GaussianRational::from_int(n as i64)
                            } else {
                                GaussianRational::zero()
                            }
                        })
                        .collect()
                })
                .collect(),
        )
        .unwrap();
        b.matmul(&b.transpose()).add(&shift)
    })
}

/// Random Hermitian positive definite matrix with Gaussian-integer structure:
/// `C C* + n I` for `C` with real/imaginary parts in `[-3, 3]`.
pub fn gen_hermitian_pd(n: usize, seed: Seed) -> SquareMatrix {
    try_nondiagonal(n, seed, |s| {
        let c = gen_gaussian_int_matrix(n, s, -3, 3);
        let mut m = c.matmul(&c.conj_transpose());
        for i in 0..n {
            let bumped = m.entry(i, i) + &GaussianRational::from_int(n as i64);
            m.set_entry(i, i, bumped);
        }
        m
    })
}

/// Random labeled tree on `n` vertices with the requested shape.
pub fn gen_tree(n: usize, seed: Seed, shape: TreeShape) -> Result<SupportGraph> {
    if n == 0 {
        return SupportGraph::new(0, []);
    }
    match shape {
        TreeShape::Star => SupportGraph::new(n, (1..n).map(|k| (0, k))),
        TreeShape::Path => SupportGraph::new(n, (1..n).map(|k| (k - 1, k))),
        TreeShape::Random => {
            if n <= 2 {
                return SupportGraph::new(n, (1..n).map(|k| (k - 1, k)));
            }
            let mut r = rng(seed);
            let pruefer: Vec<usize> = (0..n - 2).map(|_| r.gen_range(0..n)).collect();
            SupportGraph::new(n, pruefer_decode(n, &pruefer))
        }
    }
}

/// Standard Pruefer decoding: the sequence plus degree bookkeeping yields the
/// unique labeled tree with that code.
fn pruefer_decode(n: usize, code: &[usize]) -> Vec<(usize, usize)> {
    debug_assert_eq!(code.len(), n - 2);
    let mut degree = vec![1usize; n];
    for &v in code {
        degree[v] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    let mut used = vec![false; n];
    for &v in code {
        let leaf = (0..n).find(|&u| degree[u] == 1 && !used[u]).unwrap();
        edges.push((leaf, v));
        used[leaf] = true;
        degree[leaf] -= 1;
        degree[v] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&u| degree[u] == 1 && !used[u]).collect();
    debug_assert_eq!(rest.len(), 2);
    edges.push((rest[0], rest[1]));
    edges
}

/// Random symmetric positive definite matrix supported on a tree: nonzero
/// integer off-diagonal entries on tree edges, diagonal dominated by the row
/// sums (`a_ii = 1 + sum_j |a_ij|`), which forces positive definiteness.
pub fn gen_tree_pd(n: usize, seed: Seed, shape: TreeShape) -> Result<SquareMatrix> {
    let tree = gen_tree(n, seed, shape)?;
    let mut r = rng(seed.stream(1));
    let mut m = SquareMatrix::zero(n);
    for (a, b) in tree.edges() {
        let mut v = 0i64;
        while v == 0 {
            v = r.gen_range(-3..=3);
        }
        m.set_entry(a, b, GaussianRational::from_int(v));
        m.set_entry(b, a, GaussianRational::from_int(v));
    }
    for i in 0..n {
        let row_abs: i64 = (0..n)
            .filter(|&j| j != i)
            .map(|j| {
                // entries are small integers by construction
                let e = m.entry(i, j);
                i64::try_from(e.re.abs().to_integer()).expect("small integer entry")
            })
            .sum();
        m.set_entry(i, i, GaussianRational::from_int(1 + row_abs));
    }
    Ok(m)
}

/// Permutations drawn uniformly via Fisher-Yates.
pub fn gen_permutation(n: usize, seed: Seed) -> crate::matrices::permutation::Permutation {
    let mut r = rng(seed);
    let mut images: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        let j = r.gen_range(0..=i);
        images.swap(i, j);
    }
    crate::matrices::permutation::Permutation::new(images).unwrap()
}

/// Named generator families exposed to campaigns and the CLI.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GeneratorKind {
    /// Symmetric positive definite with integer entries.
    Pd,
    /// Hermitian positive definite with Gaussian-integer structure.
    HermitianPd,
    /// Symmetric positive definite supported on a random tree.
    TreePd,
    /// Symmetric positive definite supported on a star.
    StarPd,
    /// Symmetric positive definite supported on a path.
    PathPd,
    /// Unstructured small-integer entries (no definiteness guarantee).
    Int,
    /// Unstructured small-rational entries.
    Rational,
}

impl GeneratorKind {
    pub fn parse(s: &str) -> Result<Self> {
        Ok(match s {
            "pd" => GeneratorKind::Pd,
            "hermitian-pd" => GeneratorKind::HermitianPd,
            "tree-pd" => GeneratorKind::TreePd,
            "star-pd" => GeneratorKind::StarPd,
            "path-pd" => GeneratorKind::PathPd,
            "int" => GeneratorKind::Int,
            "rational" => GeneratorKind::Rational,
            other => return Err(Error::UnknownGenerator(other.to_string())),
        })
    }

    pub fn name(self) -> &'static str {
        match self {
            GeneratorKind::Pd => "pd",
            GeneratorKind::HermitianPd => "hermitian-pd",
            GeneratorKind::TreePd => "tree-pd",
            GeneratorKind::StarPd => "star-pd",
            GeneratorKind::PathPd => "path-pd",
            GeneratorKind::Int => "int",
            GeneratorKind::Rational => "rational",
        }
    }

    pub fn generate(self, n: usize, seed: Seed) -> Result<SquareMatrix> {
        Ok(match self {
            GeneratorKind::Pd => gen_pd(n, seed),
            GeneratorKind::HermitianPd => gen_hermitian_pd(n, seed),
            GeneratorKind::TreePd => gen_tree_pd(n, seed, TreeShape::Random)?,
            GeneratorKind::StarPd => gen_tree_pd(n, seed, TreeShape::Star)?,
            GeneratorKind::PathPd => gen_tree_pd(n, seed, TreeShape::Path)?,
            GeneratorKind::Int => gen_int_matrix(n, seed, -9, 9),
            GeneratorKind::Rational => gen_rational_matrix(n, seed),
        })
    }
}
