//! Permutation expansions of the mu-permanent.
//!
//! The mu-permanent of an `n x n` matrix is
//!
//! ```text
//! P(A) = sum over permutations sigma of (prod_i a_{i, sigma(i)}) * mu^inv(sigma)
//! ```
//!
//! where `inv(sigma)` is the inversion count. It is a polynomial in `mu` of
//! degree at most `n(n-1)/2`; at `mu = -1` it is the determinant, at `mu = 0`
//! the diagonal product, and at `mu = 1` the permanent.
//!
//! Three expansions live here: the direct sum over permutations (`naive`), a
//! Laplace-style recursion whose minors absorb `mu` into off-corner blocks,
//! and the multivariable refinement that tracks each position's inversion
//! contribution with its own variable `q_i`.

use crate::algebra::poly::MuPoly;
use crate::algebra::rational::GaussianRational;
use crate::algebra::multi_poly::MultiQPoly;
use crate::error::{Error, Result};
use crate::matrices::matrix::SquareMatrix;
use crate::matrices::permutation::{LexPermutations, Permutation};

/// Default size cap for expansions that sum over all `n!` permutations.
pub const DEFAULT_NAIVE_CAP: usize = 9;

/// Expansion axis for the Laplace form.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Axis {
    Row,
    Column,
}

/// Largest possible `mu`-degree for an `n x n` matrix: the inversion count of
/// the order-reversing permutation.
pub fn max_mu_degree(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

fn check_cap(op: &'static str, n: usize, cap: usize) -> Result<()> {
    if n > cap {
        return Err(Error::CapExceeded { op, n, cap });
    }
    Ok(())
}

/// Direct permutation expansion with the default size cap.
pub fn mu_permanent_naive(a: &SquareMatrix) -> Result<MuPoly> {
    mu_permanent_naive_capped(a, DEFAULT_NAIVE_CAP)
}

/// Direct permutation expansion; refuses `n > cap` since work grows as `n!`.
/// Inversion counts are maintained incrementally along the lexicographic walk,
/// and coefficients are accumulated per degree.
pub fn mu_permanent_naive_capped(a: &SquareMatrix, cap: usize) -> Result<MuPoly> {
    check_cap("mu_permanent_naive", a.n(), cap)?;
    let n = a.n();
    let mut coeffs = vec![GaussianRational::zero(); max_mu_degree(n) + 1];
    for (sigma, inv) in LexPermutations::new(n) {
        let mut prod = GaussianRational::one();
        let mut vanished = false;
        for i in 0..n {
            let e = a.entry(i, sigma.apply(i));
            if e.is_zero() {
                vanished = true;
                break;
            }
            prod *= e;
        }
        if !vanished {
            coeffs[inv] += &prod;
        }
    }
    Ok(MuPoly::from_coeffs(coeffs))
}

/// Evaluate the mu-permanent at a specific `mu` without building the
/// polynomial.
pub fn mu_permanent_eval(
    a: &SquareMatrix,
    mu: &GaussianRational,
    cap: usize,
) -> Result<GaussianRational> {
    check_cap("mu_permanent_eval", a.n(), cap)?;
    let n = a.n();
    // mu powers up to the degree bound, computed once
    let mut powers = Vec::with_capacity(max_mu_degree(n) + 1);
    let mut acc_pow = GaussianRational::one();
    for _ in 0..=max_mu_degree(n) {
        powers.push(acc_pow.clone());
        acc_pow *= mu;
    }
    let mut total = GaussianRational::zero();
    for (sigma, inv) in LexPermutations::new(n) {
        let mut prod = GaussianRational::one();
        let mut vanished = false;
        for i in 0..n {
            let e = a.entry(i, sigma.apply(i));
            if e.is_zero() {
                vanished = true;
                break;
            }
            prod *= e;
        }
        if !vanished {
            total += &(&prod * &powers[inv]);
        }
    }
    Ok(total)
}

// ---------------------------------------------------------------------------
// Laplace expansion with mu-scaled complementary minors
// ---------------------------------------------------------------------------

/// Square matrix whose entries are polynomials in `mu`; the value the Laplace
/// recursion works over.
#[derive(Clone, PartialEq, Debug)]
pub struct PolyMatrix {
    n: usize,
    data: Vec<MuPoly>,
}

impl PolyMatrix {
    pub fn new(n: usize, data: Vec<MuPoly>) -> Result<Self> {
        if data.len() != n * n {
            return Err(Error::DimensionMismatch(format!(
                "expected {} entries for a {n}x{n} polynomial matrix, got {}",
                n * n,
                data.len()
            )));
        }
        Ok(PolyMatrix { n, data })
    }

    pub fn from_matrix(a: &SquareMatrix) -> PolyMatrix {
        PolyMatrix {
            n: a.n(),
            data: (0..a.n() * a.n())
                .map(|k| MuPoly::constant(a.entry(k / a.n(), k % a.n()).clone()))
                .collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entry(&self, i: usize, j: usize) -> &MuPoly {
        &self.data[i * self.n + j]
    }
}

/// Delete row `i` and column `j`, multiplying by `mu` every entry whose
/// position sits in the top-right block (row above `i`, column right of `j`)
/// or the bottom-left block (row below `i`, column left of `j`). This scaling
/// absorbs the inversions lost by removing position `(i, j)`, which is why the
/// Laplace sum below needs no prefactor.
pub fn q_complementary(a: &SquareMatrix, i: usize, j: usize) -> Result<PolyMatrix> {
    if i >= a.n() || j >= a.n() {
        return Err(Error::IndexOutOfRange { i, j, n: a.n() });
    }
    Ok(q_complementary_poly(&PolyMatrix::from_matrix(a), i, j))
}

/// [`q_complementary`] for matrices that already have polynomial entries
/// (the form the Laplace recursion consumes).
pub fn q_complementary_poly(a: &PolyMatrix, i: usize, j: usize) -> PolyMatrix {
    let n = a.n();
    assert!(i < n && j < n, "pivot out of range");
    let mut data = Vec::with_capacity((n - 1) * (n - 1));
    for r in 0..n {
        if r == i {
            continue;
        }
        for c in 0..n {
            if c == j {
                continue;
            }
            let e = a.entry(r, c);
            let crossed = (r < i && c > j) || (r > i && c < j);
            data.push(if crossed { e.shift(1) } else { e.clone() });
        }
    }
    PolyMatrix { n: n - 1, data }
}

/// Full Laplace recursion along successive first rows. Zero entries prune
/// whole branches, so sparse supports expand far faster than the `n!` sum.
pub fn mu_permanent_poly(a: &PolyMatrix) -> MuPoly {
    if a.n() == 0 {
        return MuPoly::one();
    }
    let mut acc = MuPoly::zero();
    for j in 0..a.n() {
        let e = a.entry(0, j);
        if e.is_zero() {
            continue;
        }
        let sub = mu_permanent_poly(&q_complementary_poly(a, 0, j));
        acc = &acc + &(e * &sub);
    }
    acc
}

/// Direct permutation expansion over polynomial entries.
pub fn mu_permanent_naive_poly(a: &PolyMatrix, cap: usize) -> Result<MuPoly> {
    check_cap("mu_permanent_naive_poly", a.n(), cap)?;
    let n = a.n();
    let mut acc = MuPoly::zero();
    for (sigma, inv) in LexPermutations::new(n) {
        let mut prod = MuPoly::one();
        let mut vanished = false;
        for i in 0..n {
            let e = a.entry(i, sigma.apply(i));
            if e.is_zero() {
                vanished = true;
                break;
            }
            prod = &prod * e;
        }
        if !vanished {
            acc = &acc + &prod.shift(inv);
        }
    }
    Ok(acc)
}

/// Laplace expansion along the chosen row or column:
///
/// ```text
/// P(A) = sum_j a_{i j} P(A_<i j>)     (row form)
/// P(A) = sum_i a_{i j} P(A_<i j>)     (column form)
/// ```
///
/// with `A_<i j>` the mu-scaled complementary minor from [`q_complementary`].
/// Every one of the `2n` forms yields the same polynomial. No size cap: work
/// scales with the nonzero support, which for sparse matrices is far below
/// `n!` (dense large matrices remain infeasible by nature).
pub fn mu_permanent_laplace(a: &SquareMatrix, axis: Axis, index: usize) -> Result<MuPoly> {
    let n = a.n();
    if n == 0 {
        return Ok(MuPoly::one());
    }
    if index >= n {
        return Err(Error::IndexOutOfRange {
            i: index,
            j: index,
            n,
        });
    }
    let pm = PolyMatrix::from_matrix(a);
    let mut acc = MuPoly::zero();
    for k in 0..n {
        let (i, j) = match axis {
            Axis::Row => (index, k),
            Axis::Column => (k, index),
        };
        let e = pm.entry(i, j);
        if e.is_zero() {
            continue;
        }
        let sub = mu_permanent_poly(&q_complementary_poly(&pm, i, j));
        acc = &acc + &(e * &sub);
    }
    Ok(acc)
}

// ---------------------------------------------------------------------------
// multivariable refinement
// ---------------------------------------------------------------------------

/// The multivariable `q`-determinant: each permutation contributes its signed
/// product times `prod_i q_{i+1}^{t_i}` where `t` is the per-position
/// inversion table. Variable `q_{i+1}` therefore records how many inversions
/// position `i` opens. Substituting every `q_i := -mu` recovers the
/// mu-permanent; substituting `q_i := 1` recovers the determinant.
pub fn multivariable_qdet(a: &SquareMatrix) -> Result<MultiQPoly> {
    check_cap("multivariable_qdet", a.n(), DEFAULT_NAIVE_CAP)?;
    let n = a.n();
    let vars = n.saturating_sub(1);
    let mut out = MultiQPoly::zero(vars);
    for (sigma, inv) in LexPermutations::new(n) {
        let mut prod = GaussianRational::one();
        let mut vanished = false;
        for i in 0..n {
            let e = a.entry(i, sigma.apply(i));
            if e.is_zero() {
                vanished = true;
                break;
            }
            prod *= e;
        }
        if vanished {
            continue;
        }
        if inv % 2 == 1 {
            prod = -prod;
        }
        let exps: Vec<u32> = sigma
            .inversion_table()
            .iter()
            .map(|&t| t as u32)
            .collect();
        out.add_term(exps, prod);
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// conjugation
// ---------------------------------------------------------------------------

/// The mu-permanent of `A` after relabeling by `tau` (conjugation by the
/// permutation matrix of `tau`), computed directly from the original entries
/// by transporting each permutation's inversion count through `tau`:
///
/// ```text
/// P(relabel(A, tau)) = sum_sigma (prod_i a_{i, sigma(i)}) * mu^inv(tau sigma tau^{-1})
/// ```
///
/// Debug builds cross-check against the naive expansion of the relabeled
/// matrix.
pub fn conjugated_mu_permanent(a: &SquareMatrix, tau: &Permutation) -> Result<MuPoly> {
    let n = a.n();
    if tau.n() != n {
        return Err(Error::DimensionMismatch(format!(
            "permutation of size {} on a {n}x{n} matrix",
            tau.n()
        )));
    }
    check_cap("conjugated_mu_permanent", n, DEFAULT_NAIVE_CAP)?;
    let mut coeffs = vec![GaussianRational::zero(); max_mu_degree(n) + 1];
    for (sigma, _) in LexPermutations::new(n) {
        let mut prod = GaussianRational::one();
        let mut vanished = false;
        for i in 0..n {
            let e = a.entry(i, sigma.apply(i));
            if e.is_zero() {
                vanished = true;
                break;
            }
            prod *= e;
        }
        if !vanished {
            coeffs[sigma.conjugated_by(tau).inversion_count()] += &prod;
        }
    }
    let out = MuPoly::from_coeffs(coeffs);
    debug_assert_eq!(
        out,
        mu_permanent_naive(&a.relabel(tau))?,
        "conjugation identity must hold"
    );
    Ok(out)
}
