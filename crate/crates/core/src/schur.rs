//! Permutation-indexed matrices: the Schur power matrix, the inversion-count
//! kernel, their Hadamard product, and the averaging identity that recovers
//! the mu-permanent from it, plus a small dense eigensolver for spectral
//! checks.
//!
//! For an n x n matrix `A`, the Schur power matrix is the n! x n! matrix with
//! `(sigma, tau)` entry `prod_i a_{sigma(i), tau(i)}`.  The kernel `Gamma_mu`
//! has entry `mu^l(tau sigma^-1)` where `l` counts inversions; it is
//! symmetric with unit diagonal, and positive semidefinite for mu in [-1, 1].
//! Averaging all entries of the Hadamard product `Pi_mu = Pi o Gamma_mu`
//! recovers the mu-permanent:  `P_mu(A) = (1/n!) <Pi_mu(A) 1, 1>`.

use crate::algebra::poly::MuPoly;
use crate::algebra::rational::{rat, GaussianRational};
use crate::error::{Error, Result};
use crate::expansion::mu_permanent_naive_capped;
use crate::matrices::matrix::SquareMatrix;
use crate::matrices::permutation::{all_permutations, Permutation};
use rayon::prelude::*;

/// Largest base dimension for permutation-indexed construction (720 x 720).
pub const SCHUR_CAP: usize = 6;
/// Largest base dimension for default eigenvalue sweeps (120 x 120).
pub const SPECTRAL_CAP: usize = 5;
/// Smallest eigenvalue still accepted as "nonnegative" by the float check.
pub const GAMMA_PSD_TOL: f64 = -1e-9;

/// A square array indexed by the permutations of `{0, .., n-1}` in
/// lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermIndexedMatrix<T> {
    base_n: usize,
    perms: Vec<Permutation>,
    data: Vec<T>,
}

impl<T> PermIndexedMatrix<T> {
    /// Base matrix dimension n (the array itself is n! x n!).
    pub fn base_n(&self) -> usize {
        self.base_n
    }

    /// Array dimension n!.
    pub fn dim(&self) -> usize {
        self.perms.len()
    }

    /// The permutation indexing row/column `i`.
    pub fn perm(&self, i: usize) -> &Permutation {
        &self.perms[i]
    }

    pub fn entry(&self, row: usize, col: usize) -> &T {
        &self.data[row * self.perms.len() + col]
    }

    /// Sums of each row, in row order.
    pub fn row_sums(&self) -> Vec<T>
    where
        T: Clone + Send + Sync,
        for<'a> &'a T: std::ops::Add<&'a T, Output = T>,
    {
        let dim = self.dim();
        (0..dim)
            .into_par_iter()
            .map(|r| {
                let row = &self.data[r * dim..(r + 1) * dim];
                let mut acc = row[0].clone();
                for v in &row[1..] {
                    acc = &acc + v;
                }
                acc
            })
            .collect()
    }
}

fn check_schur_cap(n: usize) -> Result<()> {
    if n > SCHUR_CAP {
        return Err(Error::CapExceeded {
            op: "permutation-indexed construction",
            n,
            cap: SCHUR_CAP,
        });
    }
    Ok(())
}

fn build<T: Send + Sync>(
    n: usize,
    fill: impl Fn(&Permutation, &Permutation) -> T + Sync,
) -> PermIndexedMatrix<T> {
    let perms = all_permutations(n);
    let dim = perms.len();
    let rows: Vec<Vec<T>> = (0..dim)
        .into_par_iter()
        .map(|r| {
            let row_perm = &perms[r];
            perms
                .iter()
                .map(|col_perm| fill(row_perm, col_perm))
                .collect()
        })
        .collect();
    let mut data = Vec::with_capacity(dim * dim);
    for row in rows {
        data.extend(row);
    }
    PermIndexedMatrix {
        base_n: n,
        perms,
        data,
    }
}

/// The Schur power matrix: `(sigma, tau)` entry `prod_i a_{sigma(i), tau(i)}`.
pub fn schur_power(a: &SquareMatrix) -> Result<PermIndexedMatrix<GaussianRational>> {
    let n = a.n();
    check_schur_cap(n)?;
    Ok(build(n, |sigma, tau| {
        let mut prod = GaussianRational::one();
        for i in 0..n {
            prod *= a.entry(sigma.apply(i), tau.apply(i));
        }
        prod
    }))
}

/// The inversion-count kernel: `(sigma, tau)` entry `mu^l(tau sigma^-1)`,
/// symbolic.
pub fn gamma_mu(n: usize) -> Result<PermIndexedMatrix<MuPoly>> {
    check_schur_cap(n)?;
    Ok(build(n, |sigma, tau| {
        let l = tau.compose(&sigma.inverse()).inversion_count();
        MuPoly::monomial(GaussianRational::one(), l)
    }))
}

/// Hadamard product of the Schur power matrix with the inversion kernel.
pub fn pi_mu(a: &SquareMatrix) -> Result<PermIndexedMatrix<MuPoly>> {
    let n = a.n();
    check_schur_cap(n)?;
    Ok(build(n, |sigma, tau| {
        let mut prod = GaussianRational::one();
        for i in 0..n {
            prod *= a.entry(sigma.apply(i), tau.apply(i));
        }
        let l = tau.compose(&sigma.inverse()).inversion_count();
        MuPoly::monomial(prod, l)
    }))
}

/// Computes the mu-permanent two independent ways: directly by the
/// permutation expansion, and as `(1/n!)` times the sum of all entries of the
/// Hadamard product.  Returns `(direct, averaged)`; the two are equal as
/// polynomials.
pub fn averaging_identity(a: &SquareMatrix) -> Result<(MuPoly, MuPoly)> {
    let n = a.n();
    check_schur_cap(n)?;
    let direct = mu_permanent_naive_capped(a, SCHUR_CAP.max(n))?;
    let m = pi_mu(a)?;
    let mut total = MuPoly::zero();
    for row in m.row_sums() {
        total = &total + &row;
    }
    let factorial: i64 = (1..=n as i64).product::<i64>().max(1);
    let averaged = total.scale(&GaussianRational::from_rational(rat(1, factorial)));
    Ok((direct, averaged))
}

/// A real symmetric matrix in double precision, symmetrized at construction.
#[derive(Debug, Clone, PartialEq)]
pub struct FloatSymMatrix {
    dim: usize,
    data: Vec<f64>,
}

impl FloatSymMatrix {
    /// Builds from row-major entries, averaging mirror pairs so the stored
    /// matrix is exactly symmetric.  Rejects non-finite input.
    pub fn new(dim: usize, data: Vec<f64>) -> Result<Self> {
        if data.len() != dim * dim {
            return Err(Error::DimensionMismatch(format!(
                "expected {} entries, got {}",
                dim * dim,
                data.len()
            )));
        }
        if data.iter().any(|v| !v.is_finite()) {
            return Err(Error::NonFiniteEntry);
        }
        let mut m = FloatSymMatrix { dim, data };
        for i in 0..dim {
            for j in i + 1..dim {
                let avg = 0.5 * (m.data[i * dim + j] + m.data[j * dim + i]);
                m.data[i * dim + j] = avg;
                m.data[j * dim + i] = avg;
            }
        }
        Ok(m)
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let dim = rows.len();
        let mut data = Vec::with_capacity(dim * dim);
        for row in rows {
            if row.len() != dim {
                return Err(Error::DimensionMismatch(format!(
                    "row length {} in a {}-dimensional matrix",
                    row.len(),
                    dim
                )));
            }
            data.extend_from_slice(row);
        }
        FloatSymMatrix::new(dim, data)
    }

    /// Exact-to-float conversion of a symmetric rational matrix.
    pub fn from_square(a: &SquareMatrix) -> Result<Self> {
        if !a.is_symmetric() {
            return Err(Error::NotHermitian);
        }
        let n = a.n();
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let e = a.entry(i, j);
                data.push(e.to_f64().ok_or(Error::NonRealCoefficients)?);
            }
        }
        FloatSymMatrix::new(n, data)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entry(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.dim + j]
    }

    fn frobenius(&self) -> f64 {
        self.data.iter().map(|v| v * v).sum::<f64>().sqrt()
    }
}

/// Full eigensystem by cyclic Jacobi rotations: eigenvalues ascending, with
/// `vectors[k]` the unit eigenvector for `values[k]`.  Deterministic sweep
/// order; converges when the off-diagonal norm drops below `1e-12` of the
/// Frobenius norm.
pub fn jacobi_eigensystem(m: &FloatSymMatrix) -> (Vec<f64>, Vec<Vec<f64>>) {
    let d = m.dim;
    let mut a = m.data.clone();
    let mut v = vec![0.0; d * d];
    for i in 0..d {
        v[i * d + i] = 1.0;
    }
    let fro = m.frobenius();
    let tol = 1e-12 * fro;
    for _sweep in 0..100 {
        let mut off = 0.0;
        for i in 0..d {
            for j in 0..d {
                if i != j {
                    off += a[i * d + j] * a[i * d + j];
                }
            }
        }
        if off.sqrt() <= tol || fro == 0.0 {
            break;
        }
        for p in 0..d {
            for q in p + 1..d {
                let apq = a[p * d + q];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[q * d + q] - a[p * d + p]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..d {
                    let akp = a[k * d + p];
                    let akq = a[k * d + q];
                    a[k * d + p] = c * akp - s * akq;
                    a[k * d + q] = s * akp + c * akq;
                }
                for k in 0..d {
                    let apk = a[p * d + k];
                    let aqk = a[q * d + k];
                    a[p * d + k] = c * apk - s * aqk;
                    a[q * d + k] = s * apk + c * aqk;
                }
                for k in 0..d {
                    let vkp = v[k * d + p];
                    let vkq = v[k * d + q];
                    v[k * d + p] = c * vkp - s * vkq;
                    v[k * d + q] = s * vkp + c * vkq;
                }
            }
        }
    }
    let mut order: Vec<usize> = (0..d).collect();
    order.sort_by(|&x, &y| a[x * d + x].partial_cmp(&a[y * d + y]).unwrap());
    let values: Vec<f64> = order.iter().map(|&k| a[k * d + k]).collect();
    let vectors: Vec<Vec<f64>> = order
        .iter()
        .map(|&k| (0..d).map(|r| v[r * d + k]).collect())
        .collect();
    (values, vectors)
}

pub fn min_eigenvalue(m: &FloatSymMatrix) -> f64 {
    *jacobi_eigensystem(m)
        .0
        .first()
        .expect("nonempty matrix")
}

pub fn max_eigenvalue(m: &FloatSymMatrix) -> f64 {
    *jacobi_eigensystem(m).0.last().expect("nonempty matrix")
}

/// The inversion kernel evaluated at a float point.
pub fn gamma_mu_float(n: usize, mu: f64) -> Result<FloatSymMatrix> {
    check_schur_cap(n)?;
    if !mu.is_finite() {
        return Err(Error::NonFiniteEntry);
    }
    let perms = all_permutations(n);
    let dim = perms.len();
    let mut data = vec![0.0; dim * dim];
    for (r, sigma) in perms.iter().enumerate() {
        let inv = sigma.inverse();
        for (c, tau) in perms.iter().enumerate() {
            let l = tau.compose(&inv).inversion_count();
            data[r * dim + c] = mu.powi(l as i32);
        }
    }
    FloatSymMatrix::new(dim, data)
}

/// The Hadamard product evaluated at a float point, for real symmetric input.
pub fn pi_mu_float(a: &SquareMatrix, mu: f64) -> Result<FloatSymMatrix> {
    let n = a.n();
    check_schur_cap(n)?;
    if !a.is_symmetric() {
        return Err(Error::NotHermitian);
    }
    let perms = all_permutations(n);
    let dim = perms.len();
    let mut float_a = vec![0.0; n * n];
    for i in 0..n {
        for j in 0..n {
            let e = a.entry(i, j);
            float_a[i * n + j] = e.to_f64().ok_or(Error::NonRealCoefficients)?;
        }
    }
    let mut data = vec![0.0; dim * dim];
    for (r, sigma) in perms.iter().enumerate() {
        let inv = sigma.inverse();
        for (c, tau) in perms.iter().enumerate() {
            let mut prod = 1.0;
            for i in 0..n {
                prod *= float_a[sigma.apply(i) * n + tau.apply(i)];
            }
            let l = tau.compose(&inv).inversion_count();
            data[r * dim + c] = prod * mu.powi(l as i32);
        }
    }
    FloatSymMatrix::new(dim, data)
}

/// Result of sweeping the kernel's smallest eigenvalue over a grid of mu
/// values.
#[derive(Debug, Clone)]
pub struct GammaPsdReport {
    pub n: usize,
    pub mu_values: Vec<f64>,
    pub min_eigenvalues: Vec<f64>,
    pub pass: bool,
}

/// Evaluates the kernel at each grid point and reports the smallest
/// eigenvalue; passes iff every one clears [`GAMMA_PSD_TOL`].
pub fn check_gamma_psd(n: usize, mu_grid: &[f64]) -> Result<GammaPsdReport> {
    let min_eigenvalues: Vec<f64> = mu_grid
        .par_iter()
        .map(|&mu| gamma_mu_float(n, mu).map(|g| min_eigenvalue(&g)))
        .collect::<Result<_>>()?;
    let pass = min_eigenvalues.iter().all(|&e| e >= GAMMA_PSD_TOL);
    Ok(GammaPsdReport {
        n,
        mu_values: mu_grid.to_vec(),
        min_eigenvalues,
        pass,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::rat_int;
    use crate::expansion::mu_permanent_naive;
    use crate::matrices::gen::{gen_pd, gen_rational_matrix, gen_tree_pd, Seed, TreeShape};
    use crate::structured::specialize;

    #[test]
    fn schur_power_of_a_2x2_is_the_hand_expansion() {
        let a = SquareMatrix::from_int_rows(&[&[2, 3], &[5, 7]]).unwrap();
        let m = schur_power(&a).unwrap();
        assert_eq!(m.dim(), 2);
        let g = |v: i64| GaussianRational::from_int(v);
        assert_eq!(*m.entry(0, 0), g(14));
        assert_eq!(*m.entry(0, 1), g(15));
        assert_eq!(*m.entry(1, 0), g(15));
        assert_eq!(*m.entry(1, 1), g(14));
    }

    #[test]
    fn schur_power_of_identity_and_ones_are_identity_and_ones() {
        let id = SquareMatrix::identity(3);
        let m = schur_power(&id).unwrap();
        for r in 0..6 {
            for c in 0..6 {
                let expected = GaussianRational::from_int((r == c) as i64);
                assert_eq!(*m.entry(r, c), expected);
            }
        }
        let ones = SquareMatrix::from_int_rows(&[&[1, 1, 1], &[1, 1, 1], &[1, 1, 1]]).unwrap();
        let m = schur_power(&ones).unwrap();
        for r in 0..6 {
            for c in 0..6 {
                assert_eq!(*m.entry(r, c), GaussianRational::one());
            }
        }
    }

    #[test]
    fn kernel_for_n2_is_the_pinned_2x2() {
        let g = gamma_mu(2).unwrap();
        assert_eq!(*g.entry(0, 0), MuPoly::one());
        assert_eq!(*g.entry(1, 1), MuPoly::one());
        assert_eq!(*g.entry(0, 1), MuPoly::mu());
        assert_eq!(*g.entry(1, 0), MuPoly::mu());
    }

    #[test]
    fn kernel_specializes_to_ones_and_identity() {
        let g = gamma_mu(3).unwrap();
        let one = GaussianRational::one();
        let zero = GaussianRational::zero();
        for r in 0..6 {
            for c in 0..6 {
                assert_eq!(g.entry(r, c).eval(&one), GaussianRational::one());
                let expected = GaussianRational::from_int((r == c) as i64);
                assert_eq!(g.entry(r, c).eval(&zero), expected);
            }
        }
    }

    #[test]
    fn kernel_is_symmetric_with_unit_diagonal_up_to_n5() {
        for n in 0..=5usize {
            let g = gamma_mu(n).unwrap();
            for r in 0..g.dim() {
                assert_eq!(*g.entry(r, r), MuPoly::one());
                for c in r + 1..g.dim() {
                    assert_eq!(g.entry(r, c), g.entry(c, r), "n={n} ({r},{c})");
                }
            }
        }
    }

    #[test]
    fn construction_respects_the_cap() {
        assert!(matches!(
            gamma_mu(7),
            Err(Error::CapExceeded { cap: SCHUR_CAP, .. })
        ));
        let a = SquareMatrix::identity(7);
        assert!(schur_power(&a).is_err());
        assert!(pi_mu(&a).is_err());
    }

    #[test]
    fn hadamard_product_for_n2_is_the_pinned_2x2() {
        let a = SquareMatrix::from_int_rows(&[&[2, 3], &[5, 7]]).unwrap();
        let m = pi_mu(&a).unwrap();
        let c = |v: i64| MuPoly::constant(GaussianRational::from_int(v));
        assert_eq!(*m.entry(0, 0), c(14));
        assert_eq!(*m.entry(1, 1), c(14));
        assert_eq!(*m.entry(0, 1), MuPoly::monomial(GaussianRational::from_int(15), 1));
        assert_eq!(*m.entry(1, 0), MuPoly::monomial(GaussianRational::from_int(15), 1));
    }

    #[test]
    fn hadamard_product_of_a_diagonal_matrix_is_diagonal() {
        let a = SquareMatrix::from_int_rows(&[&[2, 0, 0], &[0, 3, 0], &[0, 0, 5]]).unwrap();
        let m = pi_mu(&a).unwrap();
        for r in 0..6 {
            for c in 0..6 {
                if r == c {
                    assert_eq!(*m.entry(r, c), MuPoly::from_int_coeffs(&[30]));
                } else {
                    assert!(m.entry(r, c).is_zero());
                }
            }
        }
    }

    #[test]
    fn every_row_of_the_tree_hadamard_product_sums_to_the_permanent() {
        // Symmetric tree-supported matrices: each row (and column) of the
        // Hadamard product carries every expansion term exactly once.
        for (n, shape, seed) in [
            (3, TreeShape::Path, 31u64),
            (4, TreeShape::Path, 32),
            (4, TreeShape::Star, 33),
            (4, TreeShape::Random, 34),
        ] {
            let a = gen_tree_pd(n, Seed(seed), shape).unwrap();
            let p = mu_permanent_naive(&a).unwrap();
            let m = pi_mu(&a).unwrap();
            for (r, sum) in m.row_sums().into_iter().enumerate() {
                assert_eq!(sum, p, "row {r}, n={n}, seed {seed}");
            }
        }
    }

    #[test]
    fn averaging_identity_recovers_the_permanent() {
        let a = SquareMatrix::from_int_rows(&[&[2, 3], &[5, 7]]).unwrap();
        let (direct, averaged) = averaging_identity(&a).unwrap();
        assert_eq!(direct, MuPoly::from_int_coeffs(&[14, 15]));
        assert_eq!(direct, averaged);

        let id = SquareMatrix::identity(4);
        let (direct, averaged) = averaging_identity(&id).unwrap();
        assert_eq!(direct, MuPoly::one());
        assert_eq!(averaged, MuPoly::one());

        for seed in 0..4u64 {
            for n in 2..=5usize {
                let a = gen_rational_matrix(n, Seed(7000 + 10 * seed + n as u64));
                let (direct, averaged) = averaging_identity(&a).unwrap();
                assert_eq!(direct, averaged, "n={n} seed={seed}");
            }
        }
    }

    #[test]
    fn jacobi_matches_hand_computed_spectra() {
        let m = FloatSymMatrix::from_rows(&[vec![1.0, 0.5], vec![0.5, 1.0]]).unwrap();
        assert!((min_eigenvalue(&m) - 0.5).abs() < 1e-12);
        assert!((max_eigenvalue(&m) - 1.5).abs() < 1e-12);

        let id = FloatSymMatrix::from_rows(&[
            vec![1.0, 0.0, 0.0],
            vec![0.0, 1.0, 0.0],
            vec![0.0, 0.0, 1.0],
        ])
        .unwrap();
        assert!((min_eigenvalue(&id) - 1.0).abs() < 1e-14);
        assert!((max_eigenvalue(&id) - 1.0).abs() < 1e-14);

        let d = FloatSymMatrix::from_rows(&[
            vec![3.0, 0.0, 0.0],
            vec![0.0, 1.0, 0.0],
            vec![0.0, 0.0, 2.0],
        ])
        .unwrap();
        assert!((min_eigenvalue(&d) - 1.0).abs() < 1e-14);
        assert!((max_eigenvalue(&d) - 3.0).abs() < 1e-14);
    }

    #[test]
    fn jacobi_eigensystem_reconstructs_the_matrix() {
        // Seeded symmetric matrix; check A v = lambda v for every pair.
        let mut vals = Vec::new();
        let mut x: f64 = 0.37;
        for _ in 0..(12 * 12) {
            x = (x * 997.0 + 0.123).fract();
            vals.push(x - 0.5);
        }
        let m = FloatSymMatrix::new(12, vals).unwrap();
        let (values, vectors) = jacobi_eigensystem(&m);
        assert_eq!(values.len(), 12);
        for (lambda, vec) in values.iter().zip(&vectors) {
            for r in 0..12 {
                let mut av = 0.0;
                for c in 0..12 {
                    av += m.entry(r, c) * vec[c];
                }
                assert!(
                    (av - lambda * vec[r]).abs() < 1e-9,
                    "residual for lambda={lambda}"
                );
            }
        }
        // Ascending order.
        for w in values.windows(2) {
            assert!(w[0] <= w[1]);
        }
    }

    #[test]
    fn float_construction_rejects_bad_input() {
        assert!(matches!(
            FloatSymMatrix::new(2, vec![1.0, f64::NAN, 0.0, 1.0]),
            Err(Error::NonFiniteEntry)
        ));
        assert!(FloatSymMatrix::new(2, vec![1.0]).is_err());
        // Mirroring averages the two triangles.
        let m = FloatSymMatrix::new(2, vec![1.0, 0.2, 0.4, 1.0]).unwrap();
        assert_eq!(m.entry(0, 1), m.entry(1, 0));
        assert!((m.entry(0, 1) - 0.3).abs() < 1e-15);
    }

    #[test]
    fn float_kernel_matches_the_symbolic_kernel() {
        let g = gamma_mu(3).unwrap();
        for mu in [-1.0, -0.6, 0.0, 0.3, 1.0] {
            let gf = gamma_mu_float(3, mu).unwrap();
            for r in 0..6 {
                for c in 0..6 {
                    let mu_exact = crate::algebra::rational::rational_from_f64_approx(mu, 1_000_000)
                        .unwrap();
                    let exact = g
                        .entry(r, c)
                        .eval(&GaussianRational::from_rational(mu_exact))
                        .to_f64()
                        .unwrap();
                    assert!((gf.entry(r, c) - exact).abs() < 1e-12, "mu={mu} ({r},{c})");
                }
            }
        }
    }

    #[test]
    fn kernel_minimum_eigenvalues_match_the_closed_forms() {
        // n=2: eigenvalues 1 +/- mu.
        let report = check_gamma_psd(2, &[-1.0, 0.0, 1.0]).unwrap();
        assert!(report.pass);
        assert!((report.min_eigenvalues[0] - 0.0).abs() < 1e-12);
        assert!((report.min_eigenvalues[1] - 1.0).abs() < 1e-12);
        assert!((report.min_eigenvalues[2] - 0.0).abs() < 1e-12);

        let report = check_gamma_psd(3, &[0.0]).unwrap();
        assert!((report.min_eigenvalues[0] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn kernel_stays_psd_across_the_unit_interval() {
        let grid: Vec<f64> = (0..=20).map(|k| -1.0 + k as f64 / 10.0).collect();
        for n in 2..=4usize {
            let report = check_gamma_psd(n, &grid).unwrap();
            assert!(report.pass, "n={n}: {:?}", report.min_eigenvalues);
        }
    }

    #[test]
    fn psd_specializations_are_nonnegative_on_the_unit_interval() {
        // Exact rational check on a 21-point grid, including the singular
        // all-ones matrix.
        let ones = SquareMatrix::from_int_rows(&[&[1, 1], &[1, 1]]).unwrap();
        let mut cases = vec![ones];
        for seed in 0..4u64 {
            let n = 2 + (seed as usize % 3);
            cases.push(gen_pd(n, Seed(600 + seed)));
        }
        for a in &cases {
            for k in 0..=20i64 {
                let mu = GaussianRational::from_rational(rat(k - 10, 10));
                let value = specialize(a, &mu);
                assert!(value.is_real());
                assert!(
                    !value.re.lt(&rat_int(0)),
                    "negative specialization at k={k}"
                );
            }
        }
    }
}
