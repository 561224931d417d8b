//! Dense square matrices over the Gaussian rationals.
//!
//! Besides constructors and structural predicates, this module carries two
//! deliberately independent exact evaluators used as cross-checks elsewhere:
//! a Gaussian-elimination determinant and a bitmask-recursion permanent.
//! Neither iterates over permutations, so agreement with the permutation
//! expansions is meaningful evidence of correctness.

use num_traits::Zero;

use crate::algebra::rational::{GaussianRational, Rational};
use crate::error::{Error, Result};
use crate::matrices::permutation::Permutation;

#[derive(Clone, PartialEq, Eq)]
pub struct SquareMatrix {
    n: usize,
    data: Vec<GaussianRational>, // row-major
}

impl SquareMatrix {
    pub fn new(n: usize, data: Vec<GaussianRational>) -> Result<Self> {
        if data.len() != n * n {
            return Err(Error::DimensionMismatch(format!(
                "expected {} entries for a {n}x{n} matrix, got {}",
                n * n,
                data.len()
            )));
        }
        Ok(SquareMatrix { n, data })
    }

    pub fn from_rows(rows: Vec<Vec<GaussianRational>>) -> Result<Self> {
        let n = rows.len();
        if let Some(bad) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::DimensionMismatch(format!(
                "row of length {} in a {n}x{n} matrix",
                bad.len()
            )));
        }
        Ok(SquareMatrix {
            n,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| GaussianRational::from_int(v)).collect())
                .collect(),
        )
    }

    pub fn zero(n: usize) -> Self {
        SquareMatrix {
            n,
            data: vec![GaussianRational::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            m.data[i * n + i] = GaussianRational::one();
        }
        m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entry(&self, i: usize, j: usize) -> &GaussianRational {
        &self.data[i * self.n + j]
    }

    pub fn set_entry(&mut self, i: usize, j: usize, v: GaussianRational) {
        self.data[i * self.n + j] = v;
    }

    /// Bounds-checked access for values arriving from user input.
    pub fn get(&self, i: usize, j: usize) -> Result<&GaussianRational> {
        if i >= self.n || j >= self.n {
            return Err(Error::IndexOutOfRange { i, j, n: self.n });
        }
        Ok(self.entry(i, j))
    }

    pub fn rows(&self) -> impl Iterator<Item = &[GaussianRational]> {
        self.data.chunks(self.n.max(1))
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (i + 1..self.n).all(|j| self.entry(i, j) == self.entry(j, i)))
    }

    /// Conjugate-symmetric with a real diagonal.
    pub fn is_hermitian(&self) -> bool {
        (0..self.n).all(|i| {
            self.entry(i, i).is_real()
                && (i + 1..self.n).all(|j| *self.entry(i, j) == self.entry(j, i).conj())
        })
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.n).all(|i| (0..self.n).all(|j| i == j || self.entry(i, j).is_zero()))
    }

    pub fn transpose(&self) -> SquareMatrix {
        let mut out = Self::zero(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                out.set_entry(j, i, self.entry(i, j).clone());
            }
        }
        out
    }

    pub fn conj_transpose(&self) -> SquareMatrix {
        let mut out = Self::zero(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                out.set_entry(j, i, self.entry(i, j).conj());
            }
        }
        out
    }

    /// Entrywise complex conjugate (no transpose).
    pub fn conj(&self) -> SquareMatrix {
        SquareMatrix {
            n: self.n,
            data: self.data.iter().map(|v| v.conj()).collect(),
        }
    }

    /// Relabel rows and columns by `pi`: entry `(i, j)` moves to
    /// `(pi(i), pi(j))`. This is conjugation by the permutation matrix of
    /// `pi`, so spectra and symmetry are preserved.
    pub fn relabel(&self, pi: &Permutation) -> SquareMatrix {
        assert_eq!(pi.n(), self.n, "permutation size mismatch");
        let mut out = Self::zero(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                out.set_entry(pi.apply(i), pi.apply(j), self.entry(i, j).clone());
            }
        }
        out
    }

    /// Submatrix on the given strictly increasing index set.
    pub fn principal_submatrix(&self, indices: &[usize]) -> Result<SquareMatrix> {
        if indices.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Parse("indices must be strictly increasing".into()));
        }
        if indices.last().is_some_and(|&last| last >= self.n) {
            return Err(Error::SubsetOutOfRange { n: self.n });
        }
        let k = indices.len();
        let mut out = Self::zero(k);
        for (a, &i) in indices.iter().enumerate() {
            for (b, &j) in indices.iter().enumerate() {
                out.set_entry(a, b, self.entry(i, j).clone());
            }
        }
        Ok(out)
    }

    /// Delete row `i` and column `j`.
    pub fn minor_matrix(&self, i: usize, j: usize) -> SquareMatrix {
        assert!(i < self.n && j < self.n);
        let mut data = Vec::with_capacity((self.n - 1) * (self.n - 1));
        for r in 0..self.n {
            if r == i {
                continue;
            }
            for c in 0..self.n {
                if c == j {
                    continue;
                }
                data.push(self.entry(r, c).clone());
            }
        }
        SquareMatrix {
            n: self.n - 1,
            data,
        }
    }

    /// Exact determinant by Gaussian elimination with row pivoting.
    pub fn determinant(&self) -> GaussianRational {
        let n = self.n;
        if n == 0 {
            return GaussianRational::one();
        }
        let mut m = self.data.clone();
        let mut det = GaussianRational::one();
        for col in 0..n {
            let Some(pivot_row) = (col..n).find(|&r| !m[r * n + col].is_zero()) else {
                return GaussianRational::zero();
            };
            if pivot_row != col {
                for c in 0..n {
                    m.swap(pivot_row * n + c, col * n + c);
                }
                det = -det;
            }
            let pivot = m[col * n + col].clone();
            det *= &pivot;
            let inv = pivot.inverse().expect("pivot is nonzero");
            for r in col + 1..n {
                let factor = &m[r * n + col] * &inv;
                if factor.is_zero() {
                    continue;
                }
                for c in col..n {
                    let adj = &factor * &m[col * n + c];
                    m[r * n + c] -= &adj;
                }
            }
        }
        det
    }

    /// Exact permanent by row recursion over a bitmask of free columns.
    /// Exponential in `n`; intended as an oracle for small matrices.
    pub fn permanent(&self) -> GaussianRational {
        assert!(self.n <= 20, "permanent oracle limited to small n");
        fn go(m: &SquareMatrix, row: usize, free: u32, memo: &mut Vec<Option<GaussianRational>>) -> GaussianRational {
            if row == m.n {
                return GaussianRational::one();
            }
            if let Some(v) = &memo[free as usize] {
                return v.clone();
            }
            let mut acc = GaussianRational::zero();
            for j in 0..m.n {
                if free & (1 << j) != 0 && !m.entry(row, j).is_zero() {
                    let sub = go(m, row + 1, free & !(1 << j), memo);
                    acc += &(m.entry(row, j) * &sub);
                }
            }
            memo[free as usize] = Some(acc.clone());
            acc
        }
        if self.n == 0 {
            return GaussianRational::one();
        }
        let mut memo = vec![None; 1 << self.n];
        go(self, 0, (1u32 << self.n) - 1, &mut memo)
    }

    /// Determinants of the upper-left `k x k` blocks, `k = 1..=n`.
    pub fn leading_principal_minors(&self) -> Vec<GaussianRational> {
        (1..=self.n)
            .map(|k| {
                let idx: Vec<usize> = (0..k).collect();
                self.principal_submatrix(&idx).unwrap().determinant()
            })
            .collect()
    }

    /// Exact positive-definiteness test: Hermitian with every leading
    /// principal minor strictly positive.
    pub fn is_positive_definite(&self) -> Result<bool> {
        if !self.is_hermitian() {
            return Err(Error::NotHermitian);
        }
        for d in self.leading_principal_minors() {
            let v = d
                .expect_real()
                .expect("Hermitian matrices have real minors");
            if v <= Rational::zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Exact positive-semidefiniteness test: Hermitian with every principal
    /// minor (all index subsets) nonnegative. Exponential in `n`.
    pub fn is_positive_semidefinite(&self) -> Result<bool> {
        if !self.is_hermitian() {
            return Err(Error::NotHermitian);
        }
        assert!(self.n <= 16, "semidefiniteness test limited to small n");
        for mask in 1u32..(1 << self.n) {
            let idx: Vec<usize> = (0..self.n).filter(|&i| mask & (1 << i) != 0).collect();
            let d = self
                .principal_submatrix(&idx)
                .unwrap()
                .determinant()
                .expect_real()
                .expect("Hermitian matrices have real minors");
            if d < Rational::zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn matmul(&self, other: &SquareMatrix) -> SquareMatrix {
        assert_eq!(self.n, other.n, "multiplying matrices of unequal size");
        let n = self.n;
        let mut out = Self::zero(n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = GaussianRational::zero();
                for k in 0..n {
                    acc += &(self.entry(i, k) * other.entry(k, j));
                }
                out.set_entry(i, j, acc);
            }
        }
        out
    }

    pub fn add(&self, other: &SquareMatrix) -> SquareMatrix {
        assert_eq!(self.n, other.n, "adding matrices of unequal size");
        SquareMatrix {
            n: self.n,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// Diagonal product, the `mu^0` coefficient of the mu-permanent.
    pub fn diagonal_product(&self) -> GaussianRational {
        let mut acc = GaussianRational::one();
        for i in 0..self.n {
            acc *= self.entry(i, i);
        }
        acc
    }
}

impl std::fmt::Debug for SquareMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "SquareMatrix({}x{})", self.n, self.n)?;
        for row in self.rows() {
            let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        Ok(())
    }
}
