//! Permutations of `{0, .., n-1}` with inversion statistics and
//! lexicographic iteration.
//!
//! The inversion count of a permutation is the number of out-of-order pairs
//! `i < k` with `sigma(i) > sigma(k)`; it drives the exponent of `mu` in every
//! permutation expansion in this crate. Indices are 0-based internally;
//! `from_one_based` / `one_based_images` convert at I/O boundaries.

use crate::error::{Error, Result};

/// Maximum `n` for factorial-rank conversions (`20! < 2^63 <= 21!`).
pub const LEX_RANK_CAP: usize = 20;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// Build from the image vector `i -> images[i]`; must be a bijection.
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v >= n || seen[v] {
                return Err(Error::Parse(format!(
                    "not a permutation of 0..{n}: {images:?}"
                )));
            }
            seen[v] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// Swap of `i` and `j` (identity elsewhere).
    pub fn transposition(n: usize, i: usize, j: usize) -> Result<Self> {
        if i >= n || j >= n {
            return Err(Error::IndexOutOfRange { i, j, n });
        }
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(i, j);
        Ok(Permutation { images })
    }

    /// Accepts images written in 1-based convention, e.g. `[2, 1, 3]`.
    pub fn from_one_based(images: &[usize]) -> Result<Self> {
        let shifted: Vec<usize> = images.iter().map(|&v| v.wrapping_sub(1)).collect();
        Permutation::new(shifted)
    }

    pub fn one_based_images(&self) -> Vec<usize> {
        self.images.iter().map(|&v| v + 1).collect()
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// Number of pairs `i < k` with `sigma(i) > sigma(k)`.
    pub fn inversion_count(&self) -> usize {
        let n = self.n();
        let mut count = 0;
        for i in 0..n {
            for k in i + 1..n {
                if self.images[i] > self.images[k] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Per-position inversion counts: entry `i` is the number of later
    /// positions holding a smaller image. Has `n - 1` entries (the last
    /// position never contributes); entries sum to `inversion_count()`.
    pub fn inversion_table(&self) -> Vec<usize> {
        let n = self.n();
        let mut table = Vec::with_capacity(n.saturating_sub(1));
        for i in 0..n.saturating_sub(1) {
            table.push(
                (i + 1..n)
                    .filter(|&k| self.images[i] > self.images[k])
                    .count(),
            );
        }
        table
    }

    /// `(self . other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.n(), other.n(), "composing permutations of unequal size");
        Permutation {
            images: other.images.iter().map(|&v| self.images[v]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.n()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v] = i;
        }
        Permutation { images: inv }
    }

    /// `tau . self . tau^{-1}`: how `self` acts after relabeling by `tau`.
    pub fn conjugated_by(&self, tau: &Permutation) -> Permutation {
        tau.compose(self).compose(&tau.inverse())
    }

    /// Position in lexicographic order of all permutations of the same size
    /// (factorial number system on the inversion table).
    pub fn lex_rank(&self) -> Result<u64> {
        let n = self.n();
        if n > LEX_RANK_CAP {
            return Err(Error::CapExceeded {
                op: "lex_rank",
                n,
                cap: LEX_RANK_CAP,
            });
        }
        // digit i of the factorial number system is the inversion-table entry
        let mut rank: u64 = 0;
        for (i, &d) in self.inversion_table().iter().enumerate() {
            rank += d as u64 * factorial((n - 1 - i) as u64);
        }
        Ok(rank)
    }

    /// Inverse of [`lex_rank`](Self::lex_rank).
    pub fn from_lex_rank(n: usize, rank: u64) -> Result<Self> {
        if n > LEX_RANK_CAP {
            return Err(Error::CapExceeded {
                op: "from_lex_rank",
                n,
                cap: LEX_RANK_CAP,
            });
        }
        // factorial-digit extraction, most significant place first
        let mut digits = vec![0usize; n];
        let mut r = rank;
        for i in 0..n {
            let f = factorial((n - 1 - i) as u64);
            digits[i] = (r / f) as usize;
            r %= f;
        }
        if r != 0 || digits.iter().enumerate().any(|(i, &d)| d > n - 1 - i) {
            return Err(Error::Parse(format!("lex rank {rank} out of range for n={n}")));
        }
        // digit i = how many unused values to skip
        let mut pool: Vec<usize> = (0..n).collect();
        let mut images = Vec::with_capacity(n);
        for &d in &digits {
            images.push(pool.remove(d));
        }
        Ok(Permutation { images })
    }
}

fn factorial(k: u64) -> u64 {
    (1..=k).product::<u64>().max(1)
}

impl std::fmt::Debug for Permutation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Permutation{:?}", self.one_based_images())
    }
}

/// All permutations of size `n` in lexicographic order, each paired with its
/// inversion count. The successor step is the classic pivot/swap/reverse walk;
/// the inversion count is updated incrementally: reversing the decreasing
/// suffix of length `m` removes `m(m-1)/2` inversions and the pivot swap adds
/// exactly one, so the delta is `1 - m(m-1)/2`.
pub struct LexPermutations {
    images: Vec<usize>,
    inversions: usize,
    started: bool,
    done: bool,
}

impl LexPermutations {
    pub fn new(n: usize) -> Self {
        LexPermutations {
            images: (0..n).collect(),
            inversions: 0,
            started: false,
            done: false,
        }
    }
}

impl Iterator for LexPermutations {
    type Item = (Permutation, usize);

    fn next(&mut self) -> Option<Self::Item> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some((
                Permutation {
                    images: self.images.clone(),
                },
                self.inversions,
            ));
        }
        let n = self.images.len();
        // pivot: last position with a strictly larger successor
        let Some(pivot) = (0..n.saturating_sub(1))
            .rev()
            .find(|&i| self.images[i] < self.images[i + 1])
        else {
            self.done = true;
            return None;
        };
        let m = n - 1 - pivot; // decreasing suffix length
        let swap_with = (pivot + 1..n)
            .rev()
            .find(|&j| self.images[j] > self.images[pivot])
            .expect("suffix holds a larger element by pivot choice");
        self.images.swap(pivot, swap_with);
        self.images[pivot + 1..].reverse();
        self.inversions = self.inversions + 1 - m * (m - 1) / 2;
        Some((
            Permutation {
                images: self.images.clone(),
            },
            self.inversions,
        ))
    }
}

/// Collect all permutations of size `n` in lexicographic order.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    LexPermutations::new(n).map(|(p, _)| p).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::new(vec![0, 0]).is_err());
        assert!(Permutation::new(vec![0, 2]).is_err());
        assert!(Permutation::from_one_based(&[0, 1]).is_err()); // 0 invalid in 1-based
        assert!(Permutation::from_one_based(&[2, 1, 3]).is_ok());
    }

    #[test]
    fn inversion_table_pins() {
        // images in 1-based convention with known per-position counts
        let cases: &[(&[usize], &[usize], usize)] = &[
            (&[1, 3, 2], &[0, 1], 1),
            (&[3, 1, 2], &[2, 0], 2),
            (&[3, 2, 1], &[2, 1], 3),
            (&[1, 2, 3], &[0, 0], 0),
        ];
        for (images, table, total) in cases {
            let p = Permutation::from_one_based(images).unwrap();
            assert_eq!(p.inversion_table(), *table, "table of {images:?}");
            assert_eq!(p.inversion_count(), *total, "count of {images:?}");
            assert_eq!(p.inversion_table().iter().sum::<usize>(), *total);
        }
    }

    #[test]
    fn compose_and_inverse() {
        let s = Permutation::from_one_based(&[2, 3, 1]).unwrap();
        let t = Permutation::from_one_based(&[1, 3, 2]).unwrap();
        // (s . t)(i) = s(t(i)): t sends 2->3, s sends 3->1
        let st = s.compose(&t);
        assert_eq!(st.one_based_images(), vec![2, 1, 3]);
        assert!(s.compose(&s.inverse()).is_identity());
        assert!(s.inverse().compose(&s).is_identity());
    }

    #[test]
    fn conjugation_pin() {
        let tau = Permutation::from_one_based(&[2, 1, 3]).unwrap();
        let sigma = Permutation::from_one_based(&[1, 3, 2]).unwrap();
        let conj = sigma.conjugated_by(&tau);
        assert_eq!(conj.one_based_images(), vec![3, 2, 1]);
    }

    #[test]
    fn lex_iteration_order_and_counts() {
        let seq: Vec<(Vec<usize>, usize)> = LexPermutations::new(3)
            .map(|(p, inv)| (p.one_based_images(), inv))
            .collect();
        assert_eq!(
            seq,
            vec![
                (vec![1, 2, 3], 0),
                (vec![1, 3, 2], 1),
                (vec![2, 1, 3], 1),
                (vec![2, 3, 1], 2),
                (vec![3, 1, 2], 2),
                (vec![3, 2, 1], 3),
            ]
        );
    }

    #[test]
    fn incremental_inversions_match_direct_recount() {
        for n in 0..=6 {
            let mut seen = 0usize;
            for (p, inv) in LexPermutations::new(n) {
                assert_eq!(inv, p.inversion_count(), "at {p:?}");
                seen += 1;
            }
            let factorial: usize = (1..=n).product::<usize>().max(1);
            assert_eq!(seen, factorial);
        }
    }

    #[test]
    fn lex_rank_round_trip() {
        for n in [0usize, 1, 4, 5] {
            for (expected_rank, (p, _)) in LexPermutations::new(n).enumerate() {
                assert_eq!(p.lex_rank().unwrap(), expected_rank as u64);
                let q = Permutation::from_lex_rank(n, expected_rank as u64).unwrap();
                assert_eq!(q, p);
            }
        }
        assert!(Permutation::from_lex_rank(3, 6).is_err());
    }

    #[test]
    fn inversion_symmetry_under_reversal() {
        // reversing the positions of sigma complements the inversion count
        for (p, inv) in LexPermutations::new(5) {
            let mut rev = p.images().to_vec();
            rev.reverse();
            let r = Permutation::new(rev).unwrap();
            assert_eq!(inv + r.inversion_count(), 5 * 4 / 2);
        }
    }
}
