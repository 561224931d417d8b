//! Undirected support graphs of square matrices.
//!
//! The support graph of `A` has an edge `{i, j}` (for `i != j`) whenever
//! `a_ij` or `a_ji` is nonzero; diagonal entries never contribute. Structured
//! evaluators key off this graph: stars, paths, and general forests each get
//! specialized treatment.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::matrices::matrix::SquareMatrix;
use crate::matrices::permutation::Permutation;

/// Simple undirected graph on vertices `0..n`, edges stored as ordered pairs
/// `(min, max)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SupportGraph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl SupportGraph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::IndexOutOfRange { i: a, j: b, n });
            }
            if a == b {
                return Err(Error::Parse(format!("loop edge at vertex {a}")));
            }
            set.insert((a.min(b), a.max(b)));
        }
        Ok(SupportGraph { n, edges: set })
    }

    /// Off-diagonal support of a matrix.
    pub fn from_matrix(a: &SquareMatrix) -> SupportGraph {
        let n = a.n();
        let mut edges = BTreeSet::new();
        for i in 0..n {
            for j in i + 1..n {
                if !a.entry(i, j).is_zero() || !a.entry(j, i).is_zero() {
                    edges.insert((i, j));
                }
            }
        }
        SupportGraph { n, edges }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.contains(&(a.min(b), a.max(b)))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| a == v || b == v)
            .count()
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == v {
                    Some(b)
                } else if b == v {
                    Some(a)
                } else {
                    None
                }
            })
            .collect();
        out.sort_unstable();
        out
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut comp = Vec::new();
            let mut stack = vec![start];
            seen[start] = true;
            while let Some(v) = stack.pop() {
                comp.push(v);
                for w in self.neighbors(v) {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Acyclic (every component a tree): exactly `n - #components` edges and
    /// no cycle found by traversal.
    pub fn is_forest(&self) -> bool {
        self.num_edges() + self.components().len() == self.n
    }

    /// Connected single tree spanning all vertices.
    pub fn is_tree(&self) -> bool {
        self.is_forest() && self.components().len() == 1 && self.n > 0
    }

    /// Apply a vertex relabeling: edge `{a, b}` becomes `{pi(a), pi(b)}`.
    pub fn relabel(&self, pi: &Permutation) -> SupportGraph {
        assert_eq!(pi.n(), self.n, "permutation size mismatch");
        SupportGraph {
            n: self.n,
            edges: self
                .edges
                .iter()
                .map(|&(a, b)| {
                    let (x, y) = (pi.apply(a), pi.apply(b));
                    (x.min(y), x.max(y))
                })
                .collect(),
        }
    }

    /// Star with the hub at vertex 0 plus degree checks: true iff every edge
    /// touches vertex 0.
    pub fn is_star_at_zero(&self) -> bool {
        self.edges.iter().all(|&(a, _)| a == 0)
    }

    /// True iff all edges connect consecutive vertices (tridiagonal support).
    pub fn is_path_support(&self) -> bool {
        self.edges.iter().all(|&(a, b)| b == a + 1)
    }
}
