//! Fast evaluators for matrices with structured support: stars, tridiagonal
//! bands, and general forests whose vertex labeling keeps transposition
//! weights additive.
//!
//! For a symmetric (or Hermitian) matrix whose support graph is a forest, the
//! only permutations with nonzero contribution are products of disjoint edge
//! transpositions, so the polynomial is a sum over matchings.  The
//! transposition swapping `i < j` has inversion count `2(j - i) - 1`, and the
//! matching formula assigns each edge that weight *additively*.  That is only
//! correct when every pair of disjoint edges `{i,j}`, `{k,l}` (with `i<j`,
//! `k<l`, `i<k`) is either separated (`i<j<k<l`) or nested (`i<k<l<j`);
//! crossing pairs break additivity.  [`validate_labeling`] checks the
//! condition, [`relabel_tree`] constructs a labeling that satisfies it, and
//! [`mu_permanent_tree`] refuses to run without it.

use crate::algebra::poly::MuPoly;
use crate::algebra::rational::GaussianRational;
use crate::error::{Error, Result};
use crate::expansion::{mu_permanent_laplace, mu_permanent_naive_capped, Axis, DEFAULT_NAIVE_CAP};
use crate::matrices::graph::SupportGraph;
use crate::matrices::matrix::SquareMatrix;
use crate::matrices::permutation::Permutation;

/// Outcome of checking every disjoint edge pair of a graph for label
/// crossings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabelingReport {
    violations: Vec<((usize, usize), (usize, usize))>,
}

impl LabelingReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    /// The crossing edge pairs, each edge in canonical `(min, max)` form.
    pub fn violations(&self) -> &[((usize, usize), (usize, usize))] {
        &self.violations
    }
}

/// Checks that no two vertex-disjoint edges cross: for edges `{i,j}` and
/// `{k,l}` with `i<j`, `k<l`, `i<k`, either `j < k` (separated) or `l < j`
/// (nested) must hold.
pub fn validate_labeling(g: &SupportGraph) -> LabelingReport {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let mut violations = Vec::new();
    for (x, &(a, b)) in edges.iter().enumerate() {
        for &(c, d) in &edges[x + 1..] {
            if a == c || a == d || b == c || b == d {
                continue;
            }
            let ((a, b), (c, d)) = if a < c { ((a, b), (c, d)) } else { ((c, d), (a, b)) };
            // Now a < c; separated means b < c, nested means d < b.
            if b > c && b < d {
                violations.push(((a, b), (c, d)));
            }
        }
    }
    LabelingReport { violations }
}

/// Produces a vertex relabeling under which [`validate_labeling`] passes, by
/// numbering each component in depth-first preorder from its smallest vertex.
///
/// With preorder numbers, the labels spanned by any edge form an interval
/// `[parent, last descendant of child]`, and two such intervals are either
/// nested or disjoint — exactly the allowed configurations.
///
/// The returned permutation maps old labels to new ones; apply it with
/// [`SquareMatrix::relabel`] or [`SupportGraph::relabel`].
pub fn relabel_tree(g: &SupportGraph) -> Result<Permutation> {
    if !g.is_forest() {
        return Err(Error::NotForest);
    }
    let n = g.n();
    let mut new_label = vec![usize::MAX; n];
    let mut next = 0usize;
    for comp in g.components() {
        let root = comp[0];
        let mut stack = vec![root];
        while let Some(v) = stack.pop() {
            if new_label[v] != usize::MAX {
                continue;
            }
            new_label[v] = next;
            next += 1;
            // Push in descending order so the smallest neighbor is visited
            // first.
            for &w in g.neighbors(v).iter().rev() {
                if new_label[w] == usize::MAX {
                    stack.push(w);
                }
            }
        }
    }
    Permutation::new(new_label)
}

/// A set of pairwise vertex-disjoint edges, each in `(min, max)` form.
pub type Matching = Vec<(usize, usize)>;

/// Enumerates every matching of the graph, including the empty one.
///
/// Exponential; intended as an oracle for the tree evaluator and for tests.
pub fn enumerate_matchings(g: &SupportGraph) -> Vec<Matching> {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let mut used = vec![false; g.n()];
    let mut current = Vec::new();
    let mut out = Vec::new();
    fn go(
        edges: &[(usize, usize)],
        idx: usize,
        used: &mut [bool],
        current: &mut Matching,
        out: &mut Vec<Matching>,
    ) {
        if idx == edges.len() {
            out.push(current.clone());
            return;
        }
        go(edges, idx + 1, used, current, out);
        let (a, b) = edges[idx];
        if !used[a] && !used[b] {
            used[a] = true;
            used[b] = true;
            current.push((a, b));
            go(edges, idx + 1, used, current, out);
            current.pop();
            used[a] = false;
            used[b] = false;
        }
    }
    go(&edges, 0, &mut used, &mut current, &mut out);
    out
}

/// The permutation that transposes each matched pair and fixes everything
/// else.
pub fn matching_permutation(n: usize, matching: &Matching) -> Permutation {
    let mut images: Vec<usize> = (0..n).collect();
    for &(a, b) in matching {
        images.swap(a, b);
    }
    Permutation::new(images).expect("disjoint swaps keep a bijection")
}

/// Sums the matching formula term by term: each matching contributes the
/// product of unmatched diagonal entries times `a_ij * a_ji * mu^(2(j-i)-1)`
/// per edge.
///
/// This is the additive-exponent formula itself, with no labeling check; it
/// agrees with the true polynomial only on valid-labeled forests.  Kept as an
/// independent oracle for [`mu_permanent_tree`] and for demonstrating how
/// crossing labels break the formula.
pub fn mu_permanent_tree_by_enumeration(a: &SquareMatrix) -> MuPoly {
    let n = a.n();
    let g = SupportGraph::from_matrix(a);
    let mut total = MuPoly::zero();
    for matching in enumerate_matchings(&g) {
        let mut covered = vec![false; n];
        let mut coeff = GaussianRational::one();
        let mut degree = 0usize;
        for &(i, j) in &matching {
            covered[i] = true;
            covered[j] = true;
            coeff *= &(a.entry(i, j) * a.entry(j, i));
            degree += 2 * (j - i) - 1;
        }
        for (v, &c) in covered.iter().enumerate() {
            if !c {
                coeff *= a.entry(v, v);
            }
        }
        total = &total + &MuPoly::monomial(coeff, degree);
    }
    total
}

fn require_symmetric_or_hermitian(a: &SquareMatrix) -> Result<()> {
    if a.is_symmetric() || a.is_hermitian() {
        Ok(())
    } else {
        Err(Error::NotHermitian)
    }
}

/// Closed form for a symmetric/Hermitian matrix whose support graph is a star
/// centered at vertex 0 (isolated vertices allowed):
/// `prod(a_ii) + sum_j a_0j * a_j0 * (prod_{i != 0,j} a_ii) * mu^(2j-1)`.
pub fn mu_permanent_star(a: &SquareMatrix) -> Result<MuPoly> {
    let n = a.n();
    if n == 0 {
        return Ok(MuPoly::one());
    }
    require_symmetric_or_hermitian(a)?;
    let g = SupportGraph::from_matrix(a);
    if !g.is_star_at_zero() {
        return Err(Error::NotStar);
    }
    let mut p = MuPoly::constant(a.diagonal_product());
    for j in g.neighbors(0) {
        let mut coeff = a.entry(0, j) * a.entry(j, 0);
        for i in 0..n {
            if i != 0 && i != j {
                coeff *= a.entry(i, i);
            }
        }
        p = &p + &MuPoly::monomial(coeff, 2 * j - 1);
    }
    Ok(p)
}

/// Three-term recurrence for tridiagonal matrices:
/// `P_k = a_kk * P_{k-1} + mu * a_{k,k-1} * a_{k-1,k} * P_{k-2}`, with
/// `P_{-1} = 1`.  No symmetry is required.
pub fn mu_permanent_tridiagonal(a: &SquareMatrix) -> Result<MuPoly> {
    let n = a.n();
    for i in 0..n {
        for j in 0..n {
            if i.abs_diff(j) > 1 && !a.entry(i, j).is_zero() {
                return Err(Error::NotTridiagonal { i, j });
            }
        }
    }
    let mut prev2 = MuPoly::one();
    if n == 0 {
        return Ok(prev2);
    }
    let mut prev = MuPoly::constant(a.entry(0, 0).clone());
    for k in 1..n {
        let band = a.entry(k, k - 1) * a.entry(k - 1, k);
        let next = &prev.scale(a.entry(k, k)) + &(&MuPoly::monomial(band, 1) * &prev2);
        prev2 = prev;
        prev = next;
    }
    Ok(prev)
}

/// Matching-sum evaluator for symmetric/Hermitian forest-supported matrices,
/// computed by dynamic programming over each tree in linear polynomial
/// operations.
///
/// Refuses matrices whose labeling fails [`validate_labeling`]: the additive
/// edge weights `mu^(2(j-i)-1)` are exactly what a valid labeling licenses,
/// and relabeling silently would change which polynomial is returned.  Use
/// [`relabel_tree`] first and conjugate explicitly when that is intended.
pub fn mu_permanent_tree(a: &SquareMatrix) -> Result<MuPoly> {
    require_symmetric_or_hermitian(a)?;
    let g = SupportGraph::from_matrix(a);
    if !g.is_forest() {
        return Err(Error::NotForest);
    }
    let report = validate_labeling(&g);
    if !report.is_valid() {
        return Err(Error::InvalidLabeling {
            violations: report.violations().len(),
        });
    }
    let n = a.n();
    // complete[v]: subtree at v fully resolved (v matched within or on its
    // diagonal).  open[v]: children's subtrees resolved, v still uncovered.
    let mut complete = vec![MuPoly::zero(); n];
    let mut open = vec![MuPoly::zero(); n];
    let mut total = MuPoly::one();
    for comp in g.components() {
        let root = comp[0];
        // Preorder with explicit parents, children in ascending order.
        let mut order = Vec::with_capacity(comp.len());
        let mut children: Vec<Vec<usize>> = vec![Vec::new(); n];
        let mut stack = vec![(root, usize::MAX)];
        let mut seen = vec![false; n];
        while let Some((v, parent)) = stack.pop() {
            if seen[v] {
                continue;
            }
            seen[v] = true;
            order.push(v);
            if parent != usize::MAX {
                children[parent].push(v);
            }
            for &w in g.neighbors(v).iter().rev() {
                if !seen[w] {
                    stack.push((w, v));
                }
            }
        }
        for &v in order.iter().rev() {
            let kids = &children[v];
            let k = kids.len();
            let mut prefix = vec![MuPoly::one(); k + 1];
            for (i, &c) in kids.iter().enumerate() {
                prefix[i + 1] = &prefix[i] * &complete[c];
            }
            let mut suffix = vec![MuPoly::one(); k + 1];
            for (i, &c) in kids.iter().enumerate().rev() {
                suffix[i] = &suffix[i + 1] * &complete[c];
            }
            open[v] = prefix[k].clone();
            let mut resolved = open[v].scale(a.entry(v, v));
            for (i, &c) in kids.iter().enumerate() {
                let (lo, hi) = (v.min(c), v.max(c));
                let w = MuPoly::monomial(a.entry(v, c) * a.entry(c, v), 2 * (hi - lo) - 1);
                let through_edge = &(&w * &open[c]) * &(&prefix[i] * &suffix[i + 1]);
                resolved = &resolved + &through_edge;
            }
            complete[v] = resolved;
        }
        total = &total * &complete[root];
    }
    Ok(total)
}

/// Picks the cheapest applicable algorithm: star closed form, tridiagonal
/// recurrence, tree DP for valid-labeled symmetric forests, then the generic
/// expansion (term enumeration up to `naive_cap`, Laplace with zero pruning
/// beyond it).
pub fn mu_permanent_auto(a: &SquareMatrix, naive_cap: usize) -> MuPoly {
    let symish = a.is_symmetric() || a.is_hermitian();
    let g = SupportGraph::from_matrix(a);
    if symish && g.is_star_at_zero() {
        return mu_permanent_star(a).expect("star preconditions checked");
    }
    if g.is_path_support() {
        return mu_permanent_tridiagonal(a).expect("band checked");
    }
    if symish && g.is_forest() && validate_labeling(&g).is_valid() {
        return mu_permanent_tree(a).expect("tree preconditions checked");
    }
    if a.n() <= naive_cap {
        mu_permanent_naive_capped(a, naive_cap).expect("within cap")
    } else {
        mu_permanent_laplace(a, Axis::Row, 0).expect("laplace is total")
    }
}

/// Evaluates the polynomial at a point, dispatching through
/// [`mu_permanent_auto`].  At -1 this is the determinant, at 0 the diagonal
/// product, at 1 the permanent.
pub fn specialize(a: &SquareMatrix, mu: &GaussianRational) -> GaussianRational {
    mu_permanent_auto(a, DEFAULT_NAIVE_CAP).eval(mu)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expansion::mu_permanent_naive;
    use crate::matrices::gen::{gen_tree, gen_tree_pd, Seed, TreeShape};
    use num_traits::Signed;

    fn graph(n: usize, edges: &[(usize, usize)]) -> SupportGraph {
        SupportGraph::new(n, edges.iter().copied()).unwrap()
    }

    /// Deterministic symmetric matrix supported on `g`, with nonzero
    /// diagonal.
    fn sym_matrix_on(g: &SupportGraph) -> SquareMatrix {
        let mut a = SquareMatrix::zero(g.n());
        for i in 0..g.n() {
            a.set_entry(i, i, GaussianRational::from_int(2 + i as i64));
        }
        for (i, j) in g.edges() {
            let v = GaussianRational::from_int(1 + (i + 2 * j) as i64);
            a.set_entry(i, j, v.clone());
            a.set_entry(j, i, v);
        }
        a
    }

    #[test]
    fn crossing_pair_is_the_only_invalid_configuration() {
        // 0-based translations of the labeled figures: a path visited in the
        // order 0-4-1-3-2, a quadrilateral with a chord, and an 8-vertex tree.
        for (n, edges) in [
            (5, vec![(0, 4), (1, 4), (1, 3), (2, 3)]),
            (4, vec![(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)]),
            (5, vec![(3, 4), (0, 4), (0, 2), (1, 2)]),
            (8, vec![(0, 1), (1, 6), (5, 6), (4, 5), (1, 7), (2, 6), (2, 3)]),
        ] {
            let report = validate_labeling(&graph(n, &edges));
            assert!(report.is_valid(), "expected valid: {edges:?}");
        }

        let report = validate_labeling(&graph(4, &[(0, 2), (1, 3)]));
        assert!(!report.is_valid());
        assert_eq!(report.violations(), &[((0, 2), (1, 3))]);
    }

    #[test]
    fn shared_vertices_never_count_as_crossings() {
        // Star: every pair of edges shares the center.
        let star = graph(6, &[(0, 1), (0, 2), (0, 3), (0, 4), (0, 5)]);
        assert!(validate_labeling(&star).is_valid());
    }

    #[test]
    fn preorder_relabeling_passes_the_validator() {
        // Path visited in vertex order 2-0-3-1-4 has crossings before
        // relabeling.
        let path = graph(5, &[(0, 2), (0, 3), (1, 3), (1, 4)]);
        assert!(!validate_labeling(&path).is_valid());
        let pi = relabel_tree(&path).unwrap();
        assert!(validate_labeling(&path.relabel(&pi)).is_valid());

        for seed in 0..20u64 {
            let n = 3 + (seed as usize % 10);
            let g = gen_tree(n, Seed(900 + seed), TreeShape::Random).unwrap();
            let pi = relabel_tree(&g).unwrap();
            assert!(validate_labeling(&g.relabel(&pi)).is_valid(), "seed {seed}");
        }
    }

    #[test]
    fn relabeling_requires_a_forest() {
        let cycle = graph(3, &[(0, 1), (1, 2), (0, 2)]);
        assert!(matches!(relabel_tree(&cycle), Err(Error::NotForest)));
    }

    #[test]
    fn matchings_of_a_path_are_fibonacci_many() {
        // A path on n vertices has F(n+1) matchings (empty one included).
        let path = graph(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]);
        assert_eq!(enumerate_matchings(&path).len(), 8);
        let single = graph(2, &[(0, 1)]);
        assert_eq!(enumerate_matchings(&single).len(), 2);
    }

    #[test]
    fn matching_exponents_add_exactly_when_labels_are_valid() {
        let fixtures = [
            (5, vec![(0, 4), (1, 4), (1, 3), (2, 3)]),
            (8, vec![(0, 1), (1, 6), (5, 6), (4, 5), (1, 7), (2, 6), (2, 3)]),
            (6, vec![(0, 1), (0, 2), (0, 3), (0, 4), (0, 5)]),
        ];
        for (n, edges) in fixtures {
            let g = graph(n, &edges);
            assert!(validate_labeling(&g).is_valid());
            for m in enumerate_matchings(&g) {
                let perm = matching_permutation(n, &m);
                let additive: usize = m.iter().map(|&(i, j)| 2 * (j - i) - 1).sum();
                assert_eq!(perm.inversion_count(), additive, "matching {m:?}");
            }
        }
        // The crossing pair underestimates: swapping both (0,2) and (1,3)
        // yields 4 inversions, not 3 + 3.
        let m = vec![(0, 2), (1, 3)];
        assert_eq!(matching_permutation(4, &m).inversion_count(), 4);
    }

    #[test]
    fn star_closed_form_matches_hand_expansion() {
        // Support 0-1 and 0-2 with a_12 = 0.
        let a = SquareMatrix::from_int_rows(&[&[2, 3, 5], &[3, 7, 0], &[5, 0, 11]]).unwrap();
        let p = mu_permanent_star(&a).unwrap();
        // 2*7*11 + 3*3*11 mu + 5*5*7 mu^3
        assert_eq!(p, MuPoly::from_int_coeffs(&[154, 99, 0, 175]));
        assert_eq!(p, mu_permanent_naive(&a).unwrap());
    }

    #[test]
    fn star_evaluator_agrees_with_naive_on_random_stars() {
        for seed in 0..6u64 {
            let a = gen_tree_pd(7, Seed(40 + seed), TreeShape::Star).unwrap();
            assert_eq!(
                mu_permanent_star(&a).unwrap(),
                mu_permanent_naive(&a).unwrap(),
                "seed {seed}"
            );
        }
    }

    #[test]
    fn star_evaluator_rejects_off_center_support_and_asymmetry() {
        let path = SquareMatrix::from_int_rows(&[&[1, 1, 0], &[1, 1, 1], &[0, 1, 1]]).unwrap();
        assert!(matches!(mu_permanent_star(&path), Err(Error::NotStar)));
        let skew = SquareMatrix::from_int_rows(&[&[1, 2], &[3, 1]]).unwrap();
        assert!(matches!(mu_permanent_star(&skew), Err(Error::NotHermitian)));
    }

    #[test]
    fn star_with_isolated_vertices_keeps_their_diagonal_factors() {
        // Vertices 2 and 3 are isolated; edge 0-1 only.
        let a =
            SquareMatrix::from_int_rows(&[&[2, 3, 0, 0], &[3, 5, 0, 0], &[0, 0, 7, 0], &[0, 0, 0, 11]])
                .unwrap();
        let p = mu_permanent_star(&a).unwrap();
        assert_eq!(p, MuPoly::from_int_coeffs(&[770, 693]));
        assert_eq!(p, mu_permanent_naive(&a).unwrap());
    }

    #[test]
    fn hermitian_star_multiplies_conjugate_pairs() {
        let mut a = SquareMatrix::zero(2);
        a.set_entry(0, 0, GaussianRational::from_int(2));
        a.set_entry(1, 1, GaussianRational::from_int(3));
        a.set_entry(0, 1, GaussianRational::from_parts(1, 1, 2, 1)); // 1 + 2i
        a.set_entry(1, 0, GaussianRational::from_parts(1, 1, -2, 1)); // conjugate
        let p = mu_permanent_star(&a).unwrap();
        // 6 + |1+2i|^2 mu = 6 + 5 mu
        assert_eq!(p, MuPoly::from_int_coeffs(&[6, 5]));
        assert_eq!(p, mu_permanent_naive(&a).unwrap());
    }

    #[test]
    fn tridiagonal_recurrence_matches_hand_expansion() {
        let a = SquareMatrix::from_int_rows(&[&[1, 2], &[3, 4]]).unwrap();
        assert_eq!(
            mu_permanent_tridiagonal(&a).unwrap(),
            MuPoly::from_int_coeffs(&[4, 6])
        );

        // a_11 a_22 a_33 + (a_11 a_23 a_32 + a_12 a_21 a_33) mu
        let b = SquareMatrix::from_int_rows(&[&[2, 3, 0], &[5, 7, 11], &[0, 13, 17]]).unwrap();
        assert_eq!(
            mu_permanent_tridiagonal(&b).unwrap(),
            MuPoly::from_int_coeffs(&[2 * 7 * 17, 2 * 11 * 13 + 3 * 5 * 17])
        );
        assert_eq!(
            mu_permanent_tridiagonal(&b).unwrap(),
            mu_permanent_naive(&b).unwrap()
        );
    }

    #[test]
    fn tridiagonal_needs_no_symmetry_and_matches_naive() {
        for seed in 0..6u64 {
            let mut a = SquareMatrix::zero(8);
            let base = crate::matrices::gen::gen_int_matrix(8, Seed(70 + seed), -9, 9);
            for i in 0..8usize {
                for j in 0..8 {
                    if i.abs_diff(j) <= 1 {
                        a.set_entry(i, j, base.entry(i, j).clone());
                    }
                }
            }
            assert_eq!(
                mu_permanent_tridiagonal(&a).unwrap(),
                mu_permanent_naive(&a).unwrap(),
                "seed {seed}"
            );
        }
    }

    #[test]
    fn tridiagonal_rejects_entries_off_the_band() {
        let a = SquareMatrix::from_int_rows(&[&[1, 0, 5], &[0, 1, 0], &[0, 0, 1]]).unwrap();
        assert!(matches!(
            mu_permanent_tridiagonal(&a),
            Err(Error::NotTridiagonal { i: 0, j: 2 })
        ));
    }

    #[test]
    fn tree_dp_collapses_to_the_band_and_star_forms_on_overlap() {
        let path = sym_matrix_on(&graph(3, &[(0, 1), (1, 2)]));
        assert_eq!(
            mu_permanent_tree(&path).unwrap(),
            mu_permanent_tridiagonal(&path).unwrap()
        );
        let star = sym_matrix_on(&graph(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]));
        assert_eq!(
            mu_permanent_tree(&star).unwrap(),
            mu_permanent_star(&star).unwrap()
        );
    }

    #[test]
    fn tree_dp_agrees_with_enumeration_and_naive() {
        for seed in 0..8u64 {
            let n = 4 + (seed as usize % 5);
            let g = gen_tree(n, Seed(300 + seed), TreeShape::Random).unwrap();
            let pi = relabel_tree(&g).unwrap();
            let a = sym_matrix_on(&g.relabel(&pi));
            let by_dp = mu_permanent_tree(&a).unwrap();
            assert_eq!(by_dp, mu_permanent_tree_by_enumeration(&a), "seed {seed}");
            assert_eq!(by_dp, mu_permanent_naive(&a).unwrap(), "seed {seed}");
        }
    }

    #[test]
    fn tree_dp_handles_forests_with_isolated_vertices() {
        // Two components plus isolated vertex 4.
        let g = graph(5, &[(0, 1), (2, 3)]);
        assert!(validate_labeling(&g).is_valid());
        let a = sym_matrix_on(&g);
        assert_eq!(
            mu_permanent_tree(&a).unwrap(),
            mu_permanent_naive(&a).unwrap()
        );
    }

    #[test]
    fn tree_dp_refuses_crossing_labels_that_break_the_formula() {
        // Forest 0-2, 1-3: the formula gives the top term degree 6, the true
        // polynomial degree 4.
        let a =
            SquareMatrix::from_int_rows(&[&[1, 0, 2, 0], &[0, 1, 0, 3], &[2, 0, 1, 0], &[0, 3, 0, 1]])
                .unwrap();
        assert!(matches!(
            mu_permanent_tree(&a),
            Err(Error::InvalidLabeling { violations: 1 })
        ));
        let formula = mu_permanent_tree_by_enumeration(&a);
        let truth = mu_permanent_naive(&a).unwrap();
        assert_ne!(formula, truth);
        assert_eq!(formula.degree(), Some(6));
        assert_eq!(truth.degree(), Some(4));
        // The disagreement is exactly the double-transposition term.
        assert_eq!(formula.coeff(3), truth.coeff(3));
        assert_eq!(formula.coeff(6), truth.coeff(4));
    }

    #[test]
    fn tree_dp_rejects_cycles_and_asymmetry() {
        let cycle = sym_matrix_on(&graph(3, &[(0, 1), (1, 2), (0, 2)]));
        assert!(matches!(mu_permanent_tree(&cycle), Err(Error::NotForest)));
        let mut skew = sym_matrix_on(&graph(3, &[(0, 1), (1, 2)]));
        skew.set_entry(0, 1, GaussianRational::from_int(99));
        assert!(matches!(mu_permanent_tree(&skew), Err(Error::NotHermitian)));
    }

    #[test]
    fn positive_definite_tree_matrices_have_nonnegative_coefficients() {
        for (shape, seed) in [
            (TreeShape::Random, 11u64),
            (TreeShape::Star, 12),
            (TreeShape::Path, 13),
            (TreeShape::Random, 14),
        ] {
            let a = gen_tree_pd(6, Seed(seed), shape).unwrap();
            let g = SupportGraph::from_matrix(&a);
            let pi = relabel_tree(&g).unwrap();
            let p = mu_permanent_tree(&a.relabel(&pi)).unwrap();
            for c in p.coeffs() {
                assert!(c.is_real() && !c.re.is_negative(), "coefficient {c}");
            }
        }
    }

    #[test]
    fn auto_dispatch_agrees_with_naive_everywhere() {
        let star = gen_tree_pd(7, Seed(21), TreeShape::Star).unwrap();
        assert_eq!(
            mu_permanent_auto(&star, DEFAULT_NAIVE_CAP),
            mu_permanent_naive(&star).unwrap()
        );
        let path = gen_tree_pd(8, Seed(22), TreeShape::Path).unwrap();
        assert_eq!(
            mu_permanent_auto(&path, DEFAULT_NAIVE_CAP),
            mu_permanent_naive(&path).unwrap()
        );
        let g = gen_tree(7, Seed(23), TreeShape::Random).unwrap();
        let tree = sym_matrix_on(&g.relabel(&relabel_tree(&g).unwrap()));
        assert_eq!(
            mu_permanent_auto(&tree, DEFAULT_NAIVE_CAP),
            mu_permanent_naive(&tree).unwrap()
        );
        let dense = crate::matrices::gen::gen_int_matrix(5, Seed(24), -5, 5);
        assert_eq!(
            mu_permanent_auto(&dense, DEFAULT_NAIVE_CAP),
            mu_permanent_naive(&dense).unwrap()
        );
    }

    #[test]
    fn auto_dispatch_uses_pruned_expansion_past_the_cap() {
        // Sparse but cyclic support (pentagon plus diagonal padding) at n = 10
        // dispatches to the recursive expansion; the term enumeration with a
        // raised cap is the oracle.
        let mut a = SquareMatrix::identity(10);
        for k in 0..5 {
            let v = GaussianRational::from_int(k as i64 + 2);
            a.set_entry(k, (k + 1) % 5, v.clone());
            a.set_entry((k + 1) % 5, k, v);
        }
        let fast = mu_permanent_auto(&a, DEFAULT_NAIVE_CAP);
        assert_eq!(fast, mu_permanent_naive_capped(&a, 10).unwrap());
    }

    #[test]
    fn specialize_hits_determinant_diagonal_and_permanent() {
        let a = SquareMatrix::from_int_rows(&[&[1, 2], &[3, 4]]).unwrap();
        let at = |k: i64| specialize(&a, &GaussianRational::from_int(k));
        assert_eq!(at(-1), GaussianRational::from_int(-2));
        assert_eq!(at(0), GaussianRational::from_int(4));
        assert_eq!(at(1), GaussianRational::from_int(10));

        for seed in 0..5u64 {
            let b = crate::matrices::gen::gen_rational_matrix(5, Seed(500 + seed));
            assert_eq!(
                specialize(&b, &GaussianRational::from_int(-1)),
                b.determinant(),
                "seed {seed}"
            );
            assert_eq!(
                specialize(&b, &GaussianRational::from_int(1)),
                b.permanent(),
                "seed {seed}"
            );
            assert_eq!(
                specialize(&b, &GaussianRational::zero()),
                b.diagonal_product(),
                "seed {seed}"
            );
        }
    }
}
