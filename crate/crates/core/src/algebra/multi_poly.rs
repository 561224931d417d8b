//! Sparse multivariate polynomials in `q_1, ..., q_m`.
//!
//! Used for the multivariable q-determinant of an n x n matrix, which lives in
//! the variables `q_1..q_{n-1}` (position n never contributes an inversion).
//! Terms are kept in a BTreeMap keyed by exponent tuple, so iteration order —
//! and therefore every serialization — is canonical.

use std::collections::BTreeMap;
use std::fmt;

use super::poly::MuPoly;
use super::rational::GaussianRational;

#[derive(Clone, PartialEq, Eq)]
pub struct MultiQPoly {
    num_vars: usize,
    terms: BTreeMap<Vec<u32>, GaussianRational>,
}

impl MultiQPoly {
    pub fn zero(num_vars: usize) -> Self {
        MultiQPoly {
            num_vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(num_vars: usize, c: GaussianRational) -> Self {
        let mut p = MultiQPoly::zero(num_vars);
        p.add_term(vec![0; num_vars], c);
        p
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Accumulate `c * q^exps`, dropping the term if the total cancels.
    pub fn add_term(&mut self, exps: Vec<u32>, c: GaussianRational) {
        assert_eq!(exps.len(), self.num_vars, "exponent tuple arity mismatch");
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exps);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = &*o.get() + &c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn coeff(&self, exps: &[u32]) -> GaussianRational {
        self.terms.get(exps).cloned().unwrap_or_else(GaussianRational::zero)
    }

    /// Terms in canonical (lexicographic exponent) order.
    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &GaussianRational)> {
        self.terms.iter()
    }

    pub fn add(&self, rhs: &MultiQPoly) -> MultiQPoly {
        assert_eq!(self.num_vars, rhs.num_vars, "variable arity mismatch");
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> MultiQPoly {
        let mut out = MultiQPoly::zero(self.num_vars);
        for (e, c) in self.terms() {
            out.add_term(e.clone(), -c);
        }
        out
    }

    pub fn sub(&self, rhs: &MultiQPoly) -> MultiQPoly {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &MultiQPoly) -> MultiQPoly {
        assert_eq!(self.num_vars, rhs.num_vars, "variable arity mismatch");
        let mut out = MultiQPoly::zero(self.num_vars);
        for (ea, ca) in self.terms() {
            for (eb, cb) in rhs.terms() {
                let exps = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(exps, ca * cb);
            }
        }
        out
    }

    pub fn scale(&self, c: &GaussianRational) -> MultiQPoly {
        let mut out = MultiQPoly::zero(self.num_vars);
        if c.is_zero() {
            return out;
        }
        for (e, a) in self.terms() {
            out.add_term(e.clone(), a * c);
        }
        out
    }

    /// Evaluate at a point, one value per variable.
    pub fn eval(&self, vals: &[GaussianRational]) -> GaussianRational {
        assert_eq!(vals.len(), self.num_vars, "evaluation arity mismatch");
        let mut acc = GaussianRational::zero();
        for (exps, c) in self.terms() {
            let mut term = c.clone();
            for (e, v) in exps.iter().zip(vals) {
                for _ in 0..*e {
                    term *= v;
                }
            }
            acc += &term;
        }
        acc
    }

    /// Substitute `q_i := -mu` for every i. Each term `c * prod q_i^{e_i}`
    /// becomes `c * (-1)^{sum e_i} * mu^{sum e_i}`.
    pub fn substitute_neg_mu(&self) -> MuPoly {
        let mut acc = MuPoly::zero();
        for (exps, c) in self.terms() {
            let total: u32 = exps.iter().sum();
            let signed = if total % 2 == 0 { c.clone() } else { -c };
            acc = &acc + &MuPoly::monomial(signed, total as usize);
        }
        acc
    }

    /// Collapse all variables to a single `q` (`q_i := q`), giving the
    /// one-variable q-determinant as a univariate polynomial.
    pub fn substitute_uniform(&self) -> MuPoly {
        let mut acc = MuPoly::zero();
        for (exps, c) in self.terms() {
            let total: u32 = exps.iter().sum();
            acc = &acc + &MuPoly::monomial(c.clone(), total as usize);
        }
        acc
    }

    /// Largest exponent of each variable across all terms.
    pub fn max_exponents(&self) -> Vec<u32> {
        let mut maxes = vec![0u32; self.num_vars];
        for (exps, _) in self.terms() {
            for (m, e) in maxes.iter_mut().zip(exps) {
                *m = (*m).max(*e);
            }
        }
        maxes
    }

    pub fn to_human(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (exps, c) in self.terms() {
            let negative = c.is_real() && c.re < num_traits::Zero::zero();
            let mag = if negative { -c } else { c.clone() };
            if out.is_empty() {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let mut mono = String::new();
            for (i, e) in exps.iter().enumerate() {
                match e {
                    0 => {}
                    1 => mono.push_str(&format!("q{}", i + 1)),
                    _ => mono.push_str(&format!("q{}^{}", i + 1, e)),
                }
            }
            let coeff_str = if mag.is_real() {
                super::rational::rational_to_string(&mag.re)
            } else {
                format!("({mag})")
            };
            if mono.is_empty() {
                out.push_str(&coeff_str);
            } else if coeff_str == "1" {
                out.push_str(&mono);
            } else {
                out.push_str(&coeff_str);
                out.push_str(&mono);
            }
        }
        out
    }
}

impl fmt::Display for MultiQPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_human())
    }
}

impl fmt::Debug for MultiQPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
