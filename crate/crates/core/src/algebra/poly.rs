//! Dense univariate polynomials in the weight variable `mu`.
//!
//! Coefficients are Gaussian rationals so the same type carries both the real
//! and the Hermitian cases. Degrees stay small (at most n(n-1)/2 for an n x n
//! matrix), so a dense coefficient vector is the right representation.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use super::rational::{rational_to_string, GaussianRational, Rational};
use crate::error::Result;

/// Polynomial in `mu`; `coeffs[k]` is the coefficient of `mu^k`.
/// Invariant: the last stored coefficient is nonzero (empty = zero polynomial).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MuPoly {
    coeffs: Vec<GaussianRational>,
}

impl MuPoly {
    pub fn zero() -> Self {
        MuPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        MuPoly::constant(GaussianRational::one())
    }

    pub fn constant(c: GaussianRational) -> Self {
        MuPoly::from_coeffs(vec![c])
    }

    /// `c * mu^k`.
    pub fn monomial(c: GaussianRational, k: usize) -> Self {
        if c.is_zero() {
            return MuPoly::zero();
        }
        let mut coeffs = vec![GaussianRational::zero(); k + 1];
        coeffs[k] = c;
        MuPoly { coeffs }
    }

    /// The variable itself.
    pub fn mu() -> Self {
        MuPoly::monomial(GaussianRational::one(), 1)
    }

    /// Build from ascending coefficients, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<GaussianRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        MuPoly { coeffs }
    }

    /// Real polynomial from integer coefficients (ascending), handy in tests.
    pub fn from_int_coeffs(ints: &[i64]) -> Self {
        MuPoly::from_coeffs(ints.iter().map(|&v| GaussianRational::from_int(v)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of the polynomial; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `mu^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> GaussianRational {
        self.coeffs.get(k).cloned().unwrap_or_else(GaussianRational::zero)
    }

    pub fn coeffs(&self) -> &[GaussianRational] {
        &self.coeffs
    }

    pub fn leading_coeff(&self) -> Option<&GaussianRational> {
        self.coeffs.last()
    }

    /// Multiply by `mu^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() || k == 0 {
            return self.clone();
        }
        let mut coeffs = vec![GaussianRational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        MuPoly { coeffs }
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        if c.is_zero() {
            return MuPoly::zero();
        }
        MuPoly::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Formal derivative d/dmu.
    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return MuPoly::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * &GaussianRational::from_int(k as i64))
            .collect();
        MuPoly::from_coeffs(coeffs)
    }

    /// Evaluate by Horner's rule.
    pub fn eval(&self, x: &GaussianRational) -> GaussianRational {
        let mut acc = GaussianRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    pub fn eval_rational(&self, x: &Rational) -> GaussianRational {
        self.eval(&GaussianRational::from_rational(x.clone()))
    }

    /// True when every coefficient has zero imaginary part.
    pub fn is_real(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_real())
    }

    /// Ascending real coefficients, or an error if any imaginary part is present.
    pub fn real_coeffs(&self) -> Result<Vec<Rational>> {
        self.coeffs.iter().map(|c| c.expect_real()).collect()
    }

    /// Render with an arbitrary variable name (`mu`, `q`, ...).
    pub fn to_human(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (sign, mag) = if c.is_real() && c.re < Rational::zero() {
                ("-", GaussianRational::from_rational(-c.re.clone()))
            } else {
                ("+", c.clone())
            };
            if out.is_empty() {
                if sign == "-" {
                    out.push('-');
                }
            } else {
                out.push_str(if sign == "-" { " - " } else { " + " });
            }
            let coeff_str = if mag.is_real() {
                rational_to_string(&mag.re)
            } else {
                format!("({mag})")
            };
            let is_unit = mag.is_real() && rational_to_string(&mag.re) == "1";
            match k {
                0 => out.push_str(&coeff_str),
                1 => {
                    if !is_unit {
                        out.push_str(&coeff_str);
                    }
                    out.push_str(var);
                }
                _ => {
                    if !is_unit {
                        out.push_str(&coeff_str);
                    }
                    out.push_str(&format!("{var}^{k}"));
                }
            }
        }
        out
    }
}

impl fmt::Display for MuPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_human("mu"))
    }
}

impl fmt::Debug for MuPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Add for &MuPoly {
    type Output = MuPoly;
    fn add(self, rhs: &MuPoly) -> MuPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            coeffs.push(&self.coeff(k) + &rhs.coeff(k));
        }
        MuPoly::from_coeffs(coeffs)
    }
}

impl Add for MuPoly {
    type Output = MuPoly;
    fn add(self, rhs: MuPoly) -> MuPoly {
        &self + &rhs
    }
}

impl Sub for &MuPoly {
    type Output = MuPoly;
    fn sub(self, rhs: &MuPoly) -> MuPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            coeffs.push(&self.coeff(k) - &rhs.coeff(k));
        }
        MuPoly::from_coeffs(coeffs)
    }
}

impl Sub for MuPoly {
    type Output = MuPoly;
    fn sub(self, rhs: MuPoly) -> MuPoly {
        &self - &rhs
    }
}

impl Mul for &MuPoly {
    type Output = MuPoly;
    fn mul(self, rhs: &MuPoly) -> MuPoly {
        if self.is_zero() || rhs.is_zero() {
            return MuPoly::zero();
        }
        let mut coeffs =
            vec![GaussianRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += &(a * b);
                }
            }
        }
        MuPoly::from_coeffs(coeffs)
    }
}

impl Mul for MuPoly {
    type Output = MuPoly;
    fn mul(self, rhs: MuPoly) -> MuPoly {
        &self * &rhs
    }
}

impl Neg for &MuPoly {
    type Output = MuPoly;
    fn neg(self) -> MuPoly {
        MuPoly::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Neg for MuPoly {
    type Output = MuPoly;
    fn neg(self) -> MuPoly {
        -&self
    }
}
