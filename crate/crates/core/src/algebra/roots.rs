//! Exact real-root counting and sign analysis via Sturm chains.
//!
//! Everything here works over rational coefficients (inputs with imaginary
//! parts are rejected), with no floating point anywhere: root counts are
//! sign-variation differences, positivity certificates come from root-free
//! regions plus one exact sample, and intervals are refined by bisection at
//! rational points. Multiple roots are handled by square-free reduction, so
//! all counts are counts of *distinct* real roots.

use num_traits::{One, Signed, Zero};

use super::poly::MuPoly;
use super::rational::{rat, Rational};
use crate::error::{Error, Result};

/// Endpoint of a (half-)infinite interval.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Bound {
    NegInf,
    Finite(Rational),
    PosInf,
}

impl Bound {
    pub fn finite(r: Rational) -> Self {
        Bound::Finite(r)
    }

    fn le(&self, other: &Bound) -> bool {
        match (self, other) {
            (Bound::NegInf, _) | (_, Bound::PosInf) => true,
            (Bound::PosInf, _) | (_, Bound::NegInf) => false,
            (Bound::Finite(a), Bound::Finite(b)) => a <= b,
        }
    }
}

/// Open interval `(lo, hi)` with non-root rational endpoints isolating exactly
/// one distinct real root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootInterval {
    pub lo: Rational,
    pub hi: Rational,
}

// ---------------------------------------------------------------------------
// dense real polynomials (internal representation)
// ---------------------------------------------------------------------------

type RealPoly = Vec<Rational>;

fn trim(mut p: RealPoly) -> RealPoly {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

fn degree(p: &RealPoly) -> usize {
    debug_assert!(!p.is_empty());
    p.len() - 1
}

fn eval(p: &RealPoly, x: &Rational) -> Rational {
    let mut acc = Rational::zero();
    for c in p.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

fn derivative(p: &RealPoly) -> RealPoly {
    if p.len() <= 1 {
        return Vec::new();
    }
    trim(
        p.iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * Rational::from_integer(k.into()))
            .collect(),
    )
}

/// Remainder of `a` divided by `b` over the rationals (`b` nonzero).
fn rem(a: &RealPoly, b: &RealPoly) -> RealPoly {
    debug_assert!(!b.is_empty());
    let mut r = a.clone();
    let db = degree(b);
    let lead_b = b.last().unwrap().clone();
    while !r.is_empty() && degree(&r) >= db {
        let dr = degree(&r);
        let factor = r.last().unwrap() / &lead_b;
        for k in 0..=db {
            let adj = &factor * &b[k];
            r[dr - db + k] -= adj;
        }
        r = trim(r);
    }
    r
}

/// Monic gcd; `a`, `b` not both zero.
fn gcd(a: &RealPoly, b: &RealPoly) -> RealPoly {
    let (mut x, mut y) = (trim(a.clone()), trim(b.clone()));
    while !y.is_empty() {
        let r = rem(&x, &y);
        x = y;
        y = r;
    }
    let lead = x.last().cloned().unwrap_or_else(Rational::one);
    x.into_iter().map(|c| c / &lead).collect()
}

/// `p / gcd(p, p')`: same distinct roots, all simple.
fn squarefree_part(p: &RealPoly) -> RealPoly {
    if p.len() <= 1 {
        return p.clone();
    }
    let g = gcd(p, &derivative(p));
    if g.len() <= 1 {
        return p.clone();
    }
    exact_div(p, &g)
}

/// Exact quotient when `b` divides `a`.
fn exact_div(a: &RealPoly, b: &RealPoly) -> RealPoly {
    let mut r = a.clone();
    let db = degree(b);
    let lead_b = b.last().unwrap().clone();
    let mut q = vec![Rational::zero(); a.len() - b.len() + 1];
    while !r.is_empty() && degree(&r) >= db {
        let dr = degree(&r);
        let factor = r.last().unwrap() / &lead_b;
        q[dr - db] = factor.clone();
        for k in 0..=db {
            let adj = &factor * &b[k];
            r[dr - db + k] -= adj;
        }
        r = trim(r);
    }
    debug_assert!(r.is_empty(), "exact_div called with a non-divisor");
    trim(q)
}

fn sign(r: &Rational) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

/// All real roots lie in `(-bound, bound)`.
fn cauchy_bound(p: &RealPoly) -> Rational {
    let lead = p.last().unwrap().abs();
    let mut max = Rational::zero();
    for c in &p[..p.len() - 1] {
        let a = c.abs();
        if a > max {
            max = a;
        }
    }
    Rational::one() + max / lead
}

// ---------------------------------------------------------------------------
// Sturm chains
// ---------------------------------------------------------------------------

fn build_chain(p: &RealPoly) -> Vec<RealPoly> {
    let mut chain = vec![trim(p.clone())];
    let d = derivative(p);
    if !d.is_empty() {
        chain.push(d);
    }
    loop {
        let k = chain.len();
        if k < 2 || chain[k - 1].is_empty() {
            break;
        }
        let r = rem(&chain[k - 2], &chain[k - 1]);
        if r.is_empty() {
            break;
        }
        chain.push(r.into_iter().map(|c| -c).collect());
    }
    chain
}

fn sign_at_bound(p: &RealPoly, at: &Bound) -> i8 {
    if p.is_empty() {
        return 0;
    }
    match at {
        Bound::Finite(x) => sign(&eval(p, x)),
        Bound::PosInf => sign(p.last().unwrap()),
        Bound::NegInf => {
            let s = sign(p.last().unwrap());
            if degree(p) % 2 == 0 {
                s
            } else {
                -s
            }
        }
    }
}

/// Sign variations of the chain at a point, zeros skipped. With a square-free
/// head polynomial this count is right-continuous in the evaluation point, so
/// `variations(lo) - variations(hi)` is the number of distinct roots in
/// `(lo, hi]`.
fn variations(chain: &[RealPoly], at: &Bound) -> usize {
    let mut count = 0;
    let mut prev: i8 = 0;
    for p in chain {
        let s = sign_at_bound(p, at);
        if s == 0 {
            continue;
        }
        if prev != 0 && s != prev {
            count += 1;
        }
        prev = s;
    }
    count
}

/// Distinct roots of the (square-free) chain head in `(lo, hi]`.
fn count_chain(chain: &[RealPoly], lo: &Bound, hi: &Bound) -> usize {
    if !lo.le(hi) {
        return 0;
    }
    let vl = variations(chain, lo);
    let vh = variations(chain, hi);
    vl.saturating_sub(vh)
}

/// Public Sturm chain: starts with `p` and `p'`, each later entry the negated
/// remainder of the previous two, ending just before the zero remainder.
#[derive(Clone, Debug)]
pub struct SturmChain {
    polys: Vec<MuPoly>,
}

impl SturmChain {
    /// Build the chain of a nonzero real-coefficient polynomial.
    pub fn new(p: &MuPoly) -> Result<Self> {
        if p.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let rp = p.real_coeffs()?;
        let chain = build_chain(&rp);
        Ok(SturmChain {
            polys: chain
                .iter()
                .map(|q| {
                    MuPoly::from_coeffs(
                        q.iter()
                            .map(|c| super::rational::GaussianRational::from_rational(c.clone()))
                            .collect(),
                    )
                })
                .collect(),
        })
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    pub fn polys(&self) -> &[MuPoly] {
        &self.polys
    }
}

// ---------------------------------------------------------------------------
// root counting and isolation
// ---------------------------------------------------------------------------

fn real_input(p: &MuPoly) -> Result<RealPoly> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    p.real_coeffs()
}

/// Number of distinct real roots of `p` in the half-open interval `(lo, hi]`.
pub fn count_real_roots(p: &MuPoly, lo: &Bound, hi: &Bound) -> Result<usize> {
    let rp = real_input(p)?;
    let sf = squarefree_part(&rp);
    let chain = build_chain(&sf);
    Ok(count_chain(&chain, lo, hi))
}

/// Workspace holding one square-free polynomial with its chain.
struct Analyzer {
    poly: RealPoly, // original (sign queries)
    sf: RealPoly,   // square-free part (root queries)
    chain: Vec<RealPoly>,
}

impl Analyzer {
    fn new(rp: RealPoly) -> Self {
        let sf = squarefree_part(&rp);
        let chain = build_chain(&sf);
        Analyzer { poly: rp, sf, chain }
    }

    fn is_root(&self, x: &Rational) -> bool {
        eval(&self.sf, x).is_zero()
    }

    fn count(&self, lo: &Bound, hi: &Bound) -> usize {
        count_chain(&self.chain, lo, hi)
    }

    fn count_open_finite(&self, lo: &Rational, hi: &Rational) -> usize {
        let mut c = self.count(&Bound::Finite(lo.clone()), &Bound::Finite(hi.clone()));
        if self.is_root(hi) {
            c -= 1;
        }
        c
    }

    /// A point strictly between `lo` and `hi` where the polynomial does not
    /// vanish. Scans fraction ladders; terminates because roots are finite.
    fn split_point(&self, lo: &Rational, hi: &Rational) -> Rational {
        let gap = hi - lo;
        for denom in 2u64.. {
            for j in 1..denom {
                let cand = lo + &gap * rat(j as i64, denom as i64);
                if !self.is_root(&cand) {
                    return cand;
                }
            }
        }
        unreachable!("a polynomial has finitely many roots")
    }

    /// Isolating intervals for every distinct root in the open interval
    /// `(lo, hi)`; requires non-root endpoints.
    fn isolate_open(&self, lo: &Rational, hi: &Rational) -> Vec<RootInterval> {
        debug_assert!(!self.is_root(lo) && !self.is_root(hi));
        let n = self.count_open_finite(lo, hi);
        match n {
            0 => Vec::new(),
            1 => vec![RootInterval {
                lo: lo.clone(),
                hi: hi.clone(),
            }],
            _ => {
                let m = self.split_point(lo, hi);
                let mut out = self.isolate_open(lo, &m);
                out.extend(self.isolate_open(&m, hi));
                out
            }
        }
    }

    /// Shrink an isolating interval below `width`, keeping non-root endpoints.
    fn refine(&self, iv: &RootInterval, width: &Rational) -> RootInterval {
        let mut lo = iv.lo.clone();
        let mut hi = iv.hi.clone();
        while &hi - &lo > *width {
            let m = self.split_point(&lo, &hi);
            if self.count_open_finite(&lo, &m) == 1 {
                hi = m;
            } else {
                lo = m;
            }
        }
        RootInterval { lo, hi }
    }

    /// Where the unique root inside `iv` sits relative to `x`.
    fn root_position(&self, iv: &RootInterval, x: &Rational) -> std::cmp::Ordering {
        use std::cmp::Ordering::*;
        if &iv.hi <= x {
            return Less;
        }
        if &iv.lo >= x {
            return Greater;
        }
        // x strictly inside the isolating interval
        if self.is_root(x) {
            return Equal;
        }
        if self.count_open_finite(&iv.lo, x) == 1 {
            Less
        } else {
            Greater
        }
    }

    /// Clip `(lo, hi)` to a finite range guaranteed to contain every root.
    fn clip(&self, lo: &Bound, hi: &Bound) -> (Rational, Rational) {
        let m = cauchy_bound(&self.sf) + Rational::one();
        let a = match lo {
            Bound::Finite(x) => x.clone(),
            Bound::NegInf => -m.clone(),
            Bound::PosInf => m.clone(),
        };
        let b = match hi {
            Bound::Finite(x) => x.clone(),
            Bound::PosInf => m,
            Bound::NegInf => -m,
        };
        if a <= b {
            (a, b)
        } else {
            // interval lies entirely beyond all roots on one side; collapse
            // to the finite endpoint so samples stay inside the interval
            match lo {
                Bound::Finite(_) => (a.clone(), a),
                _ => (b.clone(), b),
            }
        }
    }

    /// Non-root sample points meeting every maximal sign region of the
    /// polynomial inside the closed interval `[lo, hi]`.
    fn sign_samples(&self, lo: &Bound, hi: &Bound) -> Vec<Rational> {
        let (a, b) = self.clip(lo, hi);
        if a == b {
            return if self.is_root(&a) { Vec::new() } else { vec![a] };
        }
        let a_eff = if self.is_root(&a) {
            self.nudge_in(&a, &b)
        } else {
            a.clone()
        };
        let b_eff = if self.is_root(&b) {
            self.nudge_in(&b, &a)
        } else {
            b.clone()
        };
        if a_eff >= b_eff {
            // both endpoints were roots and the nudges crossed: a thin
            // interval with at most interior regions around the midpoint
            let m = self.split_point(&a, &b);
            return vec![m];
        }
        let mut samples = vec![a_eff.clone()];
        for iv in self.isolate_open(&a_eff, &b_eff) {
            samples.push(iv.lo.clone());
            samples.push(iv.hi.clone());
        }
        samples.push(b_eff);
        samples.dedup();
        samples
    }

    /// A non-root point near `from`, moved toward `toward`, with no root
    /// strictly between `from` and the returned point.
    fn nudge_in(&self, from: &Rational, toward: &Rational) -> Rational {
        let mut step = (toward - from) / rat_two();
        loop {
            let cand = from + &step;
            if !self.is_root(&cand) {
                let (x, y) = if from < &cand {
                    (from.clone(), cand.clone())
                } else {
                    (cand.clone(), from.clone())
                };
                // no other root between: from itself is a root, excluded by openness
                if self.count_open_finite(&x, &y) == 0 {
                    return cand;
                }
            }
            step /= rat_two();
        }
    }
}

fn rat_two() -> Rational {
    Rational::from_integer(2.into())
}

/// True iff `p > 0` everywhere on the closed interval (finite endpoints
/// included): no distinct real roots inside and a positive sample value.
pub fn is_strictly_positive_on(p: &MuPoly, lo: &Bound, hi: &Bound) -> Result<bool> {
    if p.is_zero() {
        return Ok(false);
    }
    if !lo.le(hi) {
        return Err(Error::Parse("invalid interval: lo > hi".into()));
    }
    let rp = p.real_coeffs()?;
    let an = Analyzer::new(rp);
    // roots in [lo, hi] = roots in (lo, hi] plus a root exactly at a finite lo
    let mut roots = an.count(lo, hi);
    if let Bound::Finite(x) = lo {
        if an.is_root(x) {
            roots += 1;
        }
    }
    if roots > 0 {
        return Ok(false);
    }
    let sample = match (lo, hi) {
        (Bound::Finite(x), _) => eval(&an.poly, x),
        (_, Bound::Finite(x)) => eval(&an.poly, x),
        _ => eval(&an.poly, &Rational::zero()),
    };
    Ok(sign(&sample) > 0)
}

/// True iff `p >= 0` everywhere on the closed interval. Unlike strict
/// positivity this tolerates isolated touch-zeros (even-multiplicity roots),
/// decided exactly by sampling every maximal sign region.
pub fn is_nonnegative_on(p: &MuPoly, lo: &Bound, hi: &Bound) -> Result<bool> {
    Ok(find_negative_point(p, lo, hi)?.is_none())
}

/// An exact rational point in `[lo, hi]` where `p < 0`, if one exists.
pub fn find_negative_point(p: &MuPoly, lo: &Bound, hi: &Bound) -> Result<Option<Rational>> {
    if !lo.le(hi) {
        return Err(Error::Parse("invalid interval: lo > hi".into()));
    }
    if p.is_zero() {
        return Ok(None);
    }
    let rp = p.real_coeffs()?;
    let an = Analyzer::new(rp);
    for x in an.sign_samples(lo, hi) {
        if sign(&eval(&an.poly, &x)) < 0 {
            return Ok(Some(x));
        }
    }
    Ok(None)
}

/// Largest root where `p` changes sign, isolated to the requested width.
/// Returns `None` when `p` never changes sign (no odd-multiplicity roots).
pub fn largest_sign_change_root(p: &MuPoly, width: &Rational) -> Result<Option<RootInterval>> {
    let rp = real_input(p)?;
    if rp.len() <= 1 {
        return Ok(None);
    }
    let an = Analyzer::new(rp);
    let (a, b) = an.clip(&Bound::NegInf, &Bound::PosInf);
    let intervals = an.isolate_open(&a, &b);
    if intervals.is_empty() {
        return Ok(None);
    }
    // sign of each maximal region: left of all roots, between roots, right of all
    let mut region_signs = vec![sign(&eval(&an.poly, &a))];
    for iv in &intervals {
        region_signs.push(sign(&eval(&an.poly, &iv.hi)));
    }
    for i in (0..intervals.len()).rev() {
        if region_signs[i] != region_signs[i + 1] {
            return Ok(Some(an.refine(&intervals[i], width)));
        }
    }
    Ok(None)
}

/// Exact position of every sign-change root of `p` relative to `x`:
/// `(roots < x, roots == x, roots > x)`.
pub fn sign_change_roots_versus(p: &MuPoly, x: &Rational) -> Result<(usize, usize, usize)> {
    let rp = real_input(p)?;
    if rp.len() <= 1 {
        return Ok((0, 0, 0));
    }
    let an = Analyzer::new(rp);
    let (a, b) = an.clip(&Bound::NegInf, &Bound::PosInf);
    let intervals = an.isolate_open(&a, &b);
    let mut region_signs = vec![sign(&eval(&an.poly, &a))];
    for iv in &intervals {
        region_signs.push(sign(&eval(&an.poly, &iv.hi)));
    }
    let (mut below, mut at, mut above) = (0, 0, 0);
    for (i, iv) in intervals.iter().enumerate() {
        if region_signs[i] == region_signs[i + 1] {
            continue; // even multiplicity: no sign change
        }
        match an.root_position(iv, x) {
            std::cmp::Ordering::Less => below += 1,
            std::cmp::Ordering::Equal => at += 1,
            std::cmp::Ordering::Greater => above += 1,
        }
    }
    Ok((below, at, above))
}
