//! Explicit polynomials in `x_1..x_N` and Grassmann variables `θ_1..θ_N`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::EngineError;
use crate::algebra::RatFunc;
use crate::superpartition::SuperPartition;

/// The ring operations a concrete coefficient needs.
pub trait Coefficient: Clone + PartialEq + fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn negate(&self) -> Self;
}

impl Coefficient for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negate(&self) -> Self {
        -self
    }
}

impl Coefficient for RatFunc {
    fn zero() -> Self {
        RatFunc::zero()
    }
    fn one() -> Self {
        RatFunc::one()
    }
    fn is_zero(&self) -> bool {
        RatFunc::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self.add(other)
    }
    fn times(&self, other: &Self) -> Self {
        self.mul(other)
    }
    fn negate(&self) -> Self {
        self.neg()
    }
}

/// `θ_{i_1}···θ_{i_k} x^e` with `i_1 < .. < i_k` encoded as a bitmask
/// (bit `i-1` for `θ_i`).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Term {
    pub theta: u32,
    pub exps: Vec<u32>,
}

impl Term {
    pub fn theta_count(&self) -> u32 {
        self.theta.count_ones()
    }

    pub fn x_degree(&self) -> u32 {
        self.exps.iter().sum()
    }
}

/// Sign of `θ_A θ_B` rewritten in ascending order, or `None` if they overlap.
fn merge_sign(a: u32, b: u32) -> Option<bool> {
    if a & b != 0 {
        return None;
    }
    let mut inversions = 0;
    let mut rest = b;
    while rest != 0 {
        let j = rest.trailing_zeros();
        inversions += (a >> (j + 1)).count_ones();
        rest &= rest - 1;
    }
    Some(inversions % 2 == 1)
}

/// Parity of the permutation sorting `seq`.
fn sort_parity(seq: &[usize]) -> bool {
    let mut odd = false;
    for i in 0..seq.len() {
        for j in i + 1..seq.len() {
            if seq[i] > seq[j] {
                odd = !odd;
            }
        }
    }
    odd
}

#[derive(Clone, PartialEq)]
pub struct ConcreteSuperPoly<C = RatFunc> {
    nvars: usize,
    terms: BTreeMap<Term, C>,
}

impl<C: Coefficient> ConcreteSuperPoly<C> {
    pub fn zero(nvars: usize) -> Self {
        assert!(nvars <= 32, "at most 32 Grassmann variables");
        ConcreteSuperPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(Term { theta: 0, exps: vec![0; nvars] }, C::one());
        p
    }

    /// `θ_i`, 1-based.
    pub fn theta(nvars: usize, i: usize) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(Term { theta: 1 << (i - 1), exps: vec![0; nvars] }, C::one());
        p
    }

    /// `x_i^k`, 1-based.
    pub fn x(nvars: usize, i: usize, k: u32) -> Self {
        let mut exps = vec![0; nvars];
        exps[i - 1] = k;
        let mut p = Self::zero(nvars);
        p.add_term(Term { theta: 0, exps }, C::one());
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Term, &C)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, term: &Term) -> C {
        self.terms.get(term).cloned().unwrap_or_else(C::zero)
    }

    pub fn add_term(&mut self, term: Term, c: C) {
        assert_eq!(term.exps.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&term) {
            Some(v) => {
                let s = v.plus(&c);
                if s.is_zero() {
                    self.terms.remove(&term);
                } else {
                    *v = s;
                }
            }
            None => {
                self.terms.insert(term, c);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (t, c) in &other.terms {
            out.add_term(t.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, k: &C) -> Self {
        let mut out = Self::zero(self.nvars);
        for (t, c) in &self.terms {
            out.add_term(t.clone(), c.times(k));
        }
        out
    }

    pub fn multiply(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut out = Self::zero(self.nvars);
        for (ta, ca) in &self.terms {
            for (tb, cb) in &other.terms {
                let Some(odd) = merge_sign(ta.theta, tb.theta) else { continue };
                let exps = ta.exps.iter().zip(&tb.exps).map(|(a, b)| a + b).collect();
                let c = ca.times(cb);
                out.add_term(Term { theta: ta.theta | tb.theta, exps }, if odd { c.negate() } else { c });
            }
        }
        out
    }

    /// Image under the simultaneous exchange `x_i <-> x_{i+1}`, `θ_i <-> θ_{i+1}` (1-based `i`).
    pub fn swap_adjacent(&self, i: usize) -> Self {
        let (a, b) = (i - 1, i);
        let mut out = Self::zero(self.nvars);
        for (t, c) in &self.terms {
            let mut exps = t.exps.clone();
            exps.swap(a, b);
            let (ha, hb) = (t.theta >> a & 1, t.theta >> b & 1);
            let theta = (t.theta & !(1 << a) & !(1 << b)) | (hb << a) | (ha << b);
            let c = if ha == 1 && hb == 1 { c.negate() } else { c.clone() };
            out.add_term(Term { theta, exps }, c);
        }
        out
    }

    pub fn is_symmetric(&self) -> bool {
        (1..self.nvars).all(|i| &self.swap_adjacent(i) == self)
    }

    pub fn map_coeffs<D: Coefficient>(&self, f: impl Fn(&C) -> D) -> ConcreteSuperPoly<D> {
        let mut out = ConcreteSuperPoly::zero(self.nvars);
        for (t, c) in &self.terms {
            out.add_term(t.clone(), f(c));
        }
        out
    }

    /// `Σ θ_i x_i^k`
    pub fn ptilde(nvars: usize, k: u32) -> Self {
        let mut out = Self::zero(nvars);
        for i in 1..=nvars {
            out = out.add(&Self::theta(nvars, i).multiply(&Self::x(nvars, i, k)));
        }
        out
    }

    /// `Σ x_i^k`
    pub fn p(nvars: usize, k: u32) -> Self {
        let mut out = Self::zero(nvars);
        for i in 1..=nvars {
            out = out.add(&Self::x(nvars, i, k));
        }
        out
    }

    /// Coefficients of the canonical terms `θ_1···θ_m x_1^{Λ_1}···` of every
    /// superpartition of degree `(n|m)`.
    pub fn to_basis_monomial(&self, n: u32, m: u32) -> Result<BTreeMap<SuperPartition, C>, EngineError> {
        if self.terms.keys().any(|t| t.theta_count() != m || t.x_degree() != n) {
            return Err(EngineError::NotHomogeneous { n, m });
        }
        let mut out = BTreeMap::new();
        for l in SuperPartition::enumerate(n, m) {
            if l.length() > self.nvars {
                return Err(EngineError::TooFewVariables { needed: l.length(), got: self.nvars });
            }
            let c = self.coefficient(&canonical_term(&l, self.nvars));
            if !c.is_zero() {
                out.insert(l, c);
            }
        }
        Ok(out)
    }
}

/// `θ_1···θ_m x_1^{Λa_1}···x_m^{Λa_m} x_{m+1}^{Λs_1}···`
pub fn canonical_term(l: &SuperPartition, nvars: usize) -> Term {
    let mut exps: Vec<u32> = l.fermionic().iter().chain(l.bosonic()).copied().collect();
    exps.resize(nvars, 0);
    Term { theta: (1u32 << l.m()) - 1, exps }
}

/// Next multiset permutation in lexicographic order; false after the last.
fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).unwrap();
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

fn require(needed: usize, got: usize) -> Result<(), EngineError> {
    if needed > got {
        return Err(EngineError::TooFewVariables { needed, got });
    }
    Ok(())
}

/// `m_Λ` in `N` variables: the sum over distinct permutations of the canonical term.
pub fn expand_monomial(l: &SuperPartition, nvars: usize) -> Result<ConcreteSuperPoly<BigInt>, EngineError> {
    require(l.length(), nvars)?;
    let m = l.m() as usize;
    // Keys 0..m name the fermionic parts; bosonic value v (zeros included) is m + v.
    let mut keys: Vec<usize> = (0..m).collect();
    keys.extend(l.bosonic().iter().map(|&b| m + b as usize));
    keys.resize(nvars, m);
    keys.sort_unstable();
    let mut out = ConcreteSuperPoly::zero(nvars);
    loop {
        let mut pos = vec![0; m];
        let mut exps = vec![0; nvars];
        let mut theta = 0u32;
        for (i, &k) in keys.iter().enumerate() {
            if k < m {
                pos[k] = i;
                exps[i] = l.fermionic()[k];
                theta |= 1 << i;
            } else {
                exps[i] = (k - m) as u32;
            }
        }
        let c = BigInt::from(if sort_parity(&pos) { -1 } else { 1 });
        out.add_term(Term { theta, exps }, c);
        if !next_permutation(&mut keys) {
            return Ok(out);
        }
    }
}

/// `p̃_{Λa_1}···p̃_{Λa_m} p_{Λs_1}···`
pub fn expand_powersum(l: &SuperPartition, nvars: usize) -> Result<ConcreteSuperPoly<BigInt>, EngineError> {
    require(l.m() as usize, nvars)?;
    let mut out = ConcreteSuperPoly::one(nvars);
    for &a in l.fermionic() {
        out = out.multiply(&ConcreteSuperPoly::ptilde(nvars, a));
    }
    for &b in l.bosonic() {
        out = out.multiply(&ConcreteSuperPoly::p(nvars, b));
    }
    Ok(out)
}

/// `ẽ_{Λa_1}···ẽ_{Λa_m} e_{Λs_1}···` with `ẽ_k = m_{(0;1^k)}` and `e_k = m_{(;1^k)}`.
pub fn expand_elementary(l: &SuperPartition, nvars: usize) -> Result<ConcreteSuperPoly<BigInt>, EngineError> {
    let mut out = ConcreteSuperPoly::one(nvars);
    for &a in l.fermionic() {
        let f = SuperPartition::new(vec![0], vec![1; a as usize]).expect("valid");
        out = out.multiply(&expand_monomial(&f, nvars)?);
    }
    for &b in l.bosonic() {
        let f = SuperPartition::new(vec![], vec![1; b as usize]).expect("valid");
        out = out.multiply(&expand_monomial(&f, nvars)?);
    }
    Ok(out)
}

impl<C: Coefficient> fmt::Debug for ConcreteSuperPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (t, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c:?})")?;
            for i in 0..self.nvars {
                if t.theta >> i & 1 == 1 {
                    write!(f, "θ{}", i + 1)?;
                }
            }
            for (i, e) in t.exps.iter().enumerate().filter(|(_, e)| **e > 0) {
                write!(f, "x{}^{}", i + 1, e)?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}
