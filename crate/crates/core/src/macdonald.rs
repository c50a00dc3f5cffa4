//! Triangular orthogonalization over the dominance order, the consistency
//! bookkeeping of the over-determined systems, and the closed formulas for
//! norms and evaluations.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::{solve_square, AlgebraError, MPoly, RatFunc};
use crate::inner::{fermionic_sign, gram_matrix, Gram, WeightKind, ZWeight};
use crate::partition::Dominance;
use crate::superpartition::SuperPartition;
use crate::superpoly::{Basis, ConcreteSuperPoly, SymSuperPoly};

/// An incomparable pair whose orthogonality fails.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("<P_({built}), P_({against})> = {residual}")]
pub struct Inconsistency {
    pub built: SuperPartition,
    pub against: SuperPartition,
    pub residual: RatFunc,
}

/// Orthogonal family `P_Λ = m_Λ + lower terms` of one degree.
#[derive(Clone, Debug)]
pub struct Family {
    pub n: u32,
    pub m: u32,
    pub weight: ZWeight,
    gram: Arc<Gram>,
    /// Monomial coefficients of each `P_Λ`, indexed like the Gram matrix.
    coeffs: Vec<Vec<RatFunc>>,
    pub equations: usize,
    pub unknowns: usize,
}

fn position(index: &[SuperPartition], l: &SuperPartition) -> usize {
    index.iter().position(|o| o == l).unwrap_or_else(|| panic!("{l:?} is not of this degree"))
}

/// Build order: the reverse of the enumeration, so every `Ω < Λ` comes before `Λ`.
fn build_order(k: usize) -> impl Iterator<Item = usize> {
    (0..k).rev()
}

fn dot(a: &[RatFunc], b: &[RatFunc]) -> RatFunc {
    a.iter().zip(b).filter(|(x, y)| !x.is_zero() && !y.is_zero()).fold(RatFunc::zero(), |acc, (x, y)| acc.add(&x.mul(y)))
}

/// Orthogonalize along the fixed linear extension. Each `P_Λ` is the
/// projection of `m_Λ` away from the already built `P_Ω` with `Ω < Λ`; the
/// equations against earlier incomparable `P_Ω` are then checked, and the
/// first one that fails aborts the construction.
pub fn build_family(n: u32, m: u32, weight: &ZWeight) -> Result<Family, Inconsistency> {
    let gram = gram_matrix(n, m, weight);
    let index = &gram.index;
    let k = index.len();
    let mut coeffs: Vec<Vec<RatFunc>> = vec![Vec::new(); k];
    // G·P_Ω and ⟨P_Ω, P_Ω⟩ for every built Ω
    let mut images: Vec<Vec<RatFunc>> = vec![Vec::new(); k];
    let mut norms: Vec<RatFunc> = vec![RatFunc::zero(); k];
    let mut built: Vec<usize> = Vec::with_capacity(k);
    let (mut equations, mut unknowns) = (0, 0);
    for a in build_order(k) {
        let mut c = vec![RatFunc::zero(); k];
        c[a] = RatFunc::one();
        for &b in &built {
            equations += 1;
            // ⟨m_Λ, P_Ω⟩
            let overlap = &images[b][a];
            match index[b].dominance(&index[a]) {
                Dominance::Less => {
                    unknowns += 1;
                    if overlap.is_zero() {
                        continue;
                    }
                    let f = overlap.div(&norms[b]).expect("norms of a consistent family are nonzero");
                    for (x, y) in c.iter_mut().zip(&coeffs[b]) {
                        if !y.is_zero() {
                            *x = x.sub(&f.mul(y));
                        }
                    }
                }
                _ if overlap.is_zero() => {}
                _ => {
                    return Err(Inconsistency { built: index[a].clone(), against: index[b].clone(), residual: overlap.clone() });
                }
            }
        }
        images[a] = gram.apply(&c);
        norms[a] = images[a][a].clone();
        coeffs[a] = c;
        built.push(a);
    }
    Ok(Family { n, m, weight: weight.clone(), gram, coeffs, equations, unknowns })
}

/// Orthogonalize imposing only the comparable-pair equations. Since the
/// `P_Ω` with `Ω < Λ` span the same space as the `m_Ω`, the square system
/// `⟨P_Λ, m_Ω⟩ = 0` for `Ω < Λ` is solved directly; incomparable pairs are
/// left unconstrained.
pub fn build_family_weak(n: u32, m: u32, weight: &ZWeight) -> Family {
    let gram = gram_matrix(n, m, weight);
    let index = &gram.index;
    let k = index.len();
    let mut coeffs: Vec<Vec<RatFunc>> = vec![Vec::new(); k];
    let (mut equations, mut unknowns) = (0, 0);
    for (done, a) in build_order(k).enumerate() {
        let lower: Vec<usize> = (0..k).filter(|&b| index[b].dominance(&index[a]) == Dominance::Less).collect();
        equations += done;
        unknowns += lower.len();
        let mut c = vec![RatFunc::zero(); k];
        c[a] = RatFunc::one();
        if !lower.is_empty() {
            let matrix = lower.iter().map(|&eq| lower.iter().map(|&u| gram.entries[eq][u].clone()).collect()).collect();
            let rhs = lower.iter().map(|&eq| gram.entries[eq][a].neg()).collect();
            let x = solve_square(matrix, rhs).expect("comparable equations are uniquely solvable");
            for (&u, v) in lower.iter().zip(x) {
                c[u] = v;
            }
        }
        coeffs[a] = c;
    }
    Family { n, m, weight: weight.clone(), gram, coeffs, equations, unknowns }
}

impl Family {
    /// Reassemble a family from stored monomial expansions.
    pub fn from_polys(n: u32, m: u32, weight: &ZWeight, polys: &BTreeMap<SuperPartition, SymSuperPoly>) -> Option<Family> {
        let gram = gram_matrix(n, m, weight);
        let k = gram.len();
        if polys.len() != k {
            return None;
        }
        let mut coeffs: Vec<Vec<RatFunc>> = vec![Vec::new(); k];
        for (l, p) in polys {
            let a = gram.index.iter().position(|o| o == l)?;
            coeffs[a] = gram.index.iter().map(|o| p.coeff(o)).collect();
        }
        let unknowns = comparable_pairs(&gram.index);
        Some(Family { n, m, weight: weight.clone(), equations: k * k.saturating_sub(1) / 2, unknowns, gram, coeffs })
    }

    /// Superpartitions in enumeration order, largest first.
    pub fn index(&self) -> &[SuperPartition] {
        &self.gram.index
    }

    pub fn gram(&self) -> &Gram {
        &self.gram
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coefficients(&self, l: &SuperPartition) -> &[RatFunc] {
        &self.coeffs[position(self.index(), l)]
    }

    pub fn poly(&self, l: &SuperPartition) -> SymSuperPoly {
        let c = self.coefficients(l);
        SymSuperPoly::from_coeffs(Basis::Monomial, self.n, self.m, self.index().iter().cloned().zip(c.iter().cloned()))
    }

    pub fn polys(&self) -> BTreeMap<SuperPartition, SymSuperPoly> {
        self.index().iter().map(|l| (l.clone(), self.poly(l))).collect()
    }

    /// `⟨P_a, P_b⟩`, sign included.
    pub fn pair(&self, a: &SuperPartition, b: &SuperPartition) -> RatFunc {
        self.gram.pair(self.coefficients(a), self.coefficients(b))
    }

    /// `(-1)^{C(m,2)} ⟨P_Λ, P_Λ⟩`
    pub fn norm_direct(&self, l: &SuperPartition) -> RatFunc {
        self.pair(l, l).scale_int(fermionic_sign(self.m))
    }

    /// Supports that are not weakly dominated by their label.
    pub fn triangularity_violations(&self) -> Vec<(SuperPartition, SuperPartition)> {
        let mut out = Vec::new();
        for (a, l) in self.index().iter().enumerate() {
            if !self.coeffs[a][a].is_one() {
                out.push((l.clone(), l.clone()));
            }
            for (o, c) in self.index().iter().zip(&self.coeffs[a]) {
                if !c.is_zero() && !matches!(o.dominance(l), Dominance::Less | Dominance::Equal) {
                    out.push((l.clone(), o.clone()));
                }
            }
        }
        out
    }

    /// Every pair `Λ ≠ Ω` with `⟨P_Λ, P_Ω⟩ ≠ 0`.
    pub fn orthogonality_failures(&self) -> Vec<(SuperPartition, SuperPartition, RatFunc)> {
        let images: Vec<Vec<RatFunc>> = self.coeffs.iter().map(|c| self.gram.apply(c)).collect();
        let mut out = Vec::new();
        for a in 0..self.len() {
            for b in a + 1..self.len() {
                let v = dot(&self.coeffs[a], &images[b]);
                if !v.is_zero() {
                    out.push((self.index()[a].clone(), self.index()[b].clone(), v));
                }
            }
        }
        out
    }
}

/// Unordered pairs comparable in dominance.
pub fn comparable_pairs(index: &[SuperPartition]) -> usize {
    let mut count = 0;
    for (i, a) in index.iter().enumerate() {
        count += index[i + 1..].iter().filter(|b| a.dominance(b).is_comparable()).count();
    }
    count
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FailingPair {
    pub first: String,
    pub second: String,
    pub residual: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConsistencyReport {
    pub n: u32,
    pub m: u32,
    pub num_superpartitions: usize,
    pub num_equations: usize,
    pub num_unknowns: usize,
    pub consistent: bool,
    pub failing_pairs: Vec<FailingPair>,
}

/// Equation and unknown counts, and every incomparable pair that fails when
/// the system is inconsistent.
pub fn consistency_report(n: u32, m: u32, weight: &ZWeight) -> (ConsistencyReport, Option<Family>) {
    match build_family(n, m, weight) {
        Ok(fam) => {
            let report = ConsistencyReport {
                n,
                m,
                num_superpartitions: fam.len(),
                num_equations: fam.equations,
                num_unknowns: fam.unknowns,
                consistent: true,
                failing_pairs: Vec::new(),
            };
            (report, Some(fam))
        }
        Err(_) => {
            let weak = build_family_weak(n, m, weight);
            let failing_pairs = weak
                .orthogonality_failures()
                .into_iter()
                .map(|(a, b, r)| FailingPair { first: a.to_string(), second: b.to_string(), residual: r.to_string() })
                .collect();
            let report = ConsistencyReport {
                n,
                m,
                num_superpartitions: weak.len(),
                num_equations: weak.equations,
                num_unknowns: weak.unknowns,
                consistent: false,
                failing_pairs,
            };
            (report, None)
        }
    }
}

/// `⟨P_(2;1,1), P_(0;2,2)⟩` at degree `(4|1)` with comparable-pair
/// orthogonality only.
pub fn counterexample(kind: WeightKind) -> RatFunc {
    let fam = build_family_weak(4, 1, &ZWeight::new(kind));
    fam.pair(&"2;1,1".parse().unwrap(), &"0;2,2".parse().unwrap())
}

pub fn counterexample_invalidated() -> RatFunc {
    counterexample(WeightKind::InvalidatedF)
}

/// `1 - q^a t^b`
fn one_minus(a: u32, b: u32) -> MPoly {
    MPoly::one().sub(&MPoly::monomial(BigInt::one(), a, b))
}

/// `Π_{s ∈ B(Λ)} (1 - q^{a(s)+1} t^{l̃(s)})`
pub fn norm_factor(l: &SuperPartition) -> MPoly {
    l.bset().into_iter().fold(MPoly::one(), |acc, s| {
        let al = l.arms_legs(s).expect("B(Λ) holds boxes of Λ");
        acc.mul(&one_minus(al.arm + 1, al.leg_circled))
    })
}

/// `w_{Λ'}(t,q)`
pub fn integral_factor(l: &SuperPartition) -> MPoly {
    norm_factor(&l.conjugate()).swap_vars()
}

/// `q^{|Λa|} w_Λ(q,t) / w_{Λ'}(t,q)`
pub fn norm_conjectured(l: &SuperPartition) -> RatFunc {
    let num = norm_factor(l).shift(l.fermionic_size(), 0);
    RatFunc::new(num, integral_factor(l)).expect("nonzero product")
}

/// `J_Λ = w_{Λ'}(t,q) P_Λ`
pub fn integral_form(fam: &Family, l: &SuperPartition) -> SymSuperPoly {
    fam.poly(l).scale(&RatFunc::from_poly(integral_factor(l)))
}

pub fn integrality_check(j: &SymSuperPoly) -> bool {
    j.coeffs().values().all(|c| c.is_polynomial())
}

/// `u_i = t^{i-1} / q^{max(m-i,0)}` as exponent pairs.
fn evaluation_point(i: usize, m: usize) -> (i64, i64) {
    (-(m.saturating_sub(i) as i64), i as i64 - 1)
}

fn laurent_to_ratfunc(terms: &HashMap<(i64, i64), BigInt>) -> RatFunc {
    terms.iter().filter(|(_, c)| !c.is_zero()).fold(RatFunc::zero(), |acc, (&(a, b), c)| {
        acc.add(&RatFunc::laurent_monomial(a, b).mul(&RatFunc::from_bigint(c.clone())))
    })
}

/// `Π_{i<j≤m} (u_i - u_j)`
fn vandermonde(m: usize) -> RatFunc {
    let mut v = RatFunc::one();
    for i in 1..=m {
        for j in i + 1..=m {
            let (a, b) = (evaluation_point(i, m), evaluation_point(j, m));
            v = v.mul(&RatFunc::laurent_monomial(a.0, a.1).sub(&RatFunc::laurent_monomial(b.0, b.1)));
        }
    }
    v
}

fn next_permutation<T: Ord>(v: &mut [T]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).unwrap();
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

fn permutation_is_odd(p: &[usize]) -> bool {
    let mut odd = false;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            odd ^= p[i] > p[j];
        }
    }
    odd
}

/// `E_{N,m}[m_Ω]`: the `θ_1···θ_m` coefficient of `m_Ω` at `x_i = u_i`,
/// divided by the Vandermonde determinant of `u_1..u_m`.
pub fn evaluate_monomial(omega: &SuperPartition, nvars: usize) -> RatFunc {
    let m = omega.m() as usize;
    if omega.length() > nvars {
        return RatFunc::zero();
    }
    let mut terms: HashMap<(i64, i64), BigInt> = HashMap::new();
    // fermionic part k sits at position perm[k]
    let mut perm: Vec<usize> = (0..m).collect();
    let mut bosonic: Vec<u32> = omega.bosonic().to_vec();
    bosonic.resize(nvars - m, 0);
    bosonic.sort_unstable();
    loop {
        let (mut fq, mut ft) = (0i64, 0i64);
        for (k, &pos) in perm.iter().enumerate() {
            let (a, b) = evaluation_point(pos + 1, m);
            fq += a * omega.fermionic()[k] as i64;
            ft += b * omega.fermionic()[k] as i64;
        }
        let sign = if permutation_is_odd(&perm) { -1 } else { 1 };
        let mut arrangement = bosonic.clone();
        loop {
            let (mut eq, mut et) = (fq, ft);
            for (off, &e) in arrangement.iter().enumerate() {
                let (a, b) = evaluation_point(m + off + 1, m);
                eq += a * e as i64;
                et += b * e as i64;
            }
            *terms.entry((eq, et)).or_default() += sign;
            if !next_permutation(&mut arrangement) {
                break;
            }
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    laurent_to_ratfunc(&terms).div(&vandermonde(m)).expect("the u_i are distinct")
}

/// `E_{N,m}` of a polynomial given in the monomial basis.
pub fn evaluate_sym(f: &SymSuperPoly, nvars: usize) -> RatFunc {
    f.coeffs()
        .iter()
        .fold(RatFunc::zero(), |acc, (o, c)| acc.add(&c.mul(&evaluate_monomial(o, nvars))))
}

/// `E_{N,m}` of an explicit expansion: read off `θ_1···θ_m`, substitute
/// `x_i = u_i`, divide by the Vandermonde determinant.
pub fn evaluate(f: &ConcreteSuperPoly<RatFunc>, nvars: usize, m: usize) -> Result<RatFunc, AlgebraError> {
    if nvars < m || f.nvars() != nvars {
        return Err(AlgebraError::Ambiguous);
    }
    let mask = (1u32 << m) - 1;
    let mut acc = RatFunc::zero();
    for (t, c) in f.terms().filter(|(t, _)| t.theta == mask) {
        let (mut a, mut b) = (0i64, 0i64);
        for (i, &e) in t.exps.iter().enumerate() {
            let u = evaluation_point(i + 1, m);
            a += u.0 * e as i64;
            b += u.1 * e as i64;
        }
        acc = acc.add(&c.mul(&RatFunc::laurent_monomial(a, b)));
    }
    acc.div(&vandermonde(m))
}

/// Closed form for `E_{N,m}[J_Λ]` built from `ζ_Λ`, the skew diagram
/// `Λ⊛/δ^(m+1)` and the reduced fermionic partition.
pub fn evaluation_conjectured(l: &SuperPartition, nvars: usize) -> RatFunc {
    let m = l.m() as i64;
    let reduced = l.fermionic_reduced();
    let q_exp = (m - 1).max(0) * reduced.size() as i64 - reduced.bstat() as i64;
    let t_exp = l.zeta() as i64 + l.skew_bstat() as i64;
    let mut prod = MPoly::one();
    for c in l.skew_cells() {
        let te = nvars as i64 - (c.row as i64 - 1);
        assert!(te >= 0, "too few variables for {l:?}");
        prod = prod.mul(&one_minus(c.col as u32 - 1, te as u32));
    }
    RatFunc::laurent_monomial(-q_exp, t_exp).mul(&RatFunc::from_poly(prod))
}
