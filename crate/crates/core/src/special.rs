//! Limiting families of the Macdonald superpolynomials, the modified Schur
//! basis, and Kostka matrices.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{invert_matrix, AlgebraError, MPoly, RatFunc, Substitution};
use crate::inner::{fermionic_sign, WeightKind, ZWeight};
use crate::macdonald::{build_family, integral_form, Family, Inconsistency};
use crate::serial::FORMAT_VERSION;
use crate::superpartition::SuperPartition;
use crate::superpoly::{Basis, EngineError, SymSuperPoly};

pub type Polys = BTreeMap<SuperPartition, SymSuperPoly>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpecialError {
    #[error("specializing the polynomial labelled {label}: {source}")]
    Specialize { label: String, source: EngineError },
    #[error(transparent)]
    Engine(#[from] EngineError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Coefficientwise specializations of a family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Specialization {
    /// `q := 0`, the Hall-Littlewood family `P(t)`
    QZero,
    QOne,
    TOne,
    /// `q := t`, the one-parameter Schur family `s(t)`
    QEqualsT,
    /// bar, then `q := 0`: the family `P̄(t)`
    BarQZero,
    /// `q := t := 0`, the Schur family `s`
    QTZero,
    /// bar, then `q := t := 0`: the family `s̄`
    BarQTZero,
    /// `q := t`, then `t := t0`
    QEqualsTThen(BigRational),
    /// Any simultaneous substitution.
    Subst(Substitution, Substitution),
}

impl Specialization {
    pub fn apply(&self, f: &SymSuperPoly) -> Result<SymSuperPoly, EngineError> {
        use Substitution::*;
        match self {
            Specialization::QZero => f.substitute(&Zero, &Keep),
            Specialization::QOne => f.substitute(&One, &Keep),
            Specialization::TOne => f.substitute(&Keep, &One),
            Specialization::QEqualsT => f.substitute(&Other, &Keep),
            Specialization::BarQZero => f.bar().substitute(&Zero, &Keep),
            Specialization::QTZero => f.substitute(&Zero, &Zero),
            Specialization::BarQTZero => f.bar().substitute(&Zero, &Zero),
            Specialization::QEqualsTThen(t0) => f.substitute(&Other, &Keep)?.substitute(&Keep, &Const(t0.clone())),
            Specialization::Subst(q, t) => f.substitute(q, t),
        }
    }
}

pub fn specialize_polys(polys: &Polys, how: &Specialization) -> Result<Polys, SpecialError> {
    polys
        .iter()
        .map(|(l, p)| {
            how.apply(p)
                .map(|v| (l.clone(), v))
                .map_err(|source| SpecialError::Specialize { label: l.to_string(), source })
        })
        .collect()
}

pub fn specialize_family(fam: &Family, how: &Specialization) -> Result<Polys, SpecialError> {
    specialize_polys(&fam.polys(), how)
}

/// Labels where `P_Λ(q,1) ≠ m_Λ`.
pub fn monomial_limit_check(fam: &Family) -> Result<Vec<SuperPartition>, SpecialError> {
    let lim = specialize_family(fam, &Specialization::TOne)?;
    Ok(lim.into_iter().filter(|(l, p)| *p != SymSuperPoly::single(Basis::Monomial, l)).map(|(l, _)| l).collect())
}

/// Labels where `P_Λ(1,t) ≠ (-1)^{C(m,2)} e_{Λ'}`.
pub fn elementary_dual_check(fam: &Family) -> Result<Vec<SuperPartition>, SpecialError> {
    let lim = specialize_family(fam, &Specialization::QOne)?;
    let sign = RatFunc::from_int(fermionic_sign(fam.m));
    let mut bad = Vec::new();
    for (l, p) in lim {
        let e = SymSuperPoly::single(Basis::Elementary, &l.conjugate()).to_monomial()?.scale(&sign);
        if p != e {
            bad.push(l);
        }
    }
    Ok(bad)
}

/// Jack superpolynomials; the coefficient field is `Q(α)` with `α` carried by `q`.
pub fn build_jack(n: u32, m: u32) -> Result<Family, Inconsistency> {
    build_family(n, m, &ZWeight::new(WeightKind::JackAlpha))
}

/// `α := 1` in a Jack family.
pub fn jack_schur(jack: &Family) -> Result<Polys, SpecialError> {
    specialize_family(jack, &Specialization::QOne)
}

/// For each `k`, the largest deviation over all coefficients at degree
/// `(n|m)` between the Macdonald coefficient at `(q,t) = (r^a, r^b)` and the
/// Jack coefficient at `α = a/b`, with `r = 1 - 10^{-k}`.
pub fn jack_limit_deviations(mac: &Family, jack: &Family, a: u32, b: u32, ks: &[u32]) -> Result<Vec<BigRational>, SpecialError> {
    let alpha = BigRational::new(BigInt::from(a), BigInt::from(b));
    let mut out = Vec::with_capacity(ks.len());
    for &k in ks {
        let r = BigRational::one() - BigRational::new(BigInt::one(), num_traits::pow(BigInt::from(10), k as usize));
        let (q0, t0) = (num_traits::pow(r.clone(), a as usize), num_traits::pow(r, b as usize));
        let mut worst = BigRational::zero();
        for l in mac.index() {
            let (pm, pj) = (mac.poly(l), jack.poly(l));
            for o in mac.index() {
                let x = pm.coeff(o).eval_rational_point(&q0, &t0)?;
                let y = pj.coeff(o).eval_rational_point(&alpha, &BigRational::one())?;
                worst = worst.max((x - y).abs());
            }
        }
        out.push(worst);
    }
    Ok(out)
}

/// `P̄(t)` built directly with the primed weight at `q = 0`.
pub fn build_hall_littlewood_bar(n: u32, m: u32) -> Result<Family, Inconsistency> {
    build_family(n, m, &ZWeight::specialized(WeightKind::Primed, Substitution::Zero, Substitution::Keep))
}

/// Labels where the direct `P̄(t)` differs from bar-then-`q := 0` of the
/// Macdonald family.
pub fn hall_littlewood_bar_routes(mac: &Family, direct: &Family) -> Result<Vec<SuperPartition>, SpecialError> {
    let via_bar = specialize_family(mac, &Specialization::BarQZero)?;
    Ok(via_bar.into_iter().filter(|(l, p)| *p != direct.poly(l)).map(|(l, _)| l).collect())
}

pub fn schur_s(mac: &Family) -> Result<Polys, SpecialError> {
    specialize_family(mac, &Specialization::QTZero)
}

pub fn schur_sbar(mac: &Family) -> Result<Polys, SpecialError> {
    specialize_family(mac, &Specialization::BarQTZero)
}

pub fn schur_st(mac: &Family) -> Result<Polys, SpecialError> {
    specialize_family(mac, &Specialization::QEqualsT)
}

pub fn hall_littlewood(mac: &Family) -> Result<Polys, SpecialError> {
    specialize_family(mac, &Specialization::QZero)
}

pub fn hall_littlewood_bar(mac: &Family) -> Result<Polys, SpecialError> {
    specialize_family(mac, &Specialization::BarQZero)
}

/// The arrows into the three Schur families, each compared with its
/// target. Returns a description of every disagreement.
pub fn limit_diagram_check(mac: &Family, jack: &Family) -> Result<Vec<String>, SpecialError> {
    use Substitution::*;
    let s = schur_s(mac)?;
    let sbar = schur_sbar(mac)?;
    let st = schur_st(mac)?;
    let sjack = jack_schur(jack)?;
    let routes: Vec<(&str, Polys, &Polys)> = vec![
        ("s(t) at t=0 vs s", specialize_polys(&st, &Specialization::Subst(Keep, Zero))?, &s),
        ("s(t) at t=1 vs s^Jack", specialize_polys(&st, &Specialization::Subst(Keep, One))?, &sjack),
        (
            "s(t) at t=inf vs sbar",
            specialize_polys(&st.iter().map(|(l, p)| (l.clone(), p.bar())).collect(), &Specialization::Subst(Keep, Zero))?,
            &sbar,
        ),
        ("P(t) at t=0 vs s", specialize_polys(&hall_littlewood(mac)?, &Specialization::Subst(Keep, Zero))?, &s),
        ("Pbar(1/t) at t=inf vs sbar", specialize_polys(&hall_littlewood_bar(mac)?, &Specialization::Subst(Keep, Zero))?, &sbar),
        ("P(q=t^a,t->1) vs s^Jack", specialize_family(mac, &Specialization::QEqualsTThen(BigRational::one()))?, &sjack),
    ];
    let mut bad = Vec::new();
    for (name, got, want) in routes {
        for (l, p) in &got {
            if want.get(l) != Some(p) {
                bad.push(format!("{name}: {l}"));
            }
        }
    }
    Ok(bad)
}

/// `φ(p_n) = (1-t^n) p_n`, `φ(p̃_n) = p̃_n`, on a power-sum expansion.
pub fn phi(f: &SymSuperPoly) -> Result<SymSuperPoly, EngineError> {
    if f.basis() != Basis::PowerSum {
        return Err(EngineError::NoConversion(f.basis()));
    }
    let (n, m) = f.degree();
    let coeffs = f.coeffs().iter().map(|(l, c)| {
        let factor = l.bosonic().iter().fold(MPoly::one(), |acc, &b| acc.mul(&MPoly::one().sub(&MPoly::monomial(BigInt::one(), 0, b))));
        (l.clone(), c.mul(&RatFunc::from_poly(factor)))
    });
    Ok(SymSuperPoly::from_coeffs(Basis::PowerSum, n, m, coeffs))
}

/// `S_Λ = φ(s_Λ)`, expanded in monomials.
pub fn modified_schur(s: &Polys) -> Result<Polys, EngineError> {
    s.iter().map(|(l, p)| Ok((l.clone(), phi(&p.to_powersum()?)?.to_monomial()?))).collect()
}

/// Coordinates with respect to a basis given by monomial expansions.
#[derive(Clone, Debug)]
pub struct Transition {
    pub index: Vec<SuperPartition>,
    inverse: Vec<Vec<RatFunc>>,
}

impl Transition {
    pub fn new(index: &[SuperPartition], basis: &Polys) -> Result<Self, AlgebraError> {
        let rows = index.iter().map(|l| index.iter().map(|o| basis[l].coeff(o)).collect()).collect();
        Ok(Transition { index: index.to_vec(), inverse: invert_matrix(rows)? })
    }

    /// `c` with `f = Σ c_Ω b_Ω`.
    pub fn coordinates(&self, f: &SymSuperPoly) -> Vec<RatFunc> {
        let v: Vec<RatFunc> = self.index.iter().map(|o| f.coeff(o)).collect();
        (0..self.index.len())
            .map(|j| {
                v.iter()
                    .zip(&self.inverse)
                    .filter(|(x, row)| !x.is_zero() && !row[j].is_zero())
                    .fold(RatFunc::zero(), |acc, (x, row)| acc.add(&x.mul(&row[j])))
            })
            .collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum KostkaKind {
    /// `J_Λ = Σ_Ω K_{ΩΛ}(q,t) S_Ω`
    #[serde(rename = "qt")]
    Qt,
    /// `s_Λ = Σ_Ω K̄_{ΛΩ}(t) P_Ω(t)`
    #[serde(rename = "t-bar")]
    TBar,
    /// `s̄_Λ = Σ_Ω K_{ΛΩ}(t) P̄_Ω(t)`
    #[serde(rename = "t")]
    T,
    /// `s_Λ = Σ_Ω K̄_{ΛΩ} m_Ω`
    #[serde(rename = "monomial-bar")]
    MonomialBar,
    /// `s̄_Λ = Σ_Ω K_{ΛΩ} m_Ω`
    #[serde(rename = "monomial")]
    Monomial,
}

impl KostkaKind {
    pub const ALL: [KostkaKind; 5] = [KostkaKind::Qt, KostkaKind::TBar, KostkaKind::T, KostkaKind::MonomialBar, KostkaKind::Monomial];

    pub fn name(self) -> &'static str {
        match self {
            KostkaKind::Qt => "qt",
            KostkaKind::TBar => "t-bar",
            KostkaKind::T => "t",
            KostkaKind::MonomialBar => "monomial-bar",
            KostkaKind::Monomial => "monomial",
        }
    }
}

/// Row `Λ` holds the coefficients of the polynomial labelled `Λ` being
/// expanded; column `Ω` is the basis element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KostkaMatrix {
    pub n: u32,
    pub m: u32,
    pub kind: KostkaKind,
    pub index: Vec<SuperPartition>,
    pub entries: Vec<Vec<RatFunc>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct KostkaRecord {
    pub format_version: u32,
    pub n: u32,
    pub m: u32,
    pub kind: KostkaKind,
    pub index: Vec<String>,
    pub entries: Vec<Vec<RatFunc>>,
}

pub type Flag = (SuperPartition, SuperPartition, RatFunc);

impl KostkaMatrix {
    fn from_rows(n: u32, m: u32, kind: KostkaKind, index: Vec<SuperPartition>, rows: impl Fn(&SuperPartition) -> Vec<RatFunc>) -> Self {
        let entries = index.iter().map(&rows).collect();
        KostkaMatrix { n, m, kind, index, entries }
    }

    fn pos(&self, l: &SuperPartition) -> usize {
        self.index.iter().position(|o| o == l).unwrap_or_else(|| panic!("{l:?} is not of this degree"))
    }

    pub fn entry(&self, row: &SuperPartition, col: &SuperPartition) -> &RatFunc {
        &self.entries[self.pos(row)][self.pos(col)]
    }

    pub fn substitute(&self, q: &Substitution, t: &Substitution) -> Result<KostkaMatrix, AlgebraError> {
        let entries = self
            .entries
            .iter()
            .map(|r| r.iter().map(|c| c.substitute(q, t)).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        Ok(KostkaMatrix { entries, ..self.clone() })
    }

    /// Entries that are not polynomials with nonnegative integer coefficients.
    pub fn positivity_flags(&self) -> Vec<Flag> {
        let mut out = Vec::new();
        for (l, row) in self.index.iter().zip(&self.entries) {
            for (o, c) in self.index.iter().zip(row) {
                if !c.is_nonneg_polynomial() {
                    out.push((l.clone(), o.clone(), c.clone()));
                }
            }
        }
        out
    }

    pub fn record(&self) -> KostkaRecord {
        KostkaRecord {
            format_version: FORMAT_VERSION,
            n: self.n,
            m: self.m,
            kind: self.kind,
            index: self.index.iter().map(|l| l.to_string()).collect(),
            entries: self.entries.clone(),
        }
    }

    pub fn from_record(rec: KostkaRecord) -> Result<Self, String> {
        let index = rec.index.iter().map(|s| s.parse::<SuperPartition>().map_err(|e| e.to_string())).collect::<Result<Vec<_>, _>>()?;
        if rec.entries.len() != index.len() || rec.entries.iter().any(|r| r.len() != index.len()) {
            return Err("entry matrix does not match its index".into());
        }
        Ok(KostkaMatrix { n: rec.n, m: rec.m, kind: rec.kind, index, entries: rec.entries })
    }

    /// A `tabular` in the layout of the printed Kostka tables.
    pub fn to_latex(&self) -> String {
        let k = self.index.len();
        let mut out = String::new();
        writeln!(out, "\\begin{{tabular}}{{c|{}}}", " c |".repeat(k)).unwrap();
        let header: Vec<String> = self.index.iter().map(|l| format!("${}$", latex_label(l))).collect();
        writeln!(out, " & {} \\\\ \\hline", header.join(" & ")).unwrap();
        for (l, row) in self.index.iter().zip(&self.entries) {
            let cells: Vec<String> = row.iter().map(|c| format!("${}$", latex_ratfunc(c))).collect();
            writeln!(out, "${}$ & {} \\\\ \\hline", latex_label(l), cells.join(" & ")).unwrap();
        }
        out.push_str("\\end{tabular}\n");
        out
    }
}

pub fn latex_label(l: &SuperPartition) -> String {
    let join = |v: &[u32]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
    if l.bosonic().is_empty() {
        format!("({};\\,)", join(l.fermionic()))
    } else {
        format!("({};{})", join(l.fermionic()), join(l.bosonic()))
    }
}

fn latex_poly(p: &MPoly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, ((a, b), c)) in p.sorted_terms_display().into_iter().enumerate() {
        let neg = c.is_negative();
        if neg {
            out.push('-');
        } else if i > 0 {
            out.push('+');
        }
        let c = c.abs();
        let mut mono = String::new();
        for (v, e) in [("q", a), ("t", b)] {
            match e {
                0 => {}
                1 => mono.push_str(v),
                _ => write!(mono, "{v}^{{{e}}}").unwrap(),
            }
        }
        if mono.is_empty() || !c.is_one() {
            write!(out, "{c}").unwrap();
        }
        out.push_str(&mono);
    }
    out
}

pub fn latex_ratfunc(r: &RatFunc) -> String {
    if r.is_polynomial() {
        latex_poly(r.num())
    } else {
        format!("\\frac{{{}}}{{{}}}", latex_poly(r.num()), latex_poly(r.den()))
    }
}

/// `J_Λ = Σ_Ω K_{ΩΛ}(q,t) S_Ω(t)`.
pub fn kostka_qt(mac: &Family) -> Result<KostkaMatrix, SpecialError> {
    let big_s = modified_schur(&schur_s(mac)?)?;
    let tr = Transition::new(mac.index(), &big_s)?;
    Ok(KostkaMatrix::from_rows(mac.n, mac.m, KostkaKind::Qt, mac.index().to_vec(), |l| tr.coordinates(&integral_form(mac, l))))
}

/// `(K̄(t), K(t))`: `s` over `P(t)` and `s̄` over `P̄(t)`.
pub fn kostka_t(mac: &Family) -> Result<(KostkaMatrix, KostkaMatrix), SpecialError> {
    let idx = mac.index().to_vec();
    let s = schur_s(mac)?;
    let sbar = schur_sbar(mac)?;
    let hl = Transition::new(&idx, &hall_littlewood(mac)?)?;
    let hlbar = Transition::new(&idx, &hall_littlewood_bar(mac)?)?;
    let kbar = KostkaMatrix::from_rows(mac.n, mac.m, KostkaKind::TBar, idx.clone(), |l| hl.coordinates(&s[l]));
    let k = KostkaMatrix::from_rows(mac.n, mac.m, KostkaKind::T, idx, |l| hlbar.coordinates(&sbar[l]));
    Ok((kbar, k))
}

/// `(K̄, K)`: `s` and `s̄` over monomials.
pub fn kostka_monomial(mac: &Family) -> Result<(KostkaMatrix, KostkaMatrix), SpecialError> {
    let idx = mac.index().to_vec();
    let s = schur_s(mac)?;
    let sbar = schur_sbar(mac)?;
    let row = |p: &SymSuperPoly| idx.iter().map(|o| p.coeff(o)).collect::<Vec<_>>();
    let kbar = KostkaMatrix::from_rows(mac.n, mac.m, KostkaKind::MonomialBar, idx.clone(), |l| row(&s[l]));
    let k = KostkaMatrix::from_rows(mac.n, mac.m, KostkaKind::Monomial, idx.clone(), |l| row(&sbar[l]));
    Ok((kbar, k))
}

/// All Kostka matrices of one degree.
#[derive(Clone, Debug)]
pub struct KostkaSet {
    pub qt: KostkaMatrix,
    pub t_bar: KostkaMatrix,
    pub t: KostkaMatrix,
    pub monomial_bar: KostkaMatrix,
    pub monomial: KostkaMatrix,
}

impl KostkaSet {
    pub fn compute(mac: &Family) -> Result<Self, SpecialError> {
        let qt = kostka_qt(mac)?;
        let (t_bar, t) = kostka_t(mac)?;
        let (monomial_bar, monomial) = kostka_monomial(mac)?;
        Ok(KostkaSet { qt, t_bar, t, monomial_bar, monomial })
    }

    pub fn get(&self, kind: KostkaKind) -> &KostkaMatrix {
        match kind {
            KostkaKind::Qt => &self.qt,
            KostkaKind::TBar => &self.t_bar,
            KostkaKind::T => &self.t,
            KostkaKind::MonomialBar => &self.monomial_bar,
            KostkaKind::Monomial => &self.monomial,
        }
    }

    /// `K̄(1) = K̄` and `K(1) = K`.
    pub fn t_one_check(&self) -> Result<Vec<String>, AlgebraError> {
        let mut bad = Vec::new();
        for (name, kt, k) in [("t-bar", &self.t_bar, &self.monomial_bar), ("t", &self.t, &self.monomial)] {
            let at_one = kt.substitute(&Substitution::Keep, &Substitution::One)?;
            for (i, l) in at_one.index.iter().enumerate() {
                for (j, o) in at_one.index.iter().enumerate() {
                    if at_one.entries[i][j] != k.entries[i][j] {
                        bad.push(format!("{name}(1) at ({l}, {o}): {} vs {}", at_one.entries[i][j], k.entries[i][j]));
                    }
                }
            }
        }
        Ok(bad)
    }

    /// `K_{ΩΛ}(0,1)` against the monomial `K` and `K_{ΩΛ}(0,t)` against
    /// `K(t)`; the `qt` matrix is indexed by `(Λ, Ω)`, the others by `(Ω, Λ)`.
    pub fn relations_check(&self) -> Result<Vec<String>, AlgebraError> {
        let mut bad = Vec::new();
        let at01 = self.qt.substitute(&Substitution::Zero, &Substitution::One)?;
        let at0t = self.qt.substitute(&Substitution::Zero, &Substitution::Keep)?;
        for (name, lhs, rhs) in [("K(0,1) vs K", &at01, &self.monomial), ("K(0,t) vs K(t)", &at0t, &self.t)] {
            for (i, l) in lhs.index.iter().enumerate() {
                for (j, o) in lhs.index.iter().enumerate() {
                    if lhs.entries[i][j] != rhs.entries[j][i] {
                        bad.push(format!("{name} at ({l}, {o}): {} vs {}", lhs.entries[i][j], rhs.entries[j][i]));
                    }
                }
            }
        }
        Ok(bad)
    }
}
