//! Power-sum scalar products, their Gram matrices on the monomial basis, and
//! the truncated reproducing-kernel identity.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::{MPoly, RatFunc, Substitution};
use crate::superpartition::SuperPartition;
use crate::superpoly::{expand_powersum, m_to_p, ConcreteSuperPoly, EngineError, SymSuperPoly, Term};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum WeightKind {
    /// `α^{ℓ(Λ)} z_{Λs}` with `α` carried by the `q` slot.
    #[serde(rename = "jack-alpha")]
    JackAlpha,
    /// `z_{Λs} Π_{Λ⊛} (1-q^k)/(1-t^k)`
    #[serde(rename = "invalidated-F")]
    InvalidatedF,
    /// Fermionic factors `(1-q^{a+1})/(1-τ^{a+1})` at `τ = t`.
    #[serde(rename = "tau-at-t")]
    TauAtT,
    /// The same at `τ = 1/q`.
    #[serde(rename = "tau-at-q-inverse")]
    TauAtQInverse,
    /// `z_{Λs} q^{|Λa|} Π_{Λs} (1-q^k)/(1-t^k)`
    #[serde(rename = "new")]
    New,
    /// `z_{Λs} t^{-|Λa|} Π_{Λs} (1-q^k)/(1-t^k)`
    #[serde(rename = "primed")]
    Primed,
    /// `z_{Λs} t^{|Λa|}`
    #[serde(rename = "schur-tt")]
    SchurTT,
}

impl WeightKind {
    pub const ALL: [WeightKind; 7] = [
        WeightKind::JackAlpha,
        WeightKind::InvalidatedF,
        WeightKind::TauAtT,
        WeightKind::TauAtQInverse,
        WeightKind::New,
        WeightKind::Primed,
        WeightKind::SchurTT,
    ];

    pub fn name(self) -> &'static str {
        match self {
            WeightKind::JackAlpha => "jack-alpha",
            WeightKind::InvalidatedF => "invalidated-F",
            WeightKind::TauAtT => "tau-at-t",
            WeightKind::TauAtQInverse => "tau-at-q-inverse",
            WeightKind::New => "new",
            WeightKind::Primed => "primed",
            WeightKind::SchurTT => "schur-tt",
        }
    }
}

impl fmt::Display for WeightKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for WeightKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        WeightKind::ALL.into_iter().find(|k| k.name() == s).ok_or_else(|| format!("unknown weight kind '{s}'"))
    }
}

/// `1 - q^a t^b`
fn one_minus(a: u32, b: u32) -> MPoly {
    MPoly::one().sub(&MPoly::monomial(BigInt::one(), a, b))
}

fn ratio(num: MPoly, den: MPoly) -> RatFunc {
    RatFunc::new(num, den).expect("nonzero denominator")
}

/// A z-weight, optionally followed by a specialization of `q` and `t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZWeight {
    pub kind: WeightKind,
    pub q_sub: Substitution,
    pub t_sub: Substitution,
}

impl ZWeight {
    pub fn new(kind: WeightKind) -> Self {
        ZWeight { kind, q_sub: Substitution::Keep, t_sub: Substitution::Keep }
    }

    pub fn specialized(kind: WeightKind, q_sub: Substitution, t_sub: Substitution) -> Self {
        ZWeight { kind, q_sub, t_sub }
    }

    /// Stable identifier used for cache keys.
    pub fn key(&self) -> String {
        if self.q_sub == Substitution::Keep && self.t_sub == Substitution::Keep {
            self.kind.name().to_string()
        } else {
            let mut key = self.kind.name().to_string();
            for (var, other, sub) in [("q", "t", &self.q_sub), ("t", "q", &self.t_sub)] {
                let v = match sub {
                    Substitution::Keep => continue,
                    Substitution::Zero => "0".to_string(),
                    Substitution::One => "1".to_string(),
                    Substitution::Other => other.to_string(),
                    Substitution::Const(c) => c.to_string().replace('/', "_"),
                    Substitution::Reciprocal => format!("1_{var}"),
                };
                key.push_str(&format!("@{var}={v}"));
            }
            key
        }
    }

    /// The weight of `p_Λ`, without the sign `(-1)^{C(m,2)}`.
    pub fn eval(&self, l: &SuperPartition) -> RatFunc {
        let w = zweight(self.kind, l);
        if self.q_sub == Substitution::Keep && self.t_sub == Substitution::Keep {
            return w;
        }
        w.substitute(&self.q_sub, &self.t_sub).expect("specialized weight stays finite")
    }
}

fn bosonic_product(l: &SuperPartition) -> RatFunc {
    let mut num = MPoly::one();
    let mut den = MPoly::one();
    for &b in l.bosonic() {
        num = num.mul(&one_minus(b, 0));
        den = den.mul(&one_minus(0, b));
    }
    ratio(num, den)
}

pub fn zweight(kind: WeightKind, l: &SuperPartition) -> RatFunc {
    let zs = RatFunc::from_bigint(BigInt::from(l.bosonic_partition().zsym()));
    let a = l.fermionic_size() as i64;
    match kind {
        WeightKind::JackAlpha => zs.mul(&RatFunc::laurent_monomial(l.length() as i64, 0)),
        WeightKind::InvalidatedF | WeightKind::TauAtT => {
            let mut num = MPoly::one();
            let mut den = MPoly::one();
            for &k in l.circled().parts() {
                num = num.mul(&one_minus(k, 0));
                den = den.mul(&one_minus(0, k));
            }
            zs.mul(&ratio(num, den))
        }
        WeightKind::TauAtQInverse => {
            let mut w = zs.mul(&bosonic_product(l));
            for &p in l.fermionic() {
                let k = p + 1;
                // (1 - q^k)/(1 - q^{-k}) with the reciprocal power cleared
                let f = ratio(one_minus(k, 0).mul(&MPoly::monomial(BigInt::one(), k, 0)), MPoly::monomial(BigInt::one(), k, 0).sub(&MPoly::one()));
                w = w.mul(&f);
            }
            w
        }
        WeightKind::New => zs.mul(&RatFunc::laurent_monomial(a, 0)).mul(&bosonic_product(l)),
        WeightKind::Primed => zs.mul(&RatFunc::laurent_monomial(0, -a)).mul(&bosonic_product(l)),
        WeightKind::SchurTT => zs.mul(&RatFunc::laurent_monomial(0, a)),
    }
}

/// `(-1)^{C(m,2)}`
pub fn fermionic_sign(m: u32) -> i64 {
    if (m * m.saturating_sub(1) / 2) % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `Σ_Λ (-1)^{C(m,2)} z_Λ f_Λ g_Λ` over power-sum coordinates.
pub fn scalar_product(f: &SymSuperPoly, g: &SymSuperPoly, w: &ZWeight) -> Result<RatFunc, EngineError> {
    assert_eq!(f.degree(), g.degree(), "scalar product of different degrees");
    let (fp, gp) = (f.to_powersum()?, g.to_powersum()?);
    let mut acc = RatFunc::zero();
    for (l, c) in fp.coeffs() {
        let d = gp.coeff(l);
        if !d.is_zero() {
            acc = acc.add(&c.mul(&d).mul(&w.eval(l)));
        }
    }
    Ok(acc.scale_int(fermionic_sign(f.degree().1)))
}

/// Symmetric matrix `⟨m_Ω, m_Ω'⟩` over the superpartitions of one degree.
#[derive(Clone, Debug)]
pub struct Gram {
    pub index: Vec<SuperPartition>,
    pub entries: Vec<Vec<RatFunc>>,
}

impl Gram {
    pub fn len(&self) -> usize {
        self.index.len()
    }

    pub fn is_empty(&self) -> bool {
        self.index.is_empty()
    }

    /// `G · c` for a coefficient vector over the same index.
    pub fn apply(&self, c: &[RatFunc]) -> Vec<RatFunc> {
        self.entries
            .iter()
            .map(|row| {
                row.iter().zip(c).filter(|(_, x)| !x.is_zero()).fold(RatFunc::zero(), |acc, (g, x)| acc.add(&g.mul(x)))
            })
            .collect()
    }

    /// `aᵀ G b`
    pub fn pair(&self, a: &[RatFunc], b: &[RatFunc]) -> RatFunc {
        let gb = self.apply(b);
        a.iter().zip(&gb).filter(|(x, _)| !x.is_zero()).fold(RatFunc::zero(), |acc, (x, y)| acc.add(&x.mul(y)))
    }
}

fn lcm(a: &MPoly, b: &MPoly) -> MPoly {
    if a.is_one() {
        return b.clone();
    }
    let g = a.gcd(b);
    a.mul(&b.div_exact(&g).expect("gcd divides"))
}

/// Sum of rational multiples of fractions sharing the denominator `den`.
fn combine(terms: impl Iterator<Item = (BigRational, usize)>, nums: &[MPoly], den: &MPoly) -> RatFunc {
    let terms: Vec<(BigRational, usize)> = terms.filter(|(r, _)| !r.is_zero()).collect();
    let l = terms.iter().fold(BigInt::one(), |acc, (r, _)| acc.lcm(r.denom()));
    let mut num = MPoly::zero();
    for (r, i) in &terms {
        let k = r.numer() * (&l / r.denom());
        num = num.add(&nums[*i].scale(&k));
    }
    ratio(num, den.scale(&l))
}

type GramCache = OnceLock<Mutex<HashMap<(u32, u32, String), Arc<Gram>>>>;
static GRAMS: GramCache = OnceLock::new();

/// `G = A D Aᵀ` with `A` the monomial-to-power-sum matrix and `D` the
/// signed diagonal of weights; cached per degree and weight.
pub fn gram_matrix(n: u32, m: u32, w: &ZWeight) -> Arc<Gram> {
    let key = (n, m, w.key());
    let cache = GRAMS.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(g) = cache.lock().unwrap().get(&key) {
        return g.clone();
    }
    let inv = m_to_p(n, m);
    let sign = fermionic_sign(m);
    let weights: Vec<RatFunc> = inv.index.iter().map(|l| w.eval(l).scale_int(sign)).collect();
    let den = weights.iter().fold(MPoly::one(), |acc, x| lcm(&acc, x.den()));
    let nums: Vec<MPoly> =
        weights.iter().map(|x| x.num().mul(&den.div_exact(x.den()).expect("lcm is a multiple"))).collect();
    let k = inv.len();
    let mut entries = vec![vec![RatFunc::zero(); k]; k];
    for a in 0..k {
        for b in a..k {
            let terms = (0..k).map(|mu| (&inv.rows[a][mu] * &inv.rows[b][mu], mu));
            let v = combine(terms, &nums, &den);
            entries[a][b] = v.clone();
            entries[b][a] = v;
        }
    }
    let gram = Arc::new(Gram { index: inv.index.clone(), entries });
    cache.lock().unwrap().entry(key).or_insert(gram).clone()
}

/// Copy of `f` with Grassmann indices shifted by `offset` and commuting
/// exponents placed at `offset..`, inside `total` variables.
fn embed(f: &ConcreteSuperPoly<BigInt>, offset: usize, total: usize) -> ConcreteSuperPoly<RatFunc> {
    let mut out = ConcreteSuperPoly::zero(total);
    for (t, c) in f.terms() {
        let mut exps = vec![0; total];
        exps[offset..offset + t.exps.len()].copy_from_slice(&t.exps);
        out.add_term(Term { theta: t.theta << offset, exps }, RatFunc::from_bigint(c.clone()));
    }
    out
}

fn truncate(f: &ConcreteSuperPoly<RatFunc>, nx: usize, max_degree: u32) -> ConcreteSuperPoly<RatFunc> {
    let mut out = ConcreteSuperPoly::zero(f.nvars());
    for (t, c) in f.terms() {
        if t.exps[..nx].iter().sum::<u32>() <= max_degree {
            out.add_term(t.clone(), c.clone());
        }
    }
    out
}

/// `(a;q)_k` with `a = q^i t^j`.
fn pochhammer(i: u32, j: u32, k: u32) -> MPoly {
    (0..k).fold(MPoly::one(), |acc, s| acc.mul(&one_minus(i + s, j)))
}

/// Both sides of the kernel identity, as polynomials in `x_1..x_nx, y_1..y_ny`
/// with Grassmann partners `θ` (first) and `φ` (after), truncated at
/// `x`-degree `max_degree`.
pub fn kernel_sides(max_degree: u32, nx: usize, ny: usize) -> (ConcreteSuperPoly<RatFunc>, ConcreteSuperPoly<RatFunc>) {
    let total = nx + ny;
    let monomial = |c: RatFunc, theta: u32, i: usize, j: usize, k: u32| {
        let mut exps = vec![0; total];
        exps[i] = k;
        exps[nx + j] = k;
        let mut f = ConcreteSuperPoly::zero(total);
        f.add_term(Term { theta, exps }, c);
        f
    };
    let mut lhs = ConcreteSuperPoly::one(total);
    for i in 0..nx {
        for j in 0..ny {
            let pair = (1u32 << i) | (1u32 << (nx + j));
            let mut factor = ConcreteSuperPoly::zero(total);
            for k in 0..=max_degree {
                // (t;q)_k/(q;q)_k (x_i y_j)^k
                let c = ratio(pochhammer(0, 1, k), pochhammer(1, 0, k));
                factor = factor.add(&monomial(c, 0, i, j, k));
            }
            let mut fermionic = ConcreteSuperPoly::one(total);
            for k in 0..=max_degree {
                // θ_i φ_j q^{-k} (x_i y_j)^k
                fermionic = fermionic.add(&monomial(RatFunc::laurent_monomial(-(k as i64), 0), pair, i, j, k));
            }
            lhs = truncate(&truncate(&lhs.multiply(&factor), nx, max_degree).multiply(&fermionic), nx, max_degree);
        }
    }
    let mut rhs = ConcreteSuperPoly::zero(total);
    let w = ZWeight::new(WeightKind::New);
    for n in 0..=max_degree {
        for m in 0..=nx.min(ny) as u32 {
            for l in SuperPartition::enumerate(n, m) {
                let (Ok(px), Ok(py)) = (expand_powersum(&l, nx), expand_powersum(&l, ny)) else { continue };
                let c = w.eval(&l).inv().expect("nonzero weight").scale_int(fermionic_sign(m));
                rhs = rhs.add(&embed(&px, 0, total).multiply(&embed(&py, nx, total)).scale(&c));
            }
        }
    }
    (lhs, rhs)
}

pub fn kernel_truncated_check(max_degree: u32, nx: usize, ny: usize) -> bool {
    let (lhs, rhs) = kernel_sides(max_degree, nx, ny);
    lhs == rhs
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_ratfunc as r;
    use crate::superpoly::Basis;

    fn sp(s: &str) -> SuperPartition {
        s.parse().unwrap()
    }

    #[test]
    fn weight_examples() {
        assert_eq!(zweight(WeightKind::New, &sp("1;")), RatFunc::q());
        assert_eq!(zweight(WeightKind::New, &sp(";2,1")), r("2(1-q^2)(1-q)/((1-t^2)(1-t))").unwrap());
        assert_eq!(zweight(WeightKind::InvalidatedF, &sp("1;")), r("(1-q^2)/(1-t^2)").unwrap());
        assert_eq!(zweight(WeightKind::TauAtQInverse, &sp("1;")), r("-q^2").unwrap());
        assert_eq!(zweight(WeightKind::Primed, &sp("2;1")), r("(1-q)/(t^2(1-t))").unwrap());
        assert_eq!(zweight(WeightKind::JackAlpha, &sp("1,0;1,1")), r("2q^4").unwrap());
    }

    #[test]
    fn table_coefficient_is_orthogonal() {
        let w = ZWeight::new(WeightKind::New);
        let c = r("q(1-t)/(1-qt)").unwrap();
        let p = SymSuperPoly::from_coeffs(Basis::Monomial, 1, 1, [(sp("1;"), RatFunc::one()), (sp("0;1"), c)]);
        let low = SymSuperPoly::single(Basis::Monomial, &sp("0;1"));
        assert!(scalar_product(&p, &low, &w).unwrap().is_zero());
        let p1 = SymSuperPoly::single(Basis::PowerSum, &sp("1;"));
        assert_eq!(scalar_product(&p1, &p1, &w).unwrap(), RatFunc::q());
        let p2 = SymSuperPoly::single(Basis::PowerSum, &sp("0;1"));
        assert!(scalar_product(&p1, &p2, &w).unwrap().is_zero());
    }

    #[test]
    fn gram_examples() {
        let g = gram_matrix(1, 1, &ZWeight::new(WeightKind::New));
        assert_eq!(g.index, vec![sp("1;"), sp("0;1")]);
        let q = RatFunc::q();
        // m_(1;) = p_(1;) and m_(0;1) = p_(0;1) - p_(1;)
        assert_eq!(g.entries[0][0], q);
        assert_eq!(g.entries[0][1], q.neg());
        assert_eq!(g.entries[1][1], q.add(&r("(1-q)/(1-t)").unwrap()));
        // orthogonality of m_(1;) + c m_(0;1) against m_(0;1) forces the table coefficient
        let c = g.entries[0][1].neg().div(&g.entries[1][1]).unwrap();
        assert_eq!(c, r("q(1-t)/(1-qt)").unwrap());
        let g = gram_matrix(1, 0, &ZWeight::new(WeightKind::New));
        assert_eq!(g.entries, vec![vec![r("(1-q)/(1-t)").unwrap()]]);
    }

    #[test]
    fn kernel_low_degree_terms() {
        let (lhs, rhs) = kernel_sides(1, 1, 1);
        let x1y1 = Term { theta: 0, exps: vec![1, 1] };
        assert_eq!(lhs.coefficient(&x1y1), r("(1-t)/(1-q)").unwrap());
        let th = Term { theta: 0b11, exps: vec![0, 0] };
        assert_eq!(lhs.coefficient(&th), RatFunc::one());
        assert_eq!(lhs, rhs);
    }
}
