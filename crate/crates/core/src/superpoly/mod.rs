//! Symmetric superpolynomials: concrete expansions in finitely many variables
//! and abstract coefficient maps over a named basis.

mod concrete;
mod matrices;

pub use concrete::{
    canonical_term, expand_elementary, expand_monomial, expand_powersum, Coefficient, ConcreteSuperPoly, Term,
};
pub use matrices::{e_to_m, invert, m_to_p, p_to_m, powersum_coefficient, BasisMatrix};

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{AlgebraError, RatFunc, Substitution};
use crate::superpartition::SuperPartition;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EngineError {
    #[error("need {needed} variables, have {got}")]
    TooFewVariables { needed: usize, got: usize },
    #[error("input is not homogeneous of degree ({n}|{m})")]
    NotHomogeneous { n: u32, m: u32 },
    #[error("no conversion from the {0} basis")]
    NoConversion(Basis),
    #[error("coefficient of {partition}: {source}")]
    Coefficient { partition: String, source: AlgebraError },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Basis {
    #[serde(rename = "monomial")]
    Monomial,
    #[serde(rename = "powersum")]
    PowerSum,
    #[serde(rename = "elementary")]
    Elementary,
    #[serde(rename = "macdonald-P")]
    Macdonald,
    #[serde(rename = "hall-littlewood")]
    HallLittlewood,
    #[serde(rename = "schur-s")]
    SchurS,
    #[serde(rename = "schur-sbar")]
    SchurSbar,
    #[serde(rename = "schur-st")]
    SchurSt,
    #[serde(rename = "modified-schur-S")]
    ModifiedSchur,
    #[serde(rename = "jack")]
    Jack,
}

impl Basis {
    /// Symbol used when printing expansions.
    pub fn symbol(self) -> &'static str {
        match self {
            Basis::Monomial => "m",
            Basis::PowerSum => "p",
            Basis::Elementary => "e",
            Basis::Macdonald => "P",
            Basis::HallLittlewood => "Pt",
            Basis::SchurS => "s",
            Basis::SchurSbar => "sbar",
            Basis::SchurSt => "st",
            Basis::ModifiedSchur => "S",
            Basis::Jack => "Pa",
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = serde_json::to_value(self).expect("unit variant");
        write!(f, "{}", s.as_str().unwrap_or_default())
    }
}

/// `Σ c_Λ b_Λ` over the superpartitions of one degree.
#[derive(Clone, PartialEq, Eq)]
pub struct SymSuperPoly {
    basis: Basis,
    n: u32,
    m: u32,
    coeffs: BTreeMap<SuperPartition, RatFunc>,
}

impl SymSuperPoly {
    pub fn zero(basis: Basis, n: u32, m: u32) -> Self {
        SymSuperPoly { basis, n, m, coeffs: BTreeMap::new() }
    }

    pub fn single(basis: Basis, l: &SuperPartition) -> Self {
        let mut f = Self::zero(basis, l.n(), l.m());
        f.add_term(l, &RatFunc::one());
        f
    }

    pub fn from_coeffs(basis: Basis, n: u32, m: u32, coeffs: impl IntoIterator<Item = (SuperPartition, RatFunc)>) -> Self {
        let mut f = Self::zero(basis, n, m);
        for (l, c) in coeffs {
            f.add_term(&l, &c);
        }
        f
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn degree(&self) -> (u32, u32) {
        (self.n, self.m)
    }

    pub fn coeffs(&self) -> &BTreeMap<SuperPartition, RatFunc> {
        &self.coeffs
    }

    pub fn coeff(&self, l: &SuperPartition) -> RatFunc {
        self.coeffs.get(l).cloned().unwrap_or_else(RatFunc::zero)
    }

    pub fn support(&self) -> impl Iterator<Item = &SuperPartition> {
        self.coeffs.keys()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add_term(&mut self, l: &SuperPartition, c: &RatFunc) {
        assert_eq!(l.degree(), (self.n, self.m), "{l:?} has the wrong degree");
        if c.is_zero() {
            return;
        }
        let v = self.coeff(l).add(c);
        if v.is_zero() {
            self.coeffs.remove(l);
        } else {
            self.coeffs.insert(l.clone(), v);
        }
    }

    pub fn with_basis(mut self, basis: Basis) -> Self {
        self.basis = basis;
        self
    }

    pub fn add(&self, other: &SymSuperPoly) -> SymSuperPoly {
        assert_eq!(self.basis, other.basis);
        let mut out = self.clone();
        for (l, c) in &other.coeffs {
            out.add_term(l, c);
        }
        out
    }

    pub fn sub(&self, other: &SymSuperPoly) -> SymSuperPoly {
        self.add(&other.scale(&RatFunc::from_int(-1)))
    }

    pub fn scale(&self, k: &RatFunc) -> SymSuperPoly {
        let mut out = Self::zero(self.basis, self.n, self.m);
        for (l, c) in &self.coeffs {
            out.add_term(l, &c.mul(k));
        }
        out
    }

    pub fn try_map_coeffs(
        &self,
        f: impl Fn(&SuperPartition, &RatFunc) -> Result<RatFunc, AlgebraError>,
    ) -> Result<SymSuperPoly, EngineError> {
        let mut out = Self::zero(self.basis, self.n, self.m);
        for (l, c) in &self.coeffs {
            let v = f(l, c).map_err(|source| EngineError::Coefficient { partition: l.to_string(), source })?;
            out.add_term(l, &v);
        }
        Ok(out)
    }

    pub fn substitute(&self, q: &Substitution, t: &Substitution) -> Result<SymSuperPoly, EngineError> {
        self.try_map_coeffs(|_, c| c.substitute(q, t))
    }

    /// `(q,t) -> (1/q,1/t)` on every coefficient.
    pub fn bar(&self) -> SymSuperPoly {
        self.try_map_coeffs(|_, c| Ok(c.bar())).expect("reciprocal substitution never fails on a reduced fraction")
    }

    fn int_rows(
        &self,
        target: Basis,
        matrix: &BasisMatrix<BigInt>,
    ) -> SymSuperPoly {
        let mut out = Self::zero(target, self.n, self.m);
        for (l, c) in &self.coeffs {
            let row = &matrix.rows[matrix.position(l).expect("same degree")];
            for (o, x) in matrix.index.iter().zip(row) {
                if x.sign() != num_bigint::Sign::NoSign {
                    out.add_term(o, &c.mul(&RatFunc::from_bigint(x.clone())));
                }
            }
        }
        out
    }

    pub fn to_monomial(&self) -> Result<SymSuperPoly, EngineError> {
        match self.basis {
            Basis::Monomial => Ok(self.clone()),
            Basis::PowerSum => Ok(self.int_rows(Basis::Monomial, &p_to_m(self.n, self.m))),
            Basis::Elementary => Ok(self.int_rows(Basis::Monomial, &e_to_m(self.n, self.m))),
            b => Err(EngineError::NoConversion(b)),
        }
    }

    pub fn to_powersum(&self) -> Result<SymSuperPoly, EngineError> {
        let mono = match self.basis {
            Basis::PowerSum => return Ok(self.clone()),
            _ => self.to_monomial()?,
        };
        let inv = m_to_p(self.n, self.m);
        let mut acc: Vec<RatFunc> = vec![RatFunc::zero(); inv.len()];
        for (l, c) in &mono.coeffs {
            let row = &inv.rows[inv.position(l).expect("same degree")];
            for (slot, x) in acc.iter_mut().zip(row) {
                if !num_traits::Zero::is_zero(x) {
                    *slot = slot.add(&c.mul(&RatFunc::from_rational(x)));
                }
            }
        }
        Ok(Self::from_coeffs(Basis::PowerSum, self.n, self.m, inv.index.iter().cloned().zip(acc)))
    }

    /// Expansion in `N` variables; only the monomial and power-sum bases.
    pub fn to_concrete(&self, nvars: usize) -> Result<ConcreteSuperPoly<RatFunc>, EngineError> {
        let expand = match self.basis {
            Basis::Monomial => expand_monomial,
            Basis::PowerSum => expand_powersum,
            Basis::Elementary => expand_elementary,
            b => return Err(EngineError::NoConversion(b)),
        };
        let mut out = ConcreteSuperPoly::zero(nvars);
        for (l, c) in &self.coeffs {
            let e = expand(l, nvars)?.map_coeffs(|x| RatFunc::from_bigint(x.clone()).mul(c));
            out = out.add(&e);
        }
        Ok(out)
    }

    pub fn from_concrete(f: &ConcreteSuperPoly<RatFunc>, n: u32, m: u32) -> Result<SymSuperPoly, EngineError> {
        Ok(Self::from_coeffs(Basis::Monomial, n, m, f.to_basis_monomial(n, m)?))
    }
}

impl fmt::Display for SymSuperPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let sym = self.basis.symbol();
        for (i, (l, c)) in self.coeffs.iter().enumerate() {
            let negative = c.den().is_one() && c.num().nterms() == 1 && c.num().display_sign() < 0;
            let (sign, body) = if negative { ("-", c.neg().to_string()) } else { ("+", c.to_string()) };
            match (i, sign) {
                (0, "-") => write!(f, "-")?,
                (0, _) => {}
                (_, s) => write!(f, " {s} ")?,
            }
            if body == "1" {
                write!(f, "{sym}[{l}]")?;
            } else if c.den().is_one() && c.num().nterms() > 1 {
                write!(f, "({body}) {sym}[{l}]")?;
            } else {
                write!(f, "{body} {sym}[{l}]")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SymSuperPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
