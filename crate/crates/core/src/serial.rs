//! JSON records for cached and reported data.
//!
//! A rational function is `{"num": [...], "den": [...]}` where each term is
//! `[coefficient, e_q, e_t]` with the integer coefficient as a string and the
//! terms in graded-lex descending order.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::algebra::{MPoly, RatFunc};
use crate::inner::Gram;
use crate::superpartition::SuperPartition;
use crate::superpoly::{Basis, SymSuperPoly};

/// Bumped whenever any record layout changes; stale cache files are ignored.
pub const FORMAT_VERSION: u32 = 1;

pub type JsonTerm = (String, u32, u32);

pub fn poly_terms(p: &MPoly) -> Vec<JsonTerm> {
    p.sorted_terms_desc().into_iter().map(|((a, b), c)| (c.to_string(), a, b)).collect()
}

pub fn poly_from_terms(terms: &[JsonTerm]) -> Result<MPoly, String> {
    let mut out = Vec::with_capacity(terms.len());
    for (c, a, b) in terms {
        let c: BigInt = c.parse().map_err(|_| format!("bad integer {c:?}"))?;
        out.push(((*a, *b), c));
    }
    Ok(MPoly::from_terms(out))
}

#[derive(Serialize, Deserialize)]
struct RatFuncRecord {
    num: Vec<JsonTerm>,
    den: Vec<JsonTerm>,
}

impl Serialize for RatFunc {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        RatFuncRecord { num: poly_terms(self.num()), den: poly_terms(self.den()) }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for RatFunc {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let r = RatFuncRecord::deserialize(d)?;
        let num = poly_from_terms(&r.num).map_err(D::Error::custom)?;
        let den = poly_from_terms(&r.den).map_err(D::Error::custom)?;
        RatFunc::new(num, den).map_err(D::Error::custom)
    }
}

#[derive(Serialize, Deserialize)]
struct SymRecord {
    basis: Basis,
    n: u32,
    m: u32,
    coeffs: BTreeMap<String, RatFunc>,
}

impl Serialize for SymSuperPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let (n, m) = self.degree();
        let coeffs = self.coeffs().iter().map(|(l, c)| (l.to_string(), c.clone())).collect();
        SymRecord { basis: self.basis(), n, m, coeffs }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for SymSuperPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let r = SymRecord::deserialize(d)?;
        let mut coeffs = Vec::with_capacity(r.coeffs.len());
        for (k, c) in r.coeffs {
            let l: SuperPartition = k.parse().map_err(D::Error::custom)?;
            if l.degree() != (r.n, r.m) {
                return Err(D::Error::custom(format!("{k} is not of degree ({}|{})", r.n, r.m)));
            }
            coeffs.push((l, c));
        }
        Ok(SymSuperPoly::from_coeffs(r.basis, r.n, r.m, coeffs))
    }
}

/// `family.json`
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FamilyRecord {
    pub format_version: u32,
    pub n: u32,
    pub m: u32,
    pub kind: String,
    pub polys: BTreeMap<String, SymSuperPoly>,
}

impl FamilyRecord {
    pub fn new(n: u32, m: u32, kind: &str, polys: &BTreeMap<SuperPartition, SymSuperPoly>) -> Self {
        let polys = polys.iter().map(|(l, p)| (l.to_string(), p.clone())).collect();
        FamilyRecord { format_version: FORMAT_VERSION, n, m, kind: kind.to_string(), polys }
    }

    pub fn polys(&self) -> Result<BTreeMap<SuperPartition, SymSuperPoly>, String> {
        self.polys
            .iter()
            .map(|(k, p)| Ok((k.parse::<SuperPartition>().map_err(|e| e.to_string())?, p.clone())))
            .collect()
    }
}

/// `gram/{n}_{m}/{kind}.json`
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GramRecord {
    pub format_version: u32,
    pub n: u32,
    pub m: u32,
    pub kind: String,
    pub index: Vec<String>,
    pub entries: Vec<Vec<RatFunc>>,
}

impl GramRecord {
    pub fn new(n: u32, m: u32, kind: &str, gram: &Gram) -> Self {
        GramRecord {
            format_version: FORMAT_VERSION,
            n,
            m,
            kind: kind.to_string(),
            index: gram.index.iter().map(|l| l.to_string()).collect(),
            entries: gram.entries.clone(),
        }
    }
}
