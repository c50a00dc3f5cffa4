//! Reduced rational functions in `Q(q,t)`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::mpoly::MPoly;
use super::AlgebraError;

/// A fraction `num/den` of integer polynomials kept in canonical form:
/// `gcd(num, den)` is a unit (integer content included) and the first
/// display term of `den` (lowest total degree, `q`-heaviest) is positive.
/// Zero is `0/1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: MPoly,
    den: MPoly,
}

/// What a single variable is replaced by in [`RatFunc::substitute`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Substitution {
    Keep,
    Zero,
    One,
    /// Replace this variable by the other one (`q := t` or `t := q`).
    Other,
    Const(BigRational),
    /// `x := 1/x`
    Reciprocal,
}

/// Image of a variable: `coeff * q^eq * t^et`, or zero.
#[derive(Clone)]
struct Image {
    coeff: BigRational,
    eq: i64,
    et: i64,
}

impl Substitution {
    fn image(&self, is_q: bool) -> Option<Image> {
        let (own, other) = if is_q { ((1, 0), (0, 1)) } else { ((0, 1), (1, 0)) };
        let unit = BigRational::one();
        match self {
            Substitution::Keep => Some(Image { coeff: unit, eq: own.0, et: own.1 }),
            Substitution::Zero => None,
            Substitution::One => Some(Image { coeff: unit, eq: 0, et: 0 }),
            Substitution::Other => Some(Image { coeff: unit, eq: other.0, et: other.1 }),
            Substitution::Const(c) if c.is_zero() => None,
            Substitution::Const(c) => Some(Image { coeff: c.clone(), eq: 0, et: 0 }),
            Substitution::Reciprocal => Some(Image { coeff: unit, eq: -own.0, et: -own.1 }),
        }
    }
}

/// Laurent polynomial with rational coefficients, used only while substituting.
type Laurent = std::collections::BTreeMap<(i64, i64), BigRational>;

fn substitute_poly(p: &MPoly, qi: &Option<Image>, ti: &Option<Image>) -> Laurent {
    let mut out = Laurent::new();
    for ((a, b), c) in p.terms() {
        let mut coeff = BigRational::from_integer(c.clone());
        let mut eq = 0i64;
        let mut et = 0i64;
        for (img, e) in [(qi, a), (ti, b)] {
            if e == 0 {
                continue;
            }
            match img {
                None => {
                    coeff = BigRational::zero();
                    break;
                }
                Some(img) => {
                    coeff *= num_traits::pow(img.coeff.clone(), e as usize);
                    eq += img.eq * e as i64;
                    et += img.et * e as i64;
                }
            }
        }
        if coeff.is_zero() {
            continue;
        }
        let slot = out.entry((eq, et)).or_insert_with(BigRational::zero);
        *slot += coeff;
        if slot.is_zero() {
            out.remove(&(eq, et));
        }
    }
    out
}

impl RatFunc {
    pub fn zero() -> Self {
        RatFunc { num: MPoly::zero(), den: MPoly::one() }
    }

    pub fn one() -> Self {
        RatFunc { num: MPoly::one(), den: MPoly::one() }
    }

    pub fn from_int(v: i64) -> Self {
        RatFunc::from_poly(MPoly::from_int(v))
    }

    pub fn from_bigint(v: BigInt) -> Self {
        RatFunc::from_poly(MPoly::constant(v))
    }

    pub fn from_rational(r: &BigRational) -> Self {
        RatFunc::new(MPoly::constant(r.numer().clone()), MPoly::constant(r.denom().clone()))
            .expect("nonzero denominator")
    }

    pub fn q() -> Self {
        RatFunc::from_poly(MPoly::q())
    }

    pub fn t() -> Self {
        RatFunc::from_poly(MPoly::t())
    }

    pub fn from_poly(p: MPoly) -> Self {
        RatFunc { num: p, den: MPoly::one() }
    }

    /// Reduce `num/den` to canonical form.
    pub fn new(num: MPoly, den: MPoly) -> Result<Self, AlgebraError> {
        if den.is_zero() {
            return Err(AlgebraError::ZeroDivisor);
        }
        if num.is_zero() {
            return Ok(RatFunc::zero());
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_exact(&g).expect("gcd divides"), den.div_exact(&g).expect("gcd divides"))
        };
        Ok(RatFunc::normalize_sign(num, den))
    }

    fn normalize_sign(num: MPoly, den: MPoly) -> Self {
        if den.display_sign() < 0 {
            RatFunc { num: num.neg(), den: den.neg() }
        } else {
            RatFunc { num, den }
        }
    }

    /// `q^a t^b` with possibly negative exponents.
    pub fn laurent_monomial(a: i64, b: i64) -> Self {
        let (na, da) = if a >= 0 { (a as u32, 0) } else { (0, (-a) as u32) };
        let (nb, db) = if b >= 0 { (b as u32, 0) } else { (0, (-b) as u32) };
        RatFunc {
            num: MPoly::monomial(BigInt::one(), na, nb),
            den: MPoly::monomial(BigInt::one(), da, db),
        }
    }

    pub fn num(&self) -> &MPoly {
        &self.num
    }

    pub fn den(&self) -> &MPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// Denominator is 1, i.e. the value is a polynomial in `Z[q,t]`.
    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// Polynomial with every integer coefficient nonnegative.
    pub fn is_nonneg_polynomial(&self) -> bool {
        self.is_polynomial() && self.num.terms().all(|(_, c)| !c.is_negative())
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        let n = self.num.as_constant()?;
        let d = self.den.as_constant()?;
        Some(BigRational::new(n, d))
    }

    pub fn neg(&self) -> RatFunc {
        RatFunc { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn add(&self, other: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            let num = self.num.add(&other.num);
            return RatFunc::new(num, self.den.clone()).unwrap();
        }
        if self.den.is_one() {
            return RatFunc { num: self.num.mul(&other.den).add(&other.num), den: other.den.clone() };
        }
        if other.den.is_one() {
            return RatFunc { num: other.num.mul(&self.den).add(&self.num), den: self.den.clone() };
        }
        // Henrici: only the shared part of the denominators can cancel.
        let g = self.den.gcd(&other.den);
        if g.is_one() {
            let num = self.num.mul(&other.den).add(&other.num.mul(&self.den));
            let den = self.den.mul(&other.den);
            return RatFunc::normalize_sign(num, den);
        }
        let ad = self.den.div_exact(&g).unwrap();
        let bd = other.den.div_exact(&g).unwrap();
        let num = self.num.mul(&bd).add(&other.num.mul(&ad));
        if num.is_zero() {
            return RatFunc::zero();
        }
        let g2 = num.gcd(&g);
        let (num, gr) = if g2.is_one() {
            (num, g)
        } else {
            (num.div_exact(&g2).unwrap(), g.div_exact(&g2).unwrap())
        };
        RatFunc::normalize_sign(num, ad.mul(&bd).mul(&gr))
    }

    pub fn sub(&self, other: &RatFunc) -> RatFunc {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &RatFunc) -> RatFunc {
        if self.is_zero() || other.is_zero() {
            return RatFunc::zero();
        }
        if self.is_one() {
            return other.clone();
        }
        if other.is_one() {
            return self.clone();
        }
        let g1 = self.num.gcd(&other.den);
        let g2 = other.num.gcd(&self.den);
        let (an, bd) = if g1.is_one() {
            (self.num.clone(), other.den.clone())
        } else {
            (self.num.div_exact(&g1).unwrap(), other.den.div_exact(&g1).unwrap())
        };
        let (bn, ad) = if g2.is_one() {
            (other.num.clone(), self.den.clone())
        } else {
            (other.num.div_exact(&g2).unwrap(), self.den.div_exact(&g2).unwrap())
        };
        RatFunc::normalize_sign(an.mul(&bn), ad.mul(&bd))
    }

    pub fn inv(&self) -> Result<RatFunc, AlgebraError> {
        if self.is_zero() {
            return Err(AlgebraError::ZeroDivisor);
        }
        Ok(RatFunc::normalize_sign(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, other: &RatFunc) -> Result<RatFunc, AlgebraError> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, k: u32) -> RatFunc {
        RatFunc { num: self.num.pow(k), den: self.den.pow(k) }
    }

    pub fn scale_int(&self, k: i64) -> RatFunc {
        self.mul(&RatFunc::from_int(k))
    }

    /// Replace `q` and `t` simultaneously. Reciprocal images are handled by
    /// clearing the minimal monomial from numerator and denominator.
    pub fn substitute(&self, q_sub: &Substitution, t_sub: &Substitution) -> Result<RatFunc, AlgebraError> {
        let qi = q_sub.image(true);
        let ti = t_sub.image(false);
        let n = substitute_poly(&self.num, &qi, &ti);
        let d = substitute_poly(&self.den, &qi, &ti);
        if d.is_empty() {
            return Err(AlgebraError::DenominatorVanishes);
        }
        if n.is_empty() {
            return Ok(RatFunc::zero());
        }
        let min_q = n.keys().chain(d.keys()).map(|e| e.0).min().unwrap();
        let min_t = n.keys().chain(d.keys()).map(|e| e.1).min().unwrap();
        let mut lcm = BigInt::one();
        for c in n.values().chain(d.values()) {
            lcm = lcm.lcm(c.denom());
        }
        let clear = |l: &Laurent| {
            MPoly::from_terms(l.iter().map(|(&(a, b), c)| {
                let v = c * BigRational::from_integer(lcm.clone());
                (((a - min_q) as u32, (b - min_t) as u32), v.to_integer())
            }))
        };
        RatFunc::new(clear(&n), clear(&d))
    }

    /// Exact value at a rational point.
    pub fn eval_rational_point(&self, q0: &BigRational, t0: &BigRational) -> Result<BigRational, AlgebraError> {
        let d = self.den.eval_rational(q0, t0);
        if d.is_zero() {
            return Err(AlgebraError::Pole);
        }
        Ok(self.num.eval_rational(q0, t0) / d)
    }

    /// `(q,t) -> (1/q, 1/t)`.
    pub fn bar(&self) -> RatFunc {
        self.substitute(&Substitution::Reciprocal, &Substitution::Reciprocal)
            .expect("reciprocal substitution never annihilates a nonzero polynomial")
    }

    /// Exchange `q` and `t`.
    pub fn swap_vars(&self) -> RatFunc {
        RatFunc::normalize_sign(self.num.swap_vars(), self.den.swap_vars())
    }
}

impl fmt::Display for RatFunc {
    /// `num` alone for polynomials, otherwise `(num)/(den)`; parentheses are
    /// dropped around single terms.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let num = if self.num.nterms() > 1 { format!("({})", self.num) } else { self.num.to_string() };
        let bare_den = self.den.as_constant().is_some()
            || (self.den.nterms() == 1 && self.den.terms().all(|(_, c)| c.is_one()));
        let den = if bare_den { self.den.to_string() } else { format!("({})", self.den) };
        write!(f, "{num}/{den}")
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({self})")
    }
}

impl From<MPoly> for RatFunc {
    fn from(p: MPoly) -> Self {
        RatFunc::from_poly(p)
    }
}

impl From<i64> for RatFunc {
    fn from(v: i64) -> Self {
        RatFunc::from_int(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse::parse_ratfunc;

    fn r(s: &str) -> RatFunc {
        parse_ratfunc(s).unwrap()
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn canonical_rendering() {
        let c = r("q*(1-t)/(1-q*t)");
        assert_eq!(c.to_string(), "(q - q*t)/(1 - q*t)");
    }

    #[test]
    fn arithmetic_examples() {
        let c = r("q*(1-t)/(1-q*t)");
        assert_eq!(c.mul(&r("(1-q*t)/(1-t)")), RatFunc::q());
        assert_eq!(r("(1-t^2)/(1-t)"), r("1+t"));
        assert!(r("1/(1-q*t)").add(&r("-1/(1-q*t)")).is_zero());
        assert_eq!(RatFunc::one().div(&RatFunc::zero()), Err(AlgebraError::ZeroDivisor));
    }

    #[test]
    fn substitution_examples() {
        use Substitution::*;
        let c = r("q*(1-t)/(1-q*t)");
        assert_eq!(c.substitute(&Reciprocal, &Reciprocal).unwrap(), r("(1-t)/(1-q*t)"));
        assert!(c.substitute(&Keep, &One).unwrap().is_zero());
        let d = r("(1-t)/(1-q*t)");
        assert_eq!(d.substitute(&Other, &Keep).unwrap(), r("1/(1+t)"));
        assert_eq!(r("1/(1-q)").substitute(&One, &Keep), Err(AlgebraError::DenominatorVanishes));
        assert_eq!(r("1/q").substitute(&Zero, &Keep), Err(AlgebraError::DenominatorVanishes));
        assert_eq!(r("(1-q)/q").substitute(&Const(rat(1, 2)), &Keep).unwrap(), RatFunc::one());
    }

    #[test]
    fn evaluation_examples() {
        let c = r("q*(1-t)/(1-q*t)");
        assert_eq!(c.eval_rational_point(&rat(1, 2), &rat(1, 3)).unwrap(), rat(2, 5));
        assert_eq!(r("1/(1-q*t)").eval_rational_point(&rat(1, 1), &rat(1, 1)), Err(AlgebraError::Pole));
        assert_eq!(RatFunc::one().eval_rational_point(&rat(7, 3), &rat(-2, 9)).unwrap(), rat(1, 1));
    }

    #[test]
    fn integer_content_is_reduced() {
        let x = RatFunc::new(MPoly::from_int(6).mul(&MPoly::q()), MPoly::from_int(4)).unwrap();
        assert_eq!(x.to_string(), "3*q/2");
        let y = RatFunc::new(MPoly::from_int(-2), MPoly::from_int(-4).mul(&MPoly::t())).unwrap();
        assert_eq!(y.to_string(), "1/(2*t)");
    }
}
