//! Bivariate integer polynomials in `q` and `t`.
//!
//! An [`MPoly`] is stored as a polynomial in `q` whose coefficients are dense
//! [`UPoly`] values in `t`. That representation is canonical (no zero
//! coefficients survive trimming), so derived equality is structural
//! equality of the term map.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::upoly::UPoly;

/// Exponent pair `(e_q, e_t)`.
pub type Exponent = (u32, u32);

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct MPoly {
    /// `coeffs[i]` is the coefficient of `q^i`; no trailing zeros.
    coeffs: Vec<UPoly>,
}

/// Graded-lexicographic comparison with `q > t`.
pub fn grlex_cmp(a: Exponent, b: Exponent) -> Ordering {
    (a.0 + a.1).cmp(&(b.0 + b.1)).then(a.0.cmp(&b.0))
}

impl MPoly {
    pub fn zero() -> Self {
        MPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        MPoly::constant(BigInt::one())
    }

    pub fn constant(v: BigInt) -> Self {
        MPoly::from_q_coeffs(vec![UPoly::constant(v)])
    }

    pub fn from_int(v: i64) -> Self {
        MPoly::constant(BigInt::from(v))
    }

    pub fn q() -> Self {
        MPoly::monomial(BigInt::one(), 1, 0)
    }

    pub fn t() -> Self {
        MPoly::monomial(BigInt::one(), 0, 1)
    }

    /// `c * q^a * t^b`
    pub fn monomial(c: BigInt, a: u32, b: u32) -> Self {
        if c.is_zero() {
            return MPoly::zero();
        }
        let mut coeffs = vec![UPoly::zero(); a as usize + 1];
        coeffs[a as usize] = UPoly::monomial(c, b as usize);
        MPoly { coeffs }
    }

    pub fn from_terms<I: IntoIterator<Item = (Exponent, BigInt)>>(terms: I) -> Self {
        let mut rows: Vec<Vec<BigInt>> = Vec::new();
        for ((a, b), c) in terms {
            let (a, b) = (a as usize, b as usize);
            if rows.len() <= a {
                rows.resize(a + 1, Vec::new());
            }
            let row = &mut rows[a];
            if row.len() <= b {
                row.resize(b + 1, BigInt::zero());
            }
            row[b] += c;
        }
        MPoly::from_q_coeffs(rows.into_iter().map(UPoly::from_coeffs).collect())
    }

    pub(crate) fn q_coeffs(&self) -> &[UPoly] {
        &self.coeffs
    }

    pub(crate) fn from_q_coeffs(coeffs: Vec<UPoly>) -> Self {
        let mut p = MPoly { coeffs };
        while matches!(p.coeffs.last(), Some(c) if c.is_zero()) {
            p.coeffs.pop();
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// The polynomial is an integer constant.
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.coeffs.len() {
            0 => Some(BigInt::zero()),
            1 if self.coeffs[0].is_constant() => Some(self.coeffs[0].coeff(0)),
            _ => None,
        }
    }

    pub fn degree_q(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn degree_t(&self) -> Option<usize> {
        self.coeffs.iter().filter_map(|c| c.degree()).max()
    }

    /// Number of nonzero terms.
    pub fn nterms(&self) -> usize {
        self.coeffs.iter().map(|c| c.coeffs().iter().filter(|x| !x.is_zero()).count()).sum()
    }

    /// Terms in no particular order.
    pub fn terms(&self) -> impl Iterator<Item = (Exponent, &BigInt)> + '_ {
        self.coeffs.iter().enumerate().flat_map(|(i, up)| {
            up.coeffs()
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(move |(j, c)| ((i as u32, j as u32), c))
        })
    }

    /// Terms sorted by graded-lex order, highest first.
    pub fn sorted_terms_desc(&self) -> Vec<(Exponent, BigInt)> {
        let mut v: Vec<_> = self.terms().map(|(e, c)| (e, c.clone())).collect();
        v.sort_by(|x, y| grlex_cmp(y.0, x.0));
        v
    }

    /// Terms sorted by total degree ascending, `q`-heavier first within a degree.
    pub fn sorted_terms_display(&self) -> Vec<(Exponent, BigInt)> {
        let mut v: Vec<_> = self.terms().map(|(e, c)| (e, c.clone())).collect();
        v.sort_by(|x, y| (x.0 .0 + x.0 .1).cmp(&(y.0 .0 + y.0 .1)).then(y.0 .0.cmp(&x.0 .0)));
        v
    }

    pub fn coeff(&self, e: Exponent) -> BigInt {
        self.coeffs.get(e.0 as usize).map(|c| c.coeff(e.1 as usize)).unwrap_or_default()
    }

    /// Leading term under graded-lex order.
    pub fn leading_term(&self) -> Option<(Exponent, BigInt)> {
        self.terms().max_by(|x, y| grlex_cmp(x.0, y.0)).map(|(e, c)| (e, c.clone()))
    }

    /// Lowest term under graded-lex order (first in display order).
    pub fn trailing_term(&self) -> Option<(Exponent, BigInt)> {
        self.terms()
            .min_by(|x, y| (x.0 .0 + x.0 .1).cmp(&(y.0 .0 + y.0 .1)).then(y.0 .0.cmp(&x.0 .0)))
            .map(|(e, c)| (e, c.clone()))
    }

    pub fn add(&self, other: &MPoly) -> MPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(match (self.coeffs.get(i), other.coeffs.get(i)) {
                (Some(a), Some(b)) => a.add(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            });
        }
        MPoly::from_q_coeffs(out)
    }

    pub fn sub(&self, other: &MPoly) -> MPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(match (self.coeffs.get(i), other.coeffs.get(i)) {
                (Some(a), Some(b)) => a.sub(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.neg(),
                (None, None) => unreachable!(),
            });
        }
        MPoly::from_q_coeffs(out)
    }

    pub fn neg(&self) -> MPoly {
        MPoly { coeffs: self.coeffs.iter().map(UPoly::neg).collect() }
    }

    pub fn mul(&self, other: &MPoly) -> MPoly {
        if self.is_zero() || other.is_zero() {
            return MPoly::zero();
        }
        if self.is_one() {
            return other.clone();
        }
        if other.is_one() {
            return self.clone();
        }
        let mut out = vec![UPoly::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = out[i + j].add(&a.mul(b));
                }
            }
        }
        MPoly::from_q_coeffs(out)
    }

    pub fn pow(&self, k: u32) -> MPoly {
        let mut acc = MPoly::one();
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn scale(&self, k: &BigInt) -> MPoly {
        MPoly::from_q_coeffs(self.coeffs.iter().map(|c| c.scale(k)).collect())
    }

    pub fn mul_upoly(&self, k: &UPoly) -> MPoly {
        MPoly::from_q_coeffs(self.coeffs.iter().map(|c| c.mul(k)).collect())
    }

    /// Multiply by `q^a t^b`.
    pub fn shift(&self, a: u32, b: u32) -> MPoly {
        if self.is_zero() {
            return MPoly::zero();
        }
        let mut out = vec![UPoly::zero(); a as usize];
        out.extend(self.coeffs.iter().map(|c| c.shift(b as usize)));
        MPoly { coeffs: out }
    }

    /// Largest `(a, b)` with `q^a t^b` dividing every term.
    pub fn monomial_content(&self) -> Exponent {
        let a = self.coeffs.iter().position(|c| !c.is_zero()).unwrap_or(0);
        let b = self.coeffs.iter().filter_map(|c| c.low_degree()).min().unwrap_or(0);
        (a as u32, b as u32)
    }

    /// Divide by `q^a t^b`; the caller guarantees divisibility.
    pub fn unshift(&self, a: u32, b: u32) -> MPoly {
        MPoly::from_q_coeffs(self.coeffs.iter().skip(a as usize).map(|c| c.unshift(b as usize)).collect())
    }

    /// Nonnegative gcd of all integer coefficients.
    pub fn integer_content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(&c.content());
            if g.is_one() {
                break;
            }
        }
        g
    }

    pub fn div_scalar_exact(&self, k: &BigInt) -> Option<MPoly> {
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            out.push(c.div_scalar_exact(k)?);
        }
        Some(MPoly { coeffs: out })
    }

    fn div_upoly_exact(&self, k: &UPoly) -> Option<MPoly> {
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            out.push(c.div_exact(k)?);
        }
        Some(MPoly { coeffs: out })
    }

    /// Content with respect to `q`: the gcd in `Z[t]` of the `q`-coefficients.
    fn q_content(&self) -> UPoly {
        let mut g = UPoly::zero();
        for c in &self.coeffs {
            if c.is_zero() {
                continue;
            }
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Exact quotient, or `None` when `d` does not divide `self` in `Z[q,t]`.
    pub fn div_exact(&self, d: &MPoly) -> Option<MPoly> {
        assert!(!d.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(MPoly::zero());
        }
        if d.is_one() {
            return Some(self.clone());
        }
        if d.coeffs.len() == 1 {
            return self.div_upoly_exact(&d.coeffs[0]);
        }
        let dd = d.coeffs.len() - 1;
        let ds = self.coeffs.len() - 1;
        if ds < dd {
            return None;
        }
        let lc = &d.coeffs[dd];
        let mut r = self.coeffs.clone();
        let mut quo = vec![UPoly::zero(); ds - dd + 1];
        for k in (0..=ds - dd).rev() {
            if r[k + dd].is_zero() {
                continue;
            }
            let qk = r[k + dd].div_exact(lc)?;
            for (j, dj) in d.coeffs.iter().enumerate() {
                if !dj.is_zero() {
                    r[k + j] = r[k + j].sub(&qk.mul(dj));
                }
            }
            quo[k] = qk;
        }
        if r.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(MPoly::from_q_coeffs(quo))
    }

    /// Sign so that the graded-lex trailing coefficient is positive.
    pub fn display_sign(&self) -> i8 {
        match self.trailing_term() {
            Some((_, c)) if c.is_negative() => -1,
            _ => 1,
        }
    }

    /// Greatest common divisor in `Z[q,t]`: includes the integer content and
    /// is normalized so that its trailing (display-first) coefficient is
    /// positive. `gcd(p, 0)` is `p` normalized.
    pub fn gcd(&self, other: &MPoly) -> MPoly {
        let g = if self.is_zero() {
            other.clone()
        } else if other.is_zero() {
            self.clone()
        } else {
            gcd_nonzero(self, other)
        };
        if g.display_sign() < 0 {
            g.neg()
        } else {
            g
        }
    }

    pub fn eval_rational(&self, q0: &num_rational::BigRational, t0: &num_rational::BigRational) -> num_rational::BigRational {
        use num_rational::BigRational;
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            let mut inner = BigRational::zero();
            for x in c.coeffs().iter().rev() {
                inner = inner * t0 + BigRational::from_integer(x.clone());
            }
            acc = acc * q0 + inner;
        }
        acc
    }

    /// Swap the roles of `q` and `t`.
    pub fn swap_vars(&self) -> MPoly {
        MPoly::from_terms(self.terms().map(|((a, b), c)| ((b, a), c.clone())))
    }
}

fn gcd_nonzero(a: &MPoly, b: &MPoly) -> MPoly {
    // Common monomial factor first: q^a t^b never survives otherwise.
    let (aq, at) = a.monomial_content();
    let (bq, bt) = b.monomial_content();
    let mono = (aq.min(bq), at.min(bt));
    let a = a.unshift(aq, at);
    let b = b.unshift(bq, bt);

    let g = if let Some(x) = a.as_constant() {
        MPoly::constant(x.gcd(&b.integer_content()))
    } else if let Some(x) = b.as_constant() {
        MPoly::constant(x.gcd(&a.integer_content()))
    } else if a.coeffs.len() == 1 || b.coeffs.len() == 1 {
        // One side is free of q: the gcd lies in Z[t].
        let ca = a.q_content();
        let cb = b.q_content();
        MPoly::from_q_coeffs(vec![ca.gcd(&cb)])
    } else if let Some(g) = super::heugcd::gcd_m(&a, &b) {
        g
    } else {
        let ca = a.q_content();
        let cb = b.q_content();
        let c = ca.gcd(&cb);
        let pa = a.div_upoly_exact(&ca).unwrap();
        let pb = b.div_upoly_exact(&cb).unwrap();
        primitive_gcd(pa, pb).mul_upoly(&c)
    };
    g.shift(mono.0, mono.1)
}

/// gcd of two polynomials that are primitive over `Z[t]`, via the
/// subresultant remainder sequence in `q`.
fn primitive_gcd(a: MPoly, b: MPoly) -> MPoly {
    let (mut a, mut b) = if a.coeffs.len() >= b.coeffs.len() { (a, b) } else { (b, a) };
    if b.coeffs.len() == 1 {
        return MPoly::one();
    }
    if a == b || a == b.neg() {
        return b;
    }
    if a.div_exact(&b).is_some() {
        return b;
    }
    let mut g = UPoly::one();
    let mut h = UPoly::one();
    loop {
        let delta = a.coeffs.len() - b.coeffs.len();
        let r = pseudo_rem(&a, &b);
        if r.is_zero() {
            let c = b.q_content();
            return b.div_upoly_exact(&c).unwrap();
        }
        if r.coeffs.len() == 1 {
            return MPoly::one();
        }
        let mut divisor = g.clone();
        for _ in 0..delta {
            divisor = divisor.mul(&h);
        }
        a = b;
        b = r.div_upoly_exact(&divisor).expect("subresultant division");
        g = a.coeffs.last().unwrap().clone();
        h = match delta {
            0 => h,
            1 => g.clone(),
            _ => {
                let mut num = g.clone();
                for _ in 1..delta {
                    num = num.mul(&g);
                }
                let mut den = h.clone();
                for _ in 2..delta {
                    den = den.mul(&h);
                }
                num.div_exact(&den).expect("subresultant h update")
            }
        };
    }
}

/// Pseudo-remainder in `q` over `Z[t]`.
fn pseudo_rem(a: &MPoly, d: &MPoly) -> MPoly {
    let dd = d.coeffs.len() - 1;
    let lc = &d.coeffs[dd];
    let mut r = a.coeffs.clone();
    let mut steps = (a.coeffs.len() - 1) + 1 - dd;
    while r.len() > dd {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        for x in r.iter_mut() {
            *x = x.mul(lc);
        }
        for (j, dj) in d.coeffs.iter().enumerate() {
            if !dj.is_zero() {
                r[dr - dd + j] = r[dr - dd + j].sub(&lr.mul(dj));
            }
        }
        while matches!(r.last(), Some(c) if c.is_zero()) {
            r.pop();
        }
        steps -= 1;
    }
    let mut out = MPoly::from_q_coeffs(r);
    for _ in 0..steps {
        out = out.mul_upoly(lc);
    }
    out
}

fn fmt_monomial(f: &mut fmt::Formatter<'_>, (a, b): Exponent) -> fmt::Result {
    let mut first = true;
    for (name, e) in [("q", a), ("t", b)] {
        if e == 0 {
            continue;
        }
        if !first {
            write!(f, "*")?;
        }
        first = false;
        if e == 1 {
            write!(f, "{name}")?;
        } else {
            write!(f, "{name}^{e}")?;
        }
    }
    Ok(())
}

impl fmt::Display for MPoly {
    /// Terms by ascending total degree, e.g. `1 - q*t` or `q - q*t`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.sorted_terms_display().into_iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            if e == (0, 0) {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                fmt_monomial(f, e)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn poly(s: &[(i64, u32, u32)]) -> MPoly {
        MPoly::from_terms(s.iter().map(|&(c, a, b)| ((a, b), BigInt::from(c))))
    }

    #[test]
    fn arithmetic_examples() {
        let one_m_t = poly(&[(1, 0, 0), (-1, 0, 1)]);
        let one_p_t = poly(&[(1, 0, 0), (1, 0, 1)]);
        assert_eq!(one_m_t.mul(&one_p_t), poly(&[(1, 0, 0), (-1, 0, 2)]));

        let a = poly(&[(1, 0, 0), (-1, 1, 1)]);
        let b = poly(&[(-1, 0, 0), (1, 1, 1)]);
        assert!(a.add(&b).is_zero());
        assert_eq!(a.add(&b).nterms(), 0);

        let x = poly(&[(1, 0, 0), (-1, 1, 0)]);
        let y = poly(&[(1, 0, 0), (-1, 2, 0)]);
        assert_eq!(x.mul(&y), poly(&[(1, 0, 0), (-1, 1, 0), (-1, 2, 0), (1, 3, 0)]));
    }

    #[test]
    fn gcd_examples() {
        let one_m_t = poly(&[(1, 0, 0), (-1, 0, 1)]);
        let a = poly(&[(1, 0, 0), (-1, 0, 2)]).mul(&poly(&[(1, 0, 0), (-1, 1, 1)]));
        let b = one_m_t.mul(&poly(&[(1, 0, 0), (-1, 1, 2)]));
        assert_eq!(a.gcd(&b), one_m_t);

        let p = poly(&[(2, 0, 0), (-4, 1, 1)]);
        assert_eq!(p.gcd(&MPoly::zero()), p);
        assert_eq!(MPoly::zero().gcd(&p.neg()), p);

        let c = poly(&[(1, 0, 0), (-1, 2, 2)]);
        let d = poly(&[(1, 0, 0), (-1, 1, 1)]);
        assert_eq!(c.gcd(&d), d);
    }

    #[test]
    fn gcd_with_monomial_and_content() {
        let a = poly(&[(6, 2, 1), (6, 3, 1)]);
        let b = poly(&[(4, 1, 3), (4, 2, 3)]);
        assert_eq!(a.gcd(&b), poly(&[(2, 1, 1), (2, 2, 1)]));
    }

    #[test]
    fn display_order() {
        let p = poly(&[(1, 1, 0), (-1, 1, 1)]);
        assert_eq!(p.to_string(), "q - q*t");
        let p = poly(&[(1, 0, 0), (-1, 1, 1)]);
        assert_eq!(p.to_string(), "1 - q*t");
        let p = poly(&[(-3, 2, 1), (2, 0, 0), (1, 0, 2)]);
        assert_eq!(p.to_string(), "2 + t^2 - 3*q^2*t");
    }

    #[test]
    fn exact_division() {
        let a = poly(&[(1, 0, 0), (-1, 2, 2)]);
        let d = poly(&[(1, 0, 0), (-1, 1, 1)]);
        assert_eq!(a.div_exact(&d), Some(poly(&[(1, 0, 0), (1, 1, 1)])));
        assert_eq!(d.div_exact(&a), None);
        assert_eq!(a.div_exact(&poly(&[(1, 0, 0), (-1, 1, 0)])), None);
    }
}
