//! Dense univariate polynomials over the integers.
//!
//! These are the coefficient ring `Z[t]` of [`MPoly`](super::MPoly), which is
//! stored as a polynomial in `q` with `Z[t]` coefficients.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Coefficients low degree first; no trailing zeros. The zero polynomial is
/// the empty vector.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct UPoly {
    c: Vec<BigInt>,
}

impl UPoly {
    pub fn zero() -> Self {
        UPoly { c: Vec::new() }
    }

    pub fn constant(v: BigInt) -> Self {
        let mut p = UPoly { c: vec![v] };
        p.trim();
        p
    }

    pub fn one() -> Self {
        UPoly::constant(BigInt::one())
    }

    pub fn from_coeffs(c: Vec<BigInt>) -> Self {
        let mut p = UPoly { c };
        p.trim();
        p
    }

    /// `v * t^k`
    pub fn monomial(v: BigInt, k: usize) -> Self {
        if v.is_zero() {
            return UPoly::zero();
        }
        let mut c = vec![BigInt::zero(); k + 1];
        c[k] = v;
        UPoly { c }
    }

    fn trim(&mut self) {
        while matches!(self.c.last(), Some(x) if x.is_zero()) {
            self.c.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.c.len() == 1 && self.c[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.c.len() <= 1
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn lc(&self) -> Option<&BigInt> {
        self.c.last()
    }

    /// Lowest exponent carrying a nonzero coefficient.
    pub fn low_degree(&self) -> Option<usize> {
        self.c.iter().position(|x| !x.is_zero())
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.c.get(k).cloned().unwrap_or_default()
    }

    pub fn add(&self, other: &UPoly) -> UPoly {
        let (long, short) = if self.c.len() >= other.c.len() { (self, other) } else { (other, self) };
        let mut c = long.c.clone();
        for (a, b) in c.iter_mut().zip(&short.c) {
            *a += b;
        }
        UPoly::from_coeffs(c)
    }

    pub fn sub(&self, other: &UPoly) -> UPoly {
        let n = self.c.len().max(other.c.len());
        let mut c = Vec::with_capacity(n);
        for k in 0..n {
            let a = self.c.get(k);
            let b = other.c.get(k);
            c.push(match (a, b) {
                (Some(a), Some(b)) => a - b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => -b,
                (None, None) => unreachable!(),
            });
        }
        UPoly::from_coeffs(c)
    }

    pub fn neg(&self) -> UPoly {
        UPoly { c: self.c.iter().map(|x| -x).collect() }
    }

    pub fn mul(&self, other: &UPoly) -> UPoly {
        if self.is_zero() || other.is_zero() {
            return UPoly::zero();
        }
        if other.c.len() == 1 {
            return self.scale(&other.c[0]);
        }
        if self.c.len() == 1 {
            return other.scale(&self.c[0]);
        }
        let mut c = vec![BigInt::zero(); self.c.len() + other.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.c.iter().enumerate() {
                if !b.is_zero() {
                    c[i + j] += a * b;
                }
            }
        }
        UPoly::from_coeffs(c)
    }

    pub fn scale(&self, k: &BigInt) -> UPoly {
        if k.is_zero() {
            return UPoly::zero();
        }
        if k.is_one() {
            return self.clone();
        }
        UPoly { c: self.c.iter().map(|x| x * k).collect() }
    }

    /// Multiply by `t^k`.
    pub fn shift(&self, k: usize) -> UPoly {
        if self.is_zero() || k == 0 {
            return self.clone();
        }
        let mut c = vec![BigInt::zero(); k];
        c.extend(self.c.iter().cloned());
        UPoly { c }
    }

    /// Divide by `t^k`; the caller guarantees divisibility.
    pub fn unshift(&self, k: usize) -> UPoly {
        debug_assert!(self.c.iter().take(k).all(|x| x.is_zero()));
        UPoly { c: self.c.iter().skip(k).cloned().collect() }
    }

    /// Exact division by an integer; `None` if some coefficient is not divisible.
    pub fn div_scalar_exact(&self, k: &BigInt) -> Option<UPoly> {
        if k.is_one() {
            return Some(self.clone());
        }
        let mut c = Vec::with_capacity(self.c.len());
        for x in &self.c {
            let (q, r) = x.div_rem(k);
            if !r.is_zero() {
                return None;
            }
            c.push(q);
        }
        Some(UPoly { c })
    }

    /// Nonnegative gcd of the coefficients.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for x in &self.c {
            g = g.gcd(x);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Primitive part with positive leading coefficient.
    pub fn primitive(&self) -> UPoly {
        if self.is_zero() {
            return UPoly::zero();
        }
        let mut g = self.content();
        if self.lc().unwrap().is_negative() {
            g = -g;
        }
        self.div_scalar_exact(&g).unwrap()
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.c.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Pseudo-remainder `lc(d)^(deg a - deg d + 1) * a mod d`.
    pub fn pseudo_rem(&self, d: &UPoly) -> UPoly {
        let dd = d.degree().expect("pseudo_rem by zero");
        let lc = d.lc().unwrap().clone();
        let mut r = self.clone();
        let mut steps = match r.degree() {
            Some(dr) if dr >= dd => dr - dd + 1,
            _ => return r,
        };
        while let Some(dr) = r.degree() {
            if dr < dd {
                break;
            }
            let lr = r.c[dr].clone();
            let mut nc: Vec<BigInt> = r.c.iter().map(|x| x * &lc).collect();
            for (j, dj) in d.c.iter().enumerate() {
                nc[dr - dd + j] -= &lr * dj;
            }
            r = UPoly::from_coeffs(nc);
            steps -= 1;
        }
        if steps > 0 {
            let f = num_traits::pow(lc, steps);
            r = r.scale(&f);
        }
        r
    }

    /// Exact quotient `self / d`, or `None` if `d` does not divide `self` in `Z[t]`.
    pub fn div_exact(&self, d: &UPoly) -> Option<UPoly> {
        let dd = d.degree().expect("division by zero polynomial");
        if self.is_zero() {
            return Some(UPoly::zero());
        }
        if dd == 0 {
            return self.div_scalar_exact(&d.c[0]);
        }
        let ds = self.degree().unwrap();
        if ds < dd {
            return None;
        }
        let lc = d.lc().unwrap();
        let mut r = self.c.clone();
        let mut quo = vec![BigInt::zero(); ds - dd + 1];
        for k in (0..=ds - dd).rev() {
            let top = &r[k + dd];
            if top.is_zero() {
                continue;
            }
            let (qk, rem) = top.div_rem(lc);
            if !rem.is_zero() {
                return None;
            }
            for (j, dj) in d.c.iter().enumerate() {
                r[k + j] -= &qk * dj;
            }
            quo[k] = qk;
        }
        if r.iter().any(|x| !x.is_zero()) {
            return None;
        }
        Some(UPoly::from_coeffs(quo))
    }

    /// Greatest common divisor in `Z[t]`, with positive leading coefficient.
    pub fn gcd(&self, other: &UPoly) -> UPoly {
        if self.is_zero() {
            return other.normalized();
        }
        if other.is_zero() {
            return self.normalized();
        }
        let ca = self.content();
        let cb = other.content();
        let c = ca.gcd(&cb);
        let sa = self.low_degree().unwrap();
        let sb = other.low_degree().unwrap();
        let s = sa.min(sb);
        let a = self.unshift(sa).div_scalar_exact(&ca).unwrap();
        let b = other.unshift(sb).div_scalar_exact(&cb).unwrap();
        let g = primitive_gcd(a, b);
        g.scale(&c).shift(s)
    }

    fn normalized(&self) -> UPoly {
        if matches!(self.lc(), Some(x) if x.is_negative()) {
            self.neg()
        } else {
            self.clone()
        }
    }
}

/// gcd of two primitive polynomials with nonzero constant terms.
fn primitive_gcd(a: UPoly, b: UPoly) -> UPoly {
    let (mut a, mut b) = if a.degree() >= b.degree() { (a, b) } else { (b, a) };
    if b.degree() == Some(0) {
        return UPoly::one();
    }
    if a == b {
        return a.primitive();
    }
    if let Some(_) = a.div_exact(&b) {
        return b.primitive();
    }
    if let Some(g) = super::heugcd::gcd_u(&a, &b) {
        return g;
    }
    // Subresultant remainder sequence.
    let mut g = BigInt::one();
    let mut h = BigInt::one();
    loop {
        let delta = a.degree().unwrap() - b.degree().unwrap();
        let r = a.pseudo_rem(&b);
        if r.is_zero() {
            return b.primitive();
        }
        if r.degree() == Some(0) {
            return UPoly::one();
        }
        let divisor = &g * num_traits::pow(h.clone(), delta);
        a = b;
        b = r.div_scalar_exact(&divisor).expect("subresultant division");
        g = a.lc().unwrap().clone();
        h = if delta == 0 {
            h
        } else {
            let num = num_traits::pow(g.clone(), delta);
            let den = num_traits::pow(h, delta - 1);
            num / den
        };
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[i64]) -> UPoly {
        UPoly::from_coeffs(v.iter().map(|&x| BigInt::from(x)).collect())
    }

    #[test]
    fn gcd_of_cyclotomic_products() {
        // (1-t^2)(1-t^3) and (1-t)^2(1+t)
        let a = p(&[1, 0, -1]).mul(&p(&[1, 0, 0, -1]));
        let b = p(&[1, -1]).mul(&p(&[1, -1])).mul(&p(&[1, 1]));
        let g = a.gcd(&b);
        assert_eq!(g, p(&[1, -1]).mul(&p(&[1, 1])).mul(&p(&[1, -1])).primitive());
    }

    #[test]
    fn gcd_keeps_integer_content() {
        let a = p(&[6, 6]);
        let b = p(&[4, 4]);
        assert_eq!(a.gcd(&b), p(&[2, 2]));
    }

    #[test]
    fn exact_division() {
        let a = p(&[1, 0, -1]);
        assert_eq!(a.div_exact(&p(&[1, 1])), Some(p(&[1, -1])));
        assert_eq!(a.div_exact(&p(&[2, 1])), None);
    }
}
