//! Heuristic gcd by evaluation at a large integer, integer gcd and
//! symmetric-radix reconstruction. Every candidate is confirmed by exact
//! division; `None` means the heuristic gave up and the caller falls back to
//! a remainder sequence.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::mpoly::MPoly;
use super::upoly::UPoly;

const ATTEMPTS: usize = 6;

fn max_norm<'a>(it: impl Iterator<Item = &'a BigInt>) -> BigInt {
    it.map(|x| x.abs()).max().unwrap_or_default()
}

fn first_point(nf: &BigInt, ng: &BigInt, lf: &BigInt, lg: &BigInt) -> BigInt {
    let b: BigInt = BigInt::from(2) * nf.min(ng) + 29;
    let small = b.clone().min(BigInt::from(99) * b.sqrt());
    let ratio = BigInt::from(2) * (nf / lf.abs()).min(ng / lg.abs()) + 2;
    small.max(ratio)
}

fn next_point(x: &BigInt) -> BigInt {
    BigInt::from(73794) * x * x.sqrt().sqrt() / 27011
}

/// Digits of `v` in base `x`, symmetric range, low first.
fn digits(mut v: BigInt, x: &BigInt) -> Vec<BigInt> {
    let half = x / 2;
    let mut out = Vec::new();
    while !v.is_zero() {
        let mut d = v.mod_floor(x);
        if d > half {
            d -= x;
        }
        v = (v - &d) / x;
        out.push(d);
    }
    out
}

fn interpolate_u(v: &BigInt, x: &BigInt) -> UPoly {
    UPoly::from_coeffs(digits(v.clone(), x))
}

/// gcd of primitive polynomials in `Z[t]`.
pub(super) fn gcd_u(f: &UPoly, g: &UPoly) -> Option<UPoly> {
    let nf = max_norm(f.coeffs().iter());
    let ng = max_norm(g.coeffs().iter());
    let mut x = first_point(&nf, &ng, f.lc()?, g.lc()?);
    for _ in 0..ATTEMPTS {
        let fx = f.eval_int(&x);
        let gx = g.eval_int(&x);
        if !fx.is_zero() && !gx.is_zero() {
            let h = fx.gcd(&gx);
            let cand = interpolate_u(&h, &x).primitive();
            if !cand.is_zero() && f.div_exact(&cand).is_some() && g.div_exact(&cand).is_some() {
                return Some(cand);
            }
            for (v, a, b) in [(&fx / &h, f, g), (&gx / &h, g, f)] {
                let co = interpolate_u(&v, &x);
                if co.is_zero() {
                    continue;
                }
                if let Some(cand) = a.div_exact(&co) {
                    let cand = cand.primitive();
                    if b.div_exact(&cand).is_some() {
                        return Some(cand);
                    }
                }
            }
        }
        x = next_point(&x);
    }
    None
}

fn eval_q(f: &MPoly, x: &BigInt) -> UPoly {
    let mut acc = UPoly::zero();
    for c in f.q_coeffs().iter().rev() {
        acc = acc.scale(x).add(c);
    }
    acc
}

fn interpolate_m(h: &UPoly, x: &BigInt) -> MPoly {
    let mut terms = Vec::new();
    for (j, c) in h.coeffs().iter().enumerate() {
        for (i, d) in digits(c.clone(), x).into_iter().enumerate() {
            terms.push(((i as u32, j as u32), d));
        }
    }
    MPoly::from_terms(terms)
}

fn primitive_m(f: &MPoly) -> MPoly {
    let c = f.integer_content();
    if c.is_zero() || c.is_one() {
        f.clone()
    } else {
        f.div_scalar_exact(&c).unwrap()
    }
}

/// gcd in `Z[q,t]` up to sign, integer content included.
pub(super) fn gcd_m(f: &MPoly, g: &MPoly) -> Option<MPoly> {
    let cf = f.integer_content();
    let cg = g.integer_content();
    let content = cf.gcd(&cg);
    let f = f.div_scalar_exact(&cf)?;
    let g = g.div_scalar_exact(&cg)?;
    let nf = max_norm(f.terms().map(|(_, c)| c));
    let ng = max_norm(g.terms().map(|(_, c)| c));
    let lf = f.q_coeffs().last()?.lc()?.clone();
    let lg = g.q_coeffs().last()?.lc()?.clone();
    let mut x = first_point(&nf, &ng, &lf, &lg);
    for _ in 0..ATTEMPTS {
        let fx = eval_q(&f, &x);
        let gx = eval_q(&g, &x);
        if !fx.is_zero() && !gx.is_zero() {
            let h = fx.gcd(&gx);
            let cand = primitive_m(&interpolate_m(&h, &x));
            if !cand.is_zero() && f.div_exact(&cand).is_some() && g.div_exact(&cand).is_some() {
                return Some(cand.scale(&content));
            }
            for (v, a, b) in [(&fx, &f, &g), (&gx, &g, &f)] {
                let Some(co) = v.div_exact(&h) else { continue };
                let co = interpolate_m(&co, &x);
                if co.is_zero() {
                    continue;
                }
                if let Some(cand) = a.div_exact(&co) {
                    let cand = primitive_m(&cand);
                    if b.div_exact(&cand).is_some() {
                        return Some(cand.scale(&content));
                    }
                }
            }
        }
        x = next_point(&x);
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn om(a: u32, b: u32) -> MPoly {
        MPoly::one().sub(&MPoly::monomial(BigInt::one(), a, b))
    }

    #[test]
    fn products_of_binomials() {
        let f = om(1, 1).mul(&om(2, 1)).mul(&om(0, 3));
        let g = om(1, 1).mul(&om(0, 3)).mul(&om(1, 2)).scale(&BigInt::from(6));
        let h = gcd_m(&f, &g).unwrap();
        let expect = om(1, 1).mul(&om(0, 3));
        assert!(h == expect || h == expect.neg());
        assert!(gcd_m(&om(1, 0), &om(0, 1)).unwrap().is_one() || gcd_m(&om(1, 0), &om(0, 1)).unwrap().neg().is_one());
    }

    #[test]
    fn symmetric_digits() {
        let x = BigInt::from(10);
        assert_eq!(digits(BigInt::from(-37), &x), vec![BigInt::from(3), BigInt::from(-4)]);
        assert_eq!(digits(BigInt::from(96), &x), vec![BigInt::from(-4), BigInt::from(0), BigInt::from(1)]);
    }
}
