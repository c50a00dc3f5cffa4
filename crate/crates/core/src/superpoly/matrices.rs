//! Change-of-basis matrices between power sums, elementaries and monomials.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::concrete::{expand_elementary, ConcreteSuperPoly};
use crate::superpartition::SuperPartition;

/// Square matrix indexed by the superpartitions of one degree, listed in
/// enumeration order.
#[derive(Clone, Debug, PartialEq)]
pub struct BasisMatrix<T> {
    pub index: Vec<SuperPartition>,
    pub rows: Vec<Vec<T>>,
    position: HashMap<SuperPartition, usize>,
}

impl<T> BasisMatrix<T> {
    fn new(index: Vec<SuperPartition>, rows: Vec<Vec<T>>) -> Self {
        let position = index.iter().enumerate().map(|(i, l)| (l.clone(), i)).collect();
        BasisMatrix { index, rows, position }
    }

    pub fn position(&self, l: &SuperPartition) -> Option<usize> {
        self.position.get(l).copied()
    }

    pub fn len(&self) -> usize {
        self.index.len()
    }

    pub fn is_empty(&self) -> bool {
        self.index.is_empty()
    }

    pub fn entry(&self, row: &SuperPartition, col: &SuperPartition) -> &T {
        &self.rows[self.position[row]][self.position[col]]
    }
}

/// Coefficient of `θ_1···θ_m x^Ω` in `p_Λ`, by walking every way of
/// assigning the power-sum factors to variables.
pub fn powersum_coefficient(l: &SuperPartition, omega: &SuperPartition) -> BigInt {
    let m = l.m() as usize;
    let mut target: Vec<u32> = omega.fermionic().iter().chain(omega.bosonic()).copied().collect();
    let factors: Vec<u32> = l.fermionic().iter().chain(l.bosonic()).copied().collect();
    let mut order = Vec::with_capacity(m);
    let mut total = BigInt::zero();
    walk(&factors, 0, m, &mut target, &mut order, &mut total);
    total
}

fn walk(factors: &[u32], k: usize, m: usize, rest: &mut [u32], order: &mut Vec<usize>, total: &mut BigInt) {
    if k == factors.len() {
        if rest.iter().all(|&r| r == 0) {
            let mut odd = false;
            for i in 0..order.len() {
                for j in i + 1..order.len() {
                    odd ^= order[i] > order[j];
                }
            }
            if odd {
                *total -= 1;
            } else {
                *total += 1;
            }
        }
        return;
    }
    let part = factors[k];
    if k < m {
        for i in 0..m {
            if order.contains(&i) || rest[i] < part {
                continue;
            }
            rest[i] -= part;
            order.push(i);
            walk(factors, k + 1, m, rest, order, total);
            order.pop();
            rest[i] += part;
        }
    } else {
        for i in 0..rest.len() {
            if rest[i] < part {
                continue;
            }
            rest[i] -= part;
            walk(factors, k + 1, m, rest, order, total);
            rest[i] += part;
        }
    }
}

type Cache<T> = OnceLock<Mutex<HashMap<(u32, u32), Arc<T>>>>;

fn cached<T>(cache: &'static Cache<T>, key: (u32, u32), build: impl FnOnce() -> T) -> Arc<T> {
    let map = cache.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(v) = map.lock().unwrap().get(&key) {
        return v.clone();
    }
    let built = Arc::new(build());
    map.lock().unwrap().entry(key).or_insert(built).clone()
}

static P_TO_M: Cache<BasisMatrix<BigInt>> = OnceLock::new();
static M_TO_P: Cache<BasisMatrix<BigRational>> = OnceLock::new();
static E_TO_M: Cache<BasisMatrix<BigInt>> = OnceLock::new();

/// Row `Λ` holds `p_Λ` expanded in monomials.
pub fn p_to_m(n: u32, m: u32) -> Arc<BasisMatrix<BigInt>> {
    cached(&P_TO_M, (n, m), || {
        let index = SuperPartition::enumerate(n, m);
        let rows = index.iter().map(|l| index.iter().map(|o| powersum_coefficient(l, o)).collect()).collect();
        BasisMatrix::new(index, rows)
    })
}

/// Row `Λ` holds `m_Λ` expanded in power sums.
pub fn m_to_p(n: u32, m: u32) -> Arc<BasisMatrix<BigRational>> {
    cached(&M_TO_P, (n, m), || {
        let pm = p_to_m(n, m);
        let a: Vec<Vec<BigRational>> =
            pm.rows.iter().map(|r| r.iter().map(|x| BigRational::from_integer(x.clone())).collect()).collect();
        BasisMatrix::new(pm.index.clone(), invert(a).expect("power sums form a basis"))
    })
}

/// Row `Λ` holds `e_Λ` expanded in monomials.
pub fn e_to_m(n: u32, m: u32) -> Arc<BasisMatrix<BigInt>> {
    cached(&E_TO_M, (n, m), || {
        let index = SuperPartition::enumerate(n, m);
        let nvars = (n + m) as usize;
        let rows = index
            .iter()
            .map(|l| {
                let coeffs = expand_elementary(l, nvars)
                    .and_then(|e: ConcreteSuperPoly<BigInt>| e.to_basis_monomial(n, m))
                    .expect("n+m variables suffice");
                index.iter().map(|o| coeffs.get(o).cloned().unwrap_or_default()).collect()
            })
            .collect();
        BasisMatrix::new(index, rows)
    })
}

/// Gauss-Jordan inverse over the rationals.
pub fn invert(mut a: Vec<Vec<BigRational>>) -> Option<Vec<Vec<BigRational>>> {
    let n = a.len();
    let mut inv: Vec<Vec<BigRational>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }).collect())
        .collect();
    for col in 0..n {
        let p = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, p);
        inv.swap(col, p);
        let piv = a[col][col].clone();
        for j in 0..n {
            a[col][j] /= &piv;
            inv[col][j] /= &piv;
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone();
            for j in 0..n {
                let (x, y) = (&a[col][j] * &f, &inv[col][j] * &f);
                a[r][j] -= x;
                inv[r][j] -= y;
            }
        }
    }
    Some(inv)
}

#[cfg(test)]
mod tests {
    use super::super::concrete::expand_powersum;
    use super::*;

    #[test]
    fn degree_one_one() {
        let pm = p_to_m(1, 1);
        let l: SuperPartition = "1;".parse().unwrap();
        let o: SuperPartition = "0;1".parse().unwrap();
        assert_eq!(pm.entry(&l, &l), &BigInt::from(1));
        assert_eq!(pm.entry(&l, &o), &BigInt::from(0));
        assert_eq!(pm.entry(&o, &l), &BigInt::from(1));
        assert_eq!(pm.entry(&o, &o), &BigInt::from(1));
        assert_eq!(p_to_m(1, 0).rows, vec![vec![BigInt::from(1)]]);
    }

    #[test]
    fn walk_agrees_with_concrete_expansion() {
        for (n, m) in [(3, 1), (3, 2), (4, 1), (4, 2), (3, 3)] {
            let pm = p_to_m(n, m);
            for l in &pm.index {
                let c = expand_powersum(l, (n + m) as usize).unwrap().to_basis_monomial(n, m).unwrap();
                for o in &pm.index {
                    assert_eq!(pm.entry(l, o), &c.get(o).cloned().unwrap_or_default(), "{l:?} {o:?}");
                }
            }
        }
    }
}
