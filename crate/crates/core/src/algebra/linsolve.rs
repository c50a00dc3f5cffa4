//! Fraction-free elimination for (possibly over-determined) systems over `Q(q,t)`.

use super::{AlgebraError, MPoly, RatFunc};

/// `matrix * x = rhs`, with at least as many rows as columns allowed.
#[derive(Clone, Debug)]
pub struct LinearSystem {
    pub matrix: Vec<Vec<RatFunc>>,
    pub rhs: Vec<RatFunc>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Solution {
    Unique(Vec<RatFunc>),
    /// Index of an equation that cannot hold given the others.
    Inconsistent { witness_row: usize },
}

/// Clear denominators row by row, producing polynomial rows `[a_1 .. a_n | b]`.
fn polynomial_row(row: &[RatFunc], rhs: &RatFunc) -> Vec<MPoly> {
    let mut lcm = MPoly::one();
    for x in row.iter().chain(std::iter::once(rhs)) {
        if x.den().is_one() {
            continue;
        }
        let g = lcm.gcd(x.den());
        lcm = lcm.mul(&x.den().div_exact(&g).unwrap());
    }
    row.iter()
        .chain(std::iter::once(rhs))
        .map(|x| x.num().mul(&lcm.div_exact(x.den()).unwrap()))
        .collect()
}

impl LinearSystem {
    pub fn new(matrix: Vec<Vec<RatFunc>>, rhs: Vec<RatFunc>) -> Self {
        LinearSystem { matrix, rhs }
    }

    /// Solve by Bareiss elimination. Equations are consumed in order: each
    /// pivot is taken from the earliest remaining row that is independent of
    /// the rows already used, and every row that reduces to `0 = r` is checked
    /// for `r = 0`; the first violation is reported as the witness.
    pub fn solve(&self) -> Result<Solution, AlgebraError> {
        let rows = self.matrix.len();
        assert_eq!(rows, self.rhs.len(), "rhs length mismatch");
        let cols = self.matrix.first().map_or(0, |r| r.len());
        if rows < cols {
            return Err(AlgebraError::Ambiguous);
        }
        let mut a: Vec<Vec<MPoly>> =
            self.matrix.iter().zip(&self.rhs).map(|(r, b)| polynomial_row(r, b)).collect();
        let mut origin: Vec<usize> = (0..rows).collect();
        let mut prev = MPoly::one();
        let mut rank = 0;
        for col in 0..cols {
            let Some(p) = (rank..rows).find(|&r| !a[r][col].is_zero()) else {
                return Err(AlgebraError::Ambiguous);
            };
            // Keep the remaining rows in their original order behind the pivot.
            let pivot_row = a.remove(p);
            a.insert(rank, pivot_row);
            let o = origin.remove(p);
            origin.insert(rank, o);
            let pivot = a[rank][col].clone();
            for r in rank + 1..rows {
                let factor = a[r][col].clone();
                for c in col..=cols {
                    let v = pivot.mul(&a[r][c]).sub(&factor.mul(&a[rank][c]));
                    a[r][c] = v.div_exact(&prev).expect("Bareiss division is exact");
                }
            }
            prev = pivot;
            rank += 1;
        }
        let residual = (rank..rows).filter(|&r| !a[r][cols].is_zero()).map(|r| origin[r]).min();
        if let Some(witness_row) = residual {
            return Ok(Solution::Inconsistent { witness_row });
        }
        let mut x = vec![RatFunc::zero(); cols];
        for i in (0..cols).rev() {
            let mut acc = RatFunc::from_poly(a[i][cols].clone());
            for j in i + 1..cols {
                if !a[i][j].is_zero() {
                    acc = acc.sub(&RatFunc::from_poly(a[i][j].clone()).mul(&x[j]));
                }
            }
            x[i] = acc.div(&RatFunc::from_poly(a[i][i].clone()))?;
        }
        Ok(Solution::Unique(x))
    }
}

/// Gaussian elimination directly over `Q(q,t)` for a square nonsingular
/// system; reduced fractions keep entries small when denominators factor into
/// few shared pieces.
pub fn solve_square(mut a: Vec<Vec<RatFunc>>, mut b: Vec<RatFunc>) -> Result<Vec<RatFunc>, AlgebraError> {
    let n = a.len();
    for col in 0..n {
        let p = (col..n).find(|&r| !a[r][col].is_zero()).ok_or(AlgebraError::Ambiguous)?;
        a.swap(col, p);
        b.swap(col, p);
        let inv = a[col][col].inv()?;
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].mul(&inv);
            for c in col + 1..n {
                if !a[col][c].is_zero() {
                    a[r][c] = a[r][c].sub(&f.mul(&a[col][c]));
                }
            }
            a[r][col] = RatFunc::zero();
            b[r] = b[r].sub(&f.mul(&b[col]));
        }
    }
    let mut x = vec![RatFunc::zero(); n];
    for i in (0..n).rev() {
        let mut acc = b[i].clone();
        for j in i + 1..n {
            if !a[i][j].is_zero() {
                acc = acc.sub(&a[i][j].mul(&x[j]));
            }
        }
        x[i] = acc.div(&a[i][i])?;
    }
    Ok(x)
}

/// Gauss-Jordan inverse over `Q(q,t)`.
pub fn invert_matrix(mut a: Vec<Vec<RatFunc>>) -> Result<Vec<Vec<RatFunc>>, AlgebraError> {
    let n = a.len();
    let mut inv: Vec<Vec<RatFunc>> =
        (0..n).map(|i| (0..n).map(|j| if i == j { RatFunc::one() } else { RatFunc::zero() }).collect()).collect();
    for col in 0..n {
        let p = (col..n).find(|&r| !a[r][col].is_zero()).ok_or(AlgebraError::Ambiguous)?;
        a.swap(col, p);
        inv.swap(col, p);
        let piv = a[col][col].inv()?;
        for j in 0..n {
            a[col][j] = a[col][j].mul(&piv);
            inv[col][j] = inv[col][j].mul(&piv);
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone();
            for j in 0..n {
                if !a[col][j].is_zero() {
                    a[r][j] = a[r][j].sub(&f.mul(&a[col][j]));
                }
                if !inv[col][j].is_zero() {
                    inv[r][j] = inv[r][j].sub(&f.mul(&inv[col][j]));
                }
            }
        }
    }
    Ok(inv)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_ratfunc as r;
    use proptest::prelude::*;

    #[test]
    fn inverse_of_triangular() {
        let a = vec![vec![RatFunc::one(), RatFunc::q()], vec![RatFunc::zero(), RatFunc::t()]];
        let inv = invert_matrix(a).unwrap();
        assert_eq!(inv[0][1], r("-q/t").unwrap());
        assert_eq!(inv[1][1], r("1/t").unwrap());
    }

    #[test]
    fn identity_system() {
        let a = r("q/(1-t)").unwrap();
        let b = r("1+t").unwrap();
        let sys = LinearSystem::new(
            vec![vec![RatFunc::one(), RatFunc::zero()], vec![RatFunc::zero(), RatFunc::one()]],
            vec![a.clone(), b.clone()],
        );
        assert_eq!(sys.solve().unwrap(), Solution::Unique(vec![a, b]));
    }

    #[test]
    fn overdetermined_inconsistent() {
        let sys = LinearSystem::new(vec![vec![RatFunc::one()], vec![RatFunc::one()]], vec![RatFunc::one(), RatFunc::zero()]);
        assert_eq!(sys.solve().unwrap(), Solution::Inconsistent { witness_row: 1 });
    }

    #[test]
    fn overdetermined_consistent() {
        let two = RatFunc::from_int(2);
        let sys = LinearSystem::new(
            vec![vec![RatFunc::one()], vec![two.clone()]],
            vec![RatFunc::q(), two.mul(&RatFunc::q())],
        );
        assert_eq!(sys.solve().unwrap(), Solution::Unique(vec![RatFunc::q()]));
    }

    #[test]
    fn rank_deficient_is_ambiguous() {
        let sys = LinearSystem::new(
            vec![vec![RatFunc::one(), RatFunc::one()], vec![RatFunc::one(), RatFunc::one()]],
            vec![RatFunc::one(), RatFunc::one()],
        );
        assert_eq!(sys.solve(), Err(AlgebraError::Ambiguous));
    }

    fn small_ratfunc() -> impl Strategy<Value = RatFunc> {
        (-3i64..=3, 0u32..=2, 0u32..=2, -2i64..=2, 0u32..=1, 0u32..=2).prop_map(|(a, e1, e2, b, e3, e4)| {
            let num = MPoly::from_int(a).add(&MPoly::monomial(1.into(), e1, e2));
            let den = MPoly::one().add(&MPoly::monomial(b.into(), e3 + 1, e4));
            RatFunc::new(num, den).unwrap()
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]
        #[test]
        fn recovers_planted_solution(
            entries in proptest::collection::vec(small_ratfunc(), 9),
            sol in proptest::collection::vec(small_ratfunc(), 3),
        ) {
            let m: Vec<Vec<RatFunc>> = entries.chunks(3).map(|c| c.to_vec()).collect();
            let rhs: Vec<RatFunc> = m.iter()
                .map(|row| row.iter().zip(&sol).fold(RatFunc::zero(), |acc, (a, x)| acc.add(&a.mul(x))))
                .collect();
            match LinearSystem::new(m, rhs).solve() {
                Ok(Solution::Unique(x)) => prop_assert_eq!(x, sol),
                Err(AlgebraError::Ambiguous) => {} // singular draw
                other => prop_assert!(false, "unexpected {:?}", other),
            }
        }
    }
}
