//! Ordinary partitions and the classical statistics built on them.

use std::cmp::Ordering;
use std::fmt;

/// Result of comparing two (super)partitions in a partial order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Dominance {
    Less,
    Greater,
    Equal,
    Incomparable,
}

impl Dominance {
    pub fn is_comparable(self) -> bool {
        self != Dominance::Incomparable
    }

    pub fn reversed(self) -> Dominance {
        match self {
            Dominance::Less => Dominance::Greater,
            Dominance::Greater => Dominance::Less,
            d => d,
        }
    }
}

/// A weakly decreasing list of positive parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Sorts the parts and drops zeros.
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// The `i`-th part, 1-based; zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.0.first().copied().unwrap_or(0);
        Partition((1..=cols).map(|j| self.0.iter().filter(|&&p| p >= j).count() as u32).collect())
    }

    /// `b(λ) = Σ (i-1) λ_i`
    pub fn bstat(&self) -> u64 {
        self.0.iter().enumerate().map(|(i, &p)| i as u64 * p as u64).sum()
    }

    /// `z_λ = Π i^{n_i} n_i!`
    pub fn zsym(&self) -> u64 {
        let mut z: u64 = 1;
        let mut i = 0;
        while i < self.0.len() {
            let part = self.0[i];
            let mut mult = 0u64;
            while i < self.0.len() && self.0[i] == part {
                mult += 1;
                z *= part as u64 * mult;
                i += 1;
            }
        }
        z
    }

    /// Classical dominance of `self` against `other`.
    pub fn dominance(&self, other: &Partition) -> Dominance {
        if self.size() != other.size() {
            return Dominance::Incomparable;
        }
        if self == other {
            return Dominance::Equal;
        }
        let n = self.len().max(other.len());
        let (mut a, mut b) = (0u32, 0u32);
        let (mut le, mut ge) = (true, true);
        for i in 1..=n {
            a += self.part(i);
            b += other.part(i);
            le &= a <= b;
            ge &= a >= b;
        }
        match (le, ge) {
            (true, false) => Dominance::Less,
            (false, true) => Dominance::Greater,
            _ => Dominance::Incomparable,
        }
    }

    /// Cells `(row, col)` of the Ferrers diagram, 1-based.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0.iter().enumerate().flat_map(|(i, &p)| (1..=p as usize).map(move |j| (i + 1, j)))
    }

    pub fn contains_cell(&self, (i, j): (usize, usize)) -> bool {
        i >= 1 && j >= 1 && self.part(i) as usize >= j
    }

    /// Lexicographic comparison of the part sequences.
    pub fn lex_cmp(&self, other: &Partition) -> Ordering {
        self.0.cmp(&other.0)
    }

    /// All partitions of `n`, in decreasing lexicographic order.
    pub fn all(n: u32) -> Vec<Partition> {
        fn rec(n: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=n.min(max)).rev() {
                cur.push(p);
                rec(n - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zsym_examples() {
        assert_eq!(Partition::new(vec![1, 1, 1]).zsym(), 6);
        assert_eq!(Partition::new(vec![2, 1]).zsym(), 2);
        assert_eq!(Partition::new(vec![3]).zsym(), 3);
        assert_eq!(Partition::new(vec![]).zsym(), 1);
    }

    #[test]
    fn bstat_examples() {
        assert_eq!(Partition::new(vec![3, 2, 1]).bstat(), 4);
        assert_eq!(Partition::new(vec![4, 2, 1, 1, 1]).bstat(), 11);
    }

    #[test]
    fn partition_counts() {
        let counts = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42];
        for (n, &c) in counts.iter().enumerate() {
            assert_eq!(Partition::all(n as u32).len(), c);
        }
    }

    #[test]
    fn degree_six_incomparable_pairs() {
        let p = |v: &[u32]| Partition::new(v.to_vec());
        assert_eq!(p(&[3, 1, 1, 1]).dominance(&p(&[2, 2, 2])), Dominance::Incomparable);
        assert_eq!(p(&[3, 3]).dominance(&p(&[4, 1, 1])), Dominance::Incomparable);
        assert_eq!(p(&[2, 2, 1, 1]).dominance(&p(&[2, 2, 2])), Dominance::Less);
        let all = Partition::all(6);
        let incomparable = (0..all.len())
            .flat_map(|i| (i + 1..all.len()).map(move |j| (i, j)))
            .filter(|&(i, j)| !all[i].dominance(&all[j]).is_comparable())
            .count();
        assert_eq!(incomparable, 2);
    }
}
