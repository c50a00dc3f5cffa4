//! Superpartitions `(Λa;Λs)` and their diagram statistics.
//!
//! The diagram of a superpartition has one row per part. A fermionic part
//! `a` is drawn as `a` boxes followed by a circle, a bosonic part `b` as `b`
//! boxes, and rows are ordered by length with a circle worth half a box.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::partition::{Dominance, Partition};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SuperPartitionError {
    #[error("malformed superpartition '{0}'")]
    Parse(String),
    #[error("repeated fermionic part {0}")]
    RepeatedFermionicPart(u32),
    #[error("cell ({row},{col}) is not a box of the diagram")]
    CellOutside { row: usize, col: usize },
}

/// A box position, 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }
}

/// `a, ã, l, l̃` of a box.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ArmsLegs {
    pub arm: u32,
    pub arm_circled: u32,
    pub leg: u32,
    pub leg_circled: u32,
}

/// One row of the diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Row {
    pub boxes: u32,
    pub circle: bool,
}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct SuperPartition {
    fermionic: Vec<u32>,
    bosonic: Vec<u32>,
}

impl SuperPartition {
    /// Parts may be given in any order; zeros are dropped from the bosonic side.
    pub fn new(mut fermionic: Vec<u32>, mut bosonic: Vec<u32>) -> Result<Self, SuperPartitionError> {
        fermionic.sort_unstable_by(|a, b| b.cmp(a));
        if let Some(w) = fermionic.windows(2).find(|w| w[0] == w[1]) {
            return Err(SuperPartitionError::RepeatedFermionicPart(w[0]));
        }
        bosonic.retain(|&b| b > 0);
        bosonic.sort_unstable_by(|a, b| b.cmp(a));
        Ok(SuperPartition { fermionic, bosonic })
    }

    pub fn fermionic(&self) -> &[u32] {
        &self.fermionic
    }

    pub fn bosonic(&self) -> &[u32] {
        &self.bosonic
    }

    pub fn bosonic_partition(&self) -> Partition {
        Partition::new(self.bosonic.clone())
    }

    /// Fermionic degree.
    pub fn m(&self) -> u32 {
        self.fermionic.len() as u32
    }

    /// Total degree.
    pub fn n(&self) -> u32 {
        self.fermionic.iter().sum::<u32>() + self.bosonic.iter().sum::<u32>()
    }

    pub fn degree(&self) -> (u32, u32) {
        (self.n(), self.m())
    }

    pub fn fermionic_size(&self) -> u32 {
        self.fermionic.iter().sum()
    }

    /// Number of parts, counting a zero fermionic part.
    pub fn length(&self) -> usize {
        self.fermionic.len() + self.bosonic.len()
    }

    /// `Λa/δ^(m)`: the fermionic parts with the staircase `(m-1,..,1,0)` removed.
    pub fn fermionic_reduced(&self) -> Partition {
        let m = self.fermionic.len() as u32;
        Partition::new(self.fermionic.iter().enumerate().map(|(i, &a)| a - (m - 1 - i as u32)).collect())
    }

    /// Diagram rows, top to bottom.
    pub fn rows(&self) -> Vec<Row> {
        let mut rows: Vec<Row> = self
            .fermionic
            .iter()
            .map(|&a| Row { boxes: a, circle: true })
            .chain(self.bosonic.iter().map(|&b| Row { boxes: b, circle: false }))
            .collect();
        // Twice the length, circle worth one.
        rows.sort_by_key(|r| std::cmp::Reverse(2 * r.boxes + r.circle as u32));
        rows
    }

    pub fn star(&self) -> Partition {
        Partition::new(self.fermionic.iter().chain(&self.bosonic).copied().collect())
    }

    pub fn circled(&self) -> Partition {
        Partition::new(self.fermionic.iter().map(|a| a + 1).chain(self.bosonic.iter().copied()).collect())
    }

    pub fn conjugate(&self) -> SuperPartition {
        let star = self.star().conjugate();
        let circ = self.circled().conjugate();
        let mut fermionic = Vec::new();
        let mut bosonic = Vec::new();
        for j in 1..=circ.len() {
            let boxes = star.part(j);
            if circ.part(j) > boxes {
                fermionic.push(boxes);
            } else {
                bosonic.push(boxes);
            }
        }
        SuperPartition::new(fermionic, bosonic).expect("transposed circles lie in distinct rows")
    }

    pub fn dominance(&self, other: &SuperPartition) -> Dominance {
        if self.degree() != other.degree() {
            return Dominance::Incomparable;
        }
        let s = self.star().dominance(&other.star());
        let c = self.circled().dominance(&other.circled());
        match (s, c) {
            (Dominance::Equal, Dominance::Equal) => Dominance::Equal,
            (Dominance::Incomparable, _) | (_, Dominance::Incomparable) => Dominance::Incomparable,
            (Dominance::Equal, d) | (d, Dominance::Equal) => d,
            (a, b) if a == b => a,
            _ => Dominance::Incomparable,
        }
    }

    /// The weaker order: strict dominance of the starred partitions, or equal
    /// starred partitions and dominance of the circled ones.
    pub fn dominance_prime(&self, other: &SuperPartition) -> Dominance {
        if self.degree() != other.degree() {
            return Dominance::Incomparable;
        }
        match self.star().dominance(&other.star()) {
            Dominance::Equal => self.circled().dominance(&other.circled()),
            d => d,
        }
    }

    /// The fixed linear extension of dominance: `Greater` sorts first.
    pub fn linear_cmp(&self, other: &SuperPartition) -> Ordering {
        other
            .circled()
            .lex_cmp(&self.circled())
            .then_with(|| other.star().lex_cmp(&self.star()))
    }

    /// All superpartitions of degree `(n|m)`, largest first in [`Self::linear_cmp`].
    pub fn enumerate(n: u32, m: u32) -> Vec<SuperPartition> {
        let mut out = Vec::new();
        let min = m * m.saturating_sub(1) / 2;
        if n < min {
            return out;
        }
        for k in min..=n {
            for f in distinct_parts(k, m) {
                for b in Partition::all(n - k) {
                    out.push(SuperPartition { fermionic: f.clone(), bosonic: b.parts().to_vec() });
                }
            }
        }
        out.sort_by(|a, b| a.linear_cmp(b));
        out
    }

    pub fn contains_box(&self, cell: Cell) -> bool {
        self.star().contains_cell((cell.row, cell.col))
    }

    pub fn arms_legs(&self, cell: Cell) -> Result<ArmsLegs, SuperPartitionError> {
        let star = self.star();
        if !star.contains_cell((cell.row, cell.col)) {
            return Err(SuperPartitionError::CellOutside { row: cell.row, col: cell.col });
        }
        let circ = self.circled();
        let (i, j) = (cell.row, cell.col as u32);
        Ok(ArmsLegs {
            arm: star.part(i) - j,
            arm_circled: circ.part(i) - j,
            leg: star.conjugate().part(cell.col) - i as u32,
            leg_circled: circ.conjugate().part(cell.col) - i as u32,
        })
    }

    /// Boxes of the diagram, row by row.
    pub fn boxes(&self) -> Vec<Cell> {
        self.star().cells().map(|(i, j)| Cell::new(i, j)).collect()
    }

    /// Positions of the circles.
    pub fn circles(&self) -> Vec<Cell> {
        self.rows()
            .iter()
            .enumerate()
            .filter(|(_, r)| r.circle)
            .map(|(i, r)| Cell::new(i + 1, r.boxes as usize + 1))
            .collect()
    }

    /// Boxes not lying both in a row and in a column that contain a circle.
    pub fn bset(&self) -> BTreeSet<Cell> {
        let circles = self.circles();
        let rows: BTreeSet<usize> = circles.iter().map(|c| c.row).collect();
        let cols: BTreeSet<usize> = circles.iter().map(|c| c.col).collect();
        self.boxes().into_iter().filter(|c| !(rows.contains(&c.row) && cols.contains(&c.col))).collect()
    }

    /// The `k`-th circled row from the top holds the staircase squares in
    /// columns `1..=m-k`; each of those counts the circle-free rows above it
    /// that reach its column.
    pub fn zeta(&self) -> u32 {
        let rows = self.rows();
        let m = self.fermionic.len() as u32;
        let mut total = 0;
        for (k, (i, _)) in rows.iter().enumerate().filter(|(_, r)| r.circle).enumerate() {
            for j in 1..=m - 1 - k as u32 {
                total += rows[..i].iter().filter(|above| !above.circle && above.boxes >= j).count() as u32;
            }
        }
        total
    }

    /// `Λ⊛/δ^(m+1)` with `δ^(m+1) = (m, m-1, .., 1, 0)`.
    pub fn skew_cells(&self) -> BTreeSet<Cell> {
        let circ = self.circled();
        let m = self.fermionic.len();
        let mut out = BTreeSet::new();
        for i in 1..=circ.len() {
            let stair = m.saturating_sub(i - 1);
            let len = circ.part(i) as usize;
            assert!(len >= stair, "circled diagram must contain the staircase");
            for j in stair + 1..=len {
                out.insert(Cell::new(i, j));
            }
        }
        out
    }

    /// `b(Λ⊛) - b(δ^(m+1))`.
    pub fn skew_bstat(&self) -> u64 {
        let m = self.fermionic.len() as u32;
        let stair = Partition::new((1..=m).rev().collect());
        self.circled().bstat() - stair.bstat()
    }
}

/// Strictly decreasing sequences of `m` nonnegative integers summing to `k`.
fn distinct_parts(k: u32, m: u32) -> Vec<Vec<u32>> {
    fn rec(k: u32, m: u32, bound: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if m == 0 {
            if k == 0 {
                out.push(cur.clone());
            }
            return;
        }
        // The remaining m-1 parts need at least (m-1)(m-2)/2.
        let rest = (m - 1) * m.saturating_sub(2) / 2;
        if k < rest {
            return;
        }
        for p in (m - 1..=(bound - 1).min(k - rest)).rev() {
            cur.push(p);
            rec(k - p, m - 1, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(k, m, k + 1, &mut Vec::new(), &mut out);
    out
}

impl PartialOrd for SuperPartition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Orders by degree, then by [`SuperPartition::linear_cmp`], so sorted maps
/// list the largest superpartition of each degree first.
impl Ord for SuperPartition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.m()
            .cmp(&other.m())
            .then(self.n().cmp(&other.n()))
            .then_with(|| self.linear_cmp(other))
            .then_with(|| self.fermionic.cmp(&other.fermionic))
    }
}

fn join(parts: &[u32]) -> String {
    parts.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",")
}

impl fmt::Display for SuperPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{};{}", join(&self.fermionic), join(&self.bosonic))
    }
}

impl fmt::Debug for SuperPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for SuperPartition {
    type Err = SuperPartitionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || SuperPartitionError::Parse(s.to_string());
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        let (a, b) = inner.split_once(';').ok_or_else(bad)?;
        let side = |x: &str| -> Result<Vec<u32>, SuperPartitionError> {
            let x = x.trim();
            if x.is_empty() {
                return Ok(Vec::new());
            }
            x.split(',').map(|p| p.trim().parse::<u32>().map_err(|_| bad())).collect()
        };
        let (fermionic, bosonic) = (side(a)?, side(b)?);
        if fermionic.windows(2).any(|w| w[0] <= w[1]) || bosonic.windows(2).any(|w| w[0] < w[1]) {
            return Err(bad());
        }
        SuperPartition::new(fermionic, bosonic)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(s: &str) -> SuperPartition {
        s.parse().unwrap()
    }

    fn part(v: &[u32]) -> Partition {
        Partition::new(v.to_vec())
    }

    #[test]
    fn round_trip_text() {
        for s in ["3,1,0;5,4,3", "2,1,0;", ";2,1", "0;", ";"] {
            assert_eq!(sp(s).to_string(), s);
        }
        assert!("1,1;".parse::<SuperPartition>().is_err());
        assert!("1,2;".parse::<SuperPartition>().is_err());
        assert!("1;1,2".parse::<SuperPartition>().is_err());
        assert!("x".parse::<SuperPartition>().is_err());
    }

    #[test]
    fn star_and_circled() {
        let l = sp("3,1,0;5,4,3");
        assert_eq!(l.star(), part(&[5, 4, 3, 3, 1]));
        assert_eq!(l.circled(), part(&[5, 4, 4, 3, 2, 1]));
        assert_eq!(sp("0;").star(), part(&[]));
        assert_eq!(sp("0;").circled(), part(&[1]));
        assert_eq!(sp(";2,1").circled(), part(&[2, 1]));
    }

    #[test]
    fn diagram_rows_put_circled_row_above_equal_boxes() {
        let rows = sp("3,1,0;5,4,3").rows();
        let boxes: Vec<u32> = rows.iter().map(|r| r.boxes).collect();
        let circles: Vec<bool> = rows.iter().map(|r| r.circle).collect();
        assert_eq!(boxes, [5, 4, 3, 3, 1, 0]);
        assert_eq!(circles, [false, false, true, false, true, true]);
    }

    #[test]
    fn conjugates() {
        assert_eq!(sp("2,1,0;").conjugate(), sp("2,1,0;"));
        assert_eq!(sp("1;").conjugate(), sp("0;1"));
        for n in 0..=5 {
            for m in 0..=2 {
                for l in SuperPartition::enumerate(n, m) {
                    let c = l.conjugate();
                    assert_eq!(c.degree(), l.degree());
                    assert_eq!(c.conjugate(), l);
                }
            }
        }
    }

    #[test]
    fn dominance_examples() {
        assert_eq!(sp("2;1,1").dominance(&sp("0;2,2")), Dominance::Incomparable);
        assert_eq!(sp("2;1,1").dominance_prime(&sp("0;2,2")), Dominance::Less);
        assert!(sp("2;2").dominance_prime(&sp("0;3,1")).is_comparable());
        let bottom = sp("0;1,1,1,1");
        for l in SuperPartition::enumerate(4, 1) {
            let expect = if l == bottom { Dominance::Equal } else { Dominance::Less };
            assert_eq!(bottom.dominance(&l), expect);
        }
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(SuperPartition::enumerate(3, 1).len(), 7);
        assert_eq!(SuperPartition::enumerate(4, 1).len(), 12);
        assert_eq!(SuperPartition::enumerate(0, 1), vec![sp("0;")]);
        assert!(SuperPartition::enumerate(2, 3).is_empty());
        assert_eq!(SuperPartition::enumerate(3, 3), vec![sp("2,1,0;")]);
        let listed: BTreeSet<String> = ["0;1,1,1", "0;2,1", "0;3", "1;1,1", "1;2", "2;1", "3;"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        let got: BTreeSet<String> = SuperPartition::enumerate(3, 1).iter().map(|l| l.to_string()).collect();
        assert_eq!(got, listed);
    }

    #[test]
    fn arms_and_legs() {
        let l = sp("3,0;1");
        let al = l.arms_legs(Cell::new(1, 2)).unwrap();
        assert_eq!((al.arm, al.arm_circled, al.leg, al.leg_circled), (1, 2, 0, 0));
        let al = l.arms_legs(Cell::new(2, 1)).unwrap();
        assert_eq!((al.arm, al.arm_circled, al.leg, al.leg_circled), (0, 0, 0, 1));
        let al = sp(";1").arms_legs(Cell::new(1, 1)).unwrap();
        assert_eq!((al.arm, al.arm_circled, al.leg, al.leg_circled), (0, 0, 0, 0));
        assert!(l.arms_legs(Cell::new(1, 4)).is_err());
    }

    #[test]
    fn bset_examples() {
        let l = sp("3,1,0;5,4,3");
        let excluded: Vec<Cell> = l.boxes().into_iter().filter(|c| !l.bset().contains(c)).collect();
        assert_eq!(excluded, vec![Cell::new(3, 1), Cell::new(3, 2), Cell::new(5, 1)]);
        assert!(sp("2,1,0;").bset().is_empty());
        assert_eq!(sp(";2,1").bset().len(), 3);
    }

    #[test]
    fn zeta_examples() {
        assert_eq!(sp("1,0;2,2").zeta(), 2);
        assert_eq!(sp("3,1,0;2").zeta(), 1);
        assert_eq!(sp("2,1,0;3,1").zeta(), 3);
        assert_eq!(sp("1;2").zeta(), 0);
        assert_eq!(sp("2,0;3").zeta(), 1);
        assert_eq!(sp("2,1;3").zeta(), 1);
    }

    #[test]
    fn skew_diagram() {
        let l = sp("3,1,0;1,1");
        let cells: Vec<Cell> = l.skew_cells().into_iter().collect();
        assert_eq!(cells, vec![Cell::new(1, 4), Cell::new(4, 1), Cell::new(5, 1)]);
        assert_eq!(l.skew_bstat(), 7);
        assert!(sp("0;").skew_cells().is_empty());
    }

    #[test]
    fn fermionic_reduction() {
        assert_eq!(sp("3,1,0;1,1").fermionic_reduced(), part(&[1]));
        assert_eq!(sp("2,1,0;").fermionic_reduced(), part(&[]));
    }
}
