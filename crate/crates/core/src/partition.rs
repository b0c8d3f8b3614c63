//! Integer partitions and Young-diagram statistics.
//!
//! Cells are addressed 1-based as `(i, j)`: row `i`, column `j`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("cell ({0},{1}) lies outside the diagram")]
    CellOutOfDiagram(usize, usize),
    #[error("the empty partition has no rectangle decomposition")]
    EmptyPartition,
    #[error("not a partition: {0}")]
    Invalid(String),
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Dominance {
    Leq,
    Gt,
    Incomparable,
}

/// One block of the rectangle decomposition: width increment `s`, cumulative height `r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Block {
    pub s: u32,
    pub r: u32,
}

impl Partition {
    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Sorts and drops zero parts.
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn try_from_parts(parts: Vec<u32>) -> Result<Self, PartitionError> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(PartitionError::Invalid(format!("{parts:?}")));
        }
        Ok(Partition(parts))
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `λ_i`, 1-based, zero beyond the length.
    pub fn part(&self, i: usize) -> u32 {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let w = self.part(1) as usize;
        let mut c = vec![0u32; w];
        for &p in &self.0 {
            for x in c.iter_mut().take(p as usize) {
                *x += 1;
            }
        }
        Partition(c)
    }

    /// Multiplicities `m_i` for `i = 1..=λ_1`.
    pub fn multiplicities(&self) -> Vec<u32> {
        let mut m = vec![0u32; self.part(1) as usize];
        for &p in &self.0 {
            m[p as usize - 1] += 1;
        }
        m
    }

    /// `z_λ = Π i^{m_i} m_i!`.
    pub fn z(&self) -> BigInt {
        let mut z = BigInt::from(1);
        for (i, &m) in self.multiplicities().iter().enumerate() {
            for k in 1..=m {
                z *= BigInt::from(i as u64 + 1) * BigInt::from(k);
            }
        }
        z
    }

    /// `n(λ) = Σ (i-1) λ_i`.
    pub fn n(&self) -> u64 {
        self.0.iter().enumerate().map(|(i, &p)| i as u64 * p as u64).sum()
    }

    /// Cells `(i, j)` in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p as usize).map(move |j| (i + 1, j)))
    }

    pub fn contains(&self, (i, j): (usize, usize)) -> bool {
        i >= 1 && j >= 1 && j as u32 <= self.part(i)
    }

    /// `(a, l, a', l')` of a cell.
    pub fn armleg(&self, cell: (usize, usize)) -> Result<(u32, u32, u32, u32), PartitionError> {
        let (i, j) = cell;
        if !self.contains(cell) {
            return Err(PartitionError::CellOutOfDiagram(i, j));
        }
        let col = self.0.iter().take_while(|&&p| p as usize >= j).count() as u32;
        Ok((self.part(i) - j as u32, col - i as u32, j as u32 - 1, i as u32 - 1))
    }

    /// `μ ⊆ λ` as diagrams.
    pub fn is_contained_in(&self, lam: &Partition) -> bool {
        self.len() <= lam.len() && self.0.iter().zip(&lam.0).all(|(a, b)| a <= b)
    }

    /// Where `self` sits relative to `lam` in dominance order.
    pub fn dominance(&self, lam: &Partition) -> Dominance {
        if self.weight() != lam.weight() {
            return Dominance::Incomparable;
        }
        let (mut sm, mut sl) = (0u32, 0u32);
        let (mut le, mut ge) = (true, true);
        for i in 1..=self.len().max(lam.len()) {
            sm += self.part(i);
            sl += lam.part(i);
            match sm.cmp(&sl) {
                Ordering::Less => ge = false,
                Ordering::Greater => le = false,
                Ordering::Equal => {}
            }
        }
        if le {
            Dominance::Leq
        } else if ge {
            Dominance::Gt
        } else {
            Dominance::Incomparable
        }
    }

    pub fn dominated_by(&self, lam: &Partition) -> bool {
        self.dominance(lam) == Dominance::Leq
    }

    pub fn rectangles(&self) -> Result<Vec<Block>, PartitionError> {
        if self.is_empty() {
            return Err(PartitionError::EmptyPartition);
        }
        let mut vals: Vec<u32> = self.0.clone();
        vals.dedup();
        let mut blocks = Vec::with_capacity(vals.len());
        for (a, &v) in vals.iter().enumerate() {
            let next = vals.get(a + 1).copied().unwrap_or(0);
            let r = self.0.iter().take_while(|&&p| p >= v).count() as u32;
            blocks.push(Block { s: v - next, r });
        }
        Ok(blocks)
    }

    /// Rebuild a partition by stacking the rectangles `(s_a^{r_a})`.
    pub fn from_rectangles(blocks: &[Block]) -> Partition {
        let h = blocks.iter().map(|b| b.r).max().unwrap_or(0) as usize;
        let mut parts = vec![0u32; h];
        for b in blocks {
            for p in parts.iter_mut().take(b.r as usize) {
                *p += b.s;
            }
        }
        Partition::new(parts)
    }

    /// Partial stacks `λ^{(a)}` for `a = 1..=N`: the first `a` rectangles stacked.
    pub fn rectangle_stages(&self) -> Result<Vec<Partition>, PartitionError> {
        let blocks = self.rectangles()?;
        Ok((1..=blocks.len())
            .map(|a| Self::from_rectangles(&blocks[..a]))
            .collect())
    }

    /// All partitions of `n`, reverse-lexicographic (so `(n)` first).
    pub fn all(n: u32) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        gen(n, n, &mut cur, &mut out);
        out
    }

    /// Partitions of `n` with at most `k` parts.
    pub fn all_with_max_len(n: u32, k: usize) -> Vec<Partition> {
        Self::all(n).into_iter().filter(|p| p.len() <= k).collect()
    }
}

fn gen(n: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if n == 0 {
        out.push(Partition(cur.clone()));
        return;
    }
    for p in (1..=n.min(max)).rev() {
        cur.push(p);
        gen(n - p, p, cur, out);
        cur.pop();
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Partition {
    type Err = PartitionError;

    /// Accepts `(3,3,1)`, `3,3,1`, `[3,3,1]` or `()`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let inner = s.trim().trim_start_matches(['(', '[']).trim_end_matches([')', ']']);
        if inner.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(',')
            .map(|x| x.trim().parse::<u32>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| PartitionError::Invalid(s.to_string()))?;
        Partition::try_from_parts(parts)
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = PartitionError;
    fn try_from(v: Vec<u32>) -> Result<Self, Self::Error> {
        Partition::try_from_parts(v)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

#[macro_export]
macro_rules! part {
    () => { $crate::partition::Partition::empty() };
    ($($x:expr),+ $(,)?) => { $crate::partition::Partition::new(vec![$($x),+]) };
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn dominance_examples() {
        assert_eq!(p("1,1,1").dominance(&p("3")), Dominance::Leq);
        assert_eq!(p("2,1").dominance(&p("2,1")), Dominance::Leq);
        assert_eq!(p("2,2,2").dominance(&p("3,1,1,1")), Dominance::Incomparable);
        assert_eq!(p("3").dominance(&p("2,1")), Dominance::Gt);
        assert_eq!(p("2").dominance(&p("1")), Dominance::Incomparable);
    }

    #[test]
    fn conjugates() {
        assert_eq!(p("3,1").conjugate(), p("2,1,1"));
        assert_eq!(p("()").conjugate(), p("()"));
        assert_eq!(p("4,4,2,1").conjugate(), p("4,3,2,2"));
    }

    #[test]
    fn arm_and_leg() {
        assert_eq!(p("2,1").armleg((1, 1)).unwrap(), (1, 1, 0, 0));
        assert_eq!(p("1").armleg((1, 1)).unwrap(), (0, 0, 0, 0));
        assert_eq!(p("3,2").armleg((1, 2)).unwrap(), (1, 1, 1, 0));
        assert_eq!(p("3,2").armleg((2, 3)), Err(PartitionError::CellOutOfDiagram(2, 3)));
    }

    #[test]
    fn rectangle_blocks() {
        assert_eq!(
            p("3,3,1").rectangles().unwrap(),
            vec![Block { s: 2, r: 2 }, Block { s: 1, r: 3 }]
        );
        assert_eq!(p("2,2").rectangles().unwrap(), vec![Block { s: 2, r: 2 }]);
        assert_eq!(
            p("3,2,1").rectangles().unwrap(),
            vec![Block { s: 1, r: 1 }, Block { s: 1, r: 2 }, Block { s: 1, r: 3 }]
        );
        assert_eq!(p("()").rectangles(), Err(PartitionError::EmptyPartition));
        assert_eq!(p("3,3,1").rectangle_stages().unwrap(), vec![p("2,2"), p("3,3,1")]);
    }

    #[test]
    fn enumeration_counts_and_order() {
        let counts: Vec<usize> = (0..=10).map(|n| Partition::all(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
        assert_eq!(Partition::all(3), vec![p("3"), p("2,1"), p("1,1,1")]);
    }

    #[test]
    fn text_and_json_forms() {
        let l = p("(3,3,1)");
        assert_eq!(l.to_string(), "(3,3,1)");
        assert_eq!(serde_json::to_string(&l).unwrap(), "[3,3,1]");
        assert_eq!(serde_json::from_str::<Partition>("[3,3,1]").unwrap(), l);
        assert!(serde_json::from_str::<Partition>("[1,3]").is_err());
        assert_eq!(p("4,2,2").z(), BigInt::from(4 * 2 * 2 * 2));
    }
}
