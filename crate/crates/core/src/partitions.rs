//! Partitions, hook statistics and padded `GL_n` weights.

use std::fmt;
use std::str::FromStr;

use num_traits::One;

use crate::arith::Rat;
use crate::Error;

/// Integer partition stored as weakly decreasing positive parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Sorts and strips zero parts.
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    /// Rejects input that is not already weakly decreasing.
    pub fn from_parts(parts: &[usize]) -> Result<Self, Error> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        Ok(Partition::new(parts.to_vec()))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The one-row partition `(n)`.
    pub fn row(n: usize) -> Self {
        Partition::new(vec![n])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Row `i` (zero-based), or 0 beyond the last row.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// `∑ λ_i²`
    pub fn norm2(&self) -> usize {
        self.0.iter().map(|p| p * p).sum()
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        Partition(
            (1..=width)
                .map(|c| self.0.iter().filter(|&&p| p >= c).count())
                .collect(),
        )
    }

    /// Hook lengths of all cells, row by row.
    pub fn hooks(&self) -> Vec<usize> {
        let conj = self.conjugate();
        let mut out = Vec::with_capacity(self.size());
        for (i, &row) in self.0.iter().enumerate() {
            for j in 0..row {
                out.push(row - j + conj.part(j) - i - 1);
            }
        }
        out
    }

    /// `n(λ) = ∑ (i−1) λ_i`
    pub fn n_stat(&self) -> usize {
        self.0.iter().enumerate().map(|(i, p)| i * p).sum()
    }

    /// `∏_{i<j≤r} (λ_i − λ_j + j − i)/(j − i)` over the `r = len(λ)` rows.
    pub fn d_lambda(&self) -> Rat {
        let r = self.len();
        let mut acc = Rat::one();
        for i in 0..r {
            for j in i + 1..r {
                let num = (self.0[i] + j) as i64 - (self.0[j] + i) as i64;
                acc *= Rat::new(num.into(), ((j - i) as i64).into());
            }
        }
        acc
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("-");
        }
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

/// CLI syntax: comma-separated parts, `-` (or nothing) for the empty partition.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if s.is_empty() || s == "-" {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|p| p.trim().parse::<usize>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| Error::InvalidPartition(s.to_string()))?;
        Partition::from_parts(&parts)
    }
}

/// All partitions of `n` in descending lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            rec(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// All partitions of size at most `n`, grouped by size.
pub fn partitions_up_to(n: usize) -> Vec<Partition> {
    (0..=n).flat_map(partitions_of).collect()
}

/// Integer weight of `GL_n`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct IntegerWeight(pub Vec<i64>);

impl IntegerWeight {
    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_dominant(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }

    pub fn sum(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn norm2(&self) -> i64 {
        self.0.iter().map(|x| x * x).sum()
    }
}

impl FromStr for IntegerWeight {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        s.split(',')
            .map(|p| p.trim().parse::<i64>())
            .collect::<Result<Vec<_>, _>>()
            .map(IntegerWeight)
            .map_err(|_| Error::Parse(format!("not an integer weight: {s:?}")))
    }
}

/// `(λ_1,…,λ_r, 0,…,0, −μ_s,…,−μ_1)` of length `n`.
pub fn padded_weight(lam: &Partition, mu: &Partition, n: usize) -> Result<IntegerWeight, Error> {
    let needed = lam.len() + mu.len();
    if n < needed {
        return Err(Error::RankTooSmall { n, needed });
    }
    let mut w: Vec<i64> = lam.parts().iter().map(|&p| p as i64).collect();
    w.resize(n - mu.len(), 0);
    w.extend(mu.parts().iter().rev().map(|&p| -(p as i64)));
    Ok(IntegerWeight(w))
}
