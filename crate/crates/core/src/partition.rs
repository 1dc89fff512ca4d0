//! Integer partitions in multiplicity form and plain enumeration.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::PartitionError;

/// A partition stored as `(part, multiplicity)` pairs, parts strictly
/// decreasing, multiplicities positive.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    pairs: Vec<(u32, u32)>,
}

impl Partition {
    pub fn empty() -> Self {
        Partition::default()
    }

    /// Validates and wraps multiplicity pairs.
    pub fn from_pairs(pairs: Vec<(u32, u32)>) -> Result<Self, PartitionError> {
        let ok = pairs.iter().all(|&(p, m)| p > 0 && m > 0) && pairs.windows(2).all(|w| w[0].0 > w[1].0);
        if ok {
            Ok(Partition { pairs })
        } else {
            Err(PartitionError::Order)
        }
    }

    /// Builds a partition from parts in any order.
    pub fn from_parts(parts: &[u32]) -> Result<Self, PartitionError> {
        let mut counts: BTreeMap<u32, u32> = BTreeMap::new();
        for &p in parts {
            if p == 0 {
                return Err(PartitionError::Order);
            }
            *counts.entry(p).or_default() += 1;
        }
        Ok(Partition { pairs: counts.into_iter().rev().collect() })
    }

    /// Builds from a multiplicity table indexed by part size (index 0 ignored).
    pub(crate) fn from_multiplicities(mult: &[u32]) -> Self {
        let pairs =
            mult.iter().enumerate().skip(1).rev().filter(|(_, &m)| m > 0).map(|(p, &m)| (p as u32, m)).collect();
        Partition { pairs }
    }

    pub fn pairs(&self) -> &[(u32, u32)] {
        &self.pairs
    }

    pub fn weight(&self) -> u64 {
        self.pairs.iter().map(|&(p, m)| u64::from(p) * u64::from(m)).sum()
    }

    /// Total number of parts, counting multiplicity.
    pub fn len(&self) -> u32 {
        self.pairs.iter().map(|&(_, m)| m).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Number of different part sizes.
    pub fn distinct_sizes(&self) -> usize {
        self.pairs.len()
    }

    pub fn multiplicity(&self, part: u32) -> u32 {
        self.pairs.binary_search_by(|&(p, _)| part.cmp(&p)).map(|i| self.pairs[i].1).unwrap_or(0)
    }

    pub fn largest_part(&self) -> u32 {
        self.pairs.first().map_or(0, |&(p, _)| p)
    }

    pub fn is_distinct(&self) -> bool {
        self.pairs.iter().all(|&(_, m)| m == 1)
    }

    /// Parts in non-increasing order, repeats expanded.
    pub fn parts(&self) -> Vec<u32> {
        self.pairs.iter().flat_map(|&(p, m)| std::iter::repeat_n(p, m as usize)).collect()
    }

    /// Multiset union.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut counts: BTreeMap<u32, u32> = BTreeMap::new();
        for &(p, m) in self.pairs.iter().chain(&other.pairs) {
            *counts.entry(p).or_default() += m;
        }
        Partition { pairs: counts.into_iter().rev().collect() }
    }

    /// Multiplicity table indexed by part size, of length `largest + 1`.
    pub(crate) fn multiplicity_table(&self) -> Vec<u32> {
        let mut t = vec![0; self.largest_part() as usize + 1];
        for &(p, m) in &self.pairs {
            t[p as usize] = m;
        }
        t
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.pairs.is_empty() {
            return f.write_str("()");
        }
        for (i, &(p, m)) in self.pairs.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            if m == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Partition {
    type Err = PartitionError;

    /// Parses `9,5,4^4,2^4,1`; `()` is the empty partition.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "()" || s.is_empty() {
            return Ok(Partition::empty());
        }
        let bad = || PartitionError::Parse(s.to_string());
        let mut pairs = Vec::new();
        for item in s.split(',') {
            let (p, m) = match item.trim().split_once('^') {
                Some((p, m)) => (p, m),
                None => (item.trim(), "1"),
            };
            let p: u32 = p.trim().parse().map_err(|_| bad())?;
            let m: u32 = m.trim().parse().map_err(|_| bad())?;
            pairs.push((p, m));
        }
        Partition::from_pairs(pairs)
    }
}

/// Every partition of `n`, in reverse-lexicographic order of part lists.
pub fn enumerate_all(n: u32) -> AllPartitions {
    AllPartitions { parts: None, n, done: false }
}

/// Iterator behind [`enumerate_all`].
pub struct AllPartitions {
    parts: Option<Vec<u32>>,
    n: u32,
    done: bool,
}

impl Iterator for AllPartitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        if self.done {
            return None;
        }
        let parts = match self.parts.as_mut() {
            None => {
                let first = if self.n == 0 { vec![] } else { vec![self.n] };
                self.parts = Some(first);
                self.parts.as_mut().unwrap()
            }
            Some(parts) => {
                // strip trailing ones, decrement the last part > 1, refill
                let mut ones = 0;
                while parts.last() == Some(&1) {
                    parts.pop();
                    ones += 1;
                }
                let Some(last) = parts.last_mut() else {
                    self.done = true;
                    return None;
                };
                *last -= 1;
                let cap = *last;
                let mut rest = ones + 1;
                while rest > 0 {
                    let take = rest.min(cap);
                    parts.push(take);
                    rest -= take;
                }
                parts
            }
        };
        Some(Partition::from_parts(parts).expect("positive parts"))
    }
}

/// Number of partitions of each `n <= max` by Euler's recurrence, used as an
/// independent count.
pub fn partition_counts(max: usize) -> Vec<u128> {
    let mut p = vec![0u128; max + 1];
    p[0] = 1;
    for n in 1..=max {
        let mut acc: i128 = 0;
        let mut j: usize = 1;
        loop {
            let g1 = j * (3 * j - 1) / 2;
            if g1 > n {
                break;
            }
            let sign: i128 = if j % 2 == 1 { 1 } else { -1 };
            acc += sign * p[n - g1] as i128;
            let g2 = j * (3 * j + 1) / 2;
            if g2 <= n {
                acc += sign * p[n - g2] as i128;
            }
            j += 1;
        }
        p[n] = acc as u128;
    }
    p
}

/// True iff every part repeated at least `k` times has every smaller
/// positive integer repeated at least `k` times.
pub fn is_initial_k_repetition(p: &Partition, k: u32) -> bool {
    // the largest part with multiplicity >= k decides it
    let Some(&(top, _)) = p.pairs().iter().find(|&&(_, m)| m >= k) else {
        return true;
    };
    (1..top).all(|i| p.multiplicity(i) >= k)
}
