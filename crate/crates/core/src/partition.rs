//! Integer partitions and the scalar statistics attached to them.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{check_bound, Error, Result};

/// Largest `n` accepted by [`partitions_of`].
pub const DEFAULT_PARTITION_BOUND: usize = 40;

/// A weakly decreasing sequence of positive integers. The empty partition is allowed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        let ok = parts.iter().all(|&p| p > 0) && parts.windows(2).all(|w| w[0] >= w[1]);
        if ok {
            Ok(Partition(parts))
        } else {
            Err(Error::InvalidPartition(parts))
        }
    }

    /// Sorts the parts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// `(a^b)`: `b` parts equal to `a`.
    pub fn rectangle(a: usize, b: usize) -> Self {
        if a == 0 {
            Partition::empty()
        } else {
            Partition(vec![a; b])
        }
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

    pub fn transpose(&self) -> Partition {
        let first = self.0.first().copied().unwrap_or(0);
        let cols = (1..=first)
            .map(|c| self.0.iter().take_while(|&&p| p >= c).count())
            .collect();
        Partition(cols)
    }

    /// `n(μ) = Σ (i-1) μ_i`.
    pub fn n_stat(&self) -> usize {
        self.0.iter().enumerate().map(|(i, &p)| i * p).sum()
    }

    /// Number of parts equal to `i`.
    pub fn multiplicity(&self, i: usize) -> usize {
        self.0.iter().filter(|&&p| p == i).count()
    }

    /// Part size to multiplicity, for the sizes that occur.
    pub fn multiplicities(&self) -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for &p in &self.0 {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }

    /// All parts even.
    pub fn is_even(&self) -> bool {
        self.0.iter().all(|p| p % 2 == 0)
    }

    /// Every part size of the given parity (0 even, 1 odd) has even multiplicity.
    pub fn even_multiplicities_of_parity(&self, parity: usize) -> bool {
        self.multiplicities()
            .iter()
            .all(|(&i, &m)| i % 2 != parity || m % 2 == 0)
    }

    /// `Π (m_i + 1)` over part sizes of the given parity, or over all sizes when `None`.
    pub fn multiplicity_product(&self, parity: Option<usize>) -> u64 {
        self.multiplicities()
            .iter()
            .filter(|(&i, _)| parity.map_or(true, |p| i % 2 == p))
            .map(|(_, &m)| m as u64 + 1)
            .product()
    }

    /// `(-1)^{number of even parts}`, the sign of a permutation of this cycle type.
    pub fn epsilon(&self) -> i32 {
        if self.0.iter().filter(|&&p| p % 2 == 0).count() % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Order of the centralizer of a permutation of this cycle type.
    pub fn z(&self) -> BigInt {
        let mut z = BigInt::one();
        for (&i, &m) in &self.multiplicities() {
            for k in 1..=m {
                z *= i;
                z *= k;
            }
        }
        z
    }

    pub fn stats(&self) -> PartitionStats {
        let count = |f: fn(usize) -> bool| self.0.iter().filter(|&&p| f(p)).count();
        PartitionStats {
            multiplicities: self.multiplicities(),
            is_even: self.is_even(),
            even_parts: count(|p| p % 2 == 0),
            odd_parts: count(|p| p % 2 == 1),
            parts_0_mod_4: count(|p| p % 4 == 0),
            parts_2_mod_4: count(|p| p % 4 == 2),
            z: self.z(),
            epsilon: self.epsilon(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PartitionStats {
    pub multiplicities: BTreeMap<usize, usize>,
    pub is_even: bool,
    pub even_parts: usize,
    pub odd_parts: usize,
    pub parts_0_mod_4: usize,
    pub parts_2_mod_4: usize,
    #[serde(serialize_with = "crate::serialize_bigint")]
    pub z: BigInt,
    pub epsilon: i32,
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

/// Accepts `[3,1]`, `3,1` or `3 1`.
impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('[').trim_end_matches(']');
        let parts = inner
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<usize>().map_err(|_| Error::Unknown {
                    kind: "partition",
                    name: s.to_string(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// Partitions of `n` in reverse lexicographic order.
pub fn partitions_of(n: usize) -> Result<Partitions> {
    partitions_of_bounded(n, DEFAULT_PARTITION_BOUND)
}

pub fn partitions_of_bounded(n: usize, bound: usize) -> Result<Partitions> {
    check_bound("partition size", n, bound)?;
    Ok(Partitions {
        next: Some(if n == 0 { Vec::new() } else { vec![n] }),
    })
}

/// Iterator returned by [`partitions_of`].
#[derive(Debug, Clone)]
pub struct Partitions {
    next: Option<Vec<usize>>,
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let current = self.next.take()?;
        if let Some(k) = current.iter().rposition(|&p| p > 1) {
            let mut succ = current[..=k].to_vec();
            let mut rem = current.len() - k;
            succ[k] -= 1;
            let cap = succ[k];
            while rem > 0 {
                let p = cap.min(rem);
                succ.push(p);
                rem -= p;
            }
            self.next = Some(succ);
        }
        Some(Partition(current))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn transpose_examples() {
        assert_eq!(p(&[3, 1]).transpose(), p(&[2, 1, 1]));
        assert_eq!(Partition::empty().transpose(), Partition::empty());
        assert_eq!(p(&[2, 2]).transpose(), p(&[2, 2]));
    }

    #[test]
    fn n_stat_examples() {
        assert_eq!(p(&[2, 1]).n_stat(), 1);
        assert_eq!(p(&[1, 1, 1]).n_stat(), 3);
        assert_eq!(p(&[7]).n_stat(), 0);
    }

    #[test]
    fn stats_examples() {
        let s = p(&[1, 1]).stats();
        assert_eq!((s.z, s.epsilon, s.is_even), (2.into(), 1, false));
        let s = p(&[2, 1]).stats();
        assert_eq!((s.z, s.epsilon, s.even_parts, s.odd_parts), (2.into(), -1, 1, 1));
        let s = p(&[4, 2]).stats();
        assert!(s.is_even);
        assert_eq!((s.parts_0_mod_4, s.parts_2_mod_4), (1, 1));
        assert_eq!((s.z, s.epsilon), (8.into(), 1));
    }

    #[test]
    fn enumeration_order() {
        let got: Vec<_> = partitions_of(3).unwrap().collect();
        assert_eq!(got, vec![p(&[3]), p(&[2, 1]), p(&[1, 1, 1])]);
        assert_eq!(partitions_of(0).unwrap().collect::<Vec<_>>(), vec![Partition::empty()]);
        assert_eq!(partitions_of(8).unwrap().count(), 22);
        assert!(partitions_of(41).is_err());
    }

    #[test]
    fn rejects_bad_parts() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert_eq!("[3,1]".parse::<Partition>().unwrap(), p(&[3, 1]));
        assert_eq!("[]".parse::<Partition>().unwrap(), Partition::empty());
    }
}
