//! Integer partitions and compositions.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Weakly decreasing sequence of positive integers. Indexes both the
/// conjugacy classes and the irreducible characters of `S_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidArgument(format!("partition {parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidArgument(format!("partition {parts:?} is not weakly decreasing")));
        }
        Ok(Self(parts))
    }

    /// Sorts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self(parts)
    }

    pub fn one_row(n: usize) -> Self {
        Self(if n == 0 { Vec::new() } else { vec![n] })
    }

    pub fn one_column(n: usize) -> Self {
        Self(vec![1; n])
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

    pub fn conjugate(&self) -> Self {
        let width = self.0.first().copied().unwrap_or(0);
        Self((1..=width).map(|k| self.0.iter().filter(|&&p| p >= k).count()).collect())
    }

    /// Order of the centralizer of an element of cycle type `self`:
    /// `prod_i i^{m_i} m_i!`.
    pub fn z(&self) -> u128 {
        let mut acc: u128 = 1;
        let mut k = 0;
        while k < self.0.len() {
            let part = self.0[k];
            let mut mult = 0;
            while k < self.0.len() && self.0[k] == part {
                mult += 1;
                acc *= part as u128 * mult as u128;
                k += 1;
            }
        }
        acc
    }

    /// `prod_i lambda_i!`, the order of the Young subgroup `S_lambda`.
    pub fn factorial_product(&self) -> u128 {
        self.0.iter().map(|&p| factorial(p)).product()
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Self::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::new(parse_list(s)?)
    }
}

/// Parses `"2,3,1"`.
pub fn parse_list(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| t.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad integer {t:?} in {s:?}"))))
        .collect()
}

pub fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// All partitions of `n`, in decreasing lexicographic order (`(n)` first).
pub fn partitions(n: usize) -> Vec<Partition> {
    fn rec(remaining: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=remaining.min(max)).rev() {
            cur.push(p);
            rec(remaining - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Conjugacy-class order used for every character vector: partitions in
/// increasing lexicographic order, so `(1^n)` (the identity class) first and
/// `(n)` last.
pub fn class_order(n: usize) -> Vec<Partition> {
    let mut ps = partitions(n);
    ps.reverse();
    ps
}

/// All compositions (ordered sequences of positive integers) of `n`.
pub fn compositions(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in 1..=n {
        for mut rest in compositions(n - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        let counts: Vec<usize> = (1..=6).map(|n| partitions(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 3, 5, 7, 11]);
        assert_eq!(compositions(4).len(), 8);
        assert_eq!(
            class_order(3),
            vec![Partition(vec![1, 1, 1]), Partition(vec![2, 1]), Partition(vec![3])]
        );
    }

    #[test]
    fn centralizers_sum_to_one() {
        // sum over classes of 1/z = 1
        for n in 1..=6 {
            let nf = factorial(n);
            let total: u128 = partitions(n).iter().map(|p| nf / p.z()).sum();
            assert_eq!(total, nf);
        }
    }

    #[test]
    fn conjugate_and_parse() {
        let p: Partition = "3,1".parse().unwrap();
        assert_eq!(p.conjugate(), Partition(vec![2, 1, 1]));
        assert!("1,2".parse::<Partition>().is_err());
        assert_eq!(p.to_string(), "3,1");
        assert_eq!(binomial(5, 2), 10);
    }
}
