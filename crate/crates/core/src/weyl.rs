//! Type A Weyl groups: permutations in one-line notation, their action on
//! torus coordinates, reflections, Bruhat order and Young subgroups.
//!
//! Conventions: `w` acts on coordinates by `w(x_i) = x_{w(i)}`, and products
//! compose right to left, `(vw)(i) = v(w(i))`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::LinearForm;
use crate::partition::{factorial, parse_list, Partition};

/// A permutation of `{1..n}`, stored 0-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Self { images: (0..n).collect() }
    }

    /// From 1-based one-line notation `(w(1), ..., w(n))`.
    pub fn from_one_line(one_line: &[usize]) -> Result<Self> {
        let n = one_line.len();
        let mut seen = vec![false; n];
        let mut images = Vec::with_capacity(n);
        for &v in one_line {
            if v == 0 || v > n || seen[v - 1] {
                return Err(Error::InvalidArgument(format!("{one_line:?} is not a permutation of 1..{n}")));
            }
            seen[v - 1] = true;
            images.push(v - 1);
        }
        Ok(Self { images })
    }

    /// The transposition of `i` and `j` (1-based).
    pub fn transposition(n: usize, i: usize, j: usize) -> Result<Self> {
        if i == 0 || j == 0 || i > n || j > n || i == j {
            return Err(Error::InvalidArgument(format!("({i} {j}) is not a transposition in S_{n}")));
        }
        let mut w = Self::identity(n);
        w.images.swap(i - 1, j - 1);
        Ok(w)
    }

    /// The cycle `c[0] -> c[1] -> ... -> c[0]` (1-based entries).
    pub fn cycle(n: usize, c: &[usize]) -> Result<Self> {
        let mut w = Self::identity(n);
        for (k, &a) in c.iter().enumerate() {
            let b = c[(k + 1) % c.len()];
            if a == 0 || a > n || b == 0 || b > n {
                return Err(Error::InvalidArgument(format!("cycle {c:?} out of range for S_{n}")));
            }
            w.images[a - 1] = b - 1;
        }
        Self::from_one_line(&w.one_line())
    }

    /// The longest element `(n, n-1, ..., 1)`.
    pub fn longest(n: usize) -> Self {
        Self { images: (0..n).rev().collect() }
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    /// Image of `i` (0-based).
    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    /// 1-based one-line notation.
    pub fn one_line(&self) -> Vec<usize> {
        self.images.iter().map(|v| v + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        check_same(self, other)?;
        Ok(Self { images: other.images.iter().map(|&i| self.images[i]).collect() })
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.n()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v] = i;
        }
        Self { images: inv }
    }

    /// Coxeter length: the number of inversions.
    pub fn length(&self) -> usize {
        let w = &self.images;
        (0..w.len()).map(|i| (i + 1..w.len()).filter(|&j| w[i] > w[j]).count()).sum()
    }

    pub fn cycle_type(&self) -> Partition {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut lengths = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut k = start;
            while !seen[k] {
                seen[k] = true;
                k = self.images[k];
                len += 1;
            }
            lengths.push(len);
        }
        Partition::from_unsorted(lengths)
    }

    /// All of `S_n` in lexicographic one-line order.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::with_capacity(factorial(n) as usize);
        let mut cur: Vec<usize> = (0..n).collect();
        loop {
            out.push(Self { images: cur.clone() });
            // next lexicographic permutation
            let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else { break };
            let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
            cur.swap(i - 1, j);
            cur[i..].reverse();
        }
        out
    }
}

fn check_same(x: &Permutation, y: &Permutation) -> Result<()> {
    if x.n() != y.n() {
        return Err(Error::Dimension { expected: x.n(), found: y.n() });
    }
    Ok(())
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.one_line().iter().map(ToString::to_string).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Accepts `"2,3,1"`, or `"231"` when every entry is a single digit.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let entries = if s.contains(',') {
            parse_list(s)?
        } else {
            s.chars()
                .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(|| Error::Parse(format!("bad permutation {s:?}"))))
                .collect::<Result<Vec<_>>>()?
        };
        Self::from_one_line(&entries)
    }
}

impl Serialize for Permutation {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// `w(alpha)`: the coefficient of `x_{w(i)}` in the output is the coefficient
/// of `x_i` in the input.
pub fn weyl_act_on_form(w: &Permutation, alpha: &LinearForm) -> Result<LinearForm> {
    if alpha.nvars() != w.n() {
        return Err(Error::Dimension { expected: w.n(), found: alpha.nvars() });
    }
    let mut coeffs = vec![Default::default(); w.n()];
    for (i, c) in alpha.coeffs().iter().enumerate() {
        coeffs[w.apply(i)] = c.clone();
    }
    Ok(LinearForm::new(coeffs))
}

/// The root system of type `A_{n-1}` in the `gl_n` convention: `n`
/// coordinates and positive roots `x_i - x_j`, `i < j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSystemA {
    n: usize,
    positive_roots: Vec<(usize, usize, LinearForm)>,
}

impl RootSystemA {
    pub fn new(n: usize) -> Self {
        let mut positive_roots = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                positive_roots.push((i, j, LinearForm::difference(n, i, j)));
            }
        }
        Self { n, positive_roots }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `(i, j, x_i - x_j)` with 0-based `i < j`.
    pub fn positive_roots(&self) -> &[(usize, usize, LinearForm)] {
        &self.positive_roots
    }

    /// `x_i - x_j` for any ordered pair of distinct 0-based indices.
    pub fn root(&self, i: usize, j: usize) -> LinearForm {
        LinearForm::difference(self.n, i, j)
    }

    /// `(i, j)` with `alpha = x_i - x_j`, if `alpha` is a root.
    pub fn as_root(&self, alpha: &LinearForm) -> Option<(usize, usize)> {
        let mut plus = None;
        let mut minus = None;
        for (k, c) in alpha.coeffs().iter().enumerate() {
            if *c == 1 && plus.is_none() {
                plus = Some(k);
            } else if *c == -1 && minus.is_none() {
                minus = Some(k);
            } else if *c != 0 {
                return None;
            }
        }
        Some((plus?, minus?))
    }
}

/// All reflections of `S_n` paired with their positive roots: the
/// transposition `(i j)` with `x_i - x_j`, `i < j`.
pub fn reflections(n: usize) -> Vec<(Permutation, LinearForm)> {
    RootSystemA::new(n)
        .positive_roots()
        .iter()
        .map(|(i, j, alpha)| {
            let mut t = Permutation::identity(n);
            t.images.swap(*i, *j);
            (t, alpha.clone())
        })
        .collect()
}

/// Bruhat order by the rank-matrix criterion: `x <= y` iff for all `i, k`,
/// `#{a <= i : x(a) >= k} <= #{a <= i : y(a) >= k}`.
pub fn bruhat_leq(x: &Permutation, y: &Permutation) -> Result<bool> {
    check_same(x, y)?;
    let n = x.n();
    for k in 0..n {
        let (mut cx, mut cy) = (0usize, 0usize);
        for i in 0..n {
            cx += usize::from(x.images[i] >= k);
            cy += usize::from(y.images[i] >= k);
            if cx > cy {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `S_{l1} x ... x S_{lm}` acting on consecutive blocks of positions.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct YoungSubgroup {
    blocks: Vec<usize>,
}

impl YoungSubgroup {
    pub fn new(blocks: Vec<usize>) -> Result<Self> {
        if blocks.is_empty() || blocks.contains(&0) {
            return Err(Error::InvalidArgument(format!("{blocks:?} is not a composition")));
        }
        Ok(Self { blocks })
    }

    pub fn from_partition(p: &Partition) -> Result<Self> {
        Self::new(p.parts().to_vec())
    }

    pub fn trivial(n: usize) -> Self {
        Self { blocks: vec![1; n] }
    }

    pub fn whole(n: usize) -> Self {
        Self { blocks: vec![n] }
    }

    pub fn blocks(&self) -> &[usize] {
        &self.blocks
    }

    pub fn n(&self) -> usize {
        self.blocks.iter().sum()
    }

    pub fn order(&self) -> u128 {
        self.blocks.iter().map(|&b| factorial(b)).product()
    }

    /// Block index of each position.
    pub fn block_labels(&self) -> Vec<usize> {
        self.blocks.iter().enumerate().flat_map(|(k, &b)| std::iter::repeat_n(k, b)).collect()
    }

    pub fn contains(&self, w: &Permutation) -> bool {
        let labels = self.block_labels();
        w.n() == labels.len() && (0..w.n()).all(|i| labels[w.apply(i)] == labels[i])
    }

    /// The minimal-length representative of the left coset `wH`: the entries
    /// of the one-line notation sorted within each block.
    pub fn coset_minimal(&self, w: &Permutation) -> Permutation {
        let mut images = w.images.clone();
        let mut start = 0;
        for &b in &self.blocks {
            images[start..start + b].sort_unstable();
            start += b;
        }
        Permutation { images }
    }
}

/// Minimal-length representatives of `S_n / H`, in lexicographic order.
pub fn coset_reps(n: usize, h: &YoungSubgroup) -> Result<Vec<Permutation>> {
    if h.n() != n {
        return Err(Error::InvalidArgument(format!("composition {:?} does not sum to {n}", h.blocks)));
    }
    Ok(Permutation::all(n).into_iter().filter(|w| h.coset_minimal(w) == *w).collect())
}

pub fn conjugacy_class_of(w: &Permutation) -> Partition {
    w.cycle_type()
}
