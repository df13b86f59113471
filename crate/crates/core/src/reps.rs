//! Characters of symmetric groups: Murnaghan-Nakayama, permutation
//! characters, Frobenius induction from Young subgroups and decomposition
//! into irreducibles.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::exact::{to_i64, Rational};
use crate::partition::{class_order, factorial, partitions, Partition};
use crate::weyl::{coset_reps, Permutation, YoungSubgroup};

/// Class function on `S_n`, one value per class of [`class_order`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterVector {
    n: usize,
    values: Vec<Rational>,
}

impl CharacterVector {
    pub fn new(n: usize, values: Vec<Rational>) -> Result<Self> {
        let expected = class_order(n).len();
        if values.len() != expected {
            return Err(Error::Dimension { expected, found: values.len() });
        }
        Ok(Self { n, values })
    }

    pub fn from_ints(n: usize, values: &[i64]) -> Result<Self> {
        Self::new(n, values.iter().map(|&v| Rational::from(v)).collect())
    }

    pub fn trivial(n: usize) -> Self {
        Self { n, values: vec![Rational::from(1); class_order(n).len()] }
    }

    pub fn sign(n: usize) -> Self {
        let values = class_order(n)
            .iter()
            .map(|mu| Rational::from(if (mu.size() - mu.len()) % 2 == 0 { 1 } else { -1 }))
            .collect();
        Self { n, values }
    }

    pub fn regular(n: usize) -> Self {
        let mut values = vec![Rational::from(0); class_order(n).len()];
        values[0] = Rational::from(factorial(n) as i64);
        Self { n, values }
    }

    pub fn zero(n: usize) -> Self {
        Self { n, values: vec![Rational::from(0); class_order(n).len()] }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn value_at(&self, mu: &Partition) -> Option<&Rational> {
        class_order(self.n).iter().position(|c| c == mu).map(|k| &self.values[k])
    }

    /// Value at the identity class.
    pub fn dim(&self) -> &Rational {
        &self.values[0]
    }

    /// Values as integers, when they all are.
    pub fn integer_values(&self) -> Option<Vec<i64>> {
        self.values.iter().map(to_i64).collect()
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::Dimension { expected: self.n, found: other.n });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Self { n: self.n, values: self.values.iter().zip(&other.values).map(|(a, b)| a + b).collect() })
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self { n: self.n, values: self.values.iter().map(|a| a * c).collect() }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Self { n: self.n, values: self.values.iter().zip(&other.values).map(|(a, b)| a * b).collect() })
    }

    /// `(1/n!) sum_C |C| chi(C) psi(C)`; characters of `S_n` are real.
    pub fn inner(&self, other: &Self) -> Result<Rational> {
        self.check(other)?;
        let classes = class_order(self.n);
        let mut acc = Rational::from(0);
        for ((mu, a), b) in classes.iter().zip(&self.values).zip(&other.values) {
            acc += a * b / Rational::from(mu.z());
        }
        Ok(acc)
    }
}

impl fmt::Display for CharacterVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vs: Vec<String> = self.values.iter().map(ToString::to_string).collect();
        write!(f, "({})", vs.join(", "))
    }
}

/// `|C_mu| = n! / z_mu`, in [`class_order`].
pub fn class_sizes(n: usize) -> Vec<u128> {
    class_order(n).iter().map(|mu| factorial(n) / mu.z()).collect()
}

/// `chi^lambda(mu)` by removing border strips of length `mu_1, mu_2, ...`,
/// tracked on beta-numbers.
pub fn character_value(lambda: &Partition, mu: &Partition) -> Result<i64> {
    if lambda.size() != mu.size() {
        return Err(Error::Dimension { expected: lambda.size(), found: mu.size() });
    }
    let l = lambda.len();
    let beta: Vec<usize> = lambda.parts().iter().enumerate().map(|(i, &p)| p + l - 1 - i).collect();
    Ok(mn_beta(&beta, mu.parts()))
}

fn mn_beta(beta: &[usize], mu: &[usize]) -> i64 {
    let Some((&k, rest)) = mu.split_first() else {
        return 1;
    };
    let mut total = 0;
    for (idx, &b) in beta.iter().enumerate() {
        if b < k || beta.contains(&(b - k)) {
            continue;
        }
        let crossed = beta.iter().filter(|&&c| c > b - k && c < b).count();
        let mut next = beta.to_vec();
        next[idx] = b - k;
        let sign = if crossed % 2 == 0 { 1 } else { -1 };
        total += sign * mn_beta(&next, rest);
    }
    total
}

pub fn irreducible_character(lambda: &Partition) -> CharacterVector {
    let n = lambda.size();
    let values = class_order(n)
        .iter()
        .map(|mu| Rational::from(character_value(lambda, mu).expect("same size")))
        .collect();
    CharacterVector { n, values }
}

/// Rows `chi^lambda` for every partition, `(n)` first.
pub fn character_table(n: usize) -> Vec<(Partition, CharacterVector)> {
    partitions(n).into_iter().map(|l| {
        let chi = irreducible_character(&l);
        (l, chi)
    }).collect()
}

/// Multiplicities of the irreducibles in `chi`, listed with `(n)` first and
/// zero multiplicities omitted.
pub fn decompose(chi: &CharacterVector) -> Result<Vec<(Partition, u64)>> {
    let mut out = Vec::new();
    let mut dim = Rational::from(0);
    for (lambda, irr) in character_table(chi.n) {
        let m = chi.inner(&irr)?;
        let Some(mi) = to_i64(&m) else {
            return Err(Error::NotACharacter(format!("multiplicity of {lambda} is {m}")));
        };
        if mi < 0 {
            return Err(Error::NotACharacter(format!("multiplicity of {lambda} is {mi}")));
        }
        if mi > 0 {
            dim += Rational::from(mi) * irr.dim();
            out.push((lambda, mi as u64));
        }
    }
    if &dim != chi.dim() {
        return Err(Error::NotACharacter(format!("irreducible dimensions sum to {dim}, not {}", chi.dim())));
    }
    Ok(out)
}

/// An action of `S_n` on `{0..size}`: `maps[k]` is the permutation of points
/// given by `Permutation::all(n)[k]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteAction {
    n: usize,
    size: usize,
    elements: Vec<Permutation>,
    maps: Vec<Vec<usize>>,
}

impl FiniteAction {
    /// Builds the action from `act(w, point)` and checks the action axioms on
    /// every pair of group elements.
    pub fn new(n: usize, size: usize, mut act: impl FnMut(&Permutation, usize) -> Result<usize>) -> Result<Self> {
        let elements = Permutation::all(n);
        let maps = elements
            .iter()
            .map(|w| (0..size).map(|p| act(w, p)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        let action = Self { n, size, elements, maps };
        action.verify()?;
        Ok(action)
    }

    fn index_of(&self, w: &Permutation) -> usize {
        self.elements.binary_search(w).expect("element of S_n")
    }

    fn verify(&self) -> Result<()> {
        for (w, map) in self.elements.iter().zip(&self.maps) {
            if map.iter().any(|&p| p >= self.size) {
                return Err(Error::NotAnAction(format!("{w} maps a point out of range")));
            }
            let mut seen = vec![false; self.size];
            for &p in map {
                seen[p] = true;
            }
            if seen.iter().any(|s| !s) {
                return Err(Error::NotAnAction(format!("{w} does not act bijectively")));
            }
            if w.is_identity() && map.iter().enumerate().any(|(k, &p)| k != p) {
                return Err(Error::NotAnAction("identity moves a point".into()));
            }
        }
        for (v, mv) in self.elements.iter().zip(&self.maps) {
            for (w, mw) in self.elements.iter().zip(&self.maps) {
                let vw = v.compose(w)?;
                let mvw = &self.maps[self.index_of(&vw)];
                if (0..self.size).any(|p| mvw[p] != mv[mw[p]]) {
                    return Err(Error::NotAnAction(format!("action of {vw} differs from {v} after {w}")));
                }
            }
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn map(&self, w: &Permutation) -> &[usize] {
        &self.maps[self.index_of(w)]
    }

    /// Left translation on cosets `S_n / H`, points indexed by [`coset_reps`].
    pub fn on_cosets(h: &YoungSubgroup) -> Result<(Vec<Permutation>, Self)> {
        let n = h.n();
        let reps = coset_reps(n, h)?;
        let index: BTreeMap<&Permutation, usize> = reps.iter().enumerate().map(|(k, x)| (x, k)).collect();
        let action = Self::new(n, reps.len(), |w, p| Ok(index[&h.coset_minimal(&w.compose(&reps[p])?)]))?;
        Ok((reps.clone(), action))
    }
}

/// Class function from per-element values, checked to be constant on classes.
pub fn class_function_from_elements(n: usize, mut value: impl FnMut(&Permutation) -> Result<Rational>) -> Result<CharacterVector> {
    let classes = class_order(n);
    let mut values: Vec<Option<Rational>> = vec![None; classes.len()];
    for w in Permutation::all(n) {
        let k = classes.binary_search(&w.cycle_type()).expect("cycle type is a partition of n");
        let v = value(&w)?;
        match &values[k] {
            None => values[k] = Some(v),
            Some(prev) if *prev != v => {
                return Err(Error::Representation(format!(
                    "value {v} at {w} differs from {prev} elsewhere in class {}",
                    classes[k]
                )))
            }
            Some(_) => {}
        }
    }
    CharacterVector::new(n, values.into_iter().map(|v| v.expect("every class is hit")).collect())
}

/// Fixed-point counts.
pub fn permutation_character(action: &FiniteAction) -> Result<CharacterVector> {
    class_function_from_elements(action.n, |w| {
        let fixed = action.map(w).iter().enumerate().filter(|(k, &p)| *k == p).count();
        Ok(Rational::from(fixed as i64))
    })
}

/// A class function on a Young subgroup `S_{b_1} x ... x S_{b_k}`, keyed by
/// tuples of cycle types, one per block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YoungClassFunction {
    subgroup: YoungSubgroup,
    values: BTreeMap<Vec<Partition>, Rational>,
}

fn class_tuples(blocks: &[usize]) -> Vec<Vec<Partition>> {
    let mut out = vec![Vec::new()];
    for &b in blocks {
        let mut next = Vec::new();
        for t in &out {
            for mu in class_order(b) {
                let mut t2 = t.clone();
                t2.push(mu);
                next.push(t2);
            }
        }
        out = next;
    }
    out
}

fn union(tuple: &[Partition]) -> Partition {
    Partition::from_unsorted(tuple.iter().flat_map(|p| p.parts().iter().copied()).collect())
}

impl YoungClassFunction {
    /// `chi_1 ⊗ ... ⊗ chi_k`, one character per block.
    pub fn tensor(subgroup: &YoungSubgroup, factors: &[CharacterVector]) -> Result<Self> {
        if factors.len() != subgroup.blocks().len() {
            return Err(Error::Dimension { expected: subgroup.blocks().len(), found: factors.len() });
        }
        for (f, &b) in factors.iter().zip(subgroup.blocks()) {
            if f.n() != b {
                return Err(Error::Dimension { expected: b, found: f.n() });
            }
        }
        let values = class_tuples(subgroup.blocks())
            .into_iter()
            .map(|t| {
                let v = t
                    .iter()
                    .zip(factors)
                    .map(|(mu, f)| f.value_at(mu).expect("class of the block").clone())
                    .product();
                (t, v)
            })
            .collect();
        Ok(Self { subgroup: subgroup.clone(), values })
    }

    pub fn trivial(subgroup: &YoungSubgroup) -> Self {
        let factors: Vec<CharacterVector> = subgroup.blocks().iter().map(|&b| CharacterVector::trivial(b)).collect();
        Self::tensor(subgroup, &factors).expect("factor sizes match blocks")
    }

    pub fn restriction(chi: &CharacterVector, subgroup: &YoungSubgroup) -> Result<Self> {
        if chi.n() != subgroup.n() {
            return Err(Error::Dimension { expected: subgroup.n(), found: chi.n() });
        }
        let values = class_tuples(subgroup.blocks())
            .into_iter()
            .map(|t| {
                let v = chi.value_at(&union(&t)).expect("union is a class of S_n").clone();
                (t, v)
            })
            .collect();
        Ok(Self { subgroup: subgroup.clone(), values })
    }

    pub fn subgroup(&self) -> &YoungSubgroup {
        &self.subgroup
    }

    pub fn value(&self, tuple: &[Partition]) -> Option<&Rational> {
        self.values.get(tuple)
    }

    /// `sum_c phi(c) psi(c) / z_c` over classes of the subgroup.
    pub fn inner(&self, other: &Self) -> Result<Rational> {
        if self.subgroup != other.subgroup {
            return Err(Error::InvalidArgument("class functions on different subgroups".into()));
        }
        let mut acc = Rational::from(0);
        for (t, a) in &self.values {
            let z: u128 = t.iter().map(Partition::z).product();
            acc += a * &other.values[t] / Rational::from(z);
        }
        Ok(acc)
    }
}

/// Frobenius induction: `Ind chi(mu) = sum z_mu / z_c * chi(c)` over the
/// classes `c` of the subgroup fusing into `mu`.
pub fn induce_character(chi: &YoungClassFunction, n: usize) -> Result<CharacterVector> {
    if chi.subgroup.n() != n {
        return Err(Error::Dimension { expected: n, found: chi.subgroup.n() });
    }
    let classes = class_order(n);
    let mut values = vec![Rational::from(0); classes.len()];
    for (t, v) in &chi.values {
        let mu = union(t);
        let k = classes.binary_search(&mu).expect("class of S_n");
        let zc: u128 = t.iter().map(Partition::z).product();
        values[k] += Rational::from(mu.z()) / Rational::from(zc) * v;
    }
    CharacterVector::new(n, values)
}

pub fn induced_trivial(h: &YoungSubgroup) -> Result<CharacterVector> {
    induce_character(&YoungClassFunction::trivial(h), h.n())
}
