//! Springer characters of nilpotents in `gl_n` at the level of characters.
//!
//! A nilpotent of Jordan type `lambda` is regular in the Levi with blocks
//! `lambda`. Its Springer fibre has `n! / prod lambda_i!` torus-fixed points,
//! one for each coset of `S_lambda`, and the Springer representation is the
//! permutation representation on those cosets, `Ind_{S_lambda}^{S_n} 1`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::partition::{factorial, Partition};
use crate::reps::{induce_character, induced_trivial, permutation_character, CharacterVector, FiniteAction, YoungClassFunction};
use crate::weyl::{Permutation, YoungSubgroup};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpringerInstance {
    jordan_type: Partition,
}

impl SpringerInstance {
    pub fn new(jordan_type: Partition) -> Result<Self> {
        if jordan_type.is_empty() {
            return Err(Error::InvalidArgument("empty Jordan type".into()));
        }
        Ok(Self { jordan_type })
    }

    /// Checks that `jordan_type` partitions `n`.
    pub fn with_n(n: usize, jordan_type: Partition) -> Result<Self> {
        if jordan_type.size() != n {
            return Err(Error::InvalidArgument(format!("{jordan_type} is not a partition of {n}")));
        }
        Self::new(jordan_type)
    }

    pub fn n(&self) -> usize {
        self.jordan_type.size()
    }

    pub fn jordan_type(&self) -> &Partition {
        &self.jordan_type
    }

    pub fn levi(&self) -> YoungSubgroup {
        YoungSubgroup::from_partition(&self.jordan_type).expect("partitions have positive parts")
    }

    pub fn fixed_point_count(&self) -> u128 {
        factorial(self.n()) / self.jordan_type.factorial_product()
    }
}

pub fn springer_character(inst: &SpringerInstance) -> Result<CharacterVector> {
    induced_trivial(&inst.levi())
}

/// Ways to distribute the parts of `lambda` over the blocks, as one Jordan
/// type per block, each summing to its block size.
pub fn levi_assignments(lambda: &Partition, blocks: &[usize]) -> Vec<Vec<Partition>> {
    let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
    for &p in lambda.parts() {
        *counts.entry(p).or_default() += 1;
    }
    let mut out = Vec::new();
    assign(&mut counts, blocks, &mut Vec::new(), &mut out);
    out
}

fn assign(counts: &mut BTreeMap<usize, usize>, blocks: &[usize], acc: &mut Vec<Partition>, out: &mut Vec<Vec<Partition>>) {
    let Some((&b, rest)) = blocks.split_first() else {
        if counts.values().all(|&c| c == 0) {
            out.push(acc.clone());
        }
        return;
    };
    let mut choices = Vec::new();
    let sizes: Vec<usize> = counts.keys().rev().copied().collect();
    sub_multisets(counts, &sizes, b, &mut Vec::new(), &mut choices);
    for parts in choices {
        for p in &parts {
            *counts.get_mut(p).expect("chosen from counts") -= 1;
        }
        acc.push(Partition::from_unsorted(parts.clone()));
        assign(counts, rest, acc, out);
        acc.pop();
        for p in &parts {
            *counts.get_mut(p).expect("chosen from counts") += 1;
        }
    }
}

/// Weakly decreasing selections from `counts`, using sizes in `sizes`
/// (decreasing), that sum to `target`.
fn sub_multisets(counts: &BTreeMap<usize, usize>, sizes: &[usize], target: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if target == 0 {
        out.push(acc.clone());
        return;
    }
    let Some((&s, rest)) = sizes.split_first() else {
        return;
    };
    let available = counts[&s];
    for k in (0..=available.min(target / s)).rev() {
        acc.extend(std::iter::repeat_n(s, k));
        sub_multisets(counts, rest, target - k * s, acc, out);
        acc.truncate(acc.len() - k);
    }
}

/// The Springer character of a nilpotent of type `mu` in `gl_b`, computed
/// by placing it in the Levi with blocks `mu`, where it is regular and each
/// block contributes the trivial character.
fn regular_in_levi(mu: &Partition) -> Result<CharacterVector> {
    if mu.len() == 1 {
        return Ok(CharacterVector::trivial(mu.size()));
    }
    let blocks = mu.parts().to_vec();
    let sub = YoungSubgroup::new(blocks.clone())?;
    let factors = blocks.iter().map(|&b| regular_in_levi(&Partition::one_row(b))).collect::<Result<Vec<_>>>()?;
    induce_character(&YoungClassFunction::tensor(&sub, &factors)?, mu.size())
}

/// The Springer character obtained by inducing from the Levi with blocks
/// `levi_blocks` the tensor product of the Springer characters of the blocks.
/// Every way of distributing the Jordan blocks over the Levi blocks is
/// computed and they must agree.
pub fn springer_via_levi_recursion(inst: &SpringerInstance, levi_blocks: &[usize]) -> Result<CharacterVector> {
    let n = inst.n();
    if levi_blocks.iter().sum::<usize>() != n {
        return Err(Error::InvalidArgument(format!("Levi blocks {levi_blocks:?} do not sum to {n}")));
    }
    let sub = YoungSubgroup::new(levi_blocks.to_vec())?;
    let assignments = levi_assignments(inst.jordan_type(), levi_blocks);
    if assignments.is_empty() {
        return Err(Error::InvalidArgument(format!(
            "Jordan type {} does not fit in Levi blocks {levi_blocks:?}",
            inst.jordan_type()
        )));
    }
    let mut result: Option<CharacterVector> = None;
    for types in &assignments {
        let factors = types.iter().map(regular_in_levi).collect::<Result<Vec<_>>>()?;
        let chi = induce_character(&YoungClassFunction::tensor(&sub, &factors)?, n)?;
        match &result {
            None => result = Some(chi),
            Some(prev) if *prev != chi => {
                return Err(Error::TheoremViolation(format!(
                    "block types {types:?} give {chi}, another assignment gives {prev}"
                )))
            }
            Some(_) => {}
        }
    }
    Ok(result.expect("at least one assignment"))
}

#[derive(Clone, Debug)]
pub struct OrbitModel {
    pub cosets: Vec<Permutation>,
    pub action: FiniteAction,
    pub character: CharacterVector,
}

/// The fixed points of the Springer fibre as the cosets `S_n / S_lambda`
/// with left translation, checked against [`springer_character`].
pub fn fixed_point_orbit_model(inst: &SpringerInstance) -> Result<OrbitModel> {
    let (cosets, action) = FiniteAction::on_cosets(&inst.levi())?;
    let character = permutation_character(&action)?;
    let expected = springer_character(inst)?;
    if character != expected {
        return Err(Error::TheoremViolation(format!("orbit character {character} differs from induced {expected}")));
    }
    if cosets.len() as u128 != inst.fixed_point_count() {
        return Err(Error::TheoremViolation(format!("{} cosets, expected {}", cosets.len(), inst.fixed_point_count())));
    }
    Ok(OrbitModel { cosets, action, character })
}
