//! Rewrites that change a soft set's attributes but keep its τ family, so
//! the rewritten soft set is equivalent to the original.

use std::collections::HashSet;

use rand::seq::{IndexedRandom, SliceRandom};
use rand::Rng;

use crate::softset::SoftSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rewrite {
    /// Bijective renaming of all attributes.
    Rename,
    /// Adds a fresh attribute carrying a copy of an existing value.
    Duplicate,
    /// Removes one of two attributes that share a value.
    DeleteDuplicate,
    /// Permutes the attribute order.
    Reorder,
}

impl Rewrite {
    pub const ALL: [Rewrite; 4] = [
        Rewrite::Rename,
        Rewrite::Duplicate,
        Rewrite::DeleteDuplicate,
        Rewrite::Reorder,
    ];

    /// Applies the rewrite. Returns `None` when it does not apply
    /// (no attributes, or no shared value to delete).
    pub fn apply<R: Rng + ?Sized>(self, s: &SoftSet, rng: &mut R) -> Option<SoftSet> {
        match self {
            Rewrite::Rename => rename(s, rng),
            Rewrite::Duplicate => duplicate(s, rng),
            Rewrite::DeleteDuplicate => delete_duplicate(s, rng),
            Rewrite::Reorder => reorder(s, rng),
        }
    }
}

/// Applies between one and `max_steps` rewrites drawn from `kinds`,
/// skipping draws that do not apply. The result is always equivalent to
/// `s`, and may equal it.
pub fn random_equivalent<R: Rng + ?Sized>(
    s: &SoftSet,
    kinds: &[Rewrite],
    max_steps: usize,
    rng: &mut R,
) -> SoftSet {
    let steps = rng.random_range(1..=max_steps.max(1));
    let mut current = s.clone();
    for _ in 0..steps {
        let Some(&kind) = kinds.choose(rng) else {
            break;
        };
        if let Some(next) = kind.apply(&current, rng) {
            current = next;
        }
    }
    current
}

fn fresh_name(taken: &HashSet<&str>, stem: &str, mut counter: usize) -> String {
    loop {
        let candidate = format!("{stem}#{counter}");
        if !taken.contains(candidate.as_str()) {
            return candidate;
        }
        counter += 1;
    }
}

fn rename<R: Rng + ?Sized>(s: &SoftSet, rng: &mut R) -> Option<SoftSet> {
    if s.is_empty() {
        return None;
    }
    let tag: u32 = rng.random();
    let mut labels: Vec<usize> = (0..s.len()).collect();
    labels.shuffle(rng);
    let taken: HashSet<&str> = s.attributes().iter().map(String::as_str).collect();
    let stem = format!("r{tag:08x}");
    let mut names = Vec::with_capacity(s.len());
    let mut used = HashSet::new();
    for label in labels {
        let mut name = format!("{stem}_{label}");
        if taken.contains(name.as_str()) || used.contains(&name) {
            name = fresh_name(&taken, &name, 0);
        }
        used.insert(name.clone());
        names.push(name);
    }
    SoftSet::from_subsets(s.universe().clone(), names, s.values().to_vec()).ok()
}

fn duplicate<R: Rng + ?Sized>(s: &SoftSet, rng: &mut R) -> Option<SoftSet> {
    if s.is_empty() {
        return None;
    }
    let source = rng.random_range(0..s.len());
    let at = rng.random_range(0..=s.len());
    let taken: HashSet<&str> = s.attributes().iter().map(String::as_str).collect();
    let name = fresh_name(&taken, &s.attributes()[source], 1);

    let mut attributes = s.attributes().to_vec();
    let mut values = s.values().to_vec();
    attributes.insert(at, name);
    values.insert(at, s.values()[source].clone());
    SoftSet::from_subsets(s.universe().clone(), attributes, values).ok()
}

fn delete_duplicate<R: Rng + ?Sized>(s: &SoftSet, rng: &mut R) -> Option<SoftSet> {
    let values = s.values();
    let shared: Vec<usize> = (0..values.len())
        .filter(|&i| (0..values.len()).any(|j| j != i && values[j] == values[i]))
        .collect();
    let &victim = shared.choose(rng)?;
    let mut attributes = s.attributes().to_vec();
    let mut values = values.to_vec();
    attributes.remove(victim);
    values.remove(victim);
    SoftSet::from_subsets(s.universe().clone(), attributes, values).ok()
}

fn reorder<R: Rng + ?Sized>(s: &SoftSet, rng: &mut R) -> Option<SoftSet> {
    if s.len() < 2 {
        return None;
    }
    let mut order: Vec<usize> = (0..s.len()).collect();
    order.shuffle(rng);
    s.reordered(&order).ok()
}
