//! Naive reference implementations computed directly on element names.
//!
//! Nothing here touches [`BitMatrix`](crate::matrix::BitMatrix): these are
//! the ground truth that the matrix-form operations are checked against.
//! Speed is not a concern.

use std::collections::BTreeSet;

use crate::algebra::PairName;
use crate::analysis::Rational;
use crate::error::{Result, SoftSetError};
use crate::softset::{SoftSet, Subset, Universe};

fn names(s: &SoftSet, attribute: &str) -> BTreeSet<String> {
    s.value_names(attribute)
        .expect("attribute belongs to s")
        .into_iter()
        .map(str::to_string)
        .collect()
}

fn same_universe(s: &SoftSet, f: &SoftSet) -> Result<()> {
    if s.universe().elements() == f.universe().elements() {
        Ok(())
    } else {
        Err(SoftSetError::UniverseMismatch)
    }
}

fn pair(l: &str, r: &str) -> String {
    PairName::new(l, r).to_string()
}

pub fn oracle_complement(s: &SoftSet) -> SoftSet {
    let all: BTreeSet<String> = s.universe().elements().iter().cloned().collect();
    let values: Vec<(String, Vec<String>)> = s
        .attributes()
        .iter()
        .map(|a| (a.clone(), all.difference(&names(s, a)).cloned().collect()))
        .collect();
    SoftSet::new(s.universe().clone(), s.attributes().to_vec(), values)
        .expect("complement stays inside the universe")
}

fn oracle_pairwise(
    s: &SoftSet,
    f: &SoftSet,
    op: impl Fn(&BTreeSet<String>, &BTreeSet<String>) -> Vec<String>,
) -> Result<SoftSet> {
    same_universe(s, f)?;
    let mut attributes = Vec::new();
    let mut values = Vec::new();
    for a in s.attributes() {
        for b in f.attributes() {
            let name = pair(a, b);
            attributes.push(name.clone());
            values.push((name, op(&names(s, a), &names(f, b))));
        }
    }
    SoftSet::new(s.universe().clone(), attributes, values)
}

pub fn oracle_union(s: &SoftSet, f: &SoftSet) -> Result<SoftSet> {
    oracle_pairwise(s, f, |x, y| x.union(y).cloned().collect())
}

pub fn oracle_intersection(s: &SoftSet, f: &SoftSet) -> Result<SoftSet> {
    oracle_pairwise(s, f, |x, y| x.intersection(y).cloned().collect())
}

pub fn oracle_product(s: &SoftSet, f: &SoftSet) -> Result<SoftSet> {
    same_universe(s, f)?;
    let elements = s.universe().elements();
    let squared = Universe::new(
        elements
            .iter()
            .flat_map(|x| elements.iter().map(move |y| pair(x, y))),
    )?;
    let mut attributes = Vec::new();
    let mut values = Vec::new();
    for a in s.attributes() {
        for b in f.attributes() {
            let name = pair(a, b);
            let (left, right) = (names(s, a), names(f, b));
            let cells: Vec<String> = left
                .iter()
                .flat_map(|x| right.iter().map(move |y| pair(x, y)))
                .collect();
            attributes.push(name.clone());
            values.push((name, cells));
        }
    }
    SoftSet::new(squared, attributes, values)
}

/// Counts agreeing cells by membership tests over every element and every
/// attribute position up to the wider width; positions past an operand's
/// width count as "not a member".
pub fn oracle_similarity(s: &SoftSet, f: &SoftSet) -> Result<Rational> {
    same_universe(s, f)?;
    let width = s.len().max(f.len());
    let m = s.universe().len();
    if m == 0 || width == 0 {
        return Err(SoftSetError::EmptyDenominator);
    }
    let member = |t: &SoftSet, j: usize, x: &str| -> bool {
        t.attributes()
            .get(j)
            .is_some_and(|a| names(t, a).contains(x))
    };
    let mut agree = 0u64;
    for x in s.universe().elements() {
        for j in 0..width {
            if member(s, j, x) == member(f, j, x) {
                agree += 1;
            }
        }
    }
    Ok(Rational::new(agree, (m * width) as u64))
}

pub const MAX_ENUMERATION_UNIVERSE: usize = 4;
pub const MAX_ENUMERATION_ATTRIBUTES: usize = 3;

/// Every soft set over `universe` with 1 to `max_attributes` attributes
/// named `p1, p2, ...`, ordered by attribute count and then by the binary
/// code of the values.
pub fn enumerate_soft_sets(
    universe: &Universe,
    max_attributes: usize,
) -> Result<impl Iterator<Item = SoftSet>> {
    let m = universe.len();
    if m > MAX_ENUMERATION_UNIVERSE || max_attributes > MAX_ENUMERATION_ATTRIBUTES {
        return Err(SoftSetError::BoundExceeded(format!(
            "universe of {m} with up to {max_attributes} attributes (limits are {MAX_ENUMERATION_UNIVERSE} and {MAX_ENUMERATION_ATTRIBUTES})"
        )));
    }
    let universe = universe.clone();
    Ok((1..=max_attributes).flat_map(move |k| {
        let universe = universe.clone();
        let names: Vec<String> = (1..=k).map(|j| format!("p{j}")).collect();
        (0u64..1 << (m * k)).map(move |code| {
            let values = (0..k)
                .map(|j| {
                    (0..m)
                        .filter(|&i| code >> (j * m + i) & 1 == 1)
                        .collect::<Subset>()
                })
                .collect();
            SoftSet::from_subsets(universe.clone(), names.clone(), values)
                .expect("enumerated values lie in the universe")
        })
    }))
}
