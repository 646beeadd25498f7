use crate::error::Result;
use crate::softset::SoftSet;

/// Per-attribute gravity: the number of ones in each matrix column, i.e.
/// the size of each value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GravityVector {
    entries: Vec<(String, usize)>,
}

impl GravityVector {
    pub fn get(&self, attribute: &str) -> Option<usize> {
        self.entries
            .iter()
            .find(|(a, _)| a == attribute)
            .map(|&(_, g)| g)
    }

    pub fn counts(&self) -> Vec<usize> {
        self.entries.iter().map(|&(_, g)| g).collect()
    }

    pub fn total(&self) -> usize {
        self.entries.iter().map(|&(_, g)| g).sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, usize)> {
        self.entries.iter().map(|(a, g)| (a.as_str(), *g))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

pub fn gravity(s: &SoftSet) -> GravityVector {
    let m = s.to_matrix();
    GravityVector {
        entries: s
            .attributes()
            .iter()
            .enumerate()
            .map(|(j, a)| (a.clone(), m.column_weight(j)))
            .collect(),
    }
}

/// For one nonempty value of the target soft set, the approximating
/// attribute chosen to dominate it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DominationWitness {
    pub target: String,
    pub target_gravity: usize,
    /// `None` if no nonempty value of the approximating soft set fits inside.
    pub witness: Option<(String, usize)>,
}

/// For every attribute `b` of `f` with a nonempty value, the attribute `a`
/// of `s` with `∅ ≠ s(a) ⊆ f(b)` of largest gravity (first in attribute
/// order on ties).
pub fn domination_witnesses(s: &SoftSet, f: &SoftSet) -> Result<Vec<DominationWitness>> {
    s.ensure_same_universe(f)?;
    let gs = gravity(s);
    let gf = gravity(f);
    Ok(f.iter()
        .zip(gf.counts())
        .filter(|((_, target), _)| !target.is_empty())
        .map(|((b, target), target_gravity)| {
            let witness = s
                .iter()
                .zip(gs.counts())
                .filter(|((_, v), _)| !v.is_empty() && v.is_subset(target))
                .fold(None::<(&str, usize)>, |best, ((a, _), g)| match best {
                    Some((_, bg)) if bg >= g => best,
                    _ => Some((a, g)),
                })
                .map(|(a, g)| (a.to_string(), g));
            DominationWitness {
                target: b.to_string(),
                target_gravity,
                witness,
            }
        })
        .collect())
}

/// True when every nonempty value of `f` has a witness in `s` whose gravity
/// does not exceed its own. This holds exactly when `s` internally
/// approximates `f`.
pub fn gravity_domination(s: &SoftSet, f: &SoftSet) -> Result<bool> {
    Ok(domination_witnesses(s, f)?.iter().all(|w| {
        w.witness
            .as_ref()
            .is_some_and(|&(_, g)| g <= w.target_gravity)
    }))
}
