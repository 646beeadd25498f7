//! Relations between soft sets over a common universe.
//!
//! Everything except [`equal`] depends only on the τ families involved, so
//! it is unaffected by renaming, duplicating or reordering attributes.
//! [`check_relation_correctness`] probes exactly that property for an
//! arbitrary relation.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Result, SoftSetError};
use crate::rewrite::{random_equivalent, Rewrite};
use crate::softset::{SoftSet, Subset, TauFamily};

/// Literal equality: same attribute set and the same value on every
/// attribute. Attribute order is ignored.
pub fn equal(s: &SoftSet, t: &SoftSet) -> Result<bool> {
    s.ensure_same_universe(t)?;
    if s.len() != t.len() {
        return Ok(false);
    }
    let theirs: HashMap<&str, &Subset> = t.iter().collect();
    Ok(s.iter().all(|(a, v)| theirs.get(a) == Some(&v)))
}

/// Equivalence: the τ families coincide.
pub fn equivalent(s: &SoftSet, t: &SoftSet) -> Result<bool> {
    s.ensure_same_universe(t)?;
    Ok(s.tau() == t.tau())
}

/// `s` internally approximates `f`: every nonempty value of `f` contains
/// some nonempty value of `s`.
pub fn internally_approximates(s: &SoftSet, f: &SoftSet) -> Result<bool> {
    s.ensure_same_universe(f)?;
    let inner: Vec<&Subset> = s.values().iter().filter(|v| !v.is_empty()).collect();
    Ok(f.values()
        .iter()
        .filter(|target| !target.is_empty())
        .all(|target| inner.iter().any(|v| v.is_subset(target))))
}

/// `s` externally approximates `f`: every value of `f` other than the whole
/// universe is contained in some value of `s` that is not the whole universe.
pub fn externally_approximates(s: &SoftSet, f: &SoftSet) -> Result<bool> {
    s.ensure_same_universe(f)?;
    let m = s.universe().len();
    let outer: Vec<&Subset> = s.values().iter().filter(|v| v.len() != m).collect();
    Ok(f.values()
        .iter()
        .filter(|target| target.len() != m)
        .all(|target| outer.iter().any(|v| v.is_superset(target))))
}

/// The approximation relations and the equivalences built from them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ApproxKind {
    Internal,
    External,
    StrictInternal,
    StrictExternal,
    InternalEquiv,
    ExternalEquiv,
    WeakEquiv,
}

impl ApproxKind {
    pub const ALL: [ApproxKind; 7] = [
        ApproxKind::Internal,
        ApproxKind::External,
        ApproxKind::StrictInternal,
        ApproxKind::StrictExternal,
        ApproxKind::InternalEquiv,
        ApproxKind::ExternalEquiv,
        ApproxKind::WeakEquiv,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ApproxKind::Internal => "internal",
            ApproxKind::External => "external",
            ApproxKind::StrictInternal => "strict-internal",
            ApproxKind::StrictExternal => "strict-external",
            ApproxKind::InternalEquiv => "internal-equiv",
            ApproxKind::ExternalEquiv => "external-equiv",
            ApproxKind::WeakEquiv => "weak-equiv",
        }
    }
}

pub fn relate(s: &SoftSet, f: &SoftSet, kind: ApproxKind) -> Result<bool> {
    let internal = || -> Result<(bool, bool)> {
        Ok((
            internally_approximates(s, f)?,
            internally_approximates(f, s)?,
        ))
    };
    let external = || -> Result<(bool, bool)> {
        Ok((
            externally_approximates(s, f)?,
            externally_approximates(f, s)?,
        ))
    };
    Ok(match kind {
        ApproxKind::Internal => internally_approximates(s, f)?,
        ApproxKind::External => externally_approximates(s, f)?,
        ApproxKind::StrictInternal => {
            let (fwd, back) = internal()?;
            fwd && !back
        }
        ApproxKind::StrictExternal => {
            let (fwd, back) = external()?;
            fwd && !back
        }
        ApproxKind::InternalEquiv => {
            let (fwd, back) = internal()?;
            fwd && back
        }
        ApproxKind::ExternalEquiv => {
            let (fwd, back) = external()?;
            fwd && back
        }
        ApproxKind::WeakEquiv => {
            relate(s, f, ApproxKind::InternalEquiv)? && relate(s, f, ApproxKind::ExternalEquiv)?
        }
    })
}

impl TauFamily {
    /// Inclusion-minimal nonempty members: `B ≠ ∅` with no member `B'`
    /// such that `∅ ≠ B' ⊊ B`.
    pub fn minimal(&self) -> TauFamily {
        let kept = self.iter().filter(|b| {
            !b.is_empty()
                && !self
                    .iter()
                    .any(|c| !c.is_empty() && c.len() < b.len() && c.is_subset(b))
        });
        TauFamily::new(self.universe().clone(), kept.cloned()).expect("members come from self")
    }

    /// Inclusion-maximal proper members: `B ≠ X` with no member `B'` such
    /// that `B ⊊ B' ≠ X`.
    pub fn maximal(&self) -> TauFamily {
        let m = self.universe().len();
        let kept = self.iter().filter(|b| {
            b.len() != m
                && !self
                    .iter()
                    .any(|c| c.len() != m && c.len() > b.len() && c.is_superset(b))
        });
        TauFamily::new(self.universe().clone(), kept.cloned()).expect("members come from self")
    }
}

/// `MIN(τ(s))`.
pub fn min_family(s: &SoftSet) -> TauFamily {
    s.tau().minimal()
}

/// `MAX(τ(s))`.
pub fn max_family(s: &SoftSet) -> TauFamily {
    s.tau().maximal()
}

/// A named binary relation on soft sets.
pub trait Relation {
    fn name(&self) -> String;
    fn holds(&self, s: &SoftSet, f: &SoftSet) -> Result<bool>;
}

/// The built-in relations, addressable by name.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RelationKind {
    Equal,
    Equivalent,
    Approx(ApproxKind),
}

impl RelationKind {
    pub fn all() -> impl Iterator<Item = RelationKind> {
        [RelationKind::Equal, RelationKind::Equivalent]
            .into_iter()
            .chain(ApproxKind::ALL.into_iter().map(RelationKind::Approx))
    }

    pub fn as_str(self) -> &'static str {
        match self {
            RelationKind::Equal => "equal",
            RelationKind::Equivalent => "equivalent",
            RelationKind::Approx(k) => k.name(),
        }
    }
}

impl fmt::Display for RelationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for RelationKind {
    type Err = SoftSetError;

    fn from_str(s: &str) -> Result<Self> {
        RelationKind::all()
            .find(|k| k.as_str() == s)
            .ok_or_else(|| SoftSetError::InvalidArgument(format!("unknown relation `{s}`")))
    }
}

impl Relation for RelationKind {
    fn name(&self) -> String {
        self.as_str().to_string()
    }

    fn holds(&self, s: &SoftSet, f: &SoftSet) -> Result<bool> {
        match *self {
            RelationKind::Equal => equal(s, f),
            RelationKind::Equivalent => equivalent(s, f),
            RelationKind::Approx(kind) => relate(s, f, kind),
        }
    }
}

impl Relation for ApproxKind {
    fn name(&self) -> String {
        ApproxKind::name(*self).to_string()
    }

    fn holds(&self, s: &SoftSet, f: &SoftSet) -> Result<bool> {
        relate(s, f, *self)
    }
}

/// Adapts a closure into a [`Relation`].
pub struct FnRelation<F> {
    name: String,
    func: F,
}

impl<F> FnRelation<F>
where
    F: Fn(&SoftSet, &SoftSet) -> Result<bool>,
{
    pub fn new(name: impl Into<String>, func: F) -> Self {
        FnRelation {
            name: name.into(),
            func,
        }
    }
}

impl<F> Relation for FnRelation<F>
where
    F: Fn(&SoftSet, &SoftSet) -> Result<bool>,
{
    fn name(&self) -> String {
        self.name.clone()
    }

    fn holds(&self, s: &SoftSet, f: &SoftSet) -> Result<bool> {
        (self.func)(s, f)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    /// No rewrite changed the outcome.
    Invariant,
    ViolationFound,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub original: (SoftSet, SoftSet),
    pub rewritten: (SoftSet, SoftSet),
    pub original_result: bool,
    pub rewritten_result: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorrectnessReport {
    pub relation_name: String,
    pub trials: usize,
    pub violations: Vec<Violation>,
    pub verdict: Verdict,
}

/// The rewrites used by [`check_relation_correctness`].
pub const CORRECTNESS_REWRITES: [Rewrite; 4] = Rewrite::ALL;

const MAX_REWRITE_STEPS: usize = 4;

/// Evaluates `relation` on `rewrite_count` pairs `(s', f')` with `s' ≅ s`
/// and `f' ≅ f`, and reports every pair whose outcome differs from
/// `relation(s, f)`.
///
/// An `Invariant` verdict only means no violation was found among the
/// sampled rewrites. Errors come from a zero `rewrite_count` or from the
/// relation rejecting the original pair.
pub fn check_relation_correctness<R: Relation + ?Sized>(
    relation: &R,
    s: &SoftSet,
    f: &SoftSet,
    rewrite_count: usize,
    seed: u64,
) -> Result<CorrectnessReport> {
    if rewrite_count == 0 {
        return Err(SoftSetError::InvalidArgument(
            "rewrite count must be at least 1".into(),
        ));
    }
    let baseline = relation.holds(s, f)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut violations = Vec::new();
    for _ in 0..rewrite_count {
        let s2 = random_equivalent(s, &CORRECTNESS_REWRITES, MAX_REWRITE_STEPS, &mut rng);
        let f2 = random_equivalent(f, &CORRECTNESS_REWRITES, MAX_REWRITE_STEPS, &mut rng);
        let outcome = relation.holds(&s2, &f2)?;
        if outcome != baseline {
            violations.push(Violation {
                original: (s.clone(), f.clone()),
                rewritten: (s2, f2),
                original_result: baseline,
                rewritten_result: outcome,
            });
        }
    }
    let verdict = if violations.is_empty() {
        Verdict::Invariant
    } else {
        Verdict::ViolationFound
    };
    Ok(CorrectnessReport {
        relation_name: relation.name(),
        trials: rewrite_count,
        violations,
        verdict,
    })
}
