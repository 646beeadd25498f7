//! Searches for equivalent pairs of soft sets whose similarity differs.
//!
//! Similarity is computed from the matrices, so it sees attribute
//! multiplicity and column order even though equivalence does not. Each
//! probe rewrites both inputs into equivalent soft sets and compares the
//! similarity before and after.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::analysis::{similarity, Rational};
use crate::error::{Result, SoftSetError};
use crate::rewrite::{random_equivalent, Rewrite};
use crate::softset::SoftSet;

/// The rewrites applied by [`probe_conjecture`].
pub const PROBE_REWRITES: [Rewrite; 3] = [Rewrite::Duplicate, Rewrite::Rename, Rewrite::Reorder];

const MAX_REWRITE_STEPS: usize = 3;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjectureProbe {
    pub base: (SoftSet, SoftSet),
    /// Equivalent to `base` componentwise.
    pub rewritten: (SoftSet, SoftSet),
    pub sim_base: Rational,
    pub sim_rewritten: Rational,
    pub differs: bool,
}

impl ConjectureProbe {
    pub fn new(base: (SoftSet, SoftSet), rewritten: (SoftSet, SoftSet)) -> Result<Self> {
        let sim_base = similarity(&base.0, &base.1)?;
        let sim_rewritten = similarity(&rewritten.0, &rewritten.1)?;
        Ok(ConjectureProbe {
            base,
            rewritten,
            sim_base,
            sim_rewritten,
            differs: sim_base != sim_rewritten,
        })
    }
}

/// Runs `trials` seeded probes on `(s, f)`.
pub fn probe_conjecture(
    s: &SoftSet,
    f: &SoftSet,
    trials: usize,
    seed: u64,
) -> Result<Vec<ConjectureProbe>> {
    if trials == 0 {
        return Err(SoftSetError::InvalidArgument(
            "trials must be at least 1".into(),
        ));
    }
    similarity(s, f)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..trials)
        .map(|_| {
            let s2 = random_equivalent(s, &PROBE_REWRITES, MAX_REWRITE_STEPS, &mut rng);
            let f2 = random_equivalent(f, &PROBE_REWRITES, MAX_REWRITE_STEPS, &mut rng);
            ConjectureProbe::new((s.clone(), f.clone()), (s2, f2))
        })
        .collect()
}
