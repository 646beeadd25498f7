//! Quantitative comparisons of soft sets: matrix similarity, attribute
//! gravity, and structural predicates on τ families.

mod basis;
mod gravity;
mod probe;
mod rational;
mod similarity;

pub use basis::{antichain_profile, is_permutation_basis, AntichainProfile};
pub use gravity::{
    domination_witnesses, gravity, gravity_domination, DominationWitness, GravityVector,
};
pub use probe::{probe_conjecture, ConjectureProbe, PROBE_REWRITES};
pub use rational::Rational;
pub use similarity::{
    best_alignment, matrix_similarity, max_similarity_over_orderings, similarity, Alignment,
    ORDERING_SEARCH_LIMIT,
};
