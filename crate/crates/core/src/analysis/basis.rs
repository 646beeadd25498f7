use crate::softset::SoftSet;

/// True when the matrix is square and its columns are distinct standard
/// basis vectors, i.e. a permutation matrix. These are the only 0/1
/// matrices whose columns form a basis with unit columns.
pub fn is_permutation_basis(s: &SoftSet) -> bool {
    let m = s.universe().len();
    if s.len() != m {
        return false;
    }
    let mut hit = vec![false; m];
    s.values().iter().all(|v| {
        v.len() == 1 && {
            let i = *v.first().expect("len is 1");
            !std::mem::replace(&mut hit[i], true)
        }
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AntichainProfile {
    /// No two attributes share a value.
    pub injective: bool,
    /// Every member of τ is inclusion-minimal (so ∅ is absent).
    pub all_minimal: bool,
    /// Every member of τ is inclusion-maximal (so the universe is absent).
    pub all_maximal: bool,
}

pub fn antichain_profile(s: &SoftSet) -> AntichainProfile {
    let tau = s.tau();
    AntichainProfile {
        injective: s.is_injective(),
        all_minimal: tau.is_subfamily_of(&tau.minimal()),
        all_maximal: tau.is_subfamily_of(&tau.maximal()),
    }
}
