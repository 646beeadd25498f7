//! Matrix similarity between two soft sets over the same universe.
//!
//! With `m = |X|` and attribute counts `n ≥ p`, the narrower matrix is
//! padded on the right with `n - p` zero columns and the similarity is the
//! fraction of the `m·n` cells on which the two matrices agree. When
//! `n = p` no padding happens and this is the plain cell agreement ratio.

use crate::analysis::Rational;
use crate::error::{Result, SoftSetError};
use crate::matrix::BitMatrix;
use crate::softset::SoftSet;

/// Largest narrower attribute count accepted by the ordering search.
pub const ORDERING_SEARCH_LIMIT: usize = 8;

pub fn similarity(s: &SoftSet, f: &SoftSet) -> Result<Rational> {
    s.ensure_same_universe(f)?;
    matrix_similarity(&s.to_matrix(), &f.to_matrix())
}

/// Similarity of two binary matrices with the same number of rows.
pub fn matrix_similarity(y: &BitMatrix, z: &BitMatrix) -> Result<Rational> {
    let (wide, narrow) = order_by_width(y, z)?;
    let agreements = (0..narrow.cols())
        .map(|j| wide.column_agreement(j, narrow, j))
        .sum::<usize>()
        + (narrow.cols()..wide.cols())
            .map(|j| wide.rows() - wide.column_weight(j))
            .sum::<usize>();
    Ok(ratio(agreements, wide))
}

fn order_by_width<'a>(
    y: &'a BitMatrix,
    z: &'a BitMatrix,
) -> Result<(&'a BitMatrix, &'a BitMatrix)> {
    if y.rows() != z.rows() {
        return Err(SoftSetError::UniverseMismatch);
    }
    let (wide, narrow) = if y.cols() >= z.cols() { (y, z) } else { (z, y) };
    if wide.rows() == 0 || wide.cols() == 0 {
        return Err(SoftSetError::EmptyDenominator);
    }
    Ok((wide, narrow))
}

fn ratio(agreements: usize, wide: &BitMatrix) -> Rational {
    Rational::new(agreements as u64, (wide.rows() * wide.cols()) as u64)
}

/// Attribute orderings of both soft sets that realise the best similarity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alignment {
    pub similarity: Rational,
    /// Permutation of `s`'s attributes, as for [`SoftSet::reordered`].
    pub left_order: Vec<usize>,
    pub right_order: Vec<usize>,
}

/// The largest similarity over all attribute orderings of `s` and `f`.
pub fn max_similarity_over_orderings(s: &SoftSet, f: &SoftSet) -> Result<Rational> {
    best_alignment(s, f).map(|a| a.similarity)
}

/// Finds orderings of `s` and `f` maximizing similarity.
///
/// Any pair of orderings amounts to matching each column of the narrower
/// matrix with a distinct column of the wider one; wider columns left over
/// are scored against zero padding. The best matching is found exactly by
/// dynamic programming over subsets of the narrower matrix's columns, so
/// the narrower side is limited to [`ORDERING_SEARCH_LIMIT`] attributes.
pub fn best_alignment(s: &SoftSet, f: &SoftSet) -> Result<Alignment> {
    s.ensure_same_universe(f)?;
    let (sm, fm) = (s.to_matrix(), f.to_matrix());
    let s_is_wide = sm.cols() >= fm.cols();
    let (wide, narrow) = order_by_width(&sm, &fm)?;
    let p = narrow.cols();
    if p > ORDERING_SEARCH_LIMIT {
        return Err(SoftSetError::TooManyAttributes {
            count: p,
            limit: ORDERING_SEARCH_LIMIT,
        });
    }

    let m = wide.rows() as i64;
    let zeros: Vec<i64> = (0..wide.cols())
        .map(|j| m - wide.column_weight(j) as i64)
        .collect();
    let base: i64 = zeros.iter().sum();

    // best[mask] = best gain after the wide columns processed so far, with
    // `mask` the set of narrow columns already matched
    let full = (1usize << p) - 1;
    let mut best = vec![i64::MIN; full + 1];
    best[0] = 0;
    // choice[j][mask] = narrow column matched to wide column j on the best
    // path reaching `mask` after column j, or None if j stayed unmatched
    let mut choice: Vec<Vec<Option<usize>>> = Vec::with_capacity(wide.cols());
    for (j, &zero_j) in zeros.iter().enumerate() {
        let mut next = best.clone();
        let mut pick = vec![None; full + 1];
        for (mask, &reached) in best.iter().enumerate() {
            if reached == i64::MIN {
                continue;
            }
            for i in (0..p).filter(|i| mask & (1 << i) == 0) {
                let gain = reached + narrow.column_agreement(i, wide, j) as i64 - zero_j;
                let to = mask | (1 << i);
                if gain > next[to] {
                    next[to] = gain;
                    pick[to] = Some(i);
                }
            }
        }
        best = next;
        choice.push(pick);
    }

    let mut matched_to = vec![usize::MAX; p];
    let mut mask = full;
    for j in (0..wide.cols()).rev() {
        if let Some(i) = choice[j][mask] {
            matched_to[i] = j;
            mask &= !(1 << i);
        }
    }
    debug_assert_eq!(mask, 0);

    let narrow_order: Vec<usize> = (0..p).collect();
    let mut wide_order = matched_to.clone();
    wide_order.extend((0..wide.cols()).filter(|j| !matched_to.contains(j)));

    let agreements = (base + best[full]) as usize;
    let similarity = ratio(agreements, wide);
    let (left_order, right_order) = if s_is_wide {
        (wide_order, narrow_order)
    } else {
        (narrow_order, wide_order)
    };
    Ok(Alignment {
        similarity,
        left_order,
        right_order,
    })
}
