//! Complement, union, intersection and product computed on the binary
//! matrix form.
//!
//! Binary operations take their attribute set to be `A × B` in row-major
//! order: the left operand's attribute is the outer index, so the column of
//! `(a_i, b_k)` is `i * |B| + k`. The product additionally replaces the
//! universe by `X × X`, again row-major with the first coordinate outer.

use std::fmt;

use crate::error::Result;
use crate::matrix::BitMatrix;
use crate::softset::{SoftSet, Universe};

/// An element of a direct product, rendered as `(left,right)`.
///
/// Components that already render as a pair are written verbatim, so nested
/// products read as `((a,b),c)`. Any other component containing `,`, `(`,
/// `)` or `\` has those characters backslash-escaped, which keeps the
/// rendering injective (see [`PairName::parse`]).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PairName {
    pub left: String,
    pub right: String,
}

impl PairName {
    pub fn new(left: impl Into<String>, right: impl Into<String>) -> Self {
        PairName {
            left: left.into(),
            right: right.into(),
        }
    }

    /// Inverse of the `Display` rendering.
    pub fn parse(text: &str) -> Option<PairName> {
        let inner = text.strip_prefix('(')?.strip_suffix(')')?;
        let mut depth = 0usize;
        let mut escaped = false;
        let mut split = None;
        for (pos, ch) in inner.char_indices() {
            if escaped {
                escaped = false;
                continue;
            }
            match ch {
                '\\' => escaped = true,
                '(' => depth += 1,
                ')' => depth = depth.checked_sub(1)?,
                ',' if depth == 0 && split.replace(pos).is_some() => return None,
                _ => {}
            }
        }
        if escaped || depth != 0 {
            return None;
        }
        let split = split?;
        let left = decode_component(&inner[..split])?;
        let right = decode_component(&inner[split + 1..])?;
        let pair = PairName { left, right };
        // reject spellings that are not what `Display` would produce
        (pair.to_string() == text).then_some(pair)
    }
}

fn is_special(ch: char) -> bool {
    matches!(ch, ',' | '(' | ')' | '\\')
}

fn encode_component(name: &str, out: &mut String) {
    if !name.contains(is_special) || PairName::parse(name).is_some() {
        out.push_str(name);
    } else {
        for ch in name.chars() {
            if is_special(ch) {
                out.push('\\');
            }
            out.push(ch);
        }
    }
}

fn decode_component(text: &str) -> Option<String> {
    if text.starts_with('(') {
        return PairName::parse(text).map(|_| text.to_string());
    }
    let mut out = String::with_capacity(text.len());
    let mut chars = text.chars();
    while let Some(ch) = chars.next() {
        match ch {
            '\\' => out.push(chars.next()?),
            c if is_special(c) => return None,
            c => out.push(c),
        }
    }
    Some(out)
}

impl fmt::Display for PairName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::with_capacity(self.left.len() + self.right.len() + 3);
        s.push('(');
        encode_component(&self.left, &mut s);
        s.push(',');
        encode_component(&self.right, &mut s);
        s.push(')');
        f.write_str(&s)
    }
}

/// Names of `left × right` in row-major order.
pub fn product_names(left: &[String], right: &[String]) -> Vec<String> {
    left.iter()
        .flat_map(|l| {
            right
                .iter()
                .map(move |r| PairName::new(l.as_str(), r.as_str()).to_string())
        })
        .collect()
}

/// `C(S, A) = (W, A)` with `W(a) = X \ S(a)`: the matrix is negated entrywise.
pub fn complement(s: &SoftSet) -> SoftSet {
    let m = s.to_matrix().not();
    SoftSet::from_matrix(s.universe().clone(), s.attributes().to_vec(), &m)
        .expect("negation preserves dimensions")
}

fn combine(s: &SoftSet, f: &SoftSet, op: impl Fn(u64, u64) -> u64) -> Result<SoftSet> {
    s.ensure_same_universe(f)?;
    let m = s.to_matrix().column_pairs(&f.to_matrix(), op)?;
    SoftSet::from_matrix(
        s.universe().clone(),
        product_names(s.attributes(), f.attributes()),
        &m,
    )
}

/// `(S, A) ∪ (F, B) = (H, A × B)` with `H(a, b) = S(a) ∪ F(b)`.
pub fn union(s: &SoftSet, f: &SoftSet) -> Result<SoftSet> {
    combine(s, f, |x, y| x | y)
}

/// `(S, A) ∩ (F, B) = (W, A × B)` with `W(a, b) = S(a) ∩ F(b)`.
pub fn intersection(s: &SoftSet, f: &SoftSet) -> Result<SoftSet> {
    combine(s, f, |x, y| x & y)
}

/// `(S, A) × (F, B)` over `X × X`, with value `S(a) × F(b)` at `(a, b)`.
///
/// Column `(a_i, b_j)` of the result is the Kronecker product of column `i`
/// of `s` and column `j` of `f`: row block `k` holds `f`'s column `j` when
/// `x_k ∈ S(a_i)` and zeros otherwise.
pub fn product(s: &SoftSet, f: &SoftSet) -> Result<SoftSet> {
    s.ensure_same_universe(f)?;
    let m = s.universe().len();
    let left = s.to_matrix();
    let right = f.to_matrix();
    let (n, p) = (left.cols(), right.cols());

    let mut out = BitMatrix::zeros(m * m, n * p);
    for i in 0..n {
        for j in 0..p {
            let col = i * p + j;
            for k in (0..m).filter(|&k| left.get(k, i)) {
                for l in (0..m).filter(|&l| right.get(l, j)) {
                    out.set(k * m + l, col, true);
                }
            }
        }
    }

    let universe = Universe::new(product_names(
        s.universe().elements(),
        s.universe().elements(),
    ))?;
    SoftSet::from_matrix(
        universe,
        product_names(s.attributes(), f.attributes()),
        &out,
    )
}
