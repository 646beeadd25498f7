//! Soft sets over finite universes.
//!
//! A soft set `(F, A)` maps each attribute in `A` to a subset of a universe
//! `X`. This crate stores soft sets with explicit universe and attribute
//! orderings, converts them to and from their binary matrix form, and
//! provides:
//!
//! - [`algebra`]: complement, union, intersection and product, computed on
//!   the matrix form;
//! - [`relations`]: equality, τ-equivalence, internal and external
//!   approximation, MIN/MAX families and a randomized check that a relation
//!   depends only on τ families;
//! - [`analysis`]: exact matrix similarity, attribute gravity and related
//!   predicates;
//! - [`oracle`]: name-based reference implementations and a small-instance
//!   enumerator for cross-checking.
//!
//! ```
//! use softset_core::{algebra, analysis, SoftSet};
//!
//! let f = SoftSet::from_named(&["a", "b", "c"], &[("x", &["b", "c"]), ("y", &["c"]), ("z", &["a"])])?;
//! assert_eq!(f.to_matrix().to_rows(), vec![vec![0, 0, 1], vec![1, 0, 0], vec![1, 1, 0]]);
//!
//! let c = algebra::complement(&f);
//! assert_eq!(analysis::similarity(&f, &c)?.to_string(), "0/1");
//! # Ok::<(), softset_core::SoftSetError>(())
//! ```

pub mod algebra;
pub mod analysis;
pub mod document;
mod error;
pub mod matrix;
pub mod oracle;
pub mod relations;
pub mod rewrite;
mod softset;

pub use analysis::Rational;
pub use document::{Axes, SoftSetDocument};
pub use error::{Result, SoftSetError};
pub use matrix::BitMatrix;
pub use relations::{ApproxKind, CorrectnessReport, RelationKind, Verdict};
pub use softset::{SoftSet, Subset, TauFamily, Universe};
