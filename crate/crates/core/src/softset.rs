//! The soft set data model.
//!
//! A soft set over a finite universe `X` is a map from a list of attribute
//! names to subsets of `X`. Both the universe and the attribute list are
//! ordered: the ordering is what fixes the rows and columns of the binary
//! matrix form, so it is stored explicitly and never inferred.
//!
//! Subsets are stored as sets of universe positions ([`Subset`]); the
//! name-based accessors translate back to element names.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;
use std::sync::Arc;

use crate::error::{Result, SoftSetError};

/// A subset of a universe, as the set of element positions.
pub type Subset = BTreeSet<usize>;

#[derive(Debug)]
struct UniverseInner {
    elements: Vec<String>,
    index: HashMap<String, usize>,
}

/// An ordered, duplicate-free list of element names.
///
/// Cloning is cheap; two universes are equal when their element sequences
/// are equal, order included.
#[derive(Debug, Clone)]
pub struct Universe(Arc<UniverseInner>);

impl Universe {
    pub fn new<I, S>(elements: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let elements: Vec<String> = elements.into_iter().map(Into::into).collect();
        let mut index = HashMap::with_capacity(elements.len());
        for (i, e) in elements.iter().enumerate() {
            if index.insert(e.clone(), i).is_some() {
                return Err(SoftSetError::DuplicateElement(e.clone()));
            }
        }
        Ok(Universe(Arc::new(UniverseInner { elements, index })))
    }

    pub fn len(&self) -> usize {
        self.0.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.elements.is_empty()
    }

    pub fn elements(&self) -> &[String] {
        &self.0.elements
    }

    pub fn name(&self, position: usize) -> &str {
        &self.0.elements[position]
    }

    pub fn position(&self, name: &str) -> Option<usize> {
        self.0.index.get(name).copied()
    }

    /// The full universe as a [`Subset`].
    pub fn full(&self) -> Subset {
        (0..self.len()).collect()
    }

    pub fn names_of<'a>(&'a self, subset: &'a Subset) -> impl Iterator<Item = &'a str> + 'a {
        subset.iter().map(move |&i| self.name(i))
    }
}

impl PartialEq for Universe {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.elements == other.0.elements
    }
}

impl Eq for Universe {}

/// A soft set `(F, A)` over a universe `X`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SoftSet {
    universe: Universe,
    attributes: Vec<String>,
    values: Vec<Subset>,
}

impl SoftSet {
    /// Builds a validated soft set.
    ///
    /// `values` must name every attribute exactly once, and every element in
    /// a value must belong to the universe. Element lists are read as sets.
    pub fn new<A, S, I, K, V, E>(universe: Universe, attributes: A, values: I) -> Result<Self>
    where
        A: IntoIterator<Item = S>,
        S: Into<String>,
        I: IntoIterator<Item = (K, V)>,
        K: Into<String>,
        V: IntoIterator<Item = E>,
        E: AsRef<str>,
    {
        let attributes: Vec<String> = attributes.into_iter().map(Into::into).collect();
        let slots = attribute_slots(&attributes)?;

        let mut values_by_slot: Vec<Option<Subset>> = vec![None; attributes.len()];
        for (key, elements) in values {
            let key = key.into();
            let slot = *slots
                .get(key.as_str())
                .ok_or_else(|| SoftSetError::UnknownAttribute(key.clone()))?;
            if values_by_slot[slot].is_some() {
                return Err(SoftSetError::DuplicateAttribute(key));
            }
            let mut subset = Subset::new();
            for e in elements {
                let e = e.as_ref();
                let pos = universe
                    .position(e)
                    .ok_or_else(|| SoftSetError::UnknownElement {
                        attribute: key.clone(),
                        element: e.to_string(),
                    })?;
                subset.insert(pos);
            }
            values_by_slot[slot] = Some(subset);
        }

        let values = values_by_slot
            .into_iter()
            .zip(&attributes)
            .map(|(v, a)| v.ok_or_else(|| SoftSetError::MissingValue(a.clone())))
            .collect::<Result<Vec<_>>>()?;

        Ok(SoftSet {
            universe,
            attributes,
            values,
        })
    }

    /// Builds a soft set from values given as universe positions, in
    /// attribute order.
    pub fn from_subsets<S: Into<String>>(
        universe: Universe,
        attributes: impl IntoIterator<Item = S>,
        values: Vec<Subset>,
    ) -> Result<Self> {
        let attributes: Vec<String> = attributes.into_iter().map(Into::into).collect();
        attribute_slots(&attributes)?;
        if values.len() != attributes.len() {
            let missing = attributes
                .get(values.len())
                .cloned()
                .unwrap_or_else(|| format!("#{}", attributes.len()));
            return Err(if values.len() < attributes.len() {
                SoftSetError::MissingValue(missing)
            } else {
                SoftSetError::UnknownAttribute(missing)
            });
        }
        for (a, v) in attributes.iter().zip(&values) {
            if let Some(&bad) = v.iter().find(|&&p| p >= universe.len()) {
                return Err(SoftSetError::UnknownElement {
                    attribute: a.clone(),
                    element: format!("#{bad}"),
                });
            }
        }
        Ok(SoftSet {
            universe,
            attributes,
            values,
        })
    }

    /// Shorthand for literal soft sets: a list of element names and a list
    /// of `(attribute, elements)` pairs in attribute order.
    pub fn from_named(universe: &[&str], entries: &[(&str, &[&str])]) -> Result<Self> {
        let universe = Universe::new(universe.iter().copied())?;
        SoftSet::new(
            universe,
            entries.iter().map(|(a, _)| *a),
            entries.iter().map(|(a, v)| (*a, v.iter().copied())),
        )
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn attributes(&self) -> &[String] {
        &self.attributes
    }

    /// Values in attribute order.
    pub fn values(&self) -> &[Subset] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.attributes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.attributes.is_empty()
    }

    pub fn value(&self, attribute: &str) -> Option<&Subset> {
        self.attributes
            .iter()
            .position(|a| a == attribute)
            .map(|j| &self.values[j])
    }

    /// The value of `attribute` as element names, in universe order.
    pub fn value_names(&self, attribute: &str) -> Option<BTreeSet<&str>> {
        self.value(attribute)
            .map(|v| self.universe.names_of(v).collect())
    }

    /// `(attribute, value)` pairs in attribute order.
    pub fn iter(&self) -> impl Iterator<Item = (&str, &Subset)> {
        self.attributes
            .iter()
            .map(String::as_str)
            .zip(self.values.iter())
    }

    /// The family `τ(S, A) = {S(a) : a ∈ A}`, deduplicated.
    ///
    /// The empty set is a member whenever some attribute maps to it.
    pub fn tau(&self) -> TauFamily {
        TauFamily {
            universe: self.universe.clone(),
            subsets: self.values.iter().cloned().collect(),
        }
    }

    /// True when no two attributes share a value.
    pub fn is_injective(&self) -> bool {
        let mut seen = HashSet::with_capacity(self.values.len());
        self.values.iter().all(|v| seen.insert(v))
    }

    /// Reorders attributes so that the matrix columns are in nondecreasing
    /// lexicographic order, reading each column top to bottom with 0 < 1.
    /// Ties are broken by attribute name. The universe order is kept.
    pub fn canonicalize(&self) -> SoftSet {
        let m = self.universe.len();
        let column_key = |v: &Subset| -> Vec<bool> { (0..m).map(|i| v.contains(&i)).collect() };
        let mut order: Vec<usize> = (0..self.attributes.len()).collect();
        order.sort_by(|&i, &j| {
            column_key(&self.values[i])
                .cmp(&column_key(&self.values[j]))
                .then_with(|| self.attributes[i].cmp(&self.attributes[j]))
        });
        SoftSet {
            universe: self.universe.clone(),
            attributes: order.iter().map(|&i| self.attributes[i].clone()).collect(),
            values: order.iter().map(|&i| self.values[i].clone()).collect(),
        }
    }

    /// Returns a copy with the attributes permuted: position `k` of the
    /// result takes attribute `order[k]` of `self`.
    pub fn reordered(&self, order: &[usize]) -> Result<SoftSet> {
        let mut seen = vec![false; self.len()];
        if order.len() != self.len()
            || order
                .iter()
                .any(|&i| i >= self.len() || std::mem::replace(&mut seen[i], true))
        {
            return Err(SoftSetError::InvalidArgument(
                "attribute order is not a permutation".into(),
            ));
        }
        Ok(SoftSet {
            universe: self.universe.clone(),
            attributes: order.iter().map(|&i| self.attributes[i].clone()).collect(),
            values: order.iter().map(|&i| self.values[i].clone()).collect(),
        })
    }

    pub(crate) fn ensure_same_universe(&self, other: &SoftSet) -> Result<()> {
        if self.universe == other.universe {
            Ok(())
        } else {
            Err(SoftSetError::UniverseMismatch)
        }
    }
}

impl fmt::Display for SoftSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, (a, v)) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{a} -> ")?;
            write_subset(f, &self.universe, v)?;
        }
        write!(f, "}}")
    }
}

fn attribute_slots(attributes: &[String]) -> Result<HashMap<&str, usize>> {
    let mut slots = HashMap::with_capacity(attributes.len());
    for (i, a) in attributes.iter().enumerate() {
        if slots.insert(a.as_str(), i).is_some() {
            return Err(SoftSetError::DuplicateAttribute(a.clone()));
        }
    }
    Ok(slots)
}

fn write_subset(f: &mut fmt::Formatter<'_>, universe: &Universe, subset: &Subset) -> fmt::Result {
    write!(f, "{{")?;
    for (k, name) in universe.names_of(subset).enumerate() {
        if k > 0 {
            write!(f, ", ")?;
        }
        write!(f, "{name}")?;
    }
    write!(f, "}}")
}

/// A deduplicated family of subsets of one universe, such as `τ(S, A)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TauFamily {
    universe: Universe,
    subsets: BTreeSet<Subset>,
}

impl TauFamily {
    pub fn new(universe: Universe, subsets: impl IntoIterator<Item = Subset>) -> Result<Self> {
        let subsets: BTreeSet<Subset> = subsets.into_iter().collect();
        if subsets
            .iter()
            .any(|s| s.iter().any(|&p| p >= universe.len()))
        {
            return Err(SoftSetError::InvalidArgument(
                "family member is not a subset of the universe".into(),
            ));
        }
        Ok(TauFamily { universe, subsets })
    }

    /// Builds a family from element names.
    pub fn from_named(universe: &Universe, members: &[&[&str]]) -> Result<Self> {
        let subsets = members
            .iter()
            .map(|m| {
                m.iter()
                    .map(|e| {
                        universe
                            .position(e)
                            .ok_or_else(|| SoftSetError::UnknownElement {
                                attribute: String::from("<family>"),
                                element: e.to_string(),
                            })
                    })
                    .collect::<Result<Subset>>()
            })
            .collect::<Result<Vec<_>>>()?;
        TauFamily::new(universe.clone(), subsets)
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn subsets(&self) -> &BTreeSet<Subset> {
        &self.subsets
    }

    pub fn len(&self) -> usize {
        self.subsets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subsets.is_empty()
    }

    pub fn contains(&self, subset: &Subset) -> bool {
        self.subsets.contains(subset)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Subset> {
        self.subsets.iter()
    }

    pub fn is_subfamily_of(&self, other: &TauFamily) -> bool {
        self.universe == other.universe && self.subsets.is_subset(&other.subsets)
    }

    /// Members as element-name lists, sorted by cardinality and then
    /// lexicographically by universe position.
    pub fn to_sorted_names(&self) -> Vec<Vec<String>> {
        let mut members: Vec<&Subset> = self.subsets.iter().collect();
        members.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        members
            .into_iter()
            .map(|s| self.universe.names_of(s).map(str::to_string).collect())
            .collect()
    }
}

impl fmt::Display for TauFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, member) in self.to_sorted_names().iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{{{}}}", member.join(", "))?;
        }
        write!(f, "}}")
    }
}
