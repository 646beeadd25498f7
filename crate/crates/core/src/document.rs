//! JSON document form of a soft set:
//!
//! ```json
//! {"universe": ["a","b","c"], "attributes": ["x","y","z"],
//!  "values": {"x": ["b","c"], "y": ["c"], "z": ["a"]}}
//! ```
//!
//! `values` is written in attribute order and each element list in universe
//! order, so serializing a parsed document reproduces it exactly when it was
//! written in that canonical form.

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::softset::{SoftSet, Universe};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SoftSetDocument {
    pub universe: Vec<String>,
    pub attributes: Vec<String>,
    pub values: IndexMap<String, Vec<String>>,
}

/// Row and column labels without values; any soft set document can be read
/// as one.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Axes {
    pub universe: Vec<String>,
    pub attributes: Vec<String>,
}

impl SoftSetDocument {
    pub fn to_soft_set(&self) -> Result<SoftSet> {
        let universe = Universe::new(self.universe.iter().cloned())?;
        SoftSet::new(
            universe,
            self.attributes.iter().cloned(),
            self.values.iter().map(|(k, v)| (k.clone(), v.iter())),
        )
    }
}

impl From<&SoftSet> for SoftSetDocument {
    fn from(s: &SoftSet) -> Self {
        SoftSetDocument {
            universe: s.universe().elements().to_vec(),
            attributes: s.attributes().to_vec(),
            values: s
                .iter()
                .map(|(a, v)| {
                    (
                        a.to_string(),
                        s.universe().names_of(v).map(str::to_string).collect(),
                    )
                })
                .collect(),
        }
    }
}

impl SoftSet {
    pub fn to_document(&self) -> SoftSetDocument {
        SoftSetDocument::from(self)
    }
}
