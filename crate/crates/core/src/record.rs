//! Serializable view of a semigroup.

use serde::{Deserialize, Serialize};

use crate::semigroup::NumericalSemigroup;

/// JSON encoding of a semigroup. `small_elements` runs up to `F + 1`, after
/// which every integer belongs to the semigroup.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemigroupRecord {
    pub multiplicity: i64,
    pub frobenius: i64,
    pub genus: i64,
    pub apery: Vec<i64>,
    pub min_generators: Vec<i64>,
    pub small_elements: Vec<i64>,
}

impl From<&NumericalSemigroup> for SemigroupRecord {
    fn from(s: &NumericalSemigroup) -> Self {
        SemigroupRecord {
            multiplicity: s.multiplicity(),
            frobenius: s.frobenius(),
            genus: s.genus(),
            apery: s.apery_table().to_vec(),
            min_generators: s.minimal_generators(),
            small_elements: s.small_elements(),
        }
    }
}

impl TryFrom<&SemigroupRecord> for NumericalSemigroup {
    type Error = crate::Error;

    /// Rebuilds from the Apéry table and rejects records whose cached fields
    /// disagree with it.
    fn try_from(r: &SemigroupRecord) -> crate::Result<Self> {
        let s = NumericalSemigroup::from_apery_table(r.multiplicity, r.apery.clone())?;
        if SemigroupRecord::from(&s) != *r {
            return Err(crate::Error::Domain(
                "record fields disagree with its Apéry table".into(),
            ));
        }
        Ok(s)
    }
}
