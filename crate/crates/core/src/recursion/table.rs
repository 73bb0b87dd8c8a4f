use std::collections::btree_map::{self, BTreeMap};

use serde::{Deserialize, Serialize};

use crate::combinat::Count;
use crate::error::{Error, Result};
use crate::lattice::{DivisorClass, Eligibility};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    Computed,
    Seeded,
    External,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TableKey {
    pub class: DivisorClass,
    /// Contact order with `E`; `1` is the plain Severi degree.
    pub tangency: u32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableEntry {
    pub value: Count,
    pub provenance: Provenance,
}

/// Memoized degrees `N_i(D)`, ordered by `(surface, coords, i)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct NTable {
    entries: BTreeMap<TableKey, TableEntry>,
}

impl NTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, class: &DivisorClass, tangency: u32) -> Option<&TableEntry> {
        self.entries.get(&TableKey {
            class: *class,
            tangency,
        })
    }

    /// Inserts a nonnegative value. Re-inserting an equal value is a no-op
    /// (the first provenance is kept); a different value is a conflict.
    pub fn insert(
        &mut self,
        class: DivisorClass,
        tangency: u32,
        value: Count,
        provenance: Provenance,
    ) -> Result<()> {
        if tangency == 0 {
            return Err(Error::InvalidArgument(
                "tangency index must be at least 1".into(),
            ));
        }
        if value < Count::from(0) {
            return Err(Error::InvalidArgument(format!(
                "degree of {class} must be nonnegative, got {value}"
            )));
        }
        match self.entries.entry(TableKey { class, tangency }) {
            btree_map::Entry::Vacant(v) => {
                v.insert(TableEntry { value, provenance });
                Ok(())
            }
            btree_map::Entry::Occupied(o) if o.get().value == value => Ok(()),
            btree_map::Entry::Occupied(o) => Err(Error::Conflict {
                key: format!("{class} i={tangency}"),
                first: o.get().value.to_string(),
                second: value.to_string(),
            }),
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&TableKey, &TableEntry)> {
        self.entries.iter()
    }

    /// `N_i(d)` without computing anything: stored entries first, then the
    /// eligibility rule for `i = 1` seeds and zeros. Everything else is a
    /// [`Error::MissingDegree`].
    pub fn degree(&self, class: &DivisorClass, tangency: u32) -> Result<Count> {
        if let Some(e) = self.get(class, tangency) {
            return Ok(e.value.clone());
        }
        let missing = Error::MissingDegree {
            class: *class,
            tangency,
        };
        if tangency != 1 {
            return Err(missing);
        }
        match class.eligibility() {
            Eligibility::Seed1 => Ok(Count::from(1)),
            Eligibility::Zero => Ok(Count::from(0)),
            Eligibility::Excluded => Err(Error::Excluded(*class)),
            Eligibility::Recurse => Err(missing),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn insert_rules() {
        let mut t = NTable::new();
        let d = DivisorClass::hirzebruch(2, 2, 0);
        t.insert(d, 1, Count::from(10), Provenance::Computed)
            .unwrap();
        t.insert(d, 1, Count::from(10), Provenance::External)
            .unwrap();
        assert_eq!(t.len(), 1);
        assert_eq!(t.get(&d, 1).unwrap().provenance, Provenance::Computed);
        assert!(matches!(
            t.insert(d, 1, Count::from(11), Provenance::Computed),
            Err(Error::Conflict { .. })
        ));
        assert!(t
            .insert(d, 2, Count::from(-1), Provenance::External)
            .is_err());
        assert!(t
            .insert(d, 0, Count::from(1), Provenance::External)
            .is_err());
    }

    #[test]
    fn degree_lookup() {
        let t = NTable::new();
        let c = DivisorClass::hirzebruch(3, 1, 0);
        assert_eq!(t.degree(&c, 1).unwrap(), Count::from(1));
        assert!(matches!(
            t.degree(&c, 2),
            Err(Error::MissingDegree { tangency: 2, .. })
        ));
        assert_eq!(
            t.degree(&DivisorClass::hirzebruch(3, 0, 2), 1).unwrap(),
            Count::from(0)
        );
        assert!(t.degree(&DivisorClass::hirzebruch(3, 2, 0), 1).is_err());
    }
}
