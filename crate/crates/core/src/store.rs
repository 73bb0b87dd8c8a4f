//! Line-oriented persistence for [`NTable`]s.
//!
//! One JSON object per line, sorted by `(surface, coords, i)`:
//!
//! ```text
//! {"surface":"F2","coords":[2,0],"i":1,"value":"10","provenance":"computed"}
//! ```
//!
//! Values are decimal strings so that no reader loses precision.

use std::io::{BufRead, Write};

use serde::{Deserialize, Serialize};

use crate::combinat::Count;
use crate::error::{Error, Result};
use crate::lattice::{DivisorClass, Surface};
use crate::recursion::{NTable, Provenance};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TableRecord {
    pub surface: String,
    pub coords: Vec<i64>,
    pub i: u32,
    pub value: String,
    pub provenance: Provenance,
}

impl TableRecord {
    fn key(&self) -> String {
        format!("{}{:?} i={}", self.surface, self.coords, self.i)
    }
}

pub fn save_table<W: Write>(table: &NTable, mut sink: W) -> Result<()> {
    for (key, entry) in table.iter() {
        let record = TableRecord {
            surface: key.class.surface().tag(),
            coords: key.class.coords().to_vec(),
            i: key.tangency,
            value: entry.value.to_string(),
            provenance: entry.provenance,
        };
        let line = serde_json::to_string(&record).expect("record serializes");
        writeln!(sink, "{line}")?;
    }
    sink.flush()?;
    Ok(())
}

/// Blank lines are skipped; identical duplicates collapse; conflicting
/// duplicates are an error naming the key.
pub fn load_table<R: BufRead>(source: R) -> Result<NTable> {
    let mut table = NTable::new();
    for (idx, line) in source.lines().enumerate() {
        let line_no = idx + 1;
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let parse_err = |message: String| Error::Parse {
            line: line_no,
            message,
        };
        let record: TableRecord =
            serde_json::from_str(&line).map_err(|e| parse_err(e.to_string()))?;
        let surface: Surface = record
            .surface
            .parse()
            .map_err(|e: Error| parse_err(e.to_string()))?;
        let class =
            DivisorClass::new(surface, &record.coords).map_err(|e| parse_err(e.to_string()))?;
        if record.i == 0 {
            return Err(parse_err("tangency index must be at least 1".into()));
        }
        let value = parse_count(&record.value).ok_or_else(|| {
            parse_err(format!(
                "value `{}` is not a nonnegative decimal integer",
                record.value
            ))
        })?;
        match table.insert(class, record.i, value, record.provenance) {
            Err(Error::Conflict { first, second, .. }) => {
                return Err(Error::Conflict {
                    key: record.key(),
                    first,
                    second,
                })
            }
            other => other?,
        }
    }
    Ok(table)
}

fn parse_count(s: &str) -> Option<Count> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}
