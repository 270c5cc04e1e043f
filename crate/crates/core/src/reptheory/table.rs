//! Character tables, exported as CSV or JSON.
//!
//! CSV: a `label` column, then one column per class headed
//! `k<index>_s<size>_o<order>`; cells use the text form of [`Cyc`].

use serde::{Deserialize, Serialize};

use super::{Irrep, RepError};
use crate::cyclo::Cyc;
use crate::matgroup::MatGroup;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassInfo {
    pub size: u64,
    pub order: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharRow {
    pub label: String,
    pub values: Vec<Cyc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharTable {
    pub classes: Vec<ClassInfo>,
    pub rows: Vec<CharRow>,
}

fn parse_error(e: impl std::fmt::Display) -> RepError {
    RepError::Parse(e.to_string())
}

impl CharTable {
    pub fn new<'a>(g: &MatGroup, irreps: impl IntoIterator<Item = &'a Irrep>) -> CharTable {
        let classes = g.classes();
        CharTable {
            classes: (0..classes.len())
                .map(|c| ClassInfo {
                    size: classes.size(c) as u64,
                    order: g.element_order(classes.representative(c)),
                })
                .collect(),
            rows: irreps
                .into_iter()
                .map(|i| CharRow {
                    label: i.label.to_string(),
                    values: i.character.values().to_vec(),
                })
                .collect(),
        }
    }

    pub fn to_csv(&self) -> Result<String, RepError> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let mut header = vec!["label".to_string()];
        header.extend(
            self.classes
                .iter()
                .enumerate()
                .map(|(i, c)| format!("k{i}_s{}_o{}", c.size, c.order)),
        );
        w.write_record(&header).map_err(parse_error)?;
        for row in &self.rows {
            let mut record = vec![row.label.clone()];
            record.extend(row.values.iter().map(|v| v.to_string()));
            w.write_record(&record).map_err(parse_error)?;
        }
        String::from_utf8(w.into_inner().map_err(parse_error)?).map_err(parse_error)
    }

    pub fn from_csv(text: &str) -> Result<CharTable, RepError> {
        let mut r = csv::Reader::from_reader(text.as_bytes());
        let header = r.headers().map_err(parse_error)?.clone();
        let classes = header
            .iter()
            .skip(1)
            .map(|h| {
                let parts: Vec<&str> = h.split('_').collect();
                match parts.as_slice() {
                    [_, s, o] => Ok(ClassInfo {
                        size: s.trim_start_matches('s').parse().map_err(parse_error)?,
                        order: o.trim_start_matches('o').parse().map_err(parse_error)?,
                    }),
                    _ => Err(RepError::Parse(h.to_string())),
                }
            })
            .collect::<Result<Vec<_>, _>>()?;
        let rows = r
            .records()
            .map(|rec| {
                let rec = rec.map_err(parse_error)?;
                let label = rec
                    .get(0)
                    .ok_or_else(|| RepError::Parse("empty row".into()))?
                    .to_string();
                let values = rec
                    .iter()
                    .skip(1)
                    .map(|v| v.parse::<Cyc>().map_err(parse_error))
                    .collect::<Result<Vec<_>, _>>()?;
                if values.len() != classes.len() {
                    return Err(RepError::Parse(format!(
                        "row {label} has {} values",
                        values.len()
                    )));
                }
                Ok(CharRow { label, values })
            })
            .collect::<Result<_, _>>()?;
        Ok(CharTable { classes, rows })
    }

    pub fn to_json(&self) -> Result<String, RepError> {
        serde_json::to_string_pretty(self).map_err(parse_error)
    }

    pub fn from_json(text: &str) -> Result<CharTable, RepError> {
        serde_json::from_str(text).map_err(parse_error)
    }
}
