//! Invariant tables: one row per irreducible, exported as CSV or JSON.
//!
//! CSV columns: `label, rank, c1_<generator>..., c2, xi, order_xi`, where
//! `order_xi` is `|G|` times ξ̃, with the representative chosen by
//! `Analysis::scaled_xi`. Rationals are written
//! `p/q`.

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use super::{Analysis, InvariantError, RatMod1};
use crate::cyclo::format_rational;
use crate::cyclo::text::parse_rational;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantRow {
    pub label: String,
    pub rank: u64,
    pub first: Vec<RatMod1>,
    pub second: RatMod1,
    pub xi: RatMod1,
    #[serde(with = "rational_text")]
    pub order_xi: BigRational,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantTable {
    pub generators: Vec<String>,
    pub rows: Vec<InvariantRow>,
}

mod rational_text {
    use num_rational::BigRational;
    use serde::de::Error as _;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &BigRational, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(r)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigRational, D::Error> {
        let s = String::deserialize(d)?;
        crate::cyclo::text::parse_rational(&s)
            .ok_or_else(|| D::Error::custom(format!("bad rational {s}")))
    }
}

fn csv_error(e: impl std::fmt::Display) -> InvariantError {
    InvariantError::Parse(e.to_string())
}

impl InvariantTable {
    pub fn from_analysis(a: &Analysis) -> InvariantTable {
        InvariantTable {
            generators: a.ab.generators.iter().map(|(n, _)| n.clone()).collect(),
            rows: a
                .irreps
                .iter()
                .map(|i| InvariantRow {
                    label: i.label().to_string(),
                    rank: i.ccs.rank,
                    first: i.ccs.first.clone(),
                    second: i.ccs.second.clone(),
                    xi: i.xi.clone(),
                    order_xi: a.scaled_xi(i),
                })
                .collect(),
        }
    }

    /// Keep only rows of the given rank.
    pub fn with_rank(mut self, rank: u64) -> InvariantTable {
        self.rows.retain(|r| r.rank == rank);
        self
    }

    pub fn to_csv(&self) -> Result<String, InvariantError> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let mut header = vec!["label".to_string(), "rank".to_string()];
        header.extend(self.generators.iter().map(|g| format!("c1_{g}")));
        header.extend(["c2", "xi", "order_xi"].map(String::from));
        w.write_record(&header).map_err(csv_error)?;
        for r in &self.rows {
            let mut record = vec![r.label.clone(), r.rank.to_string()];
            record.extend(r.first.iter().map(|f| f.to_string()));
            record.extend([
                r.second.to_string(),
                r.xi.to_string(),
                format_rational(&r.order_xi),
            ]);
            w.write_record(&record).map_err(csv_error)?;
        }
        String::from_utf8(w.into_inner().map_err(csv_error)?).map_err(csv_error)
    }

    pub fn from_csv(text: &str) -> Result<InvariantTable, InvariantError> {
        let mut r = csv::Reader::from_reader(text.as_bytes());
        let header = r.headers().map_err(csv_error)?.clone();
        let generators: Vec<String> = header
            .iter()
            .filter_map(|h| h.strip_prefix("c1_"))
            .map(String::from)
            .collect();
        let expected = 5 + generators.len();
        if header.len() != expected {
            return Err(InvariantError::Parse(format!("header {header:?}")));
        }
        let mut rows = Vec::new();
        for record in r.records() {
            let record = record.map_err(csv_error)?;
            let field = |i: usize| {
                record
                    .get(i)
                    .ok_or_else(|| InvariantError::Parse(format!("{record:?}")))
            };
            let n = generators.len();
            rows.push(InvariantRow {
                label: field(0)?.to_string(),
                rank: field(1)?.parse().map_err(csv_error)?,
                first: (0..n)
                    .map(|i| field(2 + i)?.parse())
                    .collect::<Result<_, _>>()?,
                second: field(2 + n)?.parse()?,
                xi: field(3 + n)?.parse()?,
                order_xi: parse_rational(field(4 + n)?)
                    .ok_or_else(|| InvariantError::Parse(field(4 + n).unwrap_or("").into()))?,
            });
        }
        Ok(InvariantTable { generators, rows })
    }

    pub fn to_json(&self) -> Result<String, InvariantError> {
        serde_json::to_string_pretty(self).map_err(csv_error)
    }

    pub fn from_json(text: &str) -> Result<InvariantTable, InvariantError> {
        serde_json::from_str(text).map_err(csv_error)
    }
}
