//! Reference order of the irreducible representations of the binary
//! polyhedral groups.
//!
//! The Burnside-Brauer catalog has no canonical order. Each irreducible is
//! identified by its key `(degree, c1, c2)` and named `alpha_j` after the
//! column of the reference table carrying the same key.

use super::RatMod1;
use crate::matgroup::FamilySpec;

/// One column of the reference table: `alpha_j` with its degree and CCS-numbers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReferenceColumn {
    pub index: u64,
    pub degree: u64,
    /// First CCS-number on the abelianization generator, if there is one.
    pub first: Option<RatMod1>,
    pub second: RatMod1,
}

fn columns(degrees: &[u64], first: Option<&[&str]>, second: &[&str]) -> Vec<ReferenceColumn> {
    let parse = |s: &str| s.parse::<RatMod1>().expect("reference value");
    (0..degrees.len())
        .map(|i| ReferenceColumn {
            index: i as u64 + 1,
            degree: degrees[i],
            first: first.map(|f| parse(f[i])),
            second: parse(second[i]),
        })
        .collect()
}

/// Reference columns for `BT`, `BO` and `BI`; `None` for other families.
pub fn polyhedral_reference(spec: &FamilySpec) -> Option<Vec<ReferenceColumn>> {
    match spec {
        FamilySpec::BinaryTetrahedral => Some(columns(
            &[1, 1, 1, 2, 2, 2, 3],
            Some(&["0", "2/3", "1/3", "0", "1/3", "2/3", "0"]),
            &["0", "0", "0", "1/24", "3/8", "3/8", "1/6"],
        )),
        FamilySpec::BinaryOctahedral => Some(columns(
            &[1, 1, 2, 2, 2, 3, 3, 4],
            Some(&["0", "1/2", "1/2", "0", "0", "1/2", "0", "0"]),
            &["0", "0", "1/3", "1/48", "25/48", "7/12", "1/12", "5/24"],
        )),
        FamilySpec::BinaryIcosahedral => Some(columns(
            &[1, 2, 2, 3, 3, 4, 4, 5, 6],
            None,
            &[
                "0", "1/120", "49/120", "19/30", "1/30", "5/6", "1/12", "1/6", "7/24",
            ],
        )),
        _ => None,
    }
}
