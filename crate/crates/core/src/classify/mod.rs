//! Whether the vector of CCS-numbers separates the irreducible
//! representations of a group, and the checks around the open case of the
//! `D` family.

mod golden;
mod scan;

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use crate::invariants::{Analysis, CcsVector, InvariantError};
use crate::matgroup::{FamilySpec, GroupError};
use crate::reptheory::IrrepLabel;

pub use golden::{
    check_bd_closed_form, check_bd_linear, check_d_closed_form, check_d_tables, check_lens,
    check_polyhedral, golden_checks, GoldenCheck,
};
pub use scan::{conjecture_scan, Counterexample, ScanRecord, DEFAULT_SCAN_CAP};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("scan parameters out of range: {0}")]
    Range(String),
    #[error(transparent)]
    Invariant(#[from] InvariantError),
    #[error(transparent)]
    Group(#[from] GroupError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Injective,
    CollisionsFound,
    /// Every collision lies in the open two-dimensional case of the `D`
    /// family: same `s`, same parity of `t`.
    ConjecturalCaseExcluded,
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassificationReport {
    pub group: FamilySpec,
    pub entries: Vec<(IrrepLabel, CcsVector)>,
    pub collisions: Vec<Vec<IrrepLabel>>,
    pub verdict: Verdict,
    pub excluded: Vec<IrrepLabel>,
}

/// `(t, s, a)` of `varrho_{t,s}` or `varrho_{t,s} (x) alpha_a`.
fn d_parameters(label: &IrrepLabel) -> Option<(u64, u64, u64)> {
    match label {
        IrrepLabel::RhoTS { t, s } => Some((*t, *s, 0)),
        IrrepLabel::Tensor(inner, a) => match **inner {
            IrrepLabel::RhoTS { t, s } => Some((t, s, *a)),
            _ => None,
        },
        _ => None,
    }
}

/// A collision that only involves two-dimensional `D`-family irreducibles
/// with equal `s` (and cyclic twist) and `t` of equal parity.
fn is_conjectural(group: &FamilySpec, labels: &[IrrepLabel]) -> bool {
    if !matches!(group.inner(), FamilySpec::DFamily { .. }) {
        return false;
    }
    let params: Option<Vec<_>> = labels.iter().map(d_parameters).collect();
    match params {
        Some(p) => p
            .iter()
            .all(|&(t, s, a)| s == p[0].1 && a == p[0].2 && t % 2 == p[0].0 % 2),
        None => false,
    }
}

/// Group the catalog by CCS vector and report every collision.
pub fn classification_report(analysis: &Analysis) -> ClassificationReport {
    let group = analysis.group.spec().cloned().expect("family group");
    let entries: Vec<(IrrepLabel, CcsVector)> = analysis
        .irreps
        .iter()
        .map(|i| (i.label().clone(), i.ccs.clone()))
        .collect();
    let mut by_vector: BTreeMap<&CcsVector, Vec<IrrepLabel>> = BTreeMap::new();
    for (label, v) in &entries {
        by_vector.entry(v).or_default().push(label.clone());
    }
    let collisions: Vec<Vec<IrrepLabel>> =
        by_vector.into_values().filter(|v| v.len() > 1).collect();
    let (open, hard): (Vec<_>, Vec<_>) = collisions.iter().partition(|c| is_conjectural(&group, c));
    let excluded: Vec<IrrepLabel> = open.into_iter().flatten().cloned().collect();
    let verdict = if collisions.is_empty() {
        Verdict::Injective
    } else if hard.is_empty() {
        Verdict::ConjecturalCaseExcluded
    } else {
        Verdict::CollisionsFound
    };
    ClassificationReport {
        group,
        entries,
        collisions,
        verdict,
        excluded,
    }
}

/// On a `D`-family group: equal first CCS-numbers force equal `s` and equal
/// parity of `t`, and equal CCS vectors force equal xi.
pub fn verify_collision_lemmas(analysis: &Analysis) -> bool {
    let two_dim: Vec<_> = analysis
        .irreps
        .iter()
        .filter_map(|i| d_parameters(i.label()).map(|p| (p, i)))
        .collect();
    two_dim.iter().all(|((t1, s1, a1), x)| {
        two_dim.iter().all(|((t2, s2, a2), y)| {
            let same_first = x.ccs.first == y.ccs.first;
            let first_ok = !same_first || a1 != a2 || (s1 == s2 && t1 % 2 == t2 % 2);
            let vector_ok = x.ccs != y.ccs || x.xi == y.xi;
            first_ok && vector_ok
        })
    })
}

/// Pairs of irreducibles with equal rank and first CCS-numbers but different
/// CCS vectors.
pub fn rank_first_collisions(analysis: &Analysis) -> Vec<(IrrepLabel, IrrepLabel)> {
    let mut out = Vec::new();
    for (i, x) in analysis.irreps.iter().enumerate() {
        for y in &analysis.irreps[i + 1..] {
            if x.ccs.rank == y.ccs.rank && x.ccs.first == y.ccs.first && x.ccs != y.ccs {
                out.push((x.label().clone(), y.label().clone()));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matgroup::DEFAULT_ELEMENT_CAP;

    fn analysis(s: &str) -> Analysis {
        Analysis::build(&s.parse().unwrap(), DEFAULT_ELEMENT_CAP, None).unwrap()
    }

    #[test]
    fn injective_examples() {
        for (s, n) in [("BD:5", 8), ("BT", 7), ("D:3,1", 24), ("P:2", 21)] {
            let report = classification_report(&analysis(s));
            assert_eq!(
                report.verdict,
                Verdict::Injective,
                "{s}: {:?}",
                report.collisions
            );
            assert_eq!(report.entries.len(), n);
        }
    }

    #[test]
    fn conjectural_case_is_recognised() {
        let group: FamilySpec = "D:2,2".parse().unwrap();
        let same = [
            IrrepLabel::RhoTS { t: 1, s: 0 },
            IrrepLabel::RhoTS { t: 3, s: 0 },
        ];
        let parity = [
            IrrepLabel::RhoTS { t: 1, s: 0 },
            IrrepLabel::RhoTS { t: 2, s: 0 },
        ];
        assert!(is_conjectural(&group, &same));
        assert!(!is_conjectural(&group, &parity));
        assert!(!is_conjectural(&"BD:5".parse().unwrap(), &same));
    }

    #[test]
    fn collision_lemmas() {
        for s in ["D:2,2", "D:3,2", "D:3,1"] {
            assert!(verify_collision_lemmas(&analysis(s)), "{s}");
        }
    }

    #[test]
    fn d31_xi_collides_only_across_s() {
        let a = analysis("D:3,1");
        let xi = |t, s| a.irrep(&IrrepLabel::RhoTS { t, s }).unwrap().xi.clone();
        assert_eq!(xi(1, 0), xi(2, 0));
        let records = conjecture_scan(3, 2, DEFAULT_SCAN_CAP).unwrap();
        assert_eq!(records.len(), 4);
        assert!(records
            .iter()
            .all(|r| r.status == "verified" && r.counterexamples.is_empty()));
        assert_eq!(records[0].params, [2, 1]);
        let json = serde_json::to_string(&records[0]).unwrap();
        assert_eq!(
            json,
            r#"{"params":[2,1],"orders":24,"counterexamples":[],"status":"verified"}"#
        );
    }

    #[test]
    fn scan_respects_cap() {
        let records = conjecture_scan(2, 1, 10).unwrap();
        assert_eq!(records[0].status, "skipped");
        assert!(conjecture_scan(1, 1, 10).is_err());
    }
}
