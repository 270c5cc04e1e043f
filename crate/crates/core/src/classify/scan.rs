//! Evidence for injectivity of `t -> xi(varrho_{t,s})` within a parity class.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::ClassifyError;
use crate::invariants::{Analysis, RatMod1};
use crate::matgroup::FamilySpec;
use crate::reptheory::IrrepLabel;

/// Largest group order scanned by default.
pub const DEFAULT_SCAN_CAP: u64 = 5000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub s: u64,
    pub t1: u64,
    pub t2: u64,
    pub xi: RatMod1,
}

/// One grid point `(k, r)` of the scan.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanRecord {
    pub params: [u64; 2],
    pub orders: u64,
    pub counterexamples: Vec<Counterexample>,
    /// `verified`, `counterexample` or `skipped` (order above the cap).
    pub status: String,
}

fn scan_point(k: u32, r: u64, cap: u64) -> Result<ScanRecord, ClassifyError> {
    let spec = FamilySpec::DFamily { k, r };
    let order = spec.order();
    let params = [k as u64, r];
    if order > cap {
        return Ok(ScanRecord {
            params,
            orders: order,
            counterexamples: vec![],
            status: "skipped".into(),
        });
    }
    let analysis = Analysis::build(&spec, order as usize, None)?;
    let xi = |t: u64, s: u64| {
        analysis
            .irrep(&IrrepLabel::RhoTS { t, s })
            .map(|i| i.xi.clone())
            .expect("catalog label")
    };
    let mut counterexamples = Vec::new();
    for s in 0..1u64 << (k - 1) {
        for t1 in 1..=2 * r {
            for t2 in (t1 + 2..=2 * r).step_by(2) {
                let v = xi(t1, s);
                if v == xi(t2, s) {
                    counterexamples.push(Counterexample { s, t1, t2, xi: v });
                }
            }
        }
    }
    let status = if counterexamples.is_empty() {
        "verified"
    } else {
        "counterexample"
    };
    Ok(ScanRecord {
        params,
        orders: order,
        counterexamples,
        status: status.into(),
    })
}

/// Scan `2 <= k <= k_max`, `1 <= r <= r_max` in parallel; records come back
/// in parameter order.
pub fn conjecture_scan(k_max: u32, r_max: u64, cap: u64) -> Result<Vec<ScanRecord>, ClassifyError> {
    if k_max < 2 || r_max < 1 {
        return Err(ClassifyError::Range(format!(
            "k-max = {k_max}, r-max = {r_max}"
        )));
    }
    let grid: Vec<(u32, u64)> = (2..=k_max)
        .flat_map(|k| (1..=r_max).map(move |r| (k, r)))
        .collect();
    grid.into_par_iter()
        .map(|(k, r)| scan_point(k, r, cap))
        .collect()
}
