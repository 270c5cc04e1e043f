//! Reference values for ξ̃ and CCS-numbers, and the checks that reproduce them.
//!
//! Each check reports the first differing cell, with expected and computed
//! values both exact.

use rayon::prelude::*;
use serde::Serialize;

use super::{classification_report, ClassifyError, Verdict};
use crate::invariants::{
    polyhedral_reference, xi_closed_form_bd, xi_closed_form_d, Analysis, RatMod1,
};
use crate::matgroup::{iso, FamilySpec};
use crate::reptheory::IrrepLabel;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GoldenCheck {
    pub name: String,
    pub passed: bool,
    /// Cell count on success, first mismatch otherwise.
    pub detail: String,
}

impl GoldenCheck {
    fn from_cells(name: impl Into<String>, cells: Vec<(String, RatMod1, RatMod1)>) -> GoldenCheck {
        let name = name.into();
        match cells.iter().find(|(_, want, got)| want != got) {
            Some((cell, want, got)) => GoldenCheck {
                name,
                passed: false,
                detail: format!("{cell}: expected {want}, got {got}"),
            },
            None => GoldenCheck {
                name,
                passed: true,
                detail: format!("{} cells", cells.len()),
            },
        }
    }

    fn failed(name: impl Into<String>, detail: impl Into<String>) -> GoldenCheck {
        GoldenCheck {
            name: name.into(),
            passed: false,
            detail: detail.into(),
        }
    }
}

#[derive(Debug, Clone, Copy)]
enum Quantity {
    Xi,
    FirstCcs,
}

/// A printed table over `varrho_{t,s}`: `rows[t-1][s]` is `scale * value`.
struct DTable {
    k: u32,
    r: u64,
    scale: i64,
    quantity: Quantity,
    rows: &'static [&'static [i64]],
}

const D_TABLES: &[DTable] = &[
    DTable {
        k: 2,
        r: 2,
        scale: 40,
        quantity: Quantity::Xi,
        rows: &[&[-4, -9], &[-16, -1], &[4, -1], &[16, -9]],
    },
    DTable {
        k: 3,
        r: 2,
        scale: 80,
        quantity: Quantity::Xi,
        rows: &[
            &[96, 31, 76, 71],
            &[64, 39, 44, 79],
            &[64, 79, 44, 39],
            &[96, 71, 76, 31],
        ],
    },
    DTable {
        k: 3,
        r: 1,
        scale: 48,
        quantity: Quantity::Xi,
        rows: &[&[-32, -17, -20, -41], &[-32, -41, -20, -17]],
    },
    DTable {
        k: 2,
        r: 2,
        scale: 4,
        quantity: Quantity::FirstCcs,
        rows: &[&[0, 1], &[2, 3], &[0, 1], &[2, 3]],
    },
    DTable {
        k: 3,
        r: 2,
        scale: 8,
        quantity: Quantity::FirstCcs,
        rows: &[&[0, 1, 2, 3], &[4, 5, 6, 7], &[0, 1, 2, 3], &[4, 5, 6, 7]],
    },
    DTable {
        k: 3,
        r: 1,
        scale: 8,
        quantity: Quantity::FirstCcs,
        rows: &[&[0, 1, 2, 3], &[4, 5, 6, 7]],
    },
];

fn check_d_table(table: &DTable, cap: usize) -> Result<GoldenCheck, ClassifyError> {
    let spec = FamilySpec::DFamily {
        k: table.k,
        r: table.r,
    };
    let analysis = Analysis::build(&spec, cap, None)?;
    let mut cells = Vec::new();
    for (ti, row) in table.rows.iter().enumerate() {
        for (s, &v) in row.iter().enumerate() {
            let label = IrrepLabel::RhoTS {
                t: ti as u64 + 1,
                s: s as u64,
            };
            let irrep = analysis.irrep(&label).expect("catalog label");
            let got = match table.quantity {
                Quantity::Xi => irrep.xi.clone(),
                Quantity::FirstCcs => irrep.ccs.first[0].clone(),
            };
            cells.push((label.to_string(), RatMod1::ratio(v, table.scale), got));
        }
    }
    let what = match table.quantity {
        Quantity::Xi => "xi",
        Quantity::FirstCcs => "c1",
    };
    Ok(GoldenCheck::from_cells(
        format!("{spec} {}*{what}", table.scale),
        cells,
    ))
}

/// The scaled ξ̃ and first CCS-number tables of `D(2,2)`, `D(3,2)`, `D(3,1)`.
pub fn check_d_tables(cap: usize) -> Result<Vec<GoldenCheck>, ClassifyError> {
    D_TABLES.par_iter().map(|t| check_d_table(t, cap)).collect()
}

/// Degrees, first and second CCS-numbers of `BT`, `BO`, `BI`.
pub fn check_polyhedral(spec: &FamilySpec, cap: usize) -> Result<GoldenCheck, ClassifyError> {
    let name = format!("{spec} degrees and CCS-numbers");
    let analysis = Analysis::build(spec, cap, None)?;
    let reference = polyhedral_reference(spec)
        .ok_or_else(|| ClassifyError::Range(format!("{spec} has no reference table")))?;
    if !analysis.reference_order {
        let got: Vec<String> = analysis
            .irreps
            .iter()
            .map(|i| {
                format!(
                    "({}, {:?}, {})",
                    i.ccs.rank,
                    i.ccs.first.first().map(|f| f.to_string()),
                    i.ccs.second
                )
            })
            .collect();
        return Ok(GoldenCheck::failed(
            name,
            format!(
                "computed keys do not match the reference: {}",
                got.join(" ")
            ),
        ));
    }
    let mut cells = Vec::new();
    for col in &reference {
        let irrep = analysis
            .irrep(&IrrepLabel::Alpha(col.index))
            .expect("reference label");
        let label = irrep.label().to_string();
        cells.push((
            format!("{label} degree"),
            RatMod1::ratio(col.degree as i64, 1),
            RatMod1::ratio(irrep.ccs.rank as i64, 1),
        ));
        if let Some(f) = &col.first {
            cells.push((format!("{label} c1"), f.clone(), irrep.ccs.first[0].clone()));
        }
        cells.push((
            format!("{label} c2"),
            col.second.clone(),
            irrep.ccs.second.clone(),
        ));
    }
    Ok(GoldenCheck::from_cells(name, cells))
}

/// `c1(alpha_j) = j/n` on every lens space group `C:n,q` with `n <= n_max`.
pub fn check_lens(n_max: u64, cap: usize) -> Result<GoldenCheck, ClassifyError> {
    let mut cells = Vec::new();
    for n in 2..=n_max {
        for q in (1..n).filter(|&q| crate::cyclo::gcd(q, n) == 1) {
            let analysis = Analysis::build(&FamilySpec::Cyclic { n, q }, cap, None)?;
            for j in 0..n {
                let irrep = analysis
                    .irrep(&IrrepLabel::Alpha(j))
                    .expect("catalog label");
                cells.push((
                    format!("C:{n},{q} alpha_{j}"),
                    RatMod1::ratio(j as i64, n as i64),
                    irrep.ccs.first[0].clone(),
                ));
            }
        }
    }
    Ok(GoldenCheck::from_cells(
        format!("lens spaces n <= {n_max}: c1"),
        cells,
    ))
}

/// First CCS-numbers of the one-dimensional representations of `BD:q`.
pub fn check_bd_linear(q_max: u64, cap: usize) -> Result<GoldenCheck, ClassifyError> {
    let even: [[(i64, i64); 2]; 4] = [
        [(0, 1), (0, 1)],
        [(1, 2), (0, 1)],
        [(0, 1), (1, 2)],
        [(1, 2), (1, 2)],
    ];
    let odd: [(i64, i64); 4] = [(0, 1), (1, 4), (1, 2), (3, 4)];
    let mut cells = Vec::new();
    for q in 2..=q_max {
        let analysis = Analysis::build(&FamilySpec::BinaryDihedral { q }, cap, None)?;
        for j in 0..4 {
            let irrep = analysis
                .irrep(&IrrepLabel::Alpha(j as u64))
                .expect("catalog label");
            let want: Vec<(i64, i64)> = if q % 2 == 0 {
                even[j].to_vec()
            } else {
                vec![odd[j]]
            };
            for (i, (p, d)) in want.into_iter().enumerate() {
                let gen = &analysis.ab.generators[i].0;
                cells.push((
                    format!("BD:{q} alpha_{j} on {gen}"),
                    RatMod1::ratio(p, d),
                    irrep.ccs.first[i].clone(),
                ));
            }
        }
    }
    Ok(GoldenCheck::from_cells(
        format!("binary dihedral q <= {q_max}: c1 of alpha_j"),
        cells,
    ))
}

/// ξ̃ of `rho_t` against `(t^2 - 2qt - 2q) / 4q`.
pub fn check_bd_closed_form(q_max: u64, cap: usize) -> Result<GoldenCheck, ClassifyError> {
    let per_q: Vec<Vec<(String, RatMod1, RatMod1)>> = (2..=q_max)
        .into_par_iter()
        .map(|q| {
            let analysis = Analysis::build(&FamilySpec::BinaryDihedral { q }, cap, None)?;
            (1..q)
                .map(|t| {
                    let irrep = analysis.irrep(&IrrepLabel::Rho(t)).expect("catalog label");
                    Ok((
                        format!("BD:{q} rho_{t}"),
                        xi_closed_form_bd(q, t)?,
                        irrep.xi.clone(),
                    ))
                })
                .collect::<Result<Vec<_>, ClassifyError>>()
        })
        .collect::<Result<_, _>>()?;
    Ok(GoldenCheck::from_cells(
        format!("binary dihedral q <= {q_max}: xi closed form"),
        per_q.concat(),
    ))
}

/// ξ̃ of `varrho_{t,s}` against the closed triple sum.
pub fn check_d_closed_form(
    ks: &[u32],
    rs: &[u64],
    cap: usize,
) -> Result<GoldenCheck, ClassifyError> {
    let grid: Vec<(u32, u64)> = ks
        .iter()
        .flat_map(|&k| rs.iter().map(move |&r| (k, r)))
        .collect();
    let per_point: Vec<Vec<(String, RatMod1, RatMod1)>> = grid
        .into_par_iter()
        .map(|(k, r)| {
            let analysis = Analysis::build(&FamilySpec::DFamily { k, r }, cap, None)?;
            let mut cells = Vec::new();
            for t in 1..=2 * r {
                for s in 0..1u64 << (k - 1) {
                    let irrep = analysis
                        .irrep(&IrrepLabel::RhoTS { t, s })
                        .expect("catalog label");
                    cells.push((
                        format!("D:{k},{r} {}", irrep.label()),
                        xi_closed_form_d(k, r, t, s)?,
                        irrep.xi.clone(),
                    ));
                }
            }
            Ok(cells)
        })
        .collect::<Result<_, ClassifyError>>()?;
    Ok(GoldenCheck::from_cells(
        "D family: xi closed form",
        per_point.concat(),
    ))
}

fn check_classification(
    spec: &str,
    expected: Verdict,
    cap: usize,
) -> Result<GoldenCheck, ClassifyError> {
    let spec: FamilySpec = spec.parse()?;
    let report = classification_report(&Analysis::build(&spec, cap, None)?);
    let name = format!("{spec} classified by CCS vectors");
    Ok(if report.verdict == expected {
        GoldenCheck {
            name,
            passed: true,
            detail: format!("{} irreps", report.entries.len()),
        }
    } else {
        GoldenCheck::failed(
            name,
            format!(
                "expected {expected:?}, got {:?} with collisions {:?}",
                report.verdict, report.collisions
            ),
        )
    })
}

/// Every reference reproduction, in a fixed order.
pub fn golden_checks(cap: usize) -> Result<Vec<GoldenCheck>, ClassifyError> {
    let mut out = check_d_tables(cap)?;
    for spec in [
        FamilySpec::BinaryTetrahedral,
        FamilySpec::BinaryOctahedral,
        FamilySpec::BinaryIcosahedral,
    ] {
        out.push(check_polyhedral(&spec, cap)?);
    }
    out.push(check_lens(12, cap)?);
    out.push(check_bd_linear(12, cap)?);
    out.push(check_bd_closed_form(30, cap)?);
    out.push(check_d_closed_form(&[2, 3], &[1, 2, 3], cap)?);
    for spec in ["BD:5", "BT", "D:3,1"] {
        out.push(check_classification(spec, Verdict::Injective, cap)?);
    }
    for report in iso::all_checks(cap)? {
        let name = format!("isomorphism {}", report.name);
        out.push(if report.passed() {
            GoldenCheck {
                name,
                passed: true,
                detail: "relators hold, surjective, orders match".into(),
            }
        } else {
            GoldenCheck::failed(name, format!("{report:?}"))
        });
    }
    Ok(out)
}
