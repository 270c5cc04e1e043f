//! The `spherex` command line.
//!
//! Exit codes: 0 on success, 1 when a verification fails, 2 on usage errors
//! (bad arguments, unknown group specs, exceeded element cap).

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::classify::{
    classification_report, conjecture_scan, golden_checks, ClassifyError, Verdict, DEFAULT_SCAN_CAP,
};
use crate::invariants::{Analysis, InvariantError, InvariantTable, SpinOverride};
use crate::matgroup::{abelianization, iso, FamilySpec, GroupError, MatGroup, DEFAULT_ELEMENT_CAP};
use crate::reptheory::{CharTable, RepError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "spherex",
    version,
    about = "CCS-numbers and xi-invariants of spherical space forms S^3/G"
)]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Fix the square root of det on abelianization generators, e.g. `x=1/8`.
    #[arg(long, global = true)]
    pub spin_character: Option<SpinOverride>,
    /// Largest group order enumerated.
    #[arg(long, env = "SPHEREX_ELEMENT_CAP", default_value_t = DEFAULT_ELEMENT_CAP, global = true)]
    pub element_cap: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Group information.
    Group {
        #[command(subcommand)]
        action: GroupAction,
    },
    /// Irreducible representations with their degrees.
    Irreps { spec: FamilySpec },
    /// Character table.
    CharTable { spec: FamilySpec },
    /// Vector of CCS-numbers of every irreducible.
    CcsTable { spec: FamilySpec },
    /// xi-invariants, reduced and scaled by the group order.
    XiTable {
        spec: FamilySpec,
        /// Only irreducibles of this rank.
        #[arg(long)]
        rank: Option<u64>,
    },
    /// Whether the CCS vectors separate the irreducibles.
    Classify { spec: FamilySpec },
    /// Injectivity of t -> xi(varrho_{t,s}) within parity classes of D(k,r).
    ConjectureScan {
        #[arg(long)]
        k_max: u32,
        #[arg(long)]
        r_max: u64,
        /// Skip groups above this order.
        #[arg(long, default_value_t = DEFAULT_SCAN_CAP)]
        order_cap: u64,
    },
    /// Verify the presentation isomorphisms.
    IsoCheck,
    /// Reproduce every reference table and print a pass/fail ledger.
    VerifyPaper,
}

#[derive(Debug, Subcommand)]
pub enum GroupAction {
    Info { spec: FamilySpec },
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Internal(String),
}

impl From<GroupError> for Failure {
    fn from(e: GroupError) -> Failure {
        match e {
            GroupError::InvalidSpec(_) | GroupError::GroupTooLarge { .. } => {
                Failure::Usage(e.to_string())
            }
            _ => Failure::Internal(e.to_string()),
        }
    }
}

impl From<RepError> for Failure {
    fn from(e: RepError) -> Failure {
        match e {
            RepError::Group(g) => g.into(),
            e => Failure::Internal(e.to_string()),
        }
    }
}

impl From<InvariantError> for Failure {
    fn from(e: InvariantError) -> Failure {
        match e {
            InvariantError::Group(g) => g.into(),
            InvariantError::Rep(r) => r.into(),
            InvariantError::NoSpinCharacter(_)
            | InvariantError::Parse(_)
            | InvariantError::OutOfRange(_) => Failure::Usage(e.to_string()),
            e => Failure::Internal(e.to_string()),
        }
    }
}

impl From<ClassifyError> for Failure {
    fn from(e: ClassifyError) -> Failure {
        match e {
            ClassifyError::Range(m) => Failure::Usage(m),
            ClassifyError::Invariant(i) => i.into(),
            ClassifyError::Group(g) => g.into(),
        }
    }
}

fn io(e: impl std::fmt::Display) -> Failure {
    Failure::Internal(e.to_string())
}

fn json<T: Serialize>(v: &T) -> Result<String, Failure> {
    serde_json::to_string_pretty(v).map_err(io)
}

fn csv_rows(rows: &[Vec<String>]) -> Result<String, Failure> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.write_record(r).map_err(io)?;
    }
    String::from_utf8(w.into_inner().map_err(io)?).map_err(io)
}

/// Left-aligned columns separated by two spaces.
fn text_table(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| {
            rows.iter()
                .filter_map(|r| r.get(c))
                .map(|s| s.chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    for r in rows {
        let line: Vec<String> = r
            .iter()
            .enumerate()
            .map(|(i, s)| format!("{s:<w$}", w = widths[i]))
            .collect();
        let _ = writeln!(out, "{}", line.join("  ").trim_end());
    }
    out
}

fn tabular(format: Format, rows: &[Vec<String>]) -> Result<String, Failure> {
    match format {
        Format::Csv => csv_rows(rows),
        _ => Ok(text_table(rows)),
    }
}

#[derive(Serialize)]
struct GroupInfo {
    group: String,
    order: usize,
    classes: usize,
    abelianization: Vec<u64>,
    generators: Vec<(String, u64)>,
    commutator_order: usize,
}

struct Ctx {
    format: Format,
    cap: usize,
    spin: Option<SpinOverride>,
}

impl Ctx {
    fn analysis(&self, spec: &FamilySpec) -> Result<Analysis, Failure> {
        Ok(Analysis::build(spec, self.cap, self.spin.as_ref())?)
    }
}

fn group_info(ctx: &Ctx, spec: &FamilySpec) -> Result<String, Failure> {
    let g = MatGroup::build(spec, ctx.cap)?;
    let ab = abelianization(&g)?;
    let info = GroupInfo {
        group: spec.to_string(),
        order: g.order(),
        classes: g.classes().len(),
        abelianization: ab.invariant_factors.clone(),
        generators: ab
            .generators
            .iter()
            .zip(&ab.factors)
            .map(|((n, _), &f)| (n.clone(), f))
            .collect(),
        commutator_order: ab.commutator_order,
    };
    let gens: Vec<String> = info
        .generators
        .iter()
        .map(|(n, f)| format!("{n} (order {f})"))
        .collect();
    let factors: Vec<String> = info
        .abelianization
        .iter()
        .map(|f| format!("C{f}"))
        .collect();
    let rows = vec![
        vec!["group".into(), info.group.clone()],
        vec!["order".into(), info.order.to_string()],
        vec!["classes".into(), info.classes.to_string()],
        vec![
            "abelianization".into(),
            if factors.is_empty() {
                "trivial".into()
            } else {
                factors.join(" x ")
            },
        ],
        vec!["generators".into(), gens.join(", ")],
        vec!["commutator_order".into(), info.commutator_order.to_string()],
    ];
    match ctx.format {
        Format::Json => json(&info),
        f => tabular(f, &rows),
    }
}

fn irreps(ctx: &Ctx, spec: &FamilySpec) -> Result<String, Failure> {
    let a = ctx.analysis(spec)?;
    let entries: Vec<(String, u64, bool)> = a
        .irreps
        .iter()
        .map(|i| {
            (
                i.label().to_string(),
                i.irrep.degree,
                i.irrep.images.is_some(),
            )
        })
        .collect();
    #[derive(Serialize)]
    struct Entry {
        label: String,
        degree: u64,
        explicit: bool,
    }
    match ctx.format {
        Format::Json => json(
            &entries
                .into_iter()
                .map(|(label, degree, explicit)| Entry {
                    label,
                    degree,
                    explicit,
                })
                .collect::<Vec<_>>(),
        ),
        f => {
            let mut rows = vec![vec!["label".into(), "degree".into(), "matrices".into()]];
            rows.extend(entries.into_iter().map(|(l, d, e)| {
                vec![
                    l,
                    d.to_string(),
                    if e { "explicit" } else { "character only" }.into(),
                ]
            }));
            tabular(f, &rows)
        }
    }
}

fn char_table(ctx: &Ctx, spec: &FamilySpec) -> Result<String, Failure> {
    let a = ctx.analysis(spec)?;
    let table = CharTable::new(a.group(), a.irreps.iter().map(|i| &i.irrep));
    match ctx.format {
        Format::Json => Ok(table.to_json()?),
        Format::Csv => Ok(table.to_csv()?),
        Format::Text => {
            let mut rows = vec![std::iter::once("class".to_string())
                .chain((0..table.classes.len()).map(|i| format!("k{i}")))
                .collect()];
            rows.push(
                std::iter::once("size".to_string())
                    .chain(table.classes.iter().map(|c| c.size.to_string()))
                    .collect(),
            );
            rows.push(
                std::iter::once("order".to_string())
                    .chain(table.classes.iter().map(|c| c.order.to_string()))
                    .collect(),
            );
            rows.extend(table.rows.iter().map(|r| {
                std::iter::once(r.label.clone())
                    .chain(r.values.iter().map(|v| v.to_string()))
                    .collect()
            }));
            Ok(text_table(&rows))
        }
    }
}

fn invariant_table(
    ctx: &Ctx,
    spec: &FamilySpec,
    rank: Option<u64>,
    xi_view: bool,
) -> Result<String, Failure> {
    let a = ctx.analysis(spec)?;
    let mut table = InvariantTable::from_analysis(&a);
    if let Some(r) = rank {
        table = table.with_rank(r);
    }
    match ctx.format {
        Format::Json => Ok(table.to_json()?),
        Format::Csv => Ok(table.to_csv()?),
        Format::Text => {
            let order = a.group.order();
            let mut header = vec!["label".to_string(), "rank".to_string()];
            if xi_view {
                header.extend(["xi".to_string(), format!("{order}*xi")]);
            } else {
                header.extend(table.generators.iter().map(|g| format!("c1({g})")));
                header.push("c2".into());
            }
            let mut rows = vec![header];
            for r in &table.rows {
                let mut row = vec![r.label.clone(), r.rank.to_string()];
                if xi_view {
                    row.extend([r.xi.to_string(), r.order_xi.to_string()]);
                } else {
                    row.extend(r.first.iter().map(|f| f.to_string()));
                    row.push(r.second.to_string());
                }
                rows.push(row);
            }
            Ok(format!("{spec} (order {order})\n{}", text_table(&rows)))
        }
    }
}

fn classify(ctx: &Ctx, spec: &FamilySpec) -> Result<(String, bool), Failure> {
    let a = ctx.analysis(spec)?;
    let report = classification_report(&a);
    let ok = report.verdict != Verdict::CollisionsFound;
    let out = match ctx.format {
        Format::Json => json(&report)?,
        f => {
            let gens: Vec<String> =
                a.ab.generators
                    .iter()
                    .map(|(n, _)| match f {
                        Format::Csv => format!("c1_{n}"),
                        _ => format!("c1({n})"),
                    })
                    .collect();
            let mut rows = vec![["label", "rank"]
                .iter()
                .map(|s| s.to_string())
                .chain(gens)
                .chain(["c2".to_string()])
                .collect::<Vec<_>>()];
            for (label, v) in &report.entries {
                let mut row = vec![label.to_string(), v.rank.to_string()];
                row.extend(v.first.iter().map(|x| x.to_string()));
                row.push(v.second.to_string());
                rows.push(row);
            }
            if f == Format::Csv {
                csv_rows(&rows)?
            } else {
                let mut out = format!(
                    "{spec}: {:?} ({} irreps)\n",
                    report.verdict,
                    report.entries.len()
                );
                for c in &report.collisions {
                    let labels: Vec<String> = c.iter().map(|l| l.to_string()).collect();
                    let _ = writeln!(out, "collision: {}", labels.join(", "));
                }
                if !report.excluded.is_empty() {
                    let labels: Vec<String> =
                        report.excluded.iter().map(|l| l.to_string()).collect();
                    let _ = writeln!(out, "excluded (open case): {}", labels.join(", "));
                }
                out + &text_table(&rows)
            }
        }
    };
    Ok((out, ok))
}

fn scan(ctx: &Ctx, k_max: u32, r_max: u64, order_cap: u64) -> Result<(String, bool), Failure> {
    let records = conjecture_scan(k_max, r_max, order_cap)?;
    let ok = records.iter().all(|r| r.counterexamples.is_empty());
    let out = match ctx.format {
        Format::Json => json(&records)?,
        Format::Csv => {
            let mut rows = vec![["k", "r", "order", "counterexamples", "status"]
                .map(String::from)
                .to_vec()];
            rows.extend(records.iter().map(|r| {
                vec![
                    r.params[0].to_string(),
                    r.params[1].to_string(),
                    r.orders.to_string(),
                    r.counterexamples.len().to_string(),
                    r.status.clone(),
                ]
            }));
            csv_rows(&rows)?
        }
        Format::Text => records
            .iter()
            .map(|r| serde_json::to_string(r).map(|s| s + "\n"))
            .collect::<Result<String, _>>()
            .map_err(io)?,
    };
    Ok((out, ok))
}

fn ledger(ctx: &Ctx, entries: Vec<(String, bool, String)>) -> Result<(String, bool), Failure> {
    let ok = entries.iter().all(|e| e.1);
    #[derive(Serialize)]
    struct Entry {
        name: String,
        passed: bool,
        detail: String,
    }
    let out = match ctx.format {
        Format::Json => json(
            &entries
                .into_iter()
                .map(|(name, passed, detail)| Entry {
                    name,
                    passed,
                    detail,
                })
                .collect::<Vec<_>>(),
        )?,
        Format::Csv => {
            let mut rows = vec![["check", "result", "detail"].map(String::from).to_vec()];
            rows.extend(
                entries
                    .into_iter()
                    .map(|(n, p, d)| vec![n, if p { "pass" } else { "FAIL" }.into(), d]),
            );
            csv_rows(&rows)?
        }
        Format::Text => {
            let passed = entries.iter().filter(|e| e.1).count();
            let total = entries.len();
            let mut out: String = entries
                .into_iter()
                .map(|(n, p, d)| format!("{} {n}: {d}\n", if p { "PASS" } else { "FAIL" }))
                .collect();
            let _ = writeln!(out, "{passed}/{total} checks passed");
            out
        }
    };
    Ok((out, ok))
}

fn dispatch(cli: Cli) -> Result<(String, bool), Failure> {
    let ctx = Ctx {
        format: cli.format,
        cap: cli.element_cap,
        spin: cli.spin_character,
    };
    if ctx.cap == 0 {
        return Err(Failure::Usage("element cap must be positive".into()));
    }
    let done = |s: String| (s, true);
    match cli.command {
        Command::Group {
            action: GroupAction::Info { spec },
        } => group_info(&ctx, &spec).map(done),
        Command::Irreps { spec } => irreps(&ctx, &spec).map(done),
        Command::CharTable { spec } => char_table(&ctx, &spec).map(done),
        Command::CcsTable { spec } => invariant_table(&ctx, &spec, None, false).map(done),
        Command::XiTable { spec, rank } => invariant_table(&ctx, &spec, rank, true).map(done),
        Command::Classify { spec } => classify(&ctx, &spec),
        Command::ConjectureScan {
            k_max,
            r_max,
            order_cap,
        } => scan(&ctx, k_max, r_max, order_cap),
        Command::IsoCheck => {
            let reports = iso::all_checks(ctx.cap)?;
            ledger(
                &ctx,
                reports
                    .into_iter()
                    .map(|r| {
                        let detail = format!(
                            "relators {}, surjective {}, orders {}",
                            r.relators_hold, r.surjective, r.orders_match
                        );
                        (r.name.clone(), r.passed(), detail)
                    })
                    .collect(),
            )
        }
        Command::VerifyPaper => {
            let checks = golden_checks(ctx.cap)?;
            ledger(
                &ctx,
                checks
                    .into_iter()
                    .map(|c| (c.name, c.passed, c.detail))
                    .collect(),
            )
        }
    }
}

/// Run the command line, writing results to `out` and diagnostics to
/// `err`; returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if code == 0 {
                write!(out, "{}", e.render())
            } else {
                write!(err, "{}", e.render())
            };
            return code;
        }
    };
    match dispatch(cli) {
        Ok((text, ok)) => {
            let _ = write!(out, "{text}");
            if ok {
                0
            } else {
                1
            }
        }
        Err(Failure::Usage(m)) => {
            let _ = writeln!(err, "error: {m}");
            2
        }
        Err(Failure::Internal(m)) => {
            let _ = writeln!(err, "error: {m}");
            1
        }
    }
}
