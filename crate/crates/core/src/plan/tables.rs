//! The four design tables: minimum sample size, acceptance probability,
//! minimum quality ratio and producer's risk over the standard grids.

use std::fmt;
use std::io::{Read, Write};
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{binomial::binom_cdf_unchecked, failure_prob, min_sample_size, min_scale_ratio};
use super::{oc_value, producer_risk, published, DesignQuery, SamplingPlan};
use crate::error::{Error, Result};

pub const P_STAR_GRID: [f64; 4] = [0.75, 0.90, 0.95, 0.99];
// Printed grid values; 3.141 is a grid point, not π.
#[allow(clippy::approx_constant)]
pub const T_RATIO_GRID: [f64; 8] = [0.628, 0.942, 1.257, 1.571, 2.356, 3.141, 3.927, 4.712];
pub const SCALE_RATIO_GRID: [f64; 6] = [2.0, 4.0, 6.0, 8.0, 10.0, 12.0];
pub const MAX_ACCEPTANCE_NUMBER: u32 = 10;
/// Acceptance number of the plans behind the acceptance-probability and
/// producer's-risk tables.
pub const OC_ACCEPTANCE_NUMBER: u32 = 2;
/// Producer's risk targeted by the minimum-ratio table.
pub const TABLE_DELTA: f64 = 0.05;
/// Transmutation parameter of the published tables.
pub const PUBLISHED_LAMBDA: f64 = 0.5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TableKind {
    SampleSize,
    AcceptanceProbability,
    MinScaleRatio,
    ProducerRisk,
}

impl TableKind {
    pub const ALL: [TableKind; 4] = [
        TableKind::SampleSize,
        TableKind::AcceptanceProbability,
        TableKind::MinScaleRatio,
        TableKind::ProducerRisk,
    ];

    pub fn number(self) -> u8 {
        match self {
            TableKind::SampleSize => 1,
            TableKind::AcceptanceProbability => 2,
            TableKind::MinScaleRatio => 3,
            TableKind::ProducerRisk => 4,
        }
    }

    pub fn from_number(number: u8) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|k| k.number() == number)
            .ok_or_else(|| Error::UnknownTable(number.to_string()))
    }

    /// Tables 1 and 3 have one row per `(P*, c)` and one column per `t/σ₀`;
    /// tables 2 and 4 have one row per `(P*, t/σ₀)` plan and one column per
    /// `σ/σ₀`.
    pub fn rows_by_acceptance_number(self) -> bool {
        matches!(self, TableKind::SampleSize | TableKind::MinScaleRatio)
    }

    pub fn columns(self) -> Vec<f64> {
        if self.rows_by_acceptance_number() {
            T_RATIO_GRID.to_vec()
        } else {
            SCALE_RATIO_GRID.to_vec()
        }
    }

    /// Tolerance used when comparing against a reference copy of this table.
    pub fn default_tolerance(self) -> f64 {
        match self {
            TableKind::SampleSize => 0.0,
            TableKind::MinScaleRatio => 0.005 + 1e-9,
            TableKind::AcceptanceProbability | TableKind::ProducerRisk => 1e-6,
        }
    }
}

impl FromStr for TableKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.trim()
            .parse::<u8>()
            .map_err(|_| Error::UnknownTable(s.to_string()))
            .and_then(Self::from_number)
    }
}

impl fmt::Display for TableKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.number())
    }
}

/// Where the sample size of each plan in tables 2–4 comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PlanSource {
    /// Minimum sample sizes recomputed for the requested λ.
    #[default]
    Recomputed,
    /// Sample sizes exactly as printed in the published λ = 0.5 tables.
    Published,
}

impl FromStr for PlanSource {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "recomputed" => Ok(PlanSource::Recomputed),
            "published" => Ok(PlanSource::Published),
            other => Err(format!(
                "unknown plan source `{other}` (expected recomputed or published)"
            )),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Table {
    pub kind: TableKind,
    pub lambda: f64,
    /// `t/σ₀` grid for tables 1 and 3, `σ/σ₀` grid for tables 2 and 4.
    pub columns: Vec<f64>,
    pub groups: Vec<TableGroup>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TableGroup {
    pub p_star: f64,
    pub rows: Vec<TableRow>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TableRow {
    pub c: u32,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub n: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub t_ratio: Option<f64>,
    pub values: Vec<f64>,
}

/// Build a full table for transmutation parameter `lambda`.
pub fn emit_table(kind: TableKind, lambda: f64, plans: PlanSource) -> Result<Table> {
    let groups = P_STAR_GRID
        .par_iter()
        .enumerate()
        .map(|(pi, &p_star)| -> Result<TableGroup> {
            let rows = if kind.rows_by_acceptance_number() {
                (0..=MAX_ACCEPTANCE_NUMBER)
                    .map(|c| {
                        let values = T_RATIO_GRID
                            .iter()
                            .enumerate()
                            .map(|(ti, &t)| {
                                by_acceptance_cell(kind, lambda, plans, (pi, p_star), c, (ti, t))
                            })
                            .collect::<Result<Vec<_>>>()?;
                        Ok(TableRow {
                            c,
                            n: None,
                            t_ratio: None,
                            values,
                        })
                    })
                    .collect::<Result<Vec<_>>>()?
            } else {
                T_RATIO_GRID
                    .iter()
                    .enumerate()
                    .map(|(ti, &t)| {
                        let n = match plans {
                            PlanSource::Recomputed => {
                                design(p_star, OC_ACCEPTANCE_NUMBER, t, lambda)?
                            }
                            PlanSource::Published => published::OC_PLAN_SIZES[pi][ti],
                        };
                        let plan = SamplingPlan::new(n, OC_ACCEPTANCE_NUMBER, t)?;
                        let values = SCALE_RATIO_GRID
                            .iter()
                            .map(|&r| match kind {
                                TableKind::AcceptanceProbability => oc_value(&plan, r, lambda),
                                _ => producer_risk(&plan, r, lambda),
                            })
                            .collect::<Result<Vec<_>>>()?;
                        Ok(TableRow {
                            c: OC_ACCEPTANCE_NUMBER,
                            n: Some(n),
                            t_ratio: Some(t),
                            values,
                        })
                    })
                    .collect::<Result<Vec<_>>>()?
            };
            Ok(TableGroup { p_star, rows })
        })
        .collect::<Result<Vec<_>>>()?;

    Ok(Table {
        kind,
        lambda,
        columns: kind.columns(),
        groups,
    })
}

fn by_acceptance_cell(
    kind: TableKind,
    lambda: f64,
    plans: PlanSource,
    (pi, p_star): (usize, f64),
    c: u32,
    (ti, t): (usize, f64),
) -> Result<f64> {
    match kind {
        TableKind::SampleSize => Ok(f64::from(design(p_star, c, t, lambda)?)),
        _ => {
            let n = match plans {
                PlanSource::Recomputed => design(p_star, c, t, lambda)?,
                PlanSource::Published => published::SAMPLE_SIZES[pi][c as usize][ti],
            };
            min_scale_ratio(&SamplingPlan::new(n, c, t)?, lambda, TABLE_DELTA)
        }
    }
}

fn design(p_star: f64, c: u32, t_ratio: f64, lambda: f64) -> Result<u32> {
    Ok(min_sample_size(&DesignQuery::new(p_star, c, t_ratio, lambda)?)?.n)
}

/// The published λ = 0.5 table, verbatim.
pub fn published_table(kind: TableKind) -> Table {
    let groups = P_STAR_GRID
        .iter()
        .enumerate()
        .map(|(pi, &p_star)| {
            let rows = if kind.rows_by_acceptance_number() {
                (0..=MAX_ACCEPTANCE_NUMBER)
                    .map(|c| {
                        let values = match kind {
                            TableKind::SampleSize => published::SAMPLE_SIZES[pi][c as usize]
                                .iter()
                                .map(|&n| f64::from(n))
                                .collect(),
                            _ => published::MIN_SCALE_RATIOS[pi][c as usize].to_vec(),
                        };
                        TableRow {
                            c,
                            n: None,
                            t_ratio: None,
                            values,
                        }
                    })
                    .collect()
            } else {
                T_RATIO_GRID
                    .iter()
                    .enumerate()
                    .map(|(ti, &t)| {
                        let values = match kind {
                            TableKind::AcceptanceProbability => {
                                published::ACCEPTANCE_PROBABILITIES[pi][ti]
                            }
                            _ => published::PRODUCER_RISKS[pi][ti],
                        };
                        TableRow {
                            c: OC_ACCEPTANCE_NUMBER,
                            n: Some(published::OC_PLAN_SIZES[pi][ti]),
                            t_ratio: Some(t),
                            values: values.to_vec(),
                        }
                    })
                    .collect()
            };
            TableGroup { p_star, rows }
        })
        .collect();
    Table {
        kind,
        lambda: PUBLISHED_LAMBDA,
        columns: kind.columns(),
        groups,
    }
}

impl Table {
    /// Rows in print order, each paired with its `P*`.
    pub fn rows(&self) -> impl Iterator<Item = (f64, &TableRow)> {
        self.groups
            .iter()
            .flat_map(|g| g.rows.iter().map(move |r| (g.p_star, r)))
    }

    pub fn group(&self, p_star: f64) -> Option<&TableGroup> {
        self.groups.iter().find(|g| same(g.p_star, p_star))
    }

    /// Cell of a table 1/3 by `(P*, c, t/σ₀)`.
    pub fn by_acceptance(&self, p_star: f64, c: u32, t_ratio: f64) -> Option<f64> {
        let col = self.columns.iter().position(|&x| same(x, t_ratio))?;
        let row = self.group(p_star)?.rows.iter().find(|r| r.c == c)?;
        row.values.get(col).copied()
    }

    /// Cell of a table 2/4 by `(P*, t/σ₀, σ/σ₀)`, with the plan's `n`.
    pub fn by_plan(&self, p_star: f64, t_ratio: f64, scale_ratio: f64) -> Option<(u32, f64)> {
        let col = self.columns.iter().position(|&x| same(x, scale_ratio))?;
        let row = self
            .group(p_star)?
            .rows
            .iter()
            .find(|r| r.t_ratio.is_some_and(|t| same(t, t_ratio)))?;
        Some((row.n?, *row.values.get(col)?))
    }

    fn header(&self) -> Vec<String> {
        let mut header = vec!["p_star".to_string()];
        if self.kind.rows_by_acceptance_number() {
            header.push("c".into());
        } else {
            header.push("n".into());
            header.push("t_ratio".into());
        }
        header.extend(self.columns.iter().map(|c| format_grid(*c)));
        header
    }

    pub fn write_csv<W: Write>(&self, out: W, precision: usize) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(self.header()).map_err(io_error)?;
        for (p_star, row) in self.rows() {
            let mut record = vec![format_grid(p_star)];
            match (row.n, row.t_ratio) {
                (Some(n), Some(t)) => {
                    record.push(n.to_string());
                    record.push(format_grid(t));
                }
                _ => record.push(row.c.to_string()),
            }
            record.extend(row.values.iter().map(|&v| self.format_value(v, precision)));
            w.write_record(&record).map_err(io_error)?;
        }
        w.flush().map_err(|e| io_error(e.into()))?;
        Ok(())
    }

    /// Cell text as written by [`Table::write_csv`].
    pub fn format_value(&self, v: f64, precision: usize) -> String {
        match self.kind {
            TableKind::SampleSize => format!("{v:.0}"),
            TableKind::MinScaleRatio => format!("{v:.2}"),
            _ if v != 0.0 && v.abs() < 1e-3 => format!("{:.*e}", precision.saturating_sub(1), v),
            _ => format!("{v:.precision$}"),
        }
    }

    /// Read a table of the given kind back from CSV in the layout produced by
    /// [`Table::write_csv`].
    pub fn read_csv<R: Read>(kind: TableKind, lambda: f64, input: R) -> Result<Table> {
        let mut reader = csv::ReaderBuilder::new()
            .has_headers(true)
            .trim(csv::Trim::All)
            .comment(Some(b'#'))
            .from_reader(input);
        let key_cols = if kind.rows_by_acceptance_number() {
            2
        } else {
            3
        };
        let header = reader.headers().map_err(io_error)?.clone();
        let columns = header
            .iter()
            .skip(key_cols)
            .enumerate()
            .map(|(i, h)| {
                h.parse::<f64>().map_err(|_| Error::Parse {
                    line: 1,
                    message: format!("column {} header `{h}` is not a number", i + key_cols + 1),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        if columns != kind.columns() {
            return Err(Error::Parse {
                line: 1,
                message: format!("header grid {columns:?} does not match table {kind}"),
            });
        }

        let mut groups: Vec<TableGroup> = Vec::new();
        for (i, record) in reader.records().enumerate() {
            let record = record.map_err(io_error)?;
            let line = record.position().map_or(i + 2, |p| p.line() as usize);
            let field = |j: usize| -> Result<f64> {
                let s = record.get(j).unwrap_or("");
                s.parse::<f64>().map_err(|_| Error::Parse {
                    line,
                    message: format!("field {} `{s}` is not a number", j + 1),
                })
            };
            if record.len() != key_cols + columns.len() {
                return Err(Error::Parse {
                    line,
                    message: format!(
                        "expected {} fields, found {}",
                        key_cols + columns.len(),
                        record.len()
                    ),
                });
            }
            let p_star = field(0)?;
            let values = (key_cols..record.len())
                .map(field)
                .collect::<Result<Vec<_>>>()?;
            let row = if kind.rows_by_acceptance_number() {
                TableRow {
                    c: field(1)? as u32,
                    n: None,
                    t_ratio: None,
                    values,
                }
            } else {
                TableRow {
                    c: OC_ACCEPTANCE_NUMBER,
                    n: Some(field(1)? as u32),
                    t_ratio: Some(field(2)?),
                    values,
                }
            };
            match groups.last_mut() {
                Some(g) if same(g.p_star, p_star) => g.rows.push(row),
                _ => groups.push(TableGroup {
                    p_star,
                    rows: vec![row],
                }),
            }
        }
        Ok(Table {
            kind,
            lambda,
            columns,
            groups,
        })
    }
}

/// Outcome of checking a computed table against a reference copy.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Comparison {
    pub kind: TableKind,
    pub tolerance: f64,
    pub cells: usize,
    pub mismatches: Vec<CellMismatch>,
    /// Reference cells with no counterpart in the computed table.
    pub missing: usize,
}

impl Comparison {
    pub fn matched(&self) -> usize {
        self.cells - self.mismatches.len()
    }

    pub fn match_fraction(&self) -> f64 {
        if self.cells == 0 {
            return 1.0;
        }
        self.matched() as f64 / self.cells as f64
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CellMismatch {
    pub p_star: f64,
    pub c: u32,
    pub t_ratio: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub scale_ratio: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n_reference: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n_computed: Option<u32>,
    pub reference: f64,
    pub computed: f64,
    /// Sample-size table only: how the reference `n` fares against the
    /// consumer-risk constraint.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub constraint: Option<ConstraintCheck>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ConstraintCheck {
    pub consumer_risk: f64,
    pub p_fail: f64,
    /// Acceptance probability of the reference plan at `σ = σ₀`.
    pub accept_at_reference: f64,
    /// Same with one unit fewer; `None` when that would leave `n ≤ c`.
    pub accept_one_fewer: Option<f64>,
    pub verdict: Verdict,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    /// The reference `n` accepts bad lots too often.
    ViolatesConstraint,
    /// The reference `n` meets the constraint but a smaller one does too.
    NotMinimal,
    /// The reference `n` is the minimum; the computed value is off.
    Minimal,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::ViolatesConstraint => "violates consumer-risk constraint",
            Verdict::NotMinimal => "satisfies constraint but is not minimal",
            Verdict::Minimal => "minimal",
        })
    }
}

/// Check whether sample size `n` is the minimum for `(P*, c, t/σ₀, λ)`.
pub fn check_sample_size(
    p_star: f64,
    c: u32,
    t_ratio: f64,
    lambda: f64,
    n: u32,
) -> Result<ConstraintCheck> {
    let q = DesignQuery::new(p_star, c, t_ratio, lambda)?;
    let beta = q.consumer_risk();
    let p_fail = failure_prob(t_ratio, 1.0, lambda)?;
    let accept_at_reference = binom_cdf_unchecked(c.min(n), n, p_fail);
    let accept_one_fewer = (n > c + 1).then(|| binom_cdf_unchecked(c, n - 1, p_fail));
    let verdict = if accept_at_reference > beta {
        Verdict::ViolatesConstraint
    } else if accept_one_fewer.is_some_and(|a| a <= beta) {
        Verdict::NotMinimal
    } else {
        Verdict::Minimal
    };
    Ok(ConstraintCheck {
        consumer_risk: beta,
        p_fail,
        accept_at_reference,
        accept_one_fewer,
        verdict,
    })
}

/// Cell-by-cell comparison. Mismatches are collected, never fatal.
pub fn compare(computed: &Table, reference: &Table, tolerance: f64) -> Result<Comparison> {
    if computed.kind != reference.kind {
        return Err(Error::UnknownTable(format!(
            "cannot compare table {} with table {}",
            computed.kind, reference.kind
        )));
    }
    let kind = computed.kind;
    let mut cells = 0;
    let mut missing = 0;
    let mut mismatches = Vec::new();
    for (p_star, ref_row) in reference.rows() {
        let Some(group) = computed.group(p_star) else {
            missing += ref_row.values.len();
            continue;
        };
        let row = if kind.rows_by_acceptance_number() {
            group.rows.iter().find(|r| r.c == ref_row.c)
        } else {
            group
                .rows
                .iter()
                .find(|r| matches!((r.t_ratio, ref_row.t_ratio), (Some(a), Some(b)) if same(a, b)))
        };
        let Some(row) = row else {
            missing += ref_row.values.len();
            continue;
        };
        for (col, (&want, &got)) in reference
            .columns
            .iter()
            .zip(ref_row.values.iter().zip(&row.values))
        {
            cells += 1;
            if (want - got).abs() <= tolerance {
                continue;
            }
            let (t_ratio, scale_ratio) = match ref_row.t_ratio {
                Some(t) => (t, Some(*col)),
                None => (*col, None),
            };
            let constraint = match kind {
                TableKind::SampleSize => Some(check_sample_size(
                    p_star,
                    ref_row.c,
                    t_ratio,
                    computed.lambda,
                    want as u32,
                )?),
                _ => None,
            };
            mismatches.push(CellMismatch {
                p_star,
                c: ref_row.c,
                t_ratio,
                scale_ratio,
                n_reference: ref_row.n,
                n_computed: row.n,
                reference: want,
                computed: got,
                constraint,
            });
        }
        missing += ref_row.values.len().saturating_sub(row.values.len());
    }
    Ok(Comparison {
        kind,
        tolerance,
        cells,
        mismatches,
        missing,
    })
}

fn same(a: f64, b: f64) -> bool {
    (a - b).abs() < 1e-9
}

fn format_grid(x: f64) -> String {
    // Grid points are short decimals; the shortest round-trip form is exact.
    format!("{x}")
}

fn io_error(e: csv::Error) -> Error {
    Error::Parse {
        line: e.position().map_or(0, |p| p.line() as usize),
        message: e.to_string(),
    }
}
