use std::fmt::Write as _;
use std::fs;
use std::io::Write as _;
use std::path::Path;

use serde::Serialize;
use trplan::fitting::datasets::{BALL_BEARINGS, SOFTWARE_FAILURES};
use trplan::fitting::{describe, fit_mle, DescriptiveStats};
use trplan::montecarlo::{simulate_plan, SimulationReport};
use trplan::plan::tables::{
    compare, emit_table, published_table, Comparison, PlanSource, Table, TableKind,
    OC_ACCEPTANCE_NUMBER, P_STAR_GRID, SCALE_RATIO_GRID, T_RATIO_GRID,
};
use trplan::plan::{
    binom_cdf, failure_prob, min_sample_size, min_scale_ratio, oc_value, producer_risk,
    DesignQuery, SamplingPlan,
};
use trplan::trdist::sigma_from_mu;
use trplan::{FitResult, LifetimeSample, TRParams};

use crate::{
    DesignArgs, Failure, FitArgs, Format, MinRatioArgs, OcArgs, OutputArgs, PlanArgs, SimulateArgs,
    TablesArgs,
};

type CmdResult = Result<(), Failure>;

impl OutputArgs {
    fn format_or(&self, default: Format) -> Format {
        self.format.unwrap_or(default)
    }

    fn precision(&self) -> usize {
        usize::from(self.precision)
    }

    fn num(&self, v: f64) -> String {
        format!("{v:.*}", self.precision())
    }

    fn write(&self, body: &str) -> CmdResult {
        match &self.out {
            Some(path) => fs::write(path, body).map_err(|e| {
                Failure::Runtime(
                    anyhow::Error::new(e).context(format!("writing {}", path.display())),
                )
            }),
            None => {
                let mut stdout = std::io::stdout().lock();
                stdout.write_all(body.as_bytes())?;
                stdout.flush()?;
                Ok(())
            }
        }
    }

    fn write_json<T: Serialize>(&self, value: &T) -> CmdResult {
        let mut body =
            serde_json::to_string_pretty(value).map_err(|e| Failure::Runtime(e.into()))?;
        body.push('\n');
        self.write(&body)
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn csv_text(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut out = header.join(",");
    out.push('\n');
    for row in rows {
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

fn opt(v: Option<f64>, out: &OutputArgs) -> String {
    v.map(|x| out.num(x)).unwrap_or_default()
}

#[derive(Serialize)]
struct DesignReport {
    p_star: f64,
    c: u32,
    n: u32,
    t_ratio: f64,
    lambda: f64,
    mu0: Option<f64>,
    sigma0: Option<f64>,
    test_time: Option<f64>,
    /// Probability of accepting a lot whose scale is exactly σ₀.
    accept_at_sigma0: f64,
}

pub fn design(a: &DesignArgs) -> CmdResult {
    if a.curve {
        return design_curve(a);
    }
    let p_star = a.pstar.ok_or_else(|| usage("--pstar is required"))?;
    let sigma0 = a.mu0.map(|mu| sigma_from_mu(mu, a.lambda)).transpose()?;
    let t_ratio = match (a.tratio, a.t, sigma0) {
        (Some(r), None, _) => r,
        (None, Some(t), Some(s0)) => t / s0,
        (None, None, _) => return Err(usage("give --tratio, or --mu0 together with --t")),
        _ => return Err(usage("--tratio and --t are mutually exclusive")),
    };
    let plan = min_sample_size(&DesignQuery::new(p_star, a.c, t_ratio, a.lambda)?)?;
    let p_fail = failure_prob(t_ratio, 1.0, a.lambda)?;
    let report = DesignReport {
        p_star,
        c: plan.c,
        n: plan.n,
        t_ratio,
        lambda: a.lambda,
        mu0: a.mu0,
        sigma0,
        test_time: sigma0.map(|s| plan.test_time(s)),
        accept_at_sigma0: binom_cdf(plan.c, plan.n, p_fail)?,
    };
    let out = &a.output;
    match out.format_or(Format::Text) {
        Format::Json => out.write_json(&report),
        Format::Csv => out.write(&csv_text(
            &[
                "p_star",
                "c",
                "n",
                "t_ratio",
                "lambda",
                "mu0",
                "sigma0",
                "test_time",
                "accept_at_sigma0",
            ],
            &[vec![
                p_star.to_string(),
                report.c.to_string(),
                report.n.to_string(),
                t_ratio.to_string(),
                a.lambda.to_string(),
                a.mu0.map(|m| m.to_string()).unwrap_or_default(),
                opt(sigma0, out),
                opt(report.test_time, out),
                out.num(report.accept_at_sigma0),
            ]],
        )),
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(s, "n: {}", report.n);
            let _ = writeln!(s, "c: {}", report.c);
            let _ = writeln!(s, "t_ratio: {t_ratio}");
            let _ = writeln!(s, "lambda: {}", a.lambda);
            if let (Some(mu), Some(s0)) = (a.mu0, sigma0) {
                let _ = writeln!(s, "mu0: {mu}");
                let _ = writeln!(s, "sigma0: {s0:.3}");
            }
            let time = match report.test_time {
                Some(t) => {
                    let _ = writeln!(s, "test_time: {t:.3}");
                    format!("{t:.2} time units")
                }
                None => format!("{t_ratio} x sigma0"),
            };
            let _ = writeln!(s, "accept_at_sigma0: {}", out.num(report.accept_at_sigma0));
            let _ = writeln!(
                s,
                "Test {} items for {time}; accept the lot if at most {} fail by then, otherwise reject it.",
                report.n, report.c
            );
            out.write(&s)
        }
    }
}

#[derive(Serialize)]
struct SizePoint {
    p_star: f64,
    c: u32,
    t_ratio: f64,
    n: u32,
}

fn design_curve(a: &DesignArgs) -> CmdResult {
    let mut points = Vec::new();
    for &p_star in &P_STAR_GRID {
        for &t_ratio in &T_RATIO_GRID {
            let plan = min_sample_size(&DesignQuery::new(p_star, a.c, t_ratio, a.lambda)?)?;
            points.push(SizePoint {
                p_star,
                c: a.c,
                t_ratio,
                n: plan.n,
            });
        }
    }
    let out = &a.output;
    match out.format_or(Format::Csv) {
        Format::Json => out.write_json(&points),
        _ => {
            let rows: Vec<Vec<String>> = points
                .iter()
                .map(|p| {
                    vec![
                        p.p_star.to_string(),
                        p.c.to_string(),
                        p.t_ratio.to_string(),
                        p.n.to_string(),
                    ]
                })
                .collect();
            out.write(&csv_text(&["p_star", "c", "t_ratio", "n"], &rows))
        }
    }
}

pub fn tables(a: &TablesArgs) -> CmdResult {
    let kind = TableKind::from_number(a.which)?;
    let out = &a.output;
    if let Some(path) = &a.compare {
        let table = emit_table(kind, a.lambda, a.plans)?;
        let reference = read_table(kind, a.lambda, path)?;
        let cmp = compare(
            &table,
            &reference,
            a.tolerance.unwrap_or(kind.default_tolerance()),
        )?;
        return match out.format_or(Format::Csv) {
            Format::Json => out.write_json(&cmp),
            _ => out.write(&comparison_csv(&cmp, out)),
        };
    }
    let table = if a.printed {
        published_table(kind)
    } else {
        emit_table(kind, a.lambda, a.plans)?
    };
    match out.format_or(Format::Csv) {
        Format::Json => out.write_json(&rounded(&table, out.precision())),
        _ => {
            let mut buf = Vec::new();
            table.write_csv(&mut buf, out.precision())?;
            out.write(&String::from_utf8_lossy(&buf))
        }
    }
}

fn read_table(kind: TableKind, lambda: f64, path: &Path) -> Result<Table, Failure> {
    let file = fs::File::open(path).map_err(|e| {
        Failure::Runtime(anyhow::Error::new(e).context(format!("opening {}", path.display())))
    })?;
    Table::read_csv(kind, lambda, file).map_err(|e| usage(format!("{}: {e}", path.display())))
}

/// Values as they would appear in CSV at this precision.
fn rounded(table: &Table, precision: usize) -> Table {
    let mut t = table.clone();
    for group in &mut t.groups {
        for row in &mut group.rows {
            for v in &mut row.values {
                *v = table.format_value(*v, precision).parse().unwrap_or(*v);
            }
        }
    }
    t
}

fn comparison_csv(cmp: &Comparison, out: &OutputArgs) -> String {
    let mut s = format!(
        "# table {}: {} cells compared, {} mismatches, {} missing, tolerance {:.6}\n",
        cmp.kind,
        cmp.cells,
        cmp.mismatches.len(),
        cmp.missing,
        cmp.tolerance
    );
    let rows: Vec<Vec<String>> = cmp
        .mismatches
        .iter()
        .map(|m| {
            let k = m.constraint.as_ref();
            vec![
                m.p_star.to_string(),
                m.c.to_string(),
                m.n_reference.map(|n| n.to_string()).unwrap_or_default(),
                m.t_ratio.to_string(),
                m.scale_ratio.map(|r| r.to_string()).unwrap_or_default(),
                m.reference.to_string(),
                m.computed.to_string(),
                opt(k.map(|k| k.p_fail), out),
                opt(k.map(|k| k.accept_at_reference), out),
                opt(k.and_then(|k| k.accept_one_fewer), out),
                k.map(|k| k.verdict.to_string()).unwrap_or_default(),
            ]
        })
        .collect();
    s.push_str(&csv_text(
        &[
            "p_star",
            "c",
            "n",
            "t_ratio",
            "scale_ratio",
            "reference",
            "computed",
            "p_fail",
            "accept_at_reference",
            "accept_one_fewer",
            "verdict",
        ],
        &rows,
    ));
    s
}

#[derive(Serialize)]
struct PlanValue {
    n: u32,
    c: u32,
    t_ratio: f64,
    scale_ratio: f64,
    lambda: f64,
    p_fail: f64,
    value: f64,
}

fn write_plan_value(out: &OutputArgs, name: &str, v: &PlanValue) -> CmdResult {
    match out.format_or(Format::Text) {
        Format::Text => out.write(&format!("{}\n", out.num(v.value))),
        Format::Json => {
            let mut json = serde_json::to_value(v).map_err(|e| Failure::Runtime(e.into()))?;
            if let Some(obj) = json.as_object_mut() {
                let value = obj.remove("value").unwrap_or_default();
                obj.insert(name.to_string(), value);
            }
            out.write_json(&json)
        }
        Format::Csv => out.write(&csv_text(
            &["n", "c", "t_ratio", "scale_ratio", "lambda", "p_fail", name],
            &[vec![
                v.n.to_string(),
                v.c.to_string(),
                v.t_ratio.to_string(),
                v.scale_ratio.to_string(),
                v.lambda.to_string(),
                out.num(v.p_fail),
                out.num(v.value),
            ]],
        )),
    }
}

pub fn oc(a: &OcArgs) -> CmdResult {
    if a.curve {
        return oc_curve(a);
    }
    let (Some(n), Some(t_ratio), Some(ratio)) = (a.n, a.tratio, a.ratio) else {
        return Err(usage(
            "--n, --tratio and --ratio are required without --curve",
        ));
    };
    let plan = SamplingPlan::new(n, a.c, t_ratio)?;
    let value = PlanValue {
        n,
        c: a.c,
        t_ratio,
        scale_ratio: ratio,
        lambda: a.lambda,
        p_fail: failure_prob(t_ratio, ratio, a.lambda)?,
        value: oc_value(&plan, ratio, a.lambda)?,
    };
    write_plan_value(&a.output, "prob_accept", &value)
}

#[derive(Serialize)]
struct CurvePoint {
    p_star: f64,
    n: u32,
    c: u32,
    t_ratio: f64,
    scale_ratio: f64,
    prob_accept: f64,
}

fn oc_curve(a: &OcArgs) -> CmdResult {
    let printed = published_table(TableKind::AcceptanceProbability);
    if a.plans == PlanSource::Published && a.c != OC_ACCEPTANCE_NUMBER {
        return Err(usage(format!(
            "published plans exist only for c = {OC_ACCEPTANCE_NUMBER}"
        )));
    }
    let mut points = Vec::new();
    for &p_star in &P_STAR_GRID {
        for &t_ratio in &T_RATIO_GRID {
            let n = match a.plans {
                PlanSource::Recomputed => {
                    min_sample_size(&DesignQuery::new(p_star, a.c, t_ratio, a.lambda)?)?.n
                }
                PlanSource::Published => printed
                    .by_plan(p_star, t_ratio, SCALE_RATIO_GRID[0])
                    .map(|(n, _)| n)
                    .ok_or_else(|| {
                        Failure::Runtime(anyhow::anyhow!("no published plan for P* = {p_star}"))
                    })?,
            };
            let plan = SamplingPlan::new(n, a.c, t_ratio)?;
            for &scale_ratio in &SCALE_RATIO_GRID {
                points.push(CurvePoint {
                    p_star,
                    n,
                    c: a.c,
                    t_ratio,
                    scale_ratio,
                    prob_accept: oc_value(&plan, scale_ratio, a.lambda)?,
                });
            }
        }
    }
    let out = &a.output;
    match out.format_or(Format::Csv) {
        Format::Json => out.write_json(&points),
        _ => {
            let rows: Vec<Vec<String>> = points
                .iter()
                .map(|p| {
                    vec![
                        p.p_star.to_string(),
                        p.n.to_string(),
                        p.c.to_string(),
                        p.t_ratio.to_string(),
                        p.scale_ratio.to_string(),
                        out.num(p.prob_accept),
                    ]
                })
                .collect();
            out.write(&csv_text(
                &["p_star", "n", "c", "t_ratio", "scale_ratio", "prob_accept"],
                &rows,
            ))
        }
    }
}

pub fn risk(a: &PlanArgs) -> CmdResult {
    let plan = SamplingPlan::new(a.n, a.c, a.tratio)?;
    let value = PlanValue {
        n: a.n,
        c: a.c,
        t_ratio: a.tratio,
        scale_ratio: a.ratio,
        lambda: a.lambda,
        p_fail: failure_prob(a.tratio, a.ratio, a.lambda)?,
        value: producer_risk(&plan, a.ratio, a.lambda)?,
    };
    write_plan_value(&a.output, "producer_risk", &value)
}

#[derive(Serialize)]
struct MinRatioReport {
    p_star: f64,
    n: u32,
    c: u32,
    t_ratio: f64,
    lambda: f64,
    delta: f64,
    min_scale_ratio: f64,
    producer_risk: f64,
}

pub fn min_ratio(a: &MinRatioArgs) -> CmdResult {
    let query = DesignQuery::new(a.pstar, a.c, a.tratio, a.lambda)?;
    let n = match a.n {
        Some(n) => n,
        None => min_sample_size(&query)?.n,
    };
    let plan = SamplingPlan::new(n, a.c, a.tratio)?;
    let ratio = min_scale_ratio(&plan, a.lambda, a.delta)?;
    let report = MinRatioReport {
        p_star: a.pstar,
        n,
        c: a.c,
        t_ratio: a.tratio,
        lambda: a.lambda,
        delta: a.delta,
        min_scale_ratio: ratio,
        producer_risk: producer_risk(&plan, ratio, a.lambda)?,
    };
    let out = &a.output;
    match out.format_or(Format::Text) {
        Format::Text => out.write(&format!("{ratio:.2}\n")),
        Format::Json => out.write_json(&report),
        Format::Csv => out.write(&csv_text(
            &[
                "p_star",
                "n",
                "c",
                "t_ratio",
                "lambda",
                "delta",
                "min_scale_ratio",
                "producer_risk",
            ],
            &[vec![
                a.pstar.to_string(),
                n.to_string(),
                a.c.to_string(),
                a.tratio.to_string(),
                a.lambda.to_string(),
                a.delta.to_string(),
                format!("{ratio:.2}"),
                out.num(report.producer_risk),
            ]],
        )),
    }
}

#[derive(Serialize)]
struct FitReport {
    source: String,
    descriptive: DescriptiveStats,
    fit: FitResult,
}

pub fn fit(a: &FitArgs) -> CmdResult {
    let (source, data) = match (a.builtin, &a.datafile) {
        (Some(1), _) => (
            "data set I".to_string(),
            LifetimeSample::new(SOFTWARE_FAILURES.to_vec())?,
        ),
        (Some(_), _) => (
            "data set II".to_string(),
            LifetimeSample::new(BALL_BEARINGS.to_vec())?,
        ),
        (None, Some(path)) => {
            let text = fs::read_to_string(path).map_err(|e| {
                Failure::Runtime(
                    anyhow::Error::new(e).context(format!("reading {}", path.display())),
                )
            })?;
            let data = LifetimeSample::parse(&text)
                .map_err(|e| usage(format!("{}: {e}", path.display())))?;
            (path.display().to_string(), data)
        }
        (None, None) => return Err(usage("give a data file or --builtin")),
    };
    let report = FitReport {
        source,
        descriptive: describe(&data),
        fit: fit_mle(&data)?,
    };
    let out = &a.output;
    let d = &report.descriptive;
    let f = &report.fit;
    let stats: [(&str, String); 17] = [
        ("n", f.n.to_string()),
        ("minimum", d.minimum.to_string()),
        ("q1", format!("{:.4}", d.q1)),
        ("median", format!("{:.4}", d.median)),
        ("mean", format!("{:.4}", d.mean)),
        ("q3", format!("{:.4}", d.q3)),
        ("maximum", d.maximum.to_string()),
        ("cs", out.num(d.cs)),
        ("ck", out.num(d.ck)),
        ("sigma", out.num(f.params.sigma())),
        ("lambda", out.num(f.params.lambda())),
        ("loglik", out.num(f.loglik)),
        ("aic", out.num(f.aic)),
        ("bic", out.num(f.bic)),
        ("ks_stat", out.num(f.ks_stat)),
        ("ks_pvalue", out.num(f.ks_pvalue)),
        ("ks_method", format!("{:?}", f.ks_method).to_lowercase()),
    ];
    match out.format_or(Format::Text) {
        Format::Json => out.write_json(&report),
        Format::Csv => {
            let mut rows: Vec<Vec<String>> = stats
                .iter()
                .map(|(k, v)| vec![k.to_string(), v.clone()])
                .collect();
            rows.push(vec!["converged".into(), f.converged.to_string()]);
            out.write(&csv_text(&["statistic", "value"], &rows))
        }
        Format::Text => {
            let mut s = format!("source: {}\n", report.source);
            for (k, v) in &stats {
                let _ = writeln!(s, "{k}: {v}");
            }
            let _ = writeln!(s, "converged: {}", f.converged);
            out.write(&s)
        }
    }
}

#[derive(Serialize)]
struct SimulateOutput {
    n: u32,
    c: u32,
    t_ratio: f64,
    scale_ratio: f64,
    lambda: f64,
    seed: u64,
    #[serde(flatten)]
    report: SimulationReport,
}

pub fn simulate(a: &SimulateArgs) -> CmdResult {
    let plan = SamplingPlan::new(a.n, a.c, a.tratio)?;
    let truth = TRParams::new(a.ratio, a.lambda)?;
    let report = simulate_plan(&plan, &truth, 1.0, a.trials, a.seed)?;
    let result = SimulateOutput {
        n: a.n,
        c: a.c,
        t_ratio: a.tratio,
        scale_ratio: a.ratio,
        lambda: a.lambda,
        seed: a.seed,
        report,
    };
    let out = &a.output;
    let fields: [(&str, String); 6] = [
        ("trials", report.trials.to_string()),
        ("acceptances", report.acceptances.to_string()),
        ("estimate", out.num(report.estimate)),
        ("std_error", out.num(report.std_error)),
        ("analytic", out.num(report.analytic)),
        ("z_score", format!("{:.3}", report.z_score)),
    ];
    match out.format_or(Format::Text) {
        Format::Json => out.write_json(&result),
        Format::Csv => {
            let header: Vec<&str> = fields.iter().map(|(k, _)| *k).collect();
            out.write(&csv_text(
                &header,
                &[fields.iter().map(|(_, v)| v.clone()).collect()],
            ))
        }
        Format::Text => {
            let mut s = String::new();
            for (k, v) in &fields {
                let _ = writeln!(s, "{k}: {v}");
            }
            out.write(&s)
        }
    }
}
