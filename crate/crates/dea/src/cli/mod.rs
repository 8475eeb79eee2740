//! Command-line front end.
//!
//! [`run`] parses arguments, executes one subcommand and returns the exit
//! code with the bytes destined for stdout and stderr, so the binary is a
//! thin wrapper and the whole surface is testable in-process.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use dea_core::analysis::{evaluate_ratios, Analysis};
use serde::Serialize;

use crate::io::report::sci3;
use crate::io::{bank_fixture, parse_panel, render_report, Format, Panel, Report};

#[derive(Debug, Parser)]
#[command(
    name = "dea",
    version,
    about = "CCR and super-efficiency data envelopment analysis"
)]
pub struct Cli {
    /// Panel CSV (id,name[,type],in:*,out:*); the embedded bank panel if omitted.
    #[arg(long, global = true)]
    pub input: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Absolute tolerance for efficiency and slack decisions.
    #[arg(long, global = true, default_value_t = dea_core::analysis::EFFICIENCY_TOL)]
    pub tolerance: f64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// CCR score and one optimal weight vector.
    Ccr(DmuArg),
    /// Second-best minimization: t*, weights, rescaled weights, second best.
    Super(DmuArg),
    /// Cell of the CCR / super-efficiency relation table with its optimal values.
    Classify(DmuArg),
    /// Every DMU's ratio under CCR weights and under rescaled super-efficiency weights.
    Compare(CompareArgs),
    /// Full panel report.
    DemoBanks,
}

#[derive(Debug, Args)]
pub struct DmuArg {
    /// 1-based row number or exact DMU name.
    #[arg(long)]
    pub dmu: String,
}

#[derive(Debug, Args)]
pub struct CompareArgs {
    #[arg(long)]
    pub dmu: String,
    /// Input weights for the CCR column (comma-separated) instead of solving.
    #[arg(long, value_delimiter = ',', requires = "v")]
    pub u: Option<Vec<f64>>,
    /// Output weights for the CCR column.
    #[arg(long, value_delimiter = ',', requires = "u")]
    pub v: Option<Vec<f64>>,
    /// Input weights for the super-efficiency column instead of solving.
    #[arg(long, value_delimiter = ',', requires = "super_v")]
    pub super_u: Option<Vec<f64>>,
    /// Output weights for the super-efficiency column.
    #[arg(long, value_delimiter = ',', requires = "super_u")]
    pub super_v: Option<Vec<f64>>,
}

#[derive(Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: Vec<u8>,
    pub stderr: Vec<u8>,
}

impl Outcome {
    fn ok(stdout: Vec<u8>) -> Self {
        Outcome {
            code: 0,
            stdout,
            stderr: Vec::new(),
        }
    }

    fn fail(code: i32, msg: String) -> Self {
        Outcome {
            code,
            stdout: Vec::new(),
            stderr: msg.into_bytes(),
        }
    }
}

pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    Outcome::ok(text.into_bytes())
                }
                _ => Outcome::fail(2, text),
            };
        }
    };
    if !(cli.tolerance.is_finite() && cli.tolerance > 0.0) {
        return Outcome::fail(
            2,
            format!(
                "error: --tolerance must be positive, got {}\n",
                cli.tolerance
            ),
        );
    }
    match execute(&cli) {
        Ok(out) => Outcome::ok(out),
        Err(msg) => Outcome::fail(1, msg),
    }
}

fn load(cli: &Cli) -> Result<Panel, String> {
    match &cli.input {
        None => Ok(bank_fixture()),
        Some(path) => {
            let bytes = std::fs::read(path)
                .map_err(|e| format!("error: cannot read {}: {e}\n", path.display()))?;
            parse_panel(&bytes).map_err(|e| format!("error: {}: {e}\n", path.display()))
        }
    }
}

fn resolve(panel: &Panel, key: &str) -> Result<usize, String> {
    panel.find(key).ok_or_else(|| {
        let mut msg = format!("error: unknown DMU {key:?}; valid names:\n");
        for (i, name) in panel.dataset.names().iter().enumerate() {
            let _ = writeln!(msg, "  {:>3}  {name}", i + 1);
        }
        msg
    })
}

fn execute(cli: &Cli) -> Result<Vec<u8>, String> {
    let panel = load(cli)?;
    let analysis = Analysis::new(&panel.dataset).with_tolerance(cli.tolerance);
    let err = |e: dea_core::analysis::AnalysisError| format!("error: {e}\n");
    match &cli.command {
        Command::DemoBanks => {
            let report = Report::from_analysis(&panel, &analysis.full_report());
            Ok(render_report(&report, cli.format))
        }
        Command::Ccr(a) => {
            let o = resolve(&panel, &a.dmu)?;
            let r = analysis.ccr(o).map_err(err)?;
            let view = CcrView {
                name: panel.dataset.name(o),
                theta: r.theta_star,
                u: &r.u,
                v: &r.v,
                efficient: r.efficient,
            };
            Ok(emit(cli.format, &view, || {
                format!(
                    "DMU {}: {}\nCCR efficiency   {:.3} ({})\ninput weights    {}\noutput weights   {}\n",
                    o + 1,
                    view.name,
                    r.theta_star,
                    if r.efficient { "efficient" } else { "inefficient" },
                    join_sci(&r.u),
                    join_sci(&r.v),
                )
            }))
        }
        Command::Super(a) => {
            let o = resolve(&panel, &a.dmu)?;
            let r = analysis.super_efficiency(o).map_err(err)?;
            let names: Vec<&str> = r
                .second_best
                .iter()
                .map(|&i| panel.dataset.name(i))
                .collect();
            let view = SuperView {
                name: panel.dataset.name(o),
                t_star: r.t_star,
                u_tilde: &r.u_tilde,
                v: &r.v,
                u_scaled: &r.u_scaled,
                second_best: names.clone(),
            };
            Ok(emit(cli.format, &view, || {
                format!(
                    "DMU {}: {}\nsecond-best value t*   {:.3}\ninput weights u~       {}\noutput weights v       {}\nscaled weights u~/t*   {}\nsecond best            {}\n",
                    o + 1,
                    view.name,
                    r.t_star,
                    join_sci(&r.u_tilde),
                    join_sci(&r.v),
                    join_sci(&r.u_scaled),
                    names.join("; "),
                )
            }))
        }
        Command::Classify(a) => {
            let o = resolve(&panel, &a.dmu)?;
            let c = analysis.classify(o).map_err(err)?;
            let q = c.quadruple;
            let view = ClassView {
                name: panel.dataset.name(o),
                class: c.cell.as_str(),
                opt_c: q.opt_c,
                opt_csm: q.opt_csm,
                probe: q.probe,
                probe_unique: q.probe_unique,
                opt_s: q.opt_s,
                opt_ssm: q.opt_ssm,
            };
            Ok(emit(cli.format, &view, || {
                format!(
                    "DMU {}: {}\nclass        {}\nOpt(C)       {:.6}\nOpt(CSM)     {:.6}\nprobe        {:.6} ({})\nOpt(S)       {:.6}\nOpt(SSM)     {:.6}\n",
                    o + 1,
                    view.name,
                    view.class,
                    q.opt_c,
                    q.opt_csm,
                    q.probe,
                    if q.probe_unique { "unique" } else { "not unique" },
                    q.opt_s,
                    q.opt_ssm,
                )
            }))
        }
        Command::Compare(a) => compare(cli, &panel, &analysis, a),
    }
}

fn compare(
    cli: &Cli,
    panel: &Panel,
    analysis: &Analysis<'_>,
    a: &CompareArgs,
) -> Result<Vec<u8>, String> {
    let d = &panel.dataset;
    let o = resolve(panel, &a.dmu)?;
    let err = |e: dea_core::analysis::AnalysisError| format!("error: {e}\n");
    let (ccr_u, ccr_v) = match (&a.u, &a.v) {
        (Some(u), Some(v)) => (u.clone(), v.clone()),
        _ => {
            let r = analysis.ccr(o).map_err(err)?;
            (r.u, r.v)
        }
    };
    let (sup_u, sup_v) = match (&a.super_u, &a.super_v) {
        (Some(u), Some(v)) => (u.clone(), v.clone()),
        _ => {
            let r = analysis.super_efficiency(o).map_err(err)?;
            (r.u_scaled, r.v)
        }
    };
    let ccr = evaluate_ratios(d, &ccr_u, &ccr_v).map_err(err)?;
    let sup = evaluate_ratios(d, &sup_u, &sup_v).map_err(err)?;
    let view = CompareView {
        dmu: d.name(o),
        ccr_weights: WeightsView {
            u: &ccr_u,
            v: &ccr_v,
        },
        super_weights: WeightsView {
            u: &sup_u,
            v: &sup_v,
        },
        rows: (0..d.n())
            .map(|i| CompareRow {
                name: d.name(i),
                ccr: ccr[i],
                sup: sup[i],
            })
            .collect(),
    };
    let out = match cli.format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["name", "ccr", "super"])
                .expect("write to Vec");
            for r in &view.rows {
                w.write_record([r.name.to_string(), r.ccr.to_string(), r.sup.to_string()])
                    .expect("write to Vec");
            }
            w.into_inner().expect("flush to Vec")
        }
        Format::Json => json_bytes(&view),
        Format::Text => {
            let name_w = d
                .names()
                .iter()
                .map(|n| n.chars().count())
                .max()
                .unwrap_or(4)
                .max(4);
            let mut s = format!(
                "Weights for DMU {}: {}\n  CCR               u = ({})  v = ({})\n  super-efficiency  u = ({})  v = ({})\n\n",
                o + 1,
                d.name(o),
                join_sci(&ccr_u),
                join_sci(&ccr_v),
                join_sci(&sup_u),
                join_sci(&sup_v),
            );
            let _ = writeln!(
                s,
                "{:>3}  {:<name_w$}  {:>6}  {:>6}",
                "No.", "Name", "CCR", "Super"
            );
            for (i, r) in view.rows.iter().enumerate() {
                let _ = writeln!(
                    s,
                    "{:>3}  {:<name_w$}  {:>6.3}  {:>6.3}",
                    i + 1,
                    r.name,
                    r.ccr,
                    r.sup
                );
            }
            s.into_bytes()
        }
    };
    Ok(out)
}

fn join_sci(w: &[f64]) -> String {
    w.iter().map(|x| sci3(*x)).collect::<Vec<_>>().join(", ")
}

fn json_bytes<T: Serialize>(value: &T) -> Vec<u8> {
    let mut out = serde_json::to_vec_pretty(value).expect("view serialises");
    out.push(b'\n');
    out
}

/// Renders a single-record view; CSV flattens vectors into numbered columns.
fn emit<T: Serialize>(format: Format, view: &T, text: impl FnOnce() -> String) -> Vec<u8> {
    match format {
        Format::Text => text().into_bytes(),
        Format::Json => json_bytes(view),
        Format::Csv => {
            let value = serde_json::to_value(view).expect("view serialises");
            let mut header = Vec::new();
            let mut row = Vec::new();
            if let serde_json::Value::Object(map) = value {
                for (key, v) in map {
                    match v {
                        serde_json::Value::Array(items) => {
                            for (i, item) in items.iter().enumerate() {
                                header.push(format!("{key}{}", i + 1));
                                row.push(scalar(item));
                            }
                        }
                        other => {
                            header.push(key);
                            row.push(scalar(&other));
                        }
                    }
                }
            }
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(&header).expect("write to Vec");
            w.write_record(&row).expect("write to Vec");
            w.into_inner().expect("flush to Vec")
        }
    }
}

fn scalar(v: &serde_json::Value) -> String {
    match v {
        serde_json::Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

#[derive(Serialize)]
struct CcrView<'a> {
    name: &'a str,
    theta: f64,
    u: &'a [f64],
    v: &'a [f64],
    efficient: bool,
}

#[derive(Serialize)]
struct SuperView<'a> {
    name: &'a str,
    t_star: f64,
    u_tilde: &'a [f64],
    v: &'a [f64],
    u_scaled: &'a [f64],
    second_best: Vec<&'a str>,
}

#[derive(Serialize)]
struct ClassView<'a> {
    name: &'a str,
    class: &'a str,
    opt_c: f64,
    opt_csm: f64,
    probe: f64,
    probe_unique: bool,
    opt_s: f64,
    opt_ssm: f64,
}

#[derive(Serialize)]
struct WeightsView<'a> {
    u: &'a [f64],
    v: &'a [f64],
}

#[derive(Serialize)]
struct CompareRow<'a> {
    name: &'a str,
    ccr: f64,
    #[serde(rename = "super")]
    sup: f64,
}

#[derive(Serialize)]
struct CompareView<'a> {
    dmu: &'a str,
    ccr_weights: WeightsView<'a>,
    super_weights: WeightsView<'a>,
    rows: Vec<CompareRow<'a>>,
}
