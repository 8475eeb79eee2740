//! Panel reports in text, CSV and JSON.
//!
//! Text output rounds scores to three decimals and weights to three
//! significant digits; CSV and JSON carry full precision and read back to
//! identical values.

use std::fmt::Write as _;

use dea_core::analysis::PanelReport;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::panel::Panel;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DmuRecord {
    pub name: String,
    pub theta: Option<f64>,
    #[serde(default)]
    pub u: Vec<f64>,
    #[serde(default)]
    pub v: Vec<f64>,
    pub t_star: Option<f64>,
    #[serde(default)]
    pub u_scaled: Vec<f64>,
    pub class: Option<String>,
    #[serde(default)]
    pub efficient: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct Report {
    pub dmus: Vec<DmuRecord>,
}

#[derive(Serialize)]
struct JsonOut<'a> {
    dmus: &'a [DmuRecord],
    efficient_count: usize,
}

#[derive(Deserialize)]
struct JsonIn {
    dmus: Vec<DmuRecord>,
}

#[derive(Debug, Error)]
pub enum ReportError {
    #[error("invalid report JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("invalid report CSV: {0}")]
    Csv(#[from] csv::Error),
    #[error("report CSV header lacks column {0:?}")]
    MissingColumn(String),
    #[error("report CSV line {line}: cannot parse {value:?}")]
    BadValue { line: u64, value: String },
}

impl Report {
    pub fn from_analysis(panel: &Panel, report: &PanelReport) -> Self {
        let d = &panel.dataset;
        let dmus = report
            .entries
            .iter()
            .enumerate()
            .map(|(i, entry)| match entry {
                Ok(a) => DmuRecord {
                    name: d.name(i).to_string(),
                    theta: Some(a.ccr.theta_star),
                    u: a.ccr.u.clone(),
                    v: a.ccr.v.clone(),
                    t_star: Some(a.sup.t_star),
                    u_scaled: a.sup.u_scaled.clone(),
                    class: Some(a.class.cell.as_str().to_string()),
                    efficient: a.ccr.efficient,
                    error: None,
                },
                Err(e) => DmuRecord {
                    name: d.name(i).to_string(),
                    theta: None,
                    u: Vec::new(),
                    v: Vec::new(),
                    t_star: None,
                    u_scaled: Vec::new(),
                    class: None,
                    efficient: false,
                    error: Some(e.to_string()),
                },
            })
            .collect();
        Report { dmus }
    }

    pub fn efficient_count(&self) -> usize {
        self.dmus.iter().filter(|r| r.efficient).count()
    }

    fn widths(&self) -> (usize, usize) {
        let l = self.dmus.iter().map(|r| r.u.len()).max().unwrap_or(0);
        let m = self.dmus.iter().map(|r| r.v.len()).max().unwrap_or(0);
        (l, m)
    }
}

/// Three significant digits in scientific notation; exact zero prints as `0`.
pub fn sci3(x: f64) -> String {
    if x == 0.0 {
        "0".to_string()
    } else {
        format!("{x:.2e}")
    }
}

fn opt_fixed3(x: Option<f64>) -> String {
    x.map_or_else(|| "-".to_string(), |v| format!("{v:.3}"))
}

pub fn render_report(report: &Report, format: Format) -> Vec<u8> {
    match format {
        Format::Text => render_text(report).into_bytes(),
        Format::Csv => render_csv(report),
        Format::Json => {
            let mut out = serde_json::to_vec_pretty(&JsonOut {
                dmus: &report.dmus,
                efficient_count: report.efficient_count(),
            })
            .expect("report serialises");
            out.push(b'\n');
            out
        }
    }
}

fn render_text(report: &Report) -> String {
    let (l, m) = report.widths();
    let name_w = report
        .dmus
        .iter()
        .map(|r| r.name.chars().count())
        .max()
        .unwrap_or(0)
        .max(4);
    let mut out = String::new();
    let _ = write!(out, "{:>3}  {:<name_w$}  {:>6}", "No.", "Name", "CCR");
    for k in 1..=l {
        let _ = write!(out, "  {:>8}", format!("u{k}"));
    }
    for r in 1..=m {
        let _ = write!(out, "  {:>8}", format!("v{r}"));
    }
    let _ = writeln!(out, "  {:>6}  class", "t*");
    for (i, rec) in report.dmus.iter().enumerate() {
        let _ = write!(
            out,
            "{:>3}  {:<name_w$}  {:>6}",
            i + 1,
            rec.name,
            opt_fixed3(rec.theta)
        );
        if let Some(err) = &rec.error {
            let _ = writeln!(out, "  error: {err}");
            continue;
        }
        for k in 0..l {
            let _ = write!(
                out,
                "  {:>8}",
                rec.u.get(k).map_or("-".into(), |w| sci3(*w))
            );
        }
        for r in 0..m {
            let _ = write!(
                out,
                "  {:>8}",
                rec.v.get(r).map_or("-".into(), |w| sci3(*w))
            );
        }
        let _ = writeln!(
            out,
            "  {:>6}  {}",
            opt_fixed3(rec.t_star),
            rec.class.as_deref().unwrap_or("-")
        );
    }
    if !report.dmus.is_empty() {
        let _ = writeln!(
            out,
            "\nCCR-efficient DMUs: {} of {}",
            report.efficient_count(),
            report.dmus.len()
        );
    }
    out
}

fn csv_header(l: usize, m: usize) -> Vec<String> {
    let mut h = vec!["name".to_string(), "theta".to_string()];
    h.extend((1..=l).map(|k| format!("u{k}")));
    h.extend((1..=m).map(|r| format!("v{r}")));
    h.push("t_star".to_string());
    h.extend((1..=l).map(|k| format!("u_scaled{k}")));
    h.extend(["class", "efficient", "error"].map(String::from));
    h
}

fn render_csv(report: &Report) -> Vec<u8> {
    let (l, m) = report.widths();
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(csv_header(l, m)).expect("write to Vec");
    let num = |x: Option<&f64>| x.map_or_else(String::new, f64::to_string);
    for rec in &report.dmus {
        let mut row = vec![rec.name.clone(), num(rec.theta.as_ref())];
        row.extend((0..l).map(|k| num(rec.u.get(k))));
        row.extend((0..m).map(|r| num(rec.v.get(r))));
        row.push(num(rec.t_star.as_ref()));
        row.extend((0..l).map(|k| num(rec.u_scaled.get(k))));
        row.push(rec.class.clone().unwrap_or_default());
        row.push(rec.efficient.to_string());
        row.push(rec.error.clone().unwrap_or_default());
        w.write_record(&row).expect("write to Vec");
    }
    w.into_inner().expect("flush to Vec")
}

pub fn parse_report_json(bytes: &[u8]) -> Result<Report, ReportError> {
    let parsed: JsonIn = serde_json::from_slice(bytes)?;
    Ok(Report { dmus: parsed.dmus })
}

pub fn parse_report_csv(bytes: &[u8]) -> Result<Report, ReportError> {
    let mut reader = csv::Reader::from_reader(bytes);
    let headers = reader.headers()?.clone();
    let col = |name: &str| -> Result<usize, ReportError> {
        headers
            .iter()
            .position(|h| h == name)
            .ok_or_else(|| ReportError::MissingColumn(name.to_string()))
    };
    let indexed = |prefix: &str| -> Vec<usize> {
        let mut cols: Vec<(usize, usize)> = headers
            .iter()
            .enumerate()
            .filter_map(|(i, h)| {
                h.strip_prefix(prefix)
                    .and_then(|rest| rest.parse::<usize>().ok())
                    .map(|k| (k, i))
            })
            .collect();
        cols.sort();
        cols.into_iter().map(|(_, i)| i).collect()
    };
    let (name, theta, t_star) = (col("name")?, col("theta")?, col("t_star")?);
    let (class, efficient, error) = (col("class")?, col("efficient")?, col("error")?);
    let (u_cols, v_cols, us_cols) = (indexed("u"), indexed("v"), indexed("u_scaled"));

    let mut dmus = Vec::new();
    for record in reader.records() {
        let record = record?;
        let line = record.position().map_or(0, |p| p.line());
        let field = |i: usize| record.get(i).unwrap_or("");
        let num = |i: usize| -> Result<Option<f64>, ReportError> {
            let s = field(i);
            if s.is_empty() {
                return Ok(None);
            }
            s.parse().map(Some).map_err(|_| ReportError::BadValue {
                line,
                value: s.to_string(),
            })
        };
        let vector = |cols: &[usize]| -> Result<Vec<f64>, ReportError> {
            let mut out = Vec::new();
            for &c in cols {
                if let Some(x) = num(c)? {
                    out.push(x);
                }
            }
            Ok(out)
        };
        let non_empty = |s: &str| (!s.is_empty()).then(|| s.to_string());
        dmus.push(DmuRecord {
            name: field(name).to_string(),
            theta: num(theta)?,
            u: vector(&u_cols)?,
            v: vector(&v_cols)?,
            t_star: num(t_star)?,
            u_scaled: vector(&us_cols)?,
            class: non_empty(field(class)),
            efficient: match field(efficient) {
                "true" => true,
                "false" => false,
                other => {
                    return Err(ReportError::BadValue {
                        line,
                        value: other.to_string(),
                    })
                }
            },
            error: non_empty(field(error)),
        });
    }
    Ok(Report { dmus })
}
