//! Panel CSV files.
//!
//! ```text
//! id,name[,type],in:<label>...,out:<label>...
//! ```
//!
//! `id` and `name` are required; the optional `type` column carries a
//! free-form tag per DMU. At least one `in:` and one `out:` column must be
//! present and their order is kept. Numeric cells may use comma thousands
//! separators (quote the cell), which are stripped before parsing.

use dea_core::models::{DataError, Dataset};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum PanelError {
    #[error("panel is not valid UTF-8")]
    Utf8(#[from] std::str::Utf8Error),
    #[error("malformed CSV: {0}")]
    Csv(#[from] csv::Error),
    #[error("panel file is empty")]
    Empty,
    #[error("missing required column {0:?}")]
    MissingColumn(&'static str),
    #[error("panel needs at least one \"in:\" and one \"out:\" column")]
    MissingMeasures,
    #[error("unrecognised column {0:?} (expected id, name, type, in:*, out:*)")]
    UnknownColumn(String),
    #[error("line {line}: {found} fields, header has {expected}")]
    Ragged {
        line: u64,
        expected: usize,
        found: usize,
    },
    #[error("line {line}, column {column:?}: cannot parse {value:?} as a number")]
    BadNumber {
        line: u64,
        column: String,
        value: String,
    },
    #[error("line {line}, column {column:?}: value {value} must be positive and finite")]
    NonPositive {
        line: u64,
        column: String,
        value: f64,
    },
    #[error("panel has no DMU rows")]
    NoRows,
    #[error(transparent)]
    Data(#[from] DataError),
}

/// A parsed panel: the dataset plus the labels that only matter for I/O.
#[derive(Debug, Clone, PartialEq)]
pub struct Panel {
    pub ids: Vec<String>,
    pub input_labels: Vec<String>,
    pub output_labels: Vec<String>,
    pub has_tags: bool,
    pub dataset: Dataset,
}

impl Panel {
    /// Resolves a 1-based row number or an exact name (or, failing both, an
    /// id) to a DMU index.
    pub fn find(&self, key: &str) -> Option<usize> {
        let key = key.trim();
        if let Ok(row) = key.parse::<usize>() {
            if (1..=self.dataset.n()).contains(&row) {
                return Some(row - 1);
            }
        }
        self.dataset
            .names()
            .iter()
            .position(|n| n == key)
            .or_else(|| self.ids.iter().position(|i| i == key))
    }
}

enum Column {
    Id,
    Name,
    Tag,
    Input,
    Output,
}

fn parse_number(raw: &str, line: u64, column: &str) -> Result<f64, PanelError> {
    let cleaned: String = raw.trim().chars().filter(|c| *c != ',').collect();
    let value: f64 = cleaned.parse().map_err(|_| PanelError::BadNumber {
        line,
        column: column.to_string(),
        value: raw.to_string(),
    })?;
    if !(value.is_finite() && value > 0.0) {
        return Err(PanelError::NonPositive {
            line,
            column: column.to_string(),
            value,
        });
    }
    Ok(value)
}

pub fn parse_panel(bytes: &[u8]) -> Result<Panel, PanelError> {
    let text = std::str::from_utf8(bytes)?;
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());

    let headers = reader.headers()?.clone();
    if headers.is_empty() || headers.iter().all(str::is_empty) {
        return Err(PanelError::Empty);
    }
    let mut columns = Vec::with_capacity(headers.len());
    let (mut input_labels, mut output_labels) = (Vec::new(), Vec::new());
    for h in headers.iter() {
        let col = match h {
            "id" => Column::Id,
            "name" => Column::Name,
            "type" => Column::Tag,
            _ if h.starts_with("in:") => {
                input_labels.push(h["in:".len()..].to_string());
                Column::Input
            }
            _ if h.starts_with("out:") => {
                output_labels.push(h["out:".len()..].to_string());
                Column::Output
            }
            other => return Err(PanelError::UnknownColumn(other.to_string())),
        };
        columns.push(col);
    }
    if !columns.iter().any(|c| matches!(c, Column::Id)) {
        return Err(PanelError::MissingColumn("id"));
    }
    if !columns.iter().any(|c| matches!(c, Column::Name)) {
        return Err(PanelError::MissingColumn("name"));
    }
    if input_labels.is_empty() || output_labels.is_empty() {
        return Err(PanelError::MissingMeasures);
    }
    let has_tags = columns.iter().any(|c| matches!(c, Column::Tag));

    let (mut ids, mut names, mut tags) = (Vec::new(), Vec::new(), Vec::new());
    let mut inputs = vec![Vec::new(); input_labels.len()];
    let mut outputs = vec![Vec::new(); output_labels.len()];
    for record in reader.records() {
        let record = record?;
        let line = record.position().map_or(0, |p| p.line());
        if record.len() == 1 && record.get(0) == Some("") {
            continue;
        }
        if record.len() != headers.len() {
            return Err(PanelError::Ragged {
                line,
                expected: headers.len(),
                found: record.len(),
            });
        }
        let (mut k, mut r) = (0, 0);
        for ((col, field), header) in columns.iter().zip(record.iter()).zip(headers.iter()) {
            match col {
                Column::Id => ids.push(field.to_string()),
                Column::Name => names.push(field.to_string()),
                Column::Tag => tags.push(field.to_string()),
                Column::Input => {
                    inputs[k].push(parse_number(field, line, header)?);
                    k += 1;
                }
                Column::Output => {
                    outputs[r].push(parse_number(field, line, header)?);
                    r += 1;
                }
            }
        }
    }
    if names.is_empty() {
        return Err(PanelError::NoRows);
    }
    let mut dataset = Dataset::new(names, inputs, outputs)?;
    if has_tags {
        dataset = dataset.with_tags(tags)?;
    }
    Ok(Panel {
        ids,
        input_labels,
        output_labels,
        has_tags,
        dataset,
    })
}

/// Writes a panel in the format [`parse_panel`] reads, at full precision and
/// without thousands separators.
pub fn render_panel(panel: &Panel) -> Vec<u8> {
    let d = &panel.dataset;
    let mut w = csv::Writer::from_writer(Vec::new());
    let mut header = vec!["id".to_string(), "name".to_string()];
    if panel.has_tags {
        header.push("type".to_string());
    }
    header.extend(panel.input_labels.iter().map(|l| format!("in:{l}")));
    header.extend(panel.output_labels.iter().map(|l| format!("out:{l}")));
    w.write_record(&header).expect("write to Vec");
    for i in 0..d.n() {
        let mut row = vec![panel.ids[i].clone(), d.name(i).to_string()];
        if panel.has_tags {
            row.push(d.tags()[i].clone());
        }
        row.extend(d.input_vector(i).iter().map(f64::to_string));
        row.extend(d.output_vector(i).iter().map(f64::to_string));
        w.write_record(&row).expect("write to Vec");
    }
    w.into_inner().expect("flush to Vec")
}
